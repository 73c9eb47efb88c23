//! The JSON wire formats shared by the CLI and any external tooling.
//!
//! Hypergraph files: `{"n": 4, "names": [...], "edges": [{"members": [0,2],
//! "sign": "top"}, ...], "shift": [1,3]}` — vertex order is index order,
//! signs are all-or-none, and a `shift` field marks a pseudohemisphere
//! instance. Point configurations carry exact rationals as `"p/q"` strings
//! or plain integers.

use crate::error::{Error, Result};
use crate::generators::{Halfplane, PointConfiguration, Rat, Side};
use crate::hypergraph::{HemisphereHypergraph, Hypergraph, Sign, SignedHypergraph};
use crate::set::VertexSet;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::str::FromStr;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeFile {
    pub members: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub edges: Vec<EdgeFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<Vec<usize>>,
}

/// A parsed instance: plain, signed, or signed-with-shift.
#[derive(Clone, Debug)]
pub enum Instance {
    Plain(Hypergraph),
    Signed(SignedHypergraph),
    Hemisphere(HemisphereHypergraph),
}

impl Instance {
    pub fn base(&self) -> &Hypergraph {
        match self {
            Instance::Plain(h) => h,
            Instance::Signed(sh) => sh.base(),
            Instance::Hemisphere(hh) => hh.base(),
        }
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Instance> {
    let file: HypergraphFile = serde_json::from_str(text)
        .map_err(|e| Error::input(format!("invalid hypergraph JSON: {e}")))?;
    instance_from_file(&file)
}

pub fn instance_from_file(file: &HypergraphFile) -> Result<Instance> {
    let edges: Vec<VertexSet> = file
        .edges
        .iter()
        .map(|e| VertexSet::from_ranks(e.members.iter().copied()))
        .collect();
    let mut base = Hypergraph::new(file.n, edges)?;
    if let Some(names) = &file.names {
        base = base.with_names(names.clone())?;
    }
    let signed_count = file.edges.iter().filter(|e| e.sign.is_some()).count();
    let signs: Option<Vec<Sign>> = if signed_count == file.edges.len() {
        Some(file.edges.iter().map(|e| e.sign.unwrap()).collect())
    } else if signed_count == 0 {
        None
    } else {
        return Err(Error::input(
            "edges must be all signed or all unsigned, not a mixture",
        ));
    };
    match (&file.shift, signs) {
        (Some(shift), Some(signs)) => {
            let x = VertexSet::from_ranks(shift.iter().copied());
            Ok(Instance::Hemisphere(HemisphereHypergraph::new(base, x, signs)?))
        }
        (Some(_), None) => Err(Error::input(
            "a shift set requires signed edges (a pseudohemisphere instance)",
        )),
        (None, Some(signs)) => Ok(Instance::Signed(SignedHypergraph::new(base, signs)?)),
        (None, None) => Ok(Instance::Plain(base)),
    }
}

fn edge_files(h: &Hypergraph, signs: Option<&[Sign]>) -> Vec<EdgeFile> {
    h.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| EdgeFile {
            members: e.to_vec(),
            sign: signs.map(|s| s[i]),
        })
        .collect()
}

pub fn plain_to_file(h: &Hypergraph) -> HypergraphFile {
    HypergraphFile {
        n: h.n(),
        names: h.names().map(|ns| ns.to_vec()),
        edges: edge_files(h, None),
        shift: None,
    }
}

pub fn signed_to_file(sh: &SignedHypergraph) -> HypergraphFile {
    HypergraphFile {
        n: sh.n(),
        names: sh.base().names().map(|ns| ns.to_vec()),
        edges: edge_files(sh.base(), Some(sh.signs())),
        shift: None,
    }
}

pub fn hemisphere_to_file(hh: &HemisphereHypergraph) -> HypergraphFile {
    HypergraphFile {
        n: hh.n(),
        names: None,
        edges: edge_files(hh.base(), Some(hh.signs())),
        shift: Some(hh.shift().to_vec()),
    }
}

pub fn instance_to_file(instance: &Instance) -> HypergraphFile {
    match instance {
        Instance::Plain(h) => plain_to_file(h),
        Instance::Signed(sh) => signed_to_file(sh),
        Instance::Hemisphere(hh) => hemisphere_to_file(hh),
    }
}

// ---------------------------------------------------------------------------
// Exact rationals on the wire.
// ---------------------------------------------------------------------------

/// Wrapper (de)serializing a `BigRational` as `"p/q"`, `"p"`, or a plain
/// JSON integer. Floating point is rejected: sidedness must stay exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRat(pub Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let r = &self.0;
        if r.is_integer() {
            serializer.serialize_str(&r.numer().to_string())
        } else {
            serializer.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
        }
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let value = serde_json::Value::deserialize(deserializer)?;
        match value {
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(JsonRat(Rat::from_integer(BigInt::from(i))))
                } else {
                    Err(D::Error::custom(format!(
                        "non-integer number {n}; write rationals as strings like \"1/2\""
                    )))
                }
            }
            serde_json::Value::String(s) => parse_rational(&s).map(JsonRat).map_err(|e| {
                D::Error::custom(format!("bad rational {s:?}: {e}"))
            }),
            other => Err(D::Error::custom(format!(
                "expected integer or \"p/q\" string, got {other}"
            ))),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|e| Error::input(format!("bad numerator: {e}")))?;
    let den = BigInt::from_str(den).map_err(|e| Error::input(format!("bad denominator: {e}")))?;
    if den.is_zero() {
        return Err(Error::input("zero denominator"));
    }
    Ok(Rat::new(num, den))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LineFile {
    pub a: JsonRat,
    pub b: JsonRat,
    pub c: JsonRat,
    pub side: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointConfigFile {
    pub points: Vec<[JsonRat; 2]>,
    pub lines: Vec<LineFile>,
}

pub fn parse_point_config(text: &str) -> Result<PointConfiguration> {
    let file: PointConfigFile = serde_json::from_str(text)
        .map_err(|e| Error::input(format!("invalid point configuration JSON: {e}")))?;
    let points = file
        .points
        .into_iter()
        .map(|[x, y]| (x.0, y.0))
        .collect();
    let lines = file
        .lines
        .into_iter()
        .map(|l| {
            let side = match l.side.as_str() {
                "above" => Side::Above,
                "below" => Side::Below,
                other => return Err(Error::input(format!("bad side {other:?}"))),
            };
            Ok(Halfplane {
                a: l.a.0,
                b: l.b.0,
                c: l.c.0,
                side,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PointConfiguration { points, lines })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergraph_round_trip() {
        let text = r#"{"n":3,"edges":[{"members":[0,2],"sign":"top"},{"members":[1],"sign":"bottom"}]}"#;
        let inst = parse_hypergraph(text).unwrap();
        let Instance::Signed(sh) = &inst else { panic!("signed") };
        assert_eq!(sh.sign(1), Sign::Bottom);
        let back = serde_json::to_string(&instance_to_file(&inst)).unwrap();
        let again = parse_hypergraph(&back).unwrap();
        assert_eq!(
            serde_json::to_string(&instance_to_file(&again)).unwrap(),
            back
        );
    }

    #[test]
    fn mixed_signs_rejected() {
        let text = r#"{"n":2,"edges":[{"members":[0],"sign":"top"},{"members":[1]}]}"#;
        assert!(parse_hypergraph(text).is_err());
    }

    #[test]
    fn invalid_signature_rejected() {
        let text = r#"{"n":3,"edges":[{"members":[0,2],"sign":"top"},{"members":[0,2],"sign":"bottom"}]}"#;
        assert!(matches!(
            parse_hypergraph(text),
            Err(Error::NotPseudohalfplane(_))
        ));
    }

    #[test]
    fn rationals_accept_ints_and_fractions() {
        let r: JsonRat = serde_json::from_str("\"21/10\"").unwrap();
        assert_eq!(r.0, Rat::new(BigInt::from(21), BigInt::from(10)));
        let r: JsonRat = serde_json::from_str("-4").unwrap();
        assert_eq!(r.0, Rat::from_integer(BigInt::from(-4)));
        assert!(serde_json::from_str::<JsonRat>("0.5").is_err());
        assert!(serde_json::from_str::<JsonRat>("\"1/0\"").is_err());
    }
}
