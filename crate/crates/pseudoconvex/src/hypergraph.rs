//! Hypergraphs on an ordered vertex set, with optional top/bottom signatures
//! and hemisphere shift sets.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so they can be shared freely between threads.

use crate::error::{Error, Result};
use crate::recognition::{check_aba_free, AbaOccurrence};
use crate::set::{VertexSet, MAX_VERTICES};
use serde::{Deserialize, Serialize};

/// Per-edge label: a topset is a member of the witness family `F`, a
/// bottomset is the complement of a member of `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Top,
    Bottom,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Top => Sign::Bottom,
            Sign::Bottom => Sign::Top,
        }
    }
}

/// A hypergraph on vertices `0..n` (ranked left to right). Edges are kept in
/// a stable list and referred to by index; duplicates are allowed and never
/// merged (identical sets cannot form an ABA occurrence).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    names: Option<Vec<String>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Hypergraph> {
        if n > MAX_VERTICES {
            return Err(Error::SizeGuard {
                what: "hypergraph",
                unit: "vertices",
                limit: MAX_VERTICES,
                actual: n,
            });
        }
        let full = VertexSet::full(n);
        for (i, e) in edges.iter().enumerate() {
            if !e.is_subset_of(full) {
                return Err(Error::input(format!(
                    "edge {i} contains vertex {} out of range 0..{n}",
                    e.difference(full).min().unwrap()
                )));
            }
        }
        Ok(Hypergraph {
            n,
            edges,
            names: None,
        })
    }

    pub fn empty(n: usize) -> Hypergraph {
        Hypergraph::new(n, Vec::new()).expect("empty hypergraph")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Hypergraph> {
        if names.len() != self.n {
            return Err(Error::input(format!(
                "expected {} names, got {}",
                self.n,
                names.len()
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> VertexSet {
        self.edges[i]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Subhypergraph induced by `keep`: vertices re-ranked preserving order,
    /// edge `i` of the result is edge `i` of the input intersected with
    /// `keep`. The edge count never changes.
    pub fn induced(&self, keep: VertexSet) -> Result<Hypergraph> {
        if !keep.is_subset_of(self.full_set()) {
            return Err(Error::input(format!(
                "induced: vertex {} out of range 0..{}",
                keep.difference(self.full_set()).min().unwrap(),
                self.n
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.intersect(keep).compress(keep))
            .collect();
        let names = self
            .names
            .as_ref()
            .map(|ns| keep.iter().map(|v| ns[v].clone()).collect());
        Ok(Hypergraph {
            n: keep.len(),
            edges,
            names,
        })
    }

    /// Family of the complements: edge `i` becomes `{0..n} \ edge i`.
    /// An involution.
    pub fn complement_family(&self) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: self.edges.iter().map(|e| e.complement(self.n)).collect(),
            names: self.names.clone(),
        }
    }

    /// Dual hypergraph with the incidence relation reversed: the dual has one
    /// vertex per edge of `self` (in edge-index order) and one edge per
    /// vertex of `self`; dual vertex `e` lies in the dual edge of vertex `u`
    /// iff `u ∉ e`.
    pub fn dual(&self) -> Result<Hypergraph> {
        if self.m() > MAX_VERTICES {
            return Err(Error::SizeGuard {
                what: "dual",
                unit: "edges",
                limit: MAX_VERTICES,
                actual: self.m(),
            });
        }
        let mut dual_edges = vec![VertexSet::EMPTY; self.n];
        for (e_idx, e) in self.edges.iter().enumerate() {
            for (u, dual_edge) in dual_edges.iter_mut().enumerate() {
                if !e.contains(u) {
                    dual_edge.insert(e_idx);
                }
            }
        }
        Ok(Hypergraph {
            n: self.m(),
            edges: dual_edges,
            names: None,
        })
    }
}

/// A hypergraph together with a top/bottom label per edge whose derived
/// witness family (topsets as-is, bottomsets complemented) is ABA-free.
/// The constructor checks this; it is never assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedHypergraph {
    base: Hypergraph,
    signs: Vec<Sign>,
}

impl SignedHypergraph {
    pub fn new(base: Hypergraph, signs: Vec<Sign>) -> Result<SignedHypergraph> {
        if signs.len() != base.m() {
            return Err(Error::input(format!(
                "expected {} signs, got {}",
                base.m(),
                signs.len()
            )));
        }
        let sh = SignedHypergraph { base, signs };
        if let Some(occ) = check_aba_free(&sh.underlying_family()) {
            return Err(Error::NotPseudohalfplane(occ));
        }
        Ok(sh)
    }

    /// For values whose validity is mathematically forced (induced
    /// subhypergraphs, verified extensions). Checked in debug builds.
    pub(crate) fn new_unchecked(base: Hypergraph, signs: Vec<Sign>) -> SignedHypergraph {
        debug_assert_eq!(base.m(), signs.len());
        let sh = SignedHypergraph { base, signs };
        debug_assert!(
            check_aba_free(&sh.underlying_family()).is_none(),
            "derived family not ABA-free"
        );
        sh
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    pub fn m(&self) -> usize {
        self.base.m()
    }

    pub fn edge(&self, i: usize) -> VertexSet {
        self.base.edges[i]
    }

    pub fn sign(&self, i: usize) -> Sign {
        self.signs[i]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn full_set(&self) -> VertexSet {
        self.base.full_set()
    }

    /// Member of the witness family contributed by edge `i`: the edge itself
    /// for a topset, its complement for a bottomset.
    pub fn member(&self, i: usize) -> VertexSet {
        match self.signs[i] {
            Sign::Top => self.base.edges[i],
            Sign::Bottom => self.base.edges[i].complement(self.base.n),
        }
    }

    /// The witness family certifying pseudohalfplane-ness, one member per
    /// edge in edge order. This is the smallest valid family `T ∪ B̄`, which
    /// gives the largest extremal vertex set.
    pub fn underlying_family(&self) -> Hypergraph {
        Hypergraph {
            n: self.base.n,
            edges: (0..self.m()).map(|i| self.member(i)).collect(),
            names: self.base.names.clone(),
        }
    }

    pub fn induced(&self, keep: VertexSet) -> Result<SignedHypergraph> {
        let base = self.base.induced(keep)?;
        Ok(SignedHypergraph::new_unchecked(base, self.signs.clone()))
    }

    /// Append one signed edge, re-checking validity.
    pub fn with_edge(&self, edge: VertexSet, sign: Sign) -> Result<SignedHypergraph> {
        if !edge.is_subset_of(self.full_set()) {
            return Err(Error::input("with_edge: vertex out of range"));
        }
        let mut base = self.base.clone();
        base.edges.push(edge);
        let mut signs = self.signs.clone();
        signs.push(sign);
        SignedHypergraph::new(base, signs)
    }

    /// Whether appending `(edge, sign)` keeps the declared witness family
    /// ABA-free; on failure reports the first conflicting occurrence.
    pub fn edge_addable(&self, edge: VertexSet, sign: Sign) -> std::result::Result<(), AbaOccurrence> {
        let member = match sign {
            Sign::Top => edge,
            Sign::Bottom => edge.complement(self.n()),
        };
        let m = self.m();
        for i in 0..m {
            let other = self.member(i);
            if let Some((x, y, z)) = crate::recognition::aba_witness(member, other) {
                return Err(AbaOccurrence {
                    edge_a: m,
                    edge_b: i,
                    x,
                    y,
                    z,
                });
            }
            if let Some((x, y, z)) = crate::recognition::aba_witness(other, member) {
                return Err(AbaOccurrence {
                    edge_a: i,
                    edge_b: m,
                    x,
                    y,
                    z,
                });
            }
        }
        Ok(())
    }
}

/// A hypergraph with a shift set `X` and a signature such that symmetric-
/// differencing every edge with `X` and then applying the signature yields an
/// ABA-free family. Checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HemisphereHypergraph {
    base: Hypergraph,
    shift: VertexSet,
    signs: Vec<Sign>,
}

impl HemisphereHypergraph {
    pub fn new(base: Hypergraph, shift: VertexSet, signs: Vec<Sign>) -> Result<HemisphereHypergraph> {
        if !shift.is_subset_of(base.full_set()) {
            return Err(Error::input("shift set contains out-of-range vertex"));
        }
        if signs.len() != base.m() {
            return Err(Error::input(format!(
                "expected {} signs, got {}",
                base.m(),
                signs.len()
            )));
        }
        let hh = HemisphereHypergraph { base, shift, signs };
        if let Some(occ) = check_aba_free(&hh.underlying_family()) {
            return Err(Error::NotPseudohalfplane(occ));
        }
        Ok(hh)
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    pub fn m(&self) -> usize {
        self.base.m()
    }

    pub fn shift(&self) -> VertexSet {
        self.shift
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn edge(&self, i: usize) -> VertexSet {
        self.base.edges[i]
    }

    /// Witness-family member of edge `i`: `edge Δ X`, complemented for
    /// bottom-labelled edges.
    pub fn member(&self, i: usize) -> VertexSet {
        let shifted = self.base.edges[i].sym_diff(self.shift);
        match self.signs[i] {
            Sign::Top => shifted,
            Sign::Bottom => shifted.complement(self.base.n),
        }
    }

    pub fn underlying_family(&self) -> Hypergraph {
        Hypergraph {
            n: self.base.n,
            edges: (0..self.m()).map(|i| self.member(i)).collect(),
            names: None,
        }
    }
}
