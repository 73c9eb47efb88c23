//! Extremal vertices: skippable/unskippable vertices, topvertices and
//! bottomvertices, their circular order, triple orientation, and cup/cap
//! classification.
//!
//! Profiles are computed from the declared signature's witness family, which
//! is always the canonical smallest family `T ∪ B̄` and therefore yields the
//! largest extremal vertex set.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, SignedHypergraph};
use crate::set::VertexSet;
use serde::Serialize;

/// Topvertices `T`, bottomvertices `B` (ascending rank), and the circular
/// order `(v1, t2, .., t_{k-1}, vn, b_{l-1}, .., b2)` of the extremal
/// vertices. The leftmost and rightmost vertices appear in both hulls; an
/// interior vertex on both hulls occupies two circular positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalProfile {
    #[serde(rename = "T")]
    pub t: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    pub circular: Vec<usize>,
}

impl ExtremalProfile {
    pub fn top_set(&self) -> VertexSet {
        VertexSet::from_ranks(self.t.iter().copied())
    }

    pub fn bottom_set(&self) -> VertexSet {
        VertexSet::from_ranks(self.b.iter().copied())
    }

    pub fn extremal_set(&self) -> VertexSet {
        self.top_set().union(self.bottom_set())
    }

    pub fn is_extremal(&self, v: usize) -> bool {
        self.extremal_set().contains(v)
    }
}

/// Vertices skipped by some member of the family: `min(M) < a < max(M)` with
/// `a ∉ M`.
pub fn skipped_vertices(family: &Hypergraph) -> VertexSet {
    let mut skipped = VertexSet::EMPTY;
    for &m in family.edges() {
        if let (Some(lo), Some(hi)) = (m.min(), m.max()) {
            skipped = skipped.union(VertexSet::strictly_between(lo, hi).difference(m));
        }
    }
    skipped
}

fn unskipped_members(sh: &SignedHypergraph, complemented: bool) -> VertexSet {
    let n = sh.n();
    let mut skipped = VertexSet::EMPTY;
    for i in 0..sh.m() {
        let m = if complemented {
            sh.member(i).complement(n)
        } else {
            sh.member(i)
        };
        if let (Some(lo), Some(hi)) = (m.min(), m.max()) {
            skipped = skipped.union(VertexSet::strictly_between(lo, hi).difference(m));
        }
    }
    VertexSet::full(n).difference(skipped)
}

/// Topvertices (unskippable in the witness family `F`), bottomvertices
/// (unskippable in `F̄`), and their circular order.
pub fn extremal_profile(sh: &SignedHypergraph) -> Result<ExtremalProfile> {
    let n = sh.n();
    if n == 0 {
        return Err(Error::input("extremal_profile requires at least one vertex"));
    }
    let t_set = unskipped_members(sh, false);
    let b_set = unskipped_members(sh, true);
    let t: Vec<usize> = t_set.to_vec();
    let b: Vec<usize> = b_set.to_vec();
    debug_assert!(t_set.contains(0) && t_set.contains(n - 1));
    debug_assert!(b_set.contains(0) && b_set.contains(n - 1));

    let circular = if n == 1 {
        vec![0]
    } else {
        let mut c = Vec::with_capacity(t.len() + b.len() - 2);
        c.push(0);
        c.extend(&t[1..t.len() - 1]);
        c.push(n - 1);
        c.extend(b[1..b.len() - 1].iter().rev());
        c
    };
    Ok(ExtremalProfile { t, b, circular })
}

/// Position of the middle vertex of a triple relative to its outer pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Above,
    Below,
    Both,
}

impl Orientation {
    pub fn is_above(self) -> bool {
        matches!(self, Orientation::Above | Orientation::Both)
    }

    pub fn is_below(self) -> bool {
        matches!(self, Orientation::Below | Orientation::Both)
    }

    fn flip(self) -> Orientation {
        match self {
            Orientation::Above => Orientation::Below,
            Orientation::Below => Orientation::Above,
            Orientation::Both => Orientation::Both,
        }
    }
}

/// Orientation of `b` relative to the pair `a < b < c`, decided on the
/// induced subhypergraph of the three vertices: above iff `b` is a topvertex
/// there, below iff a bottomvertex, both iff both. At least one always holds
/// on a valid instance.
///
/// `b` is a topvertex of the triple iff no witness member contains `a` and
/// `c` while avoiding `b`, which the scan below tests directly.
pub fn orient_triple(sh: &SignedHypergraph, a: usize, b: usize, c: usize) -> Result<Orientation> {
    let n = sh.n();
    if !(a < b && b < c && c < n) {
        return Err(Error::input(format!(
            "orient_triple requires ranks a < b < c below {n}, got ({a},{b},{c})"
        )));
    }
    let pair = VertexSet::singleton(a).union(VertexSet::singleton(c));
    let mut top = true;
    let mut bottom = true;
    for i in 0..sh.m() {
        let m = sh.member(i);
        if pair.is_subset_of(m) && !m.contains(b) {
            top = false;
        }
        let mc = m.complement(n);
        if pair.is_subset_of(mc) && !mc.contains(b) {
            bottom = false;
        }
        if !top && !bottom {
            break;
        }
    }
    match (top, bottom) {
        (true, true) => Ok(Orientation::Both),
        (true, false) => Ok(Orientation::Above),
        (false, true) => Ok(Orientation::Below),
        (false, false) => Err(Error::Internal(format!(
            "vertex {b} neither top nor bottom in triple ({a},{b},{c}); instance invalid"
        ))),
    }
}

/// Orientation of `u` (any role) relative to the other two vertices of a
/// triple. For the outer vertices the relation is the middle vertex's
/// orientation flipped: with `a < b < c`, `c` is below `ab` and `a` is below
/// `bc` exactly when `b` is a topvertex of the triple.
pub fn orient_vertex_vs_pair(
    sh: &SignedHypergraph,
    u: usize,
    p: usize,
    q: usize,
) -> Result<Orientation> {
    let mut ranks = [u, p, q];
    ranks.sort_unstable();
    let [a, b, c] = ranks;
    if a == b || b == c {
        return Err(Error::input("orientation requires three distinct vertices"));
    }
    let mid = orient_triple(sh, a, b, c)?;
    Ok(if u == b { mid } else { mid.flip() })
}

/// Classification of a vertex subset as a cup (every vertex a bottomvertex of
/// the induced subhypergraph), a cap (every vertex a topvertex), both, or
/// neither. Subsets of size at most 2 are always both: endpoints are
/// extremal on both hulls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubsetClass {
    Cup,
    Cap,
    Both,
    Neither,
}

impl SubsetClass {
    pub fn is_cup(self) -> bool {
        matches!(self, SubsetClass::Cup | SubsetClass::Both)
    }

    pub fn is_cap(self) -> bool {
        matches!(self, SubsetClass::Cap | SubsetClass::Both)
    }
}

/// Classify `a` within `sh` without materializing the induced subhypergraph:
/// a member skips a vertex of `a` (inside `a`) iff it misses the vertex while
/// containing smaller and larger vertices of `a`.
pub fn classify_subset(sh: &SignedHypergraph, a: VertexSet) -> Result<SubsetClass> {
    if a.is_empty() {
        return Err(Error::input("classify_subset requires a non-empty subset"));
    }
    if !a.is_subset_of(sh.full_set()) {
        return Err(Error::input("classify_subset: vertex out of range"));
    }
    let n = sh.n();
    let mut not_top = VertexSet::EMPTY;
    let mut not_bottom = VertexSet::EMPTY;
    for i in 0..sh.m() {
        let m = sh.member(i);
        not_top = not_top.union(skips_within(m, a));
        not_bottom = not_bottom.union(skips_within(m.complement(n), a));
    }
    let cap = a.intersect(not_top).is_empty();
    let cup = a.intersect(not_bottom).is_empty();
    Ok(match (cup, cap) {
        (true, true) => SubsetClass::Both,
        (true, false) => SubsetClass::Cup,
        (false, true) => SubsetClass::Cap,
        (false, false) => SubsetClass::Neither,
    })
}

/// Vertices of `domain` skipped by `member` inside `domain`.
fn skips_within(member: VertexSet, domain: VertexSet) -> VertexSet {
    let m = member.intersect(domain);
    match (m.min(), m.max()) {
        (Some(lo), Some(hi)) => VertexSet::strictly_between(lo, hi)
            .intersect(domain)
            .difference(m),
        _ => VertexSet::EMPTY,
    }
}

/// Whether the ascending triple is a cup (middle vertex is a bottomvertex of
/// the induced triple). A set is a cup iff all its triples are.
pub fn triple_is_cup(sh: &SignedHypergraph, a: usize, b: usize, c: usize) -> Result<bool> {
    Ok(orient_triple(sh, a, b, c)?.is_below())
}

pub fn triple_is_cap(sh: &SignedHypergraph, a: usize, b: usize, c: usize) -> Result<bool> {
    Ok(orient_triple(sh, a, b, c)?.is_above())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Sign;

    fn signed(n: usize, edges: &[(&[usize], Sign)]) -> SignedHypergraph {
        let base = Hypergraph::new(
            n,
            edges
                .iter()
                .map(|(e, _)| VertexSet::from_ranks(e.iter().copied()))
                .collect(),
        )
        .unwrap();
        SignedHypergraph::new(base, edges.iter().map(|(_, s)| *s).collect()).unwrap()
    }

    #[test]
    fn no_edges_everything_extremal() {
        let sh = signed(3, &[]);
        let p = extremal_profile(&sh).unwrap();
        assert_eq!(p.t, vec![0, 1, 2]);
        assert_eq!(p.b, vec![0, 1, 2]);
        assert_eq!(p.circular, vec![0, 1, 2, 1]);
    }

    #[test]
    fn cara_profile() {
        let sh = signed(
            5,
            &[
                (&[0, 1, 2, 3, 4], Sign::Top),
                (&[0, 1, 3], Sign::Top),
                (&[0, 1, 4], Sign::Top),
                (&[0, 3, 4], Sign::Top),
                (&[1, 3, 4], Sign::Top),
            ],
        );
        let p = extremal_profile(&sh).unwrap();
        assert_eq!(p.t, vec![0, 4]);
        assert_eq!(p.b, vec![0, 2, 4]);
        assert_eq!(p.circular, vec![0, 4, 2]);
    }

    #[test]
    fn singleton_topset_skips_nothing() {
        let sh = signed(3, &[(&[1], Sign::Top)]);
        let p = extremal_profile(&sh).unwrap();
        assert_eq!(p.t, vec![0, 1, 2]);
    }

    #[test]
    fn orient_examples() {
        let sh = signed(3, &[]);
        assert_eq!(orient_triple(&sh, 0, 1, 2).unwrap(), Orientation::Both);
        // A single topset {0,2} skips 1, so 1 is not above; with no
        // bottomsets it stays a bottomvertex.
        let sh = signed(3, &[(&[0, 2], Sign::Top)]);
        assert_eq!(orient_triple(&sh, 0, 1, 2).unwrap(), Orientation::Below);
    }

    #[test]
    fn orient_outer_roles_flip() {
        let sh = signed(3, &[(&[0, 2], Sign::Top)]);
        // 1 below 02 means 2 above 01 and 0 above 12.
        assert_eq!(
            orient_vertex_vs_pair(&sh, 2, 0, 1).unwrap(),
            Orientation::Above
        );
        assert_eq!(
            orient_vertex_vs_pair(&sh, 0, 1, 2).unwrap(),
            Orientation::Above
        );
    }

    #[test]
    fn classify_examples() {
        let sh = signed(3, &[]);
        assert_eq!(
            classify_subset(&sh, VertexSet::from_ranks([0, 1, 2])).unwrap(),
            SubsetClass::Both
        );
        // Topsets only: the bottom condition is vacuous, so any subset is at
        // least a cup.
        let sh = signed(
            5,
            &[
                (&[0, 1, 2, 3, 4], Sign::Top),
                (&[0, 1, 3], Sign::Top),
                (&[0, 1, 4], Sign::Top),
                (&[0, 3, 4], Sign::Top),
                (&[1, 3, 4], Sign::Top),
            ],
        );
        let class = classify_subset(&sh, VertexSet::from_ranks([0, 1, 3])).unwrap();
        assert!(class.is_cup());
    }

    #[test]
    fn small_subsets_are_both() {
        let sh = signed(4, &[(&[0, 2], Sign::Top), (&[1, 3], Sign::Bottom)]);
        for v in 0..4 {
            assert_eq!(
                classify_subset(&sh, VertexSet::singleton(v)).unwrap(),
                SubsetClass::Both
            );
        }
        assert_eq!(
            classify_subset(&sh, VertexSet::from_ranks([0, 3])).unwrap(),
            SubsetClass::Both
        );
    }
}
