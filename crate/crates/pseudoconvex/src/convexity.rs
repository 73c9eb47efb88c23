//! Abstract convexity: convex hulls, convex-set enumeration, and the
//! strongly-inside predicate.
//!
//! A convex set is any intersection of hyperedges; `Conv(q)` is the
//! intersection of all hyperedges containing `q`, with the empty intersection
//! defined as the full vertex set.

use crate::error::{Error, Result};
use crate::extremal::extremal_profile;
use crate::hypergraph::SignedHypergraph;
use crate::set::VertexSet;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexHullResult {
    pub hull: VertexSet,
    /// Indices of every edge containing the query set; their intersection is
    /// the hull. An empty list encodes the `∩∅ := S` convention.
    pub definers: Vec<usize>,
}

/// Convex hull of `q`: a single scan over all edges. Extensive, monotone and
/// idempotent.
pub fn conv(sh: &SignedHypergraph, q: VertexSet) -> Result<ConvexHullResult> {
    if !q.is_subset_of(sh.full_set()) {
        return Err(Error::input("conv: vertex out of range"));
    }
    let mut hull = sh.full_set();
    let mut definers = Vec::new();
    for i in 0..sh.m() {
        let e = sh.edge(i);
        if q.is_subset_of(e) {
            hull = hull.intersect(e);
            definers.push(i);
        }
    }
    Ok(ConvexHullResult { hull, definers })
}

/// Membership-only variant of [`conv`].
pub fn conv_contains(sh: &SignedHypergraph, q: VertexSet, v: usize) -> bool {
    (0..sh.m()).all(|i| !q.is_subset_of(sh.edge(i)) || sh.edge(i).contains(v))
}

pub const SUBSET_ENUMERATION_LIMIT: usize = 20;

/// All distinct intersections of edge subfamilies, including the full set
/// (the empty subfamily). The default `lattice` mode iterates pairwise
/// intersections to a fixpoint, which yields the same family as enumerating
/// all `2^m` subfamilies but usually does far less work.
pub fn enumerate_convex_sets(sh: &SignedHypergraph) -> Vec<VertexSet> {
    let mut known: std::collections::BTreeSet<VertexSet> = std::collections::BTreeSet::new();
    known.insert(sh.full_set());
    for i in 0..sh.m() {
        known.insert(sh.edge(i));
    }
    let mut frontier: Vec<VertexSet> = known.iter().copied().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &c in &frontier {
            for i in 0..sh.m() {
                let meet = c.intersect(sh.edge(i));
                if known.insert(meet) {
                    next.push(meet);
                }
            }
        }
        frontier = next;
    }
    known.into_iter().collect()
}

/// Reference implementation over all `2^m` subfamilies, guarded.
pub fn enumerate_convex_sets_subsets(sh: &SignedHypergraph) -> Result<Vec<VertexSet>> {
    crate::recognition::guard(
        "enumerate_convex_sets (subset mode)",
        "edges",
        SUBSET_ENUMERATION_LIMIT,
        sh.m(),
    )?;
    let mut known = std::collections::BTreeSet::new();
    for bits in 0u64..(1u64 << sh.m()) {
        let mut meet = sh.full_set();
        for i in 0..sh.m() {
            if bits >> i & 1 == 1 {
                meet = meet.intersect(sh.edge(i));
            }
        }
        known.insert(meet);
    }
    Ok(known.into_iter().collect())
}

/// Whether `v` is strongly inside the convex hull of `q`: membership survives
/// every hyperedge extension. Decided through the equivalent condition that
/// `v` is not an extremal vertex of the subhypergraph induced by `q ∪ {v}`.
pub fn is_strongly_inside(sh: &SignedHypergraph, v: usize, q: VertexSet) -> Result<bool> {
    if v >= sh.n() || !q.is_subset_of(sh.full_set()) {
        return Err(Error::input("is_strongly_inside: vertex out of range"));
    }
    if q.contains(v) {
        return Err(Error::input(
            "is_strongly_inside requires the vertex to lie outside the query set",
        ));
    }
    let domain = q.with(v);
    let induced = sh.induced(domain)?;
    let profile = extremal_profile(&induced)?;
    let v_rank = domain.iter().position(|u| u == v).unwrap();
    Ok(!profile.is_extremal(v_rank))
}
