//! ABA-freeness testing and pseudohalfplane / pseudohemisphere recognition.
//!
//! ABA-freeness is a pairwise property of the witness family, so choosing a
//! top/bottom label per edge is a 2-SAT instance with one variable per edge:
//! for each edge pair all four label combinations are tested and the
//! forbidden ones become clauses, solved by implication-graph strongly
//! connected components.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Sign, SignedHypergraph};
use crate::set::VertexSet;
use itertools::Itertools;
use serde::Serialize;

/// The forbidden pattern: vertices `x < y < z` with `x, z ∈ A \ B` and
/// `y ∈ B \ A`, where `A`, `B` are the referenced members (the edges
/// themselves in [`check_aba_free`], signed witness members in recognition
/// certificates).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AbaOccurrence {
    pub edge_a: usize,
    pub edge_b: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// Lexicographically-first witness triple `(x, y, z)` of an ABA pattern on
/// the ordered pair `(a, b)`, if any. An occurrence exists iff some
/// `y ∈ b \ a` lies strictly between `min(a \ b)` and `max(a \ b)`.
pub fn aba_witness(a: VertexSet, b: VertexSet) -> Option<(usize, usize, usize)> {
    let d_ab = a.difference(b);
    if d_ab.len() < 2 {
        return None;
    }
    let d_ba = b.difference(a);
    if d_ba.is_empty() {
        return None;
    }
    let lo = d_ab.min().unwrap();
    let hi = d_ab.max().unwrap();
    let mid = d_ba.intersect(VertexSet::strictly_between(lo, hi));
    let y = mid.min()?;
    // Smallest x is always min(a \ b); smallest z is the first member of
    // a \ b beyond y.
    let z = d_ab.intersect(VertexSet::above(y)).min().unwrap();
    Some((lo, y, z))
}

/// Same test restricted to a vertex domain (used by the greedy extensions,
/// which decide memberships one vertex at a time).
pub(crate) fn aba_witness_within(
    a: VertexSet,
    b: VertexSet,
    domain: VertexSet,
) -> Option<(usize, usize, usize)> {
    aba_witness(a.intersect(domain), b.intersect(domain))
}

/// Decide ABA-freeness of the edge family itself. Returns the
/// lexicographically-first occurrence by ordered edge-index pair, then by
/// `(x, y, z)`.
pub fn check_aba_free(h: &Hypergraph) -> Option<AbaOccurrence> {
    let m = h.m();
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            if let Some((x, y, z)) = aba_witness(h.edge(a), h.edge(b)) {
                return Some(AbaOccurrence {
                    edge_a: a,
                    edge_b: b,
                    x,
                    y,
                    z,
                });
            }
        }
    }
    None
}

/// A per-edge top/bottom labelling found by the recognizer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub labels: Vec<Sign>,
}

/// One label combination ruled out for an edge pair, with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenCombo {
    pub signs: (Sign, Sign),
    pub occurrence: AbaOccurrence,
}

/// All pairwise constraints collected by the labelling reduction. When
/// recognition fails this is the certificate: the constraint set admits no
/// consistent labelling.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InfeasibilityCertificate {
    pub constraints: Vec<PairConstraint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairConstraint {
    pub edges: (usize, usize),
    pub forbidden: Vec<ForbiddenCombo>,
}

// ---------------------------------------------------------------------------
// 2-SAT via Tarjan SCC on the implication graph.
// ---------------------------------------------------------------------------

struct TwoSat {
    vars: usize,
    /// Clauses (a ∨ b) as literals: (var, polarity).
    clauses: Vec<((usize, bool), (usize, bool))>,
}

impl TwoSat {
    fn new(vars: usize) -> TwoSat {
        TwoSat {
            vars,
            clauses: Vec::new(),
        }
    }

    fn add_clause(&mut self, a: (usize, bool), b: (usize, bool)) {
        self.clauses.push((a, b));
    }

    fn node(lit: (usize, bool)) -> usize {
        2 * lit.0 + usize::from(!lit.1)
    }

    fn neg(lit: (usize, bool)) -> (usize, bool) {
        (lit.0, !lit.1)
    }

    fn solve(&self) -> Option<Vec<bool>> {
        let n_nodes = 2 * self.vars;
        let mut adj = vec![Vec::new(); n_nodes];
        for &(a, b) in &self.clauses {
            adj[Self::node(Self::neg(a))].push(Self::node(b));
            adj[Self::node(Self::neg(b))].push(Self::node(a));
        }
        let comp = tarjan_scc(&adj);
        let mut assignment = vec![false; self.vars];
        for v in 0..self.vars {
            let pos = comp[2 * v];
            let neg = comp[2 * v + 1];
            if pos == neg {
                return None;
            }
            // Tarjan numbers components in reverse topological order, so the
            // smaller id is closer to a sink; a literal whose component is a
            // sink is safe to satisfy.
            assignment[v] = pos < neg;
        }
        Some(assignment)
    }
}

/// Iterative Tarjan; returns the component id per node, ids in reverse
/// topological order of the condensation.
fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut n_comps = 0;

    macro_rules! visit {
        ($v:expr) => {{
            let v = $v;
            index[v] = next_index;
            low[v] = next_index;
            next_index += 1;
            stack.push(v);
            on_stack[v] = true;
        }};
    }

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        visit!(root);
        call.push((root, 0));
        while let Some(&(v, ei)) = call.last() {
            if ei < adj[v].len() {
                call.last_mut().unwrap().1 += 1;
                let w = adj[v][ei];
                if index[w] == UNSET {
                    visit!(w);
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = n_comps;
                        if w == v {
                            break;
                        }
                    }
                    n_comps += 1;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
            }
        }
    }
    comp
}

// ---------------------------------------------------------------------------
// Recognition under a fixed vertex order.
// ---------------------------------------------------------------------------

fn member(edge: VertexSet, n: usize, sign: Sign) -> VertexSet {
    match sign {
        Sign::Top => edge,
        Sign::Bottom => edge.complement(n),
    }
}

/// Find a signature making `h` a pseudohalfplane hypergraph under the given
/// vertex order, or the full pairwise constraint set when none exists.
pub fn recognize_ordered(
    h: &Hypergraph,
) -> std::result::Result<Signature, Box<InfeasibilityCertificate>> {
    let m = h.m();
    let n = h.n();
    let mut sat = TwoSat::new(m);
    let mut constraints: Vec<PairConstraint> = Vec::new();
    // Variable i true <=> edge i labelled Top.
    for i in 0..m {
        for j in (i + 1)..m {
            let mut forbidden = Vec::new();
            for (si, sj) in [
                (Sign::Top, Sign::Top),
                (Sign::Top, Sign::Bottom),
                (Sign::Bottom, Sign::Top),
                (Sign::Bottom, Sign::Bottom),
            ] {
                let mi = member(h.edge(i), n, si);
                let mj = member(h.edge(j), n, sj);
                let occ = aba_witness(mi, mj)
                    .map(|(x, y, z)| AbaOccurrence {
                        edge_a: i,
                        edge_b: j,
                        x,
                        y,
                        z,
                    })
                    .or_else(|| {
                        aba_witness(mj, mi).map(|(x, y, z)| AbaOccurrence {
                            edge_a: j,
                            edge_b: i,
                            x,
                            y,
                            z,
                        })
                    });
                if let Some(occurrence) = occ {
                    forbidden.push(ForbiddenCombo {
                        signs: (si, sj),
                        occurrence,
                    });
                    // Forbidding (si, sj) is the clause (i != si) ∨ (j != sj).
                    sat.add_clause((i, si == Sign::Bottom), (j, sj == Sign::Bottom));
                }
            }
            if forbidden.len() == 4 {
                // No allowed combination for this pair: infeasible outright.
                return Err(Box::new(InfeasibilityCertificate {
                    constraints: vec![PairConstraint {
                        edges: (i, j),
                        forbidden,
                    }],
                }));
            }
            if !forbidden.is_empty() {
                constraints.push(PairConstraint {
                    edges: (i, j),
                    forbidden,
                });
            }
        }
    }
    match sat.solve() {
        Some(assignment) => {
            let labels: Vec<Sign> = assignment
                .iter()
                .map(|&top| if top { Sign::Top } else { Sign::Bottom })
                .collect();
            debug_assert!({
                let members: Vec<VertexSet> = (0..m)
                    .map(|i| member(h.edge(i), n, labels[i]))
                    .collect();
                check_aba_free(&Hypergraph::new(n, members).unwrap()).is_none()
            });
            Ok(Signature { labels })
        }
        None => Err(Box::new(InfeasibilityCertificate { constraints })),
    }
}

/// Convenience: recognize under the fixed order and build the signed value.
pub fn to_signed(h: &Hypergraph) -> Option<SignedHypergraph> {
    recognize_ordered(h)
        .ok()
        .map(|sig| SignedHypergraph::new(h.clone(), sig.labels).expect("verified signature"))
}

/// Reorder `h` by `order`: position `p` of the result holds the old vertex
/// `order[p]`.
pub fn reorder(h: &Hypergraph, order: &[usize]) -> Result<Hypergraph> {
    let n = h.n();
    if order.len() != n || VertexSet::from_ranks(order.iter().copied()) != h.full_set() {
        return Err(Error::input("order must be a permutation of 0..n"));
    }
    let edges = h
        .edges()
        .iter()
        .map(|e| {
            VertexSet::from_ranks(
                (0..n).filter(|&p| e.contains(order[p])),
            )
        })
        .collect();
    Hypergraph::new(n, edges)
}

pub const DEFAULT_ORDER_SEARCH_LIMIT: usize = 10;

/// Brute-force recognition over vertex orders: the first permutation in
/// lexicographic order whose reordered hypergraph is accepted, with its
/// signature. The open problem of doing this efficiently is out of scope;
/// the guard keeps the factorial search at desk scale.
pub fn recognize(
    h: &Hypergraph,
    max_n: Option<usize>,
) -> Result<Option<(Vec<usize>, Signature)>> {
    let limit = max_n.unwrap_or(DEFAULT_ORDER_SEARCH_LIMIT);
    if h.n() > limit {
        return Err(Error::SizeGuard {
            what: "recognize (order search)",
            unit: "vertices",
            limit,
            actual: h.n(),
        });
    }
    for order in (0..h.n()).permutations(h.n()) {
        let reordered = reorder(h, &order)?;
        if let Ok(sig) = recognize_ordered(&reordered) {
            return Ok(Some((order, sig)));
        }
    }
    Ok(None)
}

/// Recognize as a pseudohemisphere hypergraph: for each candidate shift `X`
/// (ascending bitmask order) symmetric-difference every edge with `X` and run
/// the ordered recognizer; when no order is given, orders are searched
/// lexicographically first.
pub fn recognize_hemisphere(
    h: &Hypergraph,
    order: Option<&[usize]>,
    max_n: Option<usize>,
) -> Result<Option<(Vec<usize>, VertexSet, Signature)>> {
    let limit = max_n.unwrap_or(DEFAULT_ORDER_SEARCH_LIMIT);
    if h.n() > limit {
        return Err(Error::SizeGuard {
            what: "recognize_hemisphere",
            unit: "vertices",
            limit,
            actual: h.n(),
        });
    }
    let n = h.n();
    let shifts = if n == 0 { 1u128 } else { 1u128 << n };
    let try_order = |ord: &[usize]| -> Result<Option<(VertexSet, Signature)>> {
        let reordered = reorder(h, ord)?;
        for x_bits in 0..shifts {
            let x = VertexSet(x_bits);
            let shifted = Hypergraph::new(
                n,
                reordered.edges().iter().map(|e| e.sym_diff(x)).collect(),
            )?;
            if let Ok(sig) = recognize_ordered(&shifted) {
                return Ok(Some((x, sig)));
            }
        }
        Ok(None)
    };
    match order {
        Some(ord) => {
            if let Some((x, sig)) = try_order(ord)? {
                return Ok(Some((ord.to_vec(), x, sig)));
            }
            Ok(None)
        }
        None => {
            for ord in (0..n).permutations(n) {
                if let Some((x, sig)) = try_order(&ord)? {
                    return Ok(Some((ord, x, sig)));
                }
            }
            Ok(None)
        }
    }
}

pub const DEFAULT_COUNT_EDGE_LIMIT: usize = 12;

/// Brute-force count of valid (order, signature) pairs, each signature
/// verified by the ABA check directly. Exists as a baseline for the open
/// counting question; guards keep it at desk scale.
pub fn count_recognitions(h: &Hypergraph, max_n: Option<usize>) -> Result<u64> {
    let limit = max_n.unwrap_or(DEFAULT_ORDER_SEARCH_LIMIT);
    if h.n() > limit {
        return Err(Error::SizeGuard {
            what: "count_recognitions",
            unit: "vertices",
            limit,
            actual: h.n(),
        });
    }
    if h.m() > DEFAULT_COUNT_EDGE_LIMIT {
        return Err(Error::SizeGuard {
            what: "count_recognitions",
            unit: "edges",
            limit: DEFAULT_COUNT_EDGE_LIMIT,
            actual: h.m(),
        });
    }
    let mut count = 0u64;
    for order in (0..h.n()).permutations(h.n()) {
        let reordered = reorder(h, &order)?;
        count += count_signatures(&reordered);
    }
    Ok(count)
}

fn count_signatures(h: &Hypergraph) -> u64 {
    let m = h.m();
    let n = h.n();
    let mut count = 0;
    for bits in 0u64..(1 << m) {
        let members: Vec<VertexSet> = (0..m)
            .map(|i| {
                member(
                    h.edge(i),
                    n,
                    if bits >> i & 1 == 1 { Sign::Top } else { Sign::Bottom },
                )
            })
            .collect();
        if check_aba_free(&Hypergraph::new(n, members).unwrap()).is_none() {
            count += 1;
        }
    }
    count
}

/// Size guard helper shared by the exhaustive searches in other modules.
pub(crate) fn guard(
    what: &'static str,
    unit: &'static str,
    limit: usize,
    actual: usize,
) -> Result<()> {
    if actual > limit {
        return Err(Error::SizeGuard {
            what,
            unit,
            limit,
            actual,
        });
    }
    Ok(())
}
