//! Extension machinery: grow a pseudohalfplane hypergraph by a vertex or a
//! hyperedge while staying a pseudohalfplane hypergraph, the discrete Levi
//! construction, Helly-type vertex extensions, and saturation.
//!
//! The greedy completions decide one membership at a time in a fixed order
//! (ascending edge index, ascending vertex rank) and break ties towards
//! excluding the new element. ABA-freeness is a pairwise property, so at
//! every step checking the freshly decided member against the already decided
//! ones suffices, and the extension lemmas guarantee one of the two choices
//! survives whenever the seed was valid. Extensions are usually not unique;
//! the fixed order just makes results reproducible.

use crate::error::{Error, ExtensionConflict, PremiseViolation, Result};
use crate::hypergraph::{HemisphereHypergraph, Hypergraph, Sign, SignedHypergraph};
use crate::recognition::{aba_witness_within, recognize_ordered, AbaOccurrence};
use crate::set::VertexSet;
use serde::Serialize;

/// Placement of a new vertex: it becomes rank `position` (a gap index in
/// `0..=n`), and `membership[i]` says whether it joins edge `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexInsertion {
    pub position: usize,
    pub membership: Vec<bool>,
}

/// Build the signed hypergraph that an insertion describes.
pub fn apply_vertex_insertion(
    sh: &SignedHypergraph,
    ins: &VertexInsertion,
) -> Result<SignedHypergraph> {
    if ins.position > sh.n() || ins.membership.len() != sh.m() {
        return Err(Error::input("insertion does not match the hypergraph"));
    }
    let edges = (0..sh.m())
        .map(|i| {
            let shifted = sh.edge(i).shift_up_at(ins.position);
            if ins.membership[i] {
                shifted.with(ins.position)
            } else {
                shifted
            }
        })
        .collect();
    SignedHypergraph::new(Hypergraph::new(sh.n() + 1, edges)?, sh.signs().to_vec())
}

/// Witness-family member of an extended edge: the new vertex joins the member
/// of a topset iff it joins the edge, and the member of a bottomset iff it
/// avoids the edge.
fn extended_member(sh: &SignedHypergraph, i: usize, position: usize, in_edge: bool) -> VertexSet {
    let m = sh.member(i).shift_up_at(position);
    let in_member = match sh.sign(i) {
        Sign::Top => in_edge,
        Sign::Bottom => !in_edge,
    };
    if in_member {
        m.with(position)
    } else {
        m
    }
}

/// Extend the hypergraph by a vertex at `position`, given seed memberships
/// for a core subset of edges. The seed must itself be a valid extension of
/// the core subfamily (checked); the remaining edges are then decided in
/// ascending index order with the exclude preference.
pub fn extend_vertex(
    sh: &SignedHypergraph,
    position: usize,
    seed: &[(usize, bool)],
) -> Result<VertexInsertion> {
    if position > sh.n() {
        return Err(Error::input(format!(
            "insertion position {position} out of range 0..={}",
            sh.n()
        )));
    }
    let m = sh.m();
    let mut decided: Vec<Option<bool>> = vec![None; m];
    for &(idx, member) in seed {
        if idx >= m {
            return Err(Error::input(format!("seed edge index {idx} out of range")));
        }
        if decided[idx].replace(member).is_some() {
            return Err(Error::input(format!("seed lists edge {idx} twice")));
        }
    }

    // Members of the decided part of the family, indexed by edge.
    let mut members: Vec<Option<VertexSet>> = vec![None; m];
    let full = VertexSet::full(sh.n() + 1);
    let check = |cand: VertexSet,
                     cand_idx: usize,
                     members: &[Option<VertexSet>]|
     -> std::result::Result<(), AbaOccurrence> {
        for (j, m_j) in members.iter().enumerate() {
            let Some(other) = m_j else { continue };
            if let Some((x, y, z)) = aba_witness_within(cand, *other, full) {
                return Err(AbaOccurrence {
                    edge_a: cand_idx,
                    edge_b: j,
                    x,
                    y,
                    z,
                });
            }
            if let Some((x, y, z)) = aba_witness_within(*other, cand, full) {
                return Err(AbaOccurrence {
                    edge_a: j,
                    edge_b: cand_idx,
                    x,
                    y,
                    z,
                });
            }
        }
        Ok(())
    };

    // Seed validity: the core edges with their declared memberships must
    // already form an ABA-free extended family.
    for i in 0..m {
        if let Some(member) = decided[i] {
            let cand = extended_member(sh, i, position, member);
            if let Err(occ) = check(cand, i, &members) {
                return Err(Error::ExtensionBlocked(Box::new(ExtensionConflict {
                    item: i,
                    exclude_conflict: occ,
                    include_conflict: occ,
                })));
            }
            members[i] = Some(cand);
        }
    }

    for i in 0..m {
        if decided[i].is_some() {
            continue;
        }
        let excluded = extended_member(sh, i, position, false);
        match check(excluded, i, &members) {
            Ok(()) => {
                decided[i] = Some(false);
                members[i] = Some(excluded);
            }
            Err(exclude_conflict) => {
                let included = extended_member(sh, i, position, true);
                match check(included, i, &members) {
                    Ok(()) => {
                        decided[i] = Some(true);
                        members[i] = Some(included);
                    }
                    Err(include_conflict) => {
                        return Err(Error::ExtensionBlocked(Box::new(ExtensionConflict {
                            item: i,
                            exclude_conflict,
                            include_conflict,
                        })));
                    }
                }
            }
        }
    }

    let ins = VertexInsertion {
        position,
        membership: decided.into_iter().map(Option::unwrap).collect(),
    };
    debug_assert!(apply_vertex_insertion(sh, &ins).is_ok());
    Ok(ins)
}

/// Extend a partial hyperedge given on the vertex subset `sub` to a full
/// hyperedge `H` with `H ∩ sub = partial`, keeping the hypergraph valid.
/// Memberships of the vertices outside `sub` are decided in ascending rank
/// order with the exclude preference; adding `(partial, sign)` to the induced
/// subhypergraph on `sub` must already be valid (checked).
pub fn extend_hyperedge(
    sh: &SignedHypergraph,
    sub: VertexSet,
    partial: VertexSet,
    sign: Sign,
) -> Result<VertexSet> {
    if !sub.is_subset_of(sh.full_set()) {
        return Err(Error::input("extend_hyperedge: sub out of range"));
    }
    if !partial.is_subset_of(sub) {
        return Err(Error::input("extend_hyperedge: partial must lie inside sub"));
    }
    let n = sh.n();
    // New-edge member on a domain: the edge itself for a topset, the
    // complement within the domain for a bottomset.
    let new_member = |edge: VertexSet, domain: VertexSet| -> VertexSet {
        match sign {
            Sign::Top => edge.intersect(domain),
            Sign::Bottom => domain.difference(edge),
        }
    };
    let check = |edge: VertexSet, domain: VertexSet| -> std::result::Result<(), AbaOccurrence> {
        let cand = new_member(edge, domain);
        for j in 0..sh.m() {
            let other = sh.member(j);
            if let Some((x, y, z)) = aba_witness_within(cand, other, domain) {
                return Err(AbaOccurrence {
                    edge_a: sh.m(),
                    edge_b: j,
                    x,
                    y,
                    z,
                });
            }
            if let Some((x, y, z)) = aba_witness_within(other, cand, domain) {
                return Err(AbaOccurrence {
                    edge_a: j,
                    edge_b: sh.m(),
                    x,
                    y,
                    z,
                });
            }
        }
        Ok(())
    };

    // Seed check on the sub-domain.
    if let Err(occ) = check(partial, sub) {
        return Err(Error::ExtensionBlocked(Box::new(ExtensionConflict {
            item: sub.min().unwrap_or(0),
            exclude_conflict: occ,
            include_conflict: occ,
        })));
    }

    let mut edge = partial;
    let mut domain = sub;
    for u in 0..n {
        if domain.contains(u) {
            continue;
        }
        let grown = domain.with(u);
        match check(edge, grown) {
            Ok(()) => domain = grown,
            Err(exclude_conflict) => match check(edge.with(u), grown) {
                Ok(()) => {
                    edge.insert(u);
                    domain = grown;
                }
                Err(include_conflict) => {
                    return Err(Error::ExtensionBlocked(Box::new(ExtensionConflict {
                        item: u,
                        exclude_conflict,
                        include_conflict,
                    })));
                }
            },
        }
    }
    debug_assert_eq!(edge.intersect(sub), partial);
    debug_assert!(sh.with_edge(edge, sign).is_ok());
    Ok(edge)
}

/// Discrete Levi construction: duplicate `p` and `q` (each copy inserted
/// immediately after its original, joining exactly the edges the original
/// joins) and produce an edge `X` with `X ∩ {p, p', q, q'} = {p, q}` that
/// keeps the duplicated hypergraph valid.
#[derive(Clone, Debug)]
pub struct LeviResult {
    /// The duplicated hypergraph, without the new edge.
    pub duplicated: SignedHypergraph,
    pub p: usize,
    pub p_dup: usize,
    pub q: usize,
    pub q_dup: usize,
    /// The new edge (a topset) through both duplicated pairs.
    pub cross_edge: VertexSet,
}

pub fn discrete_levi(sh: &SignedHypergraph, p: usize, q: usize) -> Result<LeviResult> {
    let n = sh.n();
    if p == q || p >= n || q >= n {
        return Err(Error::input(
            "discrete_levi requires two distinct in-range vertices",
        ));
    }
    let duplicate = |sh: &SignedHypergraph, v: usize| -> SignedHypergraph {
        let seed: Vec<(usize, bool)> = (0..sh.m())
            .map(|i| (i, sh.edge(i).contains(v)))
            .collect();
        let ins = VertexInsertion {
            position: v + 1,
            membership: seed.iter().map(|&(_, b)| b).collect(),
        };
        apply_vertex_insertion(sh, &ins).expect("duplicating a vertex preserves validity")
    };
    // Duplicate the later vertex first so the earlier one's rank is stable.
    let (first, second) = if p < q { (q, p) } else { (p, q) };
    let step1 = duplicate(sh, first);
    let step2 = duplicate(&step1, second);
    let shift = |v: usize| -> usize {
        // Rank of an original vertex after both insertions.
        let mut r = v;
        if v > first {
            r += 1;
        }
        if v > second {
            r += 1;
        }
        // Inserting at second+1 shifts everything after second.
        // (handled above; first > second by construction)
        r
    };
    let (p_new, q_new) = (shift(p), shift(q));
    let four = VertexSet::from_ranks([p_new, p_new + 1, q_new, q_new + 1]);
    let partial = VertexSet::from_ranks([p_new, q_new]);
    let cross_edge = extend_hyperedge(&step2, four, partial, Sign::Top)?;
    debug_assert_eq!(cross_edge.intersect(four), partial);
    Ok(LeviResult {
        duplicated: step2,
        p: p_new,
        p_dup: p_new + 1,
        q: q_new,
        q_dup: q_new + 1,
        cross_edge,
    })
}

/// Check that every triple of the target convex sets intersects; the targets
/// are given as subfamilies of edge indices, the convex set being the
/// intersection of the subfamily (full set for the empty subfamily).
fn target_sets(sh_full: VertexSet, edges: &[VertexSet], targets: &[Vec<usize>]) -> Result<Vec<VertexSet>> {
    targets
        .iter()
        .map(|subfamily| {
            let mut c = sh_full;
            for &i in subfamily {
                let e = edges
                    .get(i)
                    .ok_or_else(|| Error::input(format!("target edge index {i} out of range")))?;
                c = c.intersect(*e);
            }
            Ok(c)
        })
        .collect()
}

fn check_triple_premise(sets: &[VertexSet]) -> Result<()> {
    let k = sets.len();
    for i in 0..k {
        for j in (i + 1)..k {
            let ij = sets[i].intersect(sets[j]);
            for (l, s) in sets.iter().enumerate().skip(j + 1) {
                if ij.intersect(*s).is_empty() {
                    return Err(Error::PremiseViolated(PremiseViolation::TripleIntersection {
                        targets: [i, j, l],
                    }));
                }
            }
        }
    }
    Ok(())
}

/// Discrete Helly extension: when every triple of target convex sets has a
/// common vertex, insert a new vertex lying in the extension of every target.
///
/// Positions `0..=n` are searched left to right; at each, the new vertex is
/// seeded into every edge participating in any target subfamily, the
/// remaining edges are completed greedily, and the result is re-verified by
/// the ordered recognizer. Some gap must work because an extension exists and
/// places the vertex at one of the `n+1` gaps, so the scan cannot miss.
pub fn helly_extend(
    sh: &SignedHypergraph,
    targets: &[Vec<usize>],
) -> Result<(VertexInsertion, usize)> {
    let sets = target_sets(sh.full_set(), sh.base().edges(), targets)?;
    check_triple_premise(&sets)?;
    let mut core = VertexSet::EMPTY;
    for subfamily in targets {
        for &i in subfamily {
            core.insert(i);
        }
    }
    match helly_search(sh, core)? {
        Some(found) => Ok(found),
        None => Err(Error::Internal(
            "helly_extend: no insertion position admits an extension (theorem violated)".into(),
        )),
    }
}

/// Position scan shared by the Helly-type searches: seed the new vertex into
/// every edge of `core`, complete greedily, verify with the recognizer.
/// Returns the first workable gap, if any.
pub(crate) fn helly_search(
    sh: &SignedHypergraph,
    core: VertexSet,
) -> Result<Option<(VertexInsertion, usize)>> {
    let seed: Vec<(usize, bool)> = core.iter().map(|i| (i, true)).collect();
    for position in 0..=sh.n() {
        let Ok(ins) = extend_vertex(sh, position, &seed) else {
            continue;
        };
        let extended = apply_vertex_insertion(sh, &ins)
            .map_err(|e| Error::Internal(format!("helly extension failed verification: {e}")))?;
        if recognize_ordered(extended.base()).is_err() {
            return Err(Error::Internal("helly extension not re-recognized".into()));
        }
        debug_assert!(core.iter().all(|i| ins.membership[i]));
        return Ok(Some((ins, position)));
    }
    Ok(None)
}

/// Placement of a new vertex in a pseudohemisphere hypergraph: as
/// [`VertexInsertion`], plus whether the vertex joins the shift set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HemisphereInsertion {
    pub position: usize,
    pub in_shift: bool,
    pub membership: Vec<bool>,
}

pub fn apply_hemisphere_insertion(
    hh: &HemisphereHypergraph,
    ins: &HemisphereInsertion,
) -> Result<HemisphereHypergraph> {
    if ins.position > hh.n() || ins.membership.len() != hh.m() {
        return Err(Error::input("insertion does not match the hypergraph"));
    }
    let edges = (0..hh.m())
        .map(|i| {
            let shifted = hh.edge(i).shift_up_at(ins.position);
            if ins.membership[i] {
                shifted.with(ins.position)
            } else {
                shifted
            }
        })
        .collect();
    let mut x = hh.shift().shift_up_at(ins.position);
    if ins.in_shift {
        x.insert(ins.position);
    }
    HemisphereHypergraph::new(
        Hypergraph::new(hh.n() + 1, edges)?,
        x,
        hh.signs().to_vec(),
    )
}

fn check_quadruple_premise(sets: &[VertexSet]) -> Result<()> {
    let k = sets.len();
    for i in 0..k {
        for j in (i + 1)..k {
            let ij = sets[i].intersect(sets[j]);
            for l in (j + 1)..k {
                let ijl = ij.intersect(sets[l]);
                for (t, s) in sets.iter().enumerate().skip(l + 1) {
                    if ijl.intersect(*s).is_empty() {
                        return Err(Error::PremiseViolated(
                            PremiseViolation::QuadrupleIntersection {
                                targets: [i, j, l, t],
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Discrete Helly extension for pseudohemisphere hypergraphs: every 4-tuple
/// of target convex sets must share a vertex; the search additionally decides
/// whether the new vertex joins the shift set.
pub fn hemisphere_helly_extend(
    hh: &HemisphereHypergraph,
    targets: &[Vec<usize>],
) -> Result<HemisphereInsertion> {
    let sets = target_sets(
        VertexSet::full(hh.n()),
        hh.base().edges(),
        targets,
    )?;
    check_quadruple_premise(&sets)?;
    let mut core = VertexSet::EMPTY;
    for subfamily in targets {
        for &i in subfamily {
            core.insert(i);
        }
    }
    let n = hh.n();
    let full_ext = VertexSet::full(n + 1);
    for position in 0..=n {
        'shift: for in_shift in [false, true] {
            // Family membership of the new vertex implied by edge membership.
            let family_bit = |i: usize, in_edge: bool| -> bool {
                let shifted = in_edge != in_shift; // xor
                match hh.signs()[i] {
                    Sign::Top => shifted,
                    Sign::Bottom => !shifted,
                }
            };
            let extend = |i: usize, in_edge: bool| -> VertexSet {
                let m = hh.member(i).shift_up_at(position);
                if family_bit(i, in_edge) {
                    m.with(position)
                } else {
                    m
                }
            };
            let mut members: Vec<Option<VertexSet>> = vec![None; hh.m()];
            let ok = |cand: VertexSet, members: &[Option<VertexSet>]| -> bool {
                members.iter().flatten().all(|&other| {
                    aba_witness_within(cand, other, full_ext).is_none()
                        && aba_witness_within(other, cand, full_ext).is_none()
                })
            };
            let mut membership = vec![false; hh.m()];
            for i in core.iter() {
                let cand = extend(i, true);
                if !ok(cand, &members) {
                    continue 'shift;
                }
                members[i] = Some(cand);
                membership[i] = true;
            }
            let mut blocked = false;
            for i in 0..hh.m() {
                if members[i].is_some() {
                    continue;
                }
                let excluded = extend(i, false);
                if ok(excluded, &members) {
                    members[i] = Some(excluded);
                } else {
                    let included = extend(i, true);
                    if ok(included, &members) {
                        members[i] = Some(included);
                        membership[i] = true;
                    } else {
                        blocked = true;
                        break;
                    }
                }
            }
            if blocked {
                continue;
            }
            let ins = HemisphereInsertion {
                position,
                in_shift,
                membership,
            };
            apply_hemisphere_insertion(hh, &ins).map_err(|e| {
                Error::Internal(format!("hemisphere extension failed verification: {e}"))
            })?;
            return Ok(ins);
        }
    }
    Err(Error::Internal(
        "hemisphere_helly_extend: no insertion admits an extension (theorem violated)".into(),
    ))
}

pub const SATURATE_LIMIT: usize = 12;

/// Greedily add every candidate `(subset, sign)` — subsets in lexicographic
/// order of their sorted member lists, top before bottom — whose witness
/// member keeps the declared family ABA-free. Candidates already present as
/// an identical `(subset, sign)` edge are skipped, which makes saturation
/// idempotent. The result is maximal for the declared witness family: no
/// further edge can be added while keeping that family's ABA-freeness.
pub fn saturate(sh: &SignedHypergraph, max_n: Option<usize>) -> Result<SignedHypergraph> {
    let limit = max_n.unwrap_or(SATURATE_LIMIT);
    crate::recognition::guard("saturate", "vertices", limit, sh.n())?;
    let n = sh.n();
    let mut masks: Vec<VertexSet> = (0..(1u128 << n)).map(VertexSet).collect();
    masks.sort_by_key(|m| m.to_vec());

    let mut present: std::collections::BTreeSet<(VertexSet, Sign)> = (0..sh.m())
        .map(|i| (sh.edge(i), sh.sign(i)))
        .collect();
    let mut result = sh.clone();
    for mask in masks {
        for sign in [Sign::Top, Sign::Bottom] {
            if present.contains(&(mask, sign)) {
                continue;
            }
            if result.edge_addable(mask, sign).is_ok() {
                result = result
                    .with_edge(mask, sign)
                    .map_err(|e| Error::Internal(format!("saturate re-check failed: {e}")))?;
                present.insert((mask, sign));
            }
        }
    }
    Ok(result)
}

/// Certificate-friendly description of why an extension was refused.
pub fn conflict_detail(conflict: &ExtensionConflict) -> String {
    format!(
        "item {}: exclude blocked by {:?}, include blocked by {:?}",
        conflict.item, conflict.exclude_conflict, conflict.include_conflict
    )
}
