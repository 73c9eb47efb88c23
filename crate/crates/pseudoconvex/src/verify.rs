//! The instance-level invariant suite: every structural fact the library
//! relies on, run against one signed hypergraph and reported invariant by
//! invariant. Used by the `verify` CLI command and the acceptance tests.

use crate::convexity::{conv, conv_contains, is_strongly_inside};
use crate::extremal::{extremal_profile, orient_triple, Orientation};
use crate::hypergraph::{Sign, SignedHypergraph};
use crate::recognition::{check_aba_free, recognize_ordered};
use crate::set::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn report(name: &'static str, outcome: std::result::Result<(), String>) -> InvariantReport {
    match outcome {
        Ok(()) => InvariantReport {
            name,
            passed: true,
            detail: None,
        },
        Err(detail) => InvariantReport {
            name,
            passed: false,
            detail: Some(detail),
        },
    }
}

/// Deterministic query sample: all subsets when `n` is small, otherwise a
/// seeded sample of subsets.
fn sample_subsets(n: usize, cap: usize) -> Vec<VertexSet> {
    if n <= 11 {
        (0..(1u128 << n)).map(VertexSet).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
        let full = VertexSet::full(n);
        (0..cap)
            .map(|_| VertexSet(rng.gen::<u128>()).intersect(full))
            .collect()
    }
}

/// Run the full invariant list on a recognized instance. All invariants hold
/// on every valid pseudohalfplane hypergraph; a failure points at a bug (or
/// an invalid input claiming a signature it does not have).
pub fn verify_signed(sh: &SignedHypergraph) -> Vec<InvariantReport> {
    let mut out = Vec::new();
    let n = sh.n();
    let family = sh.underlying_family();

    out.push(report("witness-family-aba-free", {
        match check_aba_free(&family) {
            None => Ok(()),
            Some(occ) => Err(format!("{occ:?}")),
        }
    }));
    out.push(report("complement-family-aba-free", {
        match check_aba_free(&family.complement_family()) {
            None => Ok(()),
            Some(occ) => Err(format!("{occ:?}")),
        }
    }));

    if n == 0 {
        return out;
    }
    let profile = match extremal_profile(sh) {
        Ok(p) => p,
        Err(e) => {
            out.push(report("extremal-profile", Err(format!("{e}"))));
            return out;
        }
    };
    let t_set = profile.top_set();
    let b_set = profile.bottom_set();
    let extremal = profile.extremal_set();

    out.push(report("endpoints-on-both-hulls", {
        if t_set.contains(0) && t_set.contains(n - 1) && b_set.contains(0) && b_set.contains(n - 1)
        {
            Ok(())
        } else {
            Err(format!("T = {t_set}, B = {b_set}"))
        }
    }));
    out.push(report("at-least-three-extremal", {
        if n < 3 || extremal.len() >= 3 {
            Ok(())
        } else {
            Err(format!("only {} extremal vertices on {} vertices", extremal.len(), n))
        }
    }));

    // Every nonempty topset contains a topvertex; bottomsets symmetrically.
    out.push(report("unskippable-in-every-edge", {
        let mut r = Ok(());
        for i in 0..sh.m() {
            let e = sh.edge(i);
            if e.is_empty() {
                continue;
            }
            let hull = match sh.sign(i) {
                Sign::Top => t_set,
                Sign::Bottom => b_set,
            };
            if e.intersect(hull).is_empty() {
                r = Err(format!("edge {i} avoids its hull"));
                break;
            }
        }
        r
    }));
    out.push(report("edges-meet-extremal-set", {
        let mut r = Ok(());
        for i in 0..sh.m() {
            let e = sh.edge(i);
            if !e.is_empty() && e.intersect(extremal).is_empty() {
                r = Err(format!("edge {i} misses all extremal vertices"));
                break;
            }
        }
        r
    }));

    // Edge ∩ extremal is an interval of the circular order: some cyclic run
    // of positions whose vertex set matches.
    out.push(report("hull-interval", {
        let c = &profile.circular;
        let len = c.len();
        let mut r = Ok(());
        'edges: for i in 0..sh.m() {
            let want = sh.edge(i).intersect(extremal);
            if want.is_empty() {
                continue;
            }
            for start in 0..len {
                for run in 1..=len {
                    let got =
                        VertexSet::from_ranks((0..run).map(|o| c[(start + o) % len]));
                    if got == want {
                        continue 'edges;
                    }
                }
            }
            r = Err(format!("edge {i}: {want} is not a circular interval"));
            break;
        }
        r
    }));

    // A topset containing two circularly-consecutive bottomvertices contains
    // everything between them; symmetrically for bottomsets.
    out.push(report("consecutive-hull-pairs-fill", {
        let mut r = Ok(());
        'edges: for i in 0..sh.m() {
            let e = sh.edge(i);
            let other_hull = match sh.sign(i) {
                Sign::Top => &profile.b,
                Sign::Bottom => &profile.t,
            };
            for w in other_hull.windows(2) {
                let (p, q) = (w[0], w[1]);
                if e.contains(p) && e.contains(q) {
                    let between = VertexSet::strictly_between(p, q);
                    if !between.is_subset_of(e) {
                        r = Err(format!("edge {i} contains {p},{q} but not all between"));
                        break 'edges;
                    }
                }
            }
        }
        r
    }));

    out.push(report("full-hull-implies-full-edge", {
        let mut r = Ok(());
        for i in 0..sh.m() {
            let e = sh.edge(i);
            let opposite = match sh.sign(i) {
                Sign::Top => b_set,
                Sign::Bottom => t_set,
            };
            if opposite.is_subset_of(e) && e != sh.full_set() {
                r = Err(format!("edge {i} contains the opposite hull but not everything"));
                break;
            }
            if extremal.is_subset_of(e) && e != sh.full_set() {
                r = Err(format!("edge {i} contains all extremal vertices but not everything"));
                break;
            }
        }
        r
    }));

    // A topset containing x and y contains all topvertices between them; a
    // topset containing a bottomvertex contains a full ray from it.
    out.push(report("hull-vertices-between-members", {
        let mut r = Ok(());
        for i in 0..sh.m() {
            let e = sh.edge(i);
            let hull = match sh.sign(i) {
                Sign::Top => t_set,
                Sign::Bottom => b_set,
            };
            if let (Some(lo), Some(hi)) = (e.min(), e.max()) {
                let inside = VertexSet::strictly_between(lo, hi).intersect(hull);
                if !inside.is_subset_of(e) {
                    r = Err(format!("edge {i} skips hull vertices between its members"));
                    break;
                }
            }
        }
        r
    }));
    out.push(report("opposite-hull-member-forces-ray", {
        let mut r = Ok(());
        'edges: for i in 0..sh.m() {
            let e = sh.edge(i);
            let opposite = match sh.sign(i) {
                Sign::Top => b_set,
                Sign::Bottom => t_set,
            };
            for x in e.intersect(opposite).iter() {
                let bigger = VertexSet::above(x).intersect(sh.full_set());
                let smaller = VertexSet::full(x);
                if !bigger.is_subset_of(e) && !smaller.is_subset_of(e) {
                    r = Err(format!("edge {i} holds opposite-hull vertex {x} but neither ray"));
                    break 'edges;
                }
            }
        }
        r
    }));

    // Deleting a non-hull vertex leaves that hull unchanged (re-ranked).
    out.push(report("hull-stable-under-interior-deletion", {
        let mut r = Ok(());
        for v in 0..n {
            let keep = sh.full_set().without(v);
            let sub = sh.induced(keep).expect("valid keep");
            let sub_profile = extremal_profile(&sub).expect("profile");
            if !t_set.contains(v) {
                let expect = t_set.compress(keep);
                if sub_profile.top_set() != expect {
                    r = Err(format!("deleting non-topvertex {v} changed T"));
                    break;
                }
            }
            if !b_set.contains(v) {
                let expect = b_set.compress(keep);
                if sub_profile.bottom_set() != expect {
                    r = Err(format!("deleting non-bottomvertex {v} changed B"));
                    break;
                }
            }
        }
        r
    }));

    // A non-topvertex strictly between consecutive topvertices is avoided by
    // some family member containing both neighbours.
    out.push(report("consecutive-hull-witness", {
        let mut r = Ok(());
        'outer: for w in profile.t.windows(2) {
            let (ti, ti1) = (w[0], w[1]);
            for v in (ti + 1)..ti1 {
                let found = (0..sh.m()).any(|i| {
                    let m = sh.member(i);
                    m.contains(ti) && m.contains(ti1) && !m.contains(v)
                });
                if !found {
                    r = Err(format!("no topset witness for {v} between {ti} and {ti1}"));
                    break 'outer;
                }
            }
        }
        if r.is_ok() {
            'outer2: for w in profile.b.windows(2) {
                let (bj, bj1) = (w[0], w[1]);
                for v in (bj + 1)..bj1 {
                    let found = (0..sh.m()).any(|i| {
                        let m = sh.member(i).complement(n);
                        m.contains(bj) && m.contains(bj1) && !m.contains(v)
                    });
                    if !found {
                        r = Err(format!("no bottomset witness for {v} between {bj} and {bj1}"));
                        break 'outer2;
                    }
                }
            }
        }
        r
    }));

    // Four vertices with one above and one below the same outer pair are all
    // extremal in their induced subhypergraph, on the stated hulls.
    out.push(report("opposed-inner-pair-all-extremal", {
        let mut r = Ok(());
        'outer: for a in 0..n {
            for c in (a + 2)..n {
                for b in (a + 1)..c {
                    let ob = orient_triple(sh, a, b, c).expect("triple");
                    if ob != Orientation::Above {
                        continue;
                    }
                    for d in (a + 1)..c {
                        if d == b {
                            continue;
                        }
                        let od = orient_triple(sh, a, d, c).expect("triple");
                        if od != Orientation::Below {
                            continue;
                        }
                        let q = VertexSet::from_ranks([a, b, c, d]);
                        let sub = sh.induced(q).expect("induced");
                        let p = extremal_profile(&sub).expect("profile");
                        let rank = |v: usize| q.iter().position(|u| u == v).unwrap();
                        if p.extremal_set().len() != 4
                            || !p.top_set().contains(rank(b))
                            || !p.bottom_set().contains(rank(d))
                        {
                            r = Err(format!("quadruple ({a},{b},{c},{d}) breaks the hull split"));
                            break 'outer;
                        }
                    }
                }
            }
        }
        r
    }));

    // Hull of the extremal vertices is everything; Krein-Milman on samples.
    out.push(report("extremal-hull-is-everything", {
        match conv(sh, extremal) {
            Ok(r) if r.hull == sh.full_set() => Ok(()),
            Ok(r) => Err(format!("Conv(E) = {}", r.hull)),
            Err(e) => Err(format!("{e}")),
        }
    }));

    let samples = sample_subsets(n, 256);
    out.push(report("krein-milman-on-samples", {
        let mut r = Ok(());
        for &q in &samples {
            let sub = sh.induced(q).expect("induced");
            if q.is_empty() {
                continue;
            }
            let sub_profile = extremal_profile(&sub).expect("profile");
            let orig: Vec<usize> = q.iter().collect();
            let e_orig =
                VertexSet::from_ranks(sub_profile.extremal_set().iter().map(|r| orig[r]));
            let hull_q = conv(sh, q).expect("conv").hull;
            let hull_e = conv(sh, e_orig).expect("conv").hull;
            if hull_q != hull_e {
                r = Err(format!("Conv({q}) = {hull_q} but Conv(E) = {hull_e}"));
                break;
            }
        }
        r
    }));

    out.push(report("hull-closure-laws", {
        let mut r = Ok(());
        for &q in &samples {
            let hull = conv(sh, q).expect("conv").hull;
            if !q.is_subset_of(hull) {
                r = Err(format!("{q} not inside its hull"));
                break;
            }
            let again = conv(sh, hull).expect("conv").hull;
            if again != hull {
                r = Err(format!("hull of {q} not idempotent"));
                break;
            }
            let bigger = conv(sh, q.union(hull)).expect("conv").hull;
            if !hull.is_subset_of(bigger) {
                r = Err("hull not monotone".to_string());
                break;
            }
        }
        r
    }));

    // Orientation "both" puts the middle vertex inside the pair hull.
    out.push(report("both-orientation-inside-pair-hull", {
        let mut r = Ok(());
        'outer: for a in 0..n {
            for c in (a + 2)..n {
                for b in (a + 1)..c {
                    let o = orient_triple(sh, a, b, c).expect("triple");
                    if o == Orientation::Both
                        && !conv_contains(sh, VertexSet::from_ranks([a, c]), b)
                    {
                        r = Err(format!("{b} both-oriented but outside Conv({{{a},{c}}})"));
                        break 'outer;
                    }
                }
            }
        }
        r
    }));

    out.push(report("strongly-inside-implies-hull-member", {
        let mut r = Ok(());
        'outer: for &q in samples.iter().take(64) {
            for v in 0..n {
                if q.contains(v) {
                    continue;
                }
                if is_strongly_inside(sh, v, q).expect("query") && !conv_contains(sh, q, v) {
                    r = Err(format!("{v} strongly inside {q} but outside its hull"));
                    break 'outer;
                }
            }
        }
        r
    }));

    // The inherited signature stays valid on induced subhypergraphs.
    out.push(report("induced-keeps-signature-valid", {
        let mut r = Ok(());
        for &q in samples.iter().take(64) {
            let sub = sh.induced(q).expect("induced");
            if check_aba_free(&sub.underlying_family()).is_some() {
                r = Err(format!("induced on {q} loses validity"));
                break;
            }
        }
        r
    }));

    out.push(report("ordered-recognizer-accepts", {
        match recognize_ordered(sh.base()) {
            Ok(_) => Ok(()),
            Err(_) => Err("recognizer rejected the edge family".to_string()),
        }
    }));

    out
}

/// True iff every invariant passed.
pub fn all_passed(reports: &[InvariantReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
