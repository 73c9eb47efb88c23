//! Shared test oracles and corpus builders. Every oracle here is written as
//! plainly as possible and stays independent of the implementation paths it
//! cross-checks.

#![allow(dead_code)]

use pseudoconvex::convexity::conv_contains;
use pseudoconvex::extremal::extremal_profile;
use pseudoconvex::generators::{random_instance, random_instance_with_common_point};
use pseudoconvex::hypergraph::{Hypergraph, Sign, SignedHypergraph};
use pseudoconvex::recognition::AbaOccurrence;
use pseudoconvex::set::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// O(m² n³) reference ABA test: every ordered edge pair, every vertex
/// triple, straight from the definition. Iteration order matches the
/// library's lexicographically-first contract.
pub fn naive_aba(h: &Hypergraph) -> Option<AbaOccurrence> {
    let n = h.n();
    let m = h.m();
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            let (ea, eb) = (h.edge(a), h.edge(b));
            for x in 0..n {
                for y in (x + 1)..n {
                    for z in (y + 1)..n {
                        let in_a_only = |v: usize| ea.contains(v) && !eb.contains(v);
                        let in_b_only = |v: usize| eb.contains(v) && !ea.contains(v);
                        if in_a_only(x) && in_b_only(y) && in_a_only(z) {
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
            }
        }
    }
    None
}

/// Whether some of the `2^m` signatures makes the family ABA-free, each
/// candidate checked by the pairwise tester.
pub fn brute_force_signature_exists(h: &Hypergraph) -> bool {
    assert!(h.m() <= 20, "brute signature search capped");
    let n = h.n();
    for bits in 0u64..(1 << h.m()) {
        let members: Vec<VertexSet> = (0..h.m())
            .map(|i| {
                if bits >> i & 1 == 1 {
                    h.edge(i)
                } else {
                    h.edge(i).complement(n)
                }
            })
            .collect();
        let family = Hypergraph::new(n, members).unwrap();
        if pseudoconvex::check_aba_free(&family).is_none() {
            return true;
        }
    }
    false
}

/// Uniform random unsigned hypergraph (arbitrary edge masks).
pub fn random_raw_hypergraph(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Hypergraph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_m);
    let full = VertexSet::full(n);
    let edges = (0..m)
        .map(|_| VertexSet(rng.gen::<u128>()).intersect(full))
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

/// The main seeded corpus: halfplane-generated instances, always recognized
/// under the x-order by construction.
pub fn corpus(count: usize, max_n: usize, max_m: usize, master_seed: u64) -> Vec<SignedHypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(3..=max_n);
            let m = rng.gen_range(1..=max_m);
            let seed = rng.gen::<u64>();
            random_instance(n, m, seed).expect("corpus instance")
        })
        .collect()
}

/// Corpus variant whose instances all have a vertex common to every edge, so
/// the triple-intersection premises hold.
pub fn anchored_corpus(
    count: usize,
    max_n: usize,
    max_m: usize,
    master_seed: u64,
) -> Vec<SignedHypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(3..=max_n);
            let m = rng.gen_range(1..=max_m);
            let seed = rng.gen::<u64>();
            random_instance_with_common_point(n, m, seed).expect("anchored instance")
        })
        .collect()
}

/// Extremal vertices of the induced subhypergraph on `q`, in original ranks.
pub fn extremal_of(sh: &SignedHypergraph, q: VertexSet) -> VertexSet {
    let sub = sh.induced(q).expect("induced");
    let profile = extremal_profile(&sub).expect("profile");
    let orig: Vec<usize> = q.iter().collect();
    VertexSet::from_ranks(profile.extremal_set().iter().map(|r| orig[r]))
}

/// Brute-force Caratheodory oracle: is there a subset of at most 3 extremal
/// vertices of `q` whose hull contains `v`? Returns the first one found.
pub fn brute_caratheodory(
    sh: &SignedHypergraph,
    v: usize,
    q: VertexSet,
) -> Option<Vec<usize>> {
    let extremal: Vec<usize> = extremal_of(sh, q).iter().collect();
    let k = extremal.len();
    for &x in &extremal {
        if conv_contains(sh, VertexSet::singleton(x), v) {
            return Some(vec![x]);
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let s = VertexSet::from_ranks([extremal[i], extremal[j]]);
            if conv_contains(sh, s, v) {
                return Some(vec![extremal[i], extremal[j]]);
            }
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            for l in (j + 1)..k {
                let s = VertexSet::from_ranks([extremal[i], extremal[j], extremal[l]]);
                if conv_contains(sh, s, v) {
                    return Some(vec![extremal[i], extremal[j], extremal[l]]);
                }
            }
        }
    }
    None
}

/// Direct cup test from the definition: every vertex of `a` is a
/// bottomvertex of the induced subhypergraph.
pub fn is_cup_by_definition(sh: &SignedHypergraph, a: VertexSet) -> bool {
    let sub = sh.induced(a).expect("induced");
    let profile = extremal_profile(&sub).expect("profile");
    profile.bottom_set() == VertexSet::full(a.len())
}

pub fn is_cap_by_definition(sh: &SignedHypergraph, a: VertexSet) -> bool {
    let sub = sh.induced(a).expect("induced");
    let profile = extremal_profile(&sub).expect("profile");
    profile.top_set() == VertexSet::full(a.len())
}

/// All `k`-subsets of `0..n` as vertex sets, lexicographic.
pub fn k_subsets(n: usize, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(VertexSet::from_ranks(idx.iter().copied()));
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Signed hypergraph literal for hand-built fixtures.
pub fn signed_fixture(n: usize, edges: &[(&[usize], Sign)]) -> SignedHypergraph {
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
