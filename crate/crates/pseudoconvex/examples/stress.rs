//! One-off large-scale stress sweep (not part of the test suite).
use pseudoconvex::convexity::{conv_contains, is_strongly_inside};
use pseudoconvex::extension::{apply_vertex_insertion, discrete_levi, helly_extend};
use pseudoconvex::generators::{random_instance, random_instance_with_common_point};
use pseudoconvex::hypergraph::Sign;
use pseudoconvex::set::VertexSet;
use pseudoconvex::theorems::{caratheodory_witness, radon_partition, separate, steinitz_witness, SeparationOutcome, DoubleHullWitness};
use pseudoconvex::verify::verify_signed;
use pseudoconvex::error::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let t0 = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xFFAA);

    // 2000-instance invariant sweep.
    let mut count = 0;
    for seed in 0..2000u64 {
        let n = 3 + (seed % 10) as usize;
        let m = 1 + (seed % 14) as usize;
        let sh = random_instance(n, m, seed).unwrap();
        for r in verify_signed(&sh) {
            assert!(r.passed, "seed {seed}: {} {:?}", r.name, r.detail);
        }
        count += 1;
    }
    println!("invariants: {count} instances [{:?}]", t0.elapsed());

    // Radon on larger n.
    let t = std::time::Instant::now();
    let mut quads = 0;
    for seed in 0..40u64 {
        let sh = random_instance(12, 14, 7000 + seed).unwrap();
        for a in 0..sh.n() { for b in (a+1)..sh.n() { for c in (b+1)..sh.n() { for d in (c+1)..sh.n() {
            let q = VertexSet::from_ranks([a,b,c,d]);
            let r = radon_partition(&sh, q).unwrap();
            let ext = apply_vertex_insertion(&sh, &r.insertion).unwrap();
            let pos = r.insertion.position;
            assert!(conv_contains(&ext, r.part1.shift_up_at(pos), pos));
            assert!(conv_contains(&ext, r.part2.shift_up_at(pos), pos));
            quads += 1;
        }}}}
    }
    println!("radon: {quads} quadruples on n=12 [{:?}]", t.elapsed());

    // Separation sweep.
    let t = std::time::Instant::now();
    let (mut pos_n, mut neg_n) = (0, 0);
    for seed in 0..600u64 {
        let sh = random_instance(8, 10, 9000 + seed).unwrap();
        let full = sh.full_set();
        let a = VertexSet(rng.gen::<u128>()).intersect(full);
        let b = VertexSet(rng.gen::<u128>()).intersect(full).difference(a);
        match separate(&sh, a, b).unwrap() {
            SeparationOutcome::Separated(s) => {
                assert!(pseudoconvex::theorems::separates(s.edge, a, b));
                assert!(sh.with_edge(s.edge, s.sign).is_ok());
                pos_n += 1;
            }
            SeparationOutcome::CannotSeparate(cert) => {
                let (da, db) = (cert.subset.intersect(a), cert.subset.intersect(b));
                match cert.witness {
                    DoubleHullWitness::ExistingVertex(v) => {
                        assert!(conv_contains(&sh, da, v) && conv_contains(&sh, db, v));
                    }
                    DoubleHullWitness::Insertion(ins) => {
                        let ext = apply_vertex_insertion(&sh, &ins).unwrap();
                        let p = ins.position;
                        assert!(conv_contains(&ext, da.shift_up_at(p), p));
                        assert!(conv_contains(&ext, db.shift_up_at(p), p));
                    }
                }
                neg_n += 1;
            }
        }
    }
    println!("separation: {pos_n} separated, {neg_n} certified [{:?}]", t.elapsed());

    // Caratheodory + Steinitz big sweep.
    let t = std::time::Instant::now();
    let mut caras = 0;
    for seed in 0..800u64 {
        let sh = random_instance(10, 14, 11000 + seed).unwrap();
        for _ in 0..30 {
            let q = VertexSet(rng.gen::<u128>()).intersect(sh.full_set());
            if q.len() < 3 { continue; }
            let v = rng.gen_range(0..sh.n());
            let q = q.without(v);
            if !is_strongly_inside(&sh, v, q).unwrap() { continue; }
            let w = caratheodory_witness(&sh, v, q).unwrap();
            assert!(w.members.len() <= 3);
            assert!(conv_contains(&sh, VertexSet::from_ranks(w.members.iter().copied()), v));
            let s = steinitz_witness(&sh, v, q).unwrap();
            assert!(s.len() <= 4 && s.is_subset_of(q));
            assert!(is_strongly_inside(&sh, v, s).unwrap());
            caras += 1;
        }
    }
    println!("caratheodory+steinitz: {caras} queries [{:?}]", t.elapsed());

    // Helly sweep on anchored instances with richer targets (subfamilies).
    let t = std::time::Instant::now();
    let mut hellys = 0;
    for seed in 0..300u64 {
        let sh = random_instance_with_common_point(9, 10, 13000 + seed).unwrap();
        // Random subfamilies as targets: all contain the anchor, so every
        // triple of their intersections meets.
        let k = 2 + (seed % 4) as usize;
        let targets: Vec<Vec<usize>> = (0..k)
            .map(|_| {
                (0..sh.m()).filter(|_| rng.gen::<bool>()).collect::<Vec<_>>()
            })
            .collect();
        match helly_extend(&sh, &targets) {
            Ok((ins, rank)) => {
                let ext = apply_vertex_insertion(&sh, &ins).unwrap();
                for sub in &targets {
                    for &i in sub {
                        assert!(ext.edge(i).contains(rank));
                    }
                }
                hellys += 1;
            }
            Err(Error::PremiseViolated(_)) => unreachable!("anchored premise"),
            Err(e) => panic!("seed {seed}: {e}"),
        }
    }
    println!("helly subfamilies: {hellys} extensions [{:?}]", t.elapsed());

    // Levi on large instances.
    let t = std::time::Instant::now();
    for seed in 0..300u64 {
        let sh = random_instance(14, 16, 15000 + seed).unwrap();
        let p = rng.gen_range(0..sh.n());
        let mut q = rng.gen_range(0..sh.n());
        while q == p { q = rng.gen_range(0..sh.n()); }
        let r = discrete_levi(&sh, p, q).unwrap();
        assert!(r.duplicated.with_edge(r.cross_edge, Sign::Top).is_ok());
    }
    println!("levi: 300 large triples [{:?}]", t.elapsed());

    println!("total [{:?}]", t0.elapsed());
}
