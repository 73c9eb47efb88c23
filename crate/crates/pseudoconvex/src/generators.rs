//! Exact-rational geometric generators: points-and-halfplanes ingestion,
//! seeded random instances, and the named constructions used throughout the
//! test suites.
//!
//! Sidedness is decided with exact rational arithmetic throughout; a single
//! rounded predicate would make every recognition oracle meaningless.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Sign, SignedHypergraph};
use crate::set::{VertexSet, MAX_VERTICES};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Which open side of the boundary line `ax + by + c = 0` the halfplane is.
/// `Above` is the side reached by increasing `y` (requires `b != 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

#[derive(Clone, Debug)]
pub struct Halfplane {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub side: Side,
}

impl Halfplane {
    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        &self.a * x + &self.b * y + &self.c
    }

    /// Whether the point lies strictly on the chosen side.
    fn admits(&self, x: &Rat, y: &Rat) -> bool {
        let v = self.eval(x, y);
        let upper = if self.b.is_positive() { v } else { -v };
        match self.side {
            Side::Above => upper.is_positive(),
            Side::Below => upper.is_negative(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct PointConfiguration {
    pub points: Vec<(Rat, Rat)>,
    pub lines: Vec<Halfplane>,
}

impl PointConfiguration {
    /// General-position invariants: pairwise distinct x coordinates,
    /// x-monotone boundaries, and no point on any line.
    pub fn validate(&self) -> Result<()> {
        for (i, (xi, _)) in self.points.iter().enumerate() {
            for (j, (xj, _)) in self.points.iter().enumerate().skip(i + 1) {
                if xi == xj {
                    return Err(Error::input(format!(
                        "points {i} and {j} share x = {xi}; shear the configuration first"
                    )));
                }
            }
        }
        for (l, line) in self.lines.iter().enumerate() {
            if line.b.is_zero() {
                return Err(Error::input(format!(
                    "line {l} is vertical (b = 0); boundaries must be x-monotone"
                )));
            }
            for (p, (x, y)) in self.points.iter().enumerate() {
                if line.eval(x, y).is_zero() {
                    return Err(Error::input(format!(
                        "point {p} lies on line {l}; no boundary incidences allowed"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Exact shear `x' = x + εy` (lines transformed to match) with ε chosen
    /// small enough to make all x distinct, keep every boundary x-monotone,
    /// and leave all sidedness values unchanged.
    pub fn sheared(&self) -> Result<PointConfiguration> {
        let mut eps: Rat = BigRational::one();
        for (i, (xi, yi)) in self.points.iter().enumerate() {
            for (j, (xj, yj)) in self.points.iter().enumerate().skip(i + 1) {
                if yi == yj {
                    if xi == xj {
                        return Err(Error::input(format!(
                            "points {i} and {j} coincide; cannot shear apart"
                        )));
                    }
                    continue;
                }
                let bound = ((xj - xi) / (yi - yj)).abs();
                if !bound.is_zero() && bound < eps {
                    eps = bound;
                }
            }
        }
        for line in &self.lines {
            if line.a.is_zero() {
                continue;
            }
            let bound = (&line.b / &line.a).abs();
            if !bound.is_zero() && bound < eps {
                eps = bound;
            }
        }
        let eps = eps / rat(2);
        let points = self
            .points
            .iter()
            .map(|(x, y)| (x + &eps * y, y.clone()))
            .collect();
        let lines = self
            .lines
            .iter()
            .map(|l| Halfplane {
                a: l.a.clone(),
                b: &l.b - &l.a * &eps,
                c: l.c.clone(),
                side: l.side,
            })
            .collect();
        Ok(PointConfiguration { points, lines })
    }
}

/// Build the signed hypergraph of a point configuration: vertices ordered by
/// x, one edge per halfplane (the points strictly on its side), signed top
/// for upper halfplanes and bottom for lower ones. The output always passes
/// the recognizer under this order; the constructor enforces it.
pub fn from_halfplanes(pc: &PointConfiguration) -> Result<SignedHypergraph> {
    pc.validate()?;
    if pc.points.len() > MAX_VERTICES {
        return Err(Error::SizeGuard {
            what: "from_halfplanes",
            unit: "points",
            limit: MAX_VERTICES,
            actual: pc.points.len(),
        });
    }
    let mut order: Vec<usize> = (0..pc.points.len()).collect();
    order.sort_by(|&i, &j| pc.points[i].0.cmp(&pc.points[j].0));
    let mut edges = Vec::with_capacity(pc.lines.len());
    let mut signs = Vec::with_capacity(pc.lines.len());
    for line in &pc.lines {
        let mut e = VertexSet::EMPTY;
        for (rank, &p) in order.iter().enumerate() {
            let (x, y) = &pc.points[p];
            if line.admits(x, y) {
                e.insert(rank);
            }
        }
        edges.push(e);
        signs.push(match line.side {
            Side::Above => Sign::Top,
            Side::Below => Sign::Bottom,
        });
    }
    let base = Hypergraph::new(pc.points.len(), edges)?;
    SignedHypergraph::new(base, signs)
        .map_err(|e| Error::Internal(format!("halfplane instance rejected by recognizer: {e}")))
}

/// Deterministic random instance: `n` points with distinct integer x in
/// `[0, 4n]` and integer y in `[-4n, 4n]`, and `m` lines through random
/// point pairs offset by ±1/2 (so no incidence is possible), random side.
pub fn random_instance(n: usize, m: usize, seed: u64) -> Result<SignedHypergraph> {
    random_instance_impl(n, m, seed, false)
}

/// Variant whose edges all contain a common anchor vertex, so every
/// intersection premise holds. Used to exercise the Helly-type searches.
pub fn random_instance_with_common_point(n: usize, m: usize, seed: u64) -> Result<SignedHypergraph> {
    random_instance_impl(n, m, seed, true)
}

fn random_instance_impl(n: usize, m: usize, seed: u64, anchored: bool) -> Result<SignedHypergraph> {
    if n > MAX_VERTICES {
        return Err(Error::SizeGuard {
            what: "random_instance",
            unit: "points",
            limit: MAX_VERTICES,
            actual: n,
        });
    }
    if n == 0 {
        return SignedHypergraph::new(Hypergraph::empty(0), Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = 4 * n as i64;
    let mut xs: Vec<i64> = Vec::with_capacity(n);
    while xs.len() < n {
        let x = rng.gen_range(0..=span);
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    xs.sort_unstable();
    let points: Vec<(Rat, Rat)> = xs
        .iter()
        .map(|&x| (rat(x), rat(rng.gen_range(-span..=span))))
        .collect();
    let anchor = rng.gen_range(0..n);

    let mut lines = Vec::with_capacity(m);
    for _ in 0..m {
        let (a, b, c0) = if n >= 2 {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            while j == i {
                j = rng.gen_range(0..n);
            }
            let (xi, yi) = &points[i];
            let (xj, yj) = &points[j];
            let a = yj - yi;
            let b = xi - xj;
            let c = -(&a * xi + &b * yi);
            (a, b, c)
        } else {
            let a = rat(rng.gen_range(-3..=3));
            let b = rat(1);
            let (x0, y0) = &points[0];
            (a.clone(), b.clone(), -(&a * x0 + &b * y0))
        };
        let offset = if rng.gen::<bool>() {
            rat_frac(1, 2)
        } else {
            rat_frac(-1, 2)
        };
        let mut line = Halfplane {
            a,
            b,
            c: c0 + offset,
            side: Side::Above,
        };
        line.side = if anchored {
            let (ax, ay) = &points[anchor];
            let v = line.eval(ax, ay);
            let upper = if line.b.is_positive() { v } else { -v };
            if upper.is_positive() {
                Side::Above
            } else {
                Side::Below
            }
        } else if rng.gen::<bool>() {
            Side::Above
        } else {
            Side::Below
        };
        lines.push(line);
    }
    from_halfplanes(&PointConfiguration { points, lines })
}

// ---------------------------------------------------------------------------
// Complete halfplane hypergraphs on an exact point set.
// ---------------------------------------------------------------------------

/// The hypergraph defined by *every* halfplane on the given points (distinct
/// x required): each subset cut by some open halfplane appears once per
/// realizable sign. Subsets arise from lines through point pairs: the open
/// side plus any prefix or suffix of the collinear points along the line
/// (rotating the boundary around a pivot), plus the empty and full sets.
pub fn complete_halfplane_hypergraph(points: &[(Rat, Rat)]) -> Result<SignedHypergraph> {
    if points.len() > MAX_VERTICES {
        return Err(Error::SizeGuard {
            what: "complete_halfplane_hypergraph",
            unit: "points",
            limit: MAX_VERTICES,
            actual: points.len(),
        });
    }
    let n = points.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| points[i].0.cmp(&points[j].0));
    for w in order.windows(2) {
        if points[w[0]].0 == points[w[1]].0 {
            return Err(Error::input("complete halfplane hypergraph requires distinct x"));
        }
    }
    let pt = |rank: usize| -> &(Rat, Rat) { &points[order[rank]] };

    let mut family: std::collections::BTreeSet<(VertexSet, Sign)> = std::collections::BTreeSet::new();
    let full = VertexSet::full(n);
    for s in [Sign::Top, Sign::Bottom] {
        family.insert((VertexSet::EMPTY, s));
        family.insert((full, s));
    }

    let mut seen_lines: std::collections::BTreeSet<(Rat, Rat, Rat)> = std::collections::BTreeSet::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (xi, yi) = pt(i);
            let (xj, yj) = pt(j);
            let mut a = yj - yi;
            let mut b = xi - xj;
            let mut c = -(&a * xi + &b * yi);
            if b.is_negative() {
                a = -a;
                b = -b;
                c = -c;
            }
            // Canonical form so coincident pair-lines are handled once.
            let scale = if a.is_zero() { b.clone() } else { a.abs().min(b.clone()) };
            let key = (&a / &scale, &b / &scale, &c / &scale);
            if !seen_lines.insert(key) {
                continue;
            }
            let mut above = VertexSet::EMPTY;
            let mut below = VertexSet::EMPTY;
            let mut on_line: Vec<usize> = Vec::new();
            for r in 0..n {
                let (x, y) = pt(r);
                let v = &a * x + &b * y + &c;
                if v.is_positive() {
                    above.insert(r);
                } else if v.is_negative() {
                    below.insert(r);
                } else {
                    on_line.push(r);
                }
            }
            // on_line is ascending in rank, which is the along-line order
            // since the boundary is x-monotone.
            for (side_set, sign) in [(above, Sign::Top), (below, Sign::Bottom)] {
                for t in 0..=on_line.len() {
                    let prefix = VertexSet::from_ranks(on_line[..t].iter().copied());
                    let suffix = VertexSet::from_ranks(on_line[on_line.len() - t..].iter().copied());
                    family.insert((side_set.union(prefix), sign));
                    family.insert((side_set.union(suffix), sign));
                }
            }
        }
    }

    let (edges, signs): (Vec<VertexSet>, Vec<Sign>) = family.into_iter().unzip();
    let base = Hypergraph::new(n, edges)?;
    SignedHypergraph::new(base, signs)
        .map_err(|e| Error::Internal(format!("complete halfplane family rejected: {e}")))
}

// ---------------------------------------------------------------------------
// Named constructions.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub enum BuiltinInstance {
    Plain(Hypergraph),
    Signed(SignedHypergraph),
}

impl BuiltinInstance {
    pub fn hypergraph(&self) -> Hypergraph {
        match self {
            BuiltinInstance::Plain(h) => h.clone(),
            BuiltinInstance::Signed(sh) => sh.base().clone(),
        }
    }
}

/// The named instances: `no21` (four vertices, six pairwise-intersecting
/// edges), `no21plus` (a fifth vertex added to all six edges), `cara` (the
/// full set plus all co-size-2 subsets avoiding the middle vertex),
/// `hemisphere14`/`hemisphere15` (all proper nonempty subsets of four
/// vertices, without/with the full set), `convex_position` (the complete
/// halfplane hypergraph on points in convex position), and `arrangement`
/// (intersections and cell representatives of a random simple line
/// arrangement with `2k+1` lines, with its complete halfplane hypergraph).
pub fn builtin(name: &str, size: Option<usize>, seed: Option<u64>) -> Result<BuiltinInstance> {
    match name {
        "no21" => {
            let edges = [
                vec![0, 3],
                vec![0, 2],
                vec![2, 3],
                vec![0, 1, 3],
                vec![0, 1, 2],
                vec![1, 2, 3],
            ];
            Ok(BuiltinInstance::Plain(Hypergraph::new(
                4,
                edges.iter().map(|e| VertexSet::from_ranks(e.iter().copied())).collect(),
            )?))
        }
        "no21plus" => {
            // Order (a, b, c, v, w): the new vertex w joins all six edges.
            let edges = [
                vec![0, 1, 4],
                vec![0, 2, 4],
                vec![1, 2, 4],
                vec![0, 1, 3, 4],
                vec![0, 2, 3, 4],
                vec![1, 2, 3, 4],
            ];
            Ok(BuiltinInstance::Plain(Hypergraph::new(
                5,
                edges.iter().map(|e| VertexSet::from_ranks(e.iter().copied())).collect(),
            )?))
        }
        "cara" => {
            let n = size.unwrap_or(5);
            if n < 3 {
                return Err(Error::input("cara requires at least 3 vertices"));
            }
            let v = n / 2;
            let full = VertexSet::full(n);
            // S plus every size-(n-2) subset avoiding v, i.e. S \ {v, x}.
            let mut edges = vec![full];
            for x in 0..n {
                if x != v {
                    edges.push(full.without(v).without(x));
                }
            }
            let signs = vec![Sign::Top; edges.len()];
            Ok(BuiltinInstance::Signed(SignedHypergraph::new(
                Hypergraph::new(n, edges)?,
                signs,
            )?))
        }
        "hemisphere14" | "hemisphere15" => {
            let mut edges: Vec<VertexSet> = (1u128..15).map(VertexSet).collect();
            if name == "hemisphere15" {
                edges.push(VertexSet::full(4));
            }
            Ok(BuiltinInstance::Plain(Hypergraph::new(4, edges)?))
        }
        "convex_position" => {
            let n = size.unwrap_or(5);
            let points: Vec<(Rat, Rat)> = (0..n as i64)
                .map(|i| (rat(i), rat(i * (n as i64 - 1 - i))))
                .collect();
            Ok(BuiltinInstance::Signed(complete_halfplane_hypergraph(&points)?))
        }
        "arrangement" => {
            let k = size.unwrap_or(2);
            if k == 0 || k > 4 {
                return Err(Error::input("arrangement requires 1 <= k <= 4"));
            }
            Ok(BuiltinInstance::Signed(arrangement(k, seed.unwrap_or(0))?))
        }
        other => Err(Error::input(format!("unknown builtin '{other}'"))),
    }
}

struct Line {
    a: Rat,
    b: Rat,
    c: Rat,
}

impl Line {
    fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        &self.a * x + &self.b * y + &self.c
    }
}

/// `2k+1` lines in general position; the vertex set is all pairwise
/// intersection points plus one representative point inside each cell of the
/// arrangement, then the complete halfplane hypergraph on those points.
fn arrangement(k: usize, seed: u64) -> Result<SignedHypergraph> {
    let m = 2 * k + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lines = loop {
        let candidate: Vec<Line> = (0..m)
            .map(|_| Line {
                a: rat(rng.gen_range(-6..=6)),
                b: rat(rng.gen_range(1..=6)),
                c: rat_frac(rng.gen_range(-60..=60), 1) + rat_frac(1, 3),
            })
            .collect();
        if arrangement_is_simple(&candidate) {
            break candidate;
        }
    };

    // Pairwise intersections.
    let mut vertices: Vec<(Rat, Rat, usize, usize)> = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let (x, y) = intersect(&lines[i], &lines[j]);
            vertices.push((x, y, i, j));
        }
    }

    // One representative per cell: perturb each intersection point along the
    // four sector directions spanned by its two incident lines.
    let mut cells: std::collections::BTreeMap<Vec<bool>, (Rat, Rat)> =
        std::collections::BTreeMap::new();
    for (x, y, i, j) in &vertices {
        let di = (lines[*i].b.clone(), -lines[*i].a.clone());
        let dj = (lines[*j].b.clone(), -lines[*j].a.clone());
        for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let dx = rat(sx) * &di.0 + rat(sy) * &dj.0;
            let dy = rat(sx) * &di.1 + rat(sy) * &dj.1;
            // Step short enough that no non-incident line is crossed.
            let mut t = rat_frac(1, 2);
            for (h, line) in lines.iter().enumerate() {
                if h == *i || h == *j {
                    continue;
                }
                let v = line.eval(x, y).abs();
                let d = (&line.a * &dx + &line.b * &dy).abs();
                if !d.is_zero() {
                    let bound = v / d / rat(2);
                    if bound < t {
                        t = bound;
                    }
                }
            }
            let px = x + &t * &dx;
            let py = y + &t * &dy;
            let sig: Vec<bool> = lines.iter().map(|l| l.eval(&px, &py).is_positive()).collect();
            debug_assert!(lines.iter().all(|l| !l.eval(&px, &py).is_zero()));
            cells.entry(sig).or_insert((px, py));
        }
    }
    // A simple arrangement of m pairwise-crossing lines has exactly
    // 1 + m + C(m,2) cells, and each has a vertex on its boundary.
    debug_assert_eq!(cells.len(), 1 + m + m * (m - 1) / 2);

    let mut points: Vec<(Rat, Rat)> = vertices.into_iter().map(|(x, y, _, _)| (x, y)).collect();
    points.extend(cells.into_values());

    let pc = PointConfiguration {
        points,
        lines: Vec::new(),
    }
    .sheared()?;
    complete_halfplane_hypergraph(&pc.points)
}

fn intersect(l1: &Line, l2: &Line) -> (Rat, Rat) {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    let x = (&l1.b * &l2.c - &l2.b * &l1.c) / &det;
    let y = (&l2.a * &l1.c - &l1.a * &l2.c) / &det;
    (x, y)
}

fn arrangement_is_simple(lines: &[Line]) -> bool {
    let m = lines.len();
    for i in 0..m {
        for j in (i + 1)..m {
            let det = &lines[i].a * &lines[j].b - &lines[j].a * &lines[i].b;
            if det.is_zero() {
                return false;
            }
        }
    }
    // No three concurrent and all intersection points distinct.
    let mut pts: Vec<(Rat, Rat)> = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let p = intersect(&lines[i], &lines[j]);
            for (h, line) in lines.iter().enumerate() {
                if h != i && h != j && line.eval(&p.0, &p.1).is_zero() {
                    return false;
                }
            }
            if pts.contains(&p) {
                return false;
            }
            pts.push(p);
        }
    }
    true
}
