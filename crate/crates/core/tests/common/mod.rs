#![allow(dead_code)]

use cfkcalc::cfk::{tensor, BifilteredComplex};
use cfkcalc::invariants::DEFAULT_CAP;
use cfkcalc::knots::{build, KnotExpr};
use num_rational::Rational64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub struct Knot {
    pub expr: KnotExpr,
    pub complex: BifilteredComplex,
}

impl Knot {
    pub fn new(expr: KnotExpr) -> Self {
        let complex = build(&expr).expect("corpus knots build");
        Self { expr, complex }
    }
}

/// Coprime `(p, q)` with `2 <= p < q <= 7`.
pub fn torus_pairs() -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in 2..=7 {
        for q in p + 1..=7 {
            if num_integer::gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

/// The torus knots above and the (2,5)-cable of T(2,3).
pub fn positive_knots() -> Vec<Knot> {
    let mut out: Vec<Knot> = torus_pairs()
        .into_iter()
        .map(|(p, q)| Knot::new(KnotExpr::Torus(p, q)))
        .collect();
    out.push(Knot::new(KnotExpr::cable(2, 5, KnotExpr::Torus(2, 3))));
    out
}

/// The positive knots and their mirrors.
pub fn signed_knots() -> Vec<Knot> {
    let pos = positive_knots();
    let mirrors: Vec<Knot> = pos
        .iter()
        .map(|k| Knot::new(KnotExpr::mirror(k.expr.clone())))
        .collect();
    pos.into_iter().chain(mirrors).collect()
}

pub fn grading_zero(c: &BifilteredComplex) -> usize {
    c.generators()
        .iter()
        .filter(|g| g.maslov.rem_euclid(2) == 0)
        .count()
}

pub struct Pair<'a> {
    pub first: &'a Knot,
    pub second: &'a Knot,
    pub complex: BifilteredComplex,
}

/// Sums `K # J` of signed corpus knots, unordered and allowing `K = J`, whose
/// complex has at most the default cap of grading-0 generators.
pub fn pairs_under_cap(knots: &[Knot]) -> Vec<Pair<'_>> {
    let mut out = Vec::new();
    for (a, first) in knots.iter().enumerate() {
        for second in &knots[a..] {
            if grading_zero(&first.complex) * grading_zero(&second.complex) > 4 * DEFAULT_CAP {
                continue;
            }
            let complex = tensor(&first.complex, &second.complex);
            if grading_zero(&complex) <= DEFAULT_CAP {
                out.push(Pair {
                    first,
                    second,
                    complex,
                });
            }
        }
    }
    out
}

/// `count` rationals in `[0, 2]` with denominators up to 97, from a fixed seed.
pub fn random_ts(seed: u64, count: usize) -> Vec<Rational64> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=97i64);
            Rational64::new(rng.gen_range(0..=2 * d), d)
        })
        .collect()
}
