//! Υ as an exact piecewise-linear function.
//!
//! For `t` in `[0, 2]` let `f_t(i, j) = (1 - t/2) i + (t/2) j` and let
//! `ν(t)` be the least `f_t`-level of a grading-0 cycle that is not a
//! boundary. Then `Υ(t) = -2 ν(t)`. Between two consecutive values of `t` at
//! which some pair of grading-0 elements swaps order under `f_t`, the sweep
//! that computes `ν(t)` makes the same choices, so `ν` is linear there.

use std::collections::HashMap;

use num_rational::Rational64;

use super::knot_complex;
use crate::cfk::BifilteredComplex;
use crate::error::{Error, Result};
use crate::homology::{first_essential_cycle, Slice, Slices};
use crate::pl::PLFunction;

pub const DEFAULT_CAP: usize = 24;

/// Hard limit for [`upsilon_brute_oracle`] whatever the configured cap.
pub const MAX_ENUMERATION: usize = 40;

/// Limits for the Υ computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UpsilonConfig {
    /// Largest number of grading-0 lattice elements accepted.
    pub cap: usize,
}

impl Default for UpsilonConfig {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

fn level(t: Rational64, i: i64, j: i64) -> Rational64 {
    let half = t / 2;
    (Rational64::from_integer(1) - half) * i + half * j
}

fn check_cap(size: usize, config: &UpsilonConfig) -> Result<()> {
    if size > config.cap {
        return Err(Error::CapExceeded(format!(
            "{size} grading-0 generators exceed the cap of {}; compute the factors separately and \
             add them with upsilon_knot",
            config.cap
        )));
    }
    Ok(())
}

struct Engine<'a> {
    slices: Slices<'a>,
    upper: Slice,
    middle: Slice,
    lower: Slice,
}

impl<'a> Engine<'a> {
    fn new(c: &'a BifilteredComplex) -> Self {
        let slices = Slices::new(c);
        let all = |_: i64, _: i64| true;
        let (upper, middle, lower) = (
            slices.slice(1, all),
            slices.slice(0, all),
            slices.slice(-1, all),
        );
        Self {
            slices,
            upper,
            middle,
            lower,
        }
    }

    fn nu(&self, t: Rational64) -> Result<Rational64> {
        let els = &self.middle.elements;
        let mut order: Vec<usize> = (0..els.len()).collect();
        order.sort_by_key(|&k| (level(t, els[k].i, els[k].j), k));
        let (_, k) =
            first_essential_cycle(&self.slices, &self.upper, &self.middle, &self.lower, &order)
                .ok_or_else(|| Error::NotKnotComplex("homology vanishes in grading 0".into()))?;
        let e = &els[order[k]];
        Ok(level(t, e.i, e.j))
    }

    /// `t` in `(0, 2)` where two elements have equal `f_t`-level.
    fn crossings(&self) -> Vec<Rational64> {
        let els = &self.middle.elements;
        let mut out = vec![Rational64::from_integer(0), Rational64::from_integer(2)];
        for (a, p) in els.iter().enumerate() {
            for q in &els[a + 1..] {
                // i + (t/2)(j - i) = i' + (t/2)(j' - i')
                let denom = (p.j - p.i) - (q.j - q.i);
                if denom != 0 {
                    let t = Rational64::new(2 * (q.i - p.i), denom);
                    if t > Rational64::from_integer(0) && t < Rational64::from_integer(2) {
                        out.push(t);
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Υ of a knot-like complex with at most `config.cap` grading-0 lattice
/// elements.
pub fn upsilon(c: &BifilteredComplex, config: &UpsilonConfig) -> Result<PLFunction> {
    let c = knot_complex(c)?;
    let engine = Engine::new(&c);
    check_cap(engine.middle.len(), config)?;
    let points = engine
        .crossings()
        .into_iter()
        .map(|t| Ok((t, engine.nu(t)? * -2)))
        .collect::<Result<Vec<_>>>()?;
    PLFunction::new(points)
}

/// Υ at a single `t` by enumerating every subset of the grading-0 lattice
/// elements. Shares no linear algebra with [`upsilon`].
pub fn upsilon_brute_oracle(
    c: &BifilteredComplex,
    t: Rational64,
    config: &UpsilonConfig,
) -> Result<Rational64> {
    Ok(upsilon_brute_oracle_many(c, &[t], config)?[0])
}

/// [`upsilon_brute_oracle`] at several points with one enumeration.
pub fn upsilon_brute_oracle_many(
    c: &BifilteredComplex,
    ts: &[Rational64],
    config: &UpsilonConfig,
) -> Result<Vec<Rational64>> {
    if ts
        .iter()
        .any(|&t| t < Rational64::from_integer(0) || t > Rational64::from_integer(2))
    {
        return Err(Error::Argument("t must lie in [0, 2]".into()));
    }
    let c = knot_complex(c)?;
    let size = c
        .generators()
        .iter()
        .filter(|g| g.maslov.rem_euclid(2) == 0)
        .count();
    check_cap(size, config)?;
    if size > MAX_ENUMERATION {
        return Err(Error::CapExceeded(format!(
            "subset enumeration is limited to {MAX_ENUMERATION} grading-0 generators"
        )));
    }
    let best = Brute::new(&c).min_levels(ts);
    best.into_iter()
        .map(|b| {
            b.map(|nu| nu * -2)
                .ok_or_else(|| Error::NotKnotComplex("no essential cycle".into()))
        })
        .collect()
}

/// Grading-0 lattice elements as bits; boundaries as bitsets over grading −1.
struct Brute {
    /// `(i, j)` of each grading-0 element.
    positions: Vec<(i64, i64)>,
    /// Boundary of each grading-0 element, over grading −1 elements.
    down: Vec<Vec<u64>>,
    /// Boundaries of grading-1 elements, as masks over grading-0 elements.
    up: Vec<u64>,
}

impl Brute {
    fn new(c: &BifilteredComplex) -> Self {
        // U^n x has grading M - 2n and sits at (-n, A - n)
        let translate = |m: i64, grading: i64| (m - grading) / 2;
        let in_grading = |grading: i64| -> Vec<usize> {
            (0..c.len())
                .filter(|&k| (c.generator(k).maslov - grading).rem_euclid(2) == 0)
                .collect()
        };
        let zero = in_grading(0);
        let minus = in_grading(-1);
        let one = in_grading(1);
        let pos_zero: HashMap<usize, usize> =
            zero.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        let pos_minus: HashMap<usize, usize> =
            minus.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        let positions = zero
            .iter()
            .map(|&g| {
                let gen = c.generator(g);
                let n = translate(gen.maslov, 0);
                (-n, gen.alexander - n)
            })
            .collect();
        let words = minus.len().div_ceil(64).max(1);
        let mut down = vec![vec![0u64; words]; zero.len()];
        let mut up = vec![0u64; one.len()];
        let one_pos: HashMap<usize, usize> = one.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        for a in c.arrows() {
            if let (Some(&s), Some(&t)) = (pos_zero.get(&a.from), pos_minus.get(&a.to)) {
                down[s][t / 64] ^= 1 << (t % 64);
            }
            if let (Some(&s), Some(&t)) = (one_pos.get(&a.from), pos_zero.get(&a.to)) {
                up[s] ^= 1 << t;
            }
        }
        Self {
            positions,
            down,
            up,
        }
    }

    /// For each `t`, the least over non-boundary cycles of the largest
    /// `f_t`-level among its elements.
    fn min_levels(&self, ts: &[Rational64]) -> Vec<Option<Rational64>> {
        let n = self.positions.len();
        // echelon basis of the boundaries, keyed by highest bit
        let mut basis: Vec<u64> = Vec::new();
        for &v in &self.up {
            let mut v = v;
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        let is_boundary = |mut v: u64| {
            for &b in &basis {
                v = v.min(v ^ b);
            }
            v == 0
        };
        let levels: Vec<Vec<Rational64>> = ts
            .iter()
            .map(|&t| {
                self.positions
                    .iter()
                    .map(|&(i, j)| level(t, i, j))
                    .collect()
            })
            .collect();
        let mut best: Vec<Option<Rational64>> = vec![None; ts.len()];
        let words = self.down.first().map_or(1, Vec::len);
        let mut boundary = vec![0u64; words];
        let mut subset = 0u64;
        // Gray code: step k flips the lowest set bit of k
        for k in 1u64..(1u64 << n) {
            let bit = k.trailing_zeros() as usize;
            subset ^= 1 << bit;
            boundary
                .iter_mut()
                .zip(&self.down[bit])
                .for_each(|(a, b)| *a ^= b);
            if boundary.iter().any(|&w| w != 0) || is_boundary(subset) {
                continue;
            }
            for (slot, lv) in best.iter_mut().zip(&levels) {
                let top = (0..n)
                    .filter(|&e| subset >> e & 1 == 1)
                    .map(|e| lv[e])
                    .max()
                    .expect("nonempty");
                if slot.is_none_or(|b| top < b) {
                    *slot = Some(top);
                }
            }
        }
        best
    }
}
