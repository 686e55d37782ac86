//! Concordance invariants of knot-like complexes: τ, ε, a₁ and Υ.
//!
//! All entry points first cancel arrows of zero length, so any valid complex
//! is accepted; the invariants are those of its reduced model.

mod upsilon;

use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use crate::cfk::BifilteredComplex;
use crate::error::{Error, Result};
use crate::f2::{self, SparseVec};
use crate::homology::{first_essential_cycle, Slice, Slices};
use crate::knots::{self, KnotExpr};
use crate::pl::format_rational;
use crate::reduce::{self, cancel_zero_arrows, StandardForm};

pub use crate::pl::PLFunction;
pub use upsilon::{
    upsilon, upsilon_brute_oracle, upsilon_brute_oracle_many, UpsilonConfig, DEFAULT_CAP,
};

/// The {−1, 0, +1}-valued invariant ε.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Epsilon {
    Minus,
    Zero,
    Plus,
}

impl Epsilon {
    pub fn value(self) -> i64 {
        match self {
            Epsilon::Minus => -1,
            Epsilon::Zero => 0,
            Epsilon::Plus => 1,
        }
    }

    pub fn negate(self) -> Self {
        match self {
            Epsilon::Minus => Epsilon::Plus,
            Epsilon::Zero => Epsilon::Zero,
            Epsilon::Plus => Epsilon::Minus,
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn knot_complex(c: &BifilteredComplex) -> Result<BifilteredComplex> {
    if c.is_empty() {
        return Err(Error::NotKnotComplex("empty complex".into()));
    }
    Ok(cancel_zero_arrows(c))
}

/// The column `i = 0` in grading 0 and its vertical homology generator.
struct Column<'a> {
    slices: Slices<'a>,
    middle: Slice,
    upper: Slice,
    /// Least Alexander level carrying vertical homology.
    tau: i64,
    /// A cycle at level `tau` generating vertical homology, as indices into
    /// `middle`.
    x0: SparseVec,
}

impl<'a> Column<'a> {
    fn new(c: &'a BifilteredComplex) -> Result<Self> {
        let slices = Slices::new(c);
        let column = |i: i64, _: i64| i == 0;
        let (upper, middle, lower) = (
            slices.slice(1, column),
            slices.slice(0, column),
            slices.slice(-1, column),
        );
        let mut order: Vec<usize> = (0..middle.len()).collect();
        order.sort_by_key(|&k| (middle.elements[k].j, k));
        let (x0, k) =
            first_essential_cycle(&slices, &upper, &middle, &lower, &order).ok_or_else(|| {
                Error::NotKnotComplex("vertical homology vanishes in grading 0".into())
            })?;
        let tau = middle.elements[order[k]].j;
        let column = Self {
            slices,
            middle,
            upper,
            tau,
            x0,
        };
        column.check_rank_one(&lower)?;
        Ok(column)
    }

    fn check_rank_one(&self, lower: &Slice) -> Result<()> {
        let h = crate::homology::MiddleHomology::compute(
            &self.slices,
            &self.upper,
            &self.middle,
            lower,
        );
        match h.dim() {
            1 => Ok(()),
            d => Err(Error::NotKnotComplex(format!(
                "vertical homology has rank {d} in grading 0"
            ))),
        }
    }

    /// Whether `F(x0)` is a boundary in the hook `min(i, j - tau) = 0`,
    /// optionally truncated to `i <= max_i`.
    fn x0_dies_in_hook(&self, max_i: Option<i64>) -> bool {
        let tau = self.tau;
        let inside = move |i: i64, j: i64| i.min(j - tau) == 0 && max_i.is_none_or(|m| i <= m);
        let hook = self.slices.slice(0, inside);
        let above = self.slices.slice(1, inside);
        let image: Vec<usize> = self
            .x0
            .iter()
            .map(|&k| &self.middle.elements[k])
            .filter(|e| e.j >= tau)
            .map(|e| {
                hook.position(e.generator)
                    .expect("top of x0 lies in the hook")
            })
            .collect();
        let boundaries = f2::span(&self.slices.boundaries(&above, &hook));
        boundaries.contains(&f2::normalize(image))
    }

    /// Whether every cycle of the reverse hook `max(i, j - tau) = 0` projects
    /// into the boundaries of the column.
    fn reverse_hook_misses_x0(&self) -> bool {
        let tau = self.tau;
        let inside = move |i: i64, j: i64| i.max(j - tau) == 0;
        let (mid, low) = (self.slices.slice(0, inside), self.slices.slice(-1, inside));
        let cycles = f2::kernel(&self.slices.boundaries(&mid, &low));
        let column_boundaries = f2::span(&self.slices.boundaries(&self.upper, &self.middle));
        cycles.iter().all(|z| {
            let projected: Vec<usize> = z
                .iter()
                .map(|&k| &mid.elements[k])
                .filter(|e| e.i == 0)
                .map(|e| self.middle.position(e.generator).expect("column element"))
                .collect();
            column_boundaries.contains(&f2::normalize(projected))
        })
    }
}

/// τ: the least Alexander level of a vertical cycle generating the homology
/// of the column `i = 0`.
///
/// Computed twice, by a filtered sweep of the column and as the Alexander
/// grading of the distinguished generator of a vertically simplified basis;
/// disagreement is reported as an internal error.
pub fn tau(c: &BifilteredComplex) -> Result<i64> {
    let c = knot_complex(c)?;
    let swept = Column::new(&c)?.tau;
    let basis = reduce::vertically_simplify(&c)?;
    let simplified = basis
        .complex
        .generator(basis.distinguished_index())
        .alexander;
    if swept != simplified {
        return Err(Error::Internal(format!(
            "tau routes disagree: sweep gives {swept}, simplification gives {simplified}"
        )));
    }
    Ok(swept)
}

/// ε, from the maps of the column into the hook and from the reverse hook.
///
/// With `x0` a generator of vertical homology at level τ: ε = +1 when `x0`
/// dies in the hook `min(i, j − τ) = 0`; ε = −1 when no cycle of the reverse
/// hook `max(i, j − τ) = 0` reaches `x0`; otherwise ε = 0.
pub fn epsilon(c: &BifilteredComplex) -> Result<Epsilon> {
    let c = knot_complex(c)?;
    let column = Column::new(&c)?;
    let f_trivial = column.x0_dies_in_hook(None);
    let g_trivial = column.reverse_hook_misses_x0();
    match (f_trivial, g_trivial) {
        (true, true) => Err(Error::Internal("both hook maps vanish".into())),
        (true, false) => Ok(Epsilon::Plus),
        (false, true) => Ok(Epsilon::Minus),
        (false, false) => Ok(Epsilon::Zero),
    }
}

/// ε read off a simplified basis: +1 if the distinguished generator receives
/// a horizontal arrow, −1 if it emits one, 0 if neither. `None` when it does
/// both, so the basis does not decide.
pub fn epsilon_from_basis(c: &BifilteredComplex) -> Result<Option<Epsilon>> {
    let c = knot_complex(c)?;
    let basis = reduce::simplify(&c)?;
    let k = &basis.complex;
    let x0 = basis.distinguished_index();
    let horizontal = |a: &&crate::cfk::Arrow| k.arrow_kind(a) == crate::cfk::ArrowKind::Horizontal;
    let incoming = k.arrows().filter(horizontal).any(|a| a.to == x0);
    let outgoing = k.arrows().filter(horizontal).any(|a| a.from == x0);
    Ok(match (incoming, outgoing) {
        (true, true) => None,
        (true, false) => Some(Epsilon::Plus),
        (false, true) => Some(Epsilon::Minus),
        (false, false) => Some(Epsilon::Zero),
    })
}

/// a₁: length of the horizontal arrow into the distinguished generator, read
/// as the first entry of the standard form; 0 if there is no such arrow.
///
/// Fails with [`Error::NotStandard`] when the generator receives an arrow but
/// the chain through it does not split off; [`a1_from_hooks`] covers that
/// case.
pub fn a1(c: &BifilteredComplex) -> Result<i64> {
    let c = knot_complex(c)?;
    let basis = reduce::simplify(&c)?;
    let k = &basis.complex;
    let x0 = basis.distinguished_index();
    let receives = k
        .arrows()
        .any(|a| a.to == x0 && k.arrow_kind(a) == crate::cfk::ArrowKind::Horizontal);
    if !receives {
        return Ok(0);
    }
    match reduce::standard_form(&basis) {
        StandardForm::Standard(v) => Ok(v[0]),
        StandardForm::NotStandard(why) => Err(Error::NotStandard(format!(
            "{why}; use epsilon or a1_from_hooks for this complex"
        ))),
    }
}

/// a₁ without choosing a basis: when ε = +1, the least `n` such that `x0`
/// dies in the hook truncated to `i <= n`; otherwise 0.
pub fn a1_from_hooks(c: &BifilteredComplex) -> Result<i64> {
    let c = knot_complex(c)?;
    let column = Column::new(&c)?;
    if !column.x0_dies_in_hook(None) {
        return Ok(0);
    }
    let mut n = 1;
    while !column.x0_dies_in_hook(Some(n)) {
        n += 1;
    }
    Ok(n)
}

/// The rule "a₁(J) > a₁(K) implies ε(K # −J) = +1". Returns `None`
/// (inconclusive) when the hypothesis fails.
pub fn epsilon_from_a1(a_k: i64, a_j: i64) -> Option<Epsilon> {
    (a_j > a_k).then_some(Epsilon::Plus)
}

pub fn max_slope(f: &PLFunction) -> Rational64 {
    f.max_slope()
}

/// Υ of a knot expression, one atom at a time: sums add, mirrors negate and
/// multiples scale, so only the atoms' staircases meet the cap.
pub fn upsilon_knot(e: &KnotExpr, config: &UpsilonConfig) -> Result<PLFunction> {
    match e {
        KnotExpr::Mirror(k) => Ok(upsilon_knot(k, config)?.neg()),
        KnotExpr::Sum(terms) => terms.iter().try_fold(PLFunction::zero(), |acc, t| {
            Ok(&acc + &upsilon_knot(t, config)?)
        }),
        KnotExpr::Multiple(n, k) => Ok(upsilon_knot(k, config)?.scale(*n)),
        atom => upsilon(&knots::build(atom)?, config),
    }
}

/// All invariants of one knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub tau: i64,
    pub epsilon: Epsilon,
    pub a1: i64,
    pub upsilon: PLFunction,
    pub max_slope: Rational64,
}

#[derive(Serialize)]
struct ReportDocument {
    tau: i64,
    epsilon: i64,
    a1: i64,
    upsilon: UpsilonDocument,
    max_slope: String,
}

#[derive(Serialize)]
struct UpsilonDocument {
    breakpoints: Vec<PointDocument>,
}

#[derive(Serialize)]
struct PointDocument {
    t: String,
    value: String,
}

impl InvariantReport {
    /// Computes every invariant from the complex. Υ is computed from the
    /// complex as well, so the Υ cap applies; see [`Self::with_upsilon`].
    pub fn compute(c: &BifilteredComplex, config: &UpsilonConfig) -> Result<Self> {
        let ups = upsilon(c, config)?;
        Self::with_upsilon(c, ups)
    }

    /// Computes τ, ε and a₁ from the complex and takes Υ as given. a₁ falls
    /// back to [`a1_from_hooks`] when the standard form is not available.
    pub fn with_upsilon(c: &BifilteredComplex, upsilon: PLFunction) -> Result<Self> {
        let a1 = match a1(c) {
            Ok(v) => v,
            Err(Error::NotStandard(_)) => a1_from_hooks(c)?,
            Err(e) => return Err(e),
        };
        Ok(Self {
            tau: tau(c)?,
            epsilon: epsilon(c)?,
            a1,
            max_slope: upsilon.max_slope(),
            upsilon,
        })
    }

    /// Report for a knot expression: Υ through [`upsilon_knot`], the rest
    /// from the built complex.
    pub fn for_knot(e: &KnotExpr, config: &UpsilonConfig) -> Result<Self> {
        let ups = upsilon_knot(e, config)?;
        Self::with_upsilon(&knots::build(e)?, ups)
    }

    pub fn to_json(&self) -> String {
        let doc = ReportDocument {
            tau: self.tau,
            epsilon: self.epsilon.value(),
            a1: self.a1,
            upsilon: UpsilonDocument {
                breakpoints: self
                    .upsilon
                    .breakpoints()
                    .iter()
                    .map(|&(t, v)| PointDocument {
                        t: format_rational(t),
                        value: format_rational(v),
                    })
                    .collect(),
            },
            max_slope: format_rational(self.max_slope),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}
