//! The published values this crate reproduces, as data, and a runner for
//! them. The command-line `verify-paper` and the test suite read the same
//! table.

use std::fmt;

use crate::cfk::BifilteredComplex;
use crate::error::Result;
use crate::invariants::{self, upsilon, upsilon_knot, UpsilonConfig};
use crate::knots::{self, KnotExpr};
use crate::laurent::LaurentPoly;
use crate::pl::{format_rational, PLFunction};
use crate::reduce::{self, StandardForm};

/// What a check is about.
#[derive(Clone, Copy, Debug)]
pub enum Subject {
    Knot(&'static str),
    /// The component through the distinguished generator of the simplified
    /// complex of the knot.
    Summand(&'static str),
    /// a₁ of two knots `K`, `J`, fed to the rule for ε(K # −J).
    A1Rule(&'static str, &'static str),
}

#[derive(Clone, Copy, Debug)]
pub enum Expected {
    /// `(exponent, coefficient)` pairs.
    Alexander(&'static [(i64, i64)]),
    /// `(M, A)` per generator, in order.
    Gradings(&'static [(i64, i64)]),
    /// `(from, to, U-power)` by generator position, sorted.
    Arrows(&'static [(usize, usize, i64)]),
    StandardForm(&'static [i64]),
    /// Breakpoints as rendered by [`PLFunction`]'s `Display`.
    Upsilon(&'static str),
    MaxSlope(&'static str),
    Tau(i64),
    Epsilon(i64),
    EpsilonNonzero,
    A1(i64),
}

#[derive(Clone, Copy, Debug)]
pub struct Check {
    pub group: &'static str,
    pub subject: Subject,
    pub expected: Expected,
}

const fn check(group: &'static str, subject: Subject, expected: Expected) -> Check {
    Check {
        group,
        subject,
        expected,
    }
}

const FLAT_KNOT: &str = "T(2,5) # -T(4,5) # C(2,5;T(2,3))";
const MIXED: &str = "T(4,5) # -C(2,5;T(2,3))";
const VEE: &str = "(0, 0), (1, -2), (2, 0)";
const FLAT: &str = "(0, 0), (2, 0)";

use Expected as E;
use Subject::{A1Rule, Knot, Summand};

pub const MANIFEST: &[Check] = &[
    check(
        "alexander",
        Knot("T(4,5)"),
        E::Alexander(&[(6, 1), (5, -1), (2, 1), (0, -1), (-2, 1), (-5, -1), (-6, 1)]),
    ),
    check(
        "alexander",
        Knot("C(2,5;T(2,3))"),
        E::Alexander(&[(4, 1), (3, -1), (0, 1), (-3, -1), (-4, 1)]),
    ),
    check(
        "staircase",
        Knot("C(2,5;T(2,3))"),
        E::Gradings(&[(0, 4), (-1, 3), (-2, 0), (-7, -3), (-8, -4)]),
    ),
    check(
        "staircase",
        Knot("C(2,5;T(2,3))"),
        E::Arrows(&[(1, 0, 1), (1, 2, 0), (3, 2, 3), (3, 4, 0)]),
    ),
    check(
        "standard form",
        Knot("C(2,5;T(2,3))"),
        E::StandardForm(&[1, 3]),
    ),
    check("standard form", Knot("T(4,5)"), E::StandardForm(&[1, 3, 2])),
    check("standard form", Knot(MIXED), E::StandardForm(&[2])),
    check(
        "standard form",
        Summand(MIXED),
        E::Gradings(&[(0, 2), (-3, 0), (-4, -2)]),
    ),
    check("upsilon", Summand(MIXED), E::Upsilon(VEE)),
    check("upsilon", Knot("T(2,5)"), E::Upsilon(VEE)),
    check("upsilon", Summand(MIXED), E::MaxSlope("2")),
    check("upsilon", Knot("T(2,5)"), E::MaxSlope("2")),
    check("tau", Knot("T(2,5)"), E::Tau(2)),
    check("tau", Summand(MIXED), E::Tau(2)),
    check("flat upsilon", Knot(FLAT_KNOT), E::Upsilon(FLAT)),
    check(
        "flat upsilon",
        Knot("2*(T(2,5) # -T(4,5) # C(2,5;T(2,3)))"),
        E::Upsilon(FLAT),
    ),
    check(
        "flat upsilon",
        Knot("3*(T(2,5) # -T(4,5) # C(2,5;T(2,3)))"),
        E::Upsilon(FLAT),
    ),
    check("epsilon", Knot(MIXED), E::A1(2)),
    check("epsilon", Knot("T(2,5)"), E::A1(1)),
    check("epsilon", A1Rule("T(2,5)", MIXED), E::Epsilon(1)),
    check("epsilon", Knot(FLAT_KNOT), E::Epsilon(1)),
    check(
        "epsilon",
        Knot("2*(T(2,5) # -T(4,5) # C(2,5;T(2,3)))"),
        E::Epsilon(1),
    ),
    check("genus bound", Knot(FLAT_KNOT), E::MaxSlope("0")),
    check("genus bound", Knot(FLAT_KNOT), E::EpsilonNonzero),
];

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Knot(k) => write!(f, "{k}"),
            Summand(k) => write!(f, "summand of {k}"),
            A1Rule(k, j) => write!(f, "{k} # -({j})"),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.subject;
        match self.expected {
            E::Alexander(terms) => write!(
                f,
                "alexander({s}) = {}",
                LaurentPoly::from_terms(terms.iter().copied())
            ),
            E::Gradings(g) => write!(f, "gradings({s}) = {g:?}"),
            E::Arrows(a) => write!(f, "arrows({s}) = {a:?}"),
            E::StandardForm(v) => write!(f, "standard form({s}) = {v:?}"),
            E::Upsilon(u) => write!(f, "upsilon({s}) = {u}"),
            E::MaxSlope(m) => write!(f, "max slope({s}) = {m}"),
            E::Tau(v) => write!(f, "tau({s}) = {v}"),
            E::Epsilon(v) => write!(f, "epsilon({s}) = {v}"),
            E::EpsilonNonzero => write!(f, "epsilon({s}) != 0"),
            E::A1(v) => write!(f, "a1({s}) = {v}"),
        }
    }
}

/// Result of one check: whether it held, and what was computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub found: String,
}

fn expr(text: &str) -> Result<KnotExpr> {
    knots::parse(text)
}

fn complex(subject: Subject) -> Result<BifilteredComplex> {
    match subject {
        Knot(k) => knots::build(&expr(k)?),
        Summand(k) => {
            let basis = reduce::simplify(&knots::build(&expr(k)?)?)?;
            Ok(reduce::distinguished_component(&basis))
        }
        A1Rule(..) => unreachable!("rules have no single complex"),
    }
}

fn upsilon_of(subject: Subject) -> Result<PLFunction> {
    let config = UpsilonConfig::default();
    match subject {
        Knot(k) => upsilon_knot(&expr(k)?, &config),
        _ => upsilon(&complex(subject)?, &config),
    }
}

fn computed(c: &Check) -> Result<String> {
    if let A1Rule(k, j) = c.subject {
        let a_k = invariants::a1(&complex(Knot(k))?)?;
        let a_j = invariants::a1(&complex(Knot(j))?)?;
        return Ok(match invariants::epsilon_from_a1(a_k, a_j) {
            Some(e) => e.to_string(),
            None => "inconclusive".into(),
        });
    }
    Ok(match c.expected {
        E::Alexander(_) => {
            let Knot(k) = c.subject else {
                unreachable!("alexander of a knot")
            };
            knots::alexander(&expr(k)?)?.to_string()
        }
        E::Gradings(_) => {
            let g: Vec<(i64, i64)> = complex(c.subject)?
                .generators()
                .iter()
                .map(|g| (g.maslov, g.alexander))
                .collect();
            format!("{g:?}")
        }
        E::Arrows(_) => {
            let k = complex(c.subject)?;
            let mut a: Vec<(usize, usize, i64)> =
                k.arrows().map(|a| (a.from, a.to, a.upower)).collect();
            a.sort();
            format!("{a:?}")
        }
        E::StandardForm(_) => {
            let basis = reduce::simplify(&complex(c.subject)?)?;
            match reduce::standard_form(&basis) {
                StandardForm::Standard(v) => format!("{v:?}"),
                StandardForm::NotStandard(why) => format!("not standard: {why}"),
            }
        }
        E::Upsilon(_) => upsilon_of(c.subject)?.to_string(),
        E::MaxSlope(_) => format_rational(upsilon_of(c.subject)?.max_slope()),
        E::Tau(_) => invariants::tau(&complex(c.subject)?)?.to_string(),
        E::Epsilon(_) | E::EpsilonNonzero => invariants::epsilon(&complex(c.subject)?)?.to_string(),
        E::A1(_) => invariants::a1(&complex(c.subject)?)?.to_string(),
    })
}

fn expected_text(e: Expected) -> String {
    match e {
        E::Alexander(terms) => LaurentPoly::from_terms(terms.iter().copied()).to_string(),
        E::Gradings(g) => format!("{g:?}"),
        E::Arrows(a) => format!("{a:?}"),
        E::StandardForm(v) => format!("{v:?}"),
        E::Upsilon(s) | E::MaxSlope(s) => s.to_string(),
        E::Tau(v) | E::Epsilon(v) | E::A1(v) => v.to_string(),
        E::EpsilonNonzero => unreachable!("compared separately"),
    }
}

pub fn run(c: &Check) -> Outcome {
    match computed(c) {
        Ok(found) => {
            let passed = match c.expected {
                E::EpsilonNonzero => found != "0",
                e => found == expected_text(e),
            };
            Outcome { passed, found }
        }
        Err(e) => Outcome {
            passed: false,
            found: format!("error: {e}"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        for c in MANIFEST {
            let out = run(c);
            assert!(out.passed, "{c}: found {}", out.found);
        }
    }

    #[test]
    fn a_wrong_expectation_fails() {
        let c = check("tau", Knot("T(2,3)"), E::Tau(2));
        assert_eq!(
            run(&c),
            Outcome {
                passed: false,
                found: "1".into()
            }
        );
        let c = check("tau", Knot("T(2,"), E::Tau(1));
        assert!(run(&c).found.starts_with("error: parse error at column 5"));
    }

    #[test]
    fn descriptions() {
        assert_eq!(
            MANIFEST[0].to_string(),
            "alexander(T(4,5)) = t^6 - t^5 + t^2 - 1 + t^-2 - t^-5 + t^-6"
        );
        assert_eq!(
            MANIFEST[19].to_string(),
            "epsilon(T(2,5) # -(T(4,5) # -C(2,5;T(2,3)))) = 1"
        );
    }
}
