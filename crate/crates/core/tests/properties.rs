mod common;

use cfkcalc::cfk::{dual, staircase, tensor, BifilteredComplex};
use cfkcalc::invariants::{
    a1, a1_from_hooks, epsilon, epsilon_from_basis, tau, upsilon, upsilon_brute_oracle_many,
    upsilon_knot, Epsilon, UpsilonConfig,
};
use cfkcalc::knots::{alexander, build, parse, KnotExpr};
use cfkcalc::laurent::{staircase_exponents, StaircaseExponents};
use common::grading_zero;
use num_rational::Rational64;
use proptest::prelude::*;

/// Exponents of a staircase with palindromic step lengths `steps ++ rev(steps)`.
fn exponents(steps: &[i64]) -> StaircaseExponents {
    let all: Vec<i64> = steps.iter().chain(steps.iter().rev()).copied().collect();
    let mut alpha = all.iter().sum::<i64>() / 2;
    let mut out = vec![alpha];
    for s in all {
        alpha -= s;
        out.push(alpha);
    }
    StaircaseExponents::new(out).unwrap()
}

fn steps() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1..4i64, 0..4)
}

fn rational_t() -> impl Strategy<Value = Rational64> {
    (1..40i64).prop_flat_map(|d| (0..=2 * d).prop_map(move |n| Rational64::new(n, d)))
}

fn leaf() -> impl Strategy<Value = KnotExpr> {
    prop_oneof![
        Just(KnotExpr::Unknot),
        Just(KnotExpr::Torus(2, 3)),
        Just(KnotExpr::Torus(2, 5)),
        Just(KnotExpr::Torus(3, 4)),
        Just(KnotExpr::cable(2, 5, KnotExpr::Torus(2, 3))),
    ]
}

/// Generator count of the built complex.
fn size(e: &KnotExpr) -> u64 {
    match e {
        KnotExpr::Unknot => 1,
        KnotExpr::Torus(2, 3) => 3,
        KnotExpr::Torus(..) | KnotExpr::Cable(..) => 5,
        KnotExpr::Mirror(k) => size(k),
        KnotExpr::Sum(terms) => terms.iter().map(size).product(),
        KnotExpr::Multiple(n, k) => size(k).saturating_pow(n.unsigned_abs() as u32),
    }
}

fn expression() -> impl Strategy<Value = KnotExpr> {
    leaf()
        .prop_recursive(2, 6, 3, |inner| {
            prop_oneof![
                inner.clone().prop_map(KnotExpr::mirror),
                prop::collection::vec(inner.clone(), 2..=3).prop_map(KnotExpr::Sum),
                (-2..=3i64, inner).prop_map(|(n, e)| KnotExpr::multiple(n, e)),
            ]
        })
        .prop_filter("complex too large", |e| size(e) <= 700)
}

/// The reading of `e` after printing: `-n*K` comes back as `-(n*K)`.
fn normalize(e: &KnotExpr) -> KnotExpr {
    match e {
        KnotExpr::Mirror(k) => KnotExpr::mirror(normalize(k)),
        KnotExpr::Sum(terms) => KnotExpr::Sum(terms.iter().map(normalize).collect()),
        KnotExpr::Multiple(n, k) if *n < 0 => {
            KnotExpr::mirror(KnotExpr::multiple(-n, normalize(k)))
        }
        KnotExpr::Multiple(n, k) => KnotExpr::multiple(*n, normalize(k)),
        atom => atom.clone(),
    }
}

fn small(c: &BifilteredComplex) -> bool {
    grading_zero(c) <= 24
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn staircase_invariants(s in steps(), ts in prop::collection::vec(rational_t(), 1..6)) {
        let e = exponents(&s);
        let c = staircase(&e);
        prop_assert!(c.validate().is_valid());
        prop_assert_eq!(tau(&c).unwrap(), e.genus());
        let want = if s.is_empty() { Epsilon::Zero } else { Epsilon::Plus };
        prop_assert_eq!(epsilon(&c).unwrap(), want);
        prop_assert_eq!(epsilon(&dual(&c)).unwrap(), want.negate());
        prop_assert_eq!(a1(&c).unwrap(), s.first().copied().unwrap_or(0));
        let f = upsilon(&c, &UpsilonConfig::default()).unwrap();
        let brute = upsilon_brute_oracle_many(&c, &ts, &UpsilonConfig::default()).unwrap();
        for (t, b) in ts.iter().zip(brute) {
            prop_assert_eq!(f.eval(*t).unwrap(), b);
        }
    }

    #[test]
    fn staircase_minus_itself_is_slice_like(s in steps()) {
        let c = staircase(&exponents(&s));
        let d = tensor(&c, &dual(&c));
        prop_assert_eq!(tau(&d).unwrap(), 0);
        prop_assert_eq!(epsilon(&d).unwrap(), Epsilon::Zero);
        prop_assert_eq!(a1_from_hooks(&d).unwrap(), 0);
        if small(&d) {
            prop_assert!(upsilon(&d, &UpsilonConfig::default()).unwrap().is_zero());
        }
    }

    #[test]
    fn staircases_come_back_from_their_polynomial(s in steps()) {
        let e = exponents(&s);
        let c = staircase(&e);
        let mut delta = cfkcalc::laurent::LaurentPoly::zero();
        for (k, &a) in e.as_slice().iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            delta = &delta + &cfkcalc::laurent::LaurentPoly::monomial(sign, a);
        }
        prop_assert_eq!(staircase_exponents(&delta).unwrap(), e);
        prop_assert_eq!(c.len(), 2 * s.len() + 1);
    }

    #[test]
    fn expressions_round_trip(e in expression()) {
        prop_assert_eq!(parse(&e.to_string()).unwrap(), normalize(&e));
    }

    #[test]
    fn expressions_build_consistently(e in expression()) {
        let c = build(&e).unwrap();
        prop_assert!(c.validate().is_valid());
        prop_assert_eq!(build(&KnotExpr::mirror(e.clone())).unwrap(), dual(&c));
        prop_assert_eq!(alexander(&KnotExpr::mirror(e.clone())).unwrap(), alexander(&e).unwrap());
        let with_unknot = build(&KnotExpr::Sum(vec![e.clone(), KnotExpr::Unknot])).unwrap();
        prop_assert_eq!(with_unknot.relabel(|n| n.strip_suffix("|x0").unwrap().to_string()).unwrap(), c.clone());
        let t = tau(&c).unwrap();
        prop_assert_eq!(tau(&dual(&c)).unwrap(), -t);
        let eps = epsilon(&c).unwrap();
        prop_assert!(eps != Epsilon::Zero || t == 0);
        if let Some(from_basis) = epsilon_from_basis(&c).unwrap() {
            prop_assert_eq!(from_basis, eps);
        }
        if small(&c) {
            let f = upsilon(&c, &UpsilonConfig::default()).unwrap();
            prop_assert_eq!(upsilon_knot(&e, &UpsilonConfig::default()).unwrap(), f);
        }
    }
}

/// Υ of `T(p, p+1)` on `[2i/p, 2(i+1)/p]` is `-i(i+1) - p(p-1-2i) t / 2`.
#[test]
fn upsilon_of_consecutive_torus_knots_has_a_closed_form() {
    for p in 2..=6i64 {
        let f = upsilon(
            &build(&KnotExpr::Torus(p, p + 1)).unwrap(),
            &UpsilonConfig::default(),
        )
        .unwrap();
        for k in 0..=4 * p {
            let t = Rational64::new(k, 2 * p);
            let i = (t * p / 2).floor().to_integer().min(p - 1);
            let want = Rational64::from_integer(-i * (i + 1)) - t * (p * (p - 1 - 2 * i)) / 2;
            assert_eq!(f.eval(t).unwrap(), want, "T({p},{}) at {t}", p + 1);
        }
    }
}
