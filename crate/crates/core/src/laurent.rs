//! Integer Laurent polynomials and Alexander polynomials of torus knots and
//! their cables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest `p * q` accepted by the torus and cable constructors.
pub const MAX_TORUS_PRODUCT: i64 = 10_000;

/// A finitely supported Laurent polynomial with integer coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their coefficient maps are.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn top_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn bottom_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// `coeff(k) == coeff(-k)` for every `k`.
    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(e, c)| self.coeff(-e) == c)
    }

    /// Multiplies every exponent by `factor`, i.e. returns `p(t^factor)`.
    pub fn substitute_power(&self, factor: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * factor, c)))
    }

    pub fn shift(&self, by: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + by, c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact division over the integers. Fails when the divisor is zero or
    /// the quotient does not exist in `Z[t, t^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (Some(dtop), Some(dbot)) = (divisor.top_exponent(), divisor.bottom_exponent()) else {
            return Err(Error::Argument("division by the zero polynomial".into()));
        };
        let lead = divisor.coeff(dtop);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rtop) = rem.top_exponent() {
            // Once the remainder's span is narrower than the divisor's, no
            // further monomial multiple can cancel it.
            if rtop - rem.bottom_exponent().unwrap_or(rtop) < dtop - dbot {
                break;
            }
            let c = rem.coeff(rtop);
            if c % lead != 0 {
                break;
            }
            let q = Self::monomial(c / lead, rtop - dtop);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::Internal(format!(
                "{self} is not divisible by {divisor} (remainder {rem})"
            )))
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

fn check_torus_args(p: i64, q: i64) -> Result<()> {
    if p < 2 || q < 2 {
        return Err(Error::Argument(format!(
            "torus knot T({p},{q}) needs p, q >= 2"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::Argument(format!(
            "torus knot T({p},{q}) needs gcd(p, q) = 1"
        )));
    }
    if p.checked_mul(q).is_none_or(|pq| pq > MAX_TORUS_PRODUCT) {
        return Err(Error::Argument(format!(
            "torus knot T({p},{q}) exceeds p*q <= {MAX_TORUS_PRODUCT}"
        )));
    }
    Ok(())
}

fn binomial_minus_one(exp: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(exp, 1), (0, -1)])
}

/// Symmetrized Alexander polynomial of the torus knot `T(p, q)`:
/// `t^{-(p-1)(q-1)/2} (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    check_torus_args(p, q)?;
    let num = &binomial_minus_one(p * q) * &binomial_minus_one(1);
    let den = &binomial_minus_one(p) * &binomial_minus_one(q);
    let quot = num.div_exact(&den)?;
    Ok(quot.shift(-(p - 1) * (q - 1) / 2))
}

/// Alexander polynomial of the `(s, t)`-cable of a knot with Alexander
/// polynomial `companion`, where `s` is the longitudinal winding:
/// `companion(x^s) * Delta_{T(s,t)}(x)`.
pub fn cable_alexander(s: i64, t: i64, companion: &LaurentPoly) -> Result<LaurentPoly> {
    if s < 2 {
        return Err(Error::Argument(format!(
            "cable winding s = {s} must be >= 2"
        )));
    }
    if t == 0 || s.gcd(&t) != 1 {
        return Err(Error::Argument(format!(
            "cable C({s},{t}) needs gcd(s, t) = 1"
        )));
    }
    if !companion.is_symmetric() || companion.eval_one() != 1 {
        return Err(Error::Argument(format!(
            "companion polynomial {companion} is not a knot Alexander polynomial"
        )));
    }
    let pattern = if t.abs() == 1 {
        LaurentPoly::one()
    } else {
        torus_alexander(s, t.abs())?
    };
    let top = companion.top_exponent().unwrap_or(0);
    if top.checked_mul(s).is_none_or(|d| d > MAX_TORUS_PRODUCT) {
        return Err(Error::Argument(format!("cable C({s},{t}) is too large")));
    }
    Ok(&companion.substitute_power(s) * &pattern)
}

/// Exponents `alpha_0 > alpha_1 > ... > alpha_2m` of an Alexander polynomial
/// whose coefficients, read from the top, are `+1, -1, ..., +1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseExponents(Vec<i64>);

impl StaircaseExponents {
    /// Checks the staircase shape directly: odd length, strictly decreasing,
    /// symmetric about zero.
    pub fn new(alphas: Vec<i64>) -> Result<Self> {
        if alphas.len().is_multiple_of(2) {
            return Err(Error::NotStaircase(format!("{alphas:?} has even length")));
        }
        if alphas.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStaircase(format!(
                "{alphas:?} is not strictly decreasing"
            )));
        }
        let n = alphas.len();
        if (0..n).any(|k| alphas[k] != -alphas[n - 1 - k]) {
            return Err(Error::NotStaircase(format!("{alphas:?} is not symmetric")));
        }
        Ok(Self(alphas))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Top exponent, which is the Seifert genus of the knot.
    pub fn genus(&self) -> i64 {
        self.0[0]
    }
}

/// Reads the staircase exponents off an Alexander polynomial, rejecting any
/// polynomial not of the alternating `+1, -1, ..., +1` form.
pub fn staircase_exponents(delta: &LaurentPoly) -> Result<StaircaseExponents> {
    let terms: Vec<(i64, i64)> = delta.terms().rev().collect();
    if terms.len().is_multiple_of(2) {
        return Err(Error::NotStaircase(format!(
            "{delta} has an even number of terms"
        )));
    }
    for (k, &(_, c)) in terms.iter().enumerate() {
        let want = if k % 2 == 0 { 1 } else { -1 };
        if c != want {
            return Err(Error::NotStaircase(format!(
                "{delta}: coefficients must alternate +1, -1, ..., +1"
            )));
        }
    }
    StaircaseExponents::new(terms.into_iter().map(|(e, _)| e).collect())
}
