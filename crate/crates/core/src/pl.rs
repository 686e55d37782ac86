//! Exact continuous piecewise-linear functions on `[0, 2]`.

use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A continuous piecewise-linear function on `[0, 2]`, stored as its
/// breakpoints with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLFunction {
    points: Vec<(Rational64, Rational64)>,
}

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

impl PLFunction {
    /// Builds a function from breakpoints. The first must be at `t = 0`, the
    /// last at `t = 2`, and `t` must be strictly increasing. Collinear
    /// interior points are dropped.
    pub fn new(points: Vec<(Rational64, Rational64)>) -> Result<Self> {
        if points.len() < 2 || points[0].0 != r(0) || points[points.len() - 1].0 != r(2) {
            return Err(Error::Argument(
                "breakpoints must start at t = 0 and end at t = 2".into(),
            ));
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::Argument(
                "breakpoint abscissae must be strictly increasing".into(),
            ));
        }
        Ok(Self { points }.simplified())
    }

    pub fn zero() -> Self {
        Self {
            points: vec![(r(0), r(0)), (r(2), r(0))],
        }
    }

    pub fn breakpoints(&self) -> &[(Rational64, Rational64)] {
        &self.points
    }

    pub fn is_zero(&self) -> bool {
        self.points.iter().all(|p| p.1.is_zero())
    }

    pub fn eval(&self, t: Rational64) -> Result<Rational64> {
        if t < r(0) || t > r(2) {
            return Err(Error::Argument(format!("t = {t} is outside [0, 2]")));
        }
        let k = self.points.partition_point(|p| p.0 < t);
        if self.points[k].0 == t {
            return Ok(self.points[k].1);
        }
        let ((t0, v0), (t1, v1)) = (self.points[k - 1], self.points[k]);
        Ok(v0 + (v1 - v0) * (t - t0) / (t1 - t0))
    }

    /// Slopes of the successive segments.
    pub fn slopes(&self) -> Vec<Rational64> {
        self.points
            .windows(2)
            .map(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0))
            .collect()
    }

    pub fn max_slope(&self) -> Rational64 {
        self.slopes()
            .into_iter()
            .max()
            .expect("at least one segment")
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, n: i64) -> Self {
        Self {
            points: self.points.iter().map(|&(t, v)| (t, v * n)).collect(),
        }
        .simplified()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut ts: Vec<Rational64> = self
            .points
            .iter()
            .chain(&other.points)
            .map(|p| p.0)
            .collect();
        ts.sort();
        ts.dedup();
        let points = ts
            .into_iter()
            .map(|t| (t, self.eval(t).unwrap() + other.eval(t).unwrap()))
            .collect();
        Self { points }.simplified()
    }

    /// Values at `t = 2k/n` for `k = 0..=n`.
    pub fn samples(&self, n: u32) -> Result<Vec<(Rational64, Rational64)>> {
        if n == 0 {
            return Err(Error::Argument("sample count must be positive".into()));
        }
        (0..=i64::from(n))
            .map(|k| {
                let t = Rational64::new(2 * k, i64::from(n));
                Ok((t, self.eval(t)?))
            })
            .collect()
    }

    fn simplified(mut self) -> Self {
        let mut out: Vec<(Rational64, Rational64)> = Vec::with_capacity(self.points.len());
        for p in self.points.drain(..) {
            while out.len() >= 2 {
                let (a, b) = (out[out.len() - 2], out[out.len() - 1]);
                let collinear = (b.1 - a.1) * (p.0 - b.0) == (p.1 - b.1) * (b.0 - a.0);
                if !collinear {
                    break;
                }
                out.pop();
            }
            out.push(p);
        }
        Self { points: out }
    }
}

impl std::ops::Add for &PLFunction {
    type Output = PLFunction;
    fn add(self, other: &PLFunction) -> PLFunction {
        PLFunction::add(self, other)
    }
}

impl std::ops::Neg for &PLFunction {
    type Output = PLFunction;
    fn neg(self) -> PLFunction {
        PLFunction::neg(self)
    }
}

impl fmt::Display for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .points
            .iter()
            .map(|(t, v)| format!("({t}, {v})"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Parses `"p/q"` or `"n"`.
pub fn parse_rational(text: &str) -> Result<Rational64> {
    let bad = || Error::Argument(format!("not a rational number: {text:?}"));
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: i64 = n.parse().map_err(|_| bad())?;
    let d: i64 = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational64::new(n, d))
}

/// Renders a rational as `"p/q"`, or `"n"` when integral.
pub fn format_rational(x: Rational64) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else if x.is_negative() {
        format!("-{}/{}", x.numer().abs(), x.denom())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
