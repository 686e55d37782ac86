//! Finitely generated bifiltered chain complexes over `F2[U, U^-1]`.
//!
//! A complex is a list of generators, each with a Maslov grading `M` and an
//! Alexander grading `A`, and a set of arrows. An arrow `x -> y` with U-power
//! `n` records the term `U^n y` in `dx`. The element `U^n x` sits in the plane
//! at `(i, j) = (-n, A(x) - n)` and has grading `M(x) - 2n`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::laurent::StaircaseExponents;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub maslov: i64,
    pub alexander: i64,
}

impl Generator {
    pub fn new(name: impl Into<String>, maslov: i64, alexander: i64) -> Self {
        Self {
            name: name.into(),
            maslov,
            alexander,
        }
    }
}

/// A differential term `U^upower * to` in `d(from)`, by generator index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub upower: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArrowKind {
    /// Same `i`, strictly lower `j`.
    Vertical,
    /// Same `j`, strictly lower `i`.
    Horizontal,
    /// No drop in either coordinate.
    Zero,
    /// Strict drop in both coordinates.
    Diagonal,
}

/// A U-translate `U^translate * x` of a generator together with its plane
/// position and grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticeElement {
    pub generator: usize,
    pub translate: i64,
    pub i: i64,
    pub j: i64,
    pub grading: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    GradingLaw {
        from: String,
        to: String,
        upower: i64,
    },
    FiltrationLaw {
        from: String,
        to: String,
        upower: i64,
    },
    /// `d^2 x` contains `U^upower * to` with odd multiplicity.
    DSquared {
        from: String,
        to: String,
        upower: i64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::GradingLaw { from, to, upower } => write!(
                f,
                "grading law: arrow {from} -> U^{upower} {to} does not lower the Maslov grading by one"
            ),
            Violation::FiltrationLaw { from, to, upower } => write!(
                f,
                "filtration law: arrow {from} -> U^{upower} {to} raises a filtration level"
            ),
            Violation::DSquared { from, to, upower } => {
                write!(f, "d^2 != 0: d^2 {from} contains U^{upower} {to}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A bifiltered chain complex modelling `CFK^infinity`.
#[derive(Clone, Debug, Default)]
pub struct BifilteredComplex {
    generators: Vec<Generator>,
    arrows: BTreeSet<Arrow>,
    index: HashMap<String, usize>,
}

impl BifilteredComplex {
    /// Builds a complex from generators and index-based arrows. Only
    /// structural problems are rejected here (duplicate names, dangling
    /// indices, repeated arrows); use [`validate`](Self::validate) for the
    /// algebraic laws.
    pub fn new(
        generators: Vec<Generator>,
        arrows: impl IntoIterator<Item = Arrow>,
    ) -> Result<Self> {
        let mut index = HashMap::with_capacity(generators.len());
        for (k, g) in generators.iter().enumerate() {
            if index.insert(g.name.clone(), k).is_some() {
                return Err(Error::InvalidComplex(format!(
                    "duplicate generator name {:?}",
                    g.name
                )));
            }
        }
        let mut set = BTreeSet::new();
        let mut pairs = BTreeSet::new();
        for a in arrows {
            if a.from >= generators.len() || a.to >= generators.len() {
                return Err(Error::InvalidComplex(format!(
                    "arrow {a:?} references a missing generator"
                )));
            }
            if !pairs.insert((a.from, a.to)) {
                return Err(Error::InvalidComplex(format!(
                    "repeated arrow {} -> {}",
                    generators[a.from].name, generators[a.to].name
                )));
            }
            set.insert(a);
        }
        Ok(Self {
            generators,
            arrows: set,
            index,
        })
    }

    /// Builds a complex from name-based arrows `(from, to, upower)`.
    pub fn from_named<'a>(
        generators: Vec<Generator>,
        arrows: impl IntoIterator<Item = (&'a str, &'a str, i64)>,
    ) -> Result<Self> {
        let lookup: HashMap<&str, usize> = generators
            .iter()
            .enumerate()
            .map(|(k, g)| (g.name.as_str(), k))
            .collect();
        let mut idx = Vec::new();
        for (from, to, upower) in arrows {
            let f = *lookup
                .get(from)
                .ok_or_else(|| Error::InvalidComplex(format!("unknown generator {from:?}")))?;
            let t = *lookup
                .get(to)
                .ok_or_else(|| Error::InvalidComplex(format!("unknown generator {to:?}")))?;
            idx.push(Arrow {
                from: f,
                to: t,
                upower,
            });
        }
        Self::new(generators, idx)
    }

    /// Builds a complex whose arrow U-powers are implied by the grading law.
    /// Used by constructors whose outputs are valid by construction.
    pub(crate) fn from_pairs(
        generators: Vec<Generator>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let arrows: Vec<Arrow> = pairs
            .into_iter()
            .map(|(from, to)| Arrow {
                from,
                to,
                upower: implied_upower(&generators[from], &generators[to]),
            })
            .collect();
        Self::new(generators, arrows).expect("constructor produced a structurally invalid complex")
    }

    pub fn unknot() -> Self {
        Self::from_pairs(vec![Generator::new("x0", 0, 0)], [])
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, k: usize) -> &Generator {
        &self.generators[k]
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn arrows(&self) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    /// The U-power of the arrow `from -> to`, if present.
    pub fn arrow_between(&self, from: usize, to: usize) -> Option<i64> {
        self.arrows
            .range(
                Arrow {
                    from,
                    to,
                    upower: i64::MIN,
                }..=Arrow {
                    from,
                    to,
                    upower: i64::MAX,
                },
            )
            .next()
            .map(|a| a.upower)
    }

    /// Outgoing arrows of each generator.
    pub fn out_arrows(&self) -> Vec<Vec<Arrow>> {
        let mut out = vec![Vec::new(); self.len()];
        for a in &self.arrows {
            out[a.from].push(*a);
        }
        out
    }

    pub fn arrow_kind(&self, a: &Arrow) -> ArrowKind {
        let da = self.generators[a.from].alexander - (self.generators[a.to].alexander - a.upower);
        match (a.upower, da) {
            (0, 0) => ArrowKind::Zero,
            (0, _) => ArrowKind::Vertical,
            (_, 0) => ArrowKind::Horizontal,
            _ => ArrowKind::Diagonal,
        }
    }

    /// The element `U^translate * x_generator`.
    pub fn lattice(&self, generator: usize, translate: i64) -> LatticeElement {
        let g = &self.generators[generator];
        LatticeElement {
            generator,
            translate,
            i: -translate,
            j: g.alexander - translate,
            grading: g.maslov - 2 * translate,
        }
    }

    /// One U-translate per generator whose Maslov grading has the parity of
    /// `grading`, each placed in that grading. Together they span the
    /// grading-`grading` part of the complex over F2.
    pub fn graded_part(&self, grading: i64) -> Vec<LatticeElement> {
        self.generators
            .iter()
            .enumerate()
            .filter(|(_, g)| (g.maslov - grading).rem_euclid(2) == 0)
            .map(|(k, g)| self.lattice(k, (g.maslov - grading) / 2))
            .collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let name = |k: usize| self.generators[k].name.clone();
        for a in &self.arrows {
            let (x, y) = (&self.generators[a.from], &self.generators[a.to]);
            if y.maslov - 2 * a.upower != x.maslov - 1 {
                violations.push(Violation::GradingLaw {
                    from: name(a.from),
                    to: name(a.to),
                    upower: a.upower,
                });
            }
            if a.upower < 0 || y.alexander - a.upower > x.alexander {
                violations.push(Violation::FiltrationLaw {
                    from: name(a.from),
                    to: name(a.to),
                    upower: a.upower,
                });
            }
        }
        let out = self.out_arrows();
        for (x, outs) in out.iter().enumerate() {
            let mut counts: BTreeMap<(usize, i64), usize> = BTreeMap::new();
            for a in outs {
                for b in &out[a.to] {
                    *counts.entry((b.to, a.upower + b.upower)).or_default() += 1;
                }
            }
            for ((z, n), c) in counts {
                if c % 2 == 1 {
                    violations.push(Violation::DSquared {
                        from: name(x),
                        to: name(z),
                        upower: n,
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    /// True when no arrow has zero drop in both filtrations.
    pub fn is_reduced(&self) -> bool {
        self.arrows
            .iter()
            .all(|a| self.arrow_kind(a) != ArrowKind::Zero)
    }

    /// Renames every generator; the mapping must stay injective.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| Generator::new(f(&g.name), g.maslov, g.alexander))
            .collect();
        Self::new(gens, self.arrows.iter().copied())
    }

    /// Direct sum; generator names must be disjoint.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let off = self.len();
        let gens = self
            .generators
            .iter()
            .chain(other.generators.iter())
            .cloned()
            .collect();
        let arrows = self
            .arrows
            .iter()
            .copied()
            .chain(other.arrows.iter().map(|a| Arrow {
                from: a.from + off,
                to: a.to + off,
                upower: a.upower,
            }));
        Self::new(gens, arrows)
    }

    /// The subcomplex spanned by the listed generators, in the given order.
    /// The caller is responsible for the list being closed under the
    /// differential.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(n, &k)| (k, n)).collect();
        let gens = keep.iter().map(|&k| self.generators[k].clone()).collect();
        let arrows: Vec<Arrow> = self
            .arrows
            .iter()
            .filter_map(|a| {
                Some(Arrow {
                    from: *pos.get(&a.from)?,
                    to: *pos.get(&a.to)?,
                    upower: a.upower,
                })
            })
            .collect();
        Self::new(gens, arrows).expect("restriction of a well-formed complex")
    }

    pub fn to_document(&self) -> ComplexDocument {
        ComplexDocument {
            generators: self.generators.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| NamedArrow {
                    from: self.generators[a.from].name.clone(),
                    to: self.generators[a.to].name.clone(),
                    upower: a.upower,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document())
            .expect("complex documents always serialize")
    }

    /// Parses and validates a complex document.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ComplexDocument = serde_json::from_str(text).map_err(|e| {
            parse_err(
                format!("line {}, column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        Self::from_document(doc)
    }

    pub fn from_document(doc: ComplexDocument) -> Result<Self> {
        if doc.generators.is_empty() {
            return Err(parse_err("generators", "complex must be nonempty"));
        }
        let mut seen = HashMap::new();
        for (k, g) in doc.generators.iter().enumerate() {
            if let Some(prev) = seen.insert(g.name.as_str(), k) {
                return Err(parse_err(
                    format!("generators[{k}].name"),
                    format!(
                        "duplicate generator {:?} (first at generators[{prev}])",
                        g.name
                    ),
                ));
            }
        }
        let mut arrows = Vec::with_capacity(doc.arrows.len());
        let mut pairs = BTreeSet::new();
        for (k, a) in doc.arrows.iter().enumerate() {
            let from = *seen.get(a.from.as_str()).ok_or_else(|| {
                parse_err(
                    format!("arrows[{k}].from"),
                    format!("unknown generator {:?}", a.from),
                )
            })?;
            let to = *seen.get(a.to.as_str()).ok_or_else(|| {
                parse_err(
                    format!("arrows[{k}].to"),
                    format!("unknown generator {:?}", a.to),
                )
            })?;
            if !pairs.insert((from, to)) {
                return Err(parse_err(format!("arrows[{k}]"), "repeated arrow"));
            }
            arrows.push(Arrow {
                from,
                to,
                upower: a.upower,
            });
        }
        let complex = Self::new(doc.generators, arrows)?;
        let report = complex.validate();
        if !report.is_valid() {
            return Err(parse_err(
                "document",
                format!("complex fails validation: {report}"),
            ));
        }
        Ok(complex)
    }
}

/// Complexes compare by content: the same named generators with the same
/// gradings and the same named arrows, regardless of storage order.
impl PartialEq for BifilteredComplex {
    fn eq(&self, other: &Self) -> bool {
        fn content(c: &BifilteredComplex) -> (BTreeSet<&Generator>, BTreeSet<(&str, &str, i64)>) {
            let gens = c.generators.iter().collect();
            let arrows = c
                .arrows
                .iter()
                .map(|a| {
                    (
                        c.generators[a.from].name.as_str(),
                        c.generators[a.to].name.as_str(),
                        a.upower,
                    )
                })
                .collect();
            (gens, arrows)
        }
        self.len() == other.len() && content(self) == content(other)
    }
}

impl Eq for BifilteredComplex {}

/// Serialized form of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub generators: Vec<Generator>,
    pub arrows: Vec<NamedArrow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedArrow {
    pub from: String,
    pub to: String,
    pub upower: i64,
}

/// U-power forced by the grading law for an arrow `x -> y`.
pub(crate) fn implied_upower(x: &Generator, y: &Generator) -> i64 {
    let twice = y.maslov - x.maslov + 1;
    debug_assert!(
        twice % 2 == 0,
        "arrow between generators of equal Maslov parity"
    );
    twice / 2
}

/// The staircase complex of an L-space knot with the given exponents.
///
/// Generator `x_k` has `A = alpha_k`; `x_0` has `M = 0`; each odd `x_k` has
/// `d x_k = U^{alpha_{k-1} - alpha_k} x_{k-1} + x_{k+1}`.
pub fn staircase(exps: &StaircaseExponents) -> BifilteredComplex {
    let alphas = exps.as_slice();
    let mut gens = Vec::with_capacity(alphas.len());
    let mut maslov = 0;
    for (k, &a) in alphas.iter().enumerate() {
        if k > 0 {
            maslov = if k % 2 == 1 {
                maslov - 2 * (alphas[k - 1] - a) + 1
            } else {
                maslov - 1
            };
        }
        gens.push(Generator::new(format!("x{k}"), maslov, a));
    }
    let pairs = (1..alphas.len())
        .step_by(2)
        .flat_map(|k| [(k, k - 1), (k, k + 1)]);
    BifilteredComplex::from_pairs(gens, pairs)
}

/// Tensor product over `F2[U, U^-1]`, modelling connected sum. Generator
/// `x (x) y` is named `"x|y"`.
pub fn tensor(c1: &BifilteredComplex, c2: &BifilteredComplex) -> BifilteredComplex {
    let n2 = c2.len();
    let mut gens = Vec::with_capacity(c1.len() * n2);
    for x in c1.generators() {
        for y in c2.generators() {
            gens.push(Generator::new(
                format!("{}|{}", x.name, y.name),
                x.maslov + y.maslov,
                x.alexander + y.alexander,
            ));
        }
    }
    let mut arrows = Vec::with_capacity(c1.arrow_count() * n2 + c2.arrow_count() * c1.len());
    for a in c1.arrows() {
        for y in 0..n2 {
            arrows.push(Arrow {
                from: a.from * n2 + y,
                to: a.to * n2 + y,
                upower: a.upower,
            });
        }
    }
    for x in 0..c1.len() {
        for b in c2.arrows() {
            arrows.push(Arrow {
                from: x * n2 + b.from,
                to: x * n2 + b.to,
                upower: b.upower,
            });
        }
    }
    BifilteredComplex::new(gens, arrows).expect("tensor of well-formed complexes")
}

/// Name of the dual generator: each `|`-separated factor gains a trailing
/// `*`, or loses one it already has, so dualizing twice restores the name.
pub fn dual_name(name: &str) -> String {
    name.split('|')
        .map(|part| match part.strip_suffix('*') {
            Some(base) => base.to_string(),
            None => format!("{part}*"),
        })
        .collect::<Vec<_>>()
        .join("|")
}

/// The dual complex, modelling the mirror `-K`: gradings negate and every
/// arrow `x -> U^n y` becomes `y* -> U^n x*`.
pub fn dual(c: &BifilteredComplex) -> BifilteredComplex {
    let gens = c
        .generators()
        .iter()
        .map(|g| Generator::new(dual_name(&g.name), -g.maslov, -g.alexander))
        .collect();
    let arrows = c.arrows().map(|a| Arrow {
        from: a.to,
        to: a.from,
        upower: a.upower,
    });
    BifilteredComplex::new(gens, arrows).expect("dual of a well-formed complex")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{cable_alexander, staircase_exponents, torus_alexander};

    fn stair(alphas: &[i64]) -> BifilteredComplex {
        staircase(&StaircaseExponents::new(alphas.to_vec()).unwrap())
    }

    fn summand() -> BifilteredComplex {
        BifilteredComplex::from_named(
            vec![
                Generator::new("x", 0, 2),
                Generator::new("y", -3, 0),
                Generator::new("z", -4, -2),
            ],
            [("y", "x", 2), ("y", "z", 0)],
        )
        .unwrap()
    }

    fn grades(c: &BifilteredComplex) -> Vec<(i64, i64)> {
        c.generators()
            .iter()
            .map(|g| (g.maslov, g.alexander))
            .collect()
    }

    #[test]
    fn cable_staircase_gradings() {
        let d = cable_alexander(2, 5, &torus_alexander(2, 3).unwrap()).unwrap();
        let c = staircase(&staircase_exponents(&d).unwrap());
        assert_eq!(
            grades(&c),
            vec![(0, 4), (-1, 3), (-2, 0), (-7, -3), (-8, -4)]
        );
        assert_eq!(c.arrow_between(1, 0), Some(1));
        assert_eq!(c.arrow_between(1, 2), Some(0));
        assert_eq!(c.arrow_between(3, 2), Some(3));
        assert_eq!(c.arrow_between(3, 4), Some(0));
        assert_eq!(c.arrow_count(), 4);
        assert!(c.validate().is_valid());
    }

    #[test]
    fn summand_is_a_staircase() {
        let c = stair(&[2, 0, -2]);
        assert_eq!(grades(&c), vec![(0, 2), (-3, 0), (-4, -2)]);
        assert!(summand().validate().is_valid());
        assert_eq!(
            c.relabel(|n| ["x", "y", "z"][n[1..].parse::<usize>().unwrap()].into())
                .unwrap(),
            summand()
        );
    }

    #[test]
    fn unknot_staircase() {
        let c = stair(&[0]);
        assert_eq!(grades(&c), vec![(0, 0)]);
        assert_eq!(c.arrow_count(), 0);
        assert_eq!(c, BifilteredComplex::unknot());
    }

    #[test]
    fn staircases_only_have_vertical_and_horizontal_arrows() {
        let c = stair(&[6, 5, 2, 0, -2, -5, -6]);
        assert!(c.is_reduced());
        for a in c.arrows() {
            let k = c.arrow_kind(a);
            assert!(
                k == ArrowKind::Vertical || k == ArrowKind::Horizontal,
                "{a:?}"
            );
        }
    }

    #[test]
    fn grading_law_violation_is_reported() {
        let c = BifilteredComplex::from_named(
            vec![Generator::new("x", 0, 0), Generator::new("y", 0, -1)],
            [("x", "y", 0)],
        )
        .unwrap();
        let report = c.validate();
        assert_eq!(report.violations.len(), 1);
        assert!(matches!(report.violations[0], Violation::GradingLaw { .. }));
    }

    #[test]
    fn filtration_and_d_squared_violations() {
        let c = BifilteredComplex::from_named(
            vec![Generator::new("x", 0, 0), Generator::new("y", -1, 1)],
            [("x", "y", 0)],
        )
        .unwrap();
        assert!(matches!(
            c.validate().violations[0],
            Violation::FiltrationLaw { .. }
        ));

        let c = BifilteredComplex::from_named(
            vec![
                Generator::new("a", 0, 0),
                Generator::new("b", -1, -1),
                Generator::new("c", -2, -2),
            ],
            [("a", "b", 0), ("b", "c", 0)],
        )
        .unwrap();
        assert!(matches!(
            c.validate().violations[0],
            Violation::DSquared { .. }
        ));
    }

    #[test]
    fn lattice_positions() {
        let c = summand();
        let e = c.lattice(0, 2);
        assert_eq!((e.i, e.j, e.grading), (-2, 0, -4));
        let gr0 = c.graded_part(0);
        assert_eq!(gr0.len(), 2);
        assert!(gr0.iter().all(|e| e.grading == 0));
    }

    #[test]
    fn dual_of_trefoil() {
        let d = dual(&stair(&[1, 0, -1]));
        let a = d.index_of("x0*").unwrap();
        let b = d.index_of("x1*").unwrap();
        let c = d.index_of("x2*").unwrap();
        assert_eq!(grades(&d), vec![(0, -1), (1, 0), (2, 1)]);
        assert_eq!(d.arrow_between(a, b), Some(1));
        assert_eq!(d.arrow_between(c, b), Some(0));
        assert_eq!(d.arrow_count(), 2);
        assert!(d.validate().is_valid());
    }

    #[test]
    fn dual_is_an_involution_and_preserves_arrow_kinds() {
        let c = stair(&[6, 5, 2, 0, -2, -5, -6]);
        let d = dual(&c);
        assert_eq!(dual(&d), c);
        assert_eq!(
            dual(&BifilteredComplex::unknot())
                .relabel(dual_name)
                .unwrap(),
            BifilteredComplex::unknot()
        );
        // Transposing an arrow keeps both of its filtration drops.
        for a in c.arrows() {
            let b = Arrow {
                from: a.to,
                to: a.from,
                upower: a.upower,
            };
            assert_eq!(d.arrow_between(b.from, b.to), Some(a.upower));
            assert_eq!(c.arrow_kind(a), d.arrow_kind(&b));
        }
    }

    #[test]
    fn tensor_with_unknot_is_identity() {
        let c = stair(&[4, 3, 0, -3, -4]);
        let t = tensor(&c, &BifilteredComplex::unknot());
        assert_eq!(
            t.relabel(|n| n.trim_end_matches("|x0").to_string())
                .unwrap(),
            c
        );
    }

    #[test]
    fn mixed_sum_has_35_valid_generators() {
        let t45 = stair(&[6, 5, 2, 0, -2, -5, -6]);
        let cab = stair(&[4, 3, 0, -3, -4]);
        let t = tensor(&t45, &dual(&cab));
        assert_eq!(t.len(), 35);
        assert!(t.validate().is_valid());
        assert!(t.is_reduced());
        for (k, g) in t.generators().iter().enumerate() {
            let (x, y) = (k / 5, k % 5);
            assert_eq!(g.maslov, t45.generator(x).maslov - cab.generator(y).maslov);
            assert_eq!(
                g.alexander,
                t45.generator(x).alexander - cab.generator(y).alexander
            );
        }
    }

    #[test]
    fn document_round_trip() {
        let c = summand();
        let back = BifilteredComplex::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn document_errors() {
        let e = BifilteredComplex::from_json(r#"{"generators": [], "arrows": []}"#).unwrap_err();
        assert!(e.to_string().contains("complex must be nonempty"), "{e}");

        let doc = r#"{"generators": [{"name": "x", "maslov": 0, "alexander": 0}],
                      "arrows": [{"from": "x", "to": "w", "upower": 0}]}"#;
        let e = BifilteredComplex::from_json(doc).unwrap_err();
        assert!(
            matches!(&e, Error::Parse { location, .. } if location == "arrows[0].to"),
            "{e}"
        );

        let doc = r#"{"generators": [{"name": "x", "maslov": 0.5, "alexander": 0}], "arrows": []}"#;
        let e = BifilteredComplex::from_json(doc).unwrap_err();
        assert!(
            matches!(&e, Error::Parse { location, .. } if location.starts_with("line 1")),
            "{e}"
        );

        let doc = r#"{"generators": [{"name": "x", "maslov": 0, "alexander": 0},
                                     {"name": "y", "maslov": 0, "alexander": 0}],
                      "arrows": [{"from": "x", "to": "y", "upower": 0}]}"#;
        assert!(BifilteredComplex::from_json(doc).is_err());
    }
}
