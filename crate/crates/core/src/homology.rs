//! F2 homology of regions of the plane.
//!
//! A region is a set of lattice elements of a fixed grading, chosen by a
//! predicate on their position. The differential of a region element keeps
//! only the terms that land in the target region; this computes homology of
//! subquotient complexes such as columns, rows and hooks, provided the
//! caller's regions form one.

use std::collections::HashMap;

use crate::cfk::{Arrow, BifilteredComplex, LatticeElement};
use crate::f2::{self, Echelon, SparseVec};

pub(crate) struct Slices<'a> {
    complex: &'a BifilteredComplex,
    out: Vec<Vec<Arrow>>,
}

/// Elements of one grading inside a region, with an index for lookup.
pub(crate) struct Slice {
    pub elements: Vec<LatticeElement>,
    lookup: HashMap<usize, usize>,
}

impl Slice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, generator: usize) -> Option<usize> {
        self.lookup.get(&generator).copied()
    }
}

impl<'a> Slices<'a> {
    pub fn new(complex: &'a BifilteredComplex) -> Self {
        Self {
            complex,
            out: complex.out_arrows(),
        }
    }

    /// Elements of the given grading whose position satisfies `inside`.
    /// Each generator contributes at most one element per grading.
    pub fn slice(&self, grading: i64, inside: impl Fn(i64, i64) -> bool) -> Slice {
        let elements: Vec<LatticeElement> = self
            .complex
            .graded_part(grading)
            .into_iter()
            .filter(|e| inside(e.i, e.j))
            .collect();
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.generator, k))
            .collect();
        Slice { elements, lookup }
    }

    /// Differential of `e` with terms outside `target` discarded.
    pub fn boundary(&self, e: &LatticeElement, target: &Slice) -> SparseVec {
        let v: Vec<usize> = self.out[e.generator]
            .iter()
            .filter_map(|a| {
                let k = target.position(a.to)?;
                // same grading pins the translate, so generator identifies the element
                debug_assert_eq!(target.elements[k].translate, e.translate + a.upower);
                Some(k)
            })
            .collect();
        f2::normalize(v)
    }

    pub fn boundaries(&self, domain: &Slice, target: &Slice) -> Vec<SparseVec> {
        domain
            .elements
            .iter()
            .map(|e| self.boundary(e, target))
            .collect()
    }
}

/// Cycles and boundaries of the middle grading of `upper -> middle -> lower`.
pub(crate) struct MiddleHomology {
    pub cycles: Vec<SparseVec>,
    pub boundaries: Echelon,
}

impl MiddleHomology {
    pub fn compute(slices: &Slices<'_>, upper: &Slice, middle: &Slice, lower: &Slice) -> Self {
        let cycles = f2::kernel(&slices.boundaries(middle, lower));
        let boundaries = f2::span(&slices.boundaries(upper, middle));
        Self { cycles, boundaries }
    }

    pub fn dim(&self) -> usize {
        self.cycles.len() - self.boundaries.rank()
    }
}

/// Sweeps `middle` in the given order and returns the first cycle that is
/// not a boundary, together with the position in `order` of its last
/// element. Relations found while inserting in order are cycles whose
/// latest element is the one just inserted, so the returned position is the
/// least level at which the sublevel cycles escape the boundaries.
pub(crate) fn first_essential_cycle(
    slices: &Slices<'_>,
    upper: &Slice,
    middle: &Slice,
    lower: &Slice,
    order: &[usize],
) -> Option<(SparseVec, usize)> {
    let boundaries = f2::span(&slices.boundaries(upper, middle));
    let mut ech = Echelon::new();
    for (k, &m) in order.iter().enumerate() {
        let image = slices.boundary(&middle.elements[m], lower);
        if let f2::Insert::Relation(combo) = ech.insert(image) {
            let cycle = f2::normalize(combo.iter().map(|&c| order[c]).collect());
            if !boundaries.contains(&cycle) {
                return Some((cycle, k));
            }
        }
    }
    None
}
