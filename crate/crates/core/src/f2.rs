//! Sparse linear algebra over the two-element field.
//!
//! Vectors are sorted lists of the indices whose coordinate is 1. Reduction
//! uses the largest index as pivot, as in column reduction for persistence.

use std::collections::HashMap;

/// A sparse F2 vector: strictly increasing coordinate indices.
pub type SparseVec = Vec<usize>;

/// Symmetric difference of two sorted index lists.
pub fn xor(a: &[usize], b: &[usize]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Sorts and cancels repeated indices in pairs.
pub fn normalize(mut v: Vec<usize>) -> SparseVec {
    v.sort_unstable();
    let mut out: Vec<usize> = Vec::with_capacity(v.len());
    for x in v {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Row-echelon basis of a subspace, keyed by pivot (largest index).
///
/// Each stored vector carries a record of which inserted vectors were summed
/// to produce it, so a dependency found during insertion yields an explicit
/// relation among the inputs.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: HashMap<usize, (SparseVec, SparseVec)>,
    inserted: usize,
}

/// Outcome of inserting a vector into an [`Echelon`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The vector was independent; it now has the given pivot.
    Pivot(usize),
    /// The vector was dependent: the listed insertion ids (including its
    /// own) sum to zero.
    Relation(SparseVec),
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Fully reduces `v` against the basis: the residual has no entry at
    /// any pivot.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut kept = Vec::new();
        while let Some(p) = v.pop() {
            match self.rows.get(&p) {
                Some((row, _)) => v = xor(&v, &row[..row.len() - 1]),
                None => kept.push(p),
            }
        }
        kept.reverse();
        kept
    }

    pub fn contains(&self, v: &[usize]) -> bool {
        let mut v = v.to_vec();
        while let Some(&p) = v.last() {
            match self.rows.get(&p) {
                Some((row, _)) => v = xor(&v, row),
                None => return false,
            }
        }
        true
    }

    /// Inserts a vector, assigning it the next insertion id.
    pub fn insert(&mut self, mut v: SparseVec) -> Insert {
        let id = self.inserted;
        self.inserted += 1;
        let mut combo = vec![id];
        while let Some(&p) = v.last() {
            match self.rows.get(&p) {
                Some((row, rc)) => {
                    v = xor(&v, row);
                    combo = xor(&combo, rc);
                }
                None => {
                    self.rows.insert(p, (v, combo));
                    return Insert::Pivot(p);
                }
            }
        }
        Insert::Relation(combo)
    }
}

/// Basis of the kernel of the linear map sending domain element `k` to
/// `images[k]`. Kernel vectors are expressed in domain indices.
pub fn kernel(images: &[SparseVec]) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for img in images {
        if let Insert::Relation(combo) = ech.insert(img.clone()) {
            out.push(combo);
        }
    }
    out
}

/// Echelon basis of the span of `vectors`.
pub fn span(vectors: &[SparseVec]) -> Echelon {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v.clone());
    }
    ech
}

/// Solves `A x = b` over F2 for a dense system given as rows of column
/// indices. Free variables are set to zero. Returns `None` when inconsistent.
pub fn solve(ncols: usize, rows: &[(SparseVec, bool)]) -> Option<Vec<bool>> {
    let words = (ncols + 1).div_ceil(64);
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    let bit = |v: &[u64], k: usize| v[k / 64] >> (k % 64) & 1 == 1;
    for (cols, rhs) in rows {
        let mut r = vec![0u64; words];
        for &c in cols {
            r[c / 64] ^= 1 << (c % 64);
        }
        if *rhs {
            r[ncols / 64] ^= 1 << (ncols % 64);
        }
        for (p, pr) in &pivots {
            if bit(&r, *p) {
                r.iter_mut().zip(pr).for_each(|(a, b)| *a ^= b);
            }
        }
        let Some(p) = (0..ncols).find(|&k| bit(&r, k)) else {
            if bit(&r, ncols) {
                return None;
            }
            continue;
        };
        for (_, pr) in pivots.iter_mut() {
            if bit(pr, p) {
                pr.iter_mut().zip(&r).for_each(|(a, b)| *a ^= b);
            }
        }
        pivots.push((p, r));
    }
    let mut x = vec![false; ncols];
    for (p, r) in &pivots {
        x[*p] = bit(r, ncols);
    }
    Some(x)
}

/// Inverse of a square F2 matrix given by columns, if it exists.
pub fn invert(columns: &[SparseVec]) -> Option<Vec<SparseVec>> {
    let n = columns.len();
    // row k of the matrix, augmented with the identity
    let mut rows: Vec<(SparseVec, SparseVec)> = (0..n).map(|k| (Vec::new(), vec![k])).collect();
    for (c, col) in columns.iter().enumerate() {
        for &r in col {
            rows[r].0.push(c);
        }
    }
    for c in 0..n {
        let p = (c..n).find(|&r| rows[r].0.binary_search(&c).is_ok())?;
        rows.swap(c, p);
        let (pv, pa) = rows[c].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != c && row.0.binary_search(&c).is_ok() {
                row.0 = xor(&row.0, &pv);
                row.1 = xor(&row.1, &pa);
            }
        }
    }
    // rows[r].1 is row r of the inverse; return columns
    let mut inv = vec![Vec::new(); n];
    for (r, (_, a)) in rows.iter().enumerate() {
        for &c in a {
            inv[c].push(r);
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xor_and_normalize() {
        assert_eq!(xor(&[1, 3, 5], &[3, 4]), vec![1, 4, 5]);
        assert_eq!(normalize(vec![5, 1, 5, 2, 2, 2]), vec![1, 2]);
    }

    #[test]
    fn kernel_of_boundary_of_triangle() {
        // edges 01, 12, 02 -> vertices; their sum is a cycle
        let images = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        let k = kernel(&images);
        assert_eq!(k, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn membership_and_reduction() {
        let e = span(&[vec![0, 1], vec![1, 2]]);
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[0, 2]));
        assert!(!e.contains(&[0]));
        assert_eq!(e.reduce(vec![0, 2]), Vec::<usize>::new());
        assert_eq!(e.reduce(vec![2, 3]).last(), Some(&3));
    }

    #[test]
    fn solve_finds_solution_or_reports_inconsistency() {
        // x0 + x1 = 1, x1 + x2 = 0, x2 = 1
        let rows = vec![(vec![0, 1], true), (vec![1, 2], false), (vec![2], true)];
        assert_eq!(solve(3, &rows), Some(vec![false, true, true]));
        let bad = vec![(vec![0], true), (vec![0], false)];
        assert_eq!(solve(1, &bad), None);
        assert_eq!(solve(70, &[(vec![69], true)]).map(|x| x[69]), Some(true));
    }

    #[test]
    fn inverse_of_unipotent_matrix() {
        // columns of [[1,1,0],[0,1,1],[0,0,1]]
        let m = vec![vec![0], vec![0, 1], vec![1, 2]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
        assert_eq!(invert(&[vec![0, 1], vec![0, 1]]), None);
    }
}
