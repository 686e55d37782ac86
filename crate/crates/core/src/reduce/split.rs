//! Splitting a standard chain off as a direct summand.
//!
//! Given generators `e_0, ..., e_2n` forming a zigzag through the
//! distinguished generator, look for filtered chain maps `f: S -> C` with
//! `f(x_i) = e_i + (lower terms)` and `g: C -> S` with `g f = id`, where `S` is
//! the abstract zigzag. Then `C = f(S) + ker g`, and the basis
//! `f(x_i)`, `b + f(g(b))` exhibits the splitting.

use std::collections::HashMap;

use super::Work;
use crate::cfk::BifilteredComplex;
use crate::f2::{self, SparseVec};

struct Vars {
    index: HashMap<(usize, usize), usize>,
}

impl Vars {
    fn new() -> Self {
        Self {
            index: HashMap::new(),
        }
    }

    fn add(&mut self, key: (usize, usize)) {
        let n = self.index.len();
        self.index.entry(key).or_insert(n);
    }

    fn get(&self, key: (usize, usize)) -> Option<usize> {
        self.index.get(&key).copied()
    }

    fn len(&self) -> usize {
        self.index.len()
    }
}

fn parity(m: i64) -> i64 {
    m.rem_euclid(2)
}

/// Rewrites `c` so that `chain` spans a direct summand, or returns `None` if
/// no such splitting extends the chain.
pub(crate) fn split_chain(c: &BifilteredComplex, chain: &[usize]) -> Option<BifilteredComplex> {
    let n = c.len();
    let m = chain.len();
    let w = Work::new(c);
    let slot: HashMap<usize, usize> = chain.iter().enumerate().map(|(k, &g)| (g, k)).collect();
    // s_out[i]: chain indices j with x_i -> x_j in the zigzag
    let mut s_out = vec![Vec::new(); m];
    for k in (1..m).step_by(2) {
        s_out[k].push(k - 1);
        if k + 1 < m {
            s_out[k].push(k + 1);
        }
    }
    let mut s_in = vec![Vec::new(); m];
    for (i, outs) in s_out.iter().enumerate() {
        for &j in outs {
            s_in[j].push(i);
        }
    }
    let maslov = |g: usize| w.gens[g].maslov;

    // f_i = e_i + sum of admissible b
    let mut fv = Vars::new();
    for (i, &e) in chain.iter().enumerate() {
        for b in 0..n {
            if w.can_add(e, b) {
                fv.add((i, b));
            }
        }
    }
    let mut rows = Vec::new();
    for (i, &e) in chain.iter().enumerate() {
        for t in (0..n).filter(|&t| parity(maslov(t)) == parity(maslov(e) - 1)) {
            // coefficient of t in d f_i + f(d x_i)
            let mut cols: Vec<usize> = w.sources[t]
                .iter()
                .filter_map(|&b| fv.get((i, b)))
                .collect();
            let mut rhs = w.targets[e].contains(&t);
            for &j in &s_out[i] {
                if let Some(v) = fv.get((j, t)) {
                    cols.push(v);
                }
                rhs ^= chain[j] == t;
            }
            let cols = f2::normalize(cols);
            if !cols.is_empty() || rhs {
                rows.push((cols, rhs));
            }
        }
    }
    let x = f2::solve(fv.len(), &rows)?;
    let f: Vec<SparseVec> = chain
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let mut v: Vec<usize> = (0..n)
                .filter(|&b| fv.get((i, b)).is_some_and(|k| x[k]))
                .collect();
            v.push(e);
            f2::normalize(v)
        })
        .collect();

    // g(b) = sum of x_i over admissible (b, i)
    let mut gv = Vars::new();
    for b in 0..n {
        for (i, &e) in chain.iter().enumerate() {
            if b == e || w.can_add(b, e) {
                gv.add((b, i));
            }
        }
    }
    let mut rows = Vec::new();
    for b in 0..n {
        for (i, &e) in chain.iter().enumerate() {
            if parity(maslov(e)) != parity(maslov(b) - 1) {
                continue;
            }
            // coefficient of x_i in g(d b) + d g(b)
            let mut cols: Vec<usize> = w.targets[b]
                .iter()
                .filter_map(|&t| gv.get((t, i)))
                .collect();
            cols.extend(s_in[i].iter().filter_map(|&j| gv.get((b, j))));
            let cols = f2::normalize(cols);
            if !cols.is_empty() {
                rows.push((cols, false));
            }
        }
    }
    for (i, fi) in f.iter().enumerate() {
        for k in 0..m {
            let cols = f2::normalize(fi.iter().filter_map(|&b| gv.get((b, k))).collect());
            rows.push((cols, i == k));
        }
    }
    let y = f2::solve(gv.len(), &rows)?;

    // new basis, one column per generator slot
    let basis: Vec<SparseVec> = (0..n)
        .map(|b| match slot.get(&b) {
            Some(&i) => f[i].clone(),
            None => f
                .iter()
                .enumerate()
                .filter(|&(i, _)| gv.get((b, i)).is_some_and(|k| y[k]))
                .fold(vec![b], |v, (_, fi)| f2::xor(&v, fi)),
        })
        .collect();
    let filtered = |cols: &[SparseVec]| {
        cols.iter()
            .enumerate()
            .all(|(s, col)| col.iter().all(|&r| r == s || w.can_add(s, r)))
    };
    let inverse = f2::invert(&basis)?;
    if !filtered(&basis) || !filtered(&inverse) {
        return None;
    }
    let mut pairs = Vec::new();
    for (s, col) in basis.iter().enumerate() {
        let mut image: SparseVec = Vec::new();
        for &b in col {
            let targets: Vec<usize> = w.targets[b].iter().copied().collect();
            image = f2::xor(&image, &targets);
        }
        let mut coords: SparseVec = Vec::new();
        for &t in &image {
            coords = f2::xor(&coords, &inverse[t]);
        }
        pairs.extend(coords.into_iter().map(|t| (s, t)));
    }
    let out = BifilteredComplex::from_pairs(w.gens.clone(), pairs);
    debug_assert!(out.validate().is_valid());
    Some(out)
}
