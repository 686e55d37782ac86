//! Mutable working copy of a complex for filtered changes of basis.
//!
//! Every arrow's U-power is implied by the gradings of its ends, so the
//! differential is stored as an F2 incidence structure in both directions.

use std::collections::BTreeSet;

use crate::cfk::{implied_upower, BifilteredComplex, Generator};

#[derive(Clone, Debug)]
pub(crate) struct Work {
    pub gens: Vec<Generator>,
    /// `targets[s]`: generators `t` with a term of `t` in `d s`.
    pub targets: Vec<BTreeSet<usize>>,
    /// `sources[t]`: generators `s` with a term of `t` in `d s`.
    pub sources: Vec<BTreeSet<usize>>,
    pub alive: Vec<bool>,
    /// Newly created arrows are reported here when recording is on.
    pub created: Vec<(usize, usize)>,
    pub record: bool,
}

impl Work {
    pub fn new(c: &BifilteredComplex) -> Self {
        let n = c.len();
        let mut targets = vec![BTreeSet::new(); n];
        let mut sources = vec![BTreeSet::new(); n];
        for a in c.arrows() {
            targets[a.from].insert(a.to);
            sources[a.to].insert(a.from);
        }
        Self {
            gens: c.generators().to_vec(),
            targets,
            sources,
            alive: vec![true; n],
            created: Vec::new(),
            record: false,
        }
    }

    pub fn upower(&self, s: usize, t: usize) -> i64 {
        implied_upower(&self.gens[s], &self.gens[t])
    }

    /// Filtration drops `(di, dj)` of the arrow `s -> t`.
    pub fn drops(&self, s: usize, t: usize) -> (i64, i64) {
        let n = self.upower(s, t);
        (n, self.gens[s].alexander - self.gens[t].alexander + n)
    }

    pub fn toggle(&mut self, s: usize, t: usize) {
        if self.targets[s].remove(&t) {
            self.sources[t].remove(&s);
        } else {
            self.targets[s].insert(t);
            self.sources[t].insert(s);
            if self.record {
                self.created.push((s, t));
            }
        }
    }

    /// Whether replacing basis element `a` by `a + U^k c` is a filtered
    /// change of basis, where `k` is forced by the gradings.
    pub fn can_add(&self, a: usize, c: usize) -> bool {
        let (ga, gc) = (&self.gens[a], &self.gens[c]);
        let diff = gc.maslov - ga.maslov;
        a != c && diff >= 0 && diff % 2 == 0 && gc.alexander - diff / 2 <= ga.alexander
    }

    /// Replaces basis element `a` by `a + U^k c`: column `a` gains column
    /// `c`, and row `c` gains row `a`.
    pub fn add_to(&mut self, a: usize, c: usize) {
        debug_assert!(self.can_add(a, c), "unfiltered change of basis");
        let col: Vec<usize> = self.targets[c].iter().copied().collect();
        for t in col {
            self.toggle(a, t);
        }
        let row: Vec<usize> = self.sources[a].iter().copied().collect();
        for s in row {
            self.toggle(s, c);
        }
    }

    /// Removes a generator together with all arrows touching it.
    pub fn kill(&mut self, g: usize) {
        for t in std::mem::take(&mut self.targets[g]) {
            self.sources[t].remove(&g);
        }
        for s in std::mem::take(&mut self.sources[g]) {
            self.targets[s].remove(&g);
        }
        self.alive[g] = false;
    }

    /// Surviving generators, in original order, and the resulting complex.
    pub fn finish(&self) -> (Vec<usize>, BifilteredComplex) {
        let keep: Vec<usize> = (0..self.gens.len()).filter(|&k| self.alive[k]).collect();
        let mut pos = vec![usize::MAX; self.gens.len()];
        for (n, &k) in keep.iter().enumerate() {
            pos[k] = n;
        }
        let gens = keep.iter().map(|&k| self.gens[k].clone()).collect();
        let pairs: Vec<(usize, usize)> = keep
            .iter()
            .flat_map(|&s| self.targets[s].iter().map(move |&t| (s, t)))
            .map(|(s, t)| (pos[s], pos[t]))
            .collect();
        (keep, BifilteredComplex::from_pairs(gens, pairs))
    }
}
