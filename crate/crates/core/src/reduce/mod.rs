//! Filtered simplification of bifiltered complexes.
//!
//! All moves here are filtered changes of basis over `F2[U, U^-1]` or
//! cancellations of zero-length arrows, so the filtered chain homotopy type
//! of the input is preserved.

mod split;
mod work;

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use crate::cfk::{ArrowKind, BifilteredComplex};
use crate::error::{Error, Result};
use crate::homology::{MiddleHomology, Slices};

pub(crate) use work::Work;

/// Cancels every arrow with zero drop in both filtrations.
///
/// For a cancelled pair `y -> x`, each other `z` with `x` in `dz` has `dy`
/// added to `dz`, then `x` and `y` are removed.
pub fn cancel_zero_arrows(c: &BifilteredComplex) -> BifilteredComplex {
    let mut w = Work::new(c);
    let order = name_ranks(c);
    loop {
        let next = (0..w.gens.len())
            .filter(|&y| w.alive[y])
            .flat_map(|y| w.targets[y].iter().map(move |&x| (y, x)))
            .filter(|&(y, x)| w.drops(y, x) == (0, 0))
            .min_by_key(|&(y, x)| (order[y], order[x]));
        let Some((y, x)) = next else { break };
        let others: Vec<usize> = w.sources[x].iter().copied().filter(|&z| z != y).collect();
        let dy: Vec<usize> = w.targets[y].iter().copied().collect();
        for z in others {
            for &t in &dy {
                w.toggle(z, t);
            }
        }
        w.kill(x);
        w.kill(y);
    }
    w.finish().1
}

/// Splits a complex into the connected components of its arrow graph, each
/// of which is a direct summand. Components are ordered by their first
/// generator.
pub fn split_components(c: &BifilteredComplex) -> Vec<BifilteredComplex> {
    let n = c.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for a in c.arrows() {
        let (r1, r2) = (find(&mut parent, a.from), find(&mut parent, a.to));
        if r1 != r2 {
            parent[r1.max(r2)] = r1.min(r2);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for k in 0..n {
        let r = find(&mut parent, k);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(k);
    }
    groups.iter().map(|g| c.restrict(g)).collect()
}

/// Homology of the whole complex as an `F2[U, U^-1]`-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalHomology {
    Acyclic,
    /// Free of rank one, generated in the given grading (0 or 1; the
    /// grading of a generator is only defined modulo 2).
    RankOne {
        grading: i64,
    },
    /// Ranks of the even and odd parts.
    Other {
        even: usize,
        odd: usize,
    },
}

impl GlobalHomology {
    pub fn is_knot_like(&self) -> bool {
        *self == GlobalHomology::RankOne { grading: 0 }
    }
}

impl fmt::Display for GlobalHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlobalHomology::Acyclic => write!(f, "acyclic"),
            GlobalHomology::RankOne { grading } => {
                write!(f, "free of rank 1 with generator in grading {grading}")
            }
            GlobalHomology::Other { even, odd } => {
                write!(f, "rank {even} in even and {odd} in odd gradings")
            }
        }
    }
}

/// Computes the homology of the complex over `F2[U, U^-1]`.
///
/// Every nonzero homogeneous element of `F2[U, U^-1]` is a unit, so the
/// homology is free and its rank is the F2-dimension of homology in
/// gradings 0 and 1.
pub fn check_global_homology(c: &BifilteredComplex) -> GlobalHomology {
    let slices = Slices::new(c);
    let all = |_: i64, _: i64| true;
    let dim_at = |g: i64| {
        let (up, mid, low) = (
            slices.slice(g + 1, all),
            slices.slice(g, all),
            slices.slice(g - 1, all),
        );
        MiddleHomology::compute(&slices, &up, &mid, &low).dim()
    };
    match (dim_at(0), dim_at(1)) {
        (0, 0) => GlobalHomology::Acyclic,
        (1, 0) => GlobalHomology::RankOne { grading: 0 },
        (0, 1) => GlobalHomology::RankOne { grading: 1 },
        (even, odd) => GlobalHomology::Other { even, odd },
    }
}

/// Kind of a pairing recorded in a simplified basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    Vertical,
    Horizontal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub source: String,
    pub target: String,
    pub kind: PairKind,
    pub length: i64,
}

/// A complex rewritten in a vertically simplified basis.
///
/// Basis elements keep the name and gradings of the original generator they
/// were built from. `distinguished` is the unique element with no vertical
/// arrow, which generates the homology of the `i = 0` column.
#[derive(Clone, Debug)]
pub struct SimplifiedBasis {
    pub complex: BifilteredComplex,
    pub distinguished: String,
    pub pairing: Vec<Pairing>,
}

impl SimplifiedBasis {
    pub fn distinguished_index(&self) -> usize {
        self.complex
            .index_of(&self.distinguished)
            .expect("distinguished generator belongs to the complex")
    }
}

/// Rank of each generator in name order; used for deterministic tie-breaks.
pub(crate) fn name_ranks(c: &BifilteredComplex) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..c.len()).collect();
    idx.sort_by(|&a, &b| c.generator(a).name.cmp(&c.generator(b).name));
    let mut rank = vec![0; c.len()];
    for (r, k) in idx.into_iter().enumerate() {
        rank[k] = r;
    }
    rank
}

/// Vertically simplifies a reduced complex.
///
/// Repeatedly takes the shortest vertical arrow `s -> t` between unpaired
/// elements (ties broken by name) and makes it an isolated pair: every other
/// vertical target `t'` of `s` is absorbed by replacing `t` with `t + t'`,
/// and every other vertical source `s'` of `t` by replacing `s'` with
/// `s' + s`. Minimality of the arrow makes both moves filtered.
pub fn vertically_simplify(c: &BifilteredComplex) -> Result<SimplifiedBasis> {
    if !c.is_reduced() {
        return Err(Error::Argument(
            "vertical simplification needs a reduced complex".into(),
        ));
    }
    let mut w = Work::new(c);
    let rank = name_ranks(c);
    let paired = simplify_vertical(&mut w, &rank);
    let unpaired: Vec<usize> = (0..w.gens.len()).filter(|&k| paired[k].is_none()).collect();
    let &[x0] = unpaired.as_slice() else {
        return Err(Error::NotKnotComplex(format!(
            "vertical homology not rank 1 ({} unpaired generators)",
            unpaired.len()
        )));
    };
    if w.gens[x0].maslov != 0 {
        return Err(Error::NotKnotComplex(format!(
            "vertical homology not rank 1 in grading 0 (generator in grading {})",
            w.gens[x0].maslov
        )));
    }
    let mut pairing: Vec<Pairing> = (0..w.gens.len())
        .filter_map(|s| match paired[s] {
            Some(Partner::Target(t)) => Some(Pairing {
                source: w.gens[s].name.clone(),
                target: w.gens[t].name.clone(),
                kind: PairKind::Vertical,
                length: w.gens[s].alexander - w.gens[t].alexander,
            }),
            _ => None,
        })
        .collect();
    pairing.sort_by(|a, b| a.source.cmp(&b.source));
    let (_, complex) = w.finish();
    Ok(SimplifiedBasis {
        distinguished: w.gens[x0].name.clone(),
        complex,
        pairing,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Partner {
    Target(usize),
    Source(usize),
}

fn is_vertical(w: &Work, s: usize, t: usize) -> bool {
    w.upower(s, t) == 0
}

pub(crate) fn simplify_vertical(w: &mut Work, rank: &[usize]) -> Vec<Option<Partner>> {
    let n = w.gens.len();
    let mut paired: Vec<Option<Partner>> = vec![None; n];
    let key = |w: &Work, s: usize, t: usize| {
        Reverse((
            w.gens[s].alexander - w.gens[t].alexander,
            rank[s],
            rank[t],
            s,
            t,
        ))
    };
    let mut heap = BinaryHeap::new();
    for s in 0..n {
        for &t in &w.targets[s] {
            if is_vertical(w, s, t) {
                heap.push(key(w, s, t));
            }
        }
    }
    w.record = true;
    while let Some(Reverse((_, _, _, s, t))) = heap.pop() {
        if paired[s].is_some() || paired[t].is_some() || !w.targets[s].contains(&t) {
            continue;
        }
        let extra_targets: Vec<usize> = w.targets[s]
            .iter()
            .copied()
            .filter(|&u| u != t && is_vertical(w, s, u))
            .collect();
        for u in extra_targets {
            w.add_to(t, u);
        }
        let extra_sources: Vec<usize> = w.sources[t]
            .iter()
            .copied()
            .filter(|&u| u != s && is_vertical(w, u, t))
            .collect();
        for u in extra_sources {
            w.add_to(u, s);
        }
        paired[s] = Some(Partner::Target(t));
        paired[t] = Some(Partner::Source(s));
        for (a, b) in std::mem::take(&mut w.created) {
            if is_vertical(w, a, b) {
                heap.push(key(w, a, b));
            }
        }
    }
    w.record = false;
    paired
}

/// Result of reading the chain through the distinguished generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardForm {
    Standard(Vec<i64>),
    NotStandard(String),
}

impl StandardForm {
    pub fn lengths(&self) -> Option<&[i64]> {
        match self {
            StandardForm::Standard(v) => Some(v),
            StandardForm::NotStandard(_) => None,
        }
    }
}

impl fmt::Display for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardForm::Standard(v) => {
                let parts: Vec<String> = v.iter().map(|b| b.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            StandardForm::NotStandard(why) => write!(f, "not standard ({why})"),
        }
    }
}

/// The chain read from the distinguished generator: alternately the unique
/// incoming horizontal arrow and the vertical partner of its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// Generator indices `x_0, x_1, ..., x_2n` in the simplified complex.
    pub generators: Vec<usize>,
    /// Arrow lengths `b_1, ..., b_2n` in order along the chain.
    pub lengths: Vec<i64>,
}

/// Follows the chain through the distinguished generator.
pub fn read_chain(basis: &SimplifiedBasis) -> std::result::Result<Chain, String> {
    let c = &basis.complex;
    let mut incoming_h: Vec<Vec<(usize, i64)>> = vec![Vec::new(); c.len()];
    let mut vertical_out: Vec<Vec<(usize, i64)>> = vec![Vec::new(); c.len()];
    for a in c.arrows() {
        match c.arrow_kind(a) {
            ArrowKind::Horizontal => incoming_h[a.to].push((a.from, a.upower)),
            ArrowKind::Vertical => vertical_out[a.from].push((
                a.to,
                c.generator(a.from).alexander - c.generator(a.to).alexander,
            )),
            _ => {}
        }
    }
    let mut current = basis.distinguished_index();
    let mut generators = vec![current];
    let mut lengths = Vec::new();
    let mut seen = BTreeSet::from([current]);
    loop {
        let into = &incoming_h[current];
        match into.as_slice() {
            [] => break,
            [(src, len)] => {
                lengths.push(*len);
                let src = *src;
                let &[(next, vlen)] = vertical_out[src].as_slice() else {
                    return Err(format!(
                        "{} has {} vertical partners",
                        c.generator(src).name,
                        vertical_out[src].len()
                    ));
                };
                lengths.push(vlen);
                if !seen.insert(src) || !seen.insert(next) {
                    return Err("chain revisits a generator".into());
                }
                generators.push(src);
                generators.push(next);
                current = next;
            }
            many => {
                return Err(format!(
                    "{} has {} incoming horizontal arrows",
                    c.generator(current).name,
                    many.len()
                ))
            }
        }
    }
    Ok(Chain {
        generators,
        lengths,
    })
}

/// Standard-form notation `[b_1, ..., b_n]` of the chain through the
/// distinguished generator: the arrow lengths up to the point of symmetry.
pub fn standard_form(basis: &SimplifiedBasis) -> StandardForm {
    let chain = match read_chain(basis) {
        Ok(chain) => chain,
        Err(why) => return StandardForm::NotStandard(why),
    };
    let l = &chain.lengths;
    let n = l.len();
    if (0..n).any(|k| l[k] != l[n - 1 - k]) {
        return StandardForm::NotStandard(format!("chain lengths {l:?} are not symmetric"));
    }
    let c = &basis.complex;
    let x0 = basis.distinguished_index();
    if n == 0
        && c.arrows()
            .any(|a| a.from == x0 && c.arrow_kind(a) == ArrowKind::Horizontal)
    {
        return StandardForm::NotStandard(
            "the distinguished generator emits a horizontal arrow; read the mirror instead".into(),
        );
    }
    let inside: BTreeSet<usize> = chain.generators.iter().copied().collect();
    if let Some(a) = c
        .arrows()
        .find(|a| inside.contains(&a.from) != inside.contains(&a.to))
    {
        return StandardForm::NotStandard(format!(
            "chain is not a direct summand ({} -> {} leaves it)",
            c.generator(a.from).name,
            c.generator(a.to).name
        ));
    }
    StandardForm::Standard(l[..n.div_ceil(2)].to_vec())
}

/// Vertical simplification followed by a horizontal pass and, when the chain
/// through the distinguished generator reads as a zigzag, splitting that chain
/// off as a direct summand.
///
/// The horizontal pass mirrors [`vertically_simplify`] in the other filtration
/// but only uses moves that keep every vertical pair intact; it can leave
/// diagonal arrows behind. Splitting solves for filtered chain maps
/// `f: S -> C`, `g: C -> S` with `g f = id` and rewrites the basis so `f(S)`
/// is a connected component.
pub fn simplify(c: &BifilteredComplex) -> Result<SimplifiedBasis> {
    let vertical = vertically_simplify(c)?;
    let complex = simplify_horizontal(&vertical);
    let mut basis = SimplifiedBasis {
        pairing: pairings_of(&complex),
        complex,
        distinguished: vertical.distinguished,
    };
    if let Ok(chain) = read_chain(&basis) {
        if let Some(split) = split::split_chain(&basis.complex, &chain.generators) {
            basis.pairing = pairings_of(&split);
            basis.complex = split;
        }
    }
    Ok(basis)
}

/// The connected component of a simplified basis through its distinguished
/// generator.
pub fn distinguished_component(basis: &SimplifiedBasis) -> BifilteredComplex {
    split_components(&basis.complex)
        .into_iter()
        .find(|part| part.index_of(&basis.distinguished).is_some())
        .expect("every generator lies in a component")
}

/// Every vertical and horizontal arrow, sorted by source then target name.
fn pairings_of(c: &BifilteredComplex) -> Vec<Pairing> {
    let mut out: Vec<Pairing> = c
        .arrows()
        .filter_map(|a| {
            let (s, t) = (c.generator(a.from), c.generator(a.to));
            let (kind, length) = match c.arrow_kind(a) {
                ArrowKind::Vertical => (PairKind::Vertical, s.alexander - t.alexander),
                ArrowKind::Horizontal => (PairKind::Horizontal, a.upower),
                _ => return None,
            };
            Some(Pairing {
                source: s.name.clone(),
                target: t.name.clone(),
                kind,
                length,
            })
        })
        .collect();
    out.sort_by(|a, b| (&a.source, &a.target).cmp(&(&b.source, &b.target)));
    out
}

fn is_horizontal(w: &Work, s: usize, t: usize) -> bool {
    let (di, dj) = w.drops(s, t);
    di > 0 && dj == 0
}

/// Shortest horizontal arrow first. Other horizontal targets of the source
/// and other horizontal sources of the target are absorbed with moves from
/// [`try_add`]; when the preferred direction is not allowed and the arrows
/// have equal length, the roles are swapped instead.
fn simplify_horizontal(basis: &SimplifiedBasis) -> BifilteredComplex {
    let c = &basis.complex;
    let mut w = Work::new(c);
    let rank = name_ranks(c);
    let n = w.gens.len();
    let mut role: Vec<Option<Partner>> = vec![None; n];
    for p in basis
        .pairing
        .iter()
        .filter(|p| p.kind == PairKind::Vertical)
    {
        let (s, t) = (basis_index(c, &p.source), basis_index(c, &p.target));
        role[s] = Some(Partner::Target(t));
        role[t] = Some(Partner::Source(s));
    }
    let key = |w: &Work, s: usize, t: usize| Reverse((w.upower(s, t), rank[s], rank[t], s, t));
    let mut heap = BinaryHeap::new();
    for s in 0..n {
        for &t in &w.targets[s] {
            if is_horizontal(&w, s, t) {
                heap.push(key(&w, s, t));
            }
        }
    }
    let mut done = vec![false; n];
    w.record = true;
    while let Some(Reverse((len, _, _, mut s, mut t))) = heap.pop() {
        if done[s] || done[t] || !w.targets[s].contains(&t) {
            continue;
        }
        let extra: Vec<usize> = w.targets[s]
            .iter()
            .copied()
            .filter(|&u| u != t && is_horizontal(&w, s, u))
            .collect();
        for u in extra {
            if !w.targets[s].contains(&u) || try_add(&mut w, &role, t, u) {
                continue;
            }
            if w.upower(s, u) == len && try_add(&mut w, &role, u, t) {
                t = u;
            }
        }
        let extra: Vec<usize> = w.sources[t]
            .iter()
            .copied()
            .filter(|&u| u != s && is_horizontal(&w, u, t))
            .collect();
        for u in extra {
            if !w.sources[t].contains(&u) || w.upower(u, t) < len || try_add(&mut w, &role, u, s) {
                continue;
            }
            if w.upower(u, t) == len && try_add(&mut w, &role, s, u) {
                s = u;
            }
        }
        done[s] = true;
        done[t] = true;
        for (a, b) in std::mem::take(&mut w.created) {
            if is_horizontal(&w, a, b) {
                heap.push(key(&w, a, b));
            }
        }
    }
    w.finish().1
}

fn basis_index(c: &BifilteredComplex, name: &str) -> usize {
    c.index_of(name)
        .expect("pairing names belong to the complex")
}

/// Replaces `a` by `a + U^k c` if that keeps every vertical pair intact.
///
/// Moves with `k >= 1` never touch arrows of U-power 0. With `k = 0`, `a`
/// must not gain a vertical target and `c` must not gain a vertical source;
/// a source added to a source, or a target to a target, is compensated by
/// the same move on their partners.
fn try_add(w: &mut Work, role: &[Option<Partner>], a: usize, c: usize) -> bool {
    if !w.can_add(a, c) {
        return false;
    }
    if w.gens[c].maslov > w.gens[a].maslov {
        w.add_to(a, c);
        return true;
    }
    match (role[a], role[c]) {
        (None | Some(Partner::Target(_)), None | Some(Partner::Source(_))) => {
            w.add_to(a, c);
            true
        }
        (Some(Partner::Target(ta)), Some(Partner::Target(tc))) if w.can_add(ta, tc) => {
            w.add_to(a, c);
            w.add_to(ta, tc);
            true
        }
        (Some(Partner::Source(sa)), Some(Partner::Source(sc))) if w.can_add(sa, sc) => {
            w.add_to(a, c);
            w.add_to(sa, sc);
            true
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfk::{dual, staircase, tensor, Generator};
    use crate::laurent::StaircaseExponents;

    fn stair(a: &[i64]) -> BifilteredComplex {
        staircase(&StaircaseExponents::new(a.to_vec()).unwrap())
    }

    fn summand() -> BifilteredComplex {
        stair(&[2, 0, -2])
    }

    fn box_complex() -> BifilteredComplex {
        BifilteredComplex::from_named(
            vec![
                Generator::new("a", 1, 1),
                Generator::new("b", 2, 2),
                Generator::new("c", 0, 0),
                Generator::new("d", 1, 1),
            ],
            [("a", "b", 1), ("a", "c", 0), ("b", "d", 0), ("c", "d", 1)],
        )
        .unwrap()
    }

    #[test]
    fn zero_arrows_cancel() {
        let pair = BifilteredComplex::from_named(
            vec![Generator::new("p", 1, 0), Generator::new("q", 0, 0)],
            [("p", "q", 0)],
        )
        .unwrap();
        let c = BifilteredComplex::unknot().direct_sum(&pair).unwrap();
        let r = cancel_zero_arrows(&c);
        assert_eq!(r, BifilteredComplex::unknot());
        assert_eq!(check_global_homology(&c), check_global_homology(&r));
        assert!(cancel_zero_arrows(&pair).is_empty());
        let t = stair(&[3, 2, 0, -2, -3]);
        assert_eq!(cancel_zero_arrows(&t), t);
    }

    #[test]
    fn zero_arrow_cancellation_corrects_other_sources() {
        // z -> x at (0,0) via y; z also hits x, so z picks up dy - x = w
        let c = BifilteredComplex::from_named(
            vec![
                Generator::new("y", 1, 0),
                Generator::new("x", 0, 0),
                Generator::new("w", 0, -1),
                Generator::new("z", 1, 1),
            ],
            [("y", "x", 0), ("y", "w", 0), ("z", "x", 0)],
        )
        .unwrap();
        let r = cancel_zero_arrows(&c);
        assert_eq!(r.len(), 2);
        assert!(r.validate().is_valid());
        let (z, w) = (r.index_of("z").unwrap(), r.index_of("w").unwrap());
        assert_eq!(r.arrow_between(z, w), Some(0));
    }

    #[test]
    fn components() {
        assert_eq!(split_components(&summand()).len(), 1);
        let two = summand()
            .direct_sum(&stair(&[1, 0, -1]).relabel(|n| format!("{n}'")).unwrap())
            .unwrap();
        let parts = split_components(&two);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.validate().is_valid()));
        assert_eq!(parts.iter().map(|p| p.len()).sum::<usize>(), two.len());
    }

    #[test]
    fn global_homology() {
        assert_eq!(
            check_global_homology(&BifilteredComplex::unknot()),
            GlobalHomology::RankOne { grading: 0 }
        );
        assert_eq!(
            check_global_homology(&summand()),
            GlobalHomology::RankOne { grading: 0 }
        );
        assert_eq!(
            check_global_homology(&box_complex()),
            GlobalHomology::Acyclic
        );
        let two = summand()
            .direct_sum(&summand().relabel(|n| format!("{n}'")).unwrap())
            .unwrap();
        assert_eq!(
            check_global_homology(&two),
            GlobalHomology::Other { even: 2, odd: 0 }
        );
    }

    #[test]
    fn distinguished_generators() {
        let t25 = stair(&[2, 1, 0, -1, -2]);
        let b = vertically_simplify(&t25).unwrap();
        assert_eq!(b.distinguished, "x0");
        assert_eq!(b.complex.generator(b.distinguished_index()).alexander, 2);
        assert_eq!(vertically_simplify(&summand()).unwrap().distinguished, "x0");
        assert_eq!(
            vertically_simplify(&BifilteredComplex::unknot())
                .unwrap()
                .distinguished,
            "x0"
        );
        assert!(matches!(
            vertically_simplify(&box_complex()),
            Err(Error::NotKnotComplex(_))
        ));
    }

    #[test]
    fn vertical_simplification_pairs_everything_but_one() {
        let c = tensor(
            &stair(&[6, 5, 2, 0, -2, -5, -6]),
            &dual(&stair(&[4, 3, 0, -3, -4])),
        );
        let b = vertically_simplify(&c).unwrap();
        assert!(b.complex.validate().is_valid());
        assert_eq!(b.pairing.len(), (c.len() - 1) / 2);
        let mut seen = BTreeSet::new();
        for p in &b.pairing {
            assert!(seen.insert(p.source.clone()) && seen.insert(p.target.clone()));
            assert!(p.length > 0);
        }
        assert!(!seen.contains(&b.distinguished));
        let vertical = b
            .complex
            .arrows()
            .filter(|a| b.complex.arrow_kind(a) == ArrowKind::Vertical)
            .count();
        assert_eq!(vertical, b.pairing.len());
        assert_eq!(check_global_homology(&b.complex), check_global_homology(&c));
    }

    #[test]
    fn staircase_standard_forms() {
        let form = |a: &[i64]| standard_form(&vertically_simplify(&stair(a)).unwrap());
        assert_eq!(form(&[4, 3, 0, -3, -4]), StandardForm::Standard(vec![1, 3]));
        assert_eq!(form(&[2, 0, -2]), StandardForm::Standard(vec![2]));
        assert_eq!(
            form(&[6, 5, 2, 0, -2, -5, -6]),
            StandardForm::Standard(vec![1, 3, 2])
        );
        assert_eq!(form(&[0]), StandardForm::Standard(vec![]));
    }

    #[test]
    fn dual_staircase_is_not_read_as_standard() {
        let b = simplify(&dual(&stair(&[1, 0, -1]))).unwrap();
        assert!(matches!(standard_form(&b), StandardForm::NotStandard(_)));
    }

    #[test]
    fn mixed_sum_splits_off_the_short_chain() {
        let c = tensor(
            &stair(&[6, 5, 2, 0, -2, -5, -6]),
            &dual(&stair(&[4, 3, 0, -3, -4])),
        );
        let b = simplify(&c).unwrap();
        assert!(b.complex.validate().is_valid());
        assert_eq!(standard_form(&b), StandardForm::Standard(vec![2]));
        let chain = read_chain(&b).unwrap();
        let k = &b.complex;
        let grades: Vec<(i64, i64)> = chain
            .generators
            .iter()
            .map(|&g| (k.generator(g).maslov, k.generator(g).alexander))
            .collect();
        assert_eq!(grades, vec![(0, 2), (-3, 0), (-4, -2)]);
        let (x, y, z) = (
            chain.generators[0],
            chain.generators[1],
            chain.generators[2],
        );
        assert_eq!(k.arrow_between(y, x), Some(2));
        assert_eq!(k.arrow_between(y, z), Some(0));
        let parts = split_components(k);
        let home: Vec<_> = parts
            .iter()
            .filter(|p| check_global_homology(p) != GlobalHomology::Acyclic)
            .collect();
        assert_eq!(home.len(), 1);
        assert_eq!(*home[0], distinguished_component(&b));
        assert_eq!(home[0].len(), 3);
    }

    #[test]
    fn sum_with_own_mirror_leaves_an_isolated_generator() {
        let t = stair(&[1, 0, -1]);
        let b = simplify(&tensor(&t, &dual(&t))).unwrap();
        assert_eq!(standard_form(&b), StandardForm::Standard(vec![]));
        let x0 = b.distinguished_index();
        assert!(b.complex.arrows().all(|a| a.from != x0 && a.to != x0));
    }

    #[test]
    fn standard_form_display() {
        assert_eq!(
            StandardForm::Standard(vec![1, 3, 2]).to_string(),
            "[1, 3, 2]"
        );
        assert_eq!(StandardForm::Standard(vec![]).to_string(), "[]");
    }
}
