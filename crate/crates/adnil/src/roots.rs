//! Classical root systems, the root poset, and ad-nilpotent ideals.
//!
//! Positive roots are stored in a fixed table and ideals as bitsets over
//! that table, so closure and comparison are cheap enough to enumerate the
//! whole ideal lattice at small rank. Poset comparability is decided by an
//! exact integer solve against the simple-root basis; coordinate
//! differences alone are not enough in type D.

use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt;

/// Simple classical type. `A` systems are indexed by matrix size `n`
/// (the algebra is `sl(n)`, rank `n - 1`); `B`, `C`, `D` by rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A,
    B,
    C,
    D,
}

impl Kind {
    pub fn parse(s: &str) -> Result<Kind> {
        match s.trim() {
            "A" | "a" => Ok(Kind::A),
            "B" | "b" => Ok(Kind::B),
            "C" | "c" => Ok(Kind::C),
            "D" | "d" => Ok(Kind::D),
            other => Err(Error::InvalidInput(format!(
                "unknown type {other:?}; expected one of A, B, C, D"
            ))),
        }
    }

    pub fn min_size(self) -> usize {
        match self {
            Kind::A | Kind::B | Kind::C => 2,
            Kind::D => 3,
        }
    }

    /// Partition total labelling an orbit: `n` for A(n), `2n+1` for B(n),
    /// `2n` for C(n) and D(n).
    pub fn partition_total(self, size: usize) -> usize {
        match self {
            Kind::A => size,
            Kind::B => 2 * size + 1,
            Kind::C | Kind::D => 2 * size,
        }
    }

    /// Inverse of [`Kind::partition_total`].
    pub fn size_for_total(self, total: usize) -> Result<usize> {
        let size = match self {
            Kind::A => total,
            Kind::B => {
                if total.is_multiple_of(2) {
                    return Err(Error::Validation(format!(
                        "type B needs an odd total, got {total}"
                    )));
                }
                (total - 1) / 2
            }
            Kind::C | Kind::D => {
                if total % 2 == 1 {
                    return Err(Error::Validation(format!(
                        "type {self} needs an even total, got {total}"
                    )));
                }
                total / 2
            }
        };
        if size < self.min_size() {
            return Err(Error::Validation(format!(
                "total {total} gives size {size}, below the minimum {} for type {self}",
                self.min_size()
            )));
        }
        Ok(size)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Kind::A => 'A',
            Kind::B => 'B',
            Kind::C => 'C',
            Kind::D => 'D',
        };
        write!(f, "{c}")
    }
}

/// One root, as its integer coordinate vector in the `e`-basis:
/// `e_i - e_j` has `+1` at `i` and `-1` at `j`, `2e_i` has `2` at `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Root {
        Root { coords }
    }

    fn e_minus_e(n: usize, i: usize, j: usize) -> Root {
        let mut c = vec![0; n];
        c[i - 1] = 1;
        c[j - 1] = -1;
        Root::new(c)
    }

    fn e_plus_e(n: usize, i: usize, j: usize) -> Root {
        let mut c = vec![0; n];
        c[i - 1] = 1;
        c[j - 1] += 1; // i == j gives 2e_i
        Root::new(c)
    }

    fn single(n: usize, i: usize, v: i64) -> Root {
        let mut c = vec![0; n];
        c[i - 1] = v;
        Root::new(c)
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coords.iter().map(|x| -x).collect())
    }

    /// Value `alpha(H)` for a diagonal Cartan element with entries `h`.
    pub fn eval(&self, h: &[i64]) -> i64 {
        self.coords.iter().zip(h).map(|(c, v)| c * v).sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz: Vec<(usize, i64)> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i + 1, c))
            .collect();
        match nz.as_slice() {
            [(i, 1)] => write!(f, "e{i}"),
            [(i, 2)] => write!(f, "2e{i}"),
            [(i, 1), (j, 1)] => write!(f, "e{i}+e{j}"),
            [(i, 1), (j, -1)] => write!(f, "e{i}-e{j}"),
            _ => {
                // negative or otherwise non-standard vector
                write!(f, "(")?;
                for (k, c) in self.coords.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Bitset over the positive-root table of one [`RootSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn singleton(i: usize) -> RootSet {
        RootSet(1u128 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

/// An upward-closed set of positive roots together with its antichain of
/// minimal generators. Always produced by (and tied to) one [`RootSystem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdNilpotentIdeal {
    set: RootSet,
    generators: Vec<usize>,
}

impl AdNilpotentIdeal {
    pub fn dim(&self) -> usize {
        self.set.len()
    }

    pub fn root_set(&self) -> RootSet {
        self.set
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.set.contains(idx)
    }

    pub fn roots<'a>(&self, rs: &'a RootSystem) -> Vec<&'a Root> {
        self.set.iter().map(|i| &rs.positives[i]).collect()
    }

    pub fn generators<'a>(&self, rs: &'a RootSystem) -> Vec<&'a Root> {
        self.generators.iter().map(|&i| &rs.positives[i]).collect()
    }

    pub fn is_subset_of(&self, other: &AdNilpotentIdeal) -> bool {
        self.set.is_subset(other.set)
    }
}

/// A classical root system with its positive-root table and poset structure.
#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: Kind,
    size: usize,
    positives: Vec<Root>,
    simples: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    /// `up[i]` = bitset of all `j` with `positives[i] <= positives[j]`.
    up: Vec<RootSet>,
    /// `down[i]` = bitset of all `j` with `positives[j] <= positives[i]`.
    down: Vec<RootSet>,
}

impl RootSystem {
    /// Builds the system of the given kind. `size` is the matrix size for
    /// type A and the rank for B, C, D.
    pub fn build(kind: Kind, size: usize) -> Result<RootSystem> {
        if size < kind.min_size() {
            return Err(Error::InvalidInput(format!(
                "type {kind} needs size >= {}, got {size}",
                kind.min_size()
            )));
        }
        let n = size;
        let mut positives = Vec::new();
        match kind {
            Kind::A => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        positives.push(Root::e_minus_e(n, i, j));
                    }
                }
            }
            Kind::B | Kind::C | Kind::D => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        positives.push(Root::e_minus_e(n, i, j));
                    }
                }
                for i in 1..=n {
                    for j in i + 1..=n {
                        positives.push(Root::e_plus_e(n, i, j));
                    }
                }
                match kind {
                    Kind::B => (1..=n).for_each(|i| positives.push(Root::single(n, i, 1))),
                    Kind::C => (1..=n).for_each(|i| positives.push(Root::single(n, i, 2))),
                    Kind::D => {}
                    Kind::A => unreachable!(),
                }
            }
        }
        if positives.len() > 128 {
            return Err(Error::InvalidInput(format!(
                "type {kind} size {size} has {} positive roots; this build supports at most 128",
                positives.len()
            )));
        }

        let mut simples = Vec::new();
        match kind {
            Kind::A => (1..n).for_each(|i| simples.push(Root::e_minus_e(n, i, i + 1))),
            Kind::B => {
                (1..n).for_each(|i| simples.push(Root::e_minus_e(n, i, i + 1)));
                simples.push(Root::single(n, n, 1));
            }
            Kind::C => {
                (1..n).for_each(|i| simples.push(Root::e_minus_e(n, i, i + 1)));
                simples.push(Root::single(n, n, 2));
            }
            Kind::D => {
                (1..n).for_each(|i| simples.push(Root::e_minus_e(n, i, i + 1)));
                simples.push(Root::e_plus_e(n, n - 1, n));
            }
        }

        let index: HashMap<Vec<i64>, usize> = positives
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();

        let np = positives.len();
        let mut up = vec![RootSet::EMPTY; np];
        let mut down = vec![RootSet::EMPTY; np];
        for i in 0..np {
            for j in 0..np {
                let diff: Vec<i64> = positives[j]
                    .coords
                    .iter()
                    .zip(&positives[i].coords)
                    .map(|(b, a)| b - a)
                    .collect();
                if in_positive_root_lattice(kind, &diff) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }

        Ok(RootSystem {
            kind,
            size,
            positives,
            simples,
            index,
            up,
            down,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Matrix size for A, rank for B/C/D (the build parameter).
    pub fn size(&self) -> usize {
        self.size
    }

    /// Rank of the algebra: `size - 1` for A, `size` otherwise.
    pub fn rank(&self) -> usize {
        match self.kind {
            Kind::A => self.size - 1,
            _ => self.size,
        }
    }

    /// Length of root coordinate vectors.
    pub fn coord_len(&self) -> usize {
        self.size
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positives
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simples
    }

    pub fn num_positive(&self) -> usize {
        self.positives.len()
    }

    pub fn borel_dim(&self) -> usize {
        self.positives.len() + self.rank()
    }

    pub fn algebra_dim(&self) -> usize {
        2 * self.positives.len() + self.rank()
    }

    pub fn index_of(&self, root: &Root) -> Result<usize> {
        self.index
            .get(&root.coords)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("{root} is not a positive root here")))
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.positives[idx]
    }

    /// Is `v` a root (of either sign)?
    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    /// Root-poset order: `a <= b` iff `b - a` is a nonnegative integer
    /// combination of simple roots. Reflexive.
    pub fn root_leq(&self, a: &Root, b: &Root) -> Result<bool> {
        let i = self.index_of(a)?;
        let j = self.index_of(b)?;
        Ok(self.leq_idx(i, j))
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Upward closure of `i` in the poset (bitset of everything `>= i`).
    pub fn up_set(&self, i: usize) -> RootSet {
        self.up[i]
    }

    pub fn is_upward_closed(&self, set: RootSet) -> bool {
        set.iter().all(|i| self.up[i].is_subset(set))
    }

    fn minimal_of(&self, set: RootSet) -> Vec<usize> {
        set.iter()
            .filter(|&i| {
                let below = RootSet(self.down[i].0 & set.0);
                below.len() == 1
            })
            .collect()
    }

    /// Smallest upward-closed set containing `gens`, with its minimal
    /// generators recomputed.
    pub fn close_upward(&self, gens: &[Root]) -> Result<AdNilpotentIdeal> {
        let idx: Vec<usize> = gens
            .iter()
            .map(|g| self.index_of(g))
            .collect::<Result<_>>()?;
        Ok(self.close_upward_indices(&idx))
    }

    pub fn close_upward_indices(&self, gens: &[usize]) -> AdNilpotentIdeal {
        let mut set = RootSet::EMPTY;
        for &g in gens {
            set = set.union(self.up[g]);
        }
        AdNilpotentIdeal {
            set,
            generators: self.minimal_of(set),
        }
    }

    pub fn ideal_from_set(&self, set: RootSet) -> Result<AdNilpotentIdeal> {
        if !self.is_upward_closed(set) {
            return Err(Error::InvalidInput(
                "root set is not upward closed".to_string(),
            ));
        }
        Ok(AdNilpotentIdeal {
            set,
            generators: self.minimal_of(set),
        })
    }

    /// Minimal elements of an upward-closed set of roots.
    pub fn minimal_generators(&self, roots: &[Root]) -> Result<Vec<Root>> {
        let mut set = RootSet::EMPTY;
        for r in roots {
            set.insert(self.index_of(r)?);
        }
        let ideal = self.ideal_from_set(set)?;
        Ok(ideal.generators(self).into_iter().cloned().collect())
    }

    /// Weak incomparability: no difference of two distinct members is a root.
    pub fn is_weak_antichain(&self, s: &[Root]) -> Result<bool> {
        for r in s {
            self.index_of(r)?;
        }
        for (i, a) in s.iter().enumerate() {
            for b in &s[i + 1..] {
                let diff: Vec<i64> = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
                if self.is_root(&diff) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff no two distinct members are comparable in the root poset.
    pub fn is_antichain(&self, s: &[Root]) -> Result<bool> {
        let idx: Vec<usize> = s.iter().map(|r| self.index_of(r)).collect::<Result<_>>()?;
        for (k, &i) in idx.iter().enumerate() {
            for &j in &idx[k + 1..] {
                if i == j || self.leq_idx(i, j) || self.leq_idx(j, i) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All ad-nilpotent ideals, one per antichain, in lexicographic order of
    /// the antichain's sorted root indices (the zero ideal comes first).
    pub fn ideals(&self) -> IdealIter<'_> {
        IdealIter {
            rs: self,
            stack: vec![Frame {
                chain: Vec::new(),
                closure: RootSet::EMPTY,
                next: 0,
            }],
        }
    }

    /// Type-A Ferrers encoding: for each row `i` in `1..n`, the smallest
    /// column `j` with `e_i - e_j` in the ideal, or `n + 1` for an empty row.
    pub fn ferrers(&self, ideal: &AdNilpotentIdeal) -> Result<Vec<usize>> {
        if self.kind != Kind::A {
            return Err(Error::InvalidInput(format!(
                "Ferrers encoding is defined for type A only, not {}",
                self.kind
            )));
        }
        let n = self.size;
        let mut starts = Vec::with_capacity(n - 1);
        for i in 1..n {
            let start = (i + 1..=n)
                .find(|&j| {
                    let idx = self.index[&Root::e_minus_e(n, i, j).coords];
                    ideal.contains(idx)
                })
                .unwrap_or(n + 1);
            starts.push(start);
        }
        Ok(starts)
    }
}

/// Decides membership of `diff` in the nonnegative span of the simple roots,
/// by the exact (unimodular) change of basis. No search is involved.
fn in_positive_root_lattice(kind: Kind, diff: &[i64]) -> bool {
    let n = diff.len();
    match kind {
        Kind::A => {
            // c_k = sum of the first k coordinates; c_n must vanish.
            let mut acc = 0;
            for (k, d) in diff.iter().enumerate() {
                acc += d;
                if k + 1 < n {
                    if acc < 0 {
                        return false;
                    }
                } else if acc != 0 {
                    return false;
                }
            }
            true
        }
        Kind::B => {
            let mut acc = 0;
            for d in diff {
                acc += d;
                if acc < 0 {
                    return false;
                }
            }
            true
        }
        Kind::C => {
            let mut acc = 0;
            for (k, d) in diff.iter().enumerate() {
                acc += d;
                if k + 1 < n {
                    if acc < 0 {
                        return false;
                    }
                } else {
                    // last simple root is 2e_n
                    if acc < 0 || acc % 2 != 0 {
                        return false;
                    }
                }
            }
            true
        }
        Kind::D => {
            let mut acc = 0;
            for (k, d) in diff.iter().enumerate() {
                if k + 2 < n {
                    acc += d;
                    if acc < 0 {
                        return false;
                    }
                }
            }
            // remaining coefficients come from the fork e_{n-1}-e_n, e_{n-1}+e_n
            let p = acc; // sum of the first n-2 coordinates
            let a = diff[n - 2];
            let b = diff[n - 1];
            let two_c_minus = p + a - b;
            let two_c_plus = p + a + b;
            two_c_minus >= 0 && two_c_plus >= 0 && two_c_minus % 2 == 0 && two_c_plus % 2 == 0
        }
    }
}

struct Frame {
    chain: Vec<usize>,
    closure: RootSet,
    next: usize,
}

/// Depth-first enumeration of antichains; see [`RootSystem::ideals`].
pub struct IdealIter<'a> {
    rs: &'a RootSystem,
    stack: Vec<Frame>,
}

impl Iterator for IdealIter<'_> {
    type Item = AdNilpotentIdeal;

    fn next(&mut self) -> Option<AdNilpotentIdeal> {
        let frame = self.stack.pop()?;
        let np = self.rs.num_positive();
        // push extensions in reverse so the smallest next index pops first
        for c in (frame.next..np).rev() {
            let incomparable = frame
                .chain
                .iter()
                .all(|&a| !self.rs.leq_idx(a, c) && !self.rs.leq_idx(c, a));
            if incomparable {
                let mut chain = frame.chain.clone();
                chain.push(c);
                self.stack.push(Frame {
                    chain,
                    closure: frame.closure.union(self.rs.up[c]),
                    next: c + 1,
                });
            }
        }
        Some(AdNilpotentIdeal {
            set: frame.closure,
            generators: frame.chain,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(coords: &[i64]) -> Root {
        Root::new(coords.to_vec())
    }

    #[test]
    fn build_counts() {
        assert_eq!(RootSystem::build(Kind::A, 3).unwrap().num_positive(), 3);
        assert_eq!(RootSystem::build(Kind::C, 3).unwrap().num_positive(), 9);
        assert_eq!(RootSystem::build(Kind::D, 4).unwrap().num_positive(), 12);
        assert_eq!(RootSystem::build(Kind::B, 3).unwrap().num_positive(), 9);
    }

    #[test]
    fn build_rejects_small_sizes() {
        assert!(RootSystem::build(Kind::A, 1).is_err());
        assert!(RootSystem::build(Kind::B, 1).is_err());
        assert!(RootSystem::build(Kind::C, 1).is_err());
        assert!(RootSystem::build(Kind::D, 2).is_err());
    }

    #[test]
    fn positives_are_nonneg_combinations_of_simples() {
        for (kind, size) in [(Kind::A, 4), (Kind::B, 3), (Kind::C, 3), (Kind::D, 4)] {
            let rs = RootSystem::build(kind, size).unwrap();
            for p in rs.positive_roots() {
                assert!(
                    in_positive_root_lattice(kind, &p.coords),
                    "{p} in {kind}{size}"
                );
            }
        }
    }

    #[test]
    fn leq_examples() {
        let a3 = RootSystem::build(Kind::A, 4).unwrap(); // sl4, rank 3
        let e1e2 = r(&[1, -1, 0, 0]);
        let e1e4 = r(&[1, 0, 0, -1]);
        assert!(a3.root_leq(&e1e2, &e1e4).unwrap());
        assert!(!a3.root_leq(&e1e4, &e1e2).unwrap());
        assert!(a3.root_leq(&e1e2, &e1e2).unwrap());

        let d4 = RootSystem::build(Kind::D, 4).unwrap();
        let e3m4 = r(&[0, 0, 1, -1]);
        let e3p4 = r(&[0, 0, 1, 1]);
        // 2e4 is not a nonnegative combination of the D4 simples
        assert!(!d4.root_leq(&e3m4, &e3p4).unwrap());
        assert!(d4.root_leq(&e3m4, &e3m4).unwrap());

        assert!(a3.root_leq(&r(&[1, 1, 0, 0]), &e1e2).is_err());
    }

    #[test]
    fn d4_two_e4_brute_force_oracle() {
        // independent check of the 2e4 case: exhaust small coefficients
        let simples = [[1i64, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 1, 1]];
        let target = [0i64, 0, 0, 2];
        let mut found = false;
        for c1 in 0..=4 {
            for c2 in 0..=4 {
                for c3 in 0..=4 {
                    for c4 in 0..=4 {
                        let v: Vec<i64> = (0..4)
                            .map(|k| {
                                c1 * simples[0][k]
                                    + c2 * simples[1][k]
                                    + c3 * simples[2][k]
                                    + c4 * simples[3][k]
                            })
                            .collect();
                        if v == target {
                            found = true;
                        }
                    }
                }
            }
        }
        assert!(!found);
        assert!(!in_positive_root_lattice(Kind::D, &target));
    }

    #[test]
    fn close_upward_examples() {
        let a = RootSystem::build(Kind::A, 6).unwrap();
        let gens = [
            r(&[1, -1, 0, 0, 0, 0]),
            r(&[0, 1, 0, -1, 0, 0]),
            r(&[0, 0, 1, 0, -1, 0]),
            r(&[0, 0, 0, 1, 0, -1]),
        ];
        let ideal = a.close_upward(&gens).unwrap();
        assert_eq!(ideal.dim(), 11);
        assert_eq!(a.ferrers(&ideal).unwrap(), vec![2, 4, 5, 6, 7]);

        let c3 = RootSystem::build(Kind::C, 3).unwrap();
        let gens = [r(&[1, 0, -1]), r(&[0, 2, 0]), r(&[0, 0, 2])];
        let ideal = c3.close_upward(&gens).unwrap();
        assert_eq!(ideal.dim(), 7);
        let mut roots: Vec<String> = ideal.roots(&c3).iter().map(|r| r.to_string()).collect();
        roots.sort();
        let mut expected = vec!["e1-e3", "e1+e3", "e1+e2", "2e1", "2e2", "2e3", "e2+e3"];
        expected.sort();
        assert_eq!(roots, expected);

        assert_eq!(a.close_upward(&[]).unwrap().dim(), 0);
    }

    #[test]
    fn minimal_generators_examples() {
        let a3 = RootSystem::build(Kind::A, 4).unwrap();
        let all: Vec<Root> = a3.positive_roots().to_vec();
        let gens = a3.minimal_generators(&all).unwrap();
        let mut names: Vec<String> = gens.iter().map(|r| r.to_string()).collect();
        names.sort();
        assert_eq!(names, vec!["e1-e2", "e2-e3", "e3-e4"]);

        // the dim-7 ideal is generated by {e1-e3, 2e3, 2e2}, but 2e2 > 2e3,
        // so the minimal-element antichain drops it
        let c3 = RootSystem::build(Kind::C, 3).unwrap();
        let gens_in = [r(&[1, 0, -1]), r(&[0, 2, 0]), r(&[0, 0, 2])];
        let ideal = c3.close_upward(&gens_in).unwrap();
        let roots: Vec<Root> = ideal.roots(&c3).into_iter().cloned().collect();
        let back = c3.minimal_generators(&roots).unwrap();
        let mut names: Vec<String> = back.iter().map(|r| r.to_string()).collect();
        names.sort();
        assert_eq!(names, vec!["2e3", "e1-e3"]);
        assert!(c3.is_antichain(&back).unwrap());
        let reclosed = c3.close_upward(&back).unwrap();
        assert_eq!(reclosed.root_set(), ideal.root_set());

        assert!(a3.minimal_generators(&[]).unwrap().is_empty());
        // not upward closed
        assert!(a3.minimal_generators(&[r(&[1, -1, 0, 0])]).is_err());
    }

    #[test]
    fn antichain_predicates() {
        let c3 = RootSystem::build(Kind::C, 3).unwrap();
        let set = [r(&[1, 0, -1]), r(&[0, 0, 2]), r(&[0, 2, 0])];
        assert!(c3.is_weak_antichain(&set).unwrap());
        assert!(!c3.is_antichain(&set).unwrap()); // 2e2 > 2e3

        let b2 = RootSystem::build(Kind::B, 2).unwrap();
        let set = [r(&[1, 0]), r(&[0, 1])];
        assert!(!b2.is_weak_antichain(&set).unwrap()); // e1 - e2 is a root

        assert!(c3.is_weak_antichain(&[r(&[0, 2, 0])]).unwrap());
        assert!(c3.is_antichain(&[]).unwrap());

        let a6 = RootSystem::build(Kind::A, 6).unwrap();
        let set = [
            r(&[1, -1, 0, 0, 0, 0]),
            r(&[0, 1, 0, -1, 0, 0]),
            r(&[0, 0, 1, 0, -1, 0]),
            r(&[0, 0, 0, 1, 0, -1]),
        ];
        assert!(a6.is_antichain(&set).unwrap());
    }

    /// Counts upward-closed subsets by brute force over all subsets.
    fn brute_force_ideal_count(rs: &RootSystem) -> usize {
        let p = rs.num_positive();
        assert!(p <= 16, "brute force oracle only for tiny systems");
        (0u32..1 << p)
            .filter(|&mask| rs.is_upward_closed(RootSet(mask as u128)))
            .count()
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (kind, size, expected) in [
            (Kind::A, 4, 14), // type-A_3 Catalan number
            (Kind::B, 2, 6),
            (Kind::D, 4, 50),
            (Kind::C, 3, 20),
        ] {
            let rs = RootSystem::build(kind, size).unwrap();
            let ideals: Vec<_> = rs.ideals().collect();
            assert_eq!(ideals.len(), expected, "{kind}{size}");
            assert_eq!(brute_force_ideal_count(&rs), expected, "{kind}{size}");
            // exactly once each
            let mut sets: Vec<u128> = ideals.iter().map(|i| i.root_set().0).collect();
            sets.sort();
            sets.dedup();
            assert_eq!(sets.len(), expected);
            // deterministic lexicographic order on generator index lists
            let chains: Vec<Vec<usize>> = ideals
                .iter()
                .map(|i| i.generator_indices().to_vec())
                .collect();
            let mut sorted = chains.clone();
            sorted.sort();
            assert_eq!(chains, sorted);
        }
    }

    #[test]
    fn enumeration_yields_valid_ideals() {
        let rs = RootSystem::build(Kind::B, 3).unwrap();
        for ideal in rs.ideals() {
            assert!(rs.is_upward_closed(ideal.root_set()));
            let gens: Vec<Root> = ideal.generators(&rs).into_iter().cloned().collect();
            assert!(rs.is_antichain(&gens).unwrap());
            let reclosed = rs.close_upward(&gens).unwrap();
            assert_eq!(reclosed.root_set(), ideal.root_set());
        }
    }

    #[test]
    fn ferrers_examples() {
        let a4 = RootSystem::build(Kind::A, 4).unwrap();
        let zero = a4.close_upward(&[]).unwrap();
        assert_eq!(a4.ferrers(&zero).unwrap(), vec![5, 5, 5]);
        let full: Vec<Root> = a4.positive_roots().to_vec();
        let nilrad = a4.close_upward(&full).unwrap();
        assert_eq!(a4.ferrers(&nilrad).unwrap(), vec![2, 3, 4]);

        let b2 = RootSystem::build(Kind::B, 2).unwrap();
        let ideal = b2.close_upward(&[]).unwrap();
        assert!(b2.ferrers(&ideal).is_err());
    }

    #[test]
    fn ferrers_counts_boxes() {
        let a6 = RootSystem::build(Kind::A, 6).unwrap();
        for ideal in a6.ideals().take(200) {
            let starts = a6.ferrers(&ideal).unwrap();
            let total: usize = starts.iter().map(|&s| 6 + 1 - s).sum();
            assert_eq!(total, ideal.dim());
            // row starts never decrease going down
            for w in starts.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn antichains_are_linearly_independent_and_small() {
        use crate::exact::int_row_rank;
        for (kind, size) in [(Kind::B, 2), (Kind::C, 2), (Kind::D, 4), (Kind::A, 4)] {
            let rs = RootSystem::build(kind, size).unwrap();
            for ideal in rs.ideals() {
                let gens: Vec<Root> = ideal.generators(&rs).into_iter().cloned().collect();
                assert!(rs.is_antichain(&gens).unwrap());
                assert!(rs.is_weak_antichain(&gens).unwrap());
                assert!(gens.len() <= rs.rank());
                let rows: Vec<Vec<i64>> = gens.iter().map(|g| g.coords.clone()).collect();
                assert_eq!(int_row_rank(&rows), gens.len());
            }
        }
    }

    proptest! {
        #[test]
        fn closure_is_idempotent(mask in 0u32..(1 << 12)) {
            let rs = RootSystem::build(Kind::D, 4).unwrap();
            let gens: Vec<Root> = RootSet(mask as u128)
                .iter()
                .map(|i| rs.root(i).clone())
                .collect();
            let once = rs.close_upward(&gens).unwrap();
            let roots: Vec<Root> = once.roots(&rs).into_iter().cloned().collect();
            let twice = rs.close_upward(&roots).unwrap();
            prop_assert_eq!(once.root_set(), twice.root_set());
        }

        #[test]
        fn generators_closure_roundtrip(mask in 0u32..(1 << 9)) {
            // close an arbitrary subset, take minimal generators, close again
            let rs = RootSystem::build(Kind::C, 3).unwrap();
            let gens: Vec<Root> = RootSet(mask as u128)
                .iter()
                .map(|i| rs.root(i).clone())
                .collect();
            let ideal = rs.close_upward(&gens).unwrap();
            let min: Vec<Root> = ideal.generators(&rs).into_iter().cloned().collect();
            prop_assert!(rs.is_antichain(&min).unwrap());
            let again = rs.close_upward(&min).unwrap();
            prop_assert_eq!(again.root_set(), ideal.root_set());
        }
    }
}
