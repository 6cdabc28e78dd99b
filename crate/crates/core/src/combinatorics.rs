//! Subsets of `[n]` as bit masks, compositions, partitions and runs.
//!
//! Every matrix in this crate is indexed by `P_n`, the power set of
//! `[n] = {1, ..., n}`, in anti-lexicographic order. Element `j` of a subset
//! is stored in bit `j - 1`, so the integer value of the mask is exactly the
//! position of the subset in that order (`ord`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest ambient size a [`SubsetMask`] can carry.
pub const MAX_AMBIENT: usize = 63;

/// A subset of `[n]` stored as an `n`-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u64,
    ambient: usize,
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl SubsetMask {
    pub fn new(bits: u64, ambient: usize) -> Result<Self> {
        if ambient > MAX_AMBIENT {
            return Err(Error::AmbientTooLarge(ambient));
        }
        if bits & !low_mask(ambient) != 0 {
            let element = 64 - bits.leading_zeros() as usize;
            return Err(Error::ElementOutOfRange { element, ambient });
        }
        Ok(SubsetMask { bits, ambient })
    }

    pub fn empty(ambient: usize) -> Result<Self> {
        Self::new(0, ambient)
    }

    /// The whole of `[n]`.
    pub fn full(ambient: usize) -> Result<Self> {
        Self::new(low_mask(ambient), ambient)
    }

    pub fn from_elements(ambient: usize, elements: &[usize]) -> Result<Self> {
        if ambient > MAX_AMBIENT {
            return Err(Error::AmbientTooLarge(ambient));
        }
        let mut bits = 0u64;
        for &j in elements {
            if j == 0 || j > ambient {
                return Err(Error::ElementOutOfRange { element: j, ambient });
            }
            bits |= 1 << (j - 1);
        }
        Ok(SubsetMask { bits, ambient })
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn ambient(self) -> usize {
        self.ambient
    }

    /// Position in the anti-lexicographic order, starting at 0 for the empty set.
    #[inline]
    pub fn ord(self) -> usize {
        self.bits as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, j: usize) -> bool {
        j >= 1 && j <= self.ambient && self.bits & (1 << (j - 1)) != 0
    }

    pub fn max(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(64 - self.bits.leading_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let j = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            Some(j)
        })
    }

    #[inline]
    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    /// The same elements viewed inside a different ambient set.
    pub fn with_ambient(self, ambient: usize) -> Result<Self> {
        Self::new(self.bits, ambient)
    }

    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask { bits: self.bits & other.bits, ambient: self.ambient }
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask { bits: self.bits | other.bits, ambient: self.ambient.max(other.ambient) }
    }

    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        SubsetMask { bits: self.bits & !other.bits, ambient: self.ambient }
    }

    pub fn symmetric_difference(self, other: SubsetMask) -> SubsetMask {
        SubsetMask { bits: self.bits ^ other.bits, ambient: self.ambient.max(other.ambient) }
    }

    pub fn complement(self) -> SubsetMask {
        SubsetMask { bits: !self.bits & low_mask(self.ambient), ambient: self.ambient }
    }

    /// All of `P_n` in anti-lexicographic order.
    pub fn all(ambient: usize) -> Result<impl Iterator<Item = SubsetMask>> {
        if ambient > MAX_AMBIENT {
            return Err(Error::AmbientTooLarge(ambient));
        }
        Ok((0..=low_mask(ambient)).map(move |bits| SubsetMask { bits, ambient }))
    }

    /// All subsets of `self`, in anti-lexicographic order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let full = self.bits;
        let ambient = self.ambient;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(SubsetMask { bits: cur, ambient })
        })
    }

    /// All supersets of `self` inside its ambient set, in anti-lexicographic order.
    pub fn supersets(self) -> impl Iterator<Item = SubsetMask> {
        let base = self.bits;
        self.complement().subsets().map(move |s| SubsetMask { bits: s.bits | base, ambient: s.ambient })
    }

    pub fn runs(self) -> RunDecomposition {
        runs(self)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊆[{}]", self, self.ambient)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, j) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("}")
    }
}

/// Serialized as the sorted list of elements.
impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A maximal interval `{start + 1, ..., start + len}` inside a subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Run {
    pub start: usize,
    pub len: usize,
}

impl Run {
    pub fn first(&self) -> usize {
        self.start + 1
    }

    pub fn last(&self) -> usize {
        self.start + self.len
    }

    pub fn contains(&self, j: usize) -> bool {
        j > self.start && j <= self.start + self.len
    }

    pub fn mask(&self) -> u64 {
        low_mask(self.len) << self.start
    }

    pub fn elements(&self) -> std::ops::RangeInclusive<usize> {
        self.first()..=self.last()
    }
}

/// Runs of a subset, in increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunDecomposition(Vec<Run>);

impl RunDecomposition {
    pub fn runs(&self) -> &[Run] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Run> {
        self.0
    }
}

impl std::ops::Deref for RunDecomposition {
    type Target = [Run];
    fn deref(&self) -> &[Run] {
        &self.0
    }
}

impl<'a> IntoIterator for &'a RunDecomposition {
    type Item = &'a Run;
    type IntoIter = std::slice::Iter<'a, Run>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Maximal consecutive intervals of `set`, in increasing order.
pub fn runs(set: SubsetMask) -> RunDecomposition {
    let mut rest = set.bits;
    let mut out = Vec::new();
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let len = (rest >> start).trailing_ones() as usize;
        out.push(Run { start, len });
        rest &= !(low_mask(len) << start);
    }
    RunDecomposition(out)
}

/// `true` iff `i` precedes `j` in the anti-lexicographic order, i.e. the
/// largest element of the symmetric difference lies in `j`.
pub fn antilex_less(i: SubsetMask, j: SubsetMask) -> Result<bool> {
    if i.ambient != j.ambient {
        return Err(Error::AmbientMismatch(i.ambient, j.ambient));
    }
    match i.symmetric_difference(j).max() {
        None => Err(Error::EqualSubsets),
        Some(m) => Ok(j.contains(m)),
    }
}

/// `true` iff for every run `R` of `i`, `R ∩ j` is an initial segment of `R`.
pub fn prefix_compatible(i: SubsetMask, j: SubsetMask) -> bool {
    runs(i).iter().all(|run| {
        let hit = (j.bits & run.mask()) >> run.start;
        hit & (hit + 1) == 0
    })
}

/// Order of the parabolic subgroup generated by `{s_i : i ∈ set}`: the
/// product of `(|R| + 1)!` over the runs `R` of `set`.
pub fn parabolic_order(set: SubsetMask) -> BigUint {
    runs(set).iter().fold(BigUint::one(), |acc, run| acc * factorial(run.len + 1))
}

pub fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// An ordered tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(S(μ), I(μ))`: the partial sums inside `[n]` and their complement in `[n-1]`.
    pub fn to_subsets(&self) -> Result<(SubsetMask, SubsetMask)> {
        composition_to_subsets(self)
    }

    /// `I(μ)`, the subset of `[n-1]` missed by the partial sums.
    pub fn interior(&self) -> Result<SubsetMask> {
        Ok(composition_to_subsets(self)?.1)
    }

    pub fn from_subset(set: SubsetMask, n: usize) -> Result<Self> {
        subset_to_composition(set, n)
    }

    pub fn underlying_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `true` iff `self` is obtained by splitting parts of `coarser`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        refines(self, coarser)
    }

    /// All compositions of `n`, ordered by `ord(I(μ))`.
    pub fn all(n: usize) -> Result<Vec<Composition>> {
        if n == 0 {
            return Err(Error::InvalidComposition("n must be positive".into()));
        }
        SubsetMask::all(n - 1)?.map(|j| subset_to_composition(j, n)).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{p:?}: {e}"))))
        .collect()
}

/// Partial sums `S(μ) ⊆ [n]` and the complement `I(μ) ⊆ [n-1]`.
pub fn composition_to_subsets(mu: &Composition) -> Result<(SubsetMask, SubsetMask)> {
    let n = mu.n();
    if n > MAX_AMBIENT {
        return Err(Error::AmbientTooLarge(n));
    }
    let mut sums = 0u64;
    let mut acc = 0;
    for &p in &mu.parts {
        acc += p;
        sums |= 1 << (acc - 1);
    }
    let s = SubsetMask::new(sums, n)?;
    let i = SubsetMask::new(!sums & low_mask(n - 1), n - 1)?;
    Ok((s, i))
}

/// The unique composition `μ` of `n` with `I(μ) = set`.
pub fn subset_to_composition(set: SubsetMask, n: usize) -> Result<Composition> {
    if n == 0 {
        return Err(Error::InvalidComposition("n must be positive".into()));
    }
    if let Some(m) = set.max() {
        if m >= n {
            return Err(Error::ElementOutOfRange { element: m, ambient: n - 1 });
        }
    }
    let mut parts = Vec::new();
    let mut last = 0;
    for s in 1..=n {
        if !set.contains(s) {
            parts.push(s - last);
            last = s;
        }
    }
    Ok(Composition { parts })
}

/// `true` iff `fine` refines `coarse`, i.e. `S(coarse) ⊆ S(fine)`.
pub fn refines(fine: &Composition, coarse: &Composition) -> bool {
    if fine.n() != coarse.n() {
        return false;
    }
    let mut fine_parts = fine.parts.iter();
    for &target in &coarse.parts {
        let mut acc = 0;
        while acc < target {
            match fine_parts.next() {
                Some(&p) => acc += p,
                None => return false,
            }
        }
        if acc != target {
            return false;
        }
    }
    true
}

/// A weakly decreasing composition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn as_composition(&self) -> Composition {
        Composition { parts: self.parts.clone() }
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts[0];
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    /// `z_μ = ∏ i^{m_i} m_i!`, the order of the centralizer of a permutation of this cycle type.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        let mut k = 0;
        while k < self.parts.len() {
            let part = self.parts[k];
            let mult = self.parts[k..].iter().take_while(|&&p| p == part).count();
            z *= BigUint::from(part).pow(mult as u32) * factorial(mult);
            k += mult;
        }
        z
    }

    /// Size of the conjugacy class of this cycle type in `S_n`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n()) / self.centralizer_order()
    }

    /// All partitions of `n` in reverse-lexicographic order, starting with `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(n, e).unwrap()
    }

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn runs_of_printed_example() {
        let r = runs(set(10, &[1, 2, 4, 5, 6, 8, 10]));
        let got: Vec<Vec<usize>> = r.iter().map(|run| run.elements().collect()).collect();
        assert_eq!(got, vec![vec![1, 2], vec![4, 5, 6], vec![8], vec![10]]);
        assert!(runs(set(5, &[])).is_empty());
        assert_eq!(runs(set(3, &[1, 2, 3])).runs(), &[Run { start: 0, len: 3 }]);
    }

    #[test]
    fn composition_subsets_example() {
        let (s, i) = comp(&[3, 4, 2, 5]).to_subsets().unwrap();
        assert_eq!(s.elements(), vec![3, 7, 9, 14]);
        assert_eq!(i.elements(), vec![1, 2, 4, 5, 6, 8, 10, 11, 12, 13]);
        assert_eq!(subset_to_composition(i, 14).unwrap(), comp(&[3, 4, 2, 5]));

        let (s, i) = comp(&[5]).to_subsets().unwrap();
        assert_eq!(s.elements(), vec![5]);
        assert_eq!(i.elements(), vec![1, 2, 3, 4]);
        let (s, i) = comp(&[1, 1, 1, 1]).to_subsets().unwrap();
        assert_eq!(s.elements(), vec![1, 2, 3, 4]);
        assert!(i.is_empty());

        assert_eq!(subset_to_composition(set(3, &[]), 4).unwrap(), comp(&[1, 1, 1, 1]));
        assert_eq!(subset_to_composition(set(2, &[1, 2]), 3).unwrap(), comp(&[3]));
        assert!(subset_to_composition(set(3, &[3]), 3).is_err());
    }

    #[test]
    fn antilex_order_on_p3() {
        let expected: Vec<Vec<usize>> =
            vec![vec![], vec![1], vec![2], vec![1, 2], vec![3], vec![1, 3], vec![2, 3], vec![1, 2, 3]];
        let got: Vec<Vec<usize>> = SubsetMask::all(3).unwrap().map(|s| s.elements()).collect();
        assert_eq!(got, expected);
        let mut sorted: Vec<SubsetMask> = expected.iter().rev().map(|e| set(3, e)).collect();
        sorted.sort_by(|a, b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if antilex_less(*a, *b).unwrap() {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        assert_eq!(sorted.iter().map(|s| s.elements()).collect::<Vec<_>>(), expected);

        assert!(antilex_less(set(3, &[]), set(3, &[2])).unwrap());
        assert!(!antilex_less(set(3, &[3]), set(3, &[1, 2])).unwrap());
        assert_eq!(antilex_less(set(3, &[1]), set(3, &[1])), Err(Error::EqualSubsets));
        assert!(matches!(antilex_less(set(3, &[1]), set(4, &[1])), Err(Error::AmbientMismatch(3, 4))));
    }

    #[test]
    fn antilex_matches_ord_exhaustively() {
        for n in 0..=12 {
            let all: Vec<_> = SubsetMask::all(n).unwrap().collect();
            for (k, s) in all.iter().enumerate() {
                assert_eq!(s.ord(), k);
            }
        }
        for n in 0..=6 {
            for i in SubsetMask::all(n).unwrap() {
                for j in SubsetMask::all(n).unwrap() {
                    if i != j {
                        assert_eq!(antilex_less(i, j).unwrap(), i.ord() < j.ord());
                    }
                }
            }
        }
    }

    #[test]
    fn prefix_compatibility() {
        assert!(prefix_compatible(set(2, &[1, 2]), set(2, &[1])));
        assert!(!prefix_compatible(set(2, &[1, 2]), set(2, &[2])));
        for n in 0..=4 {
            for i in SubsetMask::all(n).unwrap() {
                assert!(prefix_compatible(i, SubsetMask::empty(n).unwrap()));
                assert!(prefix_compatible(SubsetMask::empty(n).unwrap(), i));
            }
        }
    }

    #[test]
    fn refinement_examples() {
        assert!(comp(&[1, 2, 1]).refines(&comp(&[3, 1])));
        assert!(comp(&[2, 2]).refines(&comp(&[2, 2])));
        assert!(!comp(&[2, 2]).refines(&comp(&[1, 3])));
        assert!(!comp(&[1, 1]).refines(&comp(&[3])));
    }

    #[test]
    fn refinement_is_reverse_inclusion_of_interiors() {
        for n in 1..=10 {
            let all = Composition::all(n).unwrap();
            for mu in &all {
                for la in &all {
                    let (i_mu, i_la) = (mu.interior().unwrap(), la.interior().unwrap());
                    assert_eq!(refines(mu, la), i_mu.is_subset_of(i_la), "{mu} vs {la}");
                }
            }
        }
    }

    #[test]
    fn composition_round_trip_exhaustive() {
        for n in 1..=12 {
            for j in SubsetMask::all(n - 1).unwrap() {
                let mu = subset_to_composition(j, n).unwrap();
                assert_eq!(mu.n(), n);
                assert_eq!(mu.interior().unwrap(), j);
                assert_eq!(subset_to_composition(mu.interior().unwrap(), n).unwrap(), mu);
            }
        }
    }

    #[test]
    fn runs_reassemble() {
        for n in 0..=10 {
            for s in SubsetMask::all(n).unwrap() {
                let r = runs(s);
                let bits = r.iter().fold(0, |acc, run| acc | run.mask());
                assert_eq!(bits, s.bits());
                assert_eq!(r.iter().map(|run| run.len).sum::<usize>(), s.len());
                for w in r.windows(2) {
                    assert!(w[0].last() + 1 < w[1].first());
                }
            }
        }
    }

    #[test]
    fn parabolic_orders() {
        assert_eq!(parabolic_order(set(3, &[1, 2, 3])), BigUint::from(24u32));
        assert_eq!(parabolic_order(set(3, &[])), BigUint::from(1u32));
        assert_eq!(parabolic_order(set(3, &[1, 3])), BigUint::from(4u32));
    }

    #[test]
    fn partitions_and_classes() {
        let p4: Vec<String> = Partition::all(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, vec!["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        for n in 1..=8 {
            let total: BigUint = Partition::all(n).iter().map(|p| p.class_size()).sum();
            assert_eq!(total, factorial(n));
        }
        let p: Partition = "3,1,1".parse().unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![3, 1, 1]).unwrap());
        assert_eq!("4,2".parse::<Partition>().unwrap().conjugate().to_string(), "(2,2,1,1)");
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn subset_iteration() {
        let s = set(5, &[1, 3, 4]);
        let subs: Vec<usize> = s.subsets().map(|t| t.ord()).collect();
        assert_eq!(subs, vec![0, 1, 4, 5, 8, 9, 12, 13]);
        let sups: Vec<usize> = set(3, &[2]).supersets().map(|t| t.ord()).collect();
        assert_eq!(sups, vec![2, 3, 6, 7]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,3,4]");
        assert_eq!(s.to_string(), "{1,3,4}");
        assert!(SubsetMask::new(0b1000, 3).is_err());
        assert!(SubsetMask::from_elements(3, &[0]).is_err());
    }
}
