use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::combinatorics::{Composition, Partition, SubsetMask};
use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation `(π(1), ..., π(n))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{one_line:?} is not a bijection on [{n}]")));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    pub fn reversal(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    /// The adjacent transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple_transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidPermutation(format!("s_{i} is not in S_{n}")));
        }
        let mut p = Self::identity(n);
        p.one_line.swap(i - 1, i);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `π(i)` for `1 ≤ i ≤ n`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { left: self.n(), right: other.n() });
        }
        Ok(Permutation { one_line: other.one_line.iter().map(|&v| self.apply(v)).collect() })
    }

    /// `{i : π(i) > π(i+1)}` as a subset of `[n-1]`.
    pub fn descents(&self) -> SubsetMask {
        let n = self.n();
        let bits = self
            .one_line
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        SubsetMask::new(bits, n.saturating_sub(1)).expect("n - 1 ≤ MAX_AMBIENT")
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        (0..v.len()).map(|i| v[i + 1..].iter().filter(|&&w| w < v[i]).count()).sum()
    }

    /// Major index, the sum of the descent positions.
    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    pub fn length_and_maj(&self) -> (usize, usize) {
        (self.length(), self.maj())
    }

    pub fn is_involution(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| self.one_line[v - 1] == i + 1)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.one_line[i] - 1;
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("cycle lengths form a partition")
    }

    /// Every prefix `{π(1), ..., π(k)}` is an interval of the cycle `Z_n`.
    pub fn is_arc(&self) -> bool {
        let n = self.n();
        let mut present = vec![false; n];
        for (k, &v) in self.one_line.iter().enumerate() {
            let x = v % n;
            // a proper cyclic interval only grows into a neighbour of itself
            if k > 0 && !present[(x + n - 1) % n] && !present[(x + 1) % n] {
                return false;
            }
            present[x] = true;
        }
        true
    }

    /// The one-line sequence is unimodal (decreasing, then increasing) on each
    /// consecutive block of lengths `μ_1, μ_2, ...`.
    pub fn is_mu_unimodal_sequence(&self, mu: &Composition) -> bool {
        if mu.n() != self.n() {
            return false;
        }
        let mut offset = 0;
        mu.parts().iter().all(|&p| {
            let block = &self.one_line[offset..offset + p];
            offset += p;
            let valley = block.windows(2).take_while(|w| w[0] > w[1]).count();
            block[valley..].windows(2).all(|w| w[0] < w[1])
        })
    }

    /// All of `S_n` in lexicographic order, generated lazily.
    pub fn all(n: usize) -> Permutations {
        Permutations { next: Some((1..=n).collect()) }
    }
}

/// Lexicographic iterator over `S_n`.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut v = cur.clone();
        if let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) {
            let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
            v.swap(i - 1, j);
            v[i..].reverse();
            self.next = Some(v);
        }
        Some(Permutation { one_line: cur })
    }
}

/// The Coxeter element `c_J = s_{j_1} s_{j_2} ⋯ s_{j_k}` (`j_1 < ... < j_k`) in `S_n`,
/// composed as functions so the rightmost factor acts first.
pub fn coxeter_element(set: SubsetMask, n: usize) -> Result<Permutation> {
    if set.max().is_some_and(|m| m >= n) {
        return Err(Error::ElementOutOfRange { element: set.max().unwrap_or(0), ambient: n.saturating_sub(1) });
    }
    let gens: Vec<usize> = set.elements();
    let one_line = (1..=n)
        .map(|mut x| {
            for &j in gens.iter().rev() {
                if x == j {
                    x = j + 1;
                } else if x == j + 1 {
                    x = j;
                }
            }
            x
        })
        .collect();
    Ok(Permutation { one_line })
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Digits run together when `n ≤ 9`, otherwise space separated.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { " " };
        let s: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        f.write_str(&s.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Result<Vec<usize>> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad permutation entry {t:?}"))))
                .collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
                .collect()
        };
        Permutation::new(values?)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn descent_examples() {
        assert_eq!(p("936871254").descents().elements(), vec![1, 4, 5, 8]);
        assert!(Permutation::identity(6).descents().is_empty());
        assert_eq!(Permutation::reversal(5).descents().elements(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn statistics() {
        assert_eq!(Permutation::identity(4).length_and_maj(), (0, 0));
        assert_eq!(Permutation::reversal(3).length_and_maj(), (3, 3));
        let mut by_len = [0; 4];
        let mut by_maj = [0; 4];
        for q in Permutation::all(3) {
            by_len[q.length()] += 1;
            by_maj[q.maj()] += 1;
        }
        assert_eq!(by_len, by_maj);
        assert_eq!(by_len, [1, 2, 2, 1]);
    }

    #[test]
    fn enumeration_and_inverse() {
        let all: Vec<Permutation> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for q in &all {
            assert_eq!(q.compose(&q.inverse()).unwrap(), Permutation::identity(4));
        }
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn coxeter_elements() {
        let e = coxeter_element(SubsetMask::empty(3).unwrap(), 4).unwrap();
        assert_eq!(e, Permutation::identity(4));
        let c = coxeter_element(SubsetMask::full(4).unwrap(), 5).unwrap();
        assert_eq!(c.one_line(), &[2, 3, 4, 5, 1]);
        let mu = Composition::new(vec![3, 4, 2, 5]).unwrap();
        let c = coxeter_element(mu.interior().unwrap(), 14).unwrap();
        assert_eq!(c.cycle_type().parts(), &[5, 4, 3, 2]);
        let s1 = Permutation::simple_transposition(3, 1).unwrap();
        let s2 = Permutation::simple_transposition(3, 2).unwrap();
        let set = SubsetMask::from_elements(2, &[1, 2]).unwrap();
        assert_eq!(coxeter_element(set, 3).unwrap(), s1.compose(&s2).unwrap());
    }

    #[test]
    fn coxeter_cycle_types_exhaustive() {
        for n in 1..=9 {
            for mu in Composition::all(n).unwrap() {
                let c = coxeter_element(mu.interior().unwrap(), n).unwrap();
                assert_eq!(c.cycle_type(), mu.underlying_partition());
            }
        }
    }

    #[test]
    fn unimodality_of_printed_example() {
        let q = p("936871254");
        assert!(q.is_mu_unimodal_sequence(&Composition::new(vec![4, 3, 2]).unwrap()));
        assert!(!q.is_mu_unimodal_sequence(&Composition::new(vec![5, 4]).unwrap()));
    }

    #[test]
    fn arc_permutations() {
        assert_eq!(Permutation::all(3).filter(Permutation::is_arc).count(), 6);
        assert!(!p("1324").is_arc());
        assert!(p("2314").is_arc());
        assert!(p("4123").is_arc());
        // the count of arc permutations is n 2^{n-2} for n ≥ 2
        for n in 2..=7 {
            assert_eq!(Permutation::all(n).filter(Permutation::is_arc).count(), n << (n - 2));
        }
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("213").to_string(), "213");
        assert_eq!(p("2,1,3"), p("213"));
        assert!("113".parse::<Permutation>().is_err());
        let big = Permutation::identity(10);
        assert_eq!(big.to_string(), "1 2 3 4 5 6 7 8 9 10");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert_eq!(serde_json::to_string(&p("312")).unwrap(), "[3,1,2]");
    }
}
