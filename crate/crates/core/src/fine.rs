//! From descent sets to characters and back.
//!
//! A set `B` of permutations (or tableaux) is *fine* when the signed count of
//! members with μ-unimodal descent set is a character value of `S_n`. Because
//! `A_{n-1}` is invertible, the character vector `x = A_{n-1} v` determines the
//! descent distribution `v` and the functions here move between the two.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::combinatorics::{factorial, runs, Composition, Partition, SubsetMask};
use crate::error::{Error, Result};
use crate::families::{build, FamilyTag};
use crate::linalg::ExactMatrix;
use crate::symgroup::{is_mu_unimodal, mn_character, FineFamily, Permutation, StandardTableau};

/// `counts[ord(J)] = |{b ∈ B : Des(b) = J}|` for `J ⊆ [n-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentVector {
    pub n: usize,
    pub counts: Vec<BigInt>,
}

impl DescentVector {
    pub fn zeros(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(DescentVector { n, counts: vec![BigInt::zero(); 1 << (n - 1)] })
    }

    pub fn from_sets(n: usize, sets: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        let mut v = Self::zeros(n)?;
        for d in sets {
            if d.ambient() != n - 1 {
                return Err(Error::AmbientMismatch(d.ambient(), n - 1));
            }
            v.counts[d.ord()] += 1;
        }
        Ok(v)
    }

    pub fn get(&self, set: SubsetMask) -> &BigInt {
        &self.counts[set.ord()]
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    /// `|{b : Des(b) ⊇ I}|`, counted directly.
    pub fn superset_count(&self, set: SubsetMask) -> BigInt {
        set.supersets().map(|s| &self.counts[s.ord()]).sum()
    }

    fn as_rationals(&self) -> Vec<BigRational> {
        self.counts.iter().cloned().map(BigRational::from_integer).collect()
    }
}

/// `values[ord(J)] = χ(c_J)`, a character evaluated at the Coxeter elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    pub n: usize,
    pub values: Vec<BigInt>,
}

/// Compositions sharing a cycle type on which a character vector disagrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyFailure {
    pub cycle_type: String,
    /// `(composition, value)` for every composition of this cycle type.
    pub values: Vec<(String, String)>,
}

impl CharacterVector {
    /// Evaluate a class function at every `c_J`.
    pub fn from_class_function(n: usize, mut f: impl FnMut(&Partition) -> BigInt) -> Result<Self> {
        check_n(n)?;
        let mut memo: BTreeMap<Partition, BigInt> = BTreeMap::new();
        let values = Composition::all(n)?
            .iter()
            .map(|mu| memo.entry(mu.underlying_partition()).or_insert_with_key(&mut f).clone())
            .collect();
        Ok(CharacterVector { n, values })
    }

    /// The value at the Coxeter element of cycle type `mu`.
    pub fn class_value(&self, mu: &Partition) -> &BigInt {
        let set = mu.as_composition().interior().expect("n within range");
        &self.values[set.ord()]
    }

    pub fn get(&self, set: SubsetMask) -> &BigInt {
        &self.values[set.ord()]
    }

    pub fn consistency_failures(&self) -> Vec<ConsistencyFailure> {
        let mut groups: BTreeMap<Partition, Vec<(Composition, &BigInt)>> = BTreeMap::new();
        for (mu, v) in Composition::all(self.n).expect("n ≥ 1").into_iter().zip(&self.values) {
            groups.entry(mu.underlying_partition()).or_default().push((mu, v));
        }
        let mut out: Vec<ConsistencyFailure> = groups
            .into_iter()
            .filter(|(_, g)| g.iter().any(|(_, v)| *v != g[0].1))
            .map(|(p, g)| ConsistencyFailure {
                cycle_type: p.to_string(),
                values: g.into_iter().map(|(mu, v)| (mu.to_string(), v.to_string())).collect(),
            })
            .collect();
        out.reverse(); // reverse-lex, matching Partition::all
        out
    }

    pub fn is_consistent(&self) -> bool {
        self.consistency_failures().is_empty()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Unsupported("descent vectors need n ≥ 1".into()));
    }
    Ok(())
}

pub fn descent_vector(family: &FineFamily, n: usize) -> Result<DescentVector> {
    DescentVector::from_sets(n, family.enumerate(n)?.map(|(_, d)| d))
}

fn signed_unimodal(des: SubsetMask, mu: &Composition, interior: SubsetMask) -> Option<bool> {
    is_mu_unimodal(des, mu).then(|| des.intersection(interior).len() % 2 == 1)
}

/// `Σ_{b ∈ B^μ} (−1)^{|Des(b) ∩ I(μ)|}`, scanning the members of `B`.
pub fn fine_character(family: &FineFamily, mu: &Composition) -> Result<BigInt> {
    let interior = mu.interior()?;
    let mut total = 0i64;
    for (_, des) in family.enumerate(mu.n())? {
        match signed_unimodal(des, mu, interior) {
            Some(false) => total += 1,
            Some(true) => total -= 1,
            None => {}
        }
    }
    Ok(BigInt::from(total))
}

/// The same signed sum, read off a descent vector.
pub fn fine_character_from_descents(v: &DescentVector, mu: &Composition) -> Result<BigInt> {
    if mu.n() != v.n {
        return Err(Error::DimensionMismatch { left: v.n, right: mu.n() });
    }
    let interior = mu.interior()?;
    let mut total = BigInt::zero();
    for des in SubsetMask::all(v.n - 1)? {
        match signed_unimodal(des, mu, interior) {
            Some(false) => total += &v.counts[des.ord()],
            Some(true) => total -= &v.counts[des.ord()],
            None => {}
        }
    }
    Ok(total)
}

/// `x = A_{n-1} v`.
pub fn lift(v: &DescentVector) -> Result<CharacterVector> {
    let a = build(FamilyTag::A, v.n - 1)?;
    let values = a
        .mul_vec(&v.as_rationals())?
        .into_iter()
        .map(|q| {
            assert!(q.is_integer(), "integer matrix times integer vector");
            q.to_integer()
        })
        .collect();
    Ok(CharacterVector { n: v.n, values })
}

pub fn lift_character(family: &FineFamily, n: usize) -> Result<CharacterVector> {
    lift(&descent_vector(family, n)?)
}

/// `|{b ∈ B : Des(b) ⊇ I}|` recovered from the character vector alone:
/// `(1/|⟨I⟩|) Σ_{J ⊆ I} (−1)^{|J|} x_J ∏_k ∏_{i ∈ I_k ∩ J} (max I_k − i + 1)`.
///
/// Returned as a rational; a non-integer value means `x` did not come from a fine set.
pub fn count_superset(x: &CharacterVector, set: SubsetMask) -> Result<BigRational> {
    if set.ambient() != x.n - 1 {
        return Err(Error::AmbientMismatch(set.ambient(), x.n - 1));
    }
    let decomposition = runs(set);
    let mut total = BigInt::zero();
    for j in set.subsets() {
        let mut weight = x.values[j.ord()].clone();
        if j.len() % 2 == 1 {
            weight = -weight;
        }
        for run in decomposition.iter() {
            for i in run.elements().filter(|&i| j.contains(i)) {
                weight *= run.last() - i + 1;
            }
        }
        total += weight;
    }
    let group_order: BigInt = decomposition.iter().map(|r| BigInt::from(factorial(r.len + 1))).product();
    Ok(BigRational::new(total, group_order))
}

/// `|{b ∈ B : Des(b) = D}|` by inclusion–exclusion over the supersets of `D`.
pub fn count_exact(x: &CharacterVector, d: SubsetMask) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for i in d.supersets() {
        let c = count_superset(x, i)?;
        if (i.len() - d.len()) % 2 == 0 {
            total += c;
        } else {
            total -= c;
        }
    }
    Ok(total)
}

/// [`count_exact`] at every `D ⊆ [n-1]`, in anti-lex order.
pub fn descent_distribution(x: &CharacterVector) -> Result<Vec<BigRational>> {
    SubsetMask::all(x.n - 1)?.map(|d| count_exact(x, d)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinenessReport {
    pub family: String,
    pub n: usize,
    pub fine: bool,
    pub consistent: bool,
    /// `m_ν`, keyed by `ν` in reverse-lex order.
    #[serde(serialize_with = "serialize_multiplicities")]
    pub multiplicities: Vec<(Partition, BigRational)>,
    pub consistency_failures: Vec<ConsistencyFailure>,
}

fn serialize_multiplicities<S: serde::Serializer>(
    m: &[(Partition, BigRational)],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = serializer.serialize_map(Some(m.len()))?;
    for (p, v) in m {
        map.serialize_entry(&p.to_string(), &v.to_string())?;
    }
    map.end()
}

impl FinenessReport {
    pub fn multiplicity(&self, nu: &Partition) -> Option<&BigRational> {
        self.multiplicities.iter().find(|(p, _)| p == nu).map(|(_, m)| m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `m_ν = (1/n!) Σ_{μ ⊢ n} |C_μ| x_{I(μ)} χ^ν_μ` for every `ν ⊢ n`.
pub fn multiplicities(x: &CharacterVector) -> Vec<(Partition, BigRational)> {
    let n = x.n;
    let classes = Partition::all(n);
    let order = BigInt::from(factorial(n));
    classes
        .iter()
        .map(|nu| {
            let inner: BigInt = classes
                .iter()
                .map(|mu| BigInt::from(mu.class_size()) * x.class_value(mu) * mn_character(nu, mu).expect("same n"))
                .sum();
            (nu.clone(), BigRational::new(inner, order.clone()))
        })
        .collect()
}

/// `Σ_ν m_ν v(SYT(ν))`.
fn tableau_combination(n: usize, m: &[(Partition, BigRational)]) -> Result<Vec<BigRational>> {
    let mut out = vec![BigRational::zero(); 1 << (n - 1)];
    for (nu, mult) in m {
        for t in StandardTableau::all(nu) {
            out[t.descents().ord()] += mult;
        }
    }
    Ok(out)
}

/// Decide whether the descent distribution `v` is that of a fine set.
pub fn fineness(v: &DescentVector, family: &str) -> Result<FinenessReport> {
    let x = lift(v)?;
    let consistency_failures = x.consistency_failures();
    let consistent = consistency_failures.is_empty();
    let multiplicities = multiplicities(&x);
    let integral = multiplicities.iter().all(|(_, m)| m.is_integer() && !m.is_negative());
    let fine = consistent && integral && tableau_combination(v.n, &multiplicities)? == v.as_rationals();
    Ok(FinenessReport { family: family.to_string(), n: v.n, fine, consistent, multiplicities, consistency_failures })
}

pub fn fineness_of(family: &FineFamily, n: usize) -> Result<FinenessReport> {
    fineness(&descent_vector(family, n)?, &family.to_string())
}

/// Largest `n` for [`multiplicities_by_solve`].
pub const SOLVE_CAP: usize = 5;

/// Solve `Σ_ν m_ν v(SYT(ν)) = v` directly (through the normal equations, the
/// tableau descent vectors being independent). `None` when `v` is outside their span.
pub fn multiplicities_by_solve(v: &DescentVector) -> Result<Option<Vec<(Partition, BigRational)>>> {
    if v.n > SOLVE_CAP {
        return Err(Error::CapExceeded { what: "multiplicity solve", n: v.n, cap: SOLVE_CAP });
    }
    let shapes = Partition::all(v.n);
    let columns: Vec<Vec<BigRational>> = shapes
        .iter()
        .map(|nu| DescentVector::from_sets(v.n, StandardTableau::all(nu).iter().map(|t| t.descents())).map(|d| d.as_rationals()))
        .collect::<Result<_>>()?;
    let dot = |a: &[BigRational], b: &[BigRational]| a.iter().zip(b).map(|(p, q)| p * q).sum::<BigRational>();
    let gram = ExactMatrix::from_fn(shapes.len(), |i, j| dot(&columns[i], &columns[j]));
    let target = v.as_rationals();
    let rhs: Vec<BigRational> = columns.iter().map(|c| dot(c, &target)).collect();
    let m = gram.inverse()?.mul_vec(&rhs)?;
    let solution: Vec<(Partition, BigRational)> = shapes.into_iter().zip(m).collect();
    Ok((tableau_combination(v.n, &solution)? == target).then_some(solution))
}

/// Largest `n` for [`equidistribution_fs_ls`].
pub const EQUIDISTRIBUTION_CAP: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthCheck {
    pub k: usize,
    pub count: usize,
    /// Des over `{ℓ(π) = k}` equals Des over `{maj(π⁻¹) = k}`.
    pub descents_agree: bool,
    /// The length-`k` fine character equals `Σ_λ m_{k,λ} χ^λ`.
    pub character_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquidistributionReport {
    pub n: usize,
    /// The joint distributions of `(Des, ℓ)` and `(Des, maj ∘ inverse)` coincide.
    pub joint_equal: bool,
    pub lengths: Vec<LengthCheck>,
    pub pass: bool,
}

/// Check that `(Des π, ℓ(π))` and `(Des π, maj(π⁻¹))` are equidistributed over
/// `S_n`, and that each length class carries the character `Σ_λ m_{k,λ} χ^λ`
/// with `m_{k,λ}` the number of tableaux of shape `λ` with major index `k`.
pub fn equidistribution_fs_ls(n: usize) -> Result<EquidistributionReport> {
    check_n(n)?;
    if n > EQUIDISTRIBUTION_CAP {
        return Err(Error::CapExceeded { what: "equidistribution check", n, cap: EQUIDISTRIBUTION_CAP });
    }
    let max_len = n * (n - 1) / 2;
    let width = 1usize << (n - 1);
    let mut by_length = vec![vec![0u64; width]; max_len + 1];
    let mut by_imaj = vec![vec![0u64; width]; max_len + 1];
    for pi in Permutation::all(n) {
        let des = pi.descents().ord();
        by_length[pi.length()][des] += 1;
        by_imaj[pi.inverse().maj()][des] += 1;
    }

    let shapes = Partition::all(n);
    let maj_counts: Vec<Vec<usize>> = shapes
        .iter()
        .map(|l| {
            let mut c = vec![0; max_len + 1];
            for t in StandardTableau::all(l) {
                c[t.maj()] += 1;
            }
            c
        })
        .collect();
    let compositions = Composition::all(n)?;

    let mut lengths = Vec::with_capacity(max_len + 1);
    for k in 0..=max_len {
        let v = DescentVector { n, counts: by_length[k].iter().map(|&c| BigInt::from(c)).collect() };
        let character_agrees = compositions.iter().all(|mu| {
            let expected: BigInt = shapes
                .iter()
                .zip(&maj_counts)
                .map(|(l, c)| BigInt::from(c[k]) * mn_character(l, &mu.underlying_partition()).expect("same n"))
                .sum();
            fine_character_from_descents(&v, mu).expect("same n") == expected
        });
        lengths.push(LengthCheck {
            k,
            count: by_length[k].iter().sum::<u64>() as usize,
            descents_agree: by_length[k] == by_imaj[k],
            character_agrees,
        });
    }
    let joint_equal = lengths.iter().all(|c| c.descents_agree);
    let pass = joint_equal && lengths.iter().all(|c| c.character_agrees);
    Ok(EquidistributionReport { n, joint_equal, lengths, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn set(n: usize, e: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(n, e).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn fam(s: &str) -> FineFamily {
        s.parse().unwrap()
    }

    #[test]
    fn small_descent_vectors() {
        assert_eq!(descent_vector(&fam("syt:2,1"), 3).unwrap().counts, ints(&[0, 1, 1, 0]));
        assert_eq!(descent_vector(&fam("length:0"), 3).unwrap().counts, ints(&[1, 0, 0, 0]));
        assert_eq!(descent_vector(&fam("involutions"), 3).unwrap().counts, ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn small_characters() {
        let syt = fam("syt:2,1");
        assert_eq!(fine_character(&syt, &"1,1,1".parse().unwrap()).unwrap(), BigInt::from(2));
        assert_eq!(fine_character(&syt, &"3".parse().unwrap()).unwrap(), BigInt::from(-1));
        assert_eq!(fine_character(&fam("involutions"), &"1,1,1".parse().unwrap()).unwrap(), BigInt::from(4));
        // compositions in ord(I) order: (1,1,1), (2,1), (1,2), (3)
        assert_eq!(lift_character(&syt, 3).unwrap().values, ints(&[2, 0, 0, -1]));
        assert!(lift_character(&fam("explicit:"), 4).unwrap().values.iter().all(Zero::is_zero));
    }

    #[test]
    fn regular_character() {
        let mut v = DescentVector::zeros(4).unwrap();
        for k in 0..=6 {
            for (a, b) in v.counts.iter_mut().zip(descent_vector(&FineFamily::Length(k), 4).unwrap().counts) {
                *a += b;
            }
        }
        let x = lift(&v).unwrap();
        assert_eq!(x.values[0], BigInt::from(24));
        assert!(x.values[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn recovery_examples() {
        let x = lift_character(&fam("syt:2,1"), 3).unwrap();
        assert_eq!(count_superset(&x, set(2, &[1])).unwrap(), q(1, 1));
        assert_eq!(count_superset(&x, set(2, &[])).unwrap(), q(2, 1));
        assert_eq!(count_exact(&x, set(2, &[1])).unwrap(), q(1, 1));
        assert_eq!(count_exact(&x, set(2, &[])).unwrap(), q(0, 1));
        let inv = lift_character(&fam("involutions"), 3).unwrap();
        assert_eq!(inv.values, ints(&[4, 0, 0, 1]));
        assert_eq!(count_superset(&inv, set(2, &[1, 2])).unwrap(), q(1, 1));
        let empty = lift_character(&fam("explicit:"), 3).unwrap();
        assert!(descent_distribution(&empty).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn closed_formula_is_the_inverse_matrix_row() {
        let am_inv = build(FamilyTag::AM, 3).unwrap().inverse().unwrap();
        for family in ["involutions", "knuth:3,1", "length:2", "class:2,2", "arc", "explicit:2,1,3,4"] {
            let x = lift_character(&fam(family), 4).unwrap();
            let xr: Vec<BigRational> = x.values.iter().cloned().map(BigRational::from_integer).collect();
            let via_matrix = am_inv.mul_vec(&xr).unwrap();
            for i in SubsetMask::all(3).unwrap() {
                assert_eq!(count_superset(&x, i).unwrap(), via_matrix[i.ord()], "{family} at {i}");
            }
        }
    }

    #[test]
    fn fineness_examples() {
        let r = fineness_of(&fam("involutions"), 3).unwrap();
        assert!(r.fine && r.consistent);
        assert!(r.multiplicities.iter().all(|(_, m)| m.is_one()));

        let r = fineness_of(&fam("arc"), 3).unwrap();
        assert!(r.fine);
        for (nu, m) in &r.multiplicities {
            assert_eq!(m, &BigRational::from_integer(StandardTableau::all(nu).len().into()));
        }

        let r = fineness_of(&fam("explicit:2,1,3"), 3).unwrap();
        assert!(!r.fine && !r.consistent);
        assert_eq!(r.consistency_failures.len(), 1);
        assert_eq!(r.multiplicity(&"2,1".parse().unwrap()), Some(&q(2, 3)));
    }

    #[test]
    fn report_json() {
        let r = fineness_of(&fam("syt:2,1"), 3).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["family"], "syt:2,1");
        assert_eq!(v["fine"], true);
        assert_eq!(v["multiplicities"]["(2,1)"], "1");
        assert_eq!(v["multiplicities"]["(3)"], "0");
        assert_eq!(v["consistency_failures"], serde_json::json!([]));
    }

    #[test]
    fn solve_agrees_with_inner_products() {
        for n in 1..=SOLVE_CAP {
            for shape in Partition::all(n) {
                let v = descent_vector(&FineFamily::ConjClass(shape), n).unwrap();
                let solved = multiplicities_by_solve(&v).unwrap().expect("conjugacy classes are fine");
                assert_eq!(solved, multiplicities(&lift(&v).unwrap()));
            }
        }
        let single = descent_vector(&fam("explicit:2,1,3"), 3).unwrap();
        assert_eq!(multiplicities_by_solve(&single).unwrap(), None);
    }

    #[test]
    fn equidistribution_small() {
        for n in 1..=6 {
            let r = equidistribution_fs_ls(n).unwrap();
            assert!(r.pass, "n = {n}");
            assert_eq!(r.lengths.iter().map(|c| c.count).sum::<usize>(), (1..=n).product::<usize>());
        }
        assert!(equidistribution_fs_ls(10).is_err());
    }
}
