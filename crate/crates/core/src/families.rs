//! The asymmetric Walsh-Hadamard families `A_n`, `B_n`, their Sylvester
//! relative `H_n`, the zeta/Möbius pair `Z_n`, `M_n`, and the transformed
//! products `AM_n = A_n M_n`, `BM_n = B_n M_n`, `HM_n = H_n M_n`.
//!
//! Each family can be built two ways: by its block recursion ([`build`]) and
//! entry-by-entry from a closed formula ([`entry`]). The remaining functions
//! are closed forms for determinants, eigenvalues, inverse entries and
//! row/column sums, each of which can be checked against the built matrices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::combinatorics::{factorial, runs, Composition, SubsetMask};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Polynomial};

/// Largest `n` accepted by [`build`] for `A`, `B`, `H`, `Z` and `M`.
pub const BASE_CAP: usize = 12;
/// Largest `n` accepted by [`build`] for the products `AM`, `BM`, `HM`.
pub const PRODUCT_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyTag {
    A,
    B,
    H,
    Z,
    M,
    AM,
    BM,
    HM,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 8] =
        [FamilyTag::A, FamilyTag::B, FamilyTag::H, FamilyTag::Z, FamilyTag::M, FamilyTag::AM, FamilyTag::BM, FamilyTag::HM];

    pub fn cap(self) -> usize {
        match self {
            FamilyTag::AM | FamilyTag::BM | FamilyTag::HM => PRODUCT_CAP,
            _ => BASE_CAP,
        }
    }

    fn check_cap(self, n: usize) -> Result<()> {
        if n > self.cap() {
            return Err(Error::CapExceeded { what: "matrix family", n, cap: self.cap() });
        }
        Ok(())
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown matrix family {s:?}")))
    }
}

fn rat(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Build the order-`2^n` matrix of `tag` by its block recursion.
pub fn build(tag: FamilyTag, n: usize) -> Result<ExactMatrix> {
    tag.check_cap(n)?;
    let one = ExactMatrix::identity(1);
    let blocks = |tl: &ExactMatrix, tr: &ExactMatrix, bl: &ExactMatrix, br: &ExactMatrix| {
        ExactMatrix::from_blocks(tl, tr, bl, br).expect("blocks share an order")
    };
    let zero = |m: &ExactMatrix| ExactMatrix::zeros(m.order());
    Ok(match tag {
        FamilyTag::A | FamilyTag::B => {
            let (mut a, mut b) = (one.clone(), one);
            for _ in 0..n {
                let nb = b.neg();
                let next_a = blocks(&a, &a, &a, &nb);
                b = blocks(&a, &a, &zero(&a), &nb);
                a = next_a;
            }
            if tag == FamilyTag::A {
                a
            } else {
                b
            }
        }
        FamilyTag::AM | FamilyTag::BM => {
            let (mut am, mut bm) = (one.clone(), one);
            for _ in 0..n {
                let z = zero(&am);
                let sum = am.add(&bm)?.neg();
                let next_am = blocks(&am, &z, &am, &sum);
                bm = blocks(&am, &z, &z, &bm.neg());
                am = next_am;
            }
            if tag == FamilyTag::AM {
                am
            } else {
                bm
            }
        }
        FamilyTag::H => (0..n).fold(one, |h, _| blocks(&h, &h, &h, &h.neg())),
        FamilyTag::Z => (0..n).fold(one, |z, _| blocks(&z, &z, &zero(&z), &z)),
        FamilyTag::M => (0..n).fold(one, |m, _| blocks(&m, &m.neg(), &zero(&m), &m)),
        FamilyTag::HM => (0..n).fold(one, |h, _| blocks(&h, &zero(&h), &h, &h.scale(&rat(-2)))),
    })
}

/// Build the matrix of `tag` entry by entry from [`entry`].
pub fn build_explicit(tag: FamilyTag, n: usize) -> Result<ExactMatrix> {
    tag.check_cap(n)?;
    let order = 1usize << n;
    let subset = |k: usize| SubsetMask::new(k as u64, n).expect("k < 2^n");
    Ok(ExactMatrix::from_fn(order, |i, j| {
        BigRational::from_integer(entry(tag, subset(i), subset(j)).expect("same ambient"))
    }))
}

/// `fin(I) = max{0 ≤ i ≤ n : i ∉ I}`; `fin([n]) = 0`.
pub fn fin(set: SubsetMask) -> usize {
    (1..=set.ambient()).rev().find(|&i| !set.contains(i)).unwrap_or(0)
}

/// Closed-form entry `(I, J)` of the matrix of `tag`, without building it.
pub fn entry(tag: FamilyTag, i: SubsetMask, j: SubsetMask) -> Result<BigInt> {
    if i.ambient() != j.ambient() {
        return Err(Error::AmbientMismatch(i.ambient(), j.ambient()));
    }
    let n = i.ambient();
    let zero = BigInt::zero();
    Ok(match tag {
        FamilyTag::H => sign(i.intersection(j).len()),
        FamilyTag::A | FamilyTag::B => {
            if !crate::combinatorics::prefix_compatible(i, j) {
                zero
            } else if tag == FamilyTag::B && n > 0 && i.contains(n) && !j.contains(n) {
                zero
            } else {
                sign(i.intersection(j).len())
            }
        }
        FamilyTag::Z => {
            if i.is_subset_of(j) {
                BigInt::one()
            } else {
                zero
            }
        }
        FamilyTag::M => {
            if i.is_subset_of(j) {
                sign(j.difference(i).len())
            } else {
                zero
            }
        }
        FamilyTag::HM => {
            if j.is_subset_of(i) {
                BigInt::from(-2).pow(j.len() as u32)
            } else {
                zero
            }
        }
        FamilyTag::AM => {
            if !j.is_subset_of(i) {
                zero
            } else {
                sign(j.len()) * transformed_abs(i, j, runs(j).len())
            }
        }
        FamilyTag::BM => {
            if !j.is_subset_of(i) || fin(i) != fin(j) {
                zero
            } else {
                let t = runs(j).len();
                let counted = if n > 0 && i.contains(n) { t - 1 } else { t };
                sign(j.len()) * transformed_abs(i, j, counted)
            }
        }
    })
}

/// `∏ (|J_k| + 1)^{c_k(I)}` over the first `counted` runs of `J`, where
/// `c_k(I) = 0` when the element just before the run lies in `I`.
fn transformed_abs(i: SubsetMask, j: SubsetMask, counted: usize) -> BigInt {
    runs(j)
        .iter()
        .take(counted)
        .filter(|run| run.start == 0 || !i.contains(run.start))
        .fold(BigInt::one(), |acc, run| acc * BigInt::from(run.len + 1))
}

/// First part of `fine` inside each part of `coarse`, or `None` if `fine`
/// does not refine `coarse`.
fn initial_parts(coarse: &Composition, fine: &Composition) -> Option<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(coarse.len());
    let mut parts = fine.parts().iter();
    for &target in coarse.parts() {
        let first = *parts.next()?;
        let (mut acc, mut last) = (first, first);
        while acc < target {
            last = *parts.next()?;
            acc += last;
        }
        if acc != target {
            return None;
        }
        out.push((first, last));
    }
    Some(out)
}

/// Entry `(I(λ), I(μ))` of `AM_n` from compositions `λ`, `μ` of `n + 1`.
pub fn am_entry_by_compositions(lambda: &Composition, mu: &Composition) -> Result<BigInt> {
    check_same_size(lambda, mu)?;
    let Some(inits) = initial_parts(lambda, mu) else { return Ok(BigInt::zero()) };
    let abs: BigInt = inits.iter().map(|&(first, _)| BigInt::from(first)).product();
    Ok(sign(mu.n() - mu.len()) * abs)
}

/// Entry `(I(λ), I(μ))` of `BM_n`; nonzero only if the last part of `λ`
/// is left unsplit in `μ`.
pub fn bm_entry_by_compositions(lambda: &Composition, mu: &Composition) -> Result<BigInt> {
    check_same_size(lambda, mu)?;
    let Some(inits) = initial_parts(lambda, mu) else { return Ok(BigInt::zero()) };
    let last_lambda = *lambda.parts().last().expect("nonempty");
    if inits.last().map(|&(first, _)| first) != Some(last_lambda) {
        return Ok(BigInt::zero());
    }
    let abs: BigInt = inits[..inits.len() - 1].iter().map(|&(first, _)| BigInt::from(first)).product();
    Ok(sign(mu.n() - mu.len()) * abs)
}

fn check_same_size(a: &Composition, b: &Composition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::InvalidComposition(format!("{a} and {b} have different sums")));
    }
    Ok(())
}

/// `k^{2^{n-1-k} (n + c - k)}` with the power of two taken as an exact
/// rational; the full exponent must come out integral.
fn det_factor(k: usize, n: usize, c: usize) -> BigInt {
    let pow2 = if k < n {
        BigRational::from_integer(BigInt::one() << (n - 1 - k))
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (k + 1 - n))
    };
    let exponent = pow2 * rat(n + c - k);
    assert!(exponent.is_integer(), "non-integral determinant exponent {exponent}");
    let e = exponent.to_integer().to_u32().expect("exponent fits in u32");
    BigInt::from(k).pow(e)
}

/// Closed-form determinant of `A_n`, `B_n` or `H_n`.
pub fn det_closed(tag: FamilyTag, n: usize) -> Result<BigInt> {
    Ok(match (tag, n) {
        (FamilyTag::A | FamilyTag::B | FamilyTag::H, 0) => BigInt::one(),
        (FamilyTag::A | FamilyTag::H, 1) => BigInt::from(-2),
        (FamilyTag::B, 1) => BigInt::from(-1),
        (FamilyTag::A, _) => (1..=n).fold(BigInt::from(n + 1), |acc, k| acc * det_factor(k, n, 4)),
        (FamilyTag::B, _) => (1..=n).fold(BigInt::one(), |acc, k| acc * det_factor(k, n, 2)),
        (FamilyTag::H, _) => BigInt::from(2).pow(((1u64 << (n - 1)) * n as u64) as u32),
        _ => return Err(Error::Unsupported(format!("no determinant closed form for {tag}"))),
    })
}

/// Exponents `a_j` in `det(A_n) = ∏_{k=1}^{n+1} k^{a_{n+1-k}}`: `1, 2`, then `(j + 3) 2^{j-2}`.
pub fn det_exponent(j: usize) -> BigInt {
    match j {
        0 => BigInt::one(),
        1 => BigInt::from(2),
        _ => BigInt::from(j + 3) << (j - 2),
    }
}

/// A composition of `n` and the integer whose square roots `±√value` are
/// the eigenvalue pair it contributes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenPair {
    pub composition: String,
    #[serde(serialize_with = "crate::render::serialize_display")]
    pub value: BigInt,
    #[serde(skip)]
    pub parts: Composition,
}

/// Eigenvalue data of `A_n` (`∏ (μ_i + 1)`) or `B_n` (same, last part
/// omitted), one pair per composition of `n`. Empty for `n = 0`.
pub fn eigen_multiset(tag: FamilyTag, n: usize) -> Result<Vec<EigenPair>> {
    let drop_last = match tag {
        FamilyTag::A => false,
        FamilyTag::B => true,
        _ => return Err(Error::Unsupported(format!("no eigenvalue description for {tag}"))),
    };
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(Composition::all(n)?
        .into_iter()
        .map(|mu| {
            let parts = mu.parts();
            let used = if drop_last { &parts[..parts.len() - 1] } else { parts };
            let value = used.iter().map(|&p| BigInt::from(p + 1)).product();
            EigenPair { composition: mu.to_string(), value, parts: mu }
        })
        .collect())
}

/// `∏ (x² − π)` over [`eigen_multiset`]; `x − 1` for `n = 0`.
pub fn eigen_charpoly(tag: FamilyTag, n: usize) -> Result<Polynomial> {
    if n == 0 {
        eigen_multiset(tag, n)?;
        return Ok(Polynomial::x_minus(BigRational::one()));
    }
    Ok(eigen_multiset(tag, n)?.into_iter().map(|p| Polynomial::x_squared_minus(p.value)).product())
}

/// Closed-form entry `(I, J)` of `AM_n^{-1}`.
pub fn am_inverse_entry(i: SubsetMask, j: SubsetMask) -> Result<BigRational> {
    if i.ambient() != j.ambient() {
        return Err(Error::AmbientMismatch(i.ambient(), j.ambient()));
    }
    if !j.is_subset_of(i) {
        return Ok(BigRational::zero());
    }
    let mut value = BigRational::from_integer(sign(j.len()));
    for run in runs(i).iter() {
        let mut numer = BigInt::one();
        for e in run.elements().filter(|&e| j.contains(e)) {
            numer *= BigInt::from(run.last() - e + 1);
        }
        value *= BigRational::new(numer, factorial(run.len + 1).into());
    }
    Ok(value)
}

/// `M_n(x) = x AM_n + (1 − x) BM_n`.
pub fn mx_matrix(n: usize, x: &BigRational) -> Result<ExactMatrix> {
    let am = build(FamilyTag::AM, n)?;
    let bm = build(FamilyTag::BM, n)?;
    am.scale(x).add(&bm.scale(&(BigRational::one() - x)))
}

/// Closed-form entry `(I, J)` of `M_n(x)^{-1}` for `x > 0`.
pub fn mx_inverse_entry(i: SubsetMask, j: SubsetMask, x: &BigRational) -> Result<BigRational> {
    if !x.is_positive() {
        return Err(Error::NonPositiveParameter(x.to_string()));
    }
    if i.ambient() != j.ambient() {
        return Err(Error::AmbientMismatch(i.ambient(), j.ambient()));
    }
    if !j.is_subset_of(i) {
        return Ok(BigRational::zero());
    }
    let n = i.ambient();
    let one = BigRational::one();
    let mut value = BigRational::from_integer(sign(j.len()));
    for run in runs(i).iter() {
        let holds_n = run.contains(n);
        for e in run.elements() {
            let gap = rat(run.last() - e);
            let (d, q) = if holds_n {
                let d = if j.contains(e) { &gap * x + &one } else { x.clone() };
                (d, (&gap + &one) * x + &one)
            } else {
                let d = if j.contains(e) { &gap + &one } else { one.clone() };
                (d, &gap + rat(2))
            };
            value = value * d / q;
        }
    }
    Ok(value)
}

/// `a_m = |(AM_∞)_{J,J}|` with `ord(J) = m`, by the recursion
/// `a_{2m} = a_m`, `a_{4m+1} = 2 a_{2m}`, `a_{4m+3} = 2 a_{2m+1} − a_m`, `a_0 = 1`.
pub fn diag_seq(m: u64) -> u64 {
    match m {
        0 => 1,
        _ if m % 2 == 0 => diag_seq(m / 2),
        _ if m % 4 == 1 => 2 * diag_seq(m / 2),
        _ => {
            let k = m / 4;
            2 * diag_seq(2 * k + 1) - diag_seq(k)
        }
    }
}

/// The composition `λ` of `n + 1` with `I(λ) = set`, where `set ⊆ [n]`.
fn composition_of(set: SubsetMask) -> Result<Composition> {
    Composition::from_subset(set, set.ambient() + 1)
}

fn all_but_last(parts: &[usize]) -> &[usize] {
    &parts[..parts.len().saturating_sub(1)]
}

/// Row `I` of `AM_n`, `BM_n` or `HM_n`: `(signed sum, sum of absolute values)`.
pub fn row_sum_closed(tag: FamilyTag, i: SubsetMask) -> Result<(BigInt, BigInt)> {
    let lambda = composition_of(i)?;
    let mersenne = |parts: &[usize]| parts.iter().map(|&p| (BigInt::one() << p) - 1).product::<BigInt>();
    let abs = match tag {
        FamilyTag::AM => mersenne(lambda.parts()),
        FamilyTag::BM => mersenne(all_but_last(lambda.parts())),
        FamilyTag::HM => BigInt::from(3).pow(i.len() as u32),
        _ => return Err(Error::Unsupported(format!("no row-sum closed form for {tag}"))),
    };
    Ok((sign(i.len()), abs))
}

/// Sum of absolute values in column `J` of `AM_n`, `BM_n` or `HM_n`, which
/// also equals the diagonal entry `(J, J)` of `A_n²`, `B_n²` or `H_n²`.
pub fn col_abs_sum_closed(tag: FamilyTag, j: SubsetMask) -> Result<BigInt> {
    let mu = composition_of(j)?;
    let mut starred = mu.parts().to_vec();
    starred[0] -= 1;
    let product = |parts: &[usize]| parts.iter().map(|&p| BigInt::from(p + 1)).product::<BigInt>();
    Ok(match tag {
        FamilyTag::AM => product(&starred),
        FamilyTag::BM => product(all_but_last(&starred)),
        FamilyTag::HM => BigInt::one() << j.ambient(),
        _ => return Err(Error::Unsupported(format!("no column-sum closed form for {tag}"))),
    })
}
