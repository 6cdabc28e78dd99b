//! Exhaustive checks of every closed form against the objects it describes.
//!
//! Each suite walks `n = 0..=n_max` (clamped to what the suite can finish in
//! reasonable time) and records one [`CheckResult`] per identity and `n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::combinatorics::{runs, Composition, Partition, SubsetMask};
use crate::error::{Error, Result};
use crate::families::{
    am_inverse_entry, build, build_explicit, col_abs_sum_closed, det_closed, det_exponent, diag_seq, eigen_charpoly,
    eigen_multiset, mx_inverse_entry, mx_matrix, row_sum_closed, FamilyTag,
};
use crate::fine::{
    count_exact, count_superset, descent_vector, fine_character, fine_character_from_descents, fineness, lift,
    CharacterVector, DescentVector,
};
use crate::linalg::{is_unit_fraction, ExactMatrix};
use crate::symgroup::{mn_character, FineFamily, Permutation, StandardTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Matrices,
    Inverses,
    Eigen,
    Characters,
    Inversion,
    Fineness,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Matrices, Suite::Inverses, Suite::Eigen, Suite::Characters, Suite::Inversion, Suite::Fineness];

    /// Largest `n` a suite will run; larger requests are clamped.
    pub fn cap(self) -> usize {
        match self {
            Suite::Matrices => 8,
            Suite::Inverses | Suite::Eigen => 6,
            Suite::Characters | Suite::Inversion | Suite::Fineness | Suite::All => 7,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Matrices => "matrices",
            Suite::Inverses => "inverses",
            Suite::Eigen => "eigen",
            Suite::Characters => "characters",
            Suite::Inversion => "inversion",
            Suite::Fineness => "fineness",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub n: usize,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub n_max: usize,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Recorder {
    suite: Suite,
    checks: Vec<CheckResult>,
}

impl Recorder {
    fn check(&mut self, name: impl Into<String>, n: usize, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult { suite: self.suite, name: name.into(), n, pass, detail: detail.into() });
    }

    /// Record the outcome of a search for a counterexample.
    fn expect_none(&mut self, name: impl Into<String>, n: usize, counterexample: Option<String>, ok: impl Into<String>) {
        match counterexample {
            None => self.check(name, n, true, ok),
            Some(bad) => self.check(name, n, false, bad),
        }
    }
}

/// Run a suite for `n ≤ n_max` (clamped per suite; `All` runs each suite with its own clamp).
pub fn run(suite: Suite, n_max: usize) -> Result<Report> {
    let mut checks = Vec::new();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    for s in suites {
        let mut rec = Recorder { suite: s, checks: Vec::new() };
        let top = n_max.min(s.cap());
        match s {
            Suite::Matrices => matrices(&mut rec, top)?,
            Suite::Inverses => inverses(&mut rec, top)?,
            Suite::Eigen => eigen(&mut rec, top)?,
            Suite::Characters => characters(&mut rec, top)?,
            Suite::Inversion => inversion(&mut rec, top)?,
            Suite::Fineness => fineness_suite(&mut rec, top)?,
            Suite::All => unreachable!("expanded above"),
        }
        checks.extend(rec.checks);
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(Report { suite, n_max, pass, checks })
}

fn subsets(n: usize) -> Vec<SubsetMask> {
    SubsetMask::all(n).expect("n within range").collect()
}

fn int(q: &BigRational) -> BigInt {
    assert!(q.is_integer(), "{q} is not an integer");
    q.to_integer()
}

fn rat(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// `a / b` is an integer (`b ≠ 0`).
fn divides(b: &BigRational, a: &BigRational) -> bool {
    (a / b).is_integer()
}

/// `Σ_k [C(m+k, m−k) C(m, k) mod 2]`, parities by Lucas' theorem.
pub fn binomial_mod2_sequence(m: u64) -> u64 {
    let odd = |a: u64, b: u64| b & !a == 0;
    (0..=m).filter(|&k| odd(m + k, m - k) && odd(m, k)).count() as u64
}

fn matrices(rec: &mut Recorder, top: usize) -> Result<()> {
    for n in 0..=top {
        let built: Vec<(FamilyTag, ExactMatrix)> =
            FamilyTag::ALL.iter().map(|&t| build(t, n).map(|m| (t, m))).collect::<Result<_>>()?;
        let get = |t: FamilyTag| &built.iter().find(|(u, _)| *u == t).expect("all tags built").1;

        for (tag, m) in &built {
            let same = build_explicit(*tag, n)? == *m;
            rec.check(format!("entries {tag}"), n, same, "recursion vs entry formula over all index pairs");
        }

        let (a, b, h, z, mm) = (get(FamilyTag::A), get(FamilyTag::B), get(FamilyTag::H), get(FamilyTag::Z), get(FamilyTag::M));
        let (am, bm, hm) = (get(FamilyTag::AM), get(FamilyTag::BM), get(FamilyTag::HM));
        let products = a.mat_mul(mm)? == *am
            && b.mat_mul(mm)? == *bm
            && h.mat_mul(mm)? == *hm
            && z.mat_mul(mm)? == ExactMatrix::identity(1 << n);
        rec.check("products", n, products, "AM = A M, BM = B M, HM = H M, Z M = I");
        let lu = am.is_lower_triangular() && z.is_upper_triangular() && am.mat_mul(z)? == *a;
        rec.check("lu", n, lu, "AM lower, Z upper, AM Z = A");

        for tag in [FamilyTag::A, FamilyTag::B, FamilyTag::H] {
            let det = get(tag).det();
            let closed = det_closed(tag, n)?;
            rec.check(format!("det {tag}"), n, det == rat(closed.clone()), format!("{det} vs closed form {closed}"));
        }
        if (2..=6).contains(&n) {
            let product: BigInt = (1..=n + 1).map(|k| BigInt::from(k).pow(exp_u32(&det_exponent(n + 1 - k)))).product();
            rec.check("det exponents", n, rat(product) == a.det(), "det A_n = ∏ k^{a_{n+1-k}}");
        }

        let sets = subsets(n);
        let squares = [(FamilyTag::AM, a.mat_mul(a)?), (FamilyTag::BM, b.mat_mul(b)?), (FamilyTag::HM, h.mat_mul(h)?)];
        for (tag, square) in &squares {
            let m = get(*tag);
            let bad = sets.iter().find_map(|&i| {
                let row = m.row(i.ord());
                let signed: BigRational = row.iter().sum();
                let abs: BigRational = row.iter().map(|q| q.abs()).sum();
                let (s, t) = row_sum_closed(*tag, i).ok()?;
                (signed != rat(s.clone()) || abs != rat(t.clone())).then(|| format!("row {i}: ({signed}, {abs}) vs ({s}, {t})"))
            });
            rec.expect_none(format!("row sums {tag}"), n, bad, "signed and absolute row sums");
            let bad = sets.iter().find_map(|&j| {
                let col = m.column(j.ord());
                let abs: BigRational = col.iter().map(|q| q.abs()).sum();
                let signed: BigRational = col.iter().sum();
                let closed = rat(col_abs_sum_closed(*tag, j).ok()?);
                let diag = square.get(j.ord(), j.ord());
                (abs != closed || signed.abs() != closed || *diag != closed).then(|| format!("column {j}: {abs} vs {closed}, square {diag}"))
            });
            rec.expect_none(format!("column sums {tag}"), n, bad, "column sums equal diagonal of the square");
        }

        let bad = (0..1u64 << n).find(|&m| am.get(m as usize, m as usize).abs() != rat(diag_seq(m).into()));
        rec.expect_none("diagonal sequence", n, bad.map(|m| format!("ordinal {m}")), "|diag AM_n| = a_m");

        if n <= 6 {
            dominations(rec, n, am, bm, hm)?;
            if n >= 1 {
                let (a1, b1) = (build(FamilyTag::A, n - 1)?, build(FamilyTag::B, n - 1)?);
                let (a1sq, b1sq) = (a1.mat_mul(&a1)?, b1.mat_mul(&b1)?);
                let diff = a1.sub(&b1)?;
                let cross = a1.mat_mul(&diff)?;
                let two = BigRational::from_integer(2.into());
                let a_sq = ExactMatrix::from_blocks(&a1sq.scale(&two), &cross, &diff.mat_mul(&a1)?, &a1sq.add(&b1sq)?)?;
                let b_sq = ExactMatrix::from_blocks(&a1sq, &cross, &ExactMatrix::zeros(a1.order()), &b1sq)?;
                let ok = a_sq == squares[0].1 && b_sq == squares[1].1;
                rec.check("square recursions", n, ok, "block recursions for A_n² and B_n²");
            }
        }
    }
    let bad = (0..4096).find(|&m| diag_seq(m) != binomial_mod2_sequence(m));
    rec.expect_none("diagonal sequence vs binomial parity", 12, bad.map(|m| format!("m = {m}")), "m < 4096");
    let printed = [1, 2, 5, 12, 28, 64];
    let ok = printed.iter().enumerate().all(|(j, &a)| det_exponent(j) == BigInt::from(a));
    rec.check("exponent sequence", 6, ok, "1, 2, 5, 12, 28, 64");
    Ok(())
}

fn exp_u32(e: &BigInt) -> u32 {
    u32::try_from(e).expect("small exponent")
}

/// `|AM| ≤ |HM| = 2^{|J|}` and `|BM| ≤ |AM|` on `J ⊆ I`, with equality exactly when
/// every run of `J` is a singleton whose predecessor lies outside `I` (first), and,
/// where `BM` is nonzero, when `n ∉ I` or the predecessor of the last run of `J` is in `I` (second).
fn dominations(rec: &mut Recorder, n: usize, am: &ExactMatrix, bm: &ExactMatrix, hm: &ExactMatrix) -> Result<()> {
    let sets = subsets(n);
    let mut bad = None;
    'outer: for &i in &sets {
        for j in i.subsets() {
            let (x, y, h) = (am.get(i.ord(), j.ord()).abs(), bm.get(i.ord(), j.ord()).abs(), hm.get(i.ord(), j.ord()).abs());
            let power = rat(BigInt::one() << j.len());
            let pred_outside = |first: usize| first == 1 || !i.contains(first - 1);
            let first_eq = runs(j).iter().all(|r| r.len == 1 && pred_outside(r.first()));
            let last_pred_in = runs(j).last().is_some_and(|r| !pred_outside(r.first()));
            let second_eq = n == 0 || !i.contains(n) || last_pred_in;
            let ok = h == power
                && x <= h
                && y <= x
                && (x == h) == first_eq
                && (y.is_zero() || (x == y) == second_eq);
            if !ok {
                bad = Some(format!("I = {i}, J = {j}: |AM| {x}, |BM| {y}, |HM| {h}"));
                break 'outer;
            }
        }
    }
    rec.expect_none("dominations", n, bad, "entry bounds and equality cases");

    // Every nonzero (AM)_{I,J} divides (AM)_{J,J} and is a multiple of (AM)_{[n],J}.
    let full = SubsetMask::full(n)?;
    let bad = sets.iter().find_map(|&i| {
        i.subsets().find_map(|j| {
            let e = am.get(i.ord(), j.ord());
            let ok = !e.is_zero() && divides(e, am.get(j.ord(), j.ord())) && divides(am.get(full.ord(), j.ord()), e);
            (!ok).then(|| format!("I = {i}, J = {j}"))
        })
    });
    rec.expect_none("diagonal and last row divisibility", n, bad, "AM_n");
    Ok(())
}

fn inverses(rec: &mut Recorder, top: usize) -> Result<()> {
    for n in 0..=top {
        let sets = subsets(n);
        let inv = build(FamilyTag::AM, n)?.inverse()?;
        let bad = sets.iter().find_map(|&i| {
            sets.iter().find_map(|&j| {
                let closed = am_inverse_entry(i, j).ok()?;
                (closed != *inv.get(i.ord(), j.ord())).then(|| format!("({i}, {j}): {closed}"))
            })
        });
        rec.expect_none("AM inverse entries", n, bad, "closed form vs exact inverse");

        let bad = sets.iter().find_map(|&i| {
            let row = inv.row(i.ord());
            let nonzero: Vec<&BigRational> = row.iter().filter(|q| !q.is_zero()).collect();
            let abs_sum: BigRational = row.iter().map(|q| q.abs()).sum();
            let first = &row[0];
            let diag = &row[i.ord()];
            let ok = abs_sum.is_one()
                && nonzero.iter().all(|q| is_unit_fraction(q) && divides(first, q) && divides(q, diag));
            (!ok).then(|| format!("row {i}"))
        });
        rec.expect_none("AM inverse rows", n, bad, "abs sum 1, unit fractions, divisibility");

        if n <= 5 {
            for (p, q) in [(1, 2), (1, 1), (2, 1), (3, 1)] {
                let x = BigRational::new(p.into(), q.into());
                let inv = mx_matrix(n, &x)?.inverse()?;
                let bad = sets.iter().find_map(|&i| {
                    sets.iter().find_map(|&j| {
                        let closed = mx_inverse_entry(i, j, &x).ok()?;
                        (closed != *inv.get(i.ord(), j.ord())).then(|| format!("({i}, {j}): {closed}"))
                    })
                });
                rec.expect_none(format!("M(x) inverse entries, x = {x}"), n, bad, "closed form vs exact inverse");
            }
        }
    }
    Ok(())
}

fn eigen(rec: &mut Recorder, top: usize) -> Result<()> {
    for n in 0..=top {
        for tag in [FamilyTag::A, FamilyTag::B] {
            let m = build(tag, n)?;
            if n <= 5 {
                let (cp, closed) = (m.charpoly()?, eigen_charpoly(tag, n)?);
                rec.check(format!("charpoly {tag}"), n, cp == closed, format!("{cp}"));
            }
            if n >= 1 {
                let square = m.mat_mul(&m)?;
                let mut diag: Vec<BigInt> = square.diagonal().iter().map(int).collect();
                let mut eig: Vec<BigInt> = eigen_multiset(tag, n)?.into_iter().flat_map(|p| [p.value.clone(), p.value]).collect();
                diag.sort();
                eig.sort();
                rec.check(format!("eigenvalues vs diagonal of {tag}²"), n, diag == eig, "as multisets");
            }
        }
    }
    Ok(())
}

/// The character a fine family is known to carry, from the Murnaghan–Nakayama
/// rule: `χ^λ` for Knuth classes and tableaux of shape `λ`, `Σ_λ χ^λ` for
/// involutions, and `Σ_λ m_{k,λ} χ^λ` for length `k`, where `m_{k,λ}` counts the
/// tableaux of shape `λ` with major index `k`. `None` for other families.
pub fn predicted_character(family: &FineFamily, mu: &Partition) -> Result<Option<BigInt>> {
    let n = mu.n();
    Ok(match family {
        FineFamily::KnuthClass(l) | FineFamily::Syt(l) => Some(mn_character(l, mu)?),
        FineFamily::Involutions => Some(Partition::all(n).iter().map(|l| mn_character(l, mu)).sum::<Result<BigInt>>()?),
        FineFamily::Length(k) => Some(
            Partition::all(n)
                .iter()
                .map(|l| {
                    let m = StandardTableau::all(l).iter().filter(|t| t.maj() == *k).count();
                    mn_character(l, mu).map(|c| BigInt::from(m) * c)
                })
                .sum::<Result<BigInt>>()?,
        ),
        _ => None,
    })
}

/// Families whose character is predicted by [`predicted_character`].
fn character_families(n: usize) -> Vec<FineFamily> {
    let mut out = Vec::new();
    for shape in Partition::all(n) {
        out.push(FineFamily::KnuthClass(shape.clone()));
        out.push(FineFamily::Syt(shape));
    }
    out.push(FineFamily::Involutions);
    out.extend((0..=n * (n - 1) / 2).map(FineFamily::Length));
    out
}

fn characters(rec: &mut Recorder, top: usize) -> Result<()> {
    for n in 1..=top {
        let classes = Partition::all(n);
        for family in character_families(n) {
            let expected = |mu: &Partition| predicted_character(&family, mu).expect("same n").expect("predicted");
            let bad = classes.iter().find_map(|mu| {
                let got = fine_character(&family, &mu.as_composition()).ok()?;
                let want = expected(mu);
                (got != want).then(|| format!("μ = {mu}: {got} vs {want}"))
            });
            rec.expect_none(format!("fine character {family}"), n, bad, "direct scan vs Murnaghan–Nakayama");

            let v = descent_vector(&family, n)?;
            let want = CharacterVector::from_class_function(n, &expected)?;
            let bad = Composition::all(n)?.into_iter().find_map(|mu| {
                let got = fine_character_from_descents(&v, &mu).ok()?;
                let w = want.get(mu.interior().ok()?);
                (got != *w).then(|| format!("μ = {mu}: {got} vs {w}"))
            });
            let lifted = lift(&v)? == want;
            rec.check(
                format!("lift {family}"),
                n,
                bad.is_none() && lifted,
                bad.unwrap_or_else(|| "A_{n-1} v equals the character at every c_J".into()),
            );
        }
    }
    Ok(())
}

/// Every family instance used by the inversion and fineness suites.
pub fn all_families(n: usize) -> Vec<FineFamily> {
    let mut out = Vec::new();
    for shape in Partition::all(n) {
        out.push(FineFamily::KnuthClass(shape.clone()));
        out.push(FineFamily::Syt(shape.clone()));
        out.push(FineFamily::ConjClass(shape));
    }
    out.extend((0..=n * (n - 1) / 2).map(FineFamily::Length));
    out.push(FineFamily::Involutions);
    out.push(FineFamily::Arc);
    out
}

fn inversion(rec: &mut Recorder, top: usize) -> Result<()> {
    for n in 1..=top {
        let mut families = all_families(n);
        families.push(FineFamily::Explicit(vec![]));
        for family in families {
            let v = descent_vector(&family, n)?;
            let x = lift(&v)?;
            let bad = check_recovery(&v, &x)?;
            rec.expect_none(format!("recovery {family}"), n, bad, "superset and exact counts from characters");
        }
    }
    Ok(())
}

fn check_recovery(v: &DescentVector, x: &CharacterVector) -> Result<Option<String>> {
    for set in SubsetMask::all(v.n - 1)? {
        let sup = count_superset(x, set)?;
        if sup != rat(v.superset_count(set)) {
            return Ok(Some(format!("superset count at {set}: {sup}")));
        }
        let exact = count_exact(x, set)?;
        if exact != rat(v.get(set).clone()) {
            return Ok(Some(format!("exact count at {set}: {exact}")));
        }
    }
    Ok(None)
}

fn fineness_suite(rec: &mut Recorder, top: usize) -> Result<()> {
    for n in 1..=top {
        let shapes = Partition::all(n);
        for family in all_families(n) {
            let report = fineness(&descent_vector(&family, n)?, &family.to_string())?;
            let expected: Option<Vec<BigInt>> = match &family {
                FineFamily::KnuthClass(l) | FineFamily::Syt(l) => {
                    Some(shapes.iter().map(|nu| BigInt::from((nu == l) as u8)).collect())
                }
                FineFamily::Involutions => Some(vec![BigInt::one(); shapes.len()]),
                FineFamily::Length(k) => Some(
                    shapes.iter().map(|nu| BigInt::from(StandardTableau::all(nu).iter().filter(|t| t.maj() == *k).count())).collect(),
                ),
                _ => None,
            };
            let matches = expected.is_none_or(|e| {
                report.multiplicities.iter().map(|(_, m)| m.clone()).eq(e.into_iter().map(BigRational::from_integer))
            });
            let ok = report.fine && matches && report.consistency_failures.is_empty();
            let detail = report.multiplicities.iter().map(|(p, m)| format!("{p}:{m}")).collect::<Vec<_>>().join(" ");
            rec.check(format!("fine {family}"), n, ok, detail);
        }
        if n >= 3 {
            let mut planted = (1..=n).collect::<Vec<_>>();
            planted.swap(0, 1);
            let family = FineFamily::Explicit(vec![Permutation::new(planted)?]);
            let report = fineness(&descent_vector(&family, n)?, &family.to_string())?;
            rec.check(format!("not fine {family}"), n, !report.fine, format!("consistent: {}", report.consistent));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in Suite::EACH {
            let report = run(suite, 4).unwrap();
            let failures: Vec<_> = report.failures().collect();
            assert!(failures.is_empty(), "{failures:#?}");
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn trivial_run() {
        let report = run(Suite::All, 0).unwrap();
        assert!(report.pass);
        assert!(report.checks.iter().all(|c| c.n == 0 || c.n == 6 || c.n == 12));
    }

    #[test]
    fn binomial_parity_sequence() {
        let first: Vec<u64> = (0..8).map(binomial_mod2_sequence).collect();
        assert_eq!(first, vec![1, 2, 2, 3, 2, 4, 3, 4]);
    }

    #[test]
    fn parsing() {
        assert_eq!("ALL".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(serde_json::to_string(&Suite::Eigen).unwrap(), "\"eigen\"");
    }
}
