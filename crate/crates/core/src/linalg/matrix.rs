use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Order above which [`ExactMatrix::charpoly`] refuses to run.
pub const CHARPOLY_MAX_ORDER: usize = 64;

/// Dense square matrix of exact rationals, stored row-major.
///
/// When the matrix comes from one of the families in this crate, row and
/// column `k` correspond to the subset with `ord = k`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    order: usize,
    entries: Vec<BigRational>,
}

pub(crate) fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl ExactMatrix {
    pub fn zeros(order: usize) -> Self {
        ExactMatrix { order, entries: vec![BigRational::zero(); order * order] }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { BigRational::one() } else { BigRational::zero() })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { order, entries }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::DimensionMismatch { left: order, right: row.len() });
            }
            entries.extend(row);
        }
        Ok(ExactMatrix { order, entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    /// Assemble `[[tl, tr], [bl, br]]` from four blocks of equal order.
    pub fn from_blocks(tl: &Self, tr: &Self, bl: &Self, br: &Self) -> Result<Self> {
        let h = tl.order;
        for b in [tr, bl, br] {
            if b.order != h {
                return Err(Error::DimensionMismatch { left: h, right: b.order });
            }
        }
        Ok(Self::from_fn(2 * h, |i, j| {
            let block = match (i < h, j < h) {
                (true, true) => tl,
                (true, false) => tr,
                (false, true) => bl,
                (false, false) => br,
            };
            block.get(i % h, j % h).clone()
        }))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.order).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn diagonal(&self) -> Vec<BigRational> {
        (0..self.order).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&BigRational) -> BigRational) -> Self {
        ExactMatrix { order: self.order, entries: self.entries.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map(|e| e * c)
    }

    pub fn neg(&self) -> Self {
        self.map(|e| -e)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(ExactMatrix {
            order: self.order,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(ExactMatrix {
            order: self.order,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    /// Exact product. Zero entries of `self` are skipped, which matters for
    /// the sparse triangular families.
    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.order;
        let rows: Vec<Vec<BigRational>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut acc = vec![BigRational::zero(); n];
                for (k, a) in self.row(i).iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (slot, b) in acc.iter_mut().zip(other.row(k)) {
                        if !b.is_zero() {
                            *slot += a * b;
                        }
                    }
                }
                acc
            })
            .collect();
        Ok(ExactMatrix { order: n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.order {
            return Err(Error::DimensionMismatch { left: self.order, right: v.len() });
        }
        Ok(self
            .rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Rows scaled to integers, plus the product of the row scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = self
            .rows()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                let ints = row.iter().map(|e| (e * &l).to_integer()).collect();
                scale *= &l;
                ints
            })
            .collect();
        (rows, scale)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. Rational
    /// input is first scaled row-wise to integers, so every intermediate
    /// value is an integer and every Bareiss division is exact.
    pub fn det(&self) -> BigRational {
        if self.order == 0 {
            return BigRational::one();
        }
        let (rows, scale) = self.integer_rows();
        BigRational::new(bareiss_det(rows), scale)
    }

    /// Exact inverse by Gauss-Jordan elimination over the rationals.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order;
        let mut a: Vec<Vec<BigRational>> = self.rows().map(|r| r.to_vec()).collect();
        let mut inv: Vec<Vec<BigRational>> = Self::identity(n).rows().map(|r| r.to_vec()).collect();
        for k in 0..n {
            let p = (k..n).find(|&p| !a[p][k].is_zero()).ok_or(Error::Singular)?;
            a.swap(k, p);
            inv.swap(k, p);
            let pivot = a[k][k].clone();
            for j in 0..n {
                if !a[k][j].is_zero() {
                    a[k][j] /= &pivot;
                }
                if !inv[k][j].is_zero() {
                    inv[k][j] /= &pivot;
                }
            }
            let (prow, pinv) = (a[k].clone(), inv[k].clone());
            a.par_iter_mut().zip(inv.par_iter_mut()).enumerate().for_each(|(i, (row, irow))| {
                if i == k || row[k].is_zero() {
                    return;
                }
                let f = row[k].clone();
                for j in 0..n {
                    if !prow[j].is_zero() {
                        row[j] -= &f * &prow[j];
                    }
                    if !pinv[j].is_zero() {
                        irow[j] -= &f * &pinv[j];
                    }
                }
            });
        }
        Ok(ExactMatrix { order: n, entries: inv.into_iter().flatten().collect() })
    }

    /// `det(xI - A)` by the division-free Berkowitz algorithm on the
    /// integer matrix `dA`, where `d` clears all denominators.
    pub fn charpoly(&self) -> Result<Polynomial> {
        let n = self.order;
        if n > CHARPOLY_MAX_ORDER {
            return Err(Error::CapExceeded { what: "charpoly order", n, cap: CHARPOLY_MAX_ORDER });
        }
        let d = self.entries.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        let a: Vec<Vec<BigInt>> =
            self.rows().map(|row| row.iter().map(|e| (e * &d).to_integer()).collect()).collect();
        let high_first = berkowitz(&a);
        // coefficient of x^(n-k) in det(xI - A) is c_k / d^k
        let mut low_first = vec![BigRational::zero(); n + 1];
        let mut dk = BigInt::one();
        for (k, c) in high_first.into_iter().enumerate() {
            low_first[n - k] = BigRational::new(c, dk.clone());
            dk *= &d;
        }
        Ok(Polynomial::new(low_first))
    }

    /// All entries strictly above the diagonal vanish.
    pub fn is_lower_triangular(&self) -> bool {
        (0..self.order).all(|i| ((i + 1)..self.order).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    /// CSV with a header of column ordinals and a leading row-ordinal column.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("ord");
        for j in 0..self.order {
            out.push_str(&format!(",{j}"));
        }
        out.push('\n');
        for (i, row) in self.rows().enumerate() {
            out.push_str(&i.to_string());
            for e in row {
                out.push(',');
                out.push_str(&e.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// JSON array of rows, each an array of exact strings `"p"` or `"p/q"`.
    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> =
            self.rows().map(|row| row.iter().map(|e| e.to_string()).collect()).collect();
        serde_json::to_string(&rows).expect("strings always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let parsed = rows
            .into_iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    /// Right-aligned columns separated by one space, one line per row.
    pub fn to_pretty(&self) -> String {
        let cells: Vec<Vec<String>> =
            self.rows().map(|row| row.iter().map(|e| e.to_string()).collect()).collect();
        let widths: Vec<usize> =
            (0..self.order).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> =
                row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix(order {})", self.order)?;
        f.write_str(&self.to_pretty())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let err = || Error::Parse(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.parse::<BigInt>().map_err(|_| err())?)),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match ((k + 1)..n).find(|&p| !a[p][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        let prev_ref = &prev;
        tail.par_iter_mut().for_each(|row| {
            let lead = std::mem::take(&mut row[k]);
            for j in (k + 1)..n {
                let mut num = &row[j] * pivot;
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    num -= &lead * &pivot_row[j];
                }
                let (q, r) = num.div_rem(prev_ref);
                assert!(r.is_zero(), "inexact Bareiss division");
                row[j] = q;
            }
        });
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Characteristic polynomial coefficients, highest degree first.
fn berkowitz(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut coeffs = vec![BigInt::one(), -a[0][0].clone()];
    for r in 1..n {
        // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-a[r][r].clone());
        let mut v: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for step in 0..r {
            let rs: BigInt = (0..r).map(|i| &a[r][i] * &v[i]).sum();
            t.push(-rs);
            if step + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).filter(|&j| !a[i][j].is_zero()).map(|j| &a[i][j] * &v[j]).sum())
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &t[i - j] * &coeffs[j]).sum())
            .collect();
        coeffs = next;
    }
    coeffs
}

/// Exact rational helper: `|q|` is `1/m` for a positive integer `m`.
pub fn is_unit_fraction(q: &BigRational) -> bool {
    q.abs().numer().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_int_rows(rows).unwrap()
    }

    fn cofactor_det(a: &[Vec<i64>]) -> i64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    a[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &v)| v).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * a[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn products() {
        let a1 = m(&[&[1, 1], &[1, -1]]);
        let m1 = m(&[&[1, -1], &[0, 1]]);
        assert_eq!(a1.mat_mul(&m1).unwrap(), m(&[&[1, 0], &[1, -2]]));
        assert_eq!(a1.mat_mul(&ExactMatrix::identity(2)).unwrap(), a1);
        assert!(a1.mat_mul(&ExactMatrix::identity(3)).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[&[1, 1], &[1, -1]]).det(), int(-2));
        assert_eq!(ExactMatrix::identity(5).det(), int(1));
        let b2 = [vec![1, 1, 1, 1], vec![1, -1, 1, -1], vec![0, 0, -1, -1], vec![0, 0, 0, 1]];
        assert_eq!(cofactor_det(&b2), 2);
        let rows: Vec<&[i64]> = b2.iter().map(|r| r.as_slice()).collect();
        assert_eq!(m(&rows).det(), int(2));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), int(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), int(0));
        let half = ExactMatrix::identity(3).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(half.det(), BigRational::new(1.into(), 8.into()));
    }

    #[test]
    fn inverses() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.inverse().unwrap(), m(&[&[1, -1], &[-1, 2]]));
        assert_eq!(ExactMatrix::identity(4).inverse().unwrap(), ExactMatrix::identity(4));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn charpolys() {
        let a2 = m(&[&[1, 1, 1, 1], &[1, -1, 1, -1], &[1, 1, -1, -1], &[1, -1, 0, 1]]);
        assert_eq!(a2.charpoly().unwrap(), Polynomial::from_ints(&[12, 0, -7, 0, 1]));
        assert_eq!(ExactMatrix::identity(2).charpoly().unwrap(), Polynomial::from_ints(&[1, -2, 1]));
        let half = m(&[&[1, 0], &[0, 3]]).scale(&BigRational::new(1.into(), 2.into()));
        let expected = &Polynomial::x_minus(BigRational::new(1.into(), 2.into()))
            * &Polynomial::x_minus(BigRational::new(3.into(), 2.into()));
        assert_eq!(half.charpoly().unwrap(), expected);
        assert!(ExactMatrix::identity(65).charpoly().is_err());
    }

    #[test]
    fn triangularity() {
        assert!(m(&[&[1, 0], &[5, 1]]).is_lower_triangular());
        assert!(!m(&[&[1, 1], &[1, -1]]).is_lower_triangular());
        assert!(m(&[&[1, 1], &[0, 1]]).is_upper_triangular());
    }

    #[test]
    fn serialization() {
        let a = ExactMatrix::from_rows(vec![
            vec![BigRational::new(1.into(), 24.into()), int(-1)],
            vec![int(0), BigRational::new((-5).into(), 24.into())],
        ])
        .unwrap();
        assert_eq!(a.to_csv(), "ord,0,1\n0,1/24,-1\n1,0,-5/24\n");
        assert_eq!(a.to_json(), r#"[["1/24","-1"],["0","-5/24"]]"#);
        assert_eq!(a.to_pretty(), "1/24    -1\n   0 -5/24\n");
        assert_eq!(ExactMatrix::from_json(&a.to_json()).unwrap(), a);
        assert!(parse_rational("1/0").is_err());
        assert!(ExactMatrix::from_json(r#"[["1","2"]]"#).is_err());
    }

    fn small_matrix(order: usize) -> impl Strategy<Value = ExactMatrix> {
        proptest::collection::vec(-3i64..=3, order * order).prop_map(move |v| {
            ExactMatrix::from_fn(order, |i, j| int(v[i * order + j]))
        })
    }

    fn pair() -> impl Strategy<Value = (ExactMatrix, ExactMatrix)> {
        (1usize..=16).prop_flat_map(|n| (small_matrix(n), small_matrix(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn det_is_multiplicative((a, b) in pair()) {
            prop_assert_eq!(a.mat_mul(&b).unwrap().det(), a.det() * b.det());
        }

        #[test]
        fn inverse_is_two_sided(a in (1usize..=8).prop_flat_map(small_matrix)) {
            match a.inverse() {
                Ok(inv) => {
                    prop_assert_eq!(inv.mat_mul(&a).unwrap(), ExactMatrix::identity(a.order()));
                    prop_assert_eq!(a.mat_mul(&inv).unwrap(), ExactMatrix::identity(a.order()));
                }
                Err(_) => prop_assert!(a.det().is_zero()),
            }
        }

        #[test]
        fn charpoly_at_zero_is_signed_det(a in (1usize..=12).prop_flat_map(small_matrix)) {
            let p = a.charpoly().unwrap();
            let sign = if a.order() % 2 == 0 { int(1) } else { int(-1) };
            prop_assert_eq!(p.eval(&BigRational::zero()), sign * a.det());
            prop_assert!(p.is_integral());
        }

        #[test]
        fn json_round_trip(a in (1usize..=5).prop_flat_map(small_matrix), d in 1i64..7) {
            let a = a.scale(&BigRational::new(1.into(), d.into()));
            prop_assert_eq!(ExactMatrix::from_json(&a.to_json()).unwrap(), a);
        }
    }
}
