use descent_matrices::combinatorics::{Composition, SubsetMask};
use descent_matrices::families::{am_inverse_entry, diag_seq, entry, mx_inverse_entry, mx_matrix, FamilyTag};
use descent_matrices::fine::{count_exact, count_superset, lift, DescentVector};
use descent_matrices::linalg::{BigRational, ExactMatrix};
use descent_matrices::symgroup::{coxeter_element, rsk, rsk_inverse, Permutation};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

/// `(n, bits)` with `bits` a subset of `[n]`.
fn subset(max_n: usize) -> impl Strategy<Value = (usize, u64)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), 0..1u64 << n))
}

fn mask(n: usize, bits: u64) -> SubsetMask {
    SubsetMask::new(bits, n).unwrap()
}

proptest! {
    #[test]
    fn rsk_round_trip_and_descents(p in permutation(9)) {
        let (pt, qt) = rsk(&p);
        prop_assert_eq!(pt.shape(), qt.shape());
        prop_assert_eq!(qt.descents(), p.descents());
        prop_assert_eq!(pt.descents(), p.inverse().descents());
        prop_assert_eq!(rsk_inverse(&pt, &qt).unwrap(), p);
    }

    #[test]
    fn inverse_and_composition(p in permutation(9)) {
        let id = Permutation::identity(p.n());
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id);
        prop_assert_eq!(p.inverse().length(), p.length());
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn coxeter_element_cycle_type((n, bits) in (2..=12usize).prop_flat_map(|n| (Just(n), 0..1u64 << (n - 1)))) {
        let j = mask(n - 1, bits);
        let comp = Composition::from_subset(j, n).unwrap();
        prop_assert_eq!(coxeter_element(j, n).unwrap().cycle_type(), comp.underlying_partition());
    }

    #[test]
    fn subset_composition_bijection((n, bits) in (1..=20usize).prop_flat_map(|n| (Just(n), 0..1u64 << (n - 1)))) {
        let j = mask(n - 1, bits);
        let comp = Composition::from_subset(j, n).unwrap();
        prop_assert_eq!(comp.n(), n);
        prop_assert_eq!(comp.interior().unwrap(), j);
    }

    #[test]
    fn am_sign_and_support((n, i) in subset(10), j in any::<u64>()) {
        let (i, j) = (mask(n, i), mask(n, j & ((1 << n) - 1)));
        let e = entry(FamilyTag::AM, i, j).unwrap();
        // lower triangular in the anti-lexicographic order
        if j.ord() > i.ord() {
            prop_assert!(e.is_zero());
        }
        if i == j {
            prop_assert!(!e.is_zero());
        }
        // dominated entrywise by HM
        let hm = entry(FamilyTag::HM, i, j).unwrap();
        prop_assert!(e.abs() <= hm.abs());
    }

    #[test]
    fn am_inverse_rows_are_unit_sums((n, i) in subset(12)) {
        let i = mask(n, i);
        let total: BigRational = i.subsets().map(|j| am_inverse_entry(i, j).unwrap().abs()).sum();
        prop_assert!(total.is_one());
        let outside = mask(n, !i.bits() & ((1 << n) - 1));
        if !outside.is_empty() {
            prop_assert!(am_inverse_entry(i, outside.union(i)).unwrap().is_zero());
        }
    }

    #[test]
    fn mx_inverse_formula(n in 0..=4usize, num in 1..=7i64, den in 1..=5i64) {
        let x = BigRational::new(num.into(), den.into());
        let inv = ExactMatrix::from_fn(1 << n, |i, j| mx_inverse_entry(mask(n, i as u64), mask(n, j as u64), &x).unwrap());
        let product = mx_matrix(n, &x).unwrap().mat_mul(&inv).unwrap();
        prop_assert_eq!(product, ExactMatrix::identity(1 << n));
    }

    #[test]
    fn diagonal_sequence_binomial_parity(m in 0..1u64 << 20) {
        // C(a, b) is odd iff b and a − b add without carries
        let odd = |a: u64, b: u64| b & (a - b) == 0;
        let count = (0..=m).filter(|&k| odd(m + k, m - k) && odd(m, k)).count() as u64;
        prop_assert_eq!(diag_seq(m), count);
    }

    #[test]
    fn descent_counts_recovered_from_any_multiset(n in 1..=6usize, raw in prop::collection::vec(any::<u64>(), 0..40)) {
        let width = n - 1;
        let sets: Vec<SubsetMask> = raw.iter().map(|&b| mask(width, b & ((1 << width) - 1))).collect();
        let v = DescentVector::from_sets(n, sets.iter().copied()).unwrap();
        let x = lift(&v).unwrap();
        for s in SubsetMask::all(width).unwrap() {
            let exact = sets.iter().filter(|&&d| d == s).count() as i64;
            let superset = sets.iter().filter(|&&d| s.is_subset_of(d)).count() as i64;
            prop_assert_eq!(count_exact(&x, s).unwrap(), BigRational::from_integer(exact.into()));
            prop_assert_eq!(count_superset(&x, s).unwrap(), BigRational::from_integer(superset.into()));
        }
    }
}
