//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.
//!
//! This is deliberately self-contained: it is the oracle the descent-based
//! character formulas are checked against.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

type Key = (Vec<usize>, Vec<usize>);

static MEMO: LazyLock<RwLock<HashMap<Key, BigInt>>> = LazyLock::new(Default::default);

/// `χ^λ_μ`, the value of the irreducible character indexed by `λ` on the class
/// of cycle type `μ`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.n() != mu.n() {
        return Err(Error::DimensionMismatch { left: lambda.n(), right: mu.n() });
    }
    let len = lambda.len();
    // beta-numbers λ_i + (ℓ - i), strictly decreasing
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    Ok(chi(beta, mu.parts()))
}

fn chi(beta: Vec<usize>, mu: &[usize]) -> BigInt {
    let Some((&k, rest)) = mu.split_first() else {
        return BigInt::one();
    };
    let key = (beta.clone(), mu.to_vec());
    if let Some(v) = MEMO.read().expect("memo lock").get(&key) {
        return v.clone();
    }
    // Removing a rim hook of size k slides one bead from b to b - k; the sign is
    // the parity of the beads jumped over.
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| b - k < c && c < b).count();
        let mut next = beta.clone();
        next[idx] = b - k;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let term = chi(next, rest);
        if jumped % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    MEMO.write().expect("memo lock").insert(key, total.clone());
    total
}

/// The full character table: rows `λ`, columns `μ`, both in reverse-lex order.
pub fn character_table(n: usize) -> Vec<Vec<BigInt>> {
    let parts = Partition::all(n);
    parts
        .iter()
        .map(|l| parts.iter().map(|m| mn_character(l, m).expect("same n")).collect())
        .collect()
}
