//! Row and column sums of AM_n, BM_n, HM_n, the diagonal sequence of AM_n,
//! and the link between column sums and the diagonal of A_n².

use descent_matrices::combinatorics::SubsetMask;
use descent_matrices::families::{build, col_abs_sum_closed, diag_seq, row_sum_closed, FamilyTag};
use num_traits::Signed;

fn main() -> descent_matrices::Result<()> {
    let n = 4;
    let a = build(FamilyTag::A, n)?;
    let a2 = a.mat_mul(&a)?;
    let am = build(FamilyTag::AM, n)?;
    println!("{:>10} {:>12} {:>10} {:>10} {:>6}", "J", "row sum", "col |sum|", "(A²)_JJ", "a_m");
    for j in SubsetMask::all(n)? {
        let (signed, abs) = row_sum_closed(FamilyTag::AM, j)?;
        let col = col_abs_sum_closed(FamilyTag::AM, j)?;
        let direct: num_rational::BigRational = am.column(j.ord()).iter().map(|q| q.abs()).sum();
        assert_eq!(direct, num_rational::BigRational::from_integer(col.clone()));
        println!(
            "{:>10} {:>12} {:>10} {:>10} {:>6}",
            j.to_string(),
            format!("{signed}, {abs}"),
            col,
            a2.get(j.ord(), j.ord()),
            diag_seq(j.ord() as u64)
        );
    }
    let first: Vec<String> = (0..32).map(|m| diag_seq(m).to_string()).collect();
    println!("a_m, m < 32: {}", first.join(" "));
    Ok(())
}
