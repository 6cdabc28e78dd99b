//! Recover how many members of a fine set have each descent set, using only
//! its character values at the Coxeter elements c_J.

use descent_matrices::combinatorics::SubsetMask;
use descent_matrices::fine::{count_exact, descent_vector, lift};
use descent_matrices::symgroup::FineFamily;

fn main() -> descent_matrices::Result<()> {
    let family: FineFamily = std::env::args().nth(1).unwrap_or_else(|| "involutions".into()).parse()?;
    let n = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(5);
    let v = descent_vector(&family, n)?;
    let x = lift(&v)?;
    println!("{family}, n = {n}: {} members", v.total());
    println!("{:>12} {:>8} {:>8} {:>10}", "D", "chi(c_D)", "direct", "recovered");
    for d in SubsetMask::all(n - 1)? {
        println!("{:>12} {:>8} {:>8} {:>10}", d.to_string(), x.get(d), v.get(d), count_exact(&x, d)?);
    }
    Ok(())
}
