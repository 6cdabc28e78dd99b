//! Characteristic polynomials of A_n and B_n factor as ∏ (x² − π_μ) over the
//! compositions μ of n.

use descent_matrices::families::{build, eigen_charpoly, eigen_multiset, FamilyTag};

fn main() -> descent_matrices::Result<()> {
    for n in 1..=4 {
        for tag in [FamilyTag::A, FamilyTag::B] {
            let pairs = eigen_multiset(tag, n)?;
            let listed: Vec<String> = pairs.iter().map(|p| format!("{}:{}", p.composition, p.value)).collect();
            let exact = build(tag, n)?.charpoly()?;
            println!("{tag}_{n}  ±√π for {}", listed.join(" "));
            println!("      charpoly {exact}  ({})", if exact == eigen_charpoly(tag, n)? { "matches" } else { "MISMATCH" });
        }
    }
    Ok(())
}
