//! Print every family at a small order, built by recursion and checked
//! against the entry formulas.

use descent_matrices::families::{build, build_explicit, FamilyTag};
use descent_matrices::render::{render_matrix, OutputFormat};

fn main() -> descent_matrices::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    for tag in FamilyTag::ALL {
        let m = build(tag, n)?;
        assert_eq!(m, build_explicit(tag, n)?, "{tag}_{n}: recursion and entry formula disagree");
        println!("{tag}_{n}:");
        print!("{}", render_matrix(&m, OutputFormat::Pretty));
        println!();
    }
    Ok(())
}
