//! Exact determinants of A_n, B_n, H_n by fraction-free elimination,
//! next to their closed forms.

use std::time::Instant;

use descent_matrices::families::{build, det_closed, FamilyTag};
use descent_matrices::linalg::BigRational;

fn main() -> descent_matrices::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for n in 0..=n_max {
        for tag in [FamilyTag::A, FamilyTag::B, FamilyTag::H] {
            let start = Instant::now();
            let det = build(tag, n)?.det();
            let closed = BigRational::from_integer(det_closed(tag, n)?);
            let digits = det.to_string().trim_start_matches('-').len();
            println!(
                "det {tag}_{n}: {} ({digits} digits, {:.1?}) {}",
                if digits > 40 { format!("{}...", &det.to_string()[..40]) } else { det.to_string() },
                start.elapsed(),
                if det == closed { "= closed form" } else { "!= closed form" },
            );
        }
    }
    Ok(())
}
