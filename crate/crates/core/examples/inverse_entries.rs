//! Closed-form entries of AM_n⁻¹ and M_n(x)⁻¹ against exact inverses.

use descent_matrices::combinatorics::SubsetMask;
use descent_matrices::families::{am_inverse_entry, build, mx_inverse_entry, mx_matrix, FamilyTag};
use descent_matrices::linalg::{parse_rational, ExactMatrix};
use descent_matrices::render::{render_matrix, OutputFormat};

fn main() -> descent_matrices::Result<()> {
    let n = 3;
    let inverse = build(FamilyTag::AM, n)?.inverse()?;
    print!("AM_{n}^-1:\n{}", render_matrix(&inverse, OutputFormat::Pretty));
    let closed = ExactMatrix::from_fn(1 << n, |i, j| {
        am_inverse_entry(SubsetMask::new(i as u64, n).unwrap(), SubsetMask::new(j as u64, n).unwrap()).unwrap()
    });
    println!("closed form agrees: {}", closed == inverse);

    let x = parse_rational("2/3")?;
    let inverse = mx_matrix(n, &x)?.inverse()?;
    let closed = ExactMatrix::from_fn(1 << n, |i, j| {
        mx_inverse_entry(SubsetMask::new(i as u64, n).unwrap(), SubsetMask::new(j as u64, n).unwrap(), &x).unwrap()
    });
    println!("M_{n}({x})^-1 closed form agrees: {}", closed == inverse);
    Ok(())
}
