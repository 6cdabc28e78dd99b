//! (Des, length) and (Des, maj of the inverse) are equidistributed over S_n,
//! and each length class carries Σ_λ m_{k,λ} χ^λ with m_{k,λ} the number of
//! tableaux of shape λ with major index k.

use descent_matrices::fine::equidistribution_fs_ls;

fn main() -> descent_matrices::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let report = equidistribution_fs_ls(n)?;
    println!("n = {n}: joint distributions equal: {}", report.joint_equal);
    for c in &report.lengths {
        println!("k = {:>2}: {:>4} permutations  descents agree: {}  character agrees: {}", c.k, c.count, c.descents_agree, c.character_agrees);
    }
    Ok(())
}
