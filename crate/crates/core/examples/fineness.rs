//! Which sets of permutations are fine? Multiplicities of the irreducibles in
//! the character each set carries.

use descent_matrices::fine::fineness_of;
use descent_matrices::symgroup::FineFamily;

fn main() -> descent_matrices::Result<()> {
    let n = 4;
    for family in ["involutions", "arc", "knuth:2,2", "class:3,1", "length:2", "explicit:2,1,3,4", "explicit:1,2,3,4;4,3,2,1"] {
        let family: FineFamily = family.parse()?;
        let r = fineness_of(&family, n)?;
        let m: Vec<String> = r.multiplicities.iter().map(|(p, m)| format!("{p}:{m}")).collect();
        println!("{:<28} fine={:<5} consistent={:<5} {}", family.to_string(), r.fine, r.consistent, m.join(" "));
    }
    Ok(())
}
