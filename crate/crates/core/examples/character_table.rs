//! Character tables of S_n three ways: Murnaghan–Nakayama, Knuth classes,
//! and the length classes (whose characters are the graded pieces of the
//! coinvariant algebra).

use descent_matrices::combinatorics::Partition;
use descent_matrices::fine::fine_character;
use descent_matrices::symgroup::{character_table, FineFamily};

fn main() -> descent_matrices::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let shapes = Partition::all(n);
    let table = character_table(n);
    println!("{:>12} {}", "", shapes.iter().map(|m| format!("{:>10}", m.to_string())).collect::<String>());
    for (lambda, row) in shapes.iter().zip(&table) {
        let from_knuth: Vec<_> = shapes
            .iter()
            .map(|mu| fine_character(&FineFamily::KnuthClass(lambda.clone()), &mu.as_composition()))
            .collect::<Result<_, _>>()?;
        let mark = if &from_knuth == row { "" } else { "  <- Knuth class disagrees" };
        println!("{:>12} {}{mark}", lambda.to_string(), row.iter().map(|v| format!("{v:>10}")).collect::<String>());
    }
    println!("\nlength classes:");
    for k in 0..=n * (n - 1) / 2 {
        let row: Vec<_> = shapes
            .iter()
            .map(|mu| fine_character(&FineFamily::Length(k), &mu.as_composition()))
            .collect::<Result<_, _>>()?;
        println!("{:>12} {}", format!("k = {k}"), row.iter().map(|v| format!("{v:>10}")).collect::<String>());
    }
    Ok(())
}
