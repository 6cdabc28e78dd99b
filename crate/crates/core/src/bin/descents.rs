//! `descents`: build the matrix families, run the verifiers, print character
//! tables and recover descent distributions from characters.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use descent_matrices::combinatorics::{Partition, SubsetMask};
use descent_matrices::families::{build, build_explicit, FamilyTag};
use descent_matrices::fine::{count_exact, descent_vector, fine_character, fineness, lift};
use descent_matrices::render::{render_matrix, OutputFormat, Table};
use descent_matrices::symgroup::{mn_character, FineFamily, Permutation};
use descent_matrices::verify::{predicted_character, run, Suite};
use descent_matrices::{Error, Result};

#[derive(Parser)]
#[command(name = "descents", version, about = "Walsh-Hadamard-type matrices and descent sets of fine sets")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "pretty")]
    format: OutputFormat,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of A, B, H, Z, M, AM, BM, HM.
    Matrix {
        family: FamilyTag,
        n: usize,
        /// Build entry by entry from the closed formulas instead of the recursion.
        #[arg(long)]
        explicit: bool,
        /// Print the exact inverse.
        #[arg(long)]
        inverse: bool,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        suite: Suite,
        n_max: Option<usize>,
        #[arg(long = "n-max", conflicts_with = "n_max")]
        n_max_flag: Option<usize>,
    },
    /// Character table of S_n from the Murnaghan–Nakayama rule or from a fine set.
    Character {
        n: usize,
        #[arg(long, value_enum, default_value = "mn")]
        source: Source,
        /// List the entries where the source disagrees with this one (only `mn`).
        #[arg(long, value_enum)]
        diff: Option<Source>,
    },
    /// Descent-set distribution of a family, counted directly or recovered from its character.
    DescentDist {
        /// knuth, syt, length, involutions, class, arc or explicit (or e.g. `knuth:3,2`).
        family: String,
        n: Option<usize>,
        /// Shape or cycle type for knuth, syt and class, e.g. `2,2`.
        #[arg(long)]
        shape: Option<Partition>,
        /// Coxeter length for `length`.
        #[arg(long)]
        length: Option<usize>,
        /// Permutations for `explicit`, e.g. `213,132` or `2 1 3;1 3 2`.
        #[arg(long)]
        perms: Option<String>,
        /// `explicit` with no permutations.
        #[arg(long)]
        empty: bool,
        #[arg(long, value_enum, default_value = "direct")]
        mode: Mode,
    },
    /// Decide fineness and print the multiplicities as JSON.
    Fineness { family: String, n: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Mn,
    Knuth,
    Length,
    Involutions,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Direct,
    Inverted,
    Both,
}

/// Largest `n` for `character`.
const CHARACTER_CAP: usize = 8;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((text, ok)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// The output text, and whether every check passed.
fn execute(cli: &Cli) -> Result<(String, bool)> {
    let format = cli.format;
    match &cli.command {
        Command::Matrix { family, n, explicit, inverse } => {
            let mut m = if *explicit { build_explicit(*family, *n)? } else { build(*family, *n)? };
            if *inverse {
                m = m.inverse()?;
            }
            Ok((render_matrix(&m, format), true))
        }
        Command::Verify { suite, n_max, n_max_flag } => {
            let n_max = n_max.or(*n_max_flag).unwrap_or(suite.cap());
            let report = run(*suite, n_max)?;
            Ok((report.to_json() + "\n", report.pass))
        }
        Command::Character { n, source, diff } => character(*n, *source, *diff, format),
        Command::DescentDist { family, n, shape, length, perms, empty, mode } => {
            let (family, n) = resolve_family(family, *n, shape.clone(), *length, perms.as_deref(), *empty)?;
            descent_dist(&family, n, *mode, format)
        }
        Command::Fineness { family, n } => {
            let family: FineFamily = family.parse()?;
            let report = fineness(&descent_vector(&family, *n)?, &family.to_string())?;
            Ok((report.to_json() + "\n", true))
        }
    }
}

fn row_family(source: Source, row: usize, shapes: &[Partition]) -> FineFamily {
    match source {
        Source::Knuth | Source::Mn => FineFamily::KnuthClass(shapes[row].clone()),
        Source::Length => FineFamily::Length(row),
        Source::Involutions => FineFamily::Involutions,
    }
}

fn character(n: usize, source: Source, diff: Option<Source>, format: OutputFormat) -> Result<(String, bool)> {
    if n == 0 || n > CHARACTER_CAP {
        return Err(Error::CapExceeded { what: "character table", n, cap: CHARACTER_CAP });
    }
    let shapes = Partition::all(n);
    // columns run from (1^n) up to (n); rows keep the reverse-lex order
    let columns: Vec<Partition> = shapes.iter().rev().cloned().collect();
    let labels: Vec<String> = match source {
        Source::Mn | Source::Knuth => shapes.iter().map(|l| l.to_string()).collect(),
        Source::Length => (0..=n * (n - 1) / 2).map(|k| k.to_string()).collect(),
        Source::Involutions => vec!["G".into()],
    };
    let row_name = match source {
        Source::Mn | Source::Knuth => "lambda",
        Source::Length => "k",
        Source::Involutions => "model",
    };
    let value = |row: usize, mu: &Partition| -> Result<BigInt> {
        match source {
            Source::Mn => mn_character(&shapes[row], mu),
            _ => fine_character(&row_family(source, row, &shapes), &mu.as_composition()),
        }
    };

    match diff {
        None => {
            let mut table = Table::new(std::iter::once(row_name.to_string()).chain(columns.iter().map(|m| m.to_string())));
            for (row, label) in labels.iter().enumerate() {
                let values: Vec<String> = columns.iter().map(|mu| value(row, mu).map(|v| v.to_string())).collect::<Result<_>>()?;
                table.push(std::iter::once(label.clone()).chain(values));
            }
            Ok((table.render(format), true))
        }
        Some(Source::Mn) => {
            let mut table = Table::new([row_name, "mu", "value", "mn"]);
            for (row, label) in labels.iter().enumerate() {
                let family = row_family(source, row, &shapes);
                for mu in &columns {
                    let got = value(row, mu)?;
                    let expected = predicted_character(&family, mu)?
                        .ok_or_else(|| Error::Unsupported(format!("no predicted character for {family}")))?;
                    if got != expected {
                        table.push([label.clone(), mu.to_string(), got.to_string(), expected.to_string()]);
                    }
                }
            }
            let clean = table.rows.is_empty();
            Ok((table.render(format), clean))
        }
        Some(_) => Err(Error::Unsupported("--diff compares against mn only".into())),
    }
}

fn resolve_family(
    name: &str,
    n: Option<usize>,
    shape: Option<Partition>,
    length: Option<usize>,
    perms: Option<&str>,
    empty: bool,
) -> Result<(FineFamily, usize)> {
    let missing = |what: &str| Error::Parse(format!("{name} needs --{what}"));
    let family = if name.contains(':') {
        name.parse()?
    } else {
        match name.to_ascii_lowercase().as_str() {
            "knuth" => FineFamily::KnuthClass(shape.clone().ok_or_else(|| missing("shape"))?),
            "syt" => FineFamily::Syt(shape.clone().ok_or_else(|| missing("shape"))?),
            "class" | "conj" => FineFamily::ConjClass(shape.clone().ok_or_else(|| missing("shape"))?),
            "length" => FineFamily::Length(length.ok_or_else(|| missing("length"))?),
            "involutions" => FineFamily::Involutions,
            "arc" => FineFamily::Arc,
            "explicit" => match (perms, empty) {
                (_, true) => FineFamily::Explicit(Vec::new()),
                (Some(list), false) => FineFamily::Explicit(parse_perms(list)?),
                (None, false) => return Err(missing("perms or --empty")),
            },
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    };
    let inferred = match &family {
        FineFamily::KnuthClass(p) | FineFamily::Syt(p) | FineFamily::ConjClass(p) => Some(p.n()),
        FineFamily::Explicit(list) => Some(list.first().map_or(1, Permutation::n)),
        _ => None,
    };
    let n = n.or(inferred).ok_or_else(|| Error::Parse(format!("{name} needs n")))?;
    Ok((family, n))
}

fn parse_perms(list: &str) -> Result<Vec<Permutation>> {
    let sep = if list.contains(';') { ';' } else { ',' };
    list.split(sep).filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

fn descent_dist(family: &FineFamily, n: usize, mode: Mode, format: OutputFormat) -> Result<(String, bool)> {
    let v = descent_vector(family, n)?;
    let x = lift(&v)?;
    let header: Vec<&str> = match mode {
        Mode::Direct => vec!["ord", "set", "count"],
        Mode::Inverted => vec!["ord", "set", "count"],
        Mode::Both => vec!["ord", "set", "direct", "inverted", "diff"],
    };
    let mut table = Table::new(header);
    let mut clean = true;
    for set in SubsetMask::all(n - 1)? {
        let direct = BigRational::from_integer(v.get(set).clone());
        let row = vec![set.ord().to_string(), set.to_string()];
        match mode {
            Mode::Direct => table.push(row.into_iter().chain([direct.to_string()])),
            Mode::Inverted => table.push(row.into_iter().chain([count_exact(&x, set)?.to_string()])),
            Mode::Both => {
                let inverted = count_exact(&x, set)?;
                let diff = &inverted - &direct;
                clean &= diff == BigRational::from_integer(0.into());
                table.push(row.into_iter().chain([direct.to_string(), inverted.to_string(), diff.to_string()]));
            }
        }
    }
    Ok((table.render(format), clean))
}
