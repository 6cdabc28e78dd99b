use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::combinatorics::{Partition, SubsetMask};
use crate::error::{Error, Result};

use super::perm::Permutation;
use super::tableau::{rsk_inverse, StandardTableau};

/// Largest `n` for which families are enumerated. Every family except `Syt`
/// and `KnuthClass` scans all of `S_n`, which is 3.6M permutations at this cap.
pub const ENUMERATION_CAP: usize = 10;

/// The families of permutations (and tableaux) whose descent sets carry a character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FineFamily {
    /// `{π : P(π) = P₀}` for the row-superstandard tableau `P₀` of the shape.
    KnuthClass(Partition),
    Syt(Partition),
    /// Permutations of Coxeter length `k`.
    Length(usize),
    Involutions,
    ConjClass(Partition),
    Arc,
    Explicit(Vec<Permutation>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum FineElement {
    Perm(Permutation),
    Tableau(StandardTableau),
}

impl FineElement {
    pub fn descents(&self) -> SubsetMask {
        match self {
            FineElement::Perm(p) => p.descents(),
            FineElement::Tableau(t) => t.descents(),
        }
    }
}

impl fmt::Display for FineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FineElement::Perm(p) => write!(f, "{p}"),
            FineElement::Tableau(t) => {
                let rows: Vec<String> =
                    t.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
                write!(f, "{}", rows.join(" / "))
            }
        }
    }
}

pub type Members = Box<dyn Iterator<Item = (FineElement, SubsetMask)> + Send>;

impl FineFamily {
    /// Check the parameters against `n` without enumerating.
    pub fn validate(&self, n: usize) -> Result<()> {
        if n > ENUMERATION_CAP {
            return Err(Error::CapExceeded { what: "fine-set enumeration", n, cap: ENUMERATION_CAP });
        }
        if n == 0 {
            return Err(Error::Unsupported("fine sets need n ≥ 1".into()));
        }
        match self {
            FineFamily::KnuthClass(shape) | FineFamily::Syt(shape) | FineFamily::ConjClass(shape) => {
                if shape.n() != n {
                    return Err(Error::InvalidPartition(format!("{shape} is not a partition of {n}")));
                }
            }
            FineFamily::Length(k) => {
                let max = n * (n - 1) / 2;
                if *k > max {
                    return Err(Error::LengthOutOfRange { k: *k, max });
                }
            }
            FineFamily::Explicit(list) => {
                if let Some(p) = list.iter().find(|p| p.n() != n) {
                    return Err(Error::InvalidPermutation(format!("{p} is not in S_{n}")));
                }
            }
            FineFamily::Involutions | FineFamily::Arc => {}
        }
        Ok(())
    }

    /// Stream every member once, together with its descent set.
    pub fn enumerate(&self, n: usize) -> Result<Members> {
        self.validate(n)?;
        let with_des = |e: FineElement| {
            let d = e.descents();
            (e, d)
        };
        let scan = |keep: Box<dyn Fn(&Permutation) -> bool + Send>| -> Members {
            Box::new(Permutation::all(n).filter(move |p| keep(p)).map(FineElement::Perm).map(with_des))
        };
        Ok(match self.clone() {
            FineFamily::KnuthClass(shape) => {
                let p0 = StandardTableau::row_superstandard(&shape);
                Box::new(StandardTableau::all(&shape).into_iter().map(move |q| {
                    let pi = rsk_inverse(&p0, &q).expect("same shape");
                    with_des(FineElement::Perm(pi))
                }))
            }
            FineFamily::Syt(shape) => {
                Box::new(StandardTableau::all(&shape).into_iter().map(FineElement::Tableau).map(with_des))
            }
            FineFamily::Length(k) => scan(Box::new(move |p| p.length() == k)),
            FineFamily::Involutions => scan(Box::new(Permutation::is_involution)),
            FineFamily::ConjClass(nu) => scan(Box::new(move |p| p.cycle_type() == nu)),
            FineFamily::Arc => scan(Box::new(Permutation::is_arc)),
            FineFamily::Explicit(list) => Box::new(list.into_iter().map(FineElement::Perm).map(with_des)),
        })
    }
}

/// `knuth:3,2`, `syt:2,2`, `length:3`, `involutions`, `class:2,1`, `arc`,
/// `explicit:213;132` (an empty `explicit:` is the empty set).
impl fmt::Display for FineFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = |p: &Partition| p.parts().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        match self {
            FineFamily::KnuthClass(p) => write!(f, "knuth:{}", parts(p)),
            FineFamily::Syt(p) => write!(f, "syt:{}", parts(p)),
            FineFamily::Length(k) => write!(f, "length:{k}"),
            FineFamily::Involutions => f.write_str("involutions"),
            FineFamily::ConjClass(p) => write!(f, "class:{}", parts(p)),
            FineFamily::Arc => f.write_str("arc"),
            FineFamily::Explicit(list) => {
                let perms: Vec<String> = list.iter().map(|p| p.one_line().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")).collect();
                write!(f, "explicit:{}", perms.join(";"))
            }
        }
    }
}

impl FromStr for FineFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let need = |what: &str| arg.ok_or_else(|| Error::Parse(format!("{name} needs a {what}: {name}:<{what}>")));
        match name.to_ascii_lowercase().as_str() {
            "knuth" => Ok(FineFamily::KnuthClass(need("shape")?.parse()?)),
            "syt" => Ok(FineFamily::Syt(need("shape")?.parse()?)),
            "class" | "conj" => Ok(FineFamily::ConjClass(need("cycle type")?.parse()?)),
            "length" => need("length")?
                .trim()
                .parse()
                .map(FineFamily::Length)
                .map_err(|e| Error::Parse(format!("length: {e}"))),
            "involutions" => Ok(FineFamily::Involutions),
            "arc" => Ok(FineFamily::Arc),
            "explicit" => {
                let list = arg.unwrap_or("");
                list.split(';').filter(|t| !t.trim().is_empty()).map(str::parse).collect::<Result<_>>().map(FineFamily::Explicit)
            }
            _ => Err(Error::Parse(format!("unknown family {name:?}"))),
        }
    }
}
