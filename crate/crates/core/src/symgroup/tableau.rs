use serde::{Serialize, Serializer};

use crate::combinatorics::{Partition, SubsetMask};
use crate::error::{Error, Result};

use super::perm::Permutation;

/// A standard Young tableau in English notation, stored as its rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidTableau(format!("{rows:?}: {why}")));
        if rows.iter().any(Vec::is_empty) {
            return bad("empty row");
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths must weakly decrease");
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return bad("entries must be exactly 1..n");
            }
            seen[v] = true;
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return bad("rows must increase");
        }
        if rows.windows(2).any(|w| w[1].iter().zip(&w[0]).any(|(below, above)| below <= above)) {
            return bad("columns must increase");
        }
        Ok(StandardTableau { rows })
    }

    /// Fill the rows of `shape` left to right, top to bottom.
    pub fn row_superstandard(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                next += len;
                (next - len + 1..=next).collect()
            })
            .collect();
        StandardTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    /// Row index of every entry: `row_of()[v - 1]`.
    fn row_of(&self) -> Vec<usize> {
        let mut row = vec![0; self.n()];
        for (r, entries) in self.rows.iter().enumerate() {
            for &v in entries {
                row[v - 1] = r;
            }
        }
        row
    }

    /// `{i : i + 1 sits in a strictly lower row than i}`.
    pub fn descents(&self) -> SubsetMask {
        let n = self.n();
        let row = self.row_of();
        let bits = (1..n).filter(|&i| row[i] > row[i - 1]).fold(0u64, |acc, i| acc | 1 << (i - 1));
        SubsetMask::new(bits, n.saturating_sub(1)).expect("n - 1 ≤ MAX_AMBIENT")
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// Every standard tableau of the given shape, built by placing `n, n-1, ..., 1`
    /// into removable corners.
    pub fn all(shape: &Partition) -> Vec<StandardTableau> {
        fn rec(lens: &mut Vec<usize>, fill: &mut Vec<Vec<usize>>, v: usize, out: &mut Vec<StandardTableau>) {
            if v == 0 {
                out.push(StandardTableau { rows: fill.clone() });
                return;
            }
            for r in 0..lens.len() {
                let corner = lens[r] > 0 && lens.get(r + 1).is_none_or(|&below| below < lens[r]);
                if corner {
                    lens[r] -= 1;
                    fill[r][lens[r]] = v;
                    rec(lens, fill, v - 1, out);
                    lens[r] += 1;
                }
            }
        }
        let mut lens = shape.parts().to_vec();
        let mut fill: Vec<Vec<usize>> = lens.iter().map(|&l| vec![0; l]).collect();
        let mut out = Vec::new();
        rec(&mut lens, &mut fill, shape.n(), &mut out);
        out.sort();
        out
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

/// Row-insertion Robinson–Schensted: `(P, Q)` = (insertion, recording) tableaux.
pub fn rsk(pi: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &value) in pi.one_line().iter().enumerate() {
        let mut x = value;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(c) => {
                    x = std::mem::replace(&mut p[r][c], x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    (StandardTableau { rows: p }, StandardTableau { rows: q })
}

/// The permutation with `rsk(π) = (P, Q)`.
pub fn rsk_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau("P and Q must have the same shape".into()));
    }
    let n = p.n();
    let mut rows = p.rows.clone();
    let q_rows = q.row_of();
    let mut one_line = vec![0; n];
    for step in (1..=n).rev() {
        let mut r = q_rows[step - 1];
        let mut x = rows[r].pop().expect("recording tableau tracks the shape");
        if rows[r].is_empty() {
            rows.pop();
        }
        while r > 0 {
            r -= 1;
            let c = rows[r].iter().rposition(|&y| y < x).expect("bumped entry has a predecessor");
            x = std::mem::replace(&mut rows[r][c], x);
        }
        one_line[step - 1] = x;
    }
    Permutation::new(one_line)
}
