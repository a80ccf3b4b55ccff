use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use super::partition::Partition;
use crate::Error;

/// A filling of a Young diagram with positive integers, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Filling {
    #[serde(skip)]
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Filling {
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        let ok = rows.len() == shape.len() && rows.iter().zip(shape.parts()).all(|(r, &p)| r.len() == p);
        if !ok || rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::Invalid(format!("filling {rows:?} does not fit shape {shape}")));
        }
        Ok(Filling { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i][j]
    }

    /// Entries read along the columns, left to right, top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let conj = self.shape.conjugate();
        (0..conj.len()).map(|j| (0..conj.part(j)).map(|i| self.rows[i][j]).collect()).collect()
    }

    /// Weakly increasing along rows, strictly increasing down columns.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    /// Multiplicities of the entries `1..=n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for &e in self.rows.iter().flatten() {
            if e <= n {
                c[e - 1] += 1;
            }
        }
        c
    }

    /// The tableau whose `i`-th row is constant `i`.
    pub fn row_constant(shape: &Partition) -> Self {
        let rows = shape.parts().iter().enumerate().map(|(i, &p)| vec![i + 1; p]).collect();
        Filling { shape: shape.clone(), rows }
    }
}

/// Semistandard tableaux of shape `λ` and content `μ`.
///
/// Entries are placed one value at a time as horizontal strips; the output
/// order follows the strip choices, larger strips in upper rows first.
pub fn tableaux(shape: &Partition, content: &[usize]) -> Result<Vec<Filling>, Error> {
    let w: usize = content.iter().sum();
    if w != shape.weight() {
        return Err(Error::WeightMismatch(format!("shape {shape} has weight {}, content {content:?} has weight {w}", shape.weight())));
    }
    let rows = shape.len();
    let mut out = Vec::new();
    let mut filled = vec![0usize; rows];
    let mut cur: Vec<Vec<usize>> = vec![Vec::new(); rows];
    place(shape, content, 0, &mut filled, &mut cur, &mut out);
    Ok(out)
}

fn place(
    shape: &Partition,
    content: &[usize],
    e: usize,
    filled: &mut Vec<usize>,
    cur: &mut Vec<Vec<usize>>,
    out: &mut Vec<Filling>,
) {
    if e == content.len() {
        out.push(Filling { shape: shape.clone(), rows: cur.clone() });
        return;
    }
    let old = filled.clone();
    strip(shape, content, e, 0, content[e], &old, filled, cur, out);
}

#[allow(clippy::too_many_arguments)]
fn strip(
    shape: &Partition,
    content: &[usize],
    e: usize,
    row: usize,
    left: usize,
    old: &[usize],
    filled: &mut Vec<usize>,
    cur: &mut Vec<Vec<usize>>,
    out: &mut Vec<Filling>,
) {
    if left == 0 {
        place(shape, content, e + 1, filled, cur, out);
        return;
    }
    if row == old.len() {
        return;
    }
    let cap_shape = shape.part(row);
    let cap_strip = if row == 0 { usize::MAX } else { old[row - 1] };
    let max_len = cap_shape.min(cap_strip);
    let room = max_len.saturating_sub(old[row]);
    for a in (0..=room.min(left)).rev() {
        filled[row] = old[row] + a;
        cur[row].extend(std::iter::repeat(e + 1).take(a));
        strip(shape, content, e, row + 1, left - a, old, filled, cur, out);
        let l = cur[row].len();
        cur[row].truncate(l - a);
        filled[row] = old[row];
    }
}

/// All semistandard tableaux of shape `λ` with entries at most `n`,
/// grouped by content in the canonical order of `Λ(n, d)`.
pub fn semistandard_tableaux(shape: &Partition, n: usize) -> Vec<Filling> {
    super::partition::compositions(n, shape.weight())
        .iter()
        .flat_map(|c| tableaux(shape, c).unwrap())
        .collect()
}

/// Number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> Result<usize, Error> {
    Ok(tableaux(lambda, mu)?.len())
}

/// `Π (n + j - i) / hook(i, j)` over the boxes of `λ`.
pub fn hook_content_dim(lambda: &Partition, n: usize) -> BigUint {
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, j) in lambda.boxes() {
        if n + j < i {
            return BigUint::zero();
        }
        num *= BigUint::from(n + j - i);
        let hook = (lambda.part(i) - j - 1) + (conj.part(j) - i - 1) + 1;
        den *= BigUint::from(hook);
    }
    num / den
}
