use std::fmt;

use serde::Serialize;

use crate::Error;

/// Nonnegative integer matrix, row-major. Row and column sums are derived.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarginMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl MarginMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<usize>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        MarginMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        MarginMatrix::new(rows.len(), cols, rows.concat())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        MarginMatrix::new(rows, cols, vec![0; rows * cols])
    }

    pub fn diagonal(c: &[usize]) -> Self {
        let n = c.len();
        let mut m = MarginMatrix::zeros(n, n);
        for (i, &x) in c.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    /// Square matrix whose column `j` is `cols[j]`.
    pub fn from_columns(cols: &[Vec<usize>]) -> Self {
        let n = cols.first().map_or(0, |c| c.len());
        let mut m = MarginMatrix::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<usize> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).sum()).collect()
    }

    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = MarginMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        MarginMatrix::new(self.rows, self.cols, self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when every entry stays nonnegative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let e = self.entries.iter().zip(&other.entries).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>()?;
        Some(MarginMatrix::new(self.rows, self.cols, e))
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl Serialize for MarginMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl fmt::Display for MarginMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", r.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Matrices with row sums `λ` and column sums `μ`, row-major
/// lexicographically descending.
pub fn margin_matrices(row_sums: &[usize], col_sums: &[usize]) -> Result<Vec<MarginMatrix>, Error> {
    let (a, b): (usize, usize) = (row_sums.iter().sum(), col_sums.iter().sum());
    if a != b {
        return Err(Error::WeightMismatch(format!("row sums {row_sums:?} total {a}, column sums {col_sums:?} total {b}")));
    }
    let (r, c) = (row_sums.len(), col_sums.len());
    let mut out = Vec::new();
    let mut entries = vec![0; r * c];
    let mut caps = col_sums.to_vec();
    fill(row_sums, &mut caps, 0, 0, row_sums.first().copied().unwrap_or(0), &mut entries, &mut out, c);
    if r == 0 {
        return Ok(if c == 0 || col_sums.iter().all(|&x| x == 0) { vec![MarginMatrix::new(0, c, vec![])] } else { vec![] });
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    row_sums: &[usize],
    caps: &mut [usize],
    i: usize,
    j: usize,
    left: usize,
    entries: &mut [usize],
    out: &mut Vec<MarginMatrix>,
    c: usize,
) {
    let r = row_sums.len();
    if i == r {
        return;
    }
    if j + 1 == c {
        // last column is forced
        if left > caps[j] {
            return;
        }
        entries[i * c + j] = left;
        caps[j] -= left;
        if i + 1 == r {
            if caps.iter().all(|&x| x == 0) {
                out.push(MarginMatrix::new(r, c, entries.to_vec()));
            }
        } else {
            fill(row_sums, caps, i + 1, 0, row_sums[i + 1], entries, out, c);
        }
        caps[j] += left;
        entries[i * c + j] = 0;
        return;
    }
    for v in (0..=left.min(caps[j])).rev() {
        entries[i * c + j] = v;
        caps[j] -= v;
        fill(row_sums, caps, i, j + 1, left - v, entries, out, c);
        caps[j] += v;
    }
    entries[i * c + j] = 0;
}

/// All `r × c` nonnegative matrices with entries summing to `d`, grouped by
/// row sums then column sums in the canonical composition order.
pub fn matrices_of_total(r: usize, c: usize, d: usize) -> Vec<MarginMatrix> {
    let rows = super::partition::compositions(r, d);
    let cols = super::partition::compositions(c, d);
    let mut out = Vec::new();
    for a in &rows {
        for b in &cols {
            out.extend(margin_matrices(a, b).unwrap());
        }
    }
    out
}
