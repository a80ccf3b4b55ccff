//! Row echelon forms with optional transform tracking.
//!
//! Over a field the result is the reduced row echelon form. Over the
//! integers it is the Hermite normal form: positive pivots, and entries
//! above each pivot reduced into `[0, pivot)`.

use super::matrix::Matrix;
use super::ring::Ring;

#[derive(Clone, Debug)]
pub struct Echelon<T> {
    /// Echelon form; rows past `pivots.len()` are zero.
    pub form: Matrix<T>,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
    /// Invertible `t` with `t * input = form`, when requested.
    pub transform: Option<Matrix<T>>,
}

impl<T: Clone + PartialEq + std::fmt::Debug> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn echelon<R: Ring>(ring: &R, m: &Matrix<R::El>, track: bool) -> Echelon<R::El> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut t = track.then(|| Matrix::identity(ring, rows));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                let v = a.get(i, c);
                if ring.is_zero(v) {
                    continue;
                }
                match best {
                    Some(b) if !ring.euclid_lt(v, a.get(b, c)) => {}
                    _ => best = Some(i),
                }
            }
            let Some(p) = best else { break };
            a.swap_rows(p, r);
            if let Some(t) = t.as_mut() {
                t.swap_rows(p, r);
            }
            let mut clean = true;
            let piv = a.get(r, c).clone();
            for i in r + 1..rows {
                if ring.is_zero(a.get(i, c)) {
                    continue;
                }
                let (q, rem) = ring.div_rem(a.get(i, c), &piv);
                let nq = ring.neg(&q);
                a.add_row_multiple(ring, i, r, &nq);
                if let Some(t) = t.as_mut() {
                    t.add_row_multiple(ring, i, r, &nq);
                }
                if !ring.is_zero(&rem) {
                    clean = false;
                }
            }
            if clean {
                let u = ring.canonical_unit(a.get(r, c));
                if !ring.is_one(&u) {
                    a.scale_row(ring, r, &u);
                    if let Some(t) = t.as_mut() {
                        t.scale_row(ring, r, &u);
                    }
                }
                let piv = a.get(r, c).clone();
                for i in 0..r {
                    if ring.is_zero(a.get(i, c)) {
                        continue;
                    }
                    let (q, _) = ring.div_rem(a.get(i, c), &piv);
                    if ring.is_zero(&q) {
                        continue;
                    }
                    let nq = ring.neg(&q);
                    a.add_row_multiple(ring, i, r, &nq);
                    if let Some(t) = t.as_mut() {
                        t.add_row_multiple(ring, i, r, &nq);
                    }
                }
                pivots.push(c);
                r += 1;
                break;
            }
        }
    }
    Echelon { form: a, pivots, transform: t }
}

pub fn rank<R: Ring>(ring: &R, m: &Matrix<R::El>) -> usize {
    echelon(ring, m, false).rank()
}

/// Coordinates `e` with `e * form[..rank] = v`, by sweeping the pivots.
pub fn pivot_solve<R: Ring>(ring: &R, form: &Matrix<R::El>, pivots: &[usize], v: &[R::El]) -> Option<Vec<R::El>> {
    let mut res = v.to_vec();
    let mut coeffs = Vec::with_capacity(pivots.len());
    for (k, &p) in pivots.iter().enumerate() {
        let c = ring.div_exact(&res[p], form.get(k, p))?;
        if !ring.is_zero(&c) {
            for (j, x) in res.iter_mut().enumerate() {
                let b = form.get(k, j);
                if !ring.is_zero(b) {
                    *x = ring.sub(x, &ring.mul(&c, b));
                }
            }
        }
        coeffs.push(c);
    }
    res.iter().all(|x| ring.is_zero(x)).then_some(coeffs)
}

/// Precomputed solver for `x * m = v` where `m` is fixed.
#[derive(Clone, Debug)]
pub struct LeftSolver<T> {
    ech: Echelon<T>,
}

impl<T: Clone + PartialEq + std::fmt::Debug> LeftSolver<T> {
    pub fn new<R: Ring<El = T>>(ring: &R, m: &Matrix<T>) -> Self {
        LeftSolver { ech: echelon(ring, m, true) }
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    /// Some solution `x` of `x * m = v`, if one exists over the ring.
    pub fn solve<R: Ring<El = T>>(&self, ring: &R, v: &[T]) -> Option<Vec<T>> {
        let e = pivot_solve(ring, &self.ech.form, &self.ech.pivots, v)?;
        let t = self.ech.transform.as_ref().unwrap();
        let mut x = vec![ring.zero(); t.cols()];
        for (k, c) in e.iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            for (j, xj) in x.iter_mut().enumerate() {
                ring.add_mul_assign(xj, c, t.get(k, j));
            }
        }
        Some(x)
    }
}

/// Solver for `m * x = b` (column convention).
#[derive(Clone, Debug)]
pub struct RightSolver<T> {
    inner: LeftSolver<T>,
}

impl<T: Clone + PartialEq + std::fmt::Debug> RightSolver<T> {
    pub fn new<R: Ring<El = T>>(ring: &R, m: &Matrix<T>) -> Self {
        RightSolver { inner: LeftSolver::new(ring, &m.transpose()) }
    }

    pub fn solve<R: Ring<El = T>>(&self, ring: &R, b: &[T]) -> Option<Vec<T>> {
        self.inner.solve(ring, b)
    }
}
