//! Smith normal form.

use super::matrix::Matrix;
use super::ring::Ring;

#[derive(Clone, Debug)]
pub struct Smith<T> {
    /// Diagonal form with successively dividing, canonical diagonal entries.
    pub s: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
    /// Inverse of `v`, maintained alongside it.
    pub v_inv: Matrix<T>,
}

impl<T: Clone + PartialEq + std::fmt::Debug> Smith<T> {
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s.get(i, i).clone()).collect()
    }
}

/// Computes `(s, u, v)` with `u * m * v = s`.
pub fn snf<R: Ring>(ring: &R, m: &Matrix<R::El>) -> Smith<R::El> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = Matrix::identity(ring, rows);
    let mut v = Matrix::identity(ring, cols);
    let mut vi = Matrix::identity(ring, cols);

    // column op col[dst] += c * col[src] on a and v; row op row[src] -= c * row[dst] on v_inv
    let col_op = |a: &mut Matrix<R::El>, v: &mut Matrix<R::El>, vi: &mut Matrix<R::El>, dst: usize, src: usize, c: &R::El| {
        a.add_col_multiple(ring, dst, src, c);
        v.add_col_multiple(ring, dst, src, c);
        vi.add_row_multiple(ring, src, dst, &ring.neg(c));
    };

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = a.get(i, j);
                if ring.is_zero(x) {
                    continue;
                }
                match best {
                    Some((bi, bj)) if !ring.euclid_lt(x, a.get(bi, bj)) => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        vi.swap_rows(t, pj);

        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if ring.is_zero(a.get(i, t)) {
                    continue;
                }
                let (q, rem) = ring.div_rem(a.get(i, t), a.get(t, t));
                let nq = ring.neg(&q);
                a.add_row_multiple(ring, i, t, &nq);
                u.add_row_multiple(ring, i, t, &nq);
                if !ring.is_zero(&rem) {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if ring.is_zero(a.get(t, j)) {
                    continue;
                }
                let (q, rem) = ring.div_rem(a.get(t, j), a.get(t, t));
                let nq = ring.neg(&q);
                col_op(&mut a, &mut v, &mut vi, j, t, &nq);
                if !ring.is_zero(&rem) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    vi.swap_rows(t, j);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            let mut bad = None;
            'search: for i in t + 1..rows {
                for j in t + 1..cols {
                    if ring.div_exact(a.get(i, j), a.get(t, t)).is_none() {
                        bad = Some(i);
                        break 'search;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let one = ring.one();
                    a.add_row_multiple(ring, t, i, &one);
                    u.add_row_multiple(ring, t, i, &one);
                }
                None => break,
            }
        }
        let c = ring.canonical_unit(a.get(t, t));
        if !ring.is_one(&c) {
            a.scale_row(ring, t, &c);
            u.scale_row(ring, t, &c);
        }
    }
    Smith { s: a, u, v, v_inv: vi }
}
