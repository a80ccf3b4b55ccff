//! Submodules of free modules, kept in canonical echelon form.

use serde::Serialize;

use super::echelon::{echelon, pivot_solve};
use super::matrix::Matrix;
use super::ring::Ring;
use super::snf::snf;
use crate::Error;

/// Row span of a matrix inside `R^ambient`.
///
/// The stored basis is the canonical echelon form (Hermite over the
/// integers, reduced row echelon over a field), so two lattices are equal
/// exactly when their bases are.
#[derive(Clone, Debug)]
pub struct Lattice<R: Ring> {
    ring: R,
    ambient: usize,
    basis: Matrix<R::El>,
    pivots: Vec<usize>,
}

impl<R: Ring> PartialEq for Lattice<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl<R: Ring> Eq for Lattice<R> {}

impl<R: Ring> Lattice<R> {
    pub fn from_matrix(ring: &R, m: &Matrix<R::El>) -> Self {
        let e = echelon(ring, m, false);
        let r = e.rank();
        let basis = e.form.select_rows(0..r);
        Lattice { ring: ring.clone(), ambient: m.cols(), basis, pivots: e.pivots }
    }

    pub fn from_rows(ring: &R, ambient: usize, rows: Vec<Vec<R::El>>) -> Self {
        Self::from_matrix(ring, &Matrix::from_rows(ambient, rows))
    }

    pub fn zero(ring: &R, ambient: usize) -> Self {
        Lattice { ring: ring.clone(), ambient, basis: Matrix::from_rows(ambient, vec![]), pivots: vec![] }
    }

    pub fn full(ring: &R, ambient: usize) -> Self {
        Lattice { ring: ring.clone(), ambient, basis: Matrix::identity(ring, ambient), pivots: (0..ambient).collect() }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient && self.basis == Matrix::identity(&self.ring, self.ambient)
    }

    pub fn basis(&self) -> &Matrix<R::El> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the lattice.
    pub fn coords(&self, v: &[R::El]) -> Option<Vec<R::El>> {
        assert_eq!(v.len(), self.ambient);
        pivot_solve(&self.ring, &self.basis, &self.pivots, v)
    }

    pub fn contains(&self, v: &[R::El]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Self) -> bool {
        assert_eq!(self.ambient, other.ambient);
        (0..other.rank()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        Self::from_matrix(&self.ring, &self.basis.vstack(&other.basis))
    }

    pub fn add_vectors(&self, rows: &[Vec<R::El>]) -> Self {
        let fresh: Vec<Vec<R::El>> = rows.iter().filter(|v| !self.contains(v)).cloned().collect();
        if fresh.is_empty() {
            return self.clone();
        }
        self.sum(&Self::from_rows(&self.ring, self.ambient, fresh))
    }

    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring, self.ambient);
        }
        let stacked = self.basis.vstack(&other.basis);
        let k = kernel_basis(&self.ring, &stacked);
        let r = self.rank();
        let rows: Vec<Vec<R::El>> = (0..k.rank())
            .map(|i| self.basis.vec_mul(&self.ring, &k.basis.row(i)[..r]))
            .collect();
        Self::from_rows(&self.ring, self.ambient, rows)
    }

    /// Smallest lattice `L'` containing this one with `R^n / L'` torsion free.
    pub fn saturate(&self) -> Self {
        if self.ring.is_field() || self.is_zero() {
            return self.clone();
        }
        let sm = snf(&self.ring, &self.basis);
        Self::from_matrix(&self.ring, &sm.v_inv.select_rows(0..self.rank()))
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    /// Image of the lattice under `v -> m * v` (`m` is target x ambient).
    pub fn image(&self, m: &Matrix<R::El>) -> Self {
        assert_eq!(m.cols(), self.ambient);
        if self.is_zero() {
            return Self::zero(&self.ring, m.rows());
        }
        Self::from_matrix(&self.ring, &self.basis.mul(&self.ring, &m.transpose()))
    }

    /// Change of coordinates: expresses the lattice in the basis of `top`.
    pub fn coords_in(&self, top: &Self) -> Result<Matrix<R::El>, Error> {
        let rows = (0..self.rank())
            .map(|i| {
                top.coords(self.basis.row(i))
                    .ok_or_else(|| Error::Inconsistent("lattice is not contained in the given top lattice".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_rows(top.rank(), rows))
    }
}

/// Left kernel `{x : x * m = 0}`; saturated over the integers.
pub fn kernel_basis<R: Ring>(ring: &R, m: &Matrix<R::El>) -> Lattice<R> {
    let e = echelon(ring, m, true);
    let t = e.transform.unwrap();
    let rows: Vec<Vec<R::El>> = (e.pivots.len()..m.rows()).map(|i| t.row(i).to_vec()).collect();
    Lattice::from_rows(ring, m.rows(), rows)
}

/// Right kernel `{x : m * x = 0}`.
pub fn right_kernel<R: Ring>(ring: &R, m: &Matrix<R::El>) -> Lattice<R> {
    if m.rows() > m.cols() {
        // same row space, fewer rows
        let e = echelon(ring, m, false);
        let reduced = e.form.select_rows(0..e.rank());
        return kernel_basis(ring, &reduced.transpose());
    }
    kernel_basis(ring, &m.transpose())
}

/// Finitely generated module `R^free_rank ⊕ ⊕ R/(f_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FGModulePresentation {
    pub free_rank: usize,
    /// Non-unit invariant factors, each dividing the next.
    pub invariant_factors: Vec<String>,
}

impl FGModulePresentation {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("R^{}", self.free_rank));
        }
        for f in &self.invariant_factors {
            parts.push(format!("R/{f}"));
        }
        parts.join(" + ")
    }
}

/// Presentation of `R^ambient / sub`.
pub fn quotient_presentation<R: Ring>(ambient: usize, sub: &Lattice<R>) -> FGModulePresentation {
    assert_eq!(sub.ambient_rank(), ambient);
    let ring = sub.ring();
    let free_rank = ambient - sub.rank();
    if sub.is_zero() || ring.is_field() {
        return FGModulePresentation { free_rank, invariant_factors: vec![] };
    }
    let sm = snf(ring, sub.basis());
    let invariant_factors = sm
        .diagonal()
        .iter()
        .filter(|x| !ring.is_zero(x) && !ring.is_unit(x))
        .map(|x| ring.format(x))
        .collect();
    FGModulePresentation { free_rank, invariant_factors }
}

/// Rows `c` with `top = bottom ⊕ span(c)`, or a torsion error when
/// `top / bottom` is not free.
pub fn complement_basis<R: Ring>(top: &Lattice<R>, bottom: &Lattice<R>) -> Result<Matrix<R::El>, Error> {
    let ring = top.ring();
    let k = top.rank();
    let m = bottom.rank();
    if m == 0 {
        return Ok(top.basis().clone());
    }
    let bc = bottom.coords_in(top)?;
    let sm = snf(ring, &bc);
    for (i, x) in sm.diagonal().iter().enumerate().take(m) {
        if !ring.is_unit(x) {
            return Err(Error::Torsion(format!(
                "quotient has invariant factor {} at position {i}",
                ring.format(x)
            )));
        }
    }
    let new_top = sm.v_inv.mul(ring, top.basis());
    Ok(new_top.select_rows(m..k))
}
