//! Exact linear algebra over the integers, the rationals and prime fields.

pub mod echelon;
pub mod lattice;
pub mod matrix;
pub mod ring;
pub mod snf;

pub use echelon::{echelon, rank, Echelon, LeftSolver, RightSolver};
pub use lattice::{complement_basis, kernel_basis, quotient_presentation, right_kernel, FGModulePresentation, Lattice};
pub use matrix::{kronecker, Matrix};
pub use ring::{Integers, PrimeField, Rationals, Ring, RingSpec};
pub use snf::{snf, Smith};

/// Whether a square matrix is invertible over the ring.
pub fn is_invertible<R: Ring>(ring: &R, m: &Matrix<R::El>) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    if m.rows() == 0 {
        return true;
    }
    snf(ring, m).diagonal().iter().all(|x| ring.is_unit(x))
}
