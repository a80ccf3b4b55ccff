//! The Schur algebra `S(n, d)` with basis `γ_A`, `A` running over `n × n`
//! nonnegative integer matrices with entries summing to `d`.

mod algebra;
mod basis;
pub mod words;

pub use algebra::{dim_by_orbits, AlgebraElement, SchurAlgebra};
pub use basis::{algebra_basis, AlgebraBasis};
