//! Exact computations with Schur algebras and strict polynomial functors.
//!
//! Modules over the Schur algebra `S(n, d)` are built from divided,
//! symmetric and exterior powers of `k^n` and their subquotients, over the
//! integers, the rationals or a prime field. On top of that the crate
//! computes Weyl and Schur modules, standard and costandard objects, the
//! Cauchy filtration, Ext¹ groups, and checks the highest weight structure
//! and Ringel self-duality of `rep Γ^d_k` for small `n` and `d`.

pub mod combinat;
pub mod exactla;
pub mod hwc;
pub mod polyfun;
pub mod ringel;
pub mod schuralg;
pub mod weylschur;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("torsion detected: {0}")]
    Torsion(String),
    #[error("operation needs a field: {0}")]
    NotAField(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-linear-algebra.md")]
    mod exact_linear_algebra {}
    #[doc = include_str!("../../../book/src/schur-algebra.md")]
    mod schur_algebra {}
    #[doc = include_str!("../../../book/src/polynomial-functors.md")]
    mod polynomial_functors {}
    #[doc = include_str!("../../../book/src/standard-objects.md")]
    mod standard_objects {}
    #[doc = include_str!("../../../book/src/highest-weight.md")]
    mod highest_weight {}
    #[doc = include_str!("../../../book/src/ringel-duality.md")]
    mod ringel_duality {}
}
