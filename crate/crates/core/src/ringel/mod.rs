//! The characteristic tilting object `⊕_λ Λ^λ`, the functor `Λ^d ⊗_{Γ^d} −`
//! and the Ringel self-duality check.

mod duality;
mod functor;
mod tilting;

pub use duality::{
    ringel_comparison, ringel_self_duality_check, CorrespondenceEvidence, MultiplicativeEvidence, PairEvidence, RingelChecks, RingelComparison,
    RingelReport, WeylEvidence,
};
pub use functor::{exterior_counterpart, gamma_expansion, lambda_tensor, lambda_tensor_map, lambda_tensor_on_projectives, lambda_tensor_weyl, LambdaTensor};
pub use tilting::{tilting_object, EndAlgebra, TiltingObject, TiltingSummand};
