//! Hom and Ext¹ between polynomial functors, the Cauchy filtration, Δ- and
//! ∇-filtrations and the highest-weight certificate.

mod cauchy;
mod certificate;
mod ext;
mod filtration;

pub use cauchy::{cauchy_filtration, cauchy_filtration_projective, lex_descending, pair_variable, psi_copy, psi_image, psi_map, CauchyTarget};
pub use certificate::{verify_hwc, Axiom, Axioms, ChainFactor, EndoEvidence, ExtEntry, HomEvidence, HwcCertificate, KernelEvidence, ProjectiveEvidence, SummandEvidence};
pub use ext::{ext1, ext1_from_presentation, ext1_from_syzygy, ext1_standard, ext1_standard_by_relations, hom_rank, Ext1Value};
pub use filtration::{delta_filtration, nabla_filtration, FiltrationChain, FiltrationStep};
