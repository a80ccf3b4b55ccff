//! Strict polynomial functors evaluated at `k^n`, as modules over the
//! Schur algebra: divided, symmetric and exterior powers, their tensor
//! products, duals and subquotients, the maps between them, and Hom spaces.

mod graded;
mod hom;
mod map;
mod module;
mod structural;
mod sub;

pub(crate) use module::advance;
pub use graded::GradedLattice;
pub use hom::{divided_basis_matrix, find_iso, generator_map, hom_from_presentation, hom_space, hom_space_equivariance, iso_among, Presentation};
pub use map::{corestrict, from_summands, inclusion, projection, Generators, ModuleMap};
pub use module::{
    divided, exterior, fmt_comp, label_of_word, permutation_sign, symmetric, tensor_power, word_of, FactorKind, FactorLabels,
    Module, ModuleSummary, PolyModule,
};
pub use structural::{
    comult_divided, comult_exterior, divided_words, exterior_morphism, exterior_product, exterior_words, gamma_image, gamma_morphism,
    koszul_sign, mult_exterior, mult_symmetric, permute_factors, permute_word, sigma_morphism, symmetric_product,
};
pub use sub::{annihilator, generate, generate_fixpoint, is_submodule, quotient, reject, single_weight, submodule, trace};
