//! Weyl and Schur modules, standard and costandard objects, simple heads,
//! and the explicit presentation of `W_λ` by divided powers.

mod presentation;
mod simple;
mod standard;
mod weyl;

pub use presentation::{presentation, realize_presentation, PresentationData, RealizedPresentation};
pub use simple::{is_simple, simple_head, SimpleHead};
pub use standard::{costandard_object, gamma_of, higher_traces, not_dominated, standard_object, StandardObject};
pub use weyl::{
    hat_tableau_label, schur_composite, schur_module, tableau_label, weyl, weyl_composite, ImageConstruction, WeylConstruction,
};
