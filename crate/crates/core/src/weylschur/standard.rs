use crate::combinat::{dominance_leq, partitions, Partition};
use crate::exactla::{quotient_presentation, FGModulePresentation, Matrix, Ring};
use crate::polyfun::{divided, projection, quotient, reject, submodule, symmetric, trace, GradedLattice, Module, ModuleMap, PolyModule};
use crate::{Error, Result};

use super::weyl::ImageConstruction;

/// `Δ(λ) = Γ^λ / U` with `U` the sum of the traces of `Γ^μ` for `μ ≰ λ`.
#[derive(Clone, Debug)]
pub struct StandardObject<R: Ring> {
    pub lambda: Partition,
    pub gamma: Module<R>,
    pub u: GradedLattice<R>,
    pub quotient: Module<R>,
    pub canonical_epi: ModuleMap<R>,
}

/// Partitions of `|λ|` with at most `n` parts, not dominated by `λ`,
/// padded to compositions of length `n`.
pub fn not_dominated(lambda: &Partition, n: usize) -> Vec<Vec<usize>> {
    partitions(lambda.weight())
        .into_iter()
        .filter(|mu| !dominance_leq(mu.parts(), lambda.parts()).unwrap())
        .filter_map(|mu| mu.padded(n))
        .collect()
}

/// `Σ_{μ ≰ λ} tr_μ X`.
pub fn higher_traces<R: Ring>(x: &PolyModule<R>, lambda: &Partition) -> GradedLattice<R> {
    not_dominated(lambda, x.n()).iter().fold(GradedLattice::zero(x.ring(), x.ranks()), |acc, mu| acc.sum(&trace(x, mu)))
}

/// `Γ^λ(k^n)` with one factor per coordinate when `λ` has at most `n`
/// parts, so that its canonical generator lies in weight `λ`.
pub fn gamma_of<R: Ring>(ring: &R, n: usize, lambda: &Partition) -> Module<R> {
    divided(ring, n, &lambda.padded(n).unwrap_or_else(|| lambda.parts().to_vec()))
}

/// Over the integers a torsion quotient is reported as an error.
pub fn standard_object<R: Ring>(lambda: &Partition, n: usize, ring: &R) -> Result<StandardObject<R>> {
    let gamma = gamma_of(ring, n, lambda);
    let u = higher_traces(&gamma, lambda);
    let q = quotient(&gamma, u.clone(), format!("Δ{lambda}"))?;
    let canonical_epi = projection(&q)?;
    Ok(StandardObject { lambda: lambda.clone(), gamma, u, quotient: q, canonical_epi })
}

impl<R: Ring> StandardObject<R> {
    pub fn module(&self) -> &Module<R> {
        &self.quotient
    }

    /// The map `Δ(λ) → W_λ` induced by the cover `Γ^λ → W_λ`.
    pub fn comparison(&self, weyl: &ImageConstruction<R>) -> Result<ModuleMap<R>> {
        let r = self.gamma.ring();
        if !weyl.cover.image_of(&self.u).is_zero() {
            return Err(Error::Inconsistent(format!("the cover of W{} does not kill U", self.lambda)));
        }
        let blocks = (0..self.quotient.num_weights())
            .map(|w| {
                let reps = self.quotient.reps(w).unwrap();
                if reps.rows() == 0 {
                    return Matrix::zeros(r, weyl.module.weight_rank(w), 0);
                }
                weyl.cover.block(w).mul(r, &reps.transpose())
            })
            .collect();
        ModuleMap::new(&self.quotient, &weyl.module, blocks)
    }

    /// `Γ^λ_μ / U_μ` for every weight `μ`; freeness over the integers means
    /// no invariant factors.
    pub fn weight_quotients(&self) -> Vec<FGModulePresentation> {
        (0..self.gamma.num_weights()).map(|w| quotient_presentation(self.gamma.weight_rank(w), self.u.part(w))).collect()
    }
}

/// `∇(λ) = ⋂_{μ ≰ λ} rej_μ S^λ`.
pub fn costandard_object<R: Ring>(lambda: &Partition, n: usize, ring: &R) -> Result<Module<R>> {
    let s = symmetric(ring, n, lambda.parts());
    let top = not_dominated(lambda, n).iter().fold(GradedLattice::full(ring, s.ranks()), |acc, mu| acc.intersect(&reject(&s, mu)));
    submodule(&s, top, format!("∇{lambda}"))
}
