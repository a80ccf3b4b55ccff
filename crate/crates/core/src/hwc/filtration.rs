use std::collections::BTreeMap;

use crate::combinat::Partition;
use crate::exactla::{complement_basis, Lattice, Ring};
use crate::polyfun::{from_summands, generator_map, GradedLattice, Module, ModuleMap, PolyModule};
use crate::weylschur::standard_object;
use crate::Result;

use super::cauchy::lex_descending;

/// One step `L_{k-1} ⊂ L_k` of a filtration with `L_k / L_{k-1}` isomorphic
/// to `multiplicity` copies of `Δ(λ)`.
#[derive(Clone, Debug)]
pub struct FiltrationStep<R: Ring> {
    pub lambda: Partition,
    pub lattice: GradedLattice<R>,
    pub multiplicity: usize,
    pub factor_rank: usize,
    /// `Δ(λ)^multiplicity → L_k / L_{k-1}`, an isomorphism.
    pub witness: Option<ModuleMap<R>>,
}

/// An ascending chain of submodules of `ambient`, smallest first.
#[derive(Clone, Debug)]
pub struct FiltrationChain<R: Ring> {
    pub ambient: Module<R>,
    pub steps: Vec<FiltrationStep<R>>,
}

impl<R: Ring> FiltrationChain<R> {
    pub fn multiplicities(&self) -> BTreeMap<Partition, usize> {
        self.steps.iter().map(|s| (s.lambda.clone(), s.multiplicity)).collect()
    }

    pub fn factor_ranks(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.factor_rank).collect()
    }

    /// Whether the last step is the whole ambient module.
    pub fn is_exhaustive(&self) -> bool {
        let full = GradedLattice::full(self.ambient.ring(), self.ambient.ranks());
        self.steps.last().map_or(self.ambient.is_zero(), |s| s.lattice == full)
    }

    /// Whether every step contains the previous one.
    pub fn is_nested(&self) -> bool {
        self.steps.windows(2).all(|p| p[1].lattice.contains(&p[0].lattice))
    }

    /// The lattice just below the first step whose partition is at or
    /// below `lambda` in the chain order.
    pub fn below(&self, lambda: &Partition) -> GradedLattice<R> {
        let mut prev = GradedLattice::zero(self.ambient.ring(), self.ambient.ranks());
        for s in &self.steps {
            if &s.lambda == lambda {
                return prev;
            }
            prev = s.lattice.clone();
        }
        prev
    }
}

/// Tries to build a `Δ`-filtration of `x` by peeling: take the
/// lexicographically largest partition `λ` with `(X/L)_λ ≠ 0`, map one
/// `Γ^λ` onto each basis vector of `(X/L)_λ`, and require the induced map
/// from `Δ(λ)^m` onto the generated subquotient to be an isomorphism.
///
/// `None` means the strategy found no filtration.
pub fn delta_filtration<R: Ring>(x: &Module<R>) -> Result<Option<FiltrationChain<R>>> {
    let ring = x.ring();
    let n = x.n();
    let full = GradedLattice::full(ring, x.ranks());
    let order: Vec<(Partition, usize)> =
        lex_descending(x.d()).into_iter().filter_map(|l| l.padded(n).map(|p| (l.clone(), x.weight_index(&p).unwrap()))).collect();
    let mut cur = GradedLattice::zero(ring, x.ranks());
    let mut steps = Vec::new();
    for (lambda, w) in order {
        if cur == full {
            break;
        }
        let k = x.weight_rank(w);
        if cur.part(w).rank() == k {
            continue;
        }
        let reps = match complement_basis(&Lattice::full(ring, k), cur.part(w)) {
            Ok(r) => r,
            Err(_) => return Ok(None),
        };
        let delta = standard_object(&lambda, n, ring)?;
        let mut next = cur.clone();
        let mut phis = Vec::new();
        for v in reps.row_vecs() {
            let phi = generator_map(&delta.gamma, x, &v)?;
            if !cur.contains(&phi.image_of(&delta.u)) {
                return Ok(None);
            }
            next = next.sum(&phi.image());
            phis.push(phi);
        }
        let factor = match PolyModule::subquotient(x, next.clone(), cur.clone(), None, None, format!("L{lambda}/L")) {
            Ok(f) => f,
            Err(_) => return Ok(None),
        };
        let mut maps = Vec::with_capacity(phis.len());
        for phi in &phis {
            maps.push(phi.induced(&delta.quotient, &factor)?);
        }
        let source = PolyModule::direct_sum(&vec![delta.quotient.clone(); maps.len()])?;
        let witness = from_summands(&source, &maps)?;
        if !witness.is_iso() {
            return Ok(None);
        }
        steps.push(FiltrationStep { lambda, multiplicity: maps.len(), factor_rank: factor.rank(), lattice: next.clone(), witness: Some(witness) });
        cur = next;
    }
    if cur != full {
        return Ok(None);
    }
    Ok(Some(FiltrationChain { ambient: x.clone(), steps }))
}

/// A `∇`-filtration of `X` read off a `Δ`-filtration of `X°`.
pub fn nabla_filtration<R: Ring>(x: &Module<R>) -> Result<Option<FiltrationChain<R>>> {
    delta_filtration(&PolyModule::dual(x))
}
