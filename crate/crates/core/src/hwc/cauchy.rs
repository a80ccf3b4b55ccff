use std::collections::{BTreeMap, HashMap};

use crate::combinat::{compositions, margin_matrices, multinomial, partitions, Composition, MarginMatrix, Partition};
use crate::exactla::Ring;
use crate::polyfun::{divided, from_summands, FactorLabels, GradedLattice, Module, ModuleMap, PolyModule};
use crate::weylschur::{gamma_of, standard_object, StandardObject};
use crate::{Error, Result};

use super::filtration::{FiltrationChain, FiltrationStep};

/// `γ_M ∈ Γ^d(k^a ⊗ k^b)` for `a × b` matrices `M`, viewed as a module over
/// `S(a, d)`: `γ_M` lies in the summand `Γ^β(k^a)` of its column sums `β`,
/// labelled by the columns of `M`. Either every `β ∈ Λ(b, d)` is kept, or
/// a single one.
#[derive(Clone, Debug)]
pub struct CauchyTarget<R: Ring> {
    pub a: usize,
    pub b: usize,
    pub d: usize,
    pub betas: Vec<Composition>,
    pub module: Module<R>,
    position: HashMap<Composition, usize>,
    single: bool,
}

impl<R: Ring> CauchyTarget<R> {
    pub fn full(ring: &R, a: usize, b: usize, d: usize) -> Result<Self> {
        let betas = compositions(b, d);
        let parts: Vec<Module<R>> = betas.iter().map(|beta| divided(ring, a, beta)).collect();
        let module = PolyModule::direct_sum(&parts)?;
        let position = betas.iter().cloned().enumerate().map(|(k, beta)| (beta, k)).collect();
        Ok(CauchyTarget { a, b, d, betas, module, position, single: false })
    }

    /// Only the summand `Γ^μ(k^a)` of column sums `μ ∈ Λ(b, d)`.
    pub fn single(ring: &R, a: usize, mu: &[usize]) -> Self {
        let module = divided(ring, a, mu);
        let position = HashMap::from([(mu.to_vec(), 0)]);
        CauchyTarget { a, b: mu.len(), d: mu.iter().sum(), betas: vec![mu.to_vec()], module, position, single: true }
    }

    /// `(weight, index)` of `γ_M`, or `None` when its column sums are not
    /// kept.
    pub fn locate(&self, m: &MarginMatrix) -> Option<(usize, usize)> {
        let k = *self.position.get(&m.col_sums())?;
        let labels: FactorLabels = (0..m.ncols()).map(|j| m.column(j)).collect();
        if self.single {
            return self.module.formulaic_index(&labels);
        }
        let part = &self.module.summands().unwrap()[k];
        let (w, i) = part.formulaic_index(&labels)?;
        Some((w, self.module.summand_offset(w, k).unwrap() + i))
    }
}

/// Index of the variable `v_i ⊗ w_j` in `Γ^d(k^{ab})`: pairs are ordered
/// row-major.
pub fn pair_variable(b: usize, i: usize, j: usize) -> usize {
    i * b + j
}

/// `ψ^λ(v_α ⊗ w_β)` for labels `α = (α^1, …)` of `Γ^λ(k^a)` and
/// `β = (β^1, …)` of `Γ^λ(k^b)`, as a combination of `γ_M`.
///
/// Each `ψ^{λ_k}(v_{α^k} ⊗ w_{β^k})` is the sum of all `γ_M` with row sums
/// `α^k` and column sums `β^k`; multiplying in `Γ(V ⊗ W)` contributes the
/// product over entries of the multinomials of the summed matrices.
pub fn psi_image(alpha: &FactorLabels, beta: &FactorLabels) -> Result<Vec<(u64, MarginMatrix)>> {
    let a = alpha.first().map_or(0, |x| x.len());
    let b = beta.first().map_or(0, |x| x.len());
    let mut acc: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let choices: Vec<Vec<MarginMatrix>> = alpha.iter().zip(beta).map(|(x, y)| margin_matrices(x, y)).collect::<std::result::Result<_, _>>()?;
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(vec![]);
    }
    let lens: Vec<usize> = choices.iter().map(|c| c.len()).collect();
    let mut odo = vec![0usize; choices.len()];
    loop {
        let mut coef = 1u64;
        let mut sum = vec![0usize; a * b];
        for p in 0..a * b {
            let parts: Vec<usize> = odo.iter().enumerate().map(|(k, &i)| choices[k][i].entries()[p]).collect();
            coef *= multinomial(&parts);
            sum[p] = parts.iter().sum();
        }
        *acc.entry(sum).or_insert(0) += coef;
        if !crate::polyfun::advance(&mut odo, &lens) {
            break;
        }
    }
    Ok(acc.into_iter().map(|(e, c)| (c, MarginMatrix::new(a, b, e))).collect())
}

/// `ψ^λ(− ⊗ w) : Γ^λ(k^a) → Γ^d(k^a ⊗ k^b)` for one basis vector `w` of
/// `Γ^λ(k^b)`.
pub fn psi_copy<R: Ring>(gamma: &Module<R>, target: &CauchyTarget<R>, w_label: &FactorLabels) -> Result<ModuleMap<R>> {
    let r = gamma.ring().clone();
    let mut err = None;
    let map = ModuleMap::from_fn(gamma, &target.module, |w, j| {
        let lab = gamma.formulaic_label(w, j).unwrap();
        match psi_image(lab, w_label) {
            Ok(terms) => terms
                .into_iter()
                .filter_map(|(c, m)| {
                    let (tw, i) = target.locate(&m)?;
                    debug_assert_eq!(tw, w);
                    Some((i, r.from_u64(c)))
                })
                .collect(),
            Err(e) => {
                err = Some(e);
                vec![]
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(map),
    }
}

/// `ψ^λ : Γ^λ(k^a) ⊗ Γ^λ(k^b) → Γ^d(k^a ⊗ k^b)` with the source written as
/// one copy of `Γ^λ(k^a)` per basis vector of `Γ^λ(k^b)`.
pub fn psi_map<R: Ring>(lambda: &Partition, a: usize, b: usize, ring: &R) -> Result<ModuleMap<R>> {
    let target = CauchyTarget::full(ring, a, b, lambda.weight())?;
    let gv = gamma_of(ring, a, lambda);
    let gw = gamma_of(ring, b, lambda);
    let labels: Vec<FactorLabels> = (0..gw.num_weights()).flat_map(|w| gw.formulaic_labels(w).unwrap().to_vec()).collect();
    if labels.is_empty() {
        return Err(Error::Invalid(format!("Γ^{lambda}(k^{b}) is zero")));
    }
    let maps = labels.iter().map(|l| psi_copy(&gv, &target, l)).collect::<Result<Vec<_>>>()?;
    let source = PolyModule::direct_sum(&vec![gv; labels.len()])?;
    from_summands(&source, &maps)
}

/// Partitions of `d` in decreasing lexicographic order.
pub fn lex_descending(d: usize) -> Vec<Partition> {
    let mut ps = partitions(d);
    ps.sort_by(|x, y| crate::combinat::lex_cmp(y.parts(), x.parts()));
    ps
}

/// One step of a Cauchy-type chain: add `Σ_c ψ^λ(− ⊗ w_c)` for the
/// `W`-side vectors `w_c` (combinations of labels of `Γ^λ(k^b)`) and
/// compare the new factor with `Δ(λ)(k^a)` per representative of
/// `Δ(λ)(k^b)`.
fn cauchy_step<R: Ring>(
    target: &CauchyTarget<R>,
    lambda: &Partition,
    w_weights: &[usize],
    dv: &StandardObject<R>,
    dw: &StandardObject<R>,
    prev: &GradedLattice<R>,
) -> Result<FiltrationStep<R>> {
    let r = target.module.ring();
    let gw = &dw.gamma;
    let mut copies = Vec::new();
    let mut image = prev.clone();
    for &w in w_weights {
        for lab in gw.formulaic_labels(w).unwrap() {
            let m = psi_copy(&dv.gamma, target, lab)?;
            image = image.sum(&m.image());
            copies.push((w, m));
        }
    }
    // a W-side vector as a combination of the per-label maps
    let combine = |w: usize, v: &[R::El]| -> ModuleMap<R> {
        let mut acc = ModuleMap::zero(&dv.gamma, &target.module);
        let mut k = 0;
        for (cw, m) in &copies {
            if *cw == w {
                if !r.is_zero(&v[k]) {
                    acc = acc.add(&m.scale(&v[k]));
                }
                k += 1;
            }
        }
        acc
    };
    let factor = PolyModule::subquotient(&target.module, image.clone(), prev.clone(), None, None, format!("F{lambda}/F+"))?;
    let mut maps = Vec::new();
    for &w in w_weights {
        let u = dw.u.part(w);
        for i in 0..u.rank() {
            let m = combine(w, u.basis().row(i));
            if !prev.contains(&m.image()) {
                return Err(Error::Inconsistent(format!("ψ{lambda} does not kill U on the W side")));
            }
        }
        for rep in dw.quotient.reps(w).unwrap().row_vecs() {
            maps.push(combine(w, &rep).induced(&dv.quotient, &factor)?);
        }
    }
    let witness = if maps.is_empty() {
        if !factor.is_zero() {
            return Err(Error::Inconsistent(format!("nonzero factor at {lambda} without Δ copies")));
        }
        None
    } else {
        let source = PolyModule::direct_sum(&vec![dv.quotient.clone(); maps.len()])?;
        let wit = from_summands(&source, &maps)?;
        if !wit.is_iso() {
            return Err(Error::Inconsistent(format!("ψ{lambda} does not induce an isomorphism onto its factor")));
        }
        Some(wit)
    };
    Ok(FiltrationStep { lambda: lambda.clone(), multiplicity: maps.len(), factor_rank: factor.rank(), lattice: image, witness })
}

/// The chain `F_(d) ⊂ ⋯ ⊂ F_(1,…,1) = Γ^d(k^a ⊗ k^b)`, each factor
/// identified with `Δ(λ)(k^a) ⊗ Δ(λ)(k^b)` by the map induced from `ψ^λ`.
pub fn cauchy_filtration<R: Ring>(a: usize, b: usize, d: usize, ring: &R) -> Result<FiltrationChain<R>> {
    let target = CauchyTarget::full(ring, a, b, d)?;
    let mut prev = GradedLattice::zero(ring, target.module.ranks());
    let mut steps = Vec::new();
    for lambda in lex_descending(d) {
        let dv = standard_object(&lambda, a, ring)?;
        let dw = standard_object(&lambda, b, ring)?;
        let all: Vec<usize> = (0..dw.gamma.num_weights()).collect();
        let step = cauchy_step(&target, &lambda, &all, &dv, &dw, &prev)?;
        prev = step.lattice.clone();
        steps.push(step);
    }
    Ok(FiltrationChain { ambient: target.module, steps })
}

/// The filtration of `Γ^μ(k^n)` cut out of the Cauchy filtration by the
/// `W`-side weight `μ`; the factor at `λ` is `Δ(λ)` to the power
/// `K_{λμ}`.
pub fn cauchy_filtration_projective<R: Ring>(mu: &[usize], n: usize, ring: &R) -> Result<FiltrationChain<R>> {
    let d = mu.iter().sum();
    let target = CauchyTarget::single(ring, n, mu);
    let mut prev = GradedLattice::zero(ring, target.module.ranks());
    let mut steps = Vec::new();
    for lambda in lex_descending(d) {
        let dv = standard_object(&lambda, n, ring)?;
        let dw = standard_object(&lambda, mu.len(), ring)?;
        let ws: Vec<usize> = dw.gamma.weight_index(mu).into_iter().collect();
        let step = cauchy_step(&target, &lambda, &ws, &dv, &dw, &prev)?;
        prev = step.lattice.clone();
        steps.push(step);
    }
    Ok(FiltrationChain { ambient: target.module, steps })
}
