use crate::combinat::{MarginMatrix, Partition};
use crate::exactla::Ring;
use crate::polyfun::{exterior, exterior_morphism, from_summands, quotient, FactorKind, GradedLattice, Module, ModuleMap, PolyModule};
use crate::weylschur::realize_presentation;
use crate::{Error, Result};

/// `Λ^d ⊗_{Γ^d} γ_A : Λ^μ → Λ^λ`, the exterior standard morphism of `A`
/// (row sums `λ`, column sums `μ`).
pub fn lambda_tensor_on_projectives<R: Ring>(ring: &R, n: usize, a: &MarginMatrix) -> Result<ModuleMap<R>> {
    exterior_morphism(&exterior(ring, n, &a.col_sums()), &exterior(ring, n, &a.row_sums()), a)
}

fn divided_degrees<R: Ring>(x: &Module<R>) -> Option<Vec<usize>> {
    let f = x.formulaic_factors()?;
    f.iter().all(|p| p.0 == FactorKind::Divided).then(|| f.iter().map(|p| p.1).collect())
}

/// `Λ ⊗ X` for `X` a divided power module `Γ^μ` or a direct sum of them.
pub fn exterior_counterpart<R: Ring>(x: &Module<R>) -> Result<Module<R>> {
    if let Some(mu) = divided_degrees(x) {
        return Ok(exterior(x.ring(), x.n(), &mu));
    }
    match x.summands() {
        Some(parts) => PolyModule::direct_sum(&parts.iter().map(exterior_counterpart).collect::<Result<Vec<_>>>()?),
        None => Err(Error::Invalid(format!("{} is not a sum of divided powers", x.name()))),
    }
}

/// `f = Σ c_A γ_A` for `f : Γ^μ → Γ^λ`, read off `f` at the canonical
/// generator of `Γ^μ`.
pub fn gamma_expansion<R: Ring>(f: &ModuleMap<R>) -> Result<Vec<(R::El, MarginMatrix)>> {
    let (src, tgt) = (f.source(), f.target());
    let mu = divided_degrees(src).ok_or_else(|| Error::Invalid(format!("{} is not Γ^μ", src.name())))?;
    if divided_degrees(tgt).is_none() {
        return Err(Error::Invalid(format!("{} is not Γ^λ", tgt.name())));
    }
    let n = src.n();
    if mu.len() > n {
        return Err(Error::Invalid(format!("Γ^{mu:?} has more factors than n = {n}")));
    }
    let gen: Vec<Vec<usize>> = (0..mu.len())
        .map(|j| {
            let mut c = vec![0; n];
            c[j] = mu[j];
            c
        })
        .collect();
    let (w, i) = src.formulaic_index(&gen).ok_or_else(|| Error::Invalid("canonical generator missing".into()))?;
    let r = f.ring();
    let col = f.block(w).column(i);
    let mut out = Vec::new();
    for (k, c) in col.into_iter().enumerate() {
        if r.is_zero(&c) {
            continue;
        }
        let label = tgt.formulaic_label(w, k).unwrap();
        let entries = label.iter().flat_map(|row| row[..mu.len()].to_vec()).collect();
        out.push((c, MarginMatrix::new(label.len(), mu.len(), entries)));
    }
    Ok(out)
}

/// `Λ^d ⊗_{Γ^d} f` for a map from a sum of divided powers to a divided
/// power.
pub fn lambda_tensor_map<R: Ring>(f: &ModuleMap<R>) -> Result<ModuleMap<R>> {
    let tgt = exterior_counterpart(f.target())?;
    if let Some(parts) = f.source().summands() {
        let src = exterior_counterpart(f.source())?;
        let mut maps = Vec::with_capacity(parts.len());
        for (k, part) in parts.iter().enumerate() {
            let blocks = (0..part.num_weights())
                .map(|w| {
                    let off = f.source().summand_offset(w, k).unwrap();
                    let cols: Vec<usize> = (off..off + part.weight_rank(w)).collect();
                    f.block(w).select_cols(&cols)
                })
                .collect();
            let piece = ModuleMap::new(part, f.target(), blocks)?;
            maps.push(lambda_tensor_map(&piece)?.retarget(&src.summands().unwrap()[k], &tgt)?);
        }
        return from_summands(&src, &maps);
    }
    let src = exterior_counterpart(f.source())?;
    let mut acc = ModuleMap::zero(&src, &tgt);
    for (c, a) in gamma_expansion(f)? {
        acc = acc.add(&exterior_morphism(&src, &tgt, &a)?.scale(&c));
    }
    Ok(acc)
}

/// `Λ^d ⊗_{Γ^d} X` for `X = coker(α : P₁ → P₀)`.
#[derive(Clone, Debug)]
pub struct LambdaTensor<R: Ring> {
    pub p0: Module<R>,
    pub map: Option<ModuleMap<R>>,
    pub module: Module<R>,
}

pub fn lambda_tensor<R: Ring>(p0: &Module<R>, alpha: Option<&ModuleMap<R>>) -> Result<LambdaTensor<R>> {
    let e0 = exterior_counterpart(p0)?;
    let map = alpha.map(lambda_tensor_map).transpose()?;
    let module = match &map {
        Some(m) => quotient(&e0, m.image(), format!("Λ⊗coker → {}", e0.name()))?,
        None => quotient(&e0, GradedLattice::zero(e0.ring(), e0.ranks()), e0.name().to_string())?,
    };
    Ok(LambdaTensor { p0: e0, map, module })
}

/// `Λ^d ⊗_{Γ^d} W_λ` from the presentation of `Δ(λ)` by the relations
/// `Γ^{λ(i,t)} → Γ^λ`.
pub fn lambda_tensor_weyl<R: Ring>(lambda: &Partition, n: usize, ring: &R) -> Result<LambdaTensor<R>> {
    let r = realize_presentation(lambda, n, ring)?;
    lambda_tensor(&r.p0, r.alpha.as_ref())
}
