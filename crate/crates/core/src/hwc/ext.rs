use crate::exactla::{quotient_presentation, right_kernel, FGModulePresentation, Lattice, LeftSolver, Matrix, Ring};
use crate::polyfun::{hom_space, inclusion, submodule, FactorKind, GradedLattice, Module, ModuleMap, Presentation};
use crate::weylschur::{realize_presentation, StandardObject};
use crate::{Error, Result};

/// `Ext¹` as a finitely generated module over the base ring.
pub type Ext1Value = FGModulePresentation;

fn flatten<R: Ring>(m: &ModuleMap<R>) -> Vec<R::El> {
    m.blocks().iter().flat_map(|b| b.entries().iter().cloned()).collect()
}

fn zero() -> Ext1Value {
    FGModulePresentation { free_rank: 0, invariant_factors: vec![] }
}

/// Rank of `Hom(X, Y)`. When `X = Γ^μ` this is checked against the rank of
/// the weight space `Y_μ`.
pub fn hom_rank<R: Ring>(x: &Module<R>, y: &Module<R>) -> Result<usize> {
    let h = hom_space(x, y)?.len();
    if let Some(f) = x.formulaic_factors() {
        if f.len() == x.n() && f.iter().all(|p| p.0 == FactorKind::Divided) {
            let mu: Vec<usize> = f.iter().map(|p| p.1).collect();
            let w = x.weight_index(&mu).unwrap();
            if y.weight_rank(w) != h {
                return Err(Error::Inconsistent(format!("Hom({}, {}) has rank {h}, weight space has rank {}", x.name(), y.name(), y.weight_rank(w))));
            }
        }
    }
    Ok(h)
}

/// `Ext¹(P₀/Ω, Y) = coker(Hom(P₀, Y) → Hom(Ω, Y))` for a projective `P₀`.
pub fn ext1_from_syzygy<R: Ring>(p0: &Module<R>, omega: &GradedLattice<R>, y: &Module<R>) -> Result<Ext1Value> {
    if omega.is_zero() {
        return Ok(zero());
    }
    let ring = y.ring();
    let om = submodule(p0, omega.clone(), "Ω".into())?;
    let h_om = hom_space(&om, y)?;
    if h_om.is_empty() {
        return Ok(zero());
    }
    let len = h_om.iter().map(|m| flatten(m).len()).next().unwrap();
    let lat = Lattice::from_rows(ring, len, h_om.iter().map(flatten).collect());
    let inc = inclusion(&om)?;
    let mut rows = Vec::new();
    for f in hom_space(p0, y)? {
        let g = inc.then(&f)?;
        rows.push(lat.coords(&flatten(&g)).ok_or_else(|| Error::Inconsistent("restriction leaves Hom(Ω, Y)".into()))?);
    }
    Ok(quotient_presentation(lat.rank(), &Lattice::from_rows(ring, lat.rank(), rows)))
}

/// `Ext¹` of the cokernel of `α : P₁ → P₀` with both `P_i` projective:
/// maps `P₁ → Y` vanishing on `ker α`, modulo those factoring through `α`.
pub fn ext1_from_presentation<R: Ring>(alpha: &ModuleMap<R>, y: &Module<R>) -> Result<Ext1Value> {
    let ring = y.ring();
    let h1 = hom_space(alpha.source(), y)?;
    if h1.is_empty() {
        return Ok(zero());
    }
    let h = h1.len();
    let kernel = alpha.kernel();
    let mut rows: Vec<Vec<R::El>> = Vec::new();
    for (w, k) in kernel.parts().iter().enumerate() {
        for i in 0..k.rank() {
            let images: Vec<Vec<R::El>> = h1.iter().map(|f| f.block(w).mul_vec(ring, k.basis().row(i))).collect();
            for p in 0..y.weight_rank(w) {
                rows.push(images.iter().map(|v| v[p].clone()).collect());
            }
        }
    }
    let z1 = if rows.is_empty() { Lattice::full(ring, h) } else { right_kernel(ring, &Matrix::from_rows(h, rows)) };
    let flat: Vec<Vec<R::El>> = h1.iter().map(flatten).collect();
    let solver = LeftSolver::new(ring, &Matrix::from_rows(flat[0].len(), flat));
    let mut b = Vec::new();
    for g in hom_space(alpha.target(), y)? {
        let c = solver.solve(ring, &flatten(&alpha.then(&g)?)).ok_or_else(|| Error::Inconsistent("composite leaves Hom(P₁, Y)".into()))?;
        b.push(z1.coords(&c).ok_or_else(|| Error::Inconsistent("composite does not vanish on ker α".into()))?);
    }
    Ok(quotient_presentation(z1.rank(), &Lattice::from_rows(ring, z1.rank(), b)))
}

/// `Ext¹(X, Y)` from a greedy projective cover of `X`.
pub fn ext1<R: Ring>(x: &Module<R>, y: &Module<R>) -> Result<Ext1Value> {
    if x.is_zero() || y.is_zero() {
        return Ok(zero());
    }
    let p = Presentation::greedy(x)?;
    ext1_from_syzygy(p.p0(), p.omega(), y)
}

/// `Ext¹(Δ(λ), Y)` with `Ω = U(λ)` inside `Γ^λ`.
pub fn ext1_standard<R: Ring>(delta: &StandardObject<R>, y: &Module<R>) -> Result<Ext1Value> {
    ext1_from_syzygy(&delta.gamma, &delta.u, y)
}

/// `Ext¹(Δ(λ), Y)` from the explicit presentation by `Γ^{λ(i,t)} → Γ^λ`.
pub fn ext1_standard_by_relations<R: Ring>(delta: &StandardObject<R>, y: &Module<R>) -> Result<Ext1Value> {
    let r = realize_presentation(&delta.lambda, delta.gamma.n(), delta.gamma.ring())?;
    match &r.alpha {
        Some(alpha) => ext1_from_presentation(alpha, y),
        None => Ok(zero()),
    }
}
