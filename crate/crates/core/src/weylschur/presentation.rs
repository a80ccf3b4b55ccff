use crate::combinat::{Composition, MarginMatrix, Partition};
use crate::exactla::Ring;
use crate::polyfun::{divided, from_summands, gamma_morphism, quotient, GradedLattice, Module, ModuleMap, PolyModule};
use crate::Result;

use super::standard::gamma_of;

/// The relations `γ_A : Γ^{λ(i,t)} → Γ^λ` presenting `W_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationData {
    pub lambda: Partition,
    /// `(λ(i,t), A)` with `i` and `t` 1-based.
    pub relations: Vec<(Composition, MarginMatrix)>,
}

/// `λ(i,t) = (…, λ_i + t, λ_{i+1} − t, …)` and
/// `A = diag(λ) + t E_{i+1,i} − t E_{i+1,i+1}` for `1 ≤ t ≤ λ_{i+1}`.
pub fn presentation(lambda: &Partition) -> PresentationData {
    let l = lambda.parts();
    let mut relations = Vec::new();
    for i in 0..l.len().saturating_sub(1) {
        for t in 1..=l[i + 1] {
            let mut comp = l.to_vec();
            comp[i] += t;
            comp[i + 1] -= t;
            let mut a = MarginMatrix::diagonal(l);
            a.set(i + 1, i, t);
            a.set(i + 1, i + 1, l[i + 1] - t);
            relations.push((comp, a));
        }
    }
    PresentationData { lambda: lambda.clone(), relations }
}

/// `P_1 → P_0 = Γ^λ → coker → 0` evaluated at `k^n`.
#[derive(Clone, Debug)]
pub struct RealizedPresentation<R: Ring> {
    pub data: PresentationData,
    pub p0: Module<R>,
    /// The summands `Γ^{λ(i,t)}` of `P_1`, in relation order.
    pub parts: Vec<Module<R>>,
    /// `P_1 → P_0`; absent when there are no relations.
    pub alpha: Option<ModuleMap<R>>,
    pub image: GradedLattice<R>,
    pub cokernel: Module<R>,
}

pub fn realize_presentation<R: Ring>(lambda: &Partition, n: usize, ring: &R) -> Result<RealizedPresentation<R>> {
    let data = presentation(lambda);
    let p0 = gamma_of(ring, n, lambda);
    // pad to one factor per coordinate when possible
    let m = p0.formulaic_factors().unwrap().len();
    let padded: Vec<(Composition, MarginMatrix)> = data
        .relations
        .iter()
        .map(|(c, a)| {
            let mut c = c.clone();
            c.resize(m, 0);
            let mut b = MarginMatrix::zeros(m, m);
            for i in 0..a.nrows() {
                for j in 0..a.ncols() {
                    b.set(i, j, a.get(i, j));
                }
            }
            (c, b)
        })
        .collect();
    let parts: Vec<Module<R>> = padded.iter().map(|(c, _)| divided(ring, n, c)).collect();
    let (alpha, image) = if parts.is_empty() {
        (None, GradedLattice::zero(ring, p0.ranks()))
    } else {
        let maps = parts.iter().zip(&padded).map(|(p, (_, a))| gamma_morphism(p, &p0, a)).collect::<Result<Vec<_>>>()?;
        let p1 = PolyModule::direct_sum(&parts)?;
        let alpha = from_summands(&p1, &maps)?;
        let image = alpha.image();
        (Some(alpha), image)
    };
    let cokernel = quotient(&p0, image.clone(), format!("coker α{lambda}"))?;
    Ok(RealizedPresentation { data, p0, parts, alpha, image, cokernel })
}
