use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{margin_matrices, Partition};
use crate::exactla::{Lattice, Ring};
use crate::hwc::{delta_filtration, lex_descending, nabla_filtration, Axiom};
use crate::polyfun::{divided, exterior, find_iso, gamma_morphism, hom_space, Module, ModuleMap};
use crate::weylschur::schur_module;
use crate::{Error, Result};

use super::functor::{lambda_tensor_map, lambda_tensor_weyl};
use super::tilting::EndAlgebra;

fn flatten<R: Ring>(m: &ModuleMap<R>) -> Vec<R::El> {
    m.blocks().iter().flat_map(|b| b.entries().iter().cloned()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PairEvidence {
    pub mu: String,
    pub lambda: String,
    pub gamma_basis: usize,
    pub hom_rank: usize,
    pub spans: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicativeEvidence {
    pub dim_gamma: usize,
    pub dim_lambda: usize,
    pub products_checked: usize,
    pub mismatch: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceEvidence {
    pub mu: String,
    pub lambda: String,
    pub conjugate: String,
    pub delta_multiplicity: usize,
    pub nabla_multiplicity: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylEvidence {
    pub lambda: String,
    pub conjugate: String,
    pub rank: usize,
    pub schur_rank: usize,
    pub iso_found: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingelChecks {
    pub bijective: Axiom<Vec<PairEvidence>>,
    pub multiplicative: Axiom<MultiplicativeEvidence>,
    pub standard_correspondence: Axiom<Vec<CorrespondenceEvidence>>,
    pub weyl_to_schur: Axiom<Vec<WeylEvidence>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingelReport {
    pub n: usize,
    pub d: usize,
    pub ring: String,
    pub axioms: RingelChecks,
    pub verdict: String,
}

impl RingelReport {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The algebra map `End(⊕_λ Γ^λ) → End(⊕_λ Λ^λ)` given by `Λ^d ⊗ −`
/// on the bases `γ_A`, with the structure constants of both sides.
pub struct RingelComparison<R: Ring> {
    pub gammas: Vec<Module<R>>,
    pub exteriors: Vec<Module<R>>,
    pub gamma_side: EndAlgebra<R>,
    pub lambda_side: EndAlgebra<R>,
}

pub fn ringel_comparison<R: Ring>(n: usize, d: usize, ring: &R) -> Result<RingelComparison<R>> {
    let lambdas = lex_descending(d);
    let padded: Vec<Vec<usize>> = lambdas.iter().map(|l| l.padded(n).ok_or_else(|| Error::Invalid(format!("{l} has more than {n} parts")))).collect::<Result<_>>()?;
    let gammas: Vec<Module<R>> = padded.iter().map(|p| divided(ring, n, p)).collect();
    let exteriors: Vec<Module<R>> = padded.iter().map(|p| exterior(ring, n, p)).collect();
    let k = lambdas.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|s| (0..k).map(move |t| (s, t))).collect();
    let both = pairs
        .par_iter()
        .map(|&(s, t)| {
            let mut g = Vec::new();
            let mut e = Vec::new();
            for a in margin_matrices(&padded[t], &padded[s])? {
                let gm = gamma_morphism(&gammas[s], &gammas[t], &a)?;
                let em = lambda_tensor_map(&gm)?.retarget(&exteriors[s], &exteriors[t])?;
                g.push(gm);
                e.push(em);
            }
            Ok((g, e))
        })
        .collect::<Result<Vec<_>>>()?;
    let (mut gb, mut eb): (Vec<Vec<Vec<ModuleMap<R>>>>, Vec<Vec<Vec<ModuleMap<R>>>>) = (vec![Vec::new(); k], vec![Vec::new(); k]);
    for ((s, _), (g, e)) in pairs.iter().zip(both) {
        gb[*s].push(g);
        eb[*s].push(e);
    }
    let gamma_side = EndAlgebra::from_bases(ring, gb)?;
    let lambda_side = EndAlgebra::from_bases(ring, eb)?;
    Ok(RingelComparison { gammas, exteriors, gamma_side, lambda_side })
}

fn bijective<R: Ring>(c: &RingelComparison<R>, lambdas: &[Partition]) -> Result<Vec<PairEvidence>> {
    let k = lambdas.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|s| (0..k).map(move |t| (s, t))).collect();
    pairs
        .par_iter()
        .map(|&(s, t)| {
            let ring = c.gammas[s].ring();
            let images: Vec<&ModuleMap<R>> = c.lambda_side.slots.iter().zip(&c.lambda_side.basis).filter(|(p, _)| **p == (s, t)).map(|(_, m)| m).collect();
            let hom = hom_space(&c.exteriors[s], &c.exteriors[t])?;
            let len = c.exteriors[s].ranks().iter().zip(c.exteriors[t].ranks()).map(|(a, b)| a * b).sum();
            let img = Lattice::from_rows(ring, len, images.iter().map(|m| flatten(m)).collect());
            let full = Lattice::from_rows(ring, len, hom.iter().map(flatten).collect());
            let spans = img.rank() == images.len() && img == full;
            Ok(PairEvidence {
                mu: lambdas[s].to_string(),
                lambda: lambdas[t].to_string(),
                gamma_basis: images.len(),
                hom_rank: hom.len(),
                spans,
                pass: spans && hom.len() == images.len(),
            })
        })
        .collect()
}

fn multiplicative<R: Ring>(c: &RingelComparison<R>) -> MultiplicativeEvidence {
    let (g, e) = (&c.gamma_side, &c.lambda_side);
    let mut mismatch = None;
    let mut checked = 0;
    if g.dim() != e.dim() {
        mismatch = Some(format!("dimensions {} and {}", g.dim(), e.dim()));
    } else {
        'outer: for i in 0..g.dim() {
            for j in 0..g.dim() {
                if g.slots[j].1 != g.slots[i].0 {
                    continue;
                }
                checked += 1;
                if g.structure[i][j] != e.structure[i][j] {
                    mismatch = Some(format!("basis maps {i} ∘ {j}"));
                    break 'outer;
                }
            }
        }
    }
    MultiplicativeEvidence { dim_gamma: g.dim(), dim_lambda: e.dim(), products_checked: checked, mismatch }
}

fn correspondence<R: Ring>(c: &RingelComparison<R>, lambdas: &[Partition]) -> Result<Vec<CorrespondenceEvidence>> {
    let rows = (0..lambdas.len())
        .into_par_iter()
        .map(|s| {
            let dm = delta_filtration(&c.gammas[s])?.ok_or_else(|| Error::Inconsistent(format!("Γ^{} has no Δ-filtration", lambdas[s])))?.multiplicities();
            let nm = nabla_filtration(&c.exteriors[s])?.ok_or_else(|| Error::Inconsistent(format!("Λ^{} has no ∇-filtration", lambdas[s])))?.multiplicities();
            Ok(lambdas
                .iter()
                .map(|l| {
                    let conj = l.conjugate();
                    let a = dm.get(l).copied().unwrap_or(0);
                    let b = nm.get(&conj).copied().unwrap_or(0);
                    CorrespondenceEvidence { mu: lambdas[s].to_string(), lambda: l.to_string(), conjugate: conj.to_string(), delta_multiplicity: a, nabla_multiplicity: b, pass: a == b }
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows.into_iter().flatten().collect())
}

fn weyl_to_schur<R: Ring>(n: usize, ring: &R, lambdas: &[Partition]) -> Result<Vec<WeylEvidence>> {
    lambdas
        .par_iter()
        .map(|l| {
            let conj = l.conjugate();
            let t = lambda_tensor_weyl(l, n, ring)?;
            let s = schur_module(&conj, n, ring)?;
            let iso_found = find_iso(&t.module, &s.module)?.is_some();
            Ok(WeylEvidence { lambda: l.to_string(), conjugate: conj.to_string(), rank: t.module.rank(), schur_rank: s.module.rank(), iso_found, pass: iso_found })
        })
        .collect()
}

/// Checks that `Λ^d ⊗ −` induces an algebra isomorphism
/// `End(⊕Γ^λ) ≅ End(⊕Λ^λ)` matching `Δ(λ)` with `∇(λ')`.
pub fn ringel_self_duality_check<R: Ring>(n: usize, d: usize, ring: &R) -> Result<RingelReport> {
    if n < d {
        return Err(Error::Invalid(format!("ringel check needs n ≥ d, got n = {n}, d = {d}")));
    }
    let lambdas = lex_descending(d);
    let c = ringel_comparison(n, d, ring)?;
    let bij = bijective(&c, &lambdas)?;
    let mult = multiplicative(&c);
    let corr = correspondence(&c, &lambdas)?;
    let ws = weyl_to_schur(n, ring, &lambdas)?;
    let axioms = RingelChecks {
        bijective: Axiom { pass: bij.iter().all(|e| e.pass), evidence: bij },
        multiplicative: Axiom { pass: mult.mismatch.is_none(), evidence: mult },
        standard_correspondence: Axiom { pass: corr.iter().all(|e| e.pass), evidence: corr },
        weyl_to_schur: Axiom { pass: ws.iter().all(|e| e.pass), evidence: ws },
    };
    let ok = axioms.bijective.pass && axioms.multiplicative.pass && axioms.standard_correspondence.pass && axioms.weyl_to_schur.pass;
    Ok(RingelReport { n, d, ring: ring.spec().to_string(), axioms, verdict: if ok { "pass" } else { "fail" }.into() })
}
