use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{compositions, lex_cmp, Partition};
use crate::exactla::Ring;
use crate::polyfun::{divided, find_iso, hom_space, ModuleMap};
use crate::schuralg::dim_by_orbits;
use crate::weylschur::{costandard_object, standard_object, StandardObject};
use crate::{Error, Result};

use super::cauchy::{cauchy_filtration_projective, lex_descending};
use super::ext::{ext1_standard, ext1_standard_by_relations};

#[derive(Clone, Debug, Serialize)]
pub struct EndoEvidence {
    pub lambda: String,
    pub end_rank: usize,
    pub identity_generates: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomEvidence {
    pub lambda: String,
    pub mu: String,
    pub hom_rank: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainFactor {
    pub mu: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelEvidence {
    pub lambda: String,
    pub u_rank: usize,
    /// Factors `Δ(μ)^m`, `μ > λ`, of the chain ending in `U(λ)`.
    pub chain: Vec<ChainFactor>,
    pub top_multiplicity: usize,
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SummandEvidence {
    pub weight: Vec<usize>,
    pub partition: String,
    pub rank: usize,
    pub iso_found: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectiveEvidence {
    pub schur_dim: usize,
    pub total_rank: usize,
    pub summands: Vec<SummandEvidence>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Axiom<E> {
    pub pass: bool,
    pub evidence: E,
}

#[derive(Clone, Debug, Serialize)]
pub struct Axioms {
    pub endo_k: Axiom<Vec<EndoEvidence>>,
    pub hom_vanishing: Axiom<Vec<HomEvidence>>,
    pub kernel_filtration: Axiom<Vec<KernelEvidence>>,
    pub projective_generator: Axiom<ProjectiveEvidence>,
}

/// One `Ext¹(Δ(λ), Y)` computed along both routes. `Y` is `∇(μ)` for kind
/// `"delta_nabla"` and `Δ(μ)` for `"delta_delta"`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtEntry {
    pub kind: String,
    pub lambda: String,
    pub mu: String,
    pub syzygy: String,
    pub relations: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HwcCertificate {
    pub n: usize,
    pub d: usize,
    pub ring: String,
    pub axioms: Axioms,
    pub ext_table: Vec<ExtEntry>,
    pub verdict: String,
}

impl HwcCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

fn endo<R: Ring>(delta: &StandardObject<R>) -> Result<EndoEvidence> {
    let r = delta.gamma.ring();
    let h = hom_space(delta.module(), delta.module())?;
    let id = ModuleMap::identity(delta.module());
    // End = R·f with f = c·id for a unit c
    let identity_generates = h.len() == 1 && {
        let f = h[0].to_matrix();
        (0..f.rows()).find(|&i| !r.is_zero(f.get(i, i))).is_some_and(|i| {
            let c = f.get(i, i).clone();
            r.is_unit(&c) && id.scale(&c).blocks() == h[0].blocks()
        })
    };
    Ok(EndoEvidence { lambda: delta.lambda.to_string(), end_rank: h.len(), identity_generates, pass: identity_generates })
}

fn kernel<R: Ring>(delta: &StandardObject<R>, n: usize) -> KernelEvidence {
    let lambda = &delta.lambda;
    let mut ev = KernelEvidence { lambda: lambda.to_string(), u_rank: delta.u.rank(), chain: vec![], top_multiplicity: 0, error: None, pass: false };
    let mu = lambda.padded(n).unwrap();
    let chain = match cauchy_filtration_projective(&mu, n, delta.gamma.ring()) {
        Ok(c) => c,
        Err(e) => {
            ev.error = Some(e.to_string());
            return ev;
        }
    };
    let below = chain.below(lambda);
    for s in &chain.steps {
        if &s.lambda == lambda {
            ev.top_multiplicity = s.multiplicity;
            break;
        }
        if s.multiplicity > 0 {
            ev.chain.push(ChainFactor { mu: s.lambda.to_string(), multiplicity: s.multiplicity });
        }
    }
    ev.pass = below == delta.u && ev.top_multiplicity == 1;
    if below != delta.u {
        ev.error = Some(format!("chain below {lambda} has rank {}, U has rank {}", below.rank(), delta.u.rank()));
    }
    ev
}

fn projective<R: Ring>(ring: &R, n: usize, d: usize) -> Result<ProjectiveEvidence> {
    let summands = compositions(n, d)
        .into_par_iter()
        .map(|mu| {
            let mut sorted = mu.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let x = divided(ring, n, &mu);
            let iso_found = find_iso(&x, &divided(ring, n, &sorted))?.is_some();
            sorted.retain(|&p| p > 0);
            Ok(SummandEvidence { partition: Partition::new(sorted)?.to_string(), rank: x.rank(), weight: mu, iso_found })
        })
        .collect::<Result<Vec<_>>>()?;
    let total_rank = summands.iter().map(|s| s.rank).sum();
    let schur_dim = dim_by_orbits(n, d);
    let pass = total_rank == schur_dim && summands.iter().all(|s| s.iso_found);
    Ok(ProjectiveEvidence { schur_dim, total_rank, summands, pass })
}

fn ext_entry<R: Ring>(kind: &str, delta: &StandardObject<R>, mu: &Partition, y: &crate::polyfun::Module<R>, expect_zero: bool) -> Result<ExtEntry> {
    let a = ext1_standard(delta, y)?;
    let b = ext1_standard_by_relations(delta, y)?;
    let pass = a == b && (!expect_zero || a.is_zero());
    Ok(ExtEntry { kind: kind.into(), lambda: delta.lambda.to_string(), mu: mu.to_string(), syzygy: a.describe(), relations: b.describe(), pass })
}

/// Checks the highest-weight axioms for polynomial functors of degree `d`
/// evaluated at `k^n`, with standard objects `Δ(λ)` ordered
/// lexicographically and projectives `Γ^λ`.
pub fn verify_hwc<R: Ring>(n: usize, d: usize, ring: &R) -> Result<HwcCertificate> {
    if n < d {
        return Err(Error::Invalid(format!("verify_hwc needs n ≥ d, got n = {n}, d = {d}")));
    }
    let lambdas = lex_descending(d);
    let deltas = lambdas.par_iter().map(|l| standard_object(l, n, ring)).collect::<Result<Vec<_>>>()?;
    let nablas = lambdas.par_iter().map(|l| costandard_object(l, n, ring)).collect::<Result<Vec<_>>>()?;

    let endo_ev = deltas.par_iter().map(endo).collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(usize, usize)> = (0..lambdas.len()).flat_map(|i| (0..lambdas.len()).map(move |j| (i, j))).collect();
    let hom_ev = pairs
        .par_iter()
        .filter(|(i, j)| lex_cmp(lambdas[*i].parts(), lambdas[*j].parts()).is_gt())
        .map(|&(i, j)| {
            let h = hom_space(deltas[i].module(), deltas[j].module())?.len();
            Ok(HomEvidence { lambda: lambdas[i].to_string(), mu: lambdas[j].to_string(), hom_rank: h, pass: h == 0 })
        })
        .collect::<Result<Vec<_>>>()?;
    let kernel_ev: Vec<KernelEvidence> = deltas.par_iter().map(|s| kernel(s, n)).collect();
    let proj = projective(ring, n, d)?;

    let mut ext_table = pairs
        .par_iter()
        .map(|&(i, j)| ext_entry("delta_nabla", &deltas[i], &lambdas[j], &nablas[j], true))
        .collect::<Result<Vec<_>>>()?;
    ext_table.extend(
        pairs
            .par_iter()
            .filter(|(i, j)| lex_cmp(lambdas[*i].parts(), lambdas[*j].parts()).is_ge())
            .map(|&(i, j)| ext_entry("delta_delta", &deltas[i], &lambdas[j], deltas[j].module(), true))
            .collect::<Result<Vec<_>>>()?,
    );

    let axioms = Axioms {
        endo_k: Axiom { pass: endo_ev.iter().all(|e| e.pass), evidence: endo_ev },
        hom_vanishing: Axiom { pass: hom_ev.iter().all(|e| e.pass), evidence: hom_ev },
        kernel_filtration: Axiom { pass: kernel_ev.iter().all(|e| e.pass), evidence: kernel_ev },
        projective_generator: Axiom { pass: proj.pass, evidence: proj },
    };
    let ok = axioms.endo_k.pass && axioms.hom_vanishing.pass && axioms.kernel_filtration.pass && axioms.projective_generator.pass && ext_table.iter().all(|e| e.pass);
    Ok(HwcCertificate { n, d, ring: ring.spec().to_string(), axioms, ext_table, verdict: if ok { "pass" } else { "fail" }.into() })
}
