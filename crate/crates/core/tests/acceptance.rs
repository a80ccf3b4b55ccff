//! One line per acceptance criterion; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use schurweyl::combinat::{compositions, kostka, partitions, MarginMatrix, Partition};
use schurweyl::exactla::{Integers, Lattice, PrimeField, Rationals, Ring};
use schurweyl::hwc::*;
use schurweyl::polyfun::*;
use schurweyl::ringel::*;
use schurweyl::schuralg::SchurAlgebra;
use schurweyl::weylschur::*;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn f2() -> PrimeField {
    PrimeField::new(2).unwrap()
}

fn f3() -> PrimeField {
    PrimeField::new(3).unwrap()
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Nonnegative integer matrices with the given row and column sums, by
/// filling one entry at a time.
fn count_matrices(rows: &[usize], cols: &[usize]) -> usize {
    fn go(rows: &mut Vec<usize>, cols: &mut Vec<usize>, i: usize, j: usize) -> usize {
        let (r, c) = (rows.len(), cols.len());
        if i == r {
            return usize::from(cols.iter().all(|&x| x == 0));
        }
        if j == c - 1 {
            let v = rows[i];
            if v > cols[j] {
                return 0;
            }
            cols[j] -= v;
            rows[i] = 0;
            let out = go(rows, cols, i + 1, 0);
            rows[i] = v;
            cols[j] += v;
            return out;
        }
        let mut total = 0;
        for v in 0..=rows[i].min(cols[j]) {
            rows[i] -= v;
            cols[j] -= v;
            total += go(rows, cols, i, j + 1);
            rows[i] += v;
            cols[j] += v;
        }
        total
    }
    go(&mut rows.to_vec(), &mut cols.to_vec(), 0, 0)
}

fn hook_content(lambda: &[usize], n: usize) -> u128 {
    let conj: Vec<usize> = (0..lambda.first().copied().unwrap_or(0)).map(|j| lambda.iter().filter(|&&r| r > j).count()).collect();
    let (mut num, mut den) = (1i128, 1i128);
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            num *= n as i128 + j as i128 - i as i128;
            den *= ((row - j) + (conj[j] - i) - 1) as i128;
        }
    }
    (num / den).max(0) as u128
}

fn brute_force_radical(x: &Module<PrimeField>) -> GradedLattice<PrimeField> {
    let f = x.ring().clone();
    let p = f.modulus();
    let full = GradedLattice::full(&f, x.ranks());
    let mut rad = GradedLattice::zero(&f, x.ranks());
    for code in 1..p.pow(x.rank() as u32) {
        let mut c = code;
        let mut parts = Vec::new();
        for w in 0..x.num_weights() {
            let k = x.weight_rank(w);
            let v: Vec<_> = (0..k)
                .map(|_| {
                    let e = f.from_i64((c % p) as i64);
                    c /= p;
                    e
                })
                .collect();
            parts.push(Lattice::from_rows(&f, k, vec![v]));
        }
        let sub = generate_fixpoint(x, &GradedLattice::new(parts), Generators::Full);
        if sub != full {
            rad = rad.sum(&sub);
        }
    }
    rad
}

fn c1_schur_dimensions() -> Check {
    let mut cases = 0;
    for n in 1..=4 {
        for d in 1..=4 {
            let dim = SchurAlgebra::new(Rationals, n, d).dim() as u128;
            let want = binom((n * n + d - 1) as u128, d as u128);
            ensure(dim == want, || format!("S({n},{d}) has dimension {dim}, expected {want}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} pairs (n,d)"))
}

fn totaro_over<R: Ring>(ring: &R) -> Result<usize, String> {
    let mut pairs = 0;
    for d in 1..=3 {
        let n = d;
        for mu in compositions(n, d) {
            let src = divided(ring, n, &mu);
            for lambda in compositions(n, d) {
                let want = count_matrices(&lambda, &mu);
                let g = hom_space(&src, &divided(ring, n, &lambda)).map_err(|e| e.to_string())?.len();
                let s = hom_space(&src, &symmetric(ring, n, &lambda)).map_err(|e| e.to_string())?.len();
                ensure(g == want && s == want, || format!("Γ^{mu:?} → Γ/S^{lambda:?}: {g}/{s}, expected {want}"))?;
                pairs += 1;
            }
        }
    }
    Ok(pairs)
}

fn c2_totaro() -> Check {
    let a = totaro_over(&Rationals)?;
    let b = totaro_over(&f2())?;
    Ok(format!("{} pairs over Q and F2", a + b))
}

fn permutation_matrix(sigma: &[usize]) -> MarginMatrix {
    let d = sigma.len();
    let mut m = MarginMatrix::zeros(d, d);
    for (j, &i) in sigma.iter().enumerate() {
        m.set(i, j, 1);
    }
    m
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for pos in 0..d {
            let mut q = p.clone();
            q.insert(pos, d - 1);
            out.push(q);
        }
    }
    out
}

fn c3_group_algebra() -> Check {
    for d in 1..=4 {
        let ones = vec![1; d];
        let x = divided(&Integers, d, &ones);
        let fact: usize = (1..=d).product();
        let h = hom_space(&x, &x).map_err(|e| e.to_string())?.len();
        ensure(h == fact, || format!("End(Γ^(1^{d})) has rank {h}"))?;
        let alg = SchurAlgebra::new(Integers, d, d);
        let perms = permutations(d);
        for s in &perms {
            for t in &perms {
                // σ∘τ: j ↦ σ(τ(j))
                let st: Vec<usize> = (0..d).map(|j| s[t[j]]).collect();
                let (ps, pt, pst) = (permutation_matrix(s), permutation_matrix(t), permutation_matrix(&st));
                let idx = |m: &MarginMatrix| alg.basis().index_of(m).unwrap();
                let c = alg.structure_constants(idx(&ps), idx(&pt)).map_err(|e| e.to_string())?;
                ensure(c.as_slice() == [(idx(&pst), 1)], || format!("γ_σ γ_τ ≠ γ_στ for σ={s:?}, τ={t:?}"))?;
                let gs = gamma_morphism(&x, &x, &ps).unwrap();
                let gt = gamma_morphism(&x, &x, &pt).unwrap();
                let gst = gamma_morphism(&x, &x, &pst).unwrap();
                ensure(gt.then(&gs).unwrap().blocks() == gst.blocks(), || format!("module maps do not compose for σ={s:?}, τ={t:?}"))?;
            }
        }
    }
    Ok("d ≤ 4, all pairs of permutations".into())
}

fn c4_weyl_ranks() -> Check {
    let mut cases = 0;
    for d in 1..=5 {
        for lambda in partitions(d) {
            for n in 1..=5 {
                let w = weyl(&lambda, n, &Integers).map_err(|e| e.to_string())?;
                let want = hook_content(lambda.parts(), n);
                ensure(w.module.rank() as u128 == want, || format!("W{lambda}(k^{n}) rank {}, expected {want}", w.module.rank()))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn weight_iso_over<R: Ring>(ring: &R, check_torsion: bool) -> Result<usize, String> {
    let mut cases = 0;
    for d in 1..=4 {
        for lambda in partitions(d) {
            let s = standard_object(&lambda, d, ring).map_err(|e| e.to_string())?;
            let w = weyl(&lambda, d, ring).map_err(|e| e.to_string())?;
            let c = s.comparison(&w).map_err(|e| e.to_string())?;
            ensure(c.is_iso() && c.is_equivariant(Generators::Reduced), || format!("Δ{lambda} → W{lambda} is not an isomorphism"))?;
            if check_torsion {
                ensure(s.weight_quotients().iter().all(|q| q.invariant_factors.is_empty()), || format!("Γ^{lambda}/U has torsion"))?;
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn c5_weight_theorem() -> Check {
    let mut total = weight_iso_over(&Integers, true)?;
    total += weight_iso_over(&Rationals, false)?;
    total += weight_iso_over(&f2(), false)?;
    total += weight_iso_over(&f3(), false)?;
    Ok(format!("{total} isomorphisms over Z, Q, F2, F3"))
}

fn ext_orth_over<R: Ring>(ring: &R) -> Result<usize, String> {
    let mut pairs = 0;
    for d in 1..=3 {
        let lambdas = partitions(d);
        let deltas: Vec<_> = lambdas.iter().map(|l| standard_object(l, d, ring).unwrap()).collect();
        let nablas: Vec<_> = lambdas.iter().map(|l| costandard_object(l, d, ring).unwrap()).collect();
        for (i, delta) in deltas.iter().enumerate() {
            for (j, nabla) in nablas.iter().enumerate() {
                let h = hom_rank(delta.module(), nabla).map_err(|e| e.to_string())?;
                let a = ext1_standard(delta, nabla).map_err(|e| e.to_string())?;
                let b = ext1_standard_by_relations(delta, nabla).map_err(|e| e.to_string())?;
                ensure(h == usize::from(i == j), || format!("Hom(Δ{}, ∇{}) has rank {h}", lambdas[i], lambdas[j]))?;
                ensure(a.is_zero() && b.is_zero(), || format!("Ext¹(Δ{}, ∇{}) = {}", lambdas[i], lambdas[j], a.describe()))?;
                pairs += 1;
            }
        }
    }
    Ok(pairs)
}

fn c6_ext_orthogonality() -> Check {
    let total = ext_orth_over(&f2())? + ext_orth_over(&f3())? + ext_orth_over(&Rationals)? + ext_orth_over(&Integers)?;
    Ok(format!("{total} pairs, syzygy and relation routes"))
}

fn c7_cauchy_multiplicities() -> Check {
    let mut cases = 0;
    for d in 1..=4 {
        let n = d;
        for mu in partitions(d) {
            let padded = mu.padded(n).unwrap();
            let chain = cauchy_filtration_projective(&padded, n, &Integers).map_err(|e| e.to_string())?;
            ensure(chain.is_exhaustive() && chain.is_nested(), || format!("Γ^{mu}: chain is not a filtration"))?;
            ensure(chain.factor_ranks().iter().sum::<usize>() == chain.ambient.rank(), || format!("Γ^{mu}: factor ranks do not sum"))?;
            for s in &chain.steps {
                let k = kostka(&s.lambda, &padded).unwrap();
                ensure(s.multiplicity == k, || format!("Δ{} in Γ^{mu}: {} copies, Kostka {k}", s.lambda, s.multiplicity))?;
            }
            let peeled = delta_filtration(&divided(&f2(), n, &padded)).map_err(|e| e.to_string())?.ok_or_else(|| format!("Γ^{mu} not peeled"))?;
            for s in &peeled.steps {
                ensure(s.multiplicity == kostka(&s.lambda, &padded).unwrap(), || format!("peeled multiplicity of Δ{} in Γ^{mu}", s.lambda))?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} projectives, Cauchy chain and peeled filtration"))
}

fn c8_certificates() -> Check {
    let mut runs = Vec::new();
    for (n, d) in [(2, 2), (3, 3)] {
        let certs = [
            verify_hwc(n, d, &f2()).map_err(|e| e.to_string())?,
            verify_hwc(n, d, &f3()).map_err(|e| e.to_string())?,
            verify_hwc(n, d, &Rationals).map_err(|e| e.to_string())?,
            verify_hwc(n, d, &Integers).map_err(|e| e.to_string())?,
        ];
        for c in certs {
            ensure(c.passed(), || format!("S({n},{d}) over {} failed:\n{}", c.ring, c.to_json()))?;
            runs.push(format!("({n},{d})/{}", c.ring));
        }
    }
    Ok(runs.join(" "))
}

fn tilting_over<R: Ring>(ring: &R) -> Result<(), String> {
    for d in 1..=3 {
        let n = d;
        let t = tilting_object(n, d, ring).map_err(|e| e.to_string())?;
        ensure(t.summands.len() == partitions(d).len(), || "missing summands".into())?;
        for lambda in partitions(d) {
            let g = lambda_tensor(&gamma_of(ring, n, &lambda), None).map_err(|e| e.to_string())?;
            let e = exterior(ring, n, &lambda.padded(n).unwrap());
            ensure(find_iso(&g.module, &e).unwrap().is_some(), || format!("Λ ⊗ Γ^{lambda} ≇ Λ^{lambda}"))?;
            let w = lambda_tensor_weyl(&lambda, n, ring).map_err(|e| e.to_string())?;
            let s = schur_module(&lambda.conjugate(), n, ring).unwrap();
            ensure(find_iso(&w.module, &s.module).unwrap().is_some(), || format!("Λ ⊗ W{lambda} ≇ S{}", lambda.conjugate()))?;
        }
        let r = ringel_self_duality_check(n, d, ring).map_err(|e| e.to_string())?;
        ensure(r.passed(), || r.to_json())?;
    }
    Ok(())
}

fn c9_tilting_and_ringel() -> Check {
    tilting_over(&f2())?;
    tilting_over(&Rationals)?;
    Ok("d ≤ 3 over F2 and Q".into())
}

fn duality_over<R: Ring>(ring: &R) -> Result<(), String> {
    for d in 1..=3 {
        let n = d;
        for mu in compositions(n, d) {
            let g = PolyModule::dual(&divided(ring, n, &mu));
            ensure(find_iso(&g, &symmetric(ring, n, &mu)).unwrap().is_some(), || format!("(Γ^{mu:?})° ≇ S^{mu:?}"))?;
            let e = exterior(ring, n, &mu);
            ensure(find_iso(&PolyModule::dual(&e), &e).unwrap().is_some(), || format!("(Λ^{mu:?})° ≇ Λ^{mu:?}"))?;
        }
        if ring.is_field() {
            for lambda in partitions(d) {
                let l = simple_head(&lambda, n, ring).map_err(|e| e.to_string())?.module;
                ensure(find_iso(&PolyModule::dual(&l), &l).unwrap().is_some(), || format!("L{lambda}° ≇ L{lambda}"))?;
            }
        }
    }
    Ok(())
}

fn c10_duality() -> Check {
    duality_over(&f2())?;
    duality_over(&f3())?;
    duality_over(&Rationals)?;
    let l = simple_head(&Partition::row(2), 2, &f2()).map_err(|e| e.to_string())?;
    ensure(l.module.rank() == 2, || format!("dim L((2))(k²) = {}", l.module.rank()))?;
    ensure(l.radical == brute_force_radical(l.standard.module()), || "radical differs from the brute-force oracle".into())?;
    Ok("d ≤ 3 over F2, F3, Q; dim L((2))(k²) = 2 over F2".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("Schur algebra dimension C(n²+d-1, d), n, d ≤ 4", c1_schur_dimensions),
        ("Hom(Γ^μ, Γ^λ) and Hom(Γ^μ, S^λ) count margin matrices, n = d ≤ 3", c2_totaro),
        ("End(Γ^(1^d)) is the group algebra of S_d, d ≤ 4", c3_group_algebra),
        ("Weyl module ranks are hook-content products, d, n ≤ 5", c4_weyl_ranks),
        ("Γ^λ/U(λ) ≅ W_λ by the canonical map, d ≤ 4", c5_weight_theorem),
        ("Hom(Δ, ∇) = δ and Ext¹(Δ, ∇) = 0, d ≤ 3", c6_ext_orthogonality),
        ("Δ-multiplicities of Γ^μ are Kostka numbers, d ≤ 4", c7_cauchy_multiplicities),
        ("highest weight certificates for (2,2) and (3,3)", c8_certificates),
        ("tilting object and Ringel self-duality, d ≤ 3", c9_tilting_and_ringel),
        ("duality suite", c10_duality),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} [{detail}] ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
