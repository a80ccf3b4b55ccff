//! Comultiplications, multiplications, factor permutations and standard
//! morphisms between formulaic modules, all written on basis labels.

use super::map::ModuleMap;
use super::module::{advance, label_of_word, permutation_sign, word_of, FactorKind, FactorLabels, Module};
use crate::combinat::{margin_matrices, multinomial, Composition, MarginMatrix};
use crate::exactla::Ring;
use crate::schuralg::words::arrangements;
use crate::{Error, Result};

/// Every word obtained by expanding each divided power factor into the
/// sum of its arrangements, concatenated: `Δ ⊗ ⋯ ⊗ Δ` on `v_{α^1} ⊗ ⋯`.
pub fn divided_words(label: &FactorLabels) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for c in label {
        let arr = arrangements(c);
        let mut next = Vec::with_capacity(out.len() * arr.len());
        for w in &out {
            for a in &arr {
                let mut w = w.clone();
                w.extend_from_slice(a);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// `Δ ⊗ ⋯ ⊗ Δ` on an exterior monomial: signed sum over all orderings of
/// each factor's subset.
pub fn exterior_words(label: &FactorLabels) -> Vec<(i64, Vec<usize>)> {
    let mut out = vec![(1i64, Vec::new())];
    for c in label {
        let arr = arrangements(c);
        let mut next = Vec::with_capacity(out.len() * arr.len());
        for (s, w) in &out {
            for a in &arr {
                let mut w = w.clone();
                w.extend_from_slice(a);
                next.push((s * permutation_sign(a), w));
            }
        }
        out = next;
    }
    out
}

/// Splits a word into consecutive segments of the given lengths.
fn segments<'a>(word: &'a [usize], lengths: &[usize]) -> Vec<&'a [usize]> {
    let mut out = Vec::with_capacity(lengths.len());
    let mut start = 0;
    for &l in lengths {
        out.push(&word[start..start + l]);
        start += l;
    }
    out
}

/// `∇ ⊗ ⋯ ⊗ ∇ : ⊗^d → Λ^μ`, or `None` when a segment repeats a letter.
pub fn exterior_product(n: usize, word: &[usize], lengths: &[usize]) -> Option<(i64, FactorLabels)> {
    let mut sign = 1;
    let mut label = Vec::with_capacity(lengths.len());
    for seg in segments(word, lengths) {
        let mut c = vec![0; n];
        for &x in seg {
            if c[x] == 1 {
                return None;
            }
            c[x] = 1;
        }
        sign *= permutation_sign(seg);
        label.push(c);
    }
    Some((sign, label))
}

/// `∇ ⊗ ⋯ ⊗ ∇ : ⊗^d → S^μ`.
pub fn symmetric_product(n: usize, word: &[usize], lengths: &[usize]) -> FactorLabels {
    segments(word, lengths)
        .into_iter()
        .map(|seg| {
            let mut c = vec![0; n];
            for &x in seg {
                c[x] += 1;
            }
            c
        })
        .collect()
}

/// `v_1 ⊗ ⋯ ⊗ v_d ↦ v_{σ(1)} ⊗ ⋯ ⊗ v_{σ(d)}` on words; `sigma` holds the
/// 1-based images.
pub fn permute_word(word: &[usize], sigma: &[usize]) -> Vec<usize> {
    sigma.iter().map(|&s| word[s - 1]).collect()
}

fn expect_factors<R: Ring>(m: &Module<R>, kind: FactorKind) -> Result<Vec<usize>> {
    let f = m.formulaic_factors().ok_or_else(|| Error::Invalid(format!("{} is not a formulaic module", m.name())))?;
    if f.iter().any(|x| x.0 != kind) {
        return Err(Error::Invalid(format!("{} has factors of the wrong kind", m.name())));
    }
    Ok(f.iter().map(|x| x.1).collect())
}

fn target_index<R: Ring>(m: &Module<R>, w: usize, label: &FactorLabels) -> usize {
    let (tw, i) = m.formulaic_index(label).unwrap_or_else(|| panic!("label {label:?} missing from {}", m.name()));
    assert_eq!(tw, w, "map does not preserve weights");
    i
}

/// `Γ^λ → ⊗^d`.
pub fn comult_divided<R: Ring>(src: &Module<R>, tensor: &Module<R>) -> Result<ModuleMap<R>> {
    expect_factors(src, FactorKind::Divided)?;
    let n = src.n();
    let one = src.ring().one();
    ModuleMap::from_fn(src, tensor, |w, j| {
        let lab = src.formulaic_label(w, j).unwrap();
        divided_words(lab).iter().map(|u| (target_index(tensor, w, &label_of_word(n, u)), one.clone())).collect()
    })
}

/// `Λ^λ → ⊗^d` with the signs of the exterior comultiplication.
pub fn comult_exterior<R: Ring>(src: &Module<R>, tensor: &Module<R>) -> Result<ModuleMap<R>> {
    expect_factors(src, FactorKind::Exterior)?;
    let n = src.n();
    let r = src.ring().clone();
    ModuleMap::from_fn(src, tensor, |w, j| {
        let lab = src.formulaic_label(w, j).unwrap();
        exterior_words(lab).iter().map(|(s, u)| (target_index(tensor, w, &label_of_word(n, u)), r.from_i64(*s))).collect()
    })
}

/// `⊗^d → Λ^μ`.
pub fn mult_exterior<R: Ring>(tensor: &Module<R>, tgt: &Module<R>) -> Result<ModuleMap<R>> {
    let lengths = expect_factors(tgt, FactorKind::Exterior)?;
    let n = tensor.n();
    let r = tensor.ring().clone();
    ModuleMap::from_fn(tensor, tgt, |w, j| {
        let u = word_of(tensor.formulaic_label(w, j).unwrap());
        match exterior_product(n, &u, &lengths) {
            Some((s, lab)) => vec![(target_index(tgt, w, &lab), r.from_i64(s))],
            None => vec![],
        }
    })
}

/// `⊗^d → S^μ`.
pub fn mult_symmetric<R: Ring>(tensor: &Module<R>, tgt: &Module<R>) -> Result<ModuleMap<R>> {
    let lengths = expect_factors(tgt, FactorKind::Symmetric)?;
    let n = tensor.n();
    let one = tensor.ring().one();
    ModuleMap::from_fn(tensor, tgt, |w, j| {
        let u = word_of(tensor.formulaic_label(w, j).unwrap());
        vec![(target_index(tgt, w, &symmetric_product(n, &u, &lengths)), one.clone())]
    })
}

/// The factor permutation `s` on `⊗^d` for a permutation given by its
/// 1-based images.
pub fn permute_factors<R: Ring>(tensor: &Module<R>, sigma: &[usize]) -> Result<ModuleMap<R>> {
    let n = tensor.n();
    let one = tensor.ring().one();
    ModuleMap::from_fn(tensor, tensor, |w, j| {
        let u = word_of(tensor.formulaic_label(w, j).unwrap());
        vec![(target_index(tensor, w, &label_of_word(n, &permute_word(&u, sigma))), one.clone())]
    })
}

/// Splittings of each source factor `β^j` into pieces `β^{ij}` of sizes
/// `a_{ij}`, as a list of piece tables `pieces[i][j]`.
fn splittings(src: &FactorLabels, a: &MarginMatrix) -> Vec<Vec<Vec<Composition>>> {
    let (p, m) = (a.nrows(), a.ncols());
    let mut per_col = Vec::with_capacity(m);
    for (j, beta) in src.iter().enumerate() {
        let s = margin_matrices(beta, &a.column(j)).unwrap_or_default();
        if s.is_empty() {
            return vec![];
        }
        per_col.push(s);
    }
    let lens: Vec<usize> = per_col.iter().map(|v| v.len()).collect();
    let mut out = Vec::new();
    let mut odo = vec![0; m];
    loop {
        let table: Vec<Vec<Composition>> =
            (0..p).map(|i| (0..m).map(|j| per_col[j][odo[j]].column(i)).collect()).collect();
        out.push(table);
        if !advance(&mut odo, &lens) {
            return out;
        }
    }
}

fn sum_compositions(n: usize, parts: &[Composition]) -> Composition {
    let mut s = vec![0; n];
    for p in parts {
        for (x, y) in s.iter_mut().zip(p) {
            *x += y;
        }
    }
    s
}

fn check_margins<R: Ring>(src: &Module<R>, tgt: &Module<R>, a: &MarginMatrix, sk: FactorKind, tk: FactorKind) -> Result<()> {
    let mu = expect_factors(src, sk)?;
    let lambda = expect_factors(tgt, tk)?;
    if a.col_sums() != mu || a.row_sums() != lambda {
        return Err(Error::WeightMismatch(format!("{a} does not have row sums {lambda:?} and column sums {mu:?}")));
    }
    Ok(())
}

/// `γ_A` on one basis label `v_{β^1} ⊗ ⋯ ⊗ v_{β^m}` of `Γ^μ(k^n)`.
pub fn gamma_image(n: usize, label: &FactorLabels, a: &MarginMatrix) -> Vec<(u64, FactorLabels)> {
    splittings(label, a)
        .into_iter()
        .map(|table| {
            let mut coef: u64 = 1;
            let mut new = Vec::with_capacity(table.len());
            for row in &table {
                for k in 0..n {
                    let parts: Vec<usize> = row.iter().map(|b| b[k]).collect();
                    coef *= multinomial(&parts);
                }
                new.push(sum_compositions(n, row));
            }
            (coef, new)
        })
        .collect()
}

/// The standard morphism `γ_A : Γ^μ → Γ^λ` for `A` with row sums `λ` and
/// column sums `μ`: comultiply each `Γ^{μ_j}` into `⊗_i Γ^{a_ij}`, then
/// multiply each `⊗_j Γ^{a_ij}` into `Γ^{λ_i}`.
pub fn gamma_morphism<R: Ring>(src: &Module<R>, tgt: &Module<R>, a: &MarginMatrix) -> Result<ModuleMap<R>> {
    check_margins(src, tgt, a, FactorKind::Divided, FactorKind::Divided)?;
    let n = src.n();
    let r = src.ring().clone();
    ModuleMap::from_fn(src, tgt, |w, j| {
        let lab = src.formulaic_label(w, j).unwrap();
        gamma_image(n, lab, a).into_iter().map(|(c, new)| (target_index(tgt, w, &new), r.from_u64(c))).collect()
    })
}

/// The standard morphism `σ_A : Γ^μ → S^λ`: as `γ_A`, passing through the
/// canonical maps `Γ^{a_ij} → S^{a_ij}` before multiplying in `S`.
pub fn sigma_morphism<R: Ring>(src: &Module<R>, tgt: &Module<R>, a: &MarginMatrix) -> Result<ModuleMap<R>> {
    check_margins(src, tgt, a, FactorKind::Divided, FactorKind::Symmetric)?;
    let n = src.n();
    let r = src.ring().clone();
    ModuleMap::from_fn(src, tgt, |w, j| {
        let lab = src.formulaic_label(w, j).unwrap();
        let mut out = Vec::new();
        for table in splittings(lab, a) {
            let coef: u64 = table.iter().flatten().map(|b| multinomial(b)).product();
            let new: FactorLabels = table.iter().map(|row| sum_compositions(n, row)).collect();
            out.push((target_index(tgt, w, &new), r.from_u64(coef)));
        }
        out
    })
}

/// Sign of regrouping the pieces `Λ^{a_ij}` from column-major to row-major
/// order: `(-1)^{Σ a_ij a_i'j'}` over `j < j'`, `i > i'`.
pub fn koszul_sign(a: &MarginMatrix) -> i64 {
    let mut e = 0;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            for i2 in 0..i {
                for j2 in j + 1..a.ncols() {
                    e += a.get(i, j) * a.get(i2, j2);
                }
            }
        }
    }
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Exterior analogue of `γ_A : Λ^μ → Λ^λ`: exterior comultiplication of
/// each `Λ^{μ_j}` into `⊗_i Λ^{a_ij}` (shuffle signs), regrouping with
/// [`koszul_sign`], then exterior multiplication into each `Λ^{λ_i}`.
pub fn exterior_morphism<R: Ring>(src: &Module<R>, tgt: &Module<R>, a: &MarginMatrix) -> Result<ModuleMap<R>> {
    check_margins(src, tgt, a, FactorKind::Exterior, FactorKind::Exterior)?;
    let n = src.n();
    let r = src.ring().clone();
    let gauge = koszul_sign(a);
    ModuleMap::from_fn(src, tgt, |w, j| {
        let lab = src.formulaic_label(w, j).unwrap();
        let mut out = Vec::new();
        for table in splittings(lab, a) {
            let mut sign = gauge;
            // shuffle sign of each comultiplication: the elements of the
            // source subset listed piece by piece
            for col in 0..lab.len() {
                let mut order = Vec::new();
                for row in &table {
                    order.extend(row[col].iter().enumerate().filter(|(_, &x)| x > 0).map(|(k, _)| k));
                }
                sign *= permutation_sign(&order);
            }
            let mut new = Vec::with_capacity(table.len());
            let mut zero = false;
            for row in &table {
                let mut letters = Vec::new();
                for piece in row {
                    letters.extend(piece.iter().enumerate().filter(|(_, &x)| x > 0).map(|(k, _)| k));
                }
                let c = sum_compositions(n, row);
                if c.iter().any(|&x| x > 1) {
                    zero = true;
                    break;
                }
                sign *= permutation_sign(&letters);
                new.push(c);
            }
            if !zero {
                out.push((target_index(tgt, w, &new), r.from_i64(sign)));
            }
        }
        out
    })
}
