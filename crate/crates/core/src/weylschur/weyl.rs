use std::collections::BTreeMap;

use crate::combinat::{semistandard_tableaux, sigma_perm, Filling, Partition};
use crate::exactla::{is_invertible, Matrix, Ring};
use crate::polyfun::{
    corestrict, divided_words, exterior, exterior_product, exterior_words, permute_word, submodule, symmetric,
    symmetric_product, FactorLabels, Module, ModuleMap,
};
use crate::Result;

use super::standard::gamma_of;

/// A module defined as the image of a map `source → ambient` through tensor
/// space, together with the tableaux whose images form its basis.
#[derive(Clone, Debug)]
pub struct ImageConstruction<R: Ring> {
    pub lambda: Partition,
    pub n: usize,
    pub source: Module<R>,
    pub ambient: Module<R>,
    pub module: Module<R>,
    /// `source → module`.
    pub cover: ModuleMap<R>,
    /// The composite `source → ambient`.
    pub composite: ModuleMap<R>,
    pub tableau_basis: Vec<Filling>,
    hat: bool,
}

/// `W_λ(k^n)`, the image of `Γ^λ → ⊗^d → ⊗^d → Λ^{λ'}` where the middle map
/// is `s_{λ'}`.
pub type WeylConstruction<R> = ImageConstruction<R>;

fn accumulate<R: Ring>(r: &R, acc: BTreeMap<usize, i64>) -> Vec<(usize, R::El)> {
    acc.into_iter().filter(|x| x.1 != 0).map(|(i, c)| (i, r.from_i64(c))).collect()
}

/// `Γ^λ → Λ^{λ'}`: expand each divided power, read the columns of `λ` and
/// multiply them into exterior powers.
pub fn weyl_composite<R: Ring>(src: &Module<R>, tgt: &Module<R>, lambda: &Partition) -> Result<ModuleMap<R>> {
    let n = src.n();
    let conj = lambda.conjugate();
    let sigma = sigma_perm(&conj);
    let r = src.ring().clone();
    ModuleMap::from_fn(src, tgt, |w, j| {
        let mut acc = BTreeMap::new();
        for word in divided_words(src.formulaic_label(w, j).unwrap()) {
            if let Some((s, l)) = exterior_product(n, &permute_word(&word, &sigma), conj.parts()) {
                *acc.entry(tgt.formulaic_index(&l).unwrap().1).or_insert(0) += s;
            }
        }
        accumulate(&r, acc)
    })
}

/// `Λ^{λ'} → S^λ`: expand each exterior power with signs, read the rows of
/// `λ` and multiply them into symmetric powers.
pub fn schur_composite<R: Ring>(src: &Module<R>, tgt: &Module<R>, lambda: &Partition) -> Result<ModuleMap<R>> {
    let n = src.n();
    let sigma = sigma_perm(lambda);
    let r = src.ring().clone();
    ModuleMap::from_fn(src, tgt, |w, j| {
        let mut acc = BTreeMap::new();
        for (s, word) in exterior_words(src.formulaic_label(w, j).unwrap()) {
            let l = symmetric_product(n, &permute_word(&word, &sigma), lambda.parts());
            *acc.entry(tgt.formulaic_index(&l).unwrap().1).or_insert(0) += s;
        }
        accumulate(&r, acc)
    })
}

fn image_construction<R: Ring>(
    lambda: &Partition,
    source: Module<R>,
    ambient: Module<R>,
    composite: ModuleMap<R>,
    name: String,
    hat: bool,
) -> Result<ImageConstruction<R>> {
    let n = source.n();
    let module = submodule(&ambient, composite.image(), name)?;
    let cover = corestrict(&composite, &module)?;
    let tableau_basis = semistandard_tableaux(lambda, n);
    Ok(ImageConstruction { lambda: lambda.clone(), n, source, ambient, module, cover, composite, tableau_basis, hat })
}

pub fn weyl<R: Ring>(lambda: &Partition, n: usize, ring: &R) -> Result<WeylConstruction<R>> {
    let src = gamma_of(ring, n, lambda);
    let tgt = exterior(ring, n, lambda.conjugate().parts());
    let comp = weyl_composite(&src, &tgt, lambda)?;
    image_construction(lambda, src, tgt, comp, format!("W_{lambda}"), false)
}

/// `S_λ(k^n)`, the image of `Λ^{λ'} → ⊗^d → ⊗^d → S^λ` where the middle map
/// is `s_λ`.
pub fn schur_module<R: Ring>(lambda: &Partition, n: usize, ring: &R) -> Result<ImageConstruction<R>> {
    let src = exterior(ring, n, lambda.conjugate().parts());
    let tgt = symmetric(ring, n, lambda.parts());
    let comp = schur_composite(&src, &tgt, lambda)?;
    image_construction(lambda, src, tgt, comp, format!("S_{lambda}"), true)
}

/// `v_T`: the `i`-th factor counts the entries of row `i`.
pub fn tableau_label(t: &Filling, n: usize) -> FactorLabels {
    t.rows().iter().map(|row| counts(row, n)).collect()
}

/// `v̂_T`: the `j`-th factor is the set of entries of column `j`.
pub fn hat_tableau_label(t: &Filling, n: usize) -> FactorLabels {
    t.columns().iter().map(|col| counts(col, n)).collect()
}

fn counts(entries: &[usize], n: usize) -> Vec<usize> {
    let mut c = vec![0; n];
    for &e in entries {
        c[e - 1] += 1;
    }
    c
}

impl<R: Ring> ImageConstruction<R> {
    /// `(weight, source index)` of the tableau vector of each basis tableau.
    pub fn tableau_vectors(&self) -> Vec<(usize, usize)> {
        self.tableau_basis
            .iter()
            .map(|t| {
                let mut l = if self.hat { hat_tableau_label(t, self.n) } else { tableau_label(t, self.n) };
                l.resize(self.source.formulaic_factors().unwrap().len(), vec![0; self.n]);
                self.source.formulaic_index(&l).expect("tableau label lies in the source")
            })
            .collect()
    }

    /// Whether the images of the tableau vectors form a basis of the module
    /// in every weight.
    pub fn tableaux_form_basis(&self) -> bool {
        let r = self.module.ring();
        let vecs = self.tableau_vectors();
        (0..self.module.num_weights()).all(|w| {
            let cols: Vec<usize> = vecs.iter().filter(|v| v.0 == w).map(|v| v.1).collect();
            let k = self.module.weight_rank(w);
            if cols.len() != k {
                return false;
            }
            let b = self.cover.block(w);
            k == 0 || is_invertible(r, &Matrix::from_fn(k, k, |i, j| b.get(i, cols[j]).clone()))
        })
    }
}
