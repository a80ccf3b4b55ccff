use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, RwLock};

use super::basis::{algebra_basis, AlgebraBasis};
use super::words::{index_word, pair_matrix, sorted_word, word_index, words_over};
use crate::combinat::MarginMatrix;
use crate::exactla::{Matrix, Ring};
use crate::{Error, Result};

/// Element of `S(n, d)` as a sparse coefficient vector over the basis `γ_A`,
/// keyed by basis index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement<R: Ring> {
    coeffs: BTreeMap<usize, R::El>,
}

impl<R: Ring> AlgebraElement<R> {
    pub fn zero() -> Self {
        AlgebraElement { coeffs: BTreeMap::new() }
    }

    pub fn basis(ring: &R, i: usize) -> Self {
        Self::from_pairs(ring, [(i, ring.one())])
    }

    pub fn from_pairs(ring: &R, pairs: impl IntoIterator<Item = (usize, R::El)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (i, c) in pairs {
            let e: &mut R::El = coeffs.entry(i).or_insert_with(|| ring.zero());
            ring.add_assign(e, &c);
        }
        coeffs.retain(|_, c| !ring.is_zero(c));
        AlgebraElement { coeffs }
    }

    pub fn coeff(&self, ring: &R, i: usize) -> R::El {
        self.coeffs.get(&i).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &R::El)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, ring: &R, other: &Self) -> Self {
        Self::from_pairs(ring, self.coeffs.clone().into_iter().chain(other.coeffs.clone()))
    }

    pub fn scale(&self, ring: &R, c: &R::El) -> Self {
        Self::from_pairs(ring, self.coeffs.iter().map(|(&i, x)| (i, ring.mul(x, c))))
    }

    /// Dense coefficient vector of length `dim`.
    pub fn to_dense(&self, ring: &R, dim: usize) -> Vec<R::El> {
        (0..dim).map(|i| self.coeff(ring, i)).collect()
    }
}

type Constants = Arc<Vec<(usize, u64)>>;

/// The Schur algebra `S(n, d)` over a ring, with basis `γ_A`.
///
/// Products of basis elements are computed once over the integers by
/// counting words in `(k^n)^{⊗d}` and cached; they are reduced into the
/// ring on use.
#[derive(Debug)]
pub struct SchurAlgebra<R: Ring> {
    ring: R,
    basis: Arc<AlgebraBasis>,
    constants: RwLock<HashMap<(usize, usize), Constants>>,
}

impl<R: Ring> SchurAlgebra<R> {
    pub fn new(ring: R, n: usize, d: usize) -> Self {
        SchurAlgebra { ring, basis: algebra_basis(n, d), constants: RwLock::new(HashMap::new()) }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn basis(&self) -> &Arc<AlgebraBasis> {
        &self.basis
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn d(&self) -> usize {
        self.basis.d()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn element(&self, a: &MarginMatrix) -> AlgebraElement<R> {
        AlgebraElement::basis(&self.ring, self.basis.index_of(a).expect("matrix outside the basis"))
    }

    /// The weight idempotent `ξ_μ`.
    pub fn xi(&self, mu: &[usize]) -> AlgebraElement<R> {
        self.element(&MarginMatrix::diagonal(mu))
    }

    /// `Σ_μ ξ_μ`.
    pub fn unit(&self) -> AlgebraElement<R> {
        let idx = self.basis.weights().iter().map(|w| (self.basis.index_of(&MarginMatrix::diagonal(w)).unwrap(), self.ring.one()));
        AlgebraElement::from_pairs(&self.ring, idx)
    }

    /// Structure constants of `γ_A γ_B` (apply `γ_B` first) as basis index
    /// and integer coefficient.
    pub fn structure_constants(&self, a: usize, b: usize) -> Result<Constants> {
        if let Some(c) = self.constants.read().unwrap().get(&(a, b)) {
            return Ok(c.clone());
        }
        let ma = &self.basis.elements()[a];
        let mb = &self.basis.elements()[b];
        let c = Arc::new(product_by_words(&self.basis, ma, mb)?);
        Ok(self.constants.write().unwrap().entry((a, b)).or_insert(c).clone())
    }

    pub fn multiply(&self, x: &AlgebraElement<R>, y: &AlgebraElement<R>) -> Result<AlgebraElement<R>> {
        let r = &self.ring;
        let mut terms = Vec::new();
        for (i, cx) in x.terms() {
            for (j, cy) in y.terms() {
                let c = r.mul(cx, cy);
                for &(k, s) in self.structure_constants(i, j)?.iter() {
                    terms.push((k, r.mul(&c, &r.from_u64(s))));
                }
            }
        }
        Ok(AlgebraElement::from_pairs(r, terms))
    }

    /// `γ_A ↦ γ_{Aᵀ}`.
    pub fn transpose(&self, x: &AlgebraElement<R>) -> AlgebraElement<R> {
        let els = self.basis.elements();
        AlgebraElement::from_pairs(
            &self.ring,
            x.terms().map(|(i, c)| (self.basis.index_of(&els[i].transpose()).unwrap(), c.clone())),
        )
    }

    /// Matrix of `γ_A` on `(k^n)^{⊗d}`: the orbit sum of
    /// `e_{i_1 j_1} ⊗ … ⊗ e_{i_d j_d}` over sequences of pairs with
    /// multiplicities `A`.
    pub fn tensor_action(&self, a: &MarginMatrix) -> Matrix<R::El> {
        let (n, d) = (self.n(), self.d());
        let size = n.pow(d as u32);
        let mut m = Matrix::zeros(&self.ring, size, size);
        let content = a.col_sums();
        for w in words_over(&vec![0; d], &MarginMatrix::from_columns(&[content])) {
            for u in words_over(&w, a) {
                m.set(word_index(n, &u), word_index(n, &w), self.ring.one());
            }
        }
        m
    }

    pub fn tensor_action_of(&self, x: &AlgebraElement<R>) -> Matrix<R::El> {
        let size = self.n().pow(self.d() as u32);
        let mut m = Matrix::zeros(&self.ring, size, size);
        for (i, c) in x.terms() {
            m = m.add(&self.ring, &self.tensor_action(&self.basis.elements()[i]).scale(&self.ring, c));
        }
        m
    }

    /// Coordinates of an operator on `(k^n)^{⊗d}` in the basis `γ_A`.
    ///
    /// The supports of the `γ_A` are disjoint, so each coefficient is read
    /// off one entry; the whole matrix is then compared against the
    /// reconstruction and any mismatch is an error.
    pub fn express(&self, m: &Matrix<R::El>) -> Result<AlgebraElement<R>> {
        let (n, d) = (self.n(), self.d());
        let r = &self.ring;
        let mut coeffs: HashMap<MarginMatrix, R::El> = HashMap::new();
        for u in 0..m.rows() {
            for w in 0..m.cols() {
                let c = m.get(u, w);
                if r.is_zero(c) {
                    continue;
                }
                let key = pair_matrix(n, &index_word(n, d, u), &index_word(n, d, w));
                match coeffs.get(&key) {
                    Some(prev) if prev != c => {
                        return Err(Error::Inconsistent(format!("operator is not symmetric on the orbit of {key}")));
                    }
                    Some(_) => {}
                    None => {
                        coeffs.insert(key, c.clone());
                    }
                }
            }
        }
        let zero = r.zero();
        for u in 0..m.rows() {
            for w in 0..m.cols() {
                let key = pair_matrix(n, &index_word(n, d, u), &index_word(n, d, w));
                if m.get(u, w) != coeffs.get(&key).unwrap_or(&zero) {
                    return Err(Error::Inconsistent(format!("operator is not symmetric on the orbit of {key}")));
                }
            }
        }
        Ok(AlgebraElement::from_pairs(r, coeffs.into_iter().map(|(k, c)| (self.basis.index_of(&k).unwrap(), c))))
    }

    /// Product computed by composing tensor actions and re-expressing.
    pub fn multiply_via_tensor(&self, x: &AlgebraElement<R>, y: &AlgebraElement<R>) -> Result<AlgebraElement<R>> {
        let m = self.tensor_action_of(x).mul(&self.ring, &self.tensor_action_of(y));
        self.express(&m)
    }
}

/// `γ_A γ_B` by fixing the sorted word `w` of content `col(B)`, following
/// `e_w` through both operators and grouping the resulting words `u` by
/// `pair_matrix(u, w)`.
fn product_by_words(basis: &AlgebraBasis, a: &MarginMatrix, b: &MarginMatrix) -> Result<Vec<(usize, u64)>> {
    if a.col_sums() != b.row_sums() {
        return Ok(vec![]);
    }
    let n = basis.n();
    let w = sorted_word(&b.col_sums());
    let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
    for v in words_over(&w, b) {
        for u in words_over(&v, a) {
            *counts.entry(u).or_default() += 1;
        }
    }
    let mut grouped: BTreeMap<usize, (u64, usize)> = BTreeMap::new();
    for (u, c) in counts {
        let k = basis.index_of(&pair_matrix(n, &u, &w)).unwrap();
        let e = grouped.entry(k).or_insert((c, 0));
        if e.0 != c {
            return Err(Error::Inconsistent(format!("product of {a} and {b} is not orbit-constant")));
        }
        e.1 += 1;
    }
    let mut out = Vec::with_capacity(grouped.len());
    for (k, (c, seen)) in grouped {
        // every word in the orbit must have been reached
        if seen != words_over(&w, &basis.elements()[k]).len() {
            return Err(Error::Inconsistent(format!("product of {a} and {b} misses part of an orbit")));
        }
        out.push((k, c));
    }
    Ok(out)
}

/// `dim S(n, d)` as the number of `𝔖_d`-orbits on sequences of `d` index
/// pairs, counted by brute force over all sequences.
pub fn dim_by_orbits(n: usize, d: usize) -> usize {
    let m = n * n;
    let mut seen = HashSet::new();
    let total = m.pow(d as u32);
    for idx in 0..total {
        let mut s = index_word(m, d, idx);
        s.sort_unstable();
        seen.insert(s);
    }
    seen.len()
}
