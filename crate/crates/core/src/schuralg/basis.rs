use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use crate::combinat::{compositions, margin_matrices, Composition, MarginMatrix};

/// Index data for `S(n, d)`: the weights `Λ(n, d)` and the margin matrices
/// labelling the basis `γ_A`.
///
/// Basis order: pairs `(row sums, column sums)` in the canonical order of
/// `Λ(n, d)`, then matrices in the order of [`margin_matrices`].
#[derive(Debug)]
pub struct AlgebraBasis {
    n: usize,
    d: usize,
    weights: Vec<Composition>,
    weight_index: HashMap<Composition, usize>,
    pairs: RwLock<HashMap<(usize, usize), Arc<Vec<MarginMatrix>>>>,
    all: OnceLock<(Vec<MarginMatrix>, HashMap<MarginMatrix, usize>)>,
}

static BASES: OnceLock<Mutex<HashMap<(usize, usize), Arc<AlgebraBasis>>>> = OnceLock::new();

/// Shared basis data for `(n, d)`.
pub fn algebra_basis(n: usize, d: usize) -> Arc<AlgebraBasis> {
    let map = BASES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().unwrap();
    guard.entry((n, d)).or_insert_with(|| Arc::new(AlgebraBasis::new(n, d))).clone()
}

impl AlgebraBasis {
    fn new(n: usize, d: usize) -> Self {
        assert!(n >= 1, "need n >= 1");
        let weights = compositions(n, d);
        let weight_index = weights.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        AlgebraBasis { n, d, weights, weight_index, pairs: RwLock::new(HashMap::new()), all: OnceLock::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn weights(&self) -> &[Composition] {
        &self.weights
    }

    pub fn num_weights(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, i: usize) -> &Composition {
        &self.weights[i]
    }

    pub fn weight_index(&self, w: &[usize]) -> Option<usize> {
        self.weight_index.get(w).copied()
    }

    /// Matrices with row sums `weights[row]` and column sums `weights[col]`.
    pub fn margins(&self, row: usize, col: usize) -> Arc<Vec<MarginMatrix>> {
        if let Some(v) = self.pairs.read().unwrap().get(&(row, col)) {
            return v.clone();
        }
        let v = Arc::new(margin_matrices(&self.weights[row], &self.weights[col]).unwrap());
        self.pairs.write().unwrap().entry((row, col)).or_insert(v).clone()
    }

    fn all(&self) -> &(Vec<MarginMatrix>, HashMap<MarginMatrix, usize>) {
        self.all.get_or_init(|| {
            let mut v = Vec::new();
            for r in 0..self.weights.len() {
                for c in 0..self.weights.len() {
                    v.extend(self.margins(r, c).iter().cloned());
                }
            }
            let idx = v.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
            (v, idx)
        })
    }

    /// The full basis in canonical order.
    pub fn elements(&self) -> &[MarginMatrix] {
        &self.all().0
    }

    pub fn dim(&self) -> usize {
        self.elements().len()
    }

    pub fn index_of(&self, a: &MarginMatrix) -> Option<usize> {
        self.all().1.get(a).copied()
    }

    pub fn row_weight(&self, a: &MarginMatrix) -> usize {
        self.weight_index(&a.row_sums()).expect("row sums outside Λ(n,d)")
    }

    pub fn col_weight(&self, a: &MarginMatrix) -> usize {
        self.weight_index(&a.col_sums()).expect("column sums outside Λ(n,d)")
    }

    /// Basis elements with at most one nonzero off-diagonal entry.
    ///
    /// These are the divided powers `E_ij^(r) ξ_μ` together with the weight
    /// idempotents; they generate `S(n, d)` over the integers.
    pub fn reduced_generators(&self) -> Vec<MarginMatrix> {
        self.elements()
            .iter()
            .filter(|a| {
                let mut off = 0;
                for i in 0..self.n {
                    for j in 0..self.n {
                        if i != j && a.get(i, j) > 0 {
                            off += 1;
                        }
                    }
                }
                off <= 1
            })
            .cloned()
            .collect()
    }
}
