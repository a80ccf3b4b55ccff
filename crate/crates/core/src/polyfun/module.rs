use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use super::graded::GradedLattice;
use crate::combinat::{compositions, margin_matrices, multinomial, Composition, MarginMatrix};
use crate::exactla::{complement_basis, Lattice, LeftSolver, Matrix, Ring};
use crate::schuralg::{algebra_basis, AlgebraBasis};
use crate::{Error, Result};

pub type Module<R> = Arc<PolyModule<R>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorKind {
    Divided,
    Symmetric,
    Exterior,
}

/// Label of a basis vector of a formulaic module: one composition per
/// tensor factor (the multiplicity vector of a divided or symmetric
/// monomial, the indicator vector of an exterior monomial).
pub type FactorLabels = Vec<Composition>;

pub(crate) enum Kind<R: Ring> {
    Formulaic {
        factors: Vec<(FactorKind, usize)>,
        labels: Vec<Vec<FactorLabels>>,
        index: HashMap<FactorLabels, (usize, usize)>,
    },
    Tensor {
        left: Module<R>,
        right: Module<R>,
        // (left weight, right weight, left index, right index)
        labels: Vec<Vec<(usize, usize, usize, usize)>>,
        index: Vec<HashMap<(usize, usize, usize, usize), usize>>,
    },
    DirectSum {
        parts: Vec<Module<R>>,
        offsets: Vec<Vec<usize>>,
    },
    Subquotient {
        ambient: Module<R>,
        top: GradedLattice<R>,
        bottom: GradedLattice<R>,
        reps: Vec<Matrix<R::El>>,
        solvers: Vec<LeftSolver<R::El>>,
        names: Option<Vec<Vec<String>>>,
    },
    Dual {
        inner: Module<R>,
    },
}

/// A finite module over `S(n, d)`, free over the ring, graded by `Λ(n, d)`.
///
/// The basis is ordered by weight (canonical order of `Λ(n, d)`) and then
/// by label. The action of `γ_A`, for `A` with row sums `λ` and column sums
/// `μ`, is stored as a matrix from the `μ`-weight space to the `λ`-weight
/// space and computed on demand.
pub struct PolyModule<R: Ring> {
    ring: R,
    basis: Arc<AlgebraBasis>,
    name: String,
    ranks: Vec<usize>,
    pub(crate) kind: Kind<R>,
    cache: RwLock<HashMap<usize, Arc<Matrix<R::El>>>>,
}

impl<R: Ring> std::fmt::Debug for PolyModule<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}(k^{}) over {} ranks {:?}", self.name, self.n(), self.ring.spec(), self.ranks)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleSummary {
    pub rank: usize,
    pub weights: std::collections::BTreeMap<String, usize>,
    pub labels: Vec<String>,
}

fn factor_labels(kind: FactorKind, n: usize, deg: usize) -> Vec<Composition> {
    let all = compositions(n, deg);
    match kind {
        FactorKind::Exterior => all.into_iter().filter(|c| c.iter().all(|&x| x <= 1)).collect(),
        _ => all,
    }
}

/// `γ_C` on one factor whose label is the column sums of `C`.
fn factor_act(kind: FactorKind, c: &MarginMatrix) -> Option<(i64, Composition)> {
    let n = c.nrows();
    match kind {
        FactorKind::Divided => {
            let coef: u64 = (0..n).map(|i| multinomial(c.row(i))).product();
            Some((coef as i64, c.row_sums()))
        }
        FactorKind::Symmetric => {
            let coef: u64 = (0..c.ncols()).map(|j| multinomial(&c.column(j))).product();
            Some((coef as i64, c.row_sums()))
        }
        FactorKind::Exterior => {
            let rows = c.row_sums();
            if rows.iter().any(|&x| x > 1) {
                return None;
            }
            let mut images = Vec::new();
            for j in 0..c.ncols() {
                for i in 0..n {
                    if c.get(i, j) > 0 {
                        images.push(i);
                    }
                }
            }
            Some((permutation_sign(&images), rows))
        }
    }
}

/// Sign of the permutation sorting a list of distinct values.
pub fn permutation_sign(v: &[usize]) -> i64 {
    let mut inv = 0;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if v[a] > v[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Mixed-radix increment, last digit fastest; false after the last tuple.
pub(crate) fn advance(odo: &mut [usize], lens: &[usize]) -> bool {
    for j in (0..odo.len()).rev() {
        odo[j] += 1;
        if odo[j] < lens[j] {
            return true;
        }
        odo[j] = 0;
    }
    false
}

fn add_weights(a: &[usize], b: &[usize]) -> Composition {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl<R: Ring> PolyModule<R> {
    fn build(ring: R, basis: Arc<AlgebraBasis>, name: String, ranks: Vec<usize>, kind: Kind<R>) -> Module<R> {
        Arc::new(PolyModule { ring, basis, name, ranks, kind, cache: RwLock::new(HashMap::new()) })
    }

    /// Tensor product of divided, symmetric and exterior powers of `k^n`.
    pub fn formulaic(ring: &R, n: usize, factors: Vec<(FactorKind, usize)>, name: String) -> Module<R> {
        let d = factors.iter().map(|f| f.1).sum();
        let basis = algebra_basis(n, d);
        let per_factor: Vec<Vec<Composition>> = factors.iter().map(|&(k, deg)| factor_labels(k, n, deg)).collect();
        let mut labels: Vec<Vec<FactorLabels>> = vec![Vec::new(); basis.num_weights()];
        let mut index = HashMap::new();
        let lens: Vec<usize> = per_factor.iter().map(|l| l.len()).collect();
        if lens.iter().all(|&l| l > 0) {
            let mut odo = vec![0usize; factors.len()];
            loop {
                let lab: FactorLabels = odo.iter().enumerate().map(|(k, &i)| per_factor[k][i].clone()).collect();
                let w = lab.iter().fold(vec![0; n], |acc, x| add_weights(&acc, x));
                let wi = basis.weight_index(&w).unwrap();
                index.insert(lab.clone(), (wi, labels[wi].len()));
                labels[wi].push(lab);
                if !advance(&mut odo, &lens) {
                    break;
                }
            }
        }
        let ranks = labels.iter().map(|l| l.len()).collect();
        Self::build(ring.clone(), basis, name, ranks, Kind::Formulaic { factors, labels, index })
    }

    pub fn tensor(left: &Module<R>, right: &Module<R>) -> Result<Module<R>> {
        if left.n() != right.n() {
            return Err(Error::Invalid("tensor factors must be evaluated at the same k^n".into()));
        }
        let n = left.n();
        let basis = algebra_basis(n, left.d() + right.d());
        let mut labels = vec![Vec::new(); basis.num_weights()];
        let mut index = vec![HashMap::new(); basis.num_weights()];
        for (w1, c1) in left.basis.weights().iter().enumerate() {
            for (w2, c2) in right.basis.weights().iter().enumerate() {
                let w = basis.weight_index(&add_weights(c1, c2)).unwrap();
                for i in 0..left.ranks[w1] {
                    for j in 0..right.ranks[w2] {
                        index[w].insert((w1, w2, i, j), labels[w].len());
                        labels[w].push((w1, w2, i, j));
                    }
                }
            }
        }
        let ranks = labels.iter().map(|l: &Vec<_>| l.len()).collect();
        let name = format!("({})⊗({})", left.name, right.name);
        Ok(Self::build(left.ring.clone(), basis, name, ranks, Kind::Tensor { left: left.clone(), right: right.clone(), labels, index }))
    }

    pub fn direct_sum(parts: &[Module<R>]) -> Result<Module<R>> {
        let first = parts.first().ok_or_else(|| Error::Invalid("empty direct sum".into()))?;
        if parts.iter().any(|p| p.n() != first.n() || p.d() != first.d()) {
            return Err(Error::Invalid("direct summands must share n and d".into()));
        }
        let nw = first.basis.num_weights();
        let mut offsets = vec![Vec::new(); nw];
        let mut ranks = vec![0; nw];
        for w in 0..nw {
            for p in parts {
                offsets[w].push(ranks[w]);
                ranks[w] += p.ranks[w];
            }
        }
        let name = parts.iter().map(|p| p.name.clone()).collect::<Vec<_>>().join(" ⊕ ");
        Ok(Self::build(first.ring.clone(), first.basis.clone(), name, ranks, Kind::DirectSum { parts: parts.to_vec(), offsets }))
    }

    /// The dual `X°`: same weight spaces, `γ_A` acting by the transpose of
    /// `γ_{Aᵀ}`.
    pub fn dual(inner: &Module<R>) -> Module<R> {
        let name = format!("({})°", inner.name);
        Self::build(inner.ring.clone(), inner.basis.clone(), name, inner.ranks.clone(), Kind::Dual { inner: inner.clone() })
    }

    /// `top / bottom` for submodules `bottom ⊂ top` of `ambient`.
    ///
    /// The basis is a set of representatives `reps` with
    /// `top = bottom ⊕ span(reps)` in every weight; a complement is chosen
    /// when none is given, and over the integers a torsion quotient is an
    /// error.
    pub fn subquotient(
        ambient: &Module<R>,
        top: GradedLattice<R>,
        bottom: GradedLattice<R>,
        reps: Option<Vec<Matrix<R::El>>>,
        names: Option<Vec<Vec<String>>>,
        name: String,
    ) -> Result<Module<R>> {
        let ring = &ambient.ring;
        if !top.contains(&bottom) {
            return Err(Error::Invalid("bottom is not contained in top".into()));
        }
        let nw = ambient.num_weights();
        let reps = match reps {
            Some(r) => {
                for w in 0..nw {
                    let span = bottom.part(w).sum(&Lattice::from_matrix(ring, &r[w]));
                    if span != *top.part(w) || r[w].rows() + bottom.part(w).rank() != top.part(w).rank() {
                        return Err(Error::Invalid(format!("representatives do not complement bottom in top at weight {:?}", ambient.weight(w))));
                    }
                }
                r
            }
            None => (0..nw).map(|w| complement_basis(top.part(w), bottom.part(w))).collect::<Result<Vec<_>>>()?,
        };
        let solvers = (0..nw).map(|w| LeftSolver::new(ring, &bottom.part(w).basis().vstack(&reps[w]))).collect();
        let ranks = reps.iter().map(|r| r.rows()).collect();
        let kind = Kind::Subquotient { ambient: ambient.clone(), top, bottom, reps, solvers, names };
        Ok(Self::build(ring.clone(), ambient.basis.clone(), name, ranks, kind))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn algebra_basis(&self) -> &Arc<AlgebraBasis> {
        &self.basis
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn d(&self) -> usize {
        self.basis.d()
    }

    /// Evaluated below the stable range `n ≥ d`.
    pub fn is_truncated(&self) -> bool {
        self.n() < self.d()
    }

    pub fn num_weights(&self) -> usize {
        self.basis.num_weights()
    }

    pub fn weight(&self, w: usize) -> &Composition {
        self.basis.weight(w)
    }

    pub fn weight_index(&self, w: &[usize]) -> Option<usize> {
        self.basis.weight_index(w)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Rank of the weight space `X_μ`.
    pub fn weight_rank(&self, w: usize) -> usize {
        self.ranks[w]
    }

    pub fn rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    /// Global indices of the basis vectors of weight `μ`.
    pub fn weight_space(&self, mu: &[usize]) -> Result<std::ops::Range<usize>> {
        let w = self.weight_index(mu).ok_or_else(|| Error::WeightMismatch(format!("{mu:?} is not in Λ({}, {})", self.n(), self.d())))?;
        let start: usize = self.ranks[..w].iter().sum();
        Ok(start..start + self.ranks[w])
    }

    pub fn formulaic_factors(&self) -> Option<&[(FactorKind, usize)]> {
        match &self.kind {
            Kind::Formulaic { factors, .. } => Some(factors),
            _ => None,
        }
    }

    pub fn formulaic_label(&self, w: usize, i: usize) -> Option<&FactorLabels> {
        match &self.kind {
            Kind::Formulaic { labels, .. } => labels[w].get(i),
            _ => None,
        }
    }

    pub fn formulaic_labels(&self, w: usize) -> Option<&[FactorLabels]> {
        match &self.kind {
            Kind::Formulaic { labels, .. } => Some(&labels[w]),
            _ => None,
        }
    }

    /// `(weight, index)` of a formulaic label.
    pub fn formulaic_index(&self, label: &FactorLabels) -> Option<(usize, usize)> {
        match &self.kind {
            Kind::Formulaic { index, .. } => index.get(label).copied(),
            _ => None,
        }
    }

    pub fn summands(&self) -> Option<&[Module<R>]> {
        match &self.kind {
            Kind::DirectSum { parts, .. } => Some(parts),
            _ => None,
        }
    }

    /// Position of summand `k`'s weight-`w` basis inside this direct sum.
    pub fn summand_offset(&self, w: usize, k: usize) -> Option<usize> {
        match &self.kind {
            Kind::DirectSum { offsets, .. } => Some(offsets[w][k]),
            _ => None,
        }
    }

    pub fn ambient(&self) -> Option<&Module<R>> {
        match &self.kind {
            Kind::Subquotient { ambient, .. } => Some(ambient),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<&GradedLattice<R>> {
        match &self.kind {
            Kind::Subquotient { top, .. } => Some(top),
            _ => None,
        }
    }

    pub fn bottom(&self) -> Option<&GradedLattice<R>> {
        match &self.kind {
            Kind::Subquotient { bottom, .. } => Some(bottom),
            _ => None,
        }
    }

    /// Representatives in the ambient module of the basis at weight `w`.
    pub fn reps(&self, w: usize) -> Option<&Matrix<R::El>> {
        match &self.kind {
            Kind::Subquotient { reps, .. } => Some(&reps[w]),
            _ => None,
        }
    }

    /// Coordinates of an ambient vector of `top` modulo `bottom`.
    pub fn reduce(&self, w: usize, v: &[R::El]) -> Result<Vec<R::El>> {
        match &self.kind {
            Kind::Subquotient { bottom, solvers, .. } => {
                let x = solvers[w]
                    .solve(&self.ring, v)
                    .ok_or_else(|| Error::Inconsistent(format!("vector outside the top lattice in {}", self.name)))?;
                Ok(x[bottom.part(w).rank()..].to_vec())
            }
            _ => Err(Error::Invalid(format!("{} is not a subquotient", self.name))),
        }
    }

    /// Matrix of `γ_A` from the column-sum weight space to the row-sum
    /// weight space.
    pub fn action(&self, a: &MarginMatrix) -> Arc<Matrix<R::El>> {
        self.action_idx(self.basis.index_of(a).expect("matrix outside the algebra basis"))
    }

    pub fn action_idx(&self, idx: usize) -> Arc<Matrix<R::El>> {
        if let Some(m) = self.cache.read().unwrap().get(&idx) {
            return m.clone();
        }
        let m = Arc::new(self.compute_action(idx).unwrap_or_else(|e| panic!("action on {}: {e}", self.name)));
        self.cache.write().unwrap().entry(idx).or_insert(m).clone()
    }

    fn compute_action(&self, idx: usize) -> Result<Matrix<R::El>> {
        let a = &self.basis.elements()[idx];
        let (r, c) = (self.basis.row_weight(a), self.basis.col_weight(a));
        let ring = &self.ring;
        let mut m = Matrix::zeros(ring, self.ranks[r], self.ranks[c]);
        match &self.kind {
            Kind::Formulaic { factors, labels, index } => {
                for (s, lab) in labels[c].iter().enumerate() {
                    for (coef, tgt) in formulaic_image(factors, lab, a) {
                        let (tw, ti) = index[&tgt];
                        debug_assert_eq!(tw, r);
                        let e = m.get_mut(ti, s);
                        *e = ring.add(e, &ring.from_i64(coef));
                    }
                }
            }
            Kind::Tensor { left, right, labels, index } => {
                for (s, &(w1, _, i, j)) in labels[c].iter().enumerate() {
                    let nu1 = left.weight(w1);
                    for part in bounded_splits(a, nu1) {
                        let rest = a.checked_sub(&part).unwrap();
                        let xa = left.action(&part);
                        let yb = right.action(&rest);
                        let (r1, r2) = (left.weight_index(&part.row_sums()).unwrap(), right.weight_index(&rest.row_sums()).unwrap());
                        for p in 0..xa.rows() {
                            let x = xa.get(p, i);
                            if ring.is_zero(x) {
                                continue;
                            }
                            for q in 0..yb.rows() {
                                let y = yb.get(q, j);
                                if ring.is_zero(y) {
                                    continue;
                                }
                                let t = index[r][&(r1, r2, p, q)];
                                let e = m.get_mut(t, s);
                                ring.add_mul_assign(e, x, y);
                            }
                        }
                    }
                }
            }
            Kind::DirectSum { parts, offsets } => {
                for (k, p) in parts.iter().enumerate() {
                    let b = p.action_idx(idx);
                    for i in 0..b.rows() {
                        for j in 0..b.cols() {
                            m.set(offsets[r][k] + i, offsets[c][k] + j, b.get(i, j).clone());
                        }
                    }
                }
            }
            Kind::Subquotient { ambient, reps, .. } => {
                let x = ambient.action_idx(idx);
                for s in 0..reps[c].rows() {
                    let y = x.mul_vec(ring, reps[c].row(s));
                    let coords = self.reduce(r, &y)?;
                    for (t, v) in coords.into_iter().enumerate() {
                        m.set(t, s, v);
                    }
                }
            }
            Kind::Dual { inner } => {
                m = inner.action(&a.transpose()).transpose();
            }
        }
        Ok(m)
    }

    /// Human readable label of basis vector `i` at weight `w`.
    pub fn label(&self, w: usize, i: usize) -> String {
        match &self.kind {
            Kind::Formulaic { factors, labels, .. } => {
                let parts: Vec<String> = factors.iter().zip(&labels[w][i]).map(|(f, c)| format_factor(f.0, c)).collect();
                if parts.is_empty() {
                    "1".into()
                } else {
                    parts.join("⊗")
                }
            }
            Kind::Tensor { left, right, labels, .. } => {
                let (w1, w2, a, b) = labels[w][i];
                format!("[{}]⊗[{}]", left.label(w1, a), right.label(w2, b))
            }
            Kind::DirectSum { parts, offsets } => {
                let k = (0..parts.len()).find(|&k| i < offsets[w][k] + parts[k].ranks[w]).unwrap();
                format!("{}:{}", k, parts[k].label(w, i - offsets[w][k]))
            }
            Kind::Subquotient { names, ambient, reps, .. } => match names {
                Some(nm) => nm[w][i].clone(),
                None => {
                    let mut s = String::new();
                    let row = reps[w].row(i);
                    for (j, x) in row.iter().enumerate() {
                        if self.ring.is_zero(x) {
                            continue;
                        }
                        if !s.is_empty() {
                            s.push_str(" + ");
                        }
                        let _ = write!(s, "{}·{}", self.ring.format(x), ambient.label(w, j));
                    }
                    if s.is_empty() {
                        "0".into()
                    } else {
                        s
                    }
                }
            },
            Kind::Dual { inner } => format!("{}*", inner.label(w, i)),
        }
    }

    pub fn summary(&self) -> ModuleSummary {
        let mut weights = std::collections::BTreeMap::new();
        let mut labels = Vec::new();
        for w in 0..self.num_weights() {
            if self.ranks[w] > 0 {
                let key = self.weight(w).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                weights.insert(key, self.ranks[w]);
            }
            for i in 0..self.ranks[w] {
                labels.push(self.label(w, i));
            }
        }
        ModuleSummary { rank: self.rank(), weights, labels }
    }
}

fn format_factor(kind: FactorKind, c: &[usize]) -> String {
    let body = c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    match kind {
        FactorKind::Divided => format!("v({body})"),
        FactorKind::Symmetric => format!("x({body})"),
        FactorKind::Exterior => {
            let s: Vec<String> = c.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| (i + 1).to_string()).collect();
            format!("e{{{}}}", s.join(","))
        }
    }
}

/// Image of one formulaic basis vector under `γ_A`, as coefficient and
/// target label pairs (possibly repeated).
///
/// Each column `j` of `A` is split into pieces, one per factor, of sizes
/// given by the factors' `j`-th entries; factor `k` then receives the
/// matrix assembled from its pieces.
pub(crate) fn formulaic_image(factors: &[(FactorKind, usize)], label: &FactorLabels, a: &MarginMatrix) -> Vec<(i64, FactorLabels)> {
    let n = a.nrows();
    let m = factors.len();
    let mut per_col = Vec::with_capacity(n);
    for j in 0..a.ncols() {
        let sizes: Vec<usize> = (0..m).map(|k| label[k][j]).collect();
        let pieces = margin_matrices(&a.column(j), &sizes).unwrap_or_default();
        if pieces.is_empty() {
            return vec![];
        }
        per_col.push(pieces);
    }
    let lens: Vec<usize> = per_col.iter().map(|p| p.len()).collect();
    let mut out = Vec::new();
    let mut odo = vec![0usize; per_col.len()];
    loop {
        let mut coef = 1i64;
        let mut tgt = Vec::with_capacity(m);
        for k in 0..m {
            let mut c = MarginMatrix::zeros(n, a.ncols());
            for (j, pieces) in per_col.iter().enumerate() {
                let p = &pieces[odo[j]];
                for i in 0..n {
                    c.set(i, j, p.get(i, k));
                }
            }
            match factor_act(factors[k].0, &c) {
                Some((x, l)) => {
                    coef *= x;
                    tgt.push(l);
                }
                None => {
                    coef = 0;
                    break;
                }
            }
        }
        if coef != 0 {
            out.push((coef, tgt));
        }
        if !advance(&mut odo, &lens) {
            return out;
        }
    }
}

/// Matrices `P ≤ A` entrywise with column sums `nu`.
fn bounded_splits(a: &MarginMatrix, nu: &[usize]) -> Vec<MarginMatrix> {
    let (r, c) = (a.nrows(), a.ncols());
    let mut cols: Vec<Vec<Vec<usize>>> = Vec::with_capacity(c);
    for j in 0..c {
        let cap = a.column(j);
        let mut out = Vec::new();
        bounded_vectors(&cap, nu[j], 0, &mut vec![0; r], &mut out);
        if out.is_empty() {
            return vec![];
        }
        cols.push(out);
    }
    let lens: Vec<usize> = cols.iter().map(|v| v.len()).collect();
    let mut res = Vec::new();
    let mut odo = vec![0usize; c];
    loop {
        let chosen: Vec<Vec<usize>> = (0..c).map(|j| cols[j][odo[j]].clone()).collect();
        res.push(MarginMatrix::from_columns(&chosen));
        if !advance(&mut odo, &lens) {
            return res;
        }
    }
}

fn bounded_vectors(cap: &[usize], sum: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i == cap.len() {
        if sum == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let rest: usize = cap[i + 1..].iter().sum();
    for v in (0..=cap[i].min(sum)).rev() {
        if sum - v > rest {
            break;
        }
        cur[i] = v;
        bounded_vectors(cap, sum - v, i + 1, cur, out);
    }
    cur[i] = 0;
}

/// `Γ^λ(k^n)` for a composition `λ`; zero parts are kept as trivial factors.
pub fn divided<R: Ring>(ring: &R, n: usize, lambda: &[usize]) -> Module<R> {
    let factors = lambda.iter().map(|&p| (FactorKind::Divided, p)).collect();
    PolyModule::formulaic(ring, n, factors, format!("Γ^{}", fmt_comp(lambda)))
}

/// `S^λ(k^n)`.
pub fn symmetric<R: Ring>(ring: &R, n: usize, lambda: &[usize]) -> Module<R> {
    let factors = lambda.iter().map(|&p| (FactorKind::Symmetric, p)).collect();
    PolyModule::formulaic(ring, n, factors, format!("S^{}", fmt_comp(lambda)))
}

/// `Λ^λ(k^n)`.
pub fn exterior<R: Ring>(ring: &R, n: usize, lambda: &[usize]) -> Module<R> {
    let factors = lambda.iter().map(|&p| (FactorKind::Exterior, p)).collect();
    PolyModule::formulaic(ring, n, factors, format!("Λ^{}", fmt_comp(lambda)))
}

/// `⊗^d(k^n) = Γ^{(1,…,1)}(k^n)`; labels are words.
pub fn tensor_power<R: Ring>(ring: &R, n: usize, d: usize) -> Module<R> {
    let factors = vec![(FactorKind::Divided, 1); d];
    PolyModule::formulaic(ring, n, factors, format!("⊗^{d}"))
}

pub fn fmt_comp(c: &[usize]) -> String {
    format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// The word `w_1 … w_d` (letters `0..n`) of a tensor power label.
pub fn word_of(label: &FactorLabels) -> Vec<usize> {
    label.iter().map(|c| c.iter().position(|&x| x == 1).unwrap()).collect()
}

pub fn label_of_word(n: usize, w: &[usize]) -> FactorLabels {
    w.iter()
        .map(|&x| {
            let mut c = vec![0; n];
            c[x] = 1;
            c
        })
        .collect()
}
