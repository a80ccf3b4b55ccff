//! Presentations by divided powers and Hom spaces.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::graded::GradedLattice;
use super::map::{Generators, ModuleMap};
use super::module::{advance, divided, FactorKind, Module, PolyModule};
use super::sub::{generate, single_weight};
use crate::combinat::MarginMatrix;
use crate::exactla::{right_kernel, Lattice, Matrix, Ring, RightSolver};
use crate::{Error, Result};

/// `P₀ = ⊕_k Γ^{μ_k} → X`, sending the generator of the `k`-th summand to
/// a chosen vector `x_k ∈ X_{μ_k}`, together with its kernel `Ω` and a
/// section of the surjection in every weight.
#[derive(Clone, Debug)]
pub struct Presentation<R: Ring> {
    target: Module<R>,
    generators: Vec<(usize, Vec<R::El>)>,
    parts: Vec<Module<R>>,
    p0: Module<R>,
    pi: ModuleMap<R>,
    omega: GradedLattice<R>,
    sections: Vec<Matrix<R::El>>,
}

/// The matrix `B` with `γ_B` applied to the generator of `Γ^μ` giving the
/// basis vector with factor labels `labels` (column `j` of `B` is the `j`-th
/// label).
pub fn divided_basis_matrix(labels: &[Vec<usize>]) -> MarginMatrix {
    MarginMatrix::from_columns(labels)
}

impl<R: Ring> Presentation<R> {
    pub fn from_generators(x: &Module<R>, generators: Vec<(usize, Vec<R::El>)>) -> Result<Self> {
        let ring = x.ring();
        let n = x.n();
        let parts: Vec<Module<R>> = generators.iter().map(|(w, _)| divided(ring, n, x.weight(*w))).collect();
        if parts.is_empty() {
            return Err(Error::Invalid(format!("no generators given for {}", x.name())));
        }
        let p0 = PolyModule::direct_sum(&parts)?;
        let mut blocks = Vec::with_capacity(x.num_weights());
        for w in 0..x.num_weights() {
            let mut cols: Vec<Vec<R::El>> = Vec::new();
            for (k, part) in parts.iter().enumerate() {
                for labels in part.formulaic_labels(w).unwrap() {
                    let b = divided_basis_matrix(labels);
                    cols.push(x.action(&b).mul_vec(ring, &generators[k].1));
                }
            }
            blocks.push(Matrix::from_rows(x.weight_rank(w), cols).transpose());
        }
        let pi = ModuleMap::new(&p0, x, blocks)?;
        let mut sections = Vec::with_capacity(x.num_weights());
        for w in 0..x.num_weights() {
            let k = x.weight_rank(w);
            let solver = RightSolver::new(ring, pi.block(w));
            let mut s = Matrix::zeros(ring, p0.weight_rank(w), k);
            for j in 0..k {
                let mut e = vec![ring.zero(); k];
                e[j] = ring.one();
                let pre = solver
                    .solve(ring, &e)
                    .ok_or_else(|| Error::Invalid(format!("generators do not generate {} at weight {:?}", x.name(), x.weight(w))))?;
                for (i, c) in pre.into_iter().enumerate() {
                    s.set(i, j, c);
                }
            }
            sections.push(s);
        }
        let omega = pi.kernel();
        Ok(Presentation { target: x.clone(), generators, parts, p0, pi, omega, sections })
    }

    /// A presentation with generators found greedily: weights are visited in
    /// the canonical order and each basis vector not yet in the generated
    /// submodule becomes a generator. A module `Γ^μ` (all factors divided,
    /// one factor per coordinate) gets its canonical generator instead.
    pub fn greedy(x: &Module<R>) -> Result<Self> {
        let ring = x.ring();
        if let Some(f) = x.formulaic_factors() {
            if f.len() == x.n() && f.iter().all(|p| p.0 == FactorKind::Divided) {
                let mu: Vec<usize> = f.iter().map(|p| p.1).collect();
                let w = x.weight_index(&mu).unwrap();
                let lab: Vec<Vec<usize>> = (0..x.n()).map(|j| (0..x.n()).map(|i| if i == j { mu[j] } else { 0 }).collect()).collect();
                let (_, i) = x.formulaic_index(&lab).unwrap();
                let mut e = vec![ring.zero(); x.weight_rank(w)];
                e[i] = ring.one();
                return Self::from_generators(x, vec![(w, e)]);
            }
        }
        let mut gens = Vec::new();
        let mut span = GradedLattice::zero(ring, x.ranks());
        for w in 0..x.num_weights() {
            let k = x.weight_rank(w);
            for i in 0..k {
                let mut e = vec![ring.zero(); k];
                e[i] = ring.one();
                if span.part(w).contains(&e) {
                    continue;
                }
                let g = single_weight(x, w, Lattice::from_rows(ring, k, vec![e.clone()]));
                span = span.sum(&generate(x, &g));
                gens.push((w, e));
            }
        }
        Self::from_generators(x, gens)
    }

    pub fn target(&self) -> &Module<R> {
        &self.target
    }

    pub fn generators(&self) -> &[(usize, Vec<R::El>)] {
        &self.generators
    }

    pub fn p0(&self) -> &Module<R> {
        &self.p0
    }

    pub fn pi(&self) -> &ModuleMap<R> {
        &self.pi
    }

    pub fn omega(&self) -> &GradedLattice<R> {
        &self.omega
    }

    /// Weight of each generator.
    pub fn generator_weights(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.0).collect()
    }

    /// Offsets of the unknowns `y_k ∈ Y_{μ_k}` in a stacked vector.
    pub fn unknown_offsets(&self, y: &PolyModule<R>) -> Vec<usize> {
        let mut off = vec![0];
        for (w, _) in &self.generators {
            off.push(off.last().unwrap() + y.weight_rank(*w));
        }
        off
    }

    /// Matrix `P₀_ν → Y_ν` of the map sending generator `k` to `y_k`.
    pub fn extend_block(&self, y: &PolyModule<R>, ys: &[Vec<R::El>], w: usize) -> Matrix<R::El> {
        let ring = y.ring();
        let mut cols = Vec::with_capacity(self.p0.weight_rank(w));
        for (k, part) in self.parts.iter().enumerate() {
            for labels in part.formulaic_labels(w).unwrap() {
                let b = divided_basis_matrix(labels);
                cols.push(y.action(&b).mul_vec(ring, &ys[k]));
            }
        }
        Matrix::from_rows(y.weight_rank(w), cols).transpose()
    }

    /// The map `P₀ → Y` determined by the images of the generators.
    pub fn extend(&self, y: &Module<R>, ys: &[Vec<R::El>]) -> Result<ModuleMap<R>> {
        let blocks = (0..y.num_weights()).map(|w| self.extend_block(y, ys, w)).collect();
        ModuleMap::new(&self.p0, y, blocks)
    }

    /// The map `X → Y` induced by a map `P₀ → Y` that vanishes on `Ω`.
    pub fn descend(&self, phi: &ModuleMap<R>) -> Result<ModuleMap<R>> {
        let ring = phi.ring();
        for w in 0..self.omega.parts().len() {
            let o = self.omega.part(w);
            for i in 0..o.rank() {
                if phi.block(w).mul_vec(ring, o.basis().row(i)).iter().any(|c| !ring.is_zero(c)) {
                    return Err(Error::Inconsistent("map does not vanish on the relations".into()));
                }
            }
        }
        let blocks = (0..self.sections.len()).map(|w| phi.block(w).mul(ring, &self.sections[w])).collect();
        ModuleMap::new(&self.target, phi.target(), blocks)
    }

    /// Rows expressing `Σ_k Σ_B c_{k,B} Y(γ_B) y_k` for a vector `c` of `P₀_ν`,
    /// as a matrix acting on the stacked unknowns.
    pub fn relation_rows(&self, y: &PolyModule<R>, w: usize, c: &[R::El]) -> Matrix<R::El> {
        let ring = y.ring();
        let off = self.unknown_offsets(y);
        let mut m = Matrix::zeros(ring, y.weight_rank(w), *off.last().unwrap());
        let mut pos = 0;
        for (k, part) in self.parts.iter().enumerate() {
            for labels in part.formulaic_labels(w).unwrap() {
                let coef = &c[pos];
                pos += 1;
                if ring.is_zero(coef) {
                    continue;
                }
                let act = y.action(&divided_basis_matrix(labels));
                for p in 0..act.rows() {
                    for q in 0..act.cols() {
                        let e = m.get_mut(p, off[k] + q);
                        ring.add_mul_assign(e, coef, act.get(p, q));
                    }
                }
            }
        }
        m
    }
}

/// The map `Γ^μ → Y` sending the canonical generator of `Γ^μ` (one
/// divided power factor per coordinate) to `v ∈ Y_μ`.
pub fn generator_map<R: Ring>(gamma: &Module<R>, y: &Module<R>, v: &[R::El]) -> Result<ModuleMap<R>> {
    let ring = y.ring();
    let blocks = (0..y.num_weights())
        .map(|w| {
            let cols = gamma.formulaic_labels(w).unwrap().iter().map(|l| y.action(&divided_basis_matrix(l)).mul_vec(ring, v)).collect();
            Matrix::from_rows(y.weight_rank(w), cols).transpose()
        })
        .collect();
    ModuleMap::new(gamma, y, blocks)
}

/// Stacks constraint rows, keeping them in echelon form.
struct Constraints<R: Ring> {
    ring: R,
    cols: usize,
    rows: Lattice<R>,
}

impl<R: Ring> Constraints<R> {
    fn new(ring: &R, cols: usize) -> Self {
        Constraints { ring: ring.clone(), cols, rows: Lattice::zero(ring, cols) }
    }

    fn add(&mut self, m: &Matrix<R::El>) {
        if m.rows() == 0 || m.is_zero(&self.ring) {
            return;
        }
        self.rows = self.rows.sum(&Lattice::from_matrix(&self.ring, m));
    }

    fn solutions(&self) -> Lattice<R> {
        if self.rows.is_zero() {
            return Lattice::full(&self.ring, self.cols);
        }
        right_kernel(&self.ring, self.rows.basis())
    }
}

/// Basis of `Hom(X, Y)` computed from a presentation of `X`: the maps are
/// the choices of `y_k ∈ Y_{μ_k}` killed by every relation in `Ω`.
pub fn hom_from_presentation<R: Ring>(p: &Presentation<R>, y: &Module<R>) -> Result<Vec<ModuleMap<R>>> {
    let ring = y.ring();
    let off = p.unknown_offsets(y);
    let total = *off.last().unwrap();
    let mut cons = Constraints::new(ring, total);
    for w in 0..p.omega.parts().len() {
        if y.weight_rank(w) == 0 {
            continue;
        }
        let o = p.omega.part(w);
        for i in 0..o.rank() {
            cons.add(&p.relation_rows(y, w, o.basis().row(i)));
        }
    }
    let sol = cons.solutions();
    let mut out = Vec::with_capacity(sol.rank());
    for s in 0..sol.rank() {
        let v = sol.basis().row(s);
        let ys: Vec<Vec<R::El>> = (0..p.generators.len()).map(|k| v[off[k]..off[k + 1]].to_vec()).collect();
        out.push(p.descend(&p.extend(y, &ys)?)?);
    }
    Ok(out)
}

/// Basis of `Hom(X, Y)`; zero when `X` is zero.
pub fn hom_space<R: Ring>(x: &Module<R>, y: &Module<R>) -> Result<Vec<ModuleMap<R>>> {
    if x.is_zero() || y.is_zero() {
        return Ok(vec![]);
    }
    hom_from_presentation(&Presentation::greedy(x)?, y)
}

/// Basis of `Hom(X, Y)` as the solutions of `Y(A) φ_μ = φ_λ X(A)` over a
/// generating set, with the blocks `φ_μ` as unknowns.
pub fn hom_space_equivariance<R: Ring>(x: &Module<R>, y: &Module<R>, set: Generators) -> Result<Vec<ModuleMap<R>>> {
    let ring = x.ring();
    let basis = x.algebra_basis();
    let nw = x.num_weights();
    let mut off = vec![0];
    for w in 0..nw {
        off.push(off[w] + y.weight_rank(w) * x.weight_rank(w));
    }
    let total = off[nw];
    let mut cons = Constraints::new(ring, total);
    for a in set.matrices(x) {
        let (l, m) = (basis.row_weight(&a), basis.col_weight(&a));
        let (xm, yl) = (x.weight_rank(m), y.weight_rank(l));
        if xm == 0 || yl == 0 {
            continue;
        }
        let (ym, xl) = (y.weight_rank(m), x.weight_rank(l));
        let ya = y.action(&a);
        let xa = x.action(&a);
        let mut eq = Matrix::zeros(ring, yl * xm, total);
        for p in 0..yl {
            for q in 0..xm {
                let row = p * xm + q;
                for s in 0..ym {
                    let c = ya.get(p, s);
                    if !ring.is_zero(c) {
                        let e = eq.get_mut(row, off[m] + s * xm + q);
                        *e = ring.add(e, c);
                    }
                }
                for s in 0..xl {
                    let c = xa.get(s, q);
                    if !ring.is_zero(c) {
                        let e = eq.get_mut(row, off[l] + p * xl + s);
                        *e = ring.sub(e, c);
                    }
                }
            }
        }
        cons.add(&eq);
    }
    let sol = cons.solutions();
    (0..sol.rank())
        .map(|s| {
            let v = sol.basis().row(s);
            let blocks = (0..nw)
                .map(|w| Matrix::from_vec(y.weight_rank(w), x.weight_rank(w), v[off[w]..off[w + 1]].to_vec()))
                .collect();
            ModuleMap::new(x, y, blocks)
        })
        .collect()
}

/// An isomorphism `X → Y` among elements of `Hom(X, Y)`, if one is found.
///
/// Tries the basis maps, their sum, every combination with coefficients in
/// `{-1, 0, 1}` when `Hom` has rank at most 8, and then seeded random
/// combinations with small coefficients. A `None` is conclusive only when the weight
/// ranks differ or `Hom` is zero.
pub fn find_iso<R: Ring>(x: &Module<R>, y: &Module<R>) -> Result<Option<ModuleMap<R>>> {
    if x.ranks() != y.ranks() {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(ModuleMap::zero(x, y)));
    }
    let hom = hom_space(x, y)?;
    Ok(iso_among(&hom))
}

pub fn iso_among<R: Ring>(hom: &[ModuleMap<R>]) -> Option<ModuleMap<R>> {
    let first = hom.first()?;
    let ring = first.ring().clone();
    for f in hom {
        if f.is_iso() {
            return Some(f.clone());
        }
    }
    let mut sum = first.clone();
    for f in &hom[1..] {
        sum = sum.add(f);
    }
    if sum.is_iso() {
        return Some(sum);
    }
    if hom.len() <= 8 {
        let mut odo = vec![0usize; hom.len()];
        let lens = vec![3; hom.len()];
        while advance(&mut odo, &lens) {
            let mut acc = ModuleMap::zero(first.source(), first.target());
            for (f, &c) in hom.iter().zip(&odo) {
                if c != 0 {
                    acc = acc.add(&f.scale(&ring.from_i64(if c == 1 { 1 } else { -1 })));
                }
            }
            if acc.is_iso() {
                return Some(acc);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..64 {
        let mut acc = ModuleMap::zero(first.source(), first.target());
        for f in hom {
            let c = ring.from_i64(rng.gen_range(-3..=3));
            acc = acc.add(&f.scale(&c));
        }
        if acc.is_iso() {
            return Some(acc);
        }
    }
    None
}
