use super::graded::GradedLattice;
use super::module::{Module, PolyModule};
use crate::combinat::MarginMatrix;
use crate::exactla::{is_invertible, right_kernel, Lattice, Matrix, Ring};
use crate::{Error, Result};

/// A weight-preserving linear map between two modules, stored as one block
/// `target_μ × source_μ` per weight.
#[derive(Clone, Debug)]
pub struct ModuleMap<R: Ring> {
    source: Module<R>,
    target: Module<R>,
    blocks: Vec<Matrix<R::El>>,
}

/// Which basis elements `γ_A` an equivariance check runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generators {
    /// Every basis element.
    Full,
    /// Weight idempotents and divided powers `E_ij^(r) ξ_μ`.
    Reduced,
}

impl Generators {
    pub fn matrices(self, module: &PolyModule<impl Ring>) -> Vec<MarginMatrix> {
        match self {
            Generators::Full => module.algebra_basis().elements().to_vec(),
            Generators::Reduced => module.algebra_basis().reduced_generators(),
        }
    }
}

impl<R: Ring> ModuleMap<R> {
    pub fn new(source: &Module<R>, target: &Module<R>, blocks: Vec<Matrix<R::El>>) -> Result<Self> {
        if source.n() != target.n() || source.d() != target.d() {
            return Err(Error::Invalid(format!("{} and {} live over different algebras", source.name(), target.name())));
        }
        for (w, b) in blocks.iter().enumerate() {
            if b.rows() != target.weight_rank(w) || b.cols() != source.weight_rank(w) {
                return Err(Error::Invalid(format!("block at weight {:?} has the wrong shape", source.weight(w))));
            }
        }
        Ok(ModuleMap { source: source.clone(), target: target.clone(), blocks })
    }

    pub fn zero(source: &Module<R>, target: &Module<R>) -> Self {
        let r = source.ring();
        let blocks = (0..source.num_weights()).map(|w| Matrix::zeros(r, target.weight_rank(w), source.weight_rank(w))).collect();
        ModuleMap { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn identity(m: &Module<R>) -> Self {
        let r = m.ring();
        let blocks = (0..m.num_weights()).map(|w| Matrix::identity(r, m.weight_rank(w))).collect();
        ModuleMap { source: m.clone(), target: m.clone(), blocks }
    }

    /// Builds the map column by column: `f(w, j)` lists the image of the
    /// `j`-th basis vector of weight `w` as `(target index, coefficient)`.
    pub fn from_fn(source: &Module<R>, target: &Module<R>, mut f: impl FnMut(usize, usize) -> Vec<(usize, R::El)>) -> Result<Self> {
        let r = source.ring();
        let mut blocks = Vec::with_capacity(source.num_weights());
        for w in 0..source.num_weights() {
            let mut b = Matrix::zeros(r, target.weight_rank(w), source.weight_rank(w));
            for j in 0..source.weight_rank(w) {
                for (i, c) in f(w, j) {
                    let e = b.get_mut(i, j);
                    *e = r.add(e, &c);
                }
            }
            blocks.push(b);
        }
        Self::new(source, target, blocks)
    }

    pub fn source(&self) -> &Module<R> {
        &self.source
    }

    pub fn target(&self) -> &Module<R> {
        &self.target
    }

    pub fn block(&self, w: usize) -> &Matrix<R::El> {
        &self.blocks[w]
    }

    pub fn blocks(&self) -> &[Matrix<R::El>] {
        &self.blocks
    }

    pub fn ring(&self) -> &R {
        self.source.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero(self.ring()))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap<R>) -> Result<Self> {
        if !std::sync::Arc::ptr_eq(&self.target, &other.source) && self.target.ranks() != other.source.ranks() {
            return Err(Error::Invalid("maps do not compose".into()));
        }
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| b.mul(self.ring(), a)).collect();
        Ok(ModuleMap { source: self.source.clone(), target: other.target.clone(), blocks })
    }

    pub fn add(&self, other: &ModuleMap<R>) -> Self {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(self.ring(), b)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn scale(&self, c: &R::El) -> Self {
        let blocks = self.blocks.iter().map(|a| a.scale(self.ring(), c)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    /// The same matrices viewed between other modules with equal ranks.
    pub fn retarget(&self, source: &Module<R>, target: &Module<R>) -> Result<Self> {
        Self::new(source, target, self.blocks.clone())
    }

    /// The map `Y° → X°` with transposed blocks.
    pub fn dual(&self, source_dual: &Module<R>, target_dual: &Module<R>) -> Result<Self> {
        Self::new(target_dual, source_dual, self.blocks.iter().map(|b| b.transpose()).collect())
    }

    pub fn kernel(&self) -> GradedLattice<R> {
        GradedLattice::new(self.blocks.iter().map(|b| right_kernel(self.ring(), b)).collect())
    }

    pub fn image(&self) -> GradedLattice<R> {
        GradedLattice::new(
            self.blocks.iter().map(|b| if b.cols() == 0 { Lattice::zero(self.ring(), b.rows()) } else { Lattice::from_matrix(self.ring(), &b.transpose()) }).collect(),
        )
    }

    /// Image of a graded lattice of the source.
    pub fn image_of(&self, l: &GradedLattice<R>) -> GradedLattice<R> {
        GradedLattice::new(self.blocks.iter().zip(l.parts()).map(|(b, p)| p.image(b)).collect())
    }

    pub fn rank(&self) -> usize {
        self.image().rank()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    /// Every block square and invertible over the ring.
    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| is_invertible(self.ring(), b))
    }

    pub fn is_surjective(&self) -> bool {
        let r = self.ring();
        self.image().parts().iter().zip(self.target.ranks()).all(|(l, &t)| *l == Lattice::full(r, t))
    }

    /// First generator `A` with `Y(A) φ ≠ φ X(A)`, if any.
    pub fn equivariance_failure(&self, gens: Generators) -> Option<MarginMatrix> {
        let r = self.ring();
        let basis = self.source.algebra_basis();
        for a in gens.matrices(&self.source) {
            let (row, col) = (basis.row_weight(&a), basis.col_weight(&a));
            if self.source.weight_rank(col) == 0 || self.target.weight_rank(row) == 0 {
                continue;
            }
            let lhs = self.target.action(&a).mul(r, &self.blocks[col]);
            let rhs = self.blocks[row].mul(r, &self.source.action(&a));
            if lhs != rhs {
                return Some(a);
            }
        }
        None
    }

    pub fn is_equivariant(&self, gens: Generators) -> bool {
        self.equivariance_failure(gens).is_none()
    }

    /// The map induced on subquotients `X' → Y'` of the source and target.
    ///
    /// Requires `φ(top_X') ⊂ top_Y'` and `φ(bottom_X') ⊂ bottom_Y'`.
    pub fn induced(&self, sx: &Module<R>, sy: &Module<R>) -> Result<Self> {
        let r = self.ring();
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for w in 0..self.blocks.len() {
            let (bx, by) = (sx.bottom().unwrap().part(w), sy.bottom().unwrap().part(w));
            for i in 0..bx.rank() {
                if !by.contains(&self.blocks[w].mul_vec(r, bx.basis().row(i))) {
                    return Err(Error::Inconsistent("map does not send bottom into bottom".into()));
                }
            }
            let reps = sx.reps(w).unwrap();
            let mut b = Matrix::zeros(r, sy.weight_rank(w), sx.weight_rank(w));
            for j in 0..reps.rows() {
                let y = self.blocks[w].mul_vec(r, reps.row(j));
                for (i, c) in sy.reduce(w, &y)?.into_iter().enumerate() {
                    b.set(i, j, c);
                }
            }
            blocks.push(b);
        }
        Self::new(sx, sy, blocks)
    }

    /// Flattened matrix over the full bases (weights in canonical order).
    pub fn to_matrix(&self) -> Matrix<R::El> {
        let r = self.ring();
        let mut m = Matrix::zeros(r, self.target.rank(), self.source.rank());
        let (mut ro, mut co) = (0, 0);
        for b in &self.blocks {
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    m.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows();
            co += b.cols();
        }
        m
    }
}

/// Inclusion of a submodule (a subquotient with zero bottom) into its
/// ambient module.
pub fn inclusion<R: Ring>(sub: &Module<R>) -> Result<ModuleMap<R>> {
    let amb = sub.ambient().ok_or_else(|| Error::Invalid(format!("{} is not a subquotient", sub.name())))?;
    if !sub.bottom().unwrap().is_zero() {
        return Err(Error::Invalid(format!("{} has a nonzero bottom", sub.name())));
    }
    let blocks = (0..sub.num_weights()).map(|w| sub.reps(w).unwrap().transpose()).collect();
    ModuleMap::new(sub, amb, blocks)
}

/// Projection from the ambient module onto a quotient (a subquotient with
/// full top).
pub fn projection<R: Ring>(quot: &Module<R>) -> Result<ModuleMap<R>> {
    let amb = quot.ambient().ok_or_else(|| Error::Invalid(format!("{} is not a subquotient", quot.name())))?;
    let r = quot.ring();
    let mut blocks = Vec::new();
    for w in 0..quot.num_weights() {
        let k = amb.weight_rank(w);
        let mut b = Matrix::zeros(r, quot.weight_rank(w), k);
        for j in 0..k {
            let mut e = vec![r.zero(); k];
            e[j] = r.one();
            for (i, c) in quot.reduce(w, &e)?.into_iter().enumerate() {
                b.set(i, j, c);
            }
        }
        blocks.push(b);
    }
    ModuleMap::new(amb, quot, blocks)
}

/// The map `X → Y'` through which `φ : X → Y` factors, for a submodule
/// `Y'` of `Y` with zero bottom containing the image of `φ`.
pub fn corestrict<R: Ring>(phi: &ModuleMap<R>, sub: &Module<R>) -> Result<ModuleMap<R>> {
    let r = phi.ring();
    let top = sub.top().ok_or_else(|| Error::Invalid(format!("{} is not a subquotient", sub.name())))?;
    if !sub.bottom().unwrap().is_zero() {
        return Err(Error::Invalid(format!("{} has a nonzero bottom", sub.name())));
    }
    let mut blocks = Vec::with_capacity(phi.blocks.len());
    for (w, b) in phi.blocks.iter().enumerate() {
        let mut out = Matrix::zeros(r, sub.weight_rank(w), b.cols());
        for j in 0..b.cols() {
            let c = top.part(w).coords(&b.column(j)).ok_or_else(|| Error::Inconsistent(format!("image of {} leaves {}", phi.source.name(), sub.name())))?;
            for (i, x) in c.into_iter().enumerate() {
                out.set(i, j, x);
            }
        }
        blocks.push(out);
    }
    ModuleMap::new(&phi.source, sub, blocks)
}

/// The map `X_1 ⊕ ⋯ ⊕ X_m → Y` restricting to the given maps on the
/// summands of `source`.
pub fn from_summands<R: Ring>(source: &Module<R>, maps: &[ModuleMap<R>]) -> Result<ModuleMap<R>> {
    let target = maps.first().ok_or_else(|| Error::Invalid("no summands".into()))?.target.clone();
    let mut blocks = Vec::with_capacity(source.num_weights());
    for w in 0..source.num_weights() {
        let b = maps[1..].iter().fold(maps[0].blocks[w].clone(), |acc, m| acc.hstack(&m.blocks[w]));
        blocks.push(b);
    }
    ModuleMap::new(source, &target, blocks)
}
