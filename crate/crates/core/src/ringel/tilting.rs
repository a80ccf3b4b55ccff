use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::combinat::Partition;
use crate::exactla::{LeftSolver, Matrix, Ring};
use crate::hwc::{delta_filtration, ext1, lex_descending, nabla_filtration};
use crate::polyfun::{exterior, hom_space, Module, ModuleMap};
use crate::{Error, Result};

fn flatten<R: Ring>(m: &ModuleMap<R>) -> Vec<R::El> {
    m.blocks().iter().flat_map(|b| b.entries().iter().cloned()).collect()
}

/// A basic algebra `End(⊕_s X_s)` with a basis of maps between summands.
#[derive(Clone, Debug)]
pub struct EndAlgebra<R: Ring> {
    /// `(source, target)` summand of each basis map.
    pub slots: Vec<(usize, usize)>,
    pub basis: Vec<ModuleMap<R>>,
    /// `structure[i][j]`: coordinates of `basis[i] ∘ basis[j]`.
    pub structure: Vec<Vec<Vec<R::El>>>,
}

impl<R: Ring> EndAlgebra<R> {
    /// Structure constants for the given per-pair bases; `bases[s][t]`
    /// must be a basis of `Hom(X_s, X_t)` closed under composition.
    pub fn from_bases(ring: &R, bases: Vec<Vec<Vec<ModuleMap<R>>>>) -> Result<Self> {
        let k = bases.len();
        let mut slots = Vec::new();
        let mut basis = Vec::new();
        let mut offset = vec![vec![0; k]; k];
        let mut solvers: Vec<Vec<Option<LeftSolver<R::El>>>> = (0..k).map(|_| (0..k).map(|_| None).collect()).collect();
        for s in 0..k {
            for t in 0..k {
                offset[s][t] = basis.len();
                let maps = &bases[s][t];
                if let Some(first) = maps.first() {
                    let len = flatten(first).len();
                    solvers[s][t] = Some(LeftSolver::new(ring, &Matrix::from_rows(len, maps.iter().map(flatten).collect())));
                }
                for m in maps {
                    slots.push((s, t));
                    basis.push(m.clone());
                }
            }
        }
        let dim = basis.len();
        let structure = (0..dim)
            .into_par_iter()
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let mut coords = vec![ring.zero(); dim];
                        let ((s, t), (t2, u)) = (slots[j], slots[i]);
                        if t != t2 {
                            return Ok(coords);
                        }
                        let prod = basis[j].then(&basis[i])?;
                        if prod.is_zero() {
                            return Ok(coords);
                        }
                        let solver = solvers[s][u].as_ref().ok_or_else(|| Error::Inconsistent("composite in a zero Hom space is nonzero".into()))?;
                        let c = solver.solve(ring, &flatten(&prod)).ok_or_else(|| Error::Inconsistent("composite leaves the span of the basis".into()))?;
                        for (q, x) in c.into_iter().enumerate() {
                            coords[offset[s][u] + q] = x;
                        }
                        Ok(coords)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EndAlgebra { slots, basis, structure })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug)]
pub struct TiltingSummand<R: Ring> {
    pub lambda: Partition,
    pub module: Module<R>,
    pub delta_multiplicities: BTreeMap<Partition, usize>,
    pub nabla_multiplicities: BTreeMap<Partition, usize>,
}

/// `T = ⊕_λ Λ^λ(k^n)` over partitions `λ ⊢ d`, lexicographically
/// descending.
#[derive(Clone, Debug)]
pub struct TiltingObject<R: Ring> {
    pub n: usize,
    pub d: usize,
    pub summands: Vec<TiltingSummand<R>>,
    pub endo_algebra: EndAlgebra<R>,
}

impl<R: Ring> TiltingObject<R> {
    pub fn total_rank(&self) -> usize {
        self.summands.iter().map(|s| s.module.rank()).sum()
    }
}

/// Builds `T`, checking that every summand has `Δ`- and `∇`-filtrations
/// and that `Ext¹(Λ^λ, Λ^μ) = 0` for all pairs.
pub fn tilting_object<R: Ring>(n: usize, d: usize, ring: &R) -> Result<TiltingObject<R>> {
    if n < d {
        return Err(Error::Invalid(format!("tilting_object needs n ≥ d, got n = {n}, d = {d}")));
    }
    let lambdas = lex_descending(d);
    let summands = lambdas
        .par_iter()
        .map(|l| {
            let module = exterior(ring, n, &l.padded(n).unwrap());
            let delta = delta_filtration(&module)?.ok_or_else(|| Error::Inconsistent(format!("Λ^{l} has no Δ-filtration")))?;
            let nabla = nabla_filtration(&module)?.ok_or_else(|| Error::Inconsistent(format!("Λ^{l} has no ∇-filtration")))?;
            Ok(TiltingSummand { lambda: l.clone(), module, delta_multiplicities: delta.multiplicities(), nabla_multiplicities: nabla.multiplicities() })
        })
        .collect::<Result<Vec<_>>>()?;
    let k = summands.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|s| (0..k).map(move |t| (s, t))).collect();
    pairs.par_iter().try_for_each(|&(s, t)| {
        let e = ext1(&summands[s].module, &summands[t].module)?;
        if e.is_zero() {
            Ok(())
        } else {
            Err(Error::Inconsistent(format!("Ext¹(Λ^{}, Λ^{}) = {}", summands[s].lambda, summands[t].lambda, e.describe())))
        }
    })?;
    let flat = pairs.par_iter().map(|&(s, t)| hom_space(&summands[s].module, &summands[t].module)).collect::<Result<Vec<_>>>()?;
    let mut it = flat.into_iter();
    let bases = (0..k).map(|_| (0..k).map(|_| it.next().unwrap()).collect()).collect();
    let endo_algebra = EndAlgebra::from_bases(ring, bases)?;
    Ok(TiltingObject { n, d, summands, endo_algebra })
}
