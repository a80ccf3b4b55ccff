//! Submodule generation, traces and rejects.

use super::graded::GradedLattice;
use super::map::Generators;
use super::module::{Module, PolyModule};
use crate::exactla::{right_kernel, Lattice, Matrix, Ring};
use crate::Result;

/// `span{ γ_B v : v ∈ gens, B any basis element }`.
///
/// The span of all `γ_B v` is closed under the action because the `γ_B`
/// span the algebra, so one pass suffices.
pub fn generate<R: Ring>(x: &PolyModule<R>, gens: &GradedLattice<R>) -> GradedLattice<R> {
    let ring = x.ring();
    let basis = x.algebra_basis();
    let nw = x.num_weights();
    let mut parts = Vec::with_capacity(nw);
    for l in 0..nw {
        let mut acc = Lattice::zero(ring, x.weight_rank(l));
        if x.weight_rank(l) > 0 {
            for m in 0..nw {
                let g = gens.part(m);
                if g.is_zero() {
                    continue;
                }
                let mut rows = Vec::new();
                for b in basis.margins(l, m).iter() {
                    let act = x.action(b);
                    for i in 0..g.rank() {
                        rows.push(act.mul_vec(ring, g.basis().row(i)));
                    }
                }
                acc = acc.sum(&Lattice::from_rows(ring, x.weight_rank(l), rows));
            }
        }
        parts.push(acc);
    }
    GradedLattice::new(parts)
}

/// Closure under a generating set by iterating to a fixpoint.
pub fn generate_fixpoint<R: Ring>(x: &PolyModule<R>, gens: &GradedLattice<R>, set: Generators) -> GradedLattice<R> {
    let ring = x.ring();
    let basis = x.algebra_basis();
    let mats = set.matrices(x);
    let mut cur = gens.clone();
    loop {
        let mut next = cur.clone();
        for a in &mats {
            let (l, m) = (basis.row_weight(a), basis.col_weight(a));
            let g = cur.part(m);
            if g.is_zero() || x.weight_rank(l) == 0 {
                continue;
            }
            let act = x.action(a);
            let rows: Vec<Vec<R::El>> = (0..g.rank()).map(|i| act.mul_vec(ring, g.basis().row(i))).collect();
            let p = next.part(l).add_vectors(&rows);
            next.set_part(l, p);
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// A graded lattice concentrated in one weight.
pub fn single_weight<R: Ring>(x: &PolyModule<R>, w: usize, l: Lattice<R>) -> GradedLattice<R> {
    let mut g = GradedLattice::zero(x.ring(), x.ranks());
    g.set_part(w, l);
    g
}

/// Submodule generated by the weight space `X_μ`.
pub fn trace<R: Ring>(x: &PolyModule<R>, mu: &[usize]) -> GradedLattice<R> {
    match x.weight_index(mu) {
        Some(w) => generate(x, &single_weight(x, w, Lattice::full(x.ring(), x.weight_rank(w)))),
        None => GradedLattice::zero(x.ring(), x.ranks()),
    }
}

/// Common kernel of all maps `X → S^μ`: at weight `ν` the vectors killed
/// by every `γ_B` with row sums `μ` and column sums `ν`.
pub fn reject<R: Ring>(x: &PolyModule<R>, mu: &[usize]) -> GradedLattice<R> {
    let ring = x.ring();
    let Some(m) = x.weight_index(mu) else {
        return GradedLattice::full(ring, x.ranks());
    };
    let basis = x.algebra_basis();
    let parts = (0..x.num_weights())
        .map(|v| {
            let k = x.weight_rank(v);
            if x.weight_rank(m) == 0 || k == 0 {
                return Lattice::full(ring, k);
            }
            let mut stacked = Matrix::from_rows(k, vec![]);
            for b in basis.margins(m, v).iter() {
                stacked = stacked.vstack(&x.action(b));
            }
            right_kernel(ring, &stacked)
        })
        .collect();
    GradedLattice::new(parts)
}

/// Annihilator of a graded lattice of `X°` inside `X`, weight by weight.
pub fn annihilator<R: Ring>(l: &GradedLattice<R>) -> GradedLattice<R> {
    GradedLattice::new(
        l.parts()
            .iter()
            .map(|p| {
                if p.is_zero() {
                    Lattice::full(p.ring(), p.ambient_rank())
                } else {
                    right_kernel(p.ring(), p.basis())
                }
            })
            .collect(),
    )
}

/// Whether a graded lattice is stable under the given generators.
pub fn is_submodule<R: Ring>(x: &PolyModule<R>, l: &GradedLattice<R>, set: Generators) -> bool {
    let ring = x.ring();
    let basis = x.algebra_basis();
    set.matrices(x).iter().all(|a| {
        let (r, c) = (basis.row_weight(a), basis.col_weight(a));
        let act = x.action(a);
        (0..l.part(c).rank()).all(|i| l.part(r).contains(&act.mul_vec(ring, l.part(c).basis().row(i))))
    })
}

pub fn submodule<R: Ring>(x: &Module<R>, top: GradedLattice<R>, name: String) -> Result<Module<R>> {
    let reps = top.parts().iter().map(|l| l.basis().clone()).collect();
    let zero = GradedLattice::zero(x.ring(), x.ranks());
    PolyModule::subquotient(x, top, zero, Some(reps), None, name)
}

pub fn quotient<R: Ring>(x: &Module<R>, bottom: GradedLattice<R>, name: String) -> Result<Module<R>> {
    let full = GradedLattice::full(x.ring(), x.ranks());
    PolyModule::subquotient(x, full, bottom, None, None, name)
}
