use crate::combinat::Partition;
use crate::exactla::{Lattice, Ring, RingSpec};
use crate::polyfun::{generate, hom_space, quotient, reject, single_weight, GradedLattice, Module};
use crate::{Error, Result};

use super::standard::{standard_object, StandardObject};

/// `L(λ) = Δ(λ) / U(λ)` over a field.
#[derive(Clone, Debug)]
pub struct SimpleHead<R: Ring> {
    pub lambda: Partition,
    pub standard: StandardObject<R>,
    /// The largest submodule of `Δ(λ)` with zero weight space at `λ`.
    pub radical: GradedLattice<R>,
    pub module: Module<R>,
}

/// Over a field `Δ(λ)_λ` is a line generating `Δ(λ)`, so a submodule is
/// proper exactly when its `λ`-weight space vanishes. The largest such
/// submodule is the common kernel of all `γ_B` with row sums `λ`.
pub fn simple_head<R: Ring>(lambda: &Partition, n: usize, ring: &R) -> Result<SimpleHead<R>> {
    if !ring.is_field() {
        return Err(Error::NotAField(format!("L{lambda} is only computed over fields")));
    }
    let standard = standard_object(lambda, n, ring)?;
    let delta = standard.quotient.clone();
    let radical = match lambda.padded(n) {
        Some(top) => reject(&delta, &top),
        None => GradedLattice::zero(ring, delta.ranks()),
    };
    let module = quotient(&delta, radical.clone(), format!("L{lambda}"))?;
    Ok(SimpleHead { lambda: lambda.clone(), standard, radical, module })
}

/// Exhaustive bound on the number of vectors tried per weight space.
const BRUTE_FORCE_LIMIT: u64 = 1 << 14;

/// Whether `x` is simple.
///
/// Over `𝔽_p` every nonzero weight vector is tried as a generator. Over
/// `ℚ` the category is semisimple, so a nonzero module is simple exactly
/// when its endomorphisms are one-dimensional. Fails when the search would
/// be too large or the ring is not a field.
pub fn is_simple<R: Ring>(x: &Module<R>) -> Result<bool> {
    if x.is_zero() {
        return Ok(false);
    }
    match x.ring().spec() {
        RingSpec::Rationals => Ok(hom_space(x, x)?.len() == 1),
        RingSpec::PrimeField(p) => {
            let ring = x.ring();
            let full = GradedLattice::full(ring, x.ranks());
            for w in 0..x.num_weights() {
                let k = x.weight_rank(w) as u32;
                if k == 0 {
                    continue;
                }
                let count = p.checked_pow(k).filter(|&c| c <= BRUTE_FORCE_LIMIT).ok_or_else(|| {
                    Error::Invalid(format!("weight space of rank {k} over F_{p} is too large to search"))
                })?;
                for code in 1..count {
                    let mut v = Vec::with_capacity(k as usize);
                    let mut c = code;
                    for _ in 0..k {
                        v.push(ring.from_i64((c % p) as i64));
                        c /= p;
                    }
                    let g = single_weight(x, w, Lattice::from_rows(ring, k as usize, vec![v]));
                    if generate(x, &g) != full {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        RingSpec::Integers => Err(Error::NotAField("simplicity is only decided over fields".into())),
    }
}
