use crate::exactla::{Lattice, Ring};

/// One lattice per weight of `Λ(n, d)`, inside the matching weight space of
/// a module.
#[derive(Clone, Debug)]
pub struct GradedLattice<R: Ring> {
    parts: Vec<Lattice<R>>,
}

impl<R: Ring> PartialEq for GradedLattice<R> {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl<R: Ring> Eq for GradedLattice<R> {}

impl<R: Ring> GradedLattice<R> {
    pub fn new(parts: Vec<Lattice<R>>) -> Self {
        GradedLattice { parts }
    }

    pub fn zero(ring: &R, ranks: &[usize]) -> Self {
        GradedLattice { parts: ranks.iter().map(|&r| Lattice::zero(ring, r)).collect() }
    }

    pub fn full(ring: &R, ranks: &[usize]) -> Self {
        GradedLattice { parts: ranks.iter().map(|&r| Lattice::full(ring, r)).collect() }
    }

    pub fn part(&self, w: usize) -> &Lattice<R> {
        &self.parts[w]
    }

    pub fn parts(&self) -> &[Lattice<R>] {
        &self.parts
    }

    pub fn set_part(&mut self, w: usize, l: Lattice<R>) {
        self.parts[w] = l;
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.parts.iter().map(|l| l.rank()).collect()
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().map(|l| l.rank()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|l| l.is_zero())
    }

    pub fn sum(&self, other: &Self) -> Self {
        GradedLattice { parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.sum(b)).collect() }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        GradedLattice { parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.intersect(b)).collect() }
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| a.contains_lattice(b))
    }

    pub fn is_saturated(&self) -> bool {
        self.parts.iter().all(|l| l.is_saturated())
    }
}
