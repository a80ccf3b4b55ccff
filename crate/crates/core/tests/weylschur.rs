use schurweyl::combinat::{compositions, dominance_leq, partitions, Partition};
use schurweyl::exactla::{Integers, Lattice, PrimeField, Rationals, Ring};
use schurweyl::polyfun::*;
use schurweyl::weylschur::*;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// `Π_{(i,j) ∈ λ} (n + j − i) / hook(i, j)`, computed with a running
/// fraction.
fn hook_content(lambda: &[usize], n: usize) -> u128 {
    let conj: Vec<usize> = (0..lambda.first().copied().unwrap_or(0)).map(|j| lambda.iter().filter(|&&r| r > j).count()).collect();
    let (mut num, mut den) = (1i128, 1i128);
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            num *= n as i128 + j as i128 - i as i128;
            den *= ((row - j) + (conj[j] - i) - 1) as i128;
        }
    }
    assert_eq!(num % den, 0);
    (num / den).max(0) as u128
}

#[test]
fn weyl_small_ranks() {
    let z = Integers;
    assert_eq!(weyl(&p(&[2, 1]), 2, &z).unwrap().module.rank(), 2);
    assert_eq!(weyl(&p(&[1, 1, 1]), 2, &z).unwrap().module.rank(), 0);
    for n in 1..=4 {
        for d in 1..=n {
            let w = weyl(&Partition::column(d), n, &z).unwrap();
            assert_eq!(w.module.rank() as u64, schurweyl::combinat::binomial(n, d));
            assert!(find_iso(&w.module, &exterior(&z, n, &[d])).unwrap().is_some());
        }
    }
}

#[test]
fn weyl_ranks_match_hook_content() {
    for d in 1..=4 {
        for lambda in partitions(d) {
            for n in 1..=4 {
                let w = weyl(&lambda, n, &Integers).unwrap();
                assert_eq!(w.module.rank() as u128, hook_content(lambda.parts(), n), "{lambda} n={n}");
                assert_eq!(w.tableau_basis.len(), w.module.rank());
            }
        }
    }
}

#[test]
fn tableau_images_form_bases() {
    let f2 = PrimeField::new(2).unwrap();
    for d in 1..=4 {
        for lambda in partitions(d) {
            let n = 3;
            assert!(weyl(&lambda, n, &Integers).unwrap().tableaux_form_basis(), "W{lambda}");
            assert!(weyl(&lambda, n, &f2).unwrap().tableaux_form_basis(), "W{lambda} mod 2");
            assert!(schur_module(&lambda, n, &Integers).unwrap().tableaux_form_basis(), "S{lambda}");
        }
    }
}

#[test]
fn schur_modules() {
    let z = Integers;
    for d in 1..=3 {
        let n = 3;
        let col = schur_module(&Partition::column(d), n, &z).unwrap();
        assert!(find_iso(&col.module, &exterior(&z, n, &[d])).unwrap().is_some());
        let row = schur_module(&Partition::row(d), n, &z).unwrap();
        assert!(find_iso(&row.module, &symmetric(&z, n, &[d])).unwrap().is_some());
    }
    let s = schur_module(&p(&[2, 1]), 2, &z).unwrap();
    assert_eq!(s.module.rank(), 2);
    for lambda in partitions(3) {
        let w = weyl(&lambda, 3, &z).unwrap();
        let s = schur_module(&lambda, 3, &z).unwrap();
        assert!(find_iso(&PolyModule::dual(&w.module), &s.module).unwrap().is_some(), "{lambda}");
    }
}

#[test]
fn weyl_hom_from_divided_powers() {
    let q = Rationals;
    for d in 1..=3 {
        let n = d;
        for lambda in partitions(d) {
            let w = weyl(&lambda, n, &q).unwrap();
            for mu in partitions(d) {
                let h = hom_space(&divided(&q, n, &mu.padded(n).unwrap()), &w.module).unwrap();
                assert_eq!(!h.is_empty(), dominance_leq(mu.parts(), lambda.parts()).unwrap(), "{mu} → W{lambda}");
                if mu == lambda {
                    assert_eq!(h.len(), 1);
                }
            }
        }
    }
}

#[test]
fn standard_objects_small() {
    let z = Integers;
    for d in 1..=3 {
        let s = standard_object(&Partition::row(d), 2, &z).unwrap();
        assert!(s.u.is_zero());
        assert_eq!(s.quotient.rank(), s.gamma.rank());
    }
    let s = standard_object(&p(&[1, 1]), 2, &z).unwrap();
    assert_eq!(s.u.rank(), 3);
    assert_eq!(s.quotient.rank(), 1);
    assert!(find_iso(s.module(), &exterior(&z, 2, &[2])).unwrap().is_some());
}

#[test]
fn standard_objects_match_weyl_modules() {
    let f3 = PrimeField::new(3).unwrap();
    for d in 1..=3 {
        for lambda in partitions(d) {
            let s = standard_object(&lambda, d, &Integers).unwrap();
            let w = weyl(&lambda, d, &Integers).unwrap();
            let c = s.comparison(&w).unwrap();
            assert!(c.is_iso() && c.is_equivariant(Generators::Reduced), "{lambda}");
            assert!(s.weight_quotients().iter().all(|q| q.invariant_factors.is_empty()));
            assert_eq!(hom_space(s.module(), s.module()).unwrap().len(), 1);
            let s3 = standard_object(&lambda, d, &f3).unwrap();
            assert!(s3.comparison(&weyl(&lambda, d, &f3).unwrap()).unwrap().is_iso());
        }
    }
}

#[test]
fn presentation_relations() {
    let data = presentation(&p(&[2, 1]));
    assert_eq!(data.relations.len(), 1);
    assert_eq!(data.relations[0].0, vec![3, 0]);
    assert_eq!(data.relations[0].1.to_rows(), vec![vec![2, 0], vec![1, 0]]);
    assert!(presentation(&p(&[3])).relations.is_empty());
    let data = presentation(&p(&[1, 1]));
    assert_eq!(data.relations[0].0, vec![2, 0]);
    assert_eq!(presentation(&p(&[3, 2, 2])).relations.len(), 4);
}

#[test]
fn presentations_realize_standard_objects() {
    let z = Integers;
    let r = realize_presentation(&p(&[2, 1]), 2, &z).unwrap();
    assert_eq!(r.p0.rank(), 6);
    assert_eq!(r.image.rank(), 4);
    assert_eq!(r.cokernel.rank(), 2);
    assert_eq!(realize_presentation(&p(&[1, 1]), 2, &z).unwrap().cokernel.rank(), 1);
    for d in 1..=4 {
        for lambda in partitions(d) {
            let r = realize_presentation(&lambda, d, &z).unwrap();
            let s = standard_object(&lambda, d, &z).unwrap();
            assert_eq!(r.image, s.u, "{lambda}");
            if let Some(alpha) = &r.alpha {
                assert!(alpha.is_equivariant(Generators::Reduced));
            }
        }
    }
}

#[test]
fn costandard_objects() {
    let z = Integers;
    let n = 2;
    assert_eq!(costandard_object(&p(&[2]), n, &z).unwrap().rank(), symmetric(&z, n, &[2]).rank());
    assert_eq!(costandard_object(&p(&[1, 1]), n, &z).unwrap().rank(), 1);
    for d in 1..=3 {
        for lambda in partitions(d) {
            let nabla = costandard_object(&lambda, d, &z).unwrap();
            let delta = standard_object(&lambda, d, &z).unwrap();
            assert!(find_iso(&nabla, &PolyModule::dual(delta.module())).unwrap().is_some(), "{lambda}");
            assert!(find_iso(&nabla, &schur_module(&lambda, d, &z).unwrap().module).unwrap().is_some());
            assert_eq!(hom_space(delta.module(), &nabla).unwrap().len(), 1);
        }
    }
}

/// Sum of all proper submodules generated by single vectors, by
/// enumeration over `𝔽_p`.
fn brute_force_radical(x: &Module<PrimeField>) -> GradedLattice<PrimeField> {
    let f = x.ring().clone();
    let p = f.modulus();
    let full = GradedLattice::full(&f, x.ranks());
    let mut rad = GradedLattice::zero(&f, x.ranks());
    let total = x.rank() as u32;
    for code in 1..p.pow(total) {
        let mut c = code;
        let mut parts = Vec::new();
        for w in 0..x.num_weights() {
            let k = x.weight_rank(w);
            let v: Vec<_> = (0..k)
                .map(|_| {
                    let e = f.from_i64((c % p) as i64);
                    c /= p;
                    e
                })
                .collect();
            parts.push(Lattice::from_rows(&f, k, vec![v]));
        }
        let sub = generate_fixpoint(x, &GradedLattice::new(parts), Generators::Full);
        if sub != full {
            rad = rad.sum(&sub);
        }
    }
    rad
}

#[test]
fn simple_heads() {
    let f2 = PrimeField::new(2).unwrap();
    let l = simple_head(&p(&[2]), 2, &f2).unwrap();
    assert_eq!(l.module.rank(), 2);
    assert_eq!(l.radical, brute_force_radical(l.standard.module()));
    assert!(is_simple(&l.module).unwrap());
    assert_eq!(simple_head(&p(&[1, 1]), 2, &f2).unwrap().module.rank(), 1);
    assert_eq!(simple_head(&p(&[1, 1]), 2, &Rationals).unwrap().module.rank(), 1);
    assert!(simple_head(&p(&[1]), 1, &Integers).is_err());
    for d in 1..=3 {
        for lambda in partitions(d) {
            let l = simple_head(&lambda, d, &Rationals).unwrap();
            assert!(l.radical.is_zero(), "{lambda}");
            assert!(is_simple(&l.module).unwrap());
        }
    }
}

#[test]
fn simple_heads_mod_p() {
    for pr in [2, 3] {
        let f = PrimeField::new(pr).unwrap();
        for d in 1..=3 {
            let heads: Vec<_> = partitions(d).iter().map(|lambda| simple_head(lambda, d, &f).unwrap()).collect();
            for l in &heads {
                if l.standard.module().rank() <= 6 {
                    assert_eq!(l.radical, brute_force_radical(l.standard.module()), "{} mod {pr}", l.lambda);
                }
                assert!(is_simple(&l.module).unwrap());
                assert!(find_iso(&PolyModule::dual(&l.module), &l.module).unwrap().is_some());
            }
            for (i, a) in heads.iter().enumerate() {
                for b in &heads[i + 1..] {
                    assert!(find_iso(&a.module, &b.module).unwrap().is_none());
                }
            }
        }
    }
}

#[test]
fn weight_spaces_of_weyl_modules_are_kostka_numbers() {
    for lambda in partitions(3) {
        let w = weyl(&lambda, 3, &Integers).unwrap();
        for mu in compositions(3, 3) {
            let k = schurweyl::combinat::kostka(&lambda, &mu).unwrap();
            assert_eq!(w.module.weight_space(&mu).unwrap().len(), k);
        }
    }
}
