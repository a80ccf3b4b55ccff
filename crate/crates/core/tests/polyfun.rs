use schurweyl::combinat::{binomial, compositions, margin_matrices, MarginMatrix};
use schurweyl::exactla::{rank, Integers, Matrix, PrimeField, Rationals, Ring};
use schurweyl::polyfun::*;
use schurweyl::schuralg::SchurAlgebra;

fn zz() -> Integers {
    Integers
}

/// `X(A) X(B) = Σ_C c X(C)` for every pair of basis elements.
fn check_multiplicative<R: Ring>(x: &Module<R>) {
    let r = x.ring();
    let s = SchurAlgebra::new(r.clone(), x.n(), x.d());
    let basis = s.basis().clone();
    for (i, a) in basis.elements().iter().enumerate() {
        for (j, b) in basis.elements().iter().enumerate() {
            if basis.col_weight(a) != basis.row_weight(b) {
                continue;
            }
            let (rw, cw) = (basis.row_weight(a), basis.col_weight(b));
            let lhs = x.action(a).mul(r, &x.action(b));
            let mut rhs = Matrix::zeros(r, x.weight_rank(rw), x.weight_rank(cw));
            for &(k, c) in s.structure_constants(i, j).unwrap().iter() {
                rhs = rhs.add(r, &x.action_idx(k).scale(r, &r.from_u64(c)));
            }
            assert_eq!(lhs, rhs, "{}: {:?} * {:?}", x.name(), a, b);
        }
    }
}

fn check_unit<R: Ring>(x: &Module<R>) {
    let r = x.ring();
    for (w, mu) in x.algebra_basis().weights().iter().enumerate() {
        assert_eq!(*x.action(&MarginMatrix::diagonal(mu)), Matrix::identity(r, x.weight_rank(w)));
    }
}

fn samples<R: Ring>(r: &R, n: usize) -> Vec<Module<R>> {
    let t1 = tensor_power(r, n, 1);
    vec![
        divided(r, n, &[2]),
        symmetric(r, n, &[2]),
        exterior(r, n, &[2]),
        tensor_power(r, n, 2),
        divided(r, n, &[2, 1]),
        symmetric(r, n, &[1, 2]),
        exterior(r, n, &[2, 1]),
        PolyModule::formulaic(r, n, vec![(FactorKind::Divided, 1), (FactorKind::Exterior, 1), (FactorKind::Symmetric, 1)], "mixed".into()),
        PolyModule::tensor(&divided(r, n, &[2]), &t1).unwrap(),
        PolyModule::dual(&symmetric(r, n, &[3])),
        PolyModule::direct_sum(&[divided(r, n, &[3]), exterior(r, n, &[3])]).unwrap(),
    ]
}

#[test]
fn formulaic_ranks() {
    let r = zz();
    assert_eq!(divided(&r, 1, &[4]).rank(), 1);
    assert_eq!(divided(&r, 2, &[1, 1]).rank(), 4);
    assert_eq!(divided(&r, 2, &[2]).rank(), 3);
    assert_eq!(symmetric(&r, 2, &[2]).rank(), 3);
    assert_eq!(exterior(&r, 2, &[3]).rank(), 0);
    assert!(exterior(&r, 2, &[3]).is_zero());
    assert_eq!(exterior(&r, 4, &[2, 2]).rank(), 36);
    assert_eq!(tensor_power(&r, 3, 3).rank(), 27);
    assert!(divided(&r, 2, &[3]).is_truncated());
    assert!(!divided(&r, 3, &[3]).is_truncated());
}

#[test]
fn divided_ranks_sum_to_algebra_dimension() {
    for n in 1..=4 {
        for d in 1..=4 {
            let total: usize = compositions(n, d).iter().map(|mu| divided(&zz(), n, mu).rank()).sum();
            assert_eq!(total as u64, binomial(n * n + d - 1, d), "n={n} d={d}");
        }
    }
}

#[test]
fn actions_are_multiplicative() {
    for x in samples(&zz(), 2) {
        check_multiplicative(&x);
        check_unit(&x);
    }
    let f = PrimeField::new(3).unwrap();
    for x in samples(&f, 2) {
        check_multiplicative(&x);
    }
}

#[test]
fn actions_are_multiplicative_in_three_variables() {
    for x in [divided(&zz(), 3, &[2]), exterior(&zz(), 3, &[2]), tensor_power(&zz(), 3, 2)] {
        check_multiplicative(&x);
        check_unit(&x);
    }
}

#[test]
fn tensor_power_action_matches_algebra() {
    let r = zz();
    for (n, d) in [(2, 2), (2, 3), (3, 2)] {
        let s = SchurAlgebra::new(r, n, d);
        let t = tensor_power(&r, n, d);
        for a in s.basis().elements() {
            // both are restrictions of the same operator on words
            let full = s.tensor_action(a);
            let (rw, cw) = (s.basis().row_weight(a), s.basis().col_weight(a));
            let rows: Vec<usize> = (0..t.weight_rank(rw)).map(|i| word_index(n, &word_of(t.formulaic_label(rw, i).unwrap()))).collect();
            let cols: Vec<usize> = (0..t.weight_rank(cw)).map(|j| word_index(n, &word_of(t.formulaic_label(cw, j).unwrap()))).collect();
            let block = Matrix::from_fn(rows.len(), cols.len(), |i, j| full.get(rows[i], cols[j]).clone());
            assert_eq!(*t.action(a), block);
        }
    }
}

fn word_index(n: usize, w: &[usize]) -> usize {
    w.iter().fold(0, |acc, &x| acc * n + x)
}

#[test]
fn weight_spaces() {
    let x = divided(&zz(), 2, &[2]);
    assert_eq!(x.weight_space(&[2, 0]).unwrap().len(), 1);
    assert_eq!(x.weight_space(&[1, 1]).unwrap().len(), 1);
    assert!(x.weight_space(&[3, 0]).is_err());
    let summary = tensor_power(&zz(), 2, 2).summary();
    assert_eq!(summary.rank, 4);
    assert_eq!(summary.weights["1,1"], 2);
}

#[test]
fn divided_to_symmetric_square() {
    // Γ²(k²) → S²(k²) is diag(1, 2, 1) in the monomial bases
    let a = MarginMatrix::from_rows(&[vec![2]]);
    let q = Rationals;
    let m = sigma_morphism(&divided(&q, 2, &[2]), &symmetric(&q, 2, &[2]), &a).unwrap();
    assert_eq!(m.to_matrix(), Matrix::from_i64_rows(&q, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]));
    assert_eq!(m.rank(), 3);
    let f = PrimeField::new(2).unwrap();
    let m2 = sigma_morphism(&divided(&f, 2, &[2]), &symmetric(&f, 2, &[2]), &a).unwrap();
    assert_eq!(m2.rank(), 2);
    assert!(m.is_equivariant(Generators::Full));
    assert!(m2.is_equivariant(Generators::Full));
}

#[test]
fn exterior_comultiplication() {
    let r = zz();
    let l = exterior(&r, 2, &[2]);
    let t = tensor_power(&r, 2, 2);
    let m = comult_exterior(&l, &t).unwrap();
    // e1∧e2 ↦ e1⊗e2 − e2⊗e1
    let w = l.weight_index(&[1, 1]).unwrap();
    let col = m.block(w).column(0);
    let mut got: Vec<(Vec<usize>, i64)> = Vec::new();
    for (i, c) in col.iter().enumerate() {
        if !r.is_zero(c) {
            got.push((word_of(t.formulaic_label(w, i).unwrap()), if *c == r.one() { 1 } else { -1 }));
        }
    }
    got.sort();
    assert_eq!(got, vec![(vec![0, 1], 1), (vec![1, 0], -1)]);
    assert!(m.is_equivariant(Generators::Full));
    let back = mult_exterior(&t, &l).unwrap();
    // ∇∘Δ on Λ² is multiplication by 2
    assert_eq!(m.then(&back).unwrap().to_matrix(), Matrix::from_i64_rows(&r, &[&[2]]));
}

#[test]
fn factor_permutation() {
    // σ_(3,2) sends the column reading to the row reading
    assert_eq!(permute_word(&[10, 11, 12, 13, 14], &[1, 4, 2, 5, 3]), vec![10, 13, 11, 14, 12]);
    let r = zz();
    let t = tensor_power(&r, 2, 3);
    let p = permute_factors(&t, &[2, 3, 1]).unwrap();
    assert!(p.is_iso());
    assert!(p.is_equivariant(Generators::Full));
    let p3 = p.then(&p).unwrap().then(&p).unwrap();
    assert_eq!(p3.to_matrix(), Matrix::identity(&r, 8));
}

#[test]
fn gamma_morphisms_of_the_displayed_example() {
    // λ = (5,3,3,2), μ = (1,3,3,2,2,2) over k^6
    let a = MarginMatrix::from_rows(&[vec![1, 2, 2, 0, 0, 0], vec![0, 1, 1, 0, 1, 0], vec![0, 0, 0, 2, 0, 1], vec![0, 0, 0, 0, 1, 1]]);
    assert_eq!(a.row_sums(), vec![5, 3, 3, 2]);
    assert_eq!(a.col_sums(), vec![1, 3, 3, 2, 2, 2]);
    let gen: FactorLabels = a.col_sums().iter().enumerate().map(|(j, &m)| (0..6).map(|k| if k == j { m } else { 0 }).collect()).collect();
    let img = gamma_image(6, &gen, &a);
    let expect: FactorLabels = vec![vec![1, 2, 2, 0, 0, 0], vec![0, 1, 1, 0, 1, 0], vec![0, 0, 0, 2, 0, 1], vec![0, 0, 0, 0, 1, 1]];
    assert_eq!(img, vec![(1, expect)]);
}

#[test]
fn gamma_morphisms_are_equivariant() {
    let r = zz();
    for (lambda, mu) in [(vec![2, 1], vec![1, 2]), (vec![3], vec![1, 1, 1]), (vec![1, 1, 1], vec![2, 1])] {
        let src = divided(&r, 2, &mu);
        let tgt = divided(&r, 2, &lambda);
        let ms = margin_matrices(&lambda, &mu).unwrap();
        let mut maps = Vec::new();
        for a in &ms {
            let g = gamma_morphism(&src, &tgt, a).unwrap();
            assert!(g.is_equivariant(Generators::Full), "{a:?}");
            maps.push(g);
        }
        // the γ_A are independent
        let rows: Vec<Vec<_>> = maps.iter().map(|m| m.to_matrix().entries().to_vec()).collect();
        let cols = rows[0].len();
        assert_eq!(rank(&r, &Matrix::from_rows(cols, rows)), ms.len());
        for a in &ms {
            let s = sigma_morphism(&divided(&r, 2, &mu), &symmetric(&r, 2, &lambda), a).unwrap();
            assert!(s.is_equivariant(Generators::Full));
        }
    }
}

#[test]
fn exterior_morphisms_are_equivariant() {
    let r = zz();
    for (lambda, mu) in [(vec![2, 1], vec![1, 2]), (vec![2], vec![1, 1]), (vec![1, 1, 1], vec![2, 1]), (vec![2, 2], vec![2, 2])] {
        let n = 3;
        let src = exterior(&r, n, &mu);
        let tgt = exterior(&r, n, &lambda);
        for a in margin_matrices(&lambda, &mu).unwrap() {
            let e = exterior_morphism(&src, &tgt, &a).unwrap();
            assert!(e.is_equivariant(Generators::Full), "{a:?} sign {}", koszul_sign(&a));
        }
    }
}

#[test]
fn hom_between_divided_powers_counts_margins() {
    let r = zz();
    for n in 1..=3 {
        for d in 1..=3 {
            for lambda in compositions(n, d) {
                for mu in compositions(n, d) {
                    let x = divided(&r, n, &mu);
                    let y = divided(&r, n, &lambda);
                    let expect = margin_matrices(&lambda, &mu).unwrap().len();
                    let h = hom_space(&x, &y).unwrap();
                    assert_eq!(h.len(), expect, "Γ^{mu:?} → Γ^{lambda:?} at n={n}");
                    for phi in &h {
                        assert!(phi.is_equivariant(Generators::Full));
                    }
                }
            }
        }
    }
}

#[test]
fn hom_routes_agree() {
    let r = zz();
    let xs = samples(&r, 2);
    for x in &xs {
        for y in &xs {
            if x.d() != y.d() {
                continue;
            }
            let a = hom_space(x, y).unwrap();
            let b = hom_space_equivariance(x, y, Generators::Full).unwrap();
            assert_eq!(a.len(), b.len(), "{} → {}", x.name(), y.name());
        }
    }
}

#[test]
fn reduced_generators_suffice() {
    let r = zz();
    for n in [2, 3] {
        let xs = [divided(&r, n, &[2, 1]), symmetric(&r, n, &[3]), exterior(&r, n, &[1, 2]), tensor_power(&r, n, 3)];
        for x in &xs {
            for y in &xs {
                let red = hom_space_equivariance(x, y, Generators::Reduced).unwrap();
                let full = hom_space_equivariance(x, y, Generators::Full).unwrap();
                assert_eq!(red.len(), full.len());
                for phi in &red {
                    assert!(phi.is_equivariant(Generators::Full));
                }
            }
        }
    }
}

#[test]
fn weight_space_is_hom_from_divided() {
    let r = zz();
    for x in samples(&r, 2) {
        for (w, mu) in x.algebra_basis().weights().iter().enumerate() {
            let h = hom_space(&divided(&r, 2, mu), &x).unwrap();
            assert_eq!(h.len(), x.weight_rank(w), "{} at {mu:?}", x.name());
        }
    }
}

#[test]
fn duals() {
    let r = zz();
    for lambda in [vec![2], vec![2, 1], vec![1, 1, 1]] {
        let g = divided(&r, 2, &lambda);
        let s = symmetric(&r, 2, &lambda);
        assert!(find_iso(&PolyModule::dual(&g), &s).unwrap().is_some());
        assert!(find_iso(&PolyModule::dual(&s), &g).unwrap().is_some());
    }
    let l = exterior(&r, 3, &[2]);
    assert!(find_iso(&PolyModule::dual(&l), &l).unwrap().is_some());
    let t = tensor_power(&r, 2, 2);
    assert!(find_iso(&PolyModule::dual(&PolyModule::dual(&t)), &t).unwrap().is_some());
    // Γ² and S² differ over the integers
    assert!(find_iso(&divided(&r, 2, &[2]), &symmetric(&r, 2, &[2])).unwrap().is_none());
}

#[test]
fn dual_of_a_map_is_equivariant() {
    let r = zz();
    let a = MarginMatrix::from_rows(&[vec![1, 1]]);
    let g = gamma_morphism(&divided(&r, 2, &[1, 1]), &divided(&r, 2, &[2]), &a).unwrap();
    let d = g.dual(&PolyModule::dual(g.source()), &PolyModule::dual(g.target())).unwrap();
    assert!(d.is_equivariant(Generators::Full));
}

#[test]
fn traces_and_rejects() {
    let r = zz();
    let t = tensor_power(&r, 2, 2);
    assert_eq!(trace(&t, &[2, 0]).rank(), 3);
    let l = exterior(&r, 2, &[2]);
    assert_eq!(reject(&l, &[2, 0]), GradedLattice::full(&r, l.ranks()));
    assert!(trace(&l, &[2, 0]).is_zero());
    assert!(generate(&t, &GradedLattice::zero(&r, t.ranks())).is_zero());
}

#[test]
fn reject_is_annihilator_of_dual_trace() {
    let r = zz();
    for x in samples(&r, 2) {
        let xd = PolyModule::dual(&x);
        for mu in x.algebra_basis().weights().to_vec() {
            assert_eq!(reject(&x, &mu), annihilator(&trace(&xd, &mu)), "{} at {mu:?}", x.name());
        }
    }
}

#[test]
fn one_pass_generation_reaches_the_fixpoint() {
    let r = zz();
    for x in samples(&r, 2) {
        for (w, _) in x.algebra_basis().weights().iter().enumerate() {
            if x.weight_rank(w) == 0 {
                continue;
            }
            let mut v = vec![r.zero(); x.weight_rank(w)];
            v[0] = r.one();
            let g = single_weight(&x, w, schurweyl::exactla::Lattice::from_rows(&r, v.len(), vec![v]));
            let one = generate(&x, &g);
            assert_eq!(one, generate_fixpoint(&x, &g, Generators::Reduced));
            assert!(is_submodule(&x, &one, Generators::Full));
        }
    }
}

#[test]
fn submodules_and_quotients() {
    let r = zz();
    let t = tensor_power(&r, 2, 2);
    let sub = submodule(&t, trace(&t, &[2, 0]), "T".into()).unwrap();
    check_multiplicative(&sub);
    let inc = inclusion(&sub).unwrap();
    assert!(inc.is_equivariant(Generators::Full) && inc.is_injective());
    let q = quotient(&t, trace(&t, &[2, 0]), "Q".into()).unwrap();
    assert_eq!(q.rank(), 1);
    check_multiplicative(&q);
    let p = projection(&q).unwrap();
    assert!(p.is_equivariant(Generators::Full) && p.is_surjective());
    // the quotient ⊗²/Sym-trace is Λ²
    assert!(find_iso(&q, &exterior(&r, 2, &[2])).unwrap().is_some());
    assert_eq!(hom_space(&q, &t).unwrap().len(), hom_space_equivariance(&q, &t, Generators::Full).unwrap().len());
}

#[test]
fn tensor_of_divided_powers() {
    let r = zz();
    let t = PolyModule::tensor(&divided(&r, 2, &[2]), &divided(&r, 2, &[1])).unwrap();
    check_multiplicative(&t);
    assert!(find_iso(&t, &divided(&r, 2, &[2, 1])).unwrap().is_some());
    let t3 = PolyModule::tensor(&tensor_power(&r, 2, 2), &tensor_power(&r, 2, 1)).unwrap();
    assert!(find_iso(&t3, &tensor_power(&r, 2, 3)).unwrap().is_some());
}

#[test]
fn permutation_endomorphisms() {
    // End(Γ^{1^d}) has rank d!
    let r = zz();
    for d in 1..=4 {
        let x = divided(&r, d, &vec![1; d]);
        let n_fact: usize = (1..=d).product();
        assert_eq!(hom_space(&x, &x).unwrap().len(), n_fact);
    }
}
