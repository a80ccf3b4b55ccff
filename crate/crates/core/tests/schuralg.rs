mod algebra {
    use schurweyl::schuralg::*;
    use schurweyl::combinat::MarginMatrix;
    use schurweyl::exactla::{Integers, Matrix, PrimeField, Rationals, Ring};

    #[test]
    fn idempotents_and_unit() {
        let s = SchurAlgebra::new(Rationals, 2, 2);
        let ws = s.basis().weights().to_vec();
        for l in &ws {
            for m in &ws {
                let p = s.multiply(&s.xi(l), &s.xi(m)).unwrap();
                if l == m {
                    assert_eq!(p, s.xi(l));
                } else {
                    assert!(p.is_zero());
                }
            }
        }
        let one = s.unit();
        for i in 0..s.dim() {
            let g = AlgebraElement::basis(s.ring(), i);
            assert_eq!(s.multiply(&one, &g).unwrap(), g);
            assert_eq!(s.multiply(&g, &one).unwrap(), g);
        }
        let size = 4;
        assert_eq!(s.tensor_action_of(&one), Matrix::identity(s.ring(), size));
    }

    #[test]
    fn tensor_action_small_cases() {
        let s = SchurAlgebra::new(Integers, 1, 3);
        assert_eq!(s.tensor_action(&MarginMatrix::from_rows(&[vec![3]])), Matrix::identity(&Integers, 1));
        let s = SchurAlgebra::new(Integers, 2, 2);
        let m = s.tensor_action(&MarginMatrix::diagonal(&[1, 1]));
        // e11⊗e22 + e22⊗e11: fixes the words 01 and 10
        let mut expect = Matrix::zeros(&Integers, 4, 4);
        expect.set(1, 1, Integers.one());
        expect.set(2, 2, Integers.one());
        assert_eq!(m, expect);
    }

    #[test]
    fn word_and_tensor_products_agree() {
        for (n, d) in [(2, 2), (2, 3), (3, 2)] {
            let s = SchurAlgebra::new(Integers, n, d);
            for i in 0..s.dim() {
                for j in 0..s.dim() {
                    let (x, y) = (AlgebraElement::basis(&Integers, i), AlgebraElement::basis(&Integers, j));
                    assert_eq!(s.multiply(&x, &y).unwrap(), s.multiply_via_tensor(&x, &y).unwrap());
                }
            }
        }
    }

    #[test]
    fn prime_field_constants_match_direct_computation() {
        let f = PrimeField::new(2).unwrap();
        let s = SchurAlgebra::new(f.clone(), 2, 3);
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                let (x, y) = (AlgebraElement::basis(&f, i), AlgebraElement::basis(&f, j));
                assert_eq!(s.multiply(&x, &y).unwrap(), s.multiply_via_tensor(&x, &y).unwrap());
            }
        }
    }

    #[test]
    fn associativity_two_two() {
        let s = SchurAlgebra::new(Integers, 2, 2);
        let b = |i| AlgebraElement::basis(&Integers, i);
        for i in 0..10 {
            for j in 0..10 {
                let ij = s.multiply(&b(i), &b(j)).unwrap();
                for k in 0..10 {
                    let l = s.multiply(&ij, &b(k)).unwrap();
                    let r = s.multiply(&b(i), &s.multiply(&b(j), &b(k)).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn transpose_reverses_products() {
        let s = SchurAlgebra::new(Integers, 2, 2);
        let b = |i| AlgebraElement::basis(&Integers, i);
        for w in s.basis().weights() {
            assert_eq!(s.transpose(&s.xi(w)), s.xi(w));
        }
        for i in 0..10 {
            assert_eq!(s.transpose(&s.transpose(&b(i))), b(i));
            for j in 0..10 {
                let lhs = s.transpose(&s.multiply(&b(i), &b(j)).unwrap());
                let rhs = s.multiply(&s.transpose(&b(j)), &s.transpose(&b(i))).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn orbit_count_dimension() {
        for n in 1..=3 {
            for d in 0..=3 {
                assert_eq!(dim_by_orbits(n, d), algebra_basis(n, d).dim());
            }
        }
    }
}

mod basis {
    use schurweyl::schuralg::*;
    use schurweyl::combinat::binomial;

    #[test]
    fn dimension_and_order() {
        let b = algebra_basis(2, 2);
        assert_eq!(b.dim(), 10);
        assert_eq!(b.weights(), &[vec![2, 0], vec![1, 1], vec![0, 2]]);
        for (i, a) in b.elements().iter().enumerate() {
            assert_eq!(b.index_of(a), Some(i));
        }
        for n in 1..=3 {
            for d in 0..=3 {
                assert_eq!(algebra_basis(n, d).dim() as u64, binomial(n * n + d - 1, d));
            }
        }
    }

    #[test]
    fn reduced_generators_at_two_two() {
        // the only excluded matrix has both off-diagonal entries equal to 1
        let b = algebra_basis(2, 2);
        assert_eq!(b.reduced_generators().len(), 9);
    }
}

mod words {
    use schurweyl::schuralg::words::*;
    use schurweyl::combinat::{multinomial, MarginMatrix};

    #[test]
    fn arrangement_counts() {
        assert_eq!(arrangements(&[2, 1]).len(), 3);
        assert_eq!(arrangements(&[1, 1, 1]).len(), 6);
        assert_eq!(arrangements(&[0, 0]), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn words_over_sizes() {
        let m = MarginMatrix::from_rows(&[vec![1, 1], vec![1, 0]]);
        let w = sorted_word(&m.col_sums());
        let us = words_over(&w, &m);
        let expect: u64 = (0..2).map(|j| multinomial(&m.column(j))).product();
        assert_eq!(us.len() as u64, expect);
        assert!(us.iter().all(|u| pair_matrix(2, u, &w) == m));
    }

    #[test]
    fn index_roundtrip() {
        for i in 0..27 {
            assert_eq!(word_index(3, &index_word(3, 3, i)), i);
        }
    }
}
