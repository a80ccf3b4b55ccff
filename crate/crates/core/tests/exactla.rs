mod ring {
    use schurweyl::exactla::*;
    use num_bigint::BigInt;

    #[test]
    fn parse_ring_specs() {
        assert_eq!("Z".parse::<RingSpec>().unwrap(), RingSpec::Integers);
        assert_eq!("Q".parse::<RingSpec>().unwrap(), RingSpec::Rationals);
        assert_eq!("Fp:3".parse::<RingSpec>().unwrap(), RingSpec::PrimeField(3));
        assert_eq!("F2".parse::<RingSpec>().unwrap(), RingSpec::PrimeField(2));
        assert!("Fp:4".parse::<RingSpec>().is_err());
        assert!("R".parse::<RingSpec>().is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.from_i64(-1), 6);
    }

    #[test]
    fn integer_floor_division() {
        let z = Integers;
        let (q, r) = z.div_rem(&BigInt::from(-7), &BigInt::from(3));
        assert_eq!((q, r), (BigInt::from(-3), BigInt::from(2)));
        assert_eq!(z.div_exact(&BigInt::from(8), &BigInt::from(3)), None);
    }

    #[test]
    fn rational_format() {
        let q = Rationals;
        let x = q.div_rem(&q.from_i64(3), &q.from_i64(6)).0;
        assert_eq!(q.format(&x), "1/2");
    }
}

mod matrix {
    use schurweyl::exactla::*;
    use num_bigint::BigInt;

    #[test]
    fn product_and_transpose() {
        let z = Integers;
        let a = Matrix::from_i64_rows(&z, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64_rows(&z, &[&[0, 1], &[1, 0]]);
        let ab = a.mul(&z, &b);
        assert_eq!(ab, Matrix::from_i64_rows(&z, &[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose().get(0, 1), &BigInt::from(3));
        assert_eq!(a.mul_vec(&z, &[BigInt::from(1), BigInt::from(1)]), vec![BigInt::from(3), BigInt::from(7)]);
    }

    #[test]
    fn kronecker_shape() {
        let z = Integers;
        let a = Matrix::identity(&z, 2);
        let b = Matrix::from_i64_rows(&z, &[&[1, 2, 3]]);
        let k = kronecker(&z, &a, &b);
        assert_eq!((k.rows(), k.cols()), (2, 6));
        assert_eq!(k.get(1, 4), &BigInt::from(2));
    }
}

mod echelon {
    use schurweyl::exactla::*;

    #[test]
    fn hermite_form_is_canonical() {
        let z = Integers;
        let m = Matrix::from_i64_rows(&z, &[&[4, 6, 2], &[2, 3, 5], &[6, 9, 7]]);
        let e = echelon(&z, &m, true);
        assert_eq!(e.rank(), 2);
        let t = e.transform.as_ref().unwrap();
        assert_eq!(t.mul(&z, &m), e.form);
        let again = echelon(&z, &e.form, false);
        assert_eq!(again.form, e.form);
        assert_eq!(e.form.get(0, 0), &z.from_i64(2));
    }

    #[test]
    fn rref_over_rationals() {
        let q = Rationals;
        let m = Matrix::from_i64_rows(&q, &[&[2, 4], &[1, 3]]);
        let e = echelon(&q, &m, false);
        assert_eq!(e.form, Matrix::identity(&q, 2));
    }

    #[test]
    fn left_solver_finds_integer_solutions() {
        let z = Integers;
        let m = Matrix::from_i64_rows(&z, &[&[2, 0], &[0, 3], &[2, 3]]);
        let s = LeftSolver::new(&z, &m);
        let x = s.solve(&z, &[z.from_i64(4), z.from_i64(3)]).unwrap();
        assert_eq!(m.vec_mul(&z, &x), vec![z.from_i64(4), z.from_i64(3)]);
        assert!(s.solve(&z, &[z.from_i64(1), z.from_i64(0)]).is_none());
        let f = PrimeField::new(5).unwrap();
        let mf = Matrix::from_i64_rows(&f, &[&[2, 0]]);
        assert!(LeftSolver::new(&f, &mf).solve(&f, &[1, 0]).is_some());
    }
}

mod lattice {
    use schurweyl::exactla::*;
    use schurweyl::Error;

    #[test]
    fn kernel_of_row_sum() {
        let z = Integers;
        let m = Matrix::from_i64_rows(&z, &[&[1], &[1]]);
        let k = kernel_basis(&z, &m);
        assert_eq!(k.rank(), 1);
        assert!(k.contains(&[z.from_i64(1), z.from_i64(-1)]));
        let m = Matrix::from_i64_rows(&z, &[&[1, 1]]);
        let k = right_kernel(&z, &m);
        assert_eq!(k.rank(), 1);
        assert!(k.contains(&[z.from_i64(1), z.from_i64(-1)]));
    }

    #[test]
    fn kernels_of_invertible_and_zero() {
        let z = Integers;
        let m = Matrix::from_i64_rows(&z, &[&[2, 1], &[1, 1]]);
        assert!(kernel_basis(&z, &m).is_zero());
        let zero = Matrix::zeros(&z, 3, 2);
        assert_eq!(kernel_basis(&z, &zero), Lattice::full(&z, 3));
    }

    #[test]
    fn sums_and_membership() {
        let z = Integers;
        let a = Lattice::from_rows(&z, 2, vec![vec![z.from_i64(2), z.from_i64(0)]]);
        let b = Lattice::from_rows(&z, 2, vec![vec![z.from_i64(0), z.from_i64(3)]]);
        let s = a.sum(&b);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.basis(), &Matrix::from_i64_rows(&z, &[&[2, 0], &[0, 3]]));
        assert_eq!(a.sum(&Lattice::zero(&z, 2)), a);
        assert!(!a.contains(&[z.from_i64(1), z.from_i64(0)]));
        let q = Rationals;
        let aq = Lattice::from_rows(&q, 2, vec![vec![q.from_i64(2), q.from_i64(0)]]);
        assert!(aq.contains(&[q.from_i64(1), q.from_i64(0)]));
    }

    #[test]
    fn quotient_presentations() {
        let z = Integers;
        assert_eq!(
            quotient_presentation(3, &Lattice::zero(&z, 3)),
            FGModulePresentation { free_rank: 3, invariant_factors: vec![] }
        );
        let a = Lattice::from_rows(&z, 2, vec![vec![z.from_i64(2), z.from_i64(0)]]);
        assert_eq!(
            quotient_presentation(2, &a),
            FGModulePresentation { free_rank: 1, invariant_factors: vec!["2".into()] }
        );
        let f = PrimeField::new(2).unwrap();
        let l = Lattice::from_rows(&f, 3, vec![vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(quotient_presentation(3, &l).free_rank, 1);
        assert!(quotient_presentation(3, &l).invariant_factors.is_empty());
    }

    #[test]
    fn intersection_saturation_complement() {
        let z = Integers;
        let a = Lattice::from_rows(&z, 2, vec![vec![z.from_i64(2), z.from_i64(0)], vec![z.from_i64(0), z.from_i64(1)]]);
        let b = Lattice::from_rows(&z, 2, vec![vec![z.from_i64(1), z.from_i64(1)]]);
        let i = a.intersect(&b);
        assert_eq!(i, Lattice::from_rows(&z, 2, vec![vec![z.from_i64(2), z.from_i64(2)]]));
        assert_eq!(i.saturate(), b);
        let c = complement_basis(&Lattice::full(&z, 2), &b).unwrap();
        assert_eq!(b.sum(&Lattice::from_matrix(&z, &c)), Lattice::full(&z, 2));
        assert!(matches!(complement_basis(&Lattice::full(&z, 2), &i), Err(Error::Torsion(_))));
    }
}

mod snf {
    use schurweyl::exactla::*;

    fn check<R: Ring>(ring: &R, m: &Matrix<R::El>) -> Smith<R::El> {
        let sm = snf(ring, m);
        assert_eq!(sm.u.mul(ring, m).mul(ring, &sm.v), sm.s);
        assert_eq!(sm.v.mul(ring, &sm.v_inv), Matrix::identity(ring, m.cols()));
        for i in 0..sm.s.rows() {
            for j in 0..sm.s.cols() {
                if i != j {
                    assert!(ring.is_zero(sm.s.get(i, j)));
                }
            }
        }
        let d = sm.diagonal();
        for w in d.windows(2) {
            assert!(ring.div_exact(&w[1], &w[0]).is_some());
        }
        sm
    }

    #[test]
    fn two_by_two_integer() {
        let z = Integers;
        let m = Matrix::from_i64_rows(&z, &[&[2, 4], &[6, 8]]);
        let sm = check(&z, &m);
        assert_eq!(sm.diagonal(), vec![z.from_i64(2), z.from_i64(4)]);
    }

    #[test]
    fn identity_and_zero() {
        let z = Integers;
        let id = Matrix::identity(&z, 3);
        let sm = check(&z, &id);
        assert_eq!(sm.s, id);
        assert_eq!(sm.u, id);
        assert_eq!(sm.v, id);
        let zero = Matrix::zeros(&z, 2, 3);
        let sm = check(&z, &zero);
        assert_eq!(sm.s, zero);
        assert_eq!(sm.u, Matrix::identity(&z, 2));
        assert_eq!(sm.v, Matrix::identity(&z, 3));
    }

    #[test]
    fn divisibility_repair() {
        let z = Integers;
        let m = Matrix::from_i64_rows(&z, &[&[2, 0], &[0, 3]]);
        let sm = check(&z, &m);
        assert_eq!(sm.diagonal(), vec![z.from_i64(1), z.from_i64(6)]);
        let f = PrimeField::new(3).unwrap();
        let mf = Matrix::from_i64_rows(&f, &[&[2, 0], &[0, 3]]);
        assert_eq!(check(&f, &mf).diagonal(), vec![1, 0]);
    }
}
