use proptest::prelude::*;

use schurweyl::combinat::{kostka, margin_matrices, partitions, MarginMatrix, Partition};
use schurweyl::exactla::{kernel_basis, snf, Integers, Lattice, Matrix, PrimeField, Ring};
use schurweyl::polyfun::{divided, gamma_morphism};
use schurweyl::schuralg::{AlgebraElement, SchurAlgebra};

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows)
}

fn to_matrix(z: &Integers, rows: &[Vec<i64>]) -> Matrix<<Integers as Ring>::El> {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_i64_rows(z, &refs)
}

fn composition(parts: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=max, parts)
}

// rows and columns filled one entry at a time
fn count_matrices(rows: &[usize], cols: &[usize]) -> usize {
    if rows.is_empty() {
        return usize::from(cols.iter().all(|&c| c == 0));
    }
    let mut total = 0;
    let mut col = cols.to_vec();
    fn fill(r: usize, j: usize, col: &mut Vec<usize>, rest: &[usize], total: &mut usize) {
        if j == col.len() {
            if r == 0 {
                *total += count_matrices(rest, col);
            }
            return;
        }
        for v in 0..=r.min(col[j]) {
            col[j] -= v;
            fill(r - v, j + 1, col, rest, total);
            col[j] += v;
        }
    }
    fill(rows[0], 0, &mut col, &rows[1..], &mut total);
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_diagonal_and_divisible(rows in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| int_matrix(r, c))) {
        let z = Integers;
        let m = to_matrix(&z, &rows);
        let s = snf(&z, &m);
        prop_assert_eq!(s.u.mul(&z, &m).mul(&z, &s.v), s.s.clone());
        let d = s.diagonal();
        for w in d.windows(2) {
            prop_assert!(z.div_exact(&w[1], &w[0]).is_some());
        }
        let rank = d.iter().filter(|x| !z.is_zero(x)).count();
        prop_assert_eq!(kernel_basis(&z, &m).rank(), m.rows() - rank);
    }

    #[test]
    fn lattice_sum_and_intersection(a in int_matrix(2, 3), b in int_matrix(2, 3)) {
        let z = Integers;
        let la = Lattice::from_matrix(&z, &to_matrix(&z, &a));
        let lb = Lattice::from_matrix(&z, &to_matrix(&z, &b));
        let s = la.sum(&lb);
        let i = la.intersect(&lb);
        prop_assert!(s.contains_lattice(&la) && s.contains_lattice(&lb));
        prop_assert!(la.contains_lattice(&i) && lb.contains_lattice(&i));
        prop_assert_eq!(s.rank() + i.rank(), la.rank() + lb.rank());
    }

    #[test]
    fn conjugation_is_an_involution(d in 0usize..=9, pick in any::<prop::sample::Index>()) {
        let ps = partitions(d);
        let l = &ps[pick.index(ps.len())];
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().weight(), d);
    }

    #[test]
    fn kostka_numbers_ignore_the_order_of_the_content(mu in composition(4, 2), shift in 0usize..4) {
        let d: usize = mu.iter().sum();
        let mut rotated = mu.clone();
        rotated.rotate_left(shift);
        for l in partitions(d) {
            prop_assert_eq!(kostka(&l, &mu).unwrap(), kostka(&l, &rotated).unwrap());
        }
        prop_assert_eq!(kostka(&Partition::row(d), &mu).unwrap(), 1);
    }

    #[test]
    fn margin_matrices_are_counted(rows in composition(3, 2), cols in composition(3, 2)) {
        let found = margin_matrices(&rows, &cols).map(|v| v.len()).unwrap_or(0);
        prop_assert_eq!(found, count_matrices(&rows, &cols));
    }

    #[test]
    fn schur_algebra_is_associative(i in 0usize..20, j in 0usize..20, k in 0usize..20) {
        let s = SchurAlgebra::new(Integers, 2, 3);
        let g = |x: usize| AlgebraElement::basis(s.ring(), x % s.dim());
        let left = s.multiply(&s.multiply(&g(i), &g(j)).unwrap(), &g(k)).unwrap();
        let right = s.multiply(&g(i), &s.multiply(&g(j), &g(k)).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn products_agree_with_tensor_action(i in 0usize..50, j in 0usize..50) {
        let s = SchurAlgebra::new(PrimeField::new(3).unwrap(), 2, 3);
        let x = AlgebraElement::basis(s.ring(), i % s.dim());
        let y = AlgebraElement::basis(s.ring(), j % s.dim());
        prop_assert_eq!(s.multiply(&x, &y).unwrap(), s.multiply_via_tensor(&x, &y).unwrap());
    }

    #[test]
    fn gamma_morphisms_compose_like_the_algebra(i in 0usize..50, j in 0usize..50) {
        // γ_A ∘ γ_B in the algebra matches composing the module maps
        let z = Integers;
        let s = SchurAlgebra::new(z.clone(), 2, 3);
        let basis = s.basis().elements().to_vec();
        let (a, b): (&MarginMatrix, &MarginMatrix) = (&basis[i % basis.len()], &basis[j % basis.len()]);
        prop_assume!(a.col_sums() == b.row_sums());
        let (nu, lambda, mu) = (a.row_sums(), a.col_sums(), b.col_sums());
        let ga = gamma_morphism(&divided(&z, 2, &lambda), &divided(&z, 2, &nu), a).unwrap();
        let gb = gamma_morphism(&divided(&z, 2, &mu), &divided(&z, 2, &lambda), b).unwrap();
        let composite = gb.then(&ga).unwrap();
        let product = s.multiply(&s.element(a), &s.element(b)).unwrap();
        let mut expected = None;
        for (k, c) in product.terms() {
            let m = gamma_morphism(&divided(&z, 2, &mu), &divided(&z, 2, &nu), &basis[k]).unwrap();
            let m = m.scale(c);
            expected = Some(match expected { None => m, Some(acc) => m.add(&acc) });
        }
        let expected = expected.unwrap();
        prop_assert_eq!(composite.blocks(), expected.blocks());
    }
}
