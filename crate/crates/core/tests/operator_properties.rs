use proptest::prelude::*;
use wigner_core::operator::{
    anticommutator, check_relation, commutator, fock_basis, tensor, OperatorMatrix, NU_GRID,
};
use wigner_core::scalar::{deformed_number, rational, GaussianRational, NuPolynomial, RadicalSum};

/// Relative tolerance of the evaluation homomorphism.
const EVAL_TOLERANCE: f64 = 1e-12;

fn entry() -> impl Strategy<Value = RadicalSum> {
    (0usize..6, -3i64..=3, -2i64..=2, 1u64..=4).prop_map(|(kind, re, im, n)| {
        let c = GaussianRational::new(rational(re, 1), rational(im, 1));
        match kind {
            0 | 1 => RadicalSum::zero(),
            2 => RadicalSum::from_gaussian(c),
            3 => RadicalSum::from(NuPolynomial::monomial(c, 1)),
            _ => RadicalSum::sqrt(&deformed_number(n))
                .unwrap()
                .scale(&c),
        }
    })
}

fn matrix(dim: usize) -> impl Strategy<Value = OperatorMatrix> {
    prop::collection::vec(entry(), dim * dim)
        .prop_map(move |e| OperatorMatrix::new(fock_basis(dim), e).unwrap())
}

fn pair() -> impl Strategy<Value = (OperatorMatrix, OperatorMatrix)> {
    (2usize..=4).prop_flat_map(|d| (matrix(d), matrix(d)))
}

fn triple() -> impl Strategy<Value = (OperatorMatrix, OperatorMatrix, OperatorMatrix)> {
    (2usize..=3).prop_flat_map(|d| (matrix(d), matrix(d), matrix(d)))
}

fn frobenius(m: &nalgebra::DMatrix<num_complex::Complex64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

proptest! {
    #[test]
    fn adjoint_reverses_products((a, b) in pair()) {
        prop_assert_eq!((&a * &b).adjoint(), &b.adjoint() * &a.adjoint());
        prop_assert_eq!(a.adjoint().adjoint(), a.clone());
        prop_assert_eq!((&a + &b).adjoint(), &a.adjoint() + &b.adjoint());
    }

    #[test]
    fn evaluation_is_a_homomorphism((a, b) in pair()) {
        for nu in NU_GRID {
            let (x, y) = (a.eval(nu).unwrap(), b.eval(nu).unwrap());
            let scale = frobenius(&x) * frobenius(&y);
            let prod = (&a * &b).eval(nu).unwrap() - &x * &y;
            prop_assert!(frobenius(&prod) <= EVAL_TOLERANCE * (1.0 + scale));
            let sum = (&a + &b).eval(nu).unwrap() - (&x + &y);
            prop_assert!(frobenius(&sum) <= EVAL_TOLERANCE * (1.0 + frobenius(&x) + frobenius(&y)));
            let adj = a.adjoint().eval(nu).unwrap() - x.adjoint();
            prop_assert!(frobenius(&adj) <= EVAL_TOLERANCE * (1.0 + frobenius(&x)));
        }
    }

    #[test]
    fn brackets_are_consistent((a, b, c) in triple()) {
        let ab = commutator(&a, &b).unwrap();
        prop_assert_eq!(&ab, &-&commutator(&b, &a).unwrap());
        prop_assert_eq!(anticommutator(&a, &b).unwrap(), anticommutator(&b, &a).unwrap());
        let jacobi = &(&commutator(&a, &commutator(&b, &c).unwrap()).unwrap()
            + &commutator(&b, &commutator(&c, &a).unwrap()).unwrap())
            + &commutator(&c, &ab).unwrap();
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn tensor_is_bilinear((a, b) in pair(), (c, d) in pair()) {
        prop_assert_eq!(
            tensor(&(&a + &b), &c).unwrap(),
            &tensor(&a, &c).unwrap() + &tensor(&b, &c).unwrap()
        );
        prop_assert_eq!(
            tensor(&a, &(&c + &d)).unwrap(),
            &tensor(&a, &c).unwrap() + &tensor(&a, &d).unwrap()
        );
        prop_assert_eq!(
            &tensor(&a, &c).unwrap() * &tensor(&b, &d).unwrap(),
            tensor(&(&a * &b), &(&c * &d)).unwrap()
        );
        prop_assert_eq!(tensor(&a, &c).unwrap().adjoint(), tensor(&a.adjoint(), &c.adjoint()).unwrap());
    }

    #[test]
    fn relation_check_is_symmetric((a, b) in pair(), mask_bits in 0u8..16) {
        let mask: Vec<usize> = (0..a.dim()).filter(|r| mask_bits & (1 << r) != 0).collect();
        let forward = check_relation("rel", &a, &b, Some(&mask)).unwrap();
        let backward = check_relation("rel", &b, &a, Some(&mask)).unwrap();
        prop_assert_eq!(forward.verdict, backward.verdict);
        prop_assert_eq!(&forward.failing_rows, &backward.failing_rows);
        prop_assert_eq!(&forward.excluded_rows, &backward.excluded_rows);
        prop_assert!(check_relation("self", &a, &a, None).unwrap().passed_strict());
        if let Some(w) = forward.witness {
            prop_assert!(mask.contains(&w.row));
            prop_assert_ne!(a.get(w.row, w.col), b.get(w.row, w.col));
        }
    }
}
