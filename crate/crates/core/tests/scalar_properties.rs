use proptest::prelude::*;
use wigner_core::scalar::{
    check_cross_identity, check_pair_identities, cross_identity_lhs, cross_identity_piecewise_form,
    deformed_number, rational, GaussianRational, NuPolynomial, RadicalSum,
};

/// Relative tolerance for float images of exact arithmetic.
const FLOAT_TOLERANCE: f64 = 1e-12;
const SAMPLE_NUS: [f64; 4] = [0.0, 0.1, 0.7, 1.9];

fn poly() -> impl Strategy<Value = NuPolynomial> {
    prop::collection::vec((-6i64..=6, -3i64..=3), 0..4).prop_map(|cs| {
        NuPolynomial::from_coeffs(
            cs.into_iter()
                .map(|(re, im)| GaussianRational::new(rational(re, 1), rational(im, 1)))
                .collect(),
        )
    })
}

/// Radicands of the shape k·[n]_ν, nonnegative on ν > -1/2.
fn radicand() -> impl Strategy<Value = NuPolynomial> {
    (1i64..=8, 0u64..=5).prop_map(|(k, n)| match n {
        0 => NuPolynomial::from_int(k),
        n => deformed_number(n).scale_int(k),
    })
}

fn radical() -> impl Strategy<Value = RadicalSum> {
    prop::collection::vec((poly(), radicand()), 0..4)
        .prop_map(|terms| RadicalSum::from_terms(terms).expect("real radicands"))
}

fn close(a: num_complex::Complex64, b: num_complex::Complex64, scale: f64) -> bool {
    (a - b).norm() <= FLOAT_TOLERANCE * (1.0 + scale)
}

proptest! {
    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn radical_ring_axioms(a in radical(), b in radical(), c in radical()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RadicalSum::one(), a.clone());
    }

    #[test]
    fn canonical_form_is_idempotent(a in radical(), b in radical()) {
        prop_assert_eq!(a.recanonicalize(), a.clone());
        let p = &a * &b;
        prop_assert_eq!(p.recanonicalize(), p);
    }

    #[test]
    fn numeric_image_is_a_ring_homomorphism(a in radical(), b in radical()) {
        for nu in SAMPLE_NUS {
            let (x, y) = (a.numeric_eval(nu).unwrap(), b.numeric_eval(nu).unwrap());
            let scale = x.norm() * y.norm() + x.norm() + y.norm();
            prop_assert!(close((&a * &b).numeric_eval(nu).unwrap(), x * y, scale));
            prop_assert!(close((&a + &b).numeric_eval(nu).unwrap(), x + y, scale));
            prop_assert!(close((&a * &a).numeric_eval(nu).unwrap(), x * x, x.norm_sqr()));
        }
    }

    #[test]
    fn square_root_of_a_square(p in radicand(), q in radicand()) {
        let root = RadicalSum::sqrt(&(&p * &q)).unwrap();
        let product = &RadicalSum::sqrt(&p).unwrap() * &RadicalSum::sqrt(&q).unwrap();
        prop_assert_eq!(&root * &root, RadicalSum::from(&p * &q));
        prop_assert_eq!(root, product);
    }

    #[test]
    fn pair_identities_hold_far_out(n in 0u64..1_000_000) {
        prop_assert!(check_pair_identities(n).passed_strict());
    }

    #[test]
    fn cross_identity_matches_float_oracle(m in 0u64..2000, n in 0u64..2000) {
        prop_assert!(check_cross_identity(m, n).passed_strict());
        let piecewise = cross_identity_piecewise_form(m, n);
        prop_assert_eq!(&piecewise, &cross_identity_lhs(m, n));
        let br = |k: u64, nu: f64| k as f64 + if k % 2 == 1 { 2.0 * nu } else { 0.0 };
        for nu in SAMPLE_NUS {
            let direct = br(m, nu) * br(n + 1, nu) - br(n, nu) * br(m + 1, nu);
            let scale = br(m, nu) * br(n + 1, nu);
            prop_assert!((piecewise.eval(nu).re - direct).abs() <= FLOAT_TOLERANCE * (1.0 + scale));
        }
    }
}

#[test]
fn deformed_numbers_listed() {
    let shown: Vec<String> = (0..6).map(|n| deformed_number(n).to_string()).collect();
    assert_eq!(shown, ["0", "1 + 2ν", "2", "3 + 2ν", "4", "5 + 2ν"]);
}
