//! Exact scalars: Gaussian rationals, polynomials in ν, sums of radicals,
//! and the ν-deformed numbers.

mod deformed;
mod gaussian;
mod poly;
mod radical;

pub use deformed::{
    check_cross_identity, check_pair_identities, cross_identity_lhs, cross_identity_piecewise_form,
    cross_identity_signed_form, deformed_factorial, deformed_number, parity_sign, two_nu, ParityClass,
};
pub use gaussian::{rational, rational_to_f64, GaussianRational, Rational};
pub use poly::NuPolynomial;
pub(crate) use poly::fmt_univariate;
pub use radical::{numeric_eval, NumericEval, RadicalSum, RadicalTerm};
