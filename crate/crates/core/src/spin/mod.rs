//! Spin representations of the deformed su(2) and so(3) algebras.
//!
//! Spin bases are ordered m = j, j-1, …, -j, and r = j - m is used as row
//! index. In two-mode language a spin state is |n1, n2⟩ with n1 = j + m and
//! n2 = j - m.

mod errata;
mod hp;
mod js;
mod registry;
mod so3;

pub use errata::{errata_findings, ErratumCase, ErratumFinding};
pub use hp::{audit_hp, build_hp_rep, hp_factor, hp_numeric_spectral_match, HPRep};
pub use js::{
    audit_condensed_forms, audit_su_nu2, build_js_spin_rep, condensed_suite, extract_js_block,
    odd_bracket_claim, pauli_bracket_claim, quadratic_algebra_claim, reflection_identification_claim,
    SuNu2Rep,
};
pub use registry::{diff_registry, paper_example_registry, RegistryDiff};
pub use so3::{audit_so_nu3, build_so_nu3, so3_bracket_claim, so3_condensed_claim, SoNu3Rep};

use crate::scalar::{rational, GaussianRational, NuPolynomial, RadicalSum};

/// j as an exact rational.
pub(crate) fn spin_j(two_j: u32) -> GaussianRational {
    GaussianRational::real(rational(two_j as i64, 2))
}

/// 2ν(2ν + c) with c given as twice its value.
pub(crate) fn two_nu_times(two_c: i64) -> NuPolynomial {
    // 2ν·(2ν + c) = c·2ν + 4ν², with c = two_c / 2
    NuPolynomial::from_ints(&[0, two_c, 4])
}

pub(crate) fn half_int(n: i64) -> RadicalSum {
    RadicalSum::from_gaussian(GaussianRational::from_ratio(n, 2))
}
