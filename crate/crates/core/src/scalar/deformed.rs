//! ν-deformed numbers `[n]_ν = n + ν(1 - (-1)^n)` and their identities.

use super::gaussian::GaussianRational;
use super::poly::NuPolynomial;
use crate::report::AlgebraReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityClass {
    Even,
    Odd,
}

impl ParityClass {
    pub fn of(n: u64) -> Self {
        if n % 2 == 0 {
            ParityClass::Even
        } else {
            ParityClass::Odd
        }
    }

    /// (-1)^n
    pub fn sign(self) -> i64 {
        match self {
            ParityClass::Even => 1,
            ParityClass::Odd => -1,
        }
    }
}

/// (-1)^n as an integer.
pub fn parity_sign(n: u64) -> i64 {
    ParityClass::of(n).sign()
}

/// `[n]_ν`: n for even n, n + 2ν for odd n.
pub fn deformed_number(n: u64) -> NuPolynomial {
    match ParityClass::of(n) {
        ParityClass::Even => NuPolynomial::from_int(n as i64),
        ParityClass::Odd => NuPolynomial::from_ints(&[n as i64, 2]),
    }
}

/// `[n]_ν! = Π_{k=1}^{n} [k]_ν`, with `[0]_ν! = 1`.
pub fn deformed_factorial(n: u64) -> NuPolynomial {
    (1..=n).fold(NuPolynomial::one(), |acc, k| &acc * &deformed_number(k))
}

/// Checks `[n] + [n+1] = 2n + 1 + 2ν` and `[n+2] - [n] = 2`.
pub fn check_pair_identities(n: u64) -> AlgebraReport {
    let sum = &deformed_number(n) + &deformed_number(n + 1);
    let sum_rhs = NuPolynomial::from_ints(&[2 * n as i64 + 1, 2]);
    let diff = &deformed_number(n + 2) - &deformed_number(n);
    let diff_rhs = NuPolynomial::from_int(2);
    let id = format!("nu.pair_identities[n={n}]");
    let statement = "[n]+[n+1] = 2n+1+2ν; [n+2]-[n] = 2";
    let first = AlgebraReport::compare(&id, statement, n as usize, &sum_rhs, &sum);
    if !first.passed() {
        return first;
    }
    AlgebraReport::compare(id, statement, n as usize, &diff_rhs, &diff)
}

/// `[m][n+1] - [n][m+1]` expanded directly.
pub fn cross_identity_lhs(m: u64, n: u64) -> NuPolynomial {
    &(&deformed_number(m) * &deformed_number(n + 1)) - &(&deformed_number(n) * &deformed_number(m + 1))
}

/// `m - n - ν(2n+1)(-1)^m + ν(2m+1)(-1)^n - 2ν²((-1)^m - (-1)^n)`.
pub fn cross_identity_signed_form(m: u64, n: u64) -> NuPolynomial {
    let (m_i, n_i) = (m as i64, n as i64);
    let (sm, sn) = (parity_sign(m), parity_sign(n));
    NuPolynomial::from_ints(&[
        m_i - n_i,
        -(2 * n_i + 1) * sm + (2 * m_i + 1) * sn,
        -2 * (sm - sn),
    ])
}

/// The four-case form selected by the parities of n and m.
pub fn cross_identity_piecewise_form(m: u64, n: u64) -> NuPolynomial {
    let (m_i, n_i) = (m as i64, n as i64);
    let d = m_i - n_i;
    let s = m_i + n_i + 1;
    match (ParityClass::of(n), ParityClass::of(m)) {
        (ParityClass::Even, ParityClass::Even) => NuPolynomial::from_ints(&[d, 2 * d]),
        (ParityClass::Even, ParityClass::Odd) => NuPolynomial::from_ints(&[d, 2 * s, 4]),
        (ParityClass::Odd, ParityClass::Even) => NuPolynomial::from_ints(&[d, -2 * s, -4]),
        (ParityClass::Odd, ParityClass::Odd) => NuPolynomial::from_ints(&[d, -2 * d]),
    }
}

/// Three-way agreement of the direct expansion, the signed closed form and
/// the piecewise form.
pub fn check_cross_identity(m: u64, n: u64) -> AlgebraReport {
    let lhs = cross_identity_lhs(m, n);
    let signed = cross_identity_signed_form(m, n);
    let piecewise = cross_identity_piecewise_form(m, n);
    let id = format!("nu.cross_identity[m={m},n={n}]");
    let statement = "[m][n+1]-[n][m+1] = signed closed form = piecewise form";
    let vs_signed = AlgebraReport::compare(&id, statement, 0, &signed, &lhs);
    if !vs_signed.passed() {
        return vs_signed.with_note("direct expansion vs signed closed form");
    }
    let vs_piece = AlgebraReport::compare(&id, statement, 1, &piecewise, &lhs);
    if !vs_piece.passed() {
        return vs_piece.with_note("direct expansion vs piecewise form");
    }
    vs_piece.with_note(format!("value {lhs}"))
}

/// The polynomial 2ν.
pub fn two_nu() -> NuPolynomial {
    NuPolynomial::monomial(GaussianRational::from_int(2), 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_deformed_numbers() {
        assert_eq!(deformed_number(0), NuPolynomial::zero());
        assert_eq!(deformed_number(1), NuPolynomial::from_ints(&[1, 2]));
        assert_eq!(deformed_number(2), NuPolynomial::from_int(2));
        assert_eq!(deformed_number(3), NuPolynomial::from_ints(&[3, 2]));
        assert_eq!(deformed_number(4), NuPolynomial::from_int(4));
        assert_eq!(deformed_number(7), NuPolynomial::from_ints(&[7, 2]));
    }

    #[test]
    fn factorials() {
        assert_eq!(deformed_factorial(0), NuPolynomial::one());
        assert_eq!(deformed_factorial(2), NuPolynomial::from_ints(&[2, 4]));
        // 2(1+2ν)(3+2ν) = 6 + 16ν + 8ν²
        assert_eq!(deformed_factorial(3), NuPolynomial::from_ints(&[6, 16, 8]));
    }

    #[test]
    fn pair_identities_small() {
        for n in [0, 3, 10] {
            assert!(check_pair_identities(n).passed_strict(), "n = {n}");
        }
        let s = &deformed_number(3) + &deformed_number(4);
        assert_eq!(s, NuPolynomial::from_ints(&[7, 2]));
    }

    #[test]
    fn cross_identity_examples() {
        assert_eq!(cross_identity_lhs(1, 0), NuPolynomial::from_ints(&[1, 4, 4]));
        assert_eq!(cross_identity_lhs(0, 0), NuPolynomial::zero());
        assert_eq!(cross_identity_lhs(2, 1), NuPolynomial::from_ints(&[1, -8, -4]));
        for (m, n) in [(1, 0), (0, 0), (2, 1)] {
            assert!(check_cross_identity(m, n).passed_strict());
        }
    }

    #[test]
    fn parity_class_matches_mod_two() {
        for n in 0..20u64 {
            assert_eq!(ParityClass::of(n) == ParityClass::Even, n % 2 == 0);
        }
    }
}
