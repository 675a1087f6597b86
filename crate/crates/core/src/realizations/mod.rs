//! Coordinate realizations of the single-mode algebra on polynomials in x
//! with coefficients depending on the deformation parameter δ (identified
//! with ν throughout).
//!
//! Two realizations are provided. On monomials the lowering operator is the
//! Dunkl-type operator `∂x + (δ/x)(1 - reflection)`, acting as
//! `x^n ↦ [n] x^(n-1)`. On the graded quasi-polynomials
//! `φ_n = Π_{k<n} (x - k - δ(-1)^k)` lowering and raising are shift
//! operators combined with the flip δ → -δ.

mod bipoly;

pub use bipoly::BiPolynomial;

use crate::error::{AlgebraError, Result};
use crate::report::AlgebraReport;
use crate::scalar::{deformed_number, parity_sign, rational, NuPolynomial, RadicalSum, Rational};
use crate::single_mode::build_single_mode;

const RECONSTRUCTED_REFLECTION: &str =
    "R acts by the grading Rφ_n = (-1)^n φ_n; no coordinate form is given for it";

const SCALAR_COMPOSITION: &str = "products of operators are extended linearly with [n]_ν as scalar \
     coefficients; composing the shift operators directly on δ-dependent coefficients flips them \
     and yields [a, a†]φ_n = (1 + 2δ)φ_n instead";

/// φ_0 … φ_max_n, expanded.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiPolyBasis {
    max_n: usize,
    polys: Vec<BiPolynomial>,
}

pub fn build_quasi_basis(max_n: usize) -> QuasiPolyBasis {
    let mut polys = vec![BiPolynomial::one()];
    for k in 0..max_n {
        // x - k - δ(-1)^k
        let factor = BiPolynomial::from_x_coeffs(vec![
            NuPolynomial::from_ints(&[-(k as i64), -parity_sign(k as u64)]),
            NuPolynomial::one(),
        ]);
        let next = &polys[k] * &factor;
        polys.push(next);
    }
    QuasiPolyBasis { max_n, polys }
}

impl QuasiPolyBasis {
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn phi(&self, n: usize) -> &BiPolynomial {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[BiPolynomial] {
        &self.polys
    }

    /// Coefficients c_n with F = Σ c_n φ_n, by greedy elimination of the
    /// top x-degree (every φ_n is monic in x).
    pub fn decompose(&self, f: &BiPolynomial) -> Result<Vec<NuPolynomial>> {
        let deg = f.x_degree();
        if deg > self.max_n as isize {
            return Err(AlgebraError::InvalidDimension {
                dim: self.max_n + 1,
                min: deg as usize + 1,
            });
        }
        let mut rest = f.clone();
        let mut out = vec![NuPolynomial::zero(); (deg + 1).max(0) as usize];
        while !rest.is_zero() {
            let d = rest.x_degree() as usize;
            let lead = rest.x_coeff(d);
            rest = &rest - &self.polys[d].scale(&lead);
            out[d] = lead;
        }
        Ok(out)
    }

    /// Applies `op` to each basis function of F and recombines with the
    /// coefficients of F held fixed, so that coefficients are scalars and
    /// are not touched by the δ-flip inside `op`.
    pub fn apply_linear(
        &self,
        f: &BiPolynomial,
        op: impl Fn(&BiPolynomial) -> BiPolynomial,
    ) -> Result<BiPolynomial> {
        let coeffs = self.decompose(f)?;
        Ok(coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(BiPolynomial::zero(), |acc, (n, c)| &acc + &op(&self.polys[n]).scale(c)))
    }

    /// Linear extension of Rφ_n = (-1)^n φ_n.
    pub fn reflect(&self, f: &BiPolynomial) -> Result<BiPolynomial> {
        let coeffs = self.decompose(f)?;
        Ok(coeffs
            .iter()
            .enumerate()
            .fold(BiPolynomial::zero(), |acc, (n, c)| {
                &acc + &self.polys[n].scale(&c.scale_int(parity_sign(n as u64)))
            }))
    }
}

/// Termwise action `x^n ↦ [n] x^(n-1)`.
pub fn monomial_lowering(p: &BiPolynomial) -> BiPolynomial {
    BiPolynomial::from_x_coeffs(
        p.x_coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * &deformed_number(n as u64))
            .collect(),
    )
}

/// The operator `∂x + (δ/x)(p(x) - p(-x))` applied literally.
pub fn dunkl_lowering(p: &BiPolynomial) -> BiPolynomial {
    let odd_part = (p - &p.flip_x())
        .div_x()
        .expect("p(x) - p(-x) is odd, hence divisible by x");
    &p.derivative_x() + &(&BiPolynomial::delta() * &odd_part)
}

/// Multiplication by x.
pub fn monomial_raising(p: &BiPolynomial) -> BiPolynomial {
    &BiPolynomial::x() * p
}

/// `F(x+1, -δ) - F(x, δ)`
pub fn quasi_lowering(f: &BiPolynomial) -> BiPolynomial {
    &f.shift_x(&rational(1, 1)).flip_delta() - f
}

/// `(x - δ) F(x-1, -δ)`
pub fn quasi_raising(f: &BiPolynomial) -> BiPolynomial {
    let x_minus_delta = BiPolynomial::from_x_coeffs(vec![NuPolynomial::from_ints(&[0, -1]), NuPolynomial::one()]);
    &x_minus_delta * &f.shift_x(&rational(-1, 1)).flip_delta()
}

fn family(id: &str, statement: &str, reports: Vec<AlgebraReport>) -> AlgebraReport {
    AlgebraReport::summarize(id, statement, &reports)
}

/// Exact bivariate checks of both realizations for n = 0..=max_n.
pub fn audit_realizations(max_n: usize) -> Result<Vec<AlgebraReport>> {
    if max_n < 2 {
        return Err(AlgebraError::InvalidDimension { dim: max_n, min: 2 });
    }
    let basis = build_quasi_basis(max_n + 1);
    let phi = |n: usize| basis.phi(n);
    let ns = 0..=max_n;
    let two_delta = NuPolynomial::from_ints(&[0, 2]);
    let delta = NuPolynomial::nu();

    let lowering = ns
        .clone()
        .map(|n| {
            let expected = match n {
                0 => BiPolynomial::zero(),
                _ => phi(n - 1).scale(&deformed_number(n as u64)),
            };
            AlgebraReport::compare("", "", n, &expected, &quasi_lowering(phi(n)))
        })
        .collect();

    let raising = ns
        .clone()
        .map(|n| AlgebraReport::compare("", "", n, phi(n + 1), &quasi_raising(phi(n))))
        .collect();

    let mut power = BiPolynomial::one();
    let mut powers = Vec::new();
    for n in ns.clone() {
        powers.push(AlgebraReport::compare("", "", n, phi(n), &power));
        power = basis.apply_linear(&power, quasi_raising)?;
    }

    let mut commutator = Vec::new();
    let mut number = Vec::new();
    for n in ns.clone() {
        let f = phi(n);
        let r_f = basis.reflect(f)?;
        let raised_lowered = basis.apply_linear(&quasi_lowering(f), quasi_raising)?;
        let lowered_raised = basis.apply_linear(&quasi_raising(f), quasi_lowering)?;
        let comm = &lowered_raised - &raised_lowered;
        let expected = f + &r_f.scale(&two_delta);
        commutator.push(AlgebraReport::compare("", "", n, &expected, &comm));
        let n_f = &(&raised_lowered - &f.scale(&delta)) + &r_f.scale(&delta);
        number.push(AlgebraReport::compare(
            "",
            "",
            n,
            &f.scale(&NuPolynomial::from_int(n as i64)),
            &n_f,
        ));
    }

    let mut monomial = Vec::new();
    let mut monomial_comm = Vec::new();
    for n in ns.clone() {
        let xn = BiPolynomial::x_power(n);
        let termwise = monomial_lowering(&xn);
        let expected = match n {
            0 => BiPolynomial::zero(),
            _ => BiPolynomial::x_power(n - 1).scale(&deformed_number(n as u64)),
        };
        let r = AlgebraReport::compare("", "", n, &expected, &termwise);
        monomial.push(if r.passed() {
            AlgebraReport::compare("", "", n, &dunkl_lowering(&xn), &termwise)
        } else {
            r
        });
        let comm = &monomial_lowering(&monomial_raising(&xn)) - &monomial_raising(&monomial_lowering(&xn));
        let eigen = NuPolynomial::from_ints(&[1, 2 * parity_sign(n as u64)]);
        monomial_comm.push(AlgebraReport::compare("", "", n, &xn.scale(&eigen), &comm));
    }

    let single = build_single_mode(max_n + 1)?;
    let mut elements = Vec::new();
    for n in 1..=max_n {
        let abstract_product = single.a.get(n - 1, n) * single.a_dag.get(n, n - 1);
        let quasi_down = basis.decompose(&quasi_lowering(phi(n)))?;
        let quasi_up = basis.decompose(&quasi_raising(phi(n - 1)))?;
        let quasi_product = RadicalSum::from(
            quasi_down.get(n - 1).cloned().unwrap_or_default() * quasi_up.get(n).cloned().unwrap_or_default(),
        );
        let mono_down = monomial_lowering(&BiPolynomial::x_power(n)).x_coeff(n - 1);
        let mono_up = monomial_raising(&BiPolynomial::x_power(n - 1)).x_coeff(n);
        let mono_product = RadicalSum::from(mono_down * mono_up);
        let r = AlgebraReport::compare("", "", n, &abstract_product, &quasi_product);
        elements.push(if r.passed() {
            AlgebraReport::compare("", "", n, &abstract_product, &mono_product)
        } else {
            r
        });
    }

    let zero = Rational::from_integer(0.into());
    let mut undeformed = Vec::new();
    for n in ns {
        let falling = (0..n).fold(BiPolynomial::one(), |acc, k| {
            &acc * &BiPolynomial::from_x_coeffs(vec![NuPolynomial::from_int(-(k as i64)), NuPolynomial::one()])
        });
        let r = AlgebraReport::compare("", "", n, &falling, &phi(n).substitute_delta(&zero));
        undeformed.push(if r.passed() {
            let expected = match n {
                0 => BiPolynomial::zero(),
                _ => phi(n - 1).substitute_delta(&zero).scale(&NuPolynomial::from_int(n as i64)),
            };
            AlgebraReport::compare("", "", n, &expected, &quasi_lowering(phi(n)).substitute_delta(&zero))
        } else {
            r
        });
    }

    Ok(vec![
        family("realizations.quasi_lowering", "aφ_n = [n]φ_(n-1)", lowering),
        family("realizations.quasi_raising", "a†φ_n = φ_(n+1)", raising),
        family("realizations.raising_power", "(a†)^n 1 = φ_n", powers),
        family("realizations.quasi_commutator", "[a, a†]φ_n = (1 + 2δR)φ_n", commutator)
            .with_note(format!("{RECONSTRUCTED_REFLECTION}; {SCALAR_COMPOSITION}")),
        family("realizations.quasi_number", "(a†a - δ + δR)φ_n = nφ_n", number)
            .with_note(RECONSTRUCTED_REFLECTION),
        family("realizations.monomial_lowering", "a x^n = [n]x^(n-1) = (∂x + (δ/x)(1 - reflection))x^n", monomial),
        family("realizations.monomial_commutator", "[a, x]x^n = (1 + 2δ(-1)^n)x^n", monomial_comm),
        family(
            "realizations.matrix_elements",
            "⟨n-1|a|n⟩⟨n|a†|n-1⟩ agrees across Fock, monomial and quasi-polynomial realizations",
            elements,
        )
        .with_note("δ identified with ν; Fock radicals squared before comparison"),
        family("realizations.undeformed_limit", "δ = 0: φ_n = x(x-1)…(x-n+1), aφ_n = nφ_(n-1)", undeformed),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_quasi_polynomials() {
        let b = build_quasi_basis(3);
        assert_eq!(b.phi(0), &BiPolynomial::one());
        assert_eq!(b.phi(1), &BiPolynomial::from_terms(&[(1, 0, 1), (0, 1, -1)]));
        // (x - δ)(x - 1 + δ) = x² - x + δ - δ²
        assert_eq!(
            b.phi(2),
            &BiPolynomial::from_terms(&[(2, 0, 1), (1, 0, -1), (0, 1, 1), (0, 2, -1)])
        );
        for n in 0..=3 {
            assert_eq!(b.phi(n).x_degree(), n as isize);
            assert!(b.phi(n).x_coeff(n).is_one());
        }
    }

    #[test]
    fn monomial_examples() {
        let x3 = BiPolynomial::x_power(3);
        assert_eq!(monomial_lowering(&x3), BiPolynomial::from_terms(&[(2, 0, 3), (2, 1, 2)]));
        assert!(monomial_lowering(&BiPolynomial::one()).is_zero());
        let p = &BiPolynomial::x_power(4) + &BiPolynomial::x();
        assert_eq!(
            monomial_lowering(&p),
            BiPolynomial::from_terms(&[(3, 0, 4), (0, 0, 1), (0, 1, 2)])
        );
    }

    #[test]
    fn lowering_phi3() {
        let b = build_quasi_basis(3);
        assert!(quasi_lowering(b.phi(0)).is_zero());
        assert_eq!(quasi_lowering(b.phi(3)), b.phi(2).scale(&deformed_number(3)));
    }

    #[test]
    fn decomposition_round_trip() {
        let b = build_quasi_basis(5);
        let f = BiPolynomial::from_terms(&[(5, 0, 2), (3, 2, -1), (0, 1, 7)]);
        let c = b.decompose(&f).unwrap();
        let back = c
            .iter()
            .enumerate()
            .fold(BiPolynomial::zero(), |acc, (n, k)| &acc + &b.phi(n).scale(k));
        assert_eq!(back, f);
        assert!(b.decompose(&BiPolynomial::x_power(6)).is_err());
    }

    #[test]
    fn audit_small() {
        for r in audit_realizations(6).unwrap() {
            assert!(r.passed_strict(), "{r}");
        }
        assert!(audit_realizations(1).is_err());
    }
}
