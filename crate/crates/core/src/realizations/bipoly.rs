use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;

use crate::scalar::{fmt_univariate, GaussianRational, NuPolynomial, Rational};

/// Polynomial in x whose coefficients are polynomials in the deformation
/// parameter δ. Index k holds the coefficient of x^k; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPolynomial {
    coeffs: Vec<NuPolynomial>,
}

impl BiPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(NuPolynomial::one())
    }

    pub fn constant(c: NuPolynomial) -> Self {
        Self::from_x_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::x_power(1)
    }

    pub fn x_power(n: usize) -> Self {
        let mut coeffs = vec![NuPolynomial::zero(); n + 1];
        coeffs[n] = NuPolynomial::one();
        Self { coeffs }
    }

    pub fn delta() -> Self {
        Self::constant(NuPolynomial::nu())
    }

    pub fn from_x_coeffs(mut coeffs: Vec<NuPolynomial>) -> Self {
        while coeffs.last().is_some_and(NuPolynomial::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds from (x-degree, δ-degree, coefficient) triples.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        let mut out = Self::zero();
        for &(i, j, c) in terms {
            let mono = NuPolynomial::monomial(GaussianRational::from_int(c), j);
            out = &out + &(&Self::x_power(i) * &Self::constant(mono));
        }
        out
    }

    pub fn x_coeffs(&self) -> &[NuPolynomial] {
        &self.coeffs
    }

    pub fn x_coeff(&self, k: usize) -> NuPolynomial {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Degree in x; -1 for zero.
    pub fn x_degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &NuPolynomial) -> Self {
        Self::from_x_coeffs(self.coeffs.iter().map(|k| k * c).collect())
    }

    /// p(x + s, δ), by Horner evaluation at x + s.
    pub fn shift_x(&self, s: &Rational) -> Self {
        let lin = Self::from_x_coeffs(vec![
            NuPolynomial::from_rational(s.clone()),
            NuPolynomial::one(),
        ]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &lin) + &Self::constant(c.clone())
        })
    }

    /// p(x, -δ)
    pub fn flip_delta(&self) -> Self {
        let flip = |p: &NuPolynomial| {
            NuPolynomial::from_coeffs(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                    .collect(),
            )
        };
        Self::from_x_coeffs(self.coeffs.iter().map(flip).collect())
    }

    /// p(-x, δ)
    pub fn flip_x(&self) -> Self {
        Self::from_x_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Exact division by x; `None` if the constant term is nonzero.
    pub fn div_x(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(Self::zero()),
            Some(c) if c.is_zero() => Some(Self::from_x_coeffs(self.coeffs[1..].to_vec())),
            Some(_) => None,
        }
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_x_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale_int(k as i64))
                .collect(),
        )
    }

    /// p(x, δ0)
    pub fn substitute_delta(&self, delta: &Rational) -> Self {
        Self::from_x_coeffs(
            self.coeffs
                .iter()
                .map(|c| NuPolynomial::constant(c.eval_exact(delta)))
                .collect(),
        )
    }

    /// Horner evaluation at numeric (x, δ).
    pub fn eval(&self, x: f64, delta: f64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c.eval(delta))
    }
}

impl Add<&BiPolynomial> for &BiPolynomial {
    type Output = BiPolynomial;
    fn add(self, rhs: &BiPolynomial) -> BiPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPolynomial::from_x_coeffs(
            (0..n).map(|k| self.x_coeff(k) + rhs.x_coeff(k)).collect(),
        )
    }
}

impl Sub<&BiPolynomial> for &BiPolynomial {
    type Output = BiPolynomial;
    fn sub(self, rhs: &BiPolynomial) -> BiPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &BiPolynomial {
    type Output = BiPolynomial;
    fn neg(self) -> BiPolynomial {
        BiPolynomial::from_x_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul<&BiPolynomial> for &BiPolynomial {
    type Output = BiPolynomial;
    fn mul(self, rhs: &BiPolynomial) -> BiPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return BiPolynomial::zero();
        }
        let mut out = vec![NuPolynomial::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPolynomial::from_x_coeffs(out)
    }
}

struct InDelta<'a>(&'a NuPolynomial);

impl fmt::Display for InDelta<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_univariate(f, self.0.coeffs(), "δ")
    }
}

impl fmt::Display for BiPolynomial {
    /// Descending powers of x, δ-coefficients parenthesized when composite.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xs = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let single = c.coeffs().iter().filter(|t| !t.is_zero()).count() == 1;
            let mut body = if k == 0 {
                InDelta(c).to_string()
            } else if c.is_constant() {
                format!("{}{xs}", c.coeff(0).fmt_factor())
            } else if single {
                format!("{}{xs}", InDelta(c))
            } else {
                format!("({}){xs}", InDelta(c))
            };
            let negative = body.starts_with('-');
            if negative {
                body.remove(0);
            }
            match (first, negative) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Zero for BiPolynomial {
    fn zero() -> Self {
        BiPolynomial::zero()
    }
    fn is_zero(&self) -> bool {
        BiPolynomial::is_zero(self)
    }
}

impl Add for BiPolynomial {
    type Output = BiPolynomial;
    fn add(self, rhs: BiPolynomial) -> BiPolynomial {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    #[test]
    fn display() {
        let p = BiPolynomial::from_terms(&[(2, 0, 1), (1, 0, -1), (1, 1, 2), (0, 2, -1)]);
        assert_eq!(p.to_string(), "x^2 + (-1 + 2δ)x - δ^2");
        assert_eq!(BiPolynomial::zero().to_string(), "0");
        assert_eq!(BiPolynomial::from_terms(&[(1, 1, -3)]).to_string(), "-3δx");
    }

    #[test]
    fn substitutions() {
        let x = BiPolynomial::x();
        let sq = &x * &x;
        // (x+1)^2 = x^2 + 2x + 1
        assert_eq!(
            sq.shift_x(&rational(1, 1)),
            BiPolynomial::from_terms(&[(2, 0, 1), (1, 0, 2), (0, 0, 1)])
        );
        let p = BiPolynomial::from_terms(&[(1, 1, 1), (0, 2, 1)]);
        assert_eq!(p.flip_delta(), BiPolynomial::from_terms(&[(1, 1, -1), (0, 2, 1)]));
        assert_eq!(p.flip_delta().flip_delta(), p);
        assert_eq!(sq.flip_x(), sq);
        assert_eq!(x.div_x(), Some(BiPolynomial::one()));
        assert_eq!(BiPolynomial::one().div_x(), None);
    }
}
