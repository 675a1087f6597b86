use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::gaussian::{GaussianRational, Rational};

/// Exact polynomial in the deformation parameter ν with Gaussian-rational
/// coefficients. `coeffs[k]` multiplies ν^k; trailing zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NuPolynomial {
    coeffs: Vec<GaussianRational>,
}

impl NuPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::constant(GaussianRational::real(r))
    }

    /// The polynomial ν.
    pub fn nu() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    pub fn monomial(c: GaussianRational, power: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); power];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficients, ν-ascending.
    pub fn from_ints(ints: &[i64]) -> Self {
        Self::from_coeffs(ints.iter().map(|&n| GaussianRational::from_int(n)).collect())
    }

    pub fn from_rationals(rs: Vec<Rational>) -> Self {
        Self::from_coeffs(rs.into_iter().map(GaussianRational::real).collect())
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_real)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    /// Real parts of the coefficients (meaningful when `is_real`).
    pub fn real_coeffs(&self) -> Vec<Rational> {
        self.coeffs.iter().map(|c| c.re.clone()).collect()
    }

    pub fn conj(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(GaussianRational::conj).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&GaussianRational::from_int(n))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from_int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, nu: f64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * nu + c.to_complex())
    }

    pub fn eval_exact(&self, nu: &Rational) -> GaussianRational {
        let x = GaussianRational::real(nu.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * &x) + c)
    }

    /// p(ν) ↦ p(ν + shift).
    pub fn shift(&self, shift: &Rational) -> Self {
        let lin = Self::from_coeffs(vec![GaussianRational::real(shift.clone()), GaussianRational::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    /// Polynomial division over Q(i); panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor.leading().expect("division by zero polynomial").clone();
        let dd = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![GaussianRational::zero(); rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[k + i] = &rem[k + i] - &t;
            }
            quot[k] = c;
        }
        rem.truncate(dd - 1);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.inv();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun square-free decomposition of a non-constant polynomial:
    /// returns monic `(f_1, f_2, ...)` with `self = lc · Π f_i^i`.
    pub fn square_free_decomposition(&self) -> Vec<Self> {
        let p = self.monic();
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.exact_div(&a0).expect("gcd divides");
        let c = dp.exact_div(&a0).expect("gcd divides derivative");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        while b.degree() > 0 {
            let a = b.gcd(&d);
            b = b.exact_div(&a).expect("gcd divides");
            let c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            out.push(a);
        }
        out
    }

    /// Number of distinct real roots in the open interval (a, ∞) of a real,
    /// square-free polynomial, via a Sturm sequence. `a` must not be a root.
    pub(crate) fn real_roots_above(&self, a: &Rational) -> usize {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-r);
        }
        let variations = |signs: Vec<i8>| -> usize {
            let nz: Vec<i8> = signs.into_iter().filter(|&s| s != 0).collect();
            nz.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let sign = |r: &Rational| -> i8 {
            if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }
        };
        let at_a = variations(seq.iter().map(|s| sign(&s.eval_exact(a).re)).collect());
        let at_inf = variations(
            seq.iter()
                .map(|s| s.leading().map(|l| sign(&l.re)).unwrap_or(0))
                .collect(),
        );
        at_a.saturating_sub(at_inf)
    }
}

impl Add<&NuPolynomial> for &NuPolynomial {
    type Output = NuPolynomial;
    fn add(self, rhs: &NuPolynomial) -> NuPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NuPolynomial::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&NuPolynomial> for &NuPolynomial {
    type Output = NuPolynomial;
    fn sub(self, rhs: &NuPolynomial) -> NuPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NuPolynomial::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&NuPolynomial> for &NuPolynomial {
    type Output = NuPolynomial;
    fn mul(self, rhs: &NuPolynomial) -> NuPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return NuPolynomial::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        NuPolynomial::from_coeffs(out)
    }
}

impl Neg for &NuPolynomial {
    type Output = NuPolynomial;
    fn neg(self) -> NuPolynomial {
        NuPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for NuPolynomial {
    type Output = NuPolynomial;
    fn neg(self) -> NuPolynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for NuPolynomial {
            type Output = NuPolynomial;
            fn $m(self, rhs: NuPolynomial) -> NuPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&NuPolynomial> for NuPolynomial {
            type Output = NuPolynomial;
            fn $m(self, rhs: &NuPolynomial) -> NuPolynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<NuPolynomial> for &NuPolynomial {
            type Output = NuPolynomial;
            fn $m(self, rhs: NuPolynomial) -> NuPolynomial {
                self.$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Writes `Σ c_k s^k` in ascending powers of the symbol `s`.
pub(crate) fn fmt_univariate(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[GaussianRational],
    symbol: &str,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sym = match k {
            0 => String::new(),
            1 => symbol.to_string(),
            _ => format!("{symbol}^{k}"),
        };
        let pure_imaginary = c.re.is_zero();
        let (negative, mag) = if (c.is_real() && c.re.is_negative()) || (pure_imaginary && c.im.is_negative()) {
            (true, -c)
        } else {
            (false, c.clone())
        };
        let body = if k == 0 {
            match mag.is_real() || pure_imaginary {
                true => mag.to_string(),
                false => format!("({mag})"),
            }
        } else {
            format!("{}{}", mag.fmt_factor(), sym)
        };
        match (first, negative) {
            (true, false) => write!(f, "{body}")?,
            (true, true) => write!(f, "-{body}")?,
            (false, false) => write!(f, " + {body}")?,
            (false, true) => write!(f, " - {body}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for NuPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_univariate(f, &self.coeffs, "ν")
    }
}

#[cfg(test)]
mod tests {
    use super::super::gaussian::rational;
    use super::*;

    fn p(c: &[i64]) -> NuPolynomial {
        NuPolynomial::from_ints(c)
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert_eq!(p(&[0, 0]).degree(), -1);
        assert!(p(&[0]).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 4, 4]).to_string(), "1 + 4ν + 4ν^2");
        assert_eq!(p(&[1, -8, -4]).to_string(), "1 - 8ν - 4ν^2");
        assert_eq!(p(&[0, 1]).to_string(), "ν");
        assert_eq!(NuPolynomial::zero().to_string(), "0");
        let half = NuPolynomial::monomial(GaussianRational::from_ratio(-1, 2), 1);
        assert_eq!(half.to_string(), "-(1/2)ν");
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[1, 2]);
        let b = p(&[3, 2]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.gcd(&a), a.monic());
        assert!(prod.exact_div(&p(&[1, 1])).is_none());
    }

    #[test]
    fn square_free_decomposition_recovers_multiplicities() {
        // (1+2ν)^2 (3+2ν)
        let f = &p(&[1, 2]).pow(2) * &p(&[3, 2]);
        let parts = f.square_free_decomposition();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], p(&[3, 2]).monic());
        assert_eq!(parts[1], p(&[1, 2]).monic());
    }

    #[test]
    fn sturm_counts_roots_above() {
        let half = rational(-1, 2);
        assert_eq!(p(&[3, 2]).real_roots_above(&half), 0);
        assert_eq!(p(&[0, 1]).real_roots_above(&half), 1);
        // ν^2 - ν + 1 has no real roots
        assert_eq!(p(&[1, -1, 1]).real_roots_above(&half), 0);
        // (ν - 1)(ν - 2)
        assert_eq!(p(&[2, -3, 1]).real_roots_above(&half), 2);
    }

    #[test]
    fn shift_and_eval() {
        let f = p(&[1, 2, 3]);
        let s = rational(-1, 2);
        let g = f.shift(&s);
        for x in [-1.0, 0.0, 0.7, 3.0] {
            assert!((g.eval(x) - f.eval(x - 0.5)).norm() < 1e-12);
        }
    }
}
