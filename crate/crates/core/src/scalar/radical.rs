//! Sums of radicals `Σ q_k(ν) √p_k(ν)` with canonical radicands.
//!
//! A canonical radicand is `w · Π g_i^{r_i}` where `w` is a square-free
//! positive integer and the `g_i` are primitive integer polynomials with
//! positive leading coefficient. Square factors are pulled out of the root
//! only when the extracted factor is non-negative on the admissible domain
//! ν > -1/2: `g^e` leaves the root when `g` has no real root above -1/2, or
//! when `e` is even. A negative rational content is written as a factor `i`
//! in front of the root.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gaussian::{rational, GaussianRational, Rational};
use super::poly::NuPolynomial;
use crate::error::{AlgebraError, Result};

/// Trial division stops at this bound; larger square factors of a huge
/// integer content are only found when the cofactor is itself a square.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 20;

/// One term `coeff(ν) · √radicand(ν)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadicalTerm {
    pub coeff: NuPolynomial,
    pub radicand: NuPolynomial,
}

/// Exact sum of radicals; the empty term list is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RadicalSum {
    terms: Vec<RadicalTerm>,
}

/// n = s^2 · w with w square-free (best effort beyond the trial-division bound).
fn split_square(n: &BigUint) -> (BigUint, BigUint) {
    let mut rem = n.clone();
    let mut s = BigUint::one();
    let mut w = BigUint::one();
    if rem.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    let mut d: u64 = 2;
    loop {
        let db = BigUint::from(d);
        if &db * &db * &db > rem || d > TRIAL_DIVISION_LIMIT {
            break;
        }
        let mut e = 0u32;
        while (&rem % &db).is_zero() {
            rem /= &db;
            e += 1;
        }
        if e > 0 {
            s *= db.pow(e / 2);
            if e % 2 == 1 {
                w *= &db;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let r = rem.sqrt();
    if &r * &r == rem {
        s *= r;
    } else {
        w *= rem;
    }
    (s, w)
}

/// √(u/v) = (s/v)·√w (times i when u/v < 0).
fn split_rational_sqrt(c: &Rational) -> (GaussianRational, BigInt) {
    let negative = c.is_negative();
    let uv = (c.numer() * c.denom()).abs();
    let (s, w) = split_square(uv.magnitude());
    let factor = Rational::new(BigInt::from_biguint(Sign::Plus, s), c.denom().clone());
    let coeff = if negative {
        GaussianRational::new(Rational::zero(), factor)
    } else {
        GaussianRational::real(factor)
    };
    (coeff, BigInt::from_biguint(Sign::Plus, w))
}

/// Monic rational polynomial f = κ·g with g primitive integer, κ > 0.
fn primitive_part(f: &NuPolynomial) -> (Rational, NuPolynomial) {
    let coeffs = f.real_coeffs();
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let g = if ints.last().is_some_and(|l| l.is_negative()) { -g } else { g };
    let prim: Vec<Rational> = ints
        .into_iter()
        .map(|c| Rational::from_integer(c / &g))
        .collect();
    (Rational::new(g, lcm), NuPolynomial::from_rationals(prim))
}

/// True when the square-free real polynomial has no root in ν > -1/2.
fn root_free_on_domain(g: &NuPolynomial) -> bool {
    let half = rational(-1, 2);
    let edge = NuPolynomial::from_ints(&[1, 2]);
    let g = match g.eval_exact(&half).is_zero() {
        true => g.exact_div(&edge).expect("root at -1/2 implies factor 1+2ν"),
        false => g.clone(),
    };
    g.degree() <= 0 || g.real_roots_above(&half) == 0
}

/// Splits √p into an extracted coefficient and a canonical radicand.
/// Returns a zero coefficient for p = 0.
fn canonical_sqrt(p: &NuPolynomial) -> Result<(NuPolynomial, NuPolynomial)> {
    if !p.is_real() {
        return Err(AlgebraError::NonRealRadicand(p.to_string()));
    }
    if p.is_zero() {
        return Ok((NuPolynomial::zero(), NuPolynomial::one()));
    }
    if p.is_constant() {
        let (c, w) = split_rational_sqrt(&p.coeff(0).re);
        return Ok((
            NuPolynomial::constant(c),
            NuPolynomial::from_rational(Rational::from_integer(w)),
        ));
    }
    let mut content = p.leading().expect("nonzero").re.clone();
    let mut extracted = NuPolynomial::one();
    let mut inside = NuPolynomial::one();
    for (idx, f) in p.square_free_decomposition().iter().enumerate() {
        if f.degree() <= 0 {
            continue;
        }
        let mult = idx as u32 + 1;
        let (kappa, g) = primitive_part(f);
        for _ in 0..mult {
            content *= &kappa;
        }
        let e = if root_free_on_domain(&g) {
            mult / 2
        } else {
            2 * (mult / 4)
        };
        extracted = &extracted * &g.pow(e);
        inside = &inside * &g.pow(mult - 2 * e);
    }
    let (c, w) = split_rational_sqrt(&content);
    Ok((
        extracted.scale(&c),
        inside.scale(&GaussianRational::real(Rational::from_integer(w))),
    ))
}

/// Product of two canonical radicands, re-canonicalized.
fn multiply_radicands(a: &NuPolynomial, b: &NuPolynomial) -> (NuPolynomial, NuPolynomial) {
    if a.is_one() {
        return (NuPolynomial::one(), b.clone());
    }
    if b.is_one() {
        return (NuPolynomial::one(), a.clone());
    }
    if a == b {
        return (a.clone(), NuPolynomial::one());
    }
    canonical_sqrt(&(a * b)).expect("product of real radicands is real")
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_poly(NuPolynomial::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(NuPolynomial::from_int(n))
    }

    pub fn from_gaussian(c: GaussianRational) -> Self {
        Self::from_poly(NuPolynomial::constant(c))
    }

    /// A polynomial, i.e. a single term with radicand 1.
    pub fn from_poly(p: NuPolynomial) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        Self {
            terms: vec![RadicalTerm {
                coeff: p,
                radicand: NuPolynomial::one(),
            }],
        }
    }

    /// √p for a real polynomial p.
    pub fn sqrt(p: &NuPolynomial) -> Result<Self> {
        Self::from_terms([(NuPolynomial::one(), p.clone())])
    }

    /// Builds a canonical sum from arbitrary (coefficient, radicand) pairs.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NuPolynomial, NuPolynomial)>,
    {
        let mut acc: BTreeMap<NuPolynomial, NuPolynomial> = BTreeMap::new();
        for (coeff, radicand) in terms {
            if coeff.is_zero() {
                continue;
            }
            let (extra, rad) = canonical_sqrt(&radicand)?;
            let c = &coeff * &extra;
            if c.is_zero() {
                continue;
            }
            let slot = acc.entry(rad).or_default();
            *slot = &*slot + &c;
        }
        Ok(Self::from_canonical_map(acc))
    }

    fn from_canonical_map(acc: BTreeMap<NuPolynomial, NuPolynomial>) -> Self {
        Self {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(radicand, coeff)| RadicalTerm { coeff, radicand })
                .collect(),
        }
    }

    fn to_map(&self) -> BTreeMap<NuPolynomial, NuPolynomial> {
        self.terms
            .iter()
            .map(|t| (t.radicand.clone(), t.coeff.clone()))
            .collect()
    }

    /// Re-runs canonicalization on every term; a no-op for values built
    /// through the public constructors.
    pub fn recanonicalize(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|t| (t.coeff.clone(), t.radicand.clone())))
            .expect("canonical radicands are real")
    }

    pub fn terms(&self) -> &[RadicalTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_polynomial().is_some_and(|p| p.is_one())
    }

    /// The value as a polynomial when no nontrivial radical is present.
    pub fn as_polynomial(&self) -> Option<NuPolynomial> {
        match self.terms.as_slice() {
            [] => Some(NuPolynomial::zero()),
            [t] if t.radicand.is_one() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    /// Complex conjugate for real ν (radicals of canonical radicands are
    /// real wherever the radicand is non-negative).
    pub fn conj(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| RadicalTerm {
                    coeff: t.coeff.conj(),
                    radicand: t.radicand.clone(),
                })
                .collect(),
        }
    }

    pub fn scale_poly(&self, p: &NuPolynomial) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| RadicalTerm {
                    coeff: &t.coeff * p,
                    radicand: t.radicand.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.scale_poly(&NuPolynomial::constant(c.clone()))
    }

    /// Largest ν-degree among coefficients and radicands (-1 for zero).
    pub fn max_degree(&self) -> isize {
        self.terms
            .iter()
            .map(|t| t.coeff.degree().max(t.radicand.degree()))
            .max()
            .unwrap_or(-1)
    }

    pub fn numeric_eval(&self, nu: f64) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            let value = t.radicand.eval(nu).re;
            let scale: f64 = t
                .radicand
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| c.to_complex().norm() * nu.abs().powi(k as i32))
                .sum();
            if value < -1e-12 * (1.0 + scale) {
                return Err(AlgebraError::NegativeRadicand {
                    radicand: t.radicand.to_string(),
                    nu,
                    value,
                });
            }
            acc += t.coeff.eval(nu) * value.max(0.0).sqrt();
        }
        Ok(acc)
    }

    /// Exact specialization at a rational ν.
    pub fn substitute(&self, nu: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|t| {
            (
                NuPolynomial::constant(t.coeff.eval_exact(nu)),
                NuPolynomial::constant(t.radicand.eval_exact(nu)),
            )
        }))
        .expect("real radicands stay real")
    }
}

impl Add<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let mut acc = self.to_map();
        for t in &rhs.terms {
            let slot = acc.entry(t.radicand.clone()).or_default();
            *slot = &*slot + &t.coeff;
        }
        RadicalSum::from_canonical_map(acc)
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        RadicalSum {
            terms: self
                .terms
                .iter()
                .map(|t| RadicalTerm {
                    coeff: -&t.coeff,
                    radicand: t.radicand.clone(),
                })
                .collect(),
        }
    }
}

impl Neg for RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        -&self
    }
}

impl Sub<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        self + &(-rhs)
    }
}

impl Mul<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: &RadicalSum) -> RadicalSum {
        if self.is_zero() || rhs.is_zero() {
            return RadicalSum::zero();
        }
        let mut acc: BTreeMap<NuPolynomial, NuPolynomial> = BTreeMap::new();
        for a in &self.terms {
            for b in &rhs.terms {
                let (extra, rad) = multiply_radicands(&a.radicand, &b.radicand);
                let c = &(&a.coeff * &b.coeff) * &extra;
                let slot = acc.entry(rad).or_default();
                *slot = &*slot + &c;
            }
        }
        RadicalSum::from_canonical_map(acc)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RadicalSum {
            type Output = RadicalSum;
            fn $m(self, rhs: RadicalSum) -> RadicalSum {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RadicalSum> for RadicalSum {
            type Output = RadicalSum;
            fn $m(self, rhs: &RadicalSum) -> RadicalSum {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<NuPolynomial> for RadicalSum {
    fn from(p: NuPolynomial) -> Self {
        Self::from_poly(p)
    }
}

fn fmt_term(t: &RadicalTerm) -> String {
    let root = if t.radicand.is_one() {
        None
    } else if t.radicand.is_constant() {
        Some(format!("√{}", t.radicand))
    } else {
        Some(format!("√({})", t.radicand))
    };
    let Some(root) = root else {
        return t.coeff.to_string();
    };
    if t.coeff.is_constant() {
        let c = t.coeff.coeff(0);
        format!("{}{}", c.fmt_factor(), root)
    } else {
        format!("({})·{}", t.coeff, root)
    }
}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let s = fmt_term(t);
            match (k, s.strip_prefix('-')) {
                (0, _) => write!(f, "{s}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {s}")?,
            }
        }
        Ok(())
    }
}

/// Floating-point evaluation of exact scalars.
pub trait NumericEval {
    fn numeric_eval(&self, nu: f64) -> Result<Complex64>;
}

impl NumericEval for NuPolynomial {
    fn numeric_eval(&self, nu: f64) -> Result<Complex64> {
        Ok(self.eval(nu))
    }
}

impl NumericEval for RadicalSum {
    fn numeric_eval(&self, nu: f64) -> Result<Complex64> {
        RadicalSum::numeric_eval(self, nu)
    }
}

pub fn numeric_eval<T: NumericEval + ?Sized>(value: &T, nu: f64) -> Result<Complex64> {
    value.numeric_eval(nu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> NuPolynomial {
        NuPolynomial::from_ints(c)
    }

    fn sqrt(c: &[i64]) -> RadicalSum {
        RadicalSum::sqrt(&p(c)).unwrap()
    }

    #[test]
    fn integer_squares_are_extracted() {
        assert_eq!(sqrt(&[4]), RadicalSum::from_int(2));
        assert_eq!(sqrt(&[8]), sqrt(&[2]).scale(&GaussianRational::from_int(2)));
        assert_eq!(sqrt(&[0]), RadicalSum::zero());
        assert_eq!(sqrt(&[12]).to_string(), "2√3");
    }

    #[test]
    fn rational_radicand_moves_denominator_out() {
        let r = RadicalSum::sqrt(&NuPolynomial::from_rational(rational(1, 2))).unwrap();
        assert_eq!(r, sqrt(&[2]).scale(&GaussianRational::from_ratio(1, 2)));
    }

    #[test]
    fn negative_constant_becomes_imaginary() {
        let r = sqrt(&[-4]);
        assert_eq!(r, RadicalSum::from_gaussian(GaussianRational::new(rational(0, 1), rational(2, 1))));
    }

    #[test]
    fn domain_positive_square_leaves_the_root() {
        // √((1+2ν)^2) = 1+2ν on ν > -1/2
        let r = RadicalSum::sqrt(&p(&[1, 2]).pow(2)).unwrap();
        assert_eq!(r.as_polynomial(), Some(p(&[1, 2])));
        // √(4(1+2ν)) = 2√(1+2ν)
        let r = sqrt(&[4, 8]);
        assert_eq!(r.to_string(), "2√(1 + 2ν)");
    }

    #[test]
    fn sign_changing_square_stays_inside() {
        // √(ν^2) = |ν| is not a polynomial on the domain
        let r = sqrt(&[0, 0, 1]);
        assert!(r.as_polynomial().is_none());
        // but √(ν^4) = ν^2 is
        let r = sqrt(&[0, 0, 0, 0, 1]);
        assert_eq!(r.as_polynomial(), Some(p(&[0, 0, 1])));
    }

    #[test]
    fn like_radicals_merge() {
        let a = sqrt(&[3, 2]);
        let b = sqrt(&[12, 8]);
        let sum = &a + &b;
        assert_eq!(sum.terms().len(), 1);
        assert_eq!(sum, a.scale(&GaussianRational::from_int(3)));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_of_roots() {
        // √([1][1]) = [1]
        let one = sqrt(&[1, 2]);
        assert_eq!((&one * &one).as_polynomial(), Some(p(&[1, 2])));
        // √2 · √(2(1+2ν)) = 2√(1+2ν)
        let prod = &sqrt(&[2]) * &sqrt(&[2, 4]);
        assert_eq!(prod, sqrt(&[1, 2]).scale(&GaussianRational::from_int(2)));
    }

    #[test]
    fn numeric_evaluation() {
        assert!((sqrt(&[1, 2]).numeric_eval(0.0).unwrap().re - 1.0).abs() < 1e-15);
        assert_eq!(RadicalSum::zero().numeric_eval(3.0).unwrap().re, 0.0);
        assert!(matches!(
            sqrt(&[0, 1]).numeric_eval(-0.25),
            Err(AlgebraError::NegativeRadicand { .. })
        ));
        assert!((numeric_eval(&p(&[1, 2]), 0.5).unwrap().re - 2.0).abs() < 1e-15);
    }

    #[test]
    fn substitution_specializes_exactly() {
        let r = sqrt(&[3, 8, 4]); // √((3+2ν)(1+2ν))
        assert_eq!(r.substitute(&rational(0, 1)), sqrt(&[3]));
        assert_eq!(r.substitute(&rational(1, 2)), sqrt(&[8]));
    }

    #[test]
    fn non_real_radicand_is_rejected() {
        let z = NuPolynomial::constant(GaussianRational::i());
        assert!(matches!(RadicalSum::sqrt(&z), Err(AlgebraError::NonRealRadicand(_))));
    }

    #[test]
    fn split_square_finds_large_squares() {
        let n = BigUint::from(1_000_003u64) * BigUint::from(1_000_003u64) * BigUint::from(6u32);
        let (s, w) = split_square(&n);
        assert_eq!(s, BigUint::from(1_000_003u64));
        assert_eq!(w, BigUint::from(6u32));
    }
}
