use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::basis::BasisLabel;
use crate::error::{AlgebraError, Result};
use crate::scalar::{GaussianRational, NuPolynomial, RadicalSum};

/// Dense square matrix over [`RadicalSum`] with a labeled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    basis: Vec<BasisLabel>,
    entries: Vec<RadicalSum>,
}

impl OperatorMatrix {
    /// Validates the basis (distinct, well-formed labels) and the entry count.
    pub fn new(basis: Vec<BasisLabel>, entries: Vec<RadicalSum>) -> Result<Self> {
        if basis.is_empty() {
            return Err(AlgebraError::InvalidDimension { dim: 0, min: 1 });
        }
        if entries.len() != basis.len() * basis.len() {
            return Err(AlgebraError::DimensionMismatch {
                left: entries.len(),
                right: basis.len() * basis.len(),
            });
        }
        if let Some(bad) = basis.iter().find(|b| !b.is_valid()) {
            return Err(AlgebraError::InvalidBasis(format!("{bad:?}")));
        }
        let distinct: HashSet<_> = basis.iter().collect();
        if distinct.len() != basis.len() {
            return Err(AlgebraError::InvalidBasis("repeated basis label".into()));
        }
        Ok(Self { basis, entries })
    }

    pub fn zeros(basis: Vec<BasisLabel>) -> Self {
        let n = basis.len();
        Self {
            basis,
            entries: vec![RadicalSum::zero(); n * n],
        }
    }

    pub fn identity(basis: Vec<BasisLabel>) -> Self {
        Self::diagonal(basis.clone(), vec![RadicalSum::one(); basis.len()])
    }

    pub fn diagonal(basis: Vec<BasisLabel>, diag: Vec<RadicalSum>) -> Self {
        assert_eq!(basis.len(), diag.len(), "diagonal length must match basis");
        let mut m = Self::zeros(basis);
        for (k, d) in diag.into_iter().enumerate() {
            m.set(k, k, d);
        }
        m
    }

    pub fn from_fn(basis: Vec<BasisLabel>, mut f: impl FnMut(usize, usize) -> RadicalSum) -> Self {
        let n = basis.len();
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { basis, entries }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn get(&self, row: usize, col: usize) -> &RadicalSum {
        &self.entries[row * self.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: RadicalSum) {
        let n = self.dim();
        self.entries[row * n + col] = value;
    }

    /// Replaces the basis labels (same dimension).
    pub fn relabel(mut self, basis: Vec<BasisLabel>) -> Result<Self> {
        if basis.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                left: basis.len(),
                right: self.dim(),
            });
        }
        self.basis = basis;
        Self::new(self.basis, self.entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RadicalSum::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.dim();
        (0..n).all(|r| (0..n).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<RadicalSum> {
        (0..self.dim()).map(|k| self.get(k, k).clone()).collect()
    }

    /// Nonzero (col, value) pairs of a row.
    pub fn row_entries(&self, row: usize) -> impl Iterator<Item = (usize, &RadicalSum)> {
        let n = self.dim();
        self.entries[row * n..(row + 1) * n]
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
    }

    fn check_same_basis(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(AlgebraError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        if self.basis != other.basis {
            return Err(AlgebraError::BasisMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_basis(other)?;
        Ok(Self {
            basis: self.basis.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_basis(other)?;
        Ok(Self {
            basis: self.basis.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    /// Matrix product, skipping zero entries.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_basis(other)?;
        let n = self.dim();
        let mut out = Self::zeros(self.basis.clone());
        let rows_b: Vec<Vec<(usize, &RadicalSum)>> =
            (0..n).map(|k| other.row_entries(k).collect()).collect();
        for i in 0..n {
            for (k, a) in self.row_entries(i) {
                for &(j, b) in &rows_b[k] {
                    let idx = i * n + j;
                    let prod = a * b;
                    out.entries[idx] = &out.entries[idx] + &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RadicalSum) -> Self {
        Self {
            basis: self.basis.clone(),
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn scale_poly(&self, p: &NuPolynomial) -> Self {
        Self {
            basis: self.basis.clone(),
            entries: self.entries.iter().map(|e| e.scale_poly(p)).collect(),
        }
    }

    pub fn scale_scalar(&self, c: &GaussianRational) -> Self {
        self.scale_poly(&NuPolynomial::constant(c.clone()))
    }

    /// Conjugate transpose (radicals are real for ν in the admissible domain).
    pub fn adjoint(&self) -> Self {
        let n = self.dim();
        Self::from_fn(self.basis.clone(), |r, c| self.entries[c * n + r].conj())
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        Self::from_fn(self.basis.clone(), |r, c| self.entries[c * n + r].clone())
    }

    /// Restriction to the given rows/columns, relabeled with `basis`.
    pub fn restrict(&self, indices: &[usize], basis: Vec<BasisLabel>) -> Result<Self> {
        if indices.len() != basis.len() {
            return Err(AlgebraError::DimensionMismatch {
                left: indices.len(),
                right: basis.len(),
            });
        }
        let n = self.dim();
        let entries = indices
            .iter()
            .flat_map(|&r| indices.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.entries[r * n + c].clone())
            .collect();
        Self::new(basis, entries)
    }

    /// Entrywise numeric evaluation at ν > -1/2.
    pub fn eval(&self, nu: f64) -> Result<DMatrix<Complex64>> {
        eval_matrix(self, nu)
    }

    /// Largest ν-degree appearing in any entry.
    pub fn max_degree(&self) -> isize {
        self.entries.iter().map(RadicalSum::max_degree).max().unwrap_or(-1)
    }
}

/// Entrywise numeric evaluation; requires ν > -1/2.
pub fn eval_matrix(a: &OperatorMatrix, nu: f64) -> Result<DMatrix<Complex64>> {
    if !(nu > -0.5) || !nu.is_finite() {
        return Err(AlgebraError::InvalidNu(nu));
    }
    let n = a.dim();
    let mut out = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for r in 0..n {
        for (c, v) in a.row_entries(r) {
            out[(r, c)] = v.numeric_eval(nu)?;
        }
    }
    Ok(out)
}

impl Add<&OperatorMatrix> for &OperatorMatrix {
    type Output = OperatorMatrix;
    /// Panics if the bases differ; use [`OperatorMatrix::try_add`] otherwise.
    fn add(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.try_add(rhs).expect("operator sum on mismatched bases")
    }
}

impl Sub<&OperatorMatrix> for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.try_sub(rhs).expect("operator difference on mismatched bases")
    }
}

impl Mul<&OperatorMatrix> for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.try_mul(rhs).expect("operator product on mismatched bases")
    }
}

impl Neg for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn neg(self) -> OperatorMatrix {
        OperatorMatrix {
            basis: self.basis.clone(),
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Display for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for r in 0..n {
            write!(f, "[")?;
            for c in 0..n {
                let s = &cells[r * n + c];
                let pad = width - s.chars().count();
                write!(f, " {}{}", " ".repeat(pad), s)?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}
