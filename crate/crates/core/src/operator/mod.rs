//! Operator matrices over exact radicals, algebraic combinators and the
//! relation-checking engine.

mod basis;
mod expr;
mod matrix;

pub use basis::{fock_basis, spin_basis, BasisLabel};
pub use expr::{
    audit_claim, evaluate_exact, evaluate_numeric, numeric_generators, Claim, ClaimOutcome, Expr,
    GeneratorSet, Relation, Suite, NUMERIC_RELATIVE_TOLERANCE,
};
pub use matrix::{eval_matrix, OperatorMatrix};

use std::collections::BTreeSet;

use crate::error::{AlgebraError, Result};
use crate::report::{AlgebraReport, Mode, Witness};
use crate::scalar::RadicalSum;

/// The ν grid used for residuals of failed exact checks.
pub const NU_GRID: [f64; 6] = [0.0, 0.1, 0.25, 0.5, 1.0, 2.0];

/// AB - BA
pub fn commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    a.try_mul(b)?.try_sub(&b.try_mul(a)?)
}

/// AB + BA
pub fn anticommutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    a.try_mul(b)?.try_add(&b.try_mul(a)?)
}

/// Kronecker product of two Fock-basis operators; `a` carries the major index.
pub fn tensor(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    let fock = |m: &OperatorMatrix| -> Result<Vec<usize>> {
        m.basis()
            .iter()
            .map(|l| match *l {
                BasisLabel::Fock(n) => Ok(n),
                other => Err(AlgebraError::InvalidBasis(format!(
                    "tensor factor must use a Fock basis, found {other}"
                ))),
            })
            .collect()
    };
    let (na, nb) = (fock(a)?, fock(b)?);
    let basis: Vec<BasisLabel> = na
        .iter()
        .flat_map(|&i| nb.iter().map(move |&j| BasisLabel::TwoMode(i, j)))
        .collect();
    let db = b.dim();
    let mut out = OperatorMatrix::zeros(basis);
    for ra in 0..a.dim() {
        for (ca, va) in a.row_entries(ra) {
            for rb in 0..db {
                for (cb, vb) in b.row_entries(rb) {
                    out.set(ra * db + rb, ca * db + cb, va * vb);
                }
            }
        }
    }
    Ok(out)
}

/// Distinct sample points for the numeric zero-test fallback.
fn fallback_points(count: usize) -> Vec<f64> {
    (0..count).map(|k| 0.05 + 0.37 * k as f64).collect()
}

fn max_residual_on_grid(diffs: &[RadicalSum]) -> f64 {
    let mut worst = 0.0f64;
    for d in diffs {
        for nu in NU_GRID {
            if let Ok(v) = d.numeric_eval(nu) {
                worst = worst.max(v.norm());
            }
        }
    }
    worst
}

/// Compares `lhs` and `rhs` entrywise on the rows selected by `mask`
/// (all rows when `None`).
///
/// Exact canonical equality gives an exact Pass. Entries whose canonical
/// forms differ are re-tested numerically at (max degree + 2) sample points
/// with tolerance 1e-12; if they vanish there the verdict is a Pass in
/// mixed mode, otherwise a Fail with the first offending entry as witness.
pub fn check_relation(
    relation_id: &str,
    lhs: &OperatorMatrix,
    rhs: &OperatorMatrix,
    mask: Option<&[usize]>,
) -> Result<AlgebraReport> {
    if lhs.dim() != rhs.dim() {
        return Err(AlgebraError::DimensionMismatch {
            left: lhs.dim(),
            right: rhs.dim(),
        });
    }
    if lhs.basis() != rhs.basis() {
        return Err(AlgebraError::BasisMismatch);
    }
    let n = lhs.dim();
    let rows: BTreeSet<usize> = match mask {
        Some(m) => m.iter().copied().filter(|&r| r < n).collect(),
        None => (0..n).collect(),
    };
    let excluded: Vec<usize> = (0..n).filter(|r| !rows.contains(r)).collect();

    let mut differing = Vec::new();
    for &r in &rows {
        for c in 0..n {
            let d = lhs.get(r, c) - rhs.get(r, c);
            if !d.is_zero() {
                differing.push((r, c, d));
            }
        }
    }
    let mut report = AlgebraReport::pass(relation_id, relation_id, Mode::Exact);
    report.excluded_rows = excluded;
    if differing.is_empty() {
        return Ok(report);
    }

    let degree = differing.iter().map(|(_, _, d)| d.max_degree()).max().unwrap_or(0);
    let points = fallback_points((degree.max(0) + 2) as usize);
    let vanishes = |r: usize, c: usize, d: &RadicalSum| {
        points.iter().all(|&nu| {
            let scale = lhs.get(r, c).numeric_eval(nu).map(|v| v.norm()).unwrap_or(0.0)
                + rhs.get(r, c).numeric_eval(nu).map(|v| v.norm()).unwrap_or(0.0);
            d.numeric_eval(nu).is_ok_and(|v| v.norm() <= 1e-12 * (1.0 + scale))
        })
    };
    let failing: Vec<&(usize, usize, RadicalSum)> =
        differing.iter().filter(|(r, c, d)| !vanishes(*r, *c, d)).collect();
    if failing.is_empty() {
        report.mode = Mode::Mixed;
        report.note = Some("numeric-verified: exact forms did not merge".into());
        return Ok(report);
    }
    let (r, c, _) = failing[0];
    let diffs: Vec<RadicalSum> = failing.iter().map(|(_, _, d)| d.clone()).collect();
    let mut failing_rows: Vec<usize> = failing.iter().map(|(r, _, _)| *r).collect();
    failing_rows.dedup();
    report = AlgebraReport {
        max_residual: max_residual_on_grid(&diffs),
        failing_rows,
        ..AlgebraReport::fail(
            relation_id,
            relation_id,
            Mode::Exact,
            Witness {
                row: *r,
                col: *c,
                row_label: Some(lhs.basis()[*r].to_string()),
                expected: rhs.get(*r, *c).to_string(),
                actual: lhs.get(*r, *c).to_string(),
            },
        )
    };
    report.excluded_rows = (0..n).filter(|r| !rows.contains(r)).collect();
    Ok(report)
}
