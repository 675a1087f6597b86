//! The single-mode Wigner algebra on a truncated Fock space.

use crate::error::{AlgebraError, Result};
use crate::operator::{fock_basis, Expr, GeneratorSet, OperatorMatrix, Relation, Suite};
use crate::report::AlgebraReport;
use crate::scalar::{deformed_number, parity_sign, NuPolynomial, RadicalSum};

#[derive(Clone, Debug)]
pub struct SingleModeSet {
    pub dim: usize,
    pub a: OperatorMatrix,
    pub a_dag: OperatorMatrix,
    pub n_op: OperatorMatrix,
    pub r_op: OperatorMatrix,
}

/// Lowering operator with √([n]_ν) on the superdiagonal.
pub fn lowering_operator(dim: usize) -> OperatorMatrix {
    let mut a = OperatorMatrix::zeros(fock_basis(dim));
    for n in 1..dim {
        let entry = RadicalSum::sqrt(&deformed_number(n as u64))
            .expect("deformed numbers are nonnegative on the admissible domain");
        a.set(n - 1, n, entry);
    }
    a
}

/// diag(0, 1, ..., dim-1)
pub fn number_operator(dim: usize) -> OperatorMatrix {
    OperatorMatrix::diagonal(
        fock_basis(dim),
        (0..dim).map(|n| RadicalSum::from_int(n as i64)).collect(),
    )
}

/// diag((-1)^n)
pub fn parity_operator(dim: usize) -> OperatorMatrix {
    OperatorMatrix::diagonal(
        fock_basis(dim),
        (0..dim)
            .map(|n| RadicalSum::from_int(parity_sign(n as u64)))
            .collect(),
    )
}

pub fn build_single_mode(dim: usize) -> Result<SingleModeSet> {
    if dim < 2 {
        return Err(AlgebraError::InvalidDimension { dim, min: 2 });
    }
    let a = lowering_operator(dim);
    Ok(SingleModeSet {
        dim,
        a_dag: a.adjoint(),
        a,
        n_op: number_operator(dim),
        r_op: parity_operator(dim),
    })
}

impl SingleModeSet {
    pub fn generators(&self) -> GeneratorSet {
        let mut set = GeneratorSet::new(fock_basis(self.dim));
        for (name, m) in [
            ("a", &self.a),
            ("a_dag", &self.a_dag),
            ("N", &self.n_op),
            ("R", &self.r_op),
        ] {
            set.insert(name, m.clone()).expect("shared Fock basis");
        }
        set
    }

    /// Rows on which relations involving a raising step are meaningful.
    pub fn interior_rows(&self) -> Vec<usize> {
        (0..self.dim - 1).collect()
    }

    pub fn suite(&self) -> Suite {
        let (a, ad, n, r) = (
            Expr::gen("a"),
            Expr::gen("a_dag"),
            Expr::gen("N"),
            Expr::gen("R"),
        );
        let two_nu = NuPolynomial::from_ints(&[0, 2]);
        let nu = NuPolynomial::nu();
        let mask = self.interior_rows();
        Suite::new("single_mode", self.generators())
            .relation(
                Relation::new(
                    "single_mode.canonical_commutator",
                    Expr::comm(a.clone(), ad.clone()),
                    Expr::Identity + r.clone().scaled(two_nu),
                )
                .masked(mask.clone()),
            )
            .relation(
                Relation::new("single_mode.number_raising", Expr::comm(n.clone(), ad.clone()), ad.clone())
                    .masked(mask.clone()),
            )
            .relation(Relation::new(
                "single_mode.number_lowering",
                Expr::comm(n.clone(), a.clone()),
                -a.clone(),
            ))
            .relation(Relation::new(
                "single_mode.parity_lowering",
                Expr::anti(r.clone(), a.clone()),
                Expr::Zero,
            ))
            .relation(
                Relation::new("single_mode.parity_raising", Expr::anti(ad.clone(), r.clone()), Expr::Zero)
                    .masked(mask),
            )
            .relation(Relation::new(
                "single_mode.parity_involution",
                r.clone() * r.clone(),
                Expr::Identity,
            ))
            .relation(Relation::new(
                "single_mode.parity_hermitian",
                r.clone().adjoint(),
                r.clone(),
            ))
            .relation(Relation::new(
                "single_mode.ladder_adjoint",
                a.clone().adjoint(),
                ad.clone(),
            ))
            .relation(Relation::new(
                "single_mode.number_from_ladders",
                n,
                ad * a - Expr::Identity.scaled(nu.clone()) + r.scaled(nu),
            ))
    }
}

/// One exact report per single-mode relation; bracket relations with a
/// raising operator are restricted to rows 0..dim-2.
pub fn audit_single_mode(s: &SingleModeSet) -> Result<Vec<AlgebraReport>> {
    s.suite().run_exact()
}

/// The canonical commutator checked on all rows, exposing the cutoff defect.
pub fn truncation_defect(s: &SingleModeSet) -> Result<AlgebraReport> {
    let rel = Relation::new(
        "single_mode.canonical_commutator.unmasked",
        Expr::comm(Expr::gen("a"), Expr::gen("a_dag")),
        Expr::Identity + Expr::gen("R").scaled(NuPolynomial::from_ints(&[0, 2])),
    );
    rel.check_exact(&s.generators())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_tiny_dimension() {
        assert!(matches!(
            build_single_mode(1),
            Err(AlgebraError::InvalidDimension { dim: 1, min: 2 })
        ));
    }

    #[test]
    fn two_dimensional_lowering() {
        let s = build_single_mode(2).unwrap();
        assert_eq!(s.a.get(0, 1).to_string(), "√(1 + 2ν)");
        assert!(s.a.get(0, 0).is_zero() && s.a.get(1, 0).is_zero() && s.a.get(1, 1).is_zero());
    }

    #[test]
    fn number_product_is_deformed_numbers() {
        let s = build_single_mode(4).unwrap();
        let prod = &s.a_dag * &s.a;
        let expected: Vec<RadicalSum> = (0..4u64).map(|n| deformed_number(n).into()).collect();
        assert_eq!(prod, OperatorMatrix::diagonal(fock_basis(4), expected));
    }

    #[test]
    fn undeformed_limit_is_boson() {
        let s = build_single_mode(3).unwrap();
        let m = s.a.eval(0.0).unwrap();
        for n in 1..3 {
            assert!((m[(n - 1, n)].re - (n as f64).sqrt()).abs() < 1e-15);
        }
    }

    #[test]
    fn audit_passes_and_cutoff_defect_is_top_row() {
        let s = build_single_mode(10).unwrap();
        for r in audit_single_mode(&s).unwrap() {
            assert!(r.passed_strict(), "{r}");
        }
        let d = truncation_defect(&s).unwrap();
        assert!(!d.passed());
        assert_eq!(d.failing_rows, vec![9]);
    }

    #[test]
    fn numeric_audit_passes() {
        let s = build_single_mode(6).unwrap();
        for nu in [0.0, 0.25, 2.0] {
            for r in s.suite().run_numeric(nu).unwrap() {
                assert!(r.passed(), "{r}");
            }
        }
    }
}
