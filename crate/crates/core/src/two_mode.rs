//! Two independent Wigner modes built as tensor products of single-mode
//! operators. Cross-mode parities commute with the other mode's ladders, so
//! no string operator is inserted.

use crate::error::{AlgebraError, Result};
use crate::operator::{
    check_relation, fock_basis, tensor, BasisLabel, Expr, GeneratorSet, OperatorMatrix, Relation,
    Suite,
};
use crate::report::AlgebraReport;
use crate::scalar::{deformed_number, NuPolynomial, RadicalSum};
use crate::single_mode::build_single_mode;

/// One mode's operators lifted to the product space.
#[derive(Clone, Debug)]
pub struct ModeOperators {
    pub a: OperatorMatrix,
    pub a_dag: OperatorMatrix,
    pub n_op: OperatorMatrix,
    pub r_op: OperatorMatrix,
}

#[derive(Clone, Debug)]
pub struct TwoModeSet {
    pub dims: (usize, usize),
    pub modes: [ModeOperators; 2],
}

pub fn build_two_mode(d1: usize, d2: usize) -> Result<TwoModeSet> {
    for d in [d1, d2] {
        if d < 2 {
            return Err(AlgebraError::InvalidDimension { dim: d, min: 2 });
        }
    }
    let (m1, m2) = (build_single_mode(d1)?, build_single_mode(d2)?);
    let (i1, i2) = (
        OperatorMatrix::identity(fock_basis(d1)),
        OperatorMatrix::identity(fock_basis(d2)),
    );
    let left = |x: &OperatorMatrix| tensor(x, &i2);
    let right = |x: &OperatorMatrix| tensor(&i1, x);
    Ok(TwoModeSet {
        dims: (d1, d2),
        modes: [
            ModeOperators {
                a: left(&m1.a)?,
                a_dag: left(&m1.a_dag)?,
                n_op: left(&m1.n_op)?,
                r_op: left(&m1.r_op)?,
            },
            ModeOperators {
                a: right(&m2.a)?,
                a_dag: right(&m2.a_dag)?,
                n_op: right(&m2.n_op)?,
                r_op: right(&m2.r_op)?,
            },
        ],
    })
}

fn names(i: usize) -> [String; 4] {
    [
        format!("a{i}"),
        format!("a{i}_dag"),
        format!("N{i}"),
        format!("R{i}"),
    ]
}

impl TwoModeSet {
    pub fn dim(&self) -> usize {
        self.dims.0 * self.dims.1
    }

    pub fn generators(&self) -> GeneratorSet {
        let mut set = GeneratorSet::new(self.modes[0].a.basis().to_vec());
        for (k, m) in self.modes.iter().enumerate() {
            let [a, ad, n, r] = names(k + 1);
            for (name, op) in [(a, &m.a), (ad, &m.a_dag), (n, &m.n_op), (r, &m.r_op)] {
                set.insert(&name, op.clone()).expect("shared product basis");
            }
        }
        set
    }

    /// Rows whose occupation of mode `i` (1 or 2) is below its cutoff.
    pub fn interior_rows(&self, i: usize) -> Vec<usize> {
        let (d1, d2) = self.dims;
        (0..d1 * d2)
            .filter(|r| match i {
                1 => r / d2 < d1 - 1,
                _ => r % d2 < d2 - 1,
            })
            .collect()
    }

    pub fn suite(&self) -> Suite {
        let g = |i: usize| {
            let [a, ad, n, r] = names(i);
            (Expr::Gen(a), Expr::Gen(ad), Expr::Gen(n), Expr::Gen(r))
        };
        let mut suite = Suite::new("two_mode", self.generators());
        let two_nu = NuPolynomial::from_ints(&[0, 2]);
        for i in 1..=2 {
            let (ai, adi, ni, ri) = g(i);
            let mask_i = self.interior_rows(i);
            suite = suite
                .relation(
                    Relation::new(
                        format!("two_mode.canonical_commutator[{i}]"),
                        Expr::comm(ai.clone(), adi.clone()),
                        Expr::Identity + ri.clone().scaled(two_nu.clone()),
                    )
                    .masked(mask_i.clone()),
                )
                .relation(
                    Relation::new(
                        format!("two_mode.number_raising[{i}]"),
                        Expr::comm(ni.clone(), adi.clone()),
                        adi.clone(),
                    )
                    .masked(mask_i.clone()),
                )
                .relation(Relation::new(
                    format!("two_mode.number_lowering[{i}]"),
                    Expr::comm(ni.clone(), ai.clone()),
                    -ai.clone(),
                ))
                .relation(Relation::new(
                    format!("two_mode.parity_lowering[{i}]"),
                    Expr::anti(ri.clone(), ai.clone()),
                    Expr::Zero,
                ))
                .relation(
                    Relation::new(
                        format!("two_mode.parity_raising[{i}]"),
                        Expr::anti(adi.clone(), ri.clone()),
                        Expr::Zero,
                    )
                    .masked(mask_i),
                )
                .relation(Relation::new(
                    format!("two_mode.parity_involution[{i}]"),
                    ri.clone() * ri.clone(),
                    Expr::Identity,
                ));
            let j = 3 - i;
            let (aj, adj, _, _) = g(j);
            let mask_j = self.interior_rows(j);
            suite = suite
                .relation(
                    Relation::new(
                        format!("two_mode.cross_commutator[{i}{j}]"),
                        Expr::comm(ai.clone(), adj.clone()),
                        Expr::Zero,
                    )
                    .masked(mask_j.clone()),
                )
                .relation(
                    Relation::new(
                        format!("two_mode.cross_number_raising[{i}{j}]"),
                        Expr::comm(ni.clone(), adj.clone()),
                        Expr::Zero,
                    )
                    .masked(mask_j.clone()),
                )
                .relation(Relation::new(
                    format!("two_mode.cross_number_lowering[{i}{j}]"),
                    Expr::comm(ni, aj.clone()),
                    Expr::Zero,
                ))
                .relation(Relation::new(
                    format!("two_mode.cross_parity_lowering[{i}{j}]"),
                    Expr::comm(ri.clone(), aj),
                    Expr::Zero,
                ))
                .relation(
                    Relation::new(
                        format!("two_mode.cross_parity_raising[{i}{j}]"),
                        Expr::comm(ri, adj),
                        Expr::Zero,
                    )
                    .masked(mask_j),
                );
        }
        let (a1, ad1, _, _) = g(1);
        let (a2, ad2, _, _) = g(2);
        suite
            .relation(Relation::new(
                "two_mode.lowering_commute",
                Expr::comm(a1, a2),
                Expr::Zero,
            ))
            .relation(Relation::new(
                "two_mode.raising_commute",
                Expr::comm(ad1, ad2),
                Expr::Zero,
            ))
    }
}

/// Reports that a†_i a_i = [N_i]_ν, i.e. diag([n_i]_ν) on the product basis.
pub fn check_number_products(s: &TwoModeSet) -> Vec<AlgebraReport> {
    (0..2)
        .map(|k| {
            let m = &s.modes[k];
            let basis = m.a.basis().to_vec();
            let diag = basis
                .iter()
                .map(|l| match *l {
                    BasisLabel::TwoMode(n1, n2) => {
                        RadicalSum::from(deformed_number(if k == 0 { n1 } else { n2 } as u64))
                    }
                    _ => unreachable!("product basis"),
                })
                .collect();
            let expected = OperatorMatrix::diagonal(basis, diag);
            let mut r = check_relation(
                &format!("two_mode.number_product[{}]", k + 1),
                &(&m.a_dag * &m.a),
                &expected,
                None,
            )
            .expect("same basis");
            r.statement = format!("a{0}_dag a{0} = [N{0}]_ν", k + 1);
            r
        })
        .collect()
}

pub fn audit_two_mode(s: &TwoModeSet) -> Result<Vec<AlgebraReport>> {
    let mut reports = s.suite().run_exact()?;
    reports.extend(check_number_products(s));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_actions() {
        let s = build_two_mode(3, 3).unwrap();
        let idx = |n1: usize, n2: usize| n1 * 3 + n2;
        // a2|0,1⟩ = √(1+2ν)|0,0⟩
        assert_eq!(s.modes[1].a.get(idx(0, 0), idx(0, 1)).to_string(), "√(1 + 2ν)");
        for n2 in 0..3 {
            assert!((0..9).all(|r| s.modes[0].a.get(r, idx(0, n2)).is_zero()));
        }
        let up = &s.modes[0].a_dag * &s.modes[1].a_dag;
        assert_eq!(up.get(idx(1, 1), idx(0, 0)), &RadicalSum::from(NuPolynomial::from_ints(&[1, 2])));
        assert_eq!(s.modes[0].a.basis()[idx(2, 1)], BasisLabel::TwoMode(2, 1));
    }

    #[test]
    fn rejects_small_dimensions() {
        assert!(build_two_mode(1, 4).is_err());
        assert!(build_two_mode(4, 0).is_err());
    }

    #[test]
    fn audit_passes() {
        let s = build_two_mode(4, 3).unwrap();
        for r in audit_two_mode(&s).unwrap() {
            assert!(r.passed_strict(), "{r}");
        }
    }
}
