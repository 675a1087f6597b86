//! Holstein-Primakoff realization on the (2j+1)-dimensional Fock space.

use super::js::build_js_spin_rep;
use super::half_int;
use crate::error::{AlgebraError, Result};
use crate::operator::{
    check_relation, commutator, eval_matrix, fock_basis, Expr, GeneratorSet, OperatorMatrix, Relation,
    Suite, NU_GRID,
};
use crate::report::{AlgebraReport, Mode, Witness};
use crate::scalar::{deformed_number, parity_sign, rational, NuPolynomial, RadicalSum};
use crate::single_mode::parity_operator;

#[derive(Clone, Debug, PartialEq)]
pub struct HPRep {
    pub two_j: u32,
    pub j_plus: OperatorMatrix,
    pub j_minus: OperatorMatrix,
    pub j0: OperatorMatrix,
    pub r_op: OperatorMatrix,
}

/// The square-root factor at occupation n, from the raw quotient
/// `((2j-n)(n+1) + ν(1 + 2j + R(-1 + 2j - 2n))) / (n + 1 + ν(1 + R))`,
/// checked against its parity-reduced form (2j - n, plus 2ν for odd n).
pub fn hp_factor(two_j: u32, n: u64) -> Result<NuPolynomial> {
    let (tj, ni) = (two_j as i64, n as i64);
    let r = parity_sign(n);
    let numerator = NuPolynomial::from_ints(&[(tj - ni) * (ni + 1), 1 + tj + r * (-1 + tj - 2 * ni)]);
    let denominator = NuPolynomial::from_ints(&[ni + 1, 1 + r]);
    let quotient = numerator.exact_div(&denominator).ok_or_else(|| {
        AlgebraError::InconsistentClosedForm(format!(
            "({numerator}) / ({denominator}) is not a polynomial at n = {n}"
        ))
    })?;
    let reduced = match r {
        1 => NuPolynomial::from_int(tj - ni),
        _ => NuPolynomial::from_ints(&[tj - ni, 2]),
    };
    if quotient != reduced {
        return Err(AlgebraError::InconsistentClosedForm(format!(
            "quotient {quotient} differs from parity form {reduced} at n = {n}"
        )));
    }
    Ok(quotient)
}

/// J-|n⟩ = √([n+1] g(n)) |n+1⟩, J+ = J-ᵀ, J0 = j - N. Refuses odd 2j,
/// where J- carries |2j⟩ out of the space.
pub fn build_hp_rep(two_j: u32) -> Result<HPRep> {
    if two_j < 1 {
        return Err(AlgebraError::InvalidSpin(two_j));
    }
    let dim = two_j as usize + 1;
    let mut j_minus = OperatorMatrix::zeros(fock_basis(dim));
    for n in 0..=two_j as u64 {
        let radicand = &deformed_number(n + 1) * &hp_factor(two_j, n)?;
        let amplitude = RadicalSum::sqrt(&radicand)?;
        if n as usize + 1 < dim {
            j_minus.set(n as usize + 1, n as usize, amplitude);
        } else if !amplitude.is_zero() {
            return Err(AlgebraError::OddTwoJNotClosed { two_j, leakage: amplitude });
        }
    }
    Ok(HPRep {
        two_j,
        j_plus: j_minus.adjoint(),
        j_minus,
        j0: OperatorMatrix::diagonal(
            fock_basis(dim),
            (0..dim as i64).map(|n| half_int(two_j as i64 - 2 * n)).collect(),
        ),
        r_op: parity_operator(dim),
    })
}

/// √(2j - N) a on the (2j+1)-dimensional space.
fn standard_hp_raising(two_j: u32) -> OperatorMatrix {
    let dim = two_j as usize + 1;
    let mut m = OperatorMatrix::zeros(fock_basis(dim));
    for n in 1..dim {
        let v = (two_j as i64 - n as i64 + 1) * n as i64;
        m.set(n - 1, n, RadicalSum::sqrt(&NuPolynomial::from_int(v)).expect("nonnegative"));
    }
    m
}

impl HPRep {
    pub fn generators(&self) -> GeneratorSet {
        let mut set = GeneratorSet::new(fock_basis(self.two_j as usize + 1));
        for (name, m) in [
            ("J+", &self.j_plus),
            ("J-", &self.j_minus),
            ("J0", &self.j0),
            ("R", &self.r_op),
        ] {
            set.insert(name, m.clone()).expect("shared Fock basis");
        }
        set
    }

    pub fn suite(&self) -> Suite {
        let [jp, jm, j0, r] = ["J+", "J-", "J0", "R"].map(Expr::gen);
        Suite::new(format!("hp[2j={}]", self.two_j), self.generators())
            .relation(Relation::new(
                "hp.bracket",
                Expr::comm(jp.clone(), jm.clone()),
                (j0.clone() * (Expr::Identity + r.scaled(NuPolynomial::from_ints(&[0, 2])))).times(2),
            ))
            .relation(Relation::new("hp.j0_raising", Expr::comm(j0.clone(), jp.clone()), jp.clone()))
            .relation(Relation::new("hp.j0_lowering", Expr::comm(j0, jm.clone()), -jm.clone()))
            .relation(Relation::new("hp.ladder_adjoint", jp.adjoint(), jm))
    }
}

/// Sorted diagonal of [J+, J-] at ν for HP and even-JS blocks, compared
/// within 1e-12.
pub fn hp_numeric_spectral_match(rep: &HPRep, nu: f64) -> Result<AlgebraReport> {
    let js = build_js_spin_rep(rep.two_j)?;
    let spectrum = |jp: &OperatorMatrix, jm: &OperatorMatrix| -> Result<Vec<f64>> {
        let c = eval_matrix(&commutator(jp, jm)?, nu)?;
        let mut d: Vec<f64> = c.diagonal().iter().map(|z| z.re).collect();
        d.sort_by(f64::total_cmp);
        Ok(d)
    };
    let (hp, jsd) = (spectrum(&rep.j_plus, &rep.j_minus)?, spectrum(&js.j_plus, &js.j_minus)?);
    let id = format!("hp.js_spectral_match@nu={nu}");
    let statement = "diagonal spectra of [J+, J-] agree between HP and JS blocks";
    let worst = hp
        .iter()
        .zip(&jsd)
        .enumerate()
        .map(|(k, (a, b))| (k, (a - b).abs()))
        .fold((0, 0.0f64), |acc, x| if x.1 > acc.1 { x } else { acc });
    let mut report = if worst.1 < 1e-12 {
        AlgebraReport::pass(&id, statement, Mode::Numeric)
    } else {
        AlgebraReport::fail(
            &id,
            statement,
            Mode::Numeric,
            Witness {
                row: worst.0,
                col: worst.0,
                row_label: None,
                expected: format!("{:.16e}", jsd[worst.0]),
                actual: format!("{:.16e}", hp[worst.0]),
            },
        )
    };
    report.max_residual = worst.1;
    Ok(report)
}

pub fn audit_hp(rep: &HPRep) -> Result<Vec<AlgebraReport>> {
    let mut reports = rep.suite().run_exact()?;
    let dim = rep.two_j as usize + 1;
    let column_zero = OperatorMatrix::from_fn(fock_basis(dim), |r, c| match c {
        0 => rep.j_plus.get(r, 0).clone(),
        _ => RadicalSum::zero(),
    });
    let mut ground = check_relation("hp.top_weight", &column_zero, &OperatorMatrix::zeros(fock_basis(dim)), None)?;
    ground.statement = "J+|0⟩ = 0".into();
    reports.push(ground);
    let js = build_js_spin_rep(rep.two_j)?.j_plus.relabel(fock_basis(dim))?;
    reports.push(check_relation("hp.js_equivalence", &rep.j_plus, &js, None)?);
    if let Some(last) = reports.last_mut() {
        last.statement = "HP J+ equals the JS block J+ under |n⟩ ↔ |j, j-n~⟩".into();
    }
    let zero = rational(0, 1);
    let undeformed = OperatorMatrix::from_fn(fock_basis(dim), |r, c| rep.j_plus.get(r, c).substitute(&zero));
    let mut standard = check_relation(
        "hp.undeformed_limit",
        &undeformed,
        &standard_hp_raising(rep.two_j),
        None,
    )?;
    standard.statement = "ν = 0: J+ = √(2j - N) a".into();
    reports.push(standard);
    for nu in NU_GRID {
        reports.push(hp_numeric_spectral_match(rep, nu)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_factor() {
        assert_eq!(hp_factor(2, 0).unwrap(), NuPolynomial::from_int(2));
        assert_eq!(hp_factor(2, 1).unwrap(), NuPolynomial::from_ints(&[1, 2]));
        assert_eq!(hp_factor(1, 1).unwrap(), NuPolynomial::from_ints(&[0, 2]));
    }

    #[test]
    fn first_lowering_entry() {
        let hp = build_hp_rep(2).unwrap();
        assert_eq!(hp.j_minus.get(1, 0).to_string(), "√(2 + 4ν)");
        assert!(hp.j_plus.get(0, 0).is_zero());
    }

    #[test]
    fn odd_spin_leaks() {
        match build_hp_rep(1) {
            Err(AlgebraError::OddTwoJNotClosed { two_j: 1, leakage }) => {
                // √(2ν[2]) = √(4ν) = 2√ν
                let expected = RadicalSum::sqrt(&NuPolynomial::from_ints(&[0, 4])).unwrap();
                assert_eq!(leakage, expected);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn audit_even() {
        for r in audit_hp(&build_hp_rep(4).unwrap()).unwrap() {
            assert!(r.passed_strict(), "{r}");
        }
    }
}
