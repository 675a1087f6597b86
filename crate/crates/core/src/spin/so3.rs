//! The deformed so(3) generators L_x, L_y, L_z built from a spin block.

use nalgebra::Schur;

use super::js::build_js_spin_rep;
use super::two_nu_times;
use crate::error::Result;
use crate::operator::{
    eval_matrix, evaluate_exact, spin_basis, Claim, Expr, GeneratorSet, OperatorMatrix, Relation,
    Suite, NU_GRID,
};
use crate::report::{AlgebraReport, Mode, Witness};
use crate::scalar::{rational, GaussianRational, NuPolynomial, RadicalSum};

#[derive(Clone, Debug, PartialEq)]
pub struct SoNu3Rep {
    pub two_j: u32,
    pub l_x: OperatorMatrix,
    pub l_y: OperatorMatrix,
    pub l_z: OperatorMatrix,
    pub p_op: OperatorMatrix,
    pub k_op: OperatorMatrix,
    pub q_op: OperatorMatrix,
    pub r_l: OperatorMatrix,
}

/// L_z = J0, L_x = (J+ + J-)/2, L_y = (i/2)(J- - J+).
pub fn build_so_nu3(two_j: u32) -> Result<SoNu3Rep> {
    let js = build_js_spin_rep(two_j)?;
    let half = RadicalSum::from_gaussian(GaussianRational::from_ratio(1, 2));
    let half_i = RadicalSum::from_gaussian(GaussianRational::new(rational(0, 1), rational(1, 2)));
    Ok(SoNu3Rep {
        two_j,
        l_x: js.j_plus.try_add(&js.j_minus)?.scale(&half),
        l_y: js.j_minus.try_sub(&js.j_plus)?.scale(&half_i),
        l_z: js.j0,
        p_op: js.p_op,
        k_op: js.k_op,
        q_op: js.q_op,
        r_l: js.r_j,
    })
}

fn gens() -> [Expr; 7] {
    ["L_x", "L_y", "L_z", "P", "K", "Q", "R_L"].map(Expr::gen)
}

fn i_times(e: Expr) -> Expr {
    e.times_scalar(GaussianRational::i())
}

/// Printed [L_x, L_y] = 2L_z + 2νP + 2ν(2ν+1)K. Since [L_x, L_y] equals
/// (i/2)[J+, J-], the bracket that holds is i(L_z + νP + ν(2ν+1)K).
pub fn so3_bracket_claim() -> Claim {
    let [lx, ly, lz, p, k, ..] = gens();
    let lhs = Expr::comm(lx, ly);
    let id = "so_nu3.bracket";
    let printed_rhs = lz.clone().times(2)
        + p.clone().scaled(NuPolynomial::from_ints(&[0, 2]))
        + k.clone().scaled(two_nu_times(2));
    let derived_rhs = i_times(lz)
        + i_times(p.scaled(NuPolynomial::nu()))
        + i_times(k.scaled(NuPolynomial::from_ints(&[0, 1, 2])));
    Claim {
        id: id.into(),
        printed: Relation::new(format!("{id}.printed"), lhs.clone(), printed_rhs),
        alternates: vec![],
        derived: Relation::new(format!("{id}.derived"), lhs, derived_rhs),
    }
}

/// Parity-specific bracket. Odd 2j: printed 2L_z + 2ν(2ν+j+1)R_L, with the
/// corrected coefficient 2ν(2ν+2j+1) as an alternate reading, and
/// i(L_z + ν(2ν+2j+1)R_L) as the form that holds. Even 2j: printed
/// 2L_z(1 + 2νR_L), holding as iL_z(1 + 2νR_L).
pub fn so3_condensed_claim(two_j: u32) -> Claim {
    let [lx, ly, lz, _, _, _, rl] = gens();
    let lhs = Expr::comm(lx, ly);
    let tj = two_j as i64;
    if two_j % 2 == 1 {
        let id = "so_nu3.condensed.odd.bracket";
        Claim {
            id: id.into(),
            printed: Relation::new(
                format!("{id}.printed"),
                lhs.clone(),
                lz.clone().times(2) + rl.clone().scaled(two_nu_times(tj + 2)),
            ),
            alternates: vec![Relation::new(
                format!("{id}.corrected_coefficient"),
                lhs.clone(),
                lz.clone().times(2) + rl.clone().scaled(two_nu_times(2 * tj + 2)),
            )],
            derived: Relation::new(
                format!("{id}.derived"),
                lhs,
                i_times(lz) + i_times(rl.scaled(NuPolynomial::from_ints(&[0, tj + 1, 2]))),
            ),
        }
    } else {
        let id = "so_nu3.condensed.even.bracket";
        let factor = Expr::Identity + rl.scaled(NuPolynomial::from_ints(&[0, 2]));
        Claim {
            id: id.into(),
            printed: Relation::new(
                format!("{id}.printed"),
                lhs.clone(),
                (lz.clone() * factor.clone()).times(2),
            ),
            alternates: vec![],
            derived: Relation::new(format!("{id}.derived"), lhs, i_times(lz * factor)),
        }
    }
}

impl SoNu3Rep {
    pub fn generators(&self) -> GeneratorSet {
        let mut set = GeneratorSet::new(spin_basis(self.two_j));
        for (name, m) in [
            ("L_x", &self.l_x),
            ("L_y", &self.l_y),
            ("L_z", &self.l_z),
            ("P", &self.p_op),
            ("K", &self.k_op),
            ("Q", &self.q_op),
            ("R_L", &self.r_l),
        ] {
            set.insert(name, m.clone()).expect("shared spin basis");
        }
        set
    }

    pub fn suite(&self) -> Suite {
        let [lx, ly, lz, p, k, q, _] = gens();
        let id = |s: &str| format!("so_nu3.{s}");
        let zero = |name: &str, lhs: Expr| Relation::new(id(name), lhs, Expr::Zero);
        let casimir = lx.clone() * lx.clone() + ly.clone() * ly.clone() + lz.clone() * lz.clone();
        Suite::new(format!("so_nu3[2j={}]", self.two_j), self.generators())
            .relation(Relation::new(id("lz_lx"), Expr::comm(lz.clone(), lx.clone()), i_times(ly.clone())))
            .relation(Relation::new(id("lz_ly"), Expr::comm(lz.clone(), ly.clone()), -i_times(lx.clone())))
            .relation(zero("k_q", Expr::comm(k.clone(), q.clone())))
            .relation(zero("k_p", Expr::comm(k.clone(), p.clone())))
            .relation(zero("k_lz", Expr::comm(k.clone(), lz.clone())))
            .relation(zero("k_lx_anti", Expr::anti(k.clone(), lx.clone())))
            .relation(zero("k_ly_anti", Expr::anti(k, ly.clone())))
            .relation(zero("q_p", Expr::comm(q.clone(), p.clone())))
            .relation(zero("q_lz", Expr::comm(q.clone(), lz.clone())))
            .relation(zero("q_lx_anti", Expr::anti(q.clone(), lx.clone())))
            .relation(zero("q_ly_anti", Expr::anti(q.clone(), ly.clone())))
            .relation(zero("p_lz", Expr::comm(p.clone(), lz)))
            .relation(Relation::new(
                id("p_lx_anti"),
                Expr::anti(p.clone(), lx.clone()),
                i_times(q.clone() * ly.clone()).times(2),
            ))
            .relation(Relation::new(
                id("p_ly_anti"),
                Expr::anti(p, ly.clone()),
                i_times(q * lx.clone()).times(-2),
            ))
            .relation(Relation::new(id("lx_hermitian"), lx.clone().adjoint(), lx))
            .relation(Relation::new(id("ly_hermitian"), ly.clone().adjoint(), ly))
            .relation(Relation::new(id("casimir_hermitian"), casimir.clone().adjoint(), casimir))
            .claim(so3_bracket_claim())
            .claim(so3_condensed_claim(self.two_j))
    }

    pub fn casimir(&self) -> Result<OperatorMatrix> {
        let [lx, ly, lz, ..] = gens();
        evaluate_exact(&(lx.clone() * lx + ly.clone() * ly + lz.clone() * lz), &self.generators())
    }
}

/// L_x² + L_y² + L_z² has a real spectrum at ν (Schur eigenvalues, imaginary
/// parts below 1e-10 relative to the matrix norm).
pub fn casimir_real_spectrum(rep: &SoNu3Rep, nu: f64) -> Result<AlgebraReport> {
    let c = eval_matrix(&rep.casimir()?, nu)?;
    let scale = 1.0 + c.norm();
    let eig = Schur::new(c).eigenvalues().unwrap_or_default();
    let (k, worst) = eig
        .iter()
        .enumerate()
        .map(|(k, z)| (k, z.im.abs()))
        .fold((0, 0.0f64), |acc, x| if x.1 > acc.1 { x } else { acc });
    let id = format!("so_nu3.casimir_real_spectrum@nu={nu}");
    let statement = "L_x² + L_y² + L_z² has real eigenvalues";
    let mut report = if worst <= 1e-10 * scale {
        AlgebraReport::pass(&id, statement, Mode::Numeric)
    } else {
        AlgebraReport::fail(
            &id,
            statement,
            Mode::Numeric,
            Witness {
                row: k,
                col: k,
                row_label: None,
                expected: "0".into(),
                actual: format!("{:.16e}", worst),
            },
        )
    };
    report.max_residual = worst;
    Ok(report)
}

pub fn audit_so_nu3(rep: &SoNu3Rep) -> Result<Vec<AlgebraReport>> {
    let mut reports = rep.suite().run_exact()?;
    for nu in NU_GRID {
        reports.push(casimir_real_spectrum(rep, nu)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn spin_half_lx() {
        let r = build_so_nu3(1).unwrap();
        assert_eq!(r.l_x.get(0, 1).to_string(), "1/2 + ν");
        assert_eq!(r.l_x.get(1, 0).to_string(), "1/2 + ν");
        assert_eq!(r.l_y.get(0, 1).to_string(), "-(1/2)i - iν");
    }

    #[test]
    fn audit_verdicts() {
        for two_j in 1..=4 {
            let reports = audit_so_nu3(&build_so_nu3(two_j).unwrap()).unwrap();
            for r in &reports {
                if r.relation_id.contains("bracket") {
                    assert_eq!(r.verdict, Verdict::PassWithCaveat, "{r}");
                } else {
                    assert!(r.passed_strict(), "{r}");
                }
            }
        }
    }
}
