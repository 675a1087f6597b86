//! Jordan-Schwinger spin blocks.

use super::{half_int, two_nu_times};
use crate::error::{AlgebraError, Result};
use crate::operator::{spin_basis, BasisLabel, Claim, Expr, GeneratorSet, OperatorMatrix, Relation, Suite};
use crate::report::AlgebraReport;
use crate::scalar::{deformed_number, parity_sign, NuPolynomial, RadicalSum};
use crate::two_mode::TwoModeSet;

#[derive(Clone, Debug, PartialEq)]
pub struct SuNu2Rep {
    pub two_j: u32,
    pub j_plus: OperatorMatrix,
    pub j_minus: OperatorMatrix,
    pub j0: OperatorMatrix,
    pub p_op: OperatorMatrix,
    pub k_op: OperatorMatrix,
    pub q_op: OperatorMatrix,
    pub r_j: OperatorMatrix,
}

fn spin_diagonal(two_j: u32, f: impl Fn(u64, u64) -> RadicalSum) -> OperatorMatrix {
    let tj = two_j as u64;
    OperatorMatrix::diagonal(spin_basis(two_j), (0..=tj).map(|r| f(tj - r, r)).collect())
}

/// Closed-form block: J+|n1,n2⟩ = √([n1+1][n2]) |n1+1,n2-1⟩ with n1 = 2j - r,
/// n2 = r, and diagonal generators from their eigenvalue formulas.
pub fn build_js_spin_rep(two_j: u32) -> Result<SuNu2Rep> {
    if two_j < 1 {
        return Err(AlgebraError::InvalidSpin(two_j));
    }
    let tj = two_j as u64;
    let mut j_plus = OperatorMatrix::zeros(spin_basis(two_j));
    for r in 1..=tj {
        let radicand = &deformed_number(tj - r + 1) * &deformed_number(r);
        j_plus.set(r as usize - 1, r as usize, RadicalSum::sqrt(&radicand)?);
    }
    let sign = |n: u64| parity_sign(n);
    Ok(SuNu2Rep {
        two_j,
        j_minus: j_plus.adjoint(),
        j_plus,
        j0: spin_diagonal(two_j, |n1, n2| half_int(n1 as i64 - n2 as i64)),
        p_op: spin_diagonal(two_j, |n1, n2| {
            RadicalSum::from_int(n1 as i64 * sign(n2) - n2 as i64 * sign(n1))
        }),
        k_op: spin_diagonal(two_j, |n1, n2| half_int(sign(n2) - sign(n1))),
        q_op: spin_diagonal(two_j, |n1, n2| half_int(sign(n1) + sign(n2))),
        r_j: spin_diagonal(two_j, |_, r| RadicalSum::from_int(sign(r))),
    })
}

/// Builds the composite generators on the two-mode space and restricts them
/// to the span of |2j - r, r⟩.
pub fn extract_js_block(s: &TwoModeSet, two_j: u32) -> Result<SuNu2Rep> {
    if two_j < 1 {
        return Err(AlgebraError::InvalidSpin(two_j));
    }
    let (d1, d2) = s.dims;
    if d1 <= two_j as usize || d2 <= two_j as usize {
        return Err(AlgebraError::DimensionTooSmall { d1, d2, two_j });
    }
    let [m1, m2] = &s.modes;
    let half = RadicalSum::from_gaussian(crate::scalar::GaussianRational::from_ratio(1, 2));
    let composite = [
        ("J+", m1.a_dag.try_mul(&m2.a)?),
        ("J-", m1.a.try_mul(&m2.a_dag)?),
        ("J0", m1.n_op.try_sub(&m2.n_op)?.scale(&half)),
        ("P", m1.n_op.try_mul(&m2.r_op)?.try_sub(&m2.n_op.try_mul(&m1.r_op)?)?),
        ("K", m2.r_op.try_sub(&m1.r_op)?.scale(&half)),
        ("Q", m2.r_op.try_add(&m1.r_op)?.scale(&half)),
    ];
    let index = |l: &BasisLabel| match *l {
        BasisLabel::Spin { two_j, two_m } => {
            let n1 = ((two_j as i32 + two_m) / 2) as usize;
            let n2 = ((two_j as i32 - two_m) / 2) as usize;
            n1 * d2 + n2
        }
        _ => unreachable!("spin basis"),
    };
    let basis = spin_basis(two_j);
    let indices: Vec<usize> = basis.iter().map(index).collect();
    let mut blocks = Vec::new();
    for (name, op) in composite {
        for &c in &indices {
            for r in 0..op.dim() {
                if !op.get(r, c).is_zero() && !indices.contains(&r) {
                    return Err(AlgebraError::NonInvariantSubspace(name.to_string()));
                }
            }
        }
        blocks.push(op.restrict(&indices, basis.clone())?);
    }
    let mut it = blocks.into_iter();
    let mut next = || it.next().expect("six composite generators");
    let (j_plus, j_minus, j0, p_op, k_op, q_op) = (next(), next(), next(), next(), next(), next());
    let r_j = spin_diagonal(two_j, |_, r| RadicalSum::from_int(parity_sign(r)));
    Ok(SuNu2Rep {
        two_j,
        j_plus,
        j_minus,
        j0,
        p_op,
        k_op,
        q_op,
        r_j,
    })
}

pub(crate) fn gens() -> [Expr; 7] {
    ["J+", "J-", "J0", "P", "K", "Q", "R_J"].map(Expr::gen)
}

impl SuNu2Rep {
    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    pub fn generators(&self) -> GeneratorSet {
        let mut set = GeneratorSet::new(spin_basis(self.two_j));
        for (name, m) in [
            ("J+", &self.j_plus),
            ("J-", &self.j_minus),
            ("J0", &self.j0),
            ("P", &self.p_op),
            ("K", &self.k_op),
            ("Q", &self.q_op),
            ("R_J", &self.r_j),
        ] {
            set.insert(name, m.clone()).expect("shared spin basis");
        }
        set
    }

    /// The general relation set; the block is invariant so nothing is masked.
    pub fn suite(&self) -> Suite {
        let [jp, jm, j0, p, k, q, _] = gens();
        let nu2 = NuPolynomial::from_ints(&[0, 2]);
        let id = |s: &str| format!("su_nu2.{s}");
        let zero = |name: &str, lhs: Expr| Relation::new(id(name), lhs, Expr::Zero);
        Suite::new(format!("su_nu2[2j={}]", self.two_j), self.generators())
            .relation(Relation::new(id("j0_raising"), Expr::comm(j0.clone(), jp.clone()), jp.clone()))
            .relation(Relation::new(id("j0_lowering"), Expr::comm(j0.clone(), jm.clone()), -jm.clone()))
            .relation(Relation::new(
                id("bracket"),
                Expr::comm(jp.clone(), jm.clone()),
                j0.clone().times(2) + p.clone().scaled(nu2) + k.clone().scaled(two_nu_times(2)),
            ))
            .relation(zero("k_q", Expr::comm(k.clone(), q.clone())))
            .relation(zero("k_p", Expr::comm(k.clone(), p.clone())))
            .relation(zero("k_j0", Expr::comm(k.clone(), j0.clone())))
            .relation(zero("k_raising_anti", Expr::anti(k.clone(), jp.clone())))
            .relation(zero("k_lowering_anti", Expr::anti(k, jm.clone())))
            .relation(zero("q_p", Expr::comm(q.clone(), p.clone())))
            .relation(zero("q_j0", Expr::comm(q.clone(), j0.clone())))
            .relation(zero("q_raising_anti", Expr::anti(q.clone(), jp.clone())))
            .relation(zero("q_lowering_anti", Expr::anti(q.clone(), jm.clone())))
            .relation(zero("p_j0", Expr::comm(p.clone(), j0)))
            .relation(Relation::new(
                id("p_raising_anti"),
                Expr::anti(p.clone(), jp.clone()),
                (q.clone() * jp.clone()).times(2),
            ))
            .relation(Relation::new(
                id("p_lowering_anti"),
                Expr::anti(p, jm.clone()),
                (q * jm.clone()).times(-2),
            ))
            .relation(Relation::new(id("ladder_adjoint"), jp.adjoint(), jm))
    }
}

/// Odd 2j bracket as printed, with the coefficient 2ν(2ν + 2j + 1) obtained
/// by substituting K = R_J and P = 2jR_J into the general bracket.
pub fn odd_bracket_claim(two_j: u32) -> Claim {
    let [jp, jm, j0, _, _, _, rj] = gens();
    let lhs = Expr::comm(jp, jm);
    let id = "su_nu2.condensed.odd.bracket";
    Claim {
        id: id.into(),
        printed: Relation::new(
            format!("{id}.printed"),
            lhs.clone(),
            j0.clone().times(2) + rj.clone().scaled(two_nu_times(two_j as i64 + 2)),
        ),
        alternates: vec![],
        derived: Relation::new(
            format!("{id}.derived"),
            lhs,
            j0.times(2) + rj.scaled(two_nu_times(2 * two_j as i64 + 2)),
        ),
    }
}

/// The parity-specific relation set for this block.
pub fn condensed_suite(rep: &SuNu2Rep) -> Suite {
    let [jp, jm, j0, p, k, q, rj] = gens();
    let odd = rep.two_j % 2 == 1;
    let tag = if odd { "odd" } else { "even" };
    let id = |s: &str| format!("su_nu2.condensed.{tag}.{s}");
    let mut suite = Suite::new(format!("su_nu2.condensed[2j={}]", rep.two_j), rep.generators())
        .relation(Relation::new(id("reflection_involution"), rj.clone() * rj.clone(), Expr::Identity))
        .relation(Relation::new(id("reflection_j0"), Expr::comm(rj.clone(), j0.clone()), Expr::Zero))
        .relation(Relation::new(id("reflection_raising_anti"), Expr::anti(rj.clone(), jp.clone()), Expr::Zero))
        .relation(Relation::new(id("reflection_lowering_anti"), Expr::anti(rj.clone(), jm.clone()), Expr::Zero));
    if odd {
        suite = suite
            .relation(Relation::new(id("q"), q, Expr::Zero))
            .relation(Relation::new(id("k"), k, rj.clone()))
            .relation(Relation::new(
                id("p"),
                p,
                rj.times_scalar(super::spin_j(rep.two_j)).times(2),
            ))
            .claim(odd_bracket_claim(rep.two_j));
    } else {
        suite = suite
            .relation(Relation::new(id("k"), k, Expr::Zero))
            .relation(Relation::new(id("q"), q, rj.clone()))
            .relation(Relation::new(id("p"), p, (j0.clone() * rj.clone()).times(2)))
            .relation(Relation::new(
                id("bracket"),
                Expr::comm(jp, jm),
                (j0 * (Expr::Identity + rj.scaled(NuPolynomial::from_ints(&[0, 2])))).times(2),
            ));
    }
    suite
}

pub fn audit_su_nu2(rep: &SuNu2Rep) -> Result<Vec<AlgebraReport>> {
    rep.suite().run_exact()
}

/// Pass, Fail, or PassWithCaveat per condensed identity.
pub fn audit_condensed_forms(rep: &SuNu2Rep) -> Result<Vec<AlgebraReport>> {
    condensed_suite(rep).run_exact()
}

/// σ± = J±, σz = 2J0 at j = 1/2: printed [σ+, σ-] = (1 + 3ν + 4ν²)σz.
pub fn pauli_bracket_claim() -> Claim {
    let [jp, jm, j0, ..] = gens();
    let lhs = Expr::comm(jp, jm);
    let sigma_z = j0.times(2);
    let id = "su_nu2.example.pauli_bracket";
    Claim {
        id: id.into(),
        printed: Relation::new(
            format!("{id}.printed"),
            lhs.clone(),
            sigma_z.clone().scaled(NuPolynomial::from_ints(&[1, 3, 4])),
        ),
        alternates: vec![],
        derived: Relation::new(
            format!("{id}.derived"),
            lhs,
            sigma_z.scaled(NuPolynomial::from_ints(&[1, 4, 4])),
        ),
    }
}

/// j = 1: printed [L+, L-] = 2Lz(1 + 2νLz), i.e. the even form with R_J
/// replaced by Lz.
pub fn quadratic_algebra_claim() -> Claim {
    let [jp, jm, j0, _, _, _, rj] = gens();
    let lhs = Expr::comm(jp, jm);
    let two_nu = NuPolynomial::from_ints(&[0, 2]);
    let id = "su_nu2.example.quadratic_algebra";
    Claim {
        id: id.into(),
        printed: Relation::new(
            format!("{id}.printed"),
            lhs.clone(),
            (j0.clone() * (Expr::Identity + j0.clone().scaled(two_nu.clone()))).times(2),
        ),
        alternates: vec![],
        derived: Relation::new(
            format!("{id}.derived"),
            lhs,
            (j0 * (Expr::Identity + rj.scaled(two_nu))).times(2),
        ),
    }
}

/// j = 1: printed R_J = Lz; on the block R_J = 2Lz² - 1.
pub fn reflection_identification_claim() -> Claim {
    let [_, _, j0, _, _, _, rj] = gens();
    let id = "su_nu2.example.reflection_identification";
    Claim {
        id: id.into(),
        printed: Relation::new(format!("{id}.printed"), rj.clone(), j0.clone()),
        alternates: vec![],
        derived: Relation::new(
            format!("{id}.derived"),
            rj,
            (j0.clone() * j0).times(2) - Expr::Identity,
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;
    use crate::two_mode::build_two_mode;

    #[test]
    fn printed_ladder_entries() {
        let r = build_js_spin_rep(1).unwrap();
        assert_eq!(r.j_plus.get(0, 1).to_string(), "1 + 2ν");
        let r = build_js_spin_rep(2).unwrap();
        assert_eq!(r.j_plus.get(0, 1).to_string(), "√(2 + 4ν)");
        assert_eq!(r.j_plus.get(1, 2), r.j_plus.get(0, 1));
        let r = build_js_spin_rep(3).unwrap();
        assert_eq!(r.j_plus.get(1, 2), &RadicalSum::from_int(2));
        assert!(build_js_spin_rep(0).is_err());
    }

    #[test]
    fn extraction_matches_closed_form() {
        let s = build_two_mode(5, 5).unwrap();
        for two_j in 1..=4 {
            assert_eq!(extract_js_block(&s, two_j).unwrap(), build_js_spin_rep(two_j).unwrap());
        }
        assert!(matches!(
            extract_js_block(&s, 5),
            Err(AlgebraError::DimensionTooSmall { .. })
        ));
    }

    #[test]
    fn general_relations_hold() {
        for two_j in 1..=4 {
            for r in audit_su_nu2(&build_js_spin_rep(two_j).unwrap()).unwrap() {
                assert!(r.passed_strict(), "{r}");
            }
        }
    }

    #[test]
    fn condensed_verdicts() {
        let odd = audit_condensed_forms(&build_js_spin_rep(1).unwrap()).unwrap();
        let bracket = odd.iter().find(|r| r.relation_id.ends_with("odd.bracket")).unwrap();
        assert_eq!(bracket.verdict, Verdict::PassWithCaveat);
        let w = bracket.witness.as_ref().unwrap();
        assert_eq!((w.row, w.actual.as_str()), (0, "1 + 4ν + 4ν^2"));
        assert!(odd.iter().filter(|r| r.relation_id != bracket.relation_id).all(|r| r.passed_strict()));
        for r in audit_condensed_forms(&build_js_spin_rep(2).unwrap()).unwrap() {
            assert!(r.passed_strict(), "{r}");
        }
    }
}
