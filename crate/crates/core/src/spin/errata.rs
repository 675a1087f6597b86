//! Printed relations that fail against direct computation, each paired with
//! the form that holds.

use super::js::{
    build_js_spin_rep, odd_bracket_claim, pauli_bracket_claim, quadratic_algebra_claim,
    reflection_identification_claim,
};
use super::so3::{build_so_nu3, so3_bracket_claim, so3_condensed_claim};
use crate::error::Result;
use crate::operator::{audit_claim, Claim, GeneratorSet};
use crate::report::AlgebraReport;

#[derive(Clone, Debug)]
pub struct ErratumCase {
    pub two_j: u32,
    pub printed: AlgebraReport,
    pub alternates: Vec<AlgebraReport>,
    pub derived: AlgebraReport,
}

#[derive(Clone, Debug)]
pub struct ErratumFinding {
    pub id: &'static str,
    pub summary: &'static str,
    pub printed: String,
    pub derived: String,
    pub cases: Vec<ErratumCase>,
}

impl ErratumFinding {
    /// The printed form fails and the derived form holds in every case.
    pub fn confirmed(&self) -> bool {
        !self.cases.is_empty()
            && self
                .cases
                .iter()
                .all(|c| !c.printed.passed() && c.derived.passed_strict())
    }
}

fn finding(
    id: &'static str,
    summary: &'static str,
    cases: impl IntoIterator<Item = (u32, GeneratorSet, Claim)>,
) -> Result<ErratumFinding> {
    let mut out = ErratumFinding {
        id,
        summary,
        printed: String::new(),
        derived: String::new(),
        cases: Vec::new(),
    };
    for (two_j, set, claim) in cases {
        if out.cases.is_empty() {
            out.printed = claim.printed.statement();
            out.derived = claim.derived.statement();
        }
        let o = audit_claim(&set, &claim)?;
        out.cases.push(ErratumCase {
            two_j,
            printed: o.printed,
            alternates: o.alternates,
            derived: o.derived,
        });
    }
    Ok(out)
}

fn js(two_j: u32) -> Result<GeneratorSet> {
    Ok(build_js_spin_rep(two_j)?.generators())
}

fn so3(two_j: u32) -> Result<GeneratorSet> {
    Ok(build_so_nu3(two_j)?.generators())
}

/// All findings, evaluated for spin blocks up to 2j = max_two_j.
pub fn errata_findings(max_two_j: u32) -> Result<Vec<ErratumFinding>> {
    let odd: Vec<u32> = (1..=max_two_j).filter(|t| t % 2 == 1).collect();
    let even: Vec<u32> = (2..=max_two_j).filter(|t| t % 2 == 0).collect();
    let all: Vec<u32> = (1..=max_two_j).collect();
    let with = |ids: &[u32], set: fn(u32) -> Result<GeneratorSet>, claim: &dyn Fn(u32) -> Claim| {
        ids.iter()
            .map(|&t| Ok((t, set(t)?, claim(t))))
            .collect::<Result<Vec<_>>>()
    };
    let spin_one = if max_two_j >= 2 {
        vec![2]
    } else {
        vec![]
    };
    Ok(vec![
        finding(
            "odd_condensed_coefficient",
            "odd 2j: the bracket coefficient of R_J is 2ν(2ν + 2j + 1), not 2ν(2ν + j + 1)",
            with(&odd, js, &odd_bracket_claim)?,
        )?,
        finding(
            "pauli_bracket",
            "j = 1/2: [σ+, σ-] = (1 + 2ν)²σz = (1 + 4ν + 4ν²)σz, not (1 + 3ν + 4ν²)σz",
            with(&[1], js, &|_| pauli_bracket_claim())?,
        )?,
        finding(
            "quadratic_algebra",
            "j = 1: [L+, L-] = 2Lz(1 + 2νLz) fails at m = -1; the even form with R_J holds",
            with(&spin_one, js, &|_| quadratic_algebra_claim())?,
        )?,
        finding(
            "reflection_identification",
            "j = 1: R_J = Lz fails at m = 0 and m = -1; on the block R_J = 2Lz² - 1",
            with(&spin_one, js, &|_| reflection_identification_claim())?,
        )?,
        finding(
            "so3_bracket",
            "[L_x, L_y] = (i/2)[J+, J-] = i(L_z + νP + ν(2ν+1)K), not 2L_z + 2νP + 2ν(2ν+1)K",
            with(&all, so3, &|_| so3_bracket_claim())?,
        )?,
        finding(
            "so3_odd_condensed",
            "odd 2j: [L_x, L_y] = i(L_z + ν(2ν + 2j + 1)R_L)",
            with(&odd, so3, &so3_condensed_claim)?,
        )?,
        finding(
            "so3_even_condensed",
            "even 2j: [L_x, L_y] = iL_z(1 + 2νR_L)",
            with(&even, so3, &so3_condensed_claim)?,
        )?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_findings_confirmed() {
        for f in errata_findings(4).unwrap() {
            assert!(f.confirmed(), "{}", f.id);
        }
    }

    #[test]
    fn spin_one_quadratic_fails_only_at_bottom() {
        let f = errata_findings(2).unwrap();
        let q = f.iter().find(|f| f.id == "quadratic_algebra").unwrap();
        assert_eq!(q.cases[0].printed.failing_rows, vec![2]);
        let r = f.iter().find(|f| f.id == "reflection_identification").unwrap();
        assert_eq!(r.cases[0].printed.failing_rows, vec![1, 2]);
    }
}
