//! One function per subcommand, each producing a document and a verdict tally.

use serde_json::{json, Value};
use wigner_core::realizations::{audit_realizations, build_quasi_basis};
use wigner_core::report::{AlgebraReport, Verdict};
use wigner_core::scalar::deformed_number;
use wigner_core::single_mode::{audit_single_mode, build_single_mode, truncation_defect};
use wigner_core::spin::{
    audit_condensed_forms, audit_hp, audit_so_nu3, audit_su_nu2, build_hp_rep, build_js_spin_rep,
    build_so_nu3, errata_findings, ErratumFinding,
};
use wigner_core::two_mode::{audit_two_mode, build_two_mode};
use wigner_core::AlgebraError;

use crate::config::{Command, Format, RunConfig};
use crate::error::Result;
use crate::export::{
    float, operators_csv, operators_json, radical_json, real_poly_json, report_json, reports_json,
};
use crate::verify;

/// Verdict counts over the audited relations of one command.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub caveat: usize,
    pub fail: usize,
}

impl Tally {
    pub fn of(reports: &[AlgebraReport]) -> Self {
        let mut t = Self::default();
        for r in reports {
            t.add(r.verdict);
        }
        t
    }

    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::PassWithCaveat => self.caveat += 1,
            Verdict::Fail => self.fail += 1,
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.pass += other.pass;
        self.caveat += other.caveat;
        self.fail += other.fail;
    }

    pub fn exit_code(&self, strict: bool) -> i32 {
        if self.fail > 0 || (strict && self.caveat > 0) {
            1
        } else {
            0
        }
    }

    pub fn json(&self) -> Value {
        json!({ "pass": self.pass, "pass_with_caveat": self.caveat, "fail": self.fail })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    Json(Value),
    Csv(String),
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub document: Document,
    pub tally: Tally,
}

impl Outcome {
    fn json(value: Value, tally: Tally) -> Self {
        Self {
            document: Document::Json(value),
            tally,
        }
    }

    fn csv(text: String, tally: Tally) -> Self {
        Self {
            document: Document::Csv(text),
            tally,
        }
    }
}

pub fn execute(config: &RunConfig) -> Result<Outcome> {
    let csv_nu = (config.format == Format::Csv).then(|| config.nu_values[0]);
    match &config.command {
        Command::Numbers { max_n } => numbers(*max_n, config, csv_nu),
        Command::SingleMode { dim } => single_mode(*dim, csv_nu),
        Command::TwoMode { dims } => two_mode(dims[0], dims[1], csv_nu),
        Command::Realizations { max_n } => realizations(*max_n),
        Command::SpinRep { two_j } => spin_rep(*two_j, csv_nu),
        Command::HpRep { two_j } => hp_rep(*two_j, csv_nu),
        Command::So3Rep { two_j } => so3_rep(*two_j, csv_nu),
        Command::Verify { .. } => verify::run(config),
        Command::Errata { max_two_j } => errata(*max_two_j),
    }
}

fn numbers(max_n: u64, config: &RunConfig, csv_nu: Option<f64>) -> Result<Outcome> {
    if let Some(nu) = csv_nu {
        let mut out = String::from("n,value\n");
        for n in 0..=max_n {
            out.push_str(&format!("{n},{:.16e}\n", deformed_number(n).eval(nu).re));
        }
        return Ok(Outcome::csv(out, Tally::default()));
    }
    let grid = config.nu_grid();
    let rows: Vec<Value> = (0..=max_n)
        .map(|n| {
            let p = deformed_number(n);
            json!({
                "n": n,
                "coeffs": real_poly_json(&p),
                "display": p.to_string(),
                "values": grid.iter().map(|&nu| float(p.eval(nu).re)).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Outcome::json(
        json!({
            "command": "numbers",
            "max_n": max_n,
            "nu": grid.iter().map(|&nu| float(nu)).collect::<Vec<_>>(),
            "deformed_numbers": rows,
        }),
        Tally::default(),
    ))
}

fn matrices_or_csv<'a>(
    ops: Vec<(&'a str, &'a wigner_core::operator::OperatorMatrix)>,
    csv_nu: Option<f64>,
    build_json: impl FnOnce(Value) -> Value,
    reports: &[AlgebraReport],
) -> Result<Outcome> {
    let tally = Tally::of(reports);
    match csv_nu {
        Some(nu) => Ok(Outcome::csv(operators_csv(ops, nu)?, tally)),
        None => Ok(Outcome::json(build_json(operators_json(ops)), tally)),
    }
}

fn single_mode(dim: usize, csv_nu: Option<f64>) -> Result<Outcome> {
    let s = build_single_mode(dim)?;
    let reports = audit_single_mode(&s)?;
    let defect = truncation_defect(&s)?;
    let ops = vec![("a", &s.a), ("a_dag", &s.a_dag), ("N", &s.n_op), ("R", &s.r_op)];
    matrices_or_csv(
        ops,
        csv_nu,
        |operators| {
            json!({
                "command": "single-mode",
                "dim": dim,
                "operators": operators,
                "reports": reports_json(&reports),
                "truncation_defect": report_json(&defect),
            })
        },
        &reports,
    )
}

fn two_mode(d1: usize, d2: usize, csv_nu: Option<f64>) -> Result<Outcome> {
    let s = build_two_mode(d1, d2)?;
    let reports = audit_two_mode(&s)?;
    let [m1, m2] = &s.modes;
    let ops = vec![
        ("a1", &m1.a),
        ("a1_dag", &m1.a_dag),
        ("N1", &m1.n_op),
        ("R1", &m1.r_op),
        ("a2", &m2.a),
        ("a2_dag", &m2.a_dag),
        ("N2", &m2.n_op),
        ("R2", &m2.r_op),
    ];
    matrices_or_csv(
        ops,
        csv_nu,
        |operators| {
            json!({
                "command": "two-mode",
                "dims": [d1, d2],
                "operators": operators,
                "reports": reports_json(&reports),
            })
        },
        &reports,
    )
}

fn realizations(max_n: usize) -> Result<Outcome> {
    let basis = build_quasi_basis(max_n);
    let reports = audit_realizations(max_n)?;
    let polys: Vec<Value> = basis
        .polys()
        .iter()
        .enumerate()
        .map(|(n, p)| json!({ "n": n, "phi": p.to_string() }))
        .collect();
    Ok(Outcome::json(
        json!({
            "command": "realizations",
            "max_n": max_n,
            "quasi_basis": polys,
            "reports": reports_json(&reports),
        }),
        Tally::of(&reports),
    ))
}

fn spin_rep(two_j: u32, csv_nu: Option<f64>) -> Result<Outcome> {
    let rep = build_js_spin_rep(two_j)?;
    let mut reports = audit_su_nu2(&rep)?;
    reports.extend(audit_condensed_forms(&rep)?);
    let ops = vec![
        ("J+", &rep.j_plus),
        ("J-", &rep.j_minus),
        ("J0", &rep.j0),
        ("P", &rep.p_op),
        ("K", &rep.k_op),
        ("Q", &rep.q_op),
        ("R_J", &rep.r_j),
    ];
    matrices_or_csv(
        ops,
        csv_nu,
        |operators| {
            json!({
                "command": "spin-rep",
                "two_j": two_j,
                "operators": operators,
                "reports": reports_json(&reports),
            })
        },
        &reports,
    )
}

fn hp_rep(two_j: u32, csv_nu: Option<f64>) -> Result<Outcome> {
    let rep = match build_hp_rep(two_j) {
        Err(AlgebraError::OddTwoJNotClosed { two_j, leakage }) if csv_nu.is_none() => {
            let message = AlgebraError::OddTwoJNotClosed {
                two_j,
                leakage: leakage.clone(),
            }
            .to_string();
            let mut tally = Tally::default();
            tally.add(Verdict::Fail);
            return Ok(Outcome::json(
                json!({
                    "command": "hp-rep",
                    "two_j": two_j,
                    "error": {
                        "kind": "odd_two_j_not_closed",
                        "message": message,
                        "leakage": { "display": leakage.to_string(), "terms": radical_json(&leakage) },
                    },
                }),
                tally,
            ));
        }
        other => other?,
    };
    let reports = audit_hp(&rep)?;
    let ops = vec![
        ("J+", &rep.j_plus),
        ("J-", &rep.j_minus),
        ("J0", &rep.j0),
        ("R", &rep.r_op),
    ];
    matrices_or_csv(
        ops,
        csv_nu,
        |operators| {
            json!({
                "command": "hp-rep",
                "two_j": two_j,
                "operators": operators,
                "reports": reports_json(&reports),
            })
        },
        &reports,
    )
}

fn so3_rep(two_j: u32, csv_nu: Option<f64>) -> Result<Outcome> {
    let rep = build_so_nu3(two_j)?;
    let reports = audit_so_nu3(&rep)?;
    let ops = vec![
        ("L_x", &rep.l_x),
        ("L_y", &rep.l_y),
        ("L_z", &rep.l_z),
        ("P", &rep.p_op),
        ("K", &rep.k_op),
        ("Q", &rep.q_op),
        ("R_L", &rep.r_l),
    ];
    matrices_or_csv(
        ops,
        csv_nu,
        |operators| {
            json!({
                "command": "so3-rep",
                "two_j": two_j,
                "operators": operators,
                "reports": reports_json(&reports),
            })
        },
        &reports,
    )
}

/// A finding as one report: pass_with_caveat when the printed form fails
/// and the computed form holds everywhere, fail otherwise.
pub fn finding_report(f: &ErratumFinding) -> AlgebraReport {
    let cases: Vec<AlgebraReport> = f.cases.iter().map(|c| c.derived.clone()).collect();
    let mut r = AlgebraReport::summarize(format!("errata.{}", f.id), f.summary, &cases);
    r.witness = f
        .cases
        .iter()
        .find_map(|c| c.printed.witness.clone());
    if f.confirmed() {
        r.verdict = Verdict::PassWithCaveat;
        r.caveat = Some(format!("printed {} fails; holds as {}", f.printed, f.derived));
    } else {
        r.verdict = Verdict::Fail;
        r.caveat = Some(format!("finding not reproduced: printed {}", f.printed));
    }
    r
}

fn finding_json(f: &ErratumFinding) -> Value {
    let cases: Vec<Value> = f
        .cases
        .iter()
        .map(|c| {
            json!({
                "two_j": c.two_j,
                "printed": report_json(&c.printed),
                "alternates": reports_json(&c.alternates),
                "derived": report_json(&c.derived),
            })
        })
        .collect();
    json!({
        "id": f.id,
        "summary": f.summary,
        "printed": f.printed,
        "derived": f.derived,
        "confirmed": f.confirmed(),
        "cases": cases,
    })
}

fn errata(max_two_j: u32) -> Result<Outcome> {
    let findings = errata_findings(max_two_j)?;
    let reports: Vec<AlgebraReport> = findings.iter().map(finding_report).collect();
    Ok(Outcome::json(
        json!({
            "command": "errata",
            "max_two_j": max_two_j,
            "findings": findings.iter().map(finding_json).collect::<Vec<_>>(),
        }),
        Tally::of(&reports),
    ))
}
