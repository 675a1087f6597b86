//! Exact JSON encoding of scalars, matrices and reports, plus numeric CSV.
//!
//! Keys are emitted in sorted order and floats with 17 significant digits,
//! so identical inputs give byte-identical documents.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Number, Value};
use wigner_core::operator::{BasisLabel, OperatorMatrix};
use wigner_core::report::{AlgebraReport, Witness};
use wigner_core::scalar::{GaussianRational, NuPolynomial, RadicalSum, Rational};

use crate::error::{CliError, Result};

/// A float as a JSON number in `{:.16e}` form; non-finite values become null.
pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Number::from_str(&format!("{x:.16e}"))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

fn bigint(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

pub fn rational_json(r: &Rational) -> Value {
    Value::Array(vec![bigint(r.numer()), bigint(r.denom())])
}

pub fn gaussian_json(c: &GaussianRational) -> Value {
    json!({ "re": rational_json(&c.re), "im": rational_json(&c.im) })
}

/// ν-ascending real coefficient list.
pub fn real_poly_json(p: &NuPolynomial) -> Value {
    Value::Array(p.real_coeffs().iter().map(rational_json).collect())
}

/// One JSON term per nonzero monomial `c ν^k √radicand`.
pub fn radical_json(value: &RadicalSum) -> Value {
    let mut terms = Vec::new();
    for t in value.terms() {
        for (k, c) in t.coeff.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(json!({
                "coeff": gaussian_json(c),
                "nu_power": k,
                "radicand": real_poly_json(&t.radicand),
            }));
        }
    }
    Value::Array(terms)
}

pub fn label_json(label: &BasisLabel) -> Value {
    match *label {
        BasisLabel::Fock(n) => json!({ "kind": "fock", "n": n }),
        BasisLabel::TwoMode(n1, n2) => json!({ "kind": "two_mode", "n1": n1, "n2": n2 }),
        BasisLabel::Spin { two_j, two_m } => {
            json!({ "kind": "spin", "two_j": two_j, "two_m": two_m })
        }
    }
}

pub fn matrix_json(m: &OperatorMatrix) -> Value {
    let mut entries = Vec::new();
    for row in 0..m.dim() {
        for (col, v) in m.row_entries(row) {
            entries.push(json!({
                "row": row,
                "col": col,
                "display": v.to_string(),
                "terms": radical_json(v),
            }));
        }
    }
    json!({
        "dim": m.dim(),
        "basis": m.basis().iter().map(label_json).collect::<Vec<_>>(),
        "entries": entries,
    })
}

fn schema(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| schema(format!("missing field `{key}`")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| schema(format!("`{what}` must be a non-negative integer")))
}

fn parse_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| schema(format!("`{n}` is not an integer"))),
        other => Err(schema(format!("expected an integer, found {other}"))),
    }
}

pub fn parse_rational(v: &Value) -> Result<Rational> {
    let pair = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| schema("rational must be [num, den]"))?;
    let den = parse_bigint(&pair[1])?;
    if den == BigInt::from(0) {
        return Err(schema("zero denominator"));
    }
    Ok(Rational::new(parse_bigint(&pair[0])?, den))
}

fn parse_gaussian(v: &Value) -> Result<GaussianRational> {
    Ok(GaussianRational::new(
        parse_rational(field(v, "re")?)?,
        parse_rational(field(v, "im")?)?,
    ))
}

fn parse_real_poly(v: &Value) -> Result<NuPolynomial> {
    let coeffs = v
        .as_array()
        .ok_or_else(|| schema("radicand must be a coefficient list"))?
        .iter()
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    Ok(NuPolynomial::from_rationals(coeffs))
}

pub fn parse_radical(v: &Value) -> Result<RadicalSum> {
    let terms = v
        .as_array()
        .ok_or_else(|| schema("`terms` must be a list"))?
        .iter()
        .map(|t| {
            let power = match t.get("nu_power") {
                Some(p) => as_usize(p, "nu_power")?,
                None => 0,
            };
            Ok((
                NuPolynomial::monomial(parse_gaussian(field(t, "coeff")?)?, power),
                parse_real_poly(field(t, "radicand")?)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RadicalSum::from_terms(terms)?)
}

pub fn parse_label(v: &Value) -> Result<BasisLabel> {
    let kind = field(v, "kind")?.as_str().unwrap_or_default();
    let label = match kind {
        "fock" => BasisLabel::Fock(as_usize(field(v, "n")?, "n")?),
        "two_mode" => BasisLabel::TwoMode(
            as_usize(field(v, "n1")?, "n1")?,
            as_usize(field(v, "n2")?, "n2")?,
        ),
        "spin" => {
            let two_j = as_usize(field(v, "two_j")?, "two_j")? as u32;
            let two_m = field(v, "two_m")?
                .as_i64()
                .ok_or_else(|| schema("`two_m` must be an integer"))? as i32;
            BasisLabel::spin(two_j, two_m)
        }
        other => return Err(schema(format!("unknown basis kind `{other}`"))),
    };
    if !label.is_valid() {
        return Err(schema(format!("invalid basis label {label}")));
    }
    Ok(label)
}

pub fn parse_matrix(v: &Value) -> Result<OperatorMatrix> {
    let dim = as_usize(field(v, "dim")?, "dim")?;
    let basis = field(v, "basis")?
        .as_array()
        .ok_or_else(|| schema("`basis` must be a list"))?
        .iter()
        .map(parse_label)
        .collect::<Result<Vec<_>>>()?;
    if basis.len() != dim {
        return Err(schema(format!("basis has {} labels for dim {dim}", basis.len())));
    }
    let mut m = OperatorMatrix::zeros(basis);
    for e in field(v, "entries")?
        .as_array()
        .ok_or_else(|| schema("`entries` must be a list"))?
    {
        let (row, col) = (as_usize(field(e, "row")?, "row")?, as_usize(field(e, "col")?, "col")?);
        if row >= dim || col >= dim {
            return Err(schema(format!("entry ({row}, {col}) outside dim {dim}")));
        }
        m.set(row, col, parse_radical(field(e, "terms")?)?);
    }
    Ok(m)
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "row": w.row,
        "col": w.col,
        "row_label": w.row_label,
        "expected": w.expected,
        "actual": w.actual,
    })
}

pub fn report_json(r: &AlgebraReport) -> Value {
    json!({
        "relation_id": r.relation_id,
        "statement": r.statement,
        "mode": r.mode.as_str(),
        "verdict": r.verdict.as_str(),
        "max_residual": float(r.max_residual),
        "caveat": r.caveat,
        "witness": r.witness.as_ref().map(witness_json),
        "failing_rows": r.failing_rows,
        "excluded_rows": r.excluded_rows,
        "note": r.note,
    })
}

pub fn reports_json(reports: &[AlgebraReport]) -> Value {
    Value::Array(reports.iter().map(report_json).collect())
}

/// Named operators as a JSON object keyed by generator name.
pub fn operators_json<'a>(ops: impl IntoIterator<Item = (&'a str, &'a OperatorMatrix)>) -> Value {
    let map: Map<String, Value> = ops
        .into_iter()
        .map(|(name, m)| (name.to_string(), matrix_json(m)))
        .collect();
    Value::Object(map)
}

/// `operator,row,col,re,im` rows of the nonzero entries evaluated at ν.
pub fn operators_csv<'a>(
    ops: impl IntoIterator<Item = (&'a str, &'a OperatorMatrix)>,
    nu: f64,
) -> Result<String> {
    let mut out = String::from("operator,row,col,re,im\n");
    for (name, m) in ops {
        let values = m.eval(nu)?;
        for row in 0..m.dim() {
            for (col, _) in m.row_entries(row) {
                let z = values[(row, col)];
                out.push_str(&format!("{name},{row},{col},{:.16e},{:.16e}\n", z.re, z.im));
            }
        }
    }
    Ok(out)
}

/// Pretty-printed JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use wigner_core::operator::fock_basis;
    use wigner_core::scalar::deformed_number;

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(float(0.1).to_string(), "1.0000000000000001e-1");
        assert_eq!(float(2.0).to_string(), "2.0000000000000000e+0");
        assert_eq!(float(0.1).as_f64(), Some(0.1));
        assert_eq!(float(f64::NAN), Value::Null);
    }

    #[test]
    fn radical_round_trip() {
        let v = &RadicalSum::sqrt(&deformed_number(3)).unwrap()
            + &RadicalSum::from(NuPolynomial::from_ints(&[-2, 0, 5]));
        let back = parse_radical(&radical_json(&v)).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn matrix_round_trip() {
        let mut m = OperatorMatrix::zeros(fock_basis(3));
        m.set(0, 1, RadicalSum::sqrt(&deformed_number(1)).unwrap());
        m.set(2, 2, RadicalSum::from_gaussian(GaussianRational::i()));
        let back = parse_matrix(&matrix_json(&m)).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(parse_matrix(&json!({ "dim": 2, "basis": [], "entries": [] })).is_err());
        assert!(parse_rational(&json!([1, 0])).is_err());
        assert!(parse_label(&json!({ "kind": "spin", "two_j": 1, "two_m": 0 })).is_err());
    }
}
