//! Symbolic operator expressions over named generators, evaluated either
//! exactly or in floating point, and the relation/claim audit built on them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::basis::BasisLabel;
use super::matrix::{eval_matrix, OperatorMatrix};
use super::{anticommutator, check_relation, commutator};
use crate::error::{AlgebraError, Result};
use crate::report::{AlgebraReport, Mode, Verdict, Witness};
use crate::scalar::{GaussianRational, NuPolynomial};

/// Relative Frobenius tolerance of numeric relation checks.
pub const NUMERIC_RELATIVE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Gen(String),
    Identity,
    Zero,
    Scale(NuPolynomial, Box<Expr>),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Commutator(Box<Expr>, Box<Expr>),
    Anticommutator(Box<Expr>, Box<Expr>),
    Adjoint(Box<Expr>),
}

impl Expr {
    pub fn gen(name: &str) -> Self {
        Expr::Gen(name.to_string())
    }

    pub fn comm(a: Expr, b: Expr) -> Self {
        Expr::Commutator(Box::new(a), Box::new(b))
    }

    pub fn anti(a: Expr, b: Expr) -> Self {
        Expr::Anticommutator(Box::new(a), Box::new(b))
    }

    pub fn adjoint(self) -> Self {
        Expr::Adjoint(Box::new(self))
    }

    pub fn scaled(self, p: NuPolynomial) -> Self {
        if p.is_one() {
            return self;
        }
        match self {
            Expr::Scale(q, inner) => Expr::Scale(&p * &q, inner),
            other => Expr::Scale(p, Box::new(other)),
        }
    }

    pub fn times(self, n: i64) -> Self {
        self.scaled(NuPolynomial::from_int(n))
    }

    pub fn times_scalar(self, c: GaussianRational) -> Self {
        self.scaled(NuPolynomial::constant(c))
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Sum(_) => 0,
            Expr::Scale(..) | Expr::Product(_) => 1,
            _ => 2,
        }
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        let mut terms = match self {
            Expr::Sum(t) => t,
            e => vec![e],
        };
        match rhs {
            Expr::Sum(t) => terms.extend(t),
            e => terms.push(e),
        }
        Expr::Sum(terms)
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        self + (-rhs)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.times(-1)
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        let mut factors = match self {
            Expr::Product(f) => f,
            e => vec![e],
        };
        match rhs {
            Expr::Product(f) => factors.extend(f),
            e => factors.push(e),
        }
        Expr::Product(factors)
    }
}

fn fmt_operand(e: &Expr, min_prec: u8) -> String {
    if e.precedence() < min_prec {
        format!("({e})")
    } else {
        e.to_string()
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Gen(name) => f.write_str(name),
            Expr::Identity => f.write_str("1"),
            Expr::Zero => f.write_str("0"),
            Expr::Scale(p, inner) => {
                let body = fmt_operand(inner, 2);
                if p.is_constant() {
                    let c = p.coeff(0);
                    if c == GaussianRational::i() {
                        write!(f, "i{body}")
                    } else if c == -GaussianRational::i() {
                        write!(f, "-i{body}")
                    } else if **inner == Expr::Identity {
                        write!(f, "{c}")
                    } else {
                        write!(f, "{}{body}", c.fmt_factor())
                    }
                } else {
                    let (sign, p) = if p.to_string().starts_with('-') {
                        ("-", -p)
                    } else {
                        ("", p.clone())
                    };
                    if **inner == Expr::Identity {
                        write!(f, "{sign}({p})")
                    } else {
                        write!(f, "{sign}({p}){body}")
                    }
                }
            }
            Expr::Sum(terms) => {
                for (k, t) in terms.iter().enumerate() {
                    let s = t.to_string();
                    if k == 0 {
                        f.write_str(&s)?;
                    } else if let Some(rest) = s.strip_prefix('-') {
                        write!(f, " - {rest}")?;
                    } else {
                        write!(f, " + {s}")?;
                    }
                }
                Ok(())
            }
            Expr::Product(factors) => {
                let parts: Vec<String> = factors.iter().map(|e| fmt_operand(e, 2)).collect();
                f.write_str(&parts.join(""))
            }
            Expr::Commutator(a, b) => write!(f, "[{a}, {b}]"),
            Expr::Anticommutator(a, b) => write!(f, "{{{a}, {b}}}"),
            Expr::Adjoint(a) => write!(f, "{}†", fmt_operand(a, 2)),
        }
    }
}

/// Named generator matrices sharing one basis.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    basis: Vec<BasisLabel>,
    generators: BTreeMap<String, OperatorMatrix>,
}

impl GeneratorSet {
    pub fn new(basis: Vec<BasisLabel>) -> Self {
        Self {
            basis,
            generators: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, name: &str, m: OperatorMatrix) -> Result<()> {
        if m.basis() != self.basis.as_slice() {
            return Err(AlgebraError::BasisMismatch);
        }
        self.generators.insert(name.to_string(), m);
        Ok(())
    }

    pub fn with(mut self, name: &str, m: OperatorMatrix) -> Result<Self> {
        self.insert(name, m)?;
        Ok(self)
    }

    pub fn get(&self, name: &str) -> Result<&OperatorMatrix> {
        self.generators
            .get(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &OperatorMatrix)> {
        self.generators.iter().map(|(k, v)| (k.as_str(), v))
    }
}

pub fn evaluate_exact(expr: &Expr, set: &GeneratorSet) -> Result<OperatorMatrix> {
    let basis = || set.basis().to_vec();
    Ok(match expr {
        Expr::Gen(name) => set.get(name)?.clone(),
        Expr::Identity => OperatorMatrix::identity(basis()),
        Expr::Zero => OperatorMatrix::zeros(basis()),
        Expr::Scale(p, inner) => evaluate_exact(inner, set)?.scale_poly(p),
        Expr::Sum(terms) => {
            let mut acc = OperatorMatrix::zeros(basis());
            for t in terms {
                acc = acc.try_add(&evaluate_exact(t, set)?)?;
            }
            acc
        }
        Expr::Product(factors) => {
            let mut acc = OperatorMatrix::identity(basis());
            for t in factors {
                acc = acc.try_mul(&evaluate_exact(t, set)?)?;
            }
            acc
        }
        Expr::Commutator(a, b) => commutator(&evaluate_exact(a, set)?, &evaluate_exact(b, set)?)?,
        Expr::Anticommutator(a, b) => {
            anticommutator(&evaluate_exact(a, set)?, &evaluate_exact(b, set)?)?
        }
        Expr::Adjoint(a) => evaluate_exact(a, set)?.adjoint(),
    })
}

/// Floating-point images of all generators at one ν.
pub fn numeric_generators(
    set: &GeneratorSet,
    nu: f64,
) -> Result<BTreeMap<String, DMatrix<Complex64>>> {
    set.iter()
        .map(|(k, m)| Ok((k.to_string(), eval_matrix(m, nu)?)))
        .collect()
}

/// Evaluates in floating point; the polynomial scalars are evaluated at `nu`.
pub fn evaluate_numeric(
    expr: &Expr,
    gens: &BTreeMap<String, DMatrix<Complex64>>,
    nu: f64,
    dim: usize,
) -> Result<DMatrix<Complex64>> {
    let zero = || DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    let rec = |e: &Expr| evaluate_numeric(e, gens, nu, dim);
    Ok(match expr {
        Expr::Gen(name) => gens
            .get(name)
            .cloned()
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.clone()))?,
        Expr::Identity => DMatrix::identity(dim, dim),
        Expr::Zero => zero(),
        Expr::Scale(p, inner) => rec(inner)? * p.eval(nu),
        Expr::Sum(terms) => {
            let mut acc = zero();
            for t in terms {
                acc += rec(t)?;
            }
            acc
        }
        Expr::Product(factors) => {
            let mut acc = DMatrix::identity(dim, dim);
            for t in factors {
                acc *= rec(t)?;
            }
            acc
        }
        Expr::Commutator(a, b) => {
            let (x, y) = (rec(a)?, rec(b)?);
            &x * &y - &y * &x
        }
        Expr::Anticommutator(a, b) => {
            let (x, y) = (rec(a)?, rec(b)?);
            &x * &y + &y * &x
        }
        Expr::Adjoint(a) => rec(a)?.adjoint(),
    })
}

/// `lhs = rhs`, optionally restricted to a set of rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub id: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub mask: Option<Vec<usize>>,
}

impl Relation {
    pub fn new(id: impl Into<String>, lhs: Expr, rhs: Expr) -> Self {
        Self {
            id: id.into(),
            lhs,
            rhs,
            mask: None,
        }
    }

    pub fn masked(mut self, rows: Vec<usize>) -> Self {
        self.mask = Some(rows);
        self
    }

    pub fn statement(&self) -> String {
        format!("{} = {}", self.lhs, self.rhs)
    }

    pub fn check_exact(&self, set: &GeneratorSet) -> Result<AlgebraReport> {
        let lhs = evaluate_exact(&self.lhs, set)?;
        let rhs = evaluate_exact(&self.rhs, set)?;
        let mut report = check_relation(&self.id, &lhs, &rhs, self.mask.as_deref())?;
        report.statement = self.statement();
        Ok(report)
    }

    /// Frobenius check at one ν: ‖L - R‖ < tol·(1 + ‖L‖) on the masked rows.
    pub fn check_numeric(
        &self,
        gens: &BTreeMap<String, DMatrix<Complex64>>,
        nu: f64,
        basis: &[BasisLabel],
    ) -> Result<AlgebraReport> {
        let dim = basis.len();
        let lhs = evaluate_numeric(&self.lhs, gens, nu, dim)?;
        let rhs = evaluate_numeric(&self.rhs, gens, nu, dim)?;
        let rows: Vec<usize> = match &self.mask {
            Some(m) => m.iter().copied().filter(|&r| r < dim).collect(),
            None => (0..dim).collect(),
        };
        let (mut diff_sq, mut lhs_sq, mut worst) = (0.0f64, 0.0f64, (0.0f64, 0usize, 0usize));
        for &r in &rows {
            for c in 0..dim {
                let d = (lhs[(r, c)] - rhs[(r, c)]).norm();
                diff_sq += d * d;
                lhs_sq += lhs[(r, c)].norm_sqr();
                if d > worst.0 {
                    worst = (d, r, c);
                }
            }
        }
        let id = format!("{}@nu={}", self.id, nu);
        let ok = diff_sq.sqrt() < NUMERIC_RELATIVE_TOLERANCE * (1.0 + lhs_sq.sqrt());
        let mut report = if ok {
            AlgebraReport::pass(id, self.statement(), Mode::Numeric)
        } else {
            let (_, r, c) = worst;
            AlgebraReport::fail(
                id,
                self.statement(),
                Mode::Numeric,
                Witness {
                    row: r,
                    col: c,
                    row_label: Some(basis[r].to_string()),
                    expected: format!("{:.12e}", rhs[(r, c)]),
                    actual: format!("{:.12e}", lhs[(r, c)]),
                },
            )
        };
        report.max_residual = worst.0;
        report.excluded_rows = (0..dim).filter(|r| !rows.contains(r)).collect();
        Ok(report)
    }
}

/// A relation as printed in the source, together with any alternate
/// readings and the form that actually holds.
#[derive(Clone, Debug, PartialEq)]
pub struct Claim {
    pub id: String,
    pub printed: Relation,
    pub alternates: Vec<Relation>,
    pub derived: Relation,
}

#[derive(Clone, Debug)]
pub struct ClaimOutcome {
    /// Pass if the printed form holds, PassWithCaveat if only the derived
    /// form does, Fail otherwise.
    pub combined: AlgebraReport,
    pub printed: AlgebraReport,
    pub alternates: Vec<AlgebraReport>,
    pub derived: AlgebraReport,
}

pub fn audit_claim(set: &GeneratorSet, claim: &Claim) -> Result<ClaimOutcome> {
    let printed = claim.printed.check_exact(set)?;
    let alternates = claim
        .alternates
        .iter()
        .map(|r| r.check_exact(set))
        .collect::<Result<Vec<_>>>()?;
    let derived = claim.derived.check_exact(set)?;
    let mut combined = if printed.passed() {
        printed.clone()
    } else if derived.passed() {
        let w = printed.witness.as_ref().expect("failed report has a witness");
        AlgebraReport {
            verdict: Verdict::PassWithCaveat,
            caveat: Some(format!(
                "printed form {} fails at {}: expected {}, got {}; holds as {}",
                claim.printed.statement(),
                w.row_label.as_deref().unwrap_or("?"),
                w.expected,
                w.actual,
                claim.derived.statement()
            )),
            witness: printed.witness.clone(),
            failing_rows: printed.failing_rows.clone(),
            max_residual: printed.max_residual,
            ..derived.clone()
        }
    } else {
        derived.clone()
    };
    combined.relation_id = claim.id.clone();
    Ok(ClaimOutcome {
        combined,
        printed,
        alternates,
        derived,
    })
}

/// Generators plus the relations and claims asserted about them.
#[derive(Clone, Debug)]
pub struct Suite {
    pub name: String,
    pub generators: GeneratorSet,
    pub relations: Vec<Relation>,
    pub claims: Vec<Claim>,
}

impl Suite {
    pub fn new(name: impl Into<String>, generators: GeneratorSet) -> Self {
        Self {
            name: name.into(),
            generators,
            relations: Vec::new(),
            claims: Vec::new(),
        }
    }

    pub fn relation(mut self, r: Relation) -> Self {
        self.relations.push(r);
        self
    }

    pub fn claim(mut self, c: Claim) -> Self {
        self.claims.push(c);
        self
    }

    /// Exact reports for every relation, then the combined report of every claim.
    pub fn run_exact(&self) -> Result<Vec<AlgebraReport>> {
        let mut out = self
            .relations
            .iter()
            .map(|r| r.check_exact(&self.generators))
            .collect::<Result<Vec<_>>>()?;
        for c in &self.claims {
            out.push(audit_claim(&self.generators, c)?.combined);
        }
        Ok(out)
    }

    /// Numeric reports at `nu` for every relation and every derived claim form.
    pub fn run_numeric(&self, nu: f64) -> Result<Vec<AlgebraReport>> {
        let gens = numeric_generators(&self.generators, nu)?;
        let basis = self.generators.basis();
        self.relations
            .iter()
            .chain(self.claims.iter().map(|c| &c.derived))
            .map(|r| r.check_numeric(&gens, nu, basis))
            .collect()
    }

    pub fn claim_outcomes(&self) -> Result<Vec<ClaimOutcome>> {
        self.claims
            .iter()
            .map(|c| audit_claim(&self.generators, c))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::fock_basis;
    use crate::scalar::RadicalSum;

    fn pauli_like() -> GeneratorSet {
        // 2x2 raising/lowering pair
        let b = fock_basis(2);
        let mut up = OperatorMatrix::zeros(b.clone());
        up.set(0, 1, RadicalSum::one());
        let z = OperatorMatrix::diagonal(b.clone(), vec![RadicalSum::one(), RadicalSum::from_int(-1)]);
        GeneratorSet::new(b)
            .with("s", up)
            .unwrap()
            .with("z", z)
            .unwrap()
    }

    #[test]
    fn display_forms() {
        let e = Expr::comm(Expr::gen("a"), Expr::gen("a").adjoint());
        assert_eq!(e.to_string(), "[a, a†]");
        let rhs = Expr::Identity + Expr::gen("R").scaled(NuPolynomial::from_ints(&[0, 2]));
        assert_eq!(rhs.to_string(), "1 + (2ν)R");
        let n = Expr::gen("a").adjoint() * Expr::gen("a") - Expr::Identity.scaled(NuPolynomial::nu());
        assert_eq!(n.to_string(), "a†a - (ν)");
        assert_eq!(Expr::gen("J0").times(2).to_string(), "2J0");
        assert_eq!(Expr::anti(Expr::gen("x"), Expr::gen("y")).to_string(), "{x, y}");
    }

    #[test]
    fn exact_and_numeric_agree_on_passes() {
        let set = pauli_like();
        let s = Expr::gen("s");
        let rel = Relation::new("c", Expr::comm(s.clone(), s.clone().adjoint()), Expr::gen("z"));
        assert!(rel.check_exact(&set).unwrap().passed_strict());
        let gens = numeric_generators(&set, 0.3).unwrap();
        assert!(rel.check_numeric(&gens, 0.3, set.basis()).unwrap().passed());
        let wrong = Relation::new("w", Expr::comm(s.clone(), s.adjoint()), Expr::gen("z").times(2));
        assert!(!wrong.check_exact(&set).unwrap().passed());
        assert!(!wrong.check_numeric(&gens, 0.3, set.basis()).unwrap().passed());
    }

    #[test]
    fn claim_outcomes() {
        let set = pauli_like();
        let s = Expr::gen("s");
        let lhs = Expr::comm(s.clone(), s.adjoint());
        let claim = Claim {
            id: "k".into(),
            printed: Relation::new("k.printed", lhs.clone(), Expr::gen("z").times(2)),
            alternates: vec![],
            derived: Relation::new("k.derived", lhs, Expr::gen("z")),
        };
        let out = audit_claim(&set, &claim).unwrap();
        assert_eq!(out.printed.verdict, Verdict::Fail);
        assert_eq!(out.derived.verdict, Verdict::Pass);
        assert_eq!(out.combined.verdict, Verdict::PassWithCaveat);
        assert!(out.combined.caveat.unwrap().contains("holds as"));
    }

    #[test]
    fn unknown_generator_is_an_error() {
        let set = pauli_like();
        assert!(matches!(
            evaluate_exact(&Expr::gen("q"), &set),
            Err(AlgebraError::UnknownGenerator(_))
        ));
    }
}
