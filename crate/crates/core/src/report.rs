//! Outcome records for relation checks.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// Literal equality of canonical exact forms.
    Exact,
    /// Floating-point comparison at sampled ν.
    Numeric,
    /// Exact forms differed syntactically; equality established numerically.
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    /// The relation as printed fails, a corrected form holds; the caveat
    /// carries the correction.
    PassWithCaveat,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
            Mode::Mixed => "mixed",
        }
    }
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::PassWithCaveat => "pass_with_caveat",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// First offending entry of a failed comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub row_label: Option<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraReport {
    pub relation_id: String,
    /// Human-readable statement of the relation that was checked.
    pub statement: String,
    pub mode: Mode,
    /// Max absolute entrywise deviation; 0 for exact passes.
    pub max_residual: f64,
    pub verdict: Verdict,
    pub caveat: Option<String>,
    pub witness: Option<Witness>,
    /// Rows (or indices) where the comparison failed.
    pub failing_rows: Vec<usize>,
    /// Rows excluded from the comparison by a truncation mask.
    pub excluded_rows: Vec<usize>,
    pub note: Option<String>,
}

impl AlgebraReport {
    pub fn pass(id: impl Into<String>, statement: impl Into<String>, mode: Mode) -> Self {
        Self {
            relation_id: id.into(),
            statement: statement.into(),
            mode,
            max_residual: 0.0,
            verdict: Verdict::Pass,
            caveat: None,
            witness: None,
            failing_rows: Vec::new(),
            excluded_rows: Vec::new(),
            note: None,
        }
    }

    pub fn fail(
        id: impl Into<String>,
        statement: impl Into<String>,
        mode: Mode,
        witness: Witness,
    ) -> Self {
        let row = witness.row;
        Self {
            verdict: Verdict::Fail,
            witness: Some(witness),
            failing_rows: vec![row],
            ..Self::pass(id, statement, mode)
        }
    }

    /// Exact comparison of two values that print themselves.
    pub fn compare<T: PartialEq + fmt::Display>(
        id: impl Into<String>,
        statement: impl Into<String>,
        index: usize,
        expected: &T,
        actual: &T,
    ) -> Self {
        if expected == actual {
            Self::pass(id, statement, Mode::Exact)
        } else {
            Self::fail(
                id,
                statement,
                Mode::Exact,
                Witness {
                    row: index,
                    col: 0,
                    row_label: None,
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                },
            )
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Pass or PassWithCaveat.
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn passed_strict(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Folds many reports into one; the first failure supplies the witness.
    pub fn summarize(
        id: impl Into<String>,
        statement: impl Into<String>,
        reports: &[AlgebraReport],
    ) -> Self {
        let mut out = Self::pass(id, statement, Mode::Exact);
        let mut failures = Vec::new();
        for (k, r) in reports.iter().enumerate() {
            out.max_residual = out.max_residual.max(r.max_residual);
            out.mode = out.mode.max(r.mode);
            match r.verdict {
                Verdict::Fail => {
                    failures.push(k);
                    if out.witness.is_none() {
                        out.witness = r.witness.clone();
                        out.caveat = Some(format!("first failure: {}", r.relation_id));
                    }
                }
                Verdict::PassWithCaveat if out.verdict == Verdict::Pass => {
                    out.verdict = Verdict::PassWithCaveat;
                    out.caveat = r.caveat.clone();
                }
                _ => {}
            }
        }
        if !failures.is_empty() {
            out.verdict = Verdict::Fail;
            out.failing_rows = failures;
        }
        out.note = Some(format!("{} checks", reports.len()));
        out
    }
}

impl fmt::Display for AlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<6} {:<8} {}  [{}]",
            self.verdict.as_str(),
            self.mode.as_str(),
            self.relation_id,
            self.statement
        )?;
        if let Some(w) = &self.witness {
            write!(
                f,
                " witness ({}, {}): expected {}, got {}",
                w.row, w.col, w.expected, w.actual
            )?;
        }
        Ok(())
    }
}
