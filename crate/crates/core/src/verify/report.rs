use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::partition::partitions_up_to;
use crate::schur::SymFunc;
use crate::vertex::hall_littlewood;

/// A counterexample: one input on which the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub input: SymFunc,
    pub lhs: SymFunc,
    pub rhs: SymFunc,
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub params: Value,
    pub pass: bool,
    /// Number of test inputs (or enumerated terms) compared.
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl VerifyReport {
    pub fn new(id: &str, params: Value) -> Self {
        VerifyReport {
            id: id.to_string(),
            params,
            pass: true,
            cases: 0,
            witness: None,
            notes: Vec::new(),
            millis: None,
        }
    }

    /// Marks the report failed with a note.
    pub fn fail(&mut self, note: impl Into<String>) {
        self.pass = false;
        self.notes.push(note.into());
    }

    /// Records a check; the first failing one is kept as the witness.
    pub fn check(&mut self, input: &SymFunc, lhs: SymFunc, rhs: SymFunc) {
        self.cases += 1;
        if lhs != rhs && self.pass {
            self.pass = false;
            self.witness = Some(Witness {
                input: input.clone(),
                lhs,
                rhs,
            });
        }
    }

    /// Records a boolean condition that has no symmetric-function witness.
    pub fn require(&mut self, cond: bool, note: impl FnOnce() -> String) {
        self.cases += 1;
        if !cond {
            self.fail(note());
        }
    }
}

/// `{1} ∪ {H_σ : 1 ≤ |σ| ≤ d}` in the Schur basis, degree by degree.
pub fn test_set(d: usize) -> Vec<SymFunc> {
    partitions_up_to(d)
        .iter()
        .map(|s| (*hall_littlewood(s)).clone())
        .collect()
}

/// Compares two operators on every element of `inputs`.
pub fn compare_on(
    id: &str,
    params: Value,
    inputs: &[SymFunc],
    lhs: impl Fn(&SymFunc) -> Result<SymFunc>,
    rhs: impl Fn(&SymFunc) -> Result<SymFunc>,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(id, params);
    for f in inputs {
        report.check(f, lhs(f)?, rhs(f)?);
        if !report.pass {
            break;
        }
    }
    Ok(report)
}
