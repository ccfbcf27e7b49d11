//! Machine-readable verification reports.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Case {
    pub name: String,
    pub inputs: Value,
    pub expected: Value,
    pub actual: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Case {
    /// Passes iff `actual == expected`.
    pub fn check(name: impl Into<String>, inputs: Value, expected: impl Serialize, actual: impl Serialize) -> Self {
        let expected = json!(expected);
        let actual = json!(actual);
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Case {
            name: name.into(),
            inputs,
            expected,
            actual,
            status,
            witness: None,
        }
    }

    /// A law that either holds everywhere or has a counterexample.
    pub fn law(name: impl Into<String>, inputs: Value, counterexample: Option<Value>) -> Self {
        let actual = if counterexample.is_some() { "violated" } else { "holds" };
        Case::check(name, inputs, "holds", actual).with_witness(counterexample)
    }

    pub fn error(name: impl Into<String>, inputs: Value, err: &Error) -> Self {
        Case {
            name: name.into(),
            inputs,
            expected: Value::Null,
            actual: json!(err.to_string()),
            status: Status::Error,
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: Option<Value>) -> Self {
        self.witness = witness;
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            cases: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, case: Case) {
        self.summary.total += 1;
        match case.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Error => self.summary.error += 1,
        }
        self.cases.push(case);
    }

    /// Records `Ok` cases as they are and `Err` as an error case.
    pub fn push_result(&mut self, name: &str, inputs: Value, result: Result<Case, Error>) {
        match result {
            Ok(case) => self.push(case),
            Err(e) => self.push(Case::error(name, inputs, &e)),
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        let _ = writeln!(out, "suite {}: {} cases, {} pass, {} fail, {} error", self.suite, s.total, s.pass, s.fail, s.error);
        for case in &self.cases {
            let tag = match case.status {
                Status::Pass => "PASS ",
                Status::Fail => "FAIL ",
                Status::Error => "ERROR",
            };
            let _ = writeln!(out, "  {tag} {}  {}", case.name, case.inputs);
            if case.status != Status::Pass {
                let _ = writeln!(out, "        expected {}  actual {}", case.expected, case.actual);
            }
            if let Some(w) = &case.witness {
                let _ = writeln!(out, "        witness {w}");
            }
        }
        out
    }
}
