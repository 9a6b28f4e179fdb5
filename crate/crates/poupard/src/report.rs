//! Verification reports: a named list of checks with both sides recorded.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub parameters: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn new(suite: &str) -> Self {
        VerifyReport {
            suite: suite.to_string(),
            checks: Vec::new(),
            summary: Summary { pass: 0, fail: 0 },
        }
    }

    pub fn push(&mut self, name: &str, parameters: String, lhs: String, rhs: String) {
        let pass = lhs == rhs;
        self.record(Check { name: name.to_string(), parameters, lhs, rhs, pass });
    }

    /// Boolean check: lhs is the observed truth value, rhs the expectation.
    pub fn push_bool(&mut self, name: &str, parameters: String, ok: bool) {
        self.record(Check {
            name: name.to_string(),
            parameters,
            lhs: ok.to_string(),
            rhs: "true".to_string(),
            pass: ok,
        });
    }

    fn record(&mut self, check: Check) {
        if check.pass {
            self.summary.pass += 1;
        } else {
            self.summary.fail += 1;
        }
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn merge(&mut self, other: VerifyReport) {
        for check in other.checks {
            self.record(check);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
