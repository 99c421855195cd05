//! Pass/fail bookkeeping shared by every verification suite.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};

use serde::Serialize;

/// One failed check, with the smallest input that exhibits it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub residue: Option<usize>,
    /// Prefixed with the check name, e.g. `"f_phi_is_jm: true"`.
    pub expected: String,
    pub actual: String,
}

/// Outcome of a suite. Passes exactly when `failures` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub ell: usize,
    pub params: BTreeMap<String, usize>,
    pub checks: u64,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, ell: usize) -> Self {
        VerificationReport {
            suite: suite.into(),
            ell,
            params: BTreeMap::new(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: usize) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one check of `actual` against `expected`.
    pub fn expect_eq<T: PartialEq + Debug>(
        &mut self,
        name: &str,
        input: impl Display,
        residue: Option<usize>,
        expected: T,
        actual: T,
    ) {
        self.checks += 1;
        if expected != actual {
            self.failures.push(Failure {
                input: input.to_string(),
                residue,
                expected: format!("{name}: {expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }

    pub fn expect(&mut self, name: &str, input: impl Display, residue: Option<usize>, holds: bool) {
        self.expect_eq(name, input, residue, true, holds);
    }

    /// Folds the checks and failures of `other` into `self`.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    /// A scratch report for one unit of work, to be absorbed later.
    pub fn scratch(&self) -> Self {
        VerificationReport::new(self.suite.clone(), self.ell)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

impl Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} (ell={}", self.suite, self.ell)?;
        for (k, v) in &self.params {
            write!(f, ", {k}={v}")?;
        }
        write!(f, "): {} checks, {} failures", self.checks, self.failures.len())?;
        for failure in self.failures.iter().take(10) {
            write!(f, "\n  {}", failure.input)?;
            if let Some(i) = failure.residue {
                write!(f, " i={i}")?;
            }
            write!(f, " expected {} got {}", failure.expected, failure.actual)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_decide_the_verdict() {
        let mut report = VerificationReport::new("demo", 3).with_param("nmax", 4);
        report.expect_eq("size", "3,1", None, 4, 4);
        assert!(report.passed());
        report.expect_eq("size", "3,1", Some(2), 4, 5);
        assert!(!report.passed());
        assert_eq!(report.checks, 2);
        assert_eq!(report.failures[0].expected, "size: 4");
        assert!(report.to_string().starts_with("FAIL demo (ell=3, nmax=4): 2 checks, 1 failures"));
    }

    #[test]
    fn json_keys_are_stable() {
        let report = VerificationReport::new("demo", 3).with_param("depth", 2);
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(json, r#"{"suite":"demo","ell":3,"params":{"depth":2},"checks":0,"failures":[]}"#);
    }
}
