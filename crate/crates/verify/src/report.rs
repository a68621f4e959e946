use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

/// One measured fact: what was expected and what was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub subject: String,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Violations; never empty when the verdict is a failure.
    pub witnesses: Vec<Witness>,
    /// Every comparison made, passing or not.
    pub measurements: Vec<Witness>,
}

impl CheckReport {
    pub fn skipped(check: &str, reason: &str) -> CheckReport {
        CheckReport { check: check.into(), verdict: Verdict::Skipped(reason.into()), witnesses: vec![], measurements: vec![] }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    /// Whether some witness subject starts with `prefix`.
    pub fn blames(&self, prefix: &str) -> bool {
        self.witnesses.iter().any(|w| w.subject.starts_with(prefix))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Pass => writeln!(f, "pass {} ({} measurements)", self.check, self.measurements.len())?,
            Verdict::Fail => writeln!(f, "FAIL {}", self.check)?,
            Verdict::Skipped(why) => writeln!(f, "skipped {}: {why}", self.check)?,
        }
        for w in self.witnesses.iter().take(20) {
            writeln!(f, "  {}: expected {}, found {}", w.subject, w.expected, w.found)?;
        }
        if self.witnesses.len() > 20 {
            writeln!(f, "  ... {} more", self.witnesses.len() - 20)?;
        }
        Ok(())
    }
}

/// Accumulates comparisons for one check.
#[derive(Debug)]
pub struct Recorder {
    check: String,
    witnesses: Vec<Witness>,
    measurements: Vec<Witness>,
}

impl Recorder {
    pub fn new(check: &str) -> Recorder {
        Recorder { check: check.into(), witnesses: vec![], measurements: vec![] }
    }

    /// Records a comparison; a mismatch becomes a witness.
    pub fn expect(&mut self, subject: impl Into<String>, ok: bool, expected: impl fmt::Display, found: impl fmt::Display) {
        let w = Witness { subject: subject.into(), expected: expected.to_string(), found: found.to_string() };
        if !ok {
            self.witnesses.push(w.clone());
        }
        self.measurements.push(w);
    }

    pub fn expect_eq<T: PartialEq + fmt::Display>(&mut self, subject: impl Into<String>, expected: T, found: T) {
        let ok = expected == found;
        self.expect(subject, ok, expected, found);
    }

    pub fn finish(self) -> CheckReport {
        let verdict = if self.witnesses.is_empty() { Verdict::Pass } else { Verdict::Fail };
        CheckReport { check: self.check, verdict, witnesses: self.witnesses, measurements: self.measurements }
    }
}
