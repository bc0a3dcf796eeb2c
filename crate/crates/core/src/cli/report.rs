use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub description: String,
    /// `None` for informational lines, which always pass.
    pub expected: Option<String>,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(description: &str, expected: &str, actual: &str, pass: bool) -> Self {
        Check { description: description.into(), expected: Some(expected.into()), actual: actual.into(), pass }
    }

    /// Passes iff `actual == expected`.
    pub fn exact(description: &str, expected: &str, actual: &str) -> Self {
        Self::new(description, expected, actual, expected == actual)
    }

    pub fn info(description: &str, actual: &str) -> Self {
        Check { description: description.into(), expected: None, actual: actual.into(), pass: true }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub elapsed_ms: f64,
}

impl ScenarioReport {
    pub fn new(scenario: &str) -> Self {
        ScenarioReport { scenario: scenario.into(), checks: Vec::new(), pass: false, elapsed_ms: 0.0 }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub(crate) fn finish(mut self, start: Instant) -> Self {
        self.pass = !self.checks.is_empty() && self.checks.iter().all(|c| c.pass);
        self.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        self
    }

    pub fn passed(&self) -> bool {
        self.pass
    }

    pub fn check(&self, description: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.description == description)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.scenario);
        for c in &self.checks {
            let mark = match (&c.expected, c.pass) {
                (None, _) => "info",
                (Some(_), true) => "ok",
                (Some(_), false) => "FAIL",
            };
            let _ = write!(s, "  [{mark}] {}: {}", c.description, c.actual);
            match &c.expected {
                Some(e) if !c.pass || e != &c.actual => {
                    let _ = write!(s, " (expected {e})");
                }
                _ => {}
            }
            s.push('\n');
        }
        let _ = writeln!(s, "{} in {:.1} ms", if self.pass { "PASS" } else { "FAIL" }, self.elapsed_ms);
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
