//! Uniform verification reports.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Process exit code: 0 for pass, 1 otherwise.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Outcome of one checked claim. `paper_ref` holds the formula being checked.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claim: String,
    pub paper_ref: String,
    pub verdict: Verdict,
    pub residual_terms: usize,
    pub elapsed_ms: u64,
    #[serde(flatten)]
    pub params: Map<String, Value>,
}

impl Report {
    /// Starts timing a claim.
    pub fn start(claim: impl Into<String>, formula: impl Into<String>) -> ReportBuilder {
        ReportBuilder {
            claim: claim.into(),
            formula: formula.into(),
            params: Map::new(),
            started: Instant::now(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} (residual terms: {}, {} ms)",
            self.verdict, self.claim, self.residual_terms, self.elapsed_ms
        )
    }
}

pub struct ReportBuilder {
    claim: String,
    formula: String,
    params: Map<String, Value>,
    started: Instant,
}

impl ReportBuilder {
    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.set(key, value);
        self
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.params
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable parameter"));
    }

    pub fn finish(self, verdict: Verdict, residual_terms: usize) -> Report {
        Report {
            claim: self.claim,
            paper_ref: self.formula,
            verdict,
            residual_terms,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            params: self.params,
        }
    }
}

/// Combined verdict: pass only if every part passes, fail if any part fails.
pub fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    let mut out = Verdict::Pass;
    for v in verdicts {
        match v {
            Verdict::Fail => return Verdict::Fail,
            Verdict::Inconclusive => out = Verdict::Inconclusive,
            Verdict::Pass => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = Report::start("x = x", "x = x").param("n", 2).finish(Verdict::Pass, 0);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["n"], 2);
        assert_eq!(v["residual_terms"], 0);
        assert!(v["elapsed_ms"].is_u64());
        assert_eq!(combine([Verdict::Pass, Verdict::Inconclusive]), Verdict::Inconclusive);
        assert_eq!(combine([Verdict::Fail, Verdict::Inconclusive]), Verdict::Fail);
    }
}
