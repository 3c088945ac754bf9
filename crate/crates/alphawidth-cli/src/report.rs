//! Suite run reports: one outcome per stream graph, deterministic
//! aggregation, replayable failure lines.

use serde_json::json;
use std::time::Duration;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug)]
pub struct GraphOutcome {
    pub index: usize,
    pub graph6: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug, Default)]
pub struct RunReport {
    pub suite: String,
    pub outcomes: Vec<GraphOutcome>,
    pub wall: Duration,
}

impl RunReport {
    pub fn passed(&self) -> usize {
        self.count(Outcome::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Outcome::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Outcome::Skip)
    }

    fn count(&self, o: Outcome) -> usize {
        self.outcomes.iter().filter(|g| g.outcome == o).count()
    }

    /// Machine output: one JSON object per graph, in input order. Timing is
    /// deliberately left out so reports are byte-identical across runs.
    pub fn json_lines(&self) -> String {
        let mut out = String::new();
        for g in &self.outcomes {
            let line = json!({
                "index": g.index,
                "graph6": g.graph6,
                "suite": self.suite,
                "outcome": match g.outcome {
                    Outcome::Pass => "pass",
                    Outcome::Fail => "fail",
                    Outcome::Skip => "skip",
                },
                "detail": g.detail,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }

    /// Human output: failures with replay lines, then a count summary.
    pub fn human(&self) -> String {
        let mut out = String::new();
        for g in &self.outcomes {
            if g.outcome == Outcome::Fail {
                out.push_str(&format!(
                    "FAIL [{}] {}  replay: {}\n",
                    g.index, g.detail, g.graph6
                ));
            }
        }
        out.push_str(&format!(
            "suite {}: {} processed, {} passed, {} failed, {} skipped\n",
            self.suite,
            self.outcomes.len(),
            self.passed(),
            self.failed(),
            self.skipped()
        ));
        out
    }
}
