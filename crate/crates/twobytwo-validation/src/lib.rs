//! Pass/fail reporting for the acceptance run.

use std::fmt::Display;
use std::process::ExitCode;

#[derive(Default)]
pub struct Report {
    lines: Vec<(bool, String)>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    /// Records and prints one criterion.
    pub fn check(&mut self, label: &str, pass: bool, detail: impl Display) {
        let line = format!(
            "{} [PRIMARY] {label}: {detail}",
            if pass { "PASS" } else { "FAIL" }
        );
        println!("{line}");
        self.lines.push((pass, line));
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|(p, _)| !p).count()
    }

    pub fn finish(self) -> ExitCode {
        let failed = self.failures();
        println!(
            "acceptance: {} passed, {failed} failed",
            self.lines.len() - failed
        );
        if failed == 0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::FAILURE
        }
    }
}

/// Counts failures of a predicate over a universe, keeping a few examples.
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
    pub examples: Vec<String>,
}

impl Tally {
    pub fn new() -> Tally {
        Tally {
            checked: 0,
            failed: 0,
            examples: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < 3 {
                self.examples.push(what());
            }
        }
    }
}

impl Default for Tally {
    fn default() -> Self {
        Tally::new()
    }
}
