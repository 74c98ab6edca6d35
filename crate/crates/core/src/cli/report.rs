//! Verification reports and their text and JSON encodings.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::verdict::{Verdict, Witness};

pub const TOOL: &str = "doublealg";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportCheck {
    pub id: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Note {
    pub key: String,
    pub value: String,
}

/// A model-file fragment produced by a `build`, `dualize` or `extract`
/// command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Output {
    pub name: String,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub input_sha256: String,
    pub command: String,
    pub seed: u64,
    pub checks: Vec<ReportCheck>,
    #[serde(default)]
    pub notes: Vec<Note>,
    #[serde(default)]
    pub outputs: Vec<Output>,
    pub summary: String,
}

pub fn digest(input: &[u8]) -> String {
    hex::encode(Sha256::digest(input))
}

impl Report {
    pub fn new(input: &[u8], command: impl Into<String>, seed: u64) -> Self {
        let mut r = Report {
            tool: TOOL.to_string(),
            version: VERSION.to_string(),
            input_sha256: digest(input),
            command: command.into(),
            seed,
            checks: Vec::new(),
            notes: Vec::new(),
            outputs: Vec::new(),
            summary: String::new(),
        };
        r.summarize();
        r
    }

    pub fn push(&mut self, id: impl Into<String>, verdict: &Verdict, timing_us: Option<u64>) {
        self.checks.push(ReportCheck {
            id: id.into(),
            verdict: if verdict.passed() { "pass" } else { "fail" }.to_string(),
            witness: verdict.witness().cloned(),
            timing_us,
        });
        self.summarize();
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.notes.push(Note {
            key: key.into(),
            value: value.into(),
        });
    }

    pub fn output(&mut self, name: impl Into<String>, text: impl Into<String>) {
        self.outputs.push(Output {
            name: name.into(),
            text: text.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == "pass")
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    fn summarize(&mut self) {
        let failed = self.checks.iter().filter(|c| c.verdict != "pass").count();
        self.summary = if failed == 0 {
            format!("pass ({} checks)", self.checks.len())
        } else {
            format!("fail ({failed} of {} checks failed)", self.checks.len())
        };
    }
}

/// Comment-prefixed text; with the outputs left bare, a report of a
/// `build` command is itself a model file.
fn emit_text(r: &Report) -> String {
    let mut s = String::new();
    // Multi-line values stay inside the comment.
    let field = |s: &mut String, label: String, value: &str| {
        let mut lines = value.lines();
        let _ = writeln!(s, "{label}{}", lines.next().unwrap_or(""));
        for l in lines {
            let _ = writeln!(s, "#     {l}");
        }
    };
    let _ = writeln!(s, "# {} {}", r.tool, r.version);
    let _ = writeln!(s, "# input sha256: {}", r.input_sha256);
    let _ = writeln!(s, "# command: {}", r.command);
    let _ = writeln!(s, "# seed: {}", r.seed);
    for c in &r.checks {
        match c.timing_us {
            Some(t) => {
                let _ = writeln!(s, "# {} {} ({t} us)", c.verdict, c.id);
            }
            None => {
                let _ = writeln!(s, "# {} {}", c.verdict, c.id);
            }
        }
        if let Some(w) = &c.witness {
            field(&mut s, "#   check: ".into(), &w.check);
            field(&mut s, "#   at: ".into(), &w.location);
            field(&mut s, "#   defect: ".into(), &w.defect);
        }
    }
    for n in &r.notes {
        field(&mut s, format!("# note {}: ", n.key), &n.value);
    }
    for o in &r.outputs {
        let _ = writeln!(s, "# output {}", o.name);
        s.push_str(&o.text);
        if !o.text.ends_with('\n') {
            s.push('\n');
        }
    }
    let _ = writeln!(s, "# summary: {}", r.summary);
    s
}

pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Text => emit_text(r),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_header_and_summary() {
        let r = Report::new(b"", "check algebroid", 0);
        let text = emit_report(&r, Format::Text);
        assert_eq!(
            text,
            format!(
                "# doublealg {VERSION}\n# input sha256: e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855\n# command: check algebroid\n# seed: 0\n# summary: pass (0 checks)\n"
            )
        );
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new(b"x", "check double", 7);
        r.push("a", &Verdict::Pass, None);
        r.push("b", &Verdict::Fail(Witness::new("jacobi", "(e1, e2, e3)", "x")), Some(5));
        r.note("k", "v");
        r.output("o", "[chart M]\ncoords = x\n");
        let s = emit_report(&r, Format::Json);
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(emit_report(&back, Format::Json), s);
        assert_eq!(r.exit_code(), 1);
    }
}
