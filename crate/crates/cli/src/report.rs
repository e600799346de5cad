use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An expected discrepancy with the printed results, reported but not
    /// counted as a failure.
    Finding,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Item {
    pub name: String,
    pub status: Status,
    pub residual_summary: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_millis: Option<u64>,
}

impl Item {
    pub fn new(name: impl Into<String>, status: Status, summary: impl Into<String>) -> Self {
        Item { name: name.into(), status, residual_summary: summary.into(), duration_millis: None }
    }

    pub fn pass(name: impl Into<String>, summary: impl Into<String>) -> Self {
        Item::new(name, Status::Pass, summary)
    }

    pub fn fail(name: impl Into<String>, summary: impl Into<String>) -> Self {
        Item::new(name, Status::Fail, summary)
    }

    pub fn finding(name: impl Into<String>, summary: impl Into<String>) -> Self {
        Item::new(name, Status::Finding, summary)
    }

    pub fn check(name: impl Into<String>, ok: bool, summary: impl Into<String>) -> Self {
        Item::new(name, if ok { Status::Pass } else { Status::Fail }, summary)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub d: u32,
    pub version: String,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub status: Status,
    pub items: Vec<Item>,
    pub metadata: Metadata,
}

/// Splits a name into text and number runs so that `O2 < O10`.
fn natural_key(s: &str) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
            }
            out.push((std::mem::take(&mut text), digits.parse().unwrap_or(u64::MAX)));
        } else {
            text.push(c);
            chars.next();
        }
    }
    if !text.is_empty() {
        out.push((text, 0));
    }
    out
}

fn natural_cmp(a: &str, b: &str) -> Ordering {
    natural_key(a).cmp(&natural_key(b)).then_with(|| a.cmp(b))
}

impl RunReport {
    /// Items are sorted by name and the status is derived from them.
    pub fn new(command: impl Into<String>, mut items: Vec<Item>, metadata: Metadata) -> Self {
        items.sort_by(|a, b| natural_cmp(&a.name, &b.name));
        let status = if items.iter().any(|i| i.status == Status::Fail) {
            Status::Fail
        } else if items.iter().any(|i| i.status == Status::Finding) {
            Status::Finding
        } else {
            Status::Pass
        };
        RunReport { command: command.into(), status, items, metadata }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Finding => 3,
        }
    }

    fn count(&self, s: Status) -> usize {
        self.items.iter().filter(|i| i.status == s).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn render_report(r: &RunReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serialises");
            s.push('\n');
            s
        }
        Format::Text => render_text(r),
    }
}

fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", r.command);
    let _ = writeln!(out, "{} items, {}", r.items.len(), r.status.label());
    let _ = writeln!(
        out,
        "pass {}, fail {}, finding {}; d={} version={} seed={}",
        r.count(Status::Pass),
        r.count(Status::Fail),
        r.count(Status::Finding),
        r.metadata.d,
        r.metadata.version,
        r.metadata.seed
    );
    for (title, status) in [("passed", Status::Pass), ("failures", Status::Fail), ("findings", Status::Finding)] {
        let section: Vec<&Item> = r.items.iter().filter(|i| i.status == status).collect();
        if section.is_empty() {
            continue;
        }
        let _ = writeln!(out, "{title}:");
        for i in section {
            let _ = write!(out, "  {}", i.name);
            if !i.residual_summary.is_empty() {
                let _ = write!(out, ": {}", i.residual_summary);
            }
            if let Some(ms) = i.duration_millis {
                let _ = write!(out, " [{ms} ms]");
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meta() -> Metadata {
        Metadata { d: 3, version: "0".into(), seed: 1 }
    }

    #[test]
    fn empty_report_passes() {
        let r = RunReport::new("x", vec![], meta());
        assert_eq!(r.exit_code(), 0);
        assert!(render_report(&r, Format::Text).contains("0 items, pass"));
    }

    #[test]
    fn findings_render_in_their_own_section() {
        let r = RunReport::new("x", vec![Item::pass("a", ""), Item::finding("b", "typo")], meta());
        assert_eq!(r.exit_code(), 3);
        let text = render_report(&r, Format::Text);
        assert!(text.contains("findings:\n  b: typo"));
        assert!(!text.contains("failures:"));
    }

    #[test]
    fn failure_dominates() {
        let r = RunReport::new("x", vec![Item::fail("a", ""), Item::finding("b", "")], meta());
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn natural_order() {
        let r = RunReport::new("x", vec![Item::pass("O10", ""), Item::pass("O2", ""), Item::pass("O1", "")], meta());
        let names: Vec<&str> = r.items.iter().map(|i| i.name.as_str()).collect();
        assert_eq!(names, ["O1", "O2", "O10"]);
    }

    #[test]
    fn json_round_trip_and_repeatability() {
        let r = RunReport::new("x", vec![Item::pass("a", "0")], meta());
        let text = render_report(&r, Format::Json);
        assert_eq!(text, render_report(&r, Format::Json));
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(!text.contains("durationMillis"));
    }
}
