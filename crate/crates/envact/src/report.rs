//! Command reports in text and JSON form.
//!
//! JSON output goes through `serde_json::Map`, which keeps keys sorted, so
//! a report is byte-identical for identical input and flags.

use envact_core::globalization::{Audit, AuditKind};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Vacuous,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Vacuous => "vacuous",
            Status::Fail => "fail",
        }
    }
}

/// A consequence the library guarantees. A failing check is a library bug,
/// never a property of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditLine {
    pub name: String,
    pub claim: String,
    pub status: Status,
}

impl AuditLine {
    pub fn holds(name: &str, claim: &str, ok: bool) -> Self {
        AuditLine {
            name: name.into(),
            claim: claim.into(),
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    pub fn implication(name: &str, claim: &str, hypothesis: bool, conclusion: bool) -> Self {
        let status = match (hypothesis, conclusion) {
            (false, _) => Status::Vacuous,
            (true, true) => Status::Pass,
            (true, false) => Status::Fail,
        };
        AuditLine {
            name: name.into(),
            claim: claim.into(),
            status,
        }
    }

    fn to_json(&self) -> Value {
        json!({ "name": self.name, "claim": self.claim, "status": self.status.as_str() })
    }
}

impl From<&Audit> for AuditLine {
    fn from(a: &Audit) -> Self {
        let kind = match a.kind {
            AuditKind::Implication => "implication",
            AuditKind::Equivalence => "equivalence",
        };
        let status = match a.status() {
            "pass" => Status::Pass,
            "vacuous" => Status::Vacuous,
            _ => Status::Fail,
        };
        AuditLine {
            name: a.name.into(),
            claim: format!("{kind}: {}", a.statement),
            status,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub results: Vec<(String, Value)>,
    pub audits: Vec<AuditLine>,
    /// Properties the input lacks. Reported, not errors.
    pub flags: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str, canonical_input: &str) -> Self {
        Report {
            command: command.into(),
            input_digest: digest(canonical_input),
            results: Vec::new(),
            audits: Vec::new(),
            flags: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.results.push((key.into(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.results.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn audit(&mut self, line: AuditLine) {
        self.audits.push(line);
    }

    pub fn failed_audits(&self) -> Vec<&AuditLine> {
        self.audits
            .iter()
            .filter(|a| a.status == Status::Fail)
            .collect()
    }

    pub fn has_bug(&self) -> bool {
        !self.failed_audits().is_empty()
    }

    pub fn to_json(&self) -> Value {
        let results: Map<String, Value> = self.results.iter().cloned().collect();
        json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "results": results,
            "audits": self.audits.iter().map(AuditLine::to_json).collect::<Vec<_>>(),
            "flags": self.flags,
            "notes": self.notes,
            "bug": self.has_bug(),
        })
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if self.has_bug() {
            out.push_str(&self.bug_banner());
        }
        out.push_str(&format!(
            "envact {}\ninput: {}\n",
            self.command, self.input_digest
        ));
        for flag in &self.flags {
            out.push_str(&format!("FLAG: {flag}\n"));
        }
        out.push_str("results:\n");
        for (key, value) in &self.results {
            out.push_str(&format!("  {key}: {}\n", plain(value)));
        }
        if !self.audits.is_empty() {
            out.push_str("audits:\n");
            for a in &self.audits {
                out.push_str(&format!(
                    "  [{}] {}: {}\n",
                    a.status.as_str(),
                    a.name,
                    a.claim
                ));
            }
        }
        if !self.notes.is_empty() {
            out.push_str("notes:\n");
            for note in &self.notes {
                out.push_str(&format!("  - {note}\n"));
            }
        }
        out
    }

    pub fn bug_banner(&self) -> String {
        let names: Vec<&str> = self
            .failed_audits()
            .iter()
            .map(|a| a.name.as_str())
            .collect();
        let rule = "!".repeat(72);
        format!(
            "{rule}\nBUG: a guaranteed property failed ({}). This is a defect in envact, \
             not in the input.\n{rule}\n",
            names.join(", ")
        )
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn digest(text: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(text.as_bytes())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keys_are_sorted() {
        let mut r = Report::new("validate", "{}");
        r.set("zeta", 1);
        r.set("alpha", true);
        let text = r.render_json();
        assert!(text.find("\"alpha\"").unwrap() < text.find("\"zeta\"").unwrap());
        assert!(!r.has_bug());
    }

    #[test]
    fn failing_audit_raises_banner() {
        let mut r = Report::new("diagnose", "{}");
        r.audit(AuditLine::implication("a", "p implies q", false, false));
        assert!(!r.has_bug());
        r.audit(AuditLine::implication("b", "p implies q", true, false));
        assert!(r.render_text().starts_with(&"!".repeat(72)));
        assert_eq!(r.to_json()["bug"], true);
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
