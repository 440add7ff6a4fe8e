//! Check reports and their text and JSON renderings.

use std::fmt::Debug;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub kind: String,
    pub message: String,
    pub witness: Option<String>,
}

impl Finding {
    pub fn new(kind: impl Into<String>, message: impl Into<String>, witness: Option<String>) -> Self {
        Finding {
            kind: kind.into(),
            message: message.into(),
            witness,
        }
    }

    /// A finding for a module error: the kind is the innermost variant name,
    /// the witness is the error's own rendering.
    pub fn from_error<E: Debug + ToString>(context: &str, e: &E) -> Self {
        let rendered = e.to_string();
        Finding {
            kind: variant_name(e),
            message: format!("{context}: {rendered}"),
            witness: Some(rendered),
        }
    }
}

/// Innermost enum variant in a `Debug` rendering, skipping wrapper variants.
pub fn variant_name<E: Debug>(e: &E) -> String {
    let debug = format!("{e:?}");
    let mut rest = debug.as_str();
    loop {
        let end = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
        let (name, tail) = rest.split_at(end);
        let wrapper = matches!(name, "Category" | "Functor" | "Nat");
        match tail.strip_prefix('(') {
            Some(inner) if wrapper && inner.starts_with(|c: char| c.is_ascii_uppercase()) => rest = inner,
            _ => return name.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub status: Status,
    pub subject: String,
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn ok(subject: impl Into<String>) -> Self {
        Report {
            status: Status::Ok,
            subject: subject.into(),
            findings: Vec::new(),
        }
    }

    pub fn fail(subject: impl Into<String>, finding: Finding) -> Self {
        Report {
            status: Status::Fail,
            subject: subject.into(),
            findings: vec![finding],
        }
    }

    /// Merges per-item reports into one: subjects joined, findings pooled.
    pub fn combine(parts: Vec<Report>) -> Report {
        let status = if parts.iter().any(|r| r.status == Status::Fail) { Status::Fail } else { Status::Ok };
        Report {
            status,
            subject: parts.iter().map(|r| r.subject.as_str()).collect::<Vec<_>>().join("; "),
            findings: parts.into_iter().flat_map(|r| r.findings).collect(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Fail => 1,
        }
    }

    pub fn render_text(&self) -> String {
        match self.status {
            Status::Ok => format!("OK {}\n", self.subject),
            Status::Fail => {
                let mut out = String::new();
                for f in &self.findings {
                    out.push_str(&format!("FAIL: {}\n", f.message));
                    if let Some(w) = f.witness.as_deref().filter(|w| !f.message.contains(*w)) {
                        out.push_str(&format!("  witness: {w}\n"));
                    }
                }
                out
            }
        }
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize") + "\n"
    }
}
