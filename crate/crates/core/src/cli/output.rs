use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    Violated = 1,
    Invalid = 2,
    Budget = 3,
}

impl ExitCode {
    pub fn of_error(e: &Error) -> Self {
        match e {
            Error::NotLipschitz(..) | Error::NoEmbedding(_) | Error::InvalidEmbedding(_) => {
                ExitCode::Violated
            }
            Error::BudgetExceeded(_) => ExitCode::Budget,
            _ => ExitCode::Invalid,
        }
    }

    /// The worse of two outcomes, by numeric code.
    pub fn worst(self, other: ExitCode) -> ExitCode {
        if (other as i32) > (self as i32) {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Serialize)]
pub(crate) struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Debug, Serialize)]
pub(crate) struct Report {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    pub timing: Timing,
}

#[derive(Debug, Serialize)]
pub(crate) struct ErrorReport {
    pub exit_code: i32,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, usize)>,
}

impl ErrorReport {
    pub fn new(e: &Error) -> Self {
        let witness = match *e {
            Error::NotLipschitz(a, b) | Error::DuplicateCoords(a, b) | Error::NotGridEdge(a, b) => {
                Some((a, b))
            }
            _ => None,
        };
        Self {
            exit_code: ExitCode::of_error(e) as i32,
            message: e.to_string(),
            witness,
        }
    }
}

/// One `path<TAB>value` line per scalar leaf, paths joined with `.`.
pub fn flatten_tsv(v: &Value) -> String {
    let mut out = String::new();
    walk(v, &mut String::new(), &mut out);
    out
}

fn walk(v: &Value, path: &mut String, out: &mut String) {
    let mut descend = |key: &str, child: &Value, path: &mut String| {
        let len = path.len();
        if !path.is_empty() {
            path.push('.');
        }
        path.push_str(key);
        walk(child, path, out);
        path.truncate(len);
    };
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, child) in map {
                descend(k, child, path);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, child) in items.iter().enumerate() {
                descend(&i.to_string(), child, path);
            }
        }
        Value::String(s) => {
            let _ = writeln!(out, "{path}\t{s}");
        }
        other => {
            let _ = writeln!(out, "{path}\t{other}");
        }
    }
}
