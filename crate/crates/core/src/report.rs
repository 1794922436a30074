//! Pass/fail reports shared by checks, the CLI and the acceptance suite.

use std::fmt::{self, Display};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::superlinalg::SCHEMA;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

/// One comparison; `pass` is None for recorded values that assert nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub pass: Option<bool>,
}

impl Check {
    pub fn eq<T: PartialEq + Display>(id: impl Into<String>, expected: T, actual: T) -> Self {
        Self {
            id: id.into(),
            pass: Some(expected == actual),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn holds(id: impl Into<String>, ok: bool) -> Self {
        Self {
            id: id.into(),
            expected: "true".into(),
            actual: ok.to_string(),
            pass: Some(ok),
        }
    }

    pub fn info(id: impl Into<String>, value: impl Display) -> Self {
        Self {
            id: id.into(),
            expected: String::new(),
            actual: value.to_string(),
            pass: None,
        }
    }

    pub fn failed(&self) -> bool {
        self.pass == Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub title: String,
    pub status: Status,
    pub items: Vec<Check>,
    pub timing_ms: u128,
}

impl Report {
    pub fn new(title: impl Into<String>, items: Vec<Check>, started: Instant) -> Self {
        let status = if items.iter().any(Check::failed) {
            Status::Fail
        } else if items.iter().any(|c| c.pass == Some(true)) {
            Status::Pass
        } else {
            Status::Info
        };
        Self {
            schema: SCHEMA.to_string(),
            title: title.into(),
            status,
            items,
            timing_ms: started.elapsed().as_millis(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: Self = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if r.schema != SCHEMA {
            return Err(Error::Parse(format!("unsupported schema {}", r.schema)));
        }
        Ok(r)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        };
        writeln!(f, "{tag} {} ({} ms)", self.title, self.timing_ms)?;
        for c in &self.items {
            let mark = match c.pass {
                Some(true) => "ok  ",
                Some(false) => "FAIL",
                None => "    ",
            };
            if c.expected.is_empty() {
                writeln!(f, "  {mark} {}: {}", c.id, c.actual)?;
            } else {
                writeln!(
                    f,
                    "  {mark} {}: expected {}, got {}",
                    c.id, c.expected, c.actual
                )?;
            }
        }
        Ok(())
    }
}
