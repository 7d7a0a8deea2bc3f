//! Verification items and reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Resource,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Resource => "RESOURCE",
        }
    }
}

/// Result of one check: what was claimed, whether it held, and data that
/// lets a reader confirm it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Item {
    pub id: String,
    /// The mathematical statement being checked.
    pub anchor: String,
    pub status: Status,
    pub detail: String,
    pub witness: Value,
    pub wall_ms: u64,
}

/// What a check returns before timing and error mapping are applied.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub detail: String,
    pub witness: Value,
}

impl Outcome {
    pub fn new(status: Status, detail: impl Into<String>, witness: Value) -> Outcome {
        Outcome { status, detail: detail.into(), witness }
    }

    pub fn check(ok: bool, detail: impl Into<String>, witness: Value) -> Outcome {
        Outcome::new(Status::from_bool(ok), detail, witness)
    }

    pub fn skip(detail: impl Into<String>) -> Outcome {
        Outcome::new(Status::Skip, detail, Value::Null)
    }
}

/// Runs `f`, timing it. Resource errors become `RESOURCE`, other errors `FAIL`.
pub fn run_item(id: impl Into<String>, anchor: impl Into<String>, f: impl FnOnce() -> Result<Outcome>) -> Item {
    let start = Instant::now();
    let out = match f() {
        Ok(o) => o,
        Err(e @ (Error::ResourceLimit(_) | Error::BoundExceeded(_))) => Outcome::new(Status::Resource, e.to_string(), Value::Null),
        Err(e) => Outcome::new(Status::Fail, format!("error: {e}"), Value::Null),
    };
    Item { id: id.into(), anchor: anchor.into(), status: out.status, detail: out.detail, witness: out.witness, wall_ms: start.elapsed().as_millis() as u64 }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub case: String,
    pub tool_version: String,
    pub config: Value,
    pub items: Vec<Item>,
}

impl Report {
    pub fn new(case: &str, config: Value) -> Report {
        Report { case: case.into(), tool_version: env!("CARGO_PKG_VERSION").into(), config, items: Vec::new() }
    }

    pub fn push(&mut self, item: Item) {
        self.items.push(item);
    }

    pub fn extend(&mut self, items: impl IntoIterator<Item = Item>) {
        self.items.extend(items);
    }

    pub fn item(&self, id: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn count(&self, s: Status) -> usize {
        self.items.iter().filter(|i| i.status == s).count()
    }

    /// 0 when nothing failed, 2 when something ran out of resources, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Fail) > 0 {
            1
        } else if self.count(Status::Resource) > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per item.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for i in &self.items {
            s.push_str(&format!("{:<8} {}  ({} ms)  {}\n", i.status.name(), i.id, i.wall_ms, i.detail));
        }
        s.push_str(&format!(
            "{}: {} pass, {} fail, {} skip, {} resource\n",
            self.case,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip),
            self.count(Status::Resource)
        ));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_statuses() {
        let a = run_item("a", "x", || Err(Error::ResourceLimit("pairs".into())));
        assert_eq!(a.status, Status::Resource);
        let b = run_item("b", "x", || Err(Error::UnitIdeal));
        assert_eq!(b.status, Status::Fail);
        let mut r = Report::new("t", Value::Null);
        r.push(a);
        assert_eq!(r.exit_code(), 2);
        r.push(b);
        assert_eq!(r.exit_code(), 1);
        let j = r.to_json();
        assert!(j.find("\"case\"").unwrap() < j.find("\"items\"").unwrap());
        assert!(j.contains("\"RESOURCE\""));
    }
}
