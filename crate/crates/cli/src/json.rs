//! Report serialization. Objects are emitted with sorted keys and without
//! timings, so equal inputs give byte-identical reports.

use cubepar_core::relcube::FacePattern;
use cubepar_core::report::{Check, SuiteReport};
use cubepar_core::suites::SuiteConfig;
use cubepar_core::CubeCell;
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

pub fn config(cfg: &SuiteConfig) -> Value {
    json!({
        "p": cfg.p,
        "size": cfg.size,
        "include_empty": cfg.include_empty,
        "budget": cfg.budget.to_string(),
        "seed": cfg.seed,
    })
}

pub fn check(c: &Check) -> Value {
    json!({
        "name": c.name,
        "status": c.status.as_str(),
        "cases": c.cases,
        "failures": c.failures,
        "notes": c.notes,
        "witnesses": c.witnesses,
    })
}

pub fn suite(r: &SuiteReport) -> Value {
    json!({
        "suite": r.suite,
        "status": if r.passed() { "pass" } else { "fail" },
        "checks": r.checks.iter().map(check).collect::<Vec<_>>(),
    })
}

/// A cell as its vertex carriers and the tuples of every relational face.
pub fn cell(c: &CubeCell) -> Value {
    let relations: Vec<Value> = FacePattern::relational(c.level())
        .iter()
        .map(|u| json!({ "face": u.to_string(), "tuples": c.tuples_at(u) }))
        .collect();
    json!({
        "level": c.level(),
        "carriers": c.carriers(),
        "relations": relations,
    })
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
