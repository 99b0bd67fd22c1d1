use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use cubepar_core::report::{Check, Status};
use cubepar_core::semantics::{Model, SemError};
use cubepar_core::suites::{self, render, SuiteError};
use cubepar_core::syntax::{parse_term, parse_type, print_type, Judgment, Type};
use serde_json::{json, Value};

use crate::{json as js, Failure, Kind, Options};

pub fn input(text: Option<String>, file: Option<PathBuf>) -> Result<String, Failure> {
    match (text, file) {
        (Some(t), None) => Ok(t),
        (None, Some(path)) => fs::read_to_string(&path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        _ => Err(Failure::Usage("expected the input text or --file".into())),
    }
}

fn sem_failure(e: SemError) -> Failure {
    if e.is_budget() {
        Failure::Budget(e.to_string())
    } else {
        Failure::Usage(e.to_string())
    }
}

fn emit(path: &Option<PathBuf>, report: &Value) -> Result<(), Failure> {
    let Some(path) = path else { return Ok(()) };
    let text = js::render(report);
    if path == Path::new("-") {
        std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(e.to_string()))
    } else {
        fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn print_check(c: &Check, human: bool) {
    if !human {
        return;
    }
    let mark = match c.status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skip",
    };
    println!("  {mark}  {} ({} cases)", c.name, c.cases);
    for n in &c.notes {
        println!("          note: {n}");
    }
    for f in &c.failures {
        println!("          failure: {f}");
    }
}

pub fn check(name: &str, opts: &Options) -> Result<(), Failure> {
    let cfg = opts.suite_config();
    let names: Vec<&str> = if name == "all" {
        suites::SUITES.to_vec()
    } else if suites::SUITES.contains(&name) {
        vec![name]
    } else {
        return Err(Failure::Usage(format!(
            "unknown suite `{name}` (expected one of {}, all)",
            suites::SUITES.join(", ")
        )));
    };
    let human = opts.json.as_deref() != Some(Path::new("-"));
    let mut reports = Vec::new();
    let mut error = None;
    for s in names {
        let start = Instant::now();
        match suites::run(s, &cfg) {
            Ok(r) => {
                if human {
                    println!("suite {}: {}", r.suite, if r.passed() { "pass" } else { "FAIL" });
                }
                for c in &r.checks {
                    print_check(c, human);
                }
                eprintln!("suite {s} took {:.2?}", start.elapsed());
                reports.push(r);
            }
            Err(e) => {
                error = Some(e);
                break;
            }
        }
    }
    let passed = error.is_none() && reports.iter().all(|r| r.passed());
    let status = match (&error, passed) {
        (Some(SuiteError::Budget { .. }), _) => "budget",
        (Some(_), _) | (None, false) => "fail",
        (None, true) => "pass",
    };
    let mut report = json!({
        "schema": js::SCHEMA,
        "command": "check",
        "suite": name,
        "config": js::config(&cfg),
        "status": status,
        "suites": reports.iter().map(js::suite).collect::<Vec<_>>(),
    });
    if let Some(e) = &error {
        report["error"] = json!(e.to_string());
    }
    emit(&opts.json, &report)?;
    match error {
        Some(SuiteError::Budget { .. }) => Err(Failure::Budget(error.unwrap().to_string())),
        Some(e) => Err(Failure::Usage(e.to_string())),
        None if passed => Ok(()),
        None => Err(Failure::Checks),
    }
}

fn closed_type(text: &str) -> Result<Type, Failure> {
    parse_type(text).map_err(|e| Failure::Usage(format!("parse error: {e}")))
}

pub fn freethm(text: &str, opts: &Options) -> Result<(), Failure> {
    let cfg = opts.suite_config();
    let t = closed_type(text)?;
    let model = Model::new(cfg.model_config());
    let elements = suites::elements(&model, &t).map_err(sem_failure)?;
    let report = json!({
        "schema": js::SCHEMA,
        "command": "freethm",
        "type": print_type(&t),
        "config": js::config(&cfg),
        "cardinality": elements.len(),
        "elements": elements,
    });
    if opts.json.as_deref() != Some(Path::new("-")) {
        let noun = if elements.len() == 1 { "element" } else { "elements" };
        println!("{}: {} {noun}", print_type(&t), elements.len());
        for e in &elements {
            println!("  {e}");
        }
    }
    emit(&opts.json, &report)
}

fn type_dump(model: &Model, t: &Type) -> Result<Value, SemError> {
    let f = model.interp_type(t, 0)?;
    let mut levels = Vec::new();
    for l in 0..=model.p() {
        let c = model.eval(f, l, &[])?;
        levels.push(js::cell(&model.cell(c)));
    }
    Ok(json!(levels))
}

pub fn interp(text: &str, kind: Kind, opts: &Options) -> Result<(), Failure> {
    let cfg = opts.suite_config();
    let model = Model::new(cfg.model_config());
    let as_type = match kind {
        Kind::Type => Some(closed_type(text)?),
        Kind::Term => None,
        Kind::Auto => parse_type(text).ok(),
    };
    let report = match as_type {
        Some(t) => json!({
            "schema": js::SCHEMA,
            "command": "interp",
            "kind": "type",
            "input": print_type(&t),
            "config": js::config(&cfg),
            "cells": type_dump(&model, &t).map_err(sem_failure)?,
        }),
        None => {
            let term = parse_term(text).map_err(|e| Failure::Usage(format!("parse error: {e}")))?;
            let j = Judgment::closed(term).map_err(|e| Failure::Usage(format!("type error: {e}")))?;
            let nt = model.interp_term(&j).map_err(sem_failure)?;
            let value = nt.value(&model, &[]).map_err(sem_failure)?;
            json!({
                "schema": js::SCHEMA,
                "command": "interp",
                "kind": "term",
                "input": text,
                "type": print_type(&j.ty),
                "config": js::config(&cfg),
                "value": value,
                "rendered": render(&model, nt.target, &[], value).map_err(sem_failure)?,
                "cells": type_dump(&model, &j.ty).map_err(sem_failure)?,
            })
        }
    };
    match &opts.json {
        Some(_) => emit(&opts.json, &report),
        None => {
            print!("{}", js::render(&report));
            Ok(())
        }
    }
}
