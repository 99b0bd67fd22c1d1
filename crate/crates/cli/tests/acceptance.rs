//! One line per acceptance criterion, each with its time limit.

mod support;

use std::time::{Duration, Instant};

use cubepar_core::cube::check_presentation;
use cubepar_core::report::{Check, Status, SuiteReport};
use cubepar_core::semantics::{Config, Model};
use cubepar_core::suites::{corpus, elements, run, SuiteConfig};
use cubepar_core::syntax::{beta_eta_equal, parse_term_in, parse_type};
use support::reynolds::{arrow, count, Simple::*};

struct Outcome {
    ok: bool,
    detail: String,
}

fn suite(name: &str, cfg: SuiteConfig) -> SuiteReport {
    run(name, &cfg).unwrap_or_else(|e| panic!("{e}"))
}

fn at(p: usize, size: u32) -> SuiteConfig {
    SuiteConfig {
        p,
        size,
        ..SuiteConfig::default()
    }
}

/// Checks whose names start with one of `prefixes` all pass, and there is
/// at least one of each.
fn named(report: &SuiteReport, prefixes: &[&str]) -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for p in prefixes {
        let hits: Vec<&Check> = report.checks.iter().filter(|c| c.name.starts_with(p)).collect();
        let passed = !hits.is_empty() && hits.iter().all(|c| c.status != Status::Fail);
        ok &= passed;
        if !passed {
            detail.push(format!("`{p}` failed or missing"));
        }
    }
    Outcome {
        ok,
        detail: detail.join("; "),
    }
}

fn all_pass(report: &SuiteReport) -> Outcome {
    let failed: Vec<String> = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| c.name.clone())
        .collect();
    Outcome {
        ok: failed.is_empty(),
        detail: failed.join("; "),
    }
}

fn criterion_1() -> Outcome {
    let mut ok = true;
    for p in 1..=4 {
        let r = check_presentation(p, 4);
        ok &= r.holds() && r.total() > 0;
    }
    Outcome { ok, detail: String::new() }
}

fn criterion_2() -> Outcome {
    named(&suite("cube", at(3, 2)), &["canonical factorization in box_1", "canonical factorization in box_2", "canonical factorization in box_3"])
}

fn criterion_3() -> Outcome {
    let r = suite("stability", at(2, 2));
    let mut o = all_pass(&r);
    o.ok &= r.checks.len() >= 7;
    o
}

fn criterion_4() -> Outcome {
    let laws = [
        "reindexing is split functorial",
        "generic object classifies every functor",
        "fibers are cartesian closed",
        "forall is right adjoint to weakening",
        "simple products are split",
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    // N = 0 cannot instantiate at Unit, so the universe starts at N = 1
    for size in 1..=2 {
        let o = named(&suite("lambda2", at(1, size)), &laws);
        ok &= o.ok;
        if !o.ok {
            detail.push(format!("N = {size}: {}", o.detail));
        }
    }
    Outcome {
        ok,
        detail: detail.join("; "),
    }
}

fn criterion_5() -> Outcome {
    // the suite adds the p = 2, N = 1 pass itself
    let r = suite("iel", at(1, 2));
    let mut o = all_pass(&r);
    let closed = r
        .checks
        .iter()
        .filter(|c| corpus::CLOSED_TYPES.iter().any(|t| c.name == format!("identity extension: {t}")))
        .count();
    o.ok &= closed >= 10 && r.checks.iter().all(|c| c.notes.iter().any(|n| n == "[p=2, N=1]"));
    o
}

fn criterion_6() -> Outcome {
    let model = Model::new(Config::new(1, 2, true, 10_000_000));
    let oracle = [
        ("forall X. X -> X", count(&arrow(X, X), 0, 2), 1),
        ("forall X. X -> X -> X", count(&arrow(X, arrow(X, X)), 0, 2), 2),
        ("forall X. (X -> X) -> X", count(&arrow(arrow(X, X), X), 0, 2), 0),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (text, independent, frozen) in oracle {
        let n = elements(&model, &parse_type(text).unwrap()).unwrap().len();
        if n != independent || n != frozen {
            ok = false;
            detail.push(format!("{text}: model {n}, oracle {independent}, frozen {frozen}"));
        }
    }
    let o = named(&suite("lambda2", at(1, 2)), &["free theorem count"]);
    Outcome {
        ok: ok && o.ok,
        detail: detail.join("; ") + &o.detail,
    }
}

fn criterion_7() -> Outcome {
    let mut syntactic = true;
    for (tys, terms, s, t) in corpus::BETA_ETA {
        let names: Vec<&str> = terms.iter().map(|(n, _)| *n).collect();
        let a = parse_term_in(s, tys, &names).unwrap();
        let b = parse_term_in(t, tys, &names).unwrap();
        syntactic &= beta_eta_equal(&a, &b);
    }
    let mut o = named(&suite("lambda2", at(1, 2)), &["beta-eta equal terms denote equal tables"]);
    o.ok &= syntactic && corpus::BETA_ETA.len() >= 10;
    o
}

fn criterion_8() -> Outcome {
    let mut o = named(&suite("lambda2", at(1, 2)), &["substitution lemma"]);
    o.ok &= corpus::SUBSTITUTIONS.len() >= 10;
    o
}

fn criterion_9() -> Outcome {
    // adds the p = 2, N = 1 pass for level 1
    let r = suite("graph", at(1, 2));
    let mut o = named(
        &r,
        &[
            "graph agrees with the opcartesian description",
            "graph agrees with the opcartesian description [p=2, N=1]",
            "graph lemma:",
        ],
    );
    let fail = all_pass(&r);
    o.ok &= fail.ok;
    let skipped: Vec<&str> = r
        .checks
        .iter()
        .filter(|c| c.status == Status::Skipped)
        .map(|c| c.name.as_str())
        .collect();
    if !skipped.is_empty() {
        o.detail = format!("{}skipped (no morphism action): {}", o.detail, skipped.join(", "));
    }
    o
}

fn criterion_10() -> Outcome {
    let r = suite("algebra", at(1, 2));
    let mut o = all_pass(&r);
    let oracle = [
        ("Unit", count(&arrow(arrow(Base(1), X), X), 0, 2)),
        ("Church Bool", count(&arrow(arrow(Base(2), X), X), 0, 2)),
        ("X", count(&arrow(arrow(X, X), X), 0, 2)),
    ];
    for (name, z) in oracle {
        let witness = format!("|Z| = {z}");
        let found = r.get(&format!("initial carrier size: {name}"));
        if !found.is_some_and(|c| c.witnesses.contains(&witness)) {
            o.ok = false;
            o.detail.push_str(&format!("{name}: oracle expects {witness}; "));
        }
    }
    for name in ["Unit", "Church Bool", "X"] {
        for prefix in [
            "initial carrier size",
            "in is an algebra",
            "fold is an algebra morphism",
            "fold is unique among all morphisms",
            "fold is unique among parametric morphisms",
            "final carrier size",
            "unfold is unique among all morphisms",
        ] {
            let full = format!("{prefix}: {name}");
            o.ok &= r.get(&full).is_some_and(|c| c.status == Status::Pass);
        }
    }
    o
}

fn criterion_11() -> Outcome {
    let mut o = named(
        &suite("lambda2", at(1, 2)),
        &["interpreted terms are natural and preserve faces", "interpreted types commute with faces"],
    );
    o.ok &= corpus::TERMS.len() >= 10;
    o
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, u64);
    let criteria: [Criterion; 11] = [
        ("presentation of the cube categories", criterion_1, 1),
        ("unique canonical factorization", criterion_2, 10),
        ("stability of the cartesian closed structure", criterion_3, 60),
        ("split lambda2 laws", criterion_4, 120),
        ("identity extension", criterion_5, 120),
        ("free theorem counts", criterion_6, 30),
        ("beta-eta soundness", criterion_7, 30),
        ("substitution lemma", criterion_8, 60),
        ("graph lemma", criterion_9, 120),
        ("initial algebras and final coalgebras", criterion_10, 300),
        ("naturality and face preservation of terms", criterion_11, 60),
    ];
    let mut failed = Vec::new();
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let took = start.elapsed();
        let ok = o.ok && took <= Duration::from_secs(*limit);
        println!(
            "criterion {:>2} {}: {} in {:.2?} (limit {limit} s){}",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            took,
            if o.detail.is_empty() { String::new() } else { format!(" [{}]", o.detail) }
        );
        if !ok {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
