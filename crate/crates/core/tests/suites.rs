use cubepar_core::suites::{run, run_all, SuiteConfig, SuiteError, SUITES};

fn small() -> SuiteConfig {
    SuiteConfig {
        p: 1,
        size: 1,
        ..SuiteConfig::default()
    }
}

#[test]
fn every_suite_passes_at_size_one() {
    let reports = run_all(&small()).unwrap();
    assert_eq!(reports.len(), SUITES.len());
    for r in &reports {
        let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed()).map(|c| &c.name).collect();
        assert!(failed.is_empty(), "{}: {failed:?}", r.suite);
        assert!(!r.checks.is_empty());
    }
}

#[test]
fn expected_counts_only_at_the_frozen_configuration() {
    let r = run("lambda2", &small()).unwrap();
    let c = r.get("free theorem count: forall X. X -> X -> X").unwrap();
    assert!(c.notes.iter().any(|n| n.contains("no expected count")));
    assert_eq!(c.witnesses, vec!["1 elements".to_string()]);
}

#[test]
fn unknown_suites_and_budgets() {
    assert!(matches!(run("nope", &small()), Err(SuiteError::Unknown(_))));
    let tight = SuiteConfig {
        budget: 10,
        ..SuiteConfig::default()
    };
    assert!(matches!(run("lambda2", &tight), Err(SuiteError::Budget { .. })));
}

#[test]
fn suites_are_deterministic() {
    let cfg = SuiteConfig {
        seed: 7,
        ..small()
    };
    assert_eq!(run("stability", &cfg).unwrap(), run("stability", &cfg).unwrap());
}
