//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the verdicts always print; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use iterlog::expansions::{method1_log_with, StirlingTables};
use iterlog::identities::{
    check_automorphism, check_classical_first_kind, check_classical_second_kind, check_factorization,
    check_general_products, check_methods_equal, check_oracle_agreement, check_parameter_recurrences,
    check_recursion, check_stirling_agreement, check_tableau_bridge, check_taylor, first_series_difference,
    IdentityReport, StirlingSource,
};
use iterlog::stirling::{Definition, StirlingKind};
use num_bigint::BigInt;
use serde_json::json;

const KINDS: [StirlingKind; 2] = [StirlingKind::First, StirlingKind::Second];

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: &[IdentityReport]) -> Outcome {
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    Outcome {
        ok: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} sweep{}", reports.len(), if reports.len() == 1 { "" } else { "s" })
        } else {
            failed.join("; ")
        },
    }
}

fn within(limit: Duration, elapsed: Duration, mut o: Outcome) -> Outcome {
    if elapsed > limit {
        o.ok = false;
        o.detail = format!("{}; took {elapsed:.2?}, limit {limit:?}", o.detail);
    }
    o
}

fn stirling_four_way() -> Outcome {
    let source = StirlingSource::build(12);
    from_reports(&KINDS.map(|k| check_stirling_agreement(k, &source, 12)))
}

fn automorphism() -> Outcome {
    from_reports(&[check_automorphism(100, 6, 20240601)])
}

fn taylor() -> Outcome {
    from_reports(&[check_taylor(3, 8)])
}

fn tableau_bridge() -> Outcome {
    let source = StirlingSource::build(8);
    from_reports(&KINDS.map(|k| check_tableau_bridge(k, &source, 8)))
}

fn factorization() -> Outcome {
    from_reports(&KINDS.map(|k| check_factorization(k, 8)))
}

fn closed_forms() -> Outcome {
    let tables = StirlingTables::build(6);
    let levels = [-3, -2, -1, 0, 1, 2, 3];
    let reports: Vec<IdentityReport> = (0..=6).map(|m| check_oracle_agreement(&levels, m, &tables)).collect();
    from_reports(&reports)
}

fn recursion() -> Outcome {
    let reports: Vec<IdentityReport> = (0..=6).map(|m| check_recursion(&[-2, -1, 0, 1, 2], m)).collect();
    from_reports(&reports)
}

fn parameter_recurrences() -> Outcome {
    from_reports(&[check_parameter_recurrences(&StirlingSource::build(10), 10)])
}

fn classical_and_methods() -> Outcome {
    let source = StirlingSource::build(10);
    from_reports(&[
        check_classical_first_kind(&source, 10),
        check_classical_second_kind(&source, 10),
        check_methods_equal(&[-3, -2, -1, 0, 1, 2, 3], 6, &StirlingTables::build(6)),
    ])
}

fn general_products() -> Outcome {
    from_reports(&[check_general_products(20, 2, 5, 20240601)])
}

/// Corrupts `S_1(5, 2)` in the explicit table and demands that the four-way
/// and classical sweeps report exactly `(5, 2)` and that the methods sweep
/// reports the smallest differing `(level, y-power, monomial)`.
fn negative_control() -> Outcome {
    let (m, n) = (5, 2);
    let mut source = StirlingSource::build(12);
    let bumped = source.table(StirlingKind::First, Definition::Explicit).get(m, n) + BigInt::from(1);
    source.corrupt(StirlingKind::First, Definition::Explicit, m, n, bumped);
    let clean = StirlingTables::build(6);
    let dirty = source.expansion_tables();
    let levels = [-3, -2, -1, 0, 1, 2, 3];

    let four = check_stirling_agreement(StirlingKind::First, &source, 12);
    let classical = check_classical_first_kind(&source, 10);
    let methods = check_methods_equal(&levels, 6, &dirty);

    // brute-force minimum: first level, y-power and monomial where the
    // corrupted method differs from the clean one
    let expected = levels.iter().filter(|&&l| l >= 0).find_map(|&l| {
        let a = method1_log_with(l, 6, &dirty).unwrap();
        let b = method1_log_with(l, 6, &clean).unwrap();
        first_series_difference(&a, &b).map(|(k, mono)| vec![json!(l), json!(k), json!(mono.to_string())])
    });

    let minimal = vec![json!(m), json!(n)];
    let checks = [
        ("four-way", !four.passed() && four.counterexample.as_ref() == Some(&minimal)),
        ("classical", !classical.passed() && classical.counterexample.as_ref() == Some(&minimal)),
        ("methods", !methods.passed() && expected.is_some() && methods.counterexample == expected),
    ];
    let missed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
    Outcome {
        ok: missed.is_empty(),
        detail: if missed.is_empty() {
            format!("{four}; {classical}; {methods}")
        } else {
            format!("not detected minimally by {}", missed.join(", "))
        },
    }
}

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

const CRITERIA: [Criterion; 11] = [
    ("stirling four-way agreement, m <= 12", Some(Duration::from_secs(10)), stirling_four_way),
    ("automorphism, 100 pairs, order 6", Some(Duration::from_secs(30)), automorphism),
    ("taylor identity, |n| <= 3, k <= 8", None, taylor),
    ("tableau bridge, m <= 8", None, tableau_bridge),
    ("factorization, total <= 8", None, factorization),
    ("closed forms vs oracle, N <= 3, M <= 6", Some(Duration::from_secs(120)), closed_forms),
    ("recursion up, down and inverse, n in -2..=2, M <= 6", None, recursion),
    ("parameter recurrences, m <= 10", None, parameter_recurrences),
    ("classical identities, m <= 10; methods equal, levels -3..=3, M = 6", None, classical_and_methods),
    ("general products, 20 tuples, N <= 2, m <= 5", None, general_products),
    ("negative control, corrupted S1(5,2)", None, negative_control),
];

fn main() -> ExitCode {
    let mut failures = 0;
    for (i, (name, limit, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match limit {
            Some(l) => within(*l, elapsed, outcome),
            None => outcome,
        };
        let verdict = if outcome.ok { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {:>2}: {name} ({elapsed:.2?}) {}", i + 1, outcome.detail);
        if !outcome.ok {
            failures += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
