//! The acceptance gate: ten exact criteria, printed one pass/fail line
//! each. Everything is exact rational or integer equality; the only
//! tolerance anywhere is the wall-clock budget of criterion 1.

use std::time::{Duration, Instant};

use cob1::bordism::Bordism;
use cob1::chain::Chain;
use cob1::cocycle::gamma;
use cob1::cyclic_sign::CyclicConfiguration;
use cob1::rational;
use harness::{run_suite, Params};
use serde_json::json;

const SEED: u64 = 0;

/// Runs each named suite for the given trial count and reports whether
/// every one finished with zero failures.
fn suites_pass(list: &[(&str, u64)]) -> bool {
    let params = Params::default();
    list.iter().all(|&(name, trials)| {
        let report = run_suite(name, &params, SEED, trials).expect("known suite");
        if !report.passed() {
            for failure in &report.failures {
                eprintln!(
                    "  {name} trial {}: {} != {}\n    {}",
                    failure.trial, failure.lhs, failure.rhs, failure.counterexample
                );
            }
        }
        report.passed()
    })
}

fn u_turn() -> Bordism {
    serde_json::from_value(json!({
        "source": [1, -1], "target": [1, -1],
        "arcs": [[["src", 0], ["src", 1]], [["tgt", 1], ["tgt", 0]]],
        "circles": 0
    }))
    .unwrap()
}

fn cap() -> Bordism {
    serde_json::from_value(json!({
        "source": [], "target": [1, -1],
        "arcs": [[["tgt", 1], ["tgt", 0]]], "circles": 0
    }))
    .unwrap()
}

fn cup() -> Bordism {
    serde_json::from_value(json!({
        "source": [1, -1], "target": [],
        "arcs": [[["src", 0], ["src", 1]]], "circles": 0
    }))
    .unwrap()
}

/// The 4-chain whose single circle realizes the configuration
/// (0,0,1,2,2,1) with reduced sign -1/4, so gamma_1 = 1/8.
fn gamma1_fixture_chain() -> Chain {
    serde_json::from_value(json!({
        "objects": [[], [-1, 1, 1, -1], [1, -1, 1, -1], [1, -1, 1, -1], []],
        "morphisms": [
            {"source": [], "target": [-1, 1, 1, -1],
             "arcs": [[["tgt", 0], ["tgt", 2]], [["tgt", 3], ["tgt", 1]]],
             "circles": 0},
            {"source": [-1, 1, 1, -1], "target": [1, -1, 1, -1],
             "arcs": [[["src", 1], ["tgt", 0]], [["src", 2], ["src", 3]],
                      [["tgt", 1], ["src", 0]], [["tgt", 3], ["tgt", 2]]],
             "circles": 0},
            {"source": [1, -1, 1, -1], "target": [1, -1, 1, -1],
             "arcs": [[["src", 0], ["tgt", 0]], [["src", 2], ["src", 1]],
                      [["tgt", 1], ["tgt", 2]], [["tgt", 3], ["src", 3]]],
             "circles": 0},
            {"source": [1, -1, 1, -1], "target": [],
             "arcs": [[["src", 0], ["src", 1]], [["src", 2], ["src", 3]]],
             "circles": 0}
        ]
    }))
    .unwrap()
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    let mut check = |n: usize, description: &str, ok: bool| {
        println!("criterion {n:>2}: {}  {description}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(n);
        }
    };

    // 1. Cocycle coboundaries vanish exactly, within the time budget.
    let start = Instant::now();
    let cocycles_ok = suites_pass(&[
        ("sign-cocycle", 500),
        ("reduced-sign-cocycle", 500),
        ("alpha-cocycle", 500),
        ("gamma-cocycle-k0", 500),
        ("gamma-cocycle-k1", 500),
        ("gamma-cocycle-k2", 100),
    ]);
    let elapsed = start.elapsed();
    check(
        1,
        "cocycle suites exact zero (delta of averaged/reduced sign, alpha, gamma_0..2) under 60 s",
        cocycles_ok && elapsed < Duration::from_secs(60),
    );

    // 2. gamma_0 agrees with alpha.
    check(2, "gamma_0 = alpha on 500 reduced 2-chains", suites_pass(&[("gamma0-eq-alpha", 500)]));

    // 3. delta(beta_hat) = -alpha after reduction.
    check(3, "delta(beta_hat) + alpha(R(x)) = 0 on 500 2-chains", suites_pass(&[("beta-relation", 500)]));

    // 4. Exact fixture values.
    let config = CyclicConfiguration::new(vec![0, 1, 0, 2, 1, 2]).unwrap();
    let uu = u_turn().compose(&u_turn()).unwrap();
    let circle = cap().compose(&cup()).unwrap();
    let fixtures_ok = config.reduced_sign().unwrap() == rational(-1, 4)
        && config.averaged_sign().unwrap() == rational(0, 1)
        && gamma(1, &gamma1_fixture_chain()).unwrap() == rational(1, 8)
        && uu.circles() == 1
        && circle.circles() == 1;
    check(4, "fixtures: reduced sign -1/4, averaged sign 0, gamma_1 = 1/8, one circle per loop", fixtures_ok);

    // 5. Dropping either point of the unique neighboured pair flips the
    // sign by (-1)^(j-i-1).
    check(5, "unique-neighbour drop relation on 500 instances", suites_pass(&[("unique-neighbour", 500)]));

    // 6. The cyclic category: laws, the functor to bordisms, membership.
    let lambda_ok = suites_pass(&[
        ("lambda-laws", 500),
        ("H-functorial", 500),
        ("H-roundtrip", 500),
        ("F1-membership", 500),
    ]);
    check(6, "cyclic category laws, functoriality, round trip, membership", lambda_ok);

    // 7. The Chern comparison, normalized and unnormalized.
    let chern_ok = suites_pass(&[("chern-compare-k1", 200), ("chern-compare-k2", 50)]);
    check(7, "igusa cocycle = c_k * reduced sign of the pulled-back configuration", chern_ok);

    // 8. Additivity and invariances.
    let invariance_ok = suites_pass(&[
        ("additivity", 300),
        ("relabel-invariance", 300),
        ("conjugation-invariance", 300),
    ]);
    check(8, "additivity, relabel invariance, conjugation invariance", invariance_ok);

    // 9. Structural suites.
    let structural_ok = suites_pass(&[
        ("assoc", 500),
        ("units", 500),
        ("reduce-functor", 500),
        ("circle-accounting", 500),
        ("interchange", 500),
        ("simplicial-ids", 500),
        ("degenerate-vanishing", 500),
    ]);
    check(9, "structural suites: composition, circles, simplicial identities, normalization", structural_ok);

    // 10. Byte-identical reports for identical (seed, trials).
    let params = Params::default();
    let first = run_suite("gamma-cocycle-k1", &params, 7, 100).unwrap();
    let second = run_suite("gamma-cocycle-k1", &params, 7, 100).unwrap();
    let identical = serde_json::to_vec(&first).unwrap() == serde_json::to_vec(&second).unwrap();
    check(10, "two runs with identical (seed, trials) give byte-identical JSON reports", identical);

    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
