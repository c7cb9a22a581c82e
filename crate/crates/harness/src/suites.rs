//! The verification suites: one randomized identity check per trial.

use cob1::bordism::Bordism;
use cob1::chain::{Chain, FaceMode};
use cob1::cocycle::{alpha, beta_hat, circle_config, coboundary, gamma, kappa_coefficient};
use cob1::cyclic::{
    factorization_chain, from_bordism, igusa_cocycle, igusa_distinct_sum, lambda_to_u,
    to_bordism, v_bordism, w_bordism, CyclicMap,
};
use cob1::cyclic_sign::{no_neighbour_sign_sum, sign_tuple};
use cob1::{rational, Rational};
use num::Zero;
use rand::prelude::*;
use serde_json::json;

use crate::gen::{
    gen_bordism, gen_chain, gen_config, gen_cyclic_map_between, gen_injective_chain,
    gen_injective_map, gen_object, Rng,
};
use crate::report::Failure;

/// Knobs shared by the generators of every suite.
#[derive(Debug, Clone, Copy)]
pub struct Params {
    pub max_points: usize,
    /// Restricts suites that sample a cocycle degree to this `k`.
    pub k: Option<usize>,
}

impl Default for Params {
    fn default() -> Self {
        Params { max_points: 8, k: None }
    }
}

impl Params {
    fn pick_k(&self, rng: &mut Rng, lo: usize, hi: usize) -> usize {
        match self.k {
            Some(k) => k.clamp(lo, hi),
            None => rng.random_range(lo..=hi),
        }
    }
}

/// All suite names, as accepted by `verify`.
pub const SUITE_NAMES: [&str; 25] = [
    "assoc",
    "units",
    "reduce-functor",
    "circle-accounting",
    "interchange",
    "simplicial-ids",
    "sign-cocycle",
    "reduced-sign-cocycle",
    "unique-neighbour",
    "alpha-cocycle",
    "beta-relation",
    "gamma-cocycle-k0",
    "gamma-cocycle-k1",
    "gamma-cocycle-k2",
    "gamma0-eq-alpha",
    "additivity",
    "relabel-invariance",
    "degenerate-vanishing",
    "lambda-laws",
    "H-functorial",
    "H-roundtrip",
    "F1-membership",
    "chern-compare-k1",
    "chern-compare-k2",
    "conjugation-invariance",
];

/// The default trial count of a suite, sized so the whole battery stays
/// fast while exceeding every per-identity minimum.
pub fn default_trials(suite: &str) -> u64 {
    match suite {
        "gamma-cocycle-k2" => 100,
        "chern-compare-k1" => 200,
        "chern-compare-k2" => 50,
        "additivity" | "relabel-invariance" | "conjugation-invariance" => 300,
        _ => 500,
    }
}

type Check = Result<(), Failure>;

fn expect_eq<T: PartialEq + std::fmt::Display>(
    trial: u64,
    counterexample: serde_json::Value,
    lhs: T,
    rhs: T,
) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Failure { trial, counterexample, lhs: lhs.to_string(), rhs: rhs.to_string() })
    }
}

fn expect_eq_dbg<T: PartialEq + std::fmt::Debug>(
    trial: u64,
    counterexample: serde_json::Value,
    lhs: T,
    rhs: T,
) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Failure {
            trial,
            counterexample,
            lhs: format!("{lhs:?}"),
            rhs: format!("{rhs:?}"),
        })
    }
}

fn internal(trial: u64, counterexample: serde_json::Value, message: String) -> Failure {
    Failure { trial, counterexample, lhs: message, rhs: "no error".into() }
}

/// Runs one trial of `suite`; `Ok(None)` means the identity held.
pub fn run_trial(
    suite: &str,
    params: &Params,
    trial: u64,
    rng: &mut Rng,
) -> Result<Option<Failure>, String> {
    let outcome = match suite {
        "assoc" => assoc(params, trial, rng),
        "units" => units(params, trial, rng),
        "reduce-functor" => reduce_functor(params, trial, rng),
        "circle-accounting" => circle_accounting(params, trial, rng),
        "interchange" => interchange(params, trial, rng),
        "simplicial-ids" => simplicial_ids(params, trial, rng),
        "sign-cocycle" => sign_cocycle(params, trial, rng),
        "reduced-sign-cocycle" => reduced_sign_cocycle(params, trial, rng),
        "unique-neighbour" => unique_neighbour(params, trial, rng),
        "alpha-cocycle" => alpha_cocycle(params, trial, rng),
        "beta-relation" => beta_relation(params, trial, rng),
        "gamma-cocycle-k0" => gamma_cocycle(params, trial, rng, 0),
        "gamma-cocycle-k1" => gamma_cocycle(params, trial, rng, 1),
        "gamma-cocycle-k2" => gamma_cocycle(params, trial, rng, 2),
        "gamma0-eq-alpha" => gamma0_eq_alpha(params, trial, rng),
        "additivity" => additivity(params, trial, rng),
        "relabel-invariance" => relabel_invariance(params, trial, rng),
        "degenerate-vanishing" => degenerate_vanishing(params, trial, rng),
        "lambda-laws" => lambda_laws(params, trial, rng),
        "H-functorial" => h_functorial(params, trial, rng),
        "H-roundtrip" => h_roundtrip(params, trial, rng),
        "F1-membership" => f1_membership(params, trial, rng),
        "chern-compare-k1" => chern_compare(params, trial, rng, 1),
        "chern-compare-k2" => chern_compare(params, trial, rng, 2),
        "conjugation-invariance" => conjugation_invariance(params, trial, rng),
        other => return Err(format!("unknown suite {other:?}")),
    };
    Ok(outcome.err())
}

fn composable_pair(params: &Params, rng: &mut Rng) -> (Bordism, Bordism) {
    let degree = rng.random_range(-2..=2);
    let a = gen_object(rng, degree, params.max_points);
    let b = gen_object(rng, degree, params.max_points);
    let c = gen_object(rng, degree, params.max_points);
    let f = gen_bordism(rng, &a, &b, false);
    let g = gen_bordism(rng, &b, &c, false);
    (f, g)
}

fn assoc(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let degree = rng.random_range(-2..=2);
    let objects: Vec<_> =
        (0..4).map(|_| gen_object(rng, degree, params.max_points)).collect();
    let f = gen_bordism(rng, &objects[0], &objects[1], false);
    let g = gen_bordism(rng, &objects[1], &objects[2], false);
    let h = gen_bordism(rng, &objects[2], &objects[3], false);
    let ce = json!({"f": f, "g": g, "h": h});
    let lhs = f.compose(&g).and_then(|fg| fg.compose(&h));
    let rhs = g.compose(&h).and_then(|gh| f.compose(&gh));
    expect_eq_dbg(trial, ce, lhs, rhs)
}

fn units(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let degree = rng.random_range(-2..=2);
    let a = gen_object(rng, degree, params.max_points);
    let b = gen_object(rng, degree, params.max_points);
    let f = gen_bordism(rng, &a, &b, false);
    let ce = json!({"f": f});
    let left = Bordism::identity(&a)
        .compose(&f)
        .map_err(|e| internal(trial, ce.clone(), e.to_string()))?;
    expect_eq_dbg(trial, ce.clone(), left, f.clone())?;
    let right =
        f.compose(&Bordism::identity(&b)).map_err(|e| internal(trial, ce.clone(), e.to_string()))?;
    expect_eq_dbg(trial, ce, right, f)
}

fn reduce_functor(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let (f, g) = composable_pair(params, rng);
    let ce = json!({"f": f, "g": g});
    let full = f.compose(&g).map_err(|e| internal(trial, ce.clone(), e.to_string()))?;
    let reduced = f
        .reduce()
        .compose_reduced(&g.reduce())
        .map_err(|e| internal(trial, ce.clone(), e.to_string()))?;
    expect_eq_dbg(trial, ce, full.reduce(), reduced)
}

fn circle_accounting(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let (f, g) = composable_pair(params, rng);
    let ce = json!({"f": f, "g": g});
    let composite = f.compose(&g).map_err(|e| internal(trial, ce.clone(), e.to_string()))?;
    let created = Chain::from_morphisms(vec![f.clone(), g.clone()])
        .map_err(|e| internal(trial, ce.clone(), e.to_string()))?
        .trace()
        .circles
        .len();
    expect_eq(trial, ce, composite.circles(), f.circles() + g.circles() + created)
}

fn interchange(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let (f, g) = composable_pair(params, rng);
    let (h, i) = composable_pair(params, rng);
    let ce = json!({"f": f, "g": g, "h": h, "i": i});
    let lhs = f
        .disjoint_union(&h)
        .compose(&g.disjoint_union(&i))
        .map_err(|e| internal(trial, ce.clone(), e.to_string()))?;
    let rhs = f
        .compose(&g)
        .and_then(|fg| Ok(fg.disjoint_union(&h.compose(&i)?)))
        .map_err(|e| internal(trial, ce.clone(), e.to_string()))?;
    expect_eq_dbg(trial, ce, lhs, rhs)
}

fn simplicial_ids(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    // Nerve identities on a random 4-chain.
    let reduced = rng.random();
    let chain = gen_chain(rng, 4, 0, 0, params.max_points, reduced);
    let mode = if rng.random() { FaceMode::Full } else { FaceMode::Reduced };
    let i = rng.random_range(0..4);
    let j = rng.random_range(i + 1..=4);
    let ce = json!({"chain": chain, "i": i, "j": j});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let lhs = chain.face(j, mode).and_then(|x| x.face(i, mode)).map_err(fail)?;
    let rhs = chain.face(i, mode).and_then(|x| x.face(j - 1, mode)).map_err(fail)?;
    expect_eq_dbg(trial, ce.clone(), lhs, rhs)?;
    // Reduced-mode composition discards circle counts, so the
    // degeneracy/face roundtrip only returns the original chain in full
    // mode, or in reduced mode when the chain itself is circle-free.
    let s = chain.degeneracy(i).map_err(fail)?;
    let roundtrip_mode = if reduced { mode } else { FaceMode::Full };
    expect_eq_dbg(trial, ce.clone(), s.face(i, roundtrip_mode).map_err(fail)?, chain.clone())?;
    expect_eq_dbg(
        trial,
        ce.clone(),
        s.face(i + 1, roundtrip_mode).map_err(fail)?,
        chain.clone(),
    )?;

    // The same identities for the configuration complex U.
    let config = gen_config(rng, 5, params.max_points + 4);
    let ce = json!({"config": config, "i": i, "j": j});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let lhs = config.face(j).and_then(|x| x.face(i)).map_err(fail)?;
    let rhs = config.face(i).and_then(|x| x.face(j - 1)).map_err(fail)?;
    expect_eq_dbg(trial, ce.clone(), lhs, rhs)?;
    let s = config.degeneracy(i).map_err(fail)?;
    expect_eq_dbg(trial, ce.clone(), s.face(i).map_err(fail)?, config.clone())?;
    expect_eq_dbg(trial, ce.clone(), s.face(i + 1).map_err(fail)?, config)
}

fn sign_cocycle(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let ks = match params.k { Some(k) => vec![k.clamp(1, 2)], None => vec![1, 2] };
    for k in ks {
        // A (2k+1)-simplex of U has 2k+2 label classes.
        let config = gen_config(rng, 2 * k + 2, (2 * k + 2) + params.max_points.min(6));
        let ce = json!({"config": config, "k": k});
        let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
        let mut sum = Rational::zero();
        for i in 0..=2 * k + 1 {
            let value = config.face(i).map_err(fail)?.averaged_sign().map_err(fail)?;
            if i % 2 == 0 {
                sum += value;
            } else {
                sum -= value;
            }
        }
        expect_eq(trial, ce, sum, Rational::zero())?;
    }
    Ok(())
}

// The reduced sign is not a cocycle on all of U: the neighbour relation
// fails to be an equivalence relation on arbitrary configurations (the
// word (0,2,3,3,1) has coboundary -1/2). It is one on the simplices
// pulled back from injective cyclic chains, where neighbouring two
// points means their strands share an image point; those are the
// simplices the comparison with the Chern class evaluates on, and the
// suite samples them.
fn reduced_sign_cocycle(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let ks = match params.k { Some(k) => vec![k.clamp(1, 2)], None => vec![1, 2] };
    for k in ks {
        let cap = if k == 1 { 5 } else { 4 }.min(params.max_points.max(1));
        // A (2k+1)-simplex of U pulled back from a chain of 2k+1
        // composable injective cyclic maps has 2k+2 label classes.
        let mut sizes: Vec<usize> =
            (0..2 * k + 2).map(|_| rng.random_range(1..=cap)).collect();
        sizes.sort_unstable();
        let maps: Vec<CyclicMap> = sizes
            .windows(2)
            .map(|w| gen_injective_map(rng, w[0], w[1]))
            .collect();
        let ce = json!({"maps": maps, "k": k});
        let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
        let chain = factorization_chain(&maps).map_err(fail)?;
        let trace = chain.trace();
        if trace.circles.len() != 1 {
            return Err(internal(trial, ce.clone(), "glued chain is not a single circle".into()));
        }
        let walls: Vec<usize> = (1..=2 * k + 2).collect();
        let config = circle_config(&trace.circles[0], &walls).map_err(fail)?;
        let ce = json!({"maps": maps, "k": k, "config": config});
        let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
        let mut sum = Rational::zero();
        for i in 0..=2 * k + 1 {
            let value = config.face(i).map_err(fail)?.reduced_sign().map_err(fail)?;
            if i % 2 == 0 {
                sum += value;
            } else {
                sum -= value;
            }
        }
        expect_eq(trial, ce, sum, Rational::zero())?;
    }
    Ok(())
}

fn unique_neighbour(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let k = params.pick_k(rng, 1, 2);
    let classes = 2 * k + 2;
    for _attempt in 0..10_000 {
        let config = gen_config(rng, classes, classes + params.max_points.min(6));
        // One random point per class, by position in the word.
        let tuple: Vec<usize> = (0..classes)
            .map(|label| {
                let members: Vec<usize> = config
                    .word()
                    .iter()
                    .enumerate()
                    .filter(|(_, &l)| l == label)
                    .map(|(p, _)| p)
                    .collect();
                members[rng.random_range(0..members.len())]
            })
            .collect();
        let ce = json!({"config": config, "tuple": tuple});
        let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
        let mut pairs = Vec::new();
        for i in 0..classes {
            for j in i + 1..classes {
                if config.neighbours(tuple[i], tuple[j]).map_err(fail)? {
                    pairs.push((i, j));
                }
            }
        }
        let [(i, j)] = pairs[..] else { continue };
        let len = config.len();
        let drop = |skip: usize| {
            let rest: Vec<usize> =
                (0..classes).filter(|&c| c != skip).map(|c| tuple[c]).collect();
            sign_tuple(len, &rest)
        };
        let sign_i = drop(i).map_err(fail)?;
        let sign_j = drop(j).map_err(fail)?;
        let parity = if (j - i - 1) % 2 == 0 { 1 } else { -1 };
        return expect_eq(trial, ce, sign_i, parity * sign_j);
    }
    Err(internal(
        trial,
        json!({"k": k}),
        "no instance with exactly one neighboured pair found".into(),
    ))
}

fn alpha_cocycle(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let chain = gen_chain(rng, 3, 0, 0, params.max_points, true);
    let ce = json!({"chain": chain});
    let value = coboundary(
        |x| alpha(x).map(|v| rational(v, 1)),
        &chain,
        FaceMode::Reduced,
    )
    .map_err(|e| internal(trial, ce.clone(), e.to_string()))?;
    expect_eq(trial, ce, value, Rational::zero())
}

fn beta_relation(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let chain = gen_chain(rng, 2, 0, 0, params.max_points, false);
    let ce = json!({"chain": chain});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let delta_beta = coboundary(
        |x| Ok(rational(beta_hat(&x.morphisms()[0]), 1)),
        &chain,
        FaceMode::Full,
    )
    .map_err(fail)?;
    let reduced = Chain::new(
        chain.objects().to_vec(),
        chain.morphisms().iter().map(Bordism::reduce).collect(),
    )
    .map_err(fail)?;
    let pulled_alpha = alpha(&reduced).map_err(fail)?;
    expect_eq(trial, ce, delta_beta + rational(pulled_alpha, 1), Rational::zero())
}

// The coboundary of gamma_k splits as a sum over the circles of the glued
// chain, each contributing the coboundary of its crossing configuration
// in the cyclic nerve. As with the reduced sign, that vanishes on stacked
// configurations but not in general, so the suite resamples chains until
// every circle crossing all the evaluation walls is stacked. Circles that
// miss a wall contribute zero to matching pairs of faces and need no
// restriction.
fn gamma_cocycle(params: &Params, trial: u64, rng: &mut Rng, k: usize) -> Check {
    let max_points = if k == 2 { params.max_points.min(6) } else { params.max_points };
    let reduced = rng.random();
    let walls: Vec<usize> = (1..=2 * k + 2).collect();
    let chain = loop {
        let candidate = gen_chain(rng, 2 * k + 3, 0, 0, max_points, reduced);
        let full_circles_stacked = candidate.trace().circles.iter().all(|trace| {
            circle_config(trace, &walls).map_or(true, |config| config.is_stacked())
        });
        if full_circles_stacked {
            break candidate;
        }
    };
    let ce = json!({"chain": chain, "k": k});
    for mode in [FaceMode::Full, FaceMode::Reduced] {
        let value = coboundary(|x| gamma(k, x), &chain, mode)
            .map_err(|e| internal(trial, ce.clone(), e.to_string()))?;
        expect_eq(trial, ce.clone(), value, Rational::zero())?;
    }
    Ok(())
}

fn gamma0_eq_alpha(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let chain = gen_chain(rng, 2, 1, 1, params.max_points, true);
    let ce = json!({"chain": chain});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let lhs = gamma(0, &chain).map_err(fail)?;
    let rhs = rational(alpha(&chain).map_err(fail)?, 1);
    expect_eq(trial, ce, lhs, rhs)
}

fn additivity(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let k = params.pick_k(rng, 0, 1);
    let x = gen_chain(rng, 2 * k + 2, 0, 0, params.max_points, true);
    let y = gen_chain(rng, 2 * k + 2, 0, 0, params.max_points, true);
    let ce = json!({"x": x, "y": y, "k": k});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let union = x.disjoint_union(&y).map_err(fail)?;
    let lhs = gamma(k, &union).map_err(fail)?;
    let rhs = gamma(k, &x).map_err(fail)? + gamma(k, &y).map_err(fail)?;
    expect_eq(trial, ce.clone(), lhs, rhs)?;
    if k == 0 {
        let lhs = alpha(&union).map_err(fail)?;
        let rhs = alpha(&x).map_err(fail)? + alpha(&y).map_err(fail)?;
        expect_eq(trial, ce, rational(lhs, 1), rational(rhs, 1))?;
    }
    Ok(())
}

fn relabel_invariance(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let k = params.pick_k(rng, 0, 1);
    let chain = gen_chain(rng, 2 * k + 2, 0, 0, params.max_points, true);
    let level = rng.random_range(0..=chain.len());
    let mut perm: Vec<usize> = (0..chain.objects()[level].len()).collect();
    perm.shuffle(rng);
    let ce = json!({"chain": chain, "level": level, "perm": perm, "k": k});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let permuted = chain.permute_object(level, &perm).map_err(fail)?;
    let lhs = gamma(k, &permuted).map_err(fail)?;
    let rhs = gamma(k, &chain).map_err(fail)?;
    expect_eq(trial, ce.clone(), lhs, rhs)?;
    if k == 0 {
        let lhs = alpha(&permuted).map_err(fail)?;
        let rhs = alpha(&chain).map_err(fail)?;
        expect_eq(trial, ce, rational(lhs, 1), rational(rhs, 1))?;
    }
    Ok(())
}

fn degenerate_vanishing(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let k = params.pick_k(rng, 0, 1);
    let reduced = rng.random();
    let chain = gen_chain(rng, 2 * k + 1, 0, 0, params.max_points, reduced);
    let i = rng.random_range(0..=chain.len());
    let ce = json!({"chain": chain, "i": i, "k": k});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let degenerate = chain.degeneracy(i).map_err(fail)?;
    let value = gamma(k, &degenerate).map_err(fail)?;
    expect_eq(trial, ce, value, Rational::zero())?;
    // cut_normalize deletes exactly the components gamma ignores, so it
    // is idempotent and gamma-invariant.
    let chain = gen_chain(rng, 2 * k + 2, 0, 0, params.max_points, reduced);
    let ce = json!({"chain": chain, "k": k});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let (normalized, _) = chain.cut_normalize();
    let (twice, _) = normalized.cut_normalize();
    expect_eq_dbg(trial, ce.clone(), twice, normalized.clone())?;
    let lhs = gamma(k, &normalized).map_err(fail)?;
    let rhs = gamma(k, &chain).map_err(fail)?;
    expect_eq(trial, ce, lhs, rhs)
}


fn lambda_sizes(rng: &mut Rng, count: usize, max_size: usize) -> Vec<usize> {
    (0..count).map(|_| rng.random_range(1..=max_size)).collect()
}

fn lambda_laws(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let max = params.max_points.max(2);
    let sizes = lambda_sizes(rng, 4, max);
    let f = gen_cyclic_map_between(rng, sizes[0], sizes[1]);
    let g = gen_cyclic_map_between(rng, sizes[1], sizes[2]);
    let h = gen_cyclic_map_between(rng, sizes[2], sizes[3]);
    let ce = json!({"f": f, "g": g, "h": h});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let lhs = f.then(&g).map_err(fail)?.then(&h).map_err(fail)?;
    let rhs = f.then(&g.then(&h).map_err(fail)?).map_err(fail)?;
    expect_eq_dbg(trial, ce.clone(), lhs, rhs)?;
    let left = CyclicMap::identity(f.source()).then(&f).map_err(fail)?;
    let right = f.then(&CyclicMap::identity(f.target())).map_err(fail)?;
    expect_eq_dbg(trial, ce.clone(), left, f.clone())?;
    expect_eq_dbg(trial, ce.clone(), right, f)?;

    // r^n = id and r . r^{-1} = id.
    let n = rng.random_range(1..=10usize);
    let r = CyclicMap::rotation(n, rng.random_range(0..n as i64));
    let ce = json!({"n": n, "r": r});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let mut power = CyclicMap::identity(n);
    for _ in 0..n {
        power = power.then(&CyclicMap::rotation(n, 1)).map_err(fail)?;
    }
    expect_eq_dbg(trial, ce.clone(), power, CyclicMap::identity(n))?;
    let inverse = r.inverse_rotation().map_err(fail)?;
    let round = r.then(&inverse).map_err(fail)?;
    expect_eq_dbg(trial, ce, round, CyclicMap::identity(n))
}

fn h_functorial(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let max = params.max_points.max(2);
    let sizes = lambda_sizes(rng, 3, max);
    let f = gen_cyclic_map_between(rng, sizes[0], sizes[1]);
    let g = gen_cyclic_map_between(rng, sizes[1], sizes[2]);
    let ce = json!({"f": f, "g": g});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let lhs = to_bordism(&f.then(&g).map_err(fail)?);
    let rhs = to_bordism(&f).compose(&to_bordism(&g)).map_err(fail)?;
    expect_eq(trial, ce.clone(), rhs.circles(), 0)?;
    expect_eq_dbg(trial, ce, lhs, rhs)
}

fn h_roundtrip(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let max = params.max_points.max(2);
    let sizes = lambda_sizes(rng, 2, max);
    let f = gen_cyclic_map_between(rng, sizes[0], sizes[1]);
    let ce = json!({"f": f});
    let back = from_bordism(&to_bordism(&f))
        .map_err(|e| internal(trial, ce.clone(), e.to_string()))?;
    expect_eq_dbg(trial, ce, back, f)
}

fn f1_membership(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let max = params.max_points.max(2);
    let sizes = lambda_sizes(rng, 2, max);
    let f = gen_cyclic_map_between(rng, sizes[0], sizes[1]);
    let x = to_bordism(&f);
    let ce = json!({"f": f});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let w = w_bordism(f.source()).compose(&x).map_err(fail)?;
    expect_eq_dbg(trial, ce.clone(), w, w_bordism(f.target()))?;
    let v = x.compose(&v_bordism(f.target())).map_err(fail)?;
    expect_eq_dbg(trial, ce, v, v_bordism(f.source()))
}

fn chern_compare(params: &Params, trial: u64, rng: &mut Rng, k: usize) -> Check {
    let cap = if k == 1 { 5 } else { 3 };
    let maps = gen_injective_chain(rng, k, cap.min(params.max_points.max(1)));
    let ce = json!({"maps": maps, "k": k});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let igusa = igusa_cocycle(k, &maps).map_err(fail)?;
    let config = lambda_to_u(k, &maps).map_err(fail)?;
    let reduced = config.reduced_sign().map_err(fail)?;
    expect_eq(trial, ce.clone(), igusa, kappa_coefficient(k) * reduced)?;
    // The unnormalized form: distinct tuples over the image classes vs
    // no-neighbour tuples on the traced circle.
    let (distinct, _) = igusa_distinct_sum(&maps).map_err(fail)?;
    let survivors =
        no_neighbour_sign_sum(config.len(), config.word(), &config.classes()).map_err(fail)?;
    expect_eq(trial, ce, distinct, survivors)
}

fn conjugation_invariance(params: &Params, trial: u64, rng: &mut Rng) -> Check {
    let k = params.pick_k(rng, 1, 2);
    let cap = if k == 1 { 5 } else { 3 };
    let maps = gen_injective_chain(rng, k, cap.min(params.max_points.max(1)));
    let i = rng.random_range(1..2 * k);
    let n = maps[i - 1].target();
    let sigma = CyclicMap::rotation(n, rng.random_range(0..n as i64));
    let ce = json!({"maps": maps, "i": i, "sigma": sigma, "k": k});
    let fail = |e: cob1::Error| internal(trial, ce.clone(), e.to_string());
    let mut conjugated = maps.clone();
    conjugated[i - 1] = maps[i - 1].then(&sigma).map_err(fail)?;
    conjugated[i] =
        sigma.inverse_rotation().map_err(fail)?.then(&maps[i]).map_err(fail)?;
    let lhs = igusa_cocycle(k, &conjugated).map_err(fail)?;
    let rhs = igusa_cocycle(k, &maps).map_err(fail)?;
    expect_eq(trial, ce, lhs, rhs)
}
