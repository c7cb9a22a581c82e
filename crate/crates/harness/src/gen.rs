//! Seeded generators for every object kind the suites consume.

use std::collections::BTreeMap;

use cob1::bordism::{Bordism, BoundaryPoint, Sign, ZeroManifold};
use cob1::chain::Chain;
use cob1::cyclic::CyclicMap;
use cob1::cyclic_sign::CyclicConfiguration;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

/// A random sign sequence with the requested signed sum and at most
/// `max_points` points (parity permitting).
pub fn gen_object(rng: &mut Rng, degree: i64, max_points: usize) -> ZeroManifold {
    let need = degree.unsigned_abs() as usize;
    let max = max_points.max(need);
    let slack = (max - need) / 2;
    let extra = rng.random_range(0..=slack);
    let plus = extra + degree.max(0) as usize;
    let minus = extra + (-degree).max(0) as usize;
    let mut signs: Vec<Sign> = std::iter::repeat(Sign::Plus)
        .take(plus)
        .chain(std::iter::repeat(Sign::Minus).take(minus))
        .collect();
    signs.shuffle(rng);
    ZeroManifold::new(signs)
}

/// A uniformly random bordism between the given endpoints; `reduced`
/// forces zero circles, otherwise a small random count is attached.
pub fn gen_bordism(
    rng: &mut Rng,
    source: &ZeroManifold,
    target: &ZeroManifold,
    reduced: bool,
) -> Bordism {
    assert_eq!(source.degree(), target.degree(), "degree mismatch");
    let mut dom = Vec::new();
    let mut cod = Vec::new();
    for (i, s) in source.signs().iter().enumerate() {
        match s {
            Sign::Plus => dom.push(BoundaryPoint::src(i)),
            Sign::Minus => cod.push(BoundaryPoint::src(i)),
        }
    }
    for (i, s) in target.signs().iter().enumerate() {
        match s {
            Sign::Plus => cod.push(BoundaryPoint::tgt(i)),
            Sign::Minus => dom.push(BoundaryPoint::tgt(i)),
        }
    }
    cod.shuffle(rng);
    let arcs: BTreeMap<_, _> = dom.into_iter().zip(cod).collect();
    let circles = if reduced { 0 } else { rng.random_range(0..3) };
    Bordism::new(source.clone(), target.clone(), arcs, circles)
        .expect("generated bordisms are valid")
}

/// A random chain of `length` morphisms whose first `empty_prefix` and
/// last `empty_suffix` objects are empty. With any forced-empty object the
/// common degree is 0, otherwise it is sampled.
pub fn gen_chain(
    rng: &mut Rng,
    length: usize,
    empty_prefix: usize,
    empty_suffix: usize,
    max_points: usize,
    reduced: bool,
) -> Chain {
    let degree = if empty_prefix + empty_suffix > 0 {
        0
    } else {
        rng.random_range(-(max_points as i64) / 2..=(max_points as i64) / 2)
    };
    let objects: Vec<ZeroManifold> = (0..=length)
        .map(|i| {
            if i < empty_prefix || i + empty_suffix > length {
                ZeroManifold::empty()
            } else {
                gen_object(rng, degree, max_points)
            }
        })
        .collect();
    let morphisms = objects
        .windows(2)
        .map(|w| gen_bordism(rng, &w[0], &w[1], reduced))
        .collect();
    Chain::new(objects, morphisms).expect("generated chains are composable")
}

/// A random cyclic map with source and target sizes in `1..=max_size`.
pub fn gen_cyclic_map(rng: &mut Rng, max_size: usize) -> CyclicMap {
    let n = rng.random_range(1..=max_size);
    let m = rng.random_range(1..=max_size);
    gen_cyclic_map_between(rng, n, m)
}

/// A random cyclic map `n -> m`: a start value plus weakly monotone
/// increments summing to at most `m`.
pub fn gen_cyclic_map_between(rng: &mut Rng, n: usize, m: usize) -> CyclicMap {
    let start = rng.random_range(0..m as i64);
    let mut values = vec![start];
    let mut budget = m as i64;
    for _ in 1..n {
        let step = rng.random_range(0..=budget);
        budget -= step;
        values.push(values.last().unwrap() + step);
    }
    CyclicMap::new(n, m, values).expect("generated maps are monotone")
}

/// A random injective cyclic map `n -> m` (`n <= m`): a start value plus
/// `n - 1` distinct positive offsets below `m`.
pub fn gen_injective_map(rng: &mut Rng, n: usize, m: usize) -> CyclicMap {
    assert!(n <= m, "no injective map {n} -> {m}");
    let start = rng.random_range(0..m as i64);
    let mut offsets: Vec<i64> = (1..m as i64).collect();
    offsets.shuffle(rng);
    offsets.truncate(n - 1);
    offsets.sort_unstable();
    let values = std::iter::once(start).chain(offsets.iter().map(|o| start + o)).collect();
    CyclicMap::new(n, m, values).expect("generated maps are monotone")
}

/// A composable tuple of `2k` injective cyclic maps with sizes bounded by
/// `max_size`.
pub fn gen_injective_chain(rng: &mut Rng, k: usize, max_size: usize) -> Vec<CyclicMap> {
    let mut sizes: Vec<usize> =
        (0..=2 * k).map(|_| rng.random_range(1..=max_size)).collect();
    sizes.sort_unstable();
    sizes
        .windows(2)
        .map(|w| gen_injective_map(rng, w[0], w[1]))
        .collect()
}

/// A random configuration with label classes `0..labels`, every class
/// non-empty, and at most `max_points` points in total.
pub fn gen_config(rng: &mut Rng, labels: usize, max_points: usize) -> CyclicConfiguration {
    let extra = rng.random_range(0..=max_points.saturating_sub(labels));
    let mut word: Vec<usize> = (0..labels)
        .chain((0..extra).map(|_| rng.random_range(0..labels)))
        .collect();
    word.shuffle(rng);
    CyclicConfiguration::new(word).expect("every label occurs")
}
