//! Connes' cyclic category, its embedding into the bordism category, and
//! Igusa's combinatorial Chern cocycle.
//!
//! A morphism `n -> m` is a weakly monotone map `f: Z -> Z` with
//! `f(x + n) = f(x) + m`, taken modulo shifts by `m`. The functor into
//! bordisms sends `n` to the alternating object `M(n)` of `2n` points and
//! a map to the arc matching that factorizes the circle
//! `W(n) . X . V(m)`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::{BigInt, One, Zero};

use crate::bordism::{Bordism, BoundaryPoint, End, Sign, ZeroManifold};
use crate::chain::Chain;
use crate::cocycle::{circle_config, kappa_coefficient};
use crate::cyclic_sign::{sign_tuple, CyclicConfiguration};
use crate::{Error, Rational, Result};

/// A morphism of Connes' category in normal form: weakly monotone values
/// `f(0), ..., f(n-1)` with `0 <= f(0) < m` and `f(n-1) <= f(0) + m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicMap {
    n: usize,
    m: usize,
    values: Vec<i64>,
}

impl CyclicMap {
    /// Builds the normal-form representative of the raw value vector,
    /// shifting by the multiple of `m` that places `f(0)` in `[0, m)`.
    pub fn new(n: usize, m: usize, raw: Vec<i64>) -> Result<Self> {
        if n == 0 || m == 0 || raw.len() != n {
            return Err(Error::NotMonotone);
        }
        let monotone = raw.windows(2).all(|w| w[0] <= w[1]);
        if !monotone || raw[n - 1] > raw[0] + m as i64 {
            return Err(Error::NotMonotone);
        }
        let shift = raw[0].div_euclid(m as i64) * m as i64;
        let values = raw.iter().map(|v| v - shift).collect();
        Ok(CyclicMap { n, m, values })
    }

    pub fn identity(n: usize) -> Self {
        CyclicMap { n, m: n, values: (0..n as i64).collect() }
    }

    /// The rotation `x -> x + shift` on `n`.
    pub fn rotation(n: usize, shift: i64) -> Self {
        CyclicMap::new(n, n, (0..n as i64).map(|x| x + shift).collect())
            .expect("rotations are monotone")
    }

    pub fn source(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The equivariant extension to all of `Z`.
    pub fn apply(&self, x: i64) -> i64 {
        let n = self.n as i64;
        let q = x.div_euclid(n);
        let r = x.rem_euclid(n) as usize;
        self.values[r] + q * self.m as i64
    }

    /// Diagrammatic composition: `self` followed by `g`, i.e. `g . self`.
    pub fn then(&self, g: &CyclicMap) -> Result<CyclicMap> {
        if self.m != g.n {
            return Err(Error::ObjectMismatch);
        }
        let raw = (0..self.n as i64).map(|x| g.apply(self.apply(x))).collect();
        CyclicMap::new(self.n, g.m, raw)
    }

    /// Whether the representative is injective on `Z`.
    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
            && self.values[self.n - 1] < self.values[0] + self.m as i64
    }

    /// The inverse of a rotation (the only isomorphisms in the category).
    pub fn inverse_rotation(&self) -> Result<CyclicMap> {
        if self.n != self.m || !self.is_injective() {
            return Err(Error::NotInjective);
        }
        let shift = self.values[0];
        if self.values.iter().enumerate().any(|(x, &v)| v != shift + x as i64) {
            return Err(Error::NotInjective);
        }
        Ok(CyclicMap::rotation(self.n, -shift))
    }
}

/// Position of the point `[i]_n^+` (1-based label) in `M(n)`.
fn pos_plus(i: usize) -> usize {
    2 * (i - 1)
}

/// Position of the point `[i]_n^-` (1-based label) in `M(n)`.
fn pos_minus(i: usize) -> usize {
    2 * (i - 1) + 1
}

/// Reduces an integer to the representative `1..=n` of its class mod `n`.
fn rep(v: i64, n: usize) -> usize {
    ((v - 1).rem_euclid(n as i64)) as usize + 1
}

/// The object `M(n)`: `2n` points alternating `+`, `-`, with `[i]^+` at
/// position `2(i-1)` and `[i]^-` at position `2(i-1)+1`.
pub fn m_circle_object(n: usize) -> ZeroManifold {
    let signs = (0..2 * n)
        .map(|p| if p % 2 == 0 { Sign::Plus } else { Sign::Minus })
        .collect();
    ZeroManifold::new(signs)
}

/// `W(n)`: the disjoint union of `n` intervals `{[i]^+, [i+1]^-}` from the
/// empty set to `M(n)`.
pub fn w_bordism(n: usize) -> Bordism {
    let mut arcs = BTreeMap::new();
    for i in 1..=n {
        let next = rep(i as i64 + 1, n);
        arcs.insert(
            BoundaryPoint::tgt(pos_minus(next)),
            BoundaryPoint::tgt(pos_plus(i)),
        );
    }
    Bordism::new(ZeroManifold::empty(), m_circle_object(n), arcs, 0)
        .expect("W(n) is a bordism")
}

/// `V(n)`: the disjoint union of `n` intervals `{[i]^-, [i]^+}` from
/// `M(n)` to the empty set.
pub fn v_bordism(n: usize) -> Bordism {
    let mut arcs = BTreeMap::new();
    for i in 1..=n {
        arcs.insert(
            BoundaryPoint::src(pos_plus(i)),
            BoundaryPoint::src(pos_minus(i)),
        );
    }
    Bordism::new(m_circle_object(n), ZeroManifold::empty(), arcs, 0)
        .expect("V(n) is a bordism")
}

/// The functor from the cyclic category into bordisms on morphisms: the
/// arc matching of the interval decomposition determined by `f`.
pub fn to_bordism(f: &CyclicMap) -> Bordism {
    let n = f.source();
    let m = f.target();
    let mut arcs = BTreeMap::new();

    for i in 1..=n {
        let here = f.apply(i as i64);
        let next = f.apply(i as i64 + 1);
        let to = if here == next {
            BoundaryPoint::src(pos_minus(i))
        } else {
            BoundaryPoint::tgt(pos_plus(rep(next - 1, m)))
        };
        arcs.insert(BoundaryPoint::src(pos_plus(i)), to);
    }

    // Each minus point [j]^- of M(m) connects to the end of the preimage
    // interval of j, or cups over to [j-1]^+ when j misses the image.
    for j in 1..=m {
        // The unique x in 1..=n with f(x) = j (mod m) ending a preimage
        // interval, i.e. x = max f^{-1}(j), if the residue is hit at all.
        let interval_end = (1..=n as i64).find(|&x| {
            rep(f.apply(x), m) == j && f.apply(x) != f.apply(x + 1)
        });
        let to = match interval_end {
            Some(x) => BoundaryPoint::src(pos_minus(rep(x, n))),
            None => BoundaryPoint::tgt(pos_plus(rep(j as i64 - 1, m))),
        };
        arcs.insert(BoundaryPoint::tgt(pos_minus(j)), to);
    }

    Bordism::new(m_circle_object(n), m_circle_object(m), arcs, 0)
        .expect("the interval matching is a bijection")
}

/// Reads `n` off an object of the form `M(n)`.
fn circle_object_size(object: &ZeroManifold) -> Result<usize> {
    let len = object.len();
    if len == 0 || len % 2 != 0 || object != &m_circle_object(len / 2) {
        return Err(Error::NotF1Morphism(
            "object is not an alternating M(n)".into(),
        ));
    }
    Ok(len / 2)
}

/// Recovers the cyclic map from a bordism `M(n) -> M(m)`, verifying the
/// factorization equations `W(n) . X = W(m)` and `X . V(m) = V(n)` first.
pub fn from_bordism(x: &Bordism) -> Result<CyclicMap> {
    let n = circle_object_size(x.source())?;
    let m = circle_object_size(x.target())?;
    if w_bordism(n).compose(x)? != w_bordism(m) {
        return Err(Error::NotF1Morphism("W(n) . X differs from W(m)".into()));
    }
    if x.compose(&v_bordism(m))? != v_bordism(n) {
        return Err(Error::NotF1Morphism("X . V(m) differs from V(n)".into()));
    }

    // A strand [i]^+ -> [j]_m^+ pins f(i+1) = j+1 (mod m).
    let crossing: Vec<(usize, usize)> = (1..=n)
        .filter_map(|i| {
            let to = x.arc(BoundaryPoint::src(pos_plus(i)));
            (to.end == End::Target)
                .then(|| (rep(i as i64 + 1, n), rep((to.index / 2) as i64 + 2, m)))
        })
        .sorted()
        .collect();
    if crossing.is_empty() {
        return Err(Error::NotF1Morphism("no edge reaches M(m)^+".into()));
    }

    let (a_min, j_min) = crossing[0];
    // f on the crossing labels, anchored so that all values after the
    // first lie in (f(a_min), f(a_min) + m).
    let mut f = vec![0i64; n + 1];
    let mut assigned = vec![false; n + 1];
    f[a_min] = j_min as i64;
    assigned[a_min] = true;
    for &(a, j) in &crossing[1..] {
        let mut value = j as i64;
        while value <= f[a_min] {
            value += m as i64;
        }
        f[a] = value;
        assigned[a] = true;
    }
    // Unpinned labels sit inside a collapsed interval: f(i) = f(i-1).
    for offset in 1..n {
        let i = a_min + offset;
        let (idx, shift) = if i > n { (i - n, -(m as i64)) } else { (i, 0) };
        if !assigned[idx] {
            let pred = if i - 1 > n { f[i - 1 - n] + m as i64 } else { f[i - 1] };
            f[idx] = pred + shift;
            assigned[idx] = true;
        }
    }

    // Translate from labels 1..=n to stored values f(0), ..., f(n-1).
    let mut raw = vec![0i64; n];
    for i in 1..=n {
        raw[i % n] = if i == n { f[n] - m as i64 } else { f[i] };
    }
    CyclicMap::new(n, m, raw)
}

/// The chain `(W(n_0), X_1, ..., X_{2k}, V(n_{2k}))` of a composable tuple
/// of cyclic maps.
pub fn factorization_chain(maps: &[CyclicMap]) -> Result<Chain> {
    let first = maps.first().ok_or_else(|| {
        Error::Infeasible("a factorization chain needs at least one map".into())
    })?;
    for (f, g) in maps.iter().tuple_windows() {
        if f.target() != g.source() {
            return Err(Error::ObjectMismatch);
        }
    }
    let last = maps.last().unwrap();
    let mut morphisms = vec![w_bordism(first.source())];
    morphisms.extend(maps.iter().map(to_bordism));
    morphisms.push(v_bordism(last.target()));
    Chain::from_morphisms(morphisms)
}

/// The comparison map into cyclic configurations: traces the unique circle
/// of the glued factorization chain of an injective `2k`-tuple and labels
/// its positive crossings by wall.
pub fn lambda_to_u(k: usize, maps: &[CyclicMap]) -> Result<CyclicConfiguration> {
    if maps.len() != 2 * k || k == 0 {
        return Err(Error::ChainLength { expected: 2 * k, got: maps.len() });
    }
    if maps.iter().any(|f| !f.is_injective()) {
        return Err(Error::NotInjective);
    }
    let chain = factorization_chain(maps)?;
    let trace = chain.trace();
    if trace.circles.len() != 1 {
        return Err(Error::NotOneCircle(trace.circles.len()));
    }
    let walls: Vec<usize> = (1..=2 * k + 1).collect();
    circle_config(&trace.circles[0], &walls)
}

/// The image classes `A_l` of Igusa's cocycle: `A_l` is the image of
/// `Z/n_l` in `Z/n_{2k}` under the composite of the maps after stage `l`.
pub fn igusa_classes(maps: &[CyclicMap]) -> Result<Vec<Vec<usize>>> {
    let last_target = maps
        .last()
        .map(|f| f.target())
        .ok_or_else(|| Error::Infeasible("empty chain".into()))?;
    let mut classes = Vec::with_capacity(maps.len() + 1);
    for l in 0..=maps.len() {
        let mut composite = CyclicMap::identity(if l == 0 {
            maps[0].source()
        } else {
            maps[l - 1].target()
        });
        for f in &maps[l..] {
            composite = composite.then(f)?;
        }
        let image: Vec<usize> = (0..composite.source() as i64)
            .map(|x| composite.apply(x).rem_euclid(last_target as i64) as usize)
            .sorted()
            .dedup()
            .collect();
        classes.push(image);
    }
    Ok(classes)
}

/// The unnormalized sum of `sign_tuple` over pairwise-distinct tuples of
/// the Igusa classes, together with the class sizes.
pub fn igusa_distinct_sum(maps: &[CyclicMap]) -> Result<(BigInt, Vec<usize>)> {
    let classes = igusa_classes(maps)?;
    let sizes = classes.iter().map(|c| c.len()).collect();
    let circle_len = maps.last().unwrap().target();
    let mut sum = BigInt::zero();
    'tuples: for tuple in classes.iter().map(|c| c.iter().copied()).multi_cartesian_product() {
        for i in 0..tuple.len() {
            for j in (i + 1)..tuple.len() {
                if tuple[i] == tuple[j] {
                    continue 'tuples;
                }
            }
        }
        // The tuple sign is measured against the clockwise cyclic order on
        // Z/n, which is the orientation induced by the glued factorization
        // circle; reversing the tuple of an odd-length tuple does exactly
        // that.
        let reversed: Vec<usize> = tuple.iter().rev().copied().collect();
        sum += sign_tuple(circle_len, &reversed)?;
    }
    Ok((sum, sizes))
}

/// Igusa's rational cocycle representing the `k`-th power of the first
/// Chern class on the injective cyclic category.
pub fn igusa_cocycle(k: usize, maps: &[CyclicMap]) -> Result<Rational> {
    if maps.len() != 2 * k || k == 0 {
        return Err(Error::ChainLength { expected: 2 * k, got: maps.len() });
    }
    let (sum, sizes) = igusa_distinct_sum(maps)?;
    let mut denominator = BigInt::one();
    for size in sizes {
        denominator *= size;
    }
    Ok(kappa_coefficient(k) * Rational::new(sum, denominator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    #[test]
    fn normalization_fixtures() {
        assert_eq!(CyclicMap::new(2, 2, vec![2, 3]).unwrap().values(), &[0, 1]);
        assert_eq!(CyclicMap::new(1, 1, vec![5]).unwrap().values(), &[0]);
        assert_eq!(CyclicMap::new(3, 2, vec![0, 1, 1]).unwrap().values(), &[0, 1, 1]);
        assert_eq!(CyclicMap::new(2, 3, vec![1, 0]), Err(Error::NotMonotone));
        assert_eq!(CyclicMap::new(2, 2, vec![0, 3]), Err(Error::NotMonotone));
    }

    #[test]
    fn composition_fixtures() {
        let id = CyclicMap::identity(4);
        assert_eq!(id.then(&id).unwrap(), id);

        let g = CyclicMap::new(2, 3, vec![0, 2]).unwrap();
        let h = CyclicMap::new(3, 2, vec![0, 1, 1]).unwrap();
        assert_eq!(g.then(&h).unwrap(), CyclicMap::identity(2));
    }

    #[test]
    fn rotation_has_order_n() {
        for n in 1..=10 {
            let r = CyclicMap::rotation(n, 1);
            let mut power = CyclicMap::identity(n);
            for _ in 0..n {
                power = power.then(&r).unwrap();
            }
            assert_eq!(power, CyclicMap::identity(n));
        }
    }

    #[test]
    fn injectivity_fixtures() {
        assert!(CyclicMap::identity(3).is_injective());
        assert!(!CyclicMap::new(2, 1, vec![0, 0]).unwrap().is_injective());
        assert!(CyclicMap::new(2, 4, vec![1, 2]).unwrap().is_injective());
    }

    #[test]
    fn w_and_v_glue_to_a_circle() {
        for n in 1..=5 {
            let glued = w_bordism(n).compose(&v_bordism(n)).unwrap();
            assert!(glued.arcs().is_empty());
            assert_eq!(glued.circles(), 1);
        }
    }

    #[test]
    fn identity_maps_to_identity_bordism() {
        for n in 1..=5 {
            assert_eq!(
                to_bordism(&CyclicMap::identity(n)),
                Bordism::identity(&m_circle_object(n))
            );
        }
    }

    #[test]
    fn image_bordisms_factorize_the_circle() {
        let maps = [
            CyclicMap::identity(3),
            CyclicMap::rotation(2, 1),
            CyclicMap::new(2, 3, vec![0, 2]).unwrap(),
            CyclicMap::new(3, 2, vec![0, 1, 1]).unwrap(),
            CyclicMap::new(1, 4, vec![2]).unwrap(),
            CyclicMap::new(4, 1, vec![0, 0, 1, 1]).unwrap(),
            CyclicMap::new(3, 3, vec![1, 1, 2]).unwrap(),
        ];
        for f in &maps {
            let x = to_bordism(f);
            let glued = w_bordism(f.source())
                .compose(&x)
                .unwrap()
                .compose(&v_bordism(f.target()))
                .unwrap();
            assert!(glued.arcs().is_empty(), "map {f:?}");
            assert_eq!(glued.circles(), 1, "map {f:?}");
            assert_eq!(
                w_bordism(f.source()).compose(&x).unwrap(),
                w_bordism(f.target()),
                "map {f:?}"
            );
            assert_eq!(
                x.compose(&v_bordism(f.target())).unwrap(),
                v_bordism(f.source()),
                "map {f:?}"
            );
        }
    }

    #[test]
    fn round_trip_on_fixtures() {
        let maps = [
            CyclicMap::identity(1),
            CyclicMap::identity(4),
            CyclicMap::rotation(2, 1),
            CyclicMap::rotation(5, 3),
            CyclicMap::new(2, 3, vec![0, 2]).unwrap(),
            CyclicMap::new(3, 2, vec![0, 1, 1]).unwrap(),
            CyclicMap::new(1, 4, vec![2]).unwrap(),
            CyclicMap::new(4, 1, vec![0, 0, 1, 1]).unwrap(),
            CyclicMap::new(3, 3, vec![1, 1, 2]).unwrap(),
        ];
        for f in &maps {
            assert_eq!(from_bordism(&to_bordism(f)).unwrap(), *f, "map {f:?}");
        }
    }

    #[test]
    fn from_bordism_rejects_two_circles() {
        // V(1) . W(1) is an endomorphism of M(1) gluing to two circles
        // against W(1) and V(1), hence not an F1-morphism.
        let x = v_bordism(1).compose(&w_bordism(1)).unwrap();
        assert!(from_bordism(&x).is_err());
    }

    #[test]
    fn functoriality_on_fixtures() {
        let pairs = [
            (CyclicMap::new(2, 3, vec![0, 2]).unwrap(), CyclicMap::new(3, 2, vec![0, 1, 1]).unwrap()),
            (CyclicMap::rotation(3, 1), CyclicMap::rotation(3, 2)),
            (CyclicMap::new(1, 4, vec![2]).unwrap(), CyclicMap::new(4, 1, vec![0, 0, 1, 1]).unwrap()),
        ];
        for (f, g) in &pairs {
            let composite = to_bordism(&f.then(g).unwrap());
            let glued = to_bordism(f).compose(&to_bordism(g)).unwrap();
            assert_eq!(glued, composite, "pair {f:?}, {g:?}");
            assert_eq!(glued.circles(), 0);
        }
    }

    #[test]
    fn lambda_to_u_minimal_chain() {
        let id = CyclicMap::identity(1);
        let config = lambda_to_u(1, &[id.clone(), id]).unwrap();
        assert_eq!(config.len(), 3);
        assert_eq!(config.class_count(), 3);
        assert_eq!(config.reduced_sign().unwrap(), rational(0, 1));
    }

    #[test]
    fn lambda_to_u_class_sizes_match_objects() {
        let r = CyclicMap::rotation(2, 1);
        let config = lambda_to_u(1, &[r.clone(), r]).unwrap();
        assert_eq!(config.len(), 6);
        for class in config.classes() {
            assert_eq!(class.len(), 2);
        }
    }

    #[test]
    fn igusa_degenerate_chain_vanishes() {
        let id = CyclicMap::identity(1);
        assert_eq!(igusa_cocycle(1, &[id.clone(), id]).unwrap(), rational(0, 1));
    }

    #[test]
    fn igusa_on_identity_chain_matches_brute_force() {
        let id = CyclicMap::identity(3);
        let maps = [id.clone(), id];
        // All classes are Z/3; brute-force over the 6 distinct triples.
        let mut oracle = 0i64;
        for tuple in (0..3usize).permutations(3) {
            oracle += sign_tuple(3, &tuple).unwrap();
        }
        let expected = kappa_coefficient(1) * Rational::new(oracle.into(), 27.into());
        assert_eq!(igusa_cocycle(1, &maps).unwrap(), expected);
    }

    #[test]
    fn igusa_matches_reduced_sign_on_an_injective_chain() {
        let r = CyclicMap::rotation(2, 1);
        let maps = [r.clone(), r];
        let config = lambda_to_u(1, &maps).unwrap();
        let expected = kappa_coefficient(1) * config.reduced_sign().unwrap();
        assert_eq!(igusa_cocycle(1, &maps).unwrap(), expected);
    }

    #[test]
    fn igusa_matches_reduced_sign_nontrivially() {
        let f = CyclicMap::new(1, 2, vec![0]).unwrap();
        let g = CyclicMap::new(2, 3, vec![0, 1]).unwrap();
        let maps = [f, g];
        let config = lambda_to_u(1, &maps).unwrap();
        let expected = kappa_coefficient(1) * config.reduced_sign().unwrap();
        assert_ne!(expected, rational(0, 1));
        assert_eq!(igusa_cocycle(1, &maps).unwrap(), expected);
    }
}
