//! The cocycles on bordism chains: `alpha`, `beta_hat`, `gamma_k`, and the
//! generic simplicial coboundary.

use num::{One, Zero};

use crate::bordism::{Bordism, Sign};
use crate::chain::{Chain, CircleTrace, FaceMode};
use crate::cyclic_sign::{reduced_sign_classes, CyclicConfiguration};
use crate::{Error, Rational, Result};

/// The coefficient `(-1)^k k! / (2k)!` in front of `gamma_k`.
pub fn kappa_coefficient(k: usize) -> Rational {
    let mut value = Rational::one();
    // k!/(2k)! = 1/((k+1)(k+2)...(2k))
    for i in (k + 1)..=(2 * k) {
        value /= Rational::from_integer(i.into());
    }
    if k % 2 == 1 {
        value = -value;
    }
    value
}

/// The 2-cocycle counting circles created when two reduced bordisms are
/// glued.
pub fn alpha(chain: &Chain) -> Result<i64> {
    if chain.len() != 2 {
        return Err(Error::ChainLength { expected: 2, got: chain.len() });
    }
    for w in chain.morphisms() {
        if !w.is_reduced() {
            return Err(Error::NotReduced(w.circles()));
        }
    }
    Ok(chain.trace().circles.len() as i64)
}

/// The 1-cochain counting the closed components of a single bordism.
pub fn beta_hat(bordism: &Bordism) -> i64 {
    bordism.circles() as i64
}

/// Restricts a circle trace to its positive crossings at the listed walls,
/// producing the cyclic configuration whose class `l` is the set of
/// positive crossings at `walls[l]`. Fails if the circle misses a wall.
pub fn circle_config(trace: &CircleTrace, walls: &[usize]) -> Result<CyclicConfiguration> {
    let word = circle_word(trace, walls)?;
    CyclicConfiguration::new(word)
}

/// The label word of the positive crossings at `walls`, in traversal order.
fn circle_word(trace: &CircleTrace, walls: &[usize]) -> Result<Vec<usize>> {
    let word: Vec<usize> = trace
        .crossings
        .iter()
        .filter(|c| c.sign == Sign::Plus)
        .filter_map(|c| walls.iter().position(|&w| w == c.level))
        .collect();
    for (label, &wall) in walls.iter().enumerate() {
        if !word.contains(&label) {
            return Err(Error::MissesWall(wall));
        }
    }
    Ok(word)
}

/// The `(2k+2)`-cocycle `gamma_k`: a weighted sum of reduced signs over
/// the circle components of the glued chain.
///
/// Morphism circle counts are ignored; a circle contributes the reduced
/// sign of its positive-crossing configuration at walls `1..=2k+1`, which
/// is 0 whenever the circle misses a wall.
pub fn gamma(k: usize, chain: &Chain) -> Result<Rational> {
    Ok(gamma_with_details(k, chain)?.0)
}

/// As [`gamma`], additionally returning the per-circle breakdown
/// `(trace, configuration word, reduced sign)`.
pub fn gamma_with_details(
    k: usize,
    chain: &Chain,
) -> Result<(Rational, Vec<(CircleTrace, Vec<usize>, Rational)>)> {
    let expected = 2 * k + 2;
    if chain.len() != expected {
        return Err(Error::ChainLength { expected, got: chain.len() });
    }
    let walls: Vec<usize> = (1..=2 * k + 1).collect();
    let mut sum = Rational::zero();
    let mut details = Vec::new();
    for trace in chain.trace().circles {
        let word: Vec<usize> = trace
            .crossings
            .iter()
            .filter(|c| c.sign == Sign::Plus)
            .filter_map(|c| walls.iter().position(|&w| w == c.level))
            .collect();
        let mut classes = vec![Vec::new(); walls.len()];
        for (pos, &label) in word.iter().enumerate() {
            classes[label].push(pos);
        }
        let value = reduced_sign_classes(word.len().max(1), &word, &classes)?;
        sum += &value;
        details.push((trace, word, value));
    }
    Ok((kappa_coefficient(k) * sum, details))
}

/// The simplicial coboundary `(delta c)(x) = sum_i (-1)^i c(d_i x)` of a
/// cochain evaluator, with inner faces composed in the category selected
/// by `mode`.
pub fn coboundary<F>(cochain: F, chain: &Chain, mode: FaceMode) -> Result<Rational>
where
    F: Fn(&Chain) -> Result<Rational>,
{
    let mut sum = Rational::zero();
    for i in 0..=chain.len() {
        let value = cochain(&chain.face(i, mode)?)?;
        if i % 2 == 0 {
            sum += value;
        } else {
            sum -= value;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bordism::{BoundaryPoint, ZeroManifold};
    use crate::rational;
    use std::collections::BTreeMap;

    fn pm() -> ZeroManifold {
        ZeroManifold::new(vec![Sign::Plus, Sign::Minus])
    }

    fn cap() -> Bordism {
        let mut arcs = BTreeMap::new();
        arcs.insert(BoundaryPoint::tgt(1), BoundaryPoint::tgt(0));
        Bordism::new(ZeroManifold::empty(), pm(), arcs, 0).unwrap()
    }

    fn cup() -> Bordism {
        let mut arcs = BTreeMap::new();
        arcs.insert(BoundaryPoint::src(0), BoundaryPoint::src(1));
        Bordism::new(pm(), ZeroManifold::empty(), arcs, 0).unwrap()
    }

    fn u_turn() -> Bordism {
        let mut arcs = BTreeMap::new();
        arcs.insert(BoundaryPoint::src(0), BoundaryPoint::src(1));
        arcs.insert(BoundaryPoint::tgt(1), BoundaryPoint::tgt(0));
        Bordism::new(pm(), pm(), arcs, 0).unwrap()
    }

    #[test]
    fn kappa_coefficients() {
        assert_eq!(kappa_coefficient(0), rational(1, 1));
        assert_eq!(kappa_coefficient(1), rational(-1, 2));
        assert_eq!(kappa_coefficient(2), rational(1, 12));
    }

    #[test]
    fn alpha_fixtures() {
        let cap_cup = Chain::from_morphisms(vec![cap(), cup()]).unwrap();
        assert_eq!(alpha(&cap_cup).unwrap(), 1);

        let id = Bordism::identity(&pm());
        let cylinders = Chain::from_morphisms(vec![id.clone(), id]).unwrap();
        assert_eq!(alpha(&cylinders).unwrap(), 0);

        let uu = Chain::from_morphisms(vec![u_turn(), u_turn()]).unwrap();
        assert_eq!(alpha(&uu).unwrap(), 1);
    }

    #[test]
    fn alpha_rejects_non_reduced() {
        let chain =
            Chain::from_morphisms(vec![cap().with_circles(1), cup()]).unwrap();
        assert_eq!(alpha(&chain), Err(Error::NotReduced(1)));
    }

    #[test]
    fn beta_hat_fixtures() {
        assert_eq!(beta_hat(&Bordism::identity(&pm())), 0);
        let circle = cap().compose(&cup()).unwrap();
        assert_eq!(beta_hat(&circle), 1);
    }

    #[test]
    fn circle_config_fixtures() {
        let chain = Chain::from_morphisms(vec![cap(), cup()]).unwrap();
        let trace = &chain.trace().circles[0];
        let config = circle_config(trace, &[1]).unwrap();
        assert_eq!(config.word(), &[0]);
        assert_eq!(circle_config(trace, &[1, 2]), Err(Error::MissesWall(2)));
    }

    #[test]
    fn gamma0_fixture() {
        let chain = Chain::from_morphisms(vec![cap(), cup()]).unwrap();
        assert_eq!(gamma(0, &chain).unwrap(), rational(1, 1));
    }

    #[test]
    fn gamma0_equals_alpha_on_uu_loop() {
        // Close up the U-turn square into a 2-chain with empty endpoints.
        let chain = Chain::from_morphisms(vec![cap(), cup()]).unwrap();
        assert_eq!(
            gamma(0, &chain).unwrap(),
            rational(alpha(&chain).unwrap(), 1)
        );
    }

    #[test]
    fn gamma1_fixture() {
        // A 4-chain whose single circle realizes the configuration
        // (0,0,1,2,2,1) with reduced sign -1/4, so gamma_1 = 1/8.
        let chain: Chain = serde_json::from_str(
            r#"{
              "objects": [[], [-1,1,1,-1], [1,-1,1,-1], [1,-1,1,-1], []],
              "morphisms": [
                {"source": [], "target": [-1,1,1,-1],
                 "arcs": [[["tgt",0],["tgt",2]], [["tgt",3],["tgt",1]]],
                 "circles": 0},
                {"source": [-1,1,1,-1], "target": [1,-1,1,-1],
                 "arcs": [[["src",1],["tgt",0]], [["src",2],["src",3]],
                          [["tgt",1],["src",0]], [["tgt",3],["tgt",2]]],
                 "circles": 0},
                {"source": [1,-1,1,-1], "target": [1,-1,1,-1],
                 "arcs": [[["src",0],["tgt",0]], [["src",2],["src",1]],
                          [["tgt",1],["tgt",2]], [["tgt",3],["src",3]]],
                 "circles": 0},
                {"source": [1,-1,1,-1], "target": [],
                 "arcs": [[["src",0],["src",1]], [["src",2],["src",3]]],
                 "circles": 0}
              ]
            }"#,
        )
        .unwrap();
        let (total, details) = gamma_with_details(1, &chain).unwrap();
        assert_eq!(total, rational(1, 8));
        assert_eq!(details.len(), 1);
        let (_, word, sign) = &details[0];
        let canon: Vec<usize> = (0..word.len())
            .map(|r| {
                let mut w = word.clone();
                w.rotate_left(r);
                w
            })
            .min()
            .unwrap();
        assert_eq!(canon, vec![0, 0, 1, 2, 2, 1]);
        assert_eq!(*sign, rational(-1, 4));
    }

    #[test]
    fn gamma_on_non_empty_endpoints_counts_closed_circles_only() {
        // The glued U-turns close up into one circle; the endpoints are
        // irrelevant because only closed components are traced.
        let uu = Chain::from_morphisms(vec![u_turn(), u_turn()]).unwrap();
        assert_eq!(gamma(0, &uu).unwrap(), rational(1, 1));
    }

    #[test]
    fn gamma_rejects_bad_chains() {
        let chain = Chain::from_morphisms(vec![cap(), cup()]).unwrap();
        assert_eq!(gamma(1, &chain), Err(Error::ChainLength { expected: 4, got: 2 }));
    }
}
