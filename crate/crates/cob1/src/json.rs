//! JSON encodings of the domain types, as consumed by the CLI harness.
//!
//! * `ZeroManifold`: array of `1` / `-1`
//! * `BoundaryPoint`: `["src" | "tgt", index]`
//! * `Bordism`: `{"source", "target", "arcs": [[from, to], ...], "circles"}`
//!   with arcs sorted by domain point
//! * `Chain`: `{"objects", "morphisms"}`
//! * `CyclicConfiguration`: `{"word": [...]}`
//! * `CyclicMap`: `{"n", "m", "values"}`
//! * rationals: the string `"n/d"`

use std::collections::BTreeMap;
use std::str::FromStr;

use num::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bordism::{Bordism, BoundaryPoint, End, Sign, ZeroManifold};
use crate::chain::Chain;
use crate::cyclic::CyclicMap;
use crate::cyclic_sign::CyclicConfiguration;
use crate::Rational;

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match i64::deserialize(deserializer)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(D::Error::custom(format!("sign must be 1 or -1, got {other}"))),
        }
    }
}

impl Serialize for ZeroManifold {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.signs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ZeroManifold {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(ZeroManifold::new(Vec::<Sign>::deserialize(deserializer)?))
    }
}

impl Serialize for BoundaryPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let end = match self.end {
            End::Source => "src",
            End::Target => "tgt",
        };
        (end, self.index).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BoundaryPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (end, index) = <(String, usize)>::deserialize(deserializer)?;
        let end = match end.as_str() {
            "src" => End::Source,
            "tgt" => End::Target,
            other => return Err(D::Error::custom(format!("unknown end {other:?}"))),
        };
        Ok(BoundaryPoint { end, index })
    }
}

#[derive(Serialize, Deserialize)]
struct BordismRepr {
    source: ZeroManifold,
    target: ZeroManifold,
    arcs: Vec<(BoundaryPoint, BoundaryPoint)>,
    circles: usize,
}

impl Serialize for Bordism {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BordismRepr {
            source: self.source().clone(),
            target: self.target().clone(),
            // BTreeMap iteration is already sorted by domain point.
            arcs: self.arcs().iter().map(|(&k, &v)| (k, v)).collect(),
            circles: self.circles(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Bordism {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = BordismRepr::deserialize(deserializer)?;
        let arcs: BTreeMap<BoundaryPoint, BoundaryPoint> = repr.arcs.into_iter().collect();
        Bordism::new(repr.source, repr.target, arcs, repr.circles)
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct ChainRepr {
    objects: Vec<ZeroManifold>,
    morphisms: Vec<Bordism>,
}

impl Serialize for Chain {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ChainRepr {
            objects: self.objects().to_vec(),
            morphisms: self.morphisms().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Chain {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ChainRepr::deserialize(deserializer)?;
        Chain::new(repr.objects, repr.morphisms).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct ConfigRepr {
    word: Vec<usize>,
}

impl Serialize for CyclicConfiguration {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ConfigRepr { word: self.word().to_vec() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CyclicConfiguration {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ConfigRepr::deserialize(deserializer)?;
        CyclicConfiguration::new(repr.word).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct CyclicMapRepr {
    n: usize,
    m: usize,
    values: Vec<i64>,
}

impl Serialize for CyclicMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CyclicMapRepr {
            n: self.source(),
            m: self.target(),
            values: self.values().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CyclicMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CyclicMapRepr::deserialize(deserializer)?;
        CyclicMap::new(repr.n, repr.m, repr.values).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Renders a rational as the canonical string `"n/d"` (or just `"n"` for
/// integers).
pub fn rational_to_string(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `"n/d"` or `"n"` into a rational in lowest terms.
pub fn rational_from_string(text: &str) -> Result<Rational, String> {
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let numer = BigInt::from_str(numer).map_err(|e| e.to_string())?;
    let denom = BigInt::from_str(denom).map_err(|e| e.to_string())?;
    if denom == BigInt::from(0) {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;
    use proptest::prelude::*;

    #[test]
    fn bordism_round_trip_and_sorted_arcs() {
        let mut arcs = BTreeMap::new();
        arcs.insert(BoundaryPoint::src(0), BoundaryPoint::src(1));
        arcs.insert(BoundaryPoint::tgt(1), BoundaryPoint::tgt(0));
        let m = ZeroManifold::new(vec![Sign::Plus, Sign::Minus]);
        let u = Bordism::new(m.clone(), m, arcs, 2).unwrap();
        let text = serde_json::to_string(&u).unwrap();
        assert_eq!(
            text,
            r#"{"source":[1,-1],"target":[1,-1],"arcs":[[["src",0],["src",1]],[["tgt",1],["tgt",0]]],"circles":2}"#
        );
        let back: Bordism = serde_json::from_str(&text).unwrap();
        assert_eq!(back, u);
    }

    #[test]
    fn invalid_bordism_json_is_rejected() {
        let text = r#"{"source":[1,-1],"target":[],"arcs":[],"circles":0}"#;
        assert!(serde_json::from_str::<Bordism>(text).is_err());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&rational(-1, 4)), "-1/4");
        assert_eq!(rational_to_string(&rational(3, 1)), "3");
        assert_eq!(rational_from_string("-1/4").unwrap(), rational(-1, 4));
        assert_eq!(rational_from_string("7").unwrap(), rational(7, 1));
        assert!(rational_from_string("1/0").is_err());
    }

    proptest! {
        #[test]
        fn config_json_round_trip(raw in proptest::collection::vec(0usize..4, 1..12)) {
            // Make every label below the maximum present.
            let mut word = raw;
            let top = *word.iter().max().unwrap();
            for label in 0..top {
                if !word.contains(&label) {
                    word.push(label);
                }
            }
            let config = CyclicConfiguration::new(word).unwrap();
            let text = serde_json::to_string(&config).unwrap();
            let back: CyclicConfiguration = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, config);
        }

        #[test]
        fn cyclic_map_json_round_trip(n in 1usize..6, m in 1usize..6, seedling in 0usize..1000) {
            // Derive a monotone value vector from the seedling.
            let mut values = Vec::with_capacity(n);
            let mut acc = (seedling % m) as i64;
            let mut s = seedling;
            for _ in 0..n {
                values.push(acc);
                s /= 3;
                acc += (s % 2) as i64;
            }
            if *values.last().unwrap() <= values[0] + m as i64 {
                let map = CyclicMap::new(n, m, values).unwrap();
                let text = serde_json::to_string(&map).unwrap();
                let back: CyclicMap = serde_json::from_str(&text).unwrap();
                prop_assert_eq!(back, map);
            }
        }
    }
}
