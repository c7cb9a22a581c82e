//! Objects and morphisms of the combinatorial bordism category.
//!
//! An object is a closed oriented 0-manifold: an ordered list of signs.
//! A morphism `M -> N` is a bijection ("arcs") from `M+ ⊔ N-` onto
//! `M- ⊔ N+` together with a count of closed circle components.
//! Composition glues arcs along the shared middle object and counts the
//! circles that close up; the reduced category forgets circles.

use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, Result};

/// Orientation of a single point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A closed oriented 0-manifold: an ordered list of orientation signs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZeroManifold {
    signs: Vec<Sign>,
}

impl ZeroManifold {
    pub fn new(signs: Vec<Sign>) -> Self {
        ZeroManifold { signs }
    }

    pub fn empty() -> Self {
        ZeroManifold { signs: Vec::new() }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign(&self, index: usize) -> Sign {
        self.signs[index]
    }

    /// Indices of positively oriented points.
    pub fn plus_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices_with(Sign::Plus)
    }

    /// Indices of negatively oriented points.
    pub fn minus_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices_with(Sign::Minus)
    }

    fn indices_with(&self, sign: Sign) -> impl Iterator<Item = usize> + '_ {
        self.signs
            .iter()
            .enumerate()
            .filter_map(move |(i, &s)| (s == sign).then_some(i))
    }

    /// Signed sum of all points.
    pub fn degree(&self) -> i64 {
        self.signs.iter().map(|s| s.value()).sum()
    }

    /// Concatenation, with `other`'s points placed after `self`'s.
    pub fn disjoint_union(&self, other: &ZeroManifold) -> ZeroManifold {
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        ZeroManifold { signs }
    }
}

/// Which end of a bordism a boundary point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Source,
    Target,
}

/// A boundary point of a bordism, addressed by end and index into the
/// corresponding object's sign list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryPoint {
    pub end: End,
    pub index: usize,
}

impl BoundaryPoint {
    pub fn src(index: usize) -> Self {
        BoundaryPoint { end: End::Source, index }
    }

    pub fn tgt(index: usize) -> Self {
        BoundaryPoint { end: End::Target, index }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.end {
            End::Source => write!(f, "src:{}", self.index),
            End::Target => write!(f, "tgt:{}", self.index),
        }
    }
}

/// A morphism of the bordism category: an arc bijection plus a circle count.
///
/// The arc map runs from `source+ ⊔ target-` onto `source- ⊔ target+`;
/// each arc is oriented from its domain point to its codomain point.
/// A bordism is *reduced* iff `circles == 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bordism {
    source: ZeroManifold,
    target: ZeroManifold,
    arcs: BTreeMap<BoundaryPoint, BoundaryPoint>,
    circles: usize,
}

impl Bordism {
    /// Builds a bordism, checking that `arcs` is a total bijection between
    /// exactly the required domain and codomain.
    pub fn new(
        source: ZeroManifold,
        target: ZeroManifold,
        arcs: BTreeMap<BoundaryPoint, BoundaryPoint>,
        circles: usize,
    ) -> Result<Self> {
        let domain: Vec<BoundaryPoint> = source
            .plus_indices()
            .map(BoundaryPoint::src)
            .chain(target.minus_indices().map(BoundaryPoint::tgt))
            .collect();
        let codomain: Vec<BoundaryPoint> = source
            .minus_indices()
            .map(BoundaryPoint::src)
            .chain(target.plus_indices().map(BoundaryPoint::tgt))
            .collect();

        if arcs.len() != domain.len() {
            return Err(Error::InvalidBordism(format!(
                "arc map has {} entries, domain has {}",
                arcs.len(),
                domain.len()
            )));
        }
        for d in &domain {
            if !arcs.contains_key(d) {
                return Err(Error::InvalidBordism(format!("domain point {d} unmatched")));
            }
        }
        let mut seen: Vec<BoundaryPoint> = arcs.values().copied().collect();
        seen.sort();
        seen.dedup();
        if seen.len() != arcs.len() {
            return Err(Error::InvalidBordism("arc map is not injective".into()));
        }
        let mut expected = codomain;
        expected.sort();
        if seen != expected {
            return Err(Error::InvalidBordism(
                "arc map image differs from the required codomain".into(),
            ));
        }
        Ok(Bordism { source, target, arcs, circles })
    }

    /// The identity cylinder on `object`.
    pub fn identity(object: &ZeroManifold) -> Bordism {
        let mut arcs = BTreeMap::new();
        for i in object.plus_indices() {
            arcs.insert(BoundaryPoint::src(i), BoundaryPoint::tgt(i));
        }
        for j in object.minus_indices() {
            arcs.insert(BoundaryPoint::tgt(j), BoundaryPoint::src(j));
        }
        Bordism {
            source: object.clone(),
            target: object.clone(),
            arcs,
            circles: 0,
        }
    }

    pub fn source(&self) -> &ZeroManifold {
        &self.source
    }

    pub fn target(&self) -> &ZeroManifold {
        &self.target
    }

    /// Arcs sorted by domain point.
    pub fn arcs(&self) -> &BTreeMap<BoundaryPoint, BoundaryPoint> {
        &self.arcs
    }

    pub fn arc(&self, from: BoundaryPoint) -> BoundaryPoint {
        self.arcs[&from]
    }

    pub fn circles(&self) -> usize {
        self.circles
    }

    pub fn is_reduced(&self) -> bool {
        self.circles == 0
    }

    pub fn with_circles(&self, circles: usize) -> Bordism {
        let mut out = self.clone();
        out.circles = circles;
        out
    }

    /// Forgets all circle components (the quotient functor onto the
    /// reduced category).
    pub fn reduce(&self) -> Bordism {
        self.with_circles(0)
    }

    /// Glues `self` and `other` along the shared middle object.
    ///
    /// Arcs are obtained by path-following across the middle object;
    /// the circle count adds the orbits of middle points not reached by
    /// any boundary-to-boundary path.
    pub fn compose(&self, other: &Bordism) -> Result<Bordism> {
        if self.target != other.source {
            return Err(Error::ObjectMismatch);
        }
        let middle = &self.target;
        let mut visited = vec![false; middle.len()];
        let mut arcs = BTreeMap::new();

        // Starts in M+ enter through self, starts in L- enter through other.
        let starts: Vec<(bool, BoundaryPoint)> = self
            .source
            .plus_indices()
            .map(|i| (true, BoundaryPoint::src(i)))
            .chain(
                other
                    .target
                    .minus_indices()
                    .map(|j| (false, BoundaryPoint::tgt(j))),
            )
            .collect();

        for (mut in_first, start) in starts {
            let mut cur = start;
            let end = loop {
                let next = if in_first { self.arc(cur) } else { other.arc(cur) };
                match (in_first, next.end) {
                    // Landed on the middle object: cross over.
                    (true, End::Target) => {
                        visited[next.index] = true;
                        cur = BoundaryPoint::src(next.index);
                        in_first = false;
                    }
                    (false, End::Source) => {
                        visited[next.index] = true;
                        cur = BoundaryPoint::tgt(next.index);
                        in_first = true;
                    }
                    // Reached an outer boundary.
                    (true, End::Source) => break next,
                    (false, End::Target) => break next,
                }
            };
            arcs.insert(start, end);
        }

        // Remaining middle points lie on closed orbits; count the orbits.
        let mut created = 0;
        for p in 0..middle.len() {
            if visited[p] || middle.sign(p) != Sign::Plus {
                continue;
            }
            created += 1;
            // Walk the closed orbit starting rightward from p.
            let mut cur = BoundaryPoint::src(p);
            let mut in_first = false;
            loop {
                let next = if in_first { self.arc(cur) } else { other.arc(cur) };
                let idx = next.index;
                visited[idx] = true;
                if !in_first && next.end == End::Source {
                    cur = BoundaryPoint::tgt(idx);
                    in_first = true;
                } else if in_first && next.end == End::Target {
                    if idx == p {
                        break;
                    }
                    cur = BoundaryPoint::src(idx);
                    in_first = false;
                } else {
                    unreachable!("closed orbit left the middle object");
                }
            }
        }

        Ok(Bordism {
            source: self.source.clone(),
            target: other.target.clone(),
            arcs,
            circles: self.circles + other.circles + created,
        })
    }

    /// Composition in the reduced category: glue, then forget circles.
    pub fn compose_reduced(&self, other: &Bordism) -> Result<Bordism> {
        Ok(self.compose(other)?.reduce())
    }

    /// Places `other` next to `self`, shifting its indices.
    pub fn disjoint_union(&self, other: &Bordism) -> Bordism {
        let src_shift = self.source.len();
        let tgt_shift = self.target.len();
        let shift = |p: BoundaryPoint| match p.end {
            End::Source => BoundaryPoint::src(p.index + src_shift),
            End::Target => BoundaryPoint::tgt(p.index + tgt_shift),
        };
        let mut arcs = self.arcs.clone();
        for (&from, &to) in &other.arcs {
            arcs.insert(shift(from), shift(to));
        }
        Bordism {
            source: self.source.disjoint_union(&other.source),
            target: self.target.disjoint_union(&other.target),
            arcs,
            circles: self.circles + other.circles,
        }
    }
}
