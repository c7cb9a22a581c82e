//! Composable chains of bordisms (simplices of the nerve) and the global
//! trace of the glued 1-manifold.

use std::collections::BTreeMap;

use crate::bordism::{Bordism, BoundaryPoint, End, Sign, ZeroManifold};
use crate::{Error, Result};

/// Whether inner faces compose in the full or the reduced category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceMode {
    Full,
    Reduced,
}

/// A composable sequence of bordisms together with its objects.
///
/// `objects` has length `n + 1` and `morphisms[i]` runs from `objects[i]`
/// to `objects[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    objects: Vec<ZeroManifold>,
    morphisms: Vec<Bordism>,
}

/// One crossing of a circle through an interior wall of a chain.
///
/// `sign` is `Plus` when the circle travels rightward (through a positive
/// point of the wall) and `Minus` when it travels leftward.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub level: usize,
    pub point: usize,
    pub sign: Sign,
}

/// A circle component of a glued chain, as its cyclic sequence of wall
/// crossings in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleTrace {
    pub crossings: Vec<Crossing>,
}

/// A component of a glued chain that reaches the outer boundary,
/// labelled with the interior wall points it visits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcComponent {
    pub wall_points: Vec<Crossing>,
}

/// The result of tracing a chain: open components and circles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTrace {
    pub arc_components: Vec<ArcComponent>,
    pub circles: Vec<CircleTrace>,
}

/// An arc instance inside a chain: the domain point of an arc of
/// `morphisms[morphism]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct ArcId {
    morphism: usize,
    from: BoundaryPoint,
}

impl Chain {
    pub fn new(objects: Vec<ZeroManifold>, morphisms: Vec<Bordism>) -> Result<Self> {
        if objects.len() != morphisms.len() + 1 {
            return Err(Error::MalformedChain(format!(
                "{} objects with {} morphisms",
                objects.len(),
                morphisms.len()
            )));
        }
        for (i, w) in morphisms.iter().enumerate() {
            if w.source() != &objects[i] || w.target() != &objects[i + 1] {
                return Err(Error::MalformedChain(format!(
                    "morphism {i} does not match its adjacent objects"
                )));
            }
        }
        if let Some(first) = objects.first() {
            let degree = first.degree();
            if objects.iter().any(|m| m.degree() != degree) {
                return Err(Error::MalformedChain(
                    "objects do not share a common degree".into(),
                ));
            }
        }
        Ok(Chain { objects, morphisms })
    }

    /// The 0-chain on a single object.
    pub fn point(object: ZeroManifold) -> Self {
        Chain { objects: vec![object], morphisms: Vec::new() }
    }

    pub fn from_morphisms(morphisms: Vec<Bordism>) -> Result<Self> {
        let mut objects = Vec::with_capacity(morphisms.len() + 1);
        match morphisms.first() {
            Some(w) => objects.push(w.source().clone()),
            None => {
                return Err(Error::MalformedChain(
                    "cannot infer objects of an empty chain".into(),
                ))
            }
        }
        for w in &morphisms {
            objects.push(w.target().clone());
        }
        Chain::new(objects, morphisms)
    }

    pub fn objects(&self) -> &[ZeroManifold] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Bordism] {
        &self.morphisms
    }

    /// Number of morphisms (the simplicial dimension).
    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn has_empty_endpoints(&self) -> bool {
        self.objects.first().is_some_and(|m| m.is_empty())
            && self.objects.last().is_some_and(|m| m.is_empty())
    }

    /// Where the arc of `morphisms[i]` starting at `from` ends, as a step
    /// outcome: either a wall crossing continuing into a neighbouring
    /// morphism, or the outer boundary.
    fn step(&self, id: ArcId) -> StepOutcome {
        let to = self.morphisms[id.morphism].arc(id.from);
        match to.end {
            End::Target => {
                let level = id.morphism + 1;
                if level == self.len() {
                    StepOutcome::Boundary
                } else {
                    StepOutcome::Wall {
                        crossing: Crossing { level, point: to.index, sign: Sign::Plus },
                        next: ArcId {
                            morphism: id.morphism + 1,
                            from: BoundaryPoint::src(to.index),
                        },
                    }
                }
            }
            End::Source => {
                let level = id.morphism;
                if level == 0 {
                    StepOutcome::Boundary
                } else {
                    StepOutcome::Wall {
                        crossing: Crossing { level, point: to.index, sign: Sign::Minus },
                        next: ArcId {
                            morphism: id.morphism - 1,
                            from: BoundaryPoint::tgt(to.index),
                        },
                    }
                }
            }
        }
    }

    /// Traces the glued 1-manifold of the chain, ignoring stored circle
    /// counts: only arc structure is followed.
    ///
    /// Components reaching `M_0 ⊔ M_n` become [`ArcComponent`]s; closed
    /// components become [`CircleTrace`]s whose crossing order follows arc
    /// orientation.
    pub fn trace(&self) -> ChainTrace {
        let n = self.len();
        let mut visited: std::collections::BTreeSet<ArcId> = Default::default();
        let mut arc_components = Vec::new();
        let mut circles = Vec::new();

        // Open components start at the outer boundary: domain points of the
        // first morphism lying in M_0, and of the last morphism lying in M_n.
        let mut starts: Vec<ArcId> = Vec::new();
        if n > 0 {
            for (&from, _) in self.morphisms[0].arcs() {
                if from.end == End::Source {
                    starts.push(ArcId { morphism: 0, from });
                }
            }
            for (&from, _) in self.morphisms[n - 1].arcs() {
                if from.end == End::Target {
                    starts.push(ArcId { morphism: n - 1, from });
                }
            }
        }
        for start in starts {
            let mut wall_points = Vec::new();
            let mut cur = start;
            loop {
                visited.insert(cur);
                match self.step(cur) {
                    StepOutcome::Boundary => break,
                    StepOutcome::Wall { crossing, next } => {
                        wall_points.push(crossing);
                        cur = next;
                    }
                }
            }
            arc_components.push(ArcComponent { wall_points });
        }

        // Everything not reached from the boundary lies on a circle.
        for i in 0..n {
            let ids: Vec<ArcId> = self.morphisms[i]
                .arcs()
                .keys()
                .map(|&from| ArcId { morphism: i, from })
                .collect();
            for start in ids {
                if visited.contains(&start) {
                    continue;
                }
                let mut crossings = Vec::new();
                let mut cur = start;
                loop {
                    visited.insert(cur);
                    match self.step(cur) {
                        StepOutcome::Boundary => {
                            unreachable!("circle orbit reached the outer boundary")
                        }
                        StepOutcome::Wall { crossing, next } => {
                            crossings.push(crossing);
                            cur = next;
                        }
                    }
                    if cur == start {
                        break;
                    }
                }
                circles.push(CircleTrace { crossings });
            }
        }

        ChainTrace { arc_components, circles }
    }

    /// Deletes every component meeting the outer boundary and zeroes all
    /// circle counts, re-indexing the surviving points of each object in
    /// order. Returns the normalized chain together with the per-object
    /// point maps (old index to new index, `None` when deleted).
    pub fn cut_normalize(&self) -> (Chain, Vec<Vec<Option<usize>>>) {
        let n = self.len();
        if n == 0 {
            let maps = vec![vec![None; self.objects[0].len()]];
            return (Chain::point(ZeroManifold::empty()), maps);
        }
        // Keep exactly the interior wall points lying on circles.
        let mut keep: Vec<Vec<bool>> = self.objects.iter().map(|m| vec![false; m.len()]).collect();
        let trace = self.trace();
        for circle in &trace.circles {
            for c in &circle.crossings {
                keep[c.level][c.point] = true;
            }
        }

        let mut maps: Vec<Vec<Option<usize>>> = Vec::with_capacity(n + 1);
        let mut objects: Vec<ZeroManifold> = Vec::with_capacity(n + 1);
        for (level, object) in self.objects.iter().enumerate() {
            let mut map = vec![None; object.len()];
            let mut signs = Vec::new();
            for (i, keep_point) in keep[level].iter().enumerate() {
                if *keep_point {
                    map[i] = Some(signs.len());
                    signs.push(object.sign(i));
                }
            }
            maps.push(map);
            objects.push(ZeroManifold::new(signs));
        }

        let mut morphisms = Vec::with_capacity(n);
        for (i, w) in self.morphisms.iter().enumerate() {
            let remap = |p: BoundaryPoint, level: usize| -> Option<BoundaryPoint> {
                maps[level][p.index].map(|new| BoundaryPoint { end: p.end, index: new })
            };
            let mut arcs = BTreeMap::new();
            for (&from, &to) in w.arcs() {
                let from_level = if from.end == End::Source { i } else { i + 1 };
                let to_level = if to.end == End::Source { i } else { i + 1 };
                if let (Some(f), Some(t)) = (remap(from, from_level), remap(to, to_level)) {
                    arcs.insert(f, t);
                }
            }
            morphisms.push(
                Bordism::new(objects[i].clone(), objects[i + 1].clone(), arcs, 0)
                    .expect("restriction to circle components is a bordism"),
            );
        }
        (
            Chain::new(objects, morphisms).expect("restricted chain is well-formed"),
            maps,
        )
    }

    /// The `i`-th simplicial face: drop an outer morphism or compose an
    /// inner pair (in the category selected by `mode`).
    pub fn face(&self, i: usize, mode: FaceMode) -> Result<Chain> {
        let n = self.len();
        if i > n || n == 0 {
            return Err(Error::IndexOutOfRange { index: i, limit: n });
        }
        let mut objects = self.objects.clone();
        let mut morphisms = self.morphisms.clone();
        if i == 0 {
            objects.remove(0);
            morphisms.remove(0);
        } else if i == n {
            objects.pop();
            morphisms.pop();
        } else {
            let glued = match mode {
                FaceMode::Full => morphisms[i - 1].compose(&morphisms[i])?,
                FaceMode::Reduced => morphisms[i - 1].compose_reduced(&morphisms[i])?,
            };
            morphisms[i - 1] = glued;
            morphisms.remove(i);
            objects.remove(i);
        }
        Chain::new(objects, morphisms)
    }

    /// The `i`-th degeneracy: insert an identity cylinder at `objects[i]`.
    pub fn degeneracy(&self, i: usize) -> Result<Chain> {
        let n = self.len();
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, limit: n });
        }
        let mut objects = self.objects.clone();
        let mut morphisms = self.morphisms.clone();
        objects.insert(i, objects[i].clone());
        morphisms.insert(i, Bordism::identity(&objects[i]));
        Chain::new(objects, morphisms)
    }

    /// Levelwise disjoint union of two chains of the same length.
    pub fn disjoint_union(&self, other: &Chain) -> Result<Chain> {
        if self.len() != other.len() {
            return Err(Error::ChainLength { expected: self.len(), got: other.len() });
        }
        let objects = self
            .objects
            .iter()
            .zip(&other.objects)
            .map(|(a, b)| a.disjoint_union(b))
            .collect();
        let morphisms = self
            .morphisms
            .iter()
            .zip(&other.morphisms)
            .map(|(a, b)| a.disjoint_union(b))
            .collect();
        Chain::new(objects, morphisms)
    }

    /// Relabels the points of `objects[level]` by the bijection `perm`
    /// (old index to new index), conjugating the adjacent morphisms.
    pub fn permute_object(&self, level: usize, perm: &[usize]) -> Result<Chain> {
        if level >= self.objects.len() {
            return Err(Error::IndexOutOfRange { index: level, limit: self.objects.len() });
        }
        let object = &self.objects[level];
        if perm.len() != object.len() {
            return Err(Error::Infeasible("permutation length mismatch".into()));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::Infeasible("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut signs = vec![Sign::Plus; object.len()];
        for (old, &new) in perm.iter().enumerate() {
            signs[new] = object.sign(old);
        }
        let new_object = ZeroManifold::new(signs);

        let mut objects = self.objects.clone();
        objects[level] = new_object.clone();
        let mut morphisms = self.morphisms.clone();
        let remap = |w: &Bordism, end: End| -> Bordism {
            let arcs = w
                .arcs()
                .iter()
                .map(|(&from, &to)| {
                    let f = if from.end == end {
                        BoundaryPoint { end: from.end, index: perm[from.index] }
                    } else {
                        from
                    };
                    let t = if to.end == end {
                        BoundaryPoint { end: to.end, index: perm[to.index] }
                    } else {
                        to
                    };
                    (f, t)
                })
                .collect();
            let (source, target) = match end {
                End::Source => (new_object.clone(), w.target().clone()),
                End::Target => (w.source().clone(), new_object.clone()),
            };
            Bordism::new(source, target, arcs, w.circles())
                .expect("conjugation preserves the arc bijection")
        };
        if level > 0 {
            morphisms[level - 1] = remap(&morphisms[level - 1], End::Target);
        }
        if level < morphisms.len() {
            morphisms[level] = remap(&morphisms[level], End::Source);
        }
        Chain::new(objects, morphisms)
    }
}

enum StepOutcome {
    Wall { crossing: Crossing, next: ArcId },
    Boundary,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bordism::Sign::{Minus, Plus};

    fn zm(signs: &[Sign]) -> ZeroManifold {
        ZeroManifold::new(signs.to_vec())
    }

    fn cap() -> Bordism {
        let mut arcs = BTreeMap::new();
        arcs.insert(BoundaryPoint::tgt(1), BoundaryPoint::tgt(0));
        Bordism::new(ZeroManifold::empty(), zm(&[Plus, Minus]), arcs, 0).unwrap()
    }

    fn cup() -> Bordism {
        let mut arcs = BTreeMap::new();
        arcs.insert(BoundaryPoint::src(0), BoundaryPoint::src(1));
        Bordism::new(zm(&[Plus, Minus]), ZeroManifold::empty(), arcs, 0).unwrap()
    }

    fn u_turn() -> Bordism {
        let mut arcs = BTreeMap::new();
        arcs.insert(BoundaryPoint::src(0), BoundaryPoint::src(1));
        arcs.insert(BoundaryPoint::tgt(1), BoundaryPoint::tgt(0));
        Bordism::new(zm(&[Plus, Minus]), zm(&[Plus, Minus]), arcs, 0).unwrap()
    }

    #[test]
    fn cap_cup_trace_is_one_minimal_circle() {
        let chain = Chain::from_morphisms(vec![cap(), cup()]).unwrap();
        let trace = chain.trace();
        assert!(trace.arc_components.is_empty());
        assert_eq!(trace.circles.len(), 1);
        let crossings = &trace.circles[0].crossings;
        assert_eq!(crossings.len(), 2);
        let signs: Vec<Sign> = crossings.iter().map(|c| c.sign).collect();
        assert!(signs.contains(&Plus) && signs.contains(&Minus));
        assert!(crossings.iter().all(|c| c.level == 1));
    }

    #[test]
    fn identity_chain_trace_is_all_arcs() {
        let m = zm(&[Plus, Minus]);
        let id = Bordism::identity(&m);
        let chain = Chain::from_morphisms(vec![id.clone(), id]).unwrap();
        let trace = chain.trace();
        assert_eq!(trace.arc_components.len(), 2);
        assert!(trace.circles.is_empty());
    }

    #[test]
    fn u_turn_chain_has_circle_and_arcs() {
        let chain = Chain::from_morphisms(vec![u_turn(), u_turn()]).unwrap();
        let trace = chain.trace();
        assert_eq!(trace.arc_components.len(), 2);
        assert_eq!(trace.circles.len(), 1);
        assert_eq!(trace.circles[0].crossings.len(), 2);
        assert!(trace.circles[0].crossings.iter().all(|c| c.level == 1));
    }

    #[test]
    fn cut_normalize_deletes_end_touching_arcs() {
        let m = zm(&[Plus, Minus]);
        let id = Bordism::identity(&m);
        let chain = Chain::from_morphisms(vec![id.clone(), id]).unwrap();
        let (normalized, _) = chain.cut_normalize();
        assert!(normalized.objects().iter().all(|m| m.is_empty()));
        assert!(normalized.morphisms().iter().all(|w| w.arcs().is_empty()));
    }

    #[test]
    fn cut_normalize_keeps_circles_and_is_idempotent() {
        let chain = Chain::from_morphisms(vec![cap(), cup()]).unwrap();
        let (normalized, _) = chain.cut_normalize();
        assert_eq!(normalized, chain);
        let (twice, _) = normalized.cut_normalize();
        assert_eq!(twice, normalized);
    }

    #[test]
    fn faces_of_cap_cup() {
        let chain = Chain::from_morphisms(vec![cap(), cup()]).unwrap();
        let full = chain.face(1, FaceMode::Full).unwrap();
        assert_eq!(full.morphisms()[0].circles(), 1);
        assert!(full.morphisms()[0].arcs().is_empty());
        let reduced = chain.face(1, FaceMode::Reduced).unwrap();
        assert_eq!(reduced.morphisms()[0].circles(), 0);
    }

    #[test]
    fn degeneracy_then_face_is_identity() {
        let chain = Chain::from_morphisms(vec![u_turn(), u_turn()]).unwrap();
        for i in 0..=chain.len() {
            let degenerate = chain.degeneracy(i).unwrap();
            assert_eq!(degenerate.face(i, FaceMode::Full).unwrap(), chain);
            assert_eq!(degenerate.face(i + 1, FaceMode::Full).unwrap(), chain);
        }
    }

    #[test]
    fn trace_partitions_wall_points() {
        let chain = Chain::from_morphisms(vec![u_turn(), u_turn()]).unwrap();
        let trace = chain.trace();
        let mut seen = vec![0usize; chain.objects()[1].len()];
        for component in &trace.arc_components {
            for c in &component.wall_points {
                seen[c.point] += 1;
            }
        }
        for circle in &trace.circles {
            for c in &circle.crossings {
                seen[c.point] += 1;
            }
        }
        assert!(seen.iter().all(|&count| count == 1));
    }
}
