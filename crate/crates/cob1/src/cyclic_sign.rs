//! Cyclic configurations and the sign, averaged-sign, and reduced-sign
//! cocycle primitives.
//!
//! A configuration is a tuple `(A_0, ..., A_n)` of disjoint non-empty
//! finite subsets of an oriented circle, recorded as a cyclic word of
//! labels; only the cyclic order of the points matters.

use itertools::Itertools;
use num::{BigInt, One, Zero};

use crate::{Error, Rational, Result};

/// A cyclic word of labels `0..=top_label`, stored as its
/// lexicographically least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicConfiguration {
    word: Vec<usize>,
    top_label: usize,
}

impl CyclicConfiguration {
    /// Builds a configuration from a raw cyclic word, checking that every
    /// label `0..=max` occurs and canonicalizing the rotation.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        let top_label = *word.iter().max().unwrap();
        let mut present = vec![false; top_label + 1];
        for &label in &word {
            present[label] = true;
        }
        if let Some(missing) = present.iter().position(|&p| !p) {
            return Err(Error::EmptyLabelClass(missing));
        }
        Ok(CyclicConfiguration { word: least_rotation(word), top_label })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The largest label; the configuration is a `top_label`-simplex.
    pub fn top_label(&self) -> usize {
        self.top_label
    }

    pub fn class_count(&self) -> usize {
        self.top_label + 1
    }

    /// Positions of the points carrying each label, in word order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.top_label + 1];
        for (pos, &label) in self.word.iter().enumerate() {
            classes[label].push(pos);
        }
        classes
    }

    /// The averaged sign cocycle over all tuples of the label classes.
    pub fn averaged_sign(&self) -> Result<Rational> {
        let classes = self.classes();
        if self.class_count() % 2 == 0 {
            return Err(Error::BadLabelCount {
                expected: self.class_count() + 1,
                got: self.class_count(),
            });
        }
        let mut sum = BigInt::zero();
        let mut count = BigInt::one();
        for class in &classes {
            count *= class.len();
        }
        for tuple in classes.iter().map(|c| c.iter().copied()).multi_cartesian_product() {
            sum += sign_tuple(self.len(), &tuple)?;
        }
        Ok(Rational::new(sum, count))
    }

    /// Whether the points at `a` and `b` (carrying distinct labels) are
    /// neighbours: the positively oriented closed arc from the point of the
    /// smaller label to the point of the larger label meets every label
    /// class at most once.
    pub fn neighbours(&self, a: usize, b: usize) -> Result<bool> {
        if a == b {
            return Err(Error::IdenticalPoints);
        }
        for &p in &[a, b] {
            if p >= self.len() {
                return Err(Error::PositionOutOfRange { index: p, limit: self.len() });
            }
        }
        Ok(neighbour_matrix_entry(&self.word, self.top_label + 1, a, b))
    }

    /// The reduced sign cocycle: the averaged sign restricted to tuples
    /// containing no neighboured pair.
    pub fn reduced_sign(&self) -> Result<Rational> {
        if self.class_count() % 2 == 0 {
            return Err(Error::BadLabelCount {
                expected: self.class_count() + 1,
                got: self.class_count(),
            });
        }
        let classes = self.classes();
        let mut count = BigInt::one();
        for class in &classes {
            count *= class.len();
        }
        let sum = no_neighbour_sign_sum(self.len(), &self.word, &classes)?;
        Ok(Rational::new(sum, count))
    }

    /// Whether the word splits into cyclic blocks of the form
    /// `(j, j+1, ..., top_label)`: equivalently, every point with a label
    /// below the top is immediately followed by the next label up. These
    /// are exactly the configurations pulled back from chains of injective
    /// cyclic maps, where each block collects the strands over one image
    /// point.
    pub fn is_stacked(&self) -> bool {
        self.word.iter().enumerate().all(|(pos, &label)| {
            label == self.top_label || self.word[(pos + 1) % self.word.len()] == label + 1
        })
    }

    /// The `i`-th face: delete the points labelled `i` and close the gap
    /// in the labels.
    pub fn face(&self, i: usize) -> Result<CyclicConfiguration> {
        if i > self.top_label {
            return Err(Error::LabelOutOfRange(i));
        }
        if self.top_label == 0 {
            return Err(Error::EmptyWord);
        }
        let word: Vec<usize> = self
            .word
            .iter()
            .filter(|&&label| label != i)
            .map(|&label| if label > i { label - 1 } else { label })
            .collect();
        CyclicConfiguration::new(word)
    }

    /// The `i`-th degeneracy: after each point labelled `i`, insert a copy
    /// labelled `i + 1` immediately following in the positive direction.
    pub fn degeneracy(&self, i: usize) -> Result<CyclicConfiguration> {
        if i > self.top_label {
            return Err(Error::LabelOutOfRange(i));
        }
        let mut word = Vec::with_capacity(self.word.len() * 2);
        for &label in &self.word {
            let shifted = if label > i { label + 1 } else { label };
            word.push(shifted);
            if label == i {
                word.push(i + 1);
            }
        }
        CyclicConfiguration::new(word)
    }
}

/// The lexicographically least rotation of a word (Booth's algorithm would
/// be overkill at these sizes).
fn least_rotation(word: Vec<usize>) -> Vec<usize> {
    let n = word.len();
    let mut best = 0;
    for start in 1..n {
        for k in 0..n {
            let a = word[(start + k) % n];
            let b = word[(best + k) % n];
            if a < b {
                best = start;
                break;
            }
            if a > b {
                break;
            }
        }
    }
    (0..n).map(|k| word[(best + k) % n]).collect()
}

/// Sign of an odd tuple of distinct positions on a cyclic word of length
/// `len`: the sign of any permutation bringing the tuple into cyclic order.
///
/// Computed by anchoring at the first entry and sorting the rest by cyclic
/// distance from it; cyclic rotations of an odd tuple are even, so the
/// anchor does not matter.
pub fn sign_tuple(len: usize, positions: &[usize]) -> Result<i64> {
    if positions.len() % 2 == 0 {
        return Err(Error::EvenTuple);
    }
    for &p in positions {
        if p >= len {
            return Err(Error::PositionOutOfRange { index: p, limit: len });
        }
    }
    let anchor = positions[0];
    let distances: Vec<usize> = positions[1..]
        .iter()
        .map(|&p| (p + len - anchor) % len)
        .collect();
    let mut sorted = distances.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != distances.len() || distances.contains(&0) {
        return Err(Error::DuplicatePositions);
    }
    let mut inversions = 0usize;
    for i in 0..distances.len() {
        for j in (i + 1)..distances.len() {
            if distances[i] > distances[j] {
                inversions += 1;
            }
        }
    }
    Ok(if inversions % 2 == 0 { 1 } else { -1 })
}

/// Reduced sign over explicit classes of positions on a cyclic word of
/// length `len`; evaluates to 0 whenever a class is empty (the relaxed
/// entry point used by the bordism cocycles).
pub fn reduced_sign_classes(len: usize, word: &[usize], classes: &[Vec<usize>]) -> Result<Rational> {
    if classes.iter().any(|c| c.is_empty()) {
        return Ok(Rational::zero());
    }
    let mut count = BigInt::one();
    for class in classes {
        count *= class.len();
    }
    let sum = no_neighbour_sign_sum(len, word, classes)?;
    Ok(Rational::new(sum, count))
}

/// Unnormalized sum of `sign_tuple` over all no-neighbour tuples.
pub fn no_neighbour_sign_sum(len: usize, word: &[usize], classes: &[Vec<usize>]) -> Result<BigInt> {
    let label_count = word.iter().max().map_or(0, |&m| m + 1);
    let mut sum = BigInt::zero();
    'tuples: for tuple in classes.iter().map(|c| c.iter().copied()).multi_cartesian_product() {
        for i in 0..tuple.len() {
            for j in (i + 1)..tuple.len() {
                if neighbour_matrix_entry(word, label_count, tuple[i], tuple[j]) {
                    continue 'tuples;
                }
            }
        }
        sum += sign_tuple(len, &tuple)?;
    }
    Ok(sum)
}

/// Whether the points at positions `a` and `b` of `word` are neighbours.
/// The closed arc runs positively from the point whose label is smaller.
fn neighbour_matrix_entry(word: &[usize], label_count: usize, a: usize, b: usize) -> bool {
    let len = word.len();
    let (start, end) = if word[a] <= word[b] { (a, b) } else { (b, a) };
    let mut counts = vec![0usize; label_count];
    let mut pos = start;
    loop {
        counts[word[pos]] += 1;
        if counts[word[pos]] > 1 {
            return false;
        }
        if pos == end {
            break;
        }
        pos = (pos + 1) % len;
    }
    true
}
