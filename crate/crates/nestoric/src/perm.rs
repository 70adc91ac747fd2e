//! Permutation combinatorics: descents, alternation, pattern avoidance, and
//! B-permutations of a building set.
//!
//! A permutation `x_1, ..., x_k` of the ground set is a B-permutation when
//! for every prefix, `x_i` and the largest entry of the prefix lie in the
//! same connected component of the building set restricted to the prefix.
//! Counting the alternating ones (`x_1 > x_2 < x_3 > ...`) over all even
//! restrictions is one of the two Betti-number engines of this crate.

use crate::building::BuildingSet;
use crate::set::ElementSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermEngineError {
    #[error("building set is not connected")]
    NotConnected,
    #[error("building set is not chordal")]
    NotChordal,
}

/// A permutation in one-line notation; entries are distinct labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Wraps a one-line sequence. Panics on repeated or out-of-range labels.
    pub fn new(entries: Vec<u32>) -> Permutation {
        let mut seen = ElementSet::EMPTY;
        for &e in &entries {
            assert!(!seen.contains(e), "repeated entry {e}");
            seen = seen.with(e); // panics if e is out of 1..=64
        }
        Permutation(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The set of labels appearing in the permutation.
    pub fn support(&self) -> ElementSet {
        ElementSet::from_labels(self.0.iter().copied())
    }

    /// Positions `i` (1-based) with `x_i > x_{i+1}`.
    pub fn descent_positions(&self) -> Vec<usize> {
        (1..self.0.len())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    pub fn descent_count(&self) -> usize {
        self.descent_positions().len()
    }

    /// Down-up alternation: `x_1 > x_2 < x_3 > x_4 < ...`.
    /// Sequences of length at most 1 are alternating.
    pub fn is_alternating(&self) -> bool {
        self.0.windows(2).enumerate().all(|(j, w)| {
            if j % 2 == 0 {
                w[0] > w[1]
            } else {
                w[0] < w[1]
            }
        })
    }

    /// Whether no indices `i < j < l` satisfy `x_j < x_l < x_i`.
    pub fn avoids_312(&self) -> bool {
        let x = &self.0;
        for i in 0..x.len() {
            for j in (i + 1)..x.len() {
                for l in (j + 1)..x.len() {
                    if x[j] < x[l] && x[l] < x[i] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The B-permutation prefix condition against `b`, whose ground set must
    /// equal the support.
    pub fn is_b_permutation(&self, b: &BuildingSet) -> bool {
        assert_eq!(
            self.support(),
            b.ground(),
            "permutation must arrange the ground set"
        );
        let mut prefix = ElementSet::EMPTY;
        let mut max = 0u32;
        for &e in &self.0 {
            prefix = prefix.with(e);
            max = max.max(e);
            if !prefix_condition_holds(b, prefix, e, max) {
                return false;
            }
        }
        true
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// `x_i` and the prefix maximum lie in the same component of the restriction.
///
/// By union-closure this is equivalent to a single member inside the prefix
/// containing both; the partition-based formulation is cross-checked in debug
/// builds.
fn prefix_condition_holds(b: &BuildingSet, prefix: ElementSet, last: u32, max: u32) -> bool {
    let fast = last == max || b.same_component_within(prefix, last, max);
    debug_assert_eq!(fast, {
        let comps = b.components_within(prefix);
        comps
            .iter()
            .any(|c| c.contains(last) && c.contains(max))
    });
    fast
}

/// Shared backtracking over B-permutations of the full ground set, extending
/// prefixes by candidates in ascending label order (so any collected
/// witnesses come out in lexicographic order).
fn for_each_b_permutation<F: FnMut(&[u32])>(b: &BuildingSet, alternating_only: bool, f: &mut F) {
    let ground = b.ground();
    let mut current: Vec<u32> = Vec::with_capacity(ground.len());
    fn recurse<F: FnMut(&[u32])>(
        b: &BuildingSet,
        ground: ElementSet,
        alternating_only: bool,
        current: &mut Vec<u32>,
        prefix: ElementSet,
        max: u32,
        f: &mut F,
    ) {
        if prefix == ground {
            f(current);
            return;
        }
        for c in (ground - prefix).iter() {
            if alternating_only {
                if let Some(&last) = current.last() {
                    // Position current.len()+1 is odd when current.len() is even.
                    let descending_step = current.len() % 2 == 1;
                    if descending_step && c >= last || !descending_step && c <= last {
                        continue;
                    }
                }
            }
            let next_prefix = prefix.with(c);
            let next_max = max.max(c);
            if !prefix_condition_holds(b, next_prefix, c, next_max) {
                continue;
            }
            current.push(c);
            recurse(b, ground, alternating_only, current, next_prefix, next_max, f);
            current.pop();
        }
    }
    recurse(
        b,
        ground,
        alternating_only,
        &mut current,
        ElementSet::EMPTY,
        0,
        f,
    );
}

/// Number of alternating B-permutations of the ground set of `b`.
/// Zero immediately when the ground set has odd cardinality; 1 for the empty
/// ground set (the empty permutation).
pub fn count_alternating_b_permutations(b: &BuildingSet) -> u64 {
    if b.ground().len() % 2 == 1 {
        return 0;
    }
    let mut count = 0u64;
    for_each_b_permutation(b, true, &mut |_| count += 1);
    count
}

/// All alternating B-permutations in lexicographic order.
pub fn alternating_b_permutations(b: &BuildingSet) -> Vec<Permutation> {
    if b.ground().len() % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for_each_b_permutation(b, true, &mut |p| out.push(Permutation(p.to_vec())));
    out
}

/// All B-permutations of the ground set, in lexicographic order.
pub fn b_permutations(b: &BuildingSet) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_b_permutation(b, false, &mut |p| out.push(Permutation(p.to_vec())));
    out
}

pub fn count_b_permutations(b: &BuildingSet) -> u64 {
    let mut count = 0u64;
    for_each_b_permutation(b, false, &mut |_| count += 1);
    count
}

/// Histogram of B-permutations of a connected chordal building set by
/// descent count: entry `d` counts the B-permutations with exactly `d`
/// descents. These are the nonzero Betti numbers of the complex toric
/// variety, placed in degree `2d`.
pub fn descent_histogram_of_b_permutations(
    b: &BuildingSet,
) -> Result<Vec<u64>, PermEngineError> {
    if !b.is_connected() {
        return Err(PermEngineError::NotConnected);
    }
    if !b.is_chordal() {
        return Err(PermEngineError::NotChordal);
    }
    let n = b.ground().len();
    let mut hist = vec![0u64; n.max(1)];
    for_each_b_permutation(b, false, &mut |p| {
        let descents = (1..p.len()).filter(|&i| p[i - 1] > p[i]).count();
        hist[descents] += 1;
    });
    Ok(hist)
}

/// Number of 312-avoiding alternating permutations of `{1, ..., len}`,
/// counted by direct pattern-pruned backtracking.
pub fn count_312_avoiding_alternating(len: usize) -> u64 {
    assert!(len <= 32, "length {len} too large for enumeration");
    fn recurse(len: usize, current: &mut Vec<u32>, used: &mut Vec<bool>, count: &mut u64) {
        if current.len() == len {
            *count += 1;
            return;
        }
        'next: for c in 1..=len as u32 {
            if used[c as usize] {
                continue;
            }
            if let Some(&last) = current.last() {
                let descending_step = current.len() % 2 == 1;
                if descending_step && c >= last || !descending_step && c <= last {
                    continue;
                }
            }
            // Appending c as x_l: forbid x_j < c < x_i for some i < j < l.
            for i in 0..current.len() {
                for j in (i + 1)..current.len() {
                    if current[j] < c && c < current[i] {
                        continue 'next;
                    }
                }
            }
            used[c as usize] = true;
            current.push(c);
            recurse(len, current, used, count);
            current.pop();
            used[c as usize] = false;
        }
    }
    let mut count = 0u64;
    recurse(len, &mut Vec::new(), &mut vec![false; len + 1], &mut count);
    count
}
