//! The labeled poset of even-component subsets attached to a building set,
//! with edge labels, lexicographic shellability verification, and the
//! bijection between descent-free maximal chains and alternating
//! B-permutations.
//!
//! Elements are the subsets `I` of the ground set for which every connected
//! component of the restriction `B|_I` has even size. Such subsets have even
//! size, so the poset is ordered by inclusion with covers adding exactly two
//! elements, and the two added elements always land in a single component of
//! the upper restriction.
//!
//! A cover `I ⋖ J` adding `{x, y}` with `x > y` carries the label
//! `(c, (x, y))` where `c` is the largest element of the component of
//! `B|_J` containing the added pair. Labels are ordered first by `c`, then
//! by the partial order on pairs in which `(x₁, x₂) ⪰ (y₁, y₂)` when either
//! `x₁ ≥ x₂ ≥ y₁ ≥ y₂` or `x₁ = y₁ ≥ x₂ ≥ y₂`.

use crate::building::BuildingSet;
use crate::perm::Permutation;
use crate::set::ElementSet;
use std::collections::HashMap;
use thiserror::Error;

/// Poset sizes are kept enumerable: grounds must stay at or below this.
pub const POSET_GROUND_BOUND: usize = 16;
/// Chain enumeration (histograms, EL checks) is capped separately.
pub const CHAIN_GROUND_BOUND: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("ground set {0} is not an element of the poset, so it has no top")]
    Unbounded(ElementSet),
    #[error("ground set has {0} elements, above the bound of {1}")]
    GroundTooLarge(usize, usize),
    #[error("the identity requires at least four ground elements, got {0}")]
    RankTooSmall(usize),
    #[error("lexicographic shellability fails on [{bottom}, {top}]: {detail}")]
    NotShellable {
        bottom: ElementSet,
        top: ElementSet,
        detail: String,
    },
    #[error("not a maximal bottom-to-top chain: {0}")]
    InvalidChain(String),
    #[error("chain has a decreasing position at index {0}")]
    ChainHasDecreasingPosition(usize),
    #[error("not an alternating B-permutation of the full ground set")]
    NotAlternatingBPermutation,
}

/// The pair part of an edge label: the two added elements, larger first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OmegaLabel {
    pub a: u32,
    pub b: u32,
}

/// A cover label: the component maximum, then the added pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeLabel {
    pub c: u32,
    pub omega: OmegaLabel,
}

impl std::fmt::Display for OmegaLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl std::fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.c, self.omega)
    }
}

/// Outcome of comparing two labels in their partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelCmp {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// The partial order on added pairs. With both pairs written
/// larger-component-first, `(a₁, b₁)` dominates `(a₂, b₂)` when
/// `a₁ ≥ b₁ ≥ a₂ ≥ b₂` (complete domination) or
/// `a₁ = a₂ ≥ b₁ ≥ b₂` (shared maximum).
pub fn omega_cmp(x: OmegaLabel, y: OmegaLabel) -> LabelCmp {
    fn dominates(p: OmegaLabel, q: OmegaLabel) -> bool {
        (p.a >= p.b && p.b >= q.a && q.a >= q.b) || (p.a == q.a && q.a >= p.b && p.b >= q.b)
    }
    match (dominates(x, y), dominates(y, x)) {
        (true, true) => {
            debug_assert_eq!(x, y);
            LabelCmp::Equal
        }
        (true, false) => LabelCmp::Greater,
        (false, true) => LabelCmp::Less,
        (false, false) => LabelCmp::Incomparable,
    }
}

/// Full label comparison: by component maximum first, then by the pair
/// order; distinct component maxima always compare.
pub fn label_cmp(x: EdgeLabel, y: EdgeLabel) -> LabelCmp {
    match x.c.cmp(&y.c) {
        std::cmp::Ordering::Less => LabelCmp::Less,
        std::cmp::Ordering::Greater => LabelCmp::Greater,
        std::cmp::Ordering::Equal => omega_cmp(x.omega, y.omega),
    }
}

/// 1-based positions `i` in a label sequence where the `i`-th label strictly
/// dominates the next one.
pub fn decreasing_positions(labels: &[EdgeLabel]) -> Vec<usize> {
    labels
        .windows(2)
        .enumerate()
        .filter(|(_, w)| label_cmp(w[0], w[1]) == LabelCmp::Greater)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Whether every consecutive pair of labels weakly decreases.
pub fn is_weakly_decreasing(labels: &[EdgeLabel]) -> bool {
    labels
        .windows(2)
        .all(|w| matches!(label_cmp(w[0], w[1]), LabelCmp::Greater | LabelCmp::Equal))
}

/// The even-component subset poset of a building set, with labeled covers.
///
/// The cover structure pairs elements whose sizes differ by two; this is
/// the full Hasse diagram whenever the poset is graded by half-cardinality,
/// which holds in particular for chordal building sets.
pub struct HatPoset {
    building: BuildingSet,
    elements: Vec<ElementSet>,
    index: HashMap<u64, usize>,
    covers_up: Vec<Vec<(usize, EdgeLabel)>>,
}

impl HatPoset {
    pub fn build(b: &BuildingSet) -> Result<HatPoset, PosetError> {
        let n = b.ground().len();
        if n > POSET_GROUND_BOUND {
            return Err(PosetError::GroundTooLarge(n, POSET_GROUND_BOUND));
        }
        let mut elements: Vec<ElementSet> = b
            .ground()
            .subsets()
            .filter(|&i| {
                b.components_within(i)
                    .iter()
                    .all(|c| c.len() % 2 == 0)
            })
            .collect();
        elements.sort_by(|x, y| x.cmp_card_lex(y));
        let index: HashMap<u64, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.bits(), i))
            .collect();
        let mut covers_up = vec![Vec::new(); elements.len()];
        for (i, &lower) in elements.iter().enumerate() {
            for (j, &upper) in elements.iter().enumerate() {
                if upper.len() != lower.len() + 2 || !lower.is_subset_of(upper) {
                    continue;
                }
                let added = upper - lower;
                let x = added.max_label().unwrap();
                let y = added.min_label().unwrap();
                let component = b
                    .components_within(upper)
                    .into_iter()
                    .find(|c| c.contains(x))
                    .unwrap();
                debug_assert!(component.contains(y));
                let label = EdgeLabel {
                    c: component.max_label().unwrap(),
                    omega: OmegaLabel { a: x, b: y },
                };
                covers_up[i].push((j, label));
            }
        }
        Ok(HatPoset {
            building: b.clone(),
            elements,
            index,
            covers_up,
        })
    }

    pub fn building(&self) -> &BuildingSet {
        &self.building
    }

    pub fn elements(&self) -> &[ElementSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, element: ElementSet) -> Option<usize> {
        self.index.get(&element.bits()).copied()
    }

    /// Upward covers of element `i` with their labels, ascending by target.
    pub fn covers_up(&self, i: usize) -> &[(usize, EdgeLabel)] {
        &self.covers_up[i]
    }

    pub fn cover_count(&self) -> usize {
        self.covers_up.iter().map(Vec::len).sum()
    }

    pub fn is_less(&self, i: usize, j: usize) -> bool {
        self.elements[i] != self.elements[j] && self.elements[i].is_subset_of(self.elements[j])
    }

    /// Index of the bottom element, the empty set.
    pub fn bottom(&self) -> usize {
        debug_assert!(self.elements[0].is_empty());
        0
    }

    /// Index of the ground set, when it belongs to the poset.
    pub fn top(&self) -> Result<usize, PosetError> {
        self.index_of(self.building.ground())
            .ok_or(PosetError::Unbounded(self.building.ground()))
    }

    /// The labels along a chain of element indices.
    pub fn labels_along(&self, chain: &[usize]) -> Vec<EdgeLabel> {
        chain
            .windows(2)
            .map(|w| {
                self.covers_up[w[0]]
                    .iter()
                    .find(|(j, _)| *j == w[1])
                    .expect("consecutive chain entries must be covers")
                    .1
            })
            .collect()
    }

    /// All maximal chains of the closed interval `[lo, hi]`, as index
    /// vectors. Fails when a chain stalls strictly below `hi`, which cannot
    /// happen in a graded interval.
    pub fn interval_chains(&self, lo: usize, hi: usize) -> Result<Vec<Vec<usize>>, PosetError> {
        let mut chains = Vec::new();
        let mut stack = vec![lo];
        self.chain_dfs(hi, &mut stack, &mut chains)?;
        Ok(chains)
    }

    fn chain_dfs(
        &self,
        hi: usize,
        stack: &mut Vec<usize>,
        chains: &mut Vec<Vec<usize>>,
    ) -> Result<(), PosetError> {
        let cur = *stack.last().unwrap();
        if cur == hi {
            chains.push(stack.clone());
            return Ok(());
        }
        let mut extended = false;
        for &(j, _) in &self.covers_up[cur] {
            if j == hi || self.is_less(j, hi) {
                extended = true;
                stack.push(j);
                self.chain_dfs(hi, stack, chains)?;
                stack.pop();
            }
        }
        if !extended {
            return Err(PosetError::NotShellable {
                bottom: self.elements[stack[0]],
                top: self.elements[hi],
                detail: format!("chain stalls at {} below the top", self.elements[cur]),
            });
        }
        Ok(())
    }

    /// All maximal chains from the empty set to the ground set.
    pub fn maximal_chains(&self) -> Result<Vec<Vec<usize>>, PosetError> {
        let n = self.building.ground().len();
        if n > CHAIN_GROUND_BOUND {
            return Err(PosetError::GroundTooLarge(n, CHAIN_GROUND_BOUND));
        }
        let top = self.top()?;
        self.interval_chains(self.bottom(), top)
    }
}

/// Report from a successful shellability verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellabilityReport {
    pub element_count: usize,
    pub cover_count: usize,
    pub intervals_checked: usize,
    pub maximal_chain_count: usize,
    /// `histogram[j]` counts bottom-to-top chains with `j` decreasing
    /// positions.
    pub histogram: Vec<u64>,
    /// The unique weakly decreasing bottom-to-top chain.
    pub decreasing_chain: Vec<ElementSet>,
}

/// Verifies the shelling condition on every interval: a unique weakly
/// decreasing maximal chain that lexicographically succeeds all others,
/// with a comparable strict first difference.
pub fn verify_el(b: &BuildingSet, max_ground: usize) -> Result<ShellabilityReport, PosetError> {
    let n = b.ground().len();
    if n > max_ground.min(CHAIN_GROUND_BOUND) {
        return Err(PosetError::GroundTooLarge(n, max_ground.min(CHAIN_GROUND_BOUND)));
    }
    let poset = HatPoset::build(b)?;
    let top = poset.top()?;
    let mut intervals_checked = 0;
    let mut top_histogram = Vec::new();
    let mut top_decreasing = Vec::new();
    let mut top_chain_count = 0;
    for lo in 0..poset.len() {
        for hi in 0..poset.len() {
            if !poset.is_less(lo, hi) {
                continue;
            }
            intervals_checked += 1;
            let chains = poset.interval_chains(lo, hi)?;
            let labeled: Vec<(Vec<usize>, Vec<EdgeLabel>)> = chains
                .into_iter()
                .map(|c| {
                    let labels = poset.labels_along(&c);
                    (c, labels)
                })
                .collect();
            let decreasing: Vec<usize> = (0..labeled.len())
                .filter(|&i| is_weakly_decreasing(&labeled[i].1))
                .collect();
            let fail = |detail: String| PosetError::NotShellable {
                bottom: poset.elements()[lo],
                top: poset.elements()[hi],
                detail,
            };
            let &[unique] = decreasing.as_slice() else {
                return Err(fail(format!(
                    "{} weakly decreasing chains instead of exactly one",
                    decreasing.len()
                )));
            };
            for (i, (_, labels)) in labeled.iter().enumerate() {
                if i == unique {
                    continue;
                }
                let dec = &labeled[unique].1;
                let Some(first) = (0..dec.len()).find(|&t| dec[t] != labels[t]) else {
                    return Err(fail("two chains share a label sequence".into()));
                };
                if label_cmp(dec[first], labels[first]) != LabelCmp::Greater {
                    return Err(fail(format!(
                        "decreasing chain label {} does not strictly succeed {}",
                        dec[first], labels[first]
                    )));
                }
            }
            if lo == poset.bottom() && hi == top {
                top_chain_count = labeled.len();
                // A bottom-to-top chain has n/2 - 1 positions, so descent
                // counts range over 0..=n/2 - 1.
                let mut hist = vec![0u64; (n / 2).max(1)];
                for (_, labels) in &labeled {
                    hist[decreasing_positions(labels).len()] += 1;
                }
                top_histogram = hist;
                top_decreasing = labeled[unique]
                    .0
                    .iter()
                    .map(|&i| poset.elements()[i])
                    .collect();
            }
        }
    }
    if top_decreasing.is_empty() {
        // Trivial poset: a single element, no proper interval.
        top_histogram = vec![1];
        top_chain_count = 1;
        top_decreasing = vec![poset.elements()[poset.bottom()]];
    }
    Ok(ShellabilityReport {
        element_count: poset.len(),
        cover_count: poset.cover_count(),
        intervals_checked,
        maximal_chain_count: top_chain_count,
        histogram: top_histogram,
        decreasing_chain: top_decreasing,
    })
}

/// Histogram of decreasing-position counts over all bottom-to-top chains:
/// entry `j` counts the maximal chains with exactly `j` decreasing
/// positions.
pub fn alt_histogram(b: &BuildingSet) -> Result<Vec<u64>, PosetError> {
    let poset = HatPoset::build(b)?;
    let chains = poset.maximal_chains()?;
    let mut hist = vec![0u64; (b.ground().len() / 2).max(1)];
    for chain in &chains {
        let labels = poset.labels_along(chain);
        hist[decreasing_positions(&labels).len()] += 1;
    }
    Ok(hist)
}

fn chain_labels(b: &BuildingSet, chain: &[ElementSet]) -> Result<Vec<EdgeLabel>, PosetError> {
    if chain.first() != Some(&ElementSet::EMPTY) {
        return Err(PosetError::InvalidChain(
            "chain must start at the empty set".into(),
        ));
    }
    if chain.last() != Some(&b.ground()) {
        return Err(PosetError::InvalidChain(
            "chain must end at the ground set".into(),
        ));
    }
    chain
        .windows(2)
        .map(|w| {
            let (lower, upper) = (w[0], w[1]);
            if !lower.is_subset_of(upper) || upper.len() != lower.len() + 2 {
                return Err(PosetError::InvalidChain(format!(
                    "{lower} to {upper} is not a two-element step"
                )));
            }
            if b.components_within(upper).iter().any(|c| c.len() % 2 == 1) {
                return Err(PosetError::InvalidChain(format!(
                    "{upper} has an odd component"
                )));
            }
            let added = upper - lower;
            let x = added.max_label().unwrap();
            let component = b
                .components_within(upper)
                .into_iter()
                .find(|c| c.contains(x))
                .unwrap();
            Ok(EdgeLabel {
                c: component.max_label().unwrap(),
                omega: OmegaLabel {
                    a: x,
                    b: added.min_label().unwrap(),
                },
            })
        })
        .collect()
}

/// Reads a descent-free maximal chain as an alternating B-permutation: each
/// cover contributes its added pair, larger element first.
pub fn chain_to_permutation(
    b: &BuildingSet,
    chain: &[ElementSet],
) -> Result<Permutation, PosetError> {
    let labels = chain_labels(b, chain)?;
    if let Some(&position) = decreasing_positions(&labels).first() {
        return Err(PosetError::ChainHasDecreasingPosition(position));
    }
    let mut entries = Vec::with_capacity(b.ground().len());
    for label in &labels {
        entries.push(label.omega.a);
        entries.push(label.omega.b);
    }
    let perm = Permutation::new(entries);
    debug_assert!(perm.is_alternating() && perm.is_b_permutation(b));
    Ok(perm)
}

/// Reads an alternating B-permutation as a maximal chain: the prefixes of
/// even length.
pub fn permutation_to_chain(
    b: &BuildingSet,
    perm: &Permutation,
) -> Result<Vec<ElementSet>, PosetError> {
    if perm.support() != b.ground() || !perm.is_alternating() || !perm.is_b_permutation(b) {
        return Err(PosetError::NotAlternatingBPermutation);
    }
    let mut chain = vec![ElementSet::EMPTY];
    let mut prefix = ElementSet::EMPTY;
    for pair in perm.entries().chunks(2) {
        prefix = prefix.with(pair[0]).with(pair[1]);
        debug_assert!(b
            .components_within(prefix)
            .iter()
            .all(|c| c.len() % 2 == 0));
        chain.push(prefix);
    }
    Ok(chain)
}

/// Report from the Euler characteristic identity for the proper part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerIdentityReport {
    /// Unreduced Euler characteristic of the order complex of the proper
    /// part.
    pub euler_characteristic: i64,
    /// Chains with every position decreasing.
    pub fully_decreasing: u64,
    /// Chains with no decreasing position.
    pub descent_free: u64,
    pub holds: bool,
}

/// Checks that the order complex of the proper part has unreduced Euler
/// characteristic equal to the fully-decreasing chain count plus
/// `(-1)^k` times the descent-free chain count, where `2k` is the ground
/// size. Requires `k ≥ 2`.
pub fn euler_identity_check(b: &BuildingSet) -> Result<EulerIdentityReport, PosetError> {
    let n = b.ground().len();
    if n < 4 {
        return Err(PosetError::RankTooSmall(n));
    }
    let poset = HatPoset::build(b)?;
    let top = poset.top()?;
    let hist = alt_histogram(b)?;
    let proper: Vec<ElementSet> = (0..poset.len())
        .filter(|&i| i != poset.bottom() && i != top)
        .map(|i| poset.elements()[i])
        .collect();
    let complex = crate::complex::order_complex(&proper, |i, j| {
        proper[i] != proper[j] && proper[i].is_subset_of(proper[j])
    })
    .map_err(|_| PosetError::GroundTooLarge(n, CHAIN_GROUND_BOUND))?;
    let chi = complex.euler_characteristic();
    let k = n / 2;
    let fully_decreasing = *hist.last().unwrap();
    let descent_free = hist[0];
    let sign = if k % 2 == 0 { 1i64 } else { -1i64 };
    let expected = fully_decreasing as i64 + sign * descent_free as i64;
    Ok(EulerIdentityReport {
        euler_characteristic: chi,
        fully_decreasing,
        descent_free,
        holds: chi == expected,
    })
}
