//! Sets of positive integer labels backed by a `u64` bitmask.
//!
//! Every combinatorial object in this crate (building-set members, ground
//! sets, simplicial-complex vertices, poset elements) is a set of labels in
//! `1..=64`, so a single machine word with bit `i - 1` standing for label `i`
//! covers all of them.

use std::fmt;

/// Largest label representable by [`ElementSet`].
pub const MAX_LABEL: u32 = 64;

/// A set of labels from `1..=64`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    /// The empty set.
    pub const EMPTY: ElementSet = ElementSet(0);

    /// Builds a set from raw mask bits (bit `i - 1` holds label `i`).
    pub const fn from_bits(bits: u64) -> ElementSet {
        ElementSet(bits)
    }

    /// Returns the underlying bitmask.
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The singleton `{label}`. Panics if `label` is out of `1..=64`.
    pub fn singleton(label: u32) -> ElementSet {
        assert!(
            (1..=MAX_LABEL).contains(&label),
            "label {label} out of range 1..={MAX_LABEL}"
        );
        ElementSet(1 << (label - 1))
    }

    /// Builds a set from labels. Panics on labels outside `1..=64`.
    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> ElementSet {
        let mut s = ElementSet::EMPTY;
        for l in labels {
            s = s.with(l);
        }
        s
    }

    /// The full interval `{lo, lo+1, ..., hi}`; empty when `lo > hi`.
    pub fn interval(lo: u32, hi: u32) -> ElementSet {
        let mut s = ElementSet::EMPTY;
        for l in lo..=hi {
            s = s.with(l);
        }
        s
    }

    /// The initial segment `{1, ..., n}`.
    pub fn initial(n: u32) -> ElementSet {
        ElementSet::interval(1, n)
    }

    /// `self` with `label` added.
    pub fn with(self, label: u32) -> ElementSet {
        self | ElementSet::singleton(label)
    }

    /// `self` with `label` removed.
    pub fn without(self, label: u32) -> ElementSet {
        ElementSet(self.0 & !ElementSet::singleton(label).0)
    }

    /// Membership test.
    pub fn contains(self, label: u32) -> bool {
        (1..=MAX_LABEL).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    /// Number of labels in the set.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest label, if any.
    pub fn min_label(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    /// Largest label, if any.
    pub fn max_label(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Iterates labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let l = bits.trailing_zeros() + 1;
            bits &= bits - 1;
            Some(l)
        })
    }

    /// Collects the labels in ascending order.
    pub fn labels(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Iterates every subset of `self`, from the empty set to `self` itself.
    ///
    /// Uses the carry-rippler traversal of submasks; `2^len` subsets total.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> {
        let set = self.0;
        let mut sub = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let current = sub;
            sub = sub.wrapping_sub(set) & set;
            done = sub == 0;
            Some(ElementSet(current))
        })
    }

    /// Subsets of `self` with exactly `k` elements, in (cardinality, lex) order.
    pub fn subsets_of_size(self, k: usize) -> Vec<ElementSet> {
        let mut out: Vec<ElementSet> = self.subsets().filter(|s| s.len() == k).collect();
        out.sort_by(|a, b| a.cmp_card_lex(b));
        out
    }

    /// Orders sets by cardinality, then lexicographically on the ascending
    /// label sequence (so `{1,4}` precedes `{2,3}`).
    pub fn cmp_card_lex(&self, other: &ElementSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| {
                let mut a = self.0;
                let mut b = other.0;
                while a != 0 && b != 0 {
                    let la = a.trailing_zeros();
                    let lb = b.trailing_zeros();
                    if la != lb {
                        return la.cmp(&lb);
                    }
                    a &= a - 1;
                    b &= b - 1;
                }
                std::cmp::Ordering::Equal
            })
    }
}

impl std::ops::BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

impl fmt::Display for ElementSet {
    /// Renders as `{1,2,3}`; the empty set as `{}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
