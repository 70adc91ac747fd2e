//! Building sets on a ground set of positive integer labels.
//!
//! A building set `B` on a finite ground set `S` is a family of nonempty
//! subsets of `S` that contains every singleton and is closed under unions of
//! overlapping members. The inclusion-maximal members partition `S` into the
//! connected components of `B`; restricting to any subset of `S` again gives
//! a building set. Chordality — every member keeps all of its upper tails in
//! the family — is the combinatorial hypothesis behind the alternating
//! permutation count implemented in the rest of this crate.

use crate::graph::SimpleGraph;
use crate::set::ElementSet;
use std::collections::HashSet;
use thiserror::Error;

/// Largest ground set for which whole-powerset enumerations are attempted
/// (maximal and graphical building sets, subset sweeps over the ground).
pub const ENUMERATION_BOUND: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildingSetError {
    #[error("building set contains the empty set")]
    EmptyMember,
    #[error("member {0} is not contained in the ground set {1}")]
    MemberOutsideGround(ElementSet, ElementSet),
    #[error("singleton {{{0}}} is missing from the family")]
    MissingSingleton(u32),
    #[error("members {0} and {1} overlap but their union is not in the family")]
    UnionAxiomViolated(ElementSet, ElementSet),
    #[error("ground set with {0} elements exceeds the enumeration bound {1}")]
    GroundTooLarge(usize, usize),
}

/// A validated building set with deterministic member order.
///
/// Members are kept sorted by (cardinality, lexicographic label sequence) for
/// reproducible iteration and witnesses, with a hash index for membership
/// queries on the hot paths.
#[derive(Clone)]
pub struct BuildingSet {
    ground: ElementSet,
    members: Vec<ElementSet>,
    index: HashSet<u64>,
}

impl PartialEq for BuildingSet {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.members == other.members
    }
}

impl Eq for BuildingSet {}

impl std::fmt::Debug for BuildingSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BuildingSet(ground={}, members={:?})", self.ground, self.members)
    }
}

impl BuildingSet {
    /// Validates `members` as a building set on `ground`.
    ///
    /// Violations are reported deterministically: an empty member first, then
    /// a member outside the ground set, then the smallest missing singleton,
    /// then the first overlapping pair (in member order) whose union is
    /// missing.
    pub fn new(
        ground: ElementSet,
        members: impl IntoIterator<Item = ElementSet>,
    ) -> Result<BuildingSet, BuildingSetError> {
        let mut sorted: Vec<ElementSet> = members.into_iter().collect();
        sorted.sort_by(ElementSet::cmp_card_lex);
        sorted.dedup();

        if sorted.first().is_some_and(|m| m.is_empty()) {
            return Err(BuildingSetError::EmptyMember);
        }
        for &m in &sorted {
            if !m.is_subset_of(ground) {
                return Err(BuildingSetError::MemberOutsideGround(m, ground));
            }
        }
        let index: HashSet<u64> = sorted.iter().map(|m| m.bits()).collect();
        for i in ground.iter() {
            if !index.contains(&ElementSet::singleton(i).bits()) {
                return Err(BuildingSetError::MissingSingleton(i));
            }
        }
        for (k, &a) in sorted.iter().enumerate() {
            for &b in &sorted[k + 1..] {
                if !a.is_disjoint(b) && !index.contains(&(a | b).bits()) {
                    return Err(BuildingSetError::UnionAxiomViolated(a, b));
                }
            }
        }
        Ok(BuildingSet {
            ground,
            members: sorted,
            index,
        })
    }

    /// Internal constructor for families that are building sets by
    /// construction. Validated in debug builds on small grounds.
    fn from_known_valid(ground: ElementSet, mut members: Vec<ElementSet>) -> BuildingSet {
        members.sort_by(ElementSet::cmp_card_lex);
        members.dedup();
        let index = members.iter().map(|m| m.bits()).collect();
        let b = BuildingSet {
            ground,
            members,
            index,
        };
        debug_assert!(
            ground.len() > 8 || BuildingSet::new(ground, b.members.clone()).is_ok(),
            "internal constructor produced an invalid building set"
        );
        b
    }

    /// The maximal building set on `ground`: every nonempty subset.
    pub fn maximal(ground: ElementSet) -> Result<BuildingSet, BuildingSetError> {
        if ground.len() > ENUMERATION_BOUND {
            return Err(BuildingSetError::GroundTooLarge(ground.len(), ENUMERATION_BOUND));
        }
        let members: Vec<ElementSet> = ground.subsets().filter(|s| !s.is_empty()).collect();
        Ok(BuildingSet::from_known_valid(ground, members))
    }

    /// The graphical building set `B(G)`: vertex sets of connected induced
    /// subgraphs of `G`.
    pub fn graphical(g: &SimpleGraph) -> Result<BuildingSet, BuildingSetError> {
        let ground = g.vertices();
        if ground.len() > ENUMERATION_BOUND {
            return Err(BuildingSetError::GroundTooLarge(ground.len(), ENUMERATION_BOUND));
        }
        let members: Vec<ElementSet> = ground
            .subsets()
            .filter(|&s| !s.is_empty() && g.is_connected_on(s))
            .collect();
        Ok(BuildingSet::from_known_valid(ground, members))
    }

    /// The Hochschild building set `B_{m,n}` on `{1, ..., m+n}`: all
    /// singletons, plus every set of cardinality at least 2 whose
    /// intersection with the shaded part `{m+1, ..., m+n}` is empty or a
    /// suffix `{m+r, ..., m+n}`.
    pub fn hochschild(m: u32, n: u32) -> Result<BuildingSet, BuildingSetError> {
        let total = (m + n) as usize;
        if total > ENUMERATION_BOUND {
            return Err(BuildingSetError::GroundTooLarge(total, ENUMERATION_BOUND));
        }
        let ground = ElementSet::initial(m + n);
        let clear = ElementSet::initial(m);
        let mut members: Vec<ElementSet> = ground.iter().map(ElementSet::singleton).collect();
        let mut suffixes = vec![ElementSet::EMPTY];
        for r in 1..=n {
            suffixes.push(ElementSet::interval(m + r, m + n));
        }
        for c in clear.subsets() {
            for &s in &suffixes {
                let candidate = c | s;
                if candidate.len() >= 2 {
                    members.push(candidate);
                }
            }
        }
        Ok(BuildingSet::from_known_valid(ground, members))
    }

    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    /// Members in (cardinality, lex) order.
    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn member_count(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, s: ElementSet) -> bool {
        self.index.contains(&s.bits())
    }

    /// The restriction `B|_I = { J ∈ B : J ⊆ I }`, itself a building set on `I`.
    pub fn restrict(&self, subset: ElementSet) -> BuildingSet {
        let members: Vec<ElementSet> = self
            .members
            .iter()
            .copied()
            .filter(|m| m.is_subset_of(subset))
            .collect();
        let index = members.iter().map(|m| m.bits()).collect();
        BuildingSet {
            ground: subset & self.ground,
            members,
            index,
        }
    }

    /// Connected components of the restriction `B|_I`, sorted by descending
    /// maximum label. The components are the inclusion-maximal members inside
    /// `I`; they partition `I`.
    pub fn components_within(&self, subset: ElementSet) -> Vec<ElementSet> {
        // Union-find over labels, merging along every member inside `subset`.
        let mut parent: [u32; 65] = std::array::from_fn(|i| i as u32);
        fn find(parent: &mut [u32; 65], x: u32) -> u32 {
            let mut root = x;
            while parent[root as usize] != root {
                root = parent[root as usize];
            }
            let mut cur = x;
            while parent[cur as usize] != root {
                let next = parent[cur as usize];
                parent[cur as usize] = root;
                cur = next;
            }
            root
        }
        for &m in &self.members {
            if !m.is_subset_of(subset) {
                continue;
            }
            let mut it = m.iter();
            if let Some(first) = it.next() {
                let r0 = find(&mut parent, first);
                for l in it {
                    let r = find(&mut parent, l);
                    parent[r as usize] = r0;
                }
            }
        }
        let mut comps: std::collections::HashMap<u32, ElementSet> = std::collections::HashMap::new();
        for l in subset.iter() {
            let root = find(&mut parent, l);
            let entry = comps.entry(root).or_insert(ElementSet::EMPTY);
            *entry = entry.with(l);
        }
        let mut out: Vec<ElementSet> = comps.into_values().collect();
        out.sort_by_key(|c| std::cmp::Reverse(c.max_label()));
        out
    }

    /// Connected components of the whole building set.
    pub fn connected_components(&self) -> Vec<ElementSet> {
        self.components_within(self.ground)
    }

    /// A building set is connected exactly when its ground set is a member.
    pub fn is_connected(&self) -> bool {
        self.ground.is_empty() || self.contains(self.ground)
    }

    /// Whether `a` and `b` lie in the same connected component of `B|_I`.
    ///
    /// Because building sets are closed under overlapping unions, this is
    /// equivalent to some single member inside `I` containing both.
    pub fn same_component_within(&self, subset: ElementSet, a: u32, b: u32) -> bool {
        if a == b {
            return subset.contains(a);
        }
        let pair = ElementSet::singleton(a) | ElementSet::singleton(b);
        self.members
            .iter()
            .any(|&m| pair.is_subset_of(m) && m.is_subset_of(subset))
    }

    /// First chordality violation in deterministic order, if any: the first
    /// member (in member order) with a missing upper tail, paired with its
    /// largest missing tail.
    ///
    /// A member `{i_1 < i_2 < ... < i_r}` is chordal-compatible when every
    /// upper tail `{i_s, ..., i_r}` for `1 < s < r` is also a member.
    pub fn chordality_witness(&self) -> Option<(ElementSet, ElementSet)> {
        for &m in &self.members {
            let labels = m.labels();
            let r = labels.len();
            for s in 1..r.saturating_sub(1) {
                let tail = ElementSet::from_labels(labels[s..].iter().copied());
                if !self.contains(tail) {
                    return Some((m, tail));
                }
            }
        }
        None
    }

    pub fn is_chordal(&self) -> bool {
        self.chordality_witness().is_none()
    }

    /// If `B` is graphical, returns the graph realizing it (its edges are the
    /// 2-element members); otherwise `None`.
    pub fn graph_realization(&self) -> Option<SimpleGraph> {
        let mut g = SimpleGraph::new(self.ground);
        for &m in &self.members {
            if m.len() == 2 {
                let l = m.labels();
                g.add_edge(l[0], l[1]).expect("members lie in the ground set");
            }
        }
        match BuildingSet::graphical(&g) {
            Ok(candidate) if candidate == *self => Some(g),
            _ => None,
        }
    }

    pub fn is_graphical(&self) -> bool {
        self.graph_realization().is_some()
    }
}

/// Lifts a set of row indices `rows ⊆ {1, ..., n}` to the subset of
/// `{1, ..., n+1}` indexing a homology summand: `rows` itself when its size
/// is even, otherwise `rows ∪ {n+1}`.
pub fn omega_to_subset(rows: ElementSet, n: u32) -> ElementSet {
    assert!(
        rows.is_subset_of(ElementSet::initial(n)),
        "row indices must lie in 1..={n}"
    );
    if rows.len() % 2 == 0 {
        rows
    } else {
        rows.with(n + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[u32]) -> ElementSet {
        ElementSet::from_labels(labels.iter().copied())
    }

    fn family(members: &[&[u32]]) -> Vec<ElementSet> {
        members.iter().map(|m| set(m)).collect()
    }

    /// Running example: a connected chordal building set on {1,2,3,4} that is
    /// not graphical and not maximal.
    fn example_building_set() -> BuildingSet {
        BuildingSet::new(
            ElementSet::initial(4),
            family(&[
                &[1],
                &[2],
                &[3],
                &[4],
                &[1, 4],
                &[3, 4],
                &[1, 3, 4],
                &[2, 3, 4],
                &[1, 2, 3, 4],
            ]),
        )
        .unwrap()
    }

    #[test]
    fn accepts_minimal_family() {
        let b = BuildingSet::new(ElementSet::initial(2), family(&[&[1], &[2]])).unwrap();
        assert_eq!(b.member_count(), 2);
        assert!(!b.is_connected());
    }

    #[test]
    fn accepts_running_example() {
        let b = example_building_set();
        assert_eq!(b.member_count(), 9);
        assert!(b.is_connected());
        assert!(b.is_chordal());
    }

    #[test]
    fn rejects_empty_member() {
        let err = BuildingSet::new(
            ElementSet::initial(1),
            vec![ElementSet::EMPTY, set(&[1])],
        )
        .unwrap_err();
        assert_eq!(err, BuildingSetError::EmptyMember);
    }

    #[test]
    fn rejects_member_outside_ground() {
        let err =
            BuildingSet::new(ElementSet::initial(2), family(&[&[1], &[2], &[2, 3]])).unwrap_err();
        assert_eq!(
            err,
            BuildingSetError::MemberOutsideGround(set(&[2, 3]), set(&[1, 2]))
        );
    }

    #[test]
    fn rejects_missing_singleton() {
        let err = BuildingSet::new(ElementSet::initial(2), family(&[&[1], &[1, 2]])).unwrap_err();
        assert_eq!(err, BuildingSetError::MissingSingleton(2));
    }

    #[test]
    fn rejects_union_axiom_violation_with_first_pair() {
        let err = BuildingSet::new(
            ElementSet::initial(3),
            family(&[&[1], &[2], &[3], &[1, 2], &[2, 3]]),
        )
        .unwrap_err();
        assert_eq!(
            err,
            BuildingSetError::UnionAxiomViolated(set(&[1, 2]), set(&[2, 3]))
        );
    }

    #[test]
    fn members_are_sorted_and_deduped() {
        let b = BuildingSet::new(
            ElementSet::initial(3),
            family(&[&[3], &[1, 2, 3], &[2], &[1], &[2, 3], &[2, 3]]),
        )
        .unwrap();
        let shown: Vec<String> = b.members().iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["{1}", "{2}", "{3}", "{2,3}", "{1,2,3}"]);
    }

    #[test]
    fn restriction_of_running_example() {
        let b = example_building_set();
        let r = b.restrict(set(&[1, 3, 4]));
        let shown: Vec<String> = r.members().iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["{1}", "{3}", "{4}", "{1,4}", "{3,4}", "{1,3,4}"]);
        assert_eq!(r.ground(), set(&[1, 3, 4]));
    }

    #[test]
    fn restriction_to_empty_is_empty() {
        let b = example_building_set();
        let r = b.restrict(ElementSet::EMPTY);
        assert_eq!(r.member_count(), 0);
        assert!(r.ground().is_empty());
    }

    #[test]
    fn components_sorted_by_descending_max() {
        let disconnected =
            BuildingSet::new(ElementSet::initial(2), family(&[&[1], &[2]])).unwrap();
        assert_eq!(disconnected.connected_components(), vec![set(&[2]), set(&[1])]);

        let b = BuildingSet::maximal(ElementSet::initial(3)).unwrap();
        assert_eq!(b.connected_components(), vec![set(&[1, 2, 3])]);

        let path = BuildingSet::graphical(&SimpleGraph::path(4)).unwrap();
        let r = path.restrict(set(&[1, 2, 4]));
        assert_eq!(r.connected_components(), vec![set(&[4]), set(&[1, 2])]);
    }

    #[test]
    fn same_component_queries() {
        let path = BuildingSet::graphical(&SimpleGraph::path(4)).unwrap();
        assert!(path.same_component_within(set(&[1, 2, 3]), 1, 3));
        assert!(!path.same_component_within(set(&[1, 3]), 1, 3));
        assert!(path.same_component_within(set(&[1]), 1, 1));
        assert!(!path.same_component_within(set(&[2]), 1, 1));
    }

    #[test]
    fn chordality_of_path_labelings() {
        // Path with consecutive labels 1-2-3-4: a PEO labeling, so chordal.
        let good = BuildingSet::graphical(&SimpleGraph::path(4)).unwrap();
        assert!(good.is_chordal());

        // Path 2-3-1-4: the member {1,3,4} is missing its tail {3,4}.
        let mut g = SimpleGraph::new(ElementSet::initial(4));
        for (u, v) in [(2, 3), (3, 1), (1, 4)] {
            g.add_edge(u, v).unwrap();
        }
        let bad = BuildingSet::graphical(&g).unwrap();
        assert_eq!(bad.chordality_witness(), Some((set(&[1, 3, 4]), set(&[3, 4]))));
    }

    #[test]
    fn maximal_building_sets_are_chordal() {
        for n in 1..=6 {
            let b = BuildingSet::maximal(ElementSet::initial(n)).unwrap();
            assert_eq!(b.member_count(), (1 << n) - 1);
            assert!(b.is_chordal());
            assert!(b.is_connected());
        }
        assert!(matches!(
            BuildingSet::maximal(ElementSet::initial(20)),
            Err(BuildingSetError::GroundTooLarge(20, _))
        ));
    }

    #[test]
    fn graphical_families() {
        let path = BuildingSet::graphical(&SimpleGraph::path(4)).unwrap();
        let expected = family(&[
            &[1],
            &[2],
            &[3],
            &[4],
            &[1, 2],
            &[2, 3],
            &[3, 4],
            &[1, 2, 3],
            &[2, 3, 4],
            &[1, 2, 3, 4],
        ]);
        assert_eq!(path.members(), &expected[..]);

        let triangle = BuildingSet::graphical(&SimpleGraph::complete(3)).unwrap();
        assert_eq!(triangle.member_count(), 7);

        let edgeless = BuildingSet::graphical(&SimpleGraph::new(ElementSet::initial(2))).unwrap();
        assert_eq!(edgeless.member_count(), 2);
    }

    #[test]
    fn graph_realization_round_trips() {
        let path = BuildingSet::graphical(&SimpleGraph::path(4)).unwrap();
        let g = path.graph_realization().expect("graphical by construction");
        assert_eq!(g.edges(), vec![(1, 2), (2, 3), (3, 4)]);

        // The Hochschild building set B_{2,3} is not graphical: its 2-element
        // members span a graph whose building set contains extra members.
        let hoch = BuildingSet::hochschild(2, 3).unwrap();
        assert!(!hoch.is_graphical());

        // The running example is not graphical either ({1,3,4} has no edge {1,3}).
        assert!(!example_building_set().is_graphical());
    }

    #[test]
    fn hochschild_membership() {
        let b = BuildingSet::hochschild(2, 4).unwrap();
        assert_eq!(b.ground(), ElementSet::initial(6));
        assert!(b.contains(set(&[2, 6])));
        assert!(b.contains(set(&[1, 2, 5, 6])));
        assert!(b.contains(set(&[3, 4, 5, 6])));
        assert!(!b.contains(set(&[3, 5])));
        assert!(!b.contains(set(&[1, 2, 3, 4])));

        // n = 0 degenerates to the maximal building set on {1, ..., m}.
        let degenerate = BuildingSet::hochschild(2, 0).unwrap();
        assert_eq!(degenerate, BuildingSet::maximal(ElementSet::initial(2)).unwrap());

        // m = 0 is the Stanley-Pitman building set: singletons plus suffixes.
        let pitman = BuildingSet::hochschild(0, 3).unwrap();
        let shown: Vec<String> = pitman.members().iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["{1}", "{2}", "{3}", "{2,3}", "{1,2,3}"]);
    }

    #[test]
    fn hochschild_is_connected_and_chordal() {
        for m in 0..=4u32 {
            for n in 0..=4u32 {
                if m + n == 0 {
                    continue;
                }
                let b = BuildingSet::hochschild(m, n).unwrap();
                assert!(b.is_connected(), "B_{{{m},{n}}} should be connected");
                assert!(b.is_chordal(), "B_{{{m},{n}}} should be chordal");
            }
        }
    }

    #[test]
    fn omega_lifting() {
        assert_eq!(omega_to_subset(set(&[1, 3]), 4), set(&[1, 3]));
        assert_eq!(omega_to_subset(set(&[2]), 4), set(&[2, 5]));
        assert_eq!(omega_to_subset(ElementSet::EMPTY, 4), ElementSet::EMPTY);
    }

    /// Exhaustive cross-check on all labeled graphs with up to 6 vertices:
    /// the labeling is a perfect elimination ordering exactly when the
    /// graphical building set is chordal.
    #[test]
    fn peo_matches_chordal_building_set_exhaustively() {
        for n in 1..=6u32 {
            let vertices = ElementSet::initial(n);
            let pairs: Vec<(u32, u32)> = {
                let mut p = Vec::new();
                for u in 1..=n {
                    for v in (u + 1)..=n {
                        p.push((u, v));
                    }
                }
                p
            };
            for mask in 0u32..(1 << pairs.len()) {
                let mut g = SimpleGraph::new(vertices);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        g.add_edge(u, v).unwrap();
                    }
                }
                let b = BuildingSet::graphical(&g).unwrap();
                assert_eq!(
                    g.is_peo_labeled(),
                    b.is_chordal(),
                    "PEO/chordality mismatch for graph with edges {:?}",
                    g.edges()
                );
            }
        }
    }
}
