//! Simplicial complexes: nested set complexes of building sets, their parity
//! subcomplexes, and order complexes of finite posets.
//!
//! A nested set of a building set `B` is a collection of members, none of
//! them a connected component, that are pairwise nested or disjoint and whose
//! pairwise-disjoint subcollections of size at least 2 never union to a
//! member. These collections form the nested set complex `K_B`; the Betti
//! numbers of the real toric manifold are read off induced subcomplexes of
//! `K_B` selected by intersection parity against a fixed subset.
//!
//! The void complex (no faces at all) is distinguished from the empty
//! complex (only the empty face): the former has vanishing reduced homology
//! by convention, the latter has reduced homology of rank 1 in degree -1.

use crate::building::BuildingSet;
use crate::set::ElementSet;
use std::collections::HashSet;
use thiserror::Error;

/// Enumeration cap on the number of faces of a single complex.
pub const FACE_BOUND: usize = 2_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("complex exceeds the enumeration bound of {0} faces")]
    TooLarge(usize),
    #[error("{0} is not a member of the building set")]
    NotAMember(ElementSet),
    #[error("{0} is a connected component, not a nested-set vertex")]
    IsComponent(ElementSet),
}

/// A finite simplicial complex with labeled vertices and every face listed.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<ElementSet>,
    /// `faces[d]` holds the d-faces as ascending vertex-index lists, in
    /// lexicographic order.
    faces: Vec<Vec<Vec<u32>>>,
    void: bool,
}

impl SimplicialComplex {
    /// The void complex: no faces, not even the empty one.
    pub fn void() -> SimplicialComplex {
        SimplicialComplex {
            vertices: Vec::new(),
            faces: Vec::new(),
            void: true,
        }
    }

    /// The complex containing only the empty face.
    pub fn empty() -> SimplicialComplex {
        SimplicialComplex {
            vertices: Vec::new(),
            faces: Vec::new(),
            void: false,
        }
    }

    /// Builds a complex as the downward closure of the given maximal faces
    /// (ascending vertex-index lists). Vertices not covered by any listed
    /// face are still vertices of the complex.
    pub fn from_maximal_faces(
        vertices: Vec<ElementSet>,
        maximal: &[Vec<u32>],
    ) -> SimplicialComplex {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for v in 0..vertices.len() as u32 {
            seen.insert(vec![v]);
        }
        for face in maximal {
            debug_assert!(face.windows(2).all(|w| w[0] < w[1]));
            debug_assert!(face.iter().all(|&v| (v as usize) < vertices.len()));
            // Every nonempty subsequence, via bitmask over positions.
            for pick in 1u32..(1 << face.len()) {
                let sub: Vec<u32> = face
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| pick >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                seen.insert(sub);
            }
        }
        let mut all: Vec<Vec<u32>> = seen.into_iter().collect();
        all.sort();
        SimplicialComplex::from_faces(vertices, all)
    }

    fn from_faces(vertices: Vec<ElementSet>, all_faces: Vec<Vec<u32>>) -> SimplicialComplex {
        let max_dim = all_faces.iter().map(Vec::len).max().unwrap_or(0);
        let mut faces: Vec<Vec<Vec<u32>>> = vec![Vec::new(); max_dim];
        for f in all_faces {
            debug_assert!(f.windows(2).all(|w| w[0] < w[1]));
            if !f.is_empty() {
                faces[f.len() - 1].push(f);
            }
        }
        SimplicialComplex {
            vertices,
            faces,
            void: false,
        }
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// Vertex labels in deterministic order.
    pub fn vertex_labels(&self) -> &[ElementSet] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Dimension: `None` for the void complex, `-1` for the empty complex.
    pub fn dim(&self) -> Option<isize> {
        if self.void {
            None
        } else {
            Some(self.faces.len() as isize - 1)
        }
    }

    /// The d-faces, as ascending vertex-index lists.
    pub fn faces_of_dim(&self, d: usize) -> &[Vec<u32>] {
        self.faces.get(d).map_or(&[], Vec::as_slice)
    }

    /// Face counts `(f_0, f_1, ...)`; empty for the void and empty complexes.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Total number of nonempty faces.
    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Unreduced Euler characteristic `f_0 - f_1 + f_2 - ...`.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(d, fs)| {
                let count = fs.len() as i64;
                if d % 2 == 0 {
                    count
                } else {
                    -count
                }
            })
            .sum()
    }

    /// Reduced Euler characteristic (unreduced minus 1); 0 for the void
    /// complex by convention.
    pub fn reduced_euler(&self) -> i64 {
        if self.void {
            0
        } else {
            self.euler_characteristic() - 1
        }
    }

    /// Returns the vertex labels of a minimal non-face whose pairs are all
    /// edges, or `None` when the complex is flag. The search proceeds by
    /// clique size, so the returned witness is minimal.
    pub fn flag_witness(&self) -> Option<Vec<ElementSet>> {
        let n = self.vertex_count();
        let mut adjacent = vec![vec![false; n]; n];
        for e in self.faces_of_dim(1) {
            adjacent[e[0] as usize][e[1] as usize] = true;
            adjacent[e[1] as usize][e[0] as usize] = true;
        }
        let face_set: HashSet<&Vec<u32>> = self.faces.iter().flatten().collect();
        // Level-wise: extend face-cliques of size k by one adjacent vertex.
        let mut level: Vec<Vec<u32>> = self.faces_of_dim(1).to_vec();
        while !level.is_empty() {
            let mut next = Vec::new();
            for clique in &level {
                for v in (clique[clique.len() - 1] + 1)..n as u32 {
                    if !clique.iter().all(|&u| adjacent[u as usize][v as usize]) {
                        continue;
                    }
                    let mut candidate = clique.clone();
                    candidate.push(v);
                    if !face_set.contains(&candidate) {
                        return Some(
                            candidate
                                .iter()
                                .map(|&i| self.vertices[i as usize])
                                .collect(),
                        );
                    }
                    next.push(candidate);
                }
            }
            level = next;
        }
        None
    }

    pub fn is_flag(&self) -> bool {
        self.flag_witness().is_none()
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.void {
            return write!(f, "SimplicialComplex(void)");
        }
        write!(
            f,
            "SimplicialComplex(vertices={}, f={:?})",
            self.vertex_count(),
            self.f_vector()
        )
    }
}

/// Whether two sets are nested (one contains the other) or disjoint.
fn nested_or_disjoint(a: ElementSet, b: ElementSet) -> bool {
    a.is_subset_of(b) || b.is_subset_of(a) || a.is_disjoint(b)
}

/// Checks whether adding `candidate` to the valid nested collection
/// `face` (of which `disjoint` lists the members disjoint from `candidate`)
/// creates a pairwise-disjoint subcollection unioning to a member.
fn creates_forbidden_union(b: &BuildingSet, disjoint: &[ElementSet], candidate: ElementSet) -> bool {
    fn recurse(b: &BuildingSet, items: &[ElementSet], start: usize, union: ElementSet) -> bool {
        for i in start..items.len() {
            if !items[i].is_disjoint(union) {
                continue;
            }
            let bigger = union | items[i];
            if b.contains(bigger) || recurse(b, items, i + 1, bigger) {
                return true;
            }
        }
        false
    }
    recurse(b, disjoint, 0, candidate)
}

/// Enumerates all nested sets drawn from `vertex_sets` (each a member of `b`
/// and not a component), including the singletons.
fn enumerate_nested_faces(
    b: &BuildingSet,
    vertex_sets: &[ElementSet],
) -> Result<Vec<Vec<u32>>, ComplexError> {
    let mut all = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn recurse(
        b: &BuildingSet,
        sets: &[ElementSet],
        from: usize,
        current: &mut Vec<u32>,
        all: &mut Vec<Vec<u32>>,
    ) -> Result<(), ComplexError> {
        for v in from..sets.len() {
            let vs = sets[v];
            if !current
                .iter()
                .all(|&u| nested_or_disjoint(sets[u as usize], vs))
            {
                continue;
            }
            let disjoint: Vec<ElementSet> = current
                .iter()
                .map(|&u| sets[u as usize])
                .filter(|u| u.is_disjoint(vs))
                .collect();
            if creates_forbidden_union(b, &disjoint, vs) {
                continue;
            }
            current.push(v as u32);
            all.push(current.clone());
            if all.len() > FACE_BOUND {
                return Err(ComplexError::TooLarge(FACE_BOUND));
            }
            recurse(b, sets, v + 1, current, all)?;
            current.pop();
        }
        Ok(())
    }
    recurse(b, vertex_sets, 0, &mut current, &mut all)?;
    Ok(all)
}

/// Vertices of the nested set complex: members that are not components.
fn nested_vertices(b: &BuildingSet) -> Vec<ElementSet> {
    let components: HashSet<u64> = b
        .connected_components()
        .into_iter()
        .map(|c| c.bits())
        .collect();
    b.members()
        .iter()
        .copied()
        .filter(|m| !components.contains(&m.bits()))
        .collect()
}

/// The nested set complex `K_B`. For a disconnected building set this is the
/// join of the component complexes (unions across components can never be
/// members, so the nested-set conditions decouple).
pub fn nested_set_complex(b: &BuildingSet) -> Result<SimplicialComplex, ComplexError> {
    let vertices = nested_vertices(b);
    let faces = enumerate_nested_faces(b, &vertices)?;
    Ok(SimplicialComplex::from_faces(vertices, faces))
}

/// Whether `collection` is a nested set of `b`. Every element must be a
/// member and must not be a connected component.
pub fn is_nested_set(b: &BuildingSet, collection: &[ElementSet]) -> Result<bool, ComplexError> {
    let components: HashSet<u64> = b
        .connected_components()
        .into_iter()
        .map(|c| c.bits())
        .collect();
    for &s in collection {
        if !b.contains(s) {
            return Err(ComplexError::NotAMember(s));
        }
        if components.contains(&s.bits()) {
            return Err(ComplexError::IsComponent(s));
        }
    }
    for (i, &a) in collection.iter().enumerate() {
        for &c in &collection[i + 1..] {
            if !nested_or_disjoint(a, c) {
                return Ok(false);
            }
        }
    }
    for (i, &a) in collection.iter().enumerate() {
        let disjoint: Vec<ElementSet> = collection[i + 1..]
            .iter()
            .copied()
            .filter(|c| c.is_disjoint(a))
            .collect();
        if creates_forbidden_union(b, &disjoint, a) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The full subcomplex of `K_B` on the vertices `J` with `|J ∩ subset|` odd.
/// By convention the empty selector yields the void complex.
pub fn induced_parity_subcomplex(
    b: &BuildingSet,
    subset: ElementSet,
) -> Result<SimplicialComplex, ComplexError> {
    if subset.is_empty() {
        return Ok(SimplicialComplex::void());
    }
    let vertices: Vec<ElementSet> = nested_vertices(b)
        .into_iter()
        .filter(|j| (*j & subset).len() % 2 == 1)
        .collect();
    let faces = enumerate_nested_faces(b, &vertices)?;
    Ok(SimplicialComplex::from_faces(vertices, faces))
}

/// The full subcomplex of `K_B` on vertices of odd cardinality.
pub fn odd_complex(b: &BuildingSet) -> Result<SimplicialComplex, ComplexError> {
    parity_by_cardinality(b, 1)
}

/// The full subcomplex of `K_B` on vertices of even cardinality.
pub fn even_complex(b: &BuildingSet) -> Result<SimplicialComplex, ComplexError> {
    parity_by_cardinality(b, 0)
}

fn parity_by_cardinality(b: &BuildingSet, parity: usize) -> Result<SimplicialComplex, ComplexError> {
    let vertices: Vec<ElementSet> = nested_vertices(b)
        .into_iter()
        .filter(|j| j.len() % 2 == parity)
        .collect();
    let faces = enumerate_nested_faces(b, &vertices)?;
    Ok(SimplicialComplex::from_faces(vertices, faces))
}

/// The order complex of a finite poset given by elements and a strict
/// comparability predicate on element indices: faces are the chains.
pub fn order_complex(
    elements: &[ElementSet],
    less: impl Fn(usize, usize) -> bool,
) -> Result<SimplicialComplex, ComplexError> {
    let comparable =
        |i: usize, j: usize| less(i, j) || less(j, i);
    let mut all = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn recurse(
        n: usize,
        comparable: &impl Fn(usize, usize) -> bool,
        from: usize,
        current: &mut Vec<u32>,
        all: &mut Vec<Vec<u32>>,
    ) -> Result<(), ComplexError> {
        for v in from..n {
            if !current.iter().all(|&u| comparable(u as usize, v)) {
                continue;
            }
            current.push(v as u32);
            all.push(current.clone());
            if all.len() > FACE_BOUND {
                return Err(ComplexError::TooLarge(FACE_BOUND));
            }
            recurse(n, comparable, v + 1, current, all)?;
            current.pop();
        }
        Ok(())
    }
    recurse(elements.len(), &comparable, 0, &mut current, &mut all)?;
    Ok(SimplicialComplex::from_faces(elements.to_vec(), all))
}
