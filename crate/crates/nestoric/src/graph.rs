//! Finite simple graphs on labeled vertices.
//!
//! Graphs enter the picture in two ways: a graph `G` generates the graphical
//! building set `B(G)` of connected induced subgraphs, and the `a`-number of
//! `G` computes Betti numbers of the associated real toric manifold without
//! any chordality hypothesis.

use crate::set::ElementSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(u32),
    #[error("edge endpoint {0} is not a declared vertex")]
    UnknownVertex(u32),
}

/// A simple graph: a vertex set of labels plus an adjacency mask per label.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: ElementSet,
    /// `adj[v]` is the neighborhood of label `v` (index 0 unused).
    adj: Vec<ElementSet>,
}

impl SimpleGraph {
    /// A graph with the given vertices and no edges.
    pub fn new(vertices: ElementSet) -> SimpleGraph {
        SimpleGraph {
            vertices,
            adj: vec![ElementSet::EMPTY; 65],
        }
    }

    /// Adds an undirected edge. Rejects loops and undeclared endpoints.
    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        for w in [u, v] {
            if !self.vertices.contains(w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        self.adj[u as usize] = self.adj[u as usize].with(v);
        self.adj[v as usize] = self.adj[v as usize].with(u);
        Ok(())
    }

    pub fn vertices(&self) -> ElementSet {
        self.vertices
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.vertices.contains(u) && self.adj[u as usize].contains(v)
    }

    /// Neighborhood of `v` inside the graph.
    pub fn neighbors(&self, v: u32) -> ElementSet {
        self.adj[v as usize]
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for u in self.vertices.iter() {
            for v in self.adj[u as usize].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// The path `1 - 2 - ... - n` (consecutive labels adjacent).
    pub fn path(n: u32) -> SimpleGraph {
        let mut g = SimpleGraph::new(ElementSet::initial(n));
        for v in 1..n {
            g.add_edge(v, v + 1).unwrap();
        }
        g
    }

    /// The complete graph on `{1, ..., n}`.
    pub fn complete(n: u32) -> SimpleGraph {
        let mut g = SimpleGraph::new(ElementSet::initial(n));
        for u in 1..=n {
            for v in (u + 1)..=n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// The star `K_{1,n-1}` on `{1, ..., n}` with center `n`.
    ///
    /// Putting the center last makes the labeling a perfect elimination
    /// ordering, so the graphical building set is chordal.
    pub fn star(n: u32) -> SimpleGraph {
        let mut g = SimpleGraph::new(ElementSet::initial(n));
        for v in 1..n {
            g.add_edge(v, n).unwrap();
        }
        g
    }

    /// The cycle `1 - 2 - ... - n - 1`.
    pub fn cycle(n: u32) -> SimpleGraph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = SimpleGraph::path(n);
        g.add_edge(n, 1).unwrap();
        g
    }

    /// Whether the induced subgraph on `subset` is connected (and nonempty).
    pub fn is_connected_on(&self, subset: ElementSet) -> bool {
        let Some(start) = subset.min_label() else {
            return false;
        };
        if !subset.is_subset_of(self.vertices) {
            return false;
        }
        let mut seen = ElementSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = ElementSet::EMPTY;
            for v in frontier.iter() {
                next = next | (self.adj[v as usize] & subset);
            }
            frontier = next - seen;
            seen = seen | next;
        }
        seen == subset
    }

    /// The induced subgraph on `subset` (which must be a subset of the vertices).
    pub fn induced(&self, subset: ElementSet) -> SimpleGraph {
        assert!(subset.is_subset_of(self.vertices));
        let mut g = SimpleGraph::new(subset);
        for v in subset.iter() {
            g.adj[v as usize] = self.adj[v as usize] & subset;
        }
        g
    }

    /// Whether the vertex labels form a perfect elimination ordering:
    /// there is no induced triple `i < j < k` with edges `ij`, `ik` but no `jk`.
    pub fn is_peo_labeled(&self) -> bool {
        for i in self.vertices.iter() {
            let later = self.adj[i as usize] - ElementSet::interval(1, i);
            for j in later.iter() {
                for k in later.iter() {
                    if j < k && !self.has_edge(j, k) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(V={}, E={:?})", self.vertices, self.edges())
    }
}
