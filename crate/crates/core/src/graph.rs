//! Simple undirected graphs with a canonical edge order.
//!
//! Edges are stored as `(u, v)` pairs with `u < v`, sorted lexicographically.
//! The position of an edge in that list is its *edge index*; the middle-graph
//! transform and mixed labelings key edges by this index.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list.
    ///
    /// Endpoint order within a pair does not matter; self-loops and
    /// duplicate edges are rejected.
    pub fn new(order: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut canonical = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            canonical.push((a.min(b), a.max(b)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &canonical {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            order,
            edges: canonical,
            adjacency,
        })
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Self {
            order,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Canonical index of the edge `uv`, in either endpoint order.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Canonical indices of the edges incident to `v`, ascending.
    pub fn incident_edges(&self, v: Vertex) -> Vec<usize> {
        let mut out: Vec<usize> = self.adjacency[v]
            .iter()
            .filter_map(|&w| self.edge_index(v, w))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    /// Splits the graph into connected components.
    ///
    /// Each component comes with the ascending list of the original vertex
    /// indices it covers; component vertex `i` is original vertex `map[i]`.
    /// Components are ordered by their smallest original vertex.
    pub fn components(&self) -> Vec<(Graph, Vec<Vertex>)> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for root in self.vertices() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut members = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push((self.induced(&members), members));
        }
        out
    }

    /// Subgraph induced by `vertices` (ascending, distinct), relabeled to
    /// `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut position = vec![usize::MAX; self.order];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            let (pu, pv) = (position[u], position[v]);
            (pu != usize::MAX && pv != usize::MAX).then_some((pu, pv))
        });
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.order + other.order, edges).expect("disjoint union of simple graphs")
    }

    /// Renames vertex `v` to `permutation[v]`.
    pub fn relabel(&self, permutation: &[Vertex]) -> Result<Graph> {
        if permutation.len() != self.order {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for order {}",
                permutation.len(),
                self.order
            )));
        }
        let mut hit = vec![false; self.order];
        for &p in permutation {
            if p >= self.order || std::mem::replace(&mut hit[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        Graph::new(
            self.order,
            self.edges
                .iter()
                .map(|&(u, v)| (permutation[u], permutation[v])),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges)
    }
}

/// Named graph families with canonical labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `P_n`, vertices in traversal order.
    Path(usize),
    /// `C_n`, vertices in traversal order; `v_n v_1` closes the cycle.
    Cycle(usize),
    Complete(usize),
    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    CompleteBipartite(usize, usize),
    /// `K_{1,n}` with center 0 and `n` leaves.
    Star(usize),
    Empty(usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        let bad = |what: &str| Err(Error::InvalidParameter(what.to_string()));
        match self {
            Family::Path(n) => {
                if n < 1 {
                    return bad("path needs n >= 1");
                }
                Graph::new(n, (1..n).map(|i| (i - 1, i)))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return bad("cycle needs n >= 3");
                }
                Graph::new(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))
            }
            Family::Complete(n) => {
                if n < 1 {
                    return bad("complete graph needs n >= 1");
                }
                Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Family::CompleteBipartite(m, n) => {
                if m < 1 || n < 1 {
                    return bad("complete bipartite graph needs m, n >= 1");
                }
                Graph::new(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
            }
            Family::Star(n) => {
                if n < 1 {
                    return bad("star needs at least one leaf");
                }
                Graph::new(n + 1, (1..=n).map(|v| (0, v)))
            }
            Family::Empty(n) => Ok(Graph::empty(n)),
        }
    }
}
