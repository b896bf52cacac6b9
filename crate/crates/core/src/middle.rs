//! The middle graph `M(G)`.
//!
//! `M(G)` has one vertex per vertex of `G` and one per edge of `G`. A vertex
//! element is adjacent to the edge elements it is incident with, and two edge
//! elements are adjacent when the edges share an endpoint. Vertex elements
//! are never adjacent to each other.

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph, Vertex};

/// What an `M(G)` vertex stands for in the source graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum Element {
    Original(Vertex),
    /// Canonical edge index in the source graph.
    Subdivision(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleGraph {
    graph: Graph,
    elements: Vec<Element>,
    source_order: usize,
    source_edges: Vec<Edge>,
}

impl MiddleGraph {
    /// Builds `M(g)`. Vertices `0..n` are `Original(0..n)`, vertex `n + k`
    /// is `Subdivision(k)`.
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut edges = Vec::with_capacity(2 * g.size());
        for (k, &(u, v)) in g.edges().iter().enumerate() {
            edges.push((u, n + k));
            edges.push((v, n + k));
        }
        for v in g.vertices() {
            let incident = g.incident_edges(v);
            for (a, &j) in incident.iter().enumerate() {
                for &k in &incident[a + 1..] {
                    edges.push((n + j, n + k));
                }
            }
        }
        let graph = Graph::new(n + g.size(), edges)
            .expect("distinct edges of a simple graph share at most one endpoint");
        let elements = (0..n)
            .map(Element::Original)
            .chain((0..g.size()).map(Element::Subdivision))
            .collect();
        Self {
            graph,
            elements,
            source_order: n,
            source_edges: g.edges().to_vec(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> Element {
        self.elements[index]
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn source_edges(&self) -> &[Edge] {
        &self.source_edges
    }

    /// `M(G)` vertex index of an element.
    pub fn index_of(&self, element: Element) -> usize {
        match element {
            Element::Original(v) => v,
            Element::Subdivision(k) => self.source_order + k,
        }
    }

    /// Whether `g` is the graph this middle graph was built from.
    pub fn is_built_from(&self, g: &Graph) -> bool {
        g.order() == self.source_order && g.edges() == self.source_edges.as_slice()
    }
}

pub fn build_middle_graph(g: &Graph) -> MiddleGraph {
    MiddleGraph::new(g)
}
