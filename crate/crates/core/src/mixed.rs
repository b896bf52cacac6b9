//! Labelings of `V(G) ∪ E(G)` and middle Roman domination.
//!
//! A mixed labeling of `G` is the same thing as a labeling of `M(G)`: vertex
//! element `v` is `M(G)`-vertex `v`, edge `k` is `M(G)`-vertex `n + k`.
//! [`is_mrdf`] and [`is_pmrdf`] evaluate the conditions directly on `G`; the
//! test suite checks them against [`crate::roman`] on `M(G)`.

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::middle::{Element, MiddleGraph};
use crate::roman::{Labeling, SolveResult, Solver, Variant};

/// `f: V(G) ∪ E(G) -> {0, 1, 2}`. Edge values are keyed by canonical edge
/// index; the edge endpoints are kept for serialization and domain checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedLabeling {
    vertex_values: Vec<u8>,
    edges: Vec<Edge>,
    edge_values: Vec<u8>,
    weight: usize,
}

impl MixedLabeling {
    pub fn new(g: &Graph, vertex_values: Vec<u8>, edge_values: Vec<u8>) -> Result<Self> {
        if vertex_values.len() != g.order() || edge_values.len() != g.size() {
            return Err(Error::DomainMismatch(format!(
                "{} vertex and {} edge values for a graph with n = {}, m = {}",
                vertex_values.len(),
                edge_values.len(),
                g.order(),
                g.size()
            )));
        }
        Self::from_parts(vertex_values, g.edges().to_vec(), edge_values)
    }

    fn from_parts(vertex_values: Vec<u8>, edges: Vec<Edge>, edge_values: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = vertex_values.iter().chain(&edge_values).find(|&&x| x > 2) {
            return Err(Error::InvalidLabel(bad));
        }
        let weight = vertex_values
            .iter()
            .chain(&edge_values)
            .map(|&x| x as usize)
            .sum();
        Ok(Self {
            vertex_values,
            edges,
            edge_values,
            weight,
        })
    }

    pub fn zeros(g: &Graph) -> Self {
        Self::new(g, vec![0; g.order()], vec![0; g.size()]).unwrap()
    }

    /// Sets the label of vertex `v`.
    pub fn set_vertex(&mut self, v: Vertex, label: u8) -> Result<()> {
        if label > 2 {
            return Err(Error::InvalidLabel(label));
        }
        let old = std::mem::replace(&mut self.vertex_values[v], label);
        self.weight = self.weight + label as usize - old as usize;
        Ok(())
    }

    /// Sets the label of the edge `uv`.
    pub fn set_edge(&mut self, u: Vertex, v: Vertex, label: u8) -> Result<()> {
        if label > 2 {
            return Err(Error::InvalidLabel(label));
        }
        let k = self
            .edges
            .binary_search(&(u.min(v), u.max(v)))
            .map_err(|_| Error::DomainMismatch(format!("no edge ({u}, {v})")))?;
        let old = std::mem::replace(&mut self.edge_values[k], label);
        self.weight = self.weight + label as usize - old as usize;
        Ok(())
    }

    pub fn vertex(&self, v: Vertex) -> u8 {
        self.vertex_values[v]
    }

    /// Label of the edge with canonical index `k`.
    pub fn edge(&self, k: usize) -> u8 {
        self.edge_values[k]
    }

    pub fn vertex_values(&self) -> &[u8] {
        &self.vertex_values
    }

    pub fn edge_values(&self) -> &[u8] {
        &self.edge_values
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// `V_i`: vertices labeled `label`.
    pub fn vertex_class(&self, label: u8) -> Vec<Vertex> {
        (0..self.vertex_values.len())
            .filter(|&v| self.vertex_values[v] == label)
            .collect()
    }

    /// `E_i`: canonical indices of edges labeled `label`.
    pub fn edge_class(&self, label: u8) -> Vec<usize> {
        (0..self.edge_values.len())
            .filter(|&k| self.edge_values[k] == label)
            .collect()
    }

    pub fn matches(&self, g: &Graph) -> bool {
        self.vertex_values.len() == g.order() && self.edges == g.edges()
    }

    fn check_domain(&self, g: &Graph) -> Result<()> {
        if !self.matches(g) {
            return Err(Error::DomainMismatch(
                "mixed labeling was built for a different graph".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeLabel {
    u: Vertex,
    v: Vertex,
    label: u8,
}

impl Serialize for MixedLabeling {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let edge_labels: Vec<EdgeLabel> = self
            .edges
            .iter()
            .zip(&self.edge_values)
            .map(|(&(u, v), &label)| EdgeLabel { u, v, label })
            .collect();
        let mut s = serializer.serialize_struct("MixedLabeling", 3)?;
        s.serialize_field("vertex_labels", &self.vertex_values)?;
        s.serialize_field("edge_labels", &edge_labels)?;
        s.serialize_field("weight", &self.weight)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for MixedLabeling {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vertex_labels: Vec<u8>,
            edge_labels: Vec<EdgeLabel>,
            weight: usize,
        }
        use serde::de::Error as _;
        let raw = Raw::deserialize(deserializer)?;
        let mut pairs: Vec<(Edge, u8)> = raw
            .edge_labels
            .into_iter()
            .map(|e| ((e.u.min(e.v), e.u.max(e.v)), e.label))
            .collect();
        pairs.sort_unstable();
        let (edges, values): (Vec<Edge>, Vec<u8>) = pairs.into_iter().unzip();
        let f = MixedLabeling::from_parts(raw.vertex_labels, edges, values)
            .map_err(D::Error::custom)?;
        if f.weight != raw.weight {
            return Err(D::Error::custom(format!(
                "weight {} does not match labels (sum {})",
                raw.weight, f.weight
            )));
        }
        Ok(f)
    }
}

/// Reads a mixed labeling as a labeling of `M(G)`.
pub fn to_middle_labeling(mg: &MiddleGraph, f: &MixedLabeling) -> Result<Labeling> {
    if f.vertex_values.len() != mg.source_order() || f.edges != mg.source_edges() {
        return Err(Error::DomainMismatch(
            "mixed labeling does not match the middle graph's source".into(),
        ));
    }
    let values = mg
        .elements()
        .iter()
        .map(|&e| match e {
            Element::Original(v) => f.vertex_values[v],
            Element::Subdivision(k) => f.edge_values[k],
        })
        .collect();
    Labeling::new(values)
}

/// Reads a labeling of `M(G)` as a mixed labeling of `G`.
pub fn from_middle_labeling(mg: &MiddleGraph, l: &Labeling) -> Result<MixedLabeling> {
    if l.len() != mg.graph().order() {
        return Err(Error::DomainMismatch(format!(
            "labeling has {} values, M(G) has {} vertices",
            l.len(),
            mg.graph().order()
        )));
    }
    let n = mg.source_order();
    let mut vertex_values = vec![0; n];
    let mut edge_values = vec![0; mg.source_edges().len()];
    for (i, &e) in mg.elements().iter().enumerate() {
        match e {
            Element::Original(v) => vertex_values[v] = l.get(i),
            Element::Subdivision(k) => edge_values[k] = l.get(i),
        }
    }
    MixedLabeling::from_parts(vertex_values, mg.source_edges().to_vec(), edge_values)
}

/// Number of 2-labeled `M(G)`-neighbors of vertex `v`: its incident edges.
fn twos_at_vertex(g: &Graph, f: &MixedLabeling, v: Vertex) -> usize {
    g.neighbors(v)
        .iter()
        .filter(|&&w| f.edge_values[g.edge_index(v, w).unwrap()] == 2)
        .count()
}

/// Number of 2-labeled `M(G)`-neighbors of edge `k`: its endpoints and the
/// edges sharing an endpoint with it.
fn twos_at_edge(g: &Graph, f: &MixedLabeling, k: usize) -> usize {
    let (u, v) = g.edge(k);
    let mut count = 0;
    for (end, other) in [(u, v), (v, u)] {
        if f.vertex_values[end] == 2 {
            count += 1;
        }
        count += g
            .neighbors(end)
            .iter()
            .filter(|&&w| w != other && f.edge_values[g.edge_index(end, w).unwrap()] == 2)
            .count();
    }
    count
}

fn satisfies(g: &Graph, f: &MixedLabeling, variant: Variant) -> bool {
    let ok = |twos: usize| match variant {
        Variant::Roman => twos >= 1,
        Variant::Perfect => twos == 1,
    };
    g.vertices()
        .filter(|&v| f.vertex_values[v] == 0)
        .all(|v| ok(twos_at_vertex(g, f, v)))
        && (0..g.size())
            .filter(|&k| f.edge_values[k] == 0)
            .all(|k| ok(twos_at_edge(g, f, k)))
}

/// Middle Roman dominating function: every 0-vertex is incident to a 2-edge
/// and every 0-edge is adjacent or incident to a 2-element.
pub fn is_mrdf(g: &Graph, f: &MixedLabeling) -> Result<bool> {
    f.check_domain(g)?;
    Ok(satisfies(g, f, Variant::Roman))
}

/// Perfect variant of [`is_mrdf`]: every 0-element sees exactly one 2.
pub fn is_pmrdf(g: &Graph, f: &MixedLabeling) -> Result<bool> {
    f.check_domain(g)?;
    Ok(satisfies(g, f, Variant::Perfect))
}

/// An optimal labeling of `M(G)` and the same labeling on `V(G) ∪ E(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MiddleSolveResult {
    #[serde(flatten)]
    pub middle: SolveResult,
    /// 2-set as source-graph elements.
    pub two_elements: Vec<Element>,
    pub mixed: MixedLabeling,
}

impl MiddleSolveResult {
    pub fn optimum(&self) -> usize {
        self.middle.optimum
    }

    fn from_middle(mg: &MiddleGraph, middle: SolveResult) -> Result<Self> {
        let mixed = from_middle_labeling(mg, &middle.witness)?;
        let two_elements = middle.two_set.iter().map(|&i| mg.element(i)).collect();
        Ok(Self {
            middle,
            two_elements,
            mixed,
        })
    }
}

impl Solver {
    /// `γ_R★(g)` (Roman) or `γ_pR★(g)` (Perfect), solved on `M(g)`.
    pub fn solve_middle(&self, g: &Graph, variant: Variant) -> Result<MiddleSolveResult> {
        let mg = MiddleGraph::new(g);
        let r = self.solve(mg.graph(), variant)?;
        MiddleSolveResult::from_middle(&mg, r)
    }

    /// Every minimum-weight MRDF (Roman) or PMRDF (Perfect) of `g`.
    pub fn optimal_mixed_labelings(&self, g: &Graph, variant: Variant) -> Result<Vec<MixedLabeling>> {
        let mg = MiddleGraph::new(g);
        self.optimal_labelings(mg.graph(), variant)?
            .iter()
            .map(|r| from_middle_labeling(&mg, &r.witness))
            .collect()
    }
}

pub fn gamma_r_star(g: &Graph) -> Result<MiddleSolveResult> {
    Solver::default().solve_middle(g, Variant::Roman)
}

pub fn gamma_pr_star(g: &Graph) -> Result<MiddleSolveResult> {
    Solver::default().solve_middle(g, Variant::Perfect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::roman::{is_prdf, is_rdf};
    use rand::Rng;

    fn p(n: usize) -> Graph {
        Family::Path(n).build().unwrap()
    }

    #[test]
    fn round_trip_through_middle_graph() {
        let g = p(3);
        let mg = MiddleGraph::new(&g);
        let f = MixedLabeling::new(&g, vec![1, 0, 1], vec![2, 0]).unwrap();
        let l = to_middle_labeling(&mg, &f).unwrap();
        assert_eq!(l.values(), &[1, 0, 1, 2, 0]);
        assert_eq!(from_middle_labeling(&mg, &l).unwrap(), f);

        let zeros = MixedLabeling::zeros(&g);
        assert!(to_middle_labeling(&mg, &zeros)
            .unwrap()
            .values()
            .iter()
            .all(|&x| x == 0));
    }

    #[test]
    fn translation_preserves_weight_on_random_labelings() {
        let mut rng = crate::generate::rng(5);
        for _ in 0..50 {
            let n = rng.gen_range(1..8);
            let g = crate::generate::gnp(n, 0.5, &mut rng);
            let mg = MiddleGraph::new(&g);
            let f = MixedLabeling::new(
                &g,
                (0..g.order()).map(|_| rng.gen_range(0..3)).collect(),
                (0..g.size()).map(|_| rng.gen_range(0..3)).collect(),
            )
            .unwrap();
            let l = to_middle_labeling(&mg, &f).unwrap();
            assert_eq!(l.weight(), f.weight());
            assert_eq!(from_middle_labeling(&mg, &l).unwrap(), f);
        }
    }

    #[test]
    fn translation_domain_mismatch() {
        let mg = MiddleGraph::new(&p(3));
        let other = MixedLabeling::zeros(&p(4));
        assert!(matches!(
            to_middle_labeling(&mg, &other),
            Err(Error::DomainMismatch(_))
        ));
        assert!(from_middle_labeling(&mg, &Labeling::constant(4, 1).unwrap()).is_err());
        assert!(is_mrdf(&p(3), &other).is_err());
    }

    #[test]
    fn mrdf_examples() {
        let g = p(2);
        let f = MixedLabeling::new(&g, vec![0, 0], vec![2]).unwrap();
        assert!(is_mrdf(&g, &f).unwrap());
        let f = MixedLabeling::new(&g, vec![0, 1], vec![1]).unwrap();
        assert!(!is_mrdf(&g, &f).unwrap());

        let g = p(3);
        let f = MixedLabeling::new(&g, vec![1, 0, 0], vec![0, 2]).unwrap();
        assert!(is_mrdf(&g, &f).unwrap());
        assert!(is_pmrdf(&g, &f).unwrap());
    }

    #[test]
    fn pmrdf_examples() {
        // C3: edge 01 = 2, endpoints 0, vertex 2 = 1
        let c3 = Family::Cycle(3).build().unwrap();
        let mut f = MixedLabeling::zeros(&c3);
        f.set_edge(0, 1, 2).unwrap();
        f.set_vertex(2, 1).unwrap();
        assert!(is_pmrdf(&c3, &f).unwrap());
        let mg = MiddleGraph::new(&c3);
        assert!(is_prdf(mg.graph(), &to_middle_labeling(&mg, &f).unwrap()).unwrap());

        // two adjacent 2-edges meeting at a 0-vertex
        let g = p(3);
        let f = MixedLabeling::new(&g, vec![1, 0, 1], vec![2, 2]).unwrap();
        assert!(is_mrdf(&g, &f).unwrap());
        assert!(!is_pmrdf(&g, &f).unwrap());
    }

    #[test]
    fn direct_predicates_agree_with_middle_graph() {
        let mut rng = crate::generate::rng(9);
        for _ in 0..400 {
            let n = rng.gen_range(1..7);
            let g = crate::generate::gnp(n, 0.6, &mut rng);
            let mg = MiddleGraph::new(&g);
            // bias toward zeros so the predicates are not trivially false
            let mut pick = || [0u8, 0, 0, 1, 2][rng.gen_range(0..5)];
            let f = MixedLabeling::new(
                &g,
                (0..g.order()).map(|_| pick()).collect(),
                (0..g.size()).map(|_| pick()).collect(),
            )
            .unwrap();
            let l = to_middle_labeling(&mg, &f).unwrap();
            assert_eq!(is_mrdf(&g, &f).unwrap(), is_rdf(mg.graph(), &l).unwrap());
            assert_eq!(is_pmrdf(&g, &f).unwrap(), is_prdf(mg.graph(), &l).unwrap());
        }
    }

    #[test]
    fn star_numbers() {
        let m3 = crate::middle::build_middle_graph(&p(3));
        assert_eq!(crate::roman::gamma_r(m3.graph()).unwrap().optimum, 3);
        assert_eq!(gamma_pr_star(&p(2)).unwrap().optimum(), 2);
        assert_eq!(
            gamma_pr_star(&Family::Cycle(4).build().unwrap()).unwrap().optimum(),
            5
        );
        for n in 1..7 {
            let r = gamma_r_star(&p(n)).unwrap();
            assert_eq!(r.optimum(), n);
            assert!(is_mrdf(&p(n), &r.mixed).unwrap());
            assert_eq!(r.mixed.weight(), n);
        }
    }

    #[test]
    fn mixed_json_shape() {
        let g = p(3);
        let f = MixedLabeling::new(&g, vec![1, 0, 0], vec![0, 2]).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"vertex_labels":[1,0,0],"edge_labels":[{"u":0,"v":1,"label":0},{"u":1,"v":2,"label":2}],"weight":3}"#
        );
        let back: MixedLabeling = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<MixedLabeling>(
            r#"{"vertex_labels":[1],"edge_labels":[],"weight":2}"#
        )
        .is_err());
    }

    #[test]
    fn setters_keep_weight() {
        let g = p(3);
        let mut f = MixedLabeling::zeros(&g);
        f.set_edge(2, 1, 2).unwrap();
        f.set_vertex(0, 1).unwrap();
        f.set_vertex(0, 2).unwrap();
        assert_eq!(f.weight(), 4);
        assert_eq!(f.edge(1), 2);
        assert!(f.set_edge(0, 2, 1).is_err());
        assert_eq!(f.set_vertex(0, 3), Err(Error::InvalidLabel(3)));
    }
}
