//! Roman and perfect Roman dominating functions on an arbitrary graph.
//!
//! A labeling `f: V -> {0, 1, 2}` is a Roman dominating function (RDF) when
//! every vertex labeled 0 has at least one neighbor labeled 2, and a perfect
//! one (PRDF) when it has exactly one. The exact solvers search over the set
//! of vertices labeled 2; see [`crate::search`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::search::{mask_to_vec, MaskGraph};

/// Element count above which the subset search refuses to run by default.
pub const DEFAULT_SIZE_GUARD: usize = 26;
/// Hard ceiling: the search keeps vertex sets in a `u64`.
pub const MAX_SIZE_GUARD: usize = 64;
/// Largest order the `3^n` oracle accepts.
pub const ORACLE_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// At least one 2-labeled neighbor per 0-vertex.
    Roman,
    /// Exactly one 2-labeled neighbor per 0-vertex.
    Perfect,
}

/// A total labeling `V -> {0, 1, 2}` with its cached weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Labeling {
    values: Vec<u8>,
    weight: usize,
}

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|&&x| x > 2) {
            return Err(Error::InvalidLabel(bad));
        }
        let weight = values.iter().map(|&x| x as usize).sum();
        Ok(Self { values, weight })
    }

    pub fn constant(len: usize, value: u8) -> Result<Self> {
        Self::new(vec![value; len])
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn get(&self, v: Vertex) -> u8 {
        self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Vertices carrying `label`, ascending (`V_0`, `V_1` or `V_2`).
    pub fn class(&self, label: u8) -> Vec<Vertex> {
        (0..self.values.len())
            .filter(|&v| self.values[v] == label)
            .collect()
    }

    pub fn two_set(&self) -> Vec<Vertex> {
        self.class(2)
    }
}

impl TryFrom<Vec<u8>> for Labeling {
    type Error = Error;

    fn try_from(values: Vec<u8>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<Labeling> for Vec<u8> {
    fn from(l: Labeling) -> Self {
        l.values
    }
}

/// An optimal labeling together with its weight and 2-set.
///
/// Serializes as `{"optimum", "two_set", "labels"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub optimum: usize,
    pub two_set: Vec<Vertex>,
    #[serde(rename = "labels")]
    pub witness: Labeling,
}

fn check_domain(g: &Graph, f: &Labeling) -> Result<()> {
    if f.len() != g.order() {
        return Err(Error::DomainMismatch(format!(
            "labeling has {} values, graph has {} vertices",
            f.len(),
            g.order()
        )));
    }
    Ok(())
}

fn twos_around(g: &Graph, values: &[u8], v: Vertex) -> usize {
    g.neighbors(v).iter().filter(|&&w| values[w] == 2).count()
}

fn satisfies(g: &Graph, values: &[u8], variant: Variant) -> bool {
    g.vertices().filter(|&v| values[v] == 0).all(|v| {
        let twos = twos_around(g, values, v);
        match variant {
            Variant::Roman => twos >= 1,
            Variant::Perfect => twos == 1,
        }
    })
}

pub fn is_dominating(g: &Graph, f: &Labeling, variant: Variant) -> Result<bool> {
    check_domain(g, f)?;
    Ok(satisfies(g, f.values(), variant))
}

pub fn is_rdf(g: &Graph, f: &Labeling) -> Result<bool> {
    is_dominating(g, f, Variant::Roman)
}

pub fn is_prdf(g: &Graph, f: &Labeling) -> Result<bool> {
    is_dominating(g, f, Variant::Perfect)
}

/// The cheapest labeling whose 2-set is exactly `two_set`.
pub fn forced_completion(g: &Graph, two_set: &[Vertex], variant: Variant) -> Result<Labeling> {
    let mut values = vec![0u8; g.order()];
    for &v in two_set {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
        values[v] = 2;
    }
    for v in g.vertices() {
        if values[v] == 2 {
            continue;
        }
        let twos = twos_around(g, &values, v);
        let dominated = match variant {
            Variant::Roman => twos >= 1,
            Variant::Perfect => twos == 1,
        };
        if !dominated {
            values[v] = 1;
        }
    }
    Labeling::new(values)
}

/// Exact solver with a configurable element-count guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    size_guard: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Self {
            size_guard: DEFAULT_SIZE_GUARD,
        }
    }
}

impl Solver {
    pub fn new(size_guard: usize) -> Result<Self> {
        if size_guard > MAX_SIZE_GUARD {
            return Err(Error::InvalidParameter(format!(
                "size guard {size_guard} exceeds the maximum of {MAX_SIZE_GUARD}"
            )));
        }
        Ok(Self { size_guard })
    }

    pub fn size_guard(&self) -> usize {
        self.size_guard
    }

    fn masks(&self, g: &Graph) -> Result<MaskGraph> {
        if g.order() > self.size_guard {
            return Err(Error::SizeGuard {
                elements: g.order(),
                limit: self.size_guard,
            });
        }
        Ok(MaskGraph::new(g))
    }

    /// `γ_R(g)` or `γ_pR(g)` with a witness. Ties go to the smallest 2-set,
    /// then the lexicographically smallest.
    pub fn solve(&self, g: &Graph, variant: Variant) -> Result<SolveResult> {
        let masks = self.masks(g)?;
        let (optimum, chosen) = masks.minimize(variant);
        Ok(build_result(&masks, optimum, chosen, variant))
    }

    /// Every 2-set whose forced completion is optimal. Each minimum-weight
    /// function is the forced completion of exactly one of them.
    pub fn optimal_two_sets(&self, g: &Graph, variant: Variant) -> Result<Vec<Vec<Vertex>>> {
        let masks = self.masks(g)?;
        let (optimum, _) = masks.minimize(variant);
        Ok(masks
            .all_at(optimum, variant)
            .into_iter()
            .map(mask_to_vec)
            .collect())
    }

    /// All minimum-weight functions, in tie-break order.
    pub fn optimal_labelings(&self, g: &Graph, variant: Variant) -> Result<Vec<SolveResult>> {
        let masks = self.masks(g)?;
        let (optimum, _) = masks.minimize(variant);
        Ok(masks
            .all_at(optimum, variant)
            .into_iter()
            .map(|chosen| build_result(&masks, optimum, chosen, variant))
            .collect())
    }

    /// Solves each connected component separately and sums the optima.
    /// The size guard applies per component.
    pub fn solve_by_components(&self, g: &Graph, variant: Variant) -> Result<SolveResult> {
        let mut values = vec![0u8; g.order()];
        let mut optimum = 0;
        for (component, map) in g.components() {
            let part = self.solve(&component, variant)?;
            optimum += part.optimum;
            for (i, &v) in map.iter().enumerate() {
                values[v] = part.witness.get(i);
            }
        }
        let witness = Labeling::new(values)?;
        debug_assert_eq!(witness.weight(), optimum);
        Ok(SolveResult {
            optimum,
            two_set: witness.two_set(),
            witness,
        })
    }
}

fn build_result(masks: &MaskGraph, optimum: usize, chosen: u64, variant: Variant) -> SolveResult {
    let ones = masks.completion_ones(chosen, variant);
    let two_set = mask_to_vec(chosen);
    let values = (0..masks.order())
        .map(|v| {
            if chosen >> v & 1 == 1 {
                2
            } else if ones >> v & 1 == 1 {
                1
            } else {
                0
            }
        })
        .collect();
    let witness = Labeling::new(values).expect("labels are 0, 1 or 2");
    debug_assert_eq!(witness.weight(), optimum);
    SolveResult {
        optimum,
        two_set,
        witness,
    }
}

pub fn gamma_r(g: &Graph) -> Result<SolveResult> {
    Solver::default().solve(g, Variant::Roman)
}

pub fn gamma_pr(g: &Graph) -> Result<SolveResult> {
    Solver::default().solve(g, Variant::Perfect)
}

pub fn enumerate_optimal_two_sets(g: &Graph, variant: Variant) -> Result<Vec<Vec<Vertex>>> {
    Solver::default().optimal_two_sets(g, variant)
}

pub fn solve_by_components(g: &Graph, variant: Variant) -> Result<SolveResult> {
    Solver::default().solve_by_components(g, variant)
}

/// Minimum weight over all `3^n` labelings passing the predicate.
///
/// Independent of the subset search; used to cross-check it.
pub fn brute_force_oracle(g: &Graph, variant: Variant) -> Result<usize> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::OracleBound {
            order: n,
            limit: ORACLE_MAX_ORDER,
        });
    }
    let mut values = vec![0u8; n];
    let mut best = usize::MAX;
    loop {
        let weight: usize = values.iter().map(|&x| x as usize).sum();
        if weight < best && satisfies(g, &values, variant) {
            best = weight;
        }
        // base-3 increment
        let mut i = 0;
        while i < n && values[i] == 2 {
            values[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        values[i] += 1;
    }
    Ok(best)
}
