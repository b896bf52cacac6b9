//! When does `γ_R★(G)` equal `γ_pR★(G)`?
//!
//! Equality holds exactly when some minimum-weight MRDF `f` satisfies
//!
//! 1. for every edge `uv ∈ E_2`, every other neighbor of `u` and of `v` lies
//!    in `V_1`, and
//! 2. deleting all endpoints of `E_2` edges leaves an edgeless graph.
//!
//! [`check_characterization`] tests this on a concrete graph by enumerating
//! every minimum-weight MRDF, and audits the intermediate structural facts
//! (claims 1 to 6 below) on every minimum-weight PMRDF when the numbers agree.

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::mixed::{is_mrdf, is_pmrdf, MixedLabeling};
use crate::roman::{Solver, Variant};

/// Condition 1: `N(u) \ {v} ⊆ V_1` and `N(v) \ {u} ⊆ V_1` for each `uv ∈ E_2`.
pub fn neighbors_of_two_edges_in_v1(g: &Graph, f: &MixedLabeling) -> bool {
    f.edge_class(2).into_iter().all(|k| {
        let (u, v) = g.edge(k);
        [(u, v), (v, u)].into_iter().all(|(end, other)| {
            g.neighbors(end)
                .iter()
                .all(|&w| w == other || f.vertex(w) == 1)
        })
    })
}

/// Condition 2: every edge has an endpoint that is an endpoint of some
/// `E_2` edge.
pub fn remainder_is_edgeless(g: &Graph, f: &MixedLabeling) -> bool {
    let mut removed = vec![false; g.order()];
    for k in f.edge_class(2) {
        let (u, v) = g.edge(k);
        removed[u] = true;
        removed[v] = true;
    }
    g.edges().iter().all(|&(u, v)| removed[u] || removed[v])
}

pub fn characterization_holds(g: &Graph, f: &MixedLabeling) -> Result<bool> {
    // domain check
    is_mrdf(g, f)?;
    Ok(neighbors_of_two_edges_in_v1(g, f) && remainder_is_edgeless(g, f))
}

pub const CLAIM_NAMES: [&str; 6] = [
    "V2 is empty",
    "E1 is empty",
    "both endpoints of every E2 edge are in V0",
    "every edge adjacent to an E2 edge is in E0",
    "other neighbors of E2 endpoints are in V1",
    "removing E2 endpoints leaves an edgeless graph",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClaimsAudit {
    /// `f` is a PMRDF whose weight equals `γ_R★(G)`.
    pub hypothesis_met: bool,
    pub claims: [bool; 6],
}

impl ClaimsAudit {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|&c| c)
    }
}

/// Evaluates the six claims for `f`, given `γ_R★(G)`.
pub fn audit_claims(g: &Graph, f: &MixedLabeling, gamma_r_star: usize) -> Result<ClaimsAudit> {
    let hypothesis_met = f.weight() == gamma_r_star && is_pmrdf(g, f)?;
    let two_edges = f.edge_class(2);

    let endpoints_in_v0 = two_edges.iter().all(|&k| {
        let (u, v) = g.edge(k);
        f.vertex(u) == 0 && f.vertex(v) == 0
    });
    let neighbors_in_e0 = two_edges.iter().all(|&k| {
        let (u, v) = g.edge(k);
        [(u, v), (v, u)].into_iter().all(|(end, other)| {
            g.neighbors(end)
                .iter()
                .filter(|&&w| w != other)
                .all(|&w| f.edge(g.edge_index(end, w).unwrap()) == 0)
        })
    });

    Ok(ClaimsAudit {
        hypothesis_met,
        claims: [
            f.vertex_class(2).is_empty(),
            f.edge_class(1).is_empty(),
            endpoints_in_v0,
            neighbors_in_e0,
            neighbors_of_two_edges_in_v1(g, f),
            remainder_is_edgeless(g, f),
        ],
    })
}

/// [`audit_claims`] with `γ_R★(G)` computed by the default solver.
pub fn claims_audit(g: &Graph, f: &MixedLabeling) -> Result<ClaimsAudit> {
    let gamma = Solver::default().solve_middle(g, Variant::Roman)?.optimum();
    audit_claims(g, f, gamma)
}

/// Claims outcomes over every minimum-weight PMRDF examined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimsSummary {
    pub examined: usize,
    /// Functions examined that did not meet the hypothesis.
    pub hypothesis_failures: usize,
    /// Some examined function satisfies all six claims.
    pub exists_all_hold: bool,
    /// Per claim: it holds for every examined function.
    pub holds_for_all: [bool; 6],
}

impl ClaimsSummary {
    fn empty() -> Self {
        Self {
            examined: 0,
            hypothesis_failures: 0,
            exists_all_hold: false,
            holds_for_all: [true; 6],
        }
    }

    fn record(&mut self, audit: &ClaimsAudit) {
        self.examined += 1;
        if !audit.hypothesis_met {
            self.hypothesis_failures += 1;
        }
        self.exists_all_hold |= audit.all_hold();
        for (acc, &c) in self.holds_for_all.iter_mut().zip(&audit.claims) {
            *acc &= c;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub gamma_r_star: usize,
    pub gamma_pr_star: usize,
    pub equal: bool,
    /// First minimum-weight MRDF (in tie-break order) satisfying both
    /// conditions, if any.
    pub witness: Option<MixedLabeling>,
    /// Number of minimum-weight MRDFs searched for a witness.
    pub optimal_functions: usize,
    pub claims_audit: ClaimsSummary,
    /// `equal` agrees with the existence of a witness.
    pub theorem_consistent: bool,
}

impl Solver {
    pub fn check_characterization(&self, g: &Graph) -> Result<CharacterizationReport> {
        let roman = self.optimal_mixed_labelings(g, Variant::Roman)?;
        let gamma_r_star = roman[0].weight();
        let gamma_pr_star = self.solve_middle(g, Variant::Perfect)?.optimum();
        let equal = gamma_r_star == gamma_pr_star;

        let mut witness = None;
        for f in &roman {
            if characterization_holds(g, f)? {
                witness = Some(f.clone());
                break;
            }
        }

        let mut claims = ClaimsSummary::empty();
        if equal {
            for f in self.optimal_mixed_labelings(g, Variant::Perfect)? {
                claims.record(&audit_claims(g, &f, gamma_r_star)?);
            }
        }

        Ok(CharacterizationReport {
            gamma_r_star,
            gamma_pr_star,
            equal,
            theorem_consistent: equal == witness.is_some(),
            witness,
            optimal_functions: roman.len(),
            claims_audit: claims,
        })
    }
}

pub fn check_characterization(g: &Graph) -> Result<CharacterizationReport> {
    Solver::default().check_characterization(g)
}
