//! Exact Roman and perfect Roman domination on middle graphs.
//!
//! * [`graph`], [`io`], [`middle`], [`generate`]: graphs, text formats, the
//!   middle-graph transform and seeded random corpora.
//! * [`roman`]: RDF/PRDF predicates, exact solvers and a brute-force oracle.
//! * [`mixed`], [`characterization`], [`construct`]: labelings of
//!   `V(G) ∪ E(G)`, the equality characterization for `γ_R(M(G)) = γ_pR(M(G))`,
//!   and closed-form labelings for paths and cycles.

pub mod characterization;
pub mod construct;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod middle;
pub mod mixed;
pub mod roman;
mod search;

pub use error::{Error, ParseError, Result};
pub use graph::{Edge, Family, Graph, Vertex};
pub use middle::{build_middle_graph, Element, MiddleGraph};
pub use mixed::MixedLabeling;
pub use roman::{Labeling, SolveResult, Solver, Variant};
