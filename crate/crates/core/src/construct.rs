//! Closed-form PMRDFs for paths and cycles, and value tables for complete
//! and complete bipartite graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::mixed::{is_pmrdf, MixedLabeling};
use crate::roman::{Solver, Variant};

/// Vertices labeled 1 and consecutive pairs `(i, i + 1)` labeled 2 on the
/// path `v_1 .. v_len`, 1-based.
struct Pattern {
    ones: Vec<usize>,
    twos: Vec<usize>,
}

/// Blocks of three `v_{3i+1} = 1, v_{3i+2} v_{3i+3} = 2`, plus `v_len = 1`
/// when `len ≡ 1 (mod 3)`.
fn leading_one_blocks(len: usize) -> Pattern {
    let mut p = Pattern {
        ones: Vec::new(),
        twos: Vec::new(),
    };
    for i in 0..len / 3 {
        p.ones.push(3 * i + 1);
        p.twos.push(3 * i + 2);
    }
    if len % 3 == 1 {
        p.ones.push(len);
    }
    p
}

/// Blocks `v_{3i+1} v_{3i+2} = 2, v_{3i+3} = 1`, closed by `v_{len-1} v_len = 2`;
/// for `len ≡ 2 (mod 3)`.
fn trailing_one_blocks(len: usize) -> Pattern {
    let mut p = Pattern {
        ones: Vec::new(),
        twos: Vec::new(),
    };
    for i in 0..len / 3 {
        p.twos.push(3 * i + 1);
        p.ones.push(3 * i + 3);
    }
    p.twos.push(len - 1);
    p
}

fn path_pattern(len: usize) -> Pattern {
    match len % 3 {
        2 => trailing_one_blocks(len),
        _ => leading_one_blocks(len),
    }
}

fn apply(g: &Graph, f: &mut MixedLabeling, p: &Pattern) -> Result<()> {
    for &i in &p.ones {
        f.set_vertex(i - 1, 1)?;
    }
    for &i in &p.twos {
        f.set_edge(i - 1, i, 2)?;
    }
    debug_assert!(f.matches(g));
    Ok(())
}

fn validated(g: &Graph, f: MixedLabeling, weight: usize) -> Result<MixedLabeling> {
    if !is_pmrdf(g, &f)? {
        return Err(Error::Construction("not a PMRDF".into()));
    }
    if f.weight() != weight {
        return Err(Error::Construction(format!(
            "weight {} instead of {weight}",
            f.weight()
        )));
    }
    Ok(f)
}

/// A PMRDF of weight `n` on `P_n` (vertices in traversal order).
pub fn construct_pmrdf_path(n: usize) -> Result<MixedLabeling> {
    if n < 2 {
        return Err(Error::InvalidParameter("path construction needs n >= 2".into()));
    }
    let g = Family::Path(n).build()?;
    let mut f = MixedLabeling::zeros(&g);
    apply(&g, &mut f, &path_pattern(n))?;
    validated(&g, f, n)
}

/// A PMRDF on `C_n` of weight `n` when `3 | n`, else `n + 1`.
pub fn construct_pmrdf_cycle(n: usize) -> Result<MixedLabeling> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle construction needs n >= 3".into()));
    }
    let g = Family::Cycle(n).build()?;
    let mut f = MixedLabeling::zeros(&g);
    if n.is_multiple_of(3) {
        // v_1 .. v_{n-2} has n - 2 ≡ 1 (mod 3): both ends get 1
        apply(&g, &mut f, &leading_one_blocks(n - 2))?;
        f.set_edge(n - 2, n - 1, 2)?;
        validated(&g, f, n)
    } else {
        apply(&g, &mut f, &path_pattern(n))?;
        f.set_edge(n - 1, 0, 1)?;
        validated(&g, f, n + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Complete,
    CompleteBipartite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub name: String,
    pub params: Vec<usize>,
    pub order: usize,
    pub size: usize,
    pub gamma_pr_star: usize,
}

/// `γ_pR★` for `K_n`, `2 <= n <= max_size`, or for `K_{m,n}`, `1 <= m <= n`,
/// `m + n <= max_size`. Rows come in increasing parameter order.
pub fn open_problem_table(
    solver: &Solver,
    kind: TableKind,
    max_size: usize,
) -> Result<Vec<TableRow>> {
    let instances: Vec<(String, Vec<usize>, Family)> = match kind {
        TableKind::Complete => (2..=max_size)
            .map(|n| (format!("K_{n}"), vec![n], Family::Complete(n)))
            .collect(),
        TableKind::CompleteBipartite => (2..=max_size)
            .flat_map(|total| {
                (1..=total / 2).map(move |m| {
                    let n = total - m;
                    (format!("K_{{{m},{n}}}"), vec![m, n], Family::CompleteBipartite(m, n))
                })
            })
            .collect(),
    };
    instances
        .into_iter()
        .map(|(name, params, family)| {
            let g = family.build()?;
            let r = solver.solve_middle(&g, Variant::Perfect)?;
            Ok(TableRow {
                name,
                params,
                order: g.order(),
                size: g.size(),
                gamma_pr_star: r.optimum(),
            })
        })
        .collect()
}
