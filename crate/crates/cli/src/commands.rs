use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use middle_roman::characterization::CharacterizationReport;
use middle_roman::construct::{
    construct_pmrdf_cycle, construct_pmrdf_path, open_problem_table, TableKind,
};
use middle_roman::generate::random_corpus;
use middle_roman::io::to_edge_list;
use middle_roman::mixed::{is_mrdf, is_pmrdf, to_middle_labeling, MiddleSolveResult};
use middle_roman::roman::is_dominating;
use middle_roman::{
    build_middle_graph, Element, Error, Family, Graph, MixedLabeling, SolveResult, Solver, Variant,
};

use crate::source::Input;
use crate::{CliError, Gamma, OutputFormat, Report};

fn ok(text: String) -> Result<Report, CliError> {
    Ok(Report { text, code: 0 })
}

fn graphs(inputs: &[Input]) -> Result<Vec<(&str, &Graph)>, CliError> {
    inputs
        .iter()
        .map(|i| match &i.graph {
            Ok(g) => Ok((i.label.as_str(), g)),
            Err(e) => Err(CliError::Input(format!("{}: {e}", i.label))),
        })
        .collect()
}

fn json_line(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn element_name(g: &Graph, e: Element) -> String {
    match e {
        Element::Original(v) => format!("v{v}"),
        Element::Subdivision(k) => {
            let (u, v) = g.edge(k);
            format!("e{u}-{v}")
        }
    }
}

fn mixed_human(g: &Graph, f: &MixedLabeling) -> String {
    let vertices = join(f.vertex_values());
    let edges: Vec<String> = g
        .edges()
        .iter()
        .zip(f.edge_values())
        .map(|(&(u, v), l)| format!("{u}-{v}:{l}"))
        .collect();
    format!("vertices [{vertices}] edges [{}]", edges.join(" "))
}

fn invalid_witness(what: &str) -> CliError {
    CliError::Diagnostic(format!("{what}: witness failed re-validation"))
}

fn checked_plain(g: &Graph, r: SolveResult, v: Variant, what: &str) -> Result<SolveResult, CliError> {
    let valid = is_dominating(g, &r.witness, v)? && r.witness.weight() == r.optimum;
    valid.then_some(r).ok_or_else(|| invalid_witness(what))
}

fn checked_middle(
    g: &Graph,
    r: MiddleSolveResult,
    v: Variant,
    what: &str,
) -> Result<MiddleSolveResult, CliError> {
    let mg = build_middle_graph(g);
    let direct = match v {
        Variant::Roman => is_mrdf(g, &r.mixed)?,
        Variant::Perfect => is_pmrdf(g, &r.mixed)?,
    };
    let translated = to_middle_labeling(&mg, &r.mixed)?;
    let valid = direct
        && translated == r.middle.witness
        && is_dominating(mg.graph(), &translated, v)?
        && r.mixed.weight() == r.optimum();
    valid.then_some(r).ok_or_else(|| invalid_witness(what))
}

#[derive(Serialize)]
struct SolveRecord<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_r: Option<SolveResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_pr: Option<SolveResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_r_star: Option<MiddleSolveResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_pr_star: Option<MiddleSolveResult>,
}

pub fn solve(
    solver: &Solver,
    inputs: &[Input],
    gammas: &[Gamma],
    out: Option<OutputFormat>,
) -> Result<Report, CliError> {
    let mut wanted: Vec<Gamma> = if gammas.is_empty() {
        vec![Gamma::R, Gamma::Pr, Gamma::RStar, Gamma::PrStar]
    } else {
        gammas.to_vec()
    };
    wanted.sort_unstable();
    wanted.dedup();

    let mut records = Vec::new();
    for (label, g) in graphs(inputs)? {
        let mut rec = SolveRecord {
            graph: label,
            n: g.order(),
            m: g.size(),
            gamma_r: None,
            gamma_pr: None,
            gamma_r_star: None,
            gamma_pr_star: None,
        };
        for &which in &wanted {
            match which {
                Gamma::R => {
                    let r = solver.solve(g, Variant::Roman)?;
                    rec.gamma_r = Some(checked_plain(g, r, Variant::Roman, "gamma_r")?);
                }
                Gamma::Pr => {
                    let r = solver.solve(g, Variant::Perfect)?;
                    rec.gamma_pr = Some(checked_plain(g, r, Variant::Perfect, "gamma_pr")?);
                }
                Gamma::RStar => {
                    let r = solver.solve_middle(g, Variant::Roman)?;
                    rec.gamma_r_star = Some(checked_middle(g, r, Variant::Roman, "gamma_r_star")?);
                }
                Gamma::PrStar => {
                    let r = solver.solve_middle(g, Variant::Perfect)?;
                    rec.gamma_pr_star =
                        Some(checked_middle(g, r, Variant::Perfect, "gamma_pr_star")?);
                }
            }
        }
        records.push((g, rec));
    }

    let mut text = String::new();
    match out.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            for (_, rec) in &records {
                text.push_str(&json_line(rec));
            }
        }
        OutputFormat::Tsv => {
            text.push_str("graph\tn\tm\tgamma\toptimum\ttwo_set\tlabels\n");
            for (g, rec) in &records {
                let head = format!("{}\t{}\t{}", rec.graph, rec.n, rec.m);
                for (name, r) in [("r", &rec.gamma_r), ("pr", &rec.gamma_pr)] {
                    if let Some(r) = r {
                        let _ = writeln!(
                            text,
                            "{head}\t{name}\t{}\t{}\t{}",
                            r.optimum,
                            join(&r.two_set),
                            join(r.witness.values())
                        );
                    }
                }
                for (name, r) in [("r-star", &rec.gamma_r_star), ("pr-star", &rec.gamma_pr_star)] {
                    if let Some(r) = r {
                        let _ = writeln!(
                            text,
                            "{head}\t{name}\t{}\t{}\t{}",
                            r.optimum(),
                            join(r.two_elements.iter().map(|&e| element_name(g, e))),
                            join(r.middle.witness.values())
                        );
                    }
                }
            }
        }
        OutputFormat::Human => {
            for (g, rec) in &records {
                let _ = writeln!(text, "{}: n = {}, m = {}", rec.graph, rec.n, rec.m);
                for (name, r) in [("gamma_R  ", &rec.gamma_r), ("gamma_pR ", &rec.gamma_pr)] {
                    if let Some(r) = r {
                        let _ = writeln!(
                            text,
                            "  {name} = {:<3} 2-set {{{}}}  labels [{}]",
                            r.optimum,
                            join(&r.two_set),
                            join(r.witness.values())
                        );
                    }
                }
                for (name, r) in [("gamma_R* ", &rec.gamma_r_star), ("gamma_pR*", &rec.gamma_pr_star)]
                {
                    if let Some(r) = r {
                        let _ = writeln!(
                            text,
                            "  {name} = {:<3} 2-set {{{}}}  {}",
                            r.optimum(),
                            join(r.two_elements.iter().map(|&e| element_name(g, e))),
                            mixed_human(g, &r.mixed)
                        );
                    }
                }
            }
        }
    }
    ok(text)
}

#[derive(Serialize)]
struct MiddleRecord<'a> {
    graph: &'a str,
    order: usize,
    size: usize,
    edges: &'a [(usize, usize)],
    elements: &'a [Element],
}

pub fn middle(inputs: &[Input], out: Option<OutputFormat>) -> Result<Report, CliError> {
    let mut text = String::new();
    for (label, g) in graphs(inputs)? {
        let mg = build_middle_graph(g);
        match out.unwrap_or(OutputFormat::Json) {
            OutputFormat::Json => text.push_str(&json_line(&MiddleRecord {
                graph: label,
                order: mg.graph().order(),
                size: mg.graph().size(),
                edges: mg.graph().edges(),
                elements: mg.elements(),
            })),
            OutputFormat::Tsv | OutputFormat::Human => {
                let _ = writeln!(text, "# M(G) of {label}");
                text.push_str(&to_edge_list(mg.graph()));
                for (i, &e) in mg.elements().iter().enumerate() {
                    let _ = writeln!(text, "# {i}\t{}", element_name(g, e));
                }
            }
        }
    }
    ok(text)
}

pub fn construct(
    path: Option<usize>,
    cycle: Option<usize>,
    out: Option<OutputFormat>,
) -> Result<Report, CliError> {
    let (f, family) = match (path, cycle) {
        (Some(n), _) => (construct_pmrdf_path(n)?, Family::Path(n)),
        (None, Some(n)) => (construct_pmrdf_cycle(n)?, Family::Cycle(n)),
        (None, None) => unreachable!("clap requires a shape"),
    };
    let g = family.build()?;
    if !is_pmrdf(&g, &f)? {
        return Err(invalid_witness("construction"));
    }
    let text = match out.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => json_line(&f),
        OutputFormat::Tsv => {
            let mut t = String::from("element\tlabel\n");
            for v in g.vertices() {
                let _ = writeln!(t, "v{v}\t{}", f.vertex(v));
            }
            for (k, &(u, v)) in g.edges().iter().enumerate() {
                let _ = writeln!(t, "e{u}-{v}\t{}", f.edge(k));
            }
            t
        }
        OutputFormat::Human => format!("weight {}: {}\n", f.weight(), mixed_human(&g, &f)),
    };
    ok(text)
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    graph: &'a str,
    #[serde(flatten)]
    report: &'a CharacterizationReport,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn check(solver: &Solver, inputs: &[Input], out: Option<OutputFormat>) -> Result<Report, CliError> {
    let mut reports = Vec::new();
    for (label, g) in graphs(inputs)? {
        let r = solver.check_characterization(g)?;
        if let Some(w) = &r.witness {
            if !is_mrdf(g, w)? || w.weight() != r.gamma_r_star {
                return Err(invalid_witness("characterization"));
            }
        }
        reports.push((label, g, r));
    }

    let mut text = String::new();
    match out.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            for (label, _, r) in &reports {
                text.push_str(&json_line(&CheckRecord { graph: label, report: r }));
            }
        }
        OutputFormat::Tsv => {
            text.push_str("graph\tgamma_r_star\tgamma_pr_star\tequal\twitness\tconsistent\n");
            for (label, _, r) in &reports {
                let _ = writeln!(
                    text,
                    "{label}\t{}\t{}\t{}\t{}\t{}",
                    r.gamma_r_star,
                    r.gamma_pr_star,
                    yes(r.equal),
                    yes(r.witness.is_some()),
                    yes(r.theorem_consistent)
                );
            }
        }
        OutputFormat::Human => {
            for (label, g, r) in &reports {
                let _ = writeln!(
                    text,
                    "{label}: gamma_R* = {}, gamma_pR* = {} ({})",
                    r.gamma_r_star,
                    r.gamma_pr_star,
                    if r.equal { "equal" } else { "different" }
                );
                match &r.witness {
                    Some(w) => {
                        let _ = writeln!(text, "  witness: {}", mixed_human(g, w));
                    }
                    None => text.push_str("  no minimum MRDF satisfies both conditions\n"),
                }
                if r.equal {
                    let a = &r.claims_audit;
                    let _ = writeln!(
                        text,
                        "  claims: {} perfect optima examined, all six hold for some: {}, per claim for all: [{}]",
                        a.examined,
                        yes(a.exists_all_hold),
                        join(a.holds_for_all.iter().map(|&b| yes(b)))
                    );
                }
                let _ = writeln!(text, "  consistent: {}", yes(r.theorem_consistent));
            }
        }
    }
    let code = if reports.iter().all(|(_, _, r)| r.theorem_consistent) {
        0
    } else {
        1
    };
    Ok(Report { text, code })
}

pub fn random_inputs(count: usize, min_n: usize, max_n: usize, seed: u64) -> Result<Vec<Input>, CliError> {
    if min_n > max_n || max_n > 64 {
        return Err(CliError::Input(format!(
            "need min-n <= max-n <= 64, got {min_n}..{max_n}"
        )));
    }
    Ok(random_corpus(count, min_n, max_n, seed)
        .into_iter()
        .enumerate()
        .map(|(i, g)| Input {
            label: format!("random {i}"),
            graph: Ok(g),
        })
        .collect())
}

#[derive(Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum SurveyOutcome {
    Checked {
        n: usize,
        m: usize,
        gamma_r_star: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        gamma_pr_star: Option<usize>,
        kim: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        equal: Option<bool>,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<bool>,
        #[serde(skip_serializing_if = "Option::is_none")]
        consistent: Option<bool>,
        #[serde(skip_serializing_if = "Option::is_none")]
        ordering: Option<bool>,
        /// Some perfect optimum passes all six claims (only when equal).
        #[serde(skip_serializing_if = "Option::is_none")]
        claims: Option<bool>,
        violations: Vec<&'static str>,
    },
    ParseError {
        message: String,
    },
    GuardError {
        message: String,
    },
}

#[derive(Serialize)]
struct SurveyRow<'a> {
    input: &'a str,
    #[serde(flatten)]
    outcome: SurveyOutcome,
}

fn survey_one(solver: &Solver, g: &Graph, kim_only: bool) -> Result<SurveyOutcome, Error> {
    let n = g.order();
    if kim_only {
        let gamma = solver.solve_middle(g, Variant::Roman)?.optimum();
        let kim = gamma == n;
        return Ok(SurveyOutcome::Checked {
            n,
            m: g.size(),
            gamma_r_star: gamma,
            gamma_pr_star: None,
            kim,
            equal: None,
            witness: None,
            consistent: None,
            ordering: None,
            claims: None,
            violations: if kim { vec![] } else { vec!["kim"] },
        });
    }
    let r = solver.check_characterization(g)?;
    let kim = r.gamma_r_star == n;
    let ordering = r.gamma_pr_star >= r.gamma_r_star;
    let mut violations = Vec::new();
    if !kim {
        violations.push("kim");
    }
    if !r.theorem_consistent {
        violations.push("characterization");
    }
    if !ordering {
        violations.push("ordering");
    }
    Ok(SurveyOutcome::Checked {
        n,
        m: g.size(),
        gamma_r_star: r.gamma_r_star,
        gamma_pr_star: Some(r.gamma_pr_star),
        kim,
        equal: Some(r.equal),
        witness: Some(r.witness.is_some()),
        consistent: Some(r.theorem_consistent),
        ordering: Some(ordering),
        claims: r.equal.then_some(r.claims_audit.exists_all_hold),
        violations,
    })
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or("-".into(), |v| v.to_string())
}

fn opt_yes(x: &Option<bool>) -> &'static str {
    x.map_or("-", yes)
}

pub fn survey(solver: &Solver, inputs: &[Input], kim_only: bool, out: Option<OutputFormat>) -> Report {
    let rows: Vec<SurveyRow> = inputs
        .par_iter()
        .map(|input| {
            let outcome = match &input.graph {
                Err(e) => SurveyOutcome::ParseError {
                    message: e.to_string(),
                },
                Ok(g) => match survey_one(solver, g, kim_only) {
                    Ok(o) => o,
                    Err(e @ Error::SizeGuard { .. }) => SurveyOutcome::GuardError {
                        message: e.to_string(),
                    },
                    Err(e) => SurveyOutcome::ParseError {
                        message: e.to_string(),
                    },
                },
            };
            SurveyRow {
                input: &input.label,
                outcome,
            }
        })
        .collect();

    let mut violations = 0;
    let mut parse_errors = 0;
    let mut guard_errors = 0;
    let mut notes = Vec::new();
    for row in &rows {
        match &row.outcome {
            SurveyOutcome::Checked { violations: v, .. } if !v.is_empty() => {
                violations += 1;
                notes.push(format!("violation\t{}\t{}", row.input, v.join(",")));
            }
            SurveyOutcome::Checked { .. } => {}
            SurveyOutcome::ParseError { message } => {
                parse_errors += 1;
                notes.push(format!("parse error\t{}\t{message}", row.input));
            }
            SurveyOutcome::GuardError { message } => {
                guard_errors += 1;
                notes.push(format!("guard error\t{}\t{message}", row.input));
            }
        }
    }
    let checked = rows.len() - parse_errors - guard_errors;
    let summary = format!(
        "graphs={} checked={checked} violations={violations} parse_errors={parse_errors} guard_errors={guard_errors}",
        rows.len()
    );

    let mut text = String::new();
    match out.unwrap_or(OutputFormat::Tsv) {
        OutputFormat::Json => {
            for row in &rows {
                text.push_str(&json_line(row));
            }
            #[derive(Serialize)]
            struct Summary {
                graphs: usize,
                checked: usize,
                violations: usize,
                parse_errors: usize,
                guard_errors: usize,
            }
            text.push_str(&json_line(&Summary {
                graphs: rows.len(),
                checked,
                violations,
                parse_errors,
                guard_errors,
            }));
        }
        OutputFormat::Tsv => {
            text.push_str(
                "input\tn\tm\tgamma_r_star\tgamma_pr_star\tkim\tequal\twitness\tconsistent\tordering\tclaims\tstatus\n",
            );
            for row in &rows {
                let _ = match &row.outcome {
                    SurveyOutcome::Checked {
                        n,
                        m,
                        gamma_r_star,
                        gamma_pr_star,
                        kim,
                        equal,
                        witness,
                        consistent,
                        ordering,
                        claims,
                        violations,
                    } => writeln!(
                        text,
                        "{}\t{n}\t{m}\t{gamma_r_star}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        row.input,
                        opt(gamma_pr_star),
                        yes(*kim),
                        opt_yes(equal),
                        opt_yes(witness),
                        opt_yes(consistent),
                        opt_yes(ordering),
                        opt_yes(claims),
                        if violations.is_empty() {
                            "ok".to_string()
                        } else {
                            format!("violation:{}", violations.join(","))
                        }
                    ),
                    SurveyOutcome::ParseError { message } => writeln!(
                        text,
                        "{}\t-\t-\t-\t-\t-\t-\t-\t-\t-\t-\tparse error: {message}",
                        row.input
                    ),
                    SurveyOutcome::GuardError { message } => writeln!(
                        text,
                        "{}\t-\t-\t-\t-\t-\t-\t-\t-\t-\t-\tguard error: {message}",
                        row.input
                    ),
                };
            }
            for note in &notes {
                let _ = writeln!(text, "# {note}");
            }
            let _ = writeln!(text, "# {summary}");
        }
        OutputFormat::Human => {
            for note in &notes {
                let _ = writeln!(text, "{note}");
            }
            let _ = writeln!(text, "{summary}");
        }
    }

    let code = if violations > 0 {
        1
    } else if parse_errors > 0 {
        2
    } else if guard_errors > 0 {
        3
    } else {
        0
    };
    Report { text, code }
}

pub fn open_problems(
    solver: &Solver,
    complete: bool,
    max: usize,
    out: Option<OutputFormat>,
) -> Result<Report, CliError> {
    let kind = if complete {
        TableKind::Complete
    } else {
        TableKind::CompleteBipartite
    };
    let rows = open_problem_table(solver, kind, max)?;
    let mut text = String::new();
    match out.unwrap_or(OutputFormat::Tsv) {
        OutputFormat::Json => {
            for r in &rows {
                text.push_str(&json_line(r));
            }
        }
        OutputFormat::Tsv => {
            text.push_str("graph\tparams\torder\tsize\tgamma_pr_star\n");
            for r in &rows {
                let _ = writeln!(
                    text,
                    "{}\t{}\t{}\t{}\t{}",
                    r.name,
                    join(&r.params),
                    r.order,
                    r.size,
                    r.gamma_pr_star
                );
            }
        }
        OutputFormat::Human => {
            for r in &rows {
                let _ = writeln!(text, "{:<10} gamma_pR* = {}", r.name, r.gamma_pr_star);
            }
        }
    }
    ok(text)
}
