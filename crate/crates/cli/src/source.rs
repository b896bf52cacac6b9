use std::path::PathBuf;

use clap::{Args, ValueEnum};
use middle_roman::io::{parse_edge_list, parse_graph6, parse_graph6_lines};
use middle_roman::{Family, Graph, ParseError};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

/// Where the input graph(s) come from. Exactly one source is required.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Read from a file (edge list, or graph6 with one graph per line)
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// A single graph6 string
    #[arg(long, value_name = "G6")]
    pub graph6: Option<String>,
    #[arg(long, value_name = "N")]
    pub path: Option<usize>,
    #[arg(long, value_name = "N")]
    pub cycle: Option<usize>,
    #[arg(long, value_name = "N")]
    pub complete: Option<usize>,
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    pub complete_bipartite: Option<Vec<usize>>,
    /// Star with N leaves
    #[arg(long, value_name = "N")]
    pub star: Option<usize>,
    /// Edgeless graph on N vertices
    #[arg(long, value_name = "N")]
    pub empty: Option<usize>,
}

/// A labeled input graph, or the reason it could not be read.
pub struct Input {
    pub label: String,
    pub graph: Result<Graph, ParseError>,
}

impl GraphSource {
    pub fn family(&self) -> Option<Family> {
        if let Some(n) = self.path {
            Some(Family::Path(n))
        } else if let Some(n) = self.cycle {
            Some(Family::Cycle(n))
        } else if let Some(n) = self.complete {
            Some(Family::Complete(n))
        } else if let Some(mn) = &self.complete_bipartite {
            Some(Family::CompleteBipartite(mn[0], mn[1]))
        } else if let Some(n) = self.star {
            Some(Family::Star(n))
        } else {
            self.empty.map(Family::Empty)
        }
    }

    pub fn load(&self, format: Option<Format>) -> Result<Vec<Input>, CliError> {
        if let Some(family) = self.family() {
            let g = family.build().map_err(CliError::from)?;
            return Ok(vec![Input {
                label: format!("{family:?}"),
                graph: Ok(g),
            }]);
        }
        if let Some(line) = &self.graph6 {
            return Ok(vec![Input {
                label: line.clone(),
                graph: parse_graph6(line),
            }]);
        }
        let path = self.file.as_ref().expect("clap enforces one source");
        load_file(path, format)
    }
}

pub fn load_file(path: &PathBuf, format: Option<Format>) -> Result<Vec<Input>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => Format::Graph6,
        _ => Format::Edgelist,
    });
    Ok(match format {
        Format::Edgelist => vec![Input {
            label: path.display().to_string(),
            graph: parse_edge_list(&text),
        }],
        Format::Graph6 => parse_graph6_lines(&text)
            .into_iter()
            .map(|(line, graph)| Input {
                label: format!("line {line}"),
                graph,
            })
            .collect(),
    })
}
