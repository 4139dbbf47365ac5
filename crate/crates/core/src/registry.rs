//! Variant names and instance loading shared by the CLI and the tests.

use crate::engine::Problem;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::problems::bipartite::Bipartite;
use crate::problems::chordal::Chordal;
use crate::problems::dag::Dag;
use crate::problems::degenerate::Degenerate;
use crate::problems::geometry::Hulls;
use crate::problems::interval::ProperInterval;
use crate::problems::trees::Trees;

pub const VARIANTS: [&str; 16] = [
    "bipartite-induced",
    "bipartite-induced-connected",
    "bipartite-edge",
    "kdeg-induced",
    "kdeg-edge",
    "chordal-induced",
    "chordal-induced-connected",
    "chordal-edge",
    "pinterval-induced",
    "pinterval-induced-connected",
    "hull",
    "hull-connected",
    "dag-induced-connected",
    "dag-edge-connected",
    "trees",
    "forests",
];

/// Variants with a prefix-closed order, hence a poly-space mode.
pub const PSPACE_VARIANTS: [&str; 4] = ["bipartite-induced", "bipartite-induced-connected", "trees", "forests"];

/// Largest `k` accepted without an explicit override.
pub const DEFAULT_MAX_K: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Graph,
    DirectedGraph,
    Points,
}

pub fn input_kind(variant: &str) -> Option<InputKind> {
    match variant {
        "hull" | "hull-connected" => Some(InputKind::Points),
        "dag-induced-connected" | "dag-edge-connected" => Some(InputKind::DirectedGraph),
        v if VARIANTS.contains(&v) => Some(InputKind::Graph),
        _ => None,
    }
}

pub fn needs_k(variant: &str) -> bool {
    variant.starts_with("kdeg-")
}

/// Builds a variant over an already loaded graph.
pub fn from_graph(variant: &str, g: Graph, k: Option<usize>) -> Result<Box<dyn Problem>> {
    let want_k = || k.ok_or_else(|| Error::Instance(format!("{variant} needs --k")));
    Ok(match variant {
        "bipartite-induced" => Box::new(Bipartite::induced(g)?),
        "bipartite-induced-connected" => Box::new(Bipartite::induced_connected(g)?),
        "bipartite-edge" => Box::new(Bipartite::edge(g)?),
        "kdeg-induced" => Box::new(Degenerate::induced(g, want_k()?)?),
        "kdeg-edge" => Box::new(Degenerate::edge(g, want_k()?)?),
        "chordal-induced" => Box::new(Chordal::induced(g)?),
        "chordal-induced-connected" => Box::new(Chordal::induced_connected(g)?),
        "chordal-edge" => Box::new(Chordal::edge(g)?),
        "pinterval-induced" => Box::new(ProperInterval::induced(g)?),
        "pinterval-induced-connected" => Box::new(ProperInterval::induced_connected(g)?),
        "dag-induced-connected" => Box::new(Dag::induced(g)?),
        "dag-edge-connected" => Box::new(Dag::edge(g)?),
        "trees" => Box::new(Trees::trees(g)?),
        "forests" => Box::new(Trees::forests(g)?),
        "hull" | "hull-connected" => {
            return Err(Error::Instance(format!("{variant} takes a points file, not a graph")))
        }
        other => return Err(unknown(other)),
    })
}

/// Parses `text` in the format the variant expects and builds it.
pub fn load(variant: &str, text: &str, k: Option<usize>) -> Result<Box<dyn Problem>> {
    match input_kind(variant).ok_or_else(|| unknown(variant))? {
        InputKind::Points => Ok(Box::new(Hulls::parse(text, variant == "hull-connected")?)),
        kind => {
            let g = Graph::parse(text)?;
            if (kind == InputKind::DirectedGraph) != g.is_directed() {
                let want = if kind == InputKind::DirectedGraph { "a directed" } else { "an undirected" };
                return Err(Error::Instance(format!("{variant} needs {want} graph")));
            }
            from_graph(variant, g, k)
        }
    }
}

fn unknown(variant: &str) -> Error {
    Error::Unsupported(format!("unknown problem {variant:?}; expected one of: {}", VARIANTS.join(", ")))
}
