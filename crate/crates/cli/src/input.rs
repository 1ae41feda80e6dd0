//! Input plumbing: graph files (text and JSON), content digests, batch
//! directory expansion, and vertex-multiset expressions.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use lpa_core::graph::{self, Graph};
use lpa_core::monoid::MonoidElement;

/// A graph together with where it came from and a digest of the raw bytes.
pub struct LoadedGraph {
    pub path: PathBuf,
    pub sha256: String,
    pub graph: Graph,
}

#[derive(Deserialize)]
struct JsonGraph {
    vertices: Vec<String>,
    edges: Vec<(String, String, String)>,
}

fn graph_from_json(text: &str) -> anyhow::Result<Graph> {
    let spec: JsonGraph = serde_json::from_str(text).context("invalid graph JSON")?;
    let mut g = Graph::new();
    for v in &spec.vertices {
        g.add_vertex(v).map_err(|e| anyhow!("{e}"))?;
    }
    for (name, source, range) in &spec.edges {
        g.add_edge_by_names(name, source, range)
            .map_err(|e| anyhow!("{e}"))?;
    }
    Ok(g)
}

/// Load a graph file, dispatching on the `.json` extension; any other
/// extension is read in the line-oriented text format.
pub fn load_graph(path: &Path) -> anyhow::Result<LoadedGraph> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let sha256 = hex::encode(Sha256::digest(&bytes));
    let text =
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    let graph = if path.extension().and_then(|e| e.to_str()) == Some("json") {
        graph_from_json(&text).with_context(|| path.display().to_string())?
    } else {
        graph::parse_graph(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?
    };
    Ok(LoadedGraph {
        path: path.to_path_buf(),
        sha256,
        graph,
    })
}

/// All `.graph` and `.json` files directly inside `dir`, sorted by path so
/// batch output order is reproducible.
pub fn batch_files(dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    let entries = fs::read_dir(dir).with_context(|| format!("cannot read {}", dir.display()))?;
    let mut out = Vec::new();
    for entry in entries {
        let path = entry?.path();
        let ext = path.extension().and_then(|e| e.to_str());
        if path.is_file() && matches!(ext, Some("graph") | Some("json")) {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

/// Parse a vertex multiset written as `u+v+v`; the single token `0` is the
/// empty multiset.
pub fn parse_multiset(g: &Graph, text: &str) -> Result<MonoidElement, String> {
    let trimmed = text.trim();
    if trimmed == "0" {
        return Ok(MonoidElement::zero(g));
    }
    let mut counts = vec![0u64; g.vertex_count()];
    for token in trimmed.split('+') {
        let name = token.trim();
        if name.is_empty() {
            return Err(format!("empty term in multiset '{text}'"));
        }
        match g.vertex_by_name(name) {
            Some(v) => counts[v.0] += 1,
            None => return Err(format!("unknown vertex '{name}' in multiset '{text}'")),
        }
    }
    Ok(MonoidElement::from_counts(g, counts))
}
