//! Edge-list parsing and bipartite projection.
//!
//! Edge files carry one edge per line as two whitespace-separated labels.
//! Blank lines and lines starting with `#` are skipped. Bipartite files
//! use the same shape with an actor label followed by an item label.

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

fn parse_pairs(text: &str, kind: &str) -> Result<Vec<(usize, String, String)>> {
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                reason: format!(
                    "expected two whitespace-separated {kind} tokens, found {}",
                    tokens.len()
                ),
            });
        }
        pairs.push((line, tokens[0].to_string(), tokens[1].to_string()));
    }
    Ok(pairs)
}

/// Parses an edge list into a graph. Duplicate edges collapse; self-loops
/// are rejected with their line number.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    for (line, a, b) in parse_pairs(text, "node label")? {
        if a == b {
            return Err(Error::Parse {
                line,
                reason: format!("self-loop at node {a:?}"),
            });
        }
        pairs.push((a, b));
    }
    build_graph(&pairs)
}

/// Reads and parses an edge-list file.
pub fn parse_edge_list_path<P: AsRef<Path>>(path: P) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text)
}

/// Parses actor-item lines for projection.
pub fn parse_bipartite(text: &str) -> Result<Vec<(String, String)>> {
    Ok(parse_pairs(text, "actor/item")?
        .into_iter()
        .map(|(_, a, b)| (a, b))
        .collect())
}

/// Reads and parses a bipartite pair file.
pub fn parse_bipartite_path<P: AsRef<Path>>(path: P) -> Result<Vec<(String, String)>> {
    let text = std::fs::read_to_string(path)?;
    parse_bipartite(&text)
}

/// Projects actor-item pairs onto an actor graph: `a` and `b` become
/// adjacent when they share at least `threshold` items. Actors with no
/// qualifying partner are omitted entirely.
pub fn project_bipartite(pairs: &[(String, String)], threshold: usize) -> Result<Graph> {
    if threshold < 1 {
        return Err(Error::InvalidArgument(
            "projection threshold must be at least 1".into(),
        ));
    }
    let distinct: BTreeSet<(&str, &str)> = pairs
        .iter()
        .map(|(a, i)| (a.as_str(), i.as_str()))
        .collect();
    let mut by_item: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (actor, item) in distinct {
        by_item.entry(item).or_default().push(actor);
    }

    let mut shared: HashMap<(&str, &str), usize> = HashMap::new();
    for actors in by_item.values() {
        for (i, &a) in actors.iter().enumerate() {
            for &b in &actors[i + 1..] {
                let key = if a <= b { (a, b) } else { (b, a) };
                *shared.entry(key).or_insert(0) += 1;
            }
        }
    }

    let edges: Vec<(String, String)> = shared
        .into_iter()
        .filter(|&(_, count)| count >= threshold)
        .map(|((a, b), _)| (a.to_string(), b.to_string()))
        .collect();
    build_graph(&edges)
}
