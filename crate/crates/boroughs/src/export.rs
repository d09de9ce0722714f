//! Serialization of analysis results: JSON bundles, CSV club tables, and
//! DOT renderings of the borough structure.

use crate::borough::{Borough, OutbackReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pipeline::AnalysisBundle;
use std::fmt::Write as _;
use std::path::Path;

/// Pretty-printed JSON for a bundle.
pub fn export_json(bundle: &AnalysisBundle) -> Result<String> {
    serde_json::to_string_pretty(bundle).map_err(|e| Error::Serialize(e.to_string()))
}

/// Parses a bundle previously written by [`export_json`].
pub fn import_json(text: &str) -> Result<AnalysisBundle> {
    serde_json::from_str(text).map_err(|e| Error::Serialize(e.to_string()))
}

/// One CSV row per club across all scopes. Columns: scope, type, size,
/// separable, members (semicolon-joined labels).
pub fn export_csv(bundle: &AnalysisBundle) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["scope", "type", "size", "separable", "members"])
        .map_err(|e| Error::Serialize(e.to_string()))?;
    for scope in &bundle.scopes {
        let scope_name = match &scope.scope {
            crate::pipeline::ScopeRef::Global => "global".to_string(),
            crate::pipeline::ScopeRef::Borough { id } => format!("borough {id}"),
        };
        for club in &scope.clubs {
            w.write_record([
                scope_name.as_str(),
                &club.club_type.to_string(),
                &club.size.to_string(),
                &club.separable.to_string(),
                &club.nodes.join(";"),
            ])
            .map_err(|e| Error::Serialize(e.to_string()))?;
        }
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Serialize(e.to_string()))
}

const DOT_PALETTE: [&str; 8] = [
    "red",
    "blue",
    "forestgreen",
    "darkorange",
    "purple",
    "saddlebrown",
    "deeppink",
    "teal",
];

fn dot_quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering: borough edges solid and colored per borough,
/// outback edges dashed.
pub fn export_dot(g: &Graph, boroughs: &[Borough], outback: &OutbackReport) -> String {
    let mut out = String::from("graph boroughs {\n");
    let _ = writeln!(out, "  node [shape=circle];");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {};", dot_quote(g.label(v)));
    }
    for b in boroughs {
        let color = DOT_PALETTE[b.id % DOT_PALETTE.len()];
        for &(u, v) in &b.edges {
            let _ = writeln!(
                out,
                "  {} -- {} [style=solid, color={}];",
                dot_quote(g.label(u)),
                dot_quote(g.label(v)),
                color
            );
        }
    }
    for &(u, v) in &outback.edges {
        let _ = writeln!(
            out,
            "  {} -- {} [style=dashed];",
            dot_quote(g.label(u)),
            dot_quote(g.label(v))
        );
    }
    out.push_str("}\n");
    out
}

/// Writes `content` to `path` through a sibling temp file and a rename, so
/// readers never observe a half-written file.
pub fn write_atomic(path: &Path, content: &str) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let name = path
        .file_name()
        .ok_or_else(|| Error::InvalidArgument(format!("not a file path: {}", path.display())))?;
    let mut tmp_name = name.to_os_string();
    tmp_name.push(".tmp");
    let tmp = dir.join(tmp_name);
    std::fs::write(&tmp, content)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}
