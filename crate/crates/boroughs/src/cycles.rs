//! Enumeration of basic cycles: induced (chordless) cycles of length 3,
//! 4, or 5.
//!
//! Every cycle is reported exactly once in canonical form: the node list
//! starts at the cycle's smallest node and runs toward the smaller of its
//! two neighbors. Enumeration anchors each cycle at its minimum node, so a
//! path never revisits indices below its start.

use crate::error::{Error, Result};
use crate::graph::{ordered_edge, Edge, Graph, NodeId};
use std::collections::BTreeSet;

/// Default ceiling on the number of enumerated cycles.
pub const DEFAULT_CYCLE_CAP: usize = 50_000_000;

/// An induced cycle of length 3 to 5 in canonical node order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cycle {
    pub nodes: Vec<NodeId>,
}

impl Cycle {
    /// Cycle length (number of nodes, equal to the number of edges).
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The cycle's edges in `(min, max)` form.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.nodes.len();
        (0..n).map(move |i| ordered_edge(self.nodes[i], self.nodes[(i + 1) % n]))
    }
}

/// Enumerates every induced cycle of length 3, 4, or 5, sorted by
/// canonical node sequence. Fails once more than `cap` cycles have been
/// produced.
pub fn enumerate_basic_cycles(g: &Graph, cap: usize) -> Result<Vec<Cycle>> {
    let mut found: Vec<Cycle> = Vec::new();
    let mut path: Vec<NodeId> = Vec::with_capacity(5);
    for s in 0..g.n() {
        for &p1 in g.neighbors(s) {
            if p1 <= s {
                continue;
            }
            path.clear();
            path.push(s);
            path.push(p1);
            extend(g, &mut path, &mut found, cap)?;
        }
    }
    found.sort_unstable();
    Ok(found)
}

/// Grows `path` (anchored at its minimum node) by one node at a time,
/// emitting a cycle whenever a candidate closes back to the anchor.
fn extend(g: &Graph, path: &mut Vec<NodeId>, found: &mut Vec<Cycle>, cap: usize) -> Result<()> {
    let s = path[0];
    let last = *path.last().expect("path never empty");
    for &w in g.neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        // Interior nodes must stay non-adjacent to everything but their
        // path neighbors, otherwise the closed walk carries a chord.
        if path[1..path.len() - 1].iter().any(|&p| g.has_edge(w, p)) {
            continue;
        }
        if g.has_edge(w, s) {
            if path[1] < w {
                if found.len() >= cap {
                    return Err(Error::CycleCapExceeded { cap });
                }
                let mut nodes = path.clone();
                nodes.push(w);
                found.push(Cycle { nodes });
            }
        } else if path.len() < 4 {
            path.push(w);
            extend(g, path, found, cap)?;
            path.pop();
        }
    }
    Ok(())
}

/// The set of basic edges: every edge lying on at least one basic cycle.
pub fn basic_edges(cycles: &[Cycle]) -> BTreeSet<Edge> {
    cycles.iter().flat_map(Cycle::edges).collect()
}
