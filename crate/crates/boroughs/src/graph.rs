//! Immutable simple undirected graph with dense node indices.
//!
//! Nodes are addressed by `NodeId` (0..n-1). External string labels are
//! kept in a bijection with indices; labels are sorted before index
//! assignment (numerically when every label parses as an integer,
//! lexicographically otherwise) so the index layout does not depend on
//! input order.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Dense node index.
pub type NodeId = usize;

/// Undirected edge normalized to `(min, max)`.
pub type Edge = (NodeId, NodeId);

/// Sentinel hop count for unreachable nodes.
pub const UNREACHABLE: u32 = u32::MAX;

/// Normalizes an edge to `(min, max)` form.
pub fn ordered_edge(u: NodeId, v: NodeId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// BFS result from a single source. `dist[v]` is a hop count or
/// [`UNREACHABLE`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: NodeId,
    pub dist: Vec<u32>,
}

impl DistanceRow {
    /// Hop count to `v`, or `None` when `v` is unreachable.
    pub fn get(&self, v: NodeId) -> Option<u32> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Whether `v` was reached from the source.
    pub fn reachable(&self, v: NodeId) -> bool {
        self.dist[v] != UNREACHABLE
    }
}

/// A biconnected component, stored as its edge set with the node set
/// derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicomponent {
    pub edges: Vec<Edge>,
    pub nodes: Vec<NodeId>,
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    adj: Vec<Vec<NodeId>>,
    m: usize,
}

/// Builds a graph from labelled endpoint pairs. Duplicate pairs (in either
/// orientation) collapse to one edge; a pair with equal endpoints is
/// rejected.
pub fn build_graph<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<Graph> {
    let mut label_set: BTreeSet<&str> = BTreeSet::new();
    for (a, b) in pairs {
        let (a, b) = (a.as_ref(), b.as_ref());
        if a == b {
            return Err(Error::InvalidArgument(format!(
                "self-loop at node {a:?}"
            )));
        }
        label_set.insert(a);
        label_set.insert(b);
    }

    let mut labels: Vec<String> = label_set.into_iter().map(str::to_owned).collect();
    sort_labels(&mut labels);
    let index: HashMap<String, NodeId> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();

    let mut edge_set: BTreeSet<Edge> = BTreeSet::new();
    for (a, b) in pairs {
        let u = index[a.as_ref()];
        let v = index[b.as_ref()];
        edge_set.insert(ordered_edge(u, v));
    }

    let mut adj: Vec<Vec<NodeId>> = vec![Vec::new(); labels.len()];
    for &(u, v) in &edge_set {
        adj[u].push(v);
        adj[v].push(u);
    }
    for row in &mut adj {
        row.sort_unstable();
    }

    Ok(Graph {
        labels,
        index,
        m: edge_set.len(),
        adj,
    })
}

/// Sorts labels numerically when every label parses as an integer,
/// lexicographically otherwise.
fn sort_labels(labels: &mut [String]) {
    let numeric: Option<BTreeMap<&str, i64>> = labels
        .iter()
        .map(|l| l.parse::<i64>().ok().map(|v| (l.as_str(), v)))
        .collect();
    match numeric {
        Some(values) => {
            let values: HashMap<String, i64> = values
                .into_iter()
                .map(|(k, v)| (k.to_owned(), v))
                .collect();
            labels.sort_by(|a, b| values[a].cmp(&values[b]).then_with(|| a.cmp(b)));
        }
        None => labels.sort_unstable(),
    }
}

impl Graph {
    /// Number of nodes.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Label of node `u`.
    pub fn label(&self, u: NodeId) -> &str {
        &self.labels[u]
    }

    /// All labels in index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the node carrying `label`, if present.
    pub fn node_id(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).copied()
    }

    /// Sorted neighbor list of `u`.
    pub fn neighbors(&self, u: NodeId) -> &[NodeId] {
        &self.adj[u]
    }

    /// Degree of `u`.
    pub fn degree(&self, u: NodeId) -> usize {
        self.adj[u].len()
    }

    /// Largest degree in the graph, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether `u` and `v` are adjacent.
    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges in `(min, max)` form, ascending.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Single-source BFS over the whole graph.
    pub fn bfs_distances(&self, source: NodeId) -> DistanceRow {
        let allowed = vec![true; self.n()];
        self.bfs_distances_within(source, &allowed)
    }

    /// Single-source BFS restricted to nodes with `allowed[v]`. Distances
    /// to disallowed nodes are [`UNREACHABLE`]; `allowed[source]` must hold.
    pub fn bfs_distances_within(&self, source: NodeId, allowed: &[bool]) -> DistanceRow {
        let mut dist = vec![UNREACHABLE; self.n()];
        self.bfs_into(source, allowed, &mut dist);
        DistanceRow { source, dist }
    }

    fn bfs_into(&self, source: NodeId, allowed: &[bool], dist: &mut [u32]) {
        debug_assert!(allowed[source]);
        dist.fill(UNREACHABLE);
        dist[source] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.adj[u] {
                if allowed[v] && dist[v] == UNREACHABLE {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
    }

    /// Connected components as sorted node lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Diameter of the subgraph induced by `nodes`: the largest pairwise
    /// hop count measured inside the subgraph. `None` when the subgraph is
    /// disconnected.
    pub fn diameter_of(&self, nodes: &[NodeId]) -> Result<Option<u32>> {
        if nodes.is_empty() {
            return Err(Error::InvalidArgument(
                "diameter of an empty node set is undefined".into(),
            ));
        }
        let mut allowed = vec![false; self.n()];
        for &u in nodes {
            if u >= self.n() {
                return Err(Error::InvalidArgument(format!(
                    "node index {u} out of range"
                )));
            }
            allowed[u] = true;
        }
        let members: Vec<NodeId> = (0..self.n()).filter(|&u| allowed[u]).collect();
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut best = 0u32;
        for &u in &members {
            self.bfs_into(u, &allowed, &mut dist);
            for &v in &members {
                match dist[v] {
                    UNREACHABLE => return Ok(None),
                    d => best = best.max(d),
                }
            }
        }
        Ok(Some(best))
    }

    /// Diameter over all nodes; `None` when the graph is empty or
    /// disconnected.
    pub fn diameter(&self) -> Option<u32> {
        if self.n() == 0 {
            return None;
        }
        let all: Vec<NodeId> = (0..self.n()).collect();
        self.diameter_of(&all).expect("full node set is valid")
    }

    /// Closed k-neighborhood of `u`: every node within `k` hops, `u`
    /// included, sorted. Only `k` of 1 or 2 is accepted.
    pub fn closed_k_neighborhood(&self, u: NodeId, k: u32) -> Result<Vec<NodeId>> {
        if u >= self.n() {
            return Err(Error::InvalidArgument(format!(
                "node index {u} out of range"
            )));
        }
        if !(1..=2).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "neighborhood radius must be 1 or 2, got {k}"
            )));
        }
        Ok(self.closed_neighborhood_depth(u, k))
    }

    pub(crate) fn closed_neighborhood_depth(&self, u: NodeId, k: u32) -> Vec<NodeId> {
        let row = self.bfs_distances(u);
        (0..self.n())
            .filter(|&v| row.dist[v] <= k)
            .collect()
    }

    /// Biconnected components plus cutpoints. Every edge lands in exactly
    /// one component; a bridge forms a single-edge component; isolated
    /// nodes appear in none. Cutpoints are exactly the nodes shared by two
    /// or more components.
    pub fn bicomponents(&self) -> (Vec<Bicomponent>, Vec<NodeId>) {
        let (blocks, cutpoints) = blocks_and_cutpoints(&self.adj);
        let comps = blocks
            .into_iter()
            .map(|mut edges| {
                edges.sort_unstable();
                let nodes: BTreeSet<NodeId> =
                    edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                Bicomponent {
                    edges,
                    nodes: nodes.into_iter().collect(),
                }
            })
            .collect();
        (comps, cutpoints)
    }

    /// Subgraph containing exactly `edges` and their endpoints, rebuilt as
    /// a standalone graph with the same labels. Every edge must exist.
    pub fn edge_induced(&self, edges: &[Edge]) -> Result<Graph> {
        let mut pairs = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= self.n() || v >= self.n() || !self.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) not present in host graph"
                )));
            }
            pairs.push((self.labels[u].clone(), self.labels[v].clone()));
        }
        build_graph(&pairs)
    }
}

/// Iterative block-cut decomposition over a plain adjacency structure.
/// Returns the edge list of every biconnected component and the sorted
/// cutpoints.
pub(crate) fn blocks_and_cutpoints(adj: &[Vec<NodeId>]) -> (Vec<Vec<Edge>>, Vec<NodeId>) {
    let n = adj.len();
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(NodeId, NodeId)> = Vec::new();
    let mut blocks: Vec<Vec<Edge>> = Vec::new();

    for root in 0..n {
        if disc[root] != 0 {
            continue;
        }
        timer += 1;
        disc[root] = timer;
        low[root] = timer;
        let mut root_children = 0usize;
        let mut stack: Vec<(NodeId, NodeId, usize)> = vec![(root, usize::MAX, 0)];
        while !stack.is_empty() {
            let (v, parent, i) = {
                let frame = stack.last_mut().expect("stack checked non-empty");
                let snapshot = (frame.0, frame.1, frame.2);
                frame.2 += 1;
                snapshot
            };
            if i < adj[v].len() {
                let w = adj[v][i];
                if w == parent {
                    continue;
                }
                if disc[w] == 0 {
                    edge_stack.push((v, w));
                    timer += 1;
                    disc[w] = timer;
                    low[w] = timer;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(pframe) = stack.last() {
                    let (u, grandparent) = (pframe.0, pframe.1);
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        if grandparent == usize::MAX {
                            root_children += 1;
                        } else {
                            is_cut[u] = true;
                        }
                        let mut comp = Vec::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            edge_stack.pop();
                            comp.push(ordered_edge(a, b));
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        blocks.push(comp);
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    let cutpoints = (0..n).filter(|&v| is_cut[v]).collect();
    (blocks, cutpoints)
}
