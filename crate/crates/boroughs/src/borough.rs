//! Borough detection: maximal families of basic cycles chained through
//! shared edges.
//!
//! Two basic cycles belong to the same borough when they are linked by a
//! sequence of cycles in which consecutive members share at least one
//! edge. A borough is stored as its edge set; the node set is derived and
//! the diameter is measured inside the edge-induced subgraph. Edges on no
//! basic cycle form the outback.

use crate::cycles::{enumerate_basic_cycles, Cycle};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, NodeId};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A maximal edge-chained family of basic cycles.
#[derive(Debug, Clone)]
pub struct Borough {
    pub id: usize,
    pub cycles: Vec<Cycle>,
    pub edges: Vec<Edge>,
    pub nodes: Vec<NodeId>,
    pub diameter: u32,
}

/// Edges outside every borough, split by why they are there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutbackReport {
    pub edges: Vec<Edge>,
    pub bridges: Vec<Edge>,
    pub long_cycle_edges: Vec<Edge>,
}

/// Nodes where distinct regions of the graph meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TouchPoints {
    /// Node to the ids of every borough containing it, for nodes in two or
    /// more boroughs.
    pub between_boroughs: BTreeMap<NodeId, Vec<usize>>,
    /// Borough nodes incident to at least one outback edge.
    pub with_outback: BTreeSet<NodeId>,
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Detects every borough of `g`, ordered by descending node count with
/// ties broken by lexicographic node list. Ids follow that order.
pub fn detect_boroughs(g: &Graph, cycle_cap: usize) -> Result<Vec<Borough>> {
    let cycles = enumerate_basic_cycles(g, cycle_cap)?;
    let mut uf = UnionFind::new(cycles.len());
    let mut edge_owner: HashMap<Edge, usize> = HashMap::new();
    for (i, cycle) in cycles.iter().enumerate() {
        for e in cycle.edges() {
            match edge_owner.get(&e) {
                Some(&j) => uf.union(i, j),
                None => {
                    edge_owner.insert(e, i);
                }
            }
        }
    }

    let mut families: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..cycles.len() {
        families.entry(uf.find(i)).or_default().push(i);
    }

    let mut boroughs: Vec<Borough> = Vec::with_capacity(families.len());
    for (_, members) in families {
        let family: Vec<Cycle> = members.iter().map(|&i| cycles[i].clone()).collect();
        let edge_set: BTreeSet<Edge> = family.iter().flat_map(Cycle::edges).collect();
        let edges: Vec<Edge> = edge_set.into_iter().collect();
        let node_set: BTreeSet<NodeId> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        let nodes: Vec<NodeId> = node_set.into_iter().collect();
        let sub = g.edge_induced(&edges)?;
        let diameter = sub.diameter().ok_or_else(|| {
            Error::Invariant("borough edge-induced subgraph is disconnected".into())
        })?;
        boroughs.push(Borough {
            id: 0,
            cycles: family,
            edges,
            nodes,
            diameter,
        });
    }

    boroughs.sort_by(|a, b| {
        b.nodes
            .len()
            .cmp(&a.nodes.len())
            .then_with(|| a.nodes.cmp(&b.nodes))
    });
    for (id, b) in boroughs.iter_mut().enumerate() {
        b.id = id;
    }
    Ok(boroughs)
}

/// Classifies every edge outside the boroughs: bridges versus edges whose
/// shortest cycle has length 6 or more.
pub fn outback(g: &Graph, boroughs: &[Borough]) -> OutbackReport {
    let basic: BTreeSet<Edge> = boroughs.iter().flat_map(|b| b.edges.iter().copied()).collect();
    let edges: Vec<Edge> = g.edges().filter(|e| !basic.contains(e)).collect();

    let (bicomps, _) = g.bicomponents();
    let bridge_set: BTreeSet<Edge> = bicomps
        .iter()
        .filter(|c| c.edges.len() == 1)
        .map(|c| c.edges[0])
        .collect();

    let mut bridges = Vec::new();
    let mut long_cycle_edges = Vec::new();
    for &e in &edges {
        if bridge_set.contains(&e) {
            bridges.push(e);
        } else {
            long_cycle_edges.push(e);
        }
    }
    OutbackReport {
        edges,
        bridges,
        long_cycle_edges,
    }
}

/// Length of the shortest cycle through edge `(u, v)`, or `None` for a
/// bridge: one more than the shortest `u`-`v` path that avoids the edge
/// itself.
pub fn shortest_cycle_through(g: &Graph, e: Edge) -> Option<u32> {
    let (u, v) = e;
    let mut dist = vec![u32::MAX; g.n()];
    dist[u] = 0;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if (x == u && y == v) || (x == v && y == u) {
                continue;
            }
            if dist[y] == u32::MAX {
                dist[y] = dist[x] + 1;
                if y == v {
                    return Some(dist[y] + 1);
                }
                queue.push_back(y);
            }
        }
    }
    None
}

/// Finds the nodes where boroughs meet each other and where boroughs meet
/// the outback.
pub fn touch_points(boroughs: &[Borough], outback: &OutbackReport) -> TouchPoints {
    let mut membership: BTreeMap<NodeId, Vec<usize>> = BTreeMap::new();
    for b in boroughs {
        for &v in &b.nodes {
            membership.entry(v).or_default().push(b.id);
        }
    }
    let outback_nodes: BTreeSet<NodeId> =
        outback.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let with_outback = membership
        .keys()
        .copied()
        .filter(|v| outback_nodes.contains(v))
        .collect();
    let between_boroughs = membership
        .into_iter()
        .filter(|(_, ids)| ids.len() >= 2)
        .collect();
    TouchPoints {
        between_boroughs,
        with_outback,
    }
}

/// Diameter of a borough's edge-induced subgraph before and after removing
/// one of its edges. The edge must belong to the borough.
pub fn edge_removal_diameter_delta(g: &Graph, borough: &Borough, e: Edge) -> Result<(u32, u32)> {
    if !borough.edges.contains(&e) {
        return Err(Error::InvalidArgument(format!(
            "edge ({}, {}) is not part of borough {}",
            e.0, e.1, borough.id
        )));
    }
    let before = borough.diameter;
    let remaining: Vec<Edge> = borough.edges.iter().copied().filter(|&f| f != e).collect();
    let sub = g.edge_induced(&remaining)?;
    let mut allowed_labels: Vec<NodeId> = Vec::with_capacity(borough.nodes.len());
    for &v in &borough.nodes {
        let label = g.label(v);
        match sub.node_id(label) {
            Some(w) => allowed_labels.push(w),
            None => {
                return Err(Error::Invariant(
                    "borough node isolated by single edge removal".into(),
                ))
            }
        }
    }
    let after = sub
        .diameter_of(&allowed_labels)?
        .ok_or_else(|| Error::Invariant("borough split by single edge removal".into()))?;
    Ok((before, after))
}

/// The union of all basic edges across `boroughs`.
pub fn borough_edge_union(boroughs: &[Borough]) -> BTreeSet<Edge> {
    boroughs.iter().flat_map(|b| b.edges.iter().copied()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::DEFAULT_CYCLE_CAP;
    use crate::graph::build_graph;

    fn g(pairs: &[(&str, &str)]) -> Graph {
        build_graph(pairs).expect("test graph should build")
    }

    fn boroughs_of(g: &Graph) -> Vec<Borough> {
        detect_boroughs(g, DEFAULT_CYCLE_CAP).expect("detection should succeed")
    }

    #[test]
    fn triangles_sharing_a_node_stay_separate() {
        let g = g(&[
            ("x", "a"),
            ("x", "b"),
            ("a", "b"),
            ("x", "c"),
            ("x", "d"),
            ("c", "d"),
        ]);
        let bs = boroughs_of(&g);
        assert_eq!(bs.len(), 2);
        let ob = outback(&g, &bs);
        assert!(ob.edges.is_empty());
        let tp = touch_points(&bs, &ob);
        let x = g.node_id("x").unwrap();
        assert_eq!(tp.between_boroughs.len(), 1);
        assert_eq!(tp.between_boroughs[&x], vec![0, 1]);
        assert!(tp.with_outback.is_empty());
    }

    #[test]
    fn triangles_sharing_an_edge_merge() {
        let g = g(&[("a", "b"), ("b", "c"), ("a", "c"), ("b", "d"), ("c", "d")]);
        let bs = boroughs_of(&g);
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].nodes.len(), 4);
        assert_eq!(bs[0].edges.len(), 5);
        assert_eq!(bs[0].cycles.len(), 2);
    }

    #[test]
    fn disjoint_triangles_have_no_touch_points() {
        let g = g(&[
            ("a", "b"),
            ("b", "c"),
            ("a", "c"),
            ("d", "e"),
            ("e", "f"),
            ("d", "f"),
        ]);
        let bs = boroughs_of(&g);
        assert_eq!(bs.len(), 2);
        let tp = touch_points(&bs, &outback(&g, &bs));
        assert!(tp.between_boroughs.is_empty());
        assert!(tp.with_outback.is_empty());
    }

    #[test]
    fn pendant_edge_is_an_outback_bridge() {
        let g = g(&[("a", "b"), ("b", "c"), ("a", "c"), ("a", "p")]);
        let bs = boroughs_of(&g);
        assert_eq!(bs.len(), 1);
        let ob = outback(&g, &bs);
        let a = g.node_id("a").unwrap();
        let p = g.node_id("p").unwrap();
        assert_eq!(ob.edges, vec![(a.min(p), a.max(p))]);
        assert_eq!(ob.bridges, ob.edges);
        assert!(ob.long_cycle_edges.is_empty());
        let tp = touch_points(&bs, &ob);
        assert_eq!(tp.with_outback.iter().copied().collect::<Vec<_>>(), vec![a]);
    }

    #[test]
    fn six_cycle_is_all_outback() {
        let pairs: Vec<(String, String)> = (0..6)
            .map(|i| (i.to_string(), ((i + 1) % 6).to_string()))
            .collect();
        let g = build_graph(&pairs).unwrap();
        let bs = boroughs_of(&g);
        assert!(bs.is_empty());
        let ob = outback(&g, &bs);
        assert_eq!(ob.edges.len(), 6);
        assert!(ob.bridges.is_empty());
        assert_eq!(ob.long_cycle_edges.len(), 6);
        for &e in &ob.long_cycle_edges {
            assert_eq!(shortest_cycle_through(&g, e), Some(6));
        }
    }

    #[test]
    fn petersen_is_one_borough() {
        let pairs = [
            ("0", "1"),
            ("1", "2"),
            ("2", "3"),
            ("3", "4"),
            ("0", "4"),
            ("0", "5"),
            ("1", "6"),
            ("2", "7"),
            ("3", "8"),
            ("4", "9"),
            ("5", "7"),
            ("7", "9"),
            ("6", "9"),
            ("6", "8"),
            ("5", "8"),
        ];
        let g = g(&pairs);
        let bs = boroughs_of(&g);
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].nodes.len(), 10);
        assert_eq!(bs[0].edges.len(), 15);
        assert_eq!(bs[0].diameter, 2);
    }

    #[test]
    fn borough_order_is_by_descending_size() {
        let g = g(&[
            ("a", "b"),
            ("b", "c"),
            ("a", "c"),
            ("c", "d"),
            ("d", "e"),
            ("e", "f"),
            ("f", "g"),
            ("g", "d"),
            ("d", "f"),
            ("e", "g"),
        ]);
        let bs = boroughs_of(&g);
        assert_eq!(bs.len(), 2);
        assert!(bs[0].nodes.len() > bs[1].nodes.len());
        assert_eq!(bs[0].id, 0);
        assert_eq!(bs[1].id, 1);
    }

    #[test]
    fn five_cycle_edge_removal_doubles_diameter() {
        let pairs: Vec<(String, String)> = (0..5)
            .map(|i| (i.to_string(), ((i + 1) % 5).to_string()))
            .collect();
        let g = build_graph(&pairs).unwrap();
        let bs = boroughs_of(&g);
        let e = bs[0].edges[0];
        assert_eq!(edge_removal_diameter_delta(&g, &bs[0], e).unwrap(), (2, 4));
    }

    #[test]
    fn complete_four_edge_removal_bumps_diameter_by_one() {
        let g = g(&[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ]);
        let bs = boroughs_of(&g);
        let e = bs[0].edges[0];
        assert_eq!(edge_removal_diameter_delta(&g, &bs[0], e).unwrap(), (1, 2));
        assert!(edge_removal_diameter_delta(&g, &bs[0], (97, 98)).is_err());
    }

    #[test]
    fn edge_removal_delta_can_reach_three() {
        let g = g(&[
            ("a", "b"),
            ("a", "e"),
            ("b", "f"),
            ("e", "f"),
            ("f", "i"),
            ("c", "g"),
            ("g", "h"),
            ("g", "i"),
            ("c", "d"),
            ("d", "h"),
            ("c", "h"),
            ("b", "e"),
            ("b", "c"),
        ]);
        let bs = boroughs_of(&g);
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].diameter, 3);
        let b = g.node_id("b").unwrap();
        let c = g.node_id("c").unwrap();
        let (before, after) =
            edge_removal_diameter_delta(&g, &bs[0], (b.min(c), b.max(c))).unwrap();
        assert_eq!(before, 3);
        assert_eq!(after, 6);
    }
}
