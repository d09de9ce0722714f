//! Random graph generators and chaining helpers shared by the
//! integration tests.

use boroughs::graph::ordered_edge;
use boroughs::{build_graph, Edge, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeSet, HashMap};

/// Independent edge probability `p` over all node pairs. Nodes that end
/// up with no edges do not appear in the built graph.
pub fn gnp_pairs(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(String, String)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                pairs.push((u.to_string(), v.to_string()));
            }
        }
    }
    pairs
}

/// Sparse growth model with mean degree near 3: start from a triangle,
/// then each new node either closes a fresh triangle over an existing
/// triangle edge or hangs as a pendant off a random node. All triangles
/// share edges transitively, so the triangle part stays one chained
/// family while every pendant edge is a bridge.
pub fn triangle_growth_pairs(n: usize, seed: u64) -> Vec<(String, String)> {
    assert!(n >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (0, 2)];
    let mut chained: Vec<(usize, usize)> = pairs.clone();
    for v in 3..n {
        if rng.gen_bool(0.5) {
            let (a, b) = chained[rng.gen_range(0..chained.len())];
            pairs.push((a, v));
            pairs.push((b, v));
            chained.push((a, v));
            chained.push((b, v));
        } else {
            let u = rng.gen_range(0..v);
            pairs.push((u, v));
        }
    }
    pairs
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
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
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

fn cycle_edges(path: &[usize]) -> Vec<Edge> {
    let mut edges: Vec<Edge> = path
        .windows(2)
        .map(|w| ordered_edge(w[0], w[1]))
        .collect();
    edges.push(ordered_edge(path[path.len() - 1], path[0]));
    edges
}

fn collect_all_short_cycles(
    g: &Graph,
    anchor: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().expect("path never empty");
    for &w in g.neighbors(last) {
        if w == anchor && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        }
        if w <= anchor || path.contains(&w) {
            continue;
        }
        if path.len() < 5 {
            path.push(w);
            collect_all_short_cycles(g, anchor, path, out);
            path.pop();
        }
    }
}

/// Edge families obtained by chaining every cycle of length 3 to 5,
/// chorded or not, wherever two cycles share an edge.
pub fn all_short_cycle_families(g: &Graph) -> BTreeSet<BTreeSet<Edge>> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        collect_all_short_cycles(g, s, &mut path, &mut cycles);
    }
    let mut uf = UnionFind::new(cycles.len());
    let mut owner: HashMap<Edge, usize> = HashMap::new();
    for (i, c) in cycles.iter().enumerate() {
        for e in cycle_edges(c) {
            match owner.get(&e) {
                Some(&j) => uf.union(i, j),
                None => {
                    owner.insert(e, i);
                }
            }
        }
    }
    let mut families: HashMap<usize, BTreeSet<Edge>> = HashMap::new();
    for (i, c) in cycles.iter().enumerate() {
        let root = uf.find(i);
        families.entry(root).or_default().extend(cycle_edges(c));
    }
    families.into_values().collect()
}

/// Node-induced subgraph, rebuilt over the host labels of `nodes`.
pub fn node_induced(g: &Graph, nodes: &[usize]) -> Graph {
    let set: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut pairs = Vec::new();
    for &u in &set {
        for &v in g.neighbors(u) {
            if u < v && set.contains(&v) {
                pairs.push((g.label(u).to_string(), g.label(v).to_string()));
            }
        }
    }
    build_graph(&pairs).expect("induced pairs are valid")
}
