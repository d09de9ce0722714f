//! Maximal 2-club enumeration and classification.
//!
//! A 2-club is a maximal node set whose induced subgraph has diameter at
//! most 2, with distances measured inside the subgraph. Every 2-club is
//! one of three shapes: a coterie (some node adjacent to all others), a
//! social circle (no such node, but an adjacent pair whose closed
//! neighborhoods cover the club), or a hamlet (neither).
//!
//! Enumeration seeds a candidate set from each node's closed
//! 2-neighborhood, since a maximal club containing `u` can only use nodes
//! within two hops of `u`. While a candidate contains a pair at induced
//! distance above 2, the pair cannot coexist, so the search branches on
//! dropping either endpoint; shrinking a set never shrinks induced
//! distances, which is why a true club survives one branch of every
//! split. Candidates already seen, or contained in a collected result,
//! are pruned.

use crate::error::{Error, Result};
use crate::graph::{blocks_and_cutpoints, ordered_edge, Edge, Graph, NodeId};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

/// The three shapes a 2-club can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClubType {
    Coterie,
    SocialCircle,
    Hamlet,
}

impl fmt::Display for ClubType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ClubType::Coterie => "coterie",
            ClubType::SocialCircle => "social circle",
            ClubType::Hamlet => "hamlet",
        };
        f.write_str(name)
    }
}

/// Where a club was enumerated: the whole graph or one borough.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    Global,
    Borough(usize),
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Global => f.write_str("global"),
            Scope::Borough(id) => write!(f, "borough {id}"),
        }
    }
}

/// A classified maximal 2-club. Node ids refer to the graph the club was
/// produced from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoClub {
    pub nodes: Vec<NodeId>,
    pub club_type: ClubType,
    pub separable: bool,
    pub centers: Vec<NodeId>,
    pub central_pairs: Vec<Edge>,
    pub scope: Scope,
}

impl TwoClub {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.nodes.binary_search(&v).is_ok()
    }
}

/// Structural breakdown of one diameter-2 node set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub club_type: ClubType,
    pub centers: Vec<NodeId>,
    pub central_pairs: Vec<Edge>,
    pub separable: bool,
}

/// Seed iteration order for enumeration. Results are identical either
/// way; the order only changes which partial results exist when the
/// branch budget runs out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SeedOrder {
    #[default]
    Label,
    Degree,
}

/// Knobs for [`enumerate_two_clubs`].
#[derive(Debug, Clone)]
pub struct EnumerationConfig {
    /// Branch visits allowed before giving up with partial results.
    pub branch_budget: u64,
    /// Smallest club size kept after maximality filtering.
    pub min_nodes: usize,
    /// Smallest induced edge count kept after maximality filtering.
    pub min_edges: usize,
    pub seed_order: SeedOrder,
}

pub const DEFAULT_BRANCH_BUDGET: u64 = 10_000_000;

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            branch_budget: DEFAULT_BRANCH_BUDGET,
            min_nodes: 3,
            min_edges: 3,
            seed_order: SeedOrder::Label,
        }
    }
}

/// Whether `nodes` induce a connected subgraph of diameter at most 2,
/// measured inside the subgraph.
pub fn is_two_club(g: &Graph, nodes: &[NodeId]) -> Result<bool> {
    Ok(matches!(g.diameter_of(nodes)?, Some(d) if d <= 2))
}

/// Classifies a diameter-2 node set. Fails when `nodes` is not a 2-club.
pub fn classify(g: &Graph, nodes: &[NodeId]) -> Result<Classification> {
    let mut members = nodes.to_vec();
    members.sort_unstable();
    members.dedup();
    if !is_two_club(g, &members)? {
        return Err(Error::InvalidArgument(
            "node set does not induce a diameter-2 subgraph".into(),
        ));
    }

    let k = members.len();
    let pos: std::collections::HashMap<NodeId, usize> = members
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 0..k {
        for &w in g.neighbors(members[i]) {
            if let Some(&j) = pos.get(&w) {
                adj[i].push(j);
            }
        }
    }

    let centers: Vec<NodeId> = (0..k)
        .filter(|&i| adj[i].len() == k - 1)
        .map(|i| members[i])
        .collect();

    let (_, cutpoints) = blocks_and_cutpoints(&adj);
    let separable = !cutpoints.is_empty();

    let classification = if !centers.is_empty() {
        for (a, &u) in centers.iter().enumerate() {
            for &v in &centers[a + 1..] {
                if !g.has_edge(u, v) {
                    return Err(Error::Invariant(
                        "coterie centers failed to form a clique".into(),
                    ));
                }
            }
        }
        if separable && centers.len() != 1 {
            return Err(Error::Invariant(
                "separable coterie must have exactly one center".into(),
            ));
        }
        Classification {
            club_type: ClubType::Coterie,
            centers,
            central_pairs: Vec::new(),
            separable,
        }
    } else {
        let mut closed: Vec<HashSet<usize>> = Vec::with_capacity(k);
        for i in 0..k {
            let mut s: HashSet<usize> = adj[i].iter().copied().collect();
            s.insert(i);
            closed.push(s);
        }
        let mut central_pairs = Vec::new();
        for i in 0..k {
            for &j in &adj[i] {
                if j <= i {
                    continue;
                }
                let covers_all = (0..k).all(|x| closed[i].contains(&x) || closed[j].contains(&x));
                if covers_all {
                    central_pairs.push(ordered_edge(members[i], members[j]));
                }
            }
        }
        central_pairs.sort_unstable();
        let club_type = if central_pairs.is_empty() {
            ClubType::Hamlet
        } else {
            ClubType::SocialCircle
        };
        if separable {
            return Err(Error::Invariant(
                "only a coterie can be separable".into(),
            ));
        }
        Classification {
            club_type,
            centers,
            central_pairs,
            separable,
        }
    };
    Ok(classification)
}

/// Fixed-width bitset over node ids.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits {
    w: Vec<u64>,
}

impl Bits {
    fn empty(n: usize) -> Self {
        Bits {
            w: vec![0; n.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.w[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.w[i / 64] &= !(1 << (i % 64));
    }

    fn get(&self, i: usize) -> bool {
        self.w[i / 64] & (1 << (i % 64)) != 0
    }

    fn or_with(&mut self, o: &Bits) {
        for (a, b) in self.w.iter_mut().zip(&o.w) {
            *a |= b;
        }
    }

    fn and_with(&mut self, o: &Bits) {
        for (a, b) in self.w.iter_mut().zip(&o.w) {
            *a &= b;
        }
    }

    fn is_subset(&self, o: &Bits) -> bool {
        self.w.iter().zip(&o.w).all(|(a, b)| a & !b == 0)
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.w.iter().enumerate().flat_map(|(wi, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + i)
            })
        })
    }

    /// Smallest member of `self` missing from `o`.
    fn first_not_in(&self, o: &Bits) -> Option<usize> {
        for (wi, (&a, &b)) in self.w.iter().zip(&o.w).enumerate() {
            let diff = a & !b;
            if diff != 0 {
                return Some(wi * 64 + diff.trailing_zeros() as usize);
            }
        }
        None
    }
}

struct Enumerator {
    adj: Vec<Bits>,
    visited: HashSet<Vec<u64>>,
    collected: Vec<Bits>,
    budget: u64,
}

impl Enumerator {
    fn new(g: &Graph, budget: u64) -> Self {
        let n = g.n();
        let adj = (0..n)
            .map(|u| {
                let mut b = Bits::empty(n);
                for &v in g.neighbors(u) {
                    b.set(v);
                }
                b
            })
            .collect();
        Enumerator {
            adj,
            visited: HashSet::new(),
            collected: Vec::new(),
            budget,
        }
    }

    /// Nodes of `cand` within two induced hops of `u`, plus `u` itself.
    fn two_ball(&self, u: usize, cand: &Bits) -> Bits {
        let mut frontier = self.adj[u].clone();
        frontier.and_with(cand);
        let mut ball = frontier.clone();
        for v in frontier.ones() {
            ball.or_with(&self.adj[v]);
        }
        ball.and_with(cand);
        ball.set(u);
        ball
    }

    /// Lexicographically smallest pair of `cand` at induced distance
    /// above 2, or `None` when `cand` already has diameter at most 2.
    fn conflict(&self, cand: &Bits) -> Option<(usize, usize)> {
        for u in cand.ones() {
            let ball = self.two_ball(u, cand);
            if let Some(v) = cand.first_not_in(&ball) {
                return Some((u, v));
            }
        }
        None
    }

    fn explore(&mut self, cand: Bits) -> ExploreOutcome {
        if self.budget == 0 {
            return ExploreOutcome::OutOfBudget;
        }
        self.budget -= 1;
        if !self.visited.insert(cand.w.clone()) {
            return ExploreOutcome::Done;
        }
        if self.collected.iter().any(|r| cand.is_subset(r)) {
            return ExploreOutcome::Done;
        }
        match self.conflict(&cand) {
            None => {
                self.collected.push(cand);
                ExploreOutcome::Done
            }
            Some((a, b)) => {
                let mut left = cand.clone();
                left.clear(a);
                if self.explore(left) == ExploreOutcome::OutOfBudget {
                    return ExploreOutcome::OutOfBudget;
                }
                let mut right = cand;
                right.clear(b);
                self.explore(right)
            }
        }
    }

    /// Drops collected sets strictly contained in another collected set.
    fn maximal_sets(&self) -> Vec<Bits> {
        let mut keep: Vec<Bits> = Vec::new();
        for (i, c) in self.collected.iter().enumerate() {
            let dominated = self
                .collected
                .iter()
                .enumerate()
                .any(|(j, o)| j != i && c.is_subset(o) && c != o);
            if !dominated {
                keep.push(c.clone());
            }
        }
        keep
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ExploreOutcome {
    Done,
    OutOfBudget,
}

/// Enumerates every maximal 2-club of `g` passing the size floor, each
/// classified and tagged with `scope`. Clubs come back sorted by size and
/// node list.
///
/// Exhausting the branch budget returns
/// [`Error::BranchBudgetExhausted`] carrying whatever clubs were complete
/// at that point, flagged as partial by the error itself.
pub fn enumerate_two_clubs(g: &Graph, scope: Scope, config: &EnumerationConfig) -> Result<Vec<TwoClub>> {
    if g.n() < 3 {
        return Err(Error::InvalidArgument(format!(
            "2-club enumeration needs at least 3 nodes, got {}",
            g.n()
        )));
    }
    let mut seeds: Vec<NodeId> = (0..g.n()).collect();
    if config.seed_order == SeedOrder::Degree {
        seeds.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    }

    let mut enumerator = Enumerator::new(g, config.branch_budget.max(1));
    let mut exhausted = false;
    for &s in &seeds {
        let mut cand = Bits::empty(g.n());
        for v in g.closed_neighborhood_depth(s, 2) {
            cand.set(v);
        }
        if enumerator.explore(cand) == ExploreOutcome::OutOfBudget {
            exhausted = true;
            break;
        }
    }

    let maximal = enumerator.maximal_sets();
    if exhausted {
        let partial = finish_clubs(g, scope, &maximal, config, false)?;
        return Err(Error::BranchBudgetExhausted {
            budget: config.branch_budget,
            scope: scope.to_string(),
            partial,
        });
    }

    finish_clubs(g, scope, &maximal, config, true)
}

/// Classifies, floor-filters and sorts raw maximal sets. With `verify`
/// set, also asserts that no result can absorb one more node.
fn finish_clubs(
    g: &Graph,
    scope: Scope,
    maximal: &[Bits],
    config: &EnumerationConfig,
    verify: bool,
) -> Result<Vec<TwoClub>> {
    let enumerator = Enumerator::new(g, 1);
    if verify {
        for set in maximal {
            for x in 0..g.n() {
                if set.get(x) {
                    continue;
                }
                let mut grown = set.clone();
                grown.set(x);
                if enumerator.conflict(&grown).is_none() {
                    return Err(Error::Invariant(format!(
                        "collected club missed augmenting node {x}"
                    )));
                }
            }
        }
    }

    let mut clubs = Vec::new();
    for set in maximal {
        let nodes: Vec<NodeId> = set.ones().collect();
        if nodes.len() < config.min_nodes {
            continue;
        }
        if induced_edge_count(g, &nodes) < config.min_edges {
            continue;
        }
        let c = classify(g, &nodes)?;
        clubs.push(TwoClub {
            nodes,
            club_type: c.club_type,
            separable: c.separable,
            centers: c.centers,
            central_pairs: c.central_pairs,
            scope,
        });
    }
    clubs.sort_by(|a, b| a.nodes.len().cmp(&b.nodes.len()).then_with(|| a.nodes.cmp(&b.nodes)));
    Ok(clubs)
}

fn induced_edge_count(g: &Graph, nodes: &[NodeId]) -> usize {
    let mut count = 0;
    for (i, &u) in nodes.iter().enumerate() {
        for &v in &nodes[i + 1..] {
            if g.has_edge(u, v) {
                count += 1;
            }
        }
    }
    count
}

/// Exhaustive reference enumeration of all maximal diameter-2 node sets,
/// classified but not size-filtered. Limited to 16 nodes.
pub fn brute_force_two_clubs(g: &Graph, scope: Scope) -> Result<Vec<TwoClub>> {
    let n = g.n();
    if n > 16 {
        return Err(Error::InvalidArgument(format!(
            "exhaustive scan is limited to 16 nodes, got {n}"
        )));
    }
    let adj: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect();

    let qualifies = |mask: u32| -> bool {
        let mut i = mask;
        while i != 0 {
            let u = i.trailing_zeros() as usize;
            i &= i - 1;
            let frontier = adj[u] & mask;
            let mut ball = frontier | 1 << u;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                ball |= adj[v];
            }
            if mask & !ball != 0 {
                return false;
            }
        }
        true
    };

    let mut candidates: Vec<u32> = (1u32..1 << n).filter(|&m| qualifies(m)).collect();
    candidates.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut maximal_masks: Vec<u32> = Vec::new();
    for &m in &candidates {
        if !maximal_masks.iter().any(|&big| m & !big == 0) {
            maximal_masks.push(m);
        }
    }

    let mut clubs = Vec::new();
    for &mask in &maximal_masks {
        let nodes: Vec<NodeId> = (0..n).filter(|&v| mask & 1 << v != 0).collect();
        let c = classify(g, &nodes)?;
        clubs.push(TwoClub {
            nodes,
            club_type: c.club_type,
            separable: c.separable,
            centers: c.centers,
            central_pairs: c.central_pairs,
            scope,
        });
    }
    clubs.sort_by(|a, b| a.nodes.len().cmp(&b.nodes.len()).then_with(|| a.nodes.cmp(&b.nodes)));
    Ok(clubs)
}

/// Applies the size floor used by enumeration to an arbitrary club list.
pub fn apply_size_floor(g: &Graph, clubs: Vec<TwoClub>, min_nodes: usize, min_edges: usize) -> Vec<TwoClub> {
    clubs
        .into_iter()
        .filter(|c| c.nodes.len() >= min_nodes && induced_edge_count(g, &c.nodes) >= min_edges)
        .collect()
}

/// Cross-checks per-borough results against a global enumeration over the
/// same graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReconcileReport {
    /// Hamlet or social-circle node sets found per borough but absent
    /// globally.
    pub missing_from_global: Vec<Vec<NodeId>>,
    /// Hamlet or social-circle node sets found globally but absent from
    /// every borough.
    pub missing_from_boroughs: Vec<Vec<NodeId>>,
    /// Borough coteries that are neither a global coterie nor a subset of
    /// one sharing a center.
    pub coterie_violations: Vec<Vec<NodeId>>,
}

impl ReconcileReport {
    pub fn is_clean(&self) -> bool {
        self.missing_from_global.is_empty()
            && self.missing_from_boroughs.is_empty()
            && self.coterie_violations.is_empty()
    }
}

/// Compares hamlets and social circles between the two enumeration routes
/// (they must agree exactly) and checks each borough coterie against the
/// global coteries.
pub fn reconcile_with_graph(global: &[TwoClub], per_borough: &[TwoClub]) -> ReconcileReport {
    let hs = |clubs: &[TwoClub]| -> HashSet<Vec<NodeId>> {
        clubs
            .iter()
            .filter(|c| c.club_type != ClubType::Coterie)
            .map(|c| c.nodes.clone())
            .collect()
    };
    let global_hs = hs(global);
    let borough_hs = hs(per_borough);

    let mut report = ReconcileReport::default();
    for nodes in borough_hs.difference(&global_hs) {
        report.missing_from_global.push(nodes.clone());
    }
    for nodes in global_hs.difference(&borough_hs) {
        report.missing_from_boroughs.push(nodes.clone());
    }

    let global_coteries: Vec<&TwoClub> = global
        .iter()
        .filter(|c| c.club_type == ClubType::Coterie)
        .collect();
    for bc in per_borough.iter().filter(|c| c.club_type == ClubType::Coterie) {
        let ok = global_coteries.iter().any(|gc| {
            if gc.nodes == bc.nodes {
                return true;
            }
            let subset = bc.nodes.iter().all(|v| gc.contains(*v));
            let shares_center = bc.centers.iter().any(|c| gc.centers.contains(c));
            subset && shares_center
        });
        if !ok {
            report.coterie_violations.push(bc.nodes.clone());
        }
    }

    report.missing_from_global.sort();
    report.missing_from_boroughs.sort();
    report.coterie_violations.sort();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use proptest::prelude::*;

    fn g(pairs: &[(&str, &str)]) -> Graph {
        build_graph(pairs).expect("test graph should build")
    }

    fn cycle_graph(n: usize) -> Graph {
        let pairs: Vec<(String, String)> = (0..n)
            .map(|i| (i.to_string(), ((i + 1) % n).to_string()))
            .collect();
        build_graph(&pairs).expect("cycle should build")
    }

    fn all_nodes(g: &Graph) -> Vec<NodeId> {
        (0..g.n()).collect()
    }

    fn enumerate(g: &Graph) -> Vec<TwoClub> {
        enumerate_two_clubs(g, Scope::Global, &EnumerationConfig::default())
            .expect("enumeration should succeed")
    }

    #[test]
    fn diameter_two_membership() {
        assert!(is_two_club(&cycle_graph(5), &all_nodes(&cycle_graph(5))).unwrap());
        assert!(!is_two_club(&cycle_graph(6), &all_nodes(&cycle_graph(6))).unwrap());
        let p4 = g(&[("a", "b"), ("b", "c"), ("c", "d")]);
        assert!(!is_two_club(&p4, &all_nodes(&p4)).unwrap());
        let p3 = g(&[("a", "b"), ("b", "c")]);
        assert!(is_two_club(&p3, &all_nodes(&p3)).unwrap());
    }

    #[test]
    fn complete_graph_is_a_coterie_of_centers() {
        let k4 = g(&[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ]);
        let c = classify(&k4, &all_nodes(&k4)).unwrap();
        assert_eq!(c.club_type, ClubType::Coterie);
        assert_eq!(c.centers.len(), 4);
        assert!(!c.separable);
    }

    #[test]
    fn four_cycle_is_a_social_circle() {
        let c4 = cycle_graph(4);
        let c = classify(&c4, &all_nodes(&c4)).unwrap();
        assert_eq!(c.club_type, ClubType::SocialCircle);
        assert!(c.centers.is_empty());
        assert_eq!(c.central_pairs.len(), 4);
        assert!(!c.separable);
    }

    #[test]
    fn five_cycle_is_a_hamlet() {
        let c5 = cycle_graph(5);
        let c = classify(&c5, &all_nodes(&c5)).unwrap();
        assert_eq!(c.club_type, ClubType::Hamlet);
        assert!(c.centers.is_empty());
        assert!(c.central_pairs.is_empty());
        assert!(!c.separable);
    }

    #[test]
    fn star_is_a_separable_coterie() {
        let star = g(&[("h", "a"), ("h", "b"), ("h", "c")]);
        let c = classify(&star, &all_nodes(&star)).unwrap();
        assert_eq!(c.club_type, ClubType::Coterie);
        assert_eq!(c.centers, vec![star.node_id("h").unwrap()]);
        assert!(c.separable);
    }

    #[test]
    fn triangle_with_pendant_is_separable() {
        let paw = g(&[("a", "b"), ("b", "c"), ("a", "c"), ("a", "p")]);
        let c = classify(&paw, &all_nodes(&paw)).unwrap();
        assert_eq!(c.club_type, ClubType::Coterie);
        assert_eq!(c.centers, vec![paw.node_id("a").unwrap()]);
        assert!(c.separable);
    }

    #[test]
    fn classify_rejects_wider_sets() {
        let p4 = g(&[("a", "b"), ("b", "c"), ("c", "d")]);
        assert!(classify(&p4, &all_nodes(&p4)).is_err());
    }

    #[test]
    fn five_cycle_enumerates_to_itself() {
        let clubs = enumerate(&cycle_graph(5));
        assert_eq!(clubs.len(), 1);
        assert_eq!(clubs[0].nodes, all_nodes(&cycle_graph(5)));
        assert_eq!(clubs[0].club_type, ClubType::Hamlet);
    }

    #[test]
    fn six_cycle_has_no_clubs_above_the_floor() {
        assert!(enumerate(&cycle_graph(6)).is_empty());
    }

    #[test]
    fn six_cycle_raw_maximal_sets_are_three_node_paths() {
        let raw = brute_force_two_clubs(&cycle_graph(6), Scope::Global).unwrap();
        assert_eq!(raw.len(), 6);
        assert!(raw.iter().all(|c| c.nodes.len() == 3));
        let g6 = cycle_graph(6);
        assert!(apply_size_floor(&g6, raw, 3, 3).is_empty());
    }

    #[test]
    fn whole_hamlet_survives_enumeration() {
        let fig = g(&[
            ("a", "b"),
            ("a", "d"),
            ("b", "c"),
            ("c", "g"),
            ("c", "f"),
            ("c", "e"),
            ("d", "f"),
            ("d", "g"),
            ("e", "f"),
            ("d", "e"),
        ]);
        let clubs = enumerate(&fig);
        assert_eq!(clubs.len(), 1);
        assert_eq!(clubs[0].nodes.len(), 7);
        assert_eq!(clubs[0].club_type, ClubType::Hamlet);
        let brute = brute_force_two_clubs(&fig, Scope::Global).unwrap();
        assert_eq!(brute.len(), 1);
        assert_eq!(brute[0].nodes, clubs[0].nodes);
    }

    #[test]
    fn one_extra_edge_turns_the_hamlet_social() {
        let fig = g(&[
            ("a", "b"),
            ("a", "d"),
            ("b", "c"),
            ("c", "g"),
            ("c", "f"),
            ("c", "e"),
            ("d", "f"),
            ("d", "g"),
            ("e", "f"),
            ("d", "e"),
            ("d", "b"),
        ]);
        let clubs = enumerate(&fig);
        assert_eq!(clubs.len(), 1);
        assert_eq!(clubs[0].club_type, ClubType::SocialCircle);
        assert_eq!(clubs[0].central_pairs.len(), 5);
    }

    #[test]
    fn petersen_is_one_big_hamlet() {
        let petersen = g(&[
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
        ]);
        let clubs = enumerate(&petersen);
        assert_eq!(clubs.len(), 1);
        assert_eq!(clubs[0].nodes.len(), 10);
        assert_eq!(clubs[0].club_type, ClubType::Hamlet);
        let brute = brute_force_two_clubs(&petersen, Scope::Global).unwrap();
        assert_eq!(brute.len(), 1);
        assert_eq!(brute[0].nodes, clubs[0].nodes);
    }

    #[test]
    fn exhausted_budget_reports_partial_results() {
        let c5 = cycle_graph(5);
        let config = EnumerationConfig {
            branch_budget: 2,
            ..Default::default()
        };
        match enumerate_two_clubs(&c5, Scope::Global, &config) {
            Err(Error::BranchBudgetExhausted { partial, budget, .. }) => {
                assert_eq!(budget, 2);
                assert_eq!(partial.len(), 1);
                assert_eq!(partial[0].club_type, ClubType::Hamlet);
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn tiny_graphs_are_rejected() {
        let pair = g(&[("a", "b")]);
        assert!(enumerate_two_clubs(&pair, Scope::Global, &EnumerationConfig::default()).is_err());
    }

    #[test]
    fn brute_force_rejects_large_graphs() {
        let pairs: Vec<(String, String)> = (0..17)
            .map(|i| (i.to_string(), ((i + 1) % 17).to_string()))
            .collect();
        let big = build_graph(&pairs).unwrap();
        assert!(brute_force_two_clubs(&big, Scope::Global).is_err());
    }

    #[test]
    fn seed_order_does_not_change_results() {
        let fig = g(&[
            ("a", "b"),
            ("a", "d"),
            ("b", "c"),
            ("c", "g"),
            ("c", "f"),
            ("c", "e"),
            ("d", "f"),
            ("d", "g"),
            ("e", "f"),
            ("d", "e"),
        ]);
        let by_label = enumerate_two_clubs(&fig, Scope::Global, &EnumerationConfig::default())
            .unwrap();
        let by_degree = enumerate_two_clubs(
            &fig,
            Scope::Global,
            &EnumerationConfig {
                seed_order: SeedOrder::Degree,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(by_label, by_degree);
    }

    #[test]
    fn reconcile_flags_fabricated_mismatches() {
        let mk = |nodes: Vec<NodeId>, club_type, centers: Vec<NodeId>, scope| TwoClub {
            nodes,
            club_type,
            separable: false,
            centers,
            central_pairs: Vec::new(),
            scope,
        };
        let global = vec![
            mk(vec![0, 1, 2, 3], ClubType::Hamlet, vec![], Scope::Global),
            mk(vec![0, 1, 2], ClubType::Coterie, vec![1], Scope::Global),
        ];
        let per_borough = vec![
            mk(vec![0, 1, 2, 3], ClubType::Hamlet, vec![], Scope::Borough(0)),
            mk(vec![0, 2, 4], ClubType::Coterie, vec![4], Scope::Borough(0)),
        ];
        let report = reconcile_with_graph(&global, &per_borough);
        assert!(report.missing_from_global.is_empty());
        assert!(report.missing_from_boroughs.is_empty());
        assert_eq!(report.coterie_violations, vec![vec![0, 2, 4]]);

        let skewed = vec![mk(vec![5, 6, 7], ClubType::Hamlet, vec![], Scope::Borough(1))];
        let report = reconcile_with_graph(&global, &skewed);
        assert_eq!(report.missing_from_global, vec![vec![5, 6, 7]]);
        assert_eq!(report.missing_from_boroughs, vec![vec![0, 1, 2, 3]]);
    }

    proptest! {
        #[test]
        fn enumerated_clubs_hold_their_invariants(edges in prop::collection::vec((0usize..9, 0usize..9), 2..28)) {
            let pairs: Vec<(String, String)> = edges
                .iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect();
            prop_assume!(!pairs.is_empty());
            let g = build_graph(&pairs).unwrap();
            prop_assume!(g.n() >= 3);
            let clubs = enumerate_two_clubs(&g, Scope::Global, &EnumerationConfig::default()).unwrap();
            let max_degree = g.max_degree();
            for (i, c) in clubs.iter().enumerate() {
                prop_assert!(is_two_club(&g, &c.nodes).unwrap());
                prop_assert!(c.nodes.len() >= 3);
                if c.separable {
                    prop_assert_eq!(c.club_type, ClubType::Coterie);
                    prop_assert_eq!(c.centers.len(), 1);
                }
                if c.nodes.len() > max_degree + 1 {
                    prop_assert!(c.club_type != ClubType::Coterie);
                }
                for other in &clubs[i + 1..] {
                    let sub = c.nodes.iter().all(|v| other.nodes.contains(v));
                    let sup = other.nodes.iter().all(|v| c.nodes.contains(v));
                    prop_assert!(!sub && !sup, "maximality filter left nested clubs");
                }
            }
        }
    }
}
