//! The full analysis: components, boroughs, outback, per-scope 2-club
//! enumeration, and a serializable bundle of the results.

use crate::borough::{detect_boroughs, outback, touch_points, Borough, OutbackReport, TouchPoints};
use crate::cycles::DEFAULT_CYCLE_CAP;
use crate::error::{Error, Result};
use crate::graph::{ordered_edge, Graph, NodeId};
use crate::report::{type_distribution, TypeDistribution};
use crate::two_club::{
    enumerate_two_clubs, EnumerationConfig, Scope, SeedOrder, TwoClub, DEFAULT_BRANCH_BUDGET,
};
use serde::{Deserialize, Serialize};

/// Which scopes to enumerate clubs in.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ScopeSelection {
    /// One scope per detected borough.
    #[default]
    AllBoroughs,
    /// A single whole-graph scope.
    Global,
    /// Specific borough ids.
    Boroughs(Vec<usize>),
}

/// Pipeline knobs with conservative defaults.
#[derive(Debug, Clone)]
pub struct Config {
    pub cycle_cap: usize,
    pub branch_budget: u64,
    pub min_club_nodes: usize,
    pub min_club_edges: usize,
    pub seed_order: SeedOrder,
    pub scope: ScopeSelection,
    /// Shared-item threshold used when the input is a bipartite file.
    pub projection_threshold: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            cycle_cap: DEFAULT_CYCLE_CAP,
            branch_budget: DEFAULT_BRANCH_BUDGET,
            min_club_nodes: 3,
            min_club_edges: 3,
            seed_order: SeedOrder::Label,
            scope: ScopeSelection::AllBoroughs,
            projection_threshold: 1,
        }
    }
}

impl Config {
    fn enumeration(&self) -> EnumerationConfig {
        EnumerationConfig {
            branch_budget: self.branch_budget,
            min_nodes: self.min_club_nodes,
            min_edges: self.min_club_edges,
            seed_order: self.seed_order,
        }
    }
}

/// In-memory results of one full run. Node ids refer to the analyzed
/// graph.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub boroughs: Vec<Borough>,
    pub outback: OutbackReport,
    pub touch: TouchPoints,
    pub scopes: Vec<ScopeResult>,
}

/// Clubs of one scope, in host-graph node ids.
#[derive(Debug, Clone)]
pub struct ScopeResult {
    pub scope: Scope,
    pub scope_nodes: usize,
    pub clubs: Vec<TwoClub>,
}

/// Serializable scope reference inside a bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScopeRef {
    Global,
    Borough { id: usize },
}

/// Label-based graph totals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub node_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub components: Vec<ComponentSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub size: usize,
    pub diameter: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoroughRecord {
    pub id: usize,
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub diameter: u32,
    /// Members shared with another borough or incident to the outback.
    pub touch_nodes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutbackSummary {
    pub edge_count: usize,
    pub bridges: Vec<(String, String)>,
    pub long_cycle_edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClubRecord {
    pub id: usize,
    pub club_type: crate::two_club::ClubType,
    pub size: usize,
    pub separable: bool,
    pub nodes: Vec<String>,
    pub centers: Vec<String>,
    pub central_pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScopeRecord {
    pub scope: ScopeRef,
    pub scope_node_count: usize,
    pub clubs: Vec<ClubRecord>,
    pub distribution: TypeDistribution,
}

/// Complete, serializable result of one pipeline run. All node references
/// are labels; club scope references point at borough ids defined in the
/// same bundle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisBundle {
    pub graph: GraphSummary,
    pub boroughs: Vec<BoroughRecord>,
    pub outback: OutbackSummary,
    pub scopes: Vec<ScopeRecord>,
}

/// Runs detection and enumeration per `config`. Budget exhaustion inside
/// any scope propagates as [`Error::BranchBudgetExhausted`].
pub fn analyze(g: &Graph, config: &Config) -> Result<Analysis> {
    let boroughs = detect_boroughs(g, config.cycle_cap)?;
    let ob = outback(g, &boroughs);
    let touch = touch_points(&boroughs, &ob);

    let selected: Vec<&Borough> = match &config.scope {
        ScopeSelection::AllBoroughs => boroughs.iter().collect(),
        ScopeSelection::Global => Vec::new(),
        ScopeSelection::Boroughs(ids) => {
            let mut picked = Vec::with_capacity(ids.len());
            for &id in ids {
                match boroughs.iter().find(|b| b.id == id) {
                    Some(b) => picked.push(b),
                    None => {
                        return Err(Error::InvalidArgument(format!(
                            "no borough with id {id}; {} detected",
                            boroughs.len()
                        )))
                    }
                }
            }
            picked
        }
    };

    let mut scopes = Vec::new();
    if config.scope == ScopeSelection::Global {
        let clubs = if g.n() < 3 {
            Vec::new()
        } else {
            enumerate_two_clubs(g, Scope::Global, &config.enumeration())?
        };
        scopes.push(ScopeResult {
            scope: Scope::Global,
            scope_nodes: g.n(),
            clubs,
        });
    }
    for b in selected {
        let sub = g.edge_induced(&b.edges)?;
        let clubs = enumerate_two_clubs(&sub, Scope::Borough(b.id), &config.enumeration())?;
        let clubs = clubs
            .into_iter()
            .map(|c| remap_club(c, &sub, g))
            .collect::<Result<Vec<TwoClub>>>()?;
        scopes.push(ScopeResult {
            scope: Scope::Borough(b.id),
            scope_nodes: b.nodes.len(),
            clubs,
        });
    }

    Ok(Analysis {
        boroughs,
        outback: ob,
        touch,
        scopes,
    })
}

/// Translates a club enumerated inside `sub` back to host-graph node ids.
fn remap_club(club: TwoClub, sub: &Graph, host: &Graph) -> Result<TwoClub> {
    let map = |v: NodeId| -> Result<NodeId> {
        host.node_id(sub.label(v)).ok_or_else(|| {
            Error::Invariant(format!("subgraph label {:?} missing from host", sub.label(v)))
        })
    };
    let mut nodes = club
        .nodes
        .iter()
        .map(|&v| map(v))
        .collect::<Result<Vec<NodeId>>>()?;
    nodes.sort_unstable();
    let mut centers = club
        .centers
        .iter()
        .map(|&v| map(v))
        .collect::<Result<Vec<NodeId>>>()?;
    centers.sort_unstable();
    let mut central_pairs = Vec::with_capacity(club.central_pairs.len());
    for &(a, b) in &club.central_pairs {
        central_pairs.push(ordered_edge(map(a)?, map(b)?));
    }
    central_pairs.sort_unstable();
    Ok(TwoClub {
        nodes,
        centers,
        central_pairs,
        ..club
    })
}

impl Analysis {
    /// Renders the in-memory analysis as a label-based bundle.
    pub fn to_bundle(&self, g: &Graph) -> AnalysisBundle {
        let label = |v: NodeId| g.label(v).to_string();
        let edge_labels = |edges: &[(NodeId, NodeId)]| -> Vec<(String, String)> {
            edges.iter().map(|&(a, b)| (label(a), label(b))).collect()
        };

        let components = g
            .components()
            .into_iter()
            .map(|comp| ComponentSummary {
                size: comp.len(),
                diameter: g
                    .diameter_of(&comp)
                    .expect("component node set is valid")
                    .expect("component is connected"),
            })
            .collect::<Vec<_>>();

        let boroughs = self
            .boroughs
            .iter()
            .map(|b| {
                let mut touch_nodes: Vec<String> = b
                    .nodes
                    .iter()
                    .filter(|v| {
                        self.touch.between_boroughs.contains_key(v)
                            || self.touch.with_outback.contains(v)
                    })
                    .map(|&v| label(v))
                    .collect();
                touch_nodes.sort();
                BoroughRecord {
                    id: b.id,
                    nodes: b.nodes.iter().map(|&v| label(v)).collect(),
                    edges: edge_labels(&b.edges),
                    diameter: b.diameter,
                    touch_nodes,
                }
            })
            .collect();

        let scopes = self
            .scopes
            .iter()
            .map(|s| {
                let clubs = s
                    .clubs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| ClubRecord {
                        id: i,
                        club_type: c.club_type,
                        size: c.size(),
                        separable: c.separable,
                        nodes: c.nodes.iter().map(|&v| label(v)).collect(),
                        centers: c.centers.iter().map(|&v| label(v)).collect(),
                        central_pairs: edge_labels(&c.central_pairs),
                    })
                    .collect();
                ScopeRecord {
                    scope: match s.scope {
                        Scope::Global => ScopeRef::Global,
                        Scope::Borough(id) => ScopeRef::Borough { id },
                    },
                    scope_node_count: s.scope_nodes,
                    clubs,
                    distribution: type_distribution(&s.clubs, s.scope_nodes),
                }
            })
            .collect();

        AnalysisBundle {
            graph: GraphSummary {
                node_count: g.n(),
                edge_count: g.m(),
                component_count: components.len(),
                components,
            },
            boroughs,
            outback: OutbackSummary {
                edge_count: self.outback.edges.len(),
                bridges: edge_labels(&self.outback.bridges),
                long_cycle_edges: edge_labels(&self.outback.long_cycle_edges),
            },
            scopes,
        }
    }
}

/// One-call pipeline: analyze and bundle.
pub fn run_pipeline(g: &Graph, config: &Config) -> Result<AnalysisBundle> {
    Ok(analyze(g, config)?.to_bundle(g))
}
