//! Queryable membership reports over enumerated club lists.
//!
//! Percentages are rounded half-up to one decimal. Club ids always refer
//! to positions in the club slice handed to the producing call.

use crate::error::{Error, Result};
use crate::graph::NodeId;
use crate::two_club::{ClubType, TwoClub};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Rounds to one decimal, halves away from zero.
pub fn round1(x: f64) -> f64 {
    (x * 10.0).round() / 10.0
}

fn percent(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        0.0
    } else {
        round1(part as f64 * 100.0 / whole as f64)
    }
}

/// Distribution line for one club type.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TypeRow {
    /// Number of clubs of this type.
    pub count: usize,
    /// Share of all clubs in the scope, in percent.
    pub percent: f64,
    pub size_min: Option<usize>,
    pub size_max: Option<usize>,
    /// Median club size; the lower middle element on even counts.
    pub size_median: Option<usize>,
    /// Share of scope nodes belonging to at least one club of this type,
    /// in percent.
    pub coverage_percent: f64,
}

/// Per-type breakdown of a scope's club list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TypeDistribution {
    pub scope_nodes: usize,
    pub total_clubs: usize,
    pub coterie: TypeRow,
    pub social_circle: TypeRow,
    pub hamlet: TypeRow,
    pub overall: TypeRow,
}

fn row_for(clubs: &[&TwoClub], total: usize, scope_nodes: usize) -> TypeRow {
    let mut sizes: Vec<usize> = clubs.iter().map(|c| c.size()).collect();
    sizes.sort_unstable();
    let covered: BTreeSet<NodeId> = clubs
        .iter()
        .flat_map(|c| c.nodes.iter().copied())
        .collect();
    TypeRow {
        count: clubs.len(),
        percent: percent(clubs.len(), total),
        size_min: sizes.first().copied(),
        size_max: sizes.last().copied(),
        size_median: if sizes.is_empty() {
            None
        } else {
            Some(sizes[(sizes.len() - 1) / 2])
        },
        coverage_percent: percent(covered.len(), scope_nodes),
    }
}

/// Summarizes `clubs` by type. `scope_nodes` is the node count of the
/// scope the clubs were enumerated in and drives the coverage column.
pub fn type_distribution(clubs: &[TwoClub], scope_nodes: usize) -> TypeDistribution {
    let total = clubs.len();
    let of_type = |t: ClubType| -> Vec<&TwoClub> {
        clubs.iter().filter(|c| c.club_type == t).collect()
    };
    let all: Vec<&TwoClub> = clubs.iter().collect();
    TypeDistribution {
        scope_nodes,
        total_clubs: total,
        coterie: row_for(&of_type(ClubType::Coterie), total, scope_nodes),
        social_circle: row_for(&of_type(ClubType::SocialCircle), total, scope_nodes),
        hamlet: row_for(&of_type(ClubType::Hamlet), total, scope_nodes),
        overall: row_for(&all, total, scope_nodes),
    }
}

/// One club a node belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipEntry {
    pub club_id: usize,
    pub club_type: ClubType,
    pub size: usize,
}

/// Count plus its share of the scope's clubs of the same type.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TypeShare {
    pub count: usize,
    pub percent: f64,
}

/// Every club containing a given node, with per-type shares.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipProfile {
    pub node: NodeId,
    pub clubs: Vec<MembershipEntry>,
    pub coterie: TypeShare,
    pub social_circle: TypeShare,
    pub hamlet: TypeShare,
    pub total: TypeShare,
}

/// Profiles `node` against `clubs`. Shares are relative to the scope's
/// total club count of each type.
pub fn membership(clubs: &[TwoClub], node: NodeId) -> MembershipProfile {
    let entries: Vec<MembershipEntry> = clubs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.contains(node))
        .map(|(i, c)| MembershipEntry {
            club_id: i,
            club_type: c.club_type,
            size: c.size(),
        })
        .collect();
    let share = |t: Option<ClubType>| -> TypeShare {
        let mine = entries
            .iter()
            .filter(|e| t.map_or(true, |t| e.club_type == t))
            .count();
        let scope = clubs
            .iter()
            .filter(|c| t.map_or(true, |t| c.club_type == t))
            .count();
        TypeShare {
            count: mine,
            percent: percent(mine, scope),
        }
    };
    MembershipProfile {
        node,
        coterie: share(Some(ClubType::Coterie)),
        social_circle: share(Some(ClubType::SocialCircle)),
        hamlet: share(Some(ClubType::Hamlet)),
        total: share(None),
        clubs: entries,
    }
}

/// How clubs split between two nodes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoPartition {
    pub only_first: usize,
    pub only_second: usize,
    pub both: usize,
    pub either: usize,
}

/// Co-membership comparison of two distinct nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct CoMembership {
    pub first: NodeId,
    pub second: NodeId,
    pub coterie: CoPartition,
    pub social_circle: CoPartition,
    pub hamlet: CoPartition,
    pub overall: CoPartition,
    /// Shared clubs as a percentage of the second node's clubs.
    pub both_share_of_second: f64,
}

/// Splits `clubs` by which of two distinct nodes they contain.
pub fn co_membership(clubs: &[TwoClub], first: NodeId, second: NodeId) -> Result<CoMembership> {
    if first == second {
        return Err(Error::InvalidArgument(
            "co-membership needs two distinct nodes".into(),
        ));
    }
    let mut result = CoMembership {
        first,
        second,
        coterie: CoPartition::default(),
        social_circle: CoPartition::default(),
        hamlet: CoPartition::default(),
        overall: CoPartition::default(),
        both_share_of_second: 0.0,
    };
    let mut second_total = 0usize;
    for club in clubs {
        let has_first = club.contains(first);
        let has_second = club.contains(second);
        if has_second {
            second_total += 1;
        }
        if !has_first && !has_second {
            continue;
        }
        let row = match club.club_type {
            ClubType::Coterie => &mut result.coterie,
            ClubType::SocialCircle => &mut result.social_circle,
            ClubType::Hamlet => &mut result.hamlet,
        };
        for part in [row, &mut result.overall] {
            part.either += 1;
            match (has_first, has_second) {
                (true, true) => part.both += 1,
                (true, false) => part.only_first += 1,
                (false, true) => part.only_second += 1,
                (false, false) => unreachable!("skipped above"),
            }
        }
    }
    result.both_share_of_second = percent(result.overall.both, second_total);
    Ok(result)
}

/// Renders a distribution as an aligned text table. Column legend:
/// `pct` is the share of the scope's clubs, `coverage` the share of scope
/// nodes in at least one club of the row's type.
pub fn render_distribution(dist: &TypeDistribution, labels: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(title) = labels {
        let _ = writeln!(out, "{title}");
    }
    let _ = writeln!(
        out,
        "{:<14} {:>5} {:>6} {:>4} {:>4} {:>6} {:>9}",
        "type", "count", "pct", "min", "max", "median", "coverage"
    );
    let fmt_opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    for (name, row) in [
        ("coterie", &dist.coterie),
        ("social circle", &dist.social_circle),
        ("hamlet", &dist.hamlet),
        ("all types", &dist.overall),
    ] {
        let _ = writeln!(
            out,
            "{:<14} {:>5} {:>5.1}% {:>4} {:>4} {:>6} {:>8.1}%",
            name,
            row.count,
            row.percent,
            fmt_opt(row.size_min),
            fmt_opt(row.size_max),
            fmt_opt(row.size_median),
            row.coverage_percent
        );
    }
    let club_word = if dist.total_clubs == 1 { "club" } else { "clubs" };
    let node_word = if dist.scope_nodes == 1 { "node" } else { "nodes" };
    let _ = writeln!(
        out,
        "({} {club_word} over {} scope {node_word}; pct of clubs, coverage of nodes)",
        dist.total_clubs, dist.scope_nodes
    );
    out
}
