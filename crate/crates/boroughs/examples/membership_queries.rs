//! Answers membership questions over the karate club census: which clubs
//! contain a given node, and how often two nodes share a club.
//!
//! The karate network split around its two leaders, nodes 1 and 34. The
//! queries below show node 9 torn between the camps and measure how small
//! the common ground between the leaders actually is.
//!
//! Run with: cargo run --example membership_queries

use boroughs::{analyze, co_membership, membership, parse_edge_list, Config};

fn main() -> boroughs::Result<()> {
    let g = parse_edge_list(include_str!("../data/zachary.edges"))?;
    let analysis = analyze(&g, &Config::default())?;
    let clubs = &analysis.scopes[0].clubs;
    println!(
        "large borough census: {} clubs over {} nodes",
        clubs.len(),
        analysis.scopes[0].scope_nodes
    );

    let nine = g.node_id("9").expect("node 9 exists");
    let profile = membership(clubs, nine);
    println!(
        "\nnode 9 appears in {} clubs: {} coteries ({}%), {} social circles ({}%), {} hamlets ({}%)",
        profile.total.count,
        profile.coterie.count,
        profile.coterie.percent,
        profile.social_circle.count,
        profile.social_circle.percent,
        profile.hamlet.count,
        profile.hamlet.percent
    );
    for entry in &profile.clubs {
        let members: Vec<&str> = clubs[entry.club_id]
            .nodes
            .iter()
            .map(|&v| g.label(v))
            .collect();
        println!(
            "  club {:2} ({}, size {:2}): {}",
            entry.club_id,
            entry.club_type,
            entry.size,
            members.join(" ")
        );
    }

    let one = g.node_id("1").expect("node 1 exists");
    let thirty_four = g.node_id("34").expect("node 34 exists");
    let co = co_membership(clubs, one, thirty_four)?;
    println!(
        "\nleaders 1 and 34: together in {} clubs, {} clubs hold only 1, {} hold only 34",
        co.overall.both, co.overall.only_first, co.overall.only_second
    );
    println!(
        "  shared by type: {} coterie, {} social circle, {} hamlet",
        co.coterie.both, co.social_circle.both, co.hamlet.both
    );
    println!(
        "  {}% of the clubs around 34 still include 1: the negotiation forums",
        co.both_share_of_second
    );
    Ok(())
}
