//! Enumerates every maximal 2-club of each karate borough and prints the
//! full census with classifications.
//!
//! A 2-club is a maximal node set whose induced subgraph has diameter at
//! most 2, with distances measured inside the subgraph. Each club is a
//! coterie (has a member adjacent to all others), a social circle (an
//! adjacent pair jointly reaches everyone), or a hamlet (neither; the
//! most decentralized form of close communication).
//!
//! Run with: cargo run --example club_census

use boroughs::{analyze, parse_edge_list, render_distribution, type_distribution, Config};

fn main() -> boroughs::Result<()> {
    let g = parse_edge_list(include_str!("../data/zachary.edges"))?;
    let analysis = analyze(&g, &Config::default())?;

    for scope in &analysis.scopes {
        println!("=== {} ===", scope.scope);
        for (i, club) in scope.clubs.iter().enumerate() {
            let members: Vec<&str> = club.nodes.iter().map(|&v| g.label(v)).collect();
            let mut detail = String::new();
            if !club.centers.is_empty() {
                let centers: Vec<&str> = club.centers.iter().map(|&v| g.label(v)).collect();
                detail = format!(", center {}", centers.join(" "));
            } else if let Some(&(a, b)) = club.central_pairs.first() {
                detail = if club.central_pairs.len() == 1 {
                    format!(", central pair {}-{}", g.label(a), g.label(b))
                } else {
                    format!(
                        ", {} central pairs such as {}-{}",
                        club.central_pairs.len(),
                        g.label(a),
                        g.label(b)
                    )
                };
            }
            let sep = if club.separable { ", separable" } else { "" };
            println!(
                "  club {:2}: {:13} size {:2}{}{}",
                i,
                club.club_type.to_string(),
                club.size(),
                detail,
                sep
            );
            println!("           {}", members.join(" "));
        }
        println!();
        println!(
            "{}",
            render_distribution(
                &type_distribution(&scope.clubs, scope.scope_nodes),
                Some(&scope.scope.to_string())
            )
        );
        println!();
    }
    Ok(())
}
