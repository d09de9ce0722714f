//! Builds collaboration graphs from a two-column actor-item file by
//! projecting onto the actors, then analyzes the densest projection.
//!
//! Two actors are linked when they share at least `threshold` items.
//! Raising the threshold strips casual collaborations and leaves the
//! durable ones, which is where boroughs and clubs appear.
//!
//! Run with: cargo run --example bipartite_projection

use boroughs::{
    detect_boroughs, parse_bipartite, project_bipartite, DEFAULT_CYCLE_CAP,
};

fn main() -> boroughs::Result<()> {
    let pairs = parse_bipartite(include_str!("../data/collab.pairs"))?;
    println!("{} actor-item pairs loaded", pairs.len());

    for threshold in 1..=3 {
        let g = project_bipartite(&pairs, threshold)?;
        println!(
            "\nthreshold {threshold}: {} actors, {} edges",
            g.n(),
            g.m()
        );
        for (u, v) in g.edges() {
            println!("  {} -- {}", g.label(u), g.label(v));
        }
    }

    let g = project_bipartite(&pairs, 1)?;
    let boroughs = detect_boroughs(&g, DEFAULT_CYCLE_CAP)?;
    println!(
        "\nthe threshold-1 projection splits into {} boroughs:",
        boroughs.len()
    );
    for b in &boroughs {
        let members: Vec<&str> = b.nodes.iter().map(|&v| g.label(v)).collect();
        println!("  borough {}: {}", b.id, members.join(" "));
    }
    Ok(())
}
