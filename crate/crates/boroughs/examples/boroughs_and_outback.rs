//! Splits Zachary's karate club network into boroughs and outback.
//!
//! A borough is a maximal family of short chordless cycles (lengths 3 to
//! 5) chained together by shared edges. Edges on no such cycle form the
//! outback. Nodes belonging to several boroughs, or to a borough and the
//! outback at once, are the touch points where the dense districts meet.
//!
//! Run with: cargo run --example boroughs_and_outback

use boroughs::{detect_boroughs, outback, parse_edge_list, touch_points, DEFAULT_CYCLE_CAP};

fn main() -> boroughs::Result<()> {
    let g = parse_edge_list(include_str!("../data/zachary.edges"))?;
    println!(
        "karate club: {} nodes, {} edges, whole-graph diameter {:?}",
        g.n(),
        g.m(),
        g.diameter()
    );

    let boroughs = detect_boroughs(&g, DEFAULT_CYCLE_CAP)?;
    println!("\n{} boroughs detected:", boroughs.len());
    for b in &boroughs {
        let members: Vec<&str> = b.nodes.iter().map(|&v| g.label(v)).collect();
        println!(
            "  borough {}: {} nodes, {} edges, {} chained cycles, diameter {}",
            b.id,
            b.nodes.len(),
            b.edges.len(),
            b.cycles.len(),
            b.diameter
        );
        println!("    members: {}", members.join(" "));
    }

    let ob = outback(&g, &boroughs);
    println!("\noutback edge count: {}", ob.edges.len());
    for &(u, v) in &ob.bridges {
        println!("  bridge {}-{}", g.label(u), g.label(v));
    }
    for &(u, v) in &ob.long_cycle_edges {
        println!("  long-cycle edge {}-{}", g.label(u), g.label(v));
    }

    let touch = touch_points(&boroughs, &ob);
    for (&node, ids) in &touch.between_boroughs {
        println!(
            "\nnode {} sits in boroughs {:?}: it is the hinge between the districts",
            g.label(node),
            ids
        );
    }
    for &node in &touch.with_outback {
        println!("node {} anchors the outback to its borough", g.label(node));
    }
    Ok(())
}
