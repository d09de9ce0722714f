//! Runs the full pipeline on the Petersen graph and shows every export
//! format: a JSON bundle (round-trippable), a CSV club table, and a DOT
//! drawing with boroughs colored and the outback dashed.
//!
//! Run with: cargo run --example export_formats

use boroughs::export::{export_csv, export_dot, export_json, import_json, write_atomic};
use boroughs::{analyze, parse_edge_list, Config};

fn main() -> boroughs::Result<()> {
    let g = parse_edge_list(include_str!("../data/petersen.edges"))?;
    let analysis = analyze(&g, &Config::default())?;
    let bundle = analysis.to_bundle(&g);

    let json = export_json(&bundle)?;
    println!("--- JSON bundle ---");
    println!("{json}");
    assert_eq!(import_json(&json)?, bundle);
    println!("(parsed back identically)");

    println!("\n--- CSV club table ---");
    print!("{}", export_csv(&bundle)?);

    println!("\n--- DOT drawing ---");
    print!("{}", export_dot(&g, &analysis.boroughs, &analysis.outback));

    let dest = std::env::temp_dir().join("petersen_analysis.json");
    write_atomic(&dest, &json)?;
    println!("\nbundle also written to {}", dest.display());
    Ok(())
}
