//! Thin command line front end over the analysis pipeline.
//!
//! Exit codes: 0 on success, 1 for input or usage problems, 2 when a
//! resource budget is exhausted, 3 for internal invariant violations.

use boroughs::borough::touch_points;
use boroughs::export::{export_csv, export_dot, export_json, write_atomic};
use boroughs::pipeline::{Analysis, ScopeResult, ScopeSelection};
use boroughs::report::{co_membership, membership, render_distribution, type_distribution};
use boroughs::two_club::SeedOrder;
use boroughs::{
    analyze, detect_boroughs, outback, parse_bipartite_path, parse_edge_list_path,
    project_bipartite, ClubType, Config, Error, Graph, DEFAULT_BRANCH_BUDGET, DEFAULT_CYCLE_CAP,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "boroughs", version, about = "Borough and 2-club analysis for undirected graphs")]
struct Cli {
    /// Branching steps allowed per enumeration scope.
    #[arg(long, global = true, default_value_t = DEFAULT_BRANCH_BUDGET)]
    branch_budget: u64,

    /// Maximum number of short chordless cycles to collect.
    #[arg(long, global = true, default_value_t = DEFAULT_CYCLE_CAP)]
    cycle_cap: usize,

    /// Order in which enumeration seeds are expanded.
    #[arg(long, global = true, value_enum, default_value_t = SeedOrderArg::Label)]
    seed_order: SeedOrderArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SeedOrderArg {
    Label,
    Degree,
}

impl From<SeedOrderArg> for SeedOrder {
    fn from(v: SeedOrderArg) -> SeedOrder {
        match v {
            SeedOrderArg::Label => SeedOrder::Label,
            SeedOrderArg::Degree => SeedOrder::Degree,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BoroughFormat {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ClubFormat {
    Text,
    Json,
    Csv,
}

fn parse_scope(s: &str) -> Result<ScopeSelection, String> {
    match s {
        "all" => Ok(ScopeSelection::AllBoroughs),
        "global" => Ok(ScopeSelection::Global),
        other => other
            .strip_prefix("borough=")
            .and_then(|id| id.parse::<usize>().ok())
            .map(|id| ScopeSelection::Boroughs(vec![id]))
            .ok_or_else(|| format!("expected all, global, or borough=<id>, got {other:?}")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Detect boroughs, the outback, and touch nodes.
    Boroughs {
        /// Edge list file.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = BoroughFormat::Text)]
        format: BoroughFormat,
    },
    /// Enumerate and classify maximal 2-clubs.
    Clubs {
        /// Edge list file.
        file: PathBuf,
        /// all, global, or borough=<id>.
        #[arg(long, value_parser = parse_scope, default_value = "all")]
        scope: ScopeSelection,
        /// Smallest club size to keep.
        #[arg(long, default_value_t = 3)]
        min_nodes: usize,
        /// Fewest induced edges a kept club may have.
        #[arg(long, default_value_t = 3)]
        min_edges: usize,
        #[arg(long, value_enum, default_value_t = ClubFormat::Text)]
        format: ClubFormat,
    },
    /// Summarize the graph and the club type distribution.
    Stats {
        /// Edge list file.
        file: PathBuf,
        /// all, global, or borough=<id>.
        #[arg(long, value_parser = parse_scope, default_value = "all")]
        scope: ScopeSelection,
    },
    /// Membership report for one node, or co-membership for two.
    Query {
        /// Edge list file.
        file: PathBuf,
        /// Node label; pass twice for a co-membership report.
        #[arg(long, required = true)]
        node: Vec<String>,
        /// all, global, or borough=<id>.
        #[arg(long, value_parser = parse_scope, default_value = "all")]
        scope: ScopeSelection,
    },
    /// Project a bipartite actor-item file onto an actor graph.
    Project {
        /// Two-column actor item file.
        file: PathBuf,
        /// Shared items required before two actors are linked.
        #[arg(long, default_value_t = 1)]
        threshold: usize,
        /// Destination edge list; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Sends finished output to stdout, treating a closed pipe as a normal
/// early exit rather than an error.
fn write_stdout(text: &str) -> boroughs::Result<()> {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.into()),
    }
}

fn run(cli: Cli) -> boroughs::Result<()> {
    let base = Config {
        branch_budget: cli.branch_budget,
        cycle_cap: cli.cycle_cap,
        seed_order: cli.seed_order.into(),
        ..Default::default()
    };
    let output = match cli.command {
        Command::Boroughs { file, format } => cmd_boroughs(&file, format, &base)?,
        Command::Clubs {
            file,
            scope,
            min_nodes,
            min_edges,
            format,
        } => {
            let config = Config {
                scope,
                min_club_nodes: min_nodes,
                min_club_edges: min_edges,
                ..base
            };
            cmd_clubs(&file, format, &config)?
        }
        Command::Stats { file, scope } => cmd_stats(&file, &Config { scope, ..base })?,
        Command::Query { file, node, scope } => {
            cmd_query(&file, &node, &Config { scope, ..base })?
        }
        Command::Project {
            file,
            threshold,
            out,
        } => cmd_project(&file, threshold, out.as_deref())?,
    };
    write_stdout(&output)
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn edge_line(g: &Graph, edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|&(u, v)| format!("{}-{}", g.label(u), g.label(v)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn label_line(g: &Graph, nodes: &[usize]) -> String {
    nodes
        .iter()
        .map(|&v| g.label(v).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_boroughs(file: &Path, format: BoroughFormat, config: &Config) -> boroughs::Result<String> {
    let g = parse_edge_list_path(file)?;
    let boroughs = detect_boroughs(&g, config.cycle_cap)?;
    let ob = outback(&g, &boroughs);
    let touch = touch_points(&boroughs, &ob);
    let mut out = String::new();
    match format {
        BoroughFormat::Json => {
            let analysis = Analysis {
                boroughs,
                outback: ob,
                touch,
                scopes: Vec::new(),
            };
            let _ = writeln!(out, "{}", export_json(&analysis.to_bundle(&g))?);
        }
        BoroughFormat::Dot => {
            out = export_dot(&g, &boroughs, &ob);
        }
        BoroughFormat::Text => {
            let _ = writeln!(
                out,
                "{}, {}",
                plural(boroughs.len(), "borough"),
                plural(ob.edges.len(), "outback edge")
            );
            for b in &boroughs {
                let _ = writeln!(
                    out,
                    "borough {}: {}, {}, diameter {}",
                    b.id,
                    plural(b.nodes.len(), "node"),
                    plural(b.edges.len(), "edge"),
                    b.diameter
                );
                let _ = writeln!(out, "  nodes: {}", label_line(&g, &b.nodes));
            }
            if !ob.bridges.is_empty() {
                let _ = writeln!(out, "outback bridges: {}", edge_line(&g, &ob.bridges));
            }
            if !ob.long_cycle_edges.is_empty() {
                let _ = writeln!(
                    out,
                    "outback long-cycle edges: {}",
                    edge_line(&g, &ob.long_cycle_edges)
                );
            }
            if !touch.between_boroughs.is_empty() {
                let shared: Vec<usize> = touch.between_boroughs.keys().copied().collect();
                let _ = writeln!(out, "nodes in several boroughs: {}", label_line(&g, &shared));
            }
            if !touch.with_outback.is_empty() {
                let fringe: Vec<usize> = touch.with_outback.iter().copied().collect();
                let _ = writeln!(
                    out,
                    "borough nodes touching the outback: {}",
                    label_line(&g, &fringe)
                );
            }
        }
    }
    Ok(out)
}

fn cmd_clubs(file: &Path, format: ClubFormat, config: &Config) -> boroughs::Result<String> {
    let g = parse_edge_list_path(file)?;
    let analysis = analyze(&g, config)?;
    let mut out = String::new();
    match format {
        ClubFormat::Json => {
            let _ = writeln!(out, "{}", export_json(&analysis.to_bundle(&g))?);
        }
        ClubFormat::Csv => out = export_csv(&analysis.to_bundle(&g))?,
        ClubFormat::Text => {
            for scope in &analysis.scopes {
                for club in &scope.clubs {
                    let mut tags = format!("size {}", club.size());
                    if !club.centers.is_empty() {
                        tags.push_str(&format!(", centers: {}", label_line(&g, &club.centers)));
                    }
                    if !club.central_pairs.is_empty() {
                        tags.push_str(&format!(
                            ", central pairs: {}",
                            edge_line(&g, &club.central_pairs)
                        ));
                    }
                    if club.separable {
                        tags.push_str(", separable");
                    }
                    let _ = writeln!(
                        out,
                        "[{}] {} ({}): {}",
                        scope.scope,
                        club.club_type,
                        tags,
                        label_line(&g, &club.nodes)
                    );
                }
            }
        }
    }
    Ok(out)
}

fn cmd_stats(file: &Path, config: &Config) -> boroughs::Result<String> {
    let g = parse_edge_list_path(file)?;
    let analysis = analyze(&g, config)?;
    let bundle = analysis.to_bundle(&g);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}, {}, {}",
        plural(bundle.graph.node_count, "node"),
        plural(bundle.graph.edge_count, "edge"),
        plural(bundle.graph.component_count, "component")
    );
    for (i, c) in bundle.graph.components.iter().enumerate() {
        let _ = writeln!(
            out,
            "component {i}: {}, diameter {}",
            plural(c.size, "node"),
            c.diameter
        );
    }
    let _ = writeln!(
        out,
        "{}, {}",
        plural(bundle.boroughs.len(), "borough"),
        plural(bundle.outback.edge_count, "outback edge")
    );
    for scope in &analysis.scopes {
        let _ = writeln!(out);
        let _ = writeln!(out, "{}", distribution_text(scope));
    }
    Ok(out)
}

fn distribution_text(scope: &ScopeResult) -> String {
    render_distribution(
        &type_distribution(&scope.clubs, scope.scope_nodes),
        Some(&scope.scope.to_string()),
    )
}

fn cmd_query(file: &Path, nodes: &[String], config: &Config) -> boroughs::Result<String> {
    if nodes.is_empty() || nodes.len() > 2 {
        return Err(Error::InvalidArgument(format!(
            "query takes one or two --node labels, got {}",
            nodes.len()
        )));
    }
    let g = parse_edge_list_path(file)?;
    let mut ids = Vec::with_capacity(nodes.len());
    for label in nodes {
        match g.node_id(label) {
            Some(v) => ids.push(v),
            None => {
                return Err(Error::InvalidArgument(format!(
                    "node {label:?} is not in the graph"
                )))
            }
        }
    }
    let analysis = analyze(&g, config)?;
    let mut out = String::new();
    for scope in &analysis.scopes {
        if ids.len() == 1 {
            let profile = membership(&scope.clubs, ids[0]);
            let type_total = |t: ClubType| scope.clubs.iter().filter(|c| c.club_type == t).count();
            let _ = writeln!(
                out,
                "[{}] node {} is in {} of {}",
                scope.scope,
                nodes[0],
                profile.total.count,
                plural(scope.clubs.len(), "club")
            );
            let _ = writeln!(
                out,
                "  coterie {} of {} ({}%), social circle {} of {} ({}%), hamlet {} of {} ({}%)",
                profile.coterie.count,
                type_total(ClubType::Coterie),
                profile.coterie.percent,
                profile.social_circle.count,
                type_total(ClubType::SocialCircle),
                profile.social_circle.percent,
                profile.hamlet.count,
                type_total(ClubType::Hamlet),
                profile.hamlet.percent
            );
            for entry in &profile.clubs {
                let club = &scope.clubs[entry.club_id];
                let _ = writeln!(
                    out,
                    "  club {}: {} (size {}): {}",
                    entry.club_id,
                    entry.club_type,
                    entry.size,
                    label_line(&g, &club.nodes)
                );
            }
        } else {
            let report = co_membership(&scope.clubs, ids[0], ids[1])?;
            let _ = writeln!(
                out,
                "[{}] nodes {} and {}: together in {}; {} hold only {}; {} hold only {}",
                scope.scope,
                nodes[0],
                nodes[1],
                plural(report.overall.both, "club"),
                report.overall.only_first,
                nodes[0],
                report.overall.only_second,
                nodes[1]
            );
            let _ = writeln!(
                out,
                "  shared by type: {} coterie, {} social circle, {} hamlet",
                report.coterie.both, report.social_circle.both, report.hamlet.both
            );
            if report.overall.either > 0 {
                let _ = writeln!(
                    out,
                    "  {}% of the clubs around {} also contain {}",
                    report.both_share_of_second, nodes[1], nodes[0]
                );
            }
        }
    }
    Ok(out)
}

fn cmd_project(file: &Path, threshold: usize, out_path: Option<&Path>) -> boroughs::Result<String> {
    let pairs = parse_bipartite_path(file)?;
    let g = project_bipartite(&pairs, threshold)?;
    let mut text = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(text, "{} {}", g.label(u), g.label(v));
    }
    match out_path {
        Some(path) => {
            write_atomic(path, &text)?;
            eprintln!(
                "wrote {} with {} over {}",
                path.display(),
                plural(g.m(), "edge"),
                plural(g.n(), "actor")
            );
            Ok(String::new())
        }
        None => Ok(text),
    }
}
