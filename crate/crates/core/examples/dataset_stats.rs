//! One summary row for a SNAP edge list: size, degree exponent, effective
//! diameter, modularity, community count and community-size exponent.
//!
//! ```text
//! scripts/fetch-datasets.sh
//! cargo run --release --example dataset_stats -- data/ca-GrQc.txt
//! cargo run --release --example dataset_stats -- data/wiki-Vote.txt --directed
//! ```

use std::fs::File;
use std::io::BufReader;

use netmorph::community::{community_sizes, louvain, modularity, resolution_advisory, DEFAULT_MIN_GAIN};
use netmorph::graph::load_edge_list;
use netmorph::metrics::{degree_histogram, fit_power_law, hop_plot, FitMethod, HopPlotMode, XminPolicy};
use netmorph::DegreeMode;

fn fmt(x: Option<f64>, digits: usize) -> String {
    x.map_or("--".into(), |v| format!("{v:.digits$}"))
}

fn main() -> netmorph::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let Some(path) = args.first() else {
        eprintln!("usage: dataset_stats <edge-list> [--directed]");
        std::process::exit(2);
    };
    let directed = args.iter().any(|a| a == "--directed");
    let loaded = load_edge_list(BufReader::new(File::open(path)?), directed)?;
    let g = &loaded.graph;
    let r = &loaded.report;
    eprintln!(
        "loaded {} nodes, {} edges ({} rows, {} undirected pairs, {} self-loops and {} duplicates dropped)",
        r.nodes, r.edges, r.edge_rows, r.undirected_pairs, r.dropped_self_loops, r.dropped_duplicates
    );

    let mode = if directed { DegreeMode::Out } else { DegreeMode::Total };
    let gamma = fit_power_law(&degree_histogram(g, mode), FitMethod::Mle, XminPolicy::KsScan).ok().map(|f| f.gamma);
    let d = hop_plot(g, 0.9, HopPlotMode::Exact)?.effective_diameter;
    let p = louvain(g, 0, DEFAULT_MIN_GAIN)?;
    let q = modularity(g, &p)?;
    let biased = resolution_advisory(g, &p).biased;
    let sigma = if biased { None } else { community_sizes(&p).sigma() };

    println!("{:<20} {:>8} {:>9} {:>6} {:>6} {:>6} {:>6} {:>6}", "dataset", "nodes", "edges", "gamma", "d", "Q", "m", "sigma");
    let name = std::path::Path::new(path).file_stem().map_or(path.clone(), |s| s.to_string_lossy().into_owned());
    println!(
        "{:<20} {:>8} {:>9} {:>6} {:>6.1} {:>6.3} {:>6} {:>6}",
        name,
        g.node_count(),
        g.edge_count(),
        fmt(gamma, 2),
        d,
        q,
        p.community_count(),
        fmt(sigma, 2)
    );
    Ok(())
}
