//! Degree distribution of a scale-free graph: the PDF, the CCDF and power-law
//! fits by maximum likelihood and by CCDF regression.
//!
//! ```text
//! cargo run --release --example degree_distribution
//! cargo run --release --example degree_distribution -- path/to/edges.txt [--directed]
//! ```

use std::fs::File;
use std::io::BufReader;

use netmorph::generators::{generate, GenSpec};
use netmorph::graph::load_edge_list;
use netmorph::metrics::{ccdf, degree_histogram, fit_power_law, FitMethod, XminPolicy};
use netmorph::{DegreeMode, Graph};

fn input() -> netmorph::Result<Graph> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.first() {
        Some(path) => {
            let directed = args.iter().any(|a| a == "--directed");
            Ok(load_edge_list(BufReader::new(File::open(path)?), directed)?.graph)
        }
        None => Ok(generate(&GenSpec::barabasi_albert(100_000, 4, 1))?.graph),
    }
}

fn main() -> netmorph::Result<()> {
    let g = input()?;
    // directed graphs are summarized by out-degree
    let mode = if g.is_directed() { DegreeMode::Out } else { DegreeMode::Total };
    let hist = degree_histogram(&g, mode);
    println!("{} nodes, {} edges, max degree {:?}", g.node_count(), g.edge_count(), hist.max_degree());

    let tail = ccdf(&hist)?;
    println!("\n{:>6} {:>12} {:>12}", "k", "P(k)", "CCDF(k)");
    let pdf = hist.pdf();
    // log-spaced rows keep the listing short
    let mut next = 1usize;
    for ((k, p), (_, c)) in pdf.iter().zip(&tail) {
        if *k >= next {
            println!("{k:>6} {p:>12.3e} {c:>12.3e}");
            next = (*k * 3 / 2).max(*k + 1);
        }
    }

    println!();
    for method in [FitMethod::Mle, FitMethod::CcdfRegression] {
        match fit_power_law(&hist, method, XminPolicy::KsScan) {
            Ok(f) => println!(
                "{:<16} gamma = {:.3}  xmin = {:<4} tail = {:<7} KS = {:.4}",
                method.as_str(),
                f.gamma,
                f.xmin,
                f.n_tail,
                f.ks_stat
            ),
            Err(e) => println!("{:<16} {e}", method.as_str()),
        }
    }
    Ok(())
}
