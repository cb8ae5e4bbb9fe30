//! Louvain communities with the community-size exponent and the resolution
//! advisory.
//!
//! ```text
//! cargo run --release --example louvain_communities
//! cargo run --release --example louvain_communities -- path/to/edges.txt [--directed]
//! ```

use std::fs::File;
use std::io::BufReader;

use netmorph::community::{community_sizes, louvain, modularity, resolution_advisory, DEFAULT_MIN_GAIN};
use netmorph::generators::{generate, GenSpec};
use netmorph::graph::load_edge_list;
use netmorph::Graph;

fn input() -> netmorph::Result<Graph> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.first() {
        Some(path) => {
            let directed = args.iter().any(|a| a == "--directed");
            Ok(load_edge_list(BufReader::new(File::open(path)?), directed)?.graph)
        }
        None => Ok(generate(&GenSpec::holme_kim(20_000, 3, 0.7, 4))?.graph),
    }
}

fn main() -> netmorph::Result<()> {
    let g = input()?;
    let p = louvain(&g, 0, DEFAULT_MIN_GAIN)?;
    println!("Q = {:.4} with {} communities", modularity(&g, &p)?, p.community_count());

    let sizes = community_sizes(&p);
    let mut largest: Vec<(usize, usize)> = sizes.histogram.iter().map(|(&s, &c)| (s, c)).collect();
    largest.reverse();
    println!("largest sizes (size x count): {:?}", &largest[..largest.len().min(6)]);
    match (sizes.fit, &sizes.fit_error) {
        (Some(f), _) => println!("size exponent sigma = {:.3} (xmin {}, {} communities in tail)", f.gamma, f.xmin, f.n_tail),
        (None, Some(e)) => println!("no size fit: {e}"),
        (None, None) => {}
    }

    let advisory = resolution_advisory(&g, &p);
    println!(
        "advisory: {} of {} communities below {:.1} internal edges; largest community holds {:.1}% of nodes{}",
        advisory.flagged_communities.len(),
        p.community_count(),
        advisory.thresholds.min_intra_edges,
        100.0 * advisory.largest_fraction,
        if advisory.biased { " (biased)" } else { "" }
    );
    Ok(())
}
