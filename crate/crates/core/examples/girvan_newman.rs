//! Divisive clustering on a small graph, printing every edge removal.
//!
//! ```text
//! cargo run --example girvan_newman
//! ```

use netmorph::community::{edge_betweenness, girvan_newman, GnOptions, GnTarget};
use netmorph::Graph;

fn main() -> netmorph::Result<()> {
    // Three 4-cliques in a chain, joined by single bridges.
    let mut edges = Vec::new();
    for base in [0, 4, 8] {
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((base + u, base + v));
            }
        }
    }
    edges.extend([(3, 4), (7, 8)]);
    let g = Graph::from_edges(12, edges, false)?;

    let b = edge_betweenness(&g);
    let mut ranked: Vec<_> = b.iter().collect();
    ranked.sort_by(|x, y| y.1.total_cmp(&x.1));
    println!("highest betweenness: {:?}", &ranked[..3]);

    let result = girvan_newman(&g, GnTarget::MaxQ, GnOptions::default())?;
    println!("\n{:>4} {:>10} {:>6} {:>8}", "step", "removed", "parts", "Q");
    for (i, step) in result.dendrogram.iter().enumerate() {
        println!("{:>4} {:>10} {:>6} {:>8.4}", i + 1, format!("{:?}", step.removed_edge), step.num_components, step.modularity);
    }
    println!("\nbest split: Q = {:.4}, {:?}", result.modularity, result.partition.members());
    Ok(())
}
