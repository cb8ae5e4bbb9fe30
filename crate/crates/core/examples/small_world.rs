//! Effective diameter as networks grow: preferential attachment against a
//! random graph with the same mean degree. Both grow roughly with log n.
//!
//! ```text
//! cargo run --release --example small_world
//! ```

use netmorph::generators::{generate, GenSpec};
use netmorph::metrics::{hop_plot, HopPlotMode, DEFAULT_SAMPLE_SOURCES};

fn main() -> netmorph::Result<()> {
    let mode = HopPlotMode::Sample { sources: DEFAULT_SAMPLE_SOURCES, seed: 0 };
    println!("{:>8} {:>10} {:>10} {:>8}", "n", "d_ba(0.9)", "d_er(0.9)", "ln n");
    for n in [1_000usize, 10_000, 100_000] {
        let ba = generate(&GenSpec::barabasi_albert(n, 4, 1))?.graph;
        let er = generate(&GenSpec::erdos_renyi(n, 8.0 / (n - 1) as f64, 1))?.graph;
        let d_ba = hop_plot(&ba, 0.9, mode)?.effective_diameter;
        let d_er = hop_plot(&er, 0.9, mode)?.effective_diameter;
        println!("{n:>8} {d_ba:>10.3} {d_er:>10.3} {:>8.3}", (n as f64).ln());
    }

    // The full hop plot of a small graph, with unordered pair counts.
    let g = generate(&GenSpec::watts_strogatz(400, 6, 0.05, 3))?.graph;
    let hp = hop_plot(&g, 0.9, HopPlotMode::Exact)?;
    println!("\nsmall-world ring, n = 400: d(0.9) = {:.3}", hp.effective_diameter);
    for (h, pairs) in hp.unordered() {
        println!("{h:>3} {pairs:>8} {:>6.3}", hp.fraction(h));
    }
    Ok(())
}
