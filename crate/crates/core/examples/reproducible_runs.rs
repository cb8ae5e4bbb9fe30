//! Drives the command layer from code: runs a configuration, then replays it
//! from the config echoed in `report.json` and checks that every artifact
//! is byte-identical.
//!
//! ```text
//! cargo run --release --example reproducible_runs
//! ```

use std::fs;

use netmorph::cli::{run, Algorithm, Command, RunConfig, Source};
use netmorph::generators::GenSpec;

fn main() -> netmorph::Result<()> {
    let root = std::env::temp_dir().join(format!("netmorph-example-{}", std::process::id()));
    let spec = GenSpec::holme_kim(2_000, 3, 0.5, 11);

    let mut config = RunConfig::new(Command::Communities, Source::Generate(spec), root.join("first"));
    config.algorithm = Algorithm::Louvain;
    config.seed = 3;
    let report = run(&config)?;
    let community = report.community.as_ref().expect("communities report");
    println!("Q = {:?}, communities = {:?}, sigma = {:?}", community.modularity, community.communities, community.sigma);
    println!("wrote {:?}", report.outputs);

    let replay = RunConfig::from_report(&root.join("first/report.json"), root.join("second"))?;
    run(&replay)?;
    for name in &report.outputs {
        let same = fs::read(root.join("first").join(name))? == fs::read(root.join("second").join(name))?;
        println!("{name:<16} {}", if same { "identical" } else { "DIFFERENT" });
    }
    fs::remove_dir_all(&root)?;
    Ok(())
}
