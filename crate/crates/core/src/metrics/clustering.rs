use std::borrow::Cow;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn as_undirected(g: &Graph) -> Cow<'_, Graph> {
    if g.is_directed() {
        Cow::Owned(g.undirected_view())
    } else {
        Cow::Borrowed(g)
    }
}

/// Links among the neighbors of `v` (sorted adjacency merge).
fn neighbor_links(g: &Graph, v: usize) -> usize {
    let nv = g.neighbors(v);
    let mut links = 0;
    for &u in nv {
        let nu = g.neighbors(u as usize);
        let (mut i, mut j) = (0, 0);
        while i < nv.len() && j < nu.len() {
            match nv[i].cmp(&nu[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    links += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    links / 2
}

/// Local clustering coefficient of every node; degree < 2 gives 0.
pub fn local_clustering(g: &Graph) -> Vec<f64> {
    let g = as_undirected(g);
    (0..g.node_count())
        .into_par_iter()
        .map(|v| {
            let d = g.neighbors(v).len();
            if d < 2 {
                0.0
            } else {
                2.0 * neighbor_links(&g, v) as f64 / (d * (d - 1)) as f64
            }
        })
        .collect()
}

/// Average local clustering coefficient. Directed graphs are symmetrized.
pub fn clustering_coefficient(g: &Graph) -> Result<f64> {
    if g.node_count() == 0 {
        return Err(Error::argument("clustering coefficient of an empty graph"));
    }
    let local = local_clustering(g);
    Ok(local.iter().sum::<f64>() / local.len() as f64)
}
