use super::Graph;
use crate::error::Result;

/// Edge direction followed by a traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Follow edges source -> target only.
    Out,
    /// Treat every edge as bidirectional.
    Undirected,
}

const UNSEEN: u32 = u32::MAX;

/// Reusable breadth-first search buffers.
///
/// After [`Bfs::run`], [`Bfs::order`] lists reached nodes in visit order
/// (so distances along it are non-decreasing) and [`Bfs::distance`] holds
/// hop counts. Resetting only touches the nodes reached by the last run.
#[derive(Debug, Clone)]
pub struct Bfs {
    dist: Vec<u32>,
    order: Vec<u32>,
}

impl Bfs {
    pub fn new(node_count: usize) -> Self {
        Bfs { dist: vec![UNSEEN; node_count], order: Vec::with_capacity(node_count) }
    }

    pub fn run(&mut self, g: &Graph, source: usize, orientation: Orientation) {
        for &v in &self.order {
            self.dist[v as usize] = UNSEEN;
        }
        self.order.clear();
        if self.dist.len() < g.node_count() {
            self.dist.resize(g.node_count(), UNSEEN);
        }
        let both = orientation == Orientation::Undirected && g.is_directed();
        self.dist[source] = 0;
        self.order.push(source as u32);
        let mut head = 0;
        while head < self.order.len() {
            let v = self.order[head] as usize;
            head += 1;
            let next = self.dist[v] + 1;
            let ins = if both { g.in_neighbors(v) } else { &[][..] };
            for &w in g.neighbors(v).iter().chain(ins) {
                let slot = &mut self.dist[w as usize];
                if *slot == UNSEEN {
                    *slot = next;
                    self.order.push(w);
                }
            }
        }
    }

    #[inline]
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    #[inline]
    pub fn distance(&self, v: usize) -> Option<u32> {
        match self.dist[v] {
            UNSEEN => None,
            d => Some(d),
        }
    }

    /// Number of reached nodes at each distance `0..=eccentricity`.
    pub fn level_sizes(&self) -> Vec<u64> {
        let mut levels = Vec::new();
        for &v in &self.order {
            let d = self.dist[v as usize] as usize;
            if levels.len() <= d {
                levels.resize(d + 1, 0);
            }
            levels[d] += 1;
        }
        levels
    }
}

/// Exact hop distances from `source`; `None` marks unreachable nodes.
pub fn bfs_distances(g: &Graph, source: usize, orientation: Orientation) -> Result<Vec<Option<u32>>> {
    g.check_node(source)?;
    let mut bfs = Bfs::new(g.node_count());
    bfs.run(g, source, orientation);
    Ok((0..g.node_count()).map(|v| bfs.distance(v)).collect())
}
