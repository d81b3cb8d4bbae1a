use super::{members, Adjacency, Graph};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Structural summary of a simple graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFacts {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    /// Common degree when every vertex has the same degree.
    pub regular_degree: Option<usize>,
    /// 0/1 side per vertex; the least vertex of every component gets 0.
    pub bipartition: Option<Vec<u8>>,
    /// Length of a shortest cycle; `None` for forests.
    pub girth: Option<usize>,
    pub triangle_free: bool,
    pub components: usize,
}

impl GraphFacts {
    pub fn is_regular(&self, d: usize) -> bool {
        self.regular_degree == Some(d) || (self.n == 0 && d == 0)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

pub fn analyze(g: &Graph) -> GraphFacts {
    let degrees = g.degrees();
    let regular_degree = match degrees.first() {
        Some(&d) if degrees.iter().all(|&x| x == d) => Some(d),
        _ => None,
    };
    let girth = girth(g);
    GraphFacts {
        n: g.order(),
        m: g.size(),
        regular_degree,
        bipartition: two_coloring(g).ok(),
        triangle_free: girth.map_or(true, |len| len > 3),
        girth,
        components: g.components().len(),
        degrees,
    }
}

fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] >= b) {
                break;
            }
            for w in members(g.neighbors(u)) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// BFS 2-coloring; on failure returns an odd closed walk.
pub(crate) fn two_coloring<A: Adjacency + ?Sized>(g: &A) -> Result<Vec<u8>, Vec<usize>> {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in members(g.row(u)) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Err(walk_through(&parent, &depth, u, w));
                }
            }
        }
    }
    Ok(color)
}

// Closed walk u -> ... -> lca -> ... -> w -> u along BFS tree paths.
fn walk_through(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    if u == w {
        return vec![u];
    }
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// An odd closed walk `w_0 w_1 ... w_{k-1}` (each consecutive pair adjacent,
/// and `w_{k-1} w_0` adjacent, `k` odd) when the graph is not bipartite.
pub fn odd_closed_walk<A: Adjacency + ?Sized>(g: &A) -> Option<Vec<usize>> {
    two_coloring(g).err()
}

/// Check that `walk` is an odd closed walk in `g`.
pub fn is_odd_closed_walk<A: Adjacency + ?Sized>(g: &A, walk: &[usize]) -> bool {
    let k = walk.len();
    k % 2 == 1 && walk.iter().all(|&v| v < g.order()) && (0..k).all(|i| g.adjacent(walk[i], walk[(i + 1) % k]))
}
