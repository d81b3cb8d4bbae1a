//! The swapping injection from independent sets of `2G` into independent
//! sets of `G x K_2`. Both graphs use vertex `v_i` at index `2v + i`, the
//! layout of [`bipartite_double_cover`](crate::graph::bipartite_double_cover).

use crate::error::{Error, Result};
use crate::graph::{members, two_coloring, Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Two labeled disjoint copies of `g`, with `v_i` at index `2v + i`.
pub fn two_copies(g: &Graph) -> Result<Graph> {
    check_order(g)?;
    let mut out = Graph::empty(2 * g.order());
    for (u, v) in g.edges() {
        out.add_edge(2 * u, 2 * v);
        out.add_edge(2 * u + 1, 2 * v + 1);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapCertificate {
    /// Edges `uv` of `G` (with `u < v`) whose ends sit in different copies.
    pub bad_edges: Vec<(usize, usize)>,
    /// Vertices of `G` whose two copies get exchanged.
    pub swap: Vec<usize>,
    /// The resulting independent set of `G x K_2`, as indices `2v + i`.
    pub image: Vec<usize>,
}

impl SwapCertificate {
    pub fn image_mask(&self) -> VertexSet {
        self.image.iter().fold(0, |m, &x| m | 1 << x)
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if 2 * g.order() > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n: 2 * g.order(),
            cap: crate::graph::MAX_VERTICES,
        });
    }
    Ok(())
}

fn has(set: VertexSet, v: usize, i: usize) -> bool {
    set >> (2 * v + i) & 1 == 1
}

/// Order-first swap set: for each component of the bad-edge graph take the
/// side with the smaller bitmask (vertex 0 least significant).
fn first_swap_set(n: usize, bad: &[(usize, usize)]) -> Option<VertexSet> {
    let h = Graph::from_edges(n, bad).expect("edges of G");
    let color = two_coloring(&h).ok()?;
    let mut a = 0;
    for comp in h.components() {
        if comp.count_ones() < 2 {
            continue;
        }
        let side0: VertexSet = members(comp).filter(|&v| color[v] == 0).fold(0, |m, v| m | 1 << v);
        let side1 = comp & !side0;
        a |= side0.min(side1);
    }
    Some(a)
}

fn swap_pairs(set: VertexSet, a: VertexSet) -> VertexSet {
    let mut out = set;
    for v in members(a) {
        let (x, y) = (has(set, v, 0), has(set, v, 1));
        out &= !(0b11 << (2 * v));
        out |= u64::from(y) << (2 * v) | u64::from(x) << (2 * v + 1);
    }
    out
}

fn to_list(set: VertexSet) -> Vec<usize> {
    members(set).collect()
}

fn ensure_independent(g: &Graph, set: VertexSet) -> Result<()> {
    for u in members(set) {
        if let Some(w) = members(g.neighbors(u) & set).next() {
            return Err(Error::NotIndependent(u.min(w), u.max(w)));
        }
    }
    Ok(())
}

/// Map an independent set `s` of `2G` to an independent set of `G x K_2`.
pub fn swap_injection(g: &Graph, s: VertexSet) -> Result<SwapCertificate> {
    ensure_independent(&two_copies(g)?, s)?;
    let bad: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| (has(s, u, 0) && has(s, v, 1)) || (has(s, v, 0) && has(s, u, 1)))
        .collect();
    let a = first_swap_set(g.order(), &bad).expect("bad edges of an independent set are bipartite");
    Ok(SwapCertificate {
        bad_edges: bad,
        swap: to_list(a),
        image: to_list(swap_pairs(s, a)),
    })
}

/// Recover the preimage of `t`, which exists iff the edges with both ends in
/// the same copy form a bipartite graph.
pub fn swap_injection_inverse(g: &Graph, t: VertexSet) -> Result<Option<VertexSet>> {
    let cover = crate::graph::bipartite_double_cover(g)?;
    ensure_independent(&cover, t)?;
    let bad: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| (0..2).any(|i| has(t, u, i) && has(t, v, i)))
        .collect();
    Ok(first_swap_set(g.order(), &bad).map(|a| swap_pairs(t, a)))
}
