use super::{full_set, Graph, LoopGraph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Default ceiling on the vertex count of a power graph `H^G`.
pub const DEFAULT_POWER_CAP: usize = MAX_VERTICES;

fn fits(what: &'static str, size: u128, cap: usize) -> Result<usize> {
    let cap = cap.min(MAX_VERTICES) as u128;
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(size as usize)
    }
}

/// Categorical product. Vertex `(u, v)` gets index `u * |B| + v`.
pub fn tensor_product(a: &LoopGraph, b: &LoopGraph) -> Result<LoopGraph> {
    let (na, nb) = (a.order(), b.order());
    let n = fits("tensor product", (na * nb) as u128, MAX_VERTICES)?;
    let mut out = LoopGraph::empty(n);
    for (u, u2) in a.edges() {
        for (v, v2) in b.edges() {
            out.add_edge(u * nb + v, u2 * nb + v2);
            out.add_edge(u * nb + v2, u2 * nb + v);
        }
    }
    Ok(out)
}

/// `G x K_2`: vertex `v_i` has index `2v + i`, edges `u_0 v_1` for `uv` in `E(G)`.
pub fn bipartite_double_cover(g: &Graph) -> Result<Graph> {
    let n = g.order();
    fits("double cover", 2 * n as u128, MAX_VERTICES)?;
    let mut out = Graph::empty(2 * n);
    for (u, v) in g.edges() {
        out.add_edge(2 * u, 2 * v + 1);
        out.add_edge(2 * v, 2 * u + 1);
    }
    Ok(out)
}

/// Decode the power-graph vertex `index` into a map `V(G) -> V(H)`; vertex 0
/// of `G` is the most significant digit.
pub fn power_vertex(index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut digits = vec![0; len];
    let mut rest = index;
    for slot in digits.iter_mut().rev() {
        *slot = rest % base;
        rest /= base;
    }
    digits
}

/// The exponential graph `H^G` on all maps `V(G) -> V(H)` in lexicographic
/// order; `f ~ f'` iff `f(u) f'(v)` is an edge of `H` for every ordered edge
/// `uv` of `G`.
pub fn exponentiate(h: &LoopGraph, g: &Graph) -> Result<LoopGraph> {
    exponentiate_capped(h, g, DEFAULT_POWER_CAP)
}

pub fn exponentiate_capped(h: &LoopGraph, g: &Graph, cap: usize) -> Result<LoopGraph> {
    let base = h.order();
    let size = (base as u128).checked_pow(g.order() as u32).unwrap_or(u128::MAX);
    let n = fits("power graph", size, cap)?;
    let maps: Vec<Vec<usize>> = (0..n).map(|i| power_vertex(i, base, g.order())).collect();
    let edges = g.edges();
    let mut out = LoopGraph::empty(n);
    for (i, f) in maps.iter().enumerate() {
        for (j, f2) in maps.iter().enumerate().skip(i) {
            let ok = edges
                .iter()
                .all(|&(u, v)| h.has_edge(f[u], f2[v]) && h.has_edge(f[v], f2[u]));
            if ok {
                out.add_edge(i, j);
            }
        }
    }
    Ok(out)
}

/// `G°`: the same graph with a loop at every vertex.
pub fn add_loops<G: Into<LoopGraph> + Clone>(g: &G) -> LoopGraph {
    let mut out: LoopGraph = g.clone().into();
    for v in 0..out.order() {
        out.add_loop(v);
    }
    out
}

/// `ℓ(H)`: subgraph induced by the looped vertices.
pub fn looped_subgraph(h: &LoopGraph) -> LoopGraph {
    h.induced(h.looped_vertices())
}

/// Extended line graph: vertices are the edges of `H` in lexicographic order;
/// two edges are adjacent when equal, when they share an endpoint, or when
/// they are opposite edges of a 4-cycle of `H`.
pub fn extended_line_graph(h: &Graph) -> Result<LoopGraph> {
    let edges = h.edges();
    fits("extended line graph", edges.len() as u128, MAX_VERTICES)?;
    let mut out = LoopGraph::empty(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i) {
            let incident = a == c || a == d || b == c || b == d;
            let opposite = (h.has_edge(a, c) && h.has_edge(b, d)) || (h.has_edge(a, d) && h.has_edge(b, c));
            if incident || opposite {
                out.add_edge(i, j);
            }
        }
    }
    Ok(out)
}

pub fn complement(g: &Graph) -> Graph {
    let all = full_set(g.order());
    let rows = (0..g.order()).map(|v| !g.neighbors(v) & all & !(1 << v)).collect();
    Graph::from_rows(rows).expect("complement of a valid graph is valid")
}

/// Block-diagonal union; part `i` is shifted by the orders of parts before it.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
    let n: usize = parts.iter().map(Graph::order).sum();
    fits("disjoint union", n as u128, MAX_VERTICES)?;
    let mut out = Graph::empty(n);
    let mut offset = 0;
    for part in parts {
        for (u, v) in part.edges() {
            out.add_edge(offset + u, offset + v);
        }
        offset += part.order();
    }
    Ok(out)
}

pub(crate) fn disjoint_union_loop(parts: &[LoopGraph]) -> Result<LoopGraph> {
    let n: usize = parts.iter().map(LoopGraph::order).sum();
    fits("disjoint union", n as u128, MAX_VERTICES)?;
    let mut out = LoopGraph::empty(n);
    let mut offset = 0;
    for part in parts {
        for (u, v) in part.edges() {
            out.add_edge(offset + u, offset + v);
        }
        offset += part.order();
    }
    Ok(out)
}

impl Graph {
    /// `kG`, the disjoint union of `k` copies.
    pub fn copies(&self, k: usize) -> Result<Graph> {
        disjoint_union(&vec![self.clone(); k])
    }

    /// Tensor product of two simple graphs (loopless, so the result is simple).
    pub fn tensor(&self, other: &Graph) -> Result<Graph> {
        let t = tensor_product(&self.to_loop_graph(), &other.to_loop_graph())?;
        Ok(t.to_simple().expect("product of loopless graphs is loopless"))
    }
}

impl LoopGraph {
    pub fn copies(&self, k: usize) -> Result<LoopGraph> {
        disjoint_union_loop(&vec![self.clone(); k])
    }
}
