//! Graph types, named constructors and the graph operators used throughout the
//! crate.
//!
//! Adjacency is stored as one `u64` bit row per vertex, which caps every graph
//! at [`MAX_VERTICES`] vertices. Simple source graphs are [`Graph`]; target
//! graphs that may carry loops are [`LoopGraph`].

mod canon;
mod facts;
pub mod io;
mod named;
mod ops;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub(crate) use facts::two_coloring;
pub use facts::{analyze, is_odd_closed_walk, odd_closed_walk, GraphFacts};
pub use named::{parse_named, path_with_loops, standard_graph, GraphSpec};
pub use ops::{
    add_loops, bipartite_double_cover, complement, disjoint_union, exponentiate, extended_line_graph, looped_subgraph,
    tensor_product, DEFAULT_POWER_CAP,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A set of vertices, bit `v` standing for vertex `v`.
pub type VertexSet = u64;

/// Hard limit imposed by the `u64` adjacency rows.
pub const MAX_VERTICES: usize = 64;

/// Iterate over the members of a vertex set in increasing order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Mask with the lowest `n` bits set.
pub fn full_set(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices { n, cap: MAX_VERTICES })
    } else {
        Ok(())
    }
}

/// Read-only view shared by [`Graph`] and [`LoopGraph`].
pub trait Adjacency {
    fn order(&self) -> usize;
    /// Neighborhood of `v`, including `v` itself when it carries a loop.
    fn row(&self, v: usize) -> VertexSet;

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.row(u) >> v & 1 == 1
    }

    fn vertex_set(&self) -> VertexSet {
        full_set(self.order())
    }
}

/// Simple undirected graph without loops.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics when `n` exceeds [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph order {n} above {MAX_VERTICES}");
        Graph { n, rows: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Build from adjacency rows; the rows must be symmetric with empty diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        for (u, &row) in rows.iter().enumerate() {
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            if row & !full_set(n) != 0 {
                return Err(Error::BadParameter(format!("row {u} names a vertex >= {n}")));
            }
            for v in members(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::BadParameter(format!("asymmetric entry {u},{v}")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in members(self.rows[u] >> (u + 1) << (u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.rows[v] & set == 0)
    }

    /// Induced subgraph on `set`, relabelled in increasing vertex order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts: Vec<usize> = members(set).collect();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let comp = self.reach(v, self.vertex_set());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for u in members(frontier) {
                next |= self.rows[u];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertex_set()) == self.vertex_set()
    }

    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.n)
    }

    pub fn to_loop_graph(&self) -> LoopGraph {
        LoopGraph {
            n: self.n,
            rows: self.rows.clone(),
        }
    }
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        self.n
    }
    fn row(&self, v: usize) -> VertexSet {
        self.rows[v]
    }
}

/// Undirected graph in which loops are allowed; used for homomorphism targets.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LoopGraph {
    n: usize,
    rows: Vec<u64>,
}

impl LoopGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph order {n} above {MAX_VERTICES}");
        LoopGraph { n, rows: vec![0; n] }
    }

    /// Edges may include loops `(v, v)`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut h = LoopGraph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { v: w, n });
                }
            }
            h.add_edge(u, v);
        }
        Ok(h)
    }

    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        for (u, &row) in rows.iter().enumerate() {
            if row & !full_set(n) != 0 {
                return Err(Error::BadParameter(format!("row {u} names a vertex >= {n}")));
            }
            for v in members(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::BadParameter(format!("asymmetric entry {u},{v}")));
                }
            }
        }
        Ok(LoopGraph { n, rows })
    }

    /// Build from a 0/1 adjacency matrix given row by row.
    pub fn from_matrix(matrix: &[&[u8]]) -> Result<Self> {
        let rows = matrix
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &b)| acc | (u64::from(b != 0) << j))
            })
            .collect();
        LoopGraph::from_rows(rows)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge {u}-{v}");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn add_loop(&mut self, v: usize) {
        self.add_edge(v, v);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn looped_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.has_loop(v)).fold(0, |acc, v| acc | 1 << v)
    }

    pub fn loop_count(&self) -> usize {
        self.looped_vertices().count_ones() as usize
    }

    /// Edges `(u, v)` with `u <= v`; loops appear as `(v, v)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in members(self.rows[u] >> u << u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn induced(&self, set: VertexSet) -> LoopGraph {
        let verts: Vec<usize> = members(set).collect();
        let mut h = LoopGraph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    pub fn permuted(&self, perm: &[usize]) -> LoopGraph {
        let mut h = LoopGraph::empty(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    /// The underlying simple graph, if there are no loops.
    pub fn to_simple(&self) -> Option<Graph> {
        (self.looped_vertices() == 0).then(|| Graph {
            n: self.n,
            rows: self.rows.clone(),
        })
    }

    /// Drop the loops, keeping every other edge.
    pub fn without_loops(&self) -> Graph {
        let rows = self.rows.iter().enumerate().map(|(v, r)| r & !(1 << v)).collect();
        Graph { n: self.n, rows }
    }

    /// Adjacency matrix rendered as rows of `0`/`1` characters.
    pub fn matrix_rows(&self) -> Vec<String> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| if self.has_edge(u, v) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

impl Adjacency for LoopGraph {
    fn order(&self) -> usize {
        self.n
    }
    fn row(&self, v: usize) -> VertexSet {
        self.rows[v]
    }
}

impl From<&Graph> for LoopGraph {
    fn from(g: &Graph) -> Self {
        g.to_loop_graph()
    }
}

impl From<Graph> for LoopGraph {
    fn from(g: Graph) -> Self {
        LoopGraph { n: g.n, rows: g.rows }
    }
}

/// Side of a vertex in a [`Bigraph`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

/// Bipartite graph with a fixed left/right labelling of its vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bigraph {
    graph: Graph,
    sides: Vec<Side>,
}

impl Bigraph {
    pub fn new(graph: Graph, sides: Vec<Side>) -> Result<Self> {
        if sides.len() != graph.order() {
            return Err(Error::BadParameter(format!(
                "{} side labels for {} vertices",
                sides.len(),
                graph.order()
            )));
        }
        for (u, v) in graph.edges() {
            if sides[u] == sides[v] {
                return Err(Error::BadParameter(format!(
                    "edge {u}-{v} joins two {:?} vertices",
                    sides[u]
                )));
            }
        }
        Ok(Bigraph { graph, sides })
    }

    /// Use the bipartition found by [`analyze`], component by component with
    /// the least vertex of each component on the left.
    pub fn from_bipartite(graph: Graph) -> Result<Self> {
        let facts = analyze(&graph);
        let coloring = facts
            .bipartition
            .ok_or_else(|| Error::BadParameter("graph is not bipartite".into()))?;
        let sides = coloring
            .iter()
            .map(|&c| if c == 0 { Side::L } else { Side::R })
            .collect();
        Bigraph::new(graph, sides)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn side_set(&self, side: Side) -> VertexSet {
        self.sides
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == side)
            .fold(0, |acc, (v, _)| acc | 1 << v)
    }
}
