//! Homomorphism counting by backtracking with candidate-set propagation.

use super::Tally;
use crate::graph::{members, Adjacency, Bigraph, Graph, LoopGraph, VertexSet};
use crate::Count;
use num_traits::{One, Zero};
use std::collections::VecDeque;

/// `hom(G, H)`: the number of maps `V(G) -> V(H)` sending edges to edges.
pub fn hom_count(g: &Graph, h: &LoopGraph) -> Count {
    hom_count_from(g, h)
}

/// As [`hom_count`], for a source that may carry loops: a looped source
/// vertex must land on a looped target vertex.
pub fn hom_count_from<A: Adjacency + ?Sized>(g: &A, h: &LoopGraph) -> Count {
    let everything = vec![h.vertex_set(); g.order()];
    hom_count_restricted(g, h, &everything)
}

/// Homomorphisms of bigraphs: left vertices to left vertices, right to right.
pub fn bigraph_hom_count(g: &Bigraph, h: &Bigraph) -> Count {
    let allowed: Vec<VertexSet> = (0..g.graph().order()).map(|v| h.side_set(g.side(v))).collect();
    hom_count_restricted(g.graph(), &h.graph().to_loop_graph(), &allowed)
}

/// Count homomorphisms where source vertex `v` may only use targets in
/// `allowed[v]`. Components are counted separately and multiplied.
pub fn hom_count_restricted<A: Adjacency + ?Sized>(g: &A, h: &LoopGraph, allowed: &[VertexSet]) -> Count {
    let n = g.order();
    assert_eq!(allowed.len(), n, "one candidate set per source vertex");
    let mut seen: VertexSet = 0;
    let mut total = Count::one();
    for start in 0..n {
        if seen >> start & 1 == 1 {
            continue;
        }
        let order = component_order(g, start);
        for &v in &order {
            seen |= 1 << v;
        }
        let c = count_component(g, h, allowed, &order);
        if c.is_zero() {
            return c;
        }
        total *= c;
    }
    total
}

// BFS order of the component of `start`, rooted at its maximum-degree vertex.
fn component_order<A: Adjacency + ?Sized>(g: &A, start: usize) -> Vec<usize> {
    let mut comp: VertexSet = 1 << start;
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        for u in members(frontier) {
            next |= g.row(u);
        }
        next &= !comp;
        comp |= next;
        frontier = next;
    }
    let degree = |v: usize| (g.row(v) & !(1u64 << v)).count_ones();
    let root = members(comp)
        .max_by_key(|&v| (degree(v), std::cmp::Reverse(v)))
        .expect("component is nonempty");
    let mut order = vec![root];
    let mut placed: VertexSet = 1 << root;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for w in members(g.row(u) & !placed) {
            placed |= 1 << w;
            order.push(w);
            queue.push_back(w);
        }
    }
    order
}

fn count_component<A: Adjacency + ?Sized>(g: &A, h: &LoopGraph, allowed: &[VertexSet], order: &[usize]) -> Count {
    let bits = (h.order().max(1) as f64).log2() * order.len() as f64;
    if bits < 126.0 {
        Backtrack::<u128>::new(g, h, allowed, order).count().into_count()
    } else {
        Backtrack::<Count>::new(g, h, allowed, order).count()
    }
}

struct Backtrack<'a, T> {
    h: &'a LoopGraph,
    /// Positions of earlier neighbors, per position.
    back: Vec<Vec<usize>>,
    base: Vec<VertexSet>,
    image: Vec<usize>,
    _tally: std::marker::PhantomData<T>,
}

impl<'a, T: Tally> Backtrack<'a, T> {
    fn new<A: Adjacency + ?Sized>(g: &A, h: &'a LoopGraph, allowed: &[VertexSet], order: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; g.order()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let looped = h.looped_vertices();
        let mut back = Vec::with_capacity(order.len());
        let mut base = Vec::with_capacity(order.len());
        for (i, &v) in order.iter().enumerate() {
            let mut cand = allowed[v];
            if g.adjacent(v, v) {
                cand &= looped;
            }
            base.push(cand);
            back.push(
                members(g.row(v) & !(1u64 << v))
                    .map(|w| pos[w])
                    .filter(|&p| p < i)
                    .collect(),
            );
        }
        Backtrack {
            h,
            back,
            base,
            image: vec![0; order.len()],
            _tally: std::marker::PhantomData,
        }
    }

    fn candidates(&self, i: usize) -> VertexSet {
        self.back[i]
            .iter()
            .fold(self.base[i], |acc, &p| acc & self.h.neighbors(self.image[p]))
    }

    fn count(&mut self) -> T {
        if self.base.is_empty() {
            return T::one();
        }
        self.extend(0)
    }

    fn extend(&mut self, i: usize) -> T {
        let cand = self.candidates(i);
        let last = self.base.len() - 1;
        if i == last {
            return T::from(cand.count_ones() as u64);
        }
        let mut total = T::zero();
        for x in members(cand) {
            self.image[i] = x;
            let sub = self.extend(i + 1);
            total += &sub;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_named, Side};

    fn simple(s: &str) -> Graph {
        parse_named(s).unwrap().to_simple().unwrap()
    }

    fn named(s: &str) -> LoopGraph {
        parse_named(s).unwrap()
    }

    /// Oracle: try every map.
    fn brute<A: Adjacency>(g: &A, h: &LoopGraph) -> u64 {
        let (n, k) = (g.order(), h.order());
        let mut count = 0;
        let mut map = vec![0usize; n];
        'outer: loop {
            let ok = (0..n).all(|u| members(g.row(u)).all(|v| h.has_edge(map[u], map[v])));
            if ok {
                count += 1;
            }
            for slot in map.iter_mut() {
                *slot += 1;
                if *slot < k {
                    continue 'outer;
                }
                *slot = 0;
            }
            break;
        }
        count
    }

    #[test]
    fn fixtures() {
        assert_eq!(hom_count(&simple("C:4"), &named("H_ind")), Count::from(7u32));
        assert_eq!(hom_count(&simple("K:4"), &named("K:3")), Count::zero());
        assert_eq!(brute(&simple("C:4"), &named("H_WR")), 35);
        assert_eq!(hom_count(&simple("C:4"), &named("H_WR")), Count::from(35u32));
        assert_eq!(hom_count(&simple("C:6"), &named("two_loops")), Count::from(2u32));
        let c6c4 = crate::graph::disjoint_union(&[simple("C:6"), simple("C:4")]).unwrap();
        assert_eq!(hom_count(&c6c4, &named("two_loops")), Count::from(4u32));
        assert_eq!(hom_count(&Graph::empty(0), &named("K:3")), Count::one());
        assert_eq!(hom_count(&Graph::empty(3), &named("K:3")), Count::from(27u32));
    }

    #[test]
    fn agrees_with_brute_force() {
        let sources = ["C:5", "K:4", "P:4", "K:2,3", "L:5,6", "E:3"];
        let targets = ["H_ind", "H_WR", "K:3", "two_loops", "PL:4,2", "C:4"];
        for s in sources {
            for t in targets {
                let (g, h) = (simple(s), named(t));
                assert_eq!(hom_count(&g, &h), Count::from(brute(&g, &h)), "{s} -> {t}");
            }
        }
    }

    #[test]
    fn looped_source() {
        let g = named("C:4+loops");
        for t in ["H_ind", "H_WR", "PL:5,2,3", "K:3+loops"] {
            let h = named(t);
            assert_eq!(hom_count_from(&g, &h), Count::from(brute(&g, &h)), "{t}");
        }
    }

    #[test]
    fn large_counts_use_big_integers() {
        // 3^90 overflows u128 if counted naively
        let g = Graph::empty(60);
        let h = named("K:3+loops");
        let expected = num_traits::pow(Count::from(3u32), 60);
        assert_eq!(hom_count(&g, &h), expected);
        // wide target, tiny answer: forces the big-integer backtracker
        let wide = LoopGraph::from_edges(64, &[(0, 1)]).unwrap();
        assert_eq!(hom_count(&simple("P:30"), &wide), Count::from(2u32));
    }

    #[test]
    fn bigraph_counts() {
        let k11 = Bigraph::new(simple("K:2"), vec![Side::L, Side::R]).unwrap();
        let k23 = Bigraph::from_bipartite(simple("K:2,3")).unwrap();
        assert_eq!(bigraph_hom_count(&k11, &k23), Count::from(6u32));
        // edgeless source: |L|^{|L_G|} |R|^{|R_G|}
        let e = Bigraph::new(Graph::empty(3), vec![Side::L, Side::L, Side::R]).unwrap();
        assert_eq!(bigraph_hom_count(&e, &k23), Count::from(2u32 * 2 * 3));
        // connected bipartite source: both orientations add up to the plain count
        let c4 = Bigraph::from_bipartite(simple("C:4")).unwrap();
        let flipped: Vec<Side> = c4
            .sides()
            .iter()
            .map(|s| if *s == Side::L { Side::R } else { Side::L })
            .collect();
        let c4f = Bigraph::new(simple("C:4"), flipped).unwrap();
        let plain = Count::from(brute(&simple("C:4"), &named("K:2,3")));
        assert_eq!(bigraph_hom_count(&c4, &k23) + bigraph_hom_count(&c4f, &k23), plain);
    }
}
