use crate::counting::bigraph_hom_count;
use crate::error::{Error, Result};
use crate::graph::{members, Bigraph, LoopGraph, MAX_VERTICES};
use num_traits::ToPrimitive;

/// Loop-graph whose vertices are the bigraph homomorphisms `B -> A`, listed
/// lexicographically (vertex 0 of `B` most significant); `φ ~ φ'` iff
/// `φ(u) φ'(v)` is an edge of `A` for every ordered edge `uv` of `B`.
pub fn bigraph_hom_target(a: &Bigraph, b: &Bigraph) -> Result<LoopGraph> {
    bigraph_hom_target_capped(a, b, MAX_VERTICES)
}

pub fn bigraph_hom_target_capped(a: &Bigraph, b: &Bigraph, cap: usize) -> Result<LoopGraph> {
    let total = bigraph_hom_count(b, a);
    let size = total.to_u128().unwrap_or(u128::MAX);
    let cap = cap.min(MAX_VERTICES);
    if size > cap as u128 {
        return Err(Error::CapExceeded {
            what: "bigraph homomorphism set",
            size,
            cap: cap as u128,
        });
    }
    let homs = enumerate(a, b);
    debug_assert_eq!(homs.len() as u128, size);
    let ag = a.graph();
    let edges = b.graph().edges();
    let mut out = LoopGraph::empty(homs.len());
    for (i, f) in homs.iter().enumerate() {
        for (j, f2) in homs.iter().enumerate().skip(i) {
            let ok = edges
                .iter()
                .all(|&(u, v)| ag.has_edge(f[u], f2[v]) && ag.has_edge(f[v], f2[u]));
            if ok {
                out.add_edge(i, j);
            }
        }
    }
    Ok(out)
}

// Lexicographic enumeration: vertices of B in index order, images ascending.
fn enumerate(a: &Bigraph, b: &Bigraph) -> Vec<Vec<usize>> {
    let n = b.graph().order();
    let mut out = Vec::new();
    let mut map = vec![0; n];
    fn go(a: &Bigraph, b: &Bigraph, i: usize, map: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == map.len() {
            out.push(map.clone());
            return;
        }
        let mut cand = a.side_set(b.side(i));
        for w in members(b.graph().neighbors(i)).filter(|&w| w < i) {
            cand &= a.graph().neighbors(map[w]);
        }
        for x in members(cand) {
            map[i] = x;
            go(a, b, i + 1, map, out);
        }
    }
    go(a, b, 0, &mut map, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, extended_line_graph, parse_named, Graph, Side};

    fn bip(s: &str) -> Bigraph {
        Bigraph::from_bipartite(parse_named(s).unwrap().to_simple().unwrap()).unwrap()
    }

    #[test]
    fn edges_of_a_bipartite_graph() {
        let k2 = bip("K:2");
        for s in ["C:6", "P:4", "K:2,3", "C:8", "heawood"] {
            let b = bip(s);
            let t = bigraph_hom_target(&b, &k2).unwrap();
            let ext = extended_line_graph(b.graph()).unwrap();
            assert_eq!(canonical_form(&t), canonical_form(&ext), "{s}");
        }
        let c6 = bigraph_hom_target(&bip("C:6"), &k2).unwrap();
        assert_eq!(canonical_form(&c6), canonical_form(&parse_named("C:6+loops").unwrap()));
    }

    #[test]
    fn every_vertex_is_looped() {
        let t = bigraph_hom_target(&bip("K:3,3"), &bip("P:3")).unwrap();
        assert_eq!(t.loop_count(), t.order());
    }

    #[test]
    fn single_vertex_source() {
        let one = Bigraph::new(Graph::empty(1), vec![Side::L]).unwrap();
        let t = bigraph_hom_target(&bip("K:2"), &one).unwrap();
        assert_eq!(t, parse_named("loop").unwrap());
    }

    #[test]
    fn cap() {
        let r = bigraph_hom_target_capped(&bip("K:3,3"), &bip("C:4"), 10);
        assert!(matches!(r, Err(Error::CapExceeded { .. })));
    }
}
