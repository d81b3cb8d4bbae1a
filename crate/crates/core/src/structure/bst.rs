use crate::error::Result;
use crate::graph::{is_odd_closed_walk, two_coloring, Adjacency, LoopGraph, MAX_VERTICES};
use crate::Error;
use serde::{Deserialize, Serialize};

/// `H^bst` on `V(H) x V(H)`, pair `(u, v)` at index `u * |H| + v`:
/// `(u,v) ~ (u',v')` iff `uu', vv'` are edges and `uv'` or `u'v` is not.
pub fn bst_graph(h: &LoopGraph) -> Result<LoopGraph> {
    let n = h.order();
    if n * n > MAX_VERTICES {
        return Err(Error::CapExceeded {
            what: "H^bst",
            size: (n * n) as u128,
            cap: MAX_VERTICES as u128,
        });
    }
    let mut out = LoopGraph::empty(n * n);
    for a in 0..n * n {
        let (u, v) = (a / n, a % n);
        for b in a..n * n {
            let (u2, v2) = (b / n, b % n);
            if h.has_edge(u, u2) && h.has_edge(v, v2) && !(h.has_edge(u, v2) && h.has_edge(u2, v)) {
                out.add_edge(a, b);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BstWitness {
    /// Color of each pair `(u, v)`, indexed `u * |H| + v`.
    Coloring(Vec<u8>),
    /// Odd closed walk in `H^bst`, as pairs of target vertices.
    OddWalk(Vec<(usize, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BstVerdict {
    pub is_target: bool,
    pub witness: BstWitness,
}

impl BstVerdict {
    /// Re-derive the verdict from the witness against a freshly built `H^bst`.
    pub fn validate(&self, h: &LoopGraph) -> bool {
        let Ok(b) = bst_graph(h) else { return false };
        let n = h.order();
        match (&self.witness, self.is_target) {
            (BstWitness::Coloring(c), true) => {
                c.len() == b.order() && (0..b.order()).all(|x| crate::graph::members(b.row(x)).all(|y| c[x] != c[y]))
            }
            (BstWitness::OddWalk(w), false) => {
                let walk: Vec<usize> = w.iter().map(|&(u, v)| u * n + v).collect();
                w.iter().all(|&(u, v)| u < n && v < n) && is_odd_closed_walk(&b, &walk)
            }
            _ => false,
        }
    }
}

/// Whether `H^bst` is bipartite, with a 2-coloring or an odd closed walk.
pub fn is_bipartite_swapping_target(h: &LoopGraph) -> Result<BstVerdict> {
    let n = h.order();
    let b = bst_graph(h)?;
    Ok(match two_coloring(&b) {
        Ok(c) => BstVerdict {
            is_target: true,
            witness: BstWitness::Coloring(c),
        },
        Err(walk) => BstVerdict {
            is_target: false,
            witness: BstWitness::OddWalk(walk.into_iter().map(|x| (x / n, x % n)).collect()),
        },
    })
}
