//! Potts partition function as a polynomial in `x = e^{-β}`.

use super::poly::{CountPolynomial, PolyKind};
use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet};
use crate::{Count, Scalar};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, VecDeque};

/// Coefficient of `x^j` counts colorings `V(G) -> [q]` with exactly `j`
/// monochromatic edges.
///
/// Frontier dynamic program: vertices are colored in BFS order and only the
/// colors of colored vertices with uncolored neighbors are remembered.
pub fn potts_polynomial(g: &Graph, q: usize) -> CountPolynomial {
    assert!(q >= 1, "need at least one color");
    let order = bfs_order(g);
    let mut done: VertexSet = 0;
    let mut frontier: Vec<usize> = Vec::new();
    let mut states: BTreeMap<Vec<u8>, Vec<Count>> = BTreeMap::new();
    states.insert(Vec::new(), vec![Count::one()]);
    for &v in &order {
        let slots: Vec<usize> = frontier
            .iter()
            .enumerate()
            .filter(|(_, &u)| g.has_edge(u, v))
            .map(|(i, _)| i)
            .collect();
        done |= 1 << v;
        let mut grown = frontier.clone();
        grown.push(v);
        let keep: Vec<bool> = grown.iter().map(|&u| g.neighbors(u) & !done != 0).collect();
        let mut next: BTreeMap<Vec<u8>, Vec<Count>> = BTreeMap::new();
        for (state, poly) in &states {
            for c in 0..q as u8 {
                let mono = slots.iter().filter(|&&i| state[i] == c).count();
                let mut key: Vec<u8> = state.iter().zip(&keep).filter(|(_, &k)| k).map(|(&s, _)| s).collect();
                if keep[grown.len() - 1] {
                    key.push(c);
                }
                let slot = next.entry(key).or_default();
                if slot.len() < poly.len() + mono {
                    slot.resize(poly.len() + mono, Count::zero());
                }
                for (j, a) in poly.iter().enumerate() {
                    slot[j + mono] += a;
                }
            }
        }
        frontier = grown
            .into_iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(u, _)| u)
            .collect();
        states = next;
    }
    let mut total: Vec<Count> = Vec::new();
    for poly in states.into_values() {
        if total.len() < poly.len() {
            total.resize(poly.len(), Count::zero());
        }
        for (j, a) in poly.into_iter().enumerate() {
            total[j] += a;
        }
    }
    CountPolynomial::new(PolyKind::Potts, total)
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen: VertexSet = 0;
    let mut order = Vec::with_capacity(g.order());
    for s in 0..g.order() {
        if seen >> s & 1 == 1 {
            continue;
        }
        seen |= 1 << s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in members(g.neighbors(u) & !seen) {
                seen |= 1 << w;
                queue.push_back(w);
            }
        }
    }
    order
}

/// `U = (sum_j j c_j x^j) / (v(G) sum_j c_j x^j)`: expected monochromatic
/// edges per vertex at `x = e^{-β}`.
pub fn potts_internal_energy<S: Scalar>(g: &Graph, q: usize, x: &S) -> Result<S> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let z = potts_polynomial(g, q);
    Ok(energy_from(&z, g.order(), x))
}

pub(crate) fn energy_from<S: Scalar>(z: &CountPolynomial, n: usize, x: &S) -> S {
    z.eval_weighted(x) / (z.eval(x) * S::from_u64(n as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::hom_count;
    use crate::graph::parse_named;
    use crate::scalar::ratio;
    use crate::Rational;

    fn simple(s: &str) -> Graph {
        parse_named(s).unwrap().to_simple().unwrap()
    }

    /// Oracle: every coloring, bucketed by monochromatic edge count.
    fn brute(g: &Graph, q: usize) -> Vec<Count> {
        let edges = g.edges();
        let mut out = vec![Count::zero(); edges.len() + 1];
        let n = g.order();
        let mut col = vec![0usize; n];
        'outer: loop {
            let mono = edges.iter().filter(|&&(a, b)| col[a] == col[b]).count();
            out[mono] += 1u32;
            for c in col.iter_mut() {
                *c += 1;
                if *c < q {
                    continue 'outer;
                }
                *c = 0;
            }
            break;
        }
        CountPolynomial::new(PolyKind::Potts, out).coeffs().to_vec()
    }

    #[test]
    fn small_cases() {
        let k2 = potts_polynomial(&simple("K:2"), 2);
        assert_eq!(k2.coeffs(), &[Count::from(2u32), Count::from(2u32)]);
        let c4 = potts_polynomial(&simple("C:4"), 3);
        assert_eq!(c4.coeff(0), Count::from(18u32));
        assert_eq!(c4.total(), Count::from(81u32));
    }

    #[test]
    fn agrees_with_brute_force() {
        for s in ["C:5", "K:4", "petersen", "K:3,3", "L:6,8", "E:3"] {
            let g = simple(s);
            for q in 1..=3 {
                assert_eq!(potts_polynomial(&g, q).coeffs(), brute(&g, q).as_slice(), "{s} q={q}");
            }
        }
    }

    #[test]
    fn zero_coefficient_is_proper_coloring_count() {
        for s in ["petersen", "C:7", "K:2,2,2"] {
            let g = simple(s);
            for q in 2..=4 {
                let k = parse_named(&format!("K:{q}")).unwrap();
                assert_eq!(potts_polynomial(&g, q).coeff(0), hom_count(&g, &k));
            }
        }
    }

    #[test]
    fn energy() {
        let c4 = simple("C:4");
        // at x = 1 every edge is monochromatic with probability 1/q
        assert_eq!(potts_internal_energy(&c4, 3, &ratio(1, 1)).unwrap(), ratio(4, 12));
        assert_eq!(
            potts_internal_energy(&simple("K:2"), 2, &ratio(1, 2)).unwrap(),
            ratio(1, 6)
        );
        let tiny: Rational = potts_internal_energy(&simple("petersen"), 3, &ratio(1, 1000)).unwrap();
        assert!(tiny < ratio(1, 100));
        assert!(potts_internal_energy(&Graph::empty(0), 3, &ratio(1, 2)).is_err());
    }
}
