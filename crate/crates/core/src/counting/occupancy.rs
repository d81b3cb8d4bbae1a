//! Hard-core model observables.

use super::poly::independence_polynomial;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::{Count, Rational, Scalar};
use num_traits::One;

/// `α_G(λ) = λ P'(λ) / (v(G) P(λ))`.
pub fn occupancy_fraction<S: Scalar>(g: &Graph, lambda: &S) -> Result<S> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let p = independence_polynomial(g);
    Ok(p.eval_weighted(lambda) / (p.eval(lambda) * S::from_u64(g.order() as u64)))
}

/// `table[k][t]`: number of pairs `(v, I)` with `|I| = t` and `|I ∩ N(v)| = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborTable {
    pub n: usize,
    pub table: Vec<Vec<Count>>,
}

impl NeighborTable {
    pub fn build(g: &Graph) -> Self {
        let n = g.order();
        let delta = g.max_degree();
        let mut table = vec![vec![0u128; n + 1]; delta + 1];
        for_each_independent(g, |set| {
            let t = set.count_ones() as usize;
            for v in 0..n {
                table[(g.neighbors(v) & set).count_ones() as usize][t] += 1;
            }
        });
        NeighborTable {
            n,
            table: table
                .into_iter()
                .map(|row| row.into_iter().map(Count::from).collect())
                .collect(),
        }
    }

    /// `p_0 .. p_Δ` at fugacity `λ`.
    pub fn distribution<S: Scalar>(&self, lambda: &S) -> Vec<S> {
        let eval = |row: &[Count]| {
            row.iter()
                .rev()
                .fold(S::zero(), |acc, c| acc * lambda.clone() + S::from_count(c))
        };
        let rows: Vec<S> = self.table.iter().map(|r| eval(r)).collect();
        let z = rows.iter().fold(S::zero(), |a, b| a + b.clone());
        rows.into_iter().map(|r| r / z.clone()).collect()
    }
}

/// Visit every independent set of `g` as a bitmask.
pub(crate) fn for_each_independent(g: &Graph, mut f: impl FnMut(VertexSet)) {
    fn go(g: &Graph, next: usize, set: VertexSet, banned: VertexSet, f: &mut impl FnMut(VertexSet)) {
        f(set);
        for v in next..g.order() {
            if banned >> v & 1 == 0 {
                go(g, v + 1, set | 1 << v, banned | g.neighbors(v), f);
            }
        }
    }
    go(g, 0, 0, 0, &mut f);
}

/// `p_k = Pr(|I ∩ N(v)| = k)` for `k = 0..=Δ`, with `I` hard-core at `λ`
/// and `v` uniform, summed exactly over all independent sets.
pub fn neighbor_occupancy_distribution<S: Scalar>(g: &Graph, lambda: &S) -> Result<Vec<S>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(NeighborTable::build(g).distribution(lambda))
}

/// Maximum of `p_0` subject to the probability, neighbor-relation and
/// descending-ratio constraints for degree `d`: `(1+λ)^d / (2(1+λ)^d - 1)`.
pub fn occupancy_lp_optimum(d: usize, lambda: &Rational) -> Rational {
    let a = (Rational::one() + lambda).pow_u(d as u64);
    a.clone() / (a * Rational::from_u64(2) - Rational::one())
}

/// The optimal vector `p_0..p_d`: every descending constraint is tight.
pub fn occupancy_lp_solution(d: usize, lambda: &Rational) -> Vec<Rational> {
    let p0 = occupancy_lp_optimum(d, lambda);
    let mut out = vec![p0.clone()];
    if d == 0 {
        return out;
    }
    let a = (Rational::one() + lambda).pow_u(d as u64);
    let mut pk = Rational::from_u64(d as u64) * lambda * p0 / a;
    out.push(pk.clone());
    for k in 2..=d {
        pk = pk * Rational::from_u64((d - k + 1) as u64) * lambda / Rational::from_u64(k as u64);
        out.push(pk.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{members, parse_named};
    use crate::scalar::ratio;
    use num_traits::Zero;

    fn simple(s: &str) -> Graph {
        parse_named(s).unwrap().to_simple().unwrap()
    }

    fn r(n: i64) -> Rational {
        ratio(n, 1)
    }

    #[test]
    fn occupancy_values() {
        assert_eq!(occupancy_fraction(&simple("K:3,3"), &r(1)).unwrap(), ratio(4, 15));
        assert_eq!(occupancy_fraction(&simple("K:4"), &r(1)).unwrap(), ratio(1, 5));
        assert_eq!(occupancy_fraction(&simple("petersen"), &r(0)).unwrap(), r(0));
        assert!(occupancy_fraction(&Graph::empty(0), &r(1)).is_err());
        let f: f64 = occupancy_fraction(&simple("K:3,3"), &1.0).unwrap();
        assert!((f - 4.0 / 15.0).abs() < 1e-12);
    }

    #[test]
    fn occupancy_matches_direct_expectation() {
        for s in ["C:5", "petersen", "L:7,9", "K:2,3"] {
            let g = simple(s);
            let lam = ratio(2, 3);
            let (mut num, mut den) = (r(0), r(0));
            for_each_independent(&g, |set| {
                let w = lam.pow_u(set.count_ones() as u64);
                num += w.clone() * r(set.count_ones() as i64);
                den += w;
            });
            let direct = num / (den * r(g.order() as i64));
            assert_eq!(occupancy_fraction(&g, &lam).unwrap(), direct, "{s}");
        }
    }

    #[test]
    fn k22_distribution_by_hand() {
        // seven independent sets times four vertices
        let p = neighbor_occupancy_distribution(&simple("C:4"), &r(1)).unwrap();
        let g = simple("C:4");
        let mut counts = [0i64; 3];
        for_each_independent(&g, |set| {
            for v in 0..4 {
                counts[(g.neighbors(v) & set).count_ones() as usize] += 1;
            }
        });
        assert_eq!(counts.iter().sum::<i64>(), 28);
        let expect: Vec<Rational> = counts.iter().map(|&c| ratio(c, 28)).collect();
        assert_eq!(p, expect);
        assert_eq!(p.iter().cloned().sum::<Rational>(), r(1));
    }

    #[test]
    fn lp_closed_form() {
        assert_eq!(occupancy_lp_optimum(3, &r(1)), ratio(8, 15));
        assert_eq!(occupancy_lp_optimum(1, &r(1)), ratio(2, 3));
        let k2 = neighbor_occupancy_distribution(&simple("K:2"), &r(1)).unwrap();
        assert_eq!(k2[0], ratio(2, 3));
        for d in 2..=4 {
            for lam in [ratio(1, 2), r(1), r(2)] {
                let kdd = simple(&format!("K:{d},{d}"));
                let alpha = occupancy_fraction(&kdd, &lam).unwrap();
                let scale = lam.clone() / (r(1) + lam.clone());
                assert_eq!(scale * occupancy_lp_optimum(d, &lam), alpha);
                let dist = neighbor_occupancy_distribution(&kdd, &lam).unwrap();
                assert_eq!(dist, occupancy_lp_solution(d, &lam));
            }
        }
    }

    /// Oracle: enumerate basic solutions of the LP and keep the best feasible one.
    fn lp_by_vertices(d: usize, lam: &Rational) -> Rational {
        let vars = d + 1;
        // equalities: sum p = 1; (λ/(1+λ)) p0 - (1/d) sum k p_k = 0
        let mut eqs: Vec<(Vec<Rational>, Rational)> = vec![(vec![r(1); vars], r(1))];
        let mut rel = vec![lam.clone() / (r(1) + lam.clone())];
        rel.extend((1..=d).map(|k| -ratio(k as i64, d as i64)));
        eqs.push((rel, r(0)));
        // inequalities a·p >= 0
        let mut ineqs: Vec<Vec<Rational>> = Vec::new();
        for k in 2..=d {
            let mut row = vec![r(0); vars];
            row[k - 1] = r((d - k + 1) as i64) * lam;
            row[k] = -r(k as i64);
            ineqs.push(row);
        }
        for i in 0..vars {
            let mut row = vec![r(0); vars];
            row[i] = r(1);
            ineqs.push(row);
        }
        let need = vars - eqs.len();
        let mut best: Option<Rational> = None;
        for pick in 0u32..1 << ineqs.len() {
            if pick.count_ones() as usize != need {
                continue;
            }
            let mut rows = eqs.clone();
            rows.extend(members(pick as u64).map(|i| (ineqs[i].clone(), r(0))));
            if let Some(p) = solve(rows) {
                let feasible = ineqs
                    .iter()
                    .all(|a| a.iter().zip(&p).map(|(x, y)| x * y).sum::<Rational>() >= r(0));
                if feasible && best.as_ref().is_none_or(|b| p[0] > *b) {
                    best = Some(p[0].clone());
                }
            }
        }
        best.expect("LP is feasible")
    }

    fn solve(mut rows: Vec<(Vec<Rational>, Rational)>) -> Option<Vec<Rational>> {
        let n = rows.len();
        for col in 0..n {
            let piv = (col..n).find(|&i| !rows[i].0[col].is_zero())?;
            rows.swap(col, piv);
            let (a, b) = rows[col].clone();
            for i in 0..n {
                if i != col && !rows[i].0[col].is_zero() {
                    let f = rows[i].0[col].clone() / a[col].clone();
                    for j in 0..n {
                        let t = f.clone() * a[j].clone();
                        rows[i].0[j] -= t;
                    }
                    rows[i].1 -= f * b.clone();
                }
            }
        }
        Some((0..n).map(|i| rows[i].1.clone() / rows[i].0[i].clone()).collect())
    }

    #[test]
    fn lp_optimum_matches_vertex_enumeration() {
        for d in 1..=4 {
            for lam in [ratio(1, 3), r(1), ratio(5, 2)] {
                assert_eq!(lp_by_vertices(d, &lam), occupancy_lp_optimum(d, &lam), "d={d}");
            }
        }
    }
}
