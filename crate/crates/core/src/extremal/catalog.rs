//! One checker per extremal inequality. Each validates its hypotheses strictly
//! and returns the exact comparison it decided.

use super::{BoundReport, Direction, Power};
use crate::counting::{
    hom_count, independence_polynomial, matching_polynomial, occupancy_fraction, pm, CountPolynomial, PolyKind,
};
use crate::error::{Error, Result};
use crate::graph::{
    analyze, exponentiate, extended_line_graph, looped_subgraph, parse_named, standard_graph, Bigraph, Graph,
    GraphFacts, LoopGraph,
};
use crate::scalar::format_rational;
use crate::structure::{bigraph_hom_target, is_bipartite_swapping_target, is_loop_threshold};
use crate::{Count, Rational, Scalar};
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

pub const BOUND_IDS: [&str; 21] = [
    "kahn_max_ind",
    "zhao_max_ind",
    "gt_max_hom",
    "threshold_max_hom",
    "bst_double_cover",
    "wr_max",
    "sernau_loop_power",
    "bigraph_target_max",
    "extended_line_max",
    "indep_poly_max",
    "occupancy_max",
    "ind_min",
    "ind_min_by_size",
    "color_min",
    "color_min_bip",
    "biregular_max",
    "kruskal_katona",
    "min_degree_max",
    "pm_max",
    "matching_poly_max",
    "pm_min_bip",
];

/// A target graph together with the name it is reported under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target {
    pub name: String,
    pub graph: LoopGraph,
}

impl Target {
    pub fn named(spec: &str) -> Result<Target> {
        Ok(Target {
            name: spec.to_string(),
            graph: parse_named(spec)?,
        })
    }

    pub fn new(name: impl Into<String>, graph: LoopGraph) -> Target {
        Target {
            name: name.into(),
            graph,
        }
    }
}

/// Parameters of a bound; which ones are needed depends on the bound.
#[derive(Clone, Debug, Default)]
pub struct BoundParams {
    pub q: Option<usize>,
    pub lambda: Option<Rational>,
    pub t: Option<usize>,
    pub delta: Option<usize>,
    /// `H`
    pub target: Option<Target>,
    /// `A` for the loop-power and bigraph-target bounds.
    pub a: Option<Target>,
    /// `B` for the loop-power and bigraph-target bounds.
    pub b: Option<Target>,
}

struct Ctx<'a> {
    id: &'a str,
    g: &'a Graph,
    facts: GraphFacts,
    params: &'a BoundParams,
    shown: BTreeMap<String, String>,
}

impl<'a> Ctx<'a> {
    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::hypothesis(self.id, reason)
    }

    /// Regular degree `d >= 1`.
    fn regular(&mut self) -> Result<usize> {
        match self.facts.regular_degree {
            Some(d) if d >= 1 && self.facts.n >= 1 => {
                self.shown.insert("d".into(), d.to_string());
                Ok(d)
            }
            _ => Err(self.fail("graph must be d-regular with d >= 1")),
        }
    }

    fn bipartite(&self) -> Result<()> {
        if self.facts.is_bipartite() {
            Ok(())
        } else {
            Err(self.fail("graph must be bipartite"))
        }
    }

    fn q(&mut self) -> Result<usize> {
        match self.params.q {
            Some(q) if q >= 2 => {
                self.shown.insert("q".into(), q.to_string());
                Ok(q)
            }
            Some(q) => Err(Error::BadParameter(format!("q must be at least 2, got {q}"))),
            None => Err(Error::BadParameter(format!("`{}` needs q", self.id))),
        }
    }

    fn lambda(&mut self) -> Result<Rational> {
        match &self.params.lambda {
            Some(l) if *l >= Rational::zero() => {
                self.shown.insert("lambda".into(), format_rational(l));
                Ok(l.clone())
            }
            Some(_) => Err(Error::BadParameter("lambda must be nonnegative".into())),
            None => Err(Error::BadParameter(format!("`{}` needs lambda", self.id))),
        }
    }

    fn t(&mut self) -> Result<usize> {
        let t = self
            .params
            .t
            .ok_or_else(|| Error::BadParameter(format!("`{}` needs t", self.id)))?;
        self.shown.insert("t".into(), t.to_string());
        Ok(t)
    }

    fn graph_param(&mut self, key: &str, which: &Option<Target>) -> Result<Target> {
        let t = which
            .clone()
            .ok_or_else(|| Error::BadParameter(format!("`{}` needs {key}", self.id)))?;
        self.shown.insert(key.into(), t.name.clone());
        Ok(t)
    }

    fn target(&mut self) -> Result<Target> {
        let t = self.params.target.clone();
        self.graph_param("H", &t)
    }

    fn report(self, lhs: Power, rhs: Power, direction: Direction) -> BoundReport {
        BoundReport::new(self.id, self.g, self.shown, lhs, rhs, direction)
    }
}

fn simple(name: &str, params: &[usize]) -> Graph {
    standard_graph(name, params)
        .expect("catalog graph")
        .to_simple()
        .expect("catalog graph is simple")
}

fn small(k: usize) -> Rational {
    Rational::from_u64(k as u64)
}

fn bipartite_simple(ctx: &Ctx, t: &Target) -> Result<Graph> {
    let g = t
        .graph
        .to_simple()
        .ok_or_else(|| ctx.fail(format!("{} must be loopless", t.name)))?;
    if !analyze(&g).is_bipartite() {
        return Err(ctx.fail(format!("{} must be bipartite", t.name)));
    }
    Ok(g)
}

/// `hom(G,H)^{2d} <= hom(K_{d,d},H)^n`.
fn kdd_max(ctx: Ctx, d: usize, h: &LoopGraph) -> BoundReport {
    let n = ctx.g.order() as u64;
    let lhs = Power::count(&hom_count(ctx.g, h), 2 * d as u64);
    let rhs = Power::count(&hom_count(&simple("K", &[d, d]), h), n);
    ctx.report(lhs, rhs, Direction::Upper)
}

/// `hom(G,H)^{d+1} <= hom(K_{d+1},H)^n`.
fn clique_max(ctx: Ctx, d: usize, h: &LoopGraph) -> BoundReport {
    let n = ctx.g.order() as u64;
    let lhs = Power::count(&hom_count(ctx.g, h), d as u64 + 1);
    let rhs = Power::count(&hom_count(&simple("K", &[d + 1]), h), n);
    ctx.report(lhs, rhs, Direction::Upper)
}

fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let mut acc = Count::one();
    for i in 0..k {
        acc = acc * Count::from(n - i) / Count::from(i + 1);
    }
    acc
}

/// Check one bound on one graph.
pub fn check_bound(g: &Graph, bound_id: &str, params: &BoundParams) -> Result<BoundReport> {
    let id = BOUND_IDS
        .iter()
        .find(|&&b| b == bound_id)
        .ok_or_else(|| Error::UnknownBound(bound_id.to_string()))?;
    let mut ctx = Ctx {
        id,
        g,
        facts: analyze(g),
        params,
        shown: BTreeMap::new(),
    };
    let n = g.order() as u64;
    let report = match *id {
        "kahn_max_ind" | "zhao_max_ind" => {
            let d = ctx.regular()?;
            if *id == "kahn_max_ind" {
                ctx.bipartite()?;
            }
            let lhs = Power::count(&independence_polynomial(g).total(), 2 * d as u64);
            let rhs = Power::new(small((1 << (d + 1)) - 1), n);
            ctx.report(lhs, rhs, Direction::Upper)
        }
        "gt_max_hom" => {
            let d = ctx.regular()?;
            ctx.bipartite()?;
            let h = ctx.target()?;
            kdd_max(ctx, d, &h.graph)
        }
        "threshold_max_hom" => {
            let d = ctx.regular()?;
            let h = ctx.target()?;
            if is_loop_threshold(&h.graph).is_none() {
                return Err(ctx.fail(format!("{} is not loop-threshold", h.name)));
            }
            kdd_max(ctx, d, &h.graph)
        }
        "bst_double_cover" => {
            let h = ctx.target()?;
            if !is_bipartite_swapping_target(&h.graph)?.is_target {
                return Err(ctx.fail(format!("{} is not a bipartite swapping target", h.name)));
            }
            let cover = g.tensor(&simple("K", &[2]))?;
            let lhs = Power::count(&hom_count(g, &h.graph), 2);
            let rhs = Power::count(&hom_count(&cover, &h.graph), 1);
            ctx.report(lhs, rhs, Direction::Upper)
        }
        "wr_max" => {
            let d = ctx.regular()?;
            ctx.shown.insert("H".into(), "H_WR".into());
            clique_max(ctx, d, &parse_named("H_WR")?)
        }
        "sernau_loop_power" => {
            let d = ctx.regular()?;
            let a = ctx.graph_param("A", &params.a)?;
            let b = ctx.graph_param("B", &params.b)?;
            let b = bipartite_simple(&ctx, &b)?;
            let h = looped_subgraph(&exponentiate(&a.graph, &b)?);
            clique_max(ctx, d, &h)
        }
        "bigraph_target_max" => {
            let d = ctx.regular()?;
            let a = ctx.graph_param("A", &params.a)?;
            let b = ctx.graph_param("B", &params.b)?;
            let a = Bigraph::from_bipartite(bipartite_simple(&ctx, &a)?)?;
            let b = Bigraph::from_bipartite(bipartite_simple(&ctx, &b)?)?;
            let h = bigraph_hom_target(&a, &b)?;
            clique_max(ctx, d, &h)
        }
        "extended_line_max" => {
            let d = ctx.regular()?;
            let h = ctx.target()?;
            let base = bipartite_simple(&ctx, &h)?;
            let ext = extended_line_graph(&base)?;
            clique_max(ctx, d, &ext)
        }
        "indep_poly_max" | "matching_poly_max" => {
            let d = ctx.regular()?;
            let lam = ctx.lambda()?;
            let kdd = simple("K", &[d, d]);
            let (pg, pk) = if *id == "indep_poly_max" {
                (independence_polynomial(g), independence_polynomial(&kdd))
            } else {
                (matching_polynomial(g), matching_polynomial(&kdd))
            };
            let lhs = Power::new(pg.eval(&lam), 2 * d as u64);
            let rhs = Power::new(pk.eval(&lam), n);
            ctx.report(lhs, rhs, Direction::Upper)
        }
        "occupancy_max" => {
            let d = ctx.regular()?;
            let lam = ctx.lambda()?;
            let one = Rational::one();
            let a = (one.clone() + &lam).pow_u(d as u64);
            let bound = lam.clone() * (one.clone() + &lam).pow_u(d as u64 - 1) / (a * small(2) - one);
            let lhs = Power::new(occupancy_fraction(g, &lam)?, 1);
            ctx.report(lhs, Power::new(bound, 1), Direction::Upper)
        }
        "ind_min" => {
            let d = ctx.regular()?;
            let lhs = Power::count(&independence_polynomial(g).total(), d as u64 + 1);
            let rhs = Power::new(small(d + 2), n);
            ctx.report(lhs, rhs, Direction::Lower)
        }
        "ind_min_by_size" => {
            let d = ctx.regular()?;
            let t = ctx.t()?;
            let p = independence_polynomial(g);
            let clique = CountPolynomial::new(PolyKind::Independence, vec![Count::one(), Count::from(d + 1)]);
            // when d+1 does not divide n, compare (d+1)G against n K_{d+1}
            let (lhs_poly, copies) = if g.order() % (d + 1) == 0 {
                (p, g.order() / (d + 1))
            } else {
                ctx.shown.insert("copies".into(), (d + 1).to_string());
                (p.pow(d + 1), g.order())
            };
            let lhs = Power::count(&lhs_poly.coeff(t), 1);
            let rhs = Power::count(&clique.pow(copies).coeff(t), 1);
            ctx.report(lhs, rhs, Direction::Lower)
        }
        "color_min" => {
            let d = ctx.regular()?;
            let q = ctx.q()?;
            let kq = standard_graph("K", &[q])?;
            let lhs = Power::count(&hom_count(g, &kq), d as u64 + 1);
            let rhs = Power::count(&hom_count(&simple("K", &[d + 1]), &kq), n);
            ctx.report(lhs, rhs, Direction::Lower)
        }
        "color_min_bip" => {
            let d = ctx.regular()?;
            ctx.bipartite()?;
            let q = ctx.q()?;
            let kq = standard_graph("K", &[q])?;
            // hom^{1/n} >= q (1-1/q)^{d/2}  <=>  hom^2 >= (q^2 ((q-1)/q)^d)^n
            let base = small(q * q) * (small(q - 1) / small(q)).pow_u(d as u64);
            let lhs = Power::count(&hom_count(g, &kq), 2);
            ctx.report(lhs, Power::new(base, n), Direction::Lower)
        }
        "biregular_max" => {
            let h = ctx.target()?;
            let (a, b) = biregular_degrees(&ctx)?;
            ctx.shown.insert("a".into(), a.to_string());
            ctx.shown.insert("b".into(), b.to_string());
            let lhs = Power::count(&hom_count(g, &h.graph), (a + b) as u64);
            let rhs = Power::count(&hom_count(&simple("K", &[b, a]), &h.graph), n);
            ctx.report(lhs, rhs, Direction::Upper)
        }
        "kruskal_katona" => {
            let t = ctx.t()?;
            let m = g.size();
            ctx.shown.insert("m".into(), m.to_string());
            let lnm = simple("L", &[g.order(), m]);
            let lhs = Power::count(&independence_polynomial(g).coeff(t), 1);
            let rhs = Power::count(&independence_polynomial(&lnm).coeff(t), 1);
            ctx.report(lhs, rhs, Direction::Upper)
        }
        "min_degree_max" => {
            let nn = g.order();
            if nn == 0 {
                return Err(ctx.fail("graph must have at least one vertex"));
            }
            let delta = params.delta.unwrap_or(g.min_degree());
            ctx.shown.insert("delta".into(), delta.to_string());
            if g.min_degree() < delta {
                return Err(ctx.fail(format!("minimum degree {} below {delta}", g.min_degree())));
            }
            if delta >= nn {
                return Err(ctx.fail("delta must be below n"));
            }
            match params.t {
                None => {
                    let k = nn - delta;
                    let (a, b) = (nn / k, nn % k);
                    let bound = Count::from(a) * ((Count::one() << k) - 1u32) + (Count::one() << b);
                    let lhs = Power::count(&independence_polynomial(g).total(), 1);
                    ctx.report(lhs, Power::count(&bound, 1), Direction::Upper)
                }
                Some(t) => {
                    ctx.shown.insert("t".into(), t.to_string());
                    if 2 * delta > nn || t < 3 {
                        return Err(ctx.fail("size version needs delta <= n/2 and t >= 3"));
                    }
                    let bound = binomial(delta, t) + binomial(nn - delta, t);
                    let lhs = Power::count(&independence_polynomial(g).coeff(t), 1);
                    ctx.report(lhs, Power::count(&bound, 1), Direction::Upper)
                }
            }
        }
        "pm_max" => {
            let d = ctx.regular()?;
            let fact: Count = (1..=d).map(Count::from).product();
            let lhs = Power::count(&pm(g), 2 * d as u64);
            ctx.report(lhs, Power::count(&fact, n), Direction::Upper)
        }
        "pm_min_bip" => {
            let d = ctx.regular()?;
            ctx.bipartite()?;
            // pm^{2/v} >= (d-1)^{d-1} / d^{d-2}
            let top = small(d - 1).pow_u(d as u64 - 1);
            let base = if d >= 2 {
                top / small(d).pow_u(d as u64 - 2)
            } else {
                top * small(d)
            };
            let lhs = Power::count(&pm(g), 1);
            ctx.report(lhs, Power::new(base, n / 2), Direction::Lower)
        }
        _ => unreachable!("id comes from BOUND_IDS"),
    };
    Ok(report)
}

/// Side degrees `(a, b)`, `a <= b`, of a biregular bipartite graph.
fn biregular_degrees(ctx: &Ctx) -> Result<(usize, usize)> {
    let g = ctx.g;
    if !ctx.facts.is_bipartite() {
        return Err(ctx.fail("graph must be bipartite"));
    }
    if g.order() == 0 || g.min_degree() == 0 {
        return Err(ctx.fail("graph must have no isolated vertices"));
    }
    let degrees = g.degrees();
    let (lo, hi) = (g.min_degree(), g.max_degree());
    if lo == hi {
        return Ok((lo, hi));
    }
    // with distinct degrees the sides are determined by degree
    let ok = degrees.iter().all(|&x| x == lo || x == hi) && g.edges().iter().all(|&(u, v)| degrees[u] != degrees[v]);
    if ok {
        Ok((lo, hi))
    } else {
        Err(ctx.fail("graph must be biregular"))
    }
}

/// Check one bound on many graphs in parallel; output order follows input.
pub fn check_bounds(graphs: &[Graph], bound_id: &str, params: &BoundParams) -> Result<Vec<BoundReport>> {
    graphs.par_iter().map(|g| check_bound(g, bound_id, params)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::Verdict;
    use crate::scalar::ratio;

    fn g(s: &str) -> Graph {
        parse_named(s).unwrap().to_simple().unwrap()
    }

    fn with_target(h: &str) -> BoundParams {
        BoundParams {
            target: Some(Target::named(h).unwrap()),
            ..Default::default()
        }
    }

    #[test]
    fn documented_examples() {
        let r = check_bound(&g("K:3,3"), "pm_max", &BoundParams::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Tight);
        assert_eq!(r.lhs, Power::count(&Count::from(6u32), 6));
        let r = check_bound(&g("C:4"), "ind_min", &BoundParams::default()).unwrap();
        assert_eq!(
            (r.verdict, r.lhs.value(), r.rhs.value()),
            (Verdict::Holds, ratio(343, 1), ratio(256, 1))
        );
        let r = check_bound(&g("petersen"), "zhao_max_ind", &BoundParams::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.lhs, Power::count(&Count::from(76u32), 6));
        let p = BoundParams {
            delta: Some(2),
            ..Default::default()
        };
        let r = check_bound(&g("C:5"), "min_degree_max", &p).unwrap();
        assert_eq!((r.verdict, r.rhs.value()), (Verdict::Tight, ratio(11, 1)));
    }

    #[test]
    fn hypotheses_are_strict() {
        let none = BoundParams::default();
        assert!(matches!(
            check_bound(&g("petersen"), "kahn_max_ind", &none),
            Err(Error::Hypothesis { .. })
        ));
        assert!(matches!(
            check_bound(&g("P:4"), "zhao_max_ind", &none),
            Err(Error::Hypothesis { .. })
        ));
        assert!(matches!(
            check_bound(&g("C:4"), "nope", &none),
            Err(Error::UnknownBound(_))
        ));
        assert!(matches!(
            check_bound(&g("C:4"), "threshold_max_hom", &with_target("C:4")),
            Err(Error::Hypothesis { .. })
        ));
        assert!(matches!(
            check_bound(&g("C:5"), "bst_double_cover", &with_target("K:3")),
            Err(Error::Hypothesis { .. })
        ));
        assert!(matches!(
            check_bound(&g("C:4"), "color_min", &none),
            Err(Error::BadParameter(_))
        ));
        assert!(check_bound(
            &g("C:5"),
            "color_min_bip",
            &BoundParams {
                q: Some(3),
                ..none.clone()
            }
        )
        .is_err());
        assert!(check_bound(&g("K:4"), "extended_line_max", &with_target("C:5")).is_err());
    }

    #[test]
    fn extremal_graphs_are_tight() {
        let none = BoundParams::default();
        for d in 1..=4 {
            let kdd = g(&format!("K:{d},{d}"));
            let kd1 = g(&format!("K:{}", d + 1));
            assert_eq!(
                check_bound(&kdd, "kahn_max_ind", &none).unwrap().verdict,
                Verdict::Tight
            );
            assert_eq!(check_bound(&kd1, "ind_min", &none).unwrap().verdict, Verdict::Tight);
            assert_eq!(check_bound(&kdd, "pm_max", &none).unwrap().verdict, Verdict::Tight);
            assert_eq!(check_bound(&kd1, "wr_max", &none).unwrap().verdict, Verdict::Tight);
            for h in ["H_ind", "H_WR", "K:3"] {
                let r = check_bound(&kdd, "gt_max_hom", &with_target(h)).unwrap();
                assert_eq!(r.verdict, Verdict::Tight, "{h}");
            }
            let lam = BoundParams {
                lambda: Some(ratio(1, 2)),
                ..Default::default()
            };
            assert_eq!(
                check_bound(&kdd, "occupancy_max", &lam).unwrap().verdict,
                Verdict::Tight
            );
            assert_eq!(
                check_bound(&kdd, "indep_poly_max", &lam).unwrap().verdict,
                Verdict::Tight
            );
            assert_eq!(
                check_bound(&kdd, "matching_poly_max", &lam).unwrap().verdict,
                Verdict::Tight
            );
        }
    }

    #[test]
    fn loop_power_and_line_graph_bounds() {
        let p = BoundParams {
            a: Some(Target::named("H_ind").unwrap()),
            b: Some(Target::named("K:2").unwrap()),
            ..Default::default()
        };
        for s in ["K:4", "petersen", "K:3,3", "C:5"] {
            for id in ["sernau_loop_power", "bigraph_target_max"] {
                let p = if id == "bigraph_target_max" {
                    BoundParams {
                        a: Some(Target::named("C:6").unwrap()),
                        b: Some(Target::named("K:2").unwrap()),
                        ..Default::default()
                    }
                } else {
                    p.clone()
                };
                let r = check_bound(&g(s), id, &p).unwrap();
                assert_ne!(r.verdict, Verdict::Violated, "{id} {s}");
            }
            let r = check_bound(&g(s), "extended_line_max", &with_target("P:4")).unwrap();
            assert_ne!(r.verdict, Verdict::Violated);
        }
        let r = check_bound(&g("K:4"), "sernau_loop_power", &p).unwrap();
        assert_eq!(r.verdict, Verdict::Tight);
    }

    #[test]
    fn size_and_degree_bounds() {
        let r = check_bound(
            &g("C:6"),
            "ind_min_by_size",
            &BoundParams {
                t: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        // i_2(C_6) = 15 - 6 = i_2(2K_3) = 3 * 3
        assert_eq!(r.verdict, Verdict::Tight);
        assert_eq!(r.rhs.value(), ratio(9, 1));
        let r = check_bound(
            &g("C:6"),
            "ind_min_by_size",
            &BoundParams {
                t: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(
            (r.verdict, r.lhs.value(), r.rhs.value()),
            (Verdict::Holds, ratio(2, 1), ratio(0, 1))
        );
        let r = check_bound(
            &g("C:5"),
            "ind_min_by_size",
            &BoundParams {
                t: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(r.params.contains_key("copies"));
        let kk = check_bound(
            &g("C:5"),
            "kruskal_katona",
            &BoundParams {
                t: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(kk.verdict, Verdict::Holds);
        let r = check_bound(&g("K:2,4"), "biregular_max", &with_target("H_ind")).unwrap();
        assert_eq!(r.verdict, Verdict::Tight);
        let r = check_bound(
            &g("K:3,3"),
            "color_min_bip",
            &BoundParams {
                q: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let r = check_bound(&g("K:3,3"), "pm_min_bip", &BoundParams::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let r = check_bound(
            &g("K:3,4"),
            "min_degree_max",
            &BoundParams {
                delta: Some(3),
                t: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Tight);
        let r = check_bound(&g("K:3,3"), "bst_double_cover", &with_target("H_ind")).unwrap();
        assert_eq!(r.verdict, Verdict::Tight);
    }

    #[test]
    fn reports_round_trip_and_recompute() {
        let r = check_bound(
            &g("petersen"),
            "occupancy_max",
            &BoundParams {
                lambda: Some(ratio(1, 2)),
                ..Default::default()
            },
        )
        .unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: BoundReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.recomputed_verdict(), r.verdict);
        assert_eq!(r.csv_record().len(), BoundReport::CSV_HEADER.len());
    }
}
