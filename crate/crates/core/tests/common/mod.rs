//! Brute-force oracles and random instances shared by the integration suites.
#![allow(dead_code)]

use homext::counting::{hom_count, hom_count_from};
use homext::extremal::common_neighborhood_table;
use homext::graph::{add_loops, exponentiate, looped_subgraph, tensor_product};
use homext::{Adjacency, Count, Graph, LoopGraph, Rational};
use rand::rngs::StdRng;
use rand::Rng;

/// hom(G, H) by trying every map V(G) -> V(H).
pub fn brute_hom<A: Adjacency>(g: &A, h: &LoopGraph) -> u64 {
    let (n, k) = (g.order(), h.order());
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let mut f = vec![0usize; n];
    let mut total = 0;
    loop {
        let ok = (0..n).all(|u| (u..n).all(|v| !g.adjacent(u, v) || h.adjacent(f[u], f[v])));
        total += ok as u64;
        let mut i = 0;
        while i < n {
            f[i] += 1;
            if f[i] < k {
                break;
            }
            f[i] = 0;
            i += 1;
        }
        if i == n {
            return total;
        }
    }
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_loop_graph(rng: &mut StdRng, n: usize, p: f64) -> LoopGraph {
    let mut h = LoopGraph::empty(n);
    for u in 0..n {
        for v in u..n {
            if rng.gen_bool(p) {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// Every independent set of `g` as a bitmask.
pub fn independent_sets(g: &Graph) -> Vec<u64> {
    (0u64..1 << g.order()).filter(|&s| g.is_independent(s)).collect()
}

/// Bipartiteness by BFS 2-coloring.
pub fn is_bipartite(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut color = vec![u8::MAX; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = vec![s];
        while let Some(u) = queue.pop() {
            for &v in &adj[u] {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push(v);
                } else if color[v] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn component_count(g: &Graph) -> usize {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

// ---- the four identities; each returns a description of a mismatch ----

pub fn check_h_prod(rng: &mut StdRng) -> Result<(), String> {
    let n_g = rng.gen_range(1..=6);
    let g = random_graph(rng, n_g, 0.5);
    let n_h1 = rng.gen_range(1..=4);
    let h1 = random_loop_graph(rng, n_h1, 0.5);
    let n_h2 = rng.gen_range(1..=4);
    let h2 = random_loop_graph(rng, n_h2, 0.5);
    let prod = tensor_product(&h1, &h2).map_err(|e| e.to_string())?;
    let lhs = hom_count(&g, &prod);
    let rhs = hom_count(&g, &h1) * hom_count(&g, &h2);
    if lhs != rhs || lhs != Count::from(brute_hom(&g, &prod)) {
        return Err(format!("H-prod: {lhs} vs {rhs} on G={:?}", g.edges()));
    }
    Ok(())
}

pub fn check_h_power(rng: &mut StdRng) -> Result<(), String> {
    let n_g = rng.gen_range(1..=5);
    let g = random_graph(rng, n_g, 0.5);
    let n_g2 = rng.gen_range(1..=3);
    let g2 = random_graph(rng, n_g2, 0.6);
    let n_h = rng.gen_range(1..=3);
    let h = random_loop_graph(rng, n_h, 0.5);
    let power = exponentiate(&h, &g2).map_err(|e| e.to_string())?;
    let prod = tensor_product(&g.to_loop_graph(), &g2.to_loop_graph()).map_err(|e| e.to_string())?;
    let lhs = hom_count_from(&prod, &h);
    let rhs = hom_count(&g, &power);
    if lhs != rhs || rhs != Count::from(brute_hom(&g, &power)) {
        return Err(format!("H-power: {lhs} vs {rhs}"));
    }
    Ok(())
}

pub fn check_g_loop(rng: &mut StdRng) -> Result<(), String> {
    let n_g = rng.gen_range(1..=6);
    let g = random_graph(rng, n_g, 0.5);
    let n_h = rng.gen_range(1..=5);
    let h = random_loop_graph(rng, n_h, 0.5);
    let lhs = hom_count_from(&add_loops(&g), &h);
    let rhs = hom_count(&g, &looped_subgraph(&h));
    if lhs != rhs || lhs != Count::from(brute_hom(&add_loops(&g), &h)) {
        return Err(format!("G-loop: {lhs} vs {rhs}"));
    }
    Ok(())
}

pub fn check_norm_identity(rng: &mut StdRng) -> Result<(), String> {
    let d = rng.gen_range(1..=3);
    let n_h = rng.gen_range(1..=5);
    let h = random_loop_graph(rng, n_h, 0.5);
    let f = common_neighborhood_table(&h, d).map_err(|e| e.to_string())?;
    let norm: Rational = f.iter().map(|x| num_traits::pow(x.clone(), d)).sum();
    let mut kdd = Graph::empty(2 * d);
    for u in 0..d {
        for v in d..2 * d {
            kdd.add_edge(u, v);
        }
    }
    let hom = Count::from(brute_hom(&kdd, &h));
    if norm != Rational::from_integer(hom.clone().into()) {
        return Err(format!("norm identity: {norm} vs {hom} at d={d}"));
    }
    Ok(())
}
