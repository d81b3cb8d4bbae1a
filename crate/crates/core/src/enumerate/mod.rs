//! Isomorph-free generation of small graph families.
//!
//! Regular families grow by saturating one vertex at a time: take the
//! unsaturated vertex of largest degree and join it to every admissible
//! combination of unsaturated non-neighbors. Unrestricted families grow one
//! edge at a time. Either way every intermediate graph is reduced to its
//! canonical form and duplicates are dropped, and constraints that survive
//! edge deletion (girth, bipartiteness) prune partial graphs early.

mod spec;

pub use spec::{EnumCaps, FamilySpec};

use crate::error::{Error, Result};
use crate::graph::io::{read_graph6_lines, to_graph6};
use crate::graph::{canonical_form, members, two_coloring, CanonicalForm, Graph, VertexSet};
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use std::collections::HashSet;
use std::path::{Path, PathBuf};

/// Every graph of the family, one per isomorphism class, as canonical
/// representatives ordered by canonical form (hence by order first).
pub fn family_graphs(spec: &FamilySpec, caps: &EnumCaps) -> Result<Vec<Graph>> {
    spec.validate()?;
    caps.check(spec)?;
    let mut out = Vec::new();
    for n in spec.orders() {
        let forms = match spec.d {
            Some(d) => regular_of_order(n, d, spec),
            None => all_of_order(n, spec),
        };
        out.extend(forms);
    }
    out.sort();
    Ok(out.into_iter().map(|f| representative(&f)).collect())
}

/// Regular family under the default caps.
pub fn regular_graphs(spec: &FamilySpec) -> Result<Vec<Graph>> {
    if spec.d.is_none() {
        return Err(Error::InfeasibleFamily("regular_graphs needs a degree".into()));
    }
    family_graphs(spec, &EnumCaps::default())
}

/// All graphs on `n` vertices, capped at 8 by default.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    all_graphs_capped(n, EnumCaps::default().all_graphs)
}

pub fn all_graphs_capped(n: usize, cap: usize) -> Result<Vec<Graph>> {
    let caps = EnumCaps {
        all_graphs: cap,
        ..EnumCaps::default()
    };
    family_graphs(&FamilySpec::all(n, n), &caps)
}

fn representative(f: &CanonicalForm) -> Graph {
    f.to_graph().to_simple().expect("generated graphs are loopless")
}

/// Cache file name for a spec: hash of its canonical text form.
pub fn spec_key(spec: &FamilySpec) -> String {
    let digest = Sha256::digest(spec.to_string().as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

pub fn cache_path(spec: &FamilySpec, dir: &Path) -> PathBuf {
    dir.join(format!("{}.g6", spec_key(spec)))
}

/// `family_graphs`, reading from and writing to a graph6 cache in `dir`.
pub fn cached_family(spec: &FamilySpec, caps: &EnumCaps, dir: &Path) -> Result<Vec<Graph>> {
    spec.validate()?;
    caps.check(spec)?;
    let path = cache_path(spec, dir);
    if path.exists() {
        return read_graph6_lines(&std::fs::read_to_string(&path)?);
    }
    let graphs = family_graphs(spec, caps)?;
    std::fs::create_dir_all(dir)?;
    // write then rename so a killed run never leaves a truncated cache
    let tmp = path.with_extension("g6.tmp");
    std::fs::write(&tmp, graphs_to_graph6(&graphs))?;
    std::fs::rename(&tmp, &path)?;
    Ok(graphs)
}

pub fn graphs_to_graph6(graphs: &[Graph]) -> String {
    graphs.iter().map(|g| to_graph6(g) + "\n").collect()
}

/// Shortest path length from `a` to `b`, looking no further than `limit`.
fn distance_within(g: &Graph, a: usize, b: usize, limit: usize) -> Option<usize> {
    let mut seen: VertexSet = 1 << a;
    let mut layer: VertexSet = 1 << a;
    for step in 1..=limit {
        let mut next = 0;
        for u in members(layer) {
            next |= g.neighbors(u);
        }
        next &= !seen;
        if next >> b & 1 == 1 {
            return Some(step);
        }
        if next == 0 {
            return None;
        }
        seen |= next;
        layer = next;
    }
    None
}

/// Add `u`-`v` unless it would close a cycle shorter than `girth`.
fn add_respecting_girth(g: &mut Graph, u: usize, v: usize, girth: usize) -> bool {
    if girth > 3 && distance_within(g, u, v, girth - 2).is_some() {
        return false;
    }
    g.add_edge(u, v);
    true
}

fn regular_of_order(n: usize, d: usize, spec: &FamilySpec) -> Vec<CanonicalForm> {
    let m = n * d / 2;
    let girth = spec.girth_floor();
    let full = crate::graph::full_set(n);
    let mut buckets: Vec<Vec<Graph>> = vec![Vec::new(); m + 1];
    buckets[0].push(Graph::empty(n));
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    for e in 0..m {
        let level = std::mem::take(&mut buckets[e]);
        let children: Vec<Vec<CanonicalForm>> = level
            .par_iter()
            .map(|g| {
                let open: VertexSet = (0..n).filter(|&v| g.degree(v) < d).fold(0, |s, v| s | 1 << v);
                let v = members(open)
                    .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
                    .unwrap();
                let need = d - g.degree(v);
                let cands: Vec<usize> = members(open & !g.neighbors(v) & !(1 << v)).collect();
                let mut out = Vec::new();
                for pick in combinations(cands.len(), need) {
                    let mut h = g.clone();
                    if !pick.iter().all(|&i| add_respecting_girth(&mut h, v, cands[i], girth)) {
                        continue;
                    }
                    if viable_regular(&h, d, spec, full) {
                        out.push(canonical_form(&h));
                    }
                }
                out
            })
            .collect();
        for form in children.into_iter().flatten() {
            if !seen.contains(&form) {
                let g = representative(&form);
                buckets[g.size()].push(g);
                seen.insert(form);
            }
        }
    }
    buckets[m]
        .iter()
        .filter(|g| spec.admits(g))
        .map(canonical_form)
        .collect()
}

/// Can this partial graph still grow into a member of the family?
fn viable_regular(h: &Graph, d: usize, spec: &FamilySpec, full: VertexSet) -> bool {
    let n = h.order();
    let open: VertexSet = (0..n).filter(|&v| h.degree(v) < d).fold(0, |s, v| s | 1 << v);
    for u in members(open) {
        let room = (open & !h.neighbors(u) & !(1 << u)).count_ones() as usize;
        if d - h.degree(u) > room {
            return false;
        }
    }
    if spec.bipartite && two_coloring(h).is_err() {
        return false;
    }
    if spec.connected {
        // a saturated component can never join the rest
        for comp in h.components() {
            if comp & open == 0 && comp != full {
                return false;
            }
        }
    }
    true
}

fn all_of_order(n: usize, spec: &FamilySpec) -> Vec<CanonicalForm> {
    let girth = spec.girth_floor();
    let mut level = vec![Graph::empty(n)];
    let mut found: Vec<CanonicalForm> = vec![canonical_form(&level[0])];
    while !level.is_empty() {
        let children: Vec<Vec<CanonicalForm>> = level
            .par_iter()
            .map(|g| {
                let mut out = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if g.has_edge(u, v) {
                            continue;
                        }
                        let mut h = g.clone();
                        if !add_respecting_girth(&mut h, u, v, girth) {
                            continue;
                        }
                        if spec.bipartite && two_coloring(&h).is_err() {
                            continue;
                        }
                        out.push(canonical_form(&h));
                    }
                }
                out
            })
            .collect();
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut next = Vec::new();
        for form in children.into_iter().flatten() {
            if seen.insert(form.clone()) {
                next.push(representative(&form));
                found.push(form);
            }
        }
        level = next;
    }
    found.into_iter().filter(|f| spec.admits(&representative(f))).collect()
}

/// All `k`-subsets of `0..n` as sorted index lists, in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_named;

    fn count(spec: &str) -> usize {
        family_graphs(&spec.parse().unwrap(), &EnumCaps::default())
            .unwrap()
            .len()
    }

    /// Oracle: all labeled graphs on `n` vertices, filtered, then iso-classed.
    fn brute(n: usize, keep: impl Fn(&Graph) -> bool) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut forms = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = members(mask).map(|i| pairs[i]).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if keep(&g) {
                forms.insert(canonical_form(&g));
            }
        }
        forms.len()
    }

    #[test]
    fn cycles_are_the_connected_two_regular_graphs() {
        for n in 3..=12 {
            let gs = family_graphs(&FamilySpec::regular(2, n, n).connected(), &EnumCaps::default()).unwrap();
            assert_eq!(gs.len(), 1);
            assert_eq!(
                canonical_form(&gs[0]),
                canonical_form(&parse_named(&format!("C:{n}")).unwrap())
            );
        }
    }

    #[test]
    fn cubic_counts() {
        let per_n = |flags: &str| -> Vec<usize> {
            (4..=12)
                .step_by(2)
                .map(|n| count(&format!("d=3,n={n}{flags}")))
                .collect()
        };
        assert_eq!(per_n(",connected"), vec![1, 2, 5, 19, 85]);
        assert_eq!(per_n(""), vec![1, 2, 6, 21, 94]);
        assert_eq!(per_n(",connected,triangle_free"), vec![0, 1, 2, 6, 22]);
        assert_eq!(per_n(",connected,bipartite"), vec![0, 1, 1, 2, 5]);
        assert_eq!(per_n(",connected,girth=5"), vec![0, 0, 0, 1, 2]);
    }

    #[test]
    fn quartic_counts() {
        let got: Vec<usize> = (5..=9).map(|n| count(&format!("d=4,n={n},connected"))).collect();
        assert_eq!(got, vec![1, 1, 2, 6, 16]);
    }

    #[test]
    fn petersen_is_the_girth_five_cubic_graph_on_ten() {
        let gs = family_graphs(
            &"d=3,n=10,connected,triangle_free".parse().unwrap(),
            &EnumCaps::default(),
        )
        .unwrap();
        let p = canonical_form(&parse_named("petersen").unwrap());
        assert!(gs.iter().any(|g| canonical_form(g) == p));
    }

    #[test]
    fn all_graph_counts() {
        let got: Vec<usize> = (0..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(got, vec![1, 1, 2, 4, 11, 34, 156]);
        assert!(matches!(all_graphs(9), Err(Error::CapExceeded { .. })));
        assert_eq!(all_graphs(0).unwrap(), vec![Graph::empty(0)]);
    }

    #[test]
    fn regular_counts_match_brute_force() {
        for n in 4..=7 {
            for d in 1..=4 {
                if d >= n || (d * n) % 2 == 1 {
                    continue;
                }
                for connected in [false, true] {
                    let mut spec = FamilySpec::regular(d, n, n);
                    spec.connected = connected;
                    let got = family_graphs(&spec, &EnumCaps::default()).unwrap().len();
                    let want = brute(n, |g| {
                        g.degrees().iter().all(|&x| x == d) && (!connected || g.is_connected())
                    });
                    assert_eq!(got, want, "d={d} n={n} connected={connected}");
                }
            }
        }
    }

    #[test]
    fn filtered_all_graphs_match_brute_force() {
        let spec = FamilySpec::all(6, 6).connected().triangle_free();
        let got = family_graphs(&spec, &EnumCaps::default()).unwrap();
        assert_eq!(got.len(), brute(6, |g| spec.admits(g)));
        assert!(got.iter().all(|g| spec.admits(g)));
    }

    #[test]
    fn output_is_canonical_sorted_and_repeatable() {
        let spec: FamilySpec = "d=3,nmax=10".parse().unwrap();
        let a = family_graphs(&spec, &EnumCaps::default()).unwrap();
        let b = family_graphs(&spec, &EnumCaps::default()).unwrap();
        assert_eq!(a, b);
        let forms: Vec<_> = a.iter().map(canonical_form).collect();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
        for (g, f) in a.iter().zip(&forms) {
            assert_eq!(canonical_form(&f.to_graph()), *f);
            assert_eq!(g.to_loop_graph(), f.to_graph());
            assert!(spec.admits(g));
        }
    }

    #[test]
    fn caps_and_infeasible() {
        assert!(matches!(
            regular_graphs(&FamilySpec::regular(3, 4, 16)),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            regular_graphs(&FamilySpec::regular(3, 5, 5)),
            Err(Error::InfeasibleFamily(_))
        ));
        assert!(matches!(
            regular_graphs(&FamilySpec::regular(4, 3, 4)),
            Err(Error::InfeasibleFamily(_))
        ));
        let big = EnumCaps {
            cubic: 16,
            ..EnumCaps::default()
        };
        assert!(big.check(&FamilySpec::regular(3, 4, 16)).is_ok());
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("homext-cache-test-{}", std::process::id()));
        let spec: FamilySpec = "d=3,nmax=8,connected".parse().unwrap();
        let first = cached_family(&spec, &EnumCaps::default(), &dir).unwrap();
        assert!(cache_path(&spec, &dir).exists());
        let second = cached_family(&spec, &EnumCaps::default(), &dir).unwrap();
        assert_eq!(first, second);
        assert_ne!(spec_key(&spec), spec_key(&FamilySpec::regular(3, 4, 8)));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
