//! Ranking `hom(G,H)^{1/v(G)}` over a regular family, optionally with the
//! target replaced by `k` disjoint copies of `H`.

use super::{extremes, graph_id, Normalized, ScanReport};
use crate::counting::hom_count;
use crate::enumerate::{family_graphs, EnumCaps, FamilySpec};
use crate::error::{Error, Result};
use crate::extremal::Target;
use crate::graph::{canonical_form, standard_graph, Graph};
use crate::{Count, Rational, Scalar};
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// One graph at one `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    pub graph: String,
    pub graph6: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    /// `hom(G, kH)` as a decimal string.
    pub count: String,
    /// Exact order of the normalized value against `K_{d,d}` and `K_{d+1}`.
    pub vs_kdd: String,
    pub vs_kd1: String,
}

fn word(o: Ordering) -> String {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
    .to_string()
}

struct Entry {
    graph: Graph,
    reference: Option<String>,
    /// `hom(G,H)` and the number of components of `G`.
    base: Count,
    components: u32,
}

impl Entry {
    /// `hom(G, kH) = Π_components k·hom(C, H) = k^c hom(G, H)`.
    fn count(&self, k: Option<u64>) -> Count {
        match k {
            Some(k) => num_traits::pow(Count::from(k), self.components as usize) * &self.base,
            None => self.base.clone(),
        }
    }
}

pub fn maximizer_profile(d: usize, family: &FamilySpec, h: &Target, k_grid: Option<&[u64]>) -> Result<ScanReport> {
    let graphs = family_graphs(family, &EnumCaps::default())?;
    maximizer_profile_on(d, family, &graphs, h, k_grid)
}

pub fn maximizer_profile_on(
    d: usize,
    family: &FamilySpec,
    graphs: &[Graph],
    h: &Target,
    k_grid: Option<&[u64]>,
) -> Result<ScanReport> {
    if family.d != Some(d) || d == 0 {
        return Err(Error::InfeasibleFamily(format!(
            "profile needs a {d}-regular family with d >= 1"
        )));
    }
    if k_grid.is_some_and(|ks| ks.is_empty() || ks.contains(&0)) {
        return Err(Error::BadParameter("k grid must be nonempty and positive".into()));
    }
    let simple = |name: &str, p: &[usize]| standard_graph(name, p).map(|x| x.to_simple().expect("loopless"));
    let kdd_name = format!("K_{{{d},{d}}}");
    let kd1_name = format!("K_{{{}}}", d + 1);
    let refs = [
        (kdd_name.clone(), simple("K", &[d, d])?),
        (kd1_name.clone(), simple("K", &[d + 1])?),
    ];

    let entry = |g: &Graph, reference: Option<String>| {
        let comps = g.components();
        let base = comps
            .iter()
            .map(|&c| hom_count(&g.induced(c), &h.graph))
            .fold(Count::one(), |a, b| a * b);
        Entry {
            graph: g.clone(),
            reference,
            base,
            components: comps.len() as u32,
        }
    };
    let mut entries: Vec<Entry> = graphs.par_iter().map(|g| entry(g, None)).collect();
    for (name, g) in &refs {
        let form = canonical_form(g);
        match entries.iter_mut().find(|e| canonical_form(&e.graph) == form) {
            Some(e) => e.reference = Some(name.clone()),
            None => entries.push(entry(g, Some(name.clone()))),
        }
    }

    let mut shown = BTreeMap::new();
    shown.insert("d".to_string(), d.to_string());
    shown.insert("H".to_string(), h.name.clone());
    let ks: Vec<Option<u64>> = match k_grid {
        Some(ks) => {
            shown.insert("k".into(), ks.iter().map(u64::to_string).collect::<Vec<_>>().join(","));
            ks.iter().map(|&k| Some(k)).collect()
        }
        None => vec![None],
    };
    let mut report = ScanReport {
        conjecture_id: "maximizer_profile".into(),
        family: family.clone(),
        params: shown,
        graphs_checked: graphs.len(),
        graphs_skipped: 0,
        comparisons: 0,
        violations: Vec::new(),
        witnesses: Vec::new(),
        table: Vec::new(),
        notes: Vec::new(),
    };
    let is_ref = |e: &Entry, name: &str| e.reference.as_deref() == Some(name);
    for k in ks {
        let values: Vec<Normalized> = entries
            .iter()
            .map(|e| Normalized::new(Rational::from_count(&e.count(k)), e.graph.order() as u64))
            .collect();
        let find = |name: &str| entries.iter().position(|e| is_ref(e, name)).expect("reference present");
        let (ikdd, ikd1) = (find(&kdd_name), find(&kd1_name));
        for (e, v) in entries.iter().zip(&values) {
            let (graph, graph6) = graph_id(&e.graph);
            report.table.push(ProfileRow {
                k,
                graph,
                graph6,
                n: e.graph.order(),
                reference: e.reference.clone(),
                count: e.count(k).to_string(),
                vs_kdd: word(v.cmp_exact(&values[ikdd])),
                vs_kd1: word(v.cmp_exact(&values[ikd1])),
            });
        }
        let suffix = k.map_or(String::new(), |k| format!(" k={k}"));
        let ranked: Vec<(&Graph, Normalized)> = entries.iter().map(|e| &e.graph).zip(values.iter().cloned()).collect();
        let mut found = extremes(&ranked, &suffix);
        for w in &mut found {
            w.reference = entries
                .iter()
                .find(|e| canonical_form(&e.graph).to_hex() == w.graph)
                .and_then(|e| e.reference.clone());
            if w.role.starts_with("max") && w.reference.is_none() {
                report.notes.push(format!(
                    "{}: argmax on {} vertices is neither {kdd_name} nor {kd1_name}",
                    if suffix.is_empty() {
                        "profile".to_string()
                    } else {
                        suffix.trim().to_string()
                    },
                    w.n
                ));
            }
        }
        report.witnesses.extend(found);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(spec: &str, d: usize, h: &str, ks: Option<&[u64]>) -> ScanReport {
        maximizer_profile(d, &spec.parse().unwrap(), &Target::named(h).unwrap(), ks).unwrap()
    }

    fn argmax(r: &ScanReport, role: &str) -> Option<String> {
        r.witnesses.iter().find(|w| w.role == role).unwrap().reference.clone()
    }

    #[test]
    fn classical_maximizers() {
        let r = profile("d=3,nmax=10", 3, "H_ind", None);
        assert_eq!(argmax(&r, "max").as_deref(), Some("K_{3,3}"));
        let r = profile("d=3,nmax=10", 3, "two_loops", None);
        assert_eq!(argmax(&r, "max").as_deref(), Some("K_{4}"));
    }

    #[test]
    fn disjoint_cliques_beat_both_references() {
        let r = profile("d=4,nmax=7", 4, "K:4", Some(&[1, 1000]));
        assert_eq!(argmax(&r, "max k=1000"), None);
        let w = r.witnesses.iter().find(|w| w.role == "max k=1000").unwrap();
        let octahedron = canonical_form(&standard_graph("K", &[2, 2, 2]).unwrap()).to_hex();
        assert_eq!(w.graph, octahedron);
        assert!(!r.notes.is_empty());
        // K_{4,4} sits outside the family and is added as a reference row
        assert!(r
            .table
            .iter()
            .any(|row| row.reference.as_deref() == Some("K_{4,4}") && row.n == 8));
    }

    #[test]
    fn component_product_matches_direct_count() {
        let r = profile("d=2,nmax=9", 2, "K:2", Some(&[3]));
        let k3 = standard_graph("K", &[2]).unwrap().copies(3).unwrap();
        for row in &r.table {
            let g = crate::graph::io::from_graph6(&row.graph6).unwrap();
            assert_eq!(row.count, hom_count(&g, &k3).to_string());
        }
    }
}
