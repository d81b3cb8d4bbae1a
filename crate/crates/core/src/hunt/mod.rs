//! Conjecture scans over enumerated families and maximizer profiles.
//!
//! Every scan reduces a graph to a list of exact comparisons; a comparison
//! that comes out the wrong way is a violation and carries its own
//! certificate. Graphs are processed in parallel but results are gathered in
//! input order, so reports do not depend on the number of workers.

mod conjectures;
mod profile;

pub use conjectures::{scan_conjecture, scan_conjecture_on, ScanParams, CONJECTURE_IDS};
pub use profile::{maximizer_profile, maximizer_profile_on, ProfileRow};

use crate::enumerate::FamilySpec;
use crate::error::Result;
use crate::extremal::{Direction, Power, Verdict};
use crate::graph::{canonical_form, io::to_graph6, Graph};
use crate::scalar::rational_string;
use crate::{Rational, Scalar};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// One claimed inequality on one graph, e.g. `lhs <= rhs` at `t = 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    /// Which instance of the conjecture (`t=3`, `x=1/2`, ...); empty if only one.
    pub detail: String,
    pub lhs: Power,
    pub rhs: Power,
    pub direction: Direction,
}

impl Comparison {
    pub fn upper(detail: impl Into<String>, lhs: Power, rhs: Power) -> Self {
        Comparison {
            detail: detail.into(),
            lhs,
            rhs,
            direction: Direction::Upper,
        }
    }

    pub fn lower(detail: impl Into<String>, lhs: Power, rhs: Power) -> Self {
        Comparison {
            direction: Direction::Lower,
            ..Comparison::upper(detail, lhs, rhs)
        }
    }

    pub fn verdict(&self) -> Verdict {
        Verdict::decide(&self.lhs, &self.rhs, self.direction)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Hex canonical form.
    pub graph: String,
    pub graph6: String,
    pub comparison: Comparison,
}

/// `base^{1/root}`, ordered exactly by cross powers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalized {
    #[serde(with = "rational_string")]
    pub base: Rational,
    pub root: u64,
}

impl Normalized {
    pub fn new(base: Rational, root: u64) -> Self {
        assert!(root >= 1, "normalizing root must be positive");
        Normalized { base, root }
    }

    pub fn cmp_exact(&self, other: &Normalized) -> Ordering {
        self.base.pow_u(other.root).cmp(&other.base.pow_u(self.root))
    }

    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.base.to_f64().unwrap_or(f64::INFINITY).powf(1.0 / self.root as f64)
    }
}

/// An extremal graph of the scanned family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// `max`, `min`, possibly suffixed with the instance (`max k=3`).
    pub role: String,
    pub graph: String,
    pub graph6: String,
    pub n: usize,
    pub value: Normalized,
    /// Name of a reference graph (`K_{d,d}`, ...) when the witness is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub conjecture_id: String,
    pub family: FamilySpec,
    pub params: BTreeMap<String, String>,
    pub graphs_checked: usize,
    /// Family members outside the conjecture's hypothesis.
    pub graphs_skipped: usize,
    pub comparisons: usize,
    pub violations: Vec<Violation>,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<ProfileRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ScanReport {
    pub fn held(&self) -> bool {
        self.violations.is_empty()
    }

    /// Recheck every stored violation from its comparison pair.
    pub fn violations_recompute(&self) -> bool {
        self.violations
            .iter()
            .all(|v| v.comparison.verdict() == Verdict::Violated)
    }
}

/// What a scan checker returns for one graph.
pub enum GraphCheck {
    /// Outside the hypothesis; counted but not checked.
    Skip,
    Checked {
        comparisons: Vec<Comparison>,
        /// Value ranked for the extremal witnesses, if any.
        value: Option<Normalized>,
    },
}

pub(crate) fn graph_id(g: &Graph) -> (String, String) {
    (canonical_form(g).to_hex(), to_graph6(g))
}

/// Run `check` over `graphs` and assemble a report. Public so that custom
/// (for instance deliberately false) inequalities can exercise the scanner.
pub fn scan_graphs<F>(
    conjecture_id: &str,
    family: &FamilySpec,
    params: BTreeMap<String, String>,
    graphs: &[Graph],
    check: F,
) -> Result<ScanReport>
where
    F: Fn(&Graph) -> Result<GraphCheck> + Sync,
{
    let results: Vec<GraphCheck> = graphs.par_iter().map(&check).collect::<Result<_>>()?;
    let mut report = ScanReport {
        conjecture_id: conjecture_id.to_string(),
        family: family.clone(),
        params,
        graphs_checked: 0,
        graphs_skipped: 0,
        comparisons: 0,
        violations: Vec::new(),
        witnesses: Vec::new(),
        table: Vec::new(),
        notes: Vec::new(),
    };
    let mut ranked: Vec<(&Graph, Normalized)> = Vec::new();
    for (g, result) in graphs.iter().zip(results) {
        match result {
            GraphCheck::Skip => report.graphs_skipped += 1,
            GraphCheck::Checked { comparisons, value } => {
                report.graphs_checked += 1;
                report.comparisons += comparisons.len();
                for c in comparisons {
                    if c.verdict() == Verdict::Violated {
                        let (graph, graph6) = graph_id(g);
                        report.violations.push(Violation {
                            graph,
                            graph6,
                            comparison: c,
                        });
                    }
                }
                if let Some(v) = value {
                    ranked.push((g, v));
                }
            }
        }
    }
    report.witnesses = extremes(&ranked, "");
    Ok(report)
}

/// Max and min witnesses; ties go to the smaller canonical form.
pub(crate) fn extremes(ranked: &[(&Graph, Normalized)], suffix: &str) -> Vec<Witness> {
    let mut out = Vec::new();
    for (role, want) in [("max", Ordering::Greater), ("min", Ordering::Less)] {
        let mut best: Option<(&Graph, &Normalized, crate::graph::CanonicalForm)> = None;
        for (g, v) in ranked {
            let form = canonical_form(*g);
            let better = match &best {
                None => true,
                Some((_, bv, bf)) => match v.cmp_exact(bv) {
                    Ordering::Equal => form < *bf,
                    o => o == want,
                },
            };
            if better {
                best = Some((g, v, form));
            }
        }
        if let Some((g, v, form)) = best {
            out.push(Witness {
                role: format!("{role}{suffix}"),
                graph: form.to_hex(),
                graph6: to_graph6(g),
                n: g.order(),
                value: v.clone(),
                reference: None,
            });
        }
    }
    out
}
