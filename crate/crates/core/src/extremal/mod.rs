//! Exact normalized comparisons and the catalog of bound checkers.

mod catalog;
mod holder;

pub use catalog::{check_bound, check_bounds, BoundParams, Target, BOUND_IDS};
pub use holder::{common_neighborhood_table, generalized_holder_check, HolderOutcome};

use crate::graph::{canonical_form, io::to_graph6, Graph};
use crate::scalar::{format_rational, rational_string};
use crate::{Count, Rational, Scalar};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Order of `a^{1/va}` against `b^{1/vb}`, decided by `a^vb` vs `b^va`.
pub fn compare_normalized(a: &Count, va: u64, b: &Count, vb: u64) -> Ordering {
    assert!(va >= 1 && vb >= 1, "normalizing exponents must be positive");
    num_traits::pow(a.clone(), vb as usize).cmp(&num_traits::pow(b.clone(), va as usize))
}

/// `base^exp` with an exact rational base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Power {
    #[serde(with = "rational_string")]
    pub base: Rational,
    pub exp: u64,
}

impl Power {
    pub fn new(base: Rational, exp: u64) -> Self {
        Power { base, exp }
    }

    pub fn count(c: &Count, exp: u64) -> Self {
        Power::new(Rational::from_integer(BigInt::from(c.clone())), exp)
    }

    pub fn value(&self) -> Rational {
        self.base.pow_u(self.exp)
    }
}

/// Which way the claimed inequality points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// claim: `lhs <= rhs`
    Upper,
    /// claim: `lhs >= rhs`
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Tight,
    Violated,
}

impl Verdict {
    pub fn decide(lhs: &Power, rhs: &Power, direction: Direction) -> Verdict {
        match (lhs.value().cmp(&rhs.value()), direction) {
            (Ordering::Equal, _) => Verdict::Tight,
            (Ordering::Less, Direction::Upper) | (Ordering::Greater, Direction::Lower) => Verdict::Holds,
            _ => Verdict::Violated,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Tight => "tight",
            Verdict::Violated => "violated",
        }
    }
}

/// Outcome of one bound on one graph, with the exact comparison behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_id: String,
    /// Hex canonical form of the graph.
    pub graph: String,
    pub graph6: String,
    pub n: usize,
    pub params: BTreeMap<String, String>,
    pub lhs: Power,
    pub rhs: Power,
    pub direction: Direction,
    pub verdict: Verdict,
}

impl BoundReport {
    pub(crate) fn new(
        bound_id: &str,
        g: &Graph,
        params: BTreeMap<String, String>,
        lhs: Power,
        rhs: Power,
        direction: Direction,
    ) -> Self {
        let verdict = Verdict::decide(&lhs, &rhs, direction);
        BoundReport {
            bound_id: bound_id.to_string(),
            graph: canonical_form(g).to_hex(),
            graph6: to_graph6(g),
            n: g.order(),
            params,
            lhs,
            rhs,
            direction,
            verdict,
        }
    }

    /// Recompute the verdict from the stored comparison.
    pub fn recomputed_verdict(&self) -> Verdict {
        Verdict::decide(&self.lhs, &self.rhs, self.direction)
    }

    pub const CSV_HEADER: [&'static str; 10] = [
        "bound_id",
        "graph6",
        "n",
        "params",
        "direction",
        "lhs_base",
        "lhs_exp",
        "rhs_base",
        "rhs_exp",
        "verdict",
    ];

    pub fn csv_record(&self) -> Vec<String> {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        vec![
            self.bound_id.clone(),
            self.graph6.clone(),
            self.n.to_string(),
            params.join(";"),
            match self.direction {
                Direction::Upper => "upper".into(),
                Direction::Lower => "lower".into(),
            },
            format_rational(&self.lhs.base),
            self.lhs.exp.to_string(),
            format_rational(&self.rhs.base),
            self.rhs.exp.to_string(),
            self.verdict.as_str().into(),
        ]
    }
}
