//! Integer-coefficient generating polynomials.

use crate::graph::{members, Graph, VertexSet};
use crate::{Count, Scalar};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolyKind {
    Independence,
    Matching,
    Potts,
}

/// Polynomial with [`Count`] coefficients, degree-ascending, trailing zeros
/// trimmed. Serializes as a JSON array of decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CountPolynomial {
    kind: PolyKind,
    coeffs: Vec<Count>,
}

impl CountPolynomial {
    pub fn new(kind: PolyKind, mut coeffs: Vec<Count>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CountPolynomial { kind, coeffs }
    }

    pub fn one(kind: PolyKind) -> Self {
        Self::new(kind, vec![Count::one()])
    }

    pub fn kind(&self) -> PolyKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[Count] {
        &self.coeffs
    }

    /// Coefficient of `x^t` (zero past the degree).
    pub fn coeff(&self, t: usize) -> Count {
        self.coeffs.get(t).cloned().unwrap_or_default()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Sum of coefficients, i.e. the value at 1.
    pub fn total(&self) -> Count {
        self.coeffs.iter().sum()
    }

    /// Horner evaluation in any scalar type.
    pub fn eval<S: Scalar>(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + S::from_count(c))
    }

    /// `x p'(x)`, i.e. `sum_t t c_t x^t`.
    pub fn eval_weighted<S: Scalar>(&self, x: &S) -> S {
        let mut acc = S::zero();
        for (t, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * x.clone() + S::from_count(&(c * Count::from(t)));
        }
        acc
    }

    pub fn mul(&self, other: &CountPolynomial) -> CountPolynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(self.kind, Vec::new());
        }
        let mut out = vec![Count::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(self.kind, out)
    }

    pub fn pow(&self, k: usize) -> CountPolynomial {
        let mut acc = Self::one(self.kind);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Coefficients as decimal strings (the serialized form).
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings(kind: PolyKind, items: &[String]) -> Option<Self> {
        let coeffs = items
            .iter()
            .map(|s| s.parse::<Count>().ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(kind, coeffs))
    }
}

impl Serialize for CountPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl fmt::Display for CountPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| match t {
                0 => c.to_string(),
                1 => format!("{c}x"),
                _ => format!("{c}x^{t}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `P_G(λ) = sum_I λ^{|I|}` over independent sets.
pub fn independence_polynomial(g: &Graph) -> CountPolynomial {
    let mut memo = HashMap::new();
    let coeffs = ind_rec(g, g.vertex_set(), &mut memo);
    CountPolynomial::new(PolyKind::Independence, coeffs.into_iter().map(Count::from).collect())
}

/// `i(G)`, the number of independent sets.
pub fn independence_count(g: &Graph) -> Count {
    independence_polynomial(g).total()
}

// Coefficients fit in u128: at most 2^64 independent sets of each size.
fn ind_rec(g: &Graph, mask: VertexSet, memo: &mut HashMap<VertexSet, Vec<u128>>) -> Vec<u128> {
    if mask == 0 {
        return vec![1];
    }
    if let Some(p) = memo.get(&mask) {
        return p.clone();
    }
    let comp = component_in(g, mask);
    if comp != mask {
        let a = ind_rec(g, comp, memo);
        let b = ind_rec(g, mask & !comp, memo);
        return convolve(&a, &b);
    }
    let (pivot, deg) = members(mask)
        .map(|v| (v, (g.neighbors(v) & mask).count_ones()))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        .expect("mask is nonempty");
    let out = if deg == 0 {
        binomial_row(mask.count_ones() as usize)
    } else {
        let without = ind_rec(g, mask & !(1 << pivot), memo);
        let with = ind_rec(g, mask & !(g.neighbors(pivot) | 1 << pivot), memo);
        let mut out = without;
        if out.len() < with.len() + 1 {
            out.resize(with.len() + 1, 0);
        }
        for (t, c) in with.into_iter().enumerate() {
            out[t + 1] += c;
        }
        out
    };
    memo.insert(mask, out.clone());
    out
}

/// Component of the lowest vertex of `mask` in `G[mask]`.
fn component_in(g: &Graph, mask: VertexSet) -> VertexSet {
    let mut comp = mask & mask.wrapping_neg();
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        for u in members(frontier) {
            next |= g.neighbors(u);
        }
        next &= mask & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

fn convolve<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Zero + for<'x> std::ops::AddAssign<&'x T>,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
{
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

fn binomial_row(n: usize) -> Vec<u128> {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row
}

/// `M_G(λ) = sum_M λ^{|M|}` over matchings.
pub fn matching_polynomial(g: &Graph) -> CountPolynomial {
    let mut memo = HashMap::new();
    let coeffs = match_rec(g, g.vertex_set(), &mut memo);
    CountPolynomial::new(PolyKind::Matching, coeffs)
}

/// Number of perfect matchings; zero for odd order.
pub fn pm(g: &Graph) -> Count {
    if g.order() % 2 == 1 {
        return Count::zero();
    }
    matching_polynomial(g).coeff(g.order() / 2)
}

fn match_rec(g: &Graph, mask: VertexSet, memo: &mut HashMap<VertexSet, Vec<Count>>) -> Vec<Count> {
    // drop isolated vertices up front: they never change the polynomial
    let mut live = mask;
    for v in members(mask) {
        if g.neighbors(v) & mask == 0 {
            live &= !(1 << v);
        }
    }
    if live == 0 {
        return vec![Count::one()];
    }
    if let Some(p) = memo.get(&live) {
        return p.clone();
    }
    let comp = component_in(g, live);
    if comp != live {
        let a = match_rec(g, comp, memo);
        let b = match_rec(g, live & !comp, memo);
        return convolve(&a, &b);
    }
    let v = live.trailing_zeros() as usize;
    let mut out = match_rec(g, live & !(1 << v), memo);
    for u in members(g.neighbors(v) & live) {
        let sub = match_rec(g, live & !(1 << v | 1 << u), memo);
        if out.len() < sub.len() + 1 {
            out.resize(sub.len() + 1, Count::zero());
        }
        for (t, c) in sub.into_iter().enumerate() {
            out[t + 1] += c;
        }
    }
    memo.insert(live, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_named;
    use crate::scalar::ratio;
    use crate::Rational;

    fn simple(s: &str) -> Graph {
        parse_named(s).unwrap().to_simple().unwrap()
    }

    fn counts(p: &CountPolynomial) -> Vec<u64> {
        p.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    /// Oracle: independent sets by subset enumeration, bucketed by size.
    fn brute_ind(g: &Graph) -> Vec<u64> {
        let mut out = vec![0; g.order() + 1];
        for s in 0u64..1 << g.order() {
            if g.is_independent(s) {
                out[s.count_ones() as usize] += 1;
            }
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    /// Oracle: matchings by edge-subset enumeration.
    fn brute_match(g: &Graph) -> Vec<u64> {
        let edges = g.edges();
        let mut out = vec![0; edges.len() + 1];
        for s in 0u64..1 << edges.len() {
            let mut used = 0u64;
            let ok = members(s).all(|i| {
                let (a, b) = edges[i];
                let hit = used & (1 << a | 1 << b) != 0;
                used |= 1 << a | 1 << b;
                !hit
            });
            if ok {
                out[s.count_ones() as usize] += 1;
            }
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    #[test]
    fn independence_fixtures() {
        let c4 = independence_polynomial(&simple("C:4"));
        assert_eq!(counts(&c4), vec![1, 4, 2]);
        assert_eq!(c4.total(), Count::from(7u32));
        for d in 1..=6usize {
            let k = simple(&format!("K:{d},{d}"));
            assert_eq!(independence_count(&k), Count::from((1u32 << (d + 1)) - 1));
        }
        let e = independence_polynomial(&Graph::empty(5));
        assert_eq!(counts(&e), vec![1, 5, 10, 10, 5, 1]);
        assert_eq!(counts(&independence_polynomial(&Graph::empty(0))), vec![1]);
    }

    #[test]
    fn independence_agrees_with_subsets() {
        for s in ["petersen", "C:9", "K:3,4", "L:7,12", "P:10", "K:2,2,2", "heawood"] {
            let g = simple(s);
            assert_eq!(counts(&independence_polynomial(&g)), brute_ind(&g), "{s}");
        }
        assert_eq!(independence_count(&simple("petersen")), Count::from(76u32));
    }

    #[test]
    fn matching_fixtures() {
        let k33 = simple("K:3,3");
        assert_eq!(counts(&matching_polynomial(&k33)), vec![1, 9, 18, 6]);
        assert_eq!(counts(&matching_polynomial(&k33)), brute_match(&k33));
        assert_eq!(pm(&k33), Count::from(6u32));
        assert_eq!(matching_polynomial(&simple("P:3")).total(), Count::from(3u32));
        assert_eq!(pm(&simple("P:3")), Count::zero());
        for s in ["petersen", "C:7", "K:4", "K:2,2,2", "L:6,10"] {
            let g = simple(s);
            assert_eq!(counts(&matching_polynomial(&g)), brute_match(&g), "{s}");
        }
        let mut fact = 1u32;
        for d in 1..=5u32 {
            fact *= d;
            assert_eq!(pm(&simple(&format!("K:{d},{d}"))), Count::from(fact));
        }
    }

    #[test]
    fn evaluation() {
        let p = independence_polynomial(&simple("C:4"));
        assert_eq!(p.eval(&ratio(1, 2)), ratio(1, 1) + ratio(2, 1) + ratio(1, 2));
        assert_eq!(p.eval_weighted(&ratio(1, 1)), Rational::from_integer(8.into()));
        assert!((p.eval(&2.0f64) - 17.0).abs() < 1e-12);
        assert!((p.eval(&2.0f32) - 17.0).abs() < 1e-5);
        let sq = p.pow(2);
        assert_eq!(sq.total(), Count::from(49u32));
        assert_eq!(p.to_string(), "1 + 4x + 2x^2");
    }

    #[test]
    fn json_form() {
        let p = independence_polynomial(&simple("C:4"));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["1","4","2"]"#);
        let back: Vec<String> = serde_json::from_str(&json).unwrap();
        assert_eq!(
            CountPolynomial::from_decimal_strings(PolyKind::Independence, &back),
            Some(p)
        );
    }

    #[test]
    fn wide_sparse_graphs() {
        // 64 vertices, memoized recursion stays fast
        let g = simple("C:64");
        let p = independence_polynomial(&g);
        // Lucas number L_64
        assert_eq!(p.total(), "23725150497407".parse::<Count>().unwrap());
        assert_eq!(pm(&g), Count::from(2u32));
    }
}
