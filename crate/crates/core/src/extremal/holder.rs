//! Generalized Hölder inequality on finite product spaces, checked exactly.
//!
//! Coordinates `0..n` carry finite weighted spaces `Ω_i`; each `f_j` lives on the
//! coordinates `A_j`, and every coordinate lies in exactly `d` of the `A_j`.
//! Then `Σ_x Π_j f_j(x_{A_j}) <= Π_j (Σ_y f_j(y)^d)^{1/d}` for nonnegative data.

use crate::error::{Error, Result};
use crate::graph::LoopGraph;
use crate::{Rational, Scalar};
use num_traits::{Signed, Zero};
use serde::Serialize;

/// Largest product space the check will sum over.
const MAX_POINTS: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolderOutcome {
    #[serde(with = "crate::scalar::rational_string")]
    pub lhs: Rational,
    /// `rhs^d`, kept exact.
    #[serde(with = "crate::scalar::rational_string")]
    pub rhs_dpow: Rational,
    pub d: usize,
    /// `lhs^d <= rhs^d`
    pub holds: bool,
}

/// `cover[j]` lists the coordinates of `f_j` in increasing order,
/// `weights[i]` is the measure on `Ω_i`, and `tables[j]` is `f_j` row-major
/// over `Π_{i ∈ A_j} Ω_i` with the first coordinate most significant.
pub fn generalized_holder_check(
    n: usize,
    cover: &[Vec<usize>],
    weights: &[Vec<Rational>],
    tables: &[Vec<Rational>],
) -> Result<HolderOutcome> {
    if weights.len() != n {
        return Err(Error::Shape(format!(
            "{} weight vectors for {n} coordinates",
            weights.len()
        )));
    }
    if tables.len() != cover.len() {
        return Err(Error::Shape(format!(
            "{} tables for {} sets",
            tables.len(),
            cover.len()
        )));
    }
    let mut times = vec![0usize; n];
    for set in cover {
        if set.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Shape("cover sets must be strictly increasing".into()));
        }
        for &i in set {
            if i >= n {
                return Err(Error::Shape(format!("coordinate {i} out of range")));
            }
            times[i] += 1;
        }
    }
    let d = times.first().copied().unwrap_or(0);
    if d == 0 || times.iter().any(|&t| t != d) {
        return Err(Error::Shape(format!(
            "coordinates must be covered equally often, got {times:?}"
        )));
    }
    let sizes: Vec<usize> = weights.iter().map(Vec::len).collect();
    for (j, (set, table)) in cover.iter().zip(tables).enumerate() {
        let want: usize = set.iter().map(|&i| sizes[i]).product();
        if table.len() != want {
            return Err(Error::Shape(format!(
                "table {j} has {} entries, expected {want}",
                table.len()
            )));
        }
    }
    let negative = |v: &Vec<Rational>| v.iter().any(Signed::is_negative);
    if weights.iter().any(negative) || tables.iter().any(negative) {
        return Err(Error::Shape("weights and tables must be nonnegative".into()));
    }
    let points = sizes.iter().try_fold(1u128, |acc, &s| acc.checked_mul(s as u128));
    match points {
        Some(p) if p <= MAX_POINTS => {}
        _ => {
            return Err(Error::CapExceeded {
                what: "Hölder product space",
                size: points.unwrap_or(u128::MAX),
                cap: MAX_POINTS,
            })
        }
    }

    let index = |set: &[usize], x: &[usize]| set.iter().fold(0, |acc, &i| acc * sizes[i] + x[i]);
    let mut lhs = Rational::zero();
    let mut x = vec![0usize; n];
    if sizes.iter().all(|&s| s > 0) {
        'outer: loop {
            let mut term: Rational = (0..n).map(|i| weights[i][x[i]].clone()).product();
            for (set, table) in cover.iter().zip(tables) {
                if term.is_zero() {
                    break;
                }
                term *= &table[index(set, &x)];
            }
            lhs += term;
            for i in (0..n).rev() {
                x[i] += 1;
                if x[i] < sizes[i] {
                    continue 'outer;
                }
                x[i] = 0;
            }
            break;
        }
    }

    let mut rhs_dpow = Rational::from_u64(1);
    for (set, table) in cover.iter().zip(tables) {
        let mut y = vec![0usize; set.len()];
        let mut sum = Rational::zero();
        for value in table {
            let w: Rational = set.iter().zip(&y).map(|(&i, &yi)| weights[i][yi].clone()).product();
            sum += value.pow_u(d as u64) * w;
            for k in (0..set.len()).rev() {
                y[k] += 1;
                if y[k] < sizes[set[k]] {
                    break;
                }
                y[k] = 0;
            }
        }
        rhs_dpow *= sum;
    }
    let holds = lhs.pow_u(d as u64) <= rhs_dpow;
    Ok(HolderOutcome {
        lhs,
        rhs_dpow,
        d,
        holds,
    })
}

/// `f(z_1..z_d) = |N(z_1) ∩ .. ∩ N(z_d)|` over `V(H)^d`, row-major.
/// Its `d`-th power sum is `hom(K_{d,d}, H)`.
pub fn common_neighborhood_table(h: &LoopGraph, d: usize) -> Result<Vec<Rational>> {
    let n = h.order();
    let size = (n as u128).checked_pow(d as u32).filter(|&s| s <= MAX_POINTS);
    let Some(size) = size else {
        return Err(Error::CapExceeded {
            what: "common neighborhood table",
            size: u128::MAX,
            cap: MAX_POINTS,
        });
    };
    let mut out = Vec::with_capacity(size as usize);
    for idx in 0..size {
        let mut rest = idx;
        let mut common = crate::graph::full_set(n);
        for _ in 0..d {
            common &= h.neighbors((rest % n as u128) as usize);
            rest /= n as u128;
        }
        out.push(Rational::from_u64(common.count_ones() as u64));
    }
    Ok(out)
}
