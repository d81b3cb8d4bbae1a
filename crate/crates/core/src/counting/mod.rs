//! Exact counters: homomorphisms, independence/matching/Potts polynomials and
//! the hard-core observables derived from them.

mod hom;
mod occupancy;
mod poly;
mod potts;

pub use hom::{bigraph_hom_count, hom_count, hom_count_from, hom_count_restricted};
pub use occupancy::{
    neighbor_occupancy_distribution, occupancy_fraction, occupancy_lp_optimum, occupancy_lp_solution, NeighborTable,
};
pub use poly::{independence_count, independence_polynomial, matching_polynomial, pm, CountPolynomial, PolyKind};
pub(crate) use potts::energy_from;
pub use potts::{potts_internal_energy, potts_polynomial};

use crate::Count;
use num_traits::{One, Zero};
use std::ops::AddAssign;

/// Accumulator for backtracking counts: `u128` when the answer provably fits,
/// [`Count`] otherwise.
pub(crate) trait Tally: Clone + Zero + One + From<u64> + for<'a> AddAssign<&'a Self> {
    fn into_count(self) -> Count;
}

impl Tally for u128 {
    fn into_count(self) -> Count {
        Count::from(self)
    }
}

impl Tally for Count {
    fn into_count(self) -> Count {
        self
    }
}
