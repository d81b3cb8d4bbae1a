//! Structural recognizers and constructive gadgets on target graphs.

mod bst;
mod swap;
mod target;
mod threshold;

pub use bst::{bst_graph, is_bipartite_swapping_target, BstVerdict, BstWitness};
pub use swap::{swap_injection, swap_injection_inverse, two_copies, SwapCertificate};
pub use target::{bigraph_hom_target, bigraph_hom_target_capped};
pub use threshold::{is_loop_threshold, is_staircase};
