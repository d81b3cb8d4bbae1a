use crate::graph::{Adjacency, LoopGraph};

/// Whether listing the vertices of `h` in `order` gives a staircase matrix:
/// every 1 has only 1s above it and to its left.
pub fn is_staircase(h: &LoopGraph, order: &[usize]) -> bool {
    let n = h.order();
    let at = |i: usize, j: usize| h.has_edge(order[i], order[j]);
    (0..n).all(|i| (0..n).all(|j| !at(i, j) || ((i == 0 || at(i - 1, j)) && (j == 0 || at(i, j - 1)))))
}

/// An ordering exhibiting `h` as loop-threshold, if one exists.
///
/// In a staircase matrix the closed neighborhoods form a chain of prefixes, so
/// sorting by (neighborhood size, loop) descending finds an ordering whenever
/// one exists; vertices with equal neighborhoods are interchangeable. Small
/// graphs are double-checked against every permutation.
pub fn is_loop_threshold(h: &LoopGraph) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..h.order()).collect();
    order.sort_by_key(|&v| {
        (
            std::cmp::Reverse(h.row(v).count_ones()),
            std::cmp::Reverse(h.has_loop(v)),
            v,
        )
    });
    if is_staircase(h, &order) {
        return Some(order);
    }
    if h.order() <= 8 {
        return exhaustive(h);
    }
    None
}

fn exhaustive(h: &LoopGraph) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..h.order()).collect();
    let mut c = vec![0; order.len()];
    if is_staircase(h, &order) {
        return Some(order);
    }
    // Heap's algorithm
    let mut i = 0;
    while i < order.len() {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            order.swap(j, i);
            if is_staircase(h, &order) {
                return Some(order);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    None
}
