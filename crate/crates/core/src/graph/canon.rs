//! Canonical labelling by partition refinement and individualization, with
//! pruning by automorphisms discovered along the way.

use super::{members, Adjacency, LoopGraph};
use std::fmt;

/// Isomorphism-invariant byte encoding of a loop graph.
///
/// Layout: one byte holding `n`, then a bit stream (most significant bit
/// first, zero padded) of the `n` loop flags followed by the upper triangle
/// `(0,1), (0,2), ..., (n-2,n-1)` under the canonical labelling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Rebuild the canonical representative.
    pub fn to_graph(&self) -> LoopGraph {
        let n = self.0[0] as usize;
        let bit = |i: usize| self.0[1 + i / 8] >> (7 - i % 8) & 1 == 1;
        let mut h = LoopGraph::empty(n);
        let mut k = 0;
        for v in 0..n {
            if bit(k) {
                h.add_loop(v);
            }
            k += 1;
        }
        for u in 0..n {
            for v in u + 1..n {
                if bit(k) {
                    h.add_edge(u, v);
                }
                k += 1;
            }
        }
        h
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

fn encode<A: Adjacency + ?Sized>(g: &A, label: &[usize]) -> CanonicalForm {
    let n = g.order();
    // inverse: position -> original vertex
    let mut at = vec![0; n];
    for (v, &p) in label.iter().enumerate() {
        at[p] = v;
    }
    let nbits = n + n * n.saturating_sub(1) / 2;
    let mut bytes = vec![0u8; 1 + nbits.div_ceil(8)];
    bytes[0] = n as u8;
    let mut k = 0;
    let mut push = |b: bool| {
        if b {
            bytes[1 + k / 8] |= 1 << (7 - k % 8);
        }
        k += 1;
    };
    for &v in &at {
        push(g.adjacent(v, v));
    }
    for i in 0..n {
        for j in i + 1..n {
            push(g.adjacent(at[i], at[j]));
        }
    }
    CanonicalForm(bytes)
}

type Partition = Vec<Vec<usize>>;

fn refine<A: Adjacency + ?Sized>(g: &A, cells: &mut Partition) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: u64 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            let mut c = 0;
            while c < cells.len() {
                if cells[c].len() > 1 {
                    let mut keyed: Vec<(u32, usize)> = cells[c]
                        .iter()
                        .map(|&v| ((g.row(v) & splitter).count_ones(), v))
                        .collect();
                    if keyed.iter().any(|&(k, _)| k != keyed[0].0) {
                        keyed.sort_unstable();
                        let mut parts: Vec<Vec<usize>> = Vec::new();
                        let mut last = None;
                        for (k, v) in keyed {
                            if last != Some(k) {
                                parts.push(Vec::new());
                                last = Some(k);
                            }
                            parts.last_mut().unwrap().push(v);
                        }
                        let added = parts.len() - 1;
                        cells.splice(c..=c, parts);
                        c += added;
                        changed = true;
                    }
                }
                c += 1;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Search<'a, A: Adjacency + ?Sized> {
    g: &'a A,
    first: Option<(CanonicalForm, Vec<usize>)>,
    best: Option<(CanonicalForm, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl<A: Adjacency + ?Sized> Search<'_, A> {
    fn run(&mut self, mut cells: Partition, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() {
                let orbit = self.stabilizer_orbit(prefix, v);
                if explored.iter().any(|&w| orbit >> w & 1 == 1) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = candidates.iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            prefix.push(v);
            self.run(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &Partition) {
        let n = self.g.order();
        let mut label = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            label[cell[0]] = pos;
        }
        let form = encode(self.g, &label);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == form {
                // gamma maps v to the vertex holding the same position in `reference`
                let mut inv = vec![0; n];
                for (v, &p) in reference.1.iter().enumerate() {
                    inv[p] = v;
                }
                let gamma: Vec<usize> = label.iter().map(|&p| inv[p]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) && !self.generators.contains(&gamma) {
                    self.generators.push(gamma);
                }
            }
        }
        if self.first.is_none() {
            self.first = Some((form.clone(), label.clone()));
        }
        if self.best.as_ref().map_or(true, |b| form > b.0) {
            self.best = Some((form, label));
        }
    }

    // Orbit of `v` under the group generated by the known automorphisms that
    // fix every vertex of `prefix`.
    fn stabilizer_orbit(&self, prefix: &[usize], v: usize) -> u64 {
        let gens: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|g| prefix.iter().all(|&p| g[p] == p))
            .collect();
        let mut orbit = 1u64 << v;
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            for x in members(frontier) {
                for g in &gens {
                    next |= 1 << g[x];
                }
            }
            next &= !orbit;
            orbit |= next;
            frontier = next;
        }
        orbit
    }
}

/// Canonical labelling: `label[v]` is the new index of vertex `v`.
pub fn canonical_labeling<A: Adjacency + ?Sized>(g: &A) -> Vec<usize> {
    canonize(g).1
}

/// Equal forms iff the graphs are isomorphic (loops included).
pub fn canonical_form<A: Adjacency + ?Sized>(g: &A) -> CanonicalForm {
    canonize(g).0
}

fn canonize<A: Adjacency + ?Sized>(g: &A) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (CanonicalForm(vec![0]), Vec::new());
    }
    let (looped, plain): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| g.adjacent(v, v));
    let cells: Partition = [plain, looped].into_iter().filter(|c| !c.is_empty()).collect();
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.run(cells, &mut Vec::new());
    search.best.expect("search reaches at least one leaf")
}
