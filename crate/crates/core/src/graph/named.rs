//! Named graph catalog and the small textual language used to refer to it.
//!
//! Grammar: `[k*]NAME[:p1,p2,...][+loops]`, for example `K:3,3`, `C:5`,
//! `petersen`, `L:6,9`, `PL:8,1` (path on 8 vertices with a loop at the first
//! vertex), `4*K:4` (four disjoint copies of `K_4`) or `K:3+loops`.

use super::ops::disjoint_union_loop;
use super::LoopGraph;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Parsed form of a named graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub copies: usize,
    pub name: String,
    pub params: Vec<usize>,
    pub loops: bool,
}

impl GraphSpec {
    pub fn build(&self) -> Result<LoopGraph> {
        let mut h = standard_graph(&self.name, &self.params)?;
        if self.loops {
            for v in 0..h.order() {
                h.add_loop(v);
            }
        }
        if self.copies == 1 {
            Ok(h)
        } else {
            disjoint_union_loop(&vec![h; self.copies])
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::parse("graph name", 0, format!("{msg} in `{s}`"));
        let mut rest = s.trim();
        let mut copies = 1;
        if let Some((k, tail)) = rest.split_once('*') {
            copies = k.trim().parse().map_err(|_| bad("bad copy count"))?;
            rest = tail;
        }
        let mut loops = false;
        if let Some(head) = rest.strip_suffix("+loops") {
            loops = true;
            rest = head;
        }
        let (name, params) = match rest.split_once(':') {
            Some((name, list)) => {
                let params = list
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad("bad parameter list"))?;
                (name, params)
            }
            None => (rest, Vec::new()),
        };
        if name.is_empty() {
            return Err(bad("missing name"));
        }
        Ok(GraphSpec {
            copies,
            name: name.trim().to_string(),
            params,
            loops,
        })
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.copies != 1 {
            write!(f, "{}*", self.copies)?;
        }
        f.write_str(&self.name)?;
        if !self.params.is_empty() {
            let list: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            write!(f, ":{}", list.join(","))?;
        }
        if self.loops {
            f.write_str("+loops")?;
        }
        Ok(())
    }
}

/// Parse and build a graph from the mini-language.
pub fn parse_named(s: &str) -> Result<LoopGraph> {
    s.parse::<GraphSpec>()?.build()
}

fn want(name: &str, params: &[usize], counts: &[usize]) -> Result<()> {
    if counts.contains(&params.len()) {
        Ok(())
    } else {
        Err(Error::BadParameter(format!(
            "`{name}` takes {counts:?} parameters, got {}",
            params.len()
        )))
    }
}

fn limit(n: usize) -> Result<()> {
    if n > super::MAX_VERTICES {
        Err(Error::TooManyVertices {
            n,
            cap: super::MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Build a graph from the catalog.
///
/// | name | params | graph |
/// |------|--------|-------|
/// | `K` | `n` | complete graph `K_n` |
/// | `K` | `a,b,...` | complete multipartite graph (`K:a,b` is `K_{a,b}`) |
/// | `P` | `n` | path on `n` vertices |
/// | `C` | `n` | cycle on `n >= 3` vertices |
/// | `E` | `n` | edgeless graph |
/// | `petersen`, `heawood` | | |
/// | `L` | `n,m` | first `m` pairs of `[n]` in lexicographic order |
/// | `H_ind` | | looped vertex 0 joined to plain vertex 1 |
/// | `H_WR` | | path 0-1-2, every vertex looped |
/// | `two_loops` | | two isolated looped vertices |
/// | `loop` | | one looped vertex |
/// | `PL` | `k,i,...` | path on `k` vertices, loops at 1-based positions `i,...` |
pub fn standard_graph(name: &str, params: &[usize]) -> Result<LoopGraph> {
    let g = match name {
        "K" => {
            want(name, params, &[1, 2, 3, 4, 5, 6, 7, 8])?;
            if params.len() == 1 {
                complete_multipartite(&vec![1; params[0]])?
            } else {
                complete_multipartite(params)?
            }
        }
        "P" => {
            want(name, params, &[1])?;
            path(params[0])?
        }
        "C" => {
            want(name, params, &[1])?;
            let n = params[0];
            if n < 3 {
                return Err(Error::BadParameter(format!("cycle needs n >= 3, got {n}")));
            }
            let mut h = path(n)?;
            h.add_edge(0, n - 1);
            h
        }
        "E" => {
            want(name, params, &[1])?;
            limit(params[0])?;
            LoopGraph::empty(params[0])
        }
        "petersen" => {
            want(name, params, &[0])?;
            let mut h = LoopGraph::empty(10);
            for i in 0..5 {
                h.add_edge(i, (i + 1) % 5);
                h.add_edge(i, i + 5);
                h.add_edge(5 + i, 5 + (i + 2) % 5);
            }
            h
        }
        "heawood" => {
            want(name, params, &[0])?;
            let mut h = LoopGraph::empty(14);
            for i in 0..14 {
                h.add_edge(i, (i + 1) % 14);
                if i % 2 == 0 {
                    h.add_edge(i, (i + 5) % 14);
                }
            }
            h
        }
        "L" => {
            want(name, params, &[2])?;
            let (n, m) = (params[0], params[1]);
            limit(n)?;
            if m > n * n.saturating_sub(1) / 2 {
                return Err(Error::BadParameter(format!("L:{n},{m} has too many edges")));
            }
            let mut h = LoopGraph::empty(n);
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for (u, v) in pairs.take(m) {
                h.add_edge(u, v);
            }
            h
        }
        "H_ind" => {
            want(name, params, &[0])?;
            LoopGraph::from_edges(2, &[(0, 0), (0, 1)])?
        }
        "H_WR" => {
            want(name, params, &[0])?;
            LoopGraph::from_edges(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])?
        }
        "two_loops" => {
            want(name, params, &[0])?;
            LoopGraph::from_edges(2, &[(0, 0), (1, 1)])?
        }
        "loop" => {
            want(name, params, &[0])?;
            LoopGraph::from_edges(1, &[(0, 0)])?
        }
        "PL" => {
            if params.is_empty() {
                return Err(Error::BadParameter("`PL` needs a length".into()));
            }
            path_with_loops(params[0], &params[1..])?
        }
        _ => return Err(Error::UnknownGraph(name.to_string())),
    };
    Ok(g)
}

fn path(n: usize) -> Result<LoopGraph> {
    limit(n)?;
    let mut h = LoopGraph::empty(n);
    for v in 1..n {
        h.add_edge(v - 1, v);
    }
    Ok(h)
}

/// Path on `k` vertices with loops at the given 1-based positions.
pub fn path_with_loops(k: usize, positions: &[usize]) -> Result<LoopGraph> {
    let mut h = path(k)?;
    for &i in positions {
        if i == 0 || i > k {
            return Err(Error::BadParameter(format!("loop position {i} outside 1..={k}")));
        }
        h.add_loop(i - 1);
    }
    Ok(h)
}

fn complete_multipartite(parts: &[usize]) -> Result<LoopGraph> {
    let n: usize = parts.iter().sum();
    limit(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(p));
    }
    let mut h = LoopGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                h.add_edge(u, v);
            }
        }
    }
    Ok(h)
}
