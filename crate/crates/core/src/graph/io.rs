//! graph6 and `.lg` text formats.
//!
//! graph6 follows McKay's published format for simple graphs: `N(n)` then the
//! upper triangle in column order `(0,1), (0,2), (1,2), (0,3), ...`, six bits
//! per byte offset by 63. Only `n <= 64` is representable here, so the
//! four-byte size prefix (`n >= 63`) is the longest one produced.
//!
//! `.lg` is a loop-graph matrix: a first line with `n`, then `n` lines of `n`
//! characters `0`/`1`. Diagonal ones are loops; asymmetric input is rejected.

use super::{Graph, LoopGraph, MAX_VERTICES};
use crate::error::{Error, Result};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn from_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |pos: usize, msg: &str| Error::parse("graph6", pos, msg);
    let mut pos = 0;
    if bytes.starts_with(b">>graph6<<") {
        pos = 10;
    }
    let six = |i: usize| -> Result<usize> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(_) => Err(err(i, "byte outside 63..=126")),
            None => Err(err(i, "unexpected end of input")),
        }
    };
    let n = match bytes.get(pos) {
        None => return Err(err(pos, "empty input")),
        Some(126) => {
            if bytes.get(pos + 1) == Some(&126) {
                return Err(err(pos, "graph order above 258047 not supported"));
            }
            let n = six(pos + 1)? << 12 | six(pos + 2)? << 6 | six(pos + 3)?;
            if n < 63 {
                return Err(err(pos, "long size prefix used for n < 63"));
            }
            pos += 4;
            n
        }
        Some(_) => {
            let n = six(pos)?;
            pos += 1;
            n
        }
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != pos + nbytes {
        return Err(err(
            bytes.len().min(pos + nbytes),
            &format!("expected {nbytes} data bytes, found {}", bytes.len() - pos),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = six(pos + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = six(pos + k / 6)?;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(err(pos + k / 6, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parse a file holding one graph6 string per line; blank lines are skipped.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            from_graph6(l.trim()).map_err(|e| match e {
                Error::Parse { position, message, .. } => {
                    Error::parse("graph6", position, format!("line {}: {message}", i + 1))
                }
                other => other,
            })
        })
        .collect()
}

pub fn to_lg(h: &LoopGraph) -> String {
    let mut out = format!("{}\n", h.order());
    for row in h.matrix_rows() {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

pub fn from_lg(text: &str) -> Result<LoopGraph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, first) = lines
        .next()
        .ok_or_else(|| Error::parse(".lg", 1, "missing vertex count"))?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| Error::parse(".lg", 1, format!("bad vertex count `{}`", first.trim())))?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
    }
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (i, line) = lines
            .next()
            .ok_or_else(|| Error::parse(".lg", r + 2, format!("missing row {r}")))?;
        let line = line.trim();
        if line.len() != n {
            return Err(Error::parse(
                ".lg",
                i + 1,
                format!("row {r} has {} entries, expected {n}", line.len()),
            ));
        }
        let mut row = 0u64;
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => row |= 1 << j,
                other => {
                    return Err(Error::parse(
                        ".lg",
                        i + 1,
                        format!("column {}: unexpected `{other}`", j + 1),
                    ))
                }
            }
        }
        rows.push(row);
    }
    if let Some((i, _)) = lines.next() {
        return Err(Error::parse(".lg", i + 1, "trailing data after matrix"));
    }
    for u in 0..n {
        for v in 0..n {
            if (rows[u] >> v & 1) != (rows[v] >> u & 1) {
                return Err(Error::parse(
                    ".lg",
                    u + 2,
                    format!("asymmetric entries ({u},{v}) and ({v},{u})"),
                ));
            }
        }
    }
    LoopGraph::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_named;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // reference strings from the format description and nauty's tools
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        let k4 = parse_named("K:4").unwrap().to_simple().unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        let petersen = parse_named("petersen").unwrap().to_simple().unwrap();
        assert_eq!(from_graph6(&to_graph6(&petersen)).unwrap(), petersen);
    }

    #[test]
    fn long_prefix() {
        let g = parse_named("C:64").unwrap().to_simple().unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_graph6() {
        assert!(matches!(from_graph6(""), Err(Error::Parse { .. })));
        assert!(matches!(from_graph6("D Q"), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(from_graph6("DQ"), Err(Error::Parse { .. })));
        assert!(matches!(from_graph6("DQcc"), Err(Error::Parse { .. })));
        // K_2 is "A_"; "A`" sets a padding bit
        assert_eq!(from_graph6("A_").unwrap().size(), 1);
        assert!(from_graph6("A`").is_err());
    }

    #[test]
    fn lg_format() {
        let h = parse_named("H_WR").unwrap();
        let text = to_lg(&h);
        assert_eq!(text, "3\n110\n111\n011\n");
        assert_eq!(from_lg(&text).unwrap(), h);
        assert!(from_lg("2\n10\n00\n").is_ok());
        assert!(matches!(from_lg("2\n01\n00\n"), Err(Error::Parse { .. })));
        assert!(matches!(from_lg("2\n0x\n00\n"), Err(Error::Parse { position: 2, .. })));
        assert!(from_lg("3\n000\n000\n").is_err());
        assert!(from_lg("").is_err());
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] { g.add_edge(u, v); }
                    k += 1;
                }
            }
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
