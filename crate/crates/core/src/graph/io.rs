//! Edge-list text and graph6 encodings.

use super::Graph;
use crate::error::{FloodError, Result};

fn syntax(msg: impl Into<String>) -> FloodError {
    FloodError::Syntax(msg.into())
}

/// Parses `n m` followed by `m` lines `u v` (1-indexed). Blank lines and
/// `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| syntax("missing `n m` header"))?;
    let nums = parse_numbers(header)?;
    let [n, m] = nums[..] else {
        return Err(syntax(format!("header must be `n m`, got `{header}`")));
    };
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let nums = parse_numbers(line)?;
        let [u, v] = nums[..] else {
            return Err(syntax(format!("edge line must be `u v`, got `{line}`")));
        };
        if u == 0 || v == 0 {
            return Err(syntax(format!("vertices are 1-indexed, got `{line}`")));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(syntax(format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_numbers(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse().map_err(|_| syntax(format!("bad integer `{t}`"))))
        .collect()
}

/// Inverse of [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 string. An optional `>>graph6<<` prefix is accepted.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let bytes = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(syntax(format!("byte {b} outside the graph6 range 63..=126")));
    }
    let six = |i: usize| -> Result<usize> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| syntax("truncated graph6 size field"))
    };
    let (n, body) = match bytes.first() {
        None => return Err(syntax("empty graph6 string")),
        Some(126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = n << 6 | six(i)?;
            }
            (n, &bytes[8..])
        }
        Some(126) => {
            let n = six(1)? << 12 | six(2)? << 6 | six(3)?;
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(syntax(format!(
            "graph6 body has {} bytes, expected {} for n = {n}",
            body.len(),
            nbits.div_ceil(6)
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// One graph per non-blank line.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| (n >> (6 * k) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| (n >> (6 * k) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        // 5 vertices, edges 0-2 0-4 1-3 3-4
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
        assert_eq!(parse_graph6(">>graph6<<DQc").unwrap(), g);
        // K2 and the empty graph on one vertex
        assert_eq!(to_graph6(&Graph::from_edge_list(2, &[(0, 1)]).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn long_header() {
        let n = 70;
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        let g = Graph::from_edge_list(n, &e).unwrap();
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D").is_err());
        assert!(parse_graph6("DQ c").is_err());
    }

    #[test]
    fn edge_list_text() {
        let text = "# square\n4 4\n1 2\n2 3\n\n3 4 # closing\n4 1\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("3 2\n1 2\n").is_err());
        assert!(parse_edge_list("3 1\n0 2\n").is_err());
        assert!(matches!(parse_edge_list("3 1\n1 4\n"), Err(FloodError::IndexOutOfRange { .. })));
        assert!(matches!(parse_edge_list("3 1\n2 2\n"), Err(FloodError::SelfLoop(1))));
    }
}
