//! Exhaustive canonical forms for small graphs.
//!
//! The canonical form is the lexicographically smallest upper-triangle
//! adjacency bit string (graph6 bit order) over all vertex orderings, stored
//! as the graph6 encoding of that ordering. The search is branch and bound:
//! at every depth only the candidates producing the smallest new column are
//! expanded, and of two twin candidates (same neighbourhood up to each other)
//! only the first, since swapping twins is an automorphism.

use std::fmt;

use super::{to_graph6, Graph};
use crate::error::{FloodError, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_CAP: usize = 10;

/// Isomorphism-invariant encoding; equal forms mean isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical relabeling as a graph6 string.
    pub fn graph6(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    used: Vec<bool>,
    bits: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl Search<'_> {
    fn column(&self, w: usize) -> Vec<bool> {
        self.order.iter().map(|&u| self.g.has_edge(u, w)).collect()
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        let mut na = self.g.neighbors(a).clone();
        let mut nb = self.g.neighbors(b).clone();
        na.remove(b);
        nb.remove(a);
        na == nb
    }

    /// `strict` is true once the current prefix is already smaller than the
    /// incumbent's.
    fn run(&mut self, strict: bool) {
        let n = self.g.n();
        let depth = self.order.len();
        if depth == n {
            if strict || self.best.is_none() {
                self.best = Some((self.bits.clone(), self.order.clone()));
            }
            return;
        }
        let mut cols: Vec<(usize, Vec<bool>)> = (0..n)
            .filter(|&w| !self.used[w])
            .map(|w| (w, self.column(w)))
            .collect();
        let min = cols.iter().map(|(_, c)| c).min().unwrap().clone();
        cols.retain(|(_, c)| *c == min);

        let start = self.bits.len();
        let mut child_strict = strict;
        if !strict {
            if let Some((best, _)) = &self.best {
                match min.as_slice().cmp(&best[start..start + depth]) {
                    std::cmp::Ordering::Greater => return,
                    std::cmp::Ordering::Less => child_strict = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }

        let mut tried: Vec<usize> = Vec::new();
        for (w, col) in cols {
            if tried.iter().any(|&t| self.twins(t, w)) {
                continue;
            }
            tried.push(w);
            self.used[w] = true;
            self.order.push(w);
            self.bits.extend_from_slice(&col);
            // A completed leaf may have lowered the incumbent; re-check.
            let s = child_strict && self.still_smaller(start + depth);
            self.run(s);
            self.bits.truncate(start);
            self.order.pop();
            self.used[w] = false;
        }
    }

    fn still_smaller(&self, upto: usize) -> bool {
        match &self.best {
            None => true,
            Some((best, _)) => self.bits[..upto] < best[..upto],
        }
    }
}

/// Vertex ordering realising the canonical form: `order[k]` is the vertex
/// placed at position `k`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    if g.n() > CANONICAL_CAP {
        return Err(FloodError::TooLarge {
            n: g.n(),
            cap: CANONICAL_CAP,
        });
    }
    let mut s = Search {
        g,
        order: Vec::with_capacity(g.n()),
        used: vec![false; g.n()],
        bits: Vec::new(),
        best: None,
    };
    s.run(false);
    Ok(s.best.map(|(_, o)| o).unwrap_or_default())
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(CanonicalForm(to_graph6(&g.permute(&perm)?)))
}
