//! Independent brute force used as ground truth by the integration tests.
//! Deliberately naive: a fixpoint loop over `u32` adjacency masks, sharing no
//! code with the library's enumeration kernel.
#![allow(dead_code)]

use floodpoly::{Graph, IntPolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Oracle {
    pub n: usize,
    pub adj: Vec<u32>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        assert!(g.n() <= 24, "oracle is for small graphs");
        let mut adj = vec![0u32; g.n()];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Oracle { n: g.n(), adj }
    }

    pub fn full(&self) -> u32 {
        if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 }
    }

    pub fn closure(&self, seed: u32) -> u32 {
        let mut c = seed;
        loop {
            let mut next = c;
            for v in 0..self.n {
                if (self.adj[v] & c).count_ones() >= 2 {
                    next |= 1 << v;
                }
            }
            if next == c {
                return c;
            }
            c = next;
        }
    }

    pub fn floods(&self, seed: u32) -> bool {
        self.closure(seed) == self.full()
    }

    pub fn flooding_sets(&self) -> Vec<u32> {
        (0..=self.full()).filter(|&s| self.floods(s)).collect()
    }

    pub fn counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.n + 1];
        for s in 0..=self.full() {
            if self.floods(s) {
                counts[s.count_ones() as usize] += 1;
            }
        }
        counts
    }

    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_u64s(&self.counts())
    }

    /// Flooding sets none of whose one-smaller subsets flood.
    pub fn minimal_sets(&self) -> Vec<u32> {
        self.flooding_sets()
            .into_iter()
            .filter(|&s| (0..self.n).all(|v| s >> v & 1 == 0 || !self.floods(s & !(1 << v))))
            .collect()
    }

    pub fn free_vertices(&self) -> Vec<usize> {
        let used = self.minimal_sets().iter().fold(0u32, |a, &s| a | s);
        (0..self.n).filter(|&v| used >> v & 1 == 0).collect()
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn leaf_mask(&self) -> u32 {
        (0..self.n).filter(|&v| self.degree(v) <= 1).fold(0, |a, v| a | 1 << v)
    }

    /// Edges whose endpoints both have degree exactly two.
    pub fn triggers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 && self.degree(u) == 2 && self.degree(v) == 2 {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Sorted 0-indexed members of a mask.
pub fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn erdos_renyi(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
