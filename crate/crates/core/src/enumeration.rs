//! Brute-force enumeration of flooding seed sets.
//!
//! Every subset of the vertex set is tested with the single-word closure
//! kernel. Subsets missing a leaf or isolated vertex can never flood, so the
//! scan only ranges over supersets of that forced set. The remaining free
//! positions are split by their highest bits into contiguous chunks; each
//! chunk is scanned independently into a private accumulator, and the
//! accumulators are merged in chunk order, so results do not depend on the
//! worker count.

use num_bigint::BigInt;

use crate::cascade::closure_mask;
use crate::error::{FloodError, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::IntPolynomial;

pub const DEFAULT_CAP: usize = 28;

/// Hard ceiling for any cap override: subset indices must fit in 64 bits.
pub const MAX_CAP: usize = 62;

/// Free positions used to split the scan into chunks.
const SPLIT_BITS: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Largest vertex count accepted.
    pub cap: usize,
    /// Worker count; `None` uses the ambient rayon pool, `Some(1)` runs the
    /// sequential loop. Ignored without the `parallel` feature.
    pub threads: Option<usize>,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            cap: DEFAULT_CAP,
            threads: None,
        }
    }
}

impl EnumerationConfig {
    pub fn sequential() -> Self {
        EnumerationConfig {
            threads: Some(1),
            ..Self::default()
        }
    }

    pub fn with_threads(threads: usize) -> Self {
        EnumerationConfig {
            threads: Some(threads),
            ..Self::default()
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

/// Everything the brute force knows about one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FloodSummary {
    pub polynomial: IntPolynomial,
    pub flood_set_size: BigInt,
    pub minimal_sets: Vec<VertexSet>,
    pub free_vertices: VertexSet,
}

struct Kernel<'a> {
    n: usize,
    adj: &'a [u64],
    full: u64,
    forced: u64,
    /// Free positions scanned inside a chunk.
    low: u64,
    /// Free positions fixed per chunk, lowest first.
    high: Vec<u32>,
}

impl<'a> Kernel<'a> {
    fn new(g: &'a Graph, cfg: &EnumerationConfig) -> Result<Self> {
        let cap = cfg.cap.min(MAX_CAP);
        if g.n() > cap {
            return Err(FloodError::TooLarge { n: g.n(), cap });
        }
        let adj = g.masks().expect("graphs within the cap use single-word masks");
        let n = g.n();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let forced = g.leaves_and_isolated().as_mask().unwrap();
        let free = full & !forced;
        let split = free.count_ones().min(SPLIT_BITS);
        let mut high = Vec::new();
        let mut low = free;
        for _ in 0..split {
            let top = 63 - low.leading_zeros();
            high.push(top);
            low &= !(1u64 << top);
        }
        high.reverse();
        Ok(Kernel {
            n,
            adj,
            full,
            forced,
            low,
            high,
        })
    }

    fn chunks(&self) -> u64 {
        1u64 << self.high.len()
    }

    fn floods(&self, c: u64) -> bool {
        closure_mask(self.adj, c) == self.full
    }

    /// Calls `visit` on every candidate seed set of chunk `chunk`.
    #[inline]
    fn scan(&self, chunk: u64, mut visit: impl FnMut(u64)) {
        let mut base = self.forced;
        for (i, &pos) in self.high.iter().enumerate() {
            if chunk >> i & 1 == 1 {
                base |= 1u64 << pos;
            }
        }
        let mut s = 0u64;
        loop {
            visit(base | s);
            s = s.wrapping_sub(self.low) & self.low;
            if s == 0 {
                break;
            }
        }
    }

    fn count_chunk(&self, chunk: u64) -> Vec<u64> {
        let mut counts = vec![0u64; self.n + 1];
        self.scan(chunk, |c| {
            if self.floods(c) {
                counts[c.count_ones() as usize] += 1;
            }
        });
        counts
    }

    /// Flooding sets none of whose one-smaller subsets flood. Removing a
    /// forced vertex never floods, so only free members are tried.
    fn minimal_chunk(&self, chunk: u64) -> Vec<u64> {
        let mut out = Vec::new();
        self.scan(chunk, |c| {
            if self.is_minimal(c) {
                out.push(c);
            }
        });
        out
    }

    fn is_minimal(&self, c: u64) -> bool {
        if !self.floods(c) {
            return false;
        }
        let mut rest = c & !self.forced;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            if self.floods(c ^ bit) {
                return false;
            }
        }
        true
    }

    fn summary_chunk(&self, chunk: u64) -> (Vec<u64>, Vec<u64>) {
        let mut counts = vec![0u64; self.n + 1];
        let mut minimal = Vec::new();
        self.scan(chunk, |c| {
            if self.floods(c) {
                counts[c.count_ones() as usize] += 1;
                if self.is_minimal(c) {
                    minimal.push(c);
                }
            }
        });
        (counts, minimal)
    }

    fn flooding_chunk(&self, chunk: u64) -> Vec<u64> {
        let mut out = Vec::new();
        self.scan(chunk, |c| {
            if self.floods(c) {
                out.push(c);
            }
        });
        out
    }
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn concat<T>(mut a: Vec<T>, b: Vec<T>) -> Vec<T> {
    a.extend(b);
    a
}

/// Maps every chunk and folds the results in chunk order.
fn run_chunks<T, F, M>(cfg: &EnumerationConfig, chunks: u64, map: F, merge: M) -> T
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let par = || {
            (0..chunks)
                .into_par_iter()
                .map(&map)
                .reduce_with(&merge)
                .expect("at least one chunk")
        };
        match cfg.threads {
            Some(1) => sequential(chunks, &map, &merge),
            Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
                Ok(pool) => pool.install(par),
                Err(_) => sequential(chunks, &map, &merge),
            },
            None => par(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = cfg;
        sequential(chunks, &map, &merge)
    }
}

fn sequential<T>(chunks: u64, map: &impl Fn(u64) -> T, merge: &impl Fn(T, T) -> T) -> T {
    (1..chunks).fold(map(0), |acc, c| merge(acc, map(c)))
}

fn sorted_sets(n: usize, masks: Vec<u64>) -> Vec<VertexSet> {
    let mut sets: Vec<_> = masks.into_iter().map(|m| VertexSet::from_mask(n, m)).collect();
    sets.sort_by(VertexSet::cmp_size_lex);
    sets
}

/// `c_k` for `k = 0..=n`, as machine integers.
pub fn flood_counts(g: &Graph, cfg: &EnumerationConfig) -> Result<Vec<u64>> {
    let k = Kernel::new(g, cfg)?;
    Ok(run_chunks(cfg, k.chunks(), |c| k.count_chunk(c), add_counts))
}

pub fn flood_polynomial(g: &Graph) -> Result<IntPolynomial> {
    flood_polynomial_with(g, &EnumerationConfig::default())
}

pub fn flood_polynomial_with(g: &Graph, cfg: &EnumerationConfig) -> Result<IntPolynomial> {
    Ok(IntPolynomial::from_u64s(&flood_counts(g, cfg)?))
}

/// Sorted by size, then lexicographically.
pub fn minimal_flooding_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    minimal_flooding_sets_with(g, &EnumerationConfig::default())
}

pub fn minimal_flooding_sets_with(g: &Graph, cfg: &EnumerationConfig) -> Result<Vec<VertexSet>> {
    let k = Kernel::new(g, cfg)?;
    let masks = run_chunks(cfg, k.chunks(), |c| k.minimal_chunk(c), concat);
    Ok(sorted_sets(g.n(), masks))
}

/// Every flooding seed set, sorted by size then lexicographically.
pub fn flooding_sets(g: &Graph, cfg: &EnumerationConfig) -> Result<Vec<VertexSet>> {
    let k = Kernel::new(g, cfg)?;
    let masks = run_chunks(cfg, k.chunks(), |c| k.flooding_chunk(c), concat);
    Ok(sorted_sets(g.n(), masks))
}

fn free_from_minimal(n: usize, minimal: &[VertexSet]) -> VertexSet {
    minimal
        .iter()
        .fold(VertexSet::full(n), |acc, m| acc.difference(m))
}

/// Vertices that belong to no minimal flooding set.
pub fn free_vertices(g: &Graph) -> Result<VertexSet> {
    free_vertices_with(g, &EnumerationConfig::default())
}

pub fn free_vertices_with(g: &Graph, cfg: &EnumerationConfig) -> Result<VertexSet> {
    Ok(free_from_minimal(g.n(), &minimal_flooding_sets_with(g, cfg)?))
}

pub fn flood_summary(g: &Graph) -> Result<FloodSummary> {
    flood_summary_with(g, &EnumerationConfig::default())
}

/// Polynomial, minimal sets and free vertices from a single scan.
pub fn flood_summary_with(g: &Graph, cfg: &EnumerationConfig) -> Result<FloodSummary> {
    let k = Kernel::new(g, cfg)?;
    let (counts, minimal) = run_chunks(
        cfg,
        k.chunks(),
        |c| k.summary_chunk(c),
        |a, b| (add_counts(a.0, b.0), concat(a.1, b.1)),
    );
    let polynomial = IntPolynomial::from_u64s(&counts);
    let minimal_sets = sorted_sets(g.n(), minimal);
    Ok(FloodSummary {
        flood_set_size: polynomial.eval_i64(1),
        free_vertices: free_from_minimal(g.n(), &minimal_sets),
        minimal_sets,
        polynomial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    fn set(n: usize, one_indexed: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, one_indexed.iter().map(|v| v - 1)).unwrap()
    }

    /// Plain loop over all 2^n masks with the generic closure.
    fn oracle_counts(g: &Graph) -> Vec<u64> {
        let n = g.n();
        let mut counts = vec![0u64; n + 1];
        for mask in 0u64..1 << n {
            let c = VertexSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1)).unwrap();
            if cascade::trace(g, &c).floods() {
                counts[c.len()] += 1;
            }
        }
        counts
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(flood_polynomial(&cycle(4)).unwrap(), IntPolynomial::from_i64s(&[0, 0, 2, 4, 1]));
        assert_eq!(flood_polynomial(&path(1)).unwrap(), IntPolynomial::x());
        assert_eq!(
            flood_polynomial(&cycle(5)).unwrap(),
            IntPolynomial::from_i64s(&[0, 0, 0, 5, 5, 1])
        );
        assert_eq!(flood_polynomial(&Graph::empty(0)).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn kernel_matches_plain_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(1..=10);
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        e.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &e).unwrap();
            assert_eq!(
                flood_counts(&g, &EnumerationConfig::sequential()).unwrap(),
                oracle_counts(&g)
            );
        }
    }

    #[test]
    fn minimal_sets_of_paths() {
        assert_eq!(
            minimal_flooding_sets(&path(5)).unwrap(),
            vec![set(5, &[1, 3, 5]), set(5, &[1, 2, 4, 5])]
        );
        assert_eq!(minimal_flooding_sets(&path(8)).unwrap().len(), 5);
        let g = path(4).disjoint_union(&cycle(4));
        assert_eq!(minimal_flooding_sets(&g).unwrap().len(), 4);
    }

    #[test]
    fn free_vertex_examples() {
        // two free vertices (v3, v5 here), neither adjacent to two leaves
        let g = Graph::from_edge_list(6, &[(0, 2), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        assert_eq!(free_vertices(&g).unwrap(), VertexSet::from_indices(6, [2, 4]).unwrap());
        assert!(free_vertices(&path(6)).unwrap().is_empty());
        // centre of a star with two leaves and one longer arm
        let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert!(free_vertices(&star).unwrap().contains(0));
    }

    #[test]
    fn summaries() {
        let s = flood_summary(&cycle(4)).unwrap();
        assert_eq!(s.polynomial, IntPolynomial::from_i64s(&[0, 0, 2, 4, 1]));
        assert_eq!(s.flood_set_size, BigInt::from(7));
        let s = flood_summary(&path(1)).unwrap();
        assert_eq!(s.flood_set_size, BigInt::from(1));
        assert_eq!(s.minimal_sets, vec![set(1, &[1])]);
        let s = flood_summary(&path(3).disjoint_union(&cycle(3))).unwrap();
        assert_eq!(s.polynomial, IntPolynomial::from_i64s(&[0, 0, 0, 0, 3, 4, 1]));
        assert_eq!(s.free_vertices, set(6, &[2]));
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = EnumerationConfig::default().with_cap(5);
        assert_eq!(
            flood_polynomial_with(&path(6), &cfg),
            Err(FloodError::TooLarge { n: 6, cap: 5 })
        );
        assert!(flood_polynomial(&path(29)).is_err());
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let g = cycle(7).disjoint_union(&path(6));
        let base = flood_summary_with(&g, &EnumerationConfig::sequential()).unwrap();
        for t in [2, 3, 8] {
            assert_eq!(flood_summary_with(&g, &EnumerationConfig::with_threads(t)).unwrap(), base);
        }
    }
}
