//! Threshold-2 flooding dynamics.
//!
//! An unflooded vertex floods once at least two of its neighbours are
//! flooded. All rounds are synchronous.

use crate::graph::{Graph, VertexSet};

/// The sequence `C0 ⊆ C1 ⊆ … ⊆ Ck` ending at the first fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeTrace {
    pub steps: Vec<VertexSet>,
    pub converged_at: usize,
}

impl CascadeTrace {
    pub fn closure(&self) -> &VertexSet {
        self.steps.last().expect("a trace holds at least C0")
    }

    pub fn floods(&self) -> bool {
        self.closure().is_full()
    }
}

/// One synchronous round.
pub fn cascade_step(g: &Graph, c: &VertexSet) -> VertexSet {
    if let (Some(adj), Some(mask)) = (g.masks(), c.as_mask()) {
        return VertexSet::from_mask(g.n(), step_mask(adj, mask));
    }
    let mut next = c.clone();
    for x in c.complement().iter() {
        if g.neighbors(x).intersection_len_at_most(c, 2) == 2 {
            next.insert(x);
        }
    }
    next
}

/// Least fixed point of [`cascade_step`] containing `c`.
pub fn closure(g: &Graph, c: &VertexSet) -> VertexSet {
    match (g.masks(), c.as_mask()) {
        (Some(adj), Some(mask)) => VertexSet::from_mask(g.n(), closure_mask(adj, mask)),
        _ => closure_worklist(g, c),
    }
}

pub fn floods(g: &Graph, c: &VertexSet) -> bool {
    closure(g, c).is_full()
}

pub fn trace(g: &Graph, c: &VertexSet) -> CascadeTrace {
    let mut steps = vec![c.clone()];
    loop {
        let last = steps.last().unwrap();
        let next = cascade_step(g, last);
        if &next == last {
            break;
        }
        steps.push(next);
    }
    CascadeTrace {
        converged_at: steps.len() - 1,
        steps,
    }
}

/// Single-word round: vertices seen by two flooded neighbours join.
#[inline]
pub(crate) fn step_mask(adj: &[u64], c: u64) -> u64 {
    let (mut once, mut twice) = (0u64, 0u64);
    let mut rest = c;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        twice |= once & adj[u];
        once |= adj[u];
    }
    c | twice
}

/// Single-word closure. Each vertex's adjacency is folded into the
/// "seen once" / "seen twice" accumulators exactly once, when it floods.
#[inline]
pub(crate) fn closure_mask(adj: &[u64], c: u64) -> u64 {
    let (mut once, mut twice) = (0u64, 0u64);
    let mut flooded = c;
    let mut frontier = c;
    while frontier != 0 {
        let mut rest = frontier;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice |= once & adj[u];
            once |= adj[u];
        }
        frontier = twice & !flooded;
        flooded |= frontier;
    }
    flooded
}

/// Multi-word closure with per-vertex flooded-neighbour counters saturating
/// at two.
fn closure_worklist(g: &Graph, c: &VertexSet) -> VertexSet {
    let mut flooded = c.clone();
    let mut hits = vec![0u8; g.n()];
    let mut frontier: Vec<usize> = c.iter().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in frontier {
            for w in g.neighbors(u).iter() {
                if flooded.contains(w) || hits[w] >= 2 {
                    continue;
                }
                hits[w] += 1;
                if hits[w] == 2 {
                    next.push(w);
                }
            }
        }
        for &w in &next {
            flooded.insert(w);
        }
        frontier = next;
    }
    flooded
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The eight-vertex example graph with seed {v1, v4, v6}.
    fn example() -> (Graph, VertexSet) {
        let e = [(1, 3), (1, 2), (2, 4), (3, 5), (3, 4), (4, 6), (5, 6), (6, 8), (7, 8), (5, 7)];
        let edges: Vec<_> = e.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        let g = Graph::from_edge_list(8, &edges).unwrap();
        (g, set(8, &[1, 4, 6]))
    }

    fn set(n: usize, one_indexed: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, one_indexed.iter().map(|v| v - 1)).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    #[test]
    fn example_step_and_closure() {
        let (g, c) = example();
        assert_eq!(cascade_step(&g, &c), set(8, &[1, 2, 3, 4, 6]));
        assert_eq!(closure(&g, &c), set(8, &[1, 2, 3, 4, 5, 6]));
        let t = trace(&g, &c);
        assert_eq!(t.converged_at, 2);
        assert_eq!(
            t.steps,
            vec![c.clone(), set(8, &[1, 2, 3, 4, 6]), set(8, &[1, 2, 3, 4, 5, 6])]
        );
        assert!(!t.floods());
    }

    #[test]
    fn trivial_seeds() {
        let (g, _) = example();
        let full = g.vertex_set();
        assert_eq!(cascade_step(&g, &full), full);
        let none = VertexSet::empty(8);
        assert_eq!(cascade_step(&g, &none), none);
        let t = trace(&g, &full);
        assert_eq!((t.steps.len(), t.converged_at), (1, 0));
    }

    #[test]
    fn two_vertices_flood_k6() {
        let mut e = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                e.push((u, v));
            }
        }
        let k6 = Graph::from_edge_list(6, &e).unwrap();
        for u in 0..6 {
            for v in u + 1..6 {
                assert!(floods(&k6, &VertexSet::from_indices(6, [u, v]).unwrap()));
            }
        }
    }

    #[test]
    fn square_seeds() {
        let c4 = cycle(4);
        assert!(floods(&c4, &set(4, &[1, 3])));
        assert!(floods(&c4, &set(4, &[2, 4])));
        assert!(!floods(&c4, &set(4, &[1, 2])));
    }

    #[test]
    fn singletons_never_flood_larger_graphs() {
        for g in [path(2), path(5), cycle(3), cycle(6)] {
            for v in 0..g.n() {
                assert!(!floods(&g, &VertexSet::from_indices(g.n(), [v]).unwrap()));
            }
        }
        assert!(floods(&path(1), &set(1, &[1])));
    }

    #[test]
    fn p5_alternating_seed() {
        let t = trace(&path(5), &set(5, &[1, 3, 5]));
        assert_eq!(t.converged_at, 1);
        assert!(t.floods());
    }

    #[test]
    fn worklist_matches_mask_closure_on_large_graph() {
        // 70-vertex triangle strip: exercises the multi-word path
        let n = 70;
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.extend((0..n - 2).map(|i| (i, i + 2)));
        let g = Graph::from_edge_list(n, &e).unwrap();
        let c = VertexSet::from_indices(n, [0, 1]).unwrap();
        let fixed = closure(&g, &c);
        assert!(fixed.is_full());
        assert_eq!(trace(&g, &c).closure(), &fixed);
        let sparse = VertexSet::from_indices(n, [0, 5, 40]).unwrap();
        assert_eq!(closure(&g, &sparse), trace(&g, &sparse).closure().clone());
    }
}
