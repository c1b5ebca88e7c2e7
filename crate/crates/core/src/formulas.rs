//! Closed forms and recursions for flood polynomials of graph families.
//!
//! Nothing here enumerates seed sets; every value is built from polynomial
//! arithmetic alone so it can be checked against the brute force.

use num_bigint::BigInt;

use crate::error::{FloodError, Result};
use crate::families::{comp_n_4, Composition, FamilyAtom, FamilySpec};
use crate::graph::Graph;
use crate::poly::IntPolynomial;

/// Largest triangle-mosaic size summed literally over compositions.
pub const TRIANGLE_CAP: usize = 24;

fn invalid(msg: impl Into<String>) -> FloodError {
    FloodError::InvalidParameter(msg.into())
}

/// Runs `next = x*prev + x*prev2` from the two seeds until index `n`.
fn x_recurrence(seed0: IntPolynomial, seed1: IntPolynomial, first: usize, n: usize) -> IntPolynomial {
    if n == first {
        return seed0;
    }
    let (mut prev2, mut prev) = (seed0, seed1);
    for _ in first + 2..=n {
        let next = (&prev + &prev2).shift(1);
        prev2 = std::mem::replace(&mut prev, next);
    }
    prev
}

/// `f_0 = 0`, `f_1 = x`, `f_n = x f_{n-1} + x f_{n-2}`.
pub fn fibonacci_poly(n: usize) -> IntPolynomial {
    x_recurrence(IntPolynomial::zero(), IntPolynomial::x(), 0, n)
}

/// `L_0 = 2`, `L_1 = x`, `L_n = x L_{n-1} + x L_{n-2}`.
pub fn lucas_poly(n: usize) -> IntPolynomial {
    x_recurrence(IntPolynomial::constant(BigInt::from(2)), IntPolynomial::x(), 0, n)
}

/// Path recursion from `F(P_1) = x`, `F(P_2) = x^2`.
pub fn path_flood_poly(n: usize) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(invalid("path needs n >= 1"));
    }
    Ok(x_recurrence(IntPolynomial::x(), IntPolynomial::monomial(2), 1, n))
}

/// Cycle recursion from `F(O_3) = x^3 + 3x^2`, `F(O_4) = x^4 + 4x^3 + 2x^2`.
pub fn cycle_flood_poly(n: usize) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Ok(x_recurrence(
        IntPolynomial::from_i64s(&[0, 0, 3, 1]),
        IntPolynomial::from_i64s(&[0, 0, 2, 4, 1]),
        3,
        n,
    ))
}

/// Seed sets of the `2 x n` grid meeting every necessary column condition:
/// `A_n = (x^2 + 2x)(A_{n-1} + A_{n-2})`.
pub fn a_poly(n: usize) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(invalid("A_n needs n >= 1"));
    }
    let col = IntPolynomial::from_i64s(&[0, 2, 1]);
    let (mut prev2, mut prev) = (col.clone(), &col * &col);
    if n == 1 {
        return Ok(prev2);
    }
    for _ in 3..=n {
        let next = &col * &(&prev + &prev2);
        prev2 = std::mem::replace(&mut prev, next);
    }
    Ok(prev)
}

/// The non-flooding ones among those: `B_n = x (B_{n-1} + 2 B_{n-2})`.
pub fn b_poly(n: usize) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(invalid("B_n needs n >= 1"));
    }
    let two = IntPolynomial::constant(BigInt::from(2));
    let (mut prev2, mut prev) = (
        IntPolynomial::from_i64s(&[0, 2]),
        IntPolynomial::from_i64s(&[0, 0, 2]),
    );
    if n == 1 {
        return Ok(prev2);
    }
    for _ in 3..=n {
        let next = (&prev + &(&two * &prev2)).shift(1);
        prev2 = std::mem::replace(&mut prev, next);
    }
    Ok(prev)
}

/// `F(P_{2,n}) = A_n - B_n`.
pub fn parallel_path_2n_poly(n: usize) -> Result<IntPolynomial> {
    Ok(a_poly(n)? - b_poly(n)?)
}

/// `F(P_{m,n})` where a closed form exists: `min(m, n) <= 2`.
pub fn parallel_path_poly(m: usize, n: usize) -> Result<IntPolynomial> {
    match (m.min(n), m.max(n)) {
        (0, _) => Err(invalid("parallel path needs m, n >= 1")),
        (1, k) => path_flood_poly(k),
        (2, k) => parallel_path_2n_poly(k),
        _ => Err(invalid(format!(
            "no closed form for the {m}x{n} grid; only brute force is available"
        ))),
    }
}

/// How [`triangle_mosaic_poly_by`] evaluates the composition sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleMethod {
    /// Adds `x^(len-1)` for each member of `comp_n_4(n)`.
    CompositionSum,
    /// Counts directly: of the `C(n, k)` index sets of size `k`, exactly
    /// `C(n - 4(k-1), k)` have all gaps at least 5.
    Counting,
}

pub fn triangle_mosaic_poly(n: usize) -> Result<IntPolynomial> {
    triangle_mosaic_poly_by(n, TriangleMethod::CompositionSum)
}

/// `T_1` is a single vertex, whose polynomial `x` the composition sum does not
/// produce, so `n = 1` is answered directly.
pub fn triangle_mosaic_poly_by(n: usize, method: TriangleMethod) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(invalid("triangle mosaic needs n >= 1"));
    }
    if n == 1 {
        return Ok(IntPolynomial::x());
    }
    match method {
        TriangleMethod::CompositionSum => {
            if n > TRIANGLE_CAP {
                return Err(FloodError::TooLarge { n, cap: TRIANGLE_CAP });
            }
            let mut counts = vec![0u64; n + 1];
            for alpha in comp_n_4(n) {
                counts[alpha.len() - 1] += 1;
            }
            Ok(IntPolynomial::from_u64s(&counts))
        }
        TriangleMethod::Counting => {
            let coeffs = (0..=n)
                .map(|k| {
                    let spread = if k == 0 { n + 4 } else { (n + 4).saturating_sub(4 * k) };
                    binomial(n, k) - binomial(spread, k)
                })
                .collect();
            Ok(IntPolynomial::new(coeffs))
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn p3_poly() -> IntPolynomial {
    IntPolynomial::from_i64s(&[0, 0, 1, 1])
}

fn fib_product(alpha: &Composition) -> IntPolynomial {
    alpha.parts().iter().map(|&a| fibonacci_poly(a + 1)).product()
}

/// `(x^3 + x^2)^(len-1) * prod f_{a_j + 1}`.
pub fn centipede_poly(alpha: &Composition) -> Result<IntPolynomial> {
    if alpha.sum() + 1 < 3 {
        return Err(invalid("centipede needs a composition of at least 2"));
    }
    Ok(&p3_poly().pow(alpha.len() as u32 - 1) * &fib_product(alpha))
}

/// `(x^3 + x^2)^len * prod f_{a_j + 1}`.
pub fn tick_poly(alpha: &Composition) -> Result<IntPolynomial> {
    if alpha.sum() < 3 {
        return Err(invalid("tick needs a composition of at least 3"));
    }
    Ok(&p3_poly().pow(alpha.len() as u32) * &fib_product(alpha))
}

/// `(f_n, L_n)`, whose product is `F(P_{2n})`.
pub fn even_path_factorization(n: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    if n < 3 {
        return Err(invalid("even path factorization needs n >= 3"));
    }
    Ok((fibonacci_poly(n), lucas_poly(n)))
}

/// Vertex chosen for a leaf reduction, with its neighbours split into the
/// leaves kept, the two leaves moved to the new `P_3`, and the partners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionSite {
    pub vertex: usize,
    pub kept_leaves: Vec<usize>,
    pub moved_leaves: [usize; 2],
    pub partners: Vec<usize>,
}

/// First vertex (by index) of degree `2m + 2`, `m >= 1`, with at least
/// `m + 2` leaf neighbours. The lowest-indexed `m + 2` leaves play the leaf
/// role; every other neighbour is a partner.
pub fn find_reduction_site(g: &Graph) -> Option<ReductionSite> {
    (0..g.n()).find_map(|v| {
        let d = g.neighbors(v).len();
        if d < 4 || d % 2 == 1 {
            return None;
        }
        let m = (d - 2) / 2;
        let (leaves, others): (Vec<usize>, Vec<usize>) = g
            .neighbors(v)
            .iter()
            .partition(|&w| g.neighbors(w).len() == 1);
        if leaves.len() < m + 2 {
            return None;
        }
        let mut partners = others;
        partners.extend_from_slice(&leaves[m + 2..]);
        partners.sort_unstable();
        Some(ReductionSite {
            vertex: v,
            kept_leaves: leaves[..m].to_vec(),
            moved_leaves: [leaves[m], leaves[m + 1]],
            partners,
        })
    })
}

/// Rewrites `G` into `G' ⊕ P_3` with the same flood polynomial: the chosen
/// vertex and two of its leaves become a separate `P_3` appended at the end,
/// and each remaining leaf is joined to one partner, both in index order.
pub fn leaf_reduction(g: &Graph) -> Result<Graph> {
    let site = find_reduction_site(g).ok_or(FloodError::NotApplicable)?;
    let v = site.vertex;
    let [a, b] = site.moved_leaves;
    let moved = [a, v, b];

    let mut order: Vec<usize> = (0..g.n()).filter(|w| !moved.contains(w)).collect();
    order.extend(moved);
    let mut index = vec![0; g.n()];
    for (i, &w) in order.iter().enumerate() {
        index[w] = i;
    }

    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(x, y)| x != v && y != v)
        .map(|(x, y)| (index[x], index[y]))
        .collect();
    for (&l, &p) in site.kept_leaves.iter().zip(&site.partners) {
        edges.push((index[l], index[p]));
    }
    edges.push((index[a], index[v]));
    edges.push((index[v], index[b]));

    let out = Graph::from_edge_list(g.n(), &edges)?;
    match g.labels() {
        Some(_) => out.with_labels(order.iter().map(|&w| g.label(w)).collect()),
        None => Ok(out),
    }
}

/// Applies [`leaf_reduction`] until it no longer applies. Returns every
/// intermediate graph, starting with `g` itself.
pub fn reduce_fully(g: &Graph) -> Vec<Graph> {
    let mut chain = vec![g.clone()];
    while let Ok(next) = leaf_reduction(chain.last().unwrap()) {
        chain.push(next);
    }
    chain
}

/// Formula value for one family atom; `None` when no closed form covers it.
pub fn formula_for_atom(atom: &FamilyAtom) -> Option<Result<IntPolynomial>> {
    Some(match atom {
        FamilyAtom::Path(n) => path_flood_poly(*n),
        FamilyAtom::Cycle(n) => cycle_flood_poly(*n),
        FamilyAtom::Grid(m, n) if (*m).min(*n) <= 2 => parallel_path_poly(*m, *n),
        FamilyAtom::Triangle(n) => triangle_mosaic_poly(*n),
        FamilyAtom::Centipede(a) => centipede_poly(a),
        FamilyAtom::Tick(a) => tick_poly(a),
        FamilyAtom::Empty(n) => Ok(IntPolynomial::monomial(*n)),
        _ => return None,
    })
}

/// Product of the atom formulas, or `None` if some atom has none.
pub fn formula_for(spec: &FamilySpec) -> Option<Result<IntPolynomial>> {
    let mut acc = IntPolynomial::one();
    for atom in &spec.atoms {
        match formula_for_atom(atom)? {
            Ok(p) => acc = &acc * &p,
            Err(e) => return Some(Err(e)),
        }
    }
    Some(Ok(acc))
}
