//! Graph family generators, integer compositions, and the family-spec
//! grammar used on the command line.

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{FloodError, Result};
use crate::graph::{parse_edge_list, parse_graph6, Graph};

fn invalid(msg: impl Into<String>) -> FloodError {
    FloodError::InvalidParameter(msg.into())
}

/// A nonempty sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid("a composition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(invalid("composition parts must be positive"));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Partial sums without the final one: a subset of `1..sum`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.0[..self.0.len() - 1]
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// The partition with the same parts, largest first.
    pub fn sorted_parts(&self) -> Vec<usize> {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    /// True if some part strictly between the first and last is `<= bound`.
    pub fn has_small_interior_part(&self, bound: usize) -> bool {
        self.0.len() > 2 && self.0[1..self.0.len() - 1].iter().any(|&p| p <= bound)
    }
}

/// Inverse of [`Composition::descent_set`]: the composition of `n` whose
/// partial sums are the members of `s`.
pub fn co(s: &BTreeSet<usize>, n: usize) -> Result<Composition> {
    if n == 0 {
        return Err(FloodError::OutOfRange("compositions of 0 are not supported".into()));
    }
    if let Some(&bad) = s.iter().find(|&&d| d == 0 || d >= n) {
        return Err(FloodError::OutOfRange(format!("{bad} is not in 1..{n}")));
    }
    let mut parts = Vec::with_capacity(s.len() + 1);
    let mut prev = 0;
    for &d in s.iter().chain(std::iter::once(&n)) {
        parts.push(d - prev);
        prev = d;
    }
    Ok(Composition(parts))
}

/// `co` on a bitmask over `1..n`: bit `i - 1` stands for `i`.
fn co_mask(mask: u64, n: usize) -> Composition {
    let mut parts = Vec::with_capacity(mask.count_ones() as usize + 1);
    let mut prev = 0;
    let mut rest = mask;
    while rest != 0 {
        let d = rest.trailing_zeros() as usize + 1;
        rest &= rest - 1;
        parts.push(d - prev);
        prev = d;
    }
    parts.push(n - prev);
    Composition(parts)
}

/// All compositions of `n >= 1`, ordered by descent-set bitmask.
pub fn compositions(n: usize) -> impl Iterator<Item = Composition> {
    assert!((1..=63).contains(&n), "compositions of {n} not supported");
    (0u64..1 << (n - 1)).map(move |m| co_mask(m, n))
}

/// Compositions of `n + 1` with an interior part of size at most 4, ordered
/// by descent-set bitmask. Streamed; nothing is materialised.
pub fn comp_n_4(n: usize) -> impl Iterator<Item = Composition> {
    compositions(n + 1).filter(|a| a.has_small_interior_part(4))
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `1,2,2` or `(1,2,2)`.
impl FromStr for Composition {
    type Err = FloodError;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| FloodError::Syntax(format!("bad composition part `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

fn labelled(n: usize, edges: &[(usize, usize)], labels: Vec<String>) -> Graph {
    Graph::from_edge_list(n, edges)
        .and_then(|g| g.with_labels(labels))
        .expect("generator edges are valid")
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn spine_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v_{i}")).collect()
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("path needs n >= 1"));
    }
    Ok(labelled(n, &path_edges(n), spine_labels(n)))
}

/// The `m x n` grid; `v_{i,j}` is vertex `(i-1)*n + (j-1)`.
pub fn parallel_path(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(invalid("parallel path needs m, n >= 1"));
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if j + 1 < n {
                edges.push((idx(i, j), idx(i, j + 1)));
            }
            if i + 1 < m {
                edges.push((idx(i, j), idx(i + 1, j)));
            }
        }
    }
    let labels = (1..=m)
        .flat_map(|i| (1..=n).map(move |j| format!("v_{{{i},{j}}}")))
        .collect();
    Ok(labelled(m * n, &edges, labels))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    let mut edges = path_edges(n);
    edges.push((n - 1, 0));
    Ok(labelled(n, &edges, spine_labels(n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        edges.extend((u + 1..n).map(|v| (u, v)));
    }
    Ok(labelled(n, &edges, spine_labels(n)))
}

/// `v_i ~ v_j` whenever `0 < |i - j| <= 2`.
pub fn triangle_mosaic(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("triangle mosaic needs n >= 1"));
    }
    let mut edges = path_edges(n);
    edges.extend((2..n).map(|i| (i - 2, i)));
    Ok(labelled(n, &edges, spine_labels(n)))
}

/// Spine plus four pendant leaves at each (1-indexed) spine position in
/// `anchors`, in order.
fn decorate(n: usize, mut edges: Vec<(usize, usize)>, anchors: &[usize], tag: impl Fn(usize) -> usize) -> Graph {
    let mut labels = spine_labels(n);
    let mut next = n;
    for &a in anchors {
        for k in 1..=4 {
            edges.push((a - 1, next));
            labels.push(format!("l_{{{},{k}}}", tag(a)));
            next += 1;
        }
    }
    labelled(next, &edges, labels)
}

/// Path on `sum(α) + 1` vertices with four leaves at `v_{d+1}` for each
/// descent `d` of `α`.
pub fn centipede(alpha: &Composition) -> Result<Graph> {
    let n = alpha.sum() + 1;
    if n < 3 {
        return Err(invalid("centipede needs a composition of at least 2"));
    }
    let anchors: Vec<_> = alpha.descent_set().iter().map(|d| d + 1).collect();
    Ok(decorate(n, path_edges(n), &anchors, |a| a - 1))
}

/// Cycle on `sum(α)` vertices with four leaves at `v_d` for each descent `d`
/// of `α` and at `v_n`.
pub fn tick(alpha: &Composition) -> Result<Graph> {
    let n = alpha.sum();
    if n < 3 {
        return Err(invalid("tick needs a composition of at least 3"));
    }
    let mut anchors: Vec<_> = alpha.descent_set().into_iter().collect();
    anchors.push(n);
    let mut edges = path_edges(n);
    edges.push((n - 1, 0));
    Ok(decorate(n, edges, &anchors, |a| a))
}

/// One generator call in a family spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyAtom {
    Path(usize),
    Grid(usize, usize),
    Cycle(usize),
    Complete(usize),
    Triangle(usize),
    Centipede(Composition),
    Tick(Composition),
    Empty(usize),
    EdgeList(PathBuf),
    Graph6(String),
}

impl FamilyAtom {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilyAtom::Path(n) => path(*n),
            FamilyAtom::Grid(m, n) => parallel_path(*m, *n),
            FamilyAtom::Cycle(n) => cycle(*n),
            FamilyAtom::Complete(n) => complete(*n),
            FamilyAtom::Triangle(n) => triangle_mosaic(*n),
            FamilyAtom::Centipede(a) => centipede(a),
            FamilyAtom::Tick(a) => tick(a),
            FamilyAtom::Empty(n) => Ok(Graph::empty(*n)),
            FamilyAtom::EdgeList(p) => parse_edge_list(&std::fs::read_to_string(p)?),
            FamilyAtom::Graph6(s) => parse_graph6(s),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self {
            FamilyAtom::Path(n) | FamilyAtom::Complete(n) | FamilyAtom::Triangle(n) => *n >= 1,
            FamilyAtom::Grid(m, n) => *m >= 1 && *n >= 1,
            FamilyAtom::Cycle(n) => *n >= 3,
            FamilyAtom::Centipede(a) => a.sum() + 1 >= 3,
            FamilyAtom::Tick(a) => a.sum() >= 3,
            FamilyAtom::Empty(_) | FamilyAtom::EdgeList(_) | FamilyAtom::Graph6(_) => true,
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!("`{self}` is outside the family's parameter range")))
        }
    }
}

impl fmt::Display for FamilyAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = |a: &Composition| {
            a.parts().iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        };
        match self {
            FamilyAtom::Path(n) => write!(f, "path:{n}"),
            FamilyAtom::Grid(m, n) => write!(f, "grid:{m}x{n}"),
            FamilyAtom::Cycle(n) => write!(f, "cycle:{n}"),
            FamilyAtom::Complete(n) => write!(f, "complete:{n}"),
            FamilyAtom::Triangle(n) => write!(f, "triangle:{n}"),
            FamilyAtom::Centipede(a) => write!(f, "centipede:{}", parts(a)),
            FamilyAtom::Tick(a) => write!(f, "tick:{}", parts(a)),
            FamilyAtom::Empty(n) => write!(f, "empty:{n}"),
            FamilyAtom::EdgeList(p) => write!(f, "edgelist:{}", p.display()),
            FamilyAtom::Graph6(s) => write!(f, "g6:{s}"),
        }
    }
}

/// A disjoint union of family atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub atoms: Vec<FamilyAtom>,
}

impl FamilySpec {
    /// Folds the atoms left to right with disjoint union.
    pub fn build(&self) -> Result<Graph> {
        let mut atoms = self.atoms.iter();
        let first = atoms.next().expect("a spec holds at least one atom").build()?;
        atoms.try_fold(first, |acc, a| Ok(acc.disjoint_union(&a.build()?)))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atoms: Vec<_> = self.atoms.iter().map(ToString::to_string).collect();
        f.write_str(&atoms.join(" + "))
    }
}

fn parse_count(s: &str, whole: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| FloodError::Syntax(format!("expected a count, got `{s}` in `{whole}`")))
}

fn parse_atom(text: &str) -> Result<FamilyAtom> {
    let text = text.trim();
    if let Some(file) = text.strip_prefix('@') {
        return Ok(FamilyAtom::EdgeList(PathBuf::from(file.trim())));
    }
    let (name, arg) = text
        .split_once(':')
        .ok_or_else(|| FloodError::Syntax(format!("expected `family:params`, got `{text}`")))?;
    let atom = match name.trim() {
        "path" => FamilyAtom::Path(parse_count(arg, text)?),
        "cycle" => FamilyAtom::Cycle(parse_count(arg, text)?),
        "complete" => FamilyAtom::Complete(parse_count(arg, text)?),
        "triangle" => FamilyAtom::Triangle(parse_count(arg, text)?),
        "empty" => FamilyAtom::Empty(parse_count(arg, text)?),
        "grid" => {
            let (m, n) = arg
                .split_once(['x', 'X', '×'])
                .ok_or_else(|| FloodError::Syntax(format!("grid needs `m x n`, got `{text}`")))?;
            FamilyAtom::Grid(parse_count(m, text)?, parse_count(n, text)?)
        }
        "centipede" => FamilyAtom::Centipede(arg.parse()?),
        "tick" => FamilyAtom::Tick(arg.parse()?),
        "edgelist" => FamilyAtom::EdgeList(PathBuf::from(arg.trim())),
        "g6" | "graph6" => FamilyAtom::Graph6(arg.trim().to_string()),
        other => return Err(FloodError::Syntax(format!("unknown family `{other}`"))),
    };
    atom.validate()?;
    Ok(atom)
}

/// Parses `atom (⊕ atom)*`; `+` is accepted for `⊕`.
pub fn parse_family(text: &str) -> Result<FamilySpec> {
    let atoms = text
        .split(['⊕', '+'])
        .map(parse_atom)
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilySpec { atoms })
}

impl FromStr for FamilySpec {
    type Err = FloodError;
    fn from_str(s: &str) -> Result<Self> {
        parse_family(s)
    }
}
