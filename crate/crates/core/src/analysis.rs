//! Reading structure back out of a flood polynomial, and searching for
//! non-isomorphic graphs that share one.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::enumeration::{flood_polynomial_with, flood_summary_with, EnumerationConfig};
use crate::error::{FloodError, Result};
use crate::formulas::binomial;
use crate::graph::{parse_graph6, CanonicalForm, Graph, CANONICAL_CAP};
use crate::poly::IntPolynomial;

/// Facts recoverable from the coefficients alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyFacts {
    pub n: usize,
    #[serde(serialize_with = "as_decimal")]
    pub flood_count: BigInt,
    pub leaves_plus_isolated: usize,
    pub trigger_count: usize,
    pub free_vertex_upper_bound: usize,
    /// `c_{n-3}`, reported as is.
    #[serde(serialize_with = "as_decimal")]
    pub c_n_minus_3: BigInt,
}

fn as_decimal<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn malformed(msg: impl Into<String>) -> FloodError {
    FloodError::MalformedPolynomial(msg.into())
}

/// Rejects anything that cannot be the flood polynomial of a graph on
/// `deg p` vertices before reading the coefficients.
pub fn facts_from_polynomial(p: &IntPolynomial) -> Result<PolyFacts> {
    let n = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(malformed("degree must be at least 1")),
    };
    if p.leading() != Some(&BigInt::from(1)) {
        return Err(malformed("not monic"));
    }
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_negative() {
            return Err(malformed(format!("negative coefficient of x^{k}")));
        }
        if *c > binomial(n, k) {
            return Err(malformed(format!("coefficient of x^{k} exceeds C({n},{k})")));
        }
    }
    if p.coeff(0) > BigInt::from(1) {
        return Err(malformed("constant term must be 0 or 1"));
    }

    let c = |k: Option<usize>| k.map_or_else(BigInt::zero, |k| p.coeff(k));
    let leaves = n - c(n.checked_sub(1)).to_usize().expect("bounded by n");
    let big = BigInt::from;
    let triggers = binomial(n, 2) - big(n - 1) * big(leaves) + binomial(leaves, 2)
        - c(n.checked_sub(2));
    let trigger_count = triggers
        .to_usize()
        .ok_or_else(|| malformed("coefficients imply a negative trigger count"))?;

    Ok(PolyFacts {
        n,
        flood_count: p.eval_i64(1),
        leaves_plus_isolated: leaves,
        trigger_count,
        free_vertex_upper_bound: p.multiplicity_x_plus_1()?,
        c_n_minus_3: c(n.checked_sub(3)),
    })
}

/// Graphs sharing one polynomial, identified by canonical graph6 strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceClass {
    pub polynomial: IntPolynomial,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub classes: Vec<EquivalenceClass>,
    /// Graphs beyond the enumeration or canonicalization limit.
    pub skipped: usize,
    pub examined: usize,
}

impl EquivalenceReport {
    pub fn class_of(&self, p: &IntPolynomial) -> Option<&EquivalenceClass> {
        self.classes.iter().find(|c| &c.polynomial == p)
    }
}

/// Groups graphs by exact polynomial, merges isomorphic copies, and keeps the
/// groups with at least two non-isomorphic members. Classes are ordered by
/// degree, then coefficients; members by canonical string.
pub fn find_equivalent<I>(graphs: I, cfg: &EnumerationConfig) -> Result<EquivalenceReport>
where
    I: IntoIterator<Item = Graph>,
{
    let mut groups: BTreeMap<(usize, IntPolynomial), BTreeSet<CanonicalForm>> = BTreeMap::new();
    let mut report = EquivalenceReport::default();
    for g in graphs {
        report.examined += 1;
        let keyed = g
            .canonical_form()
            .and_then(|cf| Ok((flood_polynomial_with(&g, cfg)?, cf)));
        match keyed {
            Ok((p, cf)) => {
                groups.entry((g.n(), p)).or_default().insert(cf);
            }
            Err(FloodError::TooLarge { .. }) => report.skipped += 1,
            Err(e) => return Err(e),
        }
    }
    report.classes = groups
        .into_iter()
        .filter(|(_, members)| members.len() >= 2)
        .map(|((_, polynomial), members)| EquivalenceClass {
            polynomial,
            members: members.into_iter().map(|cf| cf.graph6().to_string()).collect(),
        })
        .collect();
    Ok(report)
}

/// One representative per isomorphism class of graphs on `n` vertices, each
/// in canonical labelling, sorted by canonical string.
///
/// Built by adding a vertex with every possible neighbourhood to each graph
/// on `n - 1` vertices and deduplicating, which avoids walking all
/// `2^(n(n-1)/2)` labelled graphs.
pub fn non_isomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CANONICAL_CAP {
        return Err(FloodError::TooLarge { n, cap: CANONICAL_CAP });
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(Graph::empty(0).canonical_form()?);
    for k in 1..=n {
        let prev: Vec<Graph> = level
            .iter()
            .map(|cf| parse_graph6(cf.graph6()))
            .collect::<Result<_>>()?;
        let mut next = BTreeSet::new();
        for g in &prev {
            let base = g.edges();
            for mask in 0u64..1 << (k - 1) {
                let mut edges = base.clone();
                edges.extend((0..k - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, k - 1)));
                next.insert(Graph::from_edge_list(k, &edges)?.canonical_form()?);
            }
        }
        level = next;
    }
    level.iter().map(|cf| parse_graph6(cf.graph6())).collect()
}

/// One structural law checked against direct computation on the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: &'static str,
    pub from_polynomial: String,
    pub from_graph: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub polynomial: IntPolynomial,
    pub facts: PolyFacts,
    pub checks: Vec<LawCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn check(law: &'static str, from_polynomial: impl ToString, from_graph: impl ToString, pass: bool) -> LawCheck {
    LawCheck {
        law,
        from_polynomial: from_polynomial.to_string(),
        from_graph: from_graph.to_string(),
        pass,
    }
}

/// Computes the polynomial of `g` and compares each coefficient readout with
/// the matching structural query.
pub fn verify_graph(g: &Graph, cfg: &EnumerationConfig) -> Result<VerifyReport> {
    if g.n() == 0 {
        return Err(FloodError::InvalidParameter("graph has no vertices".into()));
    }
    let summary = flood_summary_with(g, cfg)?;
    let facts = facts_from_polynomial(&summary.polynomial)?;
    let leaves = g.leaves_and_isolated().len();
    let triggers = g.triggers().len();
    let free = summary.free_vertices.len();
    let checks = vec![
        check("vertex count", facts.n, g.n(), facts.n == g.n()),
        check(
            "flood count",
            &facts.flood_count,
            &summary.flood_set_size,
            facts.flood_count == summary.flood_set_size,
        ),
        check("leaves+isolated", facts.leaves_plus_isolated, leaves, facts.leaves_plus_isolated == leaves),
        check("triggers", facts.trigger_count, triggers, facts.trigger_count == triggers),
        check(
            "free vertices <= (x+1)-multiplicity",
            facts.free_vertex_upper_bound,
            free,
            free <= facts.free_vertex_upper_bound,
        ),
    ];
    Ok(VerifyReport { polynomial: summary.polynomial, facts, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, parse_family, path};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn cycle_four_facts() {
        let f = facts_from_polynomial(&p(&[0, 0, 2, 4, 1])).unwrap();
        assert_eq!((f.n, f.leaves_plus_isolated, f.trigger_count), (4, 0, 4));
        assert_eq!(f.flood_count, BigInt::from(7));
        assert_eq!(f.c_n_minus_3, BigInt::from(0));
    }

    #[test]
    fn two_vertex_facts() {
        let f = facts_from_polynomial(&p(&[0, 0, 1])).unwrap();
        assert_eq!((f.n, f.leaves_plus_isolated, f.trigger_count), (2, 2, 0));
        let f = facts_from_polynomial(&IntPolynomial::x()).unwrap();
        assert_eq!((f.n, f.leaves_plus_isolated, f.trigger_count), (1, 1, 0));
    }

    #[test]
    fn free_bound_from_factorization() {
        let poly = IntPolynomial::monomial(3) * p(&[2, 1]) * p(&[1, 1]).pow(2);
        assert_eq!(facts_from_polynomial(&poly).unwrap().free_vertex_upper_bound, 2);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [p(&[0, 0, 2]), p(&[3]), p(&[0, -1, 1]), p(&[2, 0, 1]), p(&[0, 0, 0, 7, 1])] {
            assert!(
                matches!(facts_from_polynomial(&bad), Err(FloodError::MalformedPolynomial(_))),
                "{bad}"
            );
        }
        assert!(facts_from_polynomial(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn small_graph_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| non_isomorphic_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn two_vertex_class() {
        let rep = find_equivalent(non_isomorphic_graphs(2).unwrap(), &Default::default()).unwrap();
        assert_eq!(rep.classes.len(), 1);
        assert_eq!(rep.classes[0].polynomial, p(&[0, 0, 1]));
        assert_eq!(rep.classes[0].members.len(), 2);
    }

    #[test]
    fn explicit_pairs_group() {
        let graphs = ["path:6", "path:3 + cycle:3", "path:8", "path:4 + cycle:4", "cycle:5"]
            .iter()
            .map(|s| parse_family(s).unwrap().build().unwrap());
        let rep = find_equivalent(graphs, &Default::default()).unwrap();
        assert_eq!(rep.classes.len(), 2);
        let p6 = IntPolynomial::monomial(4) * p(&[1, 1]) * p(&[3, 1]);
        assert_eq!(rep.class_of(&p6).unwrap().members.len(), 2);
        assert_eq!(rep.class_of(&p(&[0, 0, 0, 0, 0, 4, 10, 6, 1])).unwrap().members.len(), 2);
    }

    #[test]
    fn isomorphic_copies_merge() {
        let a = path(4).unwrap();
        let b = a.permute(&[2, 0, 3, 1]).unwrap();
        let rep = find_equivalent([a, b], &Default::default()).unwrap();
        assert!(rep.classes.is_empty());
        assert_eq!(rep.examined, 2);
    }

    #[test]
    fn oversize_graphs_are_skipped() {
        let rep = find_equivalent([path(11).unwrap(), path(2).unwrap()], &Default::default()).unwrap();
        assert_eq!(rep.skipped, 1);
    }

    #[test]
    fn verify_examples() {
        let cfg = EnumerationConfig::default();
        assert!(verify_graph(&cycle(4).unwrap(), &cfg).unwrap().passed());
        let rep = verify_graph(&path(6).unwrap(), &cfg).unwrap();
        assert!(rep.passed());
        let free = rep.checks.iter().find(|c| c.law.starts_with("free")).unwrap();
        assert_eq!((free.from_polynomial.as_str(), free.from_graph.as_str()), ("1", "0"));
    }
}
