//! Krausz covers: families of cliques that witness a graph being a line graph.
//!
//! A family of cliques of `G` is a valid cover for `(k, p)` when
//!
//! 1. every edge of `G` lies inside some member,
//! 2. every vertex lies in at most `k` members, and
//! 3. two distinct members share at most `p` vertices.
//!
//! Such a family turns into a hypergraph by taking the members (padded with
//! singletons until every vertex has load exactly `k`) as hypergraph vertices
//! and, for each graph vertex `v`, the set of members containing `v` as a
//! hyperedge. Conversely, the vertex stars of a `k`-uniform hypergraph with
//! pair degree at most `p` are a valid cover of its line graph.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::recognition::{big_cliques, recognize, Thresholds, Verdict};

/// An ordered family of vertex sets of a graph on `n` vertices. Entries are
/// stored sorted; duplicates are distinct entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    n: usize,
    cliques: Vec<Vec<usize>>,
}

impl CliqueCover {
    pub fn new(n: usize, cliques: Vec<Vec<usize>>) -> Self {
        let cliques = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        CliqueCover { n, cliques }
    }

    /// Order of the graph the cover refers to.
    pub fn graph_order(&self) -> usize {
        self.n
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Number of entries containing each vertex.
    pub fn loads(&self) -> Vec<usize> {
        let mut loads = vec![0; self.n];
        for c in &self.cliques {
            for &v in c {
                if v < self.n {
                    loads[v] += 1;
                }
            }
        }
        loads
    }
}

/// The first Krausz condition a cover breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverViolation {
    UncoveredEdge(usize, usize),
    Overloaded { vertex: usize, load: usize, k: usize },
    Overlap { first: usize, second: usize, shared: usize, p: usize },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverViolation::UncoveredEdge(u, v) => write!(f, "edge {u}-{v} lies in no clique"),
            CoverViolation::Overloaded { vertex, load, k } => {
                write!(f, "vertex {vertex} lies in {load} cliques, more than k={k}")
            }
            CoverViolation::Overlap {
                first,
                second,
                shared,
                p,
            } => write!(
                f,
                "cliques {first} and {second} share {shared} vertices, more than p={p}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverCheck {
    Valid,
    Invalid(CoverViolation),
}

impl CoverCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CoverCheck::Valid)
    }
}

/// Checks the three cover conditions in order and reports the first failure.
///
/// An entry that is not a clique of `g` is an input error rather than a
/// failed condition.
pub fn validate_cover(g: &Graph, cover: &CliqueCover, k: usize, p: usize) -> Result<CoverCheck> {
    if cover.n != g.order() {
        return Err(Error::InvalidParameters(format!(
            "cover refers to {} vertices, graph has {}",
            cover.n,
            g.order()
        )));
    }
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (index, c) in cover.cliques.iter().enumerate() {
        let distinct = c.windows(2).all(|w| w[0] < w[1]);
        if !distinct || !g.is_clique(c) {
            return Err(Error::NotAClique { index });
        }
        for &v in c {
            membership[v].push(index);
        }
    }

    for (u, v) in g.edges() {
        let (mu, mv) = (&membership[u], &membership[v]);
        if !mu.iter().any(|i| mv.binary_search(i).is_ok()) {
            return Ok(CoverCheck::Invalid(CoverViolation::UncoveredEdge(u, v)));
        }
    }
    for (vertex, m) in membership.iter().enumerate() {
        if m.len() > k {
            return Ok(CoverCheck::Invalid(CoverViolation::Overloaded {
                vertex,
                load: m.len(),
                k,
            }));
        }
    }
    for (first, a) in cover.cliques.iter().enumerate() {
        if a.len() <= p {
            continue;
        }
        for (second, b) in cover.cliques.iter().enumerate().skip(first + 1) {
            let shared = a.iter().filter(|v| b.binary_search(v).is_ok()).count();
            if shared > p {
                return Ok(CoverCheck::Invalid(CoverViolation::Overlap {
                    first,
                    second,
                    shared,
                    p,
                }));
            }
        }
    }
    Ok(CoverCheck::Valid)
}

/// All big maximal cliques of `g`, checked to form a valid cover.
///
/// Intended for graphs that passed every obstruction check and meet the edge
/// degree bound; on any other graph the family may fail validation, which is
/// reported as an internal error.
pub fn krausz_cover(g: &Graph, t: &Thresholds) -> Result<CliqueCover> {
    krausz_cover_from_cliques(g, t, big_cliques(g, t))
}

pub(crate) fn krausz_cover_from_cliques(
    g: &Graph,
    t: &Thresholds,
    big: Vec<Vec<usize>>,
) -> Result<CliqueCover> {
    let cover = CliqueCover::new(g.order(), big);
    match validate_cover(g, &cover, t.k, t.p)? {
        CoverCheck::Valid => Ok(cover),
        CoverCheck::Invalid(why) => Err(Error::Internal(format!(
            "big-clique family is not a cover for k={}, p={}: {why}",
            t.k, t.p
        ))),
    }
}

/// Builds the hypergraph whose line graph is `g`, vertex for vertex.
///
/// Hypergraph vertices are the cover entries in order, followed by
/// `k - load(v)` singleton pads for each graph vertex `v` in increasing order.
/// Hyperedge `v` is the set of (padded) entries containing `v`.
pub fn cover_to_hypergraph(
    g: &Graph,
    cover: &CliqueCover,
    k: usize,
    p: usize,
) -> Result<Hypergraph> {
    if let CoverCheck::Invalid(why) = validate_cover(g, cover, k, p)? {
        return Err(Error::InvalidCover(why));
    }
    let mut edges: Vec<Vec<usize>> = vec![Vec::with_capacity(k); g.order()];
    for (i, c) in cover.cliques.iter().enumerate() {
        for &v in c {
            edges[v].push(i);
        }
    }
    let mut next = cover.len();
    for edge in &mut edges {
        while edge.len() < k {
            edge.push(next);
            next += 1;
        }
    }
    Hypergraph::new(next, edges)
}

/// The vertex stars of `h` with at least one edge, as a cover of its line graph.
pub fn hypergraph_to_cover(h: &Hypergraph) -> CliqueCover {
    let mut stars: Vec<Vec<usize>> = vec![Vec::new(); h.order()];
    for (i, e) in h.edges().iter().enumerate() {
        for &x in e {
            stars[x].push(i);
        }
    }
    CliqueCover::new(h.size(), stars.into_iter().filter(|s| !s.is_empty()).collect())
}

/// Recognizes `g` and, when it is a member, returns the hypergraph built from
/// its Krausz cover.
pub fn reconstruct(g: &Graph, k: usize, p: usize) -> Result<Hypergraph> {
    match recognize(g, k, p)? {
        Verdict::Member(cover) => cover_to_hypergraph(g, &cover, k, p),
        other => Err(Error::NotMember(Box::new(other))),
    }
}
