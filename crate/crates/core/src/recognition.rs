//! Membership in the class of line graphs of `k`-uniform hypergraphs whose
//! pair degrees are at most `p`.
//!
//! Four obstructions are checked as threshold predicates on the graph:
//!
//! * a `(k+1)`-claw;
//! * two non-adjacent vertices with more than `p·k²` common neighbours;
//! * a big maximal clique (size at least `s = p·k² + (p−2)·k + 2`) and an outside
//!   vertex adjacent to more than `p·k` of its members;
//! * two distinct big maximal cliques sharing more than `p` vertices.
//!
//! None of these can occur in a genuine line graph, so any hit is a certificate
//! of non-membership. When none occur and every edge lies in at least
//! `f = p·k³ + (p−3)·k + 1` triangles, the big maximal cliques form a valid
//! Krausz cover and the graph is a member. Between those two outcomes the
//! answer is [`Verdict::Inconclusive`].

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Claw, Graph};
use crate::reconstruction::{krausz_cover_from_cliques, CliqueCover};

/// The two polynomial bounds attached to a pair `(k, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thresholds {
    pub k: usize,
    pub p: usize,
    /// Minimum edge degree above which the obstructions decide membership.
    pub edge_degree: usize,
    /// Size from which a clique is forced to share a hypergraph vertex.
    pub big_clique: usize,
}

impl Thresholds {
    pub fn new(k: usize, p: usize) -> Result<Self> {
        if k < 2 || p < 1 {
            return Err(Error::InvalidParameters(format!(
                "need k >= 2 and p >= 1, got k={k}, p={p}"
            )));
        }
        let overflow = || Error::Overflow(format!("thresholds for k={k}, p={p}"));
        let (kk, pp) = (k as i128, p as i128);
        let f = pp * kk * kk * kk + (pp - 3) * kk + 1;
        let s = pp * kk * kk + (pp - 2) * kk + 2;
        Ok(Thresholds {
            k,
            p,
            edge_degree: usize::try_from(f).map_err(|_| overflow())?,
            big_clique: usize::try_from(s).map_err(|_| overflow())?,
        })
    }

    /// Common-neighbour count that two non-adjacent vertices may not reach: `p·k² + 1`.
    pub fn common_neighbor_limit(&self) -> usize {
        self.p * self.k * self.k + 1
    }

    /// Attachment count an outside vertex may not reach on a big clique: `p·k + 1`.
    pub fn attachment_limit(&self) -> usize {
        self.p * self.k + 1
    }

    /// Overlap two big cliques may not reach: `p + 1`.
    pub fn overlap_limit(&self) -> usize {
        self.p + 1
    }
}

/// A certificate that a graph is not in the class. All vertex lists are sorted
/// and trimmed to exactly the violated bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Claw(Claw),
    CommonNeighbors {
        a: usize,
        b: usize,
        common: Vec<usize>,
    },
    CliqueAttachment {
        clique: Vec<usize>,
        vertex: usize,
        attached: Vec<usize>,
    },
    CliqueOverlap {
        first: Vec<usize>,
        second: Vec<usize>,
        shared: Vec<usize>,
    },
}

impl Witness {
    /// Short tag used in the machine-readable record.
    pub fn tag(&self) -> &'static str {
        match self {
            Witness::Claw(_) => "claw",
            Witness::CommonNeighbors { .. } => "common-neighbors",
            Witness::CliqueAttachment { .. } => "attachment",
            Witness::CliqueOverlap { .. } => "overlap",
        }
    }

    /// Re-checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph, t: &Thresholds) -> bool {
        let n = g.order();
        let distinct_sorted = |vs: &[usize]| vs.windows(2).all(|w| w[0] < w[1]) && vs.iter().all(|&v| v < n);
        let is_maximal_big = |c: &[usize]| {
            distinct_sorted(c)
                && c.len() >= t.big_clique
                && g.is_clique(c)
                && (0..n).all(|v| c.contains(&v) || !c.iter().all(|&u| g.is_adjacent(u, v)))
        };
        match self {
            Witness::Claw(claw) => {
                claw.leaves.len() == t.k + 1
                    && distinct_sorted(&claw.leaves)
                    && claw.center < n
                    && !claw.leaves.contains(&claw.center)
                    && claw.leaves.iter().all(|&l| g.is_adjacent(claw.center, l))
                    && claw.leaves.iter().enumerate().all(|(i, &a)| {
                        claw.leaves[i + 1..].iter().all(|&b| !g.is_adjacent(a, b))
                    })
            }
            Witness::CommonNeighbors { a, b, common } => {
                a != b
                    && *a < n
                    && *b < n
                    && !g.is_adjacent(*a, *b)
                    && distinct_sorted(common)
                    && common.len() >= t.common_neighbor_limit()
                    && common
                        .iter()
                        .all(|&c| c != *a && c != *b && g.is_adjacent(c, *a) && g.is_adjacent(c, *b))
            }
            Witness::CliqueAttachment {
                clique,
                vertex,
                attached,
            } => {
                is_maximal_big(clique)
                    && *vertex < n
                    && !clique.contains(vertex)
                    && distinct_sorted(attached)
                    && attached.len() >= t.attachment_limit()
                    && attached
                        .iter()
                        .all(|a| clique.contains(a) && g.is_adjacent(*a, *vertex))
            }
            Witness::CliqueOverlap {
                first,
                second,
                shared,
            } => {
                first != second
                    && is_maximal_big(first)
                    && is_maximal_big(second)
                    && distinct_sorted(shared)
                    && shared.len() >= t.overlap_limit()
                    && shared.iter().all(|v| first.contains(v) && second.contains(v))
            }
        }
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Claw(c) => write!(f, "claw center={} leaves={}", c.center, join(&c.leaves)),
            Witness::CommonNeighbors { a, b, common } => {
                write!(f, "common-neighbors a={a} b={b} common={}", join(common))
            }
            Witness::CliqueAttachment {
                clique,
                vertex,
                attached,
            } => write!(
                f,
                "attachment clique={} vertex={vertex} attached={}",
                join(clique),
                join(attached)
            ),
            Witness::CliqueOverlap {
                first,
                second,
                shared,
            } => write!(
                f,
                "overlap first={} second={} shared={}",
                join(first),
                join(second),
                join(shared)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// In the class; the cover satisfies all three Krausz conditions.
    Member(CliqueCover),
    /// Not in the class.
    NonMember(Witness),
    /// No obstruction found, but the minimum edge degree is below the bound
    /// that would make their absence sufficient.
    Inconclusive {
        min_edge_degree: usize,
        required: usize,
    },
}

impl Verdict {
    pub fn is_member(&self) -> bool {
        matches!(self, Verdict::Member(_))
    }

    pub fn is_non_member(&self) -> bool {
        matches!(self, Verdict::NonMember(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Member(cover) => write!(f, "MEMBER cliques={}", cover.len()),
            Verdict::NonMember(w) => write!(f, "NONMEMBER {w}"),
            Verdict::Inconclusive {
                min_edge_degree,
                required,
            } => write!(
                f,
                "INCONCLUSIVE min_edge_degree={min_edge_degree} required={required}"
            ),
        }
    }
}

/// A `(k+1)`-claw, if the graph has one.
pub fn check_claw(g: &Graph, k: usize) -> Option<Witness> {
    g.find_claw(k + 1).map(Witness::Claw)
}

/// Lexicographically first non-adjacent pair with at least `p·k² + 1` common
/// neighbours; the witness lists the smallest `p·k² + 1` of them.
pub fn check_common_neighbors(g: &Graph, t: &Thresholds) -> Option<Witness> {
    let limit = t.common_neighbor_limit();
    for a in 0..g.order() {
        if g.degree(a) < limit {
            continue;
        }
        for b in a + 1..g.order() {
            if g.is_adjacent(a, b) || g.row(a).intersection_count(g.row(b)) < limit {
                continue;
            }
            let common = g.row(a).intersection(g.row(b)).iter().take(limit).collect();
            return Some(Witness::CommonNeighbors { a, b, common });
        }
    }
    None
}

/// Maximal cliques of size at least the big-clique threshold, in lexicographic order.
pub fn big_cliques(g: &Graph, t: &Thresholds) -> Vec<Vec<usize>> {
    g.maximal_cliques()
        .into_iter()
        .filter(|c| c.len() >= t.big_clique)
        .collect()
}

/// A big maximal clique and an outside vertex adjacent to at least `p·k + 1` of its members.
pub fn check_clique_attachment(g: &Graph, t: &Thresholds) -> Option<Witness> {
    attachment_in(g, t, &big_cliques(g, t))
}

/// Two distinct big maximal cliques sharing at least `p + 1` vertices.
pub fn check_clique_overlap(g: &Graph, t: &Thresholds) -> Option<Witness> {
    overlap_in(t, &big_cliques(g, t))
}

fn attachment_in(g: &Graph, t: &Thresholds, big: &[Vec<usize>]) -> Option<Witness> {
    let limit = t.attachment_limit();
    for clique in big {
        for vertex in 0..g.order() {
            if clique.binary_search(&vertex).is_ok() {
                continue;
            }
            let attached: Vec<usize> = clique
                .iter()
                .copied()
                .filter(|&u| g.is_adjacent(u, vertex))
                .take(limit)
                .collect();
            if attached.len() == limit {
                return Some(Witness::CliqueAttachment {
                    clique: clique.clone(),
                    vertex,
                    attached,
                });
            }
        }
    }
    None
}

fn overlap_in(t: &Thresholds, big: &[Vec<usize>]) -> Option<Witness> {
    let limit = t.overlap_limit();
    for (i, first) in big.iter().enumerate() {
        for second in &big[i + 1..] {
            let shared: Vec<usize> = first
                .iter()
                .copied()
                .filter(|v| second.binary_search(v).is_ok())
                .take(limit)
                .collect();
            if shared.len() == limit {
                return Some(Witness::CliqueOverlap {
                    first: first.clone(),
                    second: second.clone(),
                    shared,
                });
            }
        }
    }
    None
}

/// Runs the obstruction checks in a fixed order (common neighbours, claw,
/// attachment, overlap) and, if all pass, tries the edge-degree bound.
pub fn recognize(g: &Graph, k: usize, p: usize) -> Result<Verdict> {
    let t = Thresholds::new(k, p)?;
    let min_edge_degree = g.min_edge_degree()?;
    if let Some(w) = check_common_neighbors(g, &t).or_else(|| check_claw(g, k)) {
        return Ok(Verdict::NonMember(w));
    }
    let big = big_cliques(g, &t);
    if let Some(w) = attachment_in(g, &t, &big).or_else(|| overlap_in(&t, &big)) {
        return Ok(Verdict::NonMember(w));
    }
    if min_edge_degree >= t.edge_degree {
        let cover = krausz_cover_from_cliques(g, &t, big)?;
        return Ok(Verdict::Member(cover));
    }
    Ok(Verdict::Inconclusive {
        min_edge_degree,
        required: t.edge_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: usize, p: usize) -> Thresholds {
        Thresholds::new(k, p).unwrap()
    }

    /// K4 on 0..4 plus vertex 4 adjacent to the listed members.
    fn k4_plus(attached: &[usize]) -> Graph {
        let mut edges: Vec<_> = Graph::complete(4).edges().collect();
        edges.extend(attached.iter().map(|&u| (u, 4)));
        Graph::new(5, edges).unwrap()
    }

    /// Two K4s sharing `shared` vertices.
    fn two_k4(shared: usize) -> Graph {
        let second: Vec<usize> = (4 - shared..8 - shared).collect();
        let mut edges: Vec<_> = Graph::complete(4).edges().collect();
        for (i, &u) in second.iter().enumerate() {
            for &v in &second[i + 1..] {
                edges.push((u, v));
            }
        }
        Graph::new(8 - shared, edges).unwrap()
    }

    #[test]
    fn threshold_values() {
        assert_eq!((t(2, 1).edge_degree, t(2, 1).big_clique), (5, 4));
        assert_eq!((t(3, 1).edge_degree, t(3, 1).big_clique), (22, 8));
        assert_eq!((t(2, 2).edge_degree, t(2, 2).big_clique), (15, 10));
        assert!(Thresholds::new(1, 1).is_err());
        assert!(Thresholds::new(2, 0).is_err());
        for k in 2..8 {
            for p in 1..8 {
                let th = t(k, p);
                assert!(th.edge_degree >= th.big_clique, "k={k} p={p}");
            }
        }
    }

    #[test]
    fn claw_check() {
        let star = Graph::complete_bipartite(1, 3);
        assert!(matches!(check_claw(&star, 2), Some(Witness::Claw(_))));
        assert_eq!(check_claw(&Graph::complete(7), 2), None);
        assert_eq!(check_claw(&star, 3), None);
    }

    #[test]
    fn common_neighbor_check() {
        let k25 = Graph::complete_bipartite(2, 5);
        let w = check_common_neighbors(&k25, &t(2, 1)).unwrap();
        assert_eq!(
            w,
            Witness::CommonNeighbors {
                a: 0,
                b: 1,
                common: vec![2, 3, 4, 5, 6]
            }
        );
        assert!(w.verify(&k25, &t(2, 1)));
        assert_eq!(check_common_neighbors(&Graph::cycle(5), &t(2, 1)), None);
        assert_eq!(check_common_neighbors(&Graph::complete(9), &t(2, 1)), None);
        // trimmed to exactly the limit
        let k29 = Graph::complete_bipartite(2, 9);
        match check_common_neighbors(&k29, &t(2, 1)).unwrap() {
            Witness::CommonNeighbors { common, .. } => assert_eq!(common, vec![2, 3, 4, 5, 6]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn attachment_check() {
        let g = k4_plus(&[0, 1, 2]);
        let w = check_clique_attachment(&g, &t(2, 1)).unwrap();
        assert_eq!(
            w,
            Witness::CliqueAttachment {
                clique: vec![0, 1, 2, 3],
                vertex: 4,
                attached: vec![0, 1, 2]
            }
        );
        assert!(w.verify(&g, &t(2, 1)));
        assert_eq!(check_clique_attachment(&Graph::complete(7), &t(2, 1)), None);
        assert_eq!(check_clique_attachment(&k4_plus(&[0, 1]), &t(2, 1)), None);
    }

    #[test]
    fn overlap_check() {
        let g = two_k4(2);
        let w = check_clique_overlap(&g, &t(2, 1)).unwrap();
        assert_eq!(
            w,
            Witness::CliqueOverlap {
                first: vec![0, 1, 2, 3],
                second: vec![2, 3, 4, 5],
                shared: vec![2, 3]
            }
        );
        assert!(w.verify(&g, &t(2, 1)));
        assert_eq!(check_clique_overlap(&two_k4(1), &t(2, 1)), None);
        let disjoint = Graph::complete(4).disjoint_union(&Graph::complete(4));
        assert_eq!(check_clique_overlap(&disjoint, &t(2, 1)), None);
    }

    #[test]
    fn recognize_examples() {
        match recognize(&Graph::complete(7), 2, 1).unwrap() {
            Verdict::Member(cover) => assert_eq!(cover.cliques(), &[(0..7).collect::<Vec<_>>()]),
            other => panic!("{other:?}"),
        }
        let claw = recognize(&Graph::complete_bipartite(1, 3), 2, 1).unwrap();
        assert_eq!(claw.to_string(), "NONMEMBER claw center=0 leaves=1,2,3");
        assert_eq!(
            recognize(&Graph::cycle(5), 2, 1).unwrap(),
            Verdict::Inconclusive {
                min_edge_degree: 0,
                required: 5
            }
        );
        assert!(matches!(recognize(&Graph::empty(3), 2, 1), Err(Error::Edgeless)));
        assert!(recognize(&Graph::complete(3), 1, 1).is_err());
    }

    #[test]
    fn recognition_order_is_fixed() {
        // K_{2,5} has 5-claws as well; the common-neighbour check runs first.
        let g = Graph::complete_bipartite(2, 5);
        assert!(check_claw(&g, 2).is_some());
        assert!(matches!(
            recognize(&g, 2, 1).unwrap(),
            Verdict::NonMember(Witness::CommonNeighbors { a: 0, b: 1, .. })
        ));
    }

    #[test]
    fn witness_verify_rejects_tampering() {
        let g = Graph::complete_bipartite(2, 5);
        let th = t(2, 1);
        let bad = Witness::CommonNeighbors {
            a: 0,
            b: 2,
            common: vec![3, 4, 5, 6, 1],
        };
        assert!(!bad.verify(&g, &th));
        let short = Witness::CommonNeighbors {
            a: 0,
            b: 1,
            common: vec![2, 3, 4, 5],
        };
        assert!(!short.verify(&g, &th));
    }
}
