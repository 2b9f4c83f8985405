//! Finite hypergraphs on the dense vertex set `0..n`.
//!
//! Hyperedges are kept as strictly increasing vertex lists. The edge list is
//! ordered and may contain the same vertex set more than once: edge `i` is the
//! vertex `i` of the line graph, so position is part of a hypergraph's identity.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each edge. Rejects empty edges, repeated
    /// vertices inside an edge and vertices outside `0..n`.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(edges.len());
        for (index, mut edge) in edges.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            edge.sort_unstable();
            for w in edge.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedVertex { index, vertex: w[0] });
                }
            }
            let last = *edge.last().unwrap();
            if last >= n {
                return Err(Error::VertexOutOfRange { vertex: last, n });
            }
            sorted.push(edge);
        }
        Ok(Hypergraph { n, edges: sorted })
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of hyperedges, repeats included.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Number of hyperedges containing `v`, each repeated edge counted separately.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count())
    }

    /// Number of hyperedges containing both `u` and `v`.
    pub fn pair_degree(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok())
            .count())
    }

    /// Largest pair degree over all vertex pairs; 0 if no edge has two vertices.
    pub fn multiplicity(&self) -> usize {
        let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
        let mut best = 0;
        for e in &self.edges {
            for (i, &a) in e.iter().enumerate() {
                for &b in &e[i + 1..] {
                    let c = counts.entry((a, b)).or_insert(0);
                    *c += 1;
                    best = best.max(*c);
                }
            }
        }
        best
    }

    pub fn is_linear(&self) -> bool {
        self.multiplicity() <= 1
    }

    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    /// True when no vertex set occurs twice in the edge list.
    pub fn is_simple(&self) -> bool {
        let mut seen: Vec<&Vec<usize>> = self.edges.iter().collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                degrees[v] += 1;
            }
        }
        degrees
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> Hypergraph {
        Hypergraph::new(5, vec![vec![0, 1, 2], vec![0, 1, 3], vec![2, 3, 4]]).unwrap()
    }

    #[test]
    fn degrees() {
        let h = sample();
        assert_eq!(h.degree(0).unwrap(), 2);
        assert_eq!(Hypergraph::empty(4).degree(3).unwrap(), 0);
        let twice = Hypergraph::new(2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(twice.degree(0).unwrap(), 2);
        assert!(matches!(
            h.degree(5),
            Err(Error::VertexOutOfRange { vertex: 5, n: 5 })
        ));
    }

    #[test]
    fn pair_degrees() {
        let h = sample();
        assert_eq!(h.pair_degree(0, 1).unwrap(), 2);
        assert_eq!(h.pair_degree(0, 4).unwrap(), 0);
        let twice = Hypergraph::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(twice.pair_degree(0, 1).unwrap(), 2);
        assert!(matches!(h.pair_degree(2, 2), Err(Error::SameVertex(2))));
        assert!(h.pair_degree(0, 9).is_err());
    }

    #[test]
    fn multiplicity_cases() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert_eq!(h.multiplicity(), 2);
        // Fano plane: every pair in exactly one line.
        let fano = Hypergraph::new(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap();
        assert_eq!(fano.multiplicity(), 1);
        assert!(fano.is_linear());
        let singletons = Hypergraph::new(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(singletons.multiplicity(), 0);
        assert_eq!(Hypergraph::empty(1).multiplicity(), 0);
    }

    #[test]
    fn uniformity() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert!(h.is_k_uniform(3));
        let mixed = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2, 3]]).unwrap();
        assert!(!mixed.is_k_uniform(2));
        assert!(Hypergraph::empty(3).is_k_uniform(7));
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(sample().degree_sequence(), vec![2, 2, 2, 2, 1]);
        let mut pairs = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                pairs.push(vec![a, b]);
            }
        }
        let k4 = Hypergraph::new(4, pairs).unwrap();
        assert_eq!(k4.degree_sequence(), vec![3, 3, 3, 3]);
        assert_eq!(Hypergraph::empty(3).degree_sequence(), vec![0, 0, 0]);
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert!(matches!(
            Hypergraph::new(3, vec![vec![]]),
            Err(Error::EmptyEdge { index: 0 })
        ));
        assert!(matches!(
            Hypergraph::new(3, vec![vec![0, 1], vec![2, 2]]),
            Err(Error::RepeatedVertex {
                index: 1,
                vertex: 2
            })
        ));
        assert!(matches!(
            Hypergraph::new(3, vec![vec![0, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        let h = Hypergraph::new(4, vec![vec![3, 0, 2]]).unwrap();
        assert_eq!(h.edge(0), &[0, 2, 3]);
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..8).prop_flat_map(|n| {
            let edge = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n);
            proptest::collection::vec(edge, 0..10)
                .prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
        })
    }

    proptest! {
        #[test]
        fn handshake(h in arb_hypergraph()) {
            let total: usize = h.degree_sequence().iter().sum();
            let sizes: usize = h.edges().iter().map(Vec::len).sum();
            prop_assert_eq!(total, sizes);
        }

        #[test]
        fn linear_iff_small_intersections(h in arb_hypergraph()) {
            let edges = h.edges();
            let mut pairwise_ok = true;
            for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    let common = edges[i].iter().filter(|v| edges[j].contains(v)).count();
                    if common > 1 {
                        pairwise_ok = false;
                    }
                }
            }
            prop_assert_eq!(h.is_linear(), pairwise_ok);
        }

        #[test]
        fn degrees_ignore_edge_order(h in arb_hypergraph(), seed in any::<u64>()) {
            let mut edges = h.edges().to_vec();
            let len = edges.len();
            if len > 1 {
                edges.rotate_left((seed as usize) % len);
                edges.swap(0, len - 1);
            }
            let shuffled = Hypergraph::new(h.order(), edges).unwrap();
            prop_assert_eq!(shuffled.degree_sequence(), h.degree_sequence());
            prop_assert_eq!(shuffled.multiplicity(), h.multiplicity());
            for u in 0..h.order() {
                for v in u + 1..h.order() {
                    prop_assert_eq!(shuffled.pair_degree(u, v).unwrap(), h.pair_degree(u, v).unwrap());
                }
            }
        }
    }
}
