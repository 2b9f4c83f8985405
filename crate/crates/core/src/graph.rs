//! Simple undirected graphs and the structural queries used by recognition.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// A simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<BitSet>,
}

/// An induced star: `center` adjacent to every leaf, leaves pairwise non-adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub leaves: Vec<usize>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![BitSet::new(n); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SameVertex(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    fn link(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for u in 0..n {
                g.link(u, (u + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.link(u - 1, u);
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.link(u, v);
            }
        }
        g
    }

    /// Places `other` after `self`, shifting its vertices by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges.collect::<Vec<_>>()).unwrap()
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.is_adjacent(u, v) {
                    g.link(i, j);
                }
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.rows[v].to_vec()
    }

    pub(crate) fn row(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            u < self.n && vertices[i + 1..].iter().all(|&v| self.is_adjacent(u, v))
        })
    }

    /// Number of triangles through the edge `uv`.
    pub fn edge_degree(&self, u: usize, v: usize) -> Result<usize> {
        if !self.is_adjacent(u, v) {
            return Err(Error::NotAdjacent(u, v));
        }
        Ok(self.rows[u].intersection_count(&self.rows[v]))
    }

    /// Smallest edge degree over all edges. Undefined, and an error, for edgeless graphs.
    pub fn min_edge_degree(&self) -> Result<usize> {
        self.edges()
            .map(|(u, v)| self.rows[u].intersection_count(&self.rows[v]))
            .min()
            .ok_or(Error::Edgeless)
    }

    /// Vertices outside `w` adjacent to every vertex of `w`.
    pub fn common_neighborhood(&self, w: &[usize]) -> Result<Vec<usize>> {
        let (&first, rest) = w.split_first().ok_or(Error::EmptyVertexSet)?;
        for &x in w {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        let mut common = self.rows[first].clone();
        for &x in rest {
            common.intersect_with(&self.rows[x]);
        }
        for &x in w {
            common.remove(x);
        }
        Ok(common.to_vec())
    }

    /// All inclusion-maximal cliques, each sorted, the list sorted lexicographically.
    ///
    /// Bron–Kerbosch with Tomita pivoting over bitset rows. Isolated vertices
    /// come out as singleton cliques.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.n == 0 {
            return out;
        }
        let mut current = Vec::new();
        bron_kerbosch(
            self,
            &mut current,
            BitSet::full(self.n),
            BitSet::new(self.n),
            &mut out,
        );
        out.sort_unstable();
        out
    }

    /// Finds an `r`-claw: the smallest center with an independent `r`-subset of its
    /// neighbourhood, taking the lexicographically least such subset. `r = 0` yields `None`.
    pub fn find_claw(&self, r: usize) -> Option<Claw> {
        if r == 0 {
            return None;
        }
        let mut leaves = Vec::with_capacity(r);
        for center in 0..self.n {
            let nbrs = self.neighbors(center);
            if nbrs.len() < r {
                continue;
            }
            if self.independent_subset(&nbrs, 0, r, &mut leaves) {
                return Some(Claw { center, leaves });
            }
        }
        None
    }

    fn independent_subset(
        &self,
        pool: &[usize],
        from: usize,
        r: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == r {
            return true;
        }
        let need = r - chosen.len();
        for i in from..pool.len() {
            if pool.len() - i < need {
                break;
            }
            let v = pool[i];
            if chosen.iter().all(|&c| !self.is_adjacent(c, v)) {
                chosen.push(v);
                if self.independent_subset(pool, i + 1, r, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

fn bron_kerbosch(
    g: &Graph,
    current: &mut Vec<usize>,
    mut candidates: BitSet,
    mut excluded: BitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            let mut clique = current.clone();
            clique.sort_unstable();
            out.push(clique);
        }
        return;
    }
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .max_by_key(|&u| (candidates.intersection_count(g.row(u)), std::cmp::Reverse(u)))
        .unwrap();
    let branch = candidates.difference(g.row(pivot));
    for v in branch.iter() {
        current.push(v);
        bron_kerbosch(
            g,
            current,
            candidates.intersection(g.row(v)),
            excluded.intersection(g.row(v)),
            out,
        );
        current.pop();
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// The line (intersection) graph: vertex `i` is hyperedge `i`, adjacent when the
/// hyperedges share a vertex. Repeated hyperedges are adjacent to each other.
pub fn line_graph(h: &Hypergraph) -> Graph {
    let m = h.size();
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); h.order()];
    for (i, e) in h.edges().iter().enumerate() {
        for &x in e {
            incidence[x].push(i);
        }
    }
    let mut g = Graph::empty(m);
    for star in &incidence {
        for (a, &i) in star.iter().enumerate() {
            for &j in &star[a + 1..] {
                g.link(i, j);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn line_graph_examples() {
        let tri = line_graph(&hg(3, &[&[0, 1], &[1, 2], &[2, 0]]));
        assert_eq!(tri, Graph::complete(3));
        let path = line_graph(&hg(4, &[&[0, 1], &[1, 2], &[2, 3]]));
        assert_eq!(path, Graph::path(3));
        let k3 = line_graph(&hg(5, &[&[0, 1, 2], &[0, 1, 3], &[2, 3, 4]]));
        assert_eq!(k3, Graph::complete(3));
        let repeated = line_graph(&hg(3, &[&[0, 1], &[0, 1], &[2]]));
        assert!(repeated.is_adjacent(0, 1));
        assert_eq!(repeated.edge_count(), 1);
    }

    #[test]
    fn edge_degrees() {
        assert_eq!(Graph::complete(4).edge_degree(0, 3).unwrap(), 2);
        assert_eq!(Graph::cycle(5).edge_degree(1, 2).unwrap(), 0);
        assert_eq!(Graph::complete(7).edge_degree(2, 5).unwrap(), 5);
        assert!(matches!(
            Graph::cycle(5).edge_degree(0, 2),
            Err(Error::NotAdjacent(0, 2))
        ));
    }

    #[test]
    fn min_edge_degrees() {
        assert_eq!(Graph::complete(7).min_edge_degree().unwrap(), 5);
        let mut edges: Vec<_> = Graph::complete(4).edges().collect();
        edges.push((0, 4));
        let pendant = Graph::new(5, edges).unwrap();
        assert_eq!(pendant.min_edge_degree().unwrap(), 0);
        assert_eq!(Graph::cycle(5).min_edge_degree().unwrap(), 0);
        assert!(matches!(Graph::empty(4).min_edge_degree(), Err(Error::Edgeless)));
    }

    #[test]
    fn common_neighborhoods() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.common_neighborhood(&[0, 2]).unwrap(), vec![1, 3]);
        assert_eq!(Graph::complete(4).common_neighborhood(&[0]).unwrap(), vec![1, 2, 3]);
        let k25 = Graph::complete_bipartite(2, 5);
        assert_eq!(k25.common_neighborhood(&[0, 1]).unwrap(), vec![2, 3, 4, 5, 6]);
        assert!(matches!(c4.common_neighborhood(&[]), Err(Error::EmptyVertexSet)));
        // members of W never appear, even when adjacent to the rest
        assert_eq!(Graph::complete(3).common_neighborhood(&[0, 1]).unwrap(), vec![2]);
    }

    #[test]
    fn maximal_clique_examples() {
        assert_eq!(Graph::complete(4).maximal_cliques(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            Graph::cycle(4).maximal_cliques(),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        let bowtie = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(bowtie.maximal_cliques(), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(Graph::empty(2).maximal_cliques(), vec![vec![0], vec![1]]);
        assert!(Graph::empty(0).maximal_cliques().is_empty());
    }

    #[test]
    fn claw_examples() {
        let star = Graph::complete_bipartite(1, 3);
        assert_eq!(
            star.find_claw(3),
            Some(Claw {
                center: 0,
                leaves: vec![1, 2, 3]
            })
        );
        assert_eq!(Graph::complete(5).find_claw(2), None);
        assert_eq!(
            Graph::cycle(6).find_claw(2),
            Some(Claw {
                center: 0,
                leaves: vec![1, 5]
            })
        );
        assert_eq!(star.find_claw(4), None);
        assert_eq!(star.find_claw(0), None);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut idx = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[idx] {
                            edges.push((u, v));
                        }
                        idx += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    fn brute_force_claw_exists(g: &Graph, r: usize) -> bool {
        (0..g.order()).any(|c| {
            let nbrs = g.neighbors(c);
            let d = nbrs.len();
            (0u32..1 << d).any(|mask| {
                if mask.count_ones() as usize != r {
                    return false;
                }
                let chosen: Vec<usize> = (0..d).filter(|i| mask >> i & 1 == 1).map(|i| nbrs[i]).collect();
                chosen
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| !g.is_adjacent(a, b)))
            })
        })
    }

    proptest! {
        #[test]
        fn cliques_are_maximal_and_cover(g in arb_graph(9)) {
            let cliques = g.maximal_cliques();
            for c in &cliques {
                prop_assert!(g.is_clique(c));
                // no outside vertex extends it
                for v in 0..g.order() {
                    if !c.contains(&v) {
                        prop_assert!(!c.iter().all(|&u| g.is_adjacent(u, v)));
                    }
                }
            }
            for v in 0..g.order() {
                prop_assert!(cliques.iter().any(|c| c.contains(&v)));
            }
            for (u, v) in g.edges() {
                prop_assert!(cliques.iter().any(|c| c.contains(&u) && c.contains(&v)));
            }
            let mut sorted = cliques.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted, cliques);
        }

        #[test]
        fn claw_search_matches_enumeration(g in arb_graph(8), r in 1usize..5) {
            let found = g.find_claw(r);
            prop_assert_eq!(found.is_some(), brute_force_claw_exists(&g, r));
            if let Some(claw) = found {
                prop_assert_eq!(claw.leaves.len(), r);
                for (i, &a) in claw.leaves.iter().enumerate() {
                    prop_assert!(g.is_adjacent(claw.center, a));
                    for &b in &claw.leaves[i + 1..] {
                        prop_assert!(!g.is_adjacent(a, b));
                    }
                }
            }
        }

        #[test]
        fn edge_degree_is_common_neighborhood(g in arb_graph(9)) {
            for (u, v) in g.edges() {
                prop_assert_eq!(
                    g.edge_degree(u, v).unwrap(),
                    g.common_neighborhood(&[u, v]).unwrap().len()
                );
            }
        }

        #[test]
        fn line_graph_of_simple_graph(g in arb_graph(7)) {
            // a 2-uniform linear hypergraph is just g; its line graph has degree d(a)+d(b)-2
            let h = Hypergraph::new(g.order(), g.edges().map(|(u, v)| vec![u, v]).collect()).unwrap();
            let l = line_graph(&h);
            prop_assert_eq!(l.order(), h.size());
            for (i, e) in h.edges().iter().enumerate() {
                prop_assert!(!l.is_adjacent(i, i));
                prop_assert_eq!(l.degree(i), g.degree(e[0]) + g.degree(e[1]) - 2);
            }
        }
    }
}
