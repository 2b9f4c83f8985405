//! Brute-force ground truth for small instances.
//!
//! Nothing here shares code paths with recognition or reconstruction beyond the
//! graph type: membership is decided by exhaustive search for a Krausz cover,
//! and separately by enumerating hypergraphs outright.

use std::collections::BTreeSet;

use crate::baranyai::{baranyai_partition, binomial, regular_from_partition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconstruction::CliqueCover;

/// Largest graph [`cover_search`] accepts.
pub const COVER_SEARCH_MAX_VERTICES: usize = 8;
/// Largest graphs [`graphs_isomorphic`] accepts.
pub const ISOMORPHISM_MAX_VERTICES: usize = 10;
/// Largest ground set [`scan_regular_realizability`] scans.
pub const SCAN_MAX_GROUND_SET: usize = 12;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

struct CoverSearch {
    k: usize,
    p: usize,
    edges: Vec<(usize, usize)>,
    /// Cliques (as bitmasks) containing each edge, largest first then by mask.
    candidates: Vec<Vec<u32>>,
    chosen: Vec<u32>,
    load: Vec<usize>,
    budget: u64,
    spent: u64,
}

impl CoverSearch {
    fn covered(&self, (u, v): (usize, usize)) -> bool {
        let pair = 1 << u | 1 << v;
        self.chosen.iter().any(|&c| c & pair == pair)
    }

    fn search(&mut self, from: usize) -> Result<bool> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        let Some(next) = (from..self.edges.len()).find(|&i| !self.covered(self.edges[i])) else {
            return Ok(true);
        };
        for ci in 0..self.candidates[next].len() {
            let c = self.candidates[next][ci];
            let members = (0..32).filter(|v| c >> v & 1 == 1);
            if members.clone().any(|v| self.load[v] >= self.k) {
                continue;
            }
            if self.chosen.iter().any(|&o| (o & c).count_ones() as usize > self.p) {
                continue;
            }
            for v in members.clone() {
                self.load[v] += 1;
            }
            self.chosen.push(c);
            if self.search(next + 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            for v in members {
                self.load[v] -= 1;
            }
        }
        Ok(false)
    }
}

/// Exhaustive search for a Krausz cover of `g` with vertex load at most `k`
/// and pairwise overlaps at most `p`.
///
/// `Ok(None)` is definitive: no cover exists. Graphs above
/// [`COVER_SEARCH_MAX_VERTICES`] or searches exceeding `budget` nodes are
/// resource errors.
pub fn cover_search(g: &Graph, k: usize, p: usize, budget: u64) -> Result<Option<CliqueCover>> {
    let n = g.order();
    if n > COVER_SEARCH_MAX_VERTICES {
        return Err(Error::SizeBound {
            n,
            max: COVER_SEARCH_MAX_VERTICES,
        });
    }
    if budget == 0 {
        return Err(Error::InvalidParameters("budget must be positive".into()));
    }
    let cliques: Vec<u32> = (1u32..1 << n)
        .filter(|m| m.count_ones() >= 2)
        .filter(|&m| {
            let vs: Vec<usize> = (0..n).filter(|v| m >> v & 1 == 1).collect();
            g.is_clique(&vs)
        })
        .collect();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let candidates = edges
        .iter()
        .map(|&(u, v)| {
            let pair = 1 << u | 1 << v;
            let mut c: Vec<u32> = cliques.iter().copied().filter(|c| c & pair == pair).collect();
            c.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
            c
        })
        .collect();
    let mut s = CoverSearch {
        k,
        p,
        edges,
        candidates,
        chosen: Vec::new(),
        load: vec![0; n],
        budget,
        spent: 0,
    };
    if !s.search(0)? {
        return Ok(None);
    }
    let cliques = s
        .chosen
        .iter()
        .map(|&c| (0..n).filter(|v| c >> v & 1 == 1).collect())
        .collect();
    Ok(Some(CliqueCover::new(n, cliques)))
}

pub fn is_member_bruteforce(g: &Graph, k: usize, p: usize, budget: u64) -> Result<bool> {
    Ok(cover_search(g, k, p, budget)?.is_some())
}

/// Labelled line graphs on `m` vertices of `k`-uniform hypergraphs with pair
/// degree at most `p`, found by enumerating the hypergraphs themselves.
///
/// Each graph is returned as its upper-triangle adjacency bitmask (bit index
/// of pair `(u, v)`, `u < v`, in lexicographic order). Hypergraph vertices are
/// introduced in first-use order, so `k·m` vertices suffice and each edge list
/// is generated once up to renaming. Cost grows quickly; keep `m·k` small.
pub fn line_graphs_by_enumeration(m: usize, k: usize, p: usize) -> BTreeSet<u64> {
    fn pair_bit(m: usize, u: usize, v: usize) -> usize {
        // index of (u, v) among pairs in lexicographic order
        u * (2 * m - u - 1) / 2 + (v - u - 1)
    }
    fn subsets(pool: usize, k: usize) -> Vec<u64> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0u64)];
        while let Some((start, mask)) = stack.pop() {
            if mask.count_ones() as usize == k {
                out.push(mask);
                continue;
            }
            for x in start..pool {
                stack.push((x + 1, mask | 1 << x));
            }
        }
        out
    }
    fn go(
        m: usize,
        k: usize,
        p: usize,
        fresh: usize,
        edges: &mut Vec<u64>,
        pairs: &mut std::collections::HashMap<(usize, usize), usize>,
        out: &mut BTreeSet<u64>,
    ) {
        if edges.len() == m {
            let mut adj = 0u64;
            for i in 0..m {
                for j in i + 1..m {
                    if edges[i] & edges[j] != 0 {
                        adj |= 1 << pair_bit(m, i, j);
                    }
                }
            }
            out.insert(adj);
            return;
        }
        for e in subsets(fresh + k, k) {
            // fresh vertices must be used as a prefix fresh, fresh+1, ...
            let new = e >> fresh;
            if new & (new + 1) != 0 {
                continue;
            }
            let vs: Vec<usize> = (0..fresh + k).filter(|x| e >> x & 1 == 1).collect();
            let mut ok = true;
            let mut touched = Vec::new();
            'outer: for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    let c = pairs.entry((a, b)).or_insert(0);
                    *c += 1;
                    touched.push((a, b));
                    if *c > p {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                edges.push(e);
                go(m, k, p, fresh + new.count_ones() as usize, edges, pairs, out);
                edges.pop();
            }
            for t in touched {
                *pairs.get_mut(&t).unwrap() -= 1;
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut pairs = std::collections::HashMap::new();
    go(m, k, p, 0, &mut Vec::new(), &mut pairs, &mut out);
    out
}

/// Adjacency bitmask of `g` in the layout used by [`line_graphs_by_enumeration`].
pub fn adjacency_mask(g: &Graph) -> u64 {
    let mut mask = 0u64;
    for (bit, (u, v)) in (0..g.order())
        .flat_map(|u| (u + 1..g.order()).map(move |v| (u, v)))
        .enumerate()
    {
        if g.is_adjacent(u, v) {
            mask |= 1 << bit;
        }
    }
    mask
}

/// Inverse of [`adjacency_mask`].
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .enumerate()
        .filter(|(bit, _)| mask >> bit & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(n, edges).expect("pairs are in range and loop-free")
}

/// Backtracking isomorphism test with degree pruning.
pub fn graphs_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    for g in [a, b] {
        if g.order() > ISOMORPHISM_MAX_VERTICES {
            return Err(Error::SizeBound {
                n: g.order(),
                max: ISOMORPHISM_MAX_VERTICES,
            });
        }
    }
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let (mut sa, mut sb) = (deg_a.clone(), deg_b.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    // map high-degree vertices first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg_a[v]));

    let mut m = Matcher {
        a,
        b,
        deg_a,
        deg_b,
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(m.extend(0))
}

struct Matcher<'g> {
    a: &'g Graph,
    b: &'g Graph,
    deg_a: Vec<usize>,
    deg_b: Vec<usize>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        for w in 0..self.b.order() {
            if self.used[w] || self.deg_a[v] != self.deg_b[w] {
                continue;
            }
            let consistent = self.order[..i]
                .iter()
                .all(|&u| self.a.is_adjacent(u, v) == self.b.is_adjacent(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(i + 1) {
                return true;
            }
            self.used[w] = false;
        }
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanDiscrepancy {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanReport {
    /// `(N, k, d)` triples examined.
    pub checked: usize,
    /// Triples that produced a hypergraph.
    pub realized: usize,
    pub discrepancies: Vec<ScanDiscrepancy>,
}

/// For all `2 ≤ k ≤ min(N, k_max)`, `N ≤ n_max` and `1 ≤ d ≤ C(N−1, k−1)`,
/// checks that a `d`-regular `k`-uniform hypergraph on `N` vertices is built
/// exactly when `k | dN`, and that what is built has the right degrees, edge
/// sizes and (when no class is reused) no repeated edge.
pub fn scan_regular_realizability(n_max: usize, k_max: usize) -> Result<ScanReport> {
    if n_max > SCAN_MAX_GROUND_SET {
        return Err(Error::SizeBound {
            n: n_max,
            max: SCAN_MAX_GROUND_SET,
        });
    }
    let mut report = ScanReport::default();
    for n in 2..=n_max {
        for k in 2..=n.min(k_max) {
            let partition = baranyai_partition(n, k)?;
            let top = binomial((n - 1) as u64, (k - 1) as u64).unwrap() as usize;
            for d in 1..=top {
                report.checked += 1;
                let divisible = (d * n) % k == 0;
                let mut flag = |detail: String| {
                    report.discrepancies.push(ScanDiscrepancy { n, k, d, detail });
                };
                match regular_from_partition(&partition, d, false) {
                    Ok(r) => {
                        report.realized += 1;
                        let h = &r.hypergraph;
                        if !divisible {
                            flag("built although k does not divide dN".into());
                        }
                        if h.degree_sequence() != vec![d; n] {
                            flag(format!("degree sequence {:?}", h.degree_sequence()));
                        }
                        if !h.is_k_uniform(k) {
                            flag("not k-uniform".into());
                        }
                        if !r.reused_classes && !h.is_simple() {
                            flag("repeated edge without class reuse".into());
                        }
                    }
                    Err(Error::NotDivisible { .. }) if !divisible => {}
                    Err(e) => flag(format!("failed: {e}")),
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reconstruction::validate_cover;

    #[test]
    fn cover_search_examples() {
        let star = Graph::complete_bipartite(1, 3);
        assert_eq!(cover_search(&star, 2, 1, DEFAULT_BUDGET).unwrap(), None);
        let c5 = Graph::cycle(5);
        let cover = cover_search(&c5, 2, 1, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(cover.len(), 5);
        assert!(validate_cover(&c5, &cover, 2, 1).unwrap().is_valid());
        let k3 = Graph::complete(3);
        assert_eq!(
            cover_search(&k3, 2, 1, DEFAULT_BUDGET).unwrap().unwrap().cliques(),
            &[vec![0, 1, 2]]
        );
        let empty = cover_search(&Graph::empty(3), 2, 1, DEFAULT_BUDGET).unwrap().unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn cover_search_limits() {
        assert!(matches!(
            cover_search(&Graph::complete(9), 2, 1, DEFAULT_BUDGET),
            Err(Error::SizeBound { n: 9, max: 8 })
        ));
        assert!(matches!(
            cover_search(&Graph::complete_bipartite(3, 5), 3, 1, 3),
            Err(Error::BudgetExhausted(3))
        ));
    }

    #[test]
    fn membership_examples() {
        assert!(!is_member_bruteforce(&Graph::complete_bipartite(2, 5), 2, 1, DEFAULT_BUDGET).unwrap());
        assert!(is_member_bruteforce(&Graph::complete(7), 2, 1, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn enumeration_agrees_with_cover_search() {
        for (k, p, max_m) in [(2, 1, 5), (2, 2, 4), (3, 1, 4), (3, 2, 3)] {
            for m in 1..=max_m {
                let by_enum = line_graphs_by_enumeration(m, k, p);
                let pairs = m * (m - 1) / 2;
                for mask in 0u64..1 << pairs {
                    let g = graph_from_mask(m, mask);
                    let oracle = is_member_bruteforce(&g, k, p, DEFAULT_BUDGET).unwrap();
                    assert_eq!(
                        oracle,
                        by_enum.contains(&mask),
                        "k={k} p={p} m={m} mask={mask:b}"
                    );
                }
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        assert!(graphs_isomorphic(&Graph::cycle(4), &Graph::complete_bipartite(2, 2)).unwrap());
        assert!(!graphs_isomorphic(&Graph::complete(3), &Graph::path(3)).unwrap());
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(!graphs_isomorphic(&Graph::cycle(6), &two_triangles).unwrap());
        assert!(graphs_isomorphic(&Graph::complete(11), &Graph::complete(11)).is_err());
    }

    #[test]
    fn isomorphism_is_an_equivalence_on_relabellings() {
        // relabel every 5-vertex graph by a fixed permutation; must stay isomorphic
        let perm = [3, 0, 4, 1, 2];
        for mask in (0u64..1 << 10).step_by(7) {
            let g = graph_from_mask(5, mask);
            let h = Graph::new(5, g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
            assert!(graphs_isomorphic(&g, &g).unwrap());
            assert!(graphs_isomorphic(&g, &h).unwrap());
            assert!(graphs_isomorphic(&h, &g).unwrap());
        }
    }

    #[test]
    fn small_scan() {
        let report = scan_regular_realizability(6, 4).unwrap();
        assert!(report.discrepancies.is_empty(), "{:?}", report.discrepancies);
        assert!(report.realized > 0 && report.realized < report.checked);
    }

    #[test]
    fn divisibility_rows() {
        let p = baranyai_partition(4, 3).unwrap();
        for d in 1..=3 {
            let ok = regular_from_partition(&p, d, false).is_ok();
            assert_eq!(ok, d == 3, "d={d}");
        }
        let p = baranyai_partition(5, 5).unwrap();
        for d in 1..=4 {
            assert!(regular_from_partition(&p, d, false).is_ok());
        }
    }
}
