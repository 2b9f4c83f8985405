//! Line-oriented ASCII file formats.
//!
//! All formats ignore blank lines and treat `#` as the start of a comment.
//!
//! Hypergraph (`.hg`):
//! ```text
//! H <n> <m>
//! <sorted vertices of edge 0>
//! ...
//! ```
//! Graph (`.gr`), one `u v` line per edge with `u < v`, lexicographic order:
//! ```text
//! G <n> <edges>
//! <u> <v>
//! ```
//! Partition (`.bp`), `M` blocks of `count` k-sets each:
//! ```text
//! B <N> <k> <M>
//! S <i> <count>
//! <k-set>
//! ```
//! Clique cover (`.kc`):
//! ```text
//! K <n> <r>
//! <sorted vertices of entry 0>
//! ```

use std::fmt::Write as _;

use crate::baranyai::BaranyaiPartition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::reconstruction::CliqueCover;

fn join(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("H {} {}\n", h.order(), h.size());
    for e in h.edges() {
        out.push_str(&join(e));
        out.push('\n');
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("G {} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_partition(p: &BaranyaiPartition) -> String {
    let mut out = format!("B {} {} {}\n", p.n, p.k, p.classes.len());
    for (i, class) in p.classes.iter().enumerate() {
        writeln!(out, "S {i} {}", class.len()).unwrap();
        for set in class {
            out.push_str(&join(set));
            out.push('\n');
        }
    }
    out
}

pub fn write_cover(c: &CliqueCover) -> String {
    let mut out = format!("K {} {}\n", c.graph_order(), c.len());
    for clique in c.cliques() {
        out.push_str(&join(clique));
        out.push('\n');
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next non-blank line as numbers, with its 1-based line number.
    fn next_numbers(&mut self) -> Result<Option<(usize, Vec<usize>)>> {
        for (i, raw) in self.inner.by_ref() {
            self.last = i + 1;
            let body = raw.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let nums = body
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(i + 1, format!("expected a non-negative integer, got {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Some((i + 1, nums)));
        }
        Ok(None)
    }

    fn expect_numbers(&mut self, what: &str) -> Result<(usize, Vec<usize>)> {
        self.next_numbers()?
            .ok_or_else(|| Error::parse(self.last + 1, format!("unexpected end of input, expected {what}")))
    }

    fn header(&mut self, tag: &str, fields: usize) -> Result<(usize, Vec<usize>)> {
        for (i, raw) in self.inner.by_ref() {
            self.last = i + 1;
            let body = raw.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let mut parts = body.split_whitespace();
            if parts.next() != Some(tag) {
                return Err(Error::parse(i + 1, format!("expected header starting with {tag:?}")));
            }
            let nums = parts
                .map(|t| t.parse::<usize>().map_err(|_| Error::parse(i + 1, format!("bad header field {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if nums.len() != fields {
                return Err(Error::parse(i + 1, format!("{tag} header needs {fields} fields")));
            }
            return Ok((i + 1, nums));
        }
        Err(Error::parse(self.last + 1, format!("missing {tag} header")))
    }

    fn finish(&mut self) -> Result<()> {
        match self.next_numbers()? {
            None => Ok(()),
            Some((line, _)) => Err(Error::parse(line, "trailing data after the declared content")),
        }
    }
}

pub fn read_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = Lines::new(text);
    let (_, h) = lines.header("H", 2)?;
    let (n, m) = (h[0], h[1]);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, e) = lines.expect_numbers("a hyperedge")?;
        if e.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::parse(line, "hyperedge vertices must be strictly increasing"));
        }
        edges.push(e);
    }
    lines.finish()?;
    Hypergraph::new(n, edges)
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let (_, h) = lines.header("G", 2)?;
    let (n, m) = (h[0], h[1]);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, e) = lines.expect_numbers("an edge")?;
        match e[..] {
            [u, v] if u < v && v < n => edges.push((u, v)),
            [_, _] => return Err(Error::parse(line, format!("edge must satisfy u < v < {n}"))),
            _ => return Err(Error::parse(line, "edge line needs exactly two vertices")),
        }
    }
    lines.finish()?;
    let g = Graph::new(n, edges)?;
    if g.edge_count() != m {
        return Err(Error::parse(1, "duplicate edges"));
    }
    Ok(g)
}

pub fn read_partition(text: &str) -> Result<BaranyaiPartition> {
    let mut lines = Lines::new(text);
    let (_, h) = lines.header("B", 3)?;
    let (n, k, m) = (h[0], h[1], h[2]);
    let mut classes = Vec::with_capacity(m);
    for i in 0..m {
        let (_, s) = lines.header("S", 2)?;
        if s[0] != i {
            return Err(Error::parse(lines.last, format!("expected block {i}, found {}", s[0])));
        }
        let mut class = Vec::with_capacity(s[1]);
        for _ in 0..s[1] {
            let (line, set) = lines.expect_numbers("a k-set")?;
            if set.len() != k || set.windows(2).any(|w| w[0] >= w[1]) || set.iter().any(|&x| x >= n) {
                return Err(Error::parse(line, format!("expected {k} increasing elements below {n}")));
            }
            class.push(set);
        }
        classes.push(class);
    }
    lines.finish()?;
    Ok(BaranyaiPartition { n, k, classes })
}

pub fn read_cover(text: &str) -> Result<CliqueCover> {
    let mut lines = Lines::new(text);
    let (_, h) = lines.header("K", 2)?;
    let (n, r) = (h[0], h[1]);
    let mut cliques = Vec::with_capacity(r);
    for _ in 0..r {
        let (line, c) = lines.expect_numbers("a clique")?;
        if c.windows(2).any(|w| w[0] >= w[1]) || c.iter().any(|&x| x >= n) {
            return Err(Error::parse(line, format!("expected increasing vertices below {n}")));
        }
        cliques.push(c);
    }
    lines.finish()?;
    Ok(CliqueCover::new(n, cliques))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baranyai::baranyai_partition;
    use proptest::prelude::*;

    #[test]
    fn graph_text() {
        let g = Graph::complete(3);
        assert_eq!(write_graph(&g), "G 3 3\n0 1\n0 2\n1 2\n");
        let parsed = read_graph("# triangle\nG 3 3\n\n0 1\n0 2 # comment\n1 2\n").unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn hypergraph_text() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(write_hypergraph(&h), "H 3 3\n0 1\n1 2\n0 2\n");
        assert_eq!(read_hypergraph(&write_hypergraph(&h)).unwrap(), h);
    }

    #[test]
    fn partition_text() {
        let p = baranyai_partition(4, 2).unwrap();
        let text = write_partition(&p);
        assert!(text.starts_with("B 4 2 3\nS 0 2\n"));
        assert_eq!(read_partition(&text).unwrap(), p);
    }

    #[test]
    fn cover_text() {
        let c = CliqueCover::new(4, vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(read_cover(&write_cover(&c)).unwrap(), c);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(read_graph("X 3 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_graph("G 3 1\n1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_graph("G 3 1\n0 1\n1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(read_graph("G 3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_graph("G 3 2\n0 1\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_graph("G 3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_hypergraph("H 3 1\n2 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_hypergraph("H 3 1\n0 3\n"), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(read_partition("B 4 2 1\nS 1 0\n"), Err(Error::Parse { .. })));
        assert!(read_hypergraph("").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..9).prop_flat_map(|n| {
            proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..20).prop_map(move |pairs| {
                Graph::new(n, pairs.into_iter().filter(|(u, v)| u != v && *u < n && *v < n)).unwrap()
            })
        })
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..8).prop_flat_map(|n| {
            let edge = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n);
            proptest::collection::vec(edge, 0..10).prop_map(move |e| Hypergraph::new(n, e).unwrap())
        })
    }

    proptest! {
        #[test]
        fn graph_round_trip(g in arb_graph()) {
            let text = write_graph(&g);
            prop_assert_eq!(read_graph(&text).unwrap(), g);
        }

        #[test]
        fn hypergraph_round_trip(h in arb_hypergraph()) {
            let text = write_hypergraph(&h);
            let back = read_hypergraph(&text).unwrap();
            prop_assert_eq!(write_hypergraph(&back), text);
            prop_assert_eq!(back, h);
        }
    }
}
