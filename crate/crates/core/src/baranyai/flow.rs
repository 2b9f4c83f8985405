//! Integral maximum flow (Dinic) on small directed networks.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
}

/// A directed multigraph with integer capacities and distinguished terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    arcs: Vec<Arc>,
    source: usize,
    sink: usize,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        FlowNetwork {
            nodes,
            arcs: Vec::new(),
            source,
            sink,
        }
    }

    /// Appends an arc and returns its index. Parallel arcs are kept distinct.
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: u64) -> usize {
        self.arcs.push(Arc { from, to, capacity });
        self.arcs.len() - 1
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameters(m));
        if self.source >= self.nodes || self.sink >= self.nodes {
            return bad(format!("terminals outside 0..{}", self.nodes));
        }
        if self.source == self.sink {
            return bad("source and sink coincide".into());
        }
        for (i, a) in self.arcs.iter().enumerate() {
            if a.from >= self.nodes || a.to >= self.nodes {
                return bad(format!("arc {i} has an endpoint outside 0..{}", self.nodes));
            }
            if a.to == self.source {
                return bad(format!("arc {i} enters the source"));
            }
            if a.from == self.sink {
                return bad(format!("arc {i} leaves the sink"));
            }
        }
        Ok(())
    }
}

/// Per-arc flow values, indexed like [`FlowNetwork::arcs`], and the total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    pub values: Vec<u64>,
    pub value: u64,
}

impl Flow {
    /// Capacity and conservation check against `net`.
    pub fn is_feasible(&self, net: &FlowNetwork) -> bool {
        if self.values.len() != net.arcs.len() {
            return false;
        }
        let mut balance = vec![0i128; net.nodes];
        for (a, &f) in net.arcs.iter().zip(&self.values) {
            if f > a.capacity {
                return false;
            }
            balance[a.from] -= f as i128;
            balance[a.to] += f as i128;
        }
        (0..net.nodes).all(|v| v == net.source || v == net.sink || balance[v] == 0)
            && balance[net.sink] == self.value as i128
            && balance[net.source] == -(self.value as i128)
    }
}

struct Residual {
    // arc 2i is forward arc i, arc 2i+1 its reverse
    to: Vec<usize>,
    cap: Vec<u64>,
    adj: Vec<Vec<usize>>,
    level: Vec<usize>,
    cursor: Vec<usize>,
}

impl Residual {
    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(usize::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] == usize::MAX {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] != usize::MAX
    }

    fn dfs(&mut self, u: usize, t: usize, limit: u64) -> u64 {
        if u == t {
            return limit;
        }
        while self.cursor[u] < self.adj[u].len() {
            let e = self.adj[u][self.cursor[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]));
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }
}

/// An integral maximum flow. Deterministic: arcs are explored in insertion order.
pub fn max_flow(net: &FlowNetwork) -> Result<Flow> {
    net.validate()?;
    let m = net.arcs.len();
    let mut r = Residual {
        to: Vec::with_capacity(2 * m),
        cap: Vec::with_capacity(2 * m),
        adj: vec![Vec::new(); net.nodes],
        level: vec![0; net.nodes],
        cursor: vec![0; net.nodes],
    };
    for (i, a) in net.arcs.iter().enumerate() {
        r.to.push(a.to);
        r.cap.push(a.capacity);
        r.to.push(a.from);
        r.cap.push(0);
        r.adj[a.from].push(2 * i);
        r.adj[a.to].push(2 * i + 1);
    }
    let mut value = 0u64;
    while r.bfs(net.source, net.sink) {
        r.cursor.fill(0);
        loop {
            let pushed = r.dfs(net.source, net.sink, u64::MAX);
            if pushed == 0 {
                break;
            }
            value += pushed;
        }
    }
    let values = (0..m).map(|i| r.cap[2 * i + 1]).collect();
    Ok(Flow { values, value })
}
