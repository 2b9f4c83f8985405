//! Balanced partitions of all `k`-subsets of `0..N`, and `d`-regular
//! `k`-uniform hypergraphs built from them.
//!
//! With `L = lcm(N, k)` the `C(N, k)` subsets split into `M = k·C(N, k)/L`
//! classes of `L/k` sets each, every element occurring exactly `L/N` times in
//! every class. The construction reveals the ground set one element at a time.
//! After `ℓ` steps each eventual `k`-set is known only through its trace
//! `T ⊆ 0..ℓ` (a [`PartialSet`]), and every trace `T` is carried exactly
//! `C(N−ℓ, k−|T|)` times across all classes. To reveal element `ℓ`, a flow
//! network decides which partial sets absorb it:
//!
//! ```text
//!  source ──L/N──▶ class i ──1 per copy──▶ T ──C(N−1−ℓ, k−1−|T|)──▶ sink
//! ```
//!
//! Both the source cut and the sink cut have capacity `C(N−1, k−1)`, and a
//! fractional flow saturating both exists, so an integral one does too. Every
//! unit arc carrying flow adds the new element to one copy of its set.

mod flow;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use flow::{max_flow, Arc, Flow, FlowNetwork};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Largest ground set representable by a [`PartialSet`].
pub const MAX_GROUND_SET: usize = 64;

/// Largest `C(N, k)` the construction will attempt. Every `k`-set becomes a
/// unit arc in the last flow network, so this bounds memory as well as time.
pub const MAX_SUBSETS: u64 = 1 << 24;

/// A subset of the ground set `0..64` as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PartialSet(pub u64);

impl PartialSet {
    pub const EMPTY: PartialSet = PartialSet(0);

    pub fn from_elements(elements: &[usize]) -> Self {
        PartialSet(elements.iter().fold(0, |m, &e| m | 1 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        PartialSet(self.0 | 1 << e)
    }

    pub fn elements(self) -> Vec<usize> {
        (0..64).filter(|&e| self.contains(e)).collect()
    }
}

impl fmt::Display for PartialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Exact binomial coefficient, `None` on overflow. `C(n, r) = 0` for `r > n`.
pub fn binomial(n: u64, r: u64) -> Option<u64> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `C(n, r)` with a signed lower index; negative `r` gives 0.
fn binomial_signed(n: u64, r: i64) -> u64 {
    if r < 0 {
        0
    } else {
        binomial(n, r as u64).expect("guarded by PartitionState construction")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// The classes after the first `ell` elements have been revealed. Each class is
/// a multiset of partial sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionState {
    n: usize,
    k: usize,
    ell: usize,
    lcm: usize,
    classes: Vec<BTreeMap<PartialSet, u64>>,
}

impl PartitionState {
    /// State after revealing element 0: each class holds `L/N` copies of `{0}`
    /// and `L/k − L/N` copies of the empty set.
    pub fn base(n: usize, k: usize) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= k <= N, got N={n}, k={k}"
            )));
        }
        if n > MAX_GROUND_SET {
            return Err(Error::Overflow(format!(
                "N={n} exceeds the {MAX_GROUND_SET}-element ground set"
            )));
        }
        let total = binomial(n as u64, k as u64)
            .filter(|&c| c < 1 << 62)
            .ok_or_else(|| Error::Overflow(format!("C({n},{k}) does not fit in 62 bits")))?;
        if total > MAX_SUBSETS {
            return Err(Error::Overflow(format!(
                "C({n},{k}) = {total} exceeds the limit of {MAX_SUBSETS} subsets"
            )));
        }
        let l = lcm(n, k);
        let m = k as u64 * total / l as u64;
        let with_first = (l / n) as u64;
        let without = (l / k - l / n) as u64;
        let mut class = BTreeMap::new();
        if without > 0 {
            class.insert(PartialSet::EMPTY, without);
        }
        class.insert(PartialSet::from_elements(&[0]), with_first);
        Ok(PartitionState {
            n,
            k,
            ell: 1,
            lcm: l,
            classes: vec![class; m as usize],
        })
    }

    pub fn ground_set(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of elements revealed so far.
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `lcm(N, k)`.
    pub fn lcm(&self) -> usize {
        self.lcm
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Sets per class, `L/k`.
    pub fn class_size(&self) -> usize {
        self.lcm / self.k
    }

    /// Occurrences of each element per class, `L/N`.
    pub fn per_element(&self) -> usize {
        self.lcm / self.n
    }

    pub fn is_complete(&self) -> bool {
        self.ell == self.n
    }

    /// Partial sets of class `i` with their multiplicities, in bitmask order.
    pub fn class(&self, i: usize) -> impl Iterator<Item = (PartialSet, u64)> + '_ {
        self.classes[i].iter().map(|(&t, &m)| (t, m))
    }

    /// Total multiplicity of `t` over all classes.
    pub fn global_multiplicity(&self, t: PartialSet) -> u64 {
        self.classes.iter().filter_map(|c| c.get(&t)).sum()
    }

    /// Checks the per-class counts, the per-element counts and the global
    /// trace counts `C(N−ℓ, k−|T|)`; at `ℓ = N` also that the classes partition
    /// all `k`-subsets.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let class_size = self.class_size() as u64;
        let per_element = self.per_element() as u64;
        for (i, class) in self.classes.iter().enumerate() {
            let total: u64 = class.values().sum();
            if total != class_size {
                return Err(format!("class {i} holds {total} sets, expected {class_size}"));
            }
            for e in 0..self.ell {
                let hits: u64 = class.iter().filter(|(t, _)| t.contains(e)).map(|(_, m)| m).sum();
                if hits != per_element {
                    return Err(format!(
                        "element {e} occurs {hits} times in class {i}, expected {per_element}"
                    ));
                }
            }
            if let Some(t) = class.keys().find(|t| t.0 >> self.ell != 0 || t.len() > self.k) {
                return Err(format!("class {i} holds {t}, outside the revealed prefix"));
            }
        }
        for mask in 0u64..1 << self.ell {
            let t = PartialSet(mask);
            if t.len() > self.k {
                continue;
            }
            let expected = binomial_signed((self.n - self.ell) as u64, self.k as i64 - t.len() as i64);
            let got = self.global_multiplicity(t);
            if got != expected {
                return Err(format!("{t} occurs {got} times overall, expected {expected}"));
            }
        }
        if self.is_complete() {
            for class in &self.classes {
                if let Some(t) = class.keys().find(|t| t.len() != self.k) {
                    return Err(format!("complete state still holds partial set {t}"));
                }
            }
        }
        Ok(())
    }
}

/// What a unit of flow on an arc of the extension network means.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcLabel {
    Source { class: usize },
    /// One copy of `set` inside `class`.
    Unit { class: usize, set: PartialSet, copy: u64 },
    Sink { set: PartialSet },
}

#[derive(Debug, Clone)]
pub struct ExtensionNetwork {
    pub network: FlowNetwork,
    /// One label per arc, same indexing.
    pub labels: Vec<ArcLabel>,
}

/// Node 0 is the source, node 1 the sink, nodes `2..2+M` the classes, and the
/// remaining nodes the distinct partial sets of size below `k`, in bitmask order.
pub fn build_extension_network(state: &PartitionState) -> Result<ExtensionNetwork> {
    if state.is_complete() {
        return Err(Error::InvalidParameters(format!(
            "all {} elements already revealed",
            state.n
        )));
    }
    let k = state.k;
    let open: BTreeSet<PartialSet> = state
        .classes
        .iter()
        .flat_map(|c| c.keys().copied())
        .filter(|t| t.len() < k)
        .collect();
    let set_node: BTreeMap<PartialSet, usize> = open
        .iter()
        .enumerate()
        .map(|(i, &t)| (t, 2 + state.class_count() + i))
        .collect();
    let mut network = FlowNetwork::new(2 + state.class_count() + open.len(), 0, 1);
    let mut labels = Vec::new();
    for class in 0..state.class_count() {
        network.add_arc(0, 2 + class, state.per_element() as u64);
        labels.push(ArcLabel::Source { class });
    }
    for (class, sets) in state.classes.iter().enumerate() {
        for (&set, &mult) in sets {
            let Some(&node) = set_node.get(&set) else { continue };
            for copy in 0..mult {
                network.add_arc(2 + class, node, 1);
                labels.push(ArcLabel::Unit { class, set, copy });
            }
        }
    }
    let remaining = (state.n - 1 - state.ell) as u64;
    for (&set, &node) in &set_node {
        let cap = binomial_signed(remaining, k as i64 - set.len() as i64 - 1);
        network.add_arc(node, 1, cap);
        labels.push(ArcLabel::Sink { set });
    }
    Ok(ExtensionNetwork { network, labels })
}

#[derive(Debug, Clone)]
pub struct Extension {
    pub state: PartitionState,
    pub flow_value: u64,
}

/// Reveals element `ell`, routing it into partial sets along an integral
/// saturating flow.
pub fn extend(state: &PartitionState) -> Result<Extension> {
    let ext = build_extension_network(state)?;
    let flow = max_flow(&ext.network)?;
    let expected = binomial((state.n - 1) as u64, (state.k - 1) as u64)
        .ok_or_else(|| Error::Overflow("C(N-1,k-1)".into()))?;
    if flow.value != expected {
        return Err(Error::Internal(format!(
            "extension flow for N={} k={} ell={} has value {}, expected {expected}",
            state.n, state.k, state.ell, flow.value
        )));
    }
    let new_element = state.ell;
    let mut next = state.clone();
    for (label, &f) in ext.labels.iter().zip(&flow.values) {
        if let (ArcLabel::Unit { class, set, .. }, 1) = (label, f) {
            let sets = &mut next.classes[*class];
            let m = sets.get_mut(set).expect("label refers to a present set");
            *m -= 1;
            if *m == 0 {
                sets.remove(set);
            }
            *sets.entry(set.with(new_element)).or_insert(0) += 1;
        }
    }
    next.ell += 1;
    Ok(Extension {
        state: next,
        flow_value: flow.value,
    })
}

/// A partition of all `k`-subsets of `0..N` into equally sized classes in which
/// every element occurs equally often.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaranyaiPartition {
    pub n: usize,
    pub k: usize,
    /// Each class is a sorted list of sorted `k`-sets.
    pub classes: Vec<Vec<Vec<usize>>>,
}

impl BaranyaiPartition {
    pub fn from_state(state: &PartitionState) -> Result<Self> {
        if !state.is_complete() {
            return Err(Error::InvalidParameters(format!(
                "only {} of {} elements revealed",
                state.ell, state.n
            )));
        }
        let classes = state
            .classes
            .iter()
            .map(|c| {
                let mut sets: Vec<Vec<usize>> = c
                    .iter()
                    .flat_map(|(t, &m)| std::iter::repeat(t.elements()).take(m as usize))
                    .collect();
                sets.sort_unstable();
                sets
            })
            .collect();
        Ok(BaranyaiPartition {
            n: state.n,
            k: state.k,
            classes,
        })
    }
}

/// Runs the construction to completion.
pub fn baranyai_partition(n: usize, k: usize) -> Result<BaranyaiPartition> {
    let mut state = PartitionState::base(n, k)?;
    while !state.is_complete() {
        state = extend(&state)?.state;
    }
    state.check_invariants().map_err(Error::Internal)?;
    BaranyaiPartition::from_state(&state)
}

/// A `d`-regular `k`-uniform hypergraph assembled from partition classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularHypergraph {
    pub hypergraph: Hypergraph,
    /// Number of classes taken, `dN/L`.
    pub classes_used: usize,
    /// Set when more classes were needed than exist, so classes were reused
    /// and the hypergraph has repeated edges.
    pub reused_classes: bool,
}

/// A `d`-regular `k`-uniform hypergraph on `0..N`; exists exactly when `k | dN`.
///
/// When `d > C(N−1, k−1)` no simple hypergraph exists and the classes are
/// cycled, repeating edges; `strict_simple` turns that case into an error.
pub fn regular_hypergraph(n: usize, k: usize, d: usize, strict_simple: bool) -> Result<RegularHypergraph> {
    if k < 2 || k > n || d < 1 {
        return Err(Error::InvalidParameters(format!(
            "need N >= k >= 2 and d >= 1, got N={n}, k={k}, d={d}"
        )));
    }
    if d.checked_mul(n).ok_or_else(|| Error::Overflow("d*N".into()))? % k != 0 {
        return Err(Error::NotDivisible { n, k, d });
    }
    let partition = baranyai_partition(n, k)?;
    regular_from_partition(&partition, d, strict_simple)
}

/// Same as [`regular_hypergraph`] but reusing an existing partition.
pub fn regular_from_partition(
    partition: &BaranyaiPartition,
    d: usize,
    strict_simple: bool,
) -> Result<RegularHypergraph> {
    let (n, k) = (partition.n, partition.k);
    if d < 1 {
        return Err(Error::InvalidParameters("d must be positive".into()));
    }
    let dn = d.checked_mul(n).ok_or_else(|| Error::Overflow("d*N".into()))?;
    if dn % k != 0 {
        return Err(Error::NotDivisible { n, k, d });
    }
    let q = dn / lcm(n, k);
    let available = partition.classes.len();
    if q > available && strict_simple {
        return Err(Error::NotSimple {
            d,
            needed: q,
            available,
        });
    }
    let edges: Vec<Vec<usize>> = (0..q)
        .flat_map(|i| partition.classes[i % available].iter().cloned())
        .collect();
    Ok(RegularHypergraph {
        hypergraph: Hypergraph::new(n, edges)?,
        classes_used: q,
        reused_classes: q > available,
    })
}
