//! Deterministic invariant checks behind `hyperline selftest`.

use std::io::{self, Write};

use hyperline::baranyai::{extend, PartitionState};
use hyperline::format::{read_graph, read_hypergraph, write_graph, write_hypergraph};
use hyperline::oracle::{self, graph_from_mask, DEFAULT_BUDGET};
use hyperline::{
    baranyai_partition, line_graph, recognize, reconstruct, validate_cover, Graph, Hypergraph,
    Thresholds, Verdict,
};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

const CHECKS: &[(&str, Check)] = &[
    ("thresholds", thresholds),
    ("recognition-examples", recognition_examples),
    ("reconstruction-round-trip", reconstruction_round_trip),
    ("necessity-random", necessity_random),
    ("oracle-agreement", oracle_agreement),
    ("baranyai-invariants", baranyai_invariants),
    ("regular-scan", regular_scan),
    ("format-round-trip", format_round_trip),
];

pub(crate) fn run(out: &mut dyn Write) -> io::Result<i32> {
    let mut failed = 0;
    for (name, check) in CHECKS {
        match check() {
            Ok(detail) => writeln!(out, "ok {name} {detail}")?,
            Err(why) => {
                failed += 1;
                writeln!(out, "FAIL {name} {why}")?;
            }
        }
    }
    writeln!(out, "selftest passed={} failed={failed}", CHECKS.len() - failed)?;
    Ok(if failed == 0 {
        crate::EXIT_OK
    } else {
        crate::EXIT_RESOURCE
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn thresholds() -> Result<String, String> {
    for (k, p, f, s) in [(2, 1, 5, 4), (3, 1, 22, 8), (2, 2, 15, 10)] {
        let t = Thresholds::new(k, p).map_err(|e| e.to_string())?;
        ensure(t.edge_degree == f && t.big_clique == s, || {
            format!("k={k} p={p}: got f={} s={}", t.edge_degree, t.big_clique)
        })?;
    }
    Ok("cases=3".into())
}

fn recognition_examples() -> Result<String, String> {
    let verdict = |g: &Graph, k, p| recognize(g, k, p).map_err(|e| e.to_string());
    ensure(verdict(&Graph::complete(7), 2, 1)?.is_member(), || "K7 not a member".into())?;
    let claw = verdict(&Graph::complete_bipartite(1, 3), 2, 1)?;
    ensure(claw.to_string() == "NONMEMBER claw center=0 leaves=1,2,3", || {
        format!("K1,3 gave {claw}")
    })?;
    let k25 = verdict(&Graph::complete_bipartite(2, 5), 2, 1)?;
    ensure(k25.to_string().starts_with("NONMEMBER common-neighbors a=0 b=1"), || {
        format!("K2,5 gave {k25}")
    })?;
    let c5 = verdict(&Graph::cycle(5), 2, 1)?;
    ensure(matches!(c5, Verdict::Inconclusive { .. }), || format!("C5 gave {c5}"))?;
    Ok("cases=4".into())
}

fn reconstruction_round_trip() -> Result<String, String> {
    let cases = [
        (Graph::complete(7), 2, 1),
        (Graph::complete(24), 3, 1),
        (Graph::complete(7).disjoint_union(&Graph::complete(7)), 2, 1),
        (Graph::complete(17), 2, 2),
    ];
    for (g, k, p) in &cases {
        let h = reconstruct(g, *k, *p).map_err(|e| e.to_string())?;
        ensure(line_graph(&h) == *g, || format!("n={} k={k} p={p}: line graph differs", g.order()))?;
        ensure(h.is_k_uniform(*k) && h.multiplicity() <= *p, || {
            format!("n={} k={k} p={p}: wrong shape", g.order())
        })?;
    }
    Ok(format!("cases={}", cases.len()))
}

fn random_hypergraph(rng: &mut ChaCha8Rng, k: usize, p: usize, max_edges: usize) -> Hypergraph {
    let n = rng.gen_range(k..=k + 6);
    let target = rng.gen_range(1..=max_edges);
    let mut h = Hypergraph::empty(n);
    for _ in 0..4 * target {
        if h.size() == target {
            break;
        }
        let mut e = sample(rng, n, k).into_vec();
        e.sort_unstable();
        let mut edges = h.edges().to_vec();
        edges.push(e);
        let candidate = Hypergraph::new(n, edges).expect("sampled edge is valid");
        if candidate.multiplicity() <= p {
            h = candidate;
        }
    }
    h
}

fn necessity_random() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut members, mut tested) = (0, 0);
    for i in 0..1000 {
        let (k, p) = (rng.gen_range(2..=4), rng.gen_range(1..=3));
        let h = random_hypergraph(&mut rng, k, p, 10);
        let g = line_graph(&h);
        if g.edge_count() == 0 {
            continue;
        }
        tested += 1;
        let v = recognize(&g, k, p).map_err(|e| e.to_string())?;
        ensure(!v.is_non_member(), || format!("sample {i}: line graph rejected with {v}"))?;
        if let Verdict::Member(cover) = &v {
            members += 1;
            let ok = validate_cover(&g, cover, k, p).map_err(|e| e.to_string())?;
            ensure(ok.is_valid(), || format!("sample {i}: invalid cover"))?;
        }
    }
    Ok(format!("samples={tested} members={members}"))
}

fn oracle_agreement() -> Result<String, String> {
    let mut graphs = 0;
    for n in 1..=5 {
        let pairs = n * (n - 1) / 2;
        for mask in 1u64..1 << pairs {
            let g = graph_from_mask(n, mask);
            graphs += 1;
            for (k, p) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
                let v = recognize(&g, k, p).map_err(|e| e.to_string())?;
                let truth = oracle::cover_search(&g, k, p, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                let agree = match &v {
                    Verdict::Member(_) => truth.is_some(),
                    Verdict::NonMember(_) => truth.is_none(),
                    Verdict::Inconclusive { .. } => true,
                };
                ensure(agree, || format!("n={n} mask={mask:#x} k={k} p={p}: {v}"))?;
            }
        }
    }
    Ok(format!("graphs={graphs}"))
}

fn baranyai_invariants() -> Result<String, String> {
    let mut stages = 0;
    for n in 2..=8 {
        for k in 2..=n {
            let mut state = PartitionState::base(n, k).map_err(|e| e.to_string())?;
            while !state.is_complete() {
                state = extend(&state).map_err(|e| e.to_string())?.state;
                state.check_invariants().map_err(|e| format!("N={n} k={k}: {e}"))?;
                stages += 1;
            }
            let p = baranyai_partition(n, k).map_err(|e| e.to_string())?;
            let total: usize = p.classes.iter().map(Vec::len).sum();
            ensure(total == binom(n, k), || format!("N={n} k={k}: {total} sets"))?;
        }
    }
    Ok(format!("stages={stages}"))
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn regular_scan() -> Result<String, String> {
    let report = oracle::scan_regular_realizability(7, 4).map_err(|e| e.to_string())?;
    ensure(report.discrepancies.is_empty(), || {
        format!("{} discrepancies", report.discrepancies.len())
    })?;
    Ok(format!("checked={} realized={}", report.checked, report.realized))
}

fn format_round_trip() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let h = random_hypergraph(&mut rng, 3, 2, 8);
        let back = read_hypergraph(&write_hypergraph(&h)).map_err(|e| e.to_string())?;
        ensure(back == h, || "hypergraph changed".into())?;
        let g = line_graph(&h);
        let back = read_graph(&write_graph(&g)).map_err(|e| e.to_string())?;
        ensure(back == g, || "graph changed".into())?;
    }
    Ok("samples=50".into())
}
