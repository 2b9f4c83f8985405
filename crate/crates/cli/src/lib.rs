//! Command-line front end. [`run`] is the whole program; `main` only wires it
//! to the process streams so tests can drive it in-process.

mod selftest;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hyperline::format::{
    read_graph, read_hypergraph, write_cover, write_graph, write_hypergraph, write_partition,
};
use hyperline::oracle::{self, COVER_SEARCH_MAX_VERTICES, DEFAULT_BUDGET};
use hyperline::{
    baranyai_partition, cover_to_hypergraph, line_graph, recognize, regular_hypergraph, Error,
    ErrorKind, Graph, Thresholds, Verdict, Witness,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hyperline",
    version,
    about = "Line graphs of uniform hypergraphs and regular hypergraphs via integral flows"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Line graph of a hypergraph (.hg in, .gr out).
    Linegraph {
        #[arg(long = "in", value_name = "H.hg")]
        input: PathBuf,
        #[arg(long, value_name = "G.gr")]
        out: Option<PathBuf>,
    },
    /// Decide whether a graph is a line graph of a k-uniform hypergraph with pair degree <= p.
    Recognize {
        #[arg(long = "in", value_name = "G.gr")]
        input: PathBuf,
        #[command(flatten)]
        params: KP,
        /// Run the exhaustive cover search when the verdict is inconclusive and the graph is small.
        #[arg(long)]
        oracle_fallback: bool,
    },
    /// Rebuild a hypergraph whose line graph is the input graph.
    Reconstruct {
        #[arg(long = "in", value_name = "G.gr")]
        input: PathBuf,
        #[command(flatten)]
        params: KP,
        #[arg(long, value_name = "H.hg")]
        out: Option<PathBuf>,
        #[arg(long, value_name = "C.kc")]
        cover_out: Option<PathBuf>,
    },
    /// Partition all k-subsets of 0..N into balanced classes.
    Baranyai {
        #[arg(short = 'N')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, value_name = "P.bp")]
        out: Option<PathBuf>,
    },
    /// A d-regular k-uniform hypergraph on N vertices.
    Regular {
        #[arg(short = 'N')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'd')]
        d: usize,
        /// Fail instead of repeating edges when d exceeds C(N-1, k-1).
        #[arg(long)]
        strict_simple: bool,
        #[arg(long, value_name = "H.hg")]
        out: Option<PathBuf>,
    },
    /// Brute-force checks for small instances.
    Oracle {
        #[command(subcommand)]
        check: OracleCheck,
    },
    /// Run the built-in invariant suite.
    Selftest,
}

#[derive(Debug, Args)]
struct KP {
    #[arg(short = 'k')]
    k: usize,
    #[arg(short = 'p')]
    p: usize,
}

#[derive(Debug, Subcommand)]
enum OracleCheck {
    /// Exhaustive Krausz cover search (at most 8 vertices).
    Cover {
        #[arg(long = "in", value_name = "G.gr")]
        input: PathBuf,
        #[command(flatten)]
        params: KP,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Graph isomorphism by backtracking (at most 10 vertices).
    Iso {
        #[arg(long = "in", value_name = "A.gr")]
        input: PathBuf,
        #[arg(long, value_name = "B.gr")]
        other: PathBuf,
    },
    /// Check regular-hypergraph realizability for all small N, k, d.
    Scan {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
    },
}

/// Failure of a command: either a library error or an I/O problem.
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the program on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e.kind() {
                ErrorKind::Input => EXIT_INPUT,
                ErrorKind::Negative => EXIT_NEGATIVE,
                ErrorKind::Resource | ErrorKind::Internal => EXIT_RESOURCE,
            }
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Linegraph { input, out: dest } => {
            let h = read_hypergraph(&read(&input)?)?;
            let g = line_graph(&h);
            emit(out, dest.as_deref(), &write_graph(&g))?;
            if dest.is_some() {
                writeln!(out, "LINEGRAPH vertices={} edges={}", g.order(), g.edge_count())?;
            }
            Ok(EXIT_OK)
        }
        Command::Recognize {
            input,
            params,
            oracle_fallback,
        } => {
            let g = read_graph(&read(&input)?)?;
            recognize_cmd(&g, params.k, params.p, oracle_fallback, out)
        }
        Command::Reconstruct {
            input,
            params: KP { k, p },
            out: dest,
            cover_out,
        } => {
            let g = read_graph(&read(&input)?)?;
            let verdict = recognize(&g, k, p)?;
            let Verdict::Member(cover) = &verdict else {
                print_verdict(&verdict, &Thresholds::new(k, p)?, out)?;
                let code = if verdict.is_non_member() { EXIT_NEGATIVE } else { EXIT_INPUT };
                return Ok(code);
            };
            let h = cover_to_hypergraph(&g, cover, k, p)?;
            writeln!(out, "RECONSTRUCTED vertices={} edges={}", h.order(), h.size())?;
            emit(out, dest.as_deref(), &write_hypergraph(&h))?;
            emit(out, cover_out.as_deref(), &write_cover(cover))?;
            Ok(EXIT_OK)
        }
        Command::Baranyai { n, k, out: dest } => {
            let partition = baranyai_partition(n, k)?;
            emit(out, dest.as_deref(), &write_partition(&partition))?;
            Ok(EXIT_OK)
        }
        Command::Regular {
            n,
            k,
            d,
            strict_simple,
            out: dest,
        } => {
            let r = regular_hypergraph(n, k, d, strict_simple)?;
            let text = format!(
                "# regular N={n} k={k} d={d} classes_used={} reused_classes={}\n{}",
                r.classes_used,
                r.reused_classes,
                write_hypergraph(&r.hypergraph)
            );
            emit(out, dest.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Oracle { check } => oracle_cmd(check, out),
        Command::Selftest => Ok(selftest::run(out)?),
    }
}

fn recognize_cmd(g: &Graph, k: usize, p: usize, fallback: bool, out: &mut dyn Write) -> Outcome {
    let t = Thresholds::new(k, p)?;
    let verdict = recognize(g, k, p)?;
    print_verdict(&verdict, &t, out)?;
    match verdict {
        Verdict::Member(_) => Ok(EXIT_OK),
        Verdict::NonMember(_) => Ok(EXIT_NEGATIVE),
        Verdict::Inconclusive { .. } if fallback && g.order() <= COVER_SEARCH_MAX_VERTICES => {
            match oracle::cover_search(g, k, p, DEFAULT_BUDGET)? {
                Some(cover) => {
                    writeln!(out, "ORACLE MEMBER cliques={}", cover.len())?;
                    out.write_all(write_cover(&cover).as_bytes())?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "ORACLE NONMEMBER")?;
                    writeln!(out, "# exhaustive search found no clique cover with load <= {k} and overlaps <= {p}")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Verdict::Inconclusive { .. } => Ok(EXIT_OK),
    }
}

fn print_verdict(verdict: &Verdict, t: &Thresholds, out: &mut dyn Write) -> std::io::Result<()> {
    let (k, p) = (t.k, t.p);
    match verdict {
        Verdict::Member(cover) => {
            writeln!(out, "MEMBER cliques={} required={}", cover.len(), t.edge_degree)?;
            out.write_all(write_cover(cover).as_bytes())?;
            writeln!(
                out,
                "# no forbidden structure and every edge lies in at least {} triangles; the cliques above form a valid cover",
                t.edge_degree
            )
        }
        Verdict::NonMember(w) => {
            writeln!(out, "NONMEMBER {w}")?;
            let why = match w {
                Witness::Claw(c) => format!(
                    "# vertex {} has {} pairwise non-adjacent neighbours; a line graph of a {k}-uniform hypergraph allows at most {k}",
                    c.center,
                    c.leaves.len()
                ),
                Witness::CommonNeighbors { a, b, common } => format!(
                    "# non-adjacent vertices {a} and {b} have at least {} common neighbours; at most p*k^2 = {} are possible",
                    common.len(),
                    p * k * k
                ),
                Witness::CliqueAttachment { clique, vertex, attached } => format!(
                    "# vertex {vertex} is adjacent to at least {} vertices of a maximal clique of size {}; at most p*k = {} are possible",
                    attached.len(),
                    clique.len(),
                    p * k
                ),
                Witness::CliqueOverlap { shared, .. } => format!(
                    "# two maximal cliques of size at least {} share at least {} vertices; at most p = {p} are possible",
                    t.big_clique,
                    shared.len()
                ),
            };
            writeln!(out, "{why}")
        }
        Verdict::Inconclusive {
            min_edge_degree,
            required,
        } => {
            writeln!(out, "INCONCLUSIVE min_edge_degree={min_edge_degree} required={required}")?;
            writeln!(
                out,
                "# no forbidden structure found, but some edge lies in only {min_edge_degree} triangles (fewer than {required})"
            )
        }
    }
}

fn oracle_cmd(check: OracleCheck, out: &mut dyn Write) -> Outcome {
    match check {
        OracleCheck::Cover {
            input,
            params: KP { k, p },
            budget,
        } => {
            let g = read_graph(&read(&input)?)?;
            Thresholds::new(k, p)?;
            match oracle::cover_search(&g, k, p, budget)? {
                Some(cover) => {
                    writeln!(out, "COVER cliques={}", cover.len())?;
                    out.write_all(write_cover(&cover).as_bytes())?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "NOCOVER")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        OracleCheck::Iso { input, other } => {
            let a = read_graph(&read(&input)?)?;
            let b = read_graph(&read(&other)?)?;
            if oracle::graphs_isomorphic(&a, &b)? {
                writeln!(out, "ISOMORPHIC")?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "NOT-ISOMORPHIC")?;
                Ok(EXIT_NEGATIVE)
            }
        }
        OracleCheck::Scan { n_max, k_max } => {
            let report = oracle::scan_regular_realizability(n_max, k_max)?;
            writeln!(
                out,
                "SCAN n_max={n_max} k_max={k_max} checked={} realized={} discrepancies={}",
                report.checked,
                report.realized,
                report.discrepancies.len()
            )?;
            for d in &report.discrepancies {
                writeln!(out, "DISCREPANCY N={} k={} d={} {}", d.n, d.k, d.d, d.detail)?;
            }
            Ok(if report.discrepancies.is_empty() {
                EXIT_OK
            } else {
                EXIT_RESOURCE
            })
        }
    }
}
