//! `compart`: generate graphs, partition them into comparability subgraphs,
//! verify certificates, run the exact solver and the shift-graph reduction.
//!
//! Exit codes: 0 valid or sat, 1 invalid or unsat, 2 timeout, 3 usage or I/O.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use compart::comparability::verify_partition;
use compart::enumerate::connected_graphs_by_edges;
use compart::generators::{
    gen_double_shift, gen_gsp, gen_h, gen_interval_graph_gn, gen_random_bipartite, gen_random_subtree_family,
    gen_random_unit_intervals, GspSide,
};
use compart::io;
use compart::partition::{
    partition_alpha_comparability, partition_bipartite_log_omega, partition_by_color_bits, partition_gn_recursive,
    partition_gsp, partition_h, partition_lbip, partition_unit_interval,
};
use compart::shift::{
    bound_report, bound_report_arithmetic, cover_to_coloring, verify_proper, write_coloring, SHIFT_GRAPH_CAP,
};
use compart::solver::{decide_partition, exact_c, exact_p, search_p_greater_than_2, Decision, Exact, GreaterThanTwo};
use compart::subtree::{dump_psi, partition_subtree_disjointness};
use compart::{Budget, EdgePartition, Error, Graph, Mode};

const OK: u8 = 0;
const INVALID: u8 = 1;
const TIMEOUT: u8 = 2;
const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "compart", version, about = "Edge partitions of graphs into comparability subgraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family and write it in text format.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Partition the edges of an input and write the certificate.
    Partition(PartitionArgs),
    /// Check a certificate against a graph.
    Verify {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        cert: PathBuf,
    },
    /// Exact p(G), c(G), a fixed part count, or the two-part refutation search.
    Solve(SolveArgs),
    /// Turn a certified cover into a colouring.
    Reduce {
        #[command(subcommand)]
        target: ReduceTarget,
    },
    /// Compare p and c on every connected graph with few edges.
    Sweep {
        #[arg(long)]
        max_edges: usize,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

#[derive(Args)]
struct Output {
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Seed {
    #[arg(long)]
    seed: u64,
}

#[derive(Args, Clone, Copy)]
struct BudgetArg {
    /// Time budget in milliseconds; unlimited when unset.
    #[arg(long, env = "COMPART_DEFAULT_BUDGET_MS")]
    budget_ms: Option<u64>,
}

impl BudgetArg {
    fn budget(self) -> Budget {
        self.budget_ms.map_or_else(Budget::unlimited, Budget::from_millis)
    }
}

#[derive(Subcommand)]
enum Family {
    /// Intersection graph of all intervals [i, j], 1 <= i < j <= n.
    Gn {
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Double shift graph on triples of 1..=n.
    Shift {
        n: usize,
        /// Allow n above the default size cap.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        out: Output,
    },
    /// K_rows x K_cols with a pendant edge at every vertex.
    H {
        rows: usize,
        cols: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Random generalized split graph; structure is kept in the labels.
    Gsp {
        n: usize,
        #[arg(long, value_enum, default_value = "direct")]
        side: SideArg,
        #[command(flatten)]
        seed: Seed,
        #[command(flatten)]
        out: Output,
    },
    /// Random bipartite graph with sides a_* and b_*.
    Bipartite {
        a: usize,
        b: usize,
        p: f64,
        #[command(flatten)]
        seed: Seed,
        #[command(flatten)]
        out: Output,
    },
    /// Random unit intervals with left ends in [0, span].
    UnitIntervals {
        count: usize,
        span: u64,
        #[command(flatten)]
        seed: Seed,
        #[command(flatten)]
        out: Output,
    },
    /// Random tree with a family of subtrees.
    Subtrees {
        tree_size: usize,
        family_size: usize,
        #[command(flatten)]
        seed: Seed,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Direct,
    Complemented,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Gsp,
    Lbip,
    UnitInterval,
    Gn,
    ColorBits,
    OmegaBits,
    AlphaCliques,
    Subtree,
    H,
}

#[derive(Args)]
struct PartitionArgs {
    #[arg(value_enum)]
    algorithm: Algorithm,
    #[arg(short, long)]
    input: PathBuf,
    /// Certificate output; standard output when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Where to write the partitioned graph when it is derived from the
    /// input (line graph, interval graph, disjointness graph).
    #[arg(long)]
    graph_out: Option<PathBuf>,
    /// Write the subtree algorithm's child-index labels here.
    #[arg(long)]
    dump_psi: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArg,
}

#[derive(Clone, Copy)]
enum Query {
    P,
    C,
    T(usize),
    Gt2,
}

impl FromStr for Query {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "p" => Ok(Query::P),
            "c" => Ok(Query::C),
            "gt2" => Ok(Query::Gt2),
            _ => s
                .strip_prefix("t=")
                .and_then(|k| k.parse().ok())
                .filter(|&k| k >= 1)
                .map(Query::T)
                .ok_or_else(|| format!("expected p, c, gt2 or t=K with K >= 1, got {s:?}")),
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// `p`, `c`, `t=K`, or `gt2` (refute a two-part partition).
    query: Query,
    #[arg(short, long)]
    input: PathBuf,
    /// Part semantics for `t=K`.
    #[arg(long, default_value = "partition")]
    mode: Mode,
    /// Write the certificate of a successful search here.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArg,
}

#[derive(Subcommand)]
enum ReduceTarget {
    /// Cover of G_n to a colouring of the double shift graph S_n.
    Shift {
        #[arg(short)]
        n: usize,
        /// Certified cover of G_n; omit with --arithmetic.
        #[arg(short, long, required_unless_present = "arithmetic")]
        cert: Option<PathBuf>,
        /// Report only, using the recursive partition's part count.
        #[arg(long)]
        arithmetic: bool,
        /// Write `i j k color` lines here.
        #[arg(long)]
        coloring_out: Option<PathBuf>,
        /// Allow n above the default size cap.
        #[arg(long)]
        force: bool,
    },
}

/// A failure that ends the run with a message and an exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Timeout(_)) { TIMEOUT } else { USAGE };
        Failure { code, message: e.to_string() }
    }
}

impl From<compart::Timeout> for Failure {
    fn from(t: compart::Timeout) -> Self {
        Failure { code: TIMEOUT, message: format!("timeout nodes={}", t.nodes) }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into() }
}

type Run = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn parsed<T>(path: &Path, r: compart::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| usage(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    let result = match cli.command {
        Command::Gen { family } => generate(family),
        Command::Partition(args) => partition(args),
        Command::Verify { graph, cert } => verify(&graph, &cert),
        Command::Solve(args) => solve(args),
        Command::Reduce { target } => reduce(target),
        Command::Sweep { max_edges, budget } => sweep(max_edges, budget),
    };
    ExitCode::from(result.unwrap_or_else(|f| {
        eprintln!("error: {}", f.message);
        f.code
    }))
}

fn generate(family: Family) -> Run {
    let (text, out) = match family {
        Family::Gn { n, out } => {
            if n < 2 {
                return Err(usage("gn needs n >= 2"));
            }
            (io::write_graph(&gen_interval_graph_gn(n).0), out)
        }
        Family::Shift { n, force, out } => {
            if n > SHIFT_GRAPH_CAP && !force {
                return Err(usage(format!("shift graphs above n = {SHIFT_GRAPH_CAP} need --force")));
            }
            (io::write_graph(&gen_double_shift(n)), out)
        }
        Family::H { rows, cols, out } => (io::write_graph(&gen_h(rows, cols)), out),
        Family::Gsp { n, side, seed, out } => {
            if n == 0 {
                return Err(usage("gsp needs n >= 1"));
            }
            let side = match side {
                SideArg::Direct => GspSide::Direct,
                SideArg::Complemented => GspSide::Complemented,
            };
            let (g, s) = gen_gsp(n, seed.seed, side);
            (io::write_graph(&g.with_labels(io::gsp_labels(n, &s))?), out)
        }
        Family::Bipartite { a, b, p, seed, out } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(usage("p must lie in [0, 1]"));
            }
            (io::write_graph(&gen_random_bipartite(a, b, p, seed.seed).graph), out)
        }
        Family::UnitIntervals { count, span, seed, out } => {
            (io::write_intervals(&gen_random_unit_intervals(count, span, seed.seed)), out)
        }
        Family::Subtrees { tree_size, family_size, seed, out } => {
            if tree_size == 0 {
                return Err(usage("subtrees needs a non-empty tree"));
            }
            (io::write_subtree_family(&gen_random_subtree_family(tree_size, family_size, seed.seed)), out)
        }
    };
    emit(out.output.as_deref(), &text)?;
    Ok(OK)
}

/// Recovers `n` from a graph that must equal `G_n` exactly.
fn as_gn(g: &Graph) -> Result<usize, Failure> {
    let n = (2..).find(|&n| n * (n - 1) / 2 >= g.n()).expect("unbounded search");
    if n * (n - 1) / 2 != g.n() || gen_interval_graph_gn(n).0 != *g {
        return Err(usage("input is not the interval graph G_n produced by `gen gn`"));
    }
    Ok(n)
}

fn as_h(g: &Graph) -> Result<(usize, usize), Failure> {
    let last = g.n() / 2;
    let dims = g
        .label(last.wrapping_sub(1))
        .and_then(|l| l.strip_prefix("v_"))
        .and_then(|l| l.split_once('_'))
        .and_then(|(i, j)| Some((i.parse().ok()?, j.parse().ok()?)));
    match dims {
        Some((rows, cols)) if gen_h(rows, cols) == *g => Ok((rows, cols)),
        _ => Err(usage("input is not the pendant product graph produced by `gen h`")),
    }
}

fn partition(args: PartitionArgs) -> Run {
    let text = read(&args.input)?;
    let mut budget = args.budget.budget();
    let mut psi = None;
    let (graph, ep, derived) = match args.algorithm {
        Algorithm::Gsp => {
            let g = parsed(&args.input, io::read_graph(&text))?;
            let s = parsed(&args.input, io::gsp_from_labels(&g))?;
            let ep = partition_gsp(&g, &s)?;
            (g, ep, false)
        }
        Algorithm::Lbip => {
            let h = parsed(&args.input, io::read_graph(&text))?;
            let bp = parsed(&args.input, io::bipartition_from_labels(&h))?;
            let (l, ep) = partition_lbip(&h, &bp)?;
            (l, ep, true)
        }
        Algorithm::UnitInterval => {
            let u = parsed(&args.input, io::read_intervals(&text))?;
            let r = partition_unit_interval(&u)?;
            (r.graph, r.partition, true)
        }
        Algorithm::Gn => {
            let g = parsed(&args.input, io::read_graph(&text))?;
            let (built, ep) = partition_gn_recursive(as_gn(&g)?)?;
            (built, ep, false)
        }
        Algorithm::H => {
            let g = parsed(&args.input, io::read_graph(&text))?;
            let (rows, cols) = as_h(&g)?;
            let (built, ep) = partition_h(rows, cols);
            (built, ep, false)
        }
        Algorithm::ColorBits | Algorithm::OmegaBits | Algorithm::AlphaCliques => {
            let g = parsed(&args.input, io::read_graph(&text))?;
            let ep = match args.algorithm {
                Algorithm::ColorBits => partition_by_color_bits(&g, &mut budget)?,
                Algorithm::OmegaBits => partition_bipartite_log_omega(&g, &mut budget)?,
                _ => partition_alpha_comparability(&g, &mut budget)?,
            };
            (g, ep, false)
        }
        Algorithm::Subtree => {
            let f = parsed(&args.input, io::read_subtree_family(&text))?;
            let d = partition_subtree_disjointness(&f)?;
            psi = Some(dump_psi(&d.psi));
            (d.graph, d.partition, true)
        }
    };
    if let (Some(path), Some(text)) = (&args.dump_psi, &psi) {
        emit(Some(path), text)?;
    } else if args.dump_psi.is_some() {
        return Err(usage("--dump-psi applies to the subtree algorithm only"));
    }
    if let Some(path) = &args.graph_out {
        emit(Some(path), &io::write_graph(&graph))?;
    } else if derived {
        eprintln!("note: the certificate refers to a derived graph; pass --graph-out to save it");
    }
    emit(args.output.as_deref(), &io::write_certificate(&ep)?)?;
    let report = verify_partition(&graph, &ep)?;
    eprintln!("{report}");
    Ok(if report.is_valid() { OK } else { INVALID })
}

fn verify(graph: &Path, cert: &Path) -> Run {
    let g = parsed(graph, io::read_graph(&read(graph)?))?;
    let ep = parsed(cert, io::read_certificate(&read(cert)?))?;
    let report = verify_partition(&g, &ep)?;
    println!("{report}");
    Ok(if report.is_valid() { OK } else { INVALID })
}

fn write_cert(path: Option<&Path>, ep: &EdgePartition) -> Result<(), Failure> {
    match path {
        Some(p) => emit(Some(p), &io::write_certificate(ep)?),
        None => Ok(()),
    }
}

fn solve(args: SolveArgs) -> Run {
    let g = parsed(&args.input, io::read_graph(&read(&args.input)?))?;
    let mut budget = args.budget.budget();
    let stats = |b: &Budget| format!("nodes={} elapsed_ms={}", b.nodes(), b.elapsed().as_millis());
    match args.query {
        Query::P | Query::C => {
            let r = match args.query {
                Query::P => exact_p(&g, &mut budget),
                _ => exact_c(&g, &mut budget),
            };
            match r {
                Exact::Solved { value, partition } => {
                    println!("{value}");
                    eprintln!("{}", stats(&budget));
                    write_cert(args.output.as_deref(), &partition)?;
                    Ok(OK)
                }
                Exact::Timeout { lower, upper, nodes } => {
                    let upper = upper.map_or("?".to_string(), |u| u.to_string());
                    println!("timeout lower={lower} upper={upper} nodes={nodes}");
                    Ok(TIMEOUT)
                }
            }
        }
        Query::T(t) => {
            if t > compart::solver::MAX_PARTS {
                return Err(usage(format!("t must be at most {}", compart::solver::MAX_PARTS)));
            }
            match decide_partition(&g, t, args.mode, &mut budget) {
                Ok(Decision::Sat(ep)) => {
                    println!("sat {}", stats(&budget));
                    write_cert(args.output.as_deref(), &ep)?;
                    Ok(OK)
                }
                Ok(Decision::Unsat) => {
                    println!("unsat {}", stats(&budget));
                    Ok(INVALID)
                }
                Err(_) => {
                    println!("timeout {}", stats(&budget));
                    Ok(TIMEOUT)
                }
            }
        }
        Query::Gt2 => match search_p_greater_than_2(&g, &mut budget) {
            Ok(GreaterThanTwo::Proved) => {
                println!("proved_gt_2 {}", stats(&budget));
                Ok(INVALID)
            }
            Ok(GreaterThanTwo::Found(ep)) => {
                println!("found_2_partition {}", stats(&budget));
                write_cert(args.output.as_deref(), &ep)?;
                Ok(OK)
            }
            Err(_) => {
                println!("timeout {}", stats(&budget));
                Ok(TIMEOUT)
            }
        },
    }
}

fn reduce(target: ReduceTarget) -> Run {
    let ReduceTarget::Shift { n, cert, arithmetic, coloring_out, force } = target;
    if n < 3 {
        return Err(usage("reduce shift needs n >= 3"));
    }
    if arithmetic {
        let report = bound_report_arithmetic(n);
        println!("{report}");
        return Ok(if report.holds() { OK } else { INVALID });
    }
    if n > SHIFT_GRAPH_CAP && !force {
        return Err(usage(format!("n above {SHIFT_GRAPH_CAP} needs --force (or use --arithmetic)")));
    }
    let cert = cert.expect("clap requires --cert without --arithmetic");
    let ep = parsed(&cert, io::read_certificate(&read(&cert)?))?;
    let (gn, _) = gen_interval_graph_gn(n);
    let coloring = cover_to_coloring(&gn, n, &ep)?;
    if let Some(path) = &coloring_out {
        emit(Some(path), &write_coloring(&coloring))?;
    }
    let s = gen_double_shift(n);
    let proper = verify_proper(&s, &coloring.colors)?;
    if let Err((u, v)) = proper {
        eprintln!("colouring is not proper: vertices {u} and {v} share colour {}", coloring.colors[u]);
    }
    let report = bound_report(n, ep.len());
    println!("{report}");
    Ok(if proper.is_ok() && report.holds() { OK } else { INVALID })
}

fn sweep(max_edges: usize, budget: BudgetArg) -> Run {
    if max_edges == 0 || max_edges > 10 {
        return Err(usage("--max-edges must be between 1 and 10"));
    }
    let graphs = connected_graphs_by_edges(max_edges);
    let results: Vec<(Exact, Exact)> =
        graphs.par_iter().map(|g| (exact_p(g, &mut budget.budget()), exact_c(g, &mut budget.budget()))).collect();
    println!("index\tn\tm\tp\tc");
    let (mut timeouts, mut candidates) = (0, 0);
    for (i, (g, (p, c))) in graphs.iter().zip(&results).enumerate() {
        let show = |x: &Exact| match x {
            Exact::Solved { value, .. } => value.to_string(),
            Exact::Timeout { .. } => "timeout".to_string(),
        };
        println!("{i}\t{}\t{}\t{}\t{}", g.n(), g.m(), show(p), show(c));
        match (p, c) {
            (Exact::Solved { value: pv, .. }, Exact::Solved { value: cv, .. }) if pv > cv => {
                candidates += 1;
                println!("!!! P > C CANDIDATE: graph {i} edges {:?} p={pv} c={cv}", g.edges());
            }
            (Exact::Solved { .. }, Exact::Solved { .. }) => {}
            _ => timeouts += 1,
        }
    }
    eprintln!("graphs={} p_gt_c={candidates} timeouts={timeouts}", graphs.len());
    Ok(if timeouts > 0 { TIMEOUT } else { OK })
}
