//! `bpsplit`: biclique partitions of split graphs from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification or theorem check fails
//! (or the solver budget runs out), 2 on usage and input errors.

mod output;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use bpsplit_core::biclique::{parse_partition, write_partition};
use bpsplit_core::cliques::enumerate_maximal_cliques;
use bpsplit_core::cube::{
    addressing_to_partition, graham_pollak_addressing, parse_addressing, partition_to_addressing,
    write_addressing,
};
use bpsplit_core::io::{parse_graph, write_graph};
use bpsplit_core::{
    bp_exact, bp_split, check_theorem, classify, generate, recognize_split, verify_partition,
    Budget, GenKind, GenSpec, Graph, SolverConfig, SolverError,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::output::{Out, Reply};

#[derive(Parser, Debug)]
#[command(
    name = "bpsplit",
    version,
    about = "Biclique partitions of split graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Print timing information on stderr.
    #[arg(long, global = true)]
    stats: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One JSON object per line.
    Machine,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Stop the exact search after this many nodes.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Stop the exact search after this many milliseconds.
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Worker threads for the exact search (1 gives a deterministic witness).
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Largest edge count accepted by the exact search.
    #[arg(long, default_value_t = bpsplit_core::solver::DEFAULT_MAX_EDGES)]
    max_edges: usize,
}

impl BudgetArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            max_edges: self.max_edges,
            budget: Budget {
                max_nodes: self.budget_nodes,
                max_time: self.budget_ms.map(Duration::from_millis),
            },
            threads: self.threads.max(1),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the graph is split and print a split partition with |S| = α.
    Recognize { graph: PathBuf },
    /// Classify a split partition (the recognised one unless --clique is given).
    Classify {
        graph: PathBuf,
        /// Comma-separated clique side; every other vertex is the independent side.
        #[arg(long, value_delimiter = ',')]
        clique: Option<Vec<usize>>,
    },
    /// Closed-form biclique partition number of a split graph, with a star partition.
    Bp { graph: PathBuf },
    /// Exact biclique partition number by branch and bound.
    BpExact {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Number of maximal cliques.
    Mc {
        graph: PathBuf,
        /// Count maximal cliques of the complement instead.
        #[arg(long)]
        complement: bool,
    },
    /// Print an addressing: induced by a partition, by the star construction, or the
    /// nested-star addressing of K_n.
    Address {
        graph: Option<PathBuf>,
        #[arg(long, conflicts_with = "graham_pollak")]
        partition: Option<PathBuf>,
        /// Addressing of K_n into the squashed (n-1)-cube.
        #[arg(long, value_name = "N")]
        graham_pollak: Option<usize>,
    },
    /// Check a partition or addressing file against a graph.
    Verify {
        graph: PathBuf,
        #[arg(
            long,
            required_unless_present = "addressing",
            conflicts_with = "addressing"
        )]
        partition: Option<PathBuf>,
        #[arg(long)]
        addressing: Option<PathBuf>,
    },
    /// Generate a graph in edge-list format.
    Gen {
        #[arg(value_enum)]
        kind: GenKindArg,
        /// Vertex count (complete, path, cycle) or leaf count (star).
        #[arg(long)]
        n: Option<usize>,
        /// Clique side size (split).
        #[arg(long)]
        k: Option<usize>,
        /// Independent side size (split).
        #[arg(long)]
        s: Option<usize>,
        /// Probability of each clique/independent cross edge (split).
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the exact solver, the closed form and mc(G^c) - 1.
    Check {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKindArg {
    Split,
    Complete,
    Path,
    Cycle,
    Star,
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let mut out = Out::new(cli.format);
    let start = Instant::now();
    let code = match run(&cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    if cli.stats {
        for line in out.take_stats() {
            eprintln!("{line}");
        }
        eprintln!("elapsed: {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
    }
    ExitCode::from(code)
}

fn run(command: &Command, out: &mut Out) -> Result<u8> {
    match command {
        Command::Recognize { graph } => {
            let g = load_graph(graph)?;
            match recognize_split(&g) {
                Some(p) => out.emit(Reply::split_partition("recognize", &p)),
                None => out.emit(Reply::new(
                    "recognize",
                    "split: no\n",
                    json!({ "split": false }),
                )),
            }
            Ok(0)
        }
        Command::Classify { graph, clique } => {
            let g = load_graph(graph)?;
            let p = match clique {
                Some(k) => {
                    let s: Vec<usize> = g.vertices().filter(|v| !k.contains(v)).collect();
                    classify(&g, k, &s)?
                }
                None => recognize_split(&g).ok_or_else(|| anyhow!("graph is not split"))?,
            };
            out.emit(Reply::split_partition("classify", &p));
            Ok(0)
        }
        Command::Bp { graph } => {
            let g = load_graph(graph)?;
            let r = bp_split(&g)?;
            let text = format!("bp = {}\n{}", r.value, write_partition(&r.witness));
            out.emit(Reply::new(
                "bp",
                text,
                json!({
                    "bp": r.value,
                    "class": r.partition.class(),
                    "omega": r.partition.omega(),
                    "partition": output::partition_json(&r.witness),
                }),
            ));
            Ok(0)
        }
        Command::BpExact { graph, budget } => {
            let g = load_graph(graph)?;
            match bp_exact(&g, &budget.config()) {
                Ok(r) => {
                    let text = format!(
                        "bp = {}\nnodes = {}\n{}",
                        r.optimum,
                        r.nodes_explored,
                        write_partition(&r.witness)
                    );
                    out.emit(Reply::new(
                        "bp-exact",
                        text,
                        json!({
                            "bp": r.optimum,
                            "optimal": true,
                            "nodes": r.nodes_explored,
                            "partition": output::partition_json(&r.witness),
                        }),
                    ));
                    out.stat(format!("search: {:.3} ms", r.elapsed.as_secs_f64() * 1e3));
                    Ok(0)
                }
                Err(SolverError::BudgetExceeded {
                    upper_bound,
                    witness,
                    nodes_explored,
                }) => {
                    let text = format!(
                        "budget exceeded: bp <= {upper_bound} (not proven optimal)\nnodes = {nodes_explored}\n{}",
                        write_partition(&witness)
                    );
                    out.emit(Reply::new(
                        "bp-exact",
                        text,
                        json!({
                            "bp": upper_bound,
                            "optimal": false,
                            "nodes": nodes_explored,
                            "partition": output::partition_json(&witness),
                        }),
                    ));
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Mc { graph, complement } => {
            let g = load_graph(graph)?;
            let target = if *complement { g.complement() } else { g };
            let cliques = enumerate_maximal_cliques(&target)?;
            out.emit(Reply::new(
                "mc",
                format!("mc = {}\n", cliques.len()),
                json!({ "complement": complement, "mc": cliques.len(), "cliques": cliques }),
            ));
            Ok(0)
        }
        Command::Address {
            graph,
            partition,
            graham_pollak,
        } => {
            let a = match (graph, graham_pollak) {
                (_, Some(n)) => graham_pollak_addressing(*n)?,
                (None, None) => bail!("address needs a graph or --graham-pollak N"),
                (Some(path), None) => {
                    let g = load_graph(path)?;
                    let split = recognize_split(&g);
                    let p = match partition {
                        Some(file) => parse_partition(&read_input(file)?)?,
                        None => bp_split(&g)?.witness,
                    };
                    let p = match &split {
                        Some(sp) => p.oriented_for_independent_side(sp.independent_side()),
                        None => p,
                    };
                    partition_to_addressing(&g, &p)?
                }
            };
            let strings: Vec<String> = a.strings().iter().map(ToString::to_string).collect();
            out.emit(Reply::new(
                "address",
                write_addressing(&a),
                json!({ "width": a.width(), "strings": strings }),
            ));
            Ok(0)
        }
        Command::Verify {
            graph,
            partition,
            addressing,
        } => {
            let g = load_graph(graph)?;
            let p = match (partition, addressing) {
                (Some(file), _) => parse_partition(&read_input(file)?)?,
                (None, Some(file)) => {
                    let a = parse_addressing(&read_input(file)?)?;
                    if a.vertex_count() != g.n() {
                        bail!(
                            "addressing has {} vertices, graph has {}",
                            a.vertex_count(),
                            g.n()
                        );
                    }
                    addressing_to_partition(&a)
                }
                (None, None) => bail!("verify needs --partition or --addressing"),
            };
            match verify_partition(&g, &p)? {
                Ok(()) => {
                    out.emit(Reply::new(
                        "verify",
                        "VALID\n",
                        json!({ "valid": true, "bicliques": p.len() }),
                    ));
                    Ok(0)
                }
                Err(v) => {
                    out.emit(Reply::new(
                        "verify",
                        format!("INVALID: {v}\n"),
                        json!({ "valid": false, "violation": v }),
                    ));
                    Ok(1)
                }
            }
        }
        Command::Gen {
            kind,
            n,
            k,
            s,
            p,
            seed,
        } => {
            let need =
                |x: Option<usize>, flag: &str| x.ok_or_else(|| anyhow!("gen needs --{flag}"));
            let kind = match kind {
                GenKindArg::Split => GenKind::Split {
                    k: need(*k, "k")?,
                    s: need(*s, "s")?,
                    edge_prob: p.ok_or_else(|| anyhow!("gen split needs --p"))?,
                },
                GenKindArg::Complete => GenKind::Complete { n: need(*n, "n")? },
                GenKindArg::Path => GenKind::Path { n: need(*n, "n")? },
                GenKindArg::Cycle => GenKind::Cycle { n: need(*n, "n")? },
                GenKindArg::Star => GenKind::Star {
                    leaves: need(*n, "n")?,
                },
            };
            let generated = generate(&GenSpec { kind, seed: *seed })?;
            // the edge list is already machine readable; both formats emit it
            out.raw(write_graph(&generated.graph));
            Ok(0)
        }
        Command::Check { graph, budget } => {
            let g = load_graph(graph)?;
            let r = check_theorem(&g, &budget.config())?;
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            out.emit(Reply::new(
                "check",
                format!(
                    "exact={} closed-form={} mc-1={} {verdict}\n",
                    r.exact,
                    r.closed_form,
                    r.mc_minus_one()
                ),
                json!({
                    "exact": r.exact,
                    "closed_form": r.closed_form,
                    "mc_complement": r.mc_complement,
                    "mc_minus_one": r.mc_minus_one(),
                    "verdict": verdict,
                }),
            ));
            Ok(if r.pass { 0 } else { 1 })
        }
    }
}
