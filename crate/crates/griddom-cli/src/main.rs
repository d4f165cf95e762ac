//! `griddom` — construct, simulate, solve, verify and render (k-distance)
//! dominating sets on m×n grid graphs.
//!
//! Exit codes: 0 success / dominated, 1 verification failure or insufficient
//! agents, 2 usage or file error, 3 search budget exhausted.

use clap::{Parser, Subcommand, ValueEnum};
use griddom::constructor::{bounds, construct, construct_best, gamma_formula, verify_k_domination};
use griddom::diagonal::{DiagonalParams, Orientation};
use griddom::document::{render, Meta, RenderStyle, SetDocument};
use griddom::error::Error;
use griddom::greedy::{greedy_dominate, GreedyConfig, TieBreak};
use griddom::grid::{GridSpec, Vertex, VertexSet};
use griddom::oracle::{exact_min_dominating, Budget};
use griddom::sim::{run, trace_to_jsonl, Activation, Placement, SimConfig};
use rand::RngCore;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

const EXIT_OK: u8 = 0;
const EXIT_NOT_DOMINATED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "griddom", version, about = "Dominating sets on grid graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TieBreakArg {
    Lex,
    Random,
    Adversarial,
}

#[derive(Subcommand)]
enum Command {
    /// Build a dominating set from a diagonal pattern
    Construct {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Residue class of the pattern (ignored with --best)
        #[arg(long, default_value_t = 0)]
        r: u32,
        /// Sweep all residues and orientations, keep the smallest set
        #[arg(long)]
        best: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the distributed settlement protocol
    Simulate {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        agents: usize,
        /// Master seed; omit for a fresh one (printed for replay)
        #[arg(long)]
        seed: Option<u64>,
        /// "random" or explicit positions "x,y;x,y;..."
        #[arg(long, default_value = "random")]
        placement: String,
        /// "random" or a fixed activation order "0,3,1,..."
        #[arg(long, default_value = "random")]
        activation: String,
        /// Write the event trace as JSON lines
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Branch-and-bound exact domination number (small grids)
    Exact {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Abort the search after this many seconds
        #[arg(long)]
        timeout_sec: Option<u64>,
        /// Allow instances beyond the 36-vertex guard (hard cap 64)
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classical greedy baseline
    Greedy {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = TieBreakArg::Lex)]
        tie_break: TieBreakArg,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether a stored set dominates its grid
    Verify {
        #[arg(long)]
        set: PathBuf,
    },
    /// Closed-form lower/upper bounds for an instance
    Bounds {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Render a stored set as ASCII or SVG
    Render {
        #[arg(long)]
        set: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExhausted { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

fn emit(doc: &SetDocument, format: Format, out: &Option<PathBuf>) -> griddom::Result<()> {
    let text = match format {
        Format::Json => doc.to_json()?,
        Format::Ascii => render(doc, RenderStyle::Ascii)?,
        Format::Svg => render(doc, RenderStyle::Svg)?,
    };
    match out {
        Some(path) => fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn grid(m: u32, n: u32) -> griddom::Result<GridSpec> {
    if m == 0 || n == 0 {
        return Err(Error::DocumentMismatch {
            m,
            n,
            reason: "grid dimensions must be positive".into(),
        });
    }
    Ok(GridSpec::new(m, n))
}

fn vertices_json(set: &VertexSet) -> serde_json::Value {
    serde_json::json!(set.iter().map(|u| [u.x, u.y]).collect::<Vec<_>>())
}

fn dispatch(cmd: Command) -> griddom::Result<u8> {
    match cmd {
        Command::Construct { m, n, k, r, best, format, out } => {
            let g = grid(m, n)?;
            let result = if best {
                construct_best(g, k)?
            } else {
                construct(g, &DiagonalParams::new(k, r, Orientation::Xy)?)
            };
            let size = result.dominating_set.len() as u64;
            let b = bounds(g, k)?;
            eprintln!("size {size}  upper-bound {}", b.construction_upper);
            if k == 1 {
                if let Ok(gamma) = gamma_formula(m, n) {
                    eprintln!("gamma {gamma}  gap {}", size - gamma);
                }
            }
            let meta = Meta {
                method: Some(if best { "construct_best" } else { "construct" }.into()),
                params: Some(serde_json::json!({
                    "r": result.params.r,
                    "orientation": format!("{:?}", result.params.orientation),
                    "orphans": vertices_json(&result.orphan_part),
                })),
                seed: None,
            };
            let doc = SetDocument::new(g, k, &result.dominating_set, Some(meta));
            emit(&doc, format, &out)?;
            Ok(EXIT_OK)
        }
        Command::Simulate { m, n, k, agents, seed, placement, activation, trace, format, out } => {
            let g = grid(m, n)?;
            let seed = seed.unwrap_or_else(|| rand::thread_rng().next_u64());
            eprintln!("seed {seed}");
            let placement = match placement.as_str() {
                "random" => Placement::Random(seed),
                text => Placement::Explicit(parse_positions(text)?),
            };
            let activation = match activation.as_str() {
                "random" => Activation::Random(seed.wrapping_add(0x9e37_79b9_7f4a_7c15)),
                text => Activation::Fixed(parse_order(text)?),
            };
            let cfg = SimConfig { grid: g, k, agent_count: agents, placement, activation, max_epochs: None };
            let outcome = run(cfg)?;
            if let Some(path) = trace {
                fs::write(path, trace_to_jsonl(&outcome.events))?;
            }
            let state = &outcome.final_state;
            let occupied: VertexSet = state.cluster.union(&state.orphan_occupied).copied().collect();
            eprintln!(
                "settled {}  cluster {}  orphans {}  epochs {}  move-steps {}  dominated {}",
                outcome.settled_count,
                state.cluster.len(),
                state.orphan_occupied.len(),
                state.epoch,
                state.move_steps,
                outcome.dominated
            );
            let meta = Meta {
                method: Some("simulate".into()),
                params: Some(serde_json::json!({
                    "agents": agents,
                    "orphans": vertices_json(&state.orphan_occupied),
                })),
                seed: Some(seed),
            };
            let doc = SetDocument::new(g, k, &occupied, Some(meta));
            emit(&doc, format, &out)?;
            Ok(if outcome.dominated { EXIT_OK } else { EXIT_NOT_DOMINATED })
        }
        Command::Exact { m, n, k, timeout_sec, force, format, out } => {
            let g = grid(m, n)?;
            if g.vertex_count() > 36 && !force {
                return Err(Error::InstanceTooLarge {
                    vertices: g.vertex_count(),
                    limit: 36,
                });
            }
            let budget = Budget {
                max_nodes: None,
                max_time: timeout_sec.map(Duration::from_secs),
            };
            let result = exact_min_dominating(g, k, Some(budget))?;
            eprintln!(
                "gamma {}  nodes {}  elapsed {:?}",
                result.gamma, result.nodes_explored, result.elapsed
            );
            let meta = Meta { method: Some("exact".into()), params: None, seed: None };
            let doc = SetDocument::new(g, k, &result.optimum, Some(meta));
            emit(&doc, format, &out)?;
            Ok(EXIT_OK)
        }
        Command::Greedy { m, n, tie_break, seed, format, out } => {
            let g = grid(m, n)?;
            let tie_break = match tie_break {
                TieBreakArg::Lex => TieBreak::Lex,
                TieBreakArg::Adversarial => TieBreak::Adversarial,
                TieBreakArg::Random => {
                    let seed = seed.unwrap_or_else(|| rand::thread_rng().next_u64());
                    eprintln!("seed {seed}");
                    TieBreak::Random(seed)
                }
            };
            let set = greedy_dominate(g, &GreedyConfig { tie_break });
            eprintln!("size {}", set.len());
            let meta = Meta { method: Some("greedy".into()), params: None, seed: None };
            let doc = SetDocument::new(g, 1, &set, Some(meta));
            emit(&doc, format, &out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { set } => {
            let text = fs::read_to_string(&set)?;
            let doc = SetDocument::from_json(&text)?;
            let report = verify_k_domination(doc.grid(), &doc.vertex_set(), doc.k)?;
            if report.dominated {
                println!("dominated: {} vertices cover the {}x{} grid", doc.vertices.len(), doc.m, doc.n);
                Ok(EXIT_OK)
            } else {
                println!("NOT dominated: {} uncovered vertices", report.uncovered.len());
                Ok(EXIT_NOT_DOMINATED)
            }
        }
        Command::Bounds { m, n, k } => {
            let g = grid(m, n)?;
            let b = bounds(g, k)?;
            println!("lower {}", b.lower);
            println!("upper {}", b.construction_upper);
            println!("diagonalization-upper {}", b.diag_cardinality_upper);
            println!("ratio {}", b.ratio_upper);
            if let Some(gamma) = b.gamma_exact_formula {
                println!("gamma {gamma}");
            }
            Ok(EXIT_OK)
        }
        Command::Render { set, format, out } => {
            let text = fs::read_to_string(&set)?;
            let doc = SetDocument::from_json(&text)?;
            let style = match format {
                Format::Ascii | Format::Json => RenderStyle::Ascii,
                Format::Svg => RenderStyle::Svg,
            };
            let rendered = render(&doc, style)?;
            match out {
                Some(path) => fs::write(path, rendered)?,
                None => print!("{rendered}"),
            }
            Ok(EXIT_OK)
        }
    }
}

fn parse_positions(text: &str) -> griddom::Result<Vec<Vertex>> {
    text.split(';')
        .map(|pair| {
            let coords: Vec<i32> = pair
                .split(',')
                .map(|t| t.trim().parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidPlacement(format!("bad position {pair:?}")))?;
            if coords.len() != 2 {
                return Err(Error::InvalidPlacement(format!("bad position {pair:?}")));
            }
            Ok(Vertex::new(coords[0], coords[1]))
        })
        .collect()
}

fn parse_order(text: &str) -> griddom::Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidActivation(format!("bad agent id {t:?}")))
        })
        .collect()
}
