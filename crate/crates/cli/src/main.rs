//! `qtree`: compute, verify and enumerate q-polynomials of plane trees.
//!
//! Exit status: 0 on success, 1 when a check fails or a search finds
//! nothing, 2 on bad input or flags.

/// `println!` that ignores a closed stdout instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

mod render;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qtree::invariant::{search_delayed_bounded, DELAYED_SEARCH_LIMIT};
use qtree::presimplicial::{
    enumerate_top_trees_bounded, normalize_topological, reduce_to_point, TOP_LEAF_LIMIT,
};
use qtree::qpoly::q_factorial;
use qtree::tree::{enumerate_plane_trees_bounded, parse_delayed, PLANE_EDGE_LIMIT};
use qtree::{q_poly, q_poly_delayed, q_poly_state, PlaneTree, QPoly};
use serde_json::json;

use render::{coeffs_json, latex_line, poly_latex};

/// Environment variable that replaces every hard size cap.
pub const HARD_CAP_VAR: &str = "QTREE_HARD_CAP";

#[derive(Parser)]
#[command(name = "qtree", version, about = "q-polynomials of plane rooted trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    Recursive,
    State,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Wedge,
    State,
    Reroot,
    Block,
    Presimplicial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Plane,
    Topological,
}

#[derive(Subcommand)]
enum Command {
    /// Q(T) of a plane tree such as "(.(..))"
    Q {
        tree: String,
        #[arg(long, value_enum, default_value_t = Algo::Recursive)]
        algo: Algo,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Q(T, f) of a tree with integer delays on its leaves, e.g. "(1 (2 1))"
    QDelayed {
        tree: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run an exhaustive or sampled check of one identity family
    Verify {
        #[arg(value_enum)]
        family: Family,
        /// Edge count (leaf count for presimplicial); defaults depend on the family
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random instances for the sampled families (state, block)
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Delayed trees whose Q(T, f) equals the given coefficients (ascending)
    #[command(allow_negative_numbers = true)]
    SearchDelayed {
        #[arg(required = true, value_delimiter = ',')]
        coeffs: Vec<i64>,
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Reduce a tree to a multiple of the point with the q-boundary
    Reduce {
        tree: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// List every tree of a given size
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        /// Edges for plane trees, leaves for topological trees
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

/// A failure that maps onto an exit code.
pub enum Failure {
    /// Bad input, flags or bounds: exit 2.
    Usage(String),
    /// The computation ran and the check failed: exit 1.
    Check,
}

impl From<qtree::Error> for Failure {
    fn from(e: qtree::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub type Outcome = Result<(), Failure>;

/// Caps for the three size parameters, or all of them replaced by
/// `QTREE_HARD_CAP`.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub plane_edges: usize,
    pub top_leaves: usize,
    pub search_edges: usize,
}

impl Caps {
    fn from_env() -> Result<Caps, Failure> {
        match std::env::var(HARD_CAP_VAR) {
            Err(_) => Ok(Caps {
                plane_edges: PLANE_EDGE_LIMIT,
                top_leaves: TOP_LEAF_LIMIT,
                search_edges: DELAYED_SEARCH_LIMIT,
            }),
            Ok(v) => {
                let n: usize = v.trim().parse().map_err(|_| {
                    Failure::Usage(format!("{HARD_CAP_VAR}={v:?} is not a nonnegative integer"))
                })?;
                Ok(Caps {
                    plane_edges: n,
                    top_leaves: n,
                    search_edges: n,
                })
            }
        }
    }
}

fn parse_plane(text: &str) -> Result<PlaneTree, Failure> {
    text.parse::<PlaneTree>()
        .map_err(|e| Failure::Usage(format!("{text:?}: {e}")))
}

fn print_poly(p: &QPoly, format: Format, label: &str) {
    match format {
        Format::Plain => out!("{p}"),
        Format::Json => out!("{}", json!({ "coeffs": coeffs_json(p) })),
        Format::Latex => out!("{}", latex_line(label, p, None)),
    }
}

fn cmd_q(text: &str, algo: Algo, format: Format) -> Outcome {
    let tree = parse_plane(text)?;
    let state_product = render::state_product_latex(&tree);
    match algo {
        Algo::Recursive | Algo::State => {
            let p = if algo == Algo::Recursive {
                q_poly(&tree)
            } else {
                q_poly_state(&tree)
            };
            match format {
                Format::Latex => out!("{}", latex_line("Q(T)", &p, state_product.as_deref())),
                _ => print_poly(&p, format, "Q(T)"),
            }
            Ok(())
        }
        Algo::Both => {
            let rec = q_poly(&tree);
            let st = q_poly_state(&tree);
            let agree = rec == st;
            match format {
                Format::Plain => {
                    out!("recursive: {rec}");
                    out!("state:     {st}");
                }
                Format::Json => out!(
                    "{}",
                    json!({
                        "recursive": coeffs_json(&rec),
                        "state": coeffs_json(&st),
                        "agree": agree,
                    })
                ),
                Format::Latex => {
                    out!("{}", latex_line("Q(T)", &rec, state_product.as_deref()));
                    if !agree {
                        out!("{}", latex_line("Q_{\\mathrm{state}}(T)", &st, None));
                    }
                }
            }
            if agree {
                Ok(())
            } else {
                eprintln!("recursive and state-product values differ");
                Err(Failure::Check)
            }
        }
    }
}

fn cmd_q_delayed(text: &str, format: Format) -> Outcome {
    let tree = parse_delayed(text).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))?;
    print_poly(&q_poly_delayed(&tree), format, "Q(T,f)");
    Ok(())
}

fn cmd_search(coeffs: &[i64], max_edges: usize, format: Format, caps: Caps) -> Outcome {
    let target = QPoly::from_i64s(coeffs);
    let found = search_delayed_bounded(&target, max_edges, caps.search_edges)?;
    match format {
        Format::Json => {
            let trees: Vec<String> = found.iter().map(ToString::to_string).collect();
            out!(
                "{}",
                json!({ "target": coeffs_json(&target), "max_edges": max_edges, "witnesses": trees })
            );
        }
        Format::Plain | Format::Latex => {
            for t in &found {
                out!("{t}");
            }
        }
    }
    eprintln!(
        "delayed trees with <= {max_edges} edges matching {target}: {}",
        found.len()
    );
    if found.is_empty() {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn cmd_reduce(text: &str, format: Format) -> Outcome {
    let tree = normalize_topological(&parse_plane(text)?);
    let n = tree.leaf_count();
    let got = reduce_to_point(&tree);
    let expected = q_factorial(n);
    let ok = got == expected;
    match format {
        Format::Plain if ok && n <= 1 => out!("{got}"),
        Format::Plain if ok => out!("{got} (= [{n}]_q!)"),
        Format::Plain => out!("{got} (expected [{n}]_q! = {expected})"),
        Format::Json => out!(
            "{}",
            json!({
                "tree": tree.to_string(),
                "leaves": n,
                "coeffs": coeffs_json(&got),
                "factorial": coeffs_json(&expected),
                "matches": ok,
            })
        ),
        Format::Latex => {
            let lhs = if ok {
                format!("[{n}]_q!")
            } else {
                "\\partial^*(T)".into()
            };
            out!("{} = {}", lhs, poly_latex(&got));
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_enumerate(kind: Kind, size: usize, format: Format, caps: Caps) -> Outcome {
    let trees: Vec<String> = match kind {
        Kind::Plane => enumerate_plane_trees_bounded(size, caps.plane_edges)?
            .iter()
            .map(ToString::to_string)
            .collect(),
        Kind::Topological => enumerate_top_trees_bounded(size, caps.top_leaves)?
            .iter()
            .map(ToString::to_string)
            .collect(),
    };
    match format {
        Format::Json => out!("{}", json!({ "count": trees.len(), "trees": trees })),
        Format::Plain | Format::Latex => {
            out!("count {}", trees.len());
            for t in &trees {
                out!("{t}");
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let caps = Caps::from_env()?;
    match cli.command {
        Command::Q { tree, algo, format } => cmd_q(&tree, algo, format),
        Command::QDelayed { tree, format } => cmd_q_delayed(&tree, format),
        Command::Verify {
            family,
            max_size,
            seed,
            samples,
            format,
        } => verify::run(family, max_size, seed, samples, format, caps),
        Command::SearchDelayed {
            coeffs,
            max_edges,
            format,
        } => cmd_search(&coeffs, max_edges, format, caps),
        Command::Reduce { tree, format } => cmd_reduce(&tree, format),
        Command::Enumerate { kind, size, format } => cmd_enumerate(kind, size, format, caps),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
