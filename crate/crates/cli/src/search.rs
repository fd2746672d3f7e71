//! `search`: monochromatic sets, cliques, transitive subtournaments and
//! small game values.

use std::path::PathBuf;

use clap::Subcommand;
use hyperramsey::game::{minimax_online, MAX_VERTEX_CAP};
use hyperramsey::oracle_spec::parse_oracle;
use hyperramsey::search::{find_mono_set, max_mono_set, sample_mono_set};
use hyperramsey::{hash, BitGraph, ColorId, Tournament, VertexSet};
use serde_json::json;

use crate::output::Report;
use crate::verify::Mode;
use crate::{read_file, usage, CliError, Ctx};

#[derive(clap::Args, Debug)]
pub struct Args {
    #[command(subcommand)]
    what: What,
}

#[derive(Subcommand, Debug)]
enum What {
    /// A monochromatic q-set of one color, or the largest one without --q.
    Mono {
        #[arg(long)]
        oracle: String,
        #[arg(long)]
        universe: usize,
        #[arg(long)]
        q: Option<usize>,
        /// red, blue, c1, c2 or c3.
        #[arg(long, default_value = "red")]
        color: String,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// Maximum clique (or independent set) of a graph file.
    Clique {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        independent: bool,
    },
    /// Largest transitive subtournament of a tournament file.
    Transitive {
        #[arg(long)]
        tournament: PathBuf,
        /// Stop once a subtournament of this size is found.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Exact on-line game value with a vertex cap.
    Minimax {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        vertex_cap: usize,
    },
}

pub fn run(ctx: &Ctx, a: Args) -> Result<Report, CliError> {
    let limits = ctx.limits();
    Ok(match a.what {
        What::Mono {
            oracle,
            universe,
            q,
            color,
            mode,
            trials,
        } => {
            let o = parse_oracle(&oracle, universe, ctx.seed)?;
            let c = ColorId::parse(&color)
                .filter(|c| c.0 < o.palette())
                .ok_or_else(|| usage(format!("color `{color}` not in the oracle's palette")))?;
            let vs = VertexSet::range(o.universe().min(universe));
            match (q, mode) {
                (None, Mode::Exhaustive) => {
                    let (set, nodes) = max_mono_set(o.as_ref(), &vs, c, &limits)?;
                    Report::new(
                        json!({"oracle": oracle, "color": color, "size": set.len(), "set": set, "nodes": nodes}),
                    )
                }
                (None, Mode::Sampled) => return Err(usage("sampled mode needs --q")),
                (Some(q), mode) => {
                    let out = match mode {
                        Mode::Exhaustive => find_mono_set(o.as_ref(), &vs, q, c, &limits)?,
                        Mode::Sampled => sample_mono_set(
                            o.as_ref(),
                            &vs,
                            q,
                            c,
                            trials,
                            hash::substream(ctx.seed, "sampler"),
                        )?,
                    };
                    Report::new(
                        json!({"oracle": oracle, "color": color, "q": q, "mode": out.mode,
                        "found": out.witness.is_some(), "witness": out.witness, "nodes": out.nodes}),
                    )
                }
            }
        }
        What::Clique { graph, independent } => {
            let g = BitGraph::parse(&read_file(&graph)?)?;
            let c = if independent {
                g.max_independent_set()
            } else {
                g.max_clique()
            };
            let kind = if independent {
                "independent-set"
            } else {
                "clique"
            };
            Report::new(json!({"kind": kind, "size": c.size, "witness": c.witness}))
        }
        What::Transitive { tournament, cap } => {
            let t = Tournament::parse(&read_file(&tournament)?)?;
            let cap = cap.unwrap_or(t.n());
            let r = t.max_transitive_subtournament(cap, &limits)?;
            Report::new(json!({"size": r.size, "order": r.order, "nodes": r.nodes}))
        }
        What::Minimax { s, n, vertex_cap } => {
            if vertex_cap > MAX_VERTEX_CAP {
                return Err(usage(format!("--vertex-cap is at most {MAX_VERTEX_CAP}")));
            }
            let r = minimax_online(s, n, vertex_cap, &limits)?;
            Report::new(serde_json::to_value(&r).expect("serializes"))
        }
    })
}
