//! `verify`: named certifications with a pass/fail verdict and a witness on
//! failure.

use std::path::PathBuf;

use clap::{Subcommand, ValueEnum};
use hyperramsey::constructions::{check_delta_properties, StepUpOracle};
use hyperramsey::exact::verify_d_recurrences;
use hyperramsey::game::{budget_for, library_painters, run_game, Budget, EhBuilder, OutcomeKind};
use hyperramsey::oracle_spec::parse_oracle;
use hyperramsey::search::{find_mono_set, sample_mono_set};
use hyperramsey::{hash, BitGraph, ColorId, SearchMode, Tournament, TripleColoring, VertexSet};
use serde_json::{json, Value};

use crate::output::{verdict_text, Report};
use crate::{read_file, usage, CliError, Ctx};

#[derive(clap::Args, Debug)]
pub struct Args {
    #[command(subcommand)]
    target: Target,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Subcommand, Debug)]
enum Target {
    /// No monochromatic n-set in any color of the stepping-up coloring.
    Stepup {
        /// Base graph file on m vertices; the universe is 2^m.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Random subsets per color in sampled mode.
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// No red set of the given size in the lift coloring.
    Lift {
        /// Pair coloring of [r] (coloring or graph file; edges are red).
        #[arg(long)]
        c1: PathBuf,
        #[arg(long, default_value_t = 100)]
        universe: usize,
        #[arg(long, default_value_t = 4)]
        size: usize,
        /// Seed of the pair labelling; defaults to the `c2` sub-stream.
        #[arg(long)]
        lift_seed: Option<u64>,
    },
    /// Sampled chains obey the three delta facts.
    DeltaProps {
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 20)]
        m_max: u32,
    },
    /// The six d-recurrences for 1 <= x <= xmax.
    DRecurrences {
        #[arg(long, default_value_t = 10_000)]
        xmax: usize,
    },
    /// Every tournament on 4 vertices has at most two cyclic triangles.
    FourTournaments,
    /// The builder wins within budget against every library painter.
    GameBudgets {
        /// Largest s and n swept (from 2).
        #[arg(long, default_value_t = 6)]
        max: usize,
        /// Seeds per randomized painter.
        #[arg(long, default_value_t = 10_000)]
        seeds: u64,
    },
}

fn verdict(target: &str, pass: bool, mut detail: Value, witness: Value) -> Report {
    detail["target"] = json!(target);
    detail["status"] = json!(if pass { "pass" } else { "fail" });
    detail["witness"] = witness;
    Report::new(detail)
        .with_text(verdict_text)
        .failing_if(!pass)
}

pub fn run(ctx: &Ctx, a: Args) -> Result<Report, CliError> {
    match a.target {
        Target::FourTournaments => Ok(four_tournaments()),
        Target::DRecurrences { xmax } => {
            if xmax == 0 {
                return Err(usage("--xmax must be positive"));
            }
            let r = verify_d_recurrences(xmax);
            let w = serde_json::to_value(&r.first_violation).expect("serializes");
            Ok(verdict(
                "d-recurrences",
                r.passed(),
                json!({"xmax": xmax, "checked": r.checked}),
                w,
            ))
        }
        Target::DeltaProps { samples, m_max } => {
            let r = check_delta_properties(samples, m_max, ctx.seed)?;
            let w = match &r.violation {
                Some((chain, what)) => json!({"chain": chain, "property": what}),
                None => Value::Null,
            };
            Ok(verdict(
                "delta-props",
                r.violation.is_none(),
                json!({"samples": r.samples, "m_max": m_max}),
                w,
            ))
        }
        Target::Stepup {
            graph,
            n,
            mode,
            trials,
        } => {
            let g = BitGraph::parse(&read_file(&graph)?)?;
            let oracle = StepUpOracle::new(g)?;
            let universe = VertexSet::range(oracle.universe());
            let limits = ctx.limits();
            let key = hash::substream(ctx.seed, "sampler");
            let mut colors = Vec::new();
            let mut witness = Value::Null;
            for (i, c) in [ColorId::C1, ColorId::C2, ColorId::C3]
                .into_iter()
                .enumerate()
            {
                let out = match mode {
                    Mode::Exhaustive => find_mono_set(&oracle, &universe, n, c, &limits)?,
                    Mode::Sampled => sample_mono_set(
                        &oracle,
                        &universe,
                        n,
                        c,
                        trials,
                        hash::mix(key, &[i as u64]),
                    )?,
                };
                colors.push(json!({"color": format!("C{}", i + 1), "nodes": out.nodes}));
                if let Some(w) = out.witness {
                    witness = json!({"color": format!("C{}", i + 1), "set": w});
                    break;
                }
            }
            let mode = if mode == Mode::Exhaustive {
                SearchMode::Exhaustive
            } else {
                SearchMode::Sampled
            };
            let detail = json!({"m": oracle.m(), "universe": universe.len(), "n": n, "mode": mode, "colors": colors});
            Ok(verdict("stepup", witness.is_null(), detail, witness))
        }
        Target::Lift {
            c1,
            universe,
            size,
            lift_seed,
        } => {
            let mut spec = format!("lift:c1={}", c1.display());
            if let Some(s) = lift_seed {
                spec.push_str(&format!(":seed={s}"));
            }
            let oracle = parse_oracle(&spec, universe, ctx.seed)?;
            let out = find_mono_set(
                oracle.as_ref(),
                &VertexSet::range(universe),
                size,
                ColorId::RED,
                &ctx.limits(),
            )?;
            let detail = json!({"universe": universe, "size": size, "nodes": out.nodes});
            let w = out
                .witness
                .map(|w| json!({"red_set": w}))
                .unwrap_or(Value::Null);
            Ok(verdict("lift", w.is_null(), detail, w))
        }
        Target::GameBudgets { max, seeds } => game_budgets(ctx, max, seeds),
    }
}

fn four_tournaments() -> Report {
    let mut histogram = [0u64; 5];
    let mut witness = Value::Null;
    for mask in 0..64u64 {
        let t = Tournament::from_pair_mask(4, mask);
        let c = t.count_cyclic_triangles();
        if c != t.count_cyclic_triangles_direct() && witness.is_null() {
            witness =
                json!({"mask": mask, "property": "score formula disagrees with direct count"});
        }
        if c > 2 && witness.is_null() {
            witness = json!({"mask": mask, "cyclic": c});
        }
        histogram[c as usize] += 1;
    }
    let max = histogram.iter().rposition(|&h| h > 0).unwrap_or(0);
    verdict(
        "four-tournaments",
        witness.is_null(),
        json!({"tournaments": 64, "max_cyclic": max, "histogram": histogram}),
        witness,
    )
}

/// Deterministic painters play once per target; randomized ones once per
/// seed, with seeds drawn from the run seed.
fn game_budgets(ctx: &Ctx, max: usize, seeds: u64) -> Result<Report, CliError> {
    if !(2..=8).contains(&max) {
        return Err(usage("--max must lie in 2..=8"));
    }
    if seeds == 0 {
        return Err(usage("--seeds must be positive"));
    }
    let mut targets = Vec::new();
    let mut witness = Value::Null;
    let mut games = 0u64;
    'sweep: for s in 2..=max {
        for n in 2..=max {
            let bound = budget_for(s, n)?;
            let mut worst = Budget::default();
            for i in 0..seeds {
                let seed = hash::mix(ctx.seed, &[i]);
                for (name, mut p) in library_painters(seed) {
                    if i > 0 && !name.starts_with("seeded-random") {
                        continue;
                    }
                    let t = run_game(
                        &mut EhBuilder::new(s, n)?,
                        &mut p,
                        (s, n),
                        Budget::UNLIMITED,
                    )?;
                    games += 1;
                    let b = t.budget;
                    worst = Budget {
                        v: worst.v.max(b.v),
                        r: worst.r.max(b.r),
                        m: worst.m.max(b.m),
                    };
                    let decided = matches!(t.outcome.kind, OutcomeKind::Red | OutcomeKind::Blue);
                    if !decided || !b.within(&bound) {
                        witness = json!({"s": s, "n": n, "painter": name, "seed": seed,
                            "transcript": serde_json::to_value(&t).expect("serializes")});
                        break 'sweep;
                    }
                }
            }
            targets.push(json!({"s": s, "n": n, "bound": bound, "max_budget": worst}));
        }
    }
    let detail = json!({"max": max, "seeds": seeds, "games": games, "targets": targets});
    Ok(verdict("game-budgets", witness.is_null(), detail, witness))
}
