//! `play`: a painter against the string-labelling builder.
//!
//! The interactive painter reads `r`/`b` from stdin and prompts on stderr,
//! so stdout carries only the report.

use std::io::BufReader;
use std::path::PathBuf;

use clap::ValueEnum;
use hyperramsey::game::{
    budget_for, run_game, AllBlue, AllRed, Budget, EhBuilder, GreedyAdversarial,
    InteractivePainter, OutcomeKind, Painter, SeededRandom,
};
use serde_json::{json, Value};

use crate::output::Report;
use crate::{usage, CliError, Ctx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PainterKind {
    Interactive,
    AllRed,
    AllBlue,
    Greedy,
    Random,
}

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(long)]
    s: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = PainterKind::Interactive)]
    painter: PainterKind,
    /// Red probability for the random painter.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Also save the transcript JSON here.
    #[arg(long)]
    transcript: Option<PathBuf>,
}

pub fn run(ctx: &Ctx, a: Args) -> Result<Report, CliError> {
    if !(0.0..=1.0).contains(&a.p) {
        return Err(usage("--p must lie in [0, 1]"));
    }
    let bound = budget_for(a.s, a.n)?;
    let mut builder = EhBuilder::new(a.s, a.n)?;
    let mut painter: Box<dyn Painter> = match a.painter {
        PainterKind::Interactive => Box::new(InteractivePainter::new(
            BufReader::new(std::io::stdin()),
            std::io::stderr(),
        )),
        PainterKind::AllRed => Box::new(AllRed),
        PainterKind::AllBlue => Box::new(AllBlue),
        PainterKind::Greedy => Box::new(GreedyAdversarial),
        PainterKind::Random => Box::new(SeededRandom::new(a.p, ctx.seed)),
    };
    let t = run_game(&mut builder, &mut painter, (a.s, a.n), Budget::UNLIMITED)?;
    if let Some(path) = &a.transcript {
        std::fs::write(path, t.to_json() + "\n")
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let within = t.budget.within(&bound);
    let decided = matches!(t.outcome.kind, OutcomeKind::Red | OutcomeKind::Blue);
    let value = json!({
        "transcript": serde_json::to_value(&t).expect("transcript serializes"),
        "bound": bound,
        "within_bound": within,
    });
    Ok(Report::new(value)
        .with_text(play_text)
        .failing_if(!(decided && within)))
}

fn play_text(v: &Value) -> String {
    let t = &v["transcript"];
    let (b, m) = (&t["budget"], &v["bound"]);
    format!(
        "outcome: {} {}\nbudget: v={} r={} m={} (bound v={} r={} m={})\n",
        t["outcome"]["kind"].as_str().unwrap_or("?"),
        t["outcome"]["witness"],
        b["v"],
        b["r"],
        b["m"],
        m["v"],
        m["r"],
        m["m"]
    )
}
