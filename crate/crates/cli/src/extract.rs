//! `extract`: threshold extraction of a monochromatic set from an oracle.

use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::ValueEnum;
use hyperramsey::extraction::{
    erdos_rado_extract, k43e_extract, ExtractionConfig, ExtractionOutcome, K43eOutcome,
};
use hyperramsey::oracle_spec::parse_oracle;
use hyperramsey::scalar::{ceil_u64, parse_scalar};
use hyperramsey::{Rational, Scalar, TripleColoring};
use serde_json::{json, Value};

use crate::output::Report;
use crate::{usage, CliError, Ctx};

/// Oracles are opened on this many vertices when `--universe` is absent;
/// the run itself uses only the required prefix.
const OPEN_UNIVERSE: usize = 1 << 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    ErdosRado,
    K43e,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScalarKind {
    F64,
    F32,
    Exact,
}

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Oracle spec, e.g. `random:p=0.5` or `stepup:graph=c5.g:red=c2`.
    #[arg(long)]
    oracle: String,
    #[arg(long, value_enum, default_value_t = Method::ErdosRado)]
    method: Method,
    /// Red target (erdos-rado only).
    #[arg(long, default_value_t = 4)]
    s: usize,
    /// Blue target.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Threshold in (0, 1/2] (erdos-rado only; k43e uses 1/(2n)).
    #[arg(long, default_value = "1/2")]
    alpha: String,
    /// Ground set size; defaults to the size that guarantees success.
    #[arg(long)]
    universe: Option<usize>,
    #[arg(long, value_enum, default_value_t = ScalarKind::F64)]
    scalar: ScalarKind,
    /// Include the per-vertex trace in the report.
    #[arg(long)]
    trace: bool,
}

pub fn run(ctx: &Ctx, a: Args) -> Result<Report, CliError> {
    let oracle = parse_oracle(&a.oracle, a.universe.unwrap_or(OPEN_UNIVERSE), ctx.seed)?;
    if oracle.palette() != 2 {
        return Err(usage(
            "extraction needs a two-color oracle (use `:red=` with stepup)",
        ));
    }
    let guarded =
        |f: &mut dyn FnMut() -> Result<Report, CliError>| match catch_unwind(AssertUnwindSafe(f)) {
            Ok(r) => r,
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Ok(violation(msg))
            }
        };
    match (a.method, a.scalar) {
        (Method::ErdosRado, ScalarKind::F64) => {
            guarded(&mut || erdos_rado::<f64>(&a, oracle.as_ref()))
        }
        (Method::ErdosRado, ScalarKind::F32) => {
            guarded(&mut || erdos_rado::<f32>(&a, oracle.as_ref()))
        }
        (Method::ErdosRado, ScalarKind::Exact) => {
            guarded(&mut || erdos_rado::<Rational>(&a, oracle.as_ref()))
        }
        (Method::K43e, ScalarKind::F64) => guarded(&mut || k43e::<f64>(&a, oracle.as_ref())),
        (Method::K43e, ScalarKind::F32) => guarded(&mut || k43e::<f32>(&a, oracle.as_ref())),
        (Method::K43e, ScalarKind::Exact) => guarded(&mut || k43e::<Rational>(&a, oracle.as_ref())),
    }
}

fn erdos_rado<S: Scalar>(a: &Args, oracle: &dyn TripleColoring) -> Result<Report, CliError> {
    if a.s < 3 || a.n < 3 {
        return Err(usage("extraction needs s, n >= 3"));
    }
    let alpha: S =
        parse_scalar(&a.alpha).ok_or_else(|| usage(format!("bad --alpha `{}`", a.alpha)))?;
    if !(alpha > S::zero() && alpha <= S::from_ratio(1, 2)) {
        return Err(usage("--alpha must lie in (0, 1/2]"));
    }
    let mut cfg = ExtractionConfig {
        s: a.s,
        n: a.n,
        alpha,
        universe: 0,
        oracle,
    };
    let required = ceil_u64(&cfg.required_universe()?);
    let universe = match a.universe {
        Some(u) => u,
        None => usize::try_from(required)
            .ok()
            .filter(|&r| r <= oracle.universe())
            .ok_or_else(|| {
                usage(format!(
                    "required universe {required} exceeds the oracle; pass --universe"
                ))
            })?,
    };
    cfg.universe = universe;
    let guaranteed = universe as u64 >= required;
    let r = match erdos_rado_extract(&cfg) {
        Ok(r) => r,
        // arguments were validated above, so this is a broken invariant
        Err(hyperramsey::Error::Domain(msg)) => return Ok(violation(msg)),
        Err(e) => return Err(e.into()),
    };
    let failed = matches!(r.outcome, ExtractionOutcome::Failure { .. });
    let mut value = json!({
        "method": "erdos-rado",
        "cfg": {"oracle": a.oracle, "s": a.s, "n": a.n, "alpha": a.alpha, "universe": universe,
            "scalar": scalar_name(a.scalar)},
        "required_universe": required,
        "guaranteed": guaranteed,
        "outcome": serde_json::to_value(&r.outcome).expect("serializes"),
        "budget": r.budget,
        "gamma_edges": r.gamma.len(),
    });
    if a.trace {
        value["trace"] = serde_json::to_value(&r.trace).expect("serializes");
    }
    Ok(Report::new(value)
        .with_text(outcome_text)
        .failing_if(failed && guaranteed))
}

fn k43e<S: Scalar>(a: &Args, oracle: &dyn TripleColoring) -> Result<Report, CliError> {
    if a.n < 3 {
        return Err(usage("k43e extraction needs n >= 3"));
    }
    // (2en)^n survivors make success certain
    let required = (2.0 * std::f64::consts::E * a.n as f64)
        .powi(a.n as i32)
        .ceil();
    let universe = match a.universe {
        Some(u) => u,
        None if a.n <= 4 => required as usize,
        None => return Err(usage("beyond n = 4 pass --universe (sampling mode)")),
    };
    if universe > oracle.universe() {
        return Err(usage(format!(
            "universe {universe} exceeds the oracle universe {}",
            oracle.universe()
        )));
    }
    let guaranteed = universe as f64 >= required;
    let r = match k43e_extract::<S>(oracle, a.n, universe) {
        Ok(r) => r,
        // arguments were validated above, so this is a broken invariant
        Err(hyperramsey::Error::Domain(msg)) => return Ok(violation(msg)),
        Err(e) => return Err(e.into()),
    };
    let failed = matches!(r.outcome, K43eOutcome::Failure { .. });
    let value = json!({
        "method": "k43e",
        "cfg": {"oracle": a.oracle, "n": a.n, "universe": universe, "scalar": scalar_name(a.scalar)},
        "required_universe": required as u64,
        "guaranteed": guaranteed,
        "outcome": serde_json::to_value(&r.outcome).expect("serializes"),
        "vertices": r.vertices,
        "star_checks": r.star_checks,
    });
    Ok(Report::new(value)
        .with_text(outcome_text)
        .failing_if(failed && guaranteed))
}

fn violation(reason: String) -> Report {
    Report::new(json!({"status": "violation", "reason": reason})).failing_if(true)
}

fn scalar_name(s: ScalarKind) -> &'static str {
    match s {
        ScalarKind::F64 => "f64",
        ScalarKind::F32 => "f32",
        ScalarKind::Exact => "exact",
    }
}

fn outcome_text(v: &Value) -> String {
    let o = &v["outcome"];
    let mut out = o["kind"].as_str().unwrap_or("?").to_string();
    if let Some(set) = o.get("set") {
        out.push_str(&format!(" {set}"));
    }
    if let Some(stage) = o.get("stage") {
        out.push_str(&format!(": {}", stage.as_str().unwrap_or_default()));
    }
    out.push_str(&format!(
        "\nuniverse {} (required {})\n",
        v["cfg"]["universe"], v["required_universe"]
    ));
    out
}
