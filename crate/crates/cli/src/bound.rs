//! `bound`: the upper-bound calculators, reported in `log2` space.

use clap::ValueEnum;
use hyperramsey::extraction::{
    closed_form_exponent, diagonal_bound, erdos_rado_recursion_bound, optimal_alpha,
    threshold_bound_log2, BaseTable,
};
use serde_json::{json, Value};

use crate::output::Report;
use crate::{usage, CliError, Ctx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// `(v+1) alpha^-r (1-alpha)^(r-m)` at a given or optimal alpha.
    Threshold,
    /// The explicit exponent for `4 <= s <= n`.
    ClosedForm,
    /// Iterated stepping down to graph Ramsey numbers, as a tower.
    ErdosRado,
    /// `log2 log2` of the diagonal bound against `2.2 k`.
    Diagonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Base {
    ErdosSzekeres,
    Classical,
}

#[derive(clap::Args, Debug)]
pub struct Args {
    which: Which,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Threshold in (0, 1/2], or `opt` to minimize over it.
    #[arg(long, default_value = "opt")]
    alpha: String,
    /// Uniformity for erdos-rado; clique size for diagonal.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Base::Classical)]
    base: Base,
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| usage(format!("--{flag} is required")))
}

/// The bound itself when it is an integer that `f64` holds exactly.
fn exact_value(log2: f64) -> Value {
    if log2 < 52.0 {
        let v = log2.exp2();
        if (v - v.round()).abs() <= 1e-6 * v {
            return json!(v.round() as u64);
        }
    }
    Value::Null
}

pub fn run(_ctx: &Ctx, a: Args) -> Result<Report, CliError> {
    let report = match a.which {
        Which::Threshold => {
            let (s, n) = (need(a.s, "s")?, need(a.n, "n")?);
            let (alpha, log2) = if a.alpha == "opt" {
                optimal_alpha::<f64>(s, n)?
            } else {
                let alpha: f64 = hyperramsey::scalar::parse_scalar(&a.alpha)
                    .ok_or_else(|| usage(format!("bad --alpha `{}`", a.alpha)))?;
                (alpha, threshold_bound_log2(s, n, alpha)?)
            };
            let value = json!({"bound": "threshold", "s": s, "n": n, "alpha": alpha, "log2": log2, "value": exact_value(log2)});
            Report::new(value).with_text(headline)
        }
        Which::ClosedForm => {
            let (s, n) = (need(a.s, "s")?, need(a.n, "n")?);
            let log2 = closed_form_exponent::<f64>(s, n)?;
            Report::new(json!({"bound": "closed-form", "s": s, "n": n, "log2": log2, "value": exact_value(log2)}))
                .with_text(headline)
        }
        Which::ErdosRado => {
            let (k, s, n) = (need(a.k, "k")?, need(a.s, "s")?, need(a.n, "n")?);
            let base = match a.base {
                Base::ErdosSzekeres => BaseTable::ErdosSzekeres,
                Base::Classical => BaseTable::Classical,
            };
            let t = erdos_rado_recursion_bound(k, s, n, base)?;
            let log2 = t.log2();
            let log2 = if log2.is_finite() {
                json!(log2)
            } else {
                Value::Null
            };
            Report::new(json!({"bound": "erdos-rado", "k": k, "s": s, "n": n,
                "tower": {"height": t.height, "top": t.top}, "log2": log2}))
        }
        Which::Diagonal => {
            let k = need(a.k, "k")?;
            let r = diagonal_bound::<f64>(k)?;
            let fail = !r.within_slack;
            let mut v = serde_json::to_value(&r).expect("report serializes");
            v["bound"] = json!("diagonal");
            v["slack"] = json!(2.2 * k as f64);
            Report::new(v).failing_if(fail)
        }
    };
    Ok(report)
}

/// The integer bound when there is one, else `2^log2`.
fn headline(v: &Value) -> String {
    match &v["value"] {
        Value::Null => match v["log2"].as_f64() {
            Some(l) if l.fract() == 0.0 && l.abs() < 1e15 => format!("2^{}\n", l as i64),
            _ => format!("2^{}\n", v["log2"]),
        },
        x => format!("{x}\n"),
    }
}
