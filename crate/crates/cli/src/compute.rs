//! `compute`: the exact functions, singly or as a table.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::ValueEnum;
use hyperramsey::exact::{
    f1_brute, f2_brute, f2_formula, t_brute, t_closed, DTable, F1Options, FunctionTable,
    TableOptions,
};
use serde_json::{json, Value};

use crate::output::Report;
use crate::{usage, CliError, Ctx};

/// `g`, `d` and `nice` tabulate up to here.
const S_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "T")]
    T,
    #[value(name = "g")]
    G,
    #[value(name = "F1")]
    F1,
    #[value(name = "F2")]
    F2,
    #[value(name = "d")]
    D,
    #[value(name = "nice")]
    Nice,
    #[value(name = "table")]
    Table,
}

#[derive(clap::Args, Debug)]
pub struct Args {
    which: Which,

    /// A single `s` or an inclusive range `a..b`.
    #[arg(long, value_parser = parse_range)]
    s: RangeInclusive<usize>,

    /// Brute force `T` or `F2` instead of the closed form.
    #[arg(long)]
    brute: bool,

    /// Permit the s = 7 branch-and-bound for `F1`.
    #[arg(long)]
    allow_s7: bool,

    /// Permit s = 8 enumeration for `T` and `F2`.
    #[arg(long)]
    allow_s8: bool,

    /// Save the extremal tournament or coloring (single `s` only).
    #[arg(long)]
    witness: Option<PathBuf>,
}

pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(text)?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(format!("need 1 <= a <= b, got {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

pub fn run(ctx: &Ctx, a: Args) -> Result<Report, CliError> {
    let (lo, hi) = (*a.s.start(), *a.s.end());
    if a.witness.is_some() && (lo != hi || !matches!(a.which, Which::T | Which::F1 | Which::F2)) {
        return Err(usage("--witness needs T, F1 or F2 at a single s"));
    }
    let cap = |max: usize, what: &str| {
        if hi > max {
            Err(usage(format!("{what} is feasible only for s <= {max}")))
        } else {
            Ok(())
        }
    };
    let e2 = if a.allow_s8 { 8 } else { 7 };
    let mut witness_text = None;
    let report = match a.which {
        Which::T => {
            if a.brute {
                cap(hyperramsey::exact::T_SCORE_MAX, "brute-force T")?;
            }
            let mut rows = Vec::new();
            for s in a.s.clone() {
                if a.brute {
                    let b = t_brute(s, a.allow_s8)?;
                    witness_text = Some(b.witness.to_text());
                    rows.push(json!({"s": s, "value": b.value, "provenance": "brute-force", "method": b.method}));
                } else {
                    rows.push(
                        json!({"s": s, "value": t_closed(s as u64), "provenance": "closed-form"}),
                    );
                }
            }
            if !a.brute && a.witness.is_some() {
                witness_text = Some(hyperramsey::exact::near_regular(lo).to_text());
            }
            values("T", rows)
        }
        Which::G | Which::D => {
            cap(S_LIMIT, "g")?;
            let table = dtable(hi);
            let prov = if table.g().is_exhaustive() {
                "brute-force"
            } else {
                "recursion"
            };
            let rows = a
                .s
                .clone()
                .map(|s| match a.which {
                    Which::G => json!({"s": s, "value": table.g().value(s), "provenance": prov,
                        "partition": table.g().partition(s)}),
                    _ => json!({"s": s, "value": table.d(s), "T": table.t(s), "g": table.g().value(s),
                        "provenance": "recursion"}),
                })
                .collect();
            values(if a.which == Which::G { "g" } else { "d" }, rows)
        }
        Which::F1 => {
            cap(if a.allow_s7 { 7 } else { 6 }, "F1")?;
            let opts = F1Options {
                allow_s7: a.allow_s7,
                limits: ctx.limits(),
            };
            let mut rows = Vec::new();
            for s in a.s.clone() {
                let r = f1_brute(s, &opts)?;
                let mode = if r.exact { "exact" } else { "lower-bound" };
                rows.push(json!({"s": s, "value": r.value, "mode": mode, "provenance": "brute-force", "nodes": r.nodes}));
                witness_text = Some(r.witness.to_text());
            }
            values("F1", rows)
        }
        Which::F2 => {
            if a.brute {
                cap(e2, "brute-force F2")?;
            }
            let mut rows = Vec::new();
            for s in a.s.clone() {
                if a.brute {
                    let (v, w) = f2_brute(s, a.allow_s8)?;
                    witness_text = Some(w.to_text());
                    rows.push(json!({"s": s, "value": v, "provenance": "brute-force"}));
                } else {
                    witness_text = Some(hyperramsey::constructions::parity_coloring(s).to_text());
                    rows.push(json!({"s": s, "value": f2_formula(s), "provenance": "closed-form"}));
                }
            }
            values("F2", rows)
        }
        Which::Nice => {
            cap(S_LIMIT, "nice")?;
            let table = dtable(hi);
            let nice: Vec<usize> = a.s.clone().filter(|&s| table.is_nice(s)).collect();
            Report::new(json!({"function": "nice", "range": [lo, hi], "nice": nice}))
                .with_text(nice_text)
        }
        Which::Table => {
            cap(S_LIMIT, "table")?;
            let opts = TableOptions {
                f1_max: if a.allow_s7 { 7 } else { 6 },
                f2_max: e2,
                f1_limits: ctx.limits(),
                ..TableOptions::default()
            };
            let table = FunctionTable::build(a.s.clone(), &opts)?;
            let bad: Vec<usize> = table.violations().iter().map(|r| r.s).collect();
            let value = json!({
                "function": "table",
                "rows": serde_json::to_value(&table.rows).expect("rows serialize"),
                "violations": bad,
            });
            Report::new(value)
                .with_csv(table_csv)
                .csv_by_default()
                .failing_if(!bad.is_empty())
        }
    };
    if let (Some(path), Some(text)) = (&a.witness, witness_text) {
        std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(report)
}

fn dtable(s_max: usize) -> DTable {
    if s_max <= 1000 {
        DTable::exhaustive(s_max.max(3))
    } else {
        DTable::new(s_max)
    }
}

fn values(function: &str, rows: Vec<Value>) -> Report {
    Report::new(json!({"function": function, "rows": rows}))
        .with_text(values_text)
        .with_csv(values_csv)
}

/// A lone value prints bare; ranges print `s value` lines.
fn values_text(v: &Value) -> String {
    let rows = v["rows"].as_array().map(Vec::as_slice).unwrap_or_default();
    if let [only] = rows {
        return format!("{}\n", only["value"]);
    }
    rows.iter()
        .map(|r| format!("{} {}\n", r["s"], r["value"]))
        .collect()
}

fn values_csv(v: &Value) -> String {
    let mut out = format!("s,{}\n", v["function"].as_str().unwrap_or("value"));
    for r in v["rows"].as_array().into_iter().flatten() {
        out.push_str(&format!("{},{}\n", r["s"], r["value"]));
    }
    out
}

fn nice_text(v: &Value) -> String {
    let list: Vec<String> = v["nice"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|x| x.to_string())
        .collect();
    format!("{}\n", list.join(","))
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn table_csv(v: &Value) -> String {
    const COLS: [&str; 8] = ["s", "T", "g", "F1", "F1_mode", "F2", "d", "nice"];
    let mut out = COLS.join(",") + "\n";
    for r in v["rows"].as_array().into_iter().flatten() {
        let cells: Vec<String> = COLS.iter().map(|c| cell(&r[*c])).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
