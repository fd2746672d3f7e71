//! Per-`s` table of `T`, `g`, `F1`, `F2`, `d` with cell provenance.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::d::DTable;
use crate::exact::f_brute::{f1_brute, f2_brute, F1Options};
use crate::exact::g13::G13Table;
use crate::exact::tfun::t_closed;
use crate::search::SearchLimits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    Recursion,
    BruteForce,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum F1Mode {
    Exact,
    /// Search stopped at its budget; the value is attained but may not be maximal.
    LowerBound,
    Unknown,
}

impl F1Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            F1Mode::Exact => "exact",
            F1Mode::LowerBound => "lower-bound",
            F1Mode::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CellProvenance {
    #[serde(rename = "T")]
    pub t: Provenance,
    pub g: Provenance,
    #[serde(rename = "F1", skip_serializing_if = "Option::is_none")]
    pub f1: Option<Provenance>,
    #[serde(rename = "F2", skip_serializing_if = "Option::is_none")]
    pub f2: Option<Provenance>,
    pub d: Provenance,
}

#[derive(Clone, Debug, Serialize)]
pub struct FunctionRow {
    pub s: usize,
    #[serde(rename = "T")]
    pub t: u64,
    pub g: u64,
    #[serde(rename = "F1")]
    pub f1: Option<u64>,
    #[serde(rename = "F1_mode")]
    pub f1_mode: F1Mode,
    #[serde(rename = "F2")]
    pub f2: Option<u64>,
    pub d: u64,
    pub nice: bool,
    pub provenance: CellProvenance,
}

#[derive(Clone, Debug)]
pub struct TableOptions {
    /// Rows with `s` above this leave `F1` unknown.
    pub f1_max: usize,
    /// Rows with `s` above this leave `F2` empty.
    pub f2_max: usize,
    pub f1_limits: SearchLimits,
    /// Up to this `s_max`, `g` maximizes over all partitions.
    pub g_exhaustive_max: usize,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            f1_max: 6,
            f2_max: 7,
            f1_limits: SearchLimits::default(),
            g_exhaustive_max: 1000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FunctionTable {
    pub rows: Vec<FunctionRow>,
}

impl FunctionTable {
    pub fn build(range: RangeInclusive<usize>, opts: &TableOptions) -> Result<Self> {
        let (lo, hi) = (*range.start(), *range.end());
        if lo == 0 || lo > hi {
            return Err(Error::domain(format!("bad range {lo}..{hi}")));
        }
        if opts.f1_max > 7 || opts.f2_max > 8 {
            return Err(Error::domain("F1 is limited to s <= 7 and F2 to s <= 8"));
        }
        let g = if hi <= opts.g_exhaustive_max {
            G13Table::exhaustive(hi)
        } else {
            G13Table::balanced(hi)
        };
        let table = DTable::from_g(g);
        let f1_opts = F1Options {
            allow_s7: true,
            limits: opts.f1_limits.clone(),
        };
        let mut rows = Vec::with_capacity(hi - lo + 1);
        for s in range {
            let (f1, f1_mode) = if s <= opts.f1_max {
                let r = f1_brute(s, &f1_opts)?;
                let mode = if r.exact {
                    F1Mode::Exact
                } else {
                    F1Mode::LowerBound
                };
                (Some(r.value), mode)
            } else {
                (None, F1Mode::Unknown)
            };
            let f2 = if s <= opts.f2_max {
                Some(f2_brute(s, true)?.0)
            } else {
                None
            };
            let d = table.d(s);
            rows.push(FunctionRow {
                s,
                t: t_closed(s as u64),
                g: table.g().value(s),
                f1,
                f1_mode,
                f2,
                d,
                nice: d == 0,
                provenance: CellProvenance {
                    t: Provenance::ClosedForm,
                    g: Provenance::Recursion,
                    f1: f1.map(|_| Provenance::BruteForce),
                    f2: f2.map(|_| Provenance::BruteForce),
                    d: Provenance::Recursion,
                },
            });
        }
        Ok(FunctionTable { rows })
    }

    /// Rows breaking `g <= F1 <= T` (exact `F1`) or `F2 = T`.
    pub fn violations(&self) -> Vec<&FunctionRow> {
        self.rows
            .iter()
            .filter(|r| {
                let chain =
                    r.f1_mode != F1Mode::Exact || r.f1.is_some_and(|f| r.g <= f && f <= r.t);
                let lower = r.f1.is_none_or(|f| f <= r.t);
                let f2 = r.f2.is_none_or(|f| f == r.t);
                !(chain && lower && f2)
            })
            .collect()
    }

    /// CSV with header `s,T,g,F1,F1_mode,F2,d,nice`; missing cells are empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,T,g,F1,F1_mode,F2,d,nice\n");
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.s,
                r.t,
                r.g,
                opt(r.f1),
                r.f1_mode.as_str(),
                opt(r.f2),
                r.d,
                r.nice
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_ten_rows() {
        let t = FunctionTable::build(1..=10, &TableOptions::default()).unwrap();
        let nice: Vec<usize> = t.rows.iter().filter(|r| r.nice).map(|r| r.s).collect();
        assert_eq!(nice, vec![1, 2, 3, 4, 6, 8, 9, 10]);
        assert!(t.violations().is_empty());
        let csv = t.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("s,T,g,F1,F1_mode,F2,d,nice"));
        assert_eq!(lines.nth(4), Some("5,5,4,4,exact,5,1,false"));
        assert_eq!(lines.last(), Some("10,40,40,,unknown,,0,true"));
    }

    #[test]
    fn json_shape() {
        let t = FunctionTable::build(3..=3, &TableOptions::default()).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["rows"][0]["F1_mode"], "exact");
        assert_eq!(v["rows"][0]["provenance"]["T"], "closed-form");
        assert_eq!(v["rows"][0]["provenance"]["F1"], "brute-force");
    }

    #[test]
    fn bad_ranges() {
        assert!(FunctionTable::build(0..=3, &TableOptions::default()).is_err());
        let opts = TableOptions {
            f1_max: 9,
            ..TableOptions::default()
        };
        assert!(FunctionTable::build(1..=3, &opts).is_err());
    }
}
