//! `d(s) = T(s) - g(s) >= 0`, nice numbers and the mod-6 recurrences.

use serde::Serialize;

use crate::exact::g13::G13Table;
use crate::exact::tfun::t_closed;

/// `T`, `g` and `d` for `1 <= s <= s_max`.
#[derive(Clone, Debug)]
pub struct DTable {
    g: G13Table,
}

impl DTable {
    /// Backed by the near-equal partition recursion (linear time).
    pub fn new(s_max: usize) -> Self {
        DTable {
            g: G13Table::balanced(s_max),
        }
    }

    /// Backed by the full maximization over partitions (cubic time).
    pub fn exhaustive(s_max: usize) -> Self {
        DTable {
            g: G13Table::exhaustive(s_max),
        }
    }

    pub fn from_g(g: G13Table) -> Self {
        DTable { g }
    }

    pub fn s_max(&self) -> usize {
        self.g.s_max()
    }

    pub fn g(&self) -> &G13Table {
        &self.g
    }

    pub fn t(&self, s: usize) -> u64 {
        t_closed(s as u64)
    }

    pub fn d(&self, s: usize) -> u64 {
        let (t, g) = (self.t(s), self.g.value(s));
        assert!(g <= t, "g({s}) = {g} exceeds T({s}) = {t}");
        t - g
    }

    pub fn is_nice(&self, s: usize) -> bool {
        self.d(s) == 0
    }

    /// All nice `s` with `1 <= s <= s_max`.
    pub fn nice_numbers(&self) -> Vec<usize> {
        (1..=self.s_max()).filter(|&s| self.is_nice(s)).collect()
    }
}

/// Nice numbers up to `limit`, using the exhaustive recursion.
pub fn nice_numbers(limit: usize) -> Vec<usize> {
    DTable::exhaustive(limit).nice_numbers()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceViolation {
    /// Residue label, e.g. `"6x+1"`.
    pub case: &'static str,
    pub x: usize,
    pub s: usize,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DRecurrenceReport {
    pub x_max: usize,
    pub checked: usize,
    pub first_violation: Option<RecurrenceViolation>,
}

impl DRecurrenceReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks the six identities expressing `d(6x + j)` through
/// `d(2x - 1), d(2x), d(2x + 1)` for `1 <= x <= x_max`.
pub fn verify_d_recurrences(x_max: usize) -> DRecurrenceReport {
    let table = DTable::new(6 * x_max + 3);
    verify_d_recurrences_with(&table, x_max)
}

pub fn verify_d_recurrences_with(table: &DTable, x_max: usize) -> DRecurrenceReport {
    let d = |s: usize| table.d(s);
    let mut checked = 0;
    for x in 1..=x_max {
        let xu = x as u64;
        let (a, b, c) = (d(2 * x - 1), d(2 * x), d(2 * x + 1));
        let cases: [(&'static str, usize, u64); 6] = [
            ("6x-2", 6 * x - 2, 2 * a + b),
            ("6x-1", 6 * x - 1, a + 2 * b + xu),
            ("6x", 6 * x, 3 * b),
            ("6x+1", 6 * x + 1, 2 * b + c + xu),
            ("6x+2", 6 * x + 2, b + 2 * c),
            ("6x+3", 6 * x + 3, 3 * c),
        ];
        for (case, s, rhs) in cases {
            checked += 1;
            let lhs = d(s);
            if lhs != rhs {
                return DRecurrenceReport {
                    x_max,
                    checked,
                    first_violation: Some(RecurrenceViolation {
                        case,
                        x,
                        s,
                        lhs,
                        rhs,
                    }),
                };
            }
        }
    }
    DRecurrenceReport {
        x_max,
        checked,
        first_violation: None,
    }
}

/// First odd `s <= s_max` with `d(3s) != 3 d(s)`, if any.
pub fn verify_tripling(s_max: usize) -> Option<usize> {
    let table = DTable::new(3 * s_max);
    (1..=s_max)
        .step_by(2)
        .find(|&s| table.d(3 * s) != 3 * table.d(s))
}

#[derive(Clone, Debug, Serialize)]
pub struct DGrowthReport {
    pub s_max: usize,
    /// `max d(s) / (s ln s)` over `3 <= s <= s_max`.
    pub sup_ratio: f64,
    pub argmax: usize,
    /// Running maximum recorded at each power of ten.
    pub checkpoints: Vec<(usize, f64)>,
}

pub fn d_growth_report(s_max: usize) -> DGrowthReport {
    let table = DTable::new(s_max.max(3));
    let mut best = (0.0f64, 3usize);
    let mut checkpoints = Vec::new();
    let mut next = 10;
    for s in 3..=s_max {
        let ratio = table.d(s) as f64 / (s as f64 * (s as f64).ln());
        if ratio > best.0 {
            best = (ratio, s);
        }
        if s == next {
            checkpoints.push((s, best.0));
            next *= 10;
        }
    }
    DGrowthReport {
        s_max,
        sup_ratio: best.0,
        argmax: best.1,
        checkpoints,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let t = DTable::exhaustive(20);
        assert_eq!((t.d(1), t.d(2)), (0, 0));
        assert_eq!((t.d(5), t.d(7)), (1, 1));
    }

    #[test]
    fn nice_up_to_100() {
        assert_eq!(
            nice_numbers(100),
            vec![
                1, 2, 3, 4, 6, 8, 9, 10, 12, 18, 24, 26, 27, 28, 30, 36, 54, 72, 78, 80, 81, 82,
                84, 90
            ]
        );
    }

    #[test]
    fn recurrences_small() {
        let r = verify_d_recurrences(500);
        assert!(r.passed(), "{:?}", r.first_violation);
        assert_eq!(r.checked, 3000);
    }

    #[test]
    fn recurrences_match_exhaustive_table() {
        let t = DTable::exhaustive(303);
        assert!(verify_d_recurrences_with(&t, 50).passed());
    }

    #[test]
    fn first_cases_by_hand() {
        let t = DTable::new(9);
        assert_eq!(t.d(6), 3 * t.d(2));
        assert_eq!(t.d(7), 2 * t.d(2) + t.d(3) + 1);
    }

    #[test]
    fn tripling() {
        assert_eq!(verify_tripling(1000), None);
    }

    #[test]
    fn growth_is_bounded() {
        let r = d_growth_report(10_000);
        assert!(r.sup_ratio.is_finite() && r.sup_ratio < 1.0);
        let t = DTable::new(100);
        for s in nice_numbers(100).into_iter().filter(|&s| s >= 3) {
            assert_eq!(t.d(s), 0);
        }
    }
}
