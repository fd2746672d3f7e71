//! Exact combinatorial functions: `T`, `g`, `F1`, `F2` and `d = T - g`.

mod d;
mod f_brute;
mod g13;
mod table;
mod tfun;

pub use d::{
    d_growth_report, nice_numbers, verify_d_recurrences, verify_d_recurrences_with,
    verify_tripling, DGrowthReport, DRecurrenceReport, DTable, RecurrenceViolation,
};
pub use f_brute::{f1_brute, f2_brute, f2_formula, F1Options, F1Result};
pub use g13::{G13Table, PartitionTree};
pub use table::{CellProvenance, F1Mode, FunctionRow, FunctionTable, Provenance, TableOptions};
pub use tfun::{near_regular, t_brute, t_closed, TBrute, T_ENUM_MAX, T_SCORE_MAX};
