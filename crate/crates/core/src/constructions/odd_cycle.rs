use serde::Serialize;

use crate::error::{Error, Result};
use crate::tournament::Orientation;

/// Outcome of checking apex/odd-cycle configurations in a tournament.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OddCycleCheck {
    /// Some cycle edge `(u_j, u_{j+1})` has both endpoints on the same side of
    /// the apex, so `{v, u_j, u_{j+1}}` is not cyclic.
    Clean { edge: (usize, usize) },
    /// Every triple `{v, u_j, u_{j+1}}` is cyclic.
    Violation { cycle: Vec<usize> },
}

/// Check that an apex and an odd cycle cannot have all apex triples cyclic.
///
/// Splitting the cycle by the direction of its edge to the apex would
/// properly 2-color an odd cycle, so the first cycle edge whose endpoints
/// lie on the same side is returned.
pub fn odd_cycle_red_check<O: Orientation + ?Sized>(
    t: &O,
    apex: usize,
    cycle: &[usize],
) -> Result<OddCycleCheck> {
    let len = cycle.len();
    if len < 3 || len.is_multiple_of(2) {
        return Err(Error::domain("cycle must have odd length >= 3"));
    }
    let n = t.order();
    let mut seen = std::collections::HashSet::new();
    for &u in cycle.iter().chain(std::iter::once(&apex)) {
        if u >= n || !seen.insert(u) {
            return Err(Error::domain(
                "apex and cycle vertices must be distinct and in range",
            ));
        }
    }
    for j in 0..len {
        let (a, b) = (cycle[j], cycle[(j + 1) % len]);
        if t.beats(apex, a) == t.beats(apex, b) {
            debug_assert!(!t.is_cyclic(apex, a, b));
            return Ok(OddCycleCheck::Clean { edge: (a, b) });
        }
    }
    Ok(OddCycleCheck::Violation {
        cycle: cycle.to_vec(),
    })
}
