//! Explicit colorings and hypergraph families.

mod hypergraph;
mod lift;
mod odd_cycle;
mod stepup;

pub use hypergraph::{build_blowup, build_cn, build_hg, Blowup, Hypergraph3};
pub use lift::{c2_color, lift_color, LiftColoringSpec, LiftOracle};
pub use odd_cycle::{odd_cycle_red_check, OddCycleCheck};
pub use stepup::{
    check_delta_properties, delta, stepup_color, DeltaReport, StepUpOracle, StepUpVertex,
};

use crate::coloring::{ColorId, EdgeColoring};
use crate::oracle::TripleColoring;
use crate::tournament::Orientation;

/// Red iff `{a, b, c}` is a cyclic triangle of `t`.
pub fn tournament_color<O: Orientation + ?Sized>(a: usize, b: usize, c: usize, t: &O) -> ColorId {
    if t.is_cyclic(a, b, c) {
        ColorId::RED
    } else {
        ColorId::BLUE
    }
}

/// Pair coloring with `(a, b)` colored II iff `b - a` is even, I otherwise.
pub fn parity_color(a: usize, b: usize) -> ColorId {
    if a.abs_diff(b).is_multiple_of(2) {
        ColorId::II
    } else {
        ColorId::I
    }
}

pub fn parity_coloring(s: usize) -> EdgeColoring {
    EdgeColoring::from_fn(s, 2, parity_color)
}

/// Number of triples `a < b < c` whose three pairs realize `pattern`
/// (colors of `(a,b)`, `(b,c)`, `(a,c)` in that order).
pub fn count_pattern(c: &EdgeColoring, pattern: [ColorId; 3]) -> u64 {
    let n = c.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            if c.color(a, b) != pattern[0] {
                continue;
            }
            for cc in b + 1..n {
                if c.color(b, cc) == pattern[1] && c.color(a, cc) == pattern[2] {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Sizes of the color classes of an oracle on its whole universe.
pub fn color_class_sizes<O: TripleColoring + ?Sized>(o: &O) -> Vec<u64> {
    let n = o.universe();
    let mut sizes = vec![0u64; o.palette() as usize];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                sizes[o.color(a, b, c).index()] += 1;
            }
        }
    }
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::Tournament;

    #[test]
    fn parity_examples() {
        assert_eq!(parity_color(1, 3), ColorId::II);
        assert_eq!(parity_color(1, 2), ColorId::I);
        // s = 6: the I, I, II pattern count equals 8
        let c = parity_coloring(6);
        assert_eq!(count_pattern(&c, [ColorId::I, ColorId::I, ColorId::II]), 8);
    }

    #[test]
    fn tournament_colors() {
        let t = Tournament::transitive(8);
        for a in 0..8 {
            for b in a + 1..8 {
                for c in b + 1..8 {
                    assert_eq!(tournament_color(a, b, c, &t), ColorId::BLUE);
                }
            }
        }
        let r5 = Tournament::rotational(5, 2);
        let o = crate::oracle::TournamentOracle::new(r5);
        assert_eq!(color_class_sizes(&o), vec![5, 5]);
    }
}
