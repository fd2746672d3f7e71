//! Lift of a pair coloring on `[r]` to a triple coloring on `[N]`.
//!
//! A seeded hash `c2` assigns every pair of `[N]` a label in `[r]`. The
//! triple `a < b < c` is blue when `c2(a,b) = c2(a,c)` and otherwise takes
//! the `c1` color of the two labels.

use crate::coloring::{ColorId, EdgeColoring};
use crate::error::{Error, Result};
use crate::hash;
use crate::oracle::TripleColoring;

#[derive(Clone, Debug)]
pub struct LiftColoringSpec {
    pub r: usize,
    pub c1: EdgeColoring,
    pub seed: u64,
}

impl LiftColoringSpec {
    pub fn new(c1: EdgeColoring, seed: u64) -> Result<Self> {
        if c1.palette() != 2 {
            return Err(Error::domain("c1 must be a red/blue coloring"));
        }
        if c1.n() < 2 {
            return Err(Error::domain("c1 needs at least two colors to choose from"));
        }
        Ok(LiftColoringSpec {
            r: c1.n(),
            c1,
            seed,
        })
    }
}

/// `c2(a, b)` for `a < b`: a uniform label in `[r]`.
#[inline]
pub fn c2_color(a: usize, b: usize, spec: &LiftColoringSpec) -> usize {
    (hash::mix(spec.seed, &[a as u64, b as u64]) % spec.r as u64) as usize
}

pub fn lift_color(a: usize, b: usize, c: usize, spec: &LiftColoringSpec) -> ColorId {
    debug_assert!(a < b && b < c);
    let x = c2_color(a, b, spec);
    let y = c2_color(a, c, spec);
    if x == y {
        ColorId::BLUE
    } else {
        spec.c1.color(x, y)
    }
}

#[derive(Clone, Debug)]
pub struct LiftOracle {
    pub n: usize,
    pub spec: LiftColoringSpec,
}

impl TripleColoring for LiftOracle {
    fn universe(&self) -> usize {
        self.n
    }

    fn palette(&self) -> u8 {
        2
    }

    fn color(&self, a: usize, b: usize, c: usize) -> ColorId {
        lift_color(a, b, c, &self.spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BitGraph;
    use crate::search::{find_mono_set, SearchLimits};
    use crate::vertices::VertexSet;

    #[test]
    fn equal_labels_give_blue_and_all_red_c1_gives_label_test() {
        let spec = LiftColoringSpec::new(EdgeColoring::uniform(4, 2, ColorId::RED), 11).unwrap();
        for a in 0..15 {
            for b in a + 1..15 {
                for c in b + 1..15 {
                    let expect = if c2_color(a, b, &spec) == c2_color(a, c, &spec) {
                        ColorId::BLUE
                    } else {
                        ColorId::RED
                    };
                    assert_eq!(lift_color(a, b, c, &spec), expect);
                }
            }
        }
    }

    #[test]
    fn red_set_forces_red_clique_in_c1() {
        // red s-set {u1 < ... < us} => labels c2(u1, uj) form a red (s-1)-clique
        let pent = EdgeColoring::from_red_graph(&BitGraph::cycle(5));
        let spec = LiftColoringSpec::new(pent, 5).unwrap();
        let o = LiftOracle {
            n: 40,
            spec: spec.clone(),
        };
        let r = find_mono_set(
            &o,
            &VertexSet::range(40),
            3,
            ColorId::RED,
            &SearchLimits::default(),
        )
        .unwrap();
        let w = r.witness.expect("red triples exist");
        let s = w.as_slice();
        assert_ne!(c2_color(s[0], s[1], &spec), c2_color(s[0], s[2], &spec));
    }

    #[test]
    fn rejects_bad_c1() {
        assert!(LiftColoringSpec::new(EdgeColoring::uniform(3, 3, ColorId(0)), 0).is_err());
        assert!(LiftColoringSpec::new(EdgeColoring::uniform(1, 2, ColorId(0)), 0).is_err());
    }
}
