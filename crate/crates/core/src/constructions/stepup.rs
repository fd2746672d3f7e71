//! Stepping-up 3-coloring of the triples of `{0,1}^m`.
//!
//! A vertex is an `m`-bit string `(g_1, ..., g_m)` stored as the integer
//! `b = sum g_i 2^(i-1)`, so coordinate `i` is bit `i-1` and the vertex
//! order is integer order. Coordinates are 1-indexed; the base graph's
//! vertex `i - 1` stands for coordinate `i`.

use serde::Serialize;

use crate::coloring::ColorId;
use crate::error::{Error, Result};
use crate::graph::BitGraph;
use crate::hash;
use crate::oracle::TripleColoring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepUpVertex {
    value: u64,
    m: u32,
}

impl StepUpVertex {
    pub fn new(value: u64, m: u32) -> Result<Self> {
        if m > 63 || value >> m != 0 {
            return Err(Error::domain(format!("{value} is not an {m}-bit string")));
        }
        Ok(StepUpVertex { value, m })
    }

    /// From coordinates `g_1, ..., g_m` (each 0 or 1).
    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        let mut value = 0u64;
        for (i, &g) in coords.iter().enumerate() {
            match g {
                0 => {}
                1 => value |= 1 << i,
                _ => return Err(Error::domain("coordinates must be 0 or 1")),
            }
        }
        StepUpVertex::new(value, coords.len() as u32)
    }

    /// `b(e)`.
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Coordinate `g_i`, 1-indexed.
    pub fn coord(&self, i: u32) -> u8 {
        ((self.value >> (i - 1)) & 1) as u8
    }
}

/// Largest (1-indexed) coordinate where two distinct strings differ.
pub fn delta(a: StepUpVertex, b: StepUpVertex) -> Result<u32> {
    if a.value == b.value {
        return Err(Error::domain("delta of equal strings is undefined"));
    }
    Ok(delta_raw(a.value, b.value))
}

#[inline]
fn delta_raw(a: u64, b: u64) -> u32 {
    64 - (a ^ b).leading_zeros()
}

/// Color of a triple of distinct strings under base graph `g` on `m` vertices.
pub fn stepup_color(triple: [StepUpVertex; 3], g: &BitGraph) -> ColorId {
    let mut t = triple.map(|v| v.value);
    t.sort_unstable();
    color_sorted(t[0], t[1], t[2], g)
}

#[inline]
fn color_sorted(e1: u64, e2: u64, e3: u64, g: &BitGraph) -> ColorId {
    let d1 = delta_raw(e1, e2);
    let d2 = delta_raw(e2, e3);
    // consecutive deltas of an increasing chain always differ
    assert_ne!(d1, d2, "equal consecutive deltas on {e1} < {e2} < {e3}");
    if g.has_edge(d1 as usize - 1, d2 as usize - 1) {
        if d1 < d2 {
            ColorId::C1
        } else {
            ColorId::C2
        }
    } else {
        ColorId::C3
    }
}

/// The stepping-up coloring as an oracle on `[2^m]`.
#[derive(Clone, Debug)]
pub struct StepUpOracle {
    g: BitGraph,
}

impl StepUpOracle {
    pub fn new(g: BitGraph) -> Result<Self> {
        if g.n() == 0 || g.n() > 40 {
            return Err(Error::domain(
                "stepping-up base graph needs 1..=40 vertices",
            ));
        }
        Ok(StepUpOracle { g })
    }

    pub fn m(&self) -> usize {
        self.g.n()
    }

    pub fn base(&self) -> &BitGraph {
        &self.g
    }
}

impl TripleColoring for StepUpOracle {
    fn universe(&self) -> usize {
        1 << self.g.n()
    }

    fn palette(&self) -> u8 {
        3
    }

    fn color(&self, a: usize, b: usize, c: usize) -> ColorId {
        color_sorted(a as u64, b as u64, c as u64, &self.g)
    }
}

/// Outcome of sampling increasing chains and checking the three delta facts:
/// consecutive deltas differ, `delta(e_1, e_p)` is the largest consecutive
/// delta, and that largest delta occurs once.
#[derive(Clone, Debug, Serialize)]
pub struct DeltaReport {
    pub samples: u64,
    pub m_max: u32,
    /// First offending chain (as integers) with the property it breaks.
    pub violation: Option<(Vec<u64>, &'static str)>,
}

/// Samples `samples` increasing chains of 3 to 8 strings with
/// `3 <= m <= m_max`, reproducibly from `seed`.
pub fn check_delta_properties(samples: u64, m_max: u32, seed: u64) -> Result<DeltaReport> {
    if !(3..=63).contains(&m_max) {
        return Err(Error::domain("m_max must lie in 3..=63"));
    }
    let key = hash::substream(seed, "sampler");
    let mut vals: Vec<u64> = Vec::with_capacity(8);
    for i in 0..samples {
        let h = hash::mix(key, &[i]);
        let m = 3 + (h % (m_max as u64 - 2)) as u32;
        let p = (3 + (h >> 32) % 6).min(1 << m) as usize;
        vals.clear();
        let mut k = 0;
        while vals.len() < p {
            let x = hash::mix(key, &[i, k]) & ((1u64 << m) - 1);
            k += 1;
            if !vals.contains(&x) {
                vals.push(x);
            }
        }
        vals.sort_unstable();
        let steps: Vec<u32> = vals.windows(2).map(|w| delta_raw(w[0], w[1])).collect();
        let max = *steps.iter().max().expect("p >= 3");
        let broken = if steps.windows(2).any(|w| w[0] == w[1]) {
            Some("consecutive deltas equal")
        } else if delta_raw(vals[0], vals[p - 1]) != max {
            Some("end-to-end delta is not the largest step")
        } else if steps.iter().filter(|&&d| d == max).count() != 1 {
            Some("largest step not unique")
        } else {
            None
        };
        if let Some(what) = broken {
            return Ok(DeltaReport {
                samples: i + 1,
                m_max,
                violation: Some((vals.clone(), what)),
            });
        }
    }
    Ok(DeltaReport {
        samples,
        m_max,
        violation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::color_class_sizes;
    use proptest::prelude::*;

    fn v(coords: &[u8]) -> StepUpVertex {
        StepUpVertex::from_coords(coords).unwrap()
    }

    /// Direct coordinate scan, independent of the xor trick.
    fn delta_scan(a: StepUpVertex, b: StepUpVertex) -> u32 {
        (1..=a.m())
            .filter(|&i| a.coord(i) != b.coord(i))
            .max()
            .unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(v(&[0, 0, 0]), v(&[1, 0, 0])).unwrap(), 1);
        assert_eq!(delta(v(&[1, 0, 1]), v(&[0, 1, 1])).unwrap(), 2);
        assert!(delta(v(&[1, 1]), v(&[1, 1])).is_err());
        assert!(StepUpVertex::new(8, 3).is_err());
    }

    #[test]
    fn ordering_is_integer_order() {
        // e < e' iff at the top differing coordinate e has 0 and e' has 1
        for a in 0..32u64 {
            for b in 0..32u64 {
                if a == b {
                    continue;
                }
                let (x, y) = (
                    StepUpVertex::new(a, 5).unwrap(),
                    StepUpVertex::new(b, 5).unwrap(),
                );
                let d = delta_scan(x, y);
                assert_eq!(x < y, x.coord(d) == 0 && y.coord(d) == 1);
            }
        }
    }

    #[test]
    fn color_examples() {
        // G = single edge between coordinates 1 and 2 on m = 2
        let g = BitGraph::from_edges(2, [(0, 1)]).unwrap();
        let t = [v(&[0, 0]), v(&[1, 0]), v(&[0, 1])];
        assert_eq!(stepup_color(t, &g), ColorId::C1);
        assert_eq!(stepup_color([t[2], t[0], t[1]], &g), ColorId::C1);
        assert_eq!(stepup_color(t, &BitGraph::empty(2)), ColorId::C3);
    }

    #[test]
    fn c5_class_sizes_total() {
        let o = StepUpOracle::new(BitGraph::cycle(5)).unwrap();
        let sizes = color_class_sizes(&o);
        assert_eq!(sizes.iter().sum::<u64>(), 4960);
    }

    /// Random increasing chain of `p` distinct `m`-bit strings.
    fn chain(seed: u64, m: u32, p: usize) -> Vec<StepUpVertex> {
        let mut vals: Vec<u64> = Vec::with_capacity(p);
        let mut k = 0;
        while vals.len() < p {
            let x = hash::mix(seed, &[k]) & ((1u64 << m) - 1);
            k += 1;
            if !vals.contains(&x) {
                vals.push(x);
            }
        }
        vals.sort_unstable();
        vals.into_iter()
            .map(|x| StepUpVertex::new(x, m).unwrap())
            .collect()
    }

    #[test]
    fn delta_properties_on_sampled_chains() {
        for seed in 0..20_000u64 {
            let m = 3 + (seed % 18) as u32;
            let p = 3 + (seed % 6) as usize;
            let ch = chain(seed, m, p);
            let steps: Vec<u32> = ch.windows(2).map(|w| delta(w[0], w[1]).unwrap()).collect();
            for w in steps.windows(2) {
                assert_ne!(w[0], w[1]);
            }
            let max = *steps.iter().max().unwrap();
            assert_eq!(delta(ch[0], ch[p - 1]).unwrap(), max);
            assert_eq!(steps.iter().filter(|&&d| d == max).count(), 1);
        }
    }

    #[test]
    fn sampled_report() {
        let r = check_delta_properties(50_000, 20, 1).unwrap();
        assert!(r.violation.is_none());
        assert_eq!(r.samples, 50_000);
        assert!(check_delta_properties(10, 2, 1).is_err());
    }

    proptest! {
        #[test]
        fn delta_matches_scan(a in 0u64..(1 << 20), b in 0u64..(1 << 20)) {
            prop_assume!(a != b);
            let (x, y) = (StepUpVertex::new(a, 20).unwrap(), StepUpVertex::new(b, 20).unwrap());
            prop_assert_eq!(delta(x, y).unwrap(), delta_scan(x, y));
            prop_assert_eq!(delta(x, y).unwrap(), delta(y, x).unwrap());
        }
    }
}
