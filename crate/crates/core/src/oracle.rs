//! Triple colorings exposed as pure functions of a sorted triple.
//!
//! Nothing here materializes `C(N, 3)` colors; universes of size `2^20`
//! and beyond are evaluated lazily.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::coloring::ColorId;
use crate::hash;
use crate::tournament::Orientation;

pub trait TripleColoring: Send + Sync {
    /// Size `N` of the ground set `[N]`.
    fn universe(&self) -> usize;

    /// Number of colors (2 or 3).
    fn palette(&self) -> u8;

    /// Color of `{a, b, c}`. Callers guarantee `a < b < c < N`.
    fn color(&self, a: usize, b: usize, c: usize) -> ColorId;

    /// Color of an unsorted triple of distinct vertices.
    fn color_of(&self, x: usize, y: usize, z: usize) -> ColorId {
        let mut t = [x, y, z];
        t.sort_unstable();
        debug_assert!(t[0] < t[1] && t[1] < t[2], "triple must be distinct");
        self.color(t[0], t[1], t[2])
    }

    /// True iff every triple of `set` has color `c`.
    fn is_monochromatic(&self, set: &[usize], c: ColorId) -> bool {
        let mut s = set.to_vec();
        s.sort_unstable();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                for k in j + 1..s.len() {
                    if self.color(s[i], s[j], s[k]) != c {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl<T: TripleColoring + ?Sized> TripleColoring for &T {
    fn universe(&self) -> usize {
        (**self).universe()
    }
    fn palette(&self) -> u8 {
        (**self).palette()
    }
    fn color(&self, a: usize, b: usize, c: usize) -> ColorId {
        (**self).color(a, b, c)
    }
}

impl<T: TripleColoring + ?Sized> TripleColoring for Box<T> {
    fn universe(&self) -> usize {
        (**self).universe()
    }
    fn palette(&self) -> u8 {
        (**self).palette()
    }
    fn color(&self, a: usize, b: usize, c: usize) -> ColorId {
        (**self).color(a, b, c)
    }
}

impl<T: TripleColoring + ?Sized> TripleColoring for Arc<T> {
    fn universe(&self) -> usize {
        (**self).universe()
    }
    fn palette(&self) -> u8 {
        (**self).palette()
    }
    fn color(&self, a: usize, b: usize, c: usize) -> ColorId {
        (**self).color(a, b, c)
    }
}

/// Every triple gets the same color.
#[derive(Clone, Debug)]
pub struct ConstOracle {
    pub n: usize,
    pub color: ColorId,
}

impl TripleColoring for ConstOracle {
    fn universe(&self) -> usize {
        self.n
    }
    fn palette(&self) -> u8 {
        2
    }
    fn color(&self, _: usize, _: usize, _: usize) -> ColorId {
        self.color
    }
}

/// Each triple is red independently with probability `p`, by seeded hash.
#[derive(Clone, Debug)]
pub struct RandomOracle {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl TripleColoring for RandomOracle {
    fn universe(&self) -> usize {
        self.n
    }
    fn palette(&self) -> u8 {
        2
    }
    fn color(&self, a: usize, b: usize, c: usize) -> ColorId {
        let h = hash::mix(self.seed, &[a as u64, b as u64, c as u64]);
        if hash::unit_f64(h) < self.p {
            ColorId::RED
        } else {
            ColorId::BLUE
        }
    }
}

/// Red iff the triple is a cyclic triangle of the tournament.
#[derive(Clone, Debug)]
pub struct TournamentOracle<O> {
    pub orientation: O,
}

impl<O: Orientation> TournamentOracle<O> {
    pub fn new(orientation: O) -> Self {
        TournamentOracle { orientation }
    }
}

impl<O: Orientation> TripleColoring for TournamentOracle<O> {
    fn universe(&self) -> usize {
        self.orientation.order()
    }
    fn palette(&self) -> u8 {
        2
    }
    fn color(&self, a: usize, b: usize, c: usize) -> ColorId {
        if self.orientation.is_cyclic(a, b, c) {
            ColorId::RED
        } else {
            ColorId::BLUE
        }
    }
}

/// Two-color view of a multi-color oracle: red iff the inner color is
/// `target`, blue otherwise.
#[derive(Clone, Debug)]
pub struct Binarized<O> {
    pub inner: O,
    pub target: ColorId,
}

impl<O: TripleColoring> TripleColoring for Binarized<O> {
    fn universe(&self) -> usize {
        self.inner.universe()
    }
    fn palette(&self) -> u8 {
        2
    }
    fn color(&self, a: usize, b: usize, c: usize) -> ColorId {
        if self.inner.color(a, b, c) == self.target {
            ColorId::RED
        } else {
            ColorId::BLUE
        }
    }
}

/// Restriction of an oracle to the first `n` vertices.
#[derive(Clone, Debug)]
pub struct Prefix<O> {
    pub inner: O,
    pub n: usize,
}

impl<O: TripleColoring> TripleColoring for Prefix<O> {
    fn universe(&self) -> usize {
        self.n.min(self.inner.universe())
    }
    fn palette(&self) -> u8 {
        self.inner.palette()
    }
    fn color(&self, a: usize, b: usize, c: usize) -> ColorId {
        self.inner.color(a, b, c)
    }
}

/// Oracle from a closure; handy in tests.
pub struct FnOracle<F> {
    pub n: usize,
    pub palette: u8,
    pub f: F,
}

impl<F> TripleColoring for FnOracle<F>
where
    F: Fn(usize, usize, usize) -> ColorId + Send + Sync,
{
    fn universe(&self) -> usize {
        self.n
    }
    fn palette(&self) -> u8 {
        self.palette
    }
    fn color(&self, a: usize, b: usize, c: usize) -> ColorId {
        (self.f)(a, b, c)
    }
}

/// Caches evaluations of an expensive oracle.
pub struct Memoized<O> {
    inner: O,
    cache: RwLock<HashMap<(u32, u32, u32), ColorId>>,
}

impl<O: TripleColoring> Memoized<O> {
    pub fn new(inner: O) -> Self {
        Memoized {
            inner,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn cached(&self) -> usize {
        self.cache.read().map(|c| c.len()).unwrap_or(0)
    }
}

impl<O: TripleColoring> TripleColoring for Memoized<O> {
    fn universe(&self) -> usize {
        self.inner.universe()
    }
    fn palette(&self) -> u8 {
        self.inner.palette()
    }
    fn color(&self, a: usize, b: usize, c: usize) -> ColorId {
        let key = (a as u32, b as u32, c as u32);
        if let Some(&col) = self
            .cache
            .read()
            .ok()
            .and_then(|m| m.get(&key).copied())
            .as_ref()
        {
            return col;
        }
        let col = self.inner.color(a, b, c);
        if let Ok(mut m) = self.cache.write() {
            m.insert(key, col);
        }
        col
    }
}
