//! Word-array bitset used for adjacency rows and candidate sets.

use std::fmt;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Bitset {
    words: Vec<u64>,
}

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

impl Bitset {
    /// Empty set able to hold `bits` elements without reallocating.
    pub fn new(bits: usize) -> Self {
        Bitset {
            words: vec![0; words_for(bits)],
        }
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Bitset::new(n);
        for w in 0..n / 64 {
            s.words[w] = u64::MAX;
        }
        if !n.is_multiple_of(64) {
            s.words[n / 64] = (1u64 << (n % 64)) - 1;
        }
        s
    }

    pub fn from_iter_with(bits: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Bitset::new(bits);
        for i in items {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if let Some(w) = self.words.get_mut(i / 64) {
            *w &= !(1u64 << (i % 64));
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1u64 << (i % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn intersection(&self, other: &Bitset) -> Bitset {
        Bitset {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn intersect_with(&mut self, other: &Bitset) {
        for (i, w) in self.words.iter_mut().enumerate() {
            *w &= other.words.get(i).copied().unwrap_or(0);
        }
    }

    pub fn difference(&self, other: &Bitset) -> Bitset {
        Bitset {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        }
    }

    pub fn intersection_len(&self, other: &Bitset) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Elements strictly greater than `i`.
    pub fn above(&self, i: usize) -> Bitset {
        let mut out = self.clone();
        let w = i / 64;
        let len = out.words.len();
        for x in out.words.iter_mut().take(w.min(len)) {
            *x = 0;
        }
        if let Some(x) = out.words.get_mut(w) {
            let keep = if i % 64 == 63 {
                0
            } else {
                u64::MAX << (i % 64 + 1)
            };
            *x &= keep;
        }
        out
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl fmt::Debug for Bitset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_above() {
        let s = Bitset::full(70);
        assert_eq!(s.len(), 70);
        assert_eq!(
            s.above(63).iter().collect::<Vec<_>>(),
            (64..70).collect::<Vec<_>>()
        );
        assert_eq!(s.above(69).len(), 0);
        assert_eq!(Bitset::full(64).above(0).len(), 63);
    }

    proptest! {
        #[test]
        fn iter_roundtrips(items in proptest::collection::btree_set(0usize..300, 0..50)) {
            let s = Bitset::from_iter_with(300, items.iter().copied());
            prop_assert_eq!(s.iter().collect::<Vec<_>>(), items.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(s.len(), items.len());
            prop_assert_eq!(s.first(), items.iter().next().copied());
        }
    }
}
