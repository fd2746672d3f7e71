//! Tournaments: materialized bitset orientation and an implicit hashed one.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::parse_num;
use crate::hash;
use crate::search::SearchLimits;

/// Anything that orients every pair of `[n]`.
pub trait Orientation: Send + Sync {
    fn order(&self) -> usize;

    /// True iff `u -> v`. Only called with `u != v`.
    fn beats(&self, u: usize, v: usize) -> bool;

    /// True iff `{a, b, c}` is a directed 3-cycle.
    #[inline]
    fn is_cyclic(&self, a: usize, b: usize, c: usize) -> bool {
        let ab = self.beats(a, b);
        ab == self.beats(b, c) && ab == self.beats(c, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tournament {
    n: usize,
    beats: Vec<Bitset>,
}

/// A transitive subtournament listed source first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitiveSet {
    pub size: usize,
    pub order: Vec<usize>,
    pub nodes: u64,
}

impl Tournament {
    /// `i -> j` iff `i < j`.
    pub fn transitive(n: usize) -> Self {
        Self::from_fn(n, |i, j| i < j)
    }

    /// `i` beats `i+1, ..., i+k` (mod n).
    pub fn rotational(n: usize, k: usize) -> Self {
        assert!(2 * k + 1 == n, "rotational tournament needs n = 2k + 1");
        Self::from_fn(n, |i, j| (j + n - i) % n <= k)
    }

    /// Builds from `f(i, j)` evaluated for `i < j`; `true` means `i -> j`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut beats = vec![Bitset::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if f(i, j) {
                    beats[i].insert(j);
                } else {
                    beats[j].insert(i);
                }
            }
        }
        Tournament { n, beats }
    }

    /// Tournament whose pair `(i, j)`, `i < j`, in lexicographic pair order
    /// `k` is oriented `i -> j` iff bit `k` of `mask` is set.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut k = 0;
        let mut beats = vec![Bitset::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if (mask >> k) & 1 == 1 {
                    beats[i].insert(j);
                } else {
                    beats[j].insert(i);
                }
                k += 1;
            }
        }
        Tournament { n, beats }
    }

    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut beats = vec![Bitset::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen::<bool>() {
                    beats[i].insert(j);
                } else {
                    beats[j].insert(i);
                }
            }
        }
        Tournament { n, beats }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn out_neighbors(&self, v: usize) -> &Bitset {
        &self.beats[v]
    }

    pub fn outdegrees(&self) -> Vec<usize> {
        self.beats.iter().map(Bitset::len).collect()
    }

    /// Cyclic triangles via `C(n,3) - sum_i C(d_i, 2)`.
    pub fn count_cyclic_triangles(&self) -> u64 {
        cyclic_from_scores(self.n, &self.outdegrees())
    }

    /// Cyclic triangles by checking every triple.
    pub fn count_cyclic_triangles_direct(&self) -> u64 {
        let mut count = 0;
        for a in 0..self.n {
            for b in a + 1..self.n {
                for c in b + 1..self.n {
                    if self.is_cyclic(a, b, c) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// Largest transitive subtournament with at most `cap` vertices.
    pub fn max_transitive_subtournament(
        &self,
        cap: usize,
        limits: &SearchLimits,
    ) -> Result<TransitiveSet> {
        if cap > self.n {
            return Err(Error::domain(format!("cap {cap} exceeds order {}", self.n)));
        }
        let mut st = TransState {
            t: self,
            cap,
            best: Vec::new(),
            cur: Vec::new(),
            nodes: 0,
            limits,
        };
        st.expand(Bitset::full(self.n))?;
        Ok(TransitiveSet {
            size: st.best.len(),
            order: st.best,
            nodes: st.nodes,
        })
    }

    /// Parse the `t <n>` row-matrix format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, header) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "empty tournament file"))?;
        let mut it = header.split_whitespace();
        if it.next() != Some("t") {
            return Err(Error::parse(ln, "expected `t <n>` header"));
        }
        let n = parse_num(it.next(), ln)?;
        let mut beats = vec![Bitset::new(n); n];
        for (i, beats_i) in beats.iter_mut().enumerate() {
            let (ln, row) = lines
                .next()
                .ok_or_else(|| Error::parse(ln, format!("missing row {i}")))?;
            if row.len() != n {
                return Err(Error::parse(
                    ln,
                    format!("row {i} has length {} not {n}", row.len()),
                ));
            }
            for (j, ch) in row.bytes().enumerate() {
                match ch {
                    b'1' if i == j => return Err(Error::parse(ln, "nonzero diagonal")),
                    b'1' => beats_i.insert(j),
                    b'0' => {}
                    _ => return Err(Error::parse(ln, format!("bad character `{}`", ch as char))),
                }
            }
        }
        if let Some((ln, _)) = lines.next() {
            return Err(Error::parse(ln, "trailing data"));
        }
        let t = Tournament { n, beats };
        for i in 0..n {
            for j in i + 1..n {
                if t.beats[i].contains(j) == t.beats[j].contains(i) {
                    return Err(Error::parse(
                        0,
                        format!("pair ({i},{j}) must have exactly one direction"),
                    ));
                }
            }
        }
        Ok(t)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("t {}\n", self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.push(if self.beats[i].contains(j) { '1' } else { '0' });
            }
            let _ = writeln!(out);
        }
        out
    }
}

impl Orientation for Tournament {
    fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn beats(&self, u: usize, v: usize) -> bool {
        self.beats[u].contains(v)
    }
}

/// `C(n,3) - sum_i C(d_i, 2)` for an outdegree sequence.
pub fn cyclic_from_scores(n: usize, scores: &[usize]) -> u64 {
    let n = n as u64;
    let total = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    let transitive: u64 = scores
        .iter()
        .map(|&d| (d as u64) * (d as u64).saturating_sub(1) / 2)
        .sum();
    total - transitive
}

struct TransState<'a> {
    t: &'a Tournament,
    cap: usize,
    best: Vec<usize>,
    cur: Vec<usize>,
    nodes: u64,
    limits: &'a SearchLimits,
}

impl TransState<'_> {
    fn expand(&mut self, cand: Bitset) -> Result<()> {
        self.nodes += 1;
        self.limits.check(self.nodes)?;
        if self.cur.len() > self.best.len() {
            self.best.clone_from(&self.cur);
        }
        if self.best.len() >= self.cap || self.cur.len() + cand.len() <= self.best.len() {
            return Ok(());
        }
        for v in cand.iter() {
            if self.best.len() >= self.cap {
                return Ok(());
            }
            // v becomes the source of everything chosen after it
            let next = cand.intersection(&self.t.beats[v]);
            if self.cur.len() + 1 + next.len() <= self.best.len() {
                continue;
            }
            self.cur.push(v);
            self.expand(next)?;
            self.cur.pop();
        }
        Ok(())
    }
}

/// Implicit tournament on `[n]` with pseudo-random orientation from a seed.
///
/// Suitable for universes far too large to materialize.
#[derive(Clone, Debug)]
pub struct HashTournament {
    n: usize,
    seed: u64,
}

impl HashTournament {
    pub fn new(n: usize, seed: u64) -> Self {
        HashTournament { n, seed }
    }
}

impl Orientation for HashTournament {
    fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn beats(&self, u: usize, v: usize) -> bool {
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let fwd = hash::mix(self.seed, &[lo as u64, hi as u64]) & 1 == 1;
        fwd == (u < v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertices::for_each_subset;

    fn is_transitive(t: &Tournament, order: &[usize]) -> bool {
        order
            .iter()
            .enumerate()
            .all(|(i, &u)| order[i + 1..].iter().all(|&v| t.beats(u, v)))
    }

    fn brute_max_transitive(t: &Tournament) -> usize {
        let all: Vec<usize> = (0..t.order()).collect();
        let mut best = 0;
        for k in 1..=t.order() {
            let mut found = false;
            for_each_subset(&all, k, |s| {
                // a set is transitive iff it has no cyclic triple
                let mut acyclic = true;
                for_each_subset(s, 3, |tr| {
                    acyclic = !t.is_cyclic(tr[0], tr[1], tr[2]);
                    acyclic
                });
                found = acyclic;
                !found
            });
            if found {
                best = k;
            }
        }
        best
    }

    #[test]
    fn cyclic_counts_on_named_tournaments() {
        for n in 0..9 {
            assert_eq!(Tournament::transitive(n).count_cyclic_triangles(), 0);
        }
        let r5 = Tournament::rotational(5, 2);
        assert_eq!(r5.count_cyclic_triangles_direct(), 5);
        assert_eq!(r5.count_cyclic_triangles(), 5);
    }

    #[test]
    fn every_four_vertex_tournament_has_at_most_two_cyclic_triangles() {
        let max = (0..64u64)
            .map(|m| Tournament::from_pair_mask(4, m).count_cyclic_triangles_direct())
            .max();
        assert_eq!(max, Some(2));
    }

    #[test]
    fn score_formula_matches_direct_count() {
        for n in 0..=4usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for m in 0..(1u64 << pairs) {
                let t = Tournament::from_pair_mask(n, m);
                assert_eq!(
                    t.count_cyclic_triangles(),
                    t.count_cyclic_triangles_direct()
                );
            }
        }
        for seed in 0..10_000u64 {
            let n = 5 + (seed % 4) as usize;
            let t = Tournament::random(n, seed);
            assert_eq!(
                t.count_cyclic_triangles(),
                t.count_cyclic_triangles_direct()
            );
        }
    }

    #[test]
    fn transitive_subtournaments() {
        let lim = SearchLimits::default();
        let t = Tournament::transitive(6);
        let r = t.max_transitive_subtournament(6, &lim).unwrap();
        assert_eq!(r.size, 6);
        assert_eq!(r.order, vec![0, 1, 2, 3, 4, 5]);
        let r5 = Tournament::rotational(5, 2);
        assert_eq!(brute_max_transitive(&r5), 3);
        assert_eq!(r5.max_transitive_subtournament(5, &lim).unwrap().size, 3);
        // i beats i+1, i+2, i+3: {0,1,2,3} is already transitive
        let r7 = Tournament::rotational(7, 3);
        assert_eq!(brute_max_transitive(&r7), 4);
        let w = r7.max_transitive_subtournament(7, &lim).unwrap();
        assert_eq!(w.size, 4);
        assert!(is_transitive(&r7, &w.order));
        // quadratic residues mod 7
        let paley = Tournament::from_fn(7, |i, j| [1, 2, 4].contains(&((j + 7 - i) % 7)));
        assert_eq!(brute_max_transitive(&paley), 3);
        assert_eq!(paley.max_transitive_subtournament(7, &lim).unwrap().size, 3);
        // cap stops early
        assert_eq!(t.max_transitive_subtournament(3, &lim).unwrap().size, 3);
        assert!(t.max_transitive_subtournament(7, &lim).is_err());
    }

    #[test]
    fn transitive_search_matches_brute_force_on_random() {
        let lim = SearchLimits::default();
        for seed in 0..200 {
            let t = Tournament::random(8, seed);
            let r = t.max_transitive_subtournament(8, &lim).unwrap();
            assert!(is_transitive(&t, &r.order));
            assert_eq!(r.size, brute_max_transitive(&t));
        }
    }

    #[test]
    fn node_cap_is_enforced() {
        let t = Tournament::random(40, 1);
        let lim = SearchLimits::with_node_cap(5);
        assert!(matches!(
            t.max_transitive_subtournament(40, &lim),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn text_format() {
        let t = Tournament::rotational(5, 2);
        assert_eq!(Tournament::parse(&t.to_text()).unwrap(), t);
        assert!(Tournament::parse("t 2\n00\n00\n").is_err());
        assert!(Tournament::parse("t 2\n11\n00\n").is_err());
        assert!(Tournament::parse("t 2\n01\n").is_err());
    }

    #[test]
    fn hash_tournament_is_antisymmetric() {
        let h = HashTournament::new(100, 9);
        for u in 0..100 {
            for v in 0..100 {
                if u != v {
                    assert_ne!(h.beats(u, v), h.beats(v, u));
                }
            }
        }
    }
}
