//! Monochromatic-set search over triple-coloring oracles.

use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::ColorId;
use crate::error::{Error, Result};
use crate::oracle::TripleColoring;
use crate::vertices::VertexSet;

/// Node and wall-clock caps for exponential searches.
#[derive(Clone, Debug, Default)]
pub struct SearchLimits {
    pub node_cap: Option<u64>,
    pub deadline: Option<Instant>,
}

impl SearchLimits {
    pub fn with_node_cap(cap: u64) -> Self {
        SearchLimits {
            node_cap: Some(cap),
            deadline: None,
        }
    }

    pub fn with_time_cap(mut self, cap: Duration) -> Self {
        self.deadline = Some(Instant::now() + cap);
        self
    }

    #[inline]
    pub fn check(&self, nodes: u64) -> Result<()> {
        if self.node_cap.is_some_and(|cap| nodes > cap) {
            return Err(Error::BudgetExceeded { nodes });
        }
        // reading the clock on every node is too slow
        if nodes & 0xFFF == 0 && self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::BudgetExceeded { nodes });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Sampled,
}

/// Result of a monochromatic-set search.
///
/// In exhaustive mode an absent witness certifies that no such set exists
/// and `nodes` counts visited search nodes. In sampled mode `nodes` is the
/// number of random subsets tried.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub mode: SearchMode,
    pub witness: Option<VertexSet>,
    pub nodes: u64,
}

/// Look for a `q`-subset of `universe` all of whose triples have color `color`.
///
/// Exhaustive mode enumerates subsets lexicographically, extending a partial
/// set only by candidates consistent with every pair already chosen, so the
/// witness, if any, is the lexicographically least one.
pub fn find_mono_set<O: TripleColoring + ?Sized>(
    oracle: &O,
    universe: &VertexSet,
    q: usize,
    color: ColorId,
    limits: &SearchLimits,
) -> Result<SearchOutcome> {
    if q < 3 {
        return Err(Error::domain("monochromatic sets need q >= 3"));
    }
    if let Some(m) = universe.max() {
        if m >= oracle.universe() {
            return Err(Error::domain(format!("vertex {m} outside oracle universe")));
        }
    }
    let mut st = MonoSearch {
        oracle,
        q,
        color,
        limits,
        nodes: 0,
        chosen: Vec::with_capacity(q),
    };
    let found = st.extend(universe.as_slice())?;
    Ok(SearchOutcome {
        mode: SearchMode::Exhaustive,
        witness: found.then(|| VertexSet::new(st.chosen.clone())),
        nodes: st.nodes,
    })
}

/// Random-subset sampling counterpart of [`find_mono_set`].
pub fn sample_mono_set<O: TripleColoring + ?Sized>(
    oracle: &O,
    universe: &VertexSet,
    q: usize,
    color: ColorId,
    trials: u64,
    seed: u64,
) -> Result<SearchOutcome> {
    if q < 3 {
        return Err(Error::domain("monochromatic sets need q >= 3"));
    }
    if q > universe.len() {
        return Ok(SearchOutcome {
            mode: SearchMode::Sampled,
            witness: None,
            nodes: 0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let items = universe.as_slice();
    for t in 1..=trials {
        let pick: Vec<usize> = sample(&mut rng, items.len(), q)
            .into_iter()
            .map(|i| items[i])
            .collect();
        if oracle.is_monochromatic(&pick, color) {
            return Ok(SearchOutcome {
                mode: SearchMode::Sampled,
                witness: Some(VertexSet::new(pick)),
                nodes: t,
            });
        }
    }
    Ok(SearchOutcome {
        mode: SearchMode::Sampled,
        witness: None,
        nodes: trials,
    })
}

/// Size and witness of a largest monochromatic set of color `color`.
pub fn max_mono_set<O: TripleColoring + ?Sized>(
    oracle: &O,
    universe: &VertexSet,
    color: ColorId,
    limits: &SearchLimits,
) -> Result<(VertexSet, u64)> {
    let mut st = MaxMono {
        oracle,
        color,
        limits,
        nodes: 0,
        chosen: Vec::new(),
        best: Vec::new(),
    };
    st.extend(universe.as_slice())?;
    Ok((VertexSet::new(st.best), st.nodes))
}

struct MonoSearch<'a, O: ?Sized> {
    oracle: &'a O,
    q: usize,
    color: ColorId,
    limits: &'a SearchLimits,
    nodes: u64,
    chosen: Vec<usize>,
}

impl<O: TripleColoring + ?Sized> MonoSearch<'_, O> {
    /// `cand` holds vertices above every chosen one that agree with all
    /// chosen pairs.
    fn extend(&mut self, cand: &[usize]) -> Result<bool> {
        self.nodes += 1;
        self.limits.check(self.nodes)?;
        if self.chosen.len() == self.q {
            return Ok(true);
        }
        for (i, &v) in cand.iter().enumerate() {
            if self.chosen.len() + (cand.len() - i) < self.q {
                break;
            }
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&w| {
                    self.chosen
                        .iter()
                        .all(|&x| self.oracle.color(x, v, w) == self.color)
                })
                .collect();
            self.chosen.push(v);
            if self.extend(&next)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}

struct MaxMono<'a, O: ?Sized> {
    oracle: &'a O,
    color: ColorId,
    limits: &'a SearchLimits,
    nodes: u64,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl<O: TripleColoring + ?Sized> MaxMono<'_, O> {
    fn extend(&mut self, cand: &[usize]) -> Result<()> {
        self.nodes += 1;
        self.limits.check(self.nodes)?;
        if self.chosen.len() > self.best.len() {
            self.best.clone_from(&self.chosen);
        }
        for (i, &v) in cand.iter().enumerate() {
            if self.chosen.len() + (cand.len() - i) <= self.best.len() {
                break;
            }
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&w| {
                    self.chosen
                        .iter()
                        .all(|&x| self.oracle.color(x, v, w) == self.color)
                })
                .collect();
            self.chosen.push(v);
            self.extend(&next)?;
            self.chosen.pop();
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{ConstOracle, RandomOracle, TournamentOracle};
    use crate::tournament::Tournament;
    use crate::vertices::for_each_subset;

    fn naive(o: &RandomOracle, q: usize, c: ColorId) -> Option<Vec<usize>> {
        let all: Vec<usize> = (0..o.n).collect();
        let mut found = None;
        for_each_subset(&all, q, |s| {
            if o.is_monochromatic(s, c) {
                found = Some(s.to_vec());
                false
            } else {
                true
            }
        });
        found
    }

    #[test]
    fn constant_red_gives_first_four() {
        let o = ConstOracle {
            n: 10,
            color: ColorId::RED,
        };
        let r = find_mono_set(
            &o,
            &VertexSet::range(10),
            4,
            ColorId::RED,
            &SearchLimits::default(),
        )
        .unwrap();
        assert_eq!(r.witness.unwrap().as_slice(), &[0, 1, 2, 3]);
        assert_eq!(r.mode, SearchMode::Exhaustive);
    }

    #[test]
    fn transitive_tournament_has_no_red_triple() {
        let o = TournamentOracle::new(Tournament::transitive(12));
        let r = find_mono_set(
            &o,
            &VertexSet::range(12),
            3,
            ColorId::RED,
            &SearchLimits::default(),
        )
        .unwrap();
        assert!(r.witness.is_none());
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        for seed in 0..120u64 {
            let n = 6 + (seed % 7) as usize;
            let q = 3 + (seed % 3) as usize;
            let p = [0.3, 0.5, 0.7, 0.85][(seed % 4) as usize];
            let o = RandomOracle { n, p, seed };
            for c in [ColorId::RED, ColorId::BLUE] {
                let r = find_mono_set(&o, &VertexSet::range(n), q, c, &SearchLimits::default())
                    .unwrap();
                assert_eq!(
                    r.witness.map(VertexSet::into_vec),
                    naive(&o, q, c),
                    "seed {seed}"
                );
            }
        }
    }

    #[test]
    fn max_mono_matches_find() {
        for seed in 0..30u64 {
            let o = RandomOracle {
                n: 11,
                p: 0.6,
                seed,
            };
            let u = VertexSet::range(11);
            let (best, _) = max_mono_set(&o, &u, ColorId::RED, &SearchLimits::default()).unwrap();
            assert!(o.is_monochromatic(best.as_slice(), ColorId::RED));
            let k = best.len();
            if k >= 3 {
                assert!(
                    find_mono_set(&o, &u, k, ColorId::RED, &SearchLimits::default())
                        .unwrap()
                        .witness
                        .is_some()
                );
            }
            assert!(
                find_mono_set(&o, &u, k + 1, ColorId::RED, &SearchLimits::default())
                    .unwrap()
                    .witness
                    .is_none()
            );
        }
    }

    #[test]
    fn budget_and_domain_errors() {
        let o = RandomOracle {
            n: 60,
            p: 0.5,
            seed: 1,
        };
        let lim = SearchLimits::with_node_cap(10);
        assert!(matches!(
            find_mono_set(&o, &VertexSet::range(60), 12, ColorId::RED, &lim),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(find_mono_set(&o, &VertexSet::range(60), 2, ColorId::RED, &lim).is_err());
        assert!(find_mono_set(&o, &VertexSet::range(61), 3, ColorId::RED, &lim).is_err());
    }

    #[test]
    fn sampling_finds_constant_sets_and_reports_trials() {
        let o = ConstOracle {
            n: 100,
            color: ColorId::BLUE,
        };
        let r = sample_mono_set(&o, &VertexSet::range(100), 5, ColorId::BLUE, 10, 1).unwrap();
        assert_eq!(r.nodes, 1);
        assert!(r.witness.is_some());
        let r = sample_mono_set(&o, &VertexSet::range(100), 5, ColorId::RED, 10, 1).unwrap();
        assert_eq!(
            (r.mode, r.nodes, r.witness),
            (SearchMode::Sampled, 10, None)
        );
    }

    #[test]
    fn outcome_json_shape() {
        let out = SearchOutcome {
            mode: SearchMode::Exhaustive,
            witness: None,
            nodes: 7,
        };
        assert_eq!(
            serde_json::to_string(&out).unwrap(),
            r#"{"mode":"exhaustive","witness":null,"nodes":7}"#
        );
    }
}
