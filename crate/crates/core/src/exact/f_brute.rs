//! Exhaustive maxima of ordered triangle patterns in pair colorings.
//!
//! `F2(s)`: two colors, pattern `(a,b) = I`, `(b,c) = I`, `(a,c) = II`.
//! `F1(s)`: three colors, pattern `(a,b) = I`, `(b,c) = II`, `(a,c) = III`.

use crate::coloring::{pair_count, pair_index, ColorId, EdgeColoring};
use crate::error::{Error, Result};
use crate::exact::tfun::t_closed;
use crate::search::SearchLimits;

/// Closed form for `F2`, equal to `T`.
pub fn f2_formula(s: usize) -> u64 {
    t_closed(s as u64)
}

/// Enumerates all `2^C(s,2)` colorings (`s <= 7`, or 8 when `allow_s8`).
///
/// Colorings are visited in Gray-code order; a flip of pair `{u, v}` only
/// changes the `s - 2` triples through it. Returns the maximum and the
/// least coloring mask (bit set = color II) attaining it.
pub fn f2_brute(s: usize, allow_s8: bool) -> Result<(u64, EdgeColoring)> {
    let cap = if allow_s8 { 8 } else { 7 };
    if s > cap {
        return Err(Error::BudgetExceeded { nodes: 0 });
    }
    let pairs = pair_count(s);
    let mut mask = 0u64;
    let is2 = |mask: u64, u: usize, v: usize| mask >> pair_index(u, v) & 1 == 1;
    let pattern = |mask: u64, a: usize, b: usize, c: usize| {
        !is2(mask, a, b) && !is2(mask, b, c) && is2(mask, a, c)
    };
    // all color I: no pattern triples
    let mut count: i64 = 0;
    let mut best = (0i64, 0u64);
    // colex index -> pair
    let mut pair_of = vec![(0, 0); pairs];
    for v in 1..s {
        for u in 0..v {
            pair_of[pair_index(u, v)] = (u, v);
        }
    }
    for step in 1u64..(1u64 << pairs) {
        let k = step.trailing_zeros() as usize;
        let (u, v) = pair_of[k];
        let mut before = 0i64;
        for w in 0..s {
            if w == u || w == v {
                continue;
            }
            let mut t = [u, v, w];
            t.sort_unstable();
            before += pattern(mask, t[0], t[1], t[2]) as i64;
        }
        mask ^= 1 << k;
        let mut after = 0i64;
        for w in 0..s {
            if w == u || w == v {
                continue;
            }
            let mut t = [u, v, w];
            t.sort_unstable();
            after += pattern(mask, t[0], t[1], t[2]) as i64;
        }
        count += after - before;
        if count > best.0 || (count == best.0 && mask < best.1) {
            best = (count, mask);
        }
    }
    let colors = (0..pairs)
        .map(|k| {
            if best.1 >> k & 1 == 1 {
                ColorId::II
            } else {
                ColorId::I
            }
        })
        .collect();
    Ok((best.0 as u64, EdgeColoring::from_colors(s, 2, colors)?))
}

#[derive(Clone, Debug, Default)]
pub struct F1Options {
    /// Permit `s = 7` (the search is then bounded by `limits`).
    pub allow_s7: bool,
    pub limits: SearchLimits,
}

#[derive(Clone, Debug)]
pub struct F1Result {
    /// Best value found; the exact maximum when `exact`.
    pub value: u64,
    pub witness: EdgeColoring,
    /// False when the node budget ran out (value is then a lower bound).
    pub exact: bool,
    pub nodes: u64,
}

/// Branch and bound over all `3^C(s,2)` colorings.
///
/// Pairs are assigned in colex order so each triple is decided when its
/// `(b,c)` pair is colored. The bound is the number of triples not yet
/// contradicted, and the search stops outright once `T(s)` is reached.
pub fn f1_brute(s: usize, opts: &F1Options) -> Result<F1Result> {
    let cap = if opts.allow_s7 { 7 } else { 6 };
    if s > cap {
        return Err(Error::BudgetExceeded { nodes: 0 });
    }
    let pairs = pair_count(s);
    // per pair: (triple id, required color)
    let mut roles: Vec<Vec<(usize, ColorId)>> = vec![Vec::new(); pairs];
    let mut ntriples = 0;
    for a in 0..s {
        for b in a + 1..s {
            for c in b + 1..s {
                roles[pair_index(a, b)].push((ntriples, ColorId::I));
                roles[pair_index(b, c)].push((ntriples, ColorId::II));
                roles[pair_index(a, c)].push((ntriples, ColorId::III));
                ntriples += 1;
            }
        }
    }
    let mut st = F1Search {
        roles: &roles,
        ceiling: t_closed(s as u64) as usize,
        mismatches: vec![0u8; ntriples],
        alive: ntriples,
        colors: vec![ColorId::I; pairs],
        best: None,
        nodes: 0,
        limits: &opts.limits,
    };
    let exact = match st.assign(0) {
        Ok(()) => true,
        Err(Error::BudgetExceeded { .. }) => false,
        Err(e) => return Err(e),
    };
    let (value, colors) = match st.best {
        Some(b) => b,
        None => (0, vec![ColorId::I; pairs]),
    };
    Ok(F1Result {
        value: value as u64,
        witness: EdgeColoring::from_colors(s, 3, colors)?,
        exact,
        nodes: st.nodes,
    })
}

struct F1Search<'a> {
    roles: &'a [Vec<(usize, ColorId)>],
    ceiling: usize,
    mismatches: Vec<u8>,
    alive: usize,
    colors: Vec<ColorId>,
    best: Option<(usize, Vec<ColorId>)>,
    nodes: u64,
    limits: &'a SearchLimits,
}

impl F1Search<'_> {
    fn best_value(&self) -> Option<usize> {
        self.best.as_ref().map(|b| b.0)
    }

    fn done(&self) -> bool {
        self.best_value() == Some(self.ceiling)
    }

    fn assign(&mut self, k: usize) -> Result<()> {
        self.nodes += 1;
        self.limits.check(self.nodes)?;
        if k == self.colors.len() {
            if self.best_value().is_none_or(|b| self.alive > b) {
                self.best = Some((self.alive, self.colors.clone()));
            }
            return Ok(());
        }
        for c in [ColorId::I, ColorId::II, ColorId::III] {
            self.colors[k] = c;
            for &(t, need) in &self.roles[k] {
                if need != c {
                    if self.mismatches[t] == 0 {
                        self.alive -= 1;
                    }
                    self.mismatches[t] += 1;
                }
            }
            if self.best_value().is_none_or(|b| self.alive > b) {
                self.assign(k + 1)?;
            }
            for &(t, need) in &self.roles[k] {
                if need != c {
                    self.mismatches[t] -= 1;
                    if self.mismatches[t] == 0 {
                        self.alive += 1;
                    }
                }
            }
            if self.done() {
                break;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{count_pattern, parity_coloring};

    const F2_PATTERN: [ColorId; 3] = [ColorId::I, ColorId::I, ColorId::II];
    const F1_PATTERN: [ColorId; 3] = [ColorId::I, ColorId::II, ColorId::III];

    /// Plain enumeration of every 3-coloring, counting directly.
    fn f1_naive(s: usize) -> u64 {
        let pairs = pair_count(s);
        let mut best = 0;
        for code in 0..3u64.pow(pairs as u32) {
            let mut x = code;
            let colors: Vec<ColorId> = (0..pairs)
                .map(|_| {
                    let c = ColorId((x % 3) as u8);
                    x /= 3;
                    c
                })
                .collect();
            let c = EdgeColoring::from_colors(s, 3, colors).unwrap();
            best = best.max(count_pattern(&c, F1_PATTERN));
        }
        best
    }

    /// Same for two colors.
    fn f2_naive(s: usize) -> u64 {
        let pairs = pair_count(s);
        (0..1u64 << pairs)
            .map(|m| {
                let colors = (0..pairs).map(|k| ColorId((m >> k & 1) as u8)).collect();
                count_pattern(
                    &EdgeColoring::from_colors(s, 2, colors).unwrap(),
                    F2_PATTERN,
                )
            })
            .max()
            .unwrap()
    }

    #[test]
    fn f2_small_values() {
        assert_eq!(f2_brute(3, false).unwrap().0, 1);
        assert_eq!(f2_brute(5, false).unwrap().0, 5);
        assert_eq!(f2_brute(6, false).unwrap().0, 8);
        for s in 1..=6 {
            let (v, w) = f2_brute(s, false).unwrap();
            assert_eq!(v, f2_naive(s), "s={s}");
            assert_eq!(count_pattern(&w, F2_PATTERN), v);
            assert_eq!(v, f2_formula(s));
        }
        assert!(f2_brute(8, false).is_err());
    }

    #[test]
    fn parity_coloring_attains_f2() {
        for s in 1..=12 {
            assert_eq!(
                count_pattern(&parity_coloring(s), F2_PATTERN),
                f2_formula(s),
                "s={s}"
            );
        }
    }

    #[test]
    fn f1_small_values() {
        let opts = F1Options::default();
        let expect = [0, 0, 0, 1, 2, 4, 8];
        for (s, &e) in expect.iter().enumerate().skip(1) {
            let r = f1_brute(s, &opts).unwrap();
            assert!(r.exact);
            assert_eq!(r.value, e, "s={s}");
            if s <= 5 {
                assert_eq!(r.value, f1_naive(s), "s={s}");
            }
            assert_eq!(count_pattern(&r.witness, F1_PATTERN), r.value);
        }
        assert!(f1_brute(7, &opts).is_err());
    }

    #[test]
    fn f1_budget_yields_lower_bound() {
        let opts = F1Options {
            allow_s7: true,
            limits: SearchLimits::with_node_cap(1000),
        };
        let r = f1_brute(7, &opts).unwrap();
        assert!(!r.exact);
        assert_eq!(count_pattern(&r.witness, F1_PATTERN), r.value);
    }
}
