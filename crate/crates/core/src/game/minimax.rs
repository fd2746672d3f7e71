//! Exact value of the vertex on-line game for tiny targets.
//!
//! The value is the least number of edges builder needs to force a red
//! `K_s` or blue `K_n` against every painter, with at most `vertex_cap`
//! vertices. Positions are memoized exactly; relabelling vertices is not
//! a symmetry (only edges from the newest vertex may be drawn), so the
//! only reduction used is swapping red and blue when `s = n`.

use std::collections::HashMap;

use serde::Serialize;

use crate::coloring::{pair_index, ColorId};
use crate::error::{Error, Result};
use crate::game::Move;
use crate::search::SearchLimits;

/// Largest vertex cap: all pairs must fit in one `u64` mask.
pub const MAX_VERTEX_CAP: usize = 11;

#[derive(Clone, Debug, Serialize)]
pub struct MinimaxResult {
    /// `None` when builder cannot win within the vertex cap.
    pub value: Option<u64>,
    /// Builder's optimal line against the most stubborn painter replies.
    pub line: Vec<Move>,
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Pos {
    nv: u8,
    red: u64,
    blue: u64,
}

struct Solver<'a> {
    s: usize,
    n: usize,
    cap: usize,
    /// Per position: largest budget known to lose, least known to win.
    memo: HashMap<Pos, (i64, u64)>,
    nodes: u64,
    limits: &'a SearchLimits,
}

impl Solver<'_> {
    fn key(&self, p: Pos) -> Pos {
        if self.s == self.n && p.blue < p.red {
            Pos {
                nv: p.nv,
                red: p.blue,
                blue: p.red,
            }
        } else {
            p
        }
    }

    fn has(mask: u64, u: usize, v: usize) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        mask >> pair_index(a, b) & 1 == 1
    }

    /// Does coloring `{u, v}` with mask `mask` (already including it) create a
    /// monochromatic clique of `size` vertices through it?
    fn wins(&self, mask: u64, nv: usize, u: usize, v: usize, size: usize) -> bool {
        let cand: Vec<usize> = (0..nv)
            .filter(|&w| w != u && w != v && Self::has(mask, u, w) && Self::has(mask, v, w))
            .collect();
        fn grow(mask: u64, cand: &[usize], need: usize) -> bool {
            if need == 0 {
                return true;
            }
            for (i, &w) in cand.iter().enumerate() {
                let next: Vec<usize> = cand[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&x| Solver::has(mask, w, x))
                    .collect();
                if next.len() + 1 >= need && grow(mask, &next, need - 1) {
                    return true;
                }
            }
            false
        }
        grow(mask, &cand, size.saturating_sub(2))
    }

    fn moves(&self, p: Pos) -> Vec<Option<usize>> {
        let mut out = Vec::new();
        if p.nv >= 2 {
            let v = p.nv as usize - 1;
            for u in 0..v {
                if !Self::has(p.red | p.blue, u, v) {
                    out.push(Some(u));
                }
            }
        }
        if (p.nv as usize) < self.cap {
            out.push(None);
        }
        out
    }

    /// Child after painting `{u, newest}` with `c`, and whether it ends the game.
    fn paint(&self, p: Pos, u: usize, c: ColorId) -> (Pos, bool) {
        let v = p.nv as usize - 1;
        let bit = 1u64 << pair_index(u, v);
        let mut q = p;
        let (mask, size) = if c == ColorId::RED {
            q.red |= bit;
            (q.red, self.s)
        } else {
            q.blue |= bit;
            (q.blue, self.n)
        };
        (q, self.wins(mask, p.nv as usize, u, v, size))
    }

    /// Can builder force a win from `p` using at most `k` more edges?
    fn force(&mut self, p: Pos, k: u64) -> Result<bool> {
        self.nodes += 1;
        self.limits.check(self.nodes)?;
        let key = self.key(p);
        let (lose, win) = self.memo.get(&key).copied().unwrap_or((-1, u64::MAX));
        if (k as i64) <= lose {
            return Ok(false);
        }
        if k >= win {
            return Ok(true);
        }
        let mut ok = false;
        if k > 0 || p.nv as usize != self.cap {
            for mv in self.moves(p) {
                ok = match mv {
                    None => self.force(Pos { nv: p.nv + 1, ..p }, k)?,
                    Some(u) if k > 0 => {
                        let mut both = true;
                        for c in [ColorId::RED, ColorId::BLUE] {
                            let (q, done) = self.paint(p, u, c);
                            if !done && !self.force(q, k - 1)? {
                                both = false;
                                break;
                            }
                        }
                        both
                    }
                    Some(_) => false,
                };
                if ok {
                    break;
                }
            }
        }
        let e = self.memo.entry(key).or_insert((-1, u64::MAX));
        if ok {
            e.1 = e.1.min(k);
        } else {
            e.0 = e.0.max(k as i64);
        }
        Ok(ok)
    }

    /// Least `k <= k_max` with `force(p, k)`.
    fn need(&mut self, p: Pos, k_max: u64) -> Result<Option<u64>> {
        for k in 0..=k_max {
            if self.force(p, k)? {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    fn line(&mut self, mut p: Pos, mut k: u64) -> Result<Vec<Move>> {
        let mut out = Vec::new();
        loop {
            let mut chosen = None;
            for mv in self.moves(p) {
                let works = match mv {
                    None => self.force(Pos { nv: p.nv + 1, ..p }, k)?,
                    Some(u) if k > 0 => {
                        let mut both = true;
                        for c in [ColorId::RED, ColorId::BLUE] {
                            let (q, done) = self.paint(p, u, c);
                            both &= done || self.force(q, k - 1)?;
                        }
                        both
                    }
                    Some(_) => false,
                };
                if works {
                    chosen = Some(mv);
                    break;
                }
            }
            match chosen.expect("a winning move exists") {
                None => {
                    out.push(Move::Vertex);
                    p.nv += 1;
                }
                Some(u) => {
                    let v = p.nv as usize - 1;
                    // painter reply that keeps the game going longest
                    let mut best: Option<(u64, ColorId, Pos, bool)> = None;
                    for c in [ColorId::RED, ColorId::BLUE] {
                        let (q, done) = self.paint(p, u, c);
                        let rest = if done {
                            0
                        } else {
                            self.need(q, k - 1)?.expect("forced") + 1
                        };
                        if best.is_none_or(|b| rest > b.0) {
                            best = Some((rest, c, q, done));
                        }
                    }
                    let (rest, color, q, done) = best.expect("two replies");
                    out.push(Move::Edge { u, v, color });
                    if done {
                        return Ok(out);
                    }
                    p = q;
                    k = rest - 1;
                }
            }
        }
    }
}

/// Exact `r~(s, n)` restricted to games with at most `vertex_cap` vertices.
pub fn minimax_online(
    s: usize,
    n: usize,
    vertex_cap: usize,
    limits: &SearchLimits,
) -> Result<MinimaxResult> {
    if s < 2 || n < 2 {
        return Err(Error::domain(format!("target ({s},{n}) needs s, n >= 2")));
    }
    if vertex_cap > MAX_VERTEX_CAP {
        return Err(Error::domain(format!(
            "vertex cap {vertex_cap} exceeds {MAX_VERTEX_CAP}"
        )));
    }
    let mut solver = Solver {
        s,
        n,
        cap: vertex_cap,
        memo: HashMap::new(),
        nodes: 0,
        limits,
    };
    let start = Pos {
        nv: 0,
        red: 0,
        blue: 0,
    };
    let k_max = (vertex_cap * vertex_cap.saturating_sub(1) / 2) as u64;
    let value = solver.need(start, k_max)?;
    let line = match value {
        Some(k) => solver.line(start, k)?,
        None => Vec::new(),
    };
    Ok(MinimaxResult {
        value,
        line,
        nodes: solver.nodes,
    })
}
