//! The vertex on-line Ramsey game.
//!
//! Builder exposes vertices one at a time and draws edges from the newest
//! vertex back to older ones; painter colors each edge red or blue as soon
//! as it is drawn. The game is decided by the first red `K_s` or blue `K_n`.

mod builder;
mod minimax;
mod painter;

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::coloring::ColorId;
use crate::error::{Error, Result};

pub use builder::{Builder, BuilderMove, CompleteBuilder, EhBuilder};
pub use minimax::{minimax_online, MinimaxResult, MAX_VERTEX_CAP};
pub use painter::{
    library_painters, AllBlue, AllRed, GreedyAdversarial, InteractivePainter, Painter,
    PainterReply, SeededRandom,
};

/// Vertices, red edges and total edges used (or allowed).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub v: u64,
    pub r: u64,
    pub m: u64,
}

impl Budget {
    /// Componentwise `self <= other`.
    pub fn within(&self, other: &Budget) -> bool {
        self.v <= other.v && self.r <= other.r && self.m <= other.m
    }

    pub const UNLIMITED: Budget = Budget {
        v: u64::MAX,
        r: u64::MAX,
        m: u64::MAX,
    };
}

/// Resources the string-labelling builder needs for target `(s, n)`:
/// `C = C(s+n-2, s-1)` vertices, `(s-2)C + 1` red edges, `(s+n-4)C + 1` edges.
pub fn budget_for(s: usize, n: usize) -> Result<Budget> {
    if s < 2 || n < 2 {
        return Err(Error::domain(format!("target ({s},{n}) needs s, n >= 2")));
    }
    let c = binom_u64((s + n - 2) as u64, (s - 1) as u64)
        .ok_or(Error::Overflow("budget vertex count"))?;
    let mul = |k: usize| {
        (k as u64)
            .checked_mul(c)
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::Overflow("budget edge count"))
    };
    Ok(Budget {
        v: c,
        r: mul(s - 2)?,
        m: mul(s + n - 4)?,
    })
}

pub(crate) fn binom_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Move {
    Vertex,
    /// `u < v`, and `v` was the newest vertex when the edge was drawn.
    Edge {
        u: usize,
        v: usize,
        #[serde(with = "rb")]
        color: ColorId,
    },
}

mod rb {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::coloring::ColorId;

    pub fn serialize<S: Serializer>(c: &ColorId, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(if *c == ColorId::RED { "r" } else { "b" })
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ColorId, D::Error> {
        match String::deserialize(d)?.as_str() {
            "r" => Ok(ColorId::RED),
            "b" => Ok(ColorId::BLUE),
            other => Err(serde::de::Error::custom(format!("bad color {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutcomeKind {
    Red,
    Blue,
    /// A budget limit stopped the game, or builder had no move left.
    Exhausted,
    /// Painter gave up (interactive end of input, or an extraction painter
    /// whose survivor pool emptied).
    Aborted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub kind: OutcomeKind,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameTranscript {
    pub target: [usize; 2],
    pub moves: Vec<Move>,
    pub outcome: Outcome,
    pub budget: Budget,
}

impl GameTranscript {
    /// Re-plays the moves from scratch, recomputing outcome and budget.
    ///
    /// Red and blue outcomes must be reproduced by the last move exactly;
    /// exhausted and aborted transcripts must contain no decided position.
    pub fn replay(&self) -> Result<GameTranscript> {
        let mut st = GameState::new(self.target[0], self.target[1])?;
        let mut outcome = None;
        for (i, mv) in self.moves.iter().enumerate() {
            if outcome.is_some() {
                return Err(Error::IllegalMove(format!(
                    "move {i} after the game was decided"
                )));
            }
            match *mv {
                Move::Vertex => {
                    st.expose();
                }
                Move::Edge { u, v, color } => outcome = st.draw(u, v, color)?,
            }
        }
        let outcome = match outcome {
            Some(o) => o,
            None if matches!(
                self.outcome.kind,
                OutcomeKind::Exhausted | OutcomeKind::Aborted
            ) =>
            {
                Outcome {
                    kind: self.outcome.kind,
                    witness: Vec::new(),
                }
            }
            None => return Err(Error::IllegalMove("recorded win is not reached".into())),
        };
        Ok(st.into_transcript(outcome))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("transcript serializes")
    }
}

/// Drawn graph, move log and resources used so far.
#[derive(Clone, Debug)]
pub struct GameState {
    s: usize,
    n: usize,
    red: Vec<Bitset>,
    blue: Vec<Bitset>,
    budget: Budget,
    moves: Vec<Move>,
}

impl GameState {
    pub fn new(s: usize, n: usize) -> Result<Self> {
        if s < 2 || n < 2 {
            return Err(Error::domain(format!("target ({s},{n}) needs s, n >= 2")));
        }
        Ok(GameState {
            s,
            n,
            red: Vec::new(),
            blue: Vec::new(),
            budget: Budget::default(),
            moves: Vec::new(),
        })
    }

    pub fn target(&self) -> (usize, usize) {
        (self.s, self.n)
    }

    pub fn vertex_count(&self) -> usize {
        self.red.len()
    }

    pub fn newest(&self) -> Option<usize> {
        self.vertex_count().checked_sub(1)
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// Color of the drawn edge `{u, v}`, if drawn.
    pub fn color(&self, u: usize, v: usize) -> Option<ColorId> {
        if self.red[u].contains(v) {
            Some(ColorId::RED)
        } else if self.blue[u].contains(v) {
            Some(ColorId::BLUE)
        } else {
            None
        }
    }

    pub fn neighbors(&self, v: usize, c: ColorId) -> &Bitset {
        if c == ColorId::RED {
            &self.red[v]
        } else {
            &self.blue[v]
        }
    }

    pub fn expose(&mut self) -> usize {
        self.red.push(Bitset::new(64));
        self.blue.push(Bitset::new(64));
        self.budget.v += 1;
        self.moves.push(Move::Vertex);
        self.vertex_count() - 1
    }

    /// Checks that `{u, v}` may be drawn now: `v` newest, `u` older, undrawn.
    pub fn check_draw(&self, u: usize, v: usize) -> Result<()> {
        if Some(v) != self.newest() || u >= v {
            return Err(Error::IllegalMove(format!(
                "edge {u}-{v} must join the newest vertex to an older one"
            )));
        }
        if self.color(u, v).is_some() {
            return Err(Error::IllegalMove(format!("edge {u}-{v} already drawn")));
        }
        Ok(())
    }

    /// Draws and colors `{u, v}`; returns the outcome if this decides the game.
    pub fn draw(&mut self, u: usize, v: usize, c: ColorId) -> Result<Option<Outcome>> {
        self.check_draw(u, v)?;
        if c != ColorId::RED && c != ColorId::BLUE {
            return Err(Error::IllegalMove(format!("color {c} is not red or blue")));
        }
        let adj = if c == ColorId::RED {
            &mut self.red
        } else {
            &mut self.blue
        };
        adj[u].insert(v);
        adj[v].insert(u);
        self.budget.m += 1;
        if c == ColorId::RED {
            self.budget.r += 1;
        }
        self.moves.push(Move::Edge { u, v, color: c });
        let (size, kind) = if c == ColorId::RED {
            (self.s, OutcomeKind::Red)
        } else {
            (self.n, OutcomeKind::Blue)
        };
        Ok(self
            .clique_through(u, v, c, size)
            .map(|witness| Outcome { kind, witness }))
    }

    /// Lexicographically least `size`-clique of color `c` containing the
    /// edge `{u, v}` (which must have color `c`).
    pub fn clique_through(
        &self,
        u: usize,
        v: usize,
        c: ColorId,
        size: usize,
    ) -> Option<Vec<usize>> {
        let cand = self.neighbors(u, c).intersection(self.neighbors(v, c));
        let mut cur = Vec::with_capacity(size.min(64));
        if size <= 2 || self.extend(&cand, size - 2, c, &mut cur) {
            cur.extend([u, v]);
            cur.sort_unstable();
            Some(cur)
        } else {
            None
        }
    }

    /// Size of the largest `c`-clique through `{u, v}` if it were colored `c`.
    pub fn max_clique_through(&self, u: usize, v: usize, c: ColorId) -> usize {
        let cand = self.neighbors(u, c).intersection(self.neighbors(v, c));
        2 + self.max_in(&cand, c)
    }

    fn extend(&self, cand: &Bitset, need: usize, c: ColorId, cur: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        if cand.len() < need {
            return false;
        }
        for w in cand.iter() {
            let next = cand.intersection(self.neighbors(w, c)).above(w);
            cur.push(w);
            if self.extend(&next, need - 1, c, cur) {
                return true;
            }
            cur.pop();
        }
        false
    }

    fn max_in(&self, cand: &Bitset, c: ColorId) -> usize {
        cand.iter()
            .map(|w| 1 + self.max_in(&cand.intersection(self.neighbors(w, c)).above(w), c))
            .max()
            .unwrap_or(0)
    }

    pub fn into_transcript(self, outcome: Outcome) -> GameTranscript {
        GameTranscript {
            target: [self.s, self.n],
            moves: self.moves,
            outcome,
            budget: self.budget,
        }
    }
}

/// Plays builder against painter until the game is decided.
///
/// `limits.v` and `limits.m` are checked before exposing or drawing, so
/// the final budget never exceeds them; a red count above `limits.r`
/// ends the game after the offending edge. Either way the outcome is
/// `exhausted`.
pub fn run_game(
    builder: &mut dyn Builder,
    painter: &mut dyn Painter,
    target: (usize, usize),
    limits: Budget,
) -> Result<GameTranscript> {
    let mut st = GameState::new(target.0, target.1)?;
    let exhausted = Outcome {
        kind: OutcomeKind::Exhausted,
        witness: Vec::new(),
    };
    loop {
        match builder.next_move(&st)? {
            BuilderMove::Expose => {
                if st.budget.v >= limits.v {
                    return Ok(st.into_transcript(exhausted));
                }
                let v = st.expose();
                if painter.vertex_exposed(&st, v) == PainterReply::Abort {
                    return Ok(st.into_transcript(aborted()));
                }
            }
            BuilderMove::Draw(u, v) => {
                st.check_draw(u, v)?;
                if st.budget.m >= limits.m {
                    return Ok(st.into_transcript(exhausted));
                }
                let c = match painter.paint(&st, u, v) {
                    PainterReply::Color(c) => c,
                    PainterReply::Abort => return Ok(st.into_transcript(aborted())),
                };
                if let Some(o) = st.draw(u, v, c)? {
                    return Ok(st.into_transcript(o));
                }
                if st.budget.r > limits.r {
                    return Ok(st.into_transcript(exhausted));
                }
            }
            BuilderMove::Stop => return Ok(st.into_transcript(exhausted)),
        }
    }
}

fn aborted() -> Outcome {
    Outcome {
        kind: OutcomeKind::Aborted,
        witness: Vec::new(),
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepReport {
    pub target: [usize; 2],
    pub games: u64,
    /// Componentwise maximum budget over all games.
    pub max_budget: Budget,
    /// Seeds whose game missed the target or exceeded `budget_for`.
    pub failures: Vec<u64>,
}

/// Runs the string-labelling builder against `make(seed)` for each seed.
pub fn sweep_seeds<P, F>(
    s: usize,
    n: usize,
    seeds: std::ops::Range<u64>,
    mut make: F,
) -> Result<SweepReport>
where
    P: Painter,
    F: FnMut(u64) -> P,
{
    let bound = budget_for(s, n)?;
    let mut rep = SweepReport {
        target: [s, n],
        ..SweepReport::default()
    };
    for seed in seeds {
        let mut painter = make(seed);
        let t = run_game(
            &mut EhBuilder::new(s, n)?,
            &mut painter,
            (s, n),
            Budget::UNLIMITED,
        )?;
        rep.games += 1;
        let b = t.budget;
        rep.max_budget = Budget {
            v: rep.max_budget.v.max(b.v),
            r: rep.max_budget.r.max(b.r),
            m: rep.max_budget.m.max(b.m),
        };
        let won = matches!(t.outcome.kind, OutcomeKind::Red | OutcomeKind::Blue);
        if !won || !b.within(&bound) {
            rep.failures.push(seed);
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budgets() {
        let b = |s, n| budget_for(s, n).unwrap();
        assert_eq!(b(3, 3), Budget { v: 6, r: 7, m: 13 });
        assert_eq!(
            b(4, 4),
            Budget {
                v: 20,
                r: 41,
                m: 81
            }
        );
        assert_eq!(b(2, 2), Budget { v: 2, r: 1, m: 1 });
        assert!(budget_for(1, 3).is_err());
        assert!(matches!(budget_for(40, 40), Err(Error::Overflow(_))));
    }

    #[test]
    fn draw_rules() {
        let mut st = GameState::new(3, 3).unwrap();
        st.expose();
        st.expose();
        assert!(st.draw(1, 0, ColorId::RED).is_err());
        assert!(st.draw(0, 1, ColorId::RED).unwrap().is_none());
        assert!(st.draw(0, 1, ColorId::BLUE).is_err());
        st.expose();
        assert!(st.draw(0, 1, ColorId::BLUE).is_err());
        assert!(st.draw(0, 2, ColorId::RED).unwrap().is_none());
        let o = st.draw(1, 2, ColorId::RED).unwrap().unwrap();
        assert_eq!(o.kind, OutcomeKind::Red);
        assert_eq!(o.witness, vec![0, 1, 2]);
    }

    #[test]
    fn transcript_json_shape() {
        let mut st = GameState::new(2, 2).unwrap();
        st.expose();
        st.expose();
        let o = st.draw(0, 1, ColorId::BLUE).unwrap().unwrap();
        let t = st.into_transcript(o);
        assert_eq!(
            t.to_json(),
            r#"{"target":[2,2],"moves":[{"op":"vertex"},{"op":"vertex"},{"op":"edge","u":0,"v":1,"color":"b"}],"outcome":{"kind":"blue","witness":[0,1]},"budget":{"v":2,"r":0,"m":1}}"#
        );
        let back: GameTranscript = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.replay().unwrap().to_json(), t.to_json());
    }

    #[test]
    fn replay_rejects_tampering() {
        let t = run_game(
            &mut EhBuilder::new(3, 3).unwrap(),
            &mut AllRed,
            (3, 3),
            Budget::UNLIMITED,
        )
        .unwrap();
        let mut bad = t.clone();
        bad.moves.pop();
        assert!(bad.replay().is_err());
        let mut bad = t.clone();
        if let Some(Move::Edge { color, .. }) = bad
            .moves
            .iter_mut()
            .rev()
            .find(|m| matches!(m, Move::Edge { .. }))
        {
            *color = ColorId::BLUE;
        }
        assert!(bad.replay().is_err());
    }

    #[test]
    fn limits_give_exhausted() {
        let lim = Budget {
            v: 100,
            r: 100,
            m: 2,
        };
        let t = run_game(&mut EhBuilder::new(3, 3).unwrap(), &mut AllRed, (3, 3), lim).unwrap();
        assert_eq!(t.outcome.kind, OutcomeKind::Exhausted);
        assert_eq!(t.budget.m, 2);
        assert_eq!(t.replay().unwrap(), t);
    }
}
