//! Threshold extraction of monochromatic sets from a triple coloring.
//!
//! The string-labelling builder plays the game at target `(s-1, n-1)`
//! against a painter that owns a pool `S` of survivors in `[N]`. Each new
//! game vertex is mapped to the least survivor. An edge `{w, v}` is painted
//! red iff at least `alpha * |S|` survivors `z` make `{phi(w), phi(v), z}`
//! red, and `S` shrinks to the survivors agreeing with the chosen color.
//! A triple of mapped vertices then has the color of the game edge between
//! its two oldest members, so a game clique plus one more survivor is a
//! monochromatic set of the coloring.

mod bounds;
mod k43e;

use serde::Serialize;

use crate::coloring::ColorId;
use crate::error::{Error, Result};
use crate::game::{
    budget_for, run_game, Budget, EhBuilder, GameState, OutcomeKind, Painter, PainterReply,
};
use crate::oracle::TripleColoring;
use crate::scalar::{ceil_u64, Scalar};
use crate::vertices::VertexSet;

pub use bounds::{
    closed_form_exponent, diagonal_bound, erdos_rado_recursion_bound, optimal_alpha,
    threshold_bound, threshold_bound_log2, BaseTable, DiagonalReport, TowerBound,
};
pub use k43e::{k43e_extract, K43eOutcome, K43eResult};

/// Inputs of one extraction run.
pub struct ExtractionConfig<'a, S> {
    pub s: usize,
    pub n: usize,
    pub alpha: S,
    /// Ground set `[N]`; must not exceed the oracle's universe.
    pub universe: usize,
    pub oracle: &'a dyn TripleColoring,
}

impl<S: Scalar> ExtractionConfig<'_, S> {
    /// Game budget for target `(s-1, n-1)`.
    pub fn budget(&self) -> Result<Budget> {
        budget_for(self.s - 1, self.n - 1)
    }

    /// `(v+1) alpha^-r (1-alpha)^(r-m)` for the game budget.
    pub fn required_universe(&self) -> Result<S> {
        let b = self.budget()?;
        Ok(survivor_bound(&self.alpha, b.v + 1, b.r, b.m))
    }

    fn validate(&self) -> Result<()> {
        if self.s < 3 || self.n < 3 {
            return Err(Error::domain("extraction needs s, n >= 3"));
        }
        let half = S::from_ratio(1, 2);
        if !(self.alpha > S::zero() && self.alpha <= half) {
            return Err(Error::domain(format!(
                "alpha {:?} outside (0, 1/2]",
                self.alpha
            )));
        }
        if self.universe > self.oracle.universe() {
            return Err(Error::domain(format!(
                "universe {} exceeds oracle universe {}",
                self.universe,
                self.oracle.universe()
            )));
        }
        if self.oracle.palette() != 2 {
            return Err(Error::domain("extraction needs a two-color oracle"));
        }
        Ok(())
    }
}

/// `k * alpha^-r_rem * (1-alpha)^-(m_rem - r_rem)`.
///
/// With `r_rem` red and `m_rem` total edges still allowed, this is the
/// least survivor count the induction guarantees for `k` vertices to go.
fn survivor_bound<S: Scalar>(alpha: &S, k: u64, r_rem: u64, m_rem: u64) -> S {
    let one = S::one();
    let beta = one.clone() - alpha.clone();
    let mut x = S::from_u64(k) / alpha.powu(r_rem);
    if m_rem >= r_rem {
        x = x / beta.powu(m_rem - r_rem);
    } else {
        x = x * beta.powu(r_rem - m_rem);
    }
    x
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ExtractionOutcome {
    Red {
        set: VertexSet,
    },
    Blue {
        set: VertexSet,
    },
    /// The survivor pool emptied; `stage` says when.
    Failure {
        stage: String,
        survivors: VertexSet,
    },
}

/// One painted game edge.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeDecision {
    pub u: usize,
    pub v: usize,
    pub color: String,
    /// Survivors making the triple red, out of `pool`.
    pub red_count: usize,
    pub pool: usize,
}

/// One game vertex: its image and the pool sizes around it.
#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub vertex: usize,
    pub image: usize,
    pub survivors_before: usize,
    pub survivors_after: usize,
    pub edges: Vec<EdgeDecision>,
    /// Survivor bound asserted after this vertex (as `f64`).
    pub bound: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtractionResult {
    pub outcome: ExtractionOutcome,
    pub trace: Vec<TraceStep>,
    /// Drawn game graph as `(u, v, color)`.
    pub gamma: Vec<(usize, usize, String)>,
    pub budget: Budget,
    /// Recomputed `(v+1) alpha^-r (1-alpha)^(r-m)` for the configuration.
    pub required_universe: f64,
}

impl ExtractionResult {
    pub fn set(&self) -> Option<&VertexSet> {
        match &self.outcome {
            ExtractionOutcome::Red { set } | ExtractionOutcome::Blue { set } => Some(set),
            ExtractionOutcome::Failure { .. } => None,
        }
    }
}

/// Painter driven by a triple coloring and a shrinking survivor pool.
pub struct ThresholdPainter<'a, S> {
    oracle: &'a dyn TripleColoring,
    alpha: S,
    survivors: Vec<usize>,
    image: Vec<usize>,
    trace: Vec<TraceStep>,
    failed: Option<String>,
    /// Game budget for the survivor induction, if checked.
    induction: Option<Budget>,
}

impl<'a, S: Scalar> ThresholdPainter<'a, S> {
    pub fn new(oracle: &'a dyn TripleColoring, universe: usize, alpha: S) -> Self {
        ThresholdPainter {
            oracle,
            alpha,
            survivors: (0..universe).collect(),
            image: Vec::new(),
            trace: Vec::new(),
            failed: None,
            induction: None,
        }
    }

    /// Asserts the survivor induction for budget `b` after every vertex.
    pub fn with_induction(mut self, b: Budget) -> Self {
        self.induction = Some(b);
        self
    }

    pub fn survivors(&self) -> &[usize] {
        &self.survivors
    }

    pub fn image(&self, v: usize) -> usize {
        self.image[v]
    }

    /// Records and checks the pool once the newest vertex has all its edges;
    /// `used` counts that vertex and its edges.
    fn close_step(&mut self, used: Budget) {
        let Some(step) = self.trace.last_mut() else {
            return;
        };
        step.survivors_after = self.survivors.len();
        if let Some(b) = self.induction {
            let k = (b.v + 1).saturating_sub(used.v);
            let bound = survivor_bound(
                &self.alpha,
                k,
                b.r.saturating_sub(used.r),
                b.m.saturating_sub(used.m),
            );
            step.bound = bound.to_f64();
            let have = S::from_u64(self.survivors.len() as u64);
            let ok = if S::EXACT {
                have >= bound
            } else {
                // floats: relative slack for rounding in the powers
                have.to_f64() >= bound.to_f64() * (1.0 - 1e-9)
            };
            assert!(
                ok,
                "survivor induction violated after vertex {}: {} < {}",
                step.vertex,
                self.survivors.len(),
                step.bound
            );
        }
    }
}

impl<S: Scalar> Painter for ThresholdPainter<'_, S> {
    fn vertex_exposed(&mut self, st: &GameState, v: usize) -> PainterReply {
        let mut used = st.budget();
        used.v -= 1;
        self.close_step(used);
        if self.survivors.is_empty() {
            self.failed = Some(format!("no survivor to place vertex {v}"));
            return PainterReply::Abort;
        }
        let before = self.survivors.len();
        let x = self.survivors.remove(0);
        self.image.push(x);
        self.trace.push(TraceStep {
            vertex: v,
            image: x,
            survivors_before: before,
            survivors_after: before - 1,
            edges: Vec::new(),
            bound: 0.0,
        });
        PainterReply::Color(ColorId::RED)
    }

    fn paint(&mut self, _: &GameState, u: usize, v: usize) -> PainterReply {
        let (a, b) = (self.image[u], self.image[v]);
        let pool = self.survivors.len();
        let red: Vec<bool> = self
            .survivors
            .iter()
            .map(|&z| self.oracle.color_of(a, b, z) == ColorId::RED)
            .collect();
        let red_count = red.iter().filter(|&&r| r).count();
        let is_red = S::from_u64(red_count as u64) >= self.alpha.clone() * S::from_u64(pool as u64);
        let mut keep = red.iter();
        self.survivors.retain(|_| *keep.next().unwrap() == is_red);
        let c = if is_red { ColorId::RED } else { ColorId::BLUE };
        if let Some(step) = self.trace.last_mut() {
            step.edges.push(EdgeDecision {
                u,
                v,
                color: c.red_blue_name().to_string(),
                red_count,
                pool,
            });
        }
        PainterReply::Color(c)
    }
}

/// Runs the extraction and re-verifies the returned set triple by triple.
///
/// A universe below the required size is allowed (for falsification runs)
/// and may end in a `failure` outcome; the survivor induction is asserted
/// only when the universe is large enough for it to be guaranteed.
pub fn erdos_rado_extract<S: Scalar>(cfg: &ExtractionConfig<'_, S>) -> Result<ExtractionResult> {
    cfg.validate()?;
    let budget = cfg.budget()?;
    let required = cfg.required_universe()?;
    let mut painter = ThresholdPainter::new(cfg.oracle, cfg.universe, cfg.alpha.clone());
    if cfg.universe as u64 >= ceil_u64(&required) {
        painter = painter.with_induction(budget);
    }
    let target = (cfg.s - 1, cfg.n - 1);
    let transcript = run_game(
        &mut EhBuilder::new(target.0, target.1)?,
        &mut painter,
        target,
        Budget::UNLIMITED,
    )?;
    let gamma = transcript
        .moves
        .iter()
        .filter_map(|m| match *m {
            crate::game::Move::Edge { u, v, color } => {
                Some((u, v, color.red_blue_name().to_string()))
            }
            crate::game::Move::Vertex => None,
        })
        .collect();
    painter.close_step(transcript.budget);
    let outcome = match transcript.outcome.kind {
        OutcomeKind::Red | OutcomeKind::Blue => {
            if painter.induction.is_some() && !transcript.budget.within(&budget) {
                return Err(Error::domain("builder exceeded its budget"));
            }
            match painter.survivors.first() {
                None => ExtractionOutcome::Failure {
                    stage: "no survivor left to complete the clique".into(),
                    survivors: VertexSet::default(),
                },
                Some(&z) => {
                    let mut set: Vec<usize> = transcript
                        .outcome
                        .witness
                        .iter()
                        .map(|&w| painter.image(w))
                        .collect();
                    set.push(z);
                    let set = VertexSet::new(set);
                    let red = transcript.outcome.kind == OutcomeKind::Red;
                    let c = if red { ColorId::RED } else { ColorId::BLUE };
                    if !cfg.oracle.is_monochromatic(set.as_slice(), c) {
                        return Err(Error::domain(format!(
                            "extracted set {:?} is not monochromatic",
                            set.as_slice()
                        )));
                    }
                    if red {
                        ExtractionOutcome::Red { set }
                    } else {
                        ExtractionOutcome::Blue { set }
                    }
                }
            }
        }
        _ => ExtractionOutcome::Failure {
            stage: painter
                .failed
                .clone()
                .unwrap_or_else(|| "game ended undecided".into()),
            survivors: VertexSet::default(),
        },
    };
    Ok(ExtractionResult {
        outcome,
        trace: painter.trace,
        gamma,
        budget: transcript.budget,
        required_universe: required.to_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{ConstOracle, RandomOracle};
    use crate::Rational;

    fn cfg<'a, S: Scalar>(
        o: &'a dyn TripleColoring,
        alpha: S,
        universe: usize,
    ) -> ExtractionConfig<'a, S> {
        ExtractionConfig {
            s: 4,
            n: 4,
            alpha,
            universe,
            oracle: o,
        }
    }

    #[test]
    fn required_universe_at_half() {
        let o = ConstOracle {
            n: 57344,
            color: ColorId::RED,
        };
        let c = cfg(&o, 0.5f64, 57344);
        assert_eq!(c.required_universe().unwrap(), 57344.0);
        let c = cfg(&o, Rational::from_ratio(1, 2), 57344);
        assert_eq!(ceil_u64(&c.required_universe().unwrap()), 57344);
    }

    #[test]
    fn constant_oracles() {
        for color in [ColorId::RED, ColorId::BLUE] {
            let o = ConstOracle { n: 57344, color };
            let r = erdos_rado_extract(&cfg(&o, 0.5f64, 57344)).unwrap();
            let set = r.set().unwrap();
            assert_eq!(set.len(), 4);
            assert!(o.is_monochromatic(set.as_slice(), color));
        }
    }

    #[test]
    fn random_oracles_all_scalars() {
        for seed in 0..5 {
            let o = RandomOracle {
                n: 57344,
                p: 0.5,
                seed,
            };
            let a = erdos_rado_extract(&cfg(&o, 0.5f64, 57344)).unwrap();
            let b = erdos_rado_extract(&cfg(&o, 0.5f32, 57344)).unwrap();
            let c = erdos_rado_extract(&cfg(&o, Rational::from_ratio(1, 2), 57344)).unwrap();
            assert_eq!(a.set(), b.set());
            assert_eq!(a.set(), c.set());
            assert!(a.set().is_some());
            for step in &a.trace {
                for e in &step.edges {
                    if e.color == "red" {
                        assert!(2 * e.red_count >= e.pool);
                    } else {
                        assert!(2 * e.red_count < e.pool);
                    }
                }
            }
        }
    }

    #[test]
    fn tiny_universe_fails_cleanly() {
        let o = RandomOracle {
            n: 6,
            p: 0.5,
            seed: 3,
        };
        let r = erdos_rado_extract(&cfg(&o, 0.5f64, 6)).unwrap();
        if let Some(set) = r.set() {
            let s = set.as_slice();
            assert!(o.is_monochromatic(s, ColorId::RED) || o.is_monochromatic(s, ColorId::BLUE));
        }
        let r = erdos_rado_extract(&cfg(&o, 0.5f64, 2)).unwrap();
        assert!(matches!(r.outcome, ExtractionOutcome::Failure { .. }));
    }

    #[test]
    fn bad_configs() {
        let o = ConstOracle {
            n: 10,
            color: ColorId::RED,
        };
        assert!(erdos_rado_extract(&cfg(&o, 0.6f64, 10)).is_err());
        assert!(erdos_rado_extract(&cfg(&o, 0.0f64, 10)).is_err());
        assert!(erdos_rado_extract(&cfg(&o, 0.5f64, 11)).is_err());
    }
}
