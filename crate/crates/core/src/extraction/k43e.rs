//! Extraction of a blue `n`-set or a red copy of `K4 - e` (four vertices,
//! three red triples).
//!
//! Every pair of extracted vertices is exposed, with threshold
//! `alpha = 1/(2n)`. Writing `i < j < k` for game vertices, two red game
//! edges `(j,i), (j,k)` with `j < i < k`, or `(i,j), (j,k)` with
//! `i < j < k`, give three red triples together with any survivor. While
//! neither pattern occurs, the red game graph is a disjoint union of stars.

use serde::Serialize;

use crate::coloring::ColorId;
use crate::error::{Error, Result};
use crate::extraction::ThresholdPainter;
use crate::game::{GameState, OutcomeKind, Painter, PainterReply};
use crate::oracle::TripleColoring;
use crate::scalar::Scalar;
use crate::vertices::VertexSet;

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum K43eOutcome {
    Blue {
        set: VertexSet,
    },
    /// Four vertices and their three red triples.
    RedK4MinusE {
        set: VertexSet,
        triples: Vec<[usize; 3]>,
    },
    Failure {
        stage: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct K43eResult {
    pub outcome: K43eOutcome,
    /// Game vertices placed.
    pub vertices: usize,
    /// Survivor pool size after each placed vertex's edges.
    pub survivors: Vec<usize>,
    /// Number of star-forest checks passed.
    pub star_checks: u64,
}

/// True iff every red edge has an endpoint of red degree one.
fn red_is_star_forest(st: &GameState) -> bool {
    (0..st.vertex_count()).all(|a| {
        let na = st.neighbors(a, ColorId::RED);
        na.iter()
            .filter(|&b| b > a)
            .all(|b| na.len() == 1 || st.neighbors(b, ColorId::RED).len() == 1)
    })
}

/// Runs the extraction on `[universe]` with threshold `1/(2n)`.
pub fn k43e_extract<S: Scalar>(
    oracle: &dyn TripleColoring,
    n: usize,
    universe: usize,
) -> Result<K43eResult> {
    if n < 3 {
        return Err(Error::domain("k43e extraction needs n >= 3"));
    }
    if universe > oracle.universe() || oracle.palette() != 2 {
        return Err(Error::domain(
            "oracle must be two-colored on the whole universe",
        ));
    }
    let alpha = S::from_ratio(1, 2 * n as u64);
    let mut painter = ThresholdPainter::new(oracle, universe, alpha);
    // red cliques are never the target here
    let mut st = GameState::new(usize::MAX, n - 1)?;
    let mut res = K43eResult {
        outcome: K43eOutcome::Failure {
            stage: String::new(),
        },
        vertices: 0,
        survivors: Vec::new(),
        star_checks: 0,
    };
    let fail = |stage: String| K43eOutcome::Failure { stage };
    loop {
        let v = st.expose();
        if painter.vertex_exposed(&st, v) == PainterReply::Abort {
            res.outcome = fail(format!("no survivor to place vertex {v}"));
            return Ok(res);
        }
        res.vertices += 1;
        for u in 0..v {
            let PainterReply::Color(c) = painter.paint(&st, u, v) else {
                unreachable!("threshold painter always answers")
            };
            let decided = st.draw(u, v, c)?;
            if c == ColorId::RED {
                if let Some(pattern) = forbidden_pattern(&st, u, v) {
                    let Some(&z) = painter.survivors().first() else {
                        res.outcome = fail("red pattern found but no survivor left".into());
                        return Ok(res);
                    };
                    let img = |x: usize| painter.image(x);
                    let [a, b, k] = pattern;
                    let mut triples = vec![
                        sorted([img(a), img(b), img(k)]),
                        sorted([img(a), img(b), z]),
                        sorted([img(b), img(k), z]),
                    ];
                    if pattern_shares_first(&st, pattern) {
                        triples[2] = sorted([img(a), img(k), z]);
                    }
                    triples.sort_unstable();
                    for t in &triples {
                        if oracle.color(t[0], t[1], t[2]) != ColorId::RED {
                            return Err(Error::domain(format!(
                                "triple {t:?} of the red witness is not red"
                            )));
                        }
                    }
                    res.outcome = K43eOutcome::RedK4MinusE {
                        set: VertexSet::new(vec![img(a), img(b), img(k), z]),
                        triples,
                    };
                    return Ok(res);
                }
            }
            assert!(
                red_is_star_forest(&st),
                "red game graph is not a star forest after edge {u}-{v}"
            );
            res.star_checks += 1;
            if let Some(o) = decided {
                debug_assert_eq!(o.kind, OutcomeKind::Blue);
                let Some(&z) = painter.survivors().first() else {
                    res.outcome = fail("blue clique found but no survivor left".into());
                    return Ok(res);
                };
                let mut set: Vec<usize> = o.witness.iter().map(|&w| painter.image(w)).collect();
                set.push(z);
                let set = VertexSet::new(set);
                if !oracle.is_monochromatic(set.as_slice(), ColorId::BLUE) {
                    return Err(Error::domain(format!(
                        "extracted set {:?} is not blue",
                        set.as_slice()
                    )));
                }
                res.survivors.push(painter.survivors().len());
                res.outcome = K43eOutcome::Blue { set };
                return Ok(res);
            }
        }
        res.survivors.push(painter.survivors().len());
    }
}

fn sorted(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

/// For the new red edge `{u, v}` (`v` newest), a pattern `[a, b, k]` of
/// game vertices, ascending, whose red edges are `(a,b), (a,k)` or
/// `(a,b), (b,k)`.
fn forbidden_pattern(st: &GameState, u: usize, v: usize) -> Option<[usize; 3]> {
    let red_u = st.neighbors(u, ColorId::RED);
    // u is the smallest end of two red edges
    if let Some(w) = red_u.iter().find(|&w| w > u && w != v) {
        return Some([u, w, v]);
    }
    // u is the middle of a red path
    red_u.iter().find(|&w| w < u).map(|w| [w, u, v])
}

/// True when the pattern's red edges are `(a,b), (a,k)`.
fn pattern_shares_first(st: &GameState, [a, _, k]: [usize; 3]) -> bool {
    st.color(a, k) == Some(ColorId::RED)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{ConstOracle, RandomOracle, TournamentOracle};
    use crate::tournament::HashTournament;

    #[test]
    fn constant_blue() {
        let o = ConstOracle {
            n: 100,
            color: ColorId::BLUE,
        };
        let r = k43e_extract::<f64>(&o, 4, 100).unwrap();
        match r.outcome {
            K43eOutcome::Blue { set } => assert_eq!(set.len(), 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn constant_red() {
        for n in 3..=6 {
            let o = ConstOracle {
                n: 4,
                color: ColorId::RED,
            };
            let r = k43e_extract::<f64>(&o, n, 4).unwrap();
            match r.outcome {
                K43eOutcome::RedK4MinusE { set, triples } => {
                    assert_eq!(set.as_slice(), &[0, 1, 2, 3]);
                    assert_eq!(triples.len(), 3);
                }
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn tournament_colorings_never_give_red_pattern() {
        for seed in 0..3 {
            let o = TournamentOracle::new(HashTournament::new(4096, seed));
            let r = k43e_extract::<f64>(&o, 4, 4096).unwrap();
            assert!(
                !matches!(r.outcome, K43eOutcome::RedK4MinusE { .. }),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn random_oracles_stay_consistent() {
        for seed in 0..20 {
            let o = RandomOracle {
                n: 3000,
                p: 0.1,
                seed,
            };
            let r = k43e_extract::<crate::Rational>(&o, 4, 3000).unwrap();
            if let K43eOutcome::RedK4MinusE { triples, .. } = &r.outcome {
                assert!(triples
                    .iter()
                    .all(|t| o.color(t[0], t[1], t[2]) == ColorId::RED));
            }
        }
    }
}
