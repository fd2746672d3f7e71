//! Painter strategies.

use std::io::{BufRead, Write};

use crate::coloring::ColorId;
use crate::game::GameState;
use crate::hash;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PainterReply {
    Color(ColorId),
    Abort,
}

pub trait Painter {
    /// Color for the edge `{u, v}` just drawn (`v` is the newest vertex).
    fn paint(&mut self, state: &GameState, u: usize, v: usize) -> PainterReply;

    /// Notification that vertex `v` was exposed.
    fn vertex_exposed(&mut self, _state: &GameState, _v: usize) -> PainterReply {
        PainterReply::Color(ColorId::RED)
    }
}

impl<P: Painter + ?Sized> Painter for &mut P {
    fn paint(&mut self, state: &GameState, u: usize, v: usize) -> PainterReply {
        (**self).paint(state, u, v)
    }

    fn vertex_exposed(&mut self, state: &GameState, v: usize) -> PainterReply {
        (**self).vertex_exposed(state, v)
    }
}

impl<P: Painter + ?Sized> Painter for Box<P> {
    fn paint(&mut self, state: &GameState, u: usize, v: usize) -> PainterReply {
        (**self).paint(state, u, v)
    }

    fn vertex_exposed(&mut self, state: &GameState, v: usize) -> PainterReply {
        (**self).vertex_exposed(state, v)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AllRed;

impl Painter for AllRed {
    fn paint(&mut self, _: &GameState, _: usize, _: usize) -> PainterReply {
        PainterReply::Color(ColorId::RED)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AllBlue;

impl Painter for AllBlue {
    fn paint(&mut self, _: &GameState, _: usize, _: usize) -> PainterReply {
        PainterReply::Color(ColorId::BLUE)
    }
}

/// Red with probability `p`, a pure function of `(seed, u, v)`.
#[derive(Clone, Copy, Debug)]
pub struct SeededRandom {
    p: f64,
    key: u64,
}

impl SeededRandom {
    pub fn new(p: f64, seed: u64) -> Self {
        SeededRandom {
            p,
            key: hash::substream(seed, "painter"),
        }
    }
}

impl Painter for SeededRandom {
    fn paint(&mut self, _: &GameState, u: usize, v: usize) -> PainterReply {
        let x = hash::unit_f64(hash::mix(self.key, &[u as u64, v as u64]));
        PainterReply::Color(if x < self.p {
            ColorId::RED
        } else {
            ColorId::BLUE
        })
    }
}

/// Avoids completing a monochromatic target clique whenever a safe color
/// exists. Among safe colors it picks the one whose largest clique through
/// the edge is furthest from its target; ties go to blue when `s <= n`.
#[derive(Clone, Copy, Debug, Default)]
pub struct GreedyAdversarial;

impl Painter for GreedyAdversarial {
    fn paint(&mut self, st: &GameState, u: usize, v: usize) -> PainterReply {
        let (s, n) = st.target();
        let gap = |c: ColorId, target: usize| target as i64 - st.max_clique_through(u, v, c) as i64;
        let (gr, gb) = (gap(ColorId::RED, s), gap(ColorId::BLUE, n));
        let c = match (gr > 0, gb > 0) {
            (true, false) => ColorId::RED,
            (false, true) => ColorId::BLUE,
            _ if gr > gb || (gr == gb && s > n) => ColorId::RED,
            _ => ColorId::BLUE,
        };
        PainterReply::Color(c)
    }
}

/// Human painter on a text terminal: shows the drawn graph and the pending
/// edge, accepts `r` or `b`, re-prompts on anything else and aborts at end
/// of input.
pub struct InteractivePainter<R, W> {
    input: R,
    output: W,
}

impl<R: BufRead, W: Write> InteractivePainter<R, W> {
    pub fn new(input: R, output: W) -> Self {
        InteractivePainter { input, output }
    }

    pub fn into_inner(self) -> (R, W) {
        (self.input, self.output)
    }

    fn show(&mut self, st: &GameState, u: usize, v: usize) -> std::io::Result<()> {
        let (s, n) = st.target();
        writeln!(
            self.output,
            "target: red K{s} or blue K{n}; vertices {}",
            st.vertex_count()
        )?;
        for x in 0..st.vertex_count() {
            let red: Vec<String> = st
                .neighbors(x, ColorId::RED)
                .iter()
                .map(|y| y.to_string())
                .collect();
            let blue: Vec<String> = st
                .neighbors(x, ColorId::BLUE)
                .iter()
                .map(|y| y.to_string())
                .collect();
            writeln!(
                self.output,
                "  {x}: red [{}] blue [{}]",
                red.join(" "),
                blue.join(" ")
            )?;
        }
        write!(self.output, "edge {u}-{v} [r/b]? ")?;
        self.output.flush()
    }
}

impl<R: BufRead, W: Write> Painter for InteractivePainter<R, W> {
    fn paint(&mut self, st: &GameState, u: usize, v: usize) -> PainterReply {
        if self.show(st, u, v).is_err() {
            return PainterReply::Abort;
        }
        let mut line = String::new();
        loop {
            line.clear();
            match self.input.read_line(&mut line) {
                Ok(0) | Err(_) => return PainterReply::Abort,
                Ok(_) => {}
            }
            match line.trim().to_ascii_lowercase().as_str() {
                "r" | "red" => return PainterReply::Color(ColorId::RED),
                "b" | "blue" => return PainterReply::Color(ColorId::BLUE),
                _ => {
                    if write!(self.output, "please answer r or b: ")
                        .and_then(|_| self.output.flush())
                        .is_err()
                    {
                        return PainterReply::Abort;
                    }
                }
            }
        }
    }
}

/// Every non-interactive painter that needs no oracle, for one seed:
/// all-red, all-blue, greedy-adversarial, seeded-random at `p = 1/2` and
/// at a seed-derived `p`.
pub fn library_painters(seed: u64) -> Vec<(String, Box<dyn Painter>)> {
    let p = hash::unit_f64(hash::mix(hash::substream(seed, "painter"), &[u64::MAX]));
    vec![
        ("all-red".into(), Box::new(AllRed)),
        ("all-blue".into(), Box::new(AllBlue)),
        ("greedy-adversarial".into(), Box::new(GreedyAdversarial)),
        (
            "seeded-random(0.5)".into(),
            Box::new(SeededRandom::new(0.5, seed)),
        ),
        (
            format!("seeded-random({p:.3})"),
            Box::new(SeededRandom::new(p, seed)),
        ),
    ]
}
