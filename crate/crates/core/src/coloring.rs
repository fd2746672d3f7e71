//! Pair colorings of complete graphs.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{parse_num, BitGraph};

/// A color id. Two-color palettes use `RED`/`BLUE`; three-color palettes use
/// `C1`/`C2`/`C3` (equivalently `I`/`II`/`III`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorId(pub u8);

impl ColorId {
    pub const RED: ColorId = ColorId(0);
    pub const BLUE: ColorId = ColorId(1);
    pub const C1: ColorId = ColorId(0);
    pub const C2: ColorId = ColorId(1);
    pub const C3: ColorId = ColorId(2);
    pub const I: ColorId = ColorId(0);
    pub const II: ColorId = ColorId(1);
    pub const III: ColorId = ColorId(2);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Parses `red`/`r`/`blue`/`b`, `C1`..`C3`, or a bare index.
    pub fn parse(s: &str) -> Option<ColorId> {
        match s.trim().to_ascii_lowercase().as_str() {
            "red" | "r" => Some(ColorId::RED),
            "blue" | "b" => Some(ColorId::BLUE),
            "c1" => Some(ColorId::C1),
            "c2" => Some(ColorId::C2),
            "c3" => Some(ColorId::C3),
            other => other.parse().ok().map(ColorId),
        }
    }

    pub fn red_blue_name(self) -> &'static str {
        match self.0 {
            0 => "red",
            1 => "blue",
            _ => "other",
        }
    }
}

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Index of the unordered pair `{u, v}`, `u != v`, in colex order.
#[inline]
pub fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Total coloring of the pairs of `[n]` with `palette` colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    palette: u8,
    colors: Vec<ColorId>,
}

impl EdgeColoring {
    pub fn uniform(n: usize, palette: u8, color: ColorId) -> Self {
        assert!(color.0 < palette);
        EdgeColoring {
            n,
            palette,
            colors: vec![color; pair_count(n)],
        }
    }

    pub fn from_fn(n: usize, palette: u8, f: impl Fn(usize, usize) -> ColorId) -> Self {
        let mut c = EdgeColoring::uniform(n, palette, ColorId(0));
        for v in 1..n {
            for u in 0..v {
                let col = f(u, v);
                assert!(col.0 < palette, "color {col} outside palette {palette}");
                c.colors[pair_index(u, v)] = col;
            }
        }
        c
    }

    /// Red on the edges of `g`, blue elsewhere.
    pub fn from_red_graph(g: &BitGraph) -> Self {
        EdgeColoring::from_fn(g.n(), 2, |u, v| {
            if g.has_edge(u, v) {
                ColorId::RED
            } else {
                ColorId::BLUE
            }
        })
    }

    /// Pair colors listed in colex pair order.
    pub fn from_colors(n: usize, palette: u8, colors: Vec<ColorId>) -> Result<Self> {
        if colors.len() != pair_count(n) {
            return Err(Error::domain("color vector length mismatch"));
        }
        if colors.iter().any(|c| c.0 >= palette) {
            return Err(Error::domain("color outside palette"));
        }
        Ok(EdgeColoring { n, palette, colors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn palette(&self) -> u8 {
        self.palette
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> ColorId {
        self.colors[pair_index(u, v)]
    }

    pub fn set(&mut self, u: usize, v: usize, c: ColorId) {
        assert!(c.0 < self.palette);
        self.colors[pair_index(u, v)] = c;
    }

    /// The graph of pairs with color `c`.
    pub fn class_graph(&self, c: ColorId) -> BitGraph {
        let mut g = BitGraph::empty(self.n);
        for v in 1..self.n {
            for u in 0..v {
                if self.color(u, v) == c {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Parse either the `k <n> <palette>` / `u v c` format, or a graph file
    /// (`p`/`e`) whose edges are read as red and non-edges as blue.
    pub fn parse(text: &str) -> Result<Self> {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        if first.starts_with('p') {
            return Ok(EdgeColoring::from_red_graph(&BitGraph::parse(text)?));
        }
        let mut out: Option<(EdgeColoring, Vec<bool>)> = None;
        for (ln, line) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            if line.starts_with('k') {
                it.next();
                let n = parse_num(it.next(), ln)?;
                let palette = parse_num(it.next(), ln)?;
                if !(1..=255).contains(&palette) {
                    return Err(Error::parse(ln, "palette must be in 1..=255"));
                }
                out = Some((
                    EdgeColoring::uniform(n, palette as u8, ColorId(0)),
                    vec![false; pair_count(n)],
                ));
                continue;
            }
            let (c, seen) = out
                .as_mut()
                .ok_or_else(|| Error::parse(ln, "missing `k` header"))?;
            let u = parse_num(it.next(), ln)?;
            let v = parse_num(it.next(), ln)?;
            let col = parse_num(it.next(), ln)?;
            if u == v || u >= c.n || v >= c.n || col >= c.palette as usize {
                return Err(Error::parse(ln, "pair or color out of range"));
            }
            c.set(u, v, ColorId(col as u8));
            seen[pair_index(u, v)] = true;
        }
        let (c, seen) = out.ok_or_else(|| Error::parse(0, "missing `k` header"))?;
        if seen.iter().any(|s| !s) {
            return Err(Error::parse(0, "coloring is not total"));
        }
        Ok(c)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("k {} {}\n", self.n, self.palette);
        for u in 0..self.n {
            for v in u + 1..self.n {
                let _ = writeln!(out, "{u} {v} {}", self.color(u, v));
            }
        }
        out
    }
}
