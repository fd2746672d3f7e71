//! Builder strategies.

use std::collections::HashMap;

use crate::coloring::ColorId;
use crate::error::{Error, Result};
use crate::game::GameState;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuilderMove {
    Expose,
    /// Draw `{u, v}` with `v` the newest vertex and `u < v`.
    Draw(usize, usize),
    /// Builder has nothing left to do.
    Stop,
}

pub trait Builder {
    fn next_move(&mut self, state: &GameState) -> Result<BuilderMove>;
}

/// String-labelling strategy forcing a red `K_s` or a blue `K_n`.
///
/// Every vertex receives a word over `{R, B}`. A new vertex is joined to
/// `w_()` first; if that edge has color `a1` it is next joined to `w_(a1)`,
/// then to `w_(a1 a2)` and so on, until it reaches a word no vertex holds
/// yet, which becomes its own label. The vertex with label `a1..ap` is
/// joined in color `a_(i+1)` to the holder of `a1..ai`, so its red
/// ancestors together with itself form a red clique, and likewise for blue.
#[derive(Clone, Debug)]
pub struct EhBuilder {
    s: usize,
    n: usize,
    labels: Vec<Option<String>>,
    holder: HashMap<String, usize>,
    /// Word walked so far by the newest vertex, and the vertex it was last joined to.
    walk: String,
    last: Option<usize>,
}

impl EhBuilder {
    pub fn new(s: usize, n: usize) -> Result<Self> {
        if s < 2 || n < 2 {
            return Err(Error::domain(format!("target ({s},{n}) needs s, n >= 2")));
        }
        Ok(EhBuilder {
            s,
            n,
            labels: Vec::new(),
            holder: HashMap::new(),
            walk: String::new(),
            last: None,
        })
    }

    /// Label of vertex `v`, once its walk has finished.
    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v)?.as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Holder of the word `w`.
    pub fn vertex_with_label(&self, w: &str) -> Option<usize> {
        self.holder.get(w).copied()
    }
}

impl Builder for EhBuilder {
    fn next_move(&mut self, st: &GameState) -> Result<BuilderMove> {
        let Some(v) = st.newest() else {
            return Ok(BuilderMove::Expose);
        };
        if self.labels.len() == v {
            self.labels.push(None);
        }
        if let Some(w) = self.last.take() {
            let c = st
                .color(w, v)
                .ok_or_else(|| Error::IllegalMove(format!("edge {w}-{v} was not drawn")))?;
            self.walk.push(if c == ColorId::RED { 'R' } else { 'B' });
        }
        let reds = self.walk.bytes().filter(|&b| b == b'R').count();
        let blues = self.walk.len() - reds;
        // a full word would already have produced a monochromatic clique
        debug_assert!(reds < self.s && blues < self.n);
        match self.holder.get(&self.walk) {
            Some(&w) => {
                self.last = Some(w);
                Ok(BuilderMove::Draw(w, v))
            }
            None => {
                let word = std::mem::take(&mut self.walk);
                self.holder.insert(word.clone(), v);
                self.labels[v] = Some(word);
                Ok(BuilderMove::Expose)
            }
        }
    }
}

/// Joins every new vertex to all older vertices in increasing order.
#[derive(Clone, Debug, Default)]
pub struct CompleteBuilder {
    /// Stop after this many vertices.
    pub max_vertices: Option<usize>,
}

impl Builder for CompleteBuilder {
    fn next_move(&mut self, st: &GameState) -> Result<BuilderMove> {
        if let Some(v) = st.newest() {
            if let Some(u) = (0..v).find(|&u| st.color(u, v).is_none()) {
                return Ok(BuilderMove::Draw(u, v));
            }
        }
        if self
            .max_vertices
            .is_some_and(|cap| st.vertex_count() >= cap)
        {
            return Ok(BuilderMove::Stop);
        }
        Ok(BuilderMove::Expose)
    }
}
