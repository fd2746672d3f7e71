//! Undirected simple graphs over bitset adjacency rows.

use std::fmt::Write as _;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::vertices::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitGraph {
    n: usize,
    adj: Vec<Bitset>,
}

/// Size and lexicographically least witness of a maximum clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clique {
    pub size: usize,
    pub witness: VertexSet,
}

impl BitGraph {
    pub fn empty(n: usize) -> Self {
        BitGraph {
            n,
            adj: vec![Bitset::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = BitGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = BitGraph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = BitGraph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = BitGraph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Panics on a self-loop or out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bitset::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .above(u)
                .iter()
                .map(move |v| (u, v))
                .collect::<Vec<_>>()
        })
    }

    pub fn complement(&self) -> BitGraph {
        let mut g = BitGraph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Maximum clique by branch and bound, lowest-index vertex first.
    ///
    /// The witness is the lexicographically least maximum clique.
    pub fn max_clique(&self) -> Clique {
        let mut best = Vec::new();
        let mut cur = Vec::new();
        self.expand(&mut cur, Bitset::full(self.n), &mut best);
        Clique {
            size: best.len(),
            witness: VertexSet::new(best),
        }
    }

    pub fn max_independent_set(&self) -> Clique {
        self.complement().max_clique()
    }

    fn expand(&self, cur: &mut Vec<usize>, cand: Bitset, best: &mut Vec<usize>) {
        if cur.len() > best.len() {
            best.clone_from(cur);
        }
        let mut remaining = cand.len();
        for v in cand.iter() {
            if cur.len() + remaining <= best.len() {
                return;
            }
            remaining -= 1;
            let next = cand.above(v).intersection(&self.adj[v]);
            cur.push(v);
            self.expand(cur, next, best);
            cur.pop();
        }
    }

    /// Parse the `p <n>` / `e <u> <v>` text format (0-indexed).
    pub fn parse(text: &str) -> Result<Self> {
        let mut g: Option<BitGraph> = None;
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with('c') {
                continue;
            }
            let mut it = line.split_whitespace();
            match it.next() {
                Some("p") => {
                    let n = parse_num(it.next(), ln + 1)?;
                    if g.is_some() {
                        return Err(Error::parse(ln + 1, "duplicate `p` line"));
                    }
                    g = Some(BitGraph::empty(n));
                }
                Some("e") => {
                    let g = g
                        .as_mut()
                        .ok_or_else(|| Error::parse(ln + 1, "edge before `p` line"))?;
                    let u = parse_num(it.next(), ln + 1)?;
                    let v = parse_num(it.next(), ln + 1)?;
                    if u >= g.n || v >= g.n || u == v {
                        return Err(Error::parse(ln + 1, format!("invalid edge {u} {v}")));
                    }
                    g.add_edge(u, v);
                }
                Some(tok) => return Err(Error::parse(ln + 1, format!("unknown record `{tok}`"))),
                None => {}
            }
        }
        g.ok_or_else(|| Error::parse(0, "missing `p` line"))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p {}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {u} {v}");
        }
        out
    }
}

pub(crate) fn parse_num(tok: Option<&str>, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, "missing number"))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad number `{tok}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertices::for_each_subset;
    use proptest::prelude::*;

    fn brute_clique_number(g: &BitGraph) -> usize {
        let all: Vec<usize> = (0..g.n()).collect();
        let mut best = 0;
        for k in 1..=g.n() {
            let mut found = false;
            for_each_subset(&all, k, |s| {
                found = g.is_clique(s);
                !found
            });
            if found {
                best = k;
            }
        }
        best
    }

    #[test]
    fn small_examples() {
        assert_eq!(BitGraph::cycle(5).max_clique().size, 2);
        let k4 = BitGraph::complete(4).max_clique();
        assert_eq!(k4.size, 4);
        assert_eq!(k4.witness.as_slice(), &[0, 1, 2, 3]);
        let p = BitGraph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.edges().all(|(u, _)| p.degree(u) == 3));
        assert_eq!(p.max_clique().size, 2);
        assert_eq!(brute_clique_number(&p), 2);
        assert_eq!(p.max_independent_set().size, 4);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // two triangles {1,2,3} and {0,4,5}
        let g = BitGraph::from_edges(6, [(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(g.max_clique().witness.as_slice(), &[0, 4, 5]);
    }

    #[test]
    fn text_format_roundtrip_and_errors() {
        let g = BitGraph::cycle(5);
        assert_eq!(BitGraph::parse(&g.to_text()).unwrap(), g);
        assert!(BitGraph::parse("e 0 1\n").is_err());
        assert!(BitGraph::parse("p 3\ne 0 3\n").is_err());
        assert!(BitGraph::parse("p 3\ne 1 1\n").is_err());
        assert!(BitGraph::parse("p 3\nx\n").is_err());
        assert!(BitGraph::from_edges(3, [(0, 0)]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn clique_matches_brute_force_and_complement(n in 1usize..=16, bits in any::<u128>()) {
            let mut g = BitGraph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if (bits >> (k % 128)) & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            let c = g.max_clique();
            prop_assert!(g.is_clique(c.witness.as_slice()));
            prop_assert_eq!(c.size, brute_clique_number(&g));
            prop_assert_eq!(g.max_independent_set().size, brute_clique_number(&g.complement()));
        }
    }
}
