//! 3-uniform hypergraphs: `H_G`, the cyclic family `C_n`, and blow-ups.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{parse_num, BitGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    /// Sorts each triple, then sorts and deduplicates the edge list.
    pub fn new(n: usize, edges: impl IntoIterator<Item = [usize; 3]>) -> Result<Self> {
        let mut out = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(Error::domain(format!("degenerate triple {e:?}")));
            }
            if e[2] >= n {
                return Err(Error::domain(format!(
                    "triple {e:?} out of range for n={n}"
                )));
            }
            out.push(e);
        }
        out.sort_unstable();
        out.dedup();
        Ok(Hypergraph3 { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    pub fn contains(&self, mut e: [usize; 3]) -> bool {
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        Hypergraph3::new(self.n, self.edges.iter().map(|e| e.map(|v| perm[v])))
    }

    /// Parse `h <n> <m>` followed by `m` lines `t a b c`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            match it.next() {
                Some("h") => {
                    header = Some((parse_num(it.next(), ln)?, parse_num(it.next(), ln)?));
                }
                Some("t") => {
                    if header.is_none() {
                        return Err(Error::parse(ln, "triple before `h` line"));
                    }
                    edges.push([
                        parse_num(it.next(), ln)?,
                        parse_num(it.next(), ln)?,
                        parse_num(it.next(), ln)?,
                    ]);
                }
                Some(tok) => return Err(Error::parse(ln, format!("unknown record `{tok}`"))),
                None => {}
            }
        }
        let (n, m) = header.ok_or_else(|| Error::parse(0, "missing `h` line"))?;
        if edges.len() != m {
            return Err(Error::parse(
                0,
                format!("header says {m} triples, found {}", edges.len()),
            ));
        }
        Hypergraph3::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("h {} {}\n", self.n, self.edges.len());
        for [a, b, c] in &self.edges {
            let _ = writeln!(out, "t {a} {b} {c}");
        }
        out
    }
}

/// `H_G`: every edge of `g` joined to a new apex, which is vertex `g.n()`.
pub fn build_hg(g: &BitGraph) -> Result<Hypergraph3> {
    if g.n() == 0 {
        return Err(Error::domain("H_G needs a nonempty graph"));
    }
    let apex = g.n();
    Hypergraph3::new(g.n() + 1, g.edges().map(|(u, v)| [u, v, apex]))
}

/// `C_n`: triples `{v_i, v_{i+1}, v_j}` with indices mod `n` (0-indexed).
pub fn build_cn(n: usize) -> Result<Hypergraph3> {
    if n < 4 {
        return Err(Error::domain("C_n needs n >= 4"));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        let next = (i + 1) % n;
        for j in 0..n {
            if j != i && j != next {
                edges.push([i, next, j]);
            }
        }
    }
    Hypergraph3::new(n, edges)
}

/// `K_l^(k)(n)`: `l` parts of size `n`, edges are `k`-sets meeting `k`
/// distinct parts. Kept as a predicate; vertex `v` lies in part `v / n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Blowup {
    pub k: usize,
    pub parts: usize,
    pub part_size: usize,
}

pub fn build_blowup(k: usize, parts: usize, part_size: usize) -> Result<Blowup> {
    if k == 0 || parts < k || part_size == 0 {
        return Err(Error::domain("blow-up needs 1 <= k <= l and n >= 1"));
    }
    Ok(Blowup {
        k,
        parts,
        part_size,
    })
}

impl Blowup {
    pub fn vertex_count(&self) -> usize {
        self.parts * self.part_size
    }

    pub fn part_of(&self, v: usize) -> usize {
        v / self.part_size
    }

    pub fn is_edge(&self, vs: &[usize]) -> bool {
        if vs.len() != self.k || vs.iter().any(|&v| v >= self.vertex_count()) {
            return false;
        }
        let mut parts: Vec<usize> = vs.iter().map(|&v| self.part_of(v)).collect();
        parts.sort_unstable();
        parts.windows(2).all(|w| w[0] != w[1])
    }

    /// `C(l, k) * n^k`.
    pub fn edge_count(&self) -> Result<u128> {
        let n_k = (self.part_size as u128)
            .checked_pow(self.k as u32)
            .ok_or(Error::Overflow("blow-up edge count"))?;
        binom_u128(self.parts as u128, self.k as u128)
            .and_then(|b| b.checked_mul(n_k))
            .ok_or(Error::Overflow("blow-up edge count"))
    }

    /// Whether `C(l,k) n^k >= (1 - C(k,2)/l) C(ln, k)` holds.
    ///
    /// Compared exactly as `l * C(l,k) n^k >= (l - C(k,2)) C(ln,k)`.
    pub fn density_bound_holds(&self) -> Result<bool> {
        let l = self.parts as i128;
        let k2 = (self.k * (self.k - 1) / 2) as i128;
        let lhs = l
            .checked_mul(self.edge_count()? as i128)
            .ok_or(Error::Overflow("density bound"))?;
        let total = binom_u128(self.vertex_count() as u128, self.k as u128)
            .ok_or(Error::Overflow("density bound"))?;
        let rhs = (l - k2)
            .checked_mul(total as i128)
            .ok_or(Error::Overflow("density bound"))?;
        Ok(lhs >= rhs)
    }

    /// The `k = 3` case as an explicit hypergraph.
    pub fn materialize3(&self) -> Result<Hypergraph3> {
        if self.k != 3 {
            return Err(Error::domain("only 3-uniform blow-ups are materialized"));
        }
        let n = self.vertex_count();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if self.is_edge(&[a, b, c]) {
                        edges.push([a, b, c]);
                    }
                }
            }
        }
        Hypergraph3::new(n, edges)
    }
}

pub(crate) fn binom_u128(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn hg_examples() {
        let k3 = build_hg(&BitGraph::complete(3)).unwrap();
        assert_eq!(k3.n(), 4);
        assert_eq!(k3.edges(), &[[0, 1, 3], [0, 2, 3], [1, 2, 3]]);
        let e = build_hg(&BitGraph::from_edges(2, [(0, 1)]).unwrap()).unwrap();
        assert_eq!(e.edges().len(), 1);
        let c5 = build_hg(&BitGraph::cycle(5)).unwrap();
        assert_eq!((c5.n(), c5.edges().len()), (6, 5));
        assert!(c5.edges().iter().all(|t| t.contains(&5)));
        assert!(build_hg(&BitGraph::empty(0)).is_err());
    }

    #[test]
    fn hg_of_triangle_is_k4_minus_an_edge() {
        let hg = build_hg(&BitGraph::complete(3)).unwrap();
        // K4 minus triple avoiding x, for each choice of x
        for x in 0..4 {
            let all: Vec<[usize; 3]> = (0..4)
                .flat_map(|a| (a + 1..4).flat_map(move |b| (b + 1..4).map(move |c| [a, b, c])))
                .filter(|t| t.contains(&x))
                .collect();
            let k4e = Hypergraph3::new(4, all).unwrap();
            // swap the apex with x
            let mut perm: Vec<usize> = (0..4).collect();
            perm.swap(3, x);
            assert_eq!(hg.relabel(&perm).unwrap(), k4e);
        }
    }

    fn cn_enumerated(n: usize) -> usize {
        let mut set = BTreeSet::new();
        for i in 1..=n {
            let i1 = if i == n { 1 } else { i + 1 };
            for j in 1..=n {
                let mut t = [i, i1, j];
                t.sort_unstable();
                if t[0] != t[1] && t[1] != t[2] {
                    set.insert(t);
                }
            }
        }
        set.len()
    }

    #[test]
    fn cn_properties() {
        for n in 4..=12 {
            let c = build_cn(n).unwrap();
            assert_eq!(c.edges().len(), cn_enumerated(n));
            for e in c.edges() {
                let consecutive = |a: usize, b: usize| (a + 1) % n == b || (b + 1) % n == a;
                assert!(
                    consecutive(e[0], e[1]) || consecutive(e[1], e[2]) || consecutive(e[0], e[2])
                );
                if n % 2 == 0 {
                    assert!(e.iter().any(|v| v % 2 == 0) && e.iter().any(|v| v % 2 == 1));
                }
            }
        }
        assert_eq!(build_cn(4).unwrap().edges().len(), 4);
        assert!(build_cn(3).is_err());
    }

    #[test]
    fn blowup_counts() {
        let b = build_blowup(3, 3, 2).unwrap();
        assert_eq!((b.vertex_count(), b.edge_count().unwrap()), (6, 8));
        assert_eq!(b.materialize3().unwrap().edges().len(), 8);
        let single = build_blowup(2, 2, 1).unwrap();
        assert_eq!(single.edge_count().unwrap(), 1);
        assert!(single.is_edge(&[0, 1]));
        assert!(build_blowup(3, 2, 1).is_err());
        for l in 3..=6 {
            for n in 1..=3 {
                let b = build_blowup(3, l, n).unwrap();
                assert_eq!(
                    b.materialize3().unwrap().edges().len() as u128,
                    b.edge_count().unwrap()
                );
            }
        }
    }

    #[test]
    fn file_format() {
        let c = build_cn(6).unwrap();
        assert_eq!(Hypergraph3::parse(&c.to_text()).unwrap(), c);
        assert!(Hypergraph3::parse("h 3 2\nt 0 1 2\n").is_err());
        assert!(Hypergraph3::parse("h 3 1\nt 0 1 3\n").is_err());
        assert!(Hypergraph3::new(3, [[0, 0, 1]]).is_err());
    }
}
