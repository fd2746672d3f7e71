//! Maximum edge count `g(s)` of the recursively built hypergraph family.
//!
//! `g(1) = g(2) = 0` and `g(s) = max_{a+b+c=s} g(a) + g(b) + g(c) + abc`
//! over positive parts.

use serde::Serialize;

/// Memoized values of `g` up to some `s_max`.
#[derive(Clone, Debug)]
pub struct G13Table {
    values: Vec<u64>,
    /// Maximizing partition `(a, b, c)`, `a <= b <= c`, per `s >= 3`.
    argmax: Vec<[usize; 3]>,
    exhaustive: bool,
}

/// Optimal recursive decomposition attaining `g(s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionTree {
    pub size: usize,
    pub value: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartitionTree>,
}

impl G13Table {
    /// Maximizes over every partition `a <= b <= c`. Cubic in `s_max`.
    ///
    /// Ties keep the lexicographically least partition.
    pub fn exhaustive(s_max: usize) -> Self {
        let mut values = vec![0u64; s_max + 1];
        let mut argmax = vec![[0; 3]; s_max + 1];
        for s in 3..=s_max {
            let mut best = (0u64, [0; 3]);
            let mut first = true;
            for a in 1..=s / 3 {
                for b in a..=(s - a) / 2 {
                    let c = s - a - b;
                    let v = values[a] + values[b] + values[c] + (a * b * c) as u64;
                    if first || v > best.0 {
                        best = (v, [a, b, c]);
                        first = false;
                    }
                }
            }
            values[s] = best.0;
            argmax[s] = best.1;
        }
        G13Table {
            values,
            argmax,
            exhaustive: true,
        }
    }

    /// Uses only the most nearly equal partition. Linear in `s_max`.
    pub fn balanced(s_max: usize) -> Self {
        let mut values = vec![0u64; s_max + 1];
        let mut argmax = vec![[0; 3]; s_max + 1];
        for s in 3..=s_max {
            let p = balanced_parts(s);
            values[s] = values[p[0]] + values[p[1]] + values[p[2]] + (p[0] * p[1] * p[2]) as u64;
            argmax[s] = p;
        }
        G13Table {
            values,
            argmax,
            exhaustive: false,
        }
    }

    pub fn s_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    /// `g(s)`; panics if `s > s_max`.
    pub fn value(&self, s: usize) -> u64 {
        self.values[s]
    }

    pub fn partition(&self, s: usize) -> Option<[usize; 3]> {
        (s >= 3).then(|| self.argmax[s])
    }

    /// Value attained by the partition `parts` one level down.
    pub fn partition_value(&self, parts: [usize; 3]) -> u64 {
        parts.iter().map(|&p| self.values[p]).sum::<u64>() + (parts[0] * parts[1] * parts[2]) as u64
    }

    pub fn tree(&self, s: usize) -> PartitionTree {
        PartitionTree {
            size: s,
            value: self.values[s],
            parts: match self.partition(s) {
                Some(p) => p.iter().map(|&x| self.tree(x)).collect(),
                None => Vec::new(),
            },
        }
    }
}

/// `s = 3q + r` split as evenly as possible, ascending.
pub(crate) fn balanced_parts(s: usize) -> [usize; 3] {
    let q = s / 3;
    match s % 3 {
        0 => [q, q, q],
        1 => [q, q, q + 1],
        _ => [q, q + 1, q + 1],
    }
}
