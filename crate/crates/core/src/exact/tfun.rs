//! Maximum number of cyclic triangles in an `s`-vertex tournament.

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Closed form: `(s+1)s(s-1)/24` for odd `s`, `(s+2)s(s-2)/24` for even.
pub fn t_closed(s: u64) -> u64 {
    if s < 3 {
        return 0;
    }
    if s % 2 == 1 {
        (s + 1) * s * (s - 1) / 24
    } else {
        (s + 2) * s * (s - 2) / 24
    }
}

#[derive(Clone, Debug)]
pub struct TBrute {
    pub value: u64,
    pub witness: Tournament,
    /// `"enumeration"` or `"score-sequences"`.
    pub method: &'static str,
}

/// Largest order enumerated tournament by tournament.
pub const T_ENUM_MAX: usize = 8;
/// Largest order handled through score sequences.
pub const T_SCORE_MAX: usize = 40;

/// Brute-force `T(s)`.
///
/// For `s <= 7` (8 when `allow_s8`) every tournament is visited in Gray-code
/// order with the outdegree formula updated per flip; the witness is the
/// least pair mask attaining the maximum. Larger `s` minimize
/// `sum C(d_i, 2)` over all score sequences satisfying Landau's condition,
/// with a near-regular witness checked against the optimum.
pub fn t_brute(s: usize, allow_s8: bool) -> Result<TBrute> {
    let enum_max = if allow_s8 { T_ENUM_MAX } else { 7 };
    if s <= enum_max {
        let (value, mask) = enumerate_tournaments(s);
        return Ok(TBrute {
            value,
            witness: Tournament::from_pair_mask(s, mask),
            method: "enumeration",
        });
    }
    if s > T_SCORE_MAX {
        return Err(Error::BudgetExceeded { nodes: 0 });
    }
    let value = best_over_score_sequences(s);
    let witness = near_regular(s);
    if witness.count_cyclic_triangles() != value {
        return Err(Error::domain(
            "near-regular witness does not attain the optimum",
        ));
    }
    Ok(TBrute {
        value,
        witness,
        method: "score-sequences",
    })
}

fn enumerate_tournaments(s: usize) -> (u64, u64) {
    let pairs: Vec<(usize, usize)> = (0..s)
        .flat_map(|i| (i + 1..s).map(move |j| (i, j)))
        .collect();
    let total = (s as u64) * (s as u64).saturating_sub(1) * (s as u64).saturating_sub(2) / 6;
    // mask 0: every pair oriented j -> i
    let mut out: Vec<i64> = (0..s as i64).collect();
    let mut sum_c2: i64 = out.iter().map(|d| d * (d - 1) / 2).sum();
    let mut mask = 0u64;
    let mut best = (sum_c2, 0u64);
    for step in 1u64..(1u64 << pairs.len()) {
        let k = step.trailing_zeros() as usize;
        let (i, j) = pairs[k];
        mask ^= 1 << k;
        let (gain, lose) = if mask >> k & 1 == 1 { (i, j) } else { (j, i) };
        // C(d+1,2) - C(d,2) = d
        sum_c2 += out[gain] - (out[lose] - 1);
        out[gain] += 1;
        out[lose] -= 1;
        if sum_c2 < best.0 || (sum_c2 == best.0 && mask < best.1) {
            best = (sum_c2, mask);
        }
    }
    (total - best.0 as u64, best.1)
}

/// Minimum of `sum C(d_i,2)` over nondecreasing Landau score sequences.
///
/// Branch and bound: by convexity the remaining scores cost at least their
/// most balanced split, and the near-regular tournament seeds the incumbent.
fn best_over_score_sequences(s: usize) -> u64 {
    fn c2(d: usize) -> u64 {
        (d * d.saturating_sub(1) / 2) as u64
    }
    fn balanced(sum: usize, parts: usize) -> u64 {
        if parts == 0 {
            return 0;
        }
        let (b, extra) = (sum / parts, sum % parts);
        (parts - extra) as u64 * c2(b) + extra as u64 * c2(b + 1)
    }
    fn rec(s: usize, k: usize, prev: usize, prefix: usize, acc: u64, best: &mut u64) {
        let edges = s * (s - 1) / 2;
        if k == s {
            if prefix == edges {
                *best = (*best).min(acc);
            }
            return;
        }
        for d in prev..s {
            let p = prefix + d;
            // Landau: first k+1 scores sum to at least C(k+1, 2)
            if p < (k + 1) * k / 2 {
                continue;
            }
            // remaining scores are >= d, total must stay reachable
            if p + d * (s - k - 1) > edges {
                break;
            }
            let acc = acc + c2(d);
            if acc + balanced(edges - p, s - k - 1) > *best {
                continue;
            }
            rec(s, k + 1, d, p, acc, best);
        }
    }
    let mut best: u64 = near_regular(s).outdegrees().into_iter().map(c2).sum();
    rec(s, 0, 0, 0, 0, &mut best);
    let total = (s * (s - 1) * (s - 2) / 6) as u64;
    total - best
}

/// Rotational tournament for odd `s`; for even `s`, the rotational
/// tournament on `s + 1` vertices with its last vertex removed.
pub fn near_regular(s: usize) -> Tournament {
    let odd = if s % 2 == 1 { s } else { s + 1 };
    let k = odd / 2;
    Tournament::from_fn(s, |i, j| (j + odd - i) % odd <= k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        let expect = [0, 0, 0, 1, 2, 5, 8, 14, 20, 30, 40];
        for (s, &e) in expect.iter().enumerate() {
            assert_eq!(t_closed(s as u64), e, "s={s}");
        }
        assert_eq!(t_closed(9), 30);
        assert_eq!(4 * t_closed(9), 120); // C(10,3)
    }

    #[test]
    fn brute_matches_closed_form() {
        for s in 1..=7 {
            let r = t_brute(s, false).unwrap();
            assert_eq!(r.value, t_closed(s as u64), "s={s}");
            assert_eq!(r.witness.count_cyclic_triangles(), r.value);
            assert_eq!(r.method, "enumeration");
        }
        for s in 8..=14 {
            let r = t_brute(s, false).unwrap();
            assert_eq!(r.value, t_closed(s as u64), "s={s}");
            assert_eq!(r.method, "score-sequences");
        }
    }

    #[test]
    fn five_vertex_witness_is_regular() {
        let r = t_brute(5, false).unwrap();
        assert_eq!(r.value, 5);
        assert!(r.witness.outdegrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn score_sequences_agree_with_enumeration() {
        for s in 3..=7 {
            assert_eq!(best_over_score_sequences(s), enumerate_tournaments(s).0);
        }
        assert!(t_brute(41, false).is_err());
    }
}
