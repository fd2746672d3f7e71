//! Upper-bound calculators, evaluated in `log2` space.

use num_traits::Float;
use serde::Serialize;

use crate::error::{Error, Result};

fn f<F: Float>(x: f64) -> F {
    F::from(x).expect("finite constant")
}

/// `log2 C(n, k)` as a float, valid far beyond `u64`.
fn log2_binom<F: Float>(n: u64, k: u64) -> F {
    if k > n {
        return F::neg_infinity();
    }
    let k = k.min(n - k);
    (0..k).fold(F::zero(), |acc, i| {
        acc + (f::<F>((n - i) as f64) / f::<F>((i + 1) as f64)).log2()
    })
}

/// `(v, r, m)` of the string-labelling builder for `(s, n)` as floats.
fn budget_float<F: Float>(s: usize, n: usize) -> (F, F, F) {
    let c = log2_binom::<F>((s + n - 2) as u64, (s - 1) as u64).exp2();
    let one = F::one();
    (
        c,
        f::<F>((s - 2) as f64) * c + one,
        f::<F>((s + n - 4) as f64) * c + one,
    )
}

/// `log2` of `(v+1) alpha^-r (1-alpha)^(r-m)` with the budget for `(s-1, n-1)`.
pub fn threshold_bound_log2<F: Float>(s: usize, n: usize, alpha: F) -> Result<F> {
    if s < 3 || n < 3 {
        return Err(Error::domain("bound needs s, n >= 3"));
    }
    if !(alpha > F::zero() && alpha <= f(0.5)) {
        return Err(Error::domain("alpha must lie in (0, 1/2]"));
    }
    let (v, r, m) = budget_float::<F>(s - 1, n - 1);
    Ok((v + F::one()).log2() - r * alpha.log2() + (r - m) * (F::one() - alpha).log2())
}

pub fn threshold_bound<F: Float>(s: usize, n: usize, alpha: F) -> Result<F> {
    threshold_bound_log2(s, n, alpha).map(F::exp2)
}

/// Minimizes the `log2` bound over `alpha in (0, 1/2]` by golden-section
/// search (the objective is convex in `alpha`). Returns `(alpha, log2 bound)`.
pub fn optimal_alpha<F: Float>(s: usize, n: usize) -> Result<(F, F)> {
    let obj = |a: F| threshold_bound_log2(s, n, a);
    let phi = f::<F>((5f64.sqrt() - 1.0) / 2.0);
    let (mut lo, mut hi) = (f::<F>(1e-12), f::<F>(0.5));
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let (mut f1, mut f2) = (obj(x1)?, obj(x2)?);
    for _ in 0..200 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = obj(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = obj(x2)?;
        }
    }
    let a = (lo + hi) / f(2.0);
    let edge = f(0.5);
    let (fa, fe) = (obj(a)?, obj(edge)?);
    Ok(if fe < fa { (edge, fe) } else { (a, fa) })
}

/// Exponent `(s-3)/(s-2)! * (s+n)^(s-2) * log2(64n/s)`, for `4 <= s <= n`.
pub fn closed_form_exponent<F: Float>(s: usize, n: usize) -> Result<F> {
    if s < 4 || s > n {
        return Err(Error::domain(format!("need 4 <= s <= n, got s={s}, n={n}")));
    }
    let fact: F = (1..=s - 2).fold(F::one(), |acc, i| acc * f(i as f64));
    let sn = f::<F>((s + n) as f64);
    Ok(f::<F>((s - 3) as f64) / fact
        * sn.powi((s - 2) as i32)
        * (f::<F>(64.0 * n as f64) / f(s as f64)).log2())
}

/// Upper bounds for graph Ramsey numbers feeding the recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseTable {
    /// `r(s, n) <= C(s+n-2, s-1)`.
    ErdosSzekeres,
    /// Known small values, falling back to `ErdosSzekeres`.
    Classical,
}

impl BaseTable {
    pub fn r2(self, s: usize, n: usize) -> f64 {
        let (a, b) = if s <= n { (s, n) } else { (n, s) };
        if a <= 1 {
            return 1.0;
        }
        if a == 2 {
            return b as f64;
        }
        if self == BaseTable::Classical {
            let known = match (a, b) {
                (3, 3) => Some(6),
                (3, 4) => Some(9),
                (3, 5) => Some(14),
                (3, 6) => Some(18),
                (3, 7) => Some(23),
                (3, 8) => Some(28),
                (3, 9) => Some(36),
                (4, 4) => Some(18),
                (4, 5) => Some(25),
                _ => None,
            };
            if let Some(k) = known {
                return k as f64;
            }
        }
        log2_binom::<f64>((a + b - 2) as u64, (a - 1) as u64)
            .exp2()
            .round()
    }
}

/// Bound `2^2^...^top` with `height` twos (`height = 0` means `top` itself).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TowerBound {
    pub height: u32,
    pub top: f64,
}

impl TowerBound {
    /// `log2` of the bound, `inf` once it no longer fits in `f64`.
    pub fn log2(&self) -> f64 {
        match self.height {
            0 => self.top.log2(),
            h => (1..h).fold(self.top, |x, _| x.exp2()),
        }
    }
}

/// Stepping `r_k(s, n) <= 2^C(r_(k-1)(s-1, n-1), k-1)` down to graphs.
///
/// Above the first level `C(R, k-1) <= R^(k-1)` and
/// `tower(h, t) + c <= tower(h, t + c)` keep the description a single tower.
pub fn erdos_rado_recursion_bound(
    k: usize,
    s: usize,
    n: usize,
    base: BaseTable,
) -> Result<TowerBound> {
    if k < 2 {
        return Err(Error::domain("uniformity must be at least 2"));
    }
    if s < k || n < k {
        return Err(Error::domain(format!("need s, n >= k = {k}")));
    }
    if k == 2 {
        return Ok(TowerBound {
            height: 0,
            top: base.r2(s, n),
        });
    }
    let below = erdos_rado_recursion_bound(k - 1, s - 1, n - 1, base)?;
    let j = (k - 1) as f64;
    Ok(match below.height {
        0 => {
            let r = below.top;
            let c = (0..k - 1).fold(1.0, |acc, i| acc * (r - i as f64) / (i as f64 + 1.0));
            TowerBound {
                height: 1,
                top: c.max(0.0),
            }
        }
        1 => TowerBound {
            height: 2,
            top: j * below.top,
        },
        h => TowerBound {
            height: h + 1,
            top: below.top + j.log2(),
        },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagonalReport {
    pub k: usize,
    /// `log2 log2` of `(v+1) 2^m` with the budget for `(k-1, k-1)`.
    pub log2_log2: f64,
    pub ratio_to_k: f64,
    /// `log2_log2 <= 2.2 k`.
    pub within_slack: bool,
}

/// Diagonal bound at `alpha = 1/2`, where the extraction bound is `(v+1) 2^m`.
pub fn diagonal_bound<F: Float>(k: usize) -> Result<DiagonalReport> {
    if k < 3 {
        return Err(Error::domain("k must be at least 3"));
    }
    let (v, _, m) = budget_float::<F>(k - 1, k - 1);
    let l2 = (v + F::one()).log2() + m;
    let ll = l2.log2().to_f64().unwrap_or(f64::INFINITY);
    Ok(DiagonalReport {
        k,
        log2_log2: ll,
        ratio_to_k: ll / k as f64,
        within_slack: ll <= 2.2 * k as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::budget_for;

    #[test]
    fn threshold_at_half() {
        let b: f64 = threshold_bound(4, 4, 0.5).unwrap();
        assert!((b - 57344.0).abs() < 1e-6);
        let b32: f32 = threshold_bound(4, 4, 0.5f32).unwrap();
        assert!((b32 - 57344.0).abs() < 0.5);
        for s in 3..=6 {
            for n in 3..=6 {
                let bud = budget_for(s - 1, n - 1).unwrap();
                let want = ((bud.v + 1) as f64).log2() + bud.m as f64;
                let got: f64 = threshold_bound_log2(s, n, 0.5).unwrap();
                assert!((got - want).abs() < 1e-9, "({s},{n})");
            }
        }
        assert!(threshold_bound_log2(4, 4, 0.7f64).is_err());
    }

    #[test]
    fn optimal_alpha_is_r_over_m() {
        let (a, _): (f64, f64) = optimal_alpha(5, 20).unwrap();
        let b = budget_for(4, 19).unwrap();
        let want = b.r as f64 / b.m as f64;
        assert!((a - want).abs() < 1e-6, "{a} vs {want}");
        // grid check
        let best_grid = (1..500)
            .map(|i| threshold_bound_log2(5, 20, i as f64 / 1000.0).unwrap())
            .fold(f64::INFINITY, f64::min);
        let at: f64 = threshold_bound_log2(5, 20, a).unwrap();
        assert!(at <= best_grid + 1e-9);
    }

    #[test]
    fn closed_form_exponent_value() {
        let e: f64 = closed_form_exponent(4, 4).unwrap();
        assert!((e - 192.0).abs() < 1e-9);
        assert!(closed_form_exponent::<f64>(3, 4).is_err());
        assert!(closed_form_exponent::<f64>(5, 4).is_err());
    }

    #[test]
    fn closed_form_dominates_optimized() {
        for s in 4..=30 {
            for n in s..=30 {
                let (_, best): (f64, f64) = optimal_alpha(s, n).unwrap();
                let cor: f64 = closed_form_exponent(s, n).unwrap();
                assert!(cor >= best, "({s},{n}): {cor} < {best}");
            }
        }
    }

    #[test]
    fn closed_form_growth_in_n() {
        // exponent / (n^2 log n) settles for s = 4
        let ratio = |n: usize| {
            let e: f64 = closed_form_exponent(4, n).unwrap();
            e / ((n * n) as f64 * (n as f64).log2())
        };
        let mut prev = ratio(10);
        for n in [100, 1000, 10_000] {
            let r = ratio(n);
            assert!(r < prev);
            prev = r;
        }
        assert!(prev > 0.5);
    }

    #[test]
    fn recursion_tower() {
        let t = erdos_rado_recursion_bound(3, 4, 4, BaseTable::Classical).unwrap();
        assert_eq!(
            t,
            TowerBound {
                height: 1,
                top: 15.0
            }
        );
        let es = erdos_rado_recursion_bound(3, 5, 6, BaseTable::ErdosSzekeres).unwrap();
        // r(4,5) <= C(7,3) = 35, so the top is C(35,2)
        assert_eq!(es.top, 595.0);
        let t4 = erdos_rado_recursion_bound(4, 5, 5, BaseTable::Classical).unwrap();
        assert_eq!(t4.height, 2);
        assert_eq!(t4.top, 3.0 * 15.0);
    }

    #[test]
    fn diagonal_double_log() {
        for k in 3..=50 {
            let r = diagonal_bound::<f64>(k).unwrap();
            assert!(r.within_slack, "k={k}: {}", r.log2_log2);
        }
        let r = diagonal_bound::<f64>(20).unwrap();
        assert!(r.log2_log2 <= 44.0);
    }
}
