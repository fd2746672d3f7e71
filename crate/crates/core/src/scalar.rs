//! Scalar abstraction for the threshold and survivor-bound arithmetic.
//!
//! The extraction procedure compares counts against `alpha * size` and
//! checks a product of powers of `alpha` and `1 - alpha`. Both are
//! expressible over any ordered field, so the same code runs with `f32`,
//! `f64` or exact big rationals.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

pub trait Scalar: Num + Clone + PartialOrd + Debug + Send + Sync {
    /// True when comparisons are exact (no rounding slack needed).
    const EXACT: bool;

    fn from_u64(v: u64) -> Self;

    /// `num / den`, exact when the type allows it.
    fn from_ratio(num: u64, den: u64) -> Self;

    fn to_f64(&self) -> f64;

    /// `self^exp` for a non-negative integer exponent.
    fn powu(&self, exp: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_u64(v: u64) -> Self {
                v as $t
            }

            fn from_ratio(num: u64, den: u64) -> Self {
                (num as f64 / den as f64) as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn powu(&self, exp: u64) -> Self {
                self.powf(exp as $t)
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_u64(v: u64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: u64, den: u64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Parse a threshold such as `0.5`, `1/2` or `3/20` into any scalar.
///
/// Decimal strings are converted exactly for rational scalars
/// (`0.125` becomes `1/8`).
pub fn parse_scalar<S: Scalar>(text: &str) -> Option<S> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: u64 = n.trim().parse().ok()?;
        let d: u64 = d.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        return Some(S::from_ratio(n, d));
    }
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 18 {
        return None;
    }
    let den = 10u64.checked_pow(frac.len() as u32)?;
    let int_v: u64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let frac_v: u64 = if frac.is_empty() {
        0
    } else {
        frac.parse().ok()?
    };
    let num = int_v.checked_mul(den)?.checked_add(frac_v)?;
    Some(S::from_ratio(num, den))
}

/// `ceil(x)` for a non-negative scalar, saturating at `u64::MAX`.
pub fn ceil_u64<S: Scalar>(x: &S) -> u64 {
    let f = x.to_f64();
    if !f.is_finite() || f >= u64::MAX as f64 {
        return u64::MAX;
    }
    let mut c = f.ceil().max(0.0) as u64;
    if S::EXACT {
        // correct any rounding in the f64 estimate
        while c > 0 && S::from_u64(c - 1) >= *x {
            c -= 1;
        }
        while S::from_u64(c) < *x {
            c += 1;
        }
    }
    c
}
