//! Scalar abstraction shared by every numeric routine.
//!
//! Exact rationals compare with `==`; floating types compare with a relative
//! tolerance so that near-ties (e.g. entropies such as `ln(3/2)`) are still
//! recognised as transition points.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedMul, FromPrimitive, Num, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Which arithmetic a computation path commits to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NumberKind {
    ExactRational,
    Floating,
}

pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialOrd
    + Num
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    const KIND: NumberKind;

    /// Parses an integer, a `p/q` fraction or a decimal literal (`-1.25e-3`).
    fn parse_literal(text: &str) -> Option<Self>;

    fn is_finite_value(&self) -> bool;

    /// Equality used for tie detection: exact for rationals, relative tolerance for floats.
    fn ties(&self, other: &Self) -> bool;

    /// JSON rendering: strings for exact values, numbers for floats.
    fn to_json(&self) -> serde_json::Value;

    fn as_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar")
    }

    /// Three-way comparison that reports ties as `Equal`.
    fn compare(&self, other: &Self) -> Ordering {
        if self.ties(other) {
            Ordering::Equal
        } else {
            self.partial_cmp(other).unwrap_or(Ordering::Equal)
        }
    }
}

/// Relative tie tolerance for `f64`.
pub const F64_TIE_TOLERANCE: f64 = 1e-9;
/// Relative tie tolerance for `f32`; `1e-9` is below its resolution.
pub const F32_TIE_TOLERANCE: f32 = 1e-5;

macro_rules! impl_float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            const KIND: NumberKind = NumberKind::Floating;

            fn parse_literal(text: &str) -> Option<Self> {
                let text = text.trim();
                if let Some((p, q)) = text.split_once('/') {
                    let p: $t = p.trim().parse().ok()?;
                    let q: $t = q.trim().parse().ok()?;
                    if q == 0.0 {
                        return None;
                    }
                    return Some(p / q);
                }
                text.parse().ok()
            }

            fn is_finite_value(&self) -> bool {
                self.is_finite()
            }

            fn ties(&self, other: &Self) -> bool {
                let scale = self.abs().max(other.abs()).max(1.0);
                (self - other).abs() <= $tol * scale
            }

            fn to_json(&self) -> serde_json::Value {
                // Shortest round-trip text of the native type, so f32 values stay short.
                self.to_string()
                    .parse::<f64>()
                    .ok()
                    .and_then(serde_json::Number::from_f64)
                    .map(serde_json::Value::Number)
                    .unwrap_or(serde_json::Value::Null)
            }
        }
    };
}

impl_float_scalar!(f64, F64_TIE_TOLERANCE);
impl_float_scalar!(f32, F32_TIE_TOLERANCE);

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + CheckedMul + FromStr + Display + Debug + Send + Sync + 'static,
    Ratio<T>: FromPrimitive + ToPrimitive,
{
    const KIND: NumberKind = NumberKind::ExactRational;

    fn parse_literal(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((p, q)) = text.split_once('/') {
            let p = parse_exact_decimal::<T>(p.trim())?;
            let q = parse_exact_decimal::<T>(q.trim())?;
            if q.is_zero() {
                return None;
            }
            return Some(p / q);
        }
        parse_exact_decimal(text)
    }

    fn is_finite_value(&self) -> bool {
        true
    }

    fn ties(&self, other: &Self) -> bool {
        self == other
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

/// Parses a decimal literal with optional fraction and exponent as an exact ratio.
fn parse_exact_decimal<T>(text: &str) -> Option<Ratio<T>>
where
    T: Clone + Integer + Signed + CheckedMul + FromStr,
{
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, unsigned) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = unsigned.split_once('.').unwrap_or((unsigned, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer: T = digits.parse().ok()?;
    if negative {
        numer = -numer;
    }
    let scale = exponent.checked_sub(i32::try_from(frac_part.len()).ok()?)?;
    let ten = T::from_str("10").ok()?;
    let power = checked_pow(&ten, scale.unsigned_abs())?;
    Some(if scale >= 0 {
        Ratio::from_integer(numer.checked_mul(&power)?)
    } else {
        Ratio::new(numer, power)
    })
}

fn checked_pow<T: Clone + Integer + CheckedMul>(base: &T, exp: u32) -> Option<T> {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}
