//! Max-plus semiring `ℝ ∪ {−∞}` with `⊕ = max` and `⊙ = +`.
//!
//! The bottom element is a distinct variant rather than a float sentinel, so
//! the semiring laws hold exactly for rational scalars as well.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{Float, One, Zero};

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub enum TropicalReal<S> {
    /// Neutral for `⊕`, absorbing for `⊙`.
    NegInfinity,
    Finite(S),
}

impl<S: Scalar> TropicalReal<S> {
    pub fn finite(value: S) -> Self {
        TropicalReal::Finite(value)
    }

    pub fn is_neg_infinity(&self) -> bool {
        matches!(self, TropicalReal::NegInfinity)
    }

    pub fn value(&self) -> Option<&S> {
        match self {
            TropicalReal::NegInfinity => None,
            TropicalReal::Finite(v) => Some(v),
        }
    }

    pub fn into_value(self) -> Option<S> {
        match self {
            TropicalReal::NegInfinity => None,
            TropicalReal::Finite(v) => Some(v),
        }
    }
}

impl<S: Scalar> From<S> for TropicalReal<S> {
    fn from(value: S) -> Self {
        TropicalReal::Finite(value)
    }
}

impl<S: Scalar> PartialOrd for TropicalReal<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (TropicalReal::NegInfinity, TropicalReal::NegInfinity) => Some(Ordering::Equal),
            (TropicalReal::NegInfinity, _) => Some(Ordering::Less),
            (_, TropicalReal::NegInfinity) => Some(Ordering::Greater),
            (TropicalReal::Finite(a), TropicalReal::Finite(b)) => a.partial_cmp(b),
        }
    }
}

impl<S: Scalar> fmt::Display for TropicalReal<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalReal::NegInfinity => write!(f, "-inf"),
            TropicalReal::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// Tropical addition: `a ⊕ b = max(a, b)`.
pub fn t_add<S: Scalar>(a: TropicalReal<S>, b: TropicalReal<S>) -> TropicalReal<S> {
    match (a, b) {
        (TropicalReal::NegInfinity, x) | (x, TropicalReal::NegInfinity) => x,
        (TropicalReal::Finite(a), TropicalReal::Finite(b)) => {
            TropicalReal::Finite(if b > a { b } else { a })
        }
    }
}

/// Tropical multiplication: `a ⊙ b = a + b`.
pub fn t_mul<S: Scalar>(a: TropicalReal<S>, b: TropicalReal<S>) -> TropicalReal<S> {
    match (a, b) {
        (TropicalReal::Finite(a), TropicalReal::Finite(b)) => TropicalReal::Finite(a + b),
        _ => TropicalReal::NegInfinity,
    }
}

/// Tropical sum of a sequence; the empty sum is `−∞`.
pub fn t_sum<S: Scalar, I>(xs: I) -> TropicalReal<S>
where
    I: IntoIterator<Item = TropicalReal<S>>,
{
    xs.into_iter().fold(TropicalReal::NegInfinity, t_add)
}

impl<S: Scalar> Add for TropicalReal<S> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        t_add(self, rhs)
    }
}

impl<S: Scalar> Mul for TropicalReal<S> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        t_mul(self, rhs)
    }
}

impl<S: Scalar> Zero for TropicalReal<S> {
    fn zero() -> Self {
        TropicalReal::NegInfinity
    }

    fn is_zero(&self) -> bool {
        self.is_neg_infinity()
    }
}

impl<S: Scalar> One for TropicalReal<S> {
    fn one() -> Self {
        TropicalReal::Finite(S::zero())
    }
}

impl<S: Scalar> std::iter::Sum for TropicalReal<S> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        t_sum(iter)
    }
}

/// `ln Σ exp(x_i)` evaluated with the maximum shifted out. Empty input gives `−∞`.
pub fn log_sum_exp<F: Float>(xs: &[F]) -> F {
    let max = xs.iter().copied().fold(F::neg_infinity(), F::max);
    if !max.is_finite() {
        return max;
    }
    let sum = xs.iter().fold(F::zero(), |acc, &x| acc + (x - max).exp());
    max + sum.ln()
}

/// Finite-ε deformation of `⊕`: `ε ln(exp(a/ε) + exp(b/ε))`, which tends to `max(a, b)`.
pub fn soft_add<F: Float>(a: F, b: F, eps: F) -> F {
    eps * log_sum_exp(&[a / eps, b / eps])
}
