//! Tropical free energy as an envelope of level lines.
//!
//! On `T > 0` the tropical free energy is `min_n (E_n − T S_n)`, on `T < 0` it
//! is `max_n (E_n − T S_n)`. Both are built with a monotone convex-hull stack
//! over lines sorted by slope, then clipped to their half-line.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::spectrum::{Level, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Positive,
    Negative,
}

impl Domain {
    /// Domain containing a nonzero temperature.
    pub fn of<S: Scalar>(temperature: &S) -> Option<Domain> {
        match temperature.partial_cmp(&S::zero()) {
            Some(Ordering::Greater) => Some(Domain::Positive),
            Some(Ordering::Less) => Some(Domain::Negative),
            _ => None,
        }
    }

    pub fn contains<S: Scalar>(self, temperature: &S) -> bool {
        Domain::of(temperature) == Some(self)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::Positive => "positive",
            Domain::Negative => "negative",
        })
    }
}

/// Interval endpoint on the extended temperature axis.
#[derive(Debug, Clone, PartialEq)]
pub enum Endpoint<S> {
    NegInfinity,
    Finite(S),
    PosInfinity,
}

impl<S: Scalar> Endpoint<S> {
    fn cmp_value(&self, t: &S) -> Ordering {
        match self {
            Endpoint::NegInfinity => Ordering::Less,
            Endpoint::PosInfinity => Ordering::Greater,
            Endpoint::Finite(x) => x.partial_cmp(t).unwrap_or(Ordering::Equal),
        }
    }

    pub fn finite(&self) -> Option<&S> {
        match self {
            Endpoint::Finite(x) => Some(x),
            _ => None,
        }
    }
}

impl<S: Scalar> fmt::Display for Endpoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInfinity => f.write_str("-inf"),
            Endpoint::PosInfinity => f.write_str("inf"),
            Endpoint::Finite(x) => write!(f, "{x}"),
        }
    }
}

/// Open interval on which the envelope follows one level line.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment<S> {
    pub lower: Endpoint<S>,
    pub upper: Endpoint<S>,
    /// Index into the spectrum's levels.
    pub level: usize,
    pub energy: S,
    pub entropy: S,
}

impl<S: Scalar> Segment<S> {
    pub fn free_energy(&self, temperature: &S) -> S {
        self.energy.clone() - temperature.clone() * self.entropy.clone()
    }

    pub fn contains(&self, temperature: &S) -> bool {
        self.lower.cmp_value(temperature) == Ordering::Less
            && self.upper.cmp_value(temperature) == Ordering::Greater
    }
}

/// Kink of the envelope together with every level attaining it there.
#[derive(Debug, Clone, PartialEq)]
pub struct Breakpoint<S> {
    pub temperature: S,
    pub minimizing_set: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear<S> {
    pub domain: Domain,
    pub segments: Vec<Segment<S>>,
    pub breakpoints: Vec<Breakpoint<S>>,
}

/// Where a temperature falls on an envelope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Segment(usize),
    Breakpoint(usize),
}

impl<S: Scalar> PiecewiseLinear<S> {
    pub fn locate(&self, temperature: &S) -> Result<Location> {
        if !self.domain.contains(temperature) {
            return Err(out_of_domain(temperature, self.domain));
        }
        if let Some(j) = self
            .breakpoints
            .iter()
            .position(|b| b.temperature == *temperature)
        {
            return Ok(Location::Breakpoint(j));
        }
        let idx = self
            .segments
            .partition_point(|seg| seg.upper.cmp_value(temperature) != Ordering::Greater);
        Ok(Location::Segment(idx.min(self.segments.len() - 1)))
    }

    pub fn breakpoint_temperatures(&self) -> impl Iterator<Item = &S> {
        self.breakpoints.iter().map(|b| &b.temperature)
    }

    /// Level indices of the segments, in order of increasing temperature.
    pub fn segment_levels(&self) -> Vec<usize> {
        self.segments.iter().map(|s| s.level).collect()
    }
}

fn out_of_domain<S: Scalar>(temperature: &S, domain: Domain) -> Error {
    Error::OutOfDomain {
        temperature: temperature.to_string(),
        domain: domain.to_string(),
    }
}

/// Result of `(E_i − E_k)/(S_i − S_k)`; parallel level lines never cross.
#[derive(Debug, Clone, PartialEq)]
pub enum TransitionTemperature<S> {
    Finite(S),
    PositiveInfinity,
}

impl<S: Scalar> TransitionTemperature<S> {
    pub fn finite(&self) -> Option<&S> {
        match self {
            TransitionTemperature::Finite(t) => Some(t),
            TransitionTemperature::PositiveInfinity => None,
        }
    }
}

impl<S: Scalar> fmt::Display for TransitionTemperature<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransitionTemperature::Finite(t) => write!(f, "{t}"),
            TransitionTemperature::PositiveInfinity => f.write_str("inf"),
        }
    }
}

pub fn transition_temperature<S: Scalar>(
    level_i: &Level<S>,
    level_k: &Level<S>,
) -> Result<TransitionTemperature<S>> {
    if level_i == level_k {
        return Err(Error::IdenticalLevels);
    }
    if level_i.entropy.ties(&level_k.entropy) {
        return Ok(TransitionTemperature::PositiveInfinity);
    }
    Ok(TransitionTemperature::Finite(
        (level_i.energy.clone() - level_k.energy.clone())
            / (level_i.entropy.clone() - level_k.entropy.clone()),
    ))
}

/// Latent heat `q_ik = E_i − E_k`, equal to `T*_ik (S_i − S_k)` when the crossing is finite.
pub fn latent_heat<S: Scalar>(level_i: &Level<S>, level_k: &Level<S>) -> S {
    level_i.energy.clone() - level_k.energy.clone()
}

/// `(S_i − S_k) T*_ik + (S_k − S_l) T*_kl + (S_l − S_i) T*_li`, or `None` if any
/// pair is parallel.
pub fn triple_identity_residual<S: Scalar>(
    level_i: &Level<S>,
    level_k: &Level<S>,
    level_l: &Level<S>,
) -> Result<Option<S>> {
    let term = |a: &Level<S>, b: &Level<S>| -> Result<Option<S>> {
        Ok(transition_temperature(a, b)?
            .finite()
            .map(|t| (a.entropy.clone() - b.entropy.clone()) * t.clone()))
    };
    let (Some(a), Some(b), Some(c)) = (
        term(level_i, level_k)?,
        term(level_k, level_l)?,
        term(level_l, level_i)?,
    ) else {
        return Ok(None);
    };
    Ok(Some(a + b + c))
}

/// Indices attaining `min_n F_n/T`: the minimum of `F_n` for `T > 0`, the maximum for `T < 0`.
pub fn minimizing_set<S: Scalar>(spectrum: &Spectrum<S>, temperature: &S) -> Result<Vec<usize>> {
    let domain = Domain::of(temperature).ok_or(Error::ZeroTemperature)?;
    let free = spectrum.free_energies(temperature);
    let better = |candidate: &S, current: &S| match domain {
        Domain::Positive => candidate < current,
        Domain::Negative => candidate > current,
    };
    let mut best = free[0].clone();
    for f in &free[1..] {
        if better(f, &best) {
            best = f.clone();
        }
    }
    Ok(free
        .iter()
        .enumerate()
        .filter(|(_, f)| f.ties(&best))
        .map(|(i, _)| i)
        .collect())
}

struct Line<S> {
    level: usize,
    intercept: S,
    slope: S,
}

fn intersection<S: Scalar>(a: &Line<S>, b: &Line<S>) -> S {
    (b.intercept.clone() - a.intercept.clone()) / (a.slope.clone() - b.slope.clone())
}

/// Lower envelope of lines over the whole real axis, ordered from `−∞` to `+∞`.
fn lower_hull<S: Scalar>(mut lines: Vec<Line<S>>) -> Vec<Line<S>> {
    // Steepest descent last: slopes in decreasing order, then lowest intercept first.
    lines.sort_by(|a, b| {
        b.slope.compare(&a.slope).then_with(|| {
            a.intercept
                .partial_cmp(&b.intercept)
                .unwrap_or(Ordering::Equal)
        })
    });
    lines.dedup_by(|later, kept| later.slope.ties(&kept.slope));

    let mut stack: Vec<Line<S>> = Vec::with_capacity(lines.len());
    for line in lines {
        while stack.len() >= 2 {
            let top = &stack[stack.len() - 1];
            let below = &stack[stack.len() - 2];
            // The top line is hidden once the new line overtakes `below` no later than `top` does.
            if intersection(below, &line).compare(&intersection(below, top)) != Ordering::Greater {
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(line);
    }
    stack
}

/// Builds the tropical free energy on one half-line.
pub fn build_envelope<S: Scalar>(spectrum: &Spectrum<S>, domain: Domain) -> PiecewiseLinear<S> {
    let lines = spectrum
        .levels()
        .iter()
        .enumerate()
        .map(|(level, l)| match domain {
            Domain::Positive => Line {
                level,
                intercept: l.energy.clone(),
                slope: -l.entropy.clone(),
            },
            // max_n F_n = −min_n (−F_n)
            Domain::Negative => Line {
                level,
                intercept: -l.energy.clone(),
                slope: l.entropy.clone(),
            },
        })
        .collect();
    let hull = lower_hull(lines);
    let crossings: Vec<S> = hull
        .windows(2)
        .map(|w| intersection(&w[0], &w[1]))
        .collect();

    let zero = S::zero();
    let inside = |x: &S| match domain {
        Domain::Positive => x.compare(&zero) == Ordering::Greater,
        Domain::Negative => x.compare(&zero) == Ordering::Less,
    };

    let mut segments = Vec::new();
    for (j, line) in hull.iter().enumerate() {
        let mut lower = if j == 0 {
            Endpoint::NegInfinity
        } else {
            Endpoint::Finite(crossings[j - 1].clone())
        };
        let mut upper = match crossings.get(j) {
            Some(x) => Endpoint::Finite(x.clone()),
            None => Endpoint::PosInfinity,
        };
        match domain {
            Domain::Positive => {
                if !matches!(&upper, Endpoint::PosInfinity) && !upper.finite().is_some_and(inside) {
                    continue;
                }
                if !lower.finite().is_some_and(inside) {
                    lower = Endpoint::Finite(zero.clone());
                }
            }
            Domain::Negative => {
                if !matches!(&lower, Endpoint::NegInfinity) && !lower.finite().is_some_and(inside) {
                    continue;
                }
                if !upper.finite().is_some_and(inside) {
                    upper = Endpoint::Finite(zero.clone());
                }
            }
        }
        let level = &spectrum.levels()[line.level];
        segments.push(Segment {
            lower,
            upper,
            level: line.level,
            energy: level.energy.clone(),
            entropy: level.entropy.clone(),
        });
    }

    let breakpoints = hull
        .windows(2)
        .zip(&crossings)
        .filter(|(_, x)| inside(x))
        .map(|(pair, x)| {
            let mut set = minimizing_set(spectrum, x).expect("breakpoint is nonzero");
            for adjacent in [pair[0].level, pair[1].level] {
                if !set.contains(&adjacent) {
                    set.push(adjacent);
                }
            }
            set.sort_unstable();
            Breakpoint {
                temperature: x.clone(),
                minimizing_set: set,
            }
        })
        .collect();

    PiecewiseLinear {
        domain,
        segments,
        breakpoints,
    }
}

/// Value of the tropical free energy at a temperature inside the envelope's domain.
pub fn eval_free_energy<S: Scalar>(envelope: &PiecewiseLinear<S>, temperature: &S) -> Result<S> {
    let segment = match envelope.locate(temperature)? {
        Location::Segment(i) => &envelope.segments[i],
        // Continuous at kinks: either neighbour gives the same value.
        Location::Breakpoint(j) => &envelope.segments[j],
    };
    Ok(segment.free_energy(temperature))
}
