//! Tropical thermodynamics at a fixed temperature: entropy, energy, level and
//! state log-probabilities, and their behaviour at transition points.

use std::num::NonZeroUsize;

use crate::envelope::{eval_free_energy, minimizing_set, transition_temperature, PiecewiseLinear};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::spectrum::Spectrum;

/// Per-level tropical probabilities at one temperature.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelRecord<S> {
    pub index: usize,
    pub free_energy: S,
    /// `W_n,tr = (F_tr − F_n)/T`, always `≤ 0`.
    pub level_log_prob: S,
    /// `w_n,tr = W_n,tr − S_n`.
    pub state_log_prob: S,
    /// Set when `w_n,tr > 0`, which only happens for negative level entropies.
    pub out_of_range: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObservablesReport<S> {
    pub temperature: S,
    pub free_energy: S,
    pub entropy: S,
    pub energy: S,
    pub singular: bool,
    pub minimizing_set: Vec<usize>,
    pub levels: Vec<LevelRecord<S>>,
}

fn check_domain<S: Scalar>(envelope: &PiecewiseLinear<S>, temperature: &S) -> Result<()> {
    if envelope.domain.contains(temperature) {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            temperature: temperature.to_string(),
            domain: envelope.domain.to_string(),
        })
    }
}

fn mean<'a, S: Scalar>(values: impl Iterator<Item = &'a S>, count: usize) -> S {
    values.fold(S::zero(), |acc, v| acc + v.clone()) / S::from_count(count)
}

/// Full tropical report at `temperature`.
///
/// At a transition point the minimizing set has `m ≥ 2` levels; the entropy and
/// energy are then the plain means over that set, which is where the classical
/// level probabilities (each `1/m`) converge.
pub fn observables_at<S: Scalar>(
    spectrum: &Spectrum<S>,
    envelope: &PiecewiseLinear<S>,
    temperature: &S,
) -> Result<ObservablesReport<S>> {
    check_domain(envelope, temperature)?;
    let free_energy = eval_free_energy(envelope, temperature)?;
    let set = minimizing_set(spectrum, temperature)?;
    let levels = spectrum.levels();
    let entropy = mean(set.iter().map(|&i| &levels[i].entropy), set.len());
    let energy = mean(set.iter().map(|&i| &levels[i].energy), set.len());

    let records = levels
        .iter()
        .enumerate()
        .map(|(index, level)| {
            let f_n = level.free_energy(temperature);
            let big_w = (free_energy.clone() - f_n.clone()) / temperature.clone();
            let small_w = big_w.clone() - level.entropy.clone();
            LevelRecord {
                index,
                free_energy: f_n,
                out_of_range: small_w > S::zero(),
                level_log_prob: big_w,
                state_log_prob: small_w,
            }
        })
        .collect();

    Ok(ObservablesReport {
        temperature: temperature.clone(),
        free_energy,
        entropy,
        energy,
        singular: set.len() >= 2,
        minimizing_set: set,
        levels: records,
    })
}

/// `W_n,tr = (F_tr − F_n)/T`.
pub fn level_log_prob<S: Scalar>(
    spectrum: &Spectrum<S>,
    envelope: &PiecewiseLinear<S>,
    temperature: &S,
    index: usize,
) -> Result<S> {
    check_domain(envelope, temperature)?;
    let level = spectrum.level(index)?;
    let f_tr = eval_free_energy(envelope, temperature)?;
    Ok((f_tr - level.free_energy(temperature)) / temperature.clone())
}

/// `w_n,tr = −S_n + (F_tr − F_n)/T`.
pub fn state_log_prob<S: Scalar>(
    spectrum: &Spectrum<S>,
    envelope: &PiecewiseLinear<S>,
    temperature: &S,
    index: usize,
) -> Result<S> {
    let big_w = level_log_prob(spectrum, envelope, temperature, index)?;
    Ok(big_w - spectrum.level(index)?.entropy.clone())
}

/// `W_i,tr − W_k,tr = (F_k − F_i)/T`, which also equals `(S_k − S_i)(T*_ik/T − 1)`.
pub fn log_prob_gap<S: Scalar>(
    spectrum: &Spectrum<S>,
    temperature: &S,
    i: usize,
    k: usize,
) -> Result<S> {
    if temperature.is_zero() {
        return Err(Error::ZeroTemperature);
    }
    let (a, b) = (spectrum.level(i)?, spectrum.level(k)?);
    if a.entropy.ties(&b.entropy) {
        return Err(Error::ParallelLevels);
    }
    let gap = (b.free_energy(temperature) - a.free_energy(temperature)) / temperature.clone();
    if cfg!(debug_assertions) {
        let t_star = transition_temperature(a, b)?
            .finite()
            .cloned()
            .expect("non-parallel levels cross");
        let factored =
            (b.entropy.clone() - a.entropy.clone()) * (t_star / temperature.clone() - S::one());
        debug_assert!(gap.ties(&factored) || (gap.clone() - factored).abs().as_f64() < 1e-9);
    }
    Ok(gap)
}

/// First correction to the level log-probability at an `m`-fold degenerate
/// minimum: `k ln W_n → −k ln m`. Zero in the generic case `m = 1`.
pub fn subleading_level_logprob(multiplicity: NonZeroUsize, k: f64) -> f64 {
    -k * (multiplicity.get() as f64).ln()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `T → +0`
    Positive,
    /// `T → −0`
    Negative,
}

/// Entropy in the limit `T → ±0`: the lowest level's on the positive side, the
/// highest level's on the negative side.
pub fn residual_entropy<S: Scalar>(spectrum: &Spectrum<S>, side: Side) -> S {
    match side {
        Side::Positive => spectrum.lowest().entropy.clone(),
        Side::Negative => spectrum.highest().entropy.clone(),
    }
}
