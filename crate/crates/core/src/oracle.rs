//! Finite-k classical statistical mechanics, used as ground truth for the
//! tropical quantities.
//!
//! Level degeneracies are `g_n = exp(S_n/k)`, so the partition function is
//! `Z = Σ exp(−F_n/(kT))`. Every sum is max-shifted and probabilities stay in
//! log space until the last step: at the k values needed to see tropical
//! behaviour the exponents reach the thousands.

use num_traits::Float;

use crate::envelope::{build_envelope, eval_free_energy, Domain, Endpoint, PiecewiseLinear};
use crate::error::{Error, Result};
use crate::observables::{level_log_prob, observables_at};
use crate::scalar::Scalar;
use crate::spectrum::Spectrum;
use crate::tropical::log_sum_exp;

fn cast<F: Float>(x: f64) -> F {
    F::from(x).expect("f64 representable in target float")
}

fn check_args<F: Float>(k: F, temperature: F) -> Result<()> {
    if !(k > F::zero() && k.is_finite()) {
        return Err(Error::NonPositiveK);
    }
    if temperature.is_zero() {
        return Err(Error::ZeroTemperature);
    }
    Ok(())
}

/// Exponents `−F_n/(kT)` of the partition sum.
fn exponents<S: Scalar, F: Float>(spectrum: &Spectrum<S>, k: F, temperature: F) -> Result<Vec<F>> {
    check_args(k, temperature)?;
    Ok(spectrum
        .levels()
        .iter()
        .map(|l| {
            let f_n = cast::<F>(l.energy.as_f64()) - temperature * cast::<F>(l.entropy.as_f64());
            -f_n / (k * temperature)
        })
        .collect())
}

/// `ln Z` by log-sum-exp.
pub fn log_partition<S: Scalar, F: Float>(
    spectrum: &Spectrum<S>,
    k: F,
    temperature: F,
) -> Result<F> {
    Ok(log_sum_exp(&exponents(spectrum, k, temperature)?))
}

/// `F = −kT ln Z`.
pub fn classical_free_energy<S: Scalar, F: Float>(
    spectrum: &Spectrum<S>,
    k: F,
    temperature: F,
) -> Result<F> {
    Ok(-k * temperature * log_partition(spectrum, k, temperature)?)
}

/// `ln W_n`, the log-probability of finding the system at energy `E_n`.
pub fn classical_log_level_prob<S: Scalar, F: Float>(
    spectrum: &Spectrum<S>,
    k: F,
    temperature: F,
) -> Result<Vec<F>> {
    let xs = exponents(spectrum, k, temperature)?;
    let log_z = log_sum_exp(&xs);
    Ok(xs.into_iter().map(|x| x - log_z).collect())
}

/// Normalized level probabilities `W_n = g_n w_n`.
pub fn classical_level_prob<S: Scalar, F: Float>(
    spectrum: &Spectrum<S>,
    k: F,
    temperature: F,
) -> Result<Vec<F>> {
    Ok(classical_log_level_prob(spectrum, k, temperature)?
        .into_iter()
        .map(F::exp)
        .collect())
}

/// Classical entropy in closed form `(⟨E⟩ − F)/T`.
pub fn classical_entropy<S: Scalar, F: Float>(
    spectrum: &Spectrum<S>,
    k: F,
    temperature: F,
) -> Result<F> {
    let probs = classical_level_prob(spectrum, k, temperature)?;
    let mean_energy = spectrum
        .levels()
        .iter()
        .zip(&probs)
        .fold(F::zero(), |acc, (l, &w)| {
            acc + w * cast::<F>(l.energy.as_f64())
        });
    let free = classical_free_energy(spectrum, k, temperature)?;
    Ok((mean_energy - free) / temperature)
}

/// Classical entropy as the Gibbs average `−k Σ g_n w_n ln w_n = Σ W_n (S_n − k ln W_n)`.
pub fn classical_entropy_gibbs<S: Scalar, F: Float>(
    spectrum: &Spectrum<S>,
    k: F,
    temperature: F,
) -> Result<F> {
    let log_w = classical_log_level_prob(spectrum, k, temperature)?;
    Ok(spectrum
        .levels()
        .iter()
        .zip(log_w)
        .fold(F::zero(), |acc, (l, lw)| {
            let w = lw.exp();
            if w.is_zero() {
                acc
            } else {
                acc + w * (cast::<F>(l.entropy.as_f64()) - k * lw)
            }
        }))
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport<F> {
    pub k: F,
    pub temperature: F,
    pub log_z: F,
    pub free_energy: F,
    pub level_probs: Vec<F>,
    pub entropy: F,
}

pub fn oracle_report<S: Scalar, F: Float>(
    spectrum: &Spectrum<S>,
    k: F,
    temperature: F,
) -> Result<OracleReport<F>> {
    Ok(OracleReport {
        k,
        temperature,
        log_z: log_partition(spectrum, k, temperature)?,
        free_energy: classical_free_energy(spectrum, k, temperature)?,
        level_probs: classical_level_prob(spectrum, k, temperature)?,
        entropy: classical_entropy(spectrum, k, temperature)?,
    })
}

/// Quantity whose `k → 0` limit is estimated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    FreeEnergy,
    Entropy,
    /// `k ln W_n`
    LevelLogProb(usize),
    /// `k ln w_n = k ln W_n − S_n`
    StateLogProb(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitEstimate<F> {
    pub values: Vec<F>,
    /// Value at the smallest k.
    pub estimate: F,
    /// Linear Richardson extrapolation to `k = 0` from the last two points.
    pub extrapolated: F,
    /// Empirical order from the last three points; `None` when the last difference vanishes.
    pub order: Option<F>,
    pub converged: bool,
}

/// Geometric schedule `0.1, 0.05, …` down to `1e-4`. Smaller k buys nothing in
/// `f64`: subdominant terms underflow and the limit is already exact.
pub fn default_k_schedule() -> Vec<f64> {
    std::iter::successors(Some(0.1), |k| Some(k * 0.5))
        .take_while(|&k| k >= 1e-4)
        .collect()
}

fn quantity_at<S: Scalar, F: Float>(
    spectrum: &Spectrum<S>,
    quantity: Quantity,
    k: F,
    temperature: F,
) -> Result<F> {
    match quantity {
        Quantity::FreeEnergy => classical_free_energy(spectrum, k, temperature),
        Quantity::Entropy => classical_entropy(spectrum, k, temperature),
        Quantity::LevelLogProb(n) | Quantity::StateLogProb(n) => {
            let level = spectrum.level(n)?;
            let log_w = classical_log_level_prob(spectrum, k, temperature)?[n];
            let level_part = k * log_w;
            Ok(match quantity {
                Quantity::StateLogProb(_) => level_part - cast::<F>(level.entropy.as_f64()),
                _ => level_part,
            })
        }
    }
}

/// Evaluates a classical quantity along a decreasing k schedule and estimates its limit.
pub fn tropical_limit_estimate<S: Scalar, F: Float>(
    spectrum: &Spectrum<S>,
    temperature: F,
    quantity: Quantity,
    schedule: &[F],
) -> Result<LimitEstimate<F>> {
    if schedule.len() < 3 {
        return Err(Error::InvalidSchedule("need at least 3 points".into()));
    }
    if schedule.iter().any(|&k| !(k > F::zero() && k.is_finite()))
        || schedule.windows(2).any(|w| w[1] >= w[0])
    {
        return Err(Error::InvalidSchedule(
            "k values must be positive and strictly decreasing".into(),
        ));
    }
    let values = schedule
        .iter()
        .map(|&k| quantity_at(spectrum, quantity, k, temperature))
        .collect::<Result<Vec<F>>>()?;

    let n = values.len();
    let (qa, qb, qc) = (values[n - 3], values[n - 2], values[n - 1]);
    let (ka, kb, kc) = (schedule[n - 3], schedule[n - 2], schedule[n - 1]);
    let d1 = (qb - qa).abs();
    let d2 = (qc - qb).abs();
    let negligible = cast::<F>(1e-14) * qc.abs().max(F::one());
    let order = (d2 > F::zero() && d1 > F::zero()).then(|| (d1 / d2).ln() / (ka / kb).ln());
    let converged = d2 < d1 || (d1 <= negligible && d2 <= negligible);
    let extrapolated = qc + (qc - qb) * kc / (kb - kc);

    Ok(LimitEstimate {
        estimate: qc,
        extrapolated,
        order,
        converged,
        values,
    })
}

/// One measured invariant from [`check_suite`].
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub max_error: f64,
    pub tolerance: f64,
    pub points: usize,
}

impl CheckOutcome {
    fn new(name: &str, errors: &[(f64, f64)]) -> Self {
        let passed = errors.iter().all(|(e, tol)| e <= tol);
        let (max_error, tolerance) = errors
            .iter()
            .copied()
            .fold((0.0, f64::INFINITY), |(me, mt), (e, t)| {
                (me.max(e), mt.min(t))
            });
        CheckOutcome {
            name: name.to_string(),
            passed,
            max_error,
            tolerance: if errors.is_empty() { 0.0 } else { tolerance },
            points: errors.len(),
        }
    }
}

/// Temperatures strictly inside each segment of an envelope.
pub fn segment_interior_samples<S: Scalar>(envelope: &PiecewiseLinear<S>) -> Vec<S> {
    let two = S::one() + S::one();
    envelope
        .segments
        .iter()
        .map(|seg| match (&seg.lower, &seg.upper) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => (a.clone() + b.clone()) / two.clone(),
            (Endpoint::Finite(a), Endpoint::PosInfinity) => {
                if a.is_zero() {
                    S::one()
                } else {
                    a.clone() * two.clone()
                }
            }
            (Endpoint::NegInfinity, Endpoint::Finite(b)) => {
                if b.is_zero() {
                    -S::one()
                } else {
                    b.clone() * two.clone()
                }
            }
            _ => unreachable!("segments are clipped to a half-line"),
        })
        .collect()
}

/// Runs the oracle-versus-tropical invariants on one spectrum.
///
/// `k` drives the free-energy and probability checks; singular points are
/// probed at `k = 1e-4` and the entropy derivative at `k = 1e-3`.
pub fn check_suite<S: Scalar>(spectrum: &Spectrum<S>, k: f64) -> Result<Vec<CheckOutcome>> {
    let n = spectrum.len() as f64;
    let envelopes = [
        build_envelope(spectrum, Domain::Positive),
        build_envelope(spectrum, Domain::Negative),
    ];
    let mut free = Vec::new();
    let mut prob = Vec::new();
    let mut entropy_fd = Vec::new();
    let mut norm = Vec::new();
    let mut singular_w = Vec::new();
    let mut singular_s = Vec::new();

    for env in &envelopes {
        for t in segment_interior_samples(env) {
            let tf = t.as_f64();
            let f_tr = eval_free_energy(env, &t)?.as_f64();
            let f_k = classical_free_energy(spectrum, k, tf)?;
            let bound = k * tf.abs() * n.ln() + 1e-12;
            free.push(((f_k - f_tr).abs(), bound));

            let log_w = classical_log_level_prob(spectrum, k, tf)?;
            for (i, lw) in log_w.iter().enumerate() {
                let w_tr = level_log_prob(spectrum, env, &t, i)?.as_f64();
                prob.push(((k * lw - w_tr).abs(), k * n.ln() + 1e-12));
            }
            let total: f64 = classical_level_prob(spectrum, k, tf)?.iter().sum();
            norm.push(((total - 1.0).abs(), 1e-12));

            let kd = k.max(1e-3);
            let h = 1e-6 * tf.abs();
            let s_fd = -(classical_free_energy(spectrum, kd, tf + h)?
                - classical_free_energy(spectrum, kd, tf - h)?)
                / (2.0 * h);
            let s_cl = classical_entropy(spectrum, kd, tf)?;
            entropy_fd.push(((s_fd - s_cl).abs(), 1e-6 * s_cl.abs().max(1.0)));
        }
        for bp in &env.breakpoints {
            let tf = bp.temperature.as_f64();
            let m = bp.minimizing_set.len() as f64;
            let probs = classical_level_prob(spectrum, 1e-4, tf)?;
            for &i in &bp.minimizing_set {
                singular_w.push(((probs[i] - 1.0 / m).abs(), 1e-6));
            }
            let report = observables_at(spectrum, env, &bp.temperature)?;
            let s_cl = classical_entropy(spectrum, 1e-4, tf)?;
            singular_s.push(((s_cl - report.entropy.as_f64()).abs(), 1e-4));
        }
    }

    Ok(vec![
        CheckOutcome::new("free-energy-limit", &free),
        CheckOutcome::new("level-logprob-limit", &prob),
        CheckOutcome::new("normalization", &norm),
        CheckOutcome::new("entropy-derivative", &entropy_fd),
        CheckOutcome::new("singular-probabilities", &singular_w),
        CheckOutcome::new("singular-entropy", &singular_s),
    ])
}
