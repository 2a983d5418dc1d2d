//! Tropical (k → 0) limit of equilibrium statistical mechanics.
//!
//! A spectrum of energy levels `(E_n, S_n)`, with `S_n = k ln g_n` kept finite,
//! has a classical free energy `F = -kT ln Σ exp(-(E_n - T S_n)/kT)`. As the
//! Boltzmann constant goes to zero the sum collapses to a max-plus sum and the
//! free energy becomes the piecewise-linear envelope of the level lines
//! `F_n(T) = E_n - T S_n`. This crate builds that envelope exactly, derives the
//! tropical entropy, energy and Gibbs log-probabilities from it, finds
//! limiting temperatures of infinite spectra, and checks everything against a
//! finite-k partition-function oracle.
//!
//! Every numeric routine is generic over [`Scalar`], so the same code runs on
//! `f64`, `f32` and exact rationals. The aliases below fix the common choices.

pub mod cli;
pub mod envelope;
mod error;
pub mod limits;
pub mod observables;
pub mod oracle;
pub mod scalar;
pub mod spectrum;
pub mod tropical;

pub use envelope::{
    build_envelope, eval_free_energy, latent_heat, minimizing_set, transition_temperature,
    Breakpoint, Domain, Endpoint, PiecewiseLinear, Segment, TransitionTemperature,
};
pub use error::{Error, Result};
pub use limits::{
    equilibrium_intervals, lower_limiting_temperature, probe_equilibrium,
    upper_limiting_temperature, AffineTail, EquilibriumStatus, Generator, GeneratorSpec, TailLimit,
    Verdict, VerdictInterval,
};
pub use observables::{
    level_log_prob, log_prob_gap, observables_at, residual_entropy, state_log_prob,
    subleading_level_logprob, LevelRecord, ObservablesReport, Side,
};
pub use scalar::{NumberKind, Scalar};
pub use spectrum::{level_free_energy, make_spectrum, parse_spectrum, Format, Level, Spectrum};
pub use tropical::{t_add, t_mul, t_sum, TropicalReal};

/// Exact rational scalar with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Exact rational scalar on machine integers; faster, panics on overflow in debug builds.
pub type Rational64 = num_rational::Rational64;

pub type ExactSpectrum = Spectrum<Rational>;
pub type FloatSpectrum = Spectrum<f64>;
pub type ExactEnvelope = PiecewiseLinear<Rational>;
pub type FloatEnvelope = PiecewiseLinear<f64>;
pub type ExactTropical = TropicalReal<Rational>;
pub type FloatTropical = TropicalReal<f64>;
