use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("spectrum has no levels")]
    EmptySpectrum,

    #[error("two levels share the energy {energy}")]
    DuplicateEnergy { energy: String },

    #[error("level {index} has a non-finite value")]
    NonFiniteValue { index: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("temperature {temperature} is outside the {domain} domain")]
    OutOfDomain { temperature: String, domain: String },

    #[error("level index {index} out of range for {len} levels")]
    BadIndex { index: usize, len: usize },

    #[error("temperature must be nonzero")]
    ZeroTemperature,

    #[error("levels are identical (same energy and entropy)")]
    IdenticalLevels,

    #[error("levels have equal entropy; no finite transition temperature")]
    ParallelLevels,

    #[error("Boltzmann constant must be positive and finite")]
    NonPositiveK,

    #[error("invalid k schedule: {0}")]
    InvalidSchedule(String),

    #[error("generator is bounded below")]
    BoundedBelowSpectrum,

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable module-qualified code, used by the CLI in error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptySpectrum => "spectrum.empty",
            Error::DuplicateEnergy { .. } => "spectrum.duplicate_energy",
            Error::NonFiniteValue { .. } => "spectrum.non_finite",
            Error::Parse { .. } => "spectrum.parse",
            Error::OutOfDomain { .. } => "envelope.out_of_domain",
            Error::BadIndex { .. } => "observables.bad_index",
            Error::ZeroTemperature => "oracle.zero_temperature",
            Error::IdenticalLevels => "envelope.identical_levels",
            Error::ParallelLevels => "observables.parallel_levels",
            Error::NonPositiveK => "oracle.non_positive_k",
            Error::InvalidSchedule(_) => "oracle.invalid_schedule",
            Error::BoundedBelowSpectrum => "limits.bounded_below",
            Error::InvalidGenerator(_) => "limits.invalid_generator",
            Error::Io(_) => "cli.io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
