use thiserror::Error;

/// Errors raised by radix validation, generator construction and the
/// internal consistency checks of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrayError {
    #[error("radix {radix} at position {position} is below 2")]
    RadixTooSmall { position: usize, radix: u32 },

    #[error("{algorithm} algorithm requires odd radix (got {radix} at position {position})")]
    OddRadixRequired {
        algorithm: &'static str,
        position: usize,
        radix: u32,
    },

    #[error("{algorithm} algorithm requires even radix (got {radix} at position {position})")]
    EvenRadixRequired {
        algorithm: &'static str,
        position: usize,
        radix: u32,
    },

    #[error("{algorithm} algorithm requires a uniform radix vector")]
    UniformRadixRequired { algorithm: &'static str },

    #[error("{algorithm} algorithm requires all radixes equal to {radix}")]
    FixedRadixRequired { algorithm: &'static str, radix: u32 },

    #[error("{algorithm} algorithm requires at least one digit")]
    EmptyWord { algorithm: &'static str },

    #[error("radix {radix} cannot be rendered as a single character")]
    UnsupportedFormat { radix: u32 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A generator or board broke one of its own invariants. Never expected
    /// in a correct run; the harness reports it as a failed check.
    #[error("contract violation: {0}")]
    ContractViolation(String),
}

pub type Result<T, E = GrayError> = std::result::Result<T, E>;
