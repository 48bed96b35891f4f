use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// A comparison or radius target could not be met at the given precision.
    #[error("precision insufficient at {bits} bits: {what}")]
    PrecisionInsufficient { what: String, bits: u32 },

    #[error("unsupported discriminant {0}: only 5 and -3 are tabulated")]
    UnsupportedDiscriminant(i64),

    #[error("equation order of {label} is not provably maximal (polynomial discriminant {discriminant})")]
    EquationOrderNotMaximal { label: String, discriminant: String },

    /// The Euler-product tail bound is too large to give a usable enclosure.
    #[error("Euler product tail bound too large for s = {s} with prime cutoff {cutoff}")]
    TailBound { s: u32, cutoff: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal self-check between two independent routes failed.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn precision(what: impl Into<String>, bits: u32) -> Self {
        Error::PrecisionInsufficient {
            what: what.into(),
            bits,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn is_precision(&self) -> bool {
        matches!(self, Error::PrecisionInsufficient { .. })
    }
}
