use thiserror::Error;

use crate::Metric;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a power of two")]
    NotPowerOfTwo(u64),

    #[error("exponent {0} outside the supported range 1..={max}", max = crate::MAX_EXPONENT)]
    ExponentOutOfRange(u32),

    #[error("residue {value} is outside [0, {modulus})")]
    ResidueOutOfRange { value: u64, modulus: u32 },

    #[error("bit value {0} is not 0 or 1")]
    InvalidBit(u32),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("{metric} weight is not defined over Z_{modulus}")]
    MetricUnsupported { metric: Metric, modulus: u32 },

    #[error("binary word of odd length {0} has no preimage under phi")]
    OddLength(usize),

    #[error("invalid map parameter: {0}")]
    InvalidMap(String),

    #[error("{0}")]
    Domain(String),

    #[error("enumeration of {requested} information words exceeds the cap of {cap}")]
    Capacity { requested: u128, cap: u64 },

    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
}
