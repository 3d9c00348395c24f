use thiserror::Error;

use crate::text::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("field degree {0} is outside the supported range 1..=63")]
    UnsupportedFieldDegree(u32),

    #[error("value {bits} is not an element of F_2^{m}")]
    NotInField { bits: u64, m: u32 },

    #[error("operands live in different fields (F_2^{left} vs F_2^{right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("exhaustive work of 2^{requested} exceeds the resource cap 2^{cap}")]
    CapExceeded { requested: u64, cap: u32 },

    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCapExceeded { degree: u64, cap: u64 },

    #[error("polynomial must be non-constant")]
    ConstantPolynomial,

    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("the A-polynomial conditions are undefined for f = T")]
    MonomialT,

    #[error("seed {seed} is not an A-polynomial")]
    NotAPolynomial { seed: String },

    #[error("iterate f_{step} failed verification: {reason}")]
    IterationFailed { step: usize, reason: String },

    #[error("{what}: {value} is not divisible by {divisor}")]
    Indivisible {
        what: &'static str,
        value: String,
        divisor: String,
    },

    #[error("the identity requires a nontrivial character")]
    TrivialCharacter,

    #[error("point count mismatch over F_2^{rn}: scanned {scanned}, zeta predicts {predicted}")]
    ZetaMismatch {
        rn: u64,
        scanned: String,
        predicted: String,
    },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn indivisible(
        what: &'static str,
        value: impl ToString,
        divisor: impl ToString,
    ) -> Self {
        Error::Indivisible {
            what,
            value: value.to_string(),
            divisor: divisor.to_string(),
        }
    }
}

/// Upper bound on exhaustive work, expressed as log2 of the element count.
///
/// A tower F_{q^n} with q = 2^r is admissible iff r*n <= cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceCap(u32);

impl ResourceCap {
    pub const DEFAULT_BITS: u32 = 24;

    pub const fn new(bits: u32) -> Self {
        ResourceCap(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn check(self, r: u32, n: u32) -> Result<()> {
        let requested = r as u64 * n as u64;
        if requested > self.0 as u64 {
            return Err(Error::CapExceeded {
                requested,
                cap: self.0,
            });
        }
        Ok(())
    }
}

impl Default for ResourceCap {
    fn default() -> Self {
        ResourceCap(Self::DEFAULT_BITS)
    }
}
