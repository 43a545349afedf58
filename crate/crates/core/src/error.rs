use thiserror::Error;

/// Errors raised by the analyses in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value {0} in input")]
    NonFinite(f64),
    #[error("empty coefficient list")]
    EmptyPolynomial,
    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("polynomial has degree zero after trimming")]
    InvalidDegree,
    #[error("leading coefficient is zero or its box contains zero")]
    DegenerateLeadingCoefficient,
    #[error("degree drops along the segment h0 + λ(αs + β)")]
    DegreeDropOnSegment,
    #[error("leading coefficient interval contains zero; degree may drop inside the family")]
    DegreeDropPossible,
    #[error("leading coefficients of the closed-loop denominator can cancel")]
    DegreeDrop,
    #[error("Routh table and root locations disagree (max root real part {max_real_part:e})")]
    NumericallyMarginal { max_real_part: f64 },
    #[error("shift must be positive, got {0}")]
    InvalidShift(f64),
    #[error("rotation must be non-zero")]
    InvalidRotation,
    #[error("gain must be positive and finite, got {0}")]
    InvalidGamma(f64),
    #[error("invalid band [{w1}, {w2}]")]
    InvalidBand { w1: f64, w2: f64 },
    #[error("value set of the denominator family contains 0 at ω = {omega}")]
    ZeroInclusion { omega: f64 },
    #[error("denominator vanishes on the imaginary axis at ω = {omega}")]
    PoleOnAxis { omega: f64 },
    #[error("denominator vertex {vertex} is not Hurwitz")]
    DenominatorNotHurwitz { vertex: String },
    #[error("{count} corner combinations exceed the cap of {cap}")]
    TooManyCorners { count: u128, cap: u128 },
    #[error("invalid sampling plan: {0}")]
    InvalidPlan(String),
    #[error("eigenvalue iteration did not converge for a degree-{0} polynomial")]
    RootFindingFailed(usize),
    #[error("invalid vertex index tuple {0:?}")]
    InvalidTuple(String),
}

pub type Result<T> = std::result::Result<T, Error>;
