//! Frequency-response extrema of interval transfer functions, strict positive
//! realness, the SPR index and the absolute-stability sector.

mod family;
mod index;
mod infimum;
mod pointwise;

pub use family::{closed_loop_spr, closed_loop_vertex, family_spr, family_spr_verdict, SprVerdict};
pub use index::{
    absolute_stability_sector, spr_index, spr_index_with, Gamma1Class, SectorBound, SectorLimit, SprIndexResult,
};
pub use infimum::{response_parts, spr_check_single, vertex_pair_infimum, FrequencyRange, PairInfimum};
pub use pointwise::{
    band_infimum, band_infimum_with, ensure_band_zero_exclusion, pointwise_extremum, pointwise_extremum_with,
    pointwise_positivity,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{IntervalPolynomial, VertexIndexTuple};
use crate::poly::RealPolynomial;

/// `g(s)/f(s)` with `g` and `f` ranging over independent interval families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalTransferFunction {
    pub num: IntervalPolynomial,
    pub den: IntervalPolynomial,
}

impl IntervalTransferFunction {
    /// Any degrees are accepted; analyses over all frequencies treat an
    /// improper family (`deg num > deg den`) through its `ω → ∞` limit.
    pub fn new(num: IntervalPolynomial, den: IntervalPolynomial) -> Self {
        Self { num, den }
    }

    pub fn from_bounds(num: &[(f64, f64)], den: &[(f64, f64)]) -> Result<Self> {
        Ok(Self::new(IntervalPolynomial::from_bounds(num)?, IntervalPolynomial::from_bounds(den)?))
    }

    pub fn point(num: &RealPolynomial, den: &RealPolynomial) -> Self {
        Self::new(IntervalPolynomial::point(num), IntervalPolynomial::point(den))
    }

    /// Numerator vertex `g_{i1 j1}` and denominator vertex `f_{i2 j2}`.
    pub fn vertex_pair(&self, t: &VertexIndexTuple) -> (RealPolynomial, RealPolynomial) {
        (self.num.vertex(t.i1, t.j1), self.den.vertex(t.i2, t.j2))
    }

    pub fn with_negated_numerator(&self) -> Self {
        Self::new(self.num.negated(), self.den.clone())
    }

    pub fn is_point(&self) -> bool {
        self.num.is_point() && self.den.is_point()
    }
}

/// Closed frequency band `[w1, w2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BandSpec {
    w1: f64,
    w2: f64,
}

impl BandSpec {
    pub fn new(w1: f64, w2: f64) -> Result<Self> {
        if !(w1.is_finite() && w2.is_finite() && w1 <= w2) {
            return Err(Error::InvalidBand { w1, w2 });
        }
        Ok(Self { w1, w2 })
    }

    pub fn w1(&self) -> f64 {
        self.w1
    }

    pub fn w2(&self) -> f64 {
        self.w2
    }

    pub fn contains(&self, omega: f64) -> bool {
        self.w1 <= omega && omega <= self.w2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Quantity {
    MinRe,
    MaxRe,
    MinIm,
    MaxIm,
}

impl Quantity {
    pub const ALL: [Quantity; 4] = [Quantity::MinRe, Quantity::MaxRe, Quantity::MinIm, Quantity::MaxIm];

    pub fn is_max(self) -> bool {
        matches!(self, Quantity::MaxRe | Quantity::MaxIm)
    }
}

impl std::str::FromStr for Quantity {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "min_re" => Ok(Quantity::MinRe),
            "max_re" => Ok(Quantity::MaxRe),
            "min_im" => Ok(Quantity::MinIm),
            "max_im" => Ok(Quantity::MaxIm),
            _ => Err(format!("unknown quantity {s:?} (expected min_re, max_re, min_im or max_im)")),
        }
    }
}

/// Whether a reported extremum is the family extremum or only a bound on it.
///
/// `UpperBoundOnly` bounds a minimum from above; for the `MAX_*` quantities it
/// bounds the maximum from below. Either way the value is realized by a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertificationStatus {
    CertifiedExact,
    UpperBoundOnly,
    ZeroInclusionFail,
}

impl CertificationStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::CertifiedExact => "CERTIFIED_EXACT",
            Self::UpperBoundOnly => "UPPER_BOUND_ONLY",
            Self::ZeroInclusionFail => "ZERO_INCLUSION_FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremumReport {
    pub quantity: Quantity,
    /// `NaN` (serialized as `null`) when no value could be computed.
    pub value: f64,
    pub status: CertificationStatus,
    pub arg_tuple: Option<VertexIndexTuple>,
    pub arg_omega: Option<f64>,
    pub attained: bool,
    /// Extremum over all sixteen corner pairs; pointwise reports only.
    pub corner_extremum: Option<f64>,
}

impl ExtremumReport {
    fn zero_inclusion(quantity: Quantity, omega: f64) -> Self {
        Self {
            quantity,
            value: f64::NAN,
            status: CertificationStatus::ZeroInclusionFail,
            arg_tuple: None,
            arg_omega: Some(omega),
            attained: false,
            corner_extremum: None,
        }
    }

    pub fn is_certified(&self) -> bool {
        self.status == CertificationStatus::CertifiedExact
    }
}
