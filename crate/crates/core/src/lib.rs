//! Vertex results for interval polynomials and interval transfer functions:
//! robust Hurwitz stability, value-set extrema of `g(jω)/f(jω)` over a box of
//! coefficients, strict positive realness and its index, and a brute-force
//! oracle to falsify all of them.
//!
//! Coefficients are stored in ascending powers throughout.

// `!(a < b)` is used on purpose so that NaN falls into the failing branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod interval;
pub mod oracle;
pub mod poly;
pub mod spr;
pub mod tolerance;

pub use error::{Error, Result};
pub use interval::{
    index_set, Bound, IndexSet, IndexSetName, IntervalPolynomial, RealInterval, ValueSetRectangle, VertexIndexTuple,
};
pub use oracle::{compare_vertex_vs_oracle, AnalysisKind, ComparisonReport, SamplingPlan, SamplingStrategy, Verdict};
pub use poly::{Complex, ComplexPolynomial, RealPolynomial};
pub use spr::{
    BandSpec, CertificationStatus, ExtremumReport, Gamma1Class, IntervalTransferFunction, Quantity, SprIndexResult,
};
pub use tolerance::Tolerances;
