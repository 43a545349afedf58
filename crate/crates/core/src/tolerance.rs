use serde::{Deserialize, Serialize};

/// Numerical margins used to turn strict inequalities into floating-point verdicts.
///
/// `stability_margin_tol` is absolute: a root counts as stable only when its real
/// part is below `-stability_margin_tol`. `positivity_tol` is the margin for
/// "`> 0`" verdicts. `zero_tol` is relative to the largest coefficient magnitude
/// and decides the reported degree of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    pub stability_margin_tol: f64,
    pub positivity_tol: f64,
    pub zero_tol: f64,
}

impl Tolerances {
    pub const DEFAULT_STABILITY_MARGIN: f64 = 1e-9;
    pub const DEFAULT_POSITIVITY: f64 = 1e-12;
    pub const DEFAULT_ZERO: f64 = 1e-12;
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            stability_margin_tol: Self::DEFAULT_STABILITY_MARGIN,
            positivity_tol: Self::DEFAULT_POSITIVITY,
            zero_tol: Self::DEFAULT_ZERO,
        }
    }
}
