//! Fixed polynomials: arithmetic, evaluation on the imaginary axis, roots and
//! Hurwitz tests.

mod complex;
mod hurwitz;
mod real;
mod roots;

pub use complex::ComplexPolynomial;
pub use hurwitz::{
    first_order_complex_hurwitz, hurwitz_complex, hurwitz_real, max_root_real_part, roots_hurwitz, routh_hurwitz,
    segment_stable_endpoints,
};
pub use num_complex::Complex64 as Complex;
pub use real::RealPolynomial;
pub use roots::roots;

use serde::Serialize;

/// `p(s) = alpha(s²) + s·beta(s²)`, both parts as polynomials in `u = s²`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvenOddParts {
    pub alpha: RealPolynomial,
    pub beta: RealPolynomial,
}

pub fn even_odd_split(p: &RealPolynomial) -> EvenOddParts {
    let c = p.coeffs();
    EvenOddParts {
        alpha: RealPolynomial::from_vec(c.iter().step_by(2).copied().collect()),
        beta: RealPolynomial::from_vec(c.iter().skip(1).step_by(2).copied().collect()),
    }
}

/// `p(jω)`.
pub fn eval_at_jomega(p: &RealPolynomial, omega: f64) -> Complex {
    p.eval_at_jomega(omega)
}

pub(crate) fn degree_by_tolerance(magnitudes: impl Iterator<Item = f64> + Clone, zero_tol: f64) -> usize {
    let max = magnitudes.clone().fold(0.0_f64, f64::max);
    if max == 0.0 {
        return 0;
    }
    magnitudes.enumerate().filter(|&(_, m)| m > zero_tol * max).map(|(k, _)| k).last().unwrap_or(0)
}
