use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::Serialize;

use super::{degree_by_tolerance, ComplexPolynomial};
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Real polynomial with coefficients in ascending degree.
///
/// Coefficients are stored untrimmed; [`RealPolynomial::degree`] reports the
/// index of the highest coefficient that survives the relative zero tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        if let Some(&bad) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(Error::NonFinite(bad));
        }
        Ok(Self { coeffs })
    }

    /// Builds from trusted, finite coefficients. Empty input becomes the zero polynomial.
    pub(crate) fn from_vec(mut coeffs: Vec<f64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        debug_assert!(coeffs.iter().all(|c| c.is_finite()));
        Self { coeffs }
    }

    pub fn constant(c: f64) -> Self {
        Self::from_vec(vec![c])
    }

    pub fn zero() -> Self {
        Self::constant(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.degree_with(Tolerances::DEFAULT_ZERO)
    }

    pub fn degree_with(&self, zero_tol: f64) -> usize {
        degree_by_tolerance(self.coeffs.iter().map(|c| c.abs()), zero_tol)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Coefficient at the reported degree.
    pub fn leading(&self) -> f64 {
        self.coeffs[self.degree()]
    }

    /// Drops coefficients above the reported degree.
    pub fn trimmed(&self) -> Self {
        Self::from_vec(self.coeffs[..=self.degree()].to_vec())
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Sum of `|c_k| x^k`, the natural magnitude scale for `eval(x)` at `x ≥ 0`.
    pub fn abs_eval(&self, x: f64) -> f64 {
        let x = x.abs();
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c.abs())
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// `p(jω)` by direct Horner evaluation.
    pub fn eval_at_jomega(&self, omega: f64) -> Complex64 {
        self.eval_complex(Complex64::new(0.0, omega))
    }

    pub fn derivative(&self) -> Self {
        Self::from_vec(self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| k as f64 * c).collect())
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::from_vec(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::from_vec(self.coeffs.iter().enumerate().map(|(k, &c)| if k % 2 == 1 { -c } else { c }).collect())
    }

    /// `x · p(x)`.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(0.0);
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_vec(coeffs)
    }

    pub fn to_complex(&self) -> ComplexPolynomial {
        ComplexPolynomial::from_vec(self.coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn roots(&self) -> Result<Vec<Complex64>> {
        super::roots(&self.to_complex())
    }
}

fn zip_with(a: &[f64], b: &[f64], op: impl Fn(f64, f64) -> f64) -> Vec<f64> {
    let n = a.len().max(b.len());
    (0..n).map(|k| op(a.get(k).copied().unwrap_or(0.0), b.get(k).copied().unwrap_or(0.0))).collect()
}

impl Add for &RealPolynomial {
    type Output = RealPolynomial;
    fn add(self, rhs: &RealPolynomial) -> RealPolynomial {
        RealPolynomial::from_vec(zip_with(&self.coeffs, &rhs.coeffs, |x, y| x + y))
    }
}

impl Sub for &RealPolynomial {
    type Output = RealPolynomial;
    fn sub(self, rhs: &RealPolynomial) -> RealPolynomial {
        RealPolynomial::from_vec(zip_with(&self.coeffs, &rhs.coeffs, |x, y| x - y))
    }
}

impl Mul for &RealPolynomial {
    type Output = RealPolynomial;
    fn mul(self, rhs: &RealPolynomial) -> RealPolynomial {
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPolynomial::from_vec(out)
    }
}

impl Neg for &RealPolynomial {
    type Output = RealPolynomial;
    fn neg(self) -> RealPolynomial {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert_eq!(RealPolynomial::new(vec![]), Err(Error::EmptyPolynomial));
        assert!(matches!(RealPolynomial::new(vec![1.0, f64::NAN]), Err(Error::NonFinite(_))));
    }

    #[test]
    fn degree_ignores_relative_noise() {
        let p = RealPolynomial::new(vec![1.0, 2.0, 1e-14]).unwrap();
        assert_eq!(p.degree(), 1);
        assert_eq!(p.trimmed().coeffs(), &[1.0, 2.0]);
        assert_eq!(RealPolynomial::zero().degree(), 0);
    }

    #[test]
    fn arithmetic() {
        let a = RealPolynomial::new(vec![1.0, 1.0]).unwrap();
        let b = RealPolynomial::new(vec![-1.0, 1.0]).unwrap();
        assert_eq!((&a * &b).coeffs(), &[-1.0, 0.0, 1.0]);
        assert_eq!((&a - &a).degree(), 0);
        assert!((&a - &a).is_zero());
        assert_eq!((&a + &b).coeffs(), &[0.0, 2.0]);
        assert_eq!(a.shift_up().coeffs(), &[0.0, 1.0, 1.0]);
        assert_eq!(a.reflect().coeffs(), &[1.0, -1.0]);
        assert_eq!((&a * &b).derivative().coeffs(), &[0.0, 2.0]);
    }
}
