use std::ops::{Add, Mul};

use num_complex::Complex64;
use serde::Serialize;

use super::degree_by_tolerance;
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Complex polynomial with coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexPolynomial {
    #[serde(serialize_with = "serialize_coeffs")]
    coeffs: Vec<Complex64>,
}

fn serialize_coeffs<S: serde::Serializer>(c: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(c.len()))?;
    for z in c {
        seq.serialize_element(&[z.re, z.im])?;
    }
    seq.end()
}

impl ComplexPolynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        for z in &coeffs {
            if !z.re.is_finite() {
                return Err(Error::NonFinite(z.re));
            }
            if !z.im.is_finite() {
                return Err(Error::NonFinite(z.im));
            }
        }
        Ok(Self { coeffs })
    }

    pub(crate) fn from_vec(mut coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    /// `c1·s + c0`.
    pub fn first_order(c1: Complex64, c0: Complex64) -> Self {
        Self::from_vec(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.degree_with(Tolerances::DEFAULT_ZERO)
    }

    pub fn degree_with(&self, zero_tol: f64) -> usize {
        degree_by_tolerance(self.coeffs.iter().map(|c| c.norm()), zero_tol)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        Self::from_vec(self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect())
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::from_vec(self.coeffs.iter().map(|&c| c * k).collect())
    }
}

impl Add for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn add(self, rhs: &ComplexPolynomial) -> ComplexPolynomial {
        let zero = Complex64::new(0.0, 0.0);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPolynomial::from_vec(
            (0..n)
                .map(|k| self.coeffs.get(k).copied().unwrap_or(zero) + rhs.coeffs.get(k).copied().unwrap_or(zero))
                .collect(),
        )
    }
}

impl Mul for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn mul(self, rhs: &ComplexPolynomial) -> ComplexPolynomial {
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ComplexPolynomial::from_vec(out)
    }
}
