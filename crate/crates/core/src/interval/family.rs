use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Complex, RealPolynomial};
use crate::tolerance::Tolerances;

use super::Bound;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "(f64, f64)", into = "(f64, f64)")]
pub struct RealInterval {
    lo: f64,
    hi: f64,
}

impl RealInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() {
            return Err(Error::NonFinite(lo));
        }
        if !hi.is_finite() {
            return Err(Error::NonFinite(hi));
        }
        if lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: f64) -> Result<Self> {
        Self::new(x, x)
    }

    pub(crate) fn unchecked(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn bound(&self, b: Bound) -> f64 {
        match b {
            Bound::Lower => self.lo,
            Bound::Upper => self.hi,
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn neg(&self) -> Self {
        Self::unchecked(-self.hi, -self.lo)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::unchecked(self.lo + other.lo, self.hi + other.hi)
    }

    /// `k·[lo, hi]` for any real `k`.
    pub fn scale(&self, k: f64) -> Self {
        let (a, b) = (k * self.lo, k * self.hi);
        Self::unchecked(a.min(b), a.max(b))
    }
}

impl TryFrom<(f64, f64)> for RealInterval {
    type Error = Error;
    fn try_from((lo, hi): (f64, f64)) -> Result<Self> {
        Self::new(lo, hi)
    }
}

impl From<RealInterval> for (f64, f64) {
    fn from(i: RealInterval) -> Self {
        (i.lo, i.hi)
    }
}

impl TryFrom<Vec<RealInterval>> for IntervalPolynomial {
    type Error = Error;
    fn try_from(v: Vec<RealInterval>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<IntervalPolynomial> for Vec<RealInterval> {
    fn from(p: IntervalPolynomial) -> Self {
        p.coeffs
    }
}

/// Polynomial family whose coefficients vary independently over closed intervals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<RealInterval>", into = "Vec<RealInterval>")]
pub struct IntervalPolynomial {
    coeffs: Vec<RealInterval>,
}

impl IntervalPolynomial {
    pub fn new(coeffs: Vec<RealInterval>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(Self { coeffs })
    }

    /// From `(lo, hi)` pairs in ascending degree.
    pub fn from_bounds(bounds: &[(f64, f64)]) -> Result<Self> {
        Self::new(bounds.iter().map(|&(lo, hi)| RealInterval::new(lo, hi)).collect::<Result<_>>()?)
    }

    /// The one-member family `{p}`.
    pub fn point(p: &RealPolynomial) -> Self {
        Self { coeffs: p.coeffs().iter().map(|&c| RealInterval::unchecked(c, c)).collect() }
    }

    pub fn coeffs(&self) -> &[RealInterval] {
        &self.coeffs
    }

    pub fn nominal_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> RealInterval {
        self.coeffs[self.nominal_degree()]
    }

    /// Coefficient interval at `k`, `[0, 0]` beyond the nominal degree.
    pub fn coeff_or_zero(&self, k: usize) -> RealInterval {
        self.coeffs.get(k).copied().unwrap_or(RealInterval::unchecked(0.0, 0.0))
    }

    pub fn is_point(&self) -> bool {
        self.coeffs.iter().all(RealInterval::is_degenerate)
    }

    pub fn nondegenerate_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_degenerate()).count()
    }

    /// `{-p}`: each interval becomes `[-hi, -lo]`.
    pub fn negated(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(RealInterval::neg).collect() }
    }

    /// Whether `p` lies in the family coefficientwise (missing coefficients read as 0).
    pub fn contains(&self, p: &RealPolynomial) -> bool {
        let n = self.coeffs.len().max(p.coeffs().len());
        (0..n).all(|k| self.coeff_or_zero(k).contains(p.coeffs().get(k).copied().unwrap_or(0.0)))
    }

    pub fn extremal_parts(&self) -> ExtremalParts {
        extremal_parts(self)
    }

    pub fn vertex(&self, even: Bound, odd: Bound) -> RealPolynomial {
        vertex_polynomial(self, even, odd)
    }
}

/// The four Kharitonov extremal even/odd parts, each a polynomial in `u = s²`.
///
/// `alpha1` takes `lo, hi, lo, hi, …` over the even coefficients `a0, a2, a4, …`
/// and `alpha2` the complement; `beta1`/`beta2` do the same over `a1, a3, …`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalParts {
    pub alpha1: RealPolynomial,
    pub alpha2: RealPolynomial,
    pub beta1: RealPolynomial,
    pub beta2: RealPolynomial,
}

impl ExtremalParts {
    pub fn alpha(&self, b: Bound) -> &RealPolynomial {
        match b {
            Bound::Lower => &self.alpha1,
            Bound::Upper => &self.alpha2,
        }
    }

    pub fn beta(&self, b: Bound) -> &RealPolynomial {
        match b {
            Bound::Lower => &self.beta1,
            Bound::Upper => &self.beta2,
        }
    }
}

fn alternate(intervals: impl Iterator<Item = RealInterval>, start: Bound) -> RealPolynomial {
    RealPolynomial::from_vec(
        intervals
            .enumerate()
            .map(|(p, iv)| {
                let b = if p % 2 == 0 { start } else { start.flip() };
                iv.bound(b)
            })
            .collect(),
    )
}

pub fn extremal_parts(ip: &IntervalPolynomial) -> ExtremalParts {
    let even = || ip.coeffs.iter().copied().step_by(2);
    let odd = || ip.coeffs.iter().copied().skip(1).step_by(2);
    ExtremalParts {
        alpha1: alternate(even(), Bound::Lower),
        alpha2: alternate(even(), Bound::Upper),
        beta1: alternate(odd(), Bound::Lower),
        beta2: alternate(odd(), Bound::Upper),
    }
}

/// Kharitonov vertex `alpha^(i)(s²) + s·beta^(j)(s²)` with `i = even`, `j = odd`.
pub fn vertex_polynomial(ip: &IntervalPolynomial, even: Bound, odd: Bound) -> RealPolynomial {
    RealPolynomial::from_vec(
        ip.coeffs
            .iter()
            .enumerate()
            .map(|(k, iv)| {
                let (b, p) = if k % 2 == 0 { (even, k / 2) } else { (odd, (k - 1) / 2) };
                iv.bound(if p % 2 == 0 { b } else { b.flip() })
            })
            .collect(),
    )
}

/// Rectangle `{x + jy : x ∈ re, y ∈ im}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValueSetRectangle {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ValueSetRectangle {
    pub fn contains(&self, z: Complex) -> bool {
        self.re.contains(z.re) && self.im.contains(z.im)
    }

    pub fn as_box(&self) -> ComplexBox {
        ComplexBox { c: self.re, d: self.im }
    }
}

/// Interval complex number `c + jd`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexBox {
    pub c: RealInterval,
    pub d: RealInterval,
}

impl ComplexBox {
    pub fn new(c: RealInterval, d: RealInterval) -> Self {
        Self { c, d }
    }

    pub fn point(z: Complex) -> Result<Self> {
        Ok(Self::new(RealInterval::point(z.re)?, RealInterval::point(z.im)?))
    }

    pub fn corner(&self, re: Bound, im: Bound) -> Complex {
        Complex::new(self.c.bound(re), self.d.bound(im))
    }

    pub fn contains_zero(&self) -> bool {
        self.c.contains_zero() && self.d.contains_zero()
    }

    /// `-B`.
    pub fn negated(&self) -> Self {
        Self::new(self.c.neg(), self.d.neg())
    }

    /// `-j·B`: `x + jy ↦ y - jx`.
    pub fn rotated_cw(&self) -> Self {
        Self::new(self.d, self.c.neg())
    }

    /// `j·B`: `x + jy ↦ -y + jx`.
    pub fn rotated_ccw(&self) -> Self {
        Self::new(self.d.neg(), self.c)
    }
}

impl From<ValueSetRectangle> for ComplexBox {
    fn from(r: ValueSetRectangle) -> Self {
        r.as_box()
    }
}

/// Value set `{p(jω) : p ∈ ip}`, an axis-aligned rectangle. For `ω < 0` the
/// imaginary bounds swap roles.
pub fn value_set_rect(ip: &IntervalPolynomial, omega: f64) -> ValueSetRectangle {
    let parts = extremal_parts(ip);
    let u = -omega * omega;
    let re = RealInterval::unchecked(parts.alpha1.eval(u), parts.alpha2.eval(u));
    let (b1, b2) = (omega * parts.beta1.eval(u), omega * parts.beta2.eval(u));
    let im = if omega >= 0.0 { RealInterval::unchecked(b1, b2) } else { RealInterval::unchecked(b2, b1) };
    ValueSetRectangle { re, im }
}

/// Origin strictly outside the value-set rectangle at `ω`.
pub fn zero_exclusion(ip: &IntervalPolynomial, omega: f64, tol: &Tolerances) -> bool {
    rect_excludes_zero(&value_set_rect(ip, omega), tol)
}

pub(crate) fn rect_excludes_zero(r: &ValueSetRectangle, tol: &Tolerances) -> bool {
    let scale = [r.re.lo(), r.re.hi(), r.im.lo(), r.im.hi()].iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    let margin = tol.positivity_tol * scale;
    r.re.lo() > margin || r.re.hi() < -margin || r.im.lo() > margin || r.im.hi() < -margin
}
