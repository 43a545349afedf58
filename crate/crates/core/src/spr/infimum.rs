use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{even_odd_split, hurwitz_real, RealPolynomial};
use crate::tolerance::Tolerances;

use super::BandSpec;

/// Roots whose imaginary part is below this fraction of `1 + |z|` are treated as
/// candidate real roots. Spurious candidates are harmless: every candidate is
/// only ever evaluated, never trusted as a root.
const NEAR_REAL: f64 = 1e-6;
const NEWTON_STEPS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum FrequencyRange {
    AllReals,
    Band(BandSpec),
}

impl FrequencyRange {
    /// `[lo, hi]` in `u = ω²`; `hi` is `+∞` for all frequencies.
    fn u_range(&self) -> (f64, f64) {
        match self {
            FrequencyRange::AllReals => (0.0, f64::INFINITY),
            FrequencyRange::Band(b) => {
                let (a, c) = (b.w1() * b.w1(), b.w2() * b.w2());
                if b.contains(0.0) {
                    (0.0, a.max(c))
                } else {
                    (a.min(c), a.max(c))
                }
            }
        }
    }

    /// A frequency in the range with `ω² = u`.
    fn omega_for(&self, u: f64) -> f64 {
        let w = u.max(0.0).sqrt();
        match self {
            FrequencyRange::Band(b) if !b.contains(w) => -w,
            _ => w,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairInfimum {
    pub value: f64,
    /// `false` when only the `ω → ∞` limit reaches the infimum.
    pub attained: bool,
    pub arg_omega: Option<f64>,
}

/// `(N, D)` with `Re[g(jω)·conj f(jω)] = N(ω²)` and `|f(jω)|² = D(ω²)`, so that
/// `Re g(jω)/f(jω) = N(u)/D(u)` at `u = ω²`.
pub fn response_parts(g: &RealPolynomial, f: &RealPolynomial) -> (RealPolynomial, RealPolynomial) {
    let (g, f) = (even_odd_split(g), even_odd_split(f));
    let (ag, bg) = (g.alpha.reflect(), g.beta.reflect());
    let (af, bf) = (f.alpha.reflect(), f.beta.reflect());
    let num = &(&ag * &af) + &(&bg * &bf).shift_up();
    let den = &(&af * &af) + &(&bf * &bf).shift_up();
    (num, den)
}

fn polish_real(p: &RealPolynomial, dp: &RealPolynomial, mut x: f64) -> f64 {
    let mut residual = p.eval(x).abs();
    for _ in 0..NEWTON_STEPS {
        let slope = dp.eval(x);
        if slope == 0.0 || residual == 0.0 {
            break;
        }
        let next = x - p.eval(x) / slope;
        let next_residual = p.eval(next).abs();
        if !(next_residual < residual) {
            break;
        }
        x = next;
        residual = next_residual;
    }
    x
}

/// Candidate real roots of `p` inside `[lo, hi]`, sorted.
pub(crate) fn real_roots_in(p: &RealPolynomial, lo: f64, hi: f64) -> Result<Vec<f64>> {
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let dp = p.derivative();
    let mut out: Vec<f64> = p
        .roots()?
        .into_iter()
        .filter(|z| z.im.abs() <= NEAR_REAL * (1.0 + z.norm()))
        .map(|z| polish_real(p, &dp, z.re))
        .filter(|&x| x >= lo && x <= hi)
        .collect();
    out.sort_by(f64::total_cmp);
    out.dedup();
    Ok(out)
}

/// `ω → ∞` limit of `N/D`; `None` when `D` is constant (the limit is N's own).
fn limit_at_infinity(num: &RealPolynomial, den: &RealPolynomial) -> f64 {
    let (dn, dd) = (num.degree(), den.degree());
    if num.is_zero() || dn < dd {
        0.0
    } else if dn == dd {
        num.leading() / den.leading()
    } else {
        num.leading().signum() * den.leading().signum() * f64::INFINITY
    }
}

/// Infimum of `Re g(jω)/f(jω)` over the range.
///
/// With `u = ω²` the real part is `N(u)/D(u)`; its infimum is taken over the
/// range endpoints, the stationary points (real roots of `N'D - ND'`) and,
/// for the unbounded range, the `u → ∞` limit.
pub fn vertex_pair_infimum(
    g: &RealPolynomial,
    f: &RealPolynomial,
    range: FrequencyRange,
    tol: &Tolerances,
) -> Result<PairInfimum> {
    let (num, den) = response_parts(g, f);
    let (lo, hi) = range.u_range();

    // |f(jω)|² must stay away from zero over the range.
    let mut den_points = vec![lo];
    if hi.is_finite() {
        den_points.push(hi);
    }
    den_points.extend(real_roots_in(&den.derivative(), lo, hi)?);
    den_points.extend(real_roots_in(&den, lo, hi)?);
    for &u in &den_points {
        if den.eval(u) <= tol.zero_tol * den.abs_eval(u) {
            return Err(Error::PoleOnAxis { omega: range.omega_for(u) });
        }
    }

    let stationary = &(&num.derivative() * &den) - &(&num * &den.derivative());
    let mut candidates = vec![lo];
    if hi.is_finite() {
        candidates.push(hi);
    }
    if !stationary.is_zero() {
        candidates.extend(real_roots_in(&stationary, lo, hi)?);
    }

    let ratio = |u: f64| num.eval(u) / den.eval(u);
    let (best_u, best) =
        candidates
            .iter()
            .map(|&u| (u, ratio(u)))
            .fold((lo, f64::INFINITY), |acc, (u, v)| if v < acc.1 { (u, v) } else { acc });

    if !hi.is_finite() {
        let limit = limit_at_infinity(&num, &den);
        if limit < best - 1e-12 * best.abs().max(1.0) {
            return Ok(PairInfimum { value: limit, attained: false, arg_omega: None });
        }
    }
    Ok(PairInfimum { value: best, attained: true, arg_omega: Some(range.omega_for(best_u)) })
}

/// `p(u) > 0` for every `u ≥ 0`.
fn positive_on_half_line(p: &RealPolynomial, tol: &Tolerances) -> Result<bool> {
    let positive = |u: f64| p.eval(u) > tol.positivity_tol * p.abs_eval(u);
    if p.degree() == 0 {
        return Ok(positive(0.0));
    }
    if p.leading() <= 0.0 || !positive(0.0) {
        return Ok(false);
    }
    let mut points = real_roots_in(&p.derivative(), 0.0, f64::INFINITY)?;
    points.extend(real_roots_in(p, 0.0, f64::INFINITY)?);
    Ok(points.into_iter().all(positive))
}

/// `g/f ∈ SPR`: `f` Hurwitz and `Re g(jω)/f(jω) > 0` for every finite `ω`.
///
/// No condition is placed on the `ω → ∞` behaviour, so `1/(s+1)` qualifies.
/// A non-zero constant `f` has no roots and counts as Hurwitz.
pub fn spr_check_single(g: &RealPolynomial, f: &RealPolynomial, tol: &Tolerances) -> Result<bool> {
    if f.degree_with(tol.zero_tol) == 0 {
        if f.is_zero() {
            return Ok(false);
        }
    } else if !hurwitz_real(f, tol)? {
        return Ok(false);
    }
    let (num, _) = response_parts(g, f);
    positive_on_half_line(&num, tol)
}
