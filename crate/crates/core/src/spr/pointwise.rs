use crate::error::{Error, Result};
use crate::interval::{
    extremal_parts, index_set, rect_excludes_zero, value_set_rect, ComplexBox, IndexSet, IndexSetName,
    IntervalPolynomial, VertexIndexTuple,
};
use crate::tolerance::Tolerances;

use super::infimum::{real_roots_in, vertex_pair_infimum, FrequencyRange};
use super::{BandSpec, CertificationStatus, ExtremumReport, IntervalTransferFunction, Quantity};

fn check_omega(omega: f64) -> Result<()> {
    if !omega.is_finite() {
        return Err(Error::NonFinite(omega));
    }
    Ok(())
}

/// Numerator box whose minimal real part (after the sign flip for `MAX_*`)
/// gives the requested quantity: `Re`, `-Re`, `Im = Re(-j·)`, `-Im = Re(j·)`.
fn transformed_numerator(num: ComplexBox, q: Quantity) -> ComplexBox {
    match q {
        Quantity::MinRe => num,
        Quantity::MaxRe => num.negated(),
        Quantity::MinIm => num.rotated_cw(),
        Quantity::MaxIm => num.rotated_ccw(),
    }
}

/// Maps a corner tuple of the transformed boxes to the vertex tuple of the
/// members realizing it.
fn member_tuple(t: VertexIndexTuple, q: Quantity, omega: f64) -> VertexIndexTuple {
    let (re, im) = match q {
        Quantity::MinRe => (t.i1, t.j1),
        Quantity::MaxRe => (t.i1.flip(), t.j1.flip()),
        Quantity::MinIm => (t.j1.flip(), t.i1),
        Quantity::MaxIm => (t.j1, t.i1.flip()),
    };
    let rect_tuple = VertexIndexTuple::new(re, im, t.i2, t.j2);
    if omega < 0.0 {
        rect_tuple.flip_odd()
    } else {
        rect_tuple
    }
}

/// Extremum of a frequency-response quantity over the family at a fixed `ω`.
///
/// The value is the extremum over the I1 corner pairs of the numerator and
/// denominator value-set rectangles. It is certified exact when the
/// (sign-adjusted) minimum is positive; otherwise it is only a bound, since
/// every corner pair is realized by a pair of vertex members.
pub fn pointwise_extremum(
    itf: &IntervalTransferFunction,
    omega: f64,
    q: Quantity,
    tol: &Tolerances,
) -> Result<ExtremumReport> {
    pointwise_extremum_with(itf, omega, q, &index_set(IndexSetName::I1), tol)
}

pub fn pointwise_extremum_with(
    itf: &IntervalTransferFunction,
    omega: f64,
    q: Quantity,
    set: &IndexSet,
    tol: &Tolerances,
) -> Result<ExtremumReport> {
    check_omega(omega)?;
    let den_rect = value_set_rect(&itf.den, omega);
    if !rect_excludes_zero(&den_rect, tol) {
        return Ok(ExtremumReport::zero_inclusion(q, omega));
    }
    let g_box = transformed_numerator(value_set_rect(&itf.num, omega).as_box(), q);
    let f_box = den_rect.as_box();
    let corner_value = |t: &VertexIndexTuple| (g_box.corner(t.i1, t.j1) / f_box.corner(t.i2, t.j2)).re;

    let (best_tuple, best) = set
        .iter()
        .map(|t| (*t, corner_value(t)))
        .fold(None, |acc: Option<(VertexIndexTuple, f64)>, (t, v)| match acc {
            Some((_, bv)) if bv <= v => acc,
            _ => Some((t, v)),
        })
        .ok_or_else(|| Error::InvalidPlan("empty index set".into()))?;
    let all = VertexIndexTuple::all().map(|t| corner_value(&t)).fold(f64::INFINITY, f64::min);

    // `+ 0.0` keeps a flipped zero from printing as -0
    let sign = if q.is_max() { -1.0 } else { 1.0 };
    let status = if best > tol.positivity_tol {
        CertificationStatus::CertifiedExact
    } else {
        CertificationStatus::UpperBoundOnly
    };
    Ok(ExtremumReport {
        quantity: q,
        value: sign * best + 0.0,
        status,
        arg_tuple: Some(member_tuple(best_tuple, q, omega)),
        arg_omega: Some(omega),
        attained: true,
        corner_extremum: Some(sign * all + 0.0),
    })
}

/// Whether every member has `Re g(jω)/f(jω) > 0`, decided by the eight I2 vertex pairs.
pub fn pointwise_positivity(itf: &IntervalTransferFunction, omega: f64, tol: &Tolerances) -> Result<bool> {
    check_omega(omega)?;
    if !rect_excludes_zero(&value_set_rect(&itf.den, omega), tol) {
        return Err(Error::ZeroInclusion { omega });
    }
    Ok(index_set(IndexSetName::I2).iter().all(|t| {
        let (g, f) = itf.vertex_pair(t);
        (g.eval_at_jomega(omega) / f.eval_at_jomega(omega)).re > tol.positivity_tol
    }))
}

/// Checks `0 ∉ K(jω)` on the whole band.
///
/// The rectangle bounds `alpha_k(-ω²)` and `ω·beta_k(-ω²)` keep their signs
/// between consecutive real roots, so testing the roots, the band ends and
/// the midpoints in between covers every frequency.
pub fn ensure_band_zero_exclusion(ip: &IntervalPolynomial, band: &BandSpec, tol: &Tolerances) -> Result<()> {
    let parts = extremal_parts(ip);
    let (w1, w2) = (band.w1(), band.w2());
    let mut points = vec![w1, w2];
    if band.contains(0.0) {
        points.push(0.0);
    }
    let u_max = w1.abs().max(w2.abs()).powi(2);
    for p in [&parts.alpha1, &parts.alpha2, &parts.beta1, &parts.beta2] {
        for u in real_roots_in(&p.reflect(), 0.0, u_max)? {
            let w = u.sqrt();
            points.extend([w, -w].into_iter().filter(|x| band.contains(*x)));
        }
    }
    points.sort_by(f64::total_cmp);
    points.dedup();
    let midpoints: Vec<f64> = points.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    for omega in points.into_iter().chain(midpoints) {
        if !rect_excludes_zero(&value_set_rect(ip, omega), tol) {
            return Err(Error::ZeroInclusion { omega });
        }
    }
    Ok(())
}

/// Infimum of `Re g(jω)/f(jω)` over the family and the band, from the I1 vertex pairs.
pub fn band_infimum(itf: &IntervalTransferFunction, band: &BandSpec, tol: &Tolerances) -> Result<ExtremumReport> {
    band_infimum_with(itf, band, &index_set(IndexSetName::I1), tol)
}

pub fn band_infimum_with(
    itf: &IntervalTransferFunction,
    band: &BandSpec,
    set: &IndexSet,
    tol: &Tolerances,
) -> Result<ExtremumReport> {
    ensure_band_zero_exclusion(&itf.den, band, tol)?;
    let mut best: Option<(VertexIndexTuple, super::PairInfimum)> = None;
    for t in set.iter() {
        let (g, f) = itf.vertex_pair(t);
        let r = vertex_pair_infimum(&g, &f, FrequencyRange::Band(*band), tol)?;
        if best.as_ref().is_none_or(|(_, b)| r.value < b.value) {
            best = Some((*t, r));
        }
    }
    let (tuple, r) = best.ok_or_else(|| Error::InvalidPlan("empty index set".into()))?;
    let status = if r.value > tol.positivity_tol {
        CertificationStatus::CertifiedExact
    } else {
        CertificationStatus::UpperBoundOnly
    };
    Ok(ExtremumReport {
        quantity: Quantity::MinRe,
        value: r.value,
        status,
        arg_tuple: Some(tuple),
        arg_omega: r.arg_omega,
        attained: r.attained,
        corner_extremum: None,
    })
}
