use num_complex::Complex64;

use super::{roots, ComplexPolynomial, RealPolynomial};
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Routh table verdict: every first-column entry strictly positive after
/// normalizing the leading coefficient. Entries within the relative zero
/// tolerance count as zero, which means "not Hurwitz".
pub fn routh_hurwitz(p: &RealPolynomial, tol: &Tolerances) -> Result<bool> {
    let degree = p.degree_with(tol.zero_tol);
    if degree == 0 {
        return Err(Error::InvalidDegree);
    }
    let coeffs = &p.coeffs()[..=degree];
    let sign = coeffs[degree].signum();
    let scale = coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    let desc: Vec<f64> = coeffs.iter().rev().map(|c| sign * c / scale).collect();

    let mut prev: Vec<f64> = desc.iter().step_by(2).copied().collect();
    let mut cur: Vec<f64> = desc.iter().skip(1).step_by(2).copied().collect();
    if cur.is_empty() {
        cur.push(0.0);
    }
    for row in 1..=degree {
        let row_scale = prev.iter().chain(cur.iter()).fold(0.0_f64, |m, c| m.max(c.abs()));
        if !(cur[0] > tol.zero_tol * row_scale) {
            return Ok(false);
        }
        if row == degree {
            break;
        }
        let at = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
        let len = prev.len().saturating_sub(1).max(1);
        let next: Vec<f64> =
            (0..len).map(|i| (cur[0] * at(&prev, i + 1) - prev[0] * at(&cur, i + 1)) / cur[0]).collect();
        prev = cur;
        cur = next;
    }
    Ok(true)
}

/// Largest real part over all roots.
pub fn max_root_real_part(p: &ComplexPolynomial) -> Result<f64> {
    Ok(roots(p)?.iter().fold(f64::NEG_INFINITY, |m, z| m.max(z.re)))
}

/// Root-location verdict: every root has real part `< -stability_margin_tol`.
pub fn roots_hurwitz(p: &ComplexPolynomial, tol: &Tolerances) -> Result<bool> {
    Ok(max_root_real_part(p)? < -tol.stability_margin_tol)
}

/// Hurwitz test for a real polynomial. The Routh table and the root locations
/// must agree; otherwise the polynomial sits inside the tolerance band and
/// [`Error::NumericallyMarginal`] is returned.
pub fn hurwitz_real(p: &RealPolynomial, tol: &Tolerances) -> Result<bool> {
    let routh = routh_hurwitz(p, tol)?;
    let max_re = max_root_real_part(&p.to_complex())?;
    let by_roots = max_re < -tol.stability_margin_tol;
    if routh != by_roots {
        return Err(Error::NumericallyMarginal { max_real_part: max_re });
    }
    Ok(routh)
}

pub fn hurwitz_complex(p: &ComplexPolynomial, tol: &Tolerances) -> Result<bool> {
    if p.degree_with(tol.zero_tol) == 0 {
        return Err(Error::InvalidDegree);
    }
    roots_hurwitz(p, tol)
}

/// `c1·s + c0` is Hurwitz iff `Re(c0·conj(c1)) > 0`, the root `-c0/c1` then
/// lying in the open left half plane.
pub fn first_order_complex_hurwitz(c1: Complex64, c0: Complex64, tol: &Tolerances) -> Result<bool> {
    if c1.norm() == 0.0 {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let projection = (c0 * c1.conj()).re;
    Ok(projection > tol.positivity_tol * c0.norm() * c1.norm())
}

/// Stability of the whole segment `h0 + λ(αs + β)`, `λ ∈ [0, 1]`, from its two
/// endpoints. The degree must stay constant along the segment.
pub fn segment_stable_endpoints(h0: &RealPolynomial, alpha: f64, beta: f64, tol: &Tolerances) -> Result<bool> {
    if !alpha.is_finite() {
        return Err(Error::NonFinite(alpha));
    }
    if !beta.is_finite() {
        return Err(Error::NonFinite(beta));
    }
    let degree = h0.degree_with(tol.zero_tol);
    let direction = RealPolynomial::from_vec(vec![beta, alpha]);
    match degree {
        0 if alpha != 0.0 => return Err(Error::DegreeDropOnSegment),
        0 => return Err(Error::InvalidDegree),
        1 => {
            let lead0 = h0.coeffs()[1];
            let lead1 = lead0 + alpha;
            if lead0.signum() != lead1.signum() || lead1.abs() <= tol.zero_tol * lead0.abs() {
                return Err(Error::DegreeDropOnSegment);
            }
        }
        _ => {}
    }
    let h1 = h0 + &direction;
    Ok(hurwitz_real(h0, tol)? && hurwitz_real(&h1, tol)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(c: &[f64]) -> RealPolynomial {
        RealPolynomial::new(c.to_vec()).unwrap()
    }

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn real_hurwitz_examples() {
        let tol = Tolerances::default();
        assert!(hurwitz_real(&real(&[1.0, 1.0]), &tol).unwrap());
        assert!(!hurwitz_real(&real(&[1.0, 0.0, 1.0]), &tol).unwrap());
        assert!(!hurwitz_real(&real(&[1.0, -1.0, 1.0]), &tol).unwrap());
        assert!(!hurwitz_real(&real(&[0.0, 1.0, 1.0]), &tol).unwrap());
        assert!(hurwitz_real(&real(&[-2.0, -3.0, -1.0]), &tol).unwrap());
        assert_eq!(hurwitz_real(&real(&[4.0]), &tol), Err(Error::InvalidDegree));
    }

    #[test]
    fn routh_on_higher_degree() {
        let tol = Tolerances::default();
        // (s+1)(s+2)(s+3)(s+4)
        assert!(routh_hurwitz(&real(&[24.0, 50.0, 35.0, 10.0, 1.0]), &tol).unwrap());
        // s^3 + s^2 + 2s + 8: two RHP roots
        assert!(!routh_hurwitz(&real(&[8.0, 2.0, 1.0, 1.0]), &tol).unwrap());
    }

    #[test]
    fn marginal_root_is_reported() {
        let tol = Tolerances::default();
        // s + 1e-11: Routh says stable, root sits inside the margin
        let err = hurwitz_real(&real(&[1e-11, 1.0]), &tol).unwrap_err();
        assert!(matches!(err, Error::NumericallyMarginal { .. }));
    }

    #[test]
    fn complex_hurwitz_examples() {
        let tol = Tolerances::default();
        let p = |c1, c0| ComplexPolynomial::first_order(c1, c0);
        assert!(hurwitz_complex(&p(cx(1.0, 0.0), cx(1.0, 1.0)), &tol).unwrap());
        assert!(!hurwitz_complex(&p(cx(1.0, 0.0), cx(0.0, 1.0)), &tol).unwrap());
        assert!(hurwitz_complex(&p(cx(1.0, 1.0), cx(2.0, 1.0)), &tol).unwrap());
    }

    #[test]
    fn first_order_closed_form() {
        let tol = Tolerances::default();
        assert!(first_order_complex_hurwitz(cx(1.0, 0.0), cx(1.0, 0.0), &tol).unwrap());
        assert!(!first_order_complex_hurwitz(cx(0.0, 1.0), cx(1.0, 0.0), &tol).unwrap());
        // Re((-6+4j)(2-7j)) = -12 + 28 = 16
        let (c1, c0) = (cx(2.0, 7.0), cx(-6.0, 4.0));
        assert_eq!((c0 * c1.conj()).re, 16.0);
        assert!(first_order_complex_hurwitz(c1, c0, &tol).unwrap());
        assert!(hurwitz_complex(&ComplexPolynomial::first_order(c1, c0), &tol).unwrap());
        assert_eq!(first_order_complex_hurwitz(cx(0.0, 0.0), c0, &tol), Err(Error::DegenerateLeadingCoefficient));
    }

    #[test]
    fn segment_examples() {
        let tol = Tolerances::default();
        let h0 = real(&[2.0, 2.0, 1.0]);
        assert!(segment_stable_endpoints(&h0, 1.0, 1.0, &tol).unwrap());
        assert!(!segment_stable_endpoints(&real(&[1.0, 0.0, 1.0]), 0.0, 0.0, &tol).unwrap());
        assert!(!segment_stable_endpoints(&h0, 0.0, -3.0, &tol).unwrap());
        assert_eq!(segment_stable_endpoints(&real(&[1.0, 1.0]), -2.0, 0.0, &tol), Err(Error::DegreeDropOnSegment));
        assert_eq!(segment_stable_endpoints(&real(&[1.0]), 1.0, 0.0, &tol), Err(Error::DegreeDropOnSegment));
    }
}
