//! Box-level vertex certificates: a finite set of members decides the
//! Hurwitz stability of the whole family.

use crate::error::{Error, Result};
use crate::poly::{
    first_order_complex_hurwitz, hurwitz_complex, hurwitz_real, Complex, ComplexPolynomial, RealPolynomial,
};
use crate::tolerance::Tolerances;

use super::{index_set, Bound, ComplexBox, IndexSet, IndexSetName, IntervalPolynomial, RealInterval};

/// Kharitonov: the four vertex polynomials decide the real interval family.
///
/// A family of constant, zero-free polynomials has no roots and counts as stable.
pub fn family_kharitonov_stable(ip: &IntervalPolynomial, tol: &Tolerances) -> Result<bool> {
    if ip.leading().contains_zero() {
        return Err(Error::DegreeDropPossible);
    }
    if ip.nominal_degree() == 0 {
        return Ok(true);
    }
    for &i in &Bound::ALL {
        for &j in &Bound::ALL {
            if !hurwitz_real(&ip.vertex(i, j), tol)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The unstable Kharitonov vertex, if any, labelled `"f{i}{j}"`.
pub(crate) fn unstable_vertex(ip: &IntervalPolynomial, tol: &Tolerances) -> Result<Option<String>> {
    if ip.nominal_degree() == 0 {
        return Ok(None);
    }
    for &i in &Bound::ALL {
        for &j in &Bound::ALL {
            if !hurwitz_real(&ip.vertex(i, j), tol)? {
                return Ok(Some(format!("f{}{}", i.index(), j.index())));
            }
        }
    }
    Ok(None)
}

fn check_shift(beta: f64) -> Result<()> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::InvalidShift(beta));
    }
    Ok(())
}

/// `{(c1 + jd1)(s - β) + (c0 + jd0)} ⊂ H` from the twelve members selected by I1.
pub fn check_w1_vertices(c0: &ComplexBox, c1: &ComplexBox, beta: f64, tol: &Tolerances) -> Result<bool> {
    check_w1_vertices_with(c0, c1, beta, &index_set(IndexSetName::I1), tol)
}

pub fn check_w1_vertices_with(
    c0: &ComplexBox,
    c1: &ComplexBox,
    beta: f64,
    set: &IndexSet,
    tol: &Tolerances,
) -> Result<bool> {
    check_shift(beta)?;
    if c1.contains_zero() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    for t in set.iter() {
        let lead = c1.corner(t.i2, t.j2);
        let constant = c0.corner(t.i1, t.j1) - lead * beta;
        if !first_order_complex_hurwitz(lead, constant, tol)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{(c1 + jd1)s + (c0 + jd0)} ⊂ H` from the eight members selected by I2.
pub fn check_w2_vertices(c0: &ComplexBox, c1: &ComplexBox, tol: &Tolerances) -> Result<bool> {
    if c1.contains_zero() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    for t in index_set(IndexSetName::I2).iter() {
        if !first_order_complex_hurwitz(c1.corner(t.i2, t.j2), c0.corner(t.i1, t.j1), tol)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `g(s) + (β + jγ)f(s)` for fixed members `g`, `f`.
pub fn rotated_combination(g: &RealPolynomial, f: &RealPolynomial, beta: f64, gamma: f64) -> ComplexPolynomial {
    &g.to_complex() + &f.to_complex().scale(Complex::new(beta, gamma))
}

/// `{g + (β + jγ)f : g ∈ gfam, f ∈ ffam} ⊂ H` from the twelve members selected by I3.
pub fn check_w6_vertices(
    gfam: &IntervalPolynomial,
    ffam: &IntervalPolynomial,
    beta: f64,
    gamma: f64,
    tol: &Tolerances,
) -> Result<bool> {
    check_shift(beta)?;
    if !gamma.is_finite() {
        return Err(Error::NonFinite(gamma));
    }
    if gamma == 0.0 {
        return Err(Error::InvalidRotation);
    }
    // The combined leading coefficient a_d + (β + jγ) b_d vanishes only if both do.
    let d = gfam.nominal_degree().max(ffam.nominal_degree());
    if gfam.coeff_or_zero(d).contains_zero() && ffam.coeff_or_zero(d).contains_zero() {
        return Err(Error::DegreeDropPossible);
    }
    for t in index_set(IndexSetName::I3).iter() {
        let p = rotated_combination(&gfam.vertex(t.i1, t.j1), &ffam.vertex(t.i2, t.j2), beta, gamma);
        if !hurwitz_complex(&p, tol)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{c1(s + β) + c0} ⊂ H` from its four corners.
pub fn real_box_first_order_stable(c0: &RealInterval, c1: &RealInterval, beta: f64, tol: &Tolerances) -> Result<bool> {
    check_shift(beta)?;
    if c1.contains_zero() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    for &b1 in &Bound::ALL {
        for &b0 in &Bound::ALL {
            let (lead, constant) = (c1.bound(b1), c0.bound(b0));
            let p = RealPolynomial::from_vec(vec![lead * beta + constant, lead]);
            if !hurwitz_real(&p, tol)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> RealInterval {
        RealInterval::new(lo, hi).unwrap()
    }

    fn bx(c: (f64, f64), d: (f64, f64)) -> ComplexBox {
        ComplexBox::new(iv(c.0, c.1), iv(d.0, d.1))
    }

    #[test]
    fn kharitonov_examples() {
        let tol = Tolerances::default();
        let f = IntervalPolynomial::from_bounds(&[(1.0, 2.0), (5.0, 8.0)]).unwrap();
        assert!(family_kharitonov_stable(&f, &tol).unwrap());
        let f = IntervalPolynomial::from_bounds(&[(1.0, 1.0), (0.0, 1.0), (1.0, 1.0)]).unwrap();
        assert!(!family_kharitonov_stable(&f, &tol).unwrap());
        let f = IntervalPolynomial::from_bounds(&[(1.0, 2.0), (-1.0, 1.0)]).unwrap();
        assert_eq!(family_kharitonov_stable(&f, &tol), Err(Error::DegreeDropPossible));
    }

    #[test]
    fn w1_examples() {
        let tol = Tolerances::default();
        let one = bx((1.0, 1.0), (0.0, 0.0));
        assert!(check_w1_vertices(&bx((3.0, 3.0), (0.0, 0.0)), &one, 1.0, &tol).unwrap());
        assert!(!check_w1_vertices(&one, &one, 1.0, &tol).unwrap());
        assert_eq!(check_w1_vertices(&one, &one, 0.0, &tol), Err(Error::InvalidShift(0.0)));
        assert_eq!(
            check_w1_vertices(&one, &bx((-1.0, 1.0), (-1.0, 1.0)), 1.0, &tol),
            Err(Error::DegenerateLeadingCoefficient)
        );
    }

    #[test]
    fn w2_examples() {
        let tol = Tolerances::default();
        assert!(check_w2_vertices(&bx((1.0, 2.0), (1.0, 2.0)), &bx((1.0, 2.0), (0.0, 0.0)), &tol).unwrap());
        assert!(check_w2_vertices(&bx((1.0, 1.0), (0.0, 0.0)), &bx((1.0, 1.0), (0.0, 0.0)), &tol).unwrap());
        // corner c0 = 1 + 2j, c1 = 0.1 + 3j: Re(c0·conj(c1)) = 0.1 + 6 > 0, but
        // c0 = 1 - 2j, c1 = 0.1 + 3j gives 0.1 - 6 < 0
        assert!(!check_w2_vertices(&bx((1.0, 1.0), (-2.0, 2.0)), &bx((0.1, 0.1), (3.0, 3.0)), &tol).unwrap());
    }

    #[test]
    fn w6_examples() {
        let tol = Tolerances::default();
        let g = IntervalPolynomial::from_bounds(&[(1.0, 1.0)]).unwrap();
        let f = IntervalPolynomial::from_bounds(&[(1.0, 1.0), (1.0, 1.0)]).unwrap();
        assert!(check_w6_vertices(&g, &f, 1.0, 1.0, &tol).unwrap());
        let f_bad = IntervalPolynomial::from_bounds(&[(-1.0, -1.0), (1.0, 1.0)]).unwrap();
        assert!(!check_w6_vertices(&g, &f_bad, 1.0, 1.0, &tol).unwrap());
        assert_eq!(check_w6_vertices(&g, &f, 1.0, 0.0, &tol), Err(Error::InvalidRotation));
        assert_eq!(check_w6_vertices(&g, &f, -1.0, 1.0, &tol), Err(Error::InvalidShift(-1.0)));
    }

    #[test]
    fn real_box_examples() {
        let tol = Tolerances::default();
        assert!(real_box_first_order_stable(&iv(1.0, 2.0), &iv(1.0, 2.0), 1.0, &tol).unwrap());
        // corner c0 = -3, c1 = 2: root at (3 - 2)/2 = 0.5
        assert!(!real_box_first_order_stable(&iv(-3.0, 2.0), &iv(1.0, 2.0), 1.0, &tol).unwrap());
        assert_eq!(
            real_box_first_order_stable(&iv(1.0, 2.0), &iv(-1.0, 2.0), 1.0, &tol),
            Err(Error::DegenerateLeadingCoefficient)
        );
        let point = real_box_first_order_stable(&iv(0.5, 0.5), &iv(2.0, 2.0), 1.0, &tol).unwrap();
        let p = RealPolynomial::new(vec![2.5, 2.0]).unwrap();
        assert_eq!(point, hurwitz_real(&p, &tol).unwrap());
    }
}
