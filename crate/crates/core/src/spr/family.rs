use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{index_set, IndexSet, IndexSetName, VertexIndexTuple};
use crate::poly::RealPolynomial;
use crate::tolerance::Tolerances;

use super::infimum::spr_check_single;
use super::IntervalTransferFunction;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SprVerdict {
    pub spr: bool,
    /// First vertex tuple (in index-set order) whose transfer function fails.
    pub witness: Option<VertexIndexTuple>,
}

fn first_failure(
    set: &IndexSet,
    mut member: impl FnMut(&VertexIndexTuple) -> (RealPolynomial, RealPolynomial),
    tol: &Tolerances,
) -> Result<SprVerdict> {
    for t in set.iter() {
        let (g, f) = member(t);
        if !spr_check_single(&g, &f, tol)? {
            return Ok(SprVerdict { spr: false, witness: Some(*t) });
        }
    }
    Ok(SprVerdict { spr: true, witness: None })
}

/// Whole-family SPR from the eight I2 vertex transfer functions.
pub fn family_spr_verdict(itf: &IntervalTransferFunction, tol: &Tolerances) -> Result<SprVerdict> {
    if itf.den.leading().contains_zero() {
        return Err(Error::DegreeDropPossible);
    }
    first_failure(&index_set(IndexSetName::I2), |t| itf.vertex_pair(t), tol)
}

pub fn family_spr(itf: &IntervalTransferFunction, tol: &Tolerances) -> Result<bool> {
    Ok(family_spr_verdict(itf, tol)?.spr)
}

/// SPR of every closed loop `g/(f + γg)`, decided by the twelve I3 vertex loops
/// `g_{i2 j2}/(f_{i1 j1} + γ·g_{i2 j2})`. `γ = 1` is unity negative feedback.
pub fn closed_loop_spr(itf: &IntervalTransferFunction, gamma: f64, tol: &Tolerances) -> Result<SprVerdict> {
    if !(gamma.is_finite() && gamma > 0.0) {
        return Err(Error::InvalidGamma(gamma));
    }
    let d = itf.num.nominal_degree().max(itf.den.nominal_degree());
    let lead = itf.den.coeff_or_zero(d).add(&itf.num.coeff_or_zero(d).scale(gamma));
    if lead.contains_zero() {
        return Err(Error::DegreeDrop);
    }
    first_failure(&index_set(IndexSetName::I3), |t| closed_loop_vertex(itf, t, gamma), tol)
}

/// The vertex loop `(g_{i2 j2}, f_{i1 j1} + γ·g_{i2 j2})` selected by `t`.
pub fn closed_loop_vertex(
    itf: &IntervalTransferFunction,
    t: &VertexIndexTuple,
    gamma: f64,
) -> (RealPolynomial, RealPolynomial) {
    let f = itf.den.vertex(t.i1, t.j1);
    let g = itf.num.vertex(t.i2, t.j2);
    let closed = &f + &g.scale(gamma);
    (g, closed)
}
