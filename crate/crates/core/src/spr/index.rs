use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interval::{index_set, unstable_vertex, IndexSet, IndexSetName, VertexIndexTuple};
use crate::tolerance::Tolerances;

use super::infimum::{vertex_pair_infimum, FrequencyRange};
use super::IntervalTransferFunction;

/// What `γ₀` says about the family infimum `γ₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Gamma1Class {
    /// `γ₀ < 0` and `γ₁ = γ₀`.
    FamilyInfEqualsGamma0,
    /// `γ₀ = 0` and `γ₁ = 0`.
    FamilyInfZero,
    /// `γ₀ > 0` and `γ₁ ≥ 0`.
    FamilyInfNonnegative,
}

impl Gamma1Class {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::FamilyInfEqualsGamma0 => "FAMILY_INF_EQUALS_GAMMA0",
            Self::FamilyInfZero => "FAMILY_INF_ZERO",
            Self::FamilyInfNonnegative => "FAMILY_INF_NONNEGATIVE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SprIndexResult {
    pub gamma0: f64,
    pub classification: Gamma1Class,
    /// `|γ₀|` is within a thousand positivity tolerances of zero, so the
    /// classification is sensitive to rounding.
    pub boundary_sensitive: bool,
    pub arg_tuple: VertexIndexTuple,
    pub arg_omega: Option<f64>,
    pub attained: bool,
    pub per_tuple_infima: BTreeMap<VertexIndexTuple, f64>,
}

/// `γ₀`: least global infimum of `Re g(jω)/f(jω)` over the I3 vertex pairs.
pub fn spr_index(itf: &IntervalTransferFunction, tol: &Tolerances) -> Result<SprIndexResult> {
    spr_index_with(itf, &index_set(IndexSetName::I3), tol)
}

pub fn spr_index_with(itf: &IntervalTransferFunction, set: &IndexSet, tol: &Tolerances) -> Result<SprIndexResult> {
    if itf.den.leading().contains_zero() {
        return Err(Error::DegreeDropPossible);
    }
    if let Some(vertex) = unstable_vertex(&itf.den, tol)? {
        return Err(Error::DenominatorNotHurwitz { vertex });
    }

    let mut per_tuple_infima = BTreeMap::new();
    let mut best = None;
    for t in set.iter() {
        let (g, f) = itf.vertex_pair(t);
        let r = vertex_pair_infimum(&g, &f, FrequencyRange::AllReals, tol)?;
        per_tuple_infima.insert(*t, r.value);
        if best.as_ref().is_none_or(|(_, b): &(VertexIndexTuple, super::PairInfimum)| r.value < b.value) {
            best = Some((*t, r));
        }
    }
    let (arg_tuple, r) = best.ok_or_else(|| Error::InvalidPlan("empty index set".into()))?;
    let gamma0 = r.value;
    let classification = if gamma0.abs() <= tol.positivity_tol {
        Gamma1Class::FamilyInfZero
    } else if gamma0 < 0.0 {
        Gamma1Class::FamilyInfEqualsGamma0
    } else {
        Gamma1Class::FamilyInfNonnegative
    };
    Ok(SprIndexResult {
        gamma0,
        classification,
        boundary_sensitive: gamma0.abs() <= 1e3 * tol.positivity_tol,
        arg_tuple,
        arg_omega: r.arg_omega,
        attained: r.attained,
        per_tuple_infima,
    })
}

/// Upper end of the admissible sector `[0, k]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SectorLimit {
    Finite(f64),
    Unbounded,
}

impl SectorLimit {
    pub fn finite(&self) -> Option<f64> {
        match self {
            SectorLimit::Finite(k) => Some(*k),
            SectorLimit::Unbounded => None,
        }
    }
}

impl Serialize for SectorLimit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SectorLimit::Finite(k) => s.serialize_f64(*k),
            SectorLimit::Unbounded => s.serialize_str("UNBOUNDED"),
        }
    }
}

/// Every family member in a Lur'e loop with a nonlinearity in `sect[0, k]`,
/// `0 < k < k_upper`, satisfies `Re(1/k + g(jω)/f(jω)) > 0` for all `ω` and is
/// therefore absolutely stable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SectorBound {
    pub k_upper: SectorLimit,
    pub gamma0: f64,
    pub classification: Gamma1Class,
}

pub fn absolute_stability_sector(itf: &IntervalTransferFunction, tol: &Tolerances) -> Result<SectorBound> {
    let index = spr_index(itf, tol)?;
    let k_upper = if index.gamma0 < -tol.positivity_tol {
        SectorLimit::Finite(-1.0 / index.gamma0)
    } else {
        SectorLimit::Unbounded
    };
    Ok(SectorBound { k_upper, gamma0: index.gamma0, classification: index.classification })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn itf(num: &[(f64, f64)], den: &[(f64, f64)]) -> IntervalTransferFunction {
        IntervalTransferFunction::from_bounds(num, den).unwrap()
    }

    #[test]
    fn point_families() {
        let tol = Tolerances::default();
        let r = spr_index(&itf(&[(1.0, 1.0)], &[(1.0, 1.0), (1.0, 1.0)]), &tol).unwrap();
        assert_eq!(r.gamma0, 0.0);
        assert_eq!(r.classification, Gamma1Class::FamilyInfZero);
        assert!(!r.attained);

        let r = spr_index(&itf(&[(1.0, 1.0), (1.0, 1.0)], &[(1.0, 1.0), (1.0, 1.0)]), &tol).unwrap();
        assert_eq!(r.gamma0, 1.0);
        assert_eq!(r.classification, Gamma1Class::FamilyInfNonnegative);

        let s = absolute_stability_sector(&itf(&[(1.0, 1.0)], &[(1.0, 1.0), (1.0, 1.0)]), &tol).unwrap();
        assert_eq!(s.k_upper, SectorLimit::Unbounded);
    }

    #[test]
    fn unstable_denominator() {
        let tol = Tolerances::default();
        let r = spr_index(&itf(&[(1.0, 1.0)], &[(-1.0, 1.0), (1.0, 1.0)]), &tol);
        assert!(matches!(r, Err(Error::DenominatorNotHurwitz { .. })));
    }
}
