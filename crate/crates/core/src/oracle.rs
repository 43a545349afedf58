//! Brute-force falsifier for the vertex results: enumerate or sample members
//! of the coefficient box, evaluate them directly on a frequency grid, and
//! compare with what the vertex computations claim.
//!
//! Nothing here goes through value-set rectangles or extremal parts except
//! the precondition checks; members are plain polynomials evaluated by Horner.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{
    family_kharitonov_stable, index_set, zero_exclusion, Bound, IndexSet, IndexSetName, IntervalPolynomial,
    RealInterval, VertexIndexTuple,
};
use crate::poly::{Complex, RealPolynomial};
use crate::spr::{
    band_infimum_with, pointwise_extremum_with, spr_index_with, vertex_pair_infimum, BandSpec, FrequencyRange,
    Gamma1Class, IntervalTransferFunction, Quantity,
};
use crate::tolerance::Tolerances;

pub const CORNER_CAP: u128 = 1 << 20;
pub const GRID_CAP: u128 = 1 << 24;
/// Margin by which the oracle must beat a certified vertex value to count as a violation.
pub const ORACLE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SamplingStrategy {
    CornersOnly,
    Grid { points_per_coeff: usize },
    Random { n_samples: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SamplingPlan {
    pub strategy: SamplingStrategy,
    pub seed: u64,
    /// Add every corner of the coefficient box (random plans; grids already contain them).
    pub include_corners: bool,
    /// Add the sixteen numerator/denominator Kharitonov vertex pairs (random plans).
    pub include_vertices: bool,
}

impl SamplingPlan {
    pub fn corners_only() -> Self {
        Self { strategy: SamplingStrategy::CornersOnly, seed: 0, include_corners: true, include_vertices: false }
    }

    pub fn grid(points_per_coeff: usize) -> Self {
        Self {
            strategy: SamplingStrategy::Grid { points_per_coeff },
            seed: 0,
            include_corners: true,
            include_vertices: false,
        }
    }

    pub fn random(n_samples: usize, seed: u64) -> Self {
        Self { strategy: SamplingStrategy::Random { n_samples }, seed, include_corners: false, include_vertices: false }
    }

    pub fn with_corners(mut self, yes: bool) -> Self {
        self.include_corners = yes;
        self
    }

    pub fn with_vertices(mut self, yes: bool) -> Self {
        self.include_vertices = yes;
        self
    }

    fn validate(&self) -> Result<()> {
        match self.strategy {
            SamplingStrategy::Grid { points_per_coeff } if points_per_coeff < 2 => {
                Err(Error::InvalidPlan("GRID needs at least 2 points per coefficient".into()))
            }
            SamplingStrategy::Random { n_samples: 0 } => {
                Err(Error::InvalidPlan("RANDOM needs at least 1 sample".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Sampled members in factored form: numerator and denominator lists plus
/// either their full Cartesian product or an explicit list of index pairs.
#[derive(Debug, Clone)]
pub struct MemberSample {
    pub num: Vec<RealPolynomial>,
    pub den: Vec<RealPolynomial>,
    pairs: Option<Vec<(usize, usize)>>,
}

impl MemberSample {
    pub fn len(&self) -> usize {
        match &self.pairs {
            Some(p) => p.len(),
            None => self.num.len() * self.den.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pair(&self, k: usize) -> (usize, usize) {
        match &self.pairs {
            Some(p) => p[k],
            None => (k / self.den.len(), k % self.den.len()),
        }
    }

    pub fn members(&self) -> impl Iterator<Item = (&RealPolynomial, &RealPolynomial)> {
        (0..self.len()).map(|k| {
            let (i, j) = self.pair(k);
            (&self.num[i], &self.den[j])
        })
    }
}

fn linspace(iv: &RealInterval, n: usize) -> Vec<f64> {
    if iv.is_degenerate() {
        return vec![iv.lo()];
    }
    (0..n)
        .map(|k| match k {
            0 => iv.lo(),
            k if k == n - 1 => iv.hi(),
            k => iv.lo() + iv.width() * k as f64 / (n - 1) as f64,
        })
        .collect()
}

fn product_count(itf: &IntervalTransferFunction, points: usize) -> u128 {
    let k = itf.num.nondegenerate_count() + itf.den.nondegenerate_count();
    (points as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

/// Cartesian product of per-coefficient point lists; the last coefficient varies fastest.
fn product_members(ip: &IntervalPolynomial, points: usize) -> Vec<RealPolynomial> {
    let axes: Vec<Vec<f64>> = ip.coeffs().iter().map(|iv| linspace(iv, points)).collect();
    let mut out = vec![Vec::with_capacity(axes.len())];
    for axis in &axes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(RealPolynomial::from_vec).collect()
}

fn random_member(ip: &IntervalPolynomial, rng: &mut ChaCha8Rng) -> RealPolynomial {
    RealPolynomial::from_vec(
        ip.coeffs()
            .iter()
            .map(|iv| if iv.is_degenerate() { iv.lo() } else { rng.random_range(iv.lo()..=iv.hi()) })
            .collect(),
    )
}

/// Members of the family according to `plan`. Deterministic in the plan alone:
/// random sample `k` draws from its own ChaCha stream `k`.
pub fn sample_family(itf: &IntervalTransferFunction, plan: &SamplingPlan) -> Result<MemberSample> {
    plan.validate()?;
    match plan.strategy {
        SamplingStrategy::CornersOnly => {
            let count = product_count(itf, 2);
            if count > CORNER_CAP {
                return Err(Error::TooManyCorners { count, cap: CORNER_CAP });
            }
            Ok(MemberSample { num: product_members(&itf.num, 2), den: product_members(&itf.den, 2), pairs: None })
        }
        SamplingStrategy::Grid { points_per_coeff } => {
            let count = product_count(itf, points_per_coeff);
            if count > GRID_CAP {
                return Err(Error::InvalidPlan(format!("grid of {count} members exceeds the cap of {GRID_CAP}")));
            }
            Ok(MemberSample {
                num: product_members(&itf.num, points_per_coeff),
                den: product_members(&itf.den, points_per_coeff),
                pairs: None,
            })
        }
        SamplingStrategy::Random { n_samples } => {
            let mut num = Vec::new();
            let mut den = Vec::new();
            let mut pairs = Vec::new();
            for k in 0..n_samples {
                let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
                rng.set_stream(k as u64);
                num.push(random_member(&itf.num, &mut rng));
                den.push(random_member(&itf.den, &mut rng));
                pairs.push((k, k));
            }
            if plan.include_corners {
                let count = product_count(itf, 2);
                if count > CORNER_CAP {
                    return Err(Error::TooManyCorners { count, cap: CORNER_CAP });
                }
                let (n0, d0) = (num.len(), den.len());
                num.extend(product_members(&itf.num, 2));
                den.extend(product_members(&itf.den, 2));
                for i in n0..num.len() {
                    for j in d0..den.len() {
                        pairs.push((i, j));
                    }
                }
            }
            if plan.include_vertices {
                let (n0, d0) = (num.len(), den.len());
                for &i in &Bound::ALL {
                    for &j in &Bound::ALL {
                        num.push(itf.num.vertex(i, j));
                        den.push(itf.den.vertex(i, j));
                    }
                }
                for i in n0..num.len() {
                    for j in d0..den.len() {
                        pairs.push((i, j));
                    }
                }
            }
            Ok(MemberSample { num, den, pairs: Some(pairs) })
        }
    }
}

/// Expanded list of `(numerator, denominator)` members.
pub fn sample_members(
    itf: &IntervalTransferFunction,
    plan: &SamplingPlan,
) -> Result<Vec<(RealPolynomial, RealPolynomial)>> {
    let s = sample_family(itf, plan)?;
    Ok(s.members().map(|(g, f)| (g.clone(), f.clone())).collect())
}

/// A concrete member and frequency realizing an oracle value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub num: RealPolynomial,
    pub den: RealPolynomial,
    pub omega: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleValue {
    pub value: f64,
    pub witness: Witness,
    pub members: usize,
}

pub fn quantity_of(z: Complex, q: Quantity) -> f64 {
    match q {
        Quantity::MinRe | Quantity::MaxRe => z.re,
        Quantity::MinIm | Quantity::MaxIm => z.im,
    }
}

/// `(key, ω index, pair index)`; the smallest key wins, ties go to the lower indices.
type Best = (f64, usize, usize);

fn better(a: Best, b: Best) -> Best {
    match a.0.total_cmp(&b.0) {
        std::cmp::Ordering::Less => a,
        std::cmp::Ordering::Greater => b,
        std::cmp::Ordering::Equal => {
            if (a.1, a.2) <= (b.1, b.2) {
                a
            } else {
                b
            }
        }
    }
}

/// Extremum of `q` over `sample × omegas`, with an ordered reduction so that the
/// result does not depend on how the work is split across threads.
pub fn oracle_extremum_over(sample: &MemberSample, omegas: &[f64], q: Quantity) -> Option<OracleValue> {
    if sample.is_empty() || omegas.is_empty() {
        return None;
    }
    let sign = if q.is_max() { -1.0 } else { 1.0 };
    let (key, wi, k) = omegas
        .par_iter()
        .enumerate()
        .map(|(wi, &w)| {
            let g: Vec<Complex> = sample.num.iter().map(|p| p.eval_at_jomega(w)).collect();
            let f: Vec<Complex> = sample.den.iter().map(|p| p.eval_at_jomega(w)).collect();
            (0..sample.len())
                .map(|k| {
                    let (i, j) = sample.pair(k);
                    (sign * quantity_of(g[i] / f[j], q), wi, k)
                })
                .fold((f64::INFINITY, usize::MAX, usize::MAX), better)
        })
        .reduce(|| (f64::INFINITY, usize::MAX, usize::MAX), better);
    if k == usize::MAX {
        return None;
    }
    let (i, j) = sample.pair(k);
    Some(OracleValue {
        value: sign * key + 0.0,
        witness: Witness { num: sample.num[i].clone(), den: sample.den[j].clone(), omega: omegas[wi] },
        members: sample.len(),
    })
}

/// Extremum of `q` over sampled members at a fixed `ω`.
pub fn oracle_pointwise_min(
    itf: &IntervalTransferFunction,
    omega: f64,
    plan: &SamplingPlan,
    q: Quantity,
    tol: &Tolerances,
) -> Result<OracleValue> {
    if !zero_exclusion(&itf.den, omega, tol) {
        return Err(Error::ZeroInclusion { omega });
    }
    let sample = sample_family(itf, plan)?;
    oracle_extremum_over(&sample, &[omega], q).ok_or(Error::InvalidPlan("no members sampled".into()))
}

/// Minimum of `Re g(jω)/f(jω)` over sampled members and the frequency grid.
pub fn oracle_global_inf(
    itf: &IntervalTransferFunction,
    omega_grid: &[f64],
    plan: &SamplingPlan,
    tol: &Tolerances,
) -> Result<OracleValue> {
    if !family_kharitonov_stable(&itf.den, tol)? {
        return Err(Error::DenominatorNotHurwitz { vertex: "family".into() });
    }
    let sample = sample_family(itf, plan)?;
    oracle_extremum_over(&sample, omega_grid, Quantity::MinRe)
        .ok_or(Error::InvalidPlan("empty frequency grid or sample".into()))
}

/// `0` and `±10^(k/steps_per_decade)` for `10⁻³ ≤ |ω| ≤ 10³`, ascending.
pub fn log_omega_grid(steps_per_decade: usize) -> Vec<f64> {
    let n = 6 * steps_per_decade as i64;
    let half = steps_per_decade as i64 * 3;
    let positive: Vec<f64> = (0..=n).map(|k| 10f64.powf((k - half) as f64 / steps_per_decade as f64)).collect();
    let mut grid: Vec<f64> = positive.iter().rev().map(|w| -w).collect();
    grid.push(0.0);
    grid.extend(positive);
    grid
}

/// Stationary frequencies of all sixteen vertex pairs over `range` (both signs).
pub fn vertex_stationary_points(itf: &IntervalTransferFunction, range: FrequencyRange, tol: &Tolerances) -> Vec<f64> {
    let mut out = Vec::new();
    for t in VertexIndexTuple::all() {
        let (g, f) = itf.vertex_pair(&t);
        if let Ok(r) = vertex_pair_infimum(&g, &f, range, tol) {
            if let Some(w) = r.arg_omega {
                out.push(w);
                if !matches!(range, FrequencyRange::Band(b) if !b.contains(-w)) {
                    out.push(-w);
                }
            }
        }
    }
    out
}

/// Default grid for global oracles: 120 logarithmic steps per decade on each
/// side, `ω = 0`, and the vertex stationary points.
pub fn default_omega_grid(itf: &IntervalTransferFunction, tol: &Tolerances) -> Vec<f64> {
    let mut grid = log_omega_grid(120);
    grid.extend(vertex_stationary_points(itf, FrequencyRange::AllReals, tol));
    grid
}

/// 201 evenly spaced points in the band plus the vertex stationary points inside it.
pub fn band_omega_grid(itf: &IntervalTransferFunction, band: &BandSpec, tol: &Tolerances) -> Vec<f64> {
    let n = 201;
    let mut grid: Vec<f64> = (0..n).map(|k| band.w1() + (band.w2() - band.w1()) * k as f64 / (n - 1) as f64).collect();
    grid.extend(vertex_stationary_points(itf, FrequencyRange::Band(*band), tol));
    grid
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AnalysisKind {
    Pointwise { omega: f64, quantity: Quantity },
    Band { band: BandSpec },
    Global,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Consistent,
    Violation,
}

/// Overrides for the vertex side of a comparison; used to mutation-test the harness.
#[derive(Debug, Clone, Default)]
pub struct CompareOptions {
    pub i1: Option<IndexSet>,
    pub i3: Option<IndexSet>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub analysis: AnalysisKind,
    pub vertex_value: f64,
    /// Certification status (pointwise, band) or `γ₁` classification (global).
    pub vertex_status: String,
    /// The value the vertex theorem asserts the family extremum to be (or be bounded by).
    pub asserted_value: Option<f64>,
    pub oracle_value: f64,
    pub discrepancy: f64,
    pub verdict: Verdict,
    pub witness: Witness,
    pub plan: SamplingPlan,
    pub members: usize,
    pub omegas: usize,
    pub oracle_tol: f64,
}

fn sample_with_fallback(itf: &IntervalTransferFunction, plan: &SamplingPlan) -> Result<(MemberSample, SamplingPlan)> {
    match sample_family(itf, plan) {
        Err(Error::TooManyCorners { .. }) => {
            let n = match plan.strategy {
                SamplingStrategy::Random { n_samples } => n_samples,
                _ => 10_000,
            };
            let fallback = SamplingPlan::random(n, plan.seed).with_vertices(true);
            Ok((sample_family(itf, &fallback)?, fallback))
        }
        other => other.map(|s| (s, *plan)),
    }
}

/// Runs a vertex computation and the oracle on the same family.
///
/// VIOLATION means the oracle found a member beating a value the vertex
/// theorem asserts to be the family extremum (or a bound on it) by more than
/// [`ORACLE_TOL`]; that falsifies the implementation.
pub fn compare_vertex_vs_oracle(
    itf: &IntervalTransferFunction,
    analysis: AnalysisKind,
    plan: &SamplingPlan,
    options: &CompareOptions,
    tol: &Tolerances,
) -> Result<ComparisonReport> {
    let i1 = options.i1.clone().unwrap_or_else(|| index_set(IndexSetName::I1));
    let i3 = options.i3.clone().unwrap_or_else(|| index_set(IndexSetName::I3));
    let (sample, plan) = sample_with_fallback(itf, plan)?;

    let (vertex_value, vertex_status, asserted, omegas, q) = match analysis {
        AnalysisKind::Pointwise { omega, quantity } => {
            let r = pointwise_extremum_with(itf, omega, quantity, &i1, tol)?;
            if r.status == crate::spr::CertificationStatus::ZeroInclusionFail {
                return Err(Error::ZeroInclusion { omega });
            }
            let asserted = r.is_certified().then_some(r.value);
            (r.value, r.status.as_str().to_string(), asserted, vec![omega], quantity)
        }
        AnalysisKind::Band { band } => {
            let r = band_infimum_with(itf, &band, &i1, tol)?;
            let asserted = r.is_certified().then_some(r.value);
            (r.value, r.status.as_str().to_string(), asserted, band_omega_grid(itf, &band, tol), Quantity::MinRe)
        }
        AnalysisKind::Global => {
            let r = spr_index_with(itf, &i3, tol)?;
            let asserted = match r.classification {
                Gamma1Class::FamilyInfEqualsGamma0 => r.gamma0,
                Gamma1Class::FamilyInfZero | Gamma1Class::FamilyInfNonnegative => 0.0,
            };
            let status = r.classification.as_str().to_string();
            (r.gamma0, status, Some(asserted), default_omega_grid(itf, tol), Quantity::MinRe)
        }
    };

    let oracle = oracle_extremum_over(&sample, &omegas, q).ok_or(Error::InvalidPlan("no members sampled".into()))?;
    let violation =
        asserted.is_some_and(
            |a| {
                if q.is_max() {
                    oracle.value > a + ORACLE_TOL
                } else {
                    oracle.value < a - ORACLE_TOL
                }
            },
        );
    Ok(ComparisonReport {
        analysis,
        vertex_value,
        vertex_status,
        asserted_value: asserted,
        oracle_value: oracle.value,
        discrepancy: (vertex_value - oracle.value).abs(),
        verdict: if violation { Verdict::Violation } else { Verdict::Consistent },
        witness: oracle.witness,
        plan,
        members: oracle.members,
        omegas: omegas.len(),
        oracle_tol: ORACLE_TOL,
    })
}
