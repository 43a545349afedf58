//! One function per subcommand. Each returns what goes to stdout, a one-line
//! human summary for stderr, and the exit code.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use kharibound::interval::index_set;
use kharibound::oracle::{
    compare_vertex_vs_oracle, AnalysisKind, CompareOptions, ComparisonReport, SamplingPlan, Verdict,
};
use kharibound::spr::{
    absolute_stability_sector, band_infimum, closed_loop_spr, closed_loop_vertex, family_spr_verdict,
    pointwise_extremum, spr_index, SectorBound, SprIndexResult,
};
use kharibound::{
    BandSpec, Bound, CertificationStatus, ExtremumReport, IndexSetName, IntervalTransferFunction, Quantity,
    RealPolynomial, Tolerances, VertexIndexTuple,
};
use serde::Serialize;

use crate::error::{exit, CliError, Result};
use crate::spec::{resolve_tolerances, FamilySpecFile};

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub summary: String,
    pub exit: i32,
}

fn json_outcome<T: Serialize>(value: &T, summary: String, exit: i32) -> Outcome {
    let mut stdout = serde_json::to_string_pretty(value).expect("plain data");
    stdout.push('\n');
    Outcome { stdout, summary, exit }
}

#[derive(Debug, Clone)]
pub struct Context {
    pub spec: FamilySpecFile,
    pub itf: IntervalTransferFunction,
    pub tol: Tolerances,
}

impl Context {
    pub fn load(path: &Path, env_tolerances: Option<PathBuf>) -> Result<Self> {
        let spec = FamilySpecFile::load(path)?;
        Self::from_spec(spec, env_tolerances)
    }

    pub fn from_spec(spec: FamilySpecFile, env_tolerances: Option<PathBuf>) -> Result<Self> {
        let tol = resolve_tolerances(&spec, env_tolerances)?;
        let itf = spec.family();
        Ok(Self { spec, itf, tol })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MemberPair {
    pub numerator: RealPolynomial,
    pub denominator: RealPolynomial,
}

impl MemberPair {
    fn of(pair: (RealPolynomial, RealPolynomial)) -> Self {
        Self { numerator: pair.0, denominator: pair.1 }
    }
}

// ---- vertices ----

#[derive(Debug, Clone, Serialize)]
pub struct VertexEntry {
    /// `g11`… or `f11`…; several labels when vertices coincide.
    pub labels: Vec<String>,
    pub coefficients: RealPolynomial,
}

#[derive(Debug, Clone, Serialize)]
pub struct TupleEntry {
    pub tuple: VertexIndexTuple,
    pub numerator: String,
    pub denominator: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerticesReport {
    pub numerator_vertices: Vec<VertexEntry>,
    pub denominator_vertices: Vec<VertexEntry>,
    pub index_sets: BTreeMap<String, Vec<TupleEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn label(prefix: char, even: Bound, odd: Bound) -> String {
    format!("{prefix}{}{}", even.index(), odd.index())
}

fn vertex_entries(ip: &kharibound::IntervalPolynomial, prefix: char) -> Vec<VertexEntry> {
    let mut out: Vec<VertexEntry> = Vec::new();
    for even in Bound::ALL {
        for odd in Bound::ALL {
            let p = ip.vertex(even, odd);
            match out.iter_mut().find(|e| e.coefficients == p) {
                Some(e) => e.labels.push(label(prefix, even, odd)),
                None => out.push(VertexEntry { labels: vec![label(prefix, even, odd)], coefficients: p }),
            }
        }
    }
    out
}

pub fn vertices(ctx: &Context) -> Result<Outcome> {
    let numerator_vertices = vertex_entries(&ctx.itf.num, 'g');
    let denominator_vertices = vertex_entries(&ctx.itf.den, 'f');
    let mut index_sets = BTreeMap::new();
    for name in [IndexSetName::I1, IndexSetName::I2, IndexSetName::I3] {
        let entries = index_set(name)
            .iter()
            .map(|t| TupleEntry { tuple: *t, numerator: label('g', t.i1, t.j1), denominator: label('f', t.i2, t.j2) })
            .collect();
        index_sets.insert(format!("{name:?}"), entries);
    }
    let deduplicated = numerator_vertices.len() < 4 || denominator_vertices.len() < 4;
    let note = deduplicated.then(|| "coinciding vertices are listed once with all their labels".to_string());
    let summary = format!(
        "{} distinct numerator and {} distinct denominator vertices",
        numerator_vertices.len(),
        denominator_vertices.len()
    );
    let report = VerticesReport { numerator_vertices, denominator_vertices, index_sets, note };
    Ok(json_outcome(&report, summary, exit::OK))
}

// ---- pointwise ----

#[derive(Debug, Clone, Serialize)]
pub struct PointwiseOutput {
    pub omega: f64,
    #[serde(flatten)]
    pub report: ExtremumReport,
    pub tolerances: Tolerances,
}

fn describe(r: &ExtremumReport) -> String {
    match r.arg_tuple {
        Some(t) => format!("{:?} = {} at tuple {t} ({})", r.quantity, r.value, r.status.as_str()),
        None => format!("{:?}: {}", r.quantity, r.status.as_str()),
    }
}

pub fn pointwise(ctx: &Context, omega: f64, q: Quantity) -> Result<Outcome> {
    let report = pointwise_extremum(&ctx.itf, omega, q, &ctx.tol)?;
    let exit = if report.status == CertificationStatus::ZeroInclusionFail { exit::ZERO_INCLUSION } else { exit::OK };
    let summary = format!("omega = {omega}: {}", describe(&report));
    Ok(json_outcome(&PointwiseOutput { omega, report, tolerances: ctx.tol }, summary, exit))
}

// ---- gamma-index ----

#[derive(Debug, Clone, Serialize)]
pub struct GammaOutput {
    pub spr_index: SprIndexResult,
    pub sector: SectorBound,
    pub tolerances: Tolerances,
}

pub fn gamma_index(ctx: &Context) -> Result<Outcome> {
    let spr_index = spr_index(&ctx.itf, &ctx.tol)?;
    let sector = absolute_stability_sector(&ctx.itf, &ctx.tol)?;
    let k = match sector.k_upper.finite() {
        Some(k) => format!("{k}"),
        None => "unbounded".into(),
    };
    let summary = format!("gamma0 = {} ({}), k_upper = {k}", spr_index.gamma0, spr_index.classification.as_str());
    Ok(json_outcome(&GammaOutput { spr_index, sector, tolerances: ctx.tol }, summary, exit::OK))
}

// ---- spr ----

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SprMode {
    Family,
    Band(BandSpec),
    ClosedLoop { gamma: f64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct SprOutput {
    pub mode: &'static str,
    pub spr: bool,
    /// How the verdict was reached; never dropped so that "certified false"
    /// and "not certified" stay distinguishable.
    pub basis: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_tuple: Option<VertexIndexTuple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MemberPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub band: Option<BandSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub band_infimum: Option<ExtremumReport>,
    pub tolerances: Tolerances,
}

pub fn spr(ctx: &Context, mode: SprMode) -> Result<Outcome> {
    let out = match mode {
        SprMode::Family => {
            let v = family_spr_verdict(&ctx.itf, &ctx.tol)?;
            SprOutput {
                mode: "FAMILY",
                spr: v.spr,
                basis: "I2_VERTEX_TRANSFER_FUNCTIONS",
                witness_tuple: v.witness,
                witness: v.witness.map(|t| MemberPair::of(ctx.itf.vertex_pair(&t))),
                gamma: None,
                band: None,
                band_infimum: None,
                tolerances: ctx.tol,
            }
        }
        SprMode::Band(band) => {
            let r = band_infimum(&ctx.itf, &band, &ctx.tol)?;
            let positive = r.is_certified() && r.value > ctx.tol.positivity_tol;
            let witness = if positive { None } else { r.arg_tuple };
            SprOutput {
                mode: "BAND",
                spr: positive,
                basis: "I1_BAND_INFIMUM",
                witness_tuple: witness,
                witness: witness.map(|t| MemberPair::of(ctx.itf.vertex_pair(&t))),
                gamma: None,
                band: Some(band),
                band_infimum: Some(r),
                tolerances: ctx.tol,
            }
        }
        SprMode::ClosedLoop { gamma } => {
            let v = closed_loop_spr(&ctx.itf, gamma, &ctx.tol)?;
            SprOutput {
                mode: "CLOSED_LOOP",
                spr: v.spr,
                basis: "I3_VERTEX_CLOSED_LOOPS",
                witness_tuple: v.witness,
                witness: v.witness.map(|t| MemberPair::of(closed_loop_vertex(&ctx.itf, &t, gamma))),
                gamma: Some(gamma),
                band: None,
                band_infimum: None,
                tolerances: ctx.tol,
            }
        }
    };
    let summary = match out.witness_tuple {
        Some(t) => format!("{}: not SPR, failing vertex tuple {t}", out.mode),
        None if out.spr => format!("{}: SPR", out.mode),
        None => format!("{}: not certified", out.mode),
    };
    let code = if out.spr { exit::OK } else { exit::FALSE };
    Ok(json_outcome(&out, summary, code))
}

// ---- sweep ----

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub wmin: f64,
    pub wmax: f64,
    pub points: usize,
    pub log: bool,
}

/// One CSV row. Values are empty where the denominator value set contains zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub omega: f64,
    pub min_re: Option<f64>,
    pub max_re: Option<f64>,
    pub min_im: Option<f64>,
    pub max_im: Option<f64>,
    /// One letter per quantity in column order: `C` certified exact,
    /// `U` upper bound only, `Z` zero inclusion.
    pub certified: String,
}

fn sweep_grid(o: &SweepOptions) -> Result<Vec<f64>> {
    if !(o.wmin.is_finite() && o.wmax.is_finite()) || o.wmin >= o.wmax {
        return Err(CliError::Argument(format!("need finite wmin < wmax, got {} and {}", o.wmin, o.wmax)));
    }
    if o.points < 2 {
        return Err(CliError::Argument(format!("need at least 2 points, got {}", o.points)));
    }
    if o.log && o.wmin <= 0.0 {
        return Err(CliError::Argument("logarithmic spacing needs wmin > 0".into()));
    }
    let n = o.points - 1;
    Ok((0..=n)
        .map(|k| {
            let t = k as f64 / n as f64;
            match (k, o.log) {
                (0, _) => o.wmin,
                (k, _) if k == n => o.wmax,
                (_, true) => o.wmin * (o.wmax / o.wmin).powf(t),
                (_, false) => o.wmin + (o.wmax - o.wmin) * t,
            }
        })
        .collect())
}

pub fn sweep_rows(ctx: &Context, o: &SweepOptions) -> Result<Vec<SweepRow>> {
    sweep_grid(o)?
        .into_iter()
        .map(|w| {
            let mut values = [None; 4];
            let mut flags = String::new();
            for (k, q) in Quantity::ALL.into_iter().enumerate() {
                let r = pointwise_extremum(&ctx.itf, w, q, &ctx.tol)?;
                flags.push(match r.status {
                    CertificationStatus::CertifiedExact => 'C',
                    CertificationStatus::UpperBoundOnly => 'U',
                    CertificationStatus::ZeroInclusionFail => 'Z',
                });
                values[k] = r.value.is_finite().then_some(r.value);
            }
            let [min_re, max_re, min_im, max_im] = values;
            Ok(SweepRow { omega: w, min_re, max_re, min_im, max_im, certified: flags })
        })
        .collect()
}

pub fn write_sweep_csv<W: std::io::Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    if rows.is_empty() {
        w.write_record(["omega", "min_re", "max_re", "min_im", "max_im", "certified"])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub out: PathBuf,
    pub rows: usize,
    pub zero_inclusion_rows: usize,
}

pub fn sweep(ctx: &Context, o: &SweepOptions, out: Option<&Path>) -> Result<Outcome> {
    let rows = sweep_rows(ctx, o)?;
    let zero = rows.iter().filter(|r| r.certified.contains('Z')).count();
    let summary = format!("{} rows, {zero} with zero inclusion", rows.len());
    match out {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|source| CliError::Io { path: path.into(), source })?;
            write_sweep_csv(&rows, std::io::BufWriter::new(file))?;
            let s = SweepSummary { out: path.into(), rows: rows.len(), zero_inclusion_rows: zero };
            Ok(json_outcome(&s, summary, exit::OK))
        }
        None => {
            let mut buf = Vec::new();
            write_sweep_csv(&rows, &mut buf)?;
            Ok(Outcome { stdout: String::from_utf8(buf).expect("ascii"), summary, exit: exit::OK })
        }
    }
}

// ---- verify ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyAnalysis {
    Pointwise,
    Band,
    Gamma,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub analysis: VerifyAnalysis,
    pub omega: f64,
    pub quantity: Quantity,
    pub band: Option<BandSpec>,
    /// `0` selects corner enumeration.
    pub samples: usize,
    pub seed: u64,
    pub grid: Option<usize>,
    /// Removes a tuple from the index sets; exists to check that the harness catches it.
    pub drop_tuple: Option<VertexIndexTuple>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            analysis: VerifyAnalysis::Pointwise,
            omega: 1.0,
            quantity: Quantity::MinRe,
            band: None,
            samples: 1000,
            seed: 0,
            grid: None,
            drop_tuple: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutput {
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dropped_tuple: Option<VertexIndexTuple>,
    #[serde(flatten)]
    pub report: ComparisonReport,
    pub tolerances: Tolerances,
}

pub fn verify(ctx: &Context, o: &VerifyOptions) -> Result<Outcome> {
    let kind = match o.analysis {
        VerifyAnalysis::Pointwise => AnalysisKind::Pointwise { omega: o.omega, quantity: o.quantity },
        VerifyAnalysis::Band => AnalysisKind::Band {
            band: o.band.ok_or_else(|| CliError::Argument("--analysis band needs --band W1 W2".into()))?,
        },
        VerifyAnalysis::Gamma => AnalysisKind::Global,
    };
    let plan = match (o.grid, o.samples) {
        (Some(p), _) => SamplingPlan::grid(p),
        (None, 0) => SamplingPlan::corners_only(),
        (None, n) => SamplingPlan::random(n, o.seed).with_corners(true).with_vertices(true),
    };
    let mut options = CompareOptions::default();
    if let Some(t) = &o.drop_tuple {
        options.i1 = Some(index_set(IndexSetName::I1).without(t));
        options.i3 = Some(index_set(IndexSetName::I3).without(t));
    }
    let report = compare_vertex_vs_oracle(&ctx.itf, kind, &plan, &options, &ctx.tol)?;
    let code = match report.verdict {
        Verdict::Consistent => exit::OK,
        Verdict::Violation => exit::VIOLATION,
    };
    let summary = format!(
        "{:?}: vertex {} vs oracle {} over {} members (seed {})",
        report.verdict, report.vertex_value, report.oracle_value, report.members, o.seed
    );
    Ok(json_outcome(
        &VerifyOutput { seed: o.seed, dropped_tuple: o.drop_tuple, report, tolerances: ctx.tol },
        summary,
        code,
    ))
}
