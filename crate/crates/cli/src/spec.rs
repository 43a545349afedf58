//! The JSON family description and tolerance overrides.

use std::path::{Path, PathBuf};

use kharibound::{IntervalPolynomial, IntervalTransferFunction, RealInterval, Tolerances};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const TOLERANCES_ENV: &str = "KHARIBOUND_TOLERANCES";

/// Tolerance block where every field is optional, so that layers can be merged.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceOverrides {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stability_margin_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positivity_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_tol: Option<f64>,
}

impl ToleranceOverrides {
    pub fn apply(&self, base: Tolerances) -> Tolerances {
        Tolerances {
            stability_margin_tol: self.stability_margin_tol.unwrap_or(base.stability_margin_tol),
            positivity_tol: self.positivity_tol.unwrap_or(base.positivity_tol),
            zero_tol: self.zero_tol.unwrap_or(base.zero_tol),
        }
    }

    fn validate(&self, path: &Path, prefix: &str) -> Result<()> {
        for (name, v) in [
            ("stability_margin_tol", self.stability_margin_tol),
            ("positivity_tol", self.positivity_tol),
            ("zero_tol", self.zero_tol),
        ] {
            if let Some(v) = v {
                if !v.is_finite() || v < 0.0 {
                    return Err(invalid(path, format!("{prefix}{name}"), format!("must be finite and >= 0, got {v}")));
                }
            }
        }
        Ok(())
    }
}

/// Numerator and denominator as `[lo, hi]` pairs in ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpecFile {
    pub numerator: Vec<[f64; 2]>,
    pub denominator: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerances: Option<ToleranceOverrides>,
}

fn invalid(path: &Path, field: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Invalid { path: path.to_path_buf(), field: field.into(), message: message.into() }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn intervals(path: &Path, field: &str, pairs: &[[f64; 2]]) -> Result<IntervalPolynomial> {
    if pairs.is_empty() {
        return Err(invalid(path, field, "coefficient list is empty"));
    }
    let coeffs = pairs
        .iter()
        .enumerate()
        .map(|(k, &[lo, hi])| {
            RealInterval::new(lo, hi).map_err(|e| invalid(path, format!("{field}[{k}]"), e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntervalPolynomial::new(coeffs)?)
}

impl FamilySpecFile {
    pub fn parse(path: &Path, text: &str) -> Result<Self> {
        let spec: Self = parse_json(path, text)?;
        spec.validate(path)?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(path, &read(path)?)
    }

    pub fn validate(&self, path: &Path) -> Result<()> {
        let num = intervals(path, "numerator", &self.numerator)?;
        intervals(path, "denominator", &self.denominator)?;
        if num.coeffs().len() > self.denominator.len() {
            return Err(invalid(
                path,
                "numerator",
                format!(
                    "numerator has {} coefficients but the denominator only {}",
                    self.numerator.len(),
                    self.denominator.len()
                ),
            ));
        }
        if let Some(t) = &self.tolerances {
            t.validate(path, "tolerances.")?;
        }
        Ok(())
    }

    pub fn family(&self) -> IntervalTransferFunction {
        let to_bounds = |v: &[[f64; 2]]| v.iter().map(|&[lo, hi]| (lo, hi)).collect::<Vec<_>>();
        IntervalTransferFunction::from_bounds(&to_bounds(&self.numerator), &to_bounds(&self.denominator))
            .expect("validated")
    }

    pub fn from_family(itf: &IntervalTransferFunction) -> Self {
        let pairs = |p: &IntervalPolynomial| p.coeffs().iter().map(|iv| [iv.lo(), iv.hi()]).collect();
        Self { numerator: pairs(&itf.num), denominator: pairs(&itf.den), tolerances: None }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

/// Defaults, then the spec file's block, then the file named by `KHARIBOUND_TOLERANCES`.
pub fn resolve_tolerances(spec: &FamilySpecFile, env_file: Option<PathBuf>) -> Result<Tolerances> {
    let mut tol = Tolerances::default();
    if let Some(t) = &spec.tolerances {
        tol = t.apply(tol);
    }
    if let Some(path) = env_file {
        let overrides: ToleranceOverrides = parse_json(&path, &read(&path)?)?;
        overrides.validate(&path, "")?;
        tol = overrides.apply(tol);
    }
    Ok(tol)
}

pub fn env_tolerance_file() -> Option<PathBuf> {
    std::env::var_os(TOLERANCES_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}
