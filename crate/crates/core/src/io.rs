//! JSON input formats and versioned report documents (double precision).
//!
//! Reports carry `"schema": "spinim/1"`. Field order is fixed by the struct
//! definitions and floats use the shortest representation that round-trips,
//! so identical inputs give byte-identical output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog::CatalogEntry;
use crate::clifford::Spinor;
use crate::compatibility::CompatibilityReport;
use crate::conventions::ConventionReport;
use crate::error::{Error, Result};
use crate::frame::FrameGeometry;
use crate::killing::{Ambient, Branch, ImmersionData, KillingReport};
use crate::linalg::{Mat3, Vec3};
use crate::obstruction::ObstructionResult;
use crate::scalar::Cplx;
use crate::spin::FramedSpinorField;

pub const SCHEMA: &str = "spinim/1";

fn schema() -> &'static str {
    SCHEMA
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryJson {
    pub name: String,
    pub christoffel: [[[f64; 3]; 3]; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi_index: Option<usize>,
}

impl GeometryJson {
    pub fn from_geometry(g: &FrameGeometry<f64>) -> Self {
        Self {
            name: g.name.clone(),
            christoffel: *g.christoffel(),
            xi_index: g.xi_index,
        }
    }

    pub fn into_geometry(self) -> Result<FrameGeometry<f64>> {
        let g = FrameGeometry::new(self.name, self.christoffel)?;
        match self.xi_index {
            Some(xi) => g.with_xi(xi),
            None => Ok(g),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AmbientJson {
    SpaceForm,
    Product,
}

impl From<Ambient> for AmbientJson {
    fn from(a: Ambient) -> Self {
        match a {
            Ambient::SpaceForm => Self::SpaceForm,
            Ambient::Product => Self::Product,
        }
    }
}

impl From<AmbientJson> for Ambient {
    fn from(a: AmbientJson) -> Self {
        match a {
            AmbientJson::SpaceForm => Self::SpaceForm,
            AmbientJson::Product => Self::Product,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinorFieldJson {
    pub value: [f64; 4],
    #[serde(default)]
    pub frame_derivs: [[f64; 4]; 3],
}

impl SpinorFieldJson {
    pub fn from_field(f: &FramedSpinorField<f64>) -> Self {
        Self {
            value: f.value.to_parts(),
            frame_derivs: f.frame_derivs.map(|d| d.to_parts()),
        }
    }

    pub fn into_field(self) -> FramedSpinorField<f64> {
        FramedSpinorField::new(
            Spinor::from_parts(self.value),
            self.frame_derivs.map(Spinor::from_parts),
        )
    }
}

/// Immersion data file, optionally carrying the spinor field to test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImmersionJson {
    #[serde(rename = "A")]
    pub a: [[f64; 3]; 3],
    #[serde(rename = "T")]
    pub t: [f64; 3],
    pub f: f64,
    pub eta: ComplexJson,
    pub ambient: AmbientJson,
    pub branch: i64,
    /// Mean curvature override; `tr(A)/3` when absent.
    #[serde(rename = "H", default, skip_serializing_if = "Option::is_none")]
    pub h: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spinor: Option<SpinorFieldJson>,
}

impl ImmersionJson {
    pub fn from_data(d: &ImmersionData<f64>) -> Self {
        Self {
            a: d.a.0,
            t: d.hyp.t.0,
            f: d.hyp.f,
            eta: ComplexJson {
                re: d.hyp.eta.re,
                im: d.hyp.eta.im,
            },
            ambient: d.hyp.ambient.into(),
            branch: match d.hyp.branch {
                Branch::Plus => 1,
                Branch::Minus => -1,
            },
            h: None,
            spinor: None,
        }
    }

    pub fn to_data(&self) -> Result<ImmersionData<f64>> {
        let branch = Branch::from_sign(self.branch)
            .ok_or_else(|| Error::InvalidData(format!("branch must be 1 or -1, got {}", self.branch)))?;
        let d = ImmersionData::new(
            Mat3(self.a),
            Vec3(self.t),
            self.f,
            Cplx::new(self.eta.re, self.eta.im),
            self.ambient.into(),
            branch,
        )?;
        let d = match self.h {
            Some(h) => d.with_mean_curvature(h),
            None => d,
        };
        d.validate()?;
        Ok(d)
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_geometry(text: &str) -> Result<FrameGeometry<f64>> {
    parse::<GeometryJson>(text)?.into_geometry()
}

pub fn parse_immersion(text: &str) -> Result<(ImmersionData<f64>, Option<FramedSpinorField<f64>>)> {
    let j: ImmersionJson = parse(text)?;
    Ok((j.to_data()?, j.spinor.map(SpinorFieldJson::into_field)))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types always serialize")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructuralJson {
    #[serde(rename = "nabla_T")]
    pub nabla_t: f64,
    pub df: f64,
    pub unit_norm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorstIndicesJson {
    pub gauss: [usize; 3],
    pub codazzi: [usize; 2],
    #[serde(rename = "nabla_T", skip_serializing_if = "Option::is_none")]
    pub nabla_t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub df: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictsJson {
    pub gauss: bool,
    pub codazzi: bool,
    pub structural: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub geometry: String,
    pub gauss: f64,
    pub codazzi: f64,
    pub structural: Option<StructuralJson>,
    pub verdicts: VerdictsJson,
    pub pass: bool,
    pub tolerance: f64,
    pub worst_indices: WorstIndicesJson,
}

impl CheckJson {
    pub fn new(geometry: &str, r: &CompatibilityReport<f64>) -> Self {
        Self {
            schema: schema(),
            command: "check",
            geometry: geometry.to_string(),
            gauss: r.gauss,
            codazzi: r.codazzi,
            structural: r.structural.map(|s| StructuralJson {
                nabla_t: s.nabla_t,
                df: s.df,
                unit_norm: s.unit_norm,
            }),
            verdicts: VerdictsJson {
                gauss: r.gauss_pass(),
                codazzi: r.codazzi_pass(),
                structural: r.structural_pass(),
            },
            pass: r.pass(),
            tolerance: r.tolerance,
            worst_indices: WorstIndicesJson {
                gauss: [r.gauss_worst.0, r.gauss_worst.1, r.gauss_worst.2],
                codazzi: [r.codazzi_worst.0, r.codazzi_worst.1],
                nabla_t: r.structural.map(|s| s.nabla_t_worst),
                df: r.structural.map(|s| s.df_worst),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitJson {
    pub lambda: f64,
    pub eta: f64,
    pub xi_index: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub geometry: String,
    pub ricci: [[f64; 3]; 3],
    pub split: SplitJson,
    pub case_tag: &'static str,
    pub candidates: Vec<[[f64; 3]; 3]>,
    pub codazzi_residuals: Vec<f64>,
    pub verdict: &'static str,
    pub tolerance: f64,
}

impl ObstructJson {
    pub fn new(geometry: &str, r: &ObstructionResult<f64>) -> Self {
        Self {
            schema: schema(),
            command: "obstruct",
            geometry: geometry.to_string(),
            ricci: r.ricci.0,
            split: SplitJson {
                lambda: r.split.lambda,
                eta: r.split.eta_einstein,
                xi_index: r.split.xi_index,
            },
            case_tag: r.case.as_str(),
            candidates: r.candidates.iter().map(|m| m.0).collect(),
            codazzi_residuals: r.codazzi_residuals.clone(),
            verdict: r.verdict.as_str(),
            tolerance: r.tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReconstructionJson {
    #[serde(rename = "A")]
    pub a: [[f64; 3]; 3],
    pub omega: [f64; 3],
    #[serde(rename = "U")]
    pub u: [[f64; 3]; 3],
    #[serde(rename = "V")]
    pub v: [[f64; 3]; 3],
    pub killing_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeanCurvatureJson {
    /// Value used by the Dirac residual.
    pub dirac: f64,
    pub convention: &'static str,
    pub half_trace: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KillingJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub geometry: String,
    pub branch: i64,
    pub killing: [f64; 3],
    pub dirac: f64,
    pub norm_condition: [f64; 3],
    pub norm_condition_unscaled: [f64; 3],
    pub energy_momentum: [[f64; 3]; 3],
    pub mean_curvature: MeanCurvatureJson,
    pub reconstruction: Option<ReconstructionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reconstruction_error: Option<String>,
    pub pass: bool,
    pub tolerance: f64,
}

impl KillingJson {
    pub fn new(geometry: &str, d: &ImmersionData<f64>, r: &KillingReport<f64>) -> Self {
        let (reconstruction, reconstruction_error) = match &r.reconstruction {
            Ok(rec) => (
                Some(ReconstructionJson {
                    a: rec.a_rec.0,
                    omega: rec.omega.0,
                    u: rec.u.0,
                    v: rec.v.0,
                    killing_residual: rec.killing_residual,
                }),
                None,
            ),
            Err(e) => (None, Some(e.to_string())),
        };
        Self {
            schema: schema(),
            command: "killing",
            geometry: geometry.to_string(),
            branch: match d.hyp.branch {
                Branch::Plus => 1,
                Branch::Minus => -1,
            },
            killing: r.killing,
            dirac: r.dirac,
            norm_condition: r.norm_condition,
            norm_condition_unscaled: r.norm_condition_unscaled,
            energy_momentum: r.energy_momentum.0,
            mean_curvature: MeanCurvatureJson {
                dirac: r.mean_curvature,
                convention: "trace/3",
                half_trace: r.half_trace,
            },
            reconstruction,
            reconstruction_error,
            pass: r.pass(),
            tolerance: r.tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CalibrationJson {
    pub name: String,
    pub residual: Option<f64>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConventionsJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub conventions: BTreeMap<&'static str, &'static str>,
    pub checks: Vec<CalibrationJson>,
    pub pass: bool,
}

impl ConventionsJson {
    pub fn new(r: &ConventionReport) -> Self {
        Self {
            schema: schema(),
            command: "conventions",
            conventions: r.statements.iter().copied().collect(),
            checks: r
                .checks
                .iter()
                .map(|c| CalibrationJson {
                    name: c.name.clone(),
                    residual: c.residual.is_finite().then_some(c.residual),
                    pass: c.pass,
                })
                .collect(),
            pass: r.pass(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogEntryJson {
    pub name: String,
    pub parameters: BTreeMap<&'static str, f64>,
    pub space_form: bool,
    pub geometry: GeometryJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub special_spinor: Option<[f64; 4]>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub fixtures: Vec<ImmersionJson>,
}

impl CatalogEntryJson {
    pub fn new(e: &CatalogEntry<f64>) -> Self {
        Self {
            name: e.name.clone(),
            parameters: e.parameters.iter().copied().collect(),
            space_form: e.space_form,
            geometry: GeometryJson::from_geometry(&e.geometry),
            special_spinor: e.special_spinor.map(|f| f.value.to_parts()),
            fixtures: e.fixtures.iter().map(|f| ImmersionJson::from_data(&f.data)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub entries: Vec<CatalogEntryJson>,
}

impl CatalogJson {
    pub fn new(entries: &[CatalogEntry<f64>]) -> Self {
        Self {
            schema: schema(),
            command: "catalog-list",
            entries: entries.iter().map(CatalogEntryJson::new).collect(),
        }
    }
}
