//! Positivity and unimodality classification, the verification suites and
//! the exploratory scans.

mod grid;
mod polygons;
mod scans;

pub use grid::{grid_report, grid_witnesses, thin_lecture_hall_witness, Quadrant};
pub use polygons::{check_triangle, polygon_property_suite, PolygonReport, TriangleCheck};
pub use scans::{
    conjecture_scans, reeve_pyramid_scan, scan_thin_lecture_hall, thin_lecture_hall_step, verify_payne_family,
    ConjectureEntry, ConjectureReport, ScanRow,
};

use serde::{Serialize, Serializer};

use crate::ehrhart::{compute_with, EhrhartResult, Method};
use crate::error::Result;
use crate::exactmath::{
    fraction_string, is_palindromic, is_positive, is_real_rooted, is_unimodal, unimodality_violation, HStarVector,
    Rational, RationalPolynomial,
};
use crate::polytopes::{Polytope, DEFAULT_BUDGET};

pub(crate) fn serialize_fractions<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fraction_string))
}

/// Where a polytope sits in the positivity × unimodality grid, with the exact
/// data the flags were read from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadrantReport {
    pub label: String,
    pub dim: usize,
    pub positive: bool,
    pub unimodal: bool,
    #[serde(serialize_with = "serialize_fractions")]
    pub ehrhart_coeffs: Vec<Rational>,
    pub hstar: HStarVector,
    pub method: Method,
    pub notes: Vec<String>,
}

impl QuadrantReport {
    pub fn from_result(label: impl Into<String>, r: &EhrhartResult) -> Result<Self> {
        let h = r.hstar.entries();
        let mut notes = Vec::new();
        if is_real_rooted(&r.hstar.as_polynomial())? {
            notes.push("real-rooted h*".to_string());
        } else {
            notes.push("h* not real-rooted".to_string());
        }
        if is_palindromic(&r.hstar) {
            notes.push("palindromic".to_string());
        }
        notes.push(format!("linear coeff = {}", fraction_string(&r.linear_coefficient())));
        if let Some(j) = unimodality_violation(h) {
            notes.push(format!("unimodality fails at h*_{j}"));
        }
        Ok(QuadrantReport {
            label: label.into(),
            dim: r.dim(),
            positive: is_positive(&r.ehrhart),
            unimodal: is_unimodal(h),
            ehrhart_coeffs: r.ehrhart.coeffs().to_vec(),
            hstar: r.hstar.clone(),
            method: r.method,
            notes,
        })
    }

    pub fn ehrhart(&self) -> RationalPolynomial {
        RationalPolynomial::new(self.ehrhart_coeffs.clone())
    }

    pub fn linear_coefficient(&self) -> Rational {
        self.ehrhart().coeff(1)
    }

    pub fn quadrant(&self) -> (bool, bool) {
        (self.positive, self.unimodal)
    }

    /// Whether the stored flags agree with the stored exact data.
    pub fn flags_consistent(&self) -> bool {
        self.positive == is_positive(&self.ehrhart()) && self.unimodal == is_unimodal(self.hstar.entries())
    }
}

/// Classifies `p` using the automatic pipeline.
pub fn classify(p: &Polytope) -> Result<QuadrantReport> {
    classify_with(p, None, DEFAULT_BUDGET)
}

pub fn classify_with(p: &Polytope, method: Option<Method>, budget: u64) -> Result<QuadrantReport> {
    let r = compute_with(p, method, budget)?;
    QuadrantReport::from_result(p.label(), &r)
}
