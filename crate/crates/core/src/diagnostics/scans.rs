//! Parameter sweeps over the families.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::QuadrantReport;
use crate::ehrhart::{
    compute_with, in_nonpositivity_cone, payne_hstar_closed_form, thin_lecture_hall_hstar, EhrhartResult, Method,
};
use crate::error::{Error, Result};
use crate::exactmath::{
    all_roots_on_critical_line, all_roots_on_unit_circle, is_palindromic, unimodality_violation, HStarVector, Rational,
};
use crate::polytopes::{base_r_simplex, hypersimplex, payne, reeve};

/// One cell of a thin lecture hall sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub a: u64,
    pub b: u64,
    pub report: QuadrantReport,
}

fn thin_label(d: usize, a: u64, b: u64) -> String {
    let mut s = vec![a.to_string()];
    s.extend(std::iter::repeat("1".to_string()).take(d - 2));
    s.push(b.to_string());
    format!("lecture-hall:{}", s.join(","))
}

/// Classifies `P_d^(a, 1^(d-2), b)` for `1 <= a <= a_max`, `1 <= b <= b_max`
/// from the closed-form h*. Rows are ordered by `a`, then `b`.
///
/// For `d = 3` the sign of the linear coefficient is checked against the
/// cone `6 + 3(a+b) - ab < 0`: it is negative exactly inside the cone.
pub fn scan_thin_lecture_hall(d: usize, a_max: u64, b_max: u64) -> Result<Vec<ScanRow>> {
    if d < 3 {
        return Err(Error::Domain(format!("thin lecture hall scan needs d >= 3, got {d}")));
    }
    let rows: Vec<ScanRow> = (1..=a_max)
        .into_par_iter()
        .map(|a| {
            (1..=b_max)
                .map(|b| {
                    let h = thin_lecture_hall_hstar(a, b, 0, d - 2, 0)?;
                    let r = EhrhartResult::from_hstar(h, Method::ClosedForm);
                    let report = QuadrantReport::from_result(thin_label(d, a, b), &r)?;
                    if d == 3 && (report.linear_coefficient() < Rational::from_integer(0.into())) != in_nonpositivity_cone(a, b)
                    {
                        return Err(Error::Verification(format!(
                            "({a},{b}): linear coefficient {} disagrees with the cone",
                            report.linear_coefficient()
                        )));
                    }
                    Ok(ScanRow { a, b, report })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<Vec<_>>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(rows)
}

/// Change in the linear Ehrhart coefficient of `P_d^(a, 1^(d-2), b)` when `b`
/// grows by one: `(d - a) / (d (d - 1))`.
pub fn thin_lecture_hall_step(d: usize, a: u64) -> Rational {
    Rational::new(
        BigInt::from(d as i64 - a as i64),
        BigInt::from((d * (d - 1)) as i64),
    )
}

/// Checks the Payne simplex `Δ_(1,q)` for `(r, s, k)`: closed-form h* equals the
/// parallelepiped h* (when the volume fits the budget), h* is palindromic and
/// not unimodal with roots on the unit circle, and the Ehrhart polynomial is
/// strictly positive with roots on `Re z = -1/2`.
pub fn verify_payne_family(r: u64, s: u64, k: u64, budget: u64, tol: f64) -> Result<QuadrantReport> {
    let closed = payne_hstar_closed_form(r, s, k)?;
    let p = payne(r, s, k)?;
    let fail = |what: String| Error::Verification(format!("{}: {what}", p.label()));
    let mut notes = Vec::new();
    match compute_with(&p, Some(Method::Parallelepiped), budget) {
        Ok(res) => {
            if res.hstar != closed {
                return Err(fail(format!("closed form {closed} but parallelepiped gives {}", res.hstar)));
            }
            notes.push("closed form matches parallelepiped h*".to_string());
        }
        Err(Error::BudgetExceeded { .. }) => notes.push("parallelepiped check skipped (budget)".to_string()),
        Err(e) => return Err(e),
    }
    let res = EhrhartResult::from_hstar(closed, Method::ClosedForm);
    let mut report = QuadrantReport::from_result(p.label(), &res)?;
    if report.unimodal {
        return Err(fail(format!("h* = {} is unimodal", res.hstar)));
    }
    let j = unimodality_violation(res.hstar.entries()).expect("not unimodal");
    notes.push(format!(
        "dip h*_{} = {} > h*_{j} = {} < h*_{} = {}",
        j - 1,
        res.hstar.get(j - 1),
        res.hstar.get(j),
        j + 1,
        res.hstar.get(j + 1)
    ));
    if !is_palindromic(&res.hstar) {
        return Err(fail(format!("h* = {} is not palindromic", res.hstar)));
    }
    if !all_roots_on_unit_circle(&res.hstar.as_polynomial(), tol)? {
        return Err(fail("h* has a root off the unit circle".into()));
    }
    notes.push("h* roots on unit circle".to_string());
    if !all_roots_on_critical_line(&res.ehrhart, tol)? {
        return Err(fail("Ehrhart polynomial has a root off Re z = -1/2".into()));
    }
    notes.push("Ehrhart roots on Re z = -1/2".to_string());
    if !report.positive {
        return Err(fail("Ehrhart polynomial is not positive".into()));
    }
    report.notes.extend(notes);
    Ok(report)
}

/// `Pyr^k(R_h)` for `k = 0..=k_max`, classified from the padded h*-vector.
pub fn reeve_pyramid_scan(h: u64, k_max: usize) -> Result<Vec<QuadrantReport>> {
    let base = HStarVector::from_u64s(&[1, 0, h.saturating_sub(1), 0])?;
    reeve(h)?;
    (0..=k_max)
        .map(|k| {
            let label = match k {
                0 => format!("reeve:h={h}"),
                1 => format!("pyr:reeve:h={h}"),
                k => format!("pyr^{k}:reeve:h={h}"),
            };
            QuadrantReport::from_result(label, &EhrhartResult::from_hstar(base.padded(k), Method::ClosedForm))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureEntry {
    pub conjecture: &'static str,
    pub expected: &'static str,
    pub holds: bool,
    pub report: QuadrantReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub entries: Vec<ConjectureEntry>,
    pub counterexamples: Vec<String>,
    pub errors: Vec<String>,
}

/// Sweeps uniform matroid polytopes (expected positive and unimodal) and
/// base-`r` simplices (expected positive). Failures are collected, never
/// raised.
pub fn conjecture_scans(budget: u64) -> ConjectureReport {
    let mut jobs: Vec<(&'static str, &'static str, Box<dyn Fn() -> Result<QuadrantReport> + Sync + Send>)> = Vec::new();
    for d in 2..=6usize {
        for k in 1..d {
            jobs.push((
                "matroid",
                "positive and unimodal",
                Box::new(move || super::classify_with(&hypersimplex(d, k)?, None, budget)),
            ));
        }
    }
    for r in 2..=4u64 {
        for d in 1..=5usize {
            jobs.push((
                "base-r",
                "positive",
                Box::new(move || super::classify_with(&base_r_simplex(r, d)?, None, budget)),
            ));
        }
    }
    let results: Vec<_> = jobs.par_iter().map(|(c, e, job)| (*c, *e, job())).collect();
    let mut report = ConjectureReport {
        entries: Vec::new(),
        counterexamples: Vec::new(),
        errors: Vec::new(),
    };
    for (conjecture, expected, res) in results {
        match res {
            Ok(q) => {
                let holds = match conjecture {
                    "matroid" => q.positive && q.unimodal,
                    _ => q.positive,
                };
                if !holds {
                    report.counterexamples.push(format!(
                        "COUNTEREXAMPLE to the {conjecture} conjecture: {} positive={} unimodal={}",
                        q.label, q.positive, q.unimodal
                    ));
                }
                report.entries.push(ConjectureEntry {
                    conjecture,
                    expected,
                    holds,
                    report: q,
                });
            }
            Err(e) => report.errors.push(format!("{conjecture}: {e}")),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytopes::{lecture_hall, DEFAULT_BUDGET};

    #[test]
    fn scan_d3_cone() {
        let rows = scan_thin_lecture_hall(3, 10, 10).unwrap();
        assert_eq!(rows.len(), 100);
        let negative: Vec<(u64, u64)> = rows
            .iter()
            .filter(|r| r.report.linear_coefficient() < Rational::from_integer(0.into()))
            .map(|r| (r.a, r.b))
            .collect();
        let cone: Vec<(u64, u64)> = rows.iter().filter(|r| in_nonpositivity_cone(r.a, r.b)).map(|r| (r.a, r.b)).collect();
        assert_eq!(negative, cone);
        assert!(negative.contains(&(7, 7)));
        let r23 = rows.iter().find(|r| (r.a, r.b) == (2, 3)).unwrap();
        assert!(r23.report.positive);
        // boundary points of the cone have a zero linear coefficient
        let zero: Vec<(u64, u64)> = rows
            .iter()
            .filter(|r| r.report.linear_coefficient() == Rational::from_integer(0.into()))
            .map(|r| (r.a, r.b))
            .collect();
        assert_eq!(zero, vec![(6, 8), (8, 6)]);
        assert!(rows.iter().all(|r| r.report.unimodal));
    }

    #[test]
    fn scan_matches_polytope_pipeline() {
        for row in scan_thin_lecture_hall(4, 4, 4).unwrap() {
            let p = lecture_hall(&[row.a, 1, 1, row.b]).unwrap();
            let direct = super::super::classify(&p).unwrap();
            assert_eq!(direct.hstar, row.report.hstar);
            assert_eq!(direct.label, row.report.label);
        }
    }

    #[test]
    fn monotone_in_b() {
        let d = 5;
        let a = 6;
        let rows = scan_thin_lecture_hall(d, a, 100).unwrap();
        let lin: Vec<Rational> = rows.iter().filter(|r| r.a == a).map(|r| r.report.linear_coefficient()).collect();
        for w in lin.windows(2) {
            assert_eq!(&w[1] - &w[0], thin_lecture_hall_step(d, a));
        }
        let first_bad = rows.iter().filter(|r| r.a == a).position(|r| !r.report.positive).unwrap();
        assert!(rows.iter().filter(|r| r.a == a).skip(first_bad).all(|r| !r.report.positive));
    }

    #[test]
    fn payne_families() {
        for (r, s, k) in [(0, 3, 2), (0, 3, 3), (1, 3, 3)] {
            let rep = verify_payne_family(r, s, k, DEFAULT_BUDGET, 1e-6).unwrap();
            assert_eq!(rep.quadrant(), (true, false));
            assert!(rep.notes.iter().any(|n| n == "closed form matches parallelepiped h*"));
        }
        assert_eq!(verify_payne_family(0, 3, 2, DEFAULT_BUDGET, 1e-6).unwrap().dim, 6);
        assert!(verify_payne_family(0, 3, 2, 5, 1e-6)
            .unwrap()
            .notes
            .iter()
            .any(|n| n.contains("skipped")));
    }

    #[test]
    fn reeve_pyramids_positive() {
        let scan = reeve_pyramid_scan(6, 4).unwrap();
        assert!(scan.iter().all(|r| r.quadrant() == (true, false)));
        assert_eq!(scan[2].label, "pyr^2:reeve:h=6");
    }

    #[test]
    fn conjectures_hold_in_range() {
        let rep = conjecture_scans(DEFAULT_BUDGET);
        assert!(rep.errors.is_empty(), "{:?}", rep.errors);
        assert_eq!(rep.entries.len(), 15 + 15);
        for c in &rep.counterexamples {
            eprintln!("{c}");
        }
    }
}
