//! Ehrhart polynomials and h*-vectors: the generic pipelines and the
//! closed forms for the special families.

mod closed_forms;
mod lecture_hall;
mod zonotope;

pub use closed_forms::{
    chiseled_cube_hstar, cross_polytope_hstar, in_nonpositivity_cone, lecture_hall_3d_ehrhart, payne_hstar_closed_form,
    pm_cube_hstar, pyramid_ehrhart, reeve_ehrhart, reeve_threshold, thin_lecture_hall_hstar, unit_cube_hstar,
};
pub use lecture_hall::lecture_hall_hstar;
pub use zonotope::zonotope_ehrhart;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{ehrhart_to_hstar, hstar_to_ehrhart, interpolate, HStarVector, Rational, RationalPolynomial};
use crate::lattice::{normalized_volume, parallelepiped_hstar};
use crate::polytopes::{full_rank_simplex, FamilySpec, Polytope, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Parallelepiped,
    Counting,
    ZonotopeFormula,
    ClosedForm,
    AscentStatistic,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Parallelepiped,
        Method::Counting,
        Method::ZonotopeFormula,
        Method::ClosedForm,
        Method::AscentStatistic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Parallelepiped => "parallelepiped",
            Method::Counting => "counting",
            Method::ZonotopeFormula => "zonotope-formula",
            Method::ClosedForm => "closed-form",
            Method::AscentStatistic => "ascent-statistic",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s.replace('_', "-"))
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// Ehrhart polynomial and h*-vector of one polytope, with the route taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartResult {
    pub ehrhart: RationalPolynomial,
    pub hstar: HStarVector,
    pub method: Method,
}

impl EhrhartResult {
    pub fn from_hstar(hstar: HStarVector, method: Method) -> Self {
        EhrhartResult {
            ehrhart: hstar_to_ehrhart(&hstar),
            hstar,
            method,
        }
    }

    pub fn from_ehrhart(ehrhart: RationalPolynomial, dim: usize, method: Method) -> Result<Self> {
        let hstar = ehrhart_to_hstar(&ehrhart, dim)?;
        Ok(EhrhartResult { ehrhart, hstar, method })
    }

    pub fn dim(&self) -> usize {
        self.hstar.dim()
    }

    /// Coefficient of `t` in the Ehrhart polynomial.
    pub fn linear_coefficient(&self) -> Rational {
        self.ehrhart.coeff(1)
    }

    /// `i(P; t)`, always an integer.
    pub fn count_at(&self, t: i64) -> BigInt {
        self.ehrhart.eval_int(t).to_integer()
    }
}

/// [`compute_with`] using the automatic route and the default budget.
pub fn compute(p: &Polytope) -> Result<EhrhartResult> {
    compute_with(p, None, DEFAULT_BUDGET)
}

/// Computes the Ehrhart data of `p`.
///
/// Without a forced method: simplices with vertices go through the
/// fundamental parallelepiped, zonotopes through the generator formula, and
/// everything else through counting at `t = 0..=d`. If counting exceeds the
/// budget and the family has a closed form, the closed form is used instead.
pub fn compute_with(p: &Polytope, method: Option<Method>, budget: u64) -> Result<EhrhartResult> {
    match method {
        Some(m) => run(p, m, budget),
        None => {
            let m = if p.is_simplex() {
                Method::Parallelepiped
            } else if p.generators().is_some() {
                Method::ZonotopeFormula
            } else {
                Method::Counting
            };
            match run(p, m, budget) {
                Err(e @ Error::BudgetExceeded { .. }) => match p.family() {
                    Some(f) if has_closed_form(f) => run(p, Method::ClosedForm, budget),
                    _ => Err(e),
                },
                r => r,
            }
        }
    }
}

fn run(p: &Polytope, method: Method, budget: u64) -> Result<EhrhartResult> {
    let d = p.dim();
    let result = match method {
        Method::Parallelepiped => {
            let vs = p
                .vertices()
                .filter(|_| p.is_simplex())
                .ok_or_else(|| Error::Unsupported(format!("{}: parallelepiped route needs a simplex", p.label())))?;
            let vs = full_rank_simplex(vs)?;
            let vol = normalized_volume(&vs)?;
            if vol > BigInt::from(budget) {
                return Err(Error::BudgetExceeded {
                    needed: vol.to_u128().unwrap_or(u128::MAX),
                    budget: budget as u128,
                    hint: "normalized volume exceeds the budget; try counting".into(),
                });
            }
            EhrhartResult::from_hstar(parallelepiped_hstar(&vs)?, method)
        }
        Method::Counting => {
            let hrep = p.counting_hrep()?;
            let pts = (0..=d as u64)
                .map(|t| Ok((t as i64, hrep.count(t, budget)?)))
                .collect::<Result<Vec<_>>>()?;
            EhrhartResult::from_ehrhart(interpolate(&pts)?, d, method)?
        }
        Method::ZonotopeFormula => {
            let g = p
                .generators()
                .ok_or_else(|| Error::Unsupported(format!("{}: no zonotope generators", p.label())))?;
            EhrhartResult::from_ehrhart(zonotope_ehrhart(g)?, d, method)?
        }
        Method::AscentStatistic => match p.family() {
            Some(FamilySpec::LectureHall { s }) => EhrhartResult::from_hstar(lecture_hall_hstar(s, budget)?, method),
            _ => {
                return Err(Error::Unsupported(format!(
                    "{}: ascent statistic applies to lecture hall simplices",
                    p.label()
                )))
            }
        },
        Method::ClosedForm => {
            let f = p
                .family()
                .ok_or_else(|| Error::Unsupported(format!("{}: no family closed form", p.label())))?;
            EhrhartResult::from_hstar(closed_form_hstar(f)?, method)
        }
    };
    debug_assert_eq!(result.dim(), d);
    Ok(result)
}

fn has_closed_form(f: &FamilySpec) -> bool {
    match f {
        FamilySpec::Pyramid { base, .. } => has_closed_form(base),
        FamilySpec::LectureHall { s } => thin_shape(s).is_some(),
        FamilySpec::Delta1q { .. } | FamilySpec::BaseR { .. } | FamilySpec::Hypersimplex { .. } => false,
        _ => true,
    }
}

/// `(a, b, k1, k2, k3)` when `s = (1^k1, a, 1^k2, b, 1^k3)` with `k2 >= 1`.
fn thin_shape(s: &[u64]) -> Option<(u64, u64, usize, usize, usize)> {
    let big: Vec<usize> = (0..s.len()).filter(|&i| s[i] != 1).collect();
    let d = s.len();
    let (i, j) = match big.as_slice() {
        [] => (0, d - 1),
        [i] if *i + 1 < d => (*i, d - 1),
        [i] if *i >= 2 => (0, *i),
        [i, j] if j - i >= 2 => (*i, *j),
        _ => return None,
    };
    (d >= 3 && j >= i + 2).then(|| (s[i], s[j], i, j - i - 1, d - 1 - j))
}

fn closed_form_hstar(f: &FamilySpec) -> Result<HStarVector> {
    let h = match f {
        FamilySpec::StandardSimplex { d } => HStarVector::from_u64s(&[1])?.padded(*d),
        FamilySpec::CrossPolytope { d } => cross_polytope_hstar(*d)?,
        FamilySpec::UnitCube { d } => unit_cube_hstar(*d)?,
        FamilySpec::PmCube { d } => pm_cube_hstar(*d)?,
        FamilySpec::Reeve { h } => ehrhart_to_hstar(&reeve_ehrhart(*h)?, 3)?,
        FamilySpec::Payne { r, s, k } => payne_hstar_closed_form(*r, *s, *k)?,
        FamilySpec::ChiseledPmCube { d } => chiseled_cube_hstar(*d)?,
        FamilySpec::Permutahedron { d } => {
            let p = crate::polytopes::permutahedron(*d)?;
            ehrhart_to_hstar(&zonotope_ehrhart(p.generators().unwrap())?, *d)?
        }
        FamilySpec::LectureHall { s } => {
            let (a, b, k1, k2, k3) = thin_shape(s)
                .ok_or_else(|| Error::Unsupported(format!("no closed form for lecture hall {s:?}")))?;
            thin_lecture_hall_hstar(a, b, k1, k2, k3)?
        }
        FamilySpec::Pyramid { k, base } => closed_form_hstar(base)?.padded(*k),
        other => return Err(Error::Unsupported(format!("no closed form for {other}"))),
    };
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::binomial_poly;
    use crate::polytopes::*;

    fn h(v: &[u64]) -> HStarVector {
        HStarVector::from_u64s(v).unwrap()
    }

    fn ratio(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn documented_examples() {
        let r = compute(&standard_simplex(3).unwrap()).unwrap();
        assert_eq!(r.ehrhart, binomial_poly(3, 3));
        assert_eq!(r.hstar, h(&[1, 0, 0, 0]));
        assert_eq!(r.method, Method::Parallelepiped);

        let r = compute(&cross_polytope(3).unwrap()).unwrap();
        assert_eq!(r.method, Method::Counting);
        assert_eq!(r.hstar, h(&[1, 3, 3, 1]));
        assert_eq!(
            r.ehrhart,
            RationalPolynomial::new(vec![ratio(1, 1), ratio(8, 3), ratio(2, 1), ratio(4, 3)])
        );

        let r = compute(&unit_cube(2).unwrap()).unwrap();
        assert_eq!(r.hstar, h(&[1, 1, 0]));
        assert_eq!(r.ehrhart, RationalPolynomial::from_integers([1, 2, 1]));

        let r = compute(&permutahedron(3).unwrap()).unwrap();
        assert_eq!(r.method, Method::ZonotopeFormula);
        assert_eq!(r.ehrhart, RationalPolynomial::from_integers([1, 6, 15, 16]));
    }

    #[test]
    fn pipelines_agree_on_simplices() {
        let mut cases = vec![reeve(6).unwrap(), reeve(13).unwrap(), lecture_hall(&[7, 1, 7]).unwrap()];
        for q in [vec![1, 1, 1], vec![1, 2, 4], vec![1, 3, 3, 6], vec![2, 2, 5]] {
            cases.push(delta_1q(&q).unwrap());
        }
        cases.push(base_r_simplex(3, 3).unwrap());
        cases.push(hypersimplex(5, 1).unwrap());
        cases.push(pyramid(&reeve(4).unwrap(), 2).unwrap());
        for p in cases {
            let a = compute_with(&p, Some(Method::Parallelepiped), DEFAULT_BUDGET).unwrap();
            let b = compute_with(&p, Some(Method::Counting), DEFAULT_BUDGET).unwrap();
            assert_eq!(a.ehrhart, b.ehrhart, "{}", p.label());
            assert_eq!(a.hstar, b.hstar);
            assert_eq!(a.ehrhart.eval_int(0), ratio(1, 1));
        }
    }

    #[test]
    fn closed_forms_match_pipelines() {
        for spec in [
            "reeve:h=6",
            "reeve:h=12",
            "payne:r=0,s=3,k=2",
            "chiseled-cube:d=3",
            "pm-cube:d=3",
            "unit-cube:d=3",
            "cross-polytope:d=4",
            "lecture-hall:7,1,7",
            "lecture-hall:1,3,1,4,1",
            "pyr^2:reeve:h=6",
            "pyr:lecture-hall:2,1,3",
            "permutahedron:d=3",
            "standard-simplex:d=4",
        ] {
            let p: Polytope = spec.parse::<FamilySpec>().unwrap().build().unwrap();
            let auto = compute(&p).unwrap();
            let closed = compute_with(&p, Some(Method::ClosedForm), DEFAULT_BUDGET).unwrap();
            assert_eq!(auto.hstar, closed.hstar, "{spec}");
            assert_ne!(auto.method, Method::ClosedForm);
        }
        let r = compute(&reeve(12).unwrap()).unwrap();
        assert_eq!(r.ehrhart, reeve_ehrhart(12).unwrap());
        for (a, b) in [(7, 7), (1, 1), (2, 3), (4, 19)] {
            let p = lecture_hall(&[a, 1, b]).unwrap();
            assert_eq!(compute(&p).unwrap().ehrhart, lecture_hall_3d_ehrhart(a, b).unwrap());
        }
        assert!(compute_with(&delta_1q(&[1, 2]).unwrap(), Some(Method::ClosedForm), 10).is_err());
    }

    #[test]
    fn ascent_route() {
        let p = lecture_hall(&[2, 3, 4]).unwrap();
        let a = compute_with(&p, Some(Method::AscentStatistic), DEFAULT_BUDGET).unwrap();
        assert_eq!(a.hstar, compute(&p).unwrap().hstar);
        assert!(compute_with(&reeve(2).unwrap(), Some(Method::AscentStatistic), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn budget_fallback() {
        let p = chiseled_pm_cube(4).unwrap();
        let full = compute(&p).unwrap();
        assert_eq!(full.method, Method::Counting);
        let tight = compute_with(&p, None, 50).unwrap();
        assert_eq!(tight.method, Method::ClosedForm);
        assert_eq!(tight.hstar, full.hstar);
        assert!(matches!(
            compute_with(&p, Some(Method::Counting), 50),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn pyramid_invariance() {
        for base in [standard_simplex(2).unwrap(), reeve(6).unwrap(), lecture_hall(&[2, 3]).unwrap()] {
            let hb = compute(&base).unwrap().hstar;
            for k in 1..=2 {
                let py = pyramid(&base, k).unwrap();
                let r = compute(&py).unwrap();
                assert_eq!(r.hstar, hb.padded(k));
                assert_eq!(r.ehrhart, pyramid_ehrhart(&hb, k));
                let c = compute_with(&py, Some(Method::Counting), DEFAULT_BUDGET).unwrap();
                assert_eq!(c.hstar, r.hstar);
            }
        }
        let s = [2u64, 3, 2];
        let hs = compute(&lecture_hall(&s).unwrap()).unwrap().hstar;
        assert_eq!(compute(&lecture_hall(&[1, 2, 3, 2]).unwrap()).unwrap().hstar, hs.padded(1));
        assert_eq!(compute(&lecture_hall(&[2, 3, 2, 1]).unwrap()).unwrap().hstar, hs.padded(1));
    }

    #[test]
    fn first_hstar_entry_counts_points() {
        for spec in ["reeve:h=5", "cross-polytope:d=4", "lecture-hall:2,3,4", "hypersimplex:d=4,k=2", "permutahedron:d=2"] {
            let p = spec.parse::<FamilySpec>().unwrap().build().unwrap();
            let r = compute(&p).unwrap();
            let pts = p.count_points(1, DEFAULT_BUDGET).unwrap();
            assert_eq!(BigInt::from(r.hstar.get(1)), pts - (p.dim() as i64 + 1), "{spec}");
        }
    }

    #[test]
    fn thin_shapes() {
        assert_eq!(thin_shape(&[7, 1, 7]), Some((7, 7, 0, 1, 0)));
        assert_eq!(thin_shape(&[1, 2, 1, 1, 3, 1]), Some((2, 3, 1, 2, 1)));
        assert_eq!(thin_shape(&[2, 3]), None);
        assert_eq!(thin_shape(&[2, 3, 1]), None);
        assert_eq!(thin_shape(&[1, 1, 1]), Some((1, 1, 0, 1, 0)));
        assert_eq!(thin_shape(&[1, 1, 4]), Some((1, 4, 0, 1, 0)));
    }

    #[test]
    fn methods_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("magic".parse::<Method>().is_err());
    }
}
