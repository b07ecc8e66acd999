//! Random lattice triangles against Pick's formulas.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ehrhart::{compute_with, Method};
use crate::error::{Error, Result};
use crate::exactmath::{is_positive, is_unimodal, HStarVector, Rational, RationalPolynomial};
use crate::lattice::IntVector;
use crate::polytopes::{Polytope, DEFAULT_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleCheck {
    pub vertices: [[i64; 2]; 3],
    /// Twice the area.
    pub double_area: i64,
    pub boundary: i64,
    pub hstar: HStarVector,
    pub positive: bool,
    pub unimodal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonReport {
    pub seed: u64,
    pub coord_bound: i64,
    pub triangles: Vec<TriangleCheck>,
}

/// Checks one triangle: counting pipeline against `i = A t^2 + (B/2) t + 1`
/// and `h* = (1, A + B/2 - 2, A - B/2 + 1)`, plus positivity and unimodality.
pub fn check_triangle(v: [[i64; 2]; 3]) -> Result<TriangleCheck> {
    let [p, q, r] = v;
    let double_area = ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1])).abs();
    if double_area == 0 {
        return Err(Error::AffinelyDependent);
    }
    let edge = |a: [i64; 2], b: [i64; 2]| (a[0] - b[0]).gcd(&(a[1] - b[1]));
    let boundary = edge(p, q) + edge(q, r) + edge(r, p);
    let poly = Polytope::from_vertices(format!("triangle {v:?}"), v.iter().map(|x| IntVector::from_i64s(x)).collect())?;
    let res = compute_with(&poly, Some(Method::Counting), DEFAULT_BUDGET)?;
    let half = |n: i64| Rational::new(BigInt::from(n), BigInt::from(2));
    let pick = RationalPolynomial::new(vec![Rational::from_integer(1.into()), half(boundary), half(double_area)]);
    let fail = |what: String| Error::Verification(format!("triangle {v:?}: {what}"));
    if res.ehrhart != pick {
        return Err(fail(format!("Ehrhart polynomial {} differs from Pick's {}", res.ehrhart, pick)));
    }
    // A + B/2 - 2 and A - B/2 + 1, doubled
    let expected = HStarVector::from_bigints(&[
        BigInt::from(1),
        BigInt::from((double_area + boundary - 4) / 2),
        BigInt::from((double_area - boundary + 2) / 2),
    ])?;
    if res.hstar != expected {
        return Err(fail(format!("h* {} differs from {}", res.hstar, expected)));
    }
    let check = TriangleCheck {
        vertices: v,
        double_area,
        boundary,
        positive: is_positive(&res.ehrhart),
        unimodal: is_unimodal(res.hstar.entries()),
        hstar: res.hstar,
    };
    if !check.positive || !check.unimodal {
        return Err(fail(format!(
            "positive={} unimodal={}",
            check.positive, check.unimodal
        )));
    }
    Ok(check)
}

/// Samples `n_samples` non-degenerate triangles with coordinates in
/// `[-coord_bound, coord_bound]` from a ChaCha stream seeded with `seed`.
pub fn polygon_property_suite(n_samples: usize, coord_bound: i64, seed: u64) -> Result<PolygonReport> {
    if coord_bound < 1 {
        return Err(Error::Domain(format!("coordinate bound must be >= 1, got {coord_bound}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triangles = Vec::with_capacity(n_samples);
    while triangles.len() < n_samples {
        let mut pt = || [rng.gen_range(-coord_bound..=coord_bound), rng.gen_range(-coord_bound..=coord_bound)];
        let v = [pt(), pt(), pt()];
        match check_triangle(v) {
            Ok(c) => triangles.push(c),
            Err(Error::AffinelyDependent) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(PolygonReport {
        seed,
        coord_bound,
        triangles,
    })
}
