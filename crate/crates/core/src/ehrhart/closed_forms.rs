//! Closed-form Ehrhart data for the special families.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    ehrhart_to_hstar, factorial, hstar_to_ehrhart, interpolate, stirling1_unsigned, HStarVector, Rational,
    RationalPolynomial,
};

fn big_ratio(n: BigInt, d: i64) -> Rational {
    Rational::new(n, BigInt::from(d))
}

/// `i(R_h; t) = (h/6) t^3 + t^2 + ((12 - h)/6) t + 1`.
pub fn reeve_ehrhart(h: u64) -> Result<RationalPolynomial> {
    if h < 1 {
        return Err(Error::Domain("Reeve tetrahedron needs h >= 1".into()));
    }
    let h = BigInt::from(h);
    Ok(RationalPolynomial::new(vec![
        Rational::one(),
        big_ratio(BigInt::from(12) - &h, 6),
        Rational::one(),
        big_ratio(h, 6),
    ]))
}

/// `H(d) = ceil(c(d+1, 2) / (d-2)!) + 1`, with `c` the unsigned Stirling
/// numbers of the first kind.
pub fn reeve_threshold(d: usize) -> Result<u64> {
    if d < 3 {
        return Err(Error::Domain(format!("threshold needs d >= 3, got {d}")));
    }
    let num = stirling1_unsigned(d + 1, 2);
    let den = factorial(d as u64 - 2);
    let ceil = Integer::div_ceil(&num, &den) + BigUint::one();
    u64::try_from(ceil).map_err(|_| Error::Unsupported(format!("threshold for d = {d} exceeds 64 bits")))
}

/// `i(P_3^(a,1,b); t) = (ab/6) t^3 + ((a+b)/2) t^2 + ((6 + 3(a+b) - ab)/6) t + 1`.
pub fn lecture_hall_3d_ehrhart(a: u64, b: u64) -> Result<RationalPolynomial> {
    if a < 1 || b < 1 {
        return Err(Error::Domain("lecture hall parameters must be positive".into()));
    }
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    let ab = &a * &b;
    let s = &a + &b;
    Ok(RationalPolynomial::new(vec![
        Rational::one(),
        big_ratio(BigInt::from(6) + BigInt::from(3) * &s - &ab, 6),
        big_ratio(s, 2),
        big_ratio(ab, 6),
    ]))
}

/// Whether `6 + 3(a+b) - ab < 0`, i.e. the linear coefficient of
/// `i(P_3^(a,1,b); t)` is negative.
pub fn in_nonpositivity_cone(a: u64, b: u64) -> bool {
    let (a, b) = (a as i128, b as i128);
    6 + 3 * (a + b) - a * b < 0
}

/// `(1 + (a-1) z)(1 + (b-1) z)`, padded to dimension `k1 + k2 + k3 + 2`: the
/// h*-vector of the lecture hall simplex for `s = (1^k1, a, 1^k2, b, 1^k3)`.
pub fn thin_lecture_hall_hstar(a: u64, b: u64, k1: usize, k2: usize, k3: usize) -> Result<HStarVector> {
    if a < 1 || b < 1 || k2 < 1 {
        return Err(Error::Domain("thin lecture hall needs a, b, k2 >= 1".into()));
    }
    let d = k1 + k2 + k3 + 2;
    let (a1, b1) = (BigUint::from(a - 1), BigUint::from(b - 1));
    let mut e = vec![BigUint::zero(); d + 1];
    e[0] = BigUint::one();
    e[1] = &a1 + &b1;
    e[2] = a1 * b1;
    HStarVector::new(e)
}

/// `(1 + z^k + ... + z^((s-1)k)) (1 + z + ... + z^(k+r))`.
pub fn payne_hstar_closed_form(r: u64, s: u64, k: u64) -> Result<HStarVector> {
    if s < 3 || k < r + 2 {
        return Err(Error::Domain(format!(
            "payne needs s >= 3 and k >= r + 2, got r = {r}, s = {s}, k = {k}"
        )));
    }
    let d = usize::try_from(s * k + r)
        .ok()
        .filter(|&d| d <= 1 << 20)
        .ok_or_else(|| Error::Domain("payne dimension too large".into()))?;
    let mut e = vec![0u64; d + 1];
    for i in 0..s {
        for j in 0..=k + r {
            e[(i * k + j) as usize] += 1;
        }
    }
    HStarVector::from_u64s(&e)
}

/// h* of the chiseled `[-1,1]^d`: the cube's h* (from interpolating
/// `(2t+1)^d`) with `2^d` removed from the linear entry.
pub fn chiseled_cube_hstar(d: usize) -> Result<HStarVector> {
    if d < 2 {
        return Err(Error::Domain(format!("chiseled cube needs d >= 2, got {d}")));
    }
    let cube = pm_cube_hstar(d)?;
    let mut e = cube.entries().to_vec();
    let cut = BigUint::one() << d;
    if e[1] < cut {
        return Err(Error::Verification(format!(
            "h*_1 of [-1,1]^{d} is {} < 2^{d}",
            e[1]
        )));
    }
    e[1] -= cut;
    HStarVector::new(e)
}

/// h* of `[-1,1]^d` through the counting route on `(2t+1)^d`.
pub fn pm_cube_hstar(d: usize) -> Result<HStarVector> {
    let pts: Vec<(i64, BigInt)> = (0..=d as i64)
        .map(|t| (t, BigInt::from(2 * t + 1).pow(d as u32)))
        .collect();
    ehrhart_to_hstar(&interpolate(&pts)?, d)
}

/// h* of `[0,1]^d` through the counting route on `(t+1)^d`.
pub fn unit_cube_hstar(d: usize) -> Result<HStarVector> {
    let pts: Vec<(i64, BigInt)> = (0..=d as i64)
        .map(|t| (t, BigInt::from(t + 1).pow(d as u32)))
        .collect();
    ehrhart_to_hstar(&interpolate(&pts)?, d)
}

/// `(1 + z)^d`, the h*-vector of the cross-polytope.
pub fn cross_polytope_hstar(d: usize) -> Result<HStarVector> {
    let row: Vec<BigInt> = (0..=d as i64)
        .map(|j| crate::exactmath::binomial(d as i64, j))
        .collect::<Result<_>>()?;
    HStarVector::from_bigints(&row)
}

/// Ehrhart polynomial of the `k`-fold pyramid over a polytope with the given
/// h*-vector.
pub fn pyramid_ehrhart(base_hstar: &HStarVector, k: usize) -> RationalPolynomial {
    hstar_to_ehrhart(&base_hstar.padded(k))
}
