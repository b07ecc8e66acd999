//! Lattice simplices: exact membership, facet inequalities, and h* from the
//! fundamental parallelepiped of the cone over the simplex.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::enumerate::IntBox;
use super::matrix::{solve_rational, IntMatrix, IntVector};
use super::snf::smith_normal_form;
use crate::error::{Error, Result};
use crate::exactmath::HStarVector;

fn check_full_dimensional(vertices: &[IntVector]) -> Result<usize> {
    let n = vertices.first().map_or(0, IntVector::dim);
    if vertices.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: vertices.len(),
        });
    }
    if let Some(v) = vertices.iter().find(|v| v.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.dim(),
        });
    }
    Ok(n)
}

/// Columns `(v_i, 1)`, the generators of the cone over the simplex at height one.
pub fn homogenized_matrix(vertices: &[IntVector]) -> Result<IntMatrix> {
    check_full_dimensional(vertices)?;
    let cols: Vec<IntVector> = vertices.iter().map(|v| v.extended(BigInt::from(1))).collect();
    IntMatrix::from_columns(&cols)
}

/// Normalized volume `|det (v_i, 1)|`.
pub fn normalized_volume(vertices: &[IntVector]) -> Result<BigInt> {
    Ok(homogenized_matrix(vertices)?.determinant()?.abs())
}

/// Whether `point` lies in `t` times the simplex, decided by solving for the
/// barycentric coordinates exactly.
pub fn simplex_contains(vertices: &[IntVector], point: &IntVector, t: u64) -> Result<bool> {
    let m = homogenized_matrix(vertices)?;
    if point.dim() + 1 != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows() - 1,
            found: point.dim(),
        });
    }
    let rhs: Vec<BigInt> = point.extended(BigInt::from(t)).entries().to_vec();
    let lambda = solve_rational(&m, &rhs).ok_or(Error::AffinelyDependent)?;
    Ok(lambda.iter().all(|l| !l.is_negative()))
}

/// Facet inequalities `A x <= b` of the simplex, one row per vertex (the facet
/// opposite it), each row primitive. Dilating by `t` scales `b` only.
pub fn simplex_inequalities(vertices: &[IntVector]) -> Result<(IntMatrix, IntVector)> {
    let n = check_full_dimensional(vertices)?;
    let m = homogenized_matrix(vertices)?;
    let det = m.determinant()?;
    if det.is_zero() {
        return Err(Error::AffinelyDependent);
    }
    let sign = if det.is_negative() { BigInt::from(-1) } else { BigInt::from(1) };
    let mut a = IntMatrix::zeros(n + 1, n);
    let mut b = Vec::with_capacity(n + 1);
    // Row i of the adjugate is det * (row i of the inverse); lambda_i >= 0 reads
    // sign * adj_i · (x, t) >= 0.
    for i in 0..=n {
        let mut row: Vec<BigInt> = (0..=n).map(|j| cofactor(&m, j, i)).collect::<Result<_>>()?;
        let g = row.iter().fold(BigInt::zero(), |g, e| g.gcd(e));
        for e in &mut row {
            *e = &*e * &sign / &g;
        }
        for j in 0..n {
            a[(i, j)] = -&row[j];
        }
        b.push(row[n].clone());
    }
    Ok((a, IntVector::new(b)))
}

fn cofactor(m: &IntMatrix, i: usize, j: usize) -> Result<BigInt> {
    let n = m.rows();
    let mut minor = IntMatrix::zeros(n - 1, n - 1);
    for (ri, r) in (0..n).filter(|&r| r != i).enumerate() {
        for (ci, c) in (0..n).filter(|&c| c != j).enumerate() {
            minor[(ri, ci)] = m[(r, c)].clone();
        }
    }
    let d = minor.determinant()?;
    Ok(if (i + j) % 2 == 0 { d } else { -d })
}

/// Coordinate-wise bounding box of the vertices.
pub fn vertex_box(vertices: &[IntVector]) -> Result<IntBox> {
    let n = vertices.first().map_or(0, IntVector::dim);
    let pts: Vec<Vec<i64>> = vertices
        .iter()
        .map(|v| v.to_i64s().ok_or_else(|| Error::Unsupported("coordinates exceed 64 bits".into())))
        .collect::<Result<_>>()?;
    let lo = (0..n).map(|k| pts.iter().map(|p| p[k]).min().unwrap_or(0)).collect();
    let hi = (0..n).map(|k| pts.iter().map(|p| p[k]).max().unwrap_or(0)).collect();
    IntBox::new(lo, hi)
}

/// h*-vector of a full-dimensional lattice simplex.
///
/// With `U M V = D` the Smith form of the homogenized vertex matrix `M`, the
/// vectors `y` with `0 <= y_j < d_j` (taken in lexicographic order) index the
/// cosets of `Z^{d+1} / M Z^{d+1}`. The coset of `U^{-1} y` meets the half-open
/// parallelepiped in the point with coefficients `frac(V D^{-1} y)`, whose
/// height is the sum of those fractional parts.
pub fn parallelepiped_hstar(vertices: &[IntVector]) -> Result<HStarVector> {
    let n = check_full_dimensional(vertices)?;
    let m = homogenized_matrix(vertices)?;
    let snf = smith_normal_form(&m)?;
    let factors = snf.invariant_factors();
    if factors.iter().any(Zero::is_zero) {
        return Err(Error::AffinelyDependent);
    }
    let modulus = factors[n].clone();
    let big_n = modulus
        .to_i128()
        .filter(|&v| v < 1i128 << 62)
        .ok_or_else(|| Error::Unsupported(format!("invariant factor {modulus} too large")))?;

    // Only nontrivial factors contribute coset directions.
    let active: Vec<usize> = (0..=n).filter(|&j| factors[j] != BigInt::from(1)).collect();
    let moduli: Vec<i128> = active.iter().map(|&j| factors[j].to_i128().unwrap()).collect();
    // step[j][i] = V_ij * (N / d_j) mod N
    let steps: Vec<Vec<i128>> = active
        .iter()
        .map(|&j| {
            let scale = &modulus / &factors[j];
            (0..=n)
                .map(|i| (&snf.v[(i, j)] * &scale).mod_floor(&modulus).to_i128().unwrap())
                .collect()
        })
        .collect();

    let mut hist = vec![0u64; n + 1];
    let mut y = vec![0i128; active.len()];
    let mut acc = vec![0i128; n + 1];
    loop {
        let height_scaled: i128 = acc.iter().sum();
        debug_assert_eq!(height_scaled % big_n, 0);
        hist[(height_scaled / big_n) as usize] += 1;

        // odometer, last active coordinate fastest
        let mut k = active.len();
        loop {
            if k == 0 {
                let h: Vec<BigUint> = hist.into_iter().map(BigUint::from).collect();
                return HStarVector::new(h);
            }
            k -= 1;
            y[k] += 1;
            for i in 0..=n {
                acc[i] = (acc[i] + steps[k][i]) % big_n;
            }
            if y[k] < moduli[k] {
                break;
            }
            // wrapped: acc already back to its value before this digit advanced
            y[k] = 0;
        }
    }
}
