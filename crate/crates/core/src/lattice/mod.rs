//! Integer linear algebra and lattice-point enumeration.

pub mod enumerate;
pub mod matrix;
pub mod simplex;
pub mod snf;

pub use enumerate::{count_in_system, count_in_system_within, count_lattice_points, IntBox, LinearSystem};
pub use matrix::{IntMatrix, IntVector};
pub use simplex::{
    homogenized_matrix, normalized_volume, parallelepiped_hstar, simplex_contains,
    simplex_inequalities, vertex_box,
};
pub use snf::{coordinates_in_span, smith_normal_form, SnfResult};

use crate::error::{Error, Result};

/// Whether `A · point <= t · b` componentwise.
pub fn hrep_contains(a: &IntMatrix, b: &IntVector, point: &IntVector, t: u64) -> Result<bool> {
    if a.cols() != point.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.cols(),
            found: point.dim(),
        });
    }
    if a.rows() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.dim(),
        });
    }
    let lhs = a.mul_vec(point)?;
    let t = num_bigint::BigInt::from(t);
    Ok((0..b.dim()).all(|i| lhs[i] <= &b[i] * &t))
}
