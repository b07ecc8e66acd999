//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{IntMatrix, IntVector};
use crate::error::{Error, Result};

/// `u * a * v == d` with `u`, `v` unimodular and `d` diagonal,
/// nonnegative, `d_1 | d_2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|f| !f.is_zero()).count()
    }
}

/// Pivots on the entry of least absolute value (row-major on ties), reduces its
/// row and column, and repairs divisibility by folding offending rows into the
/// pivot row.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SnfResult> {
    let (m, n) = (a.rows(), a.cols());
    if m == 0 || n == 0 {
        return Err(Error::Domain("Smith normal form of an empty matrix".into()));
    }
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let e = &d[(i, j)];
                    if !e.is_zero() && pivot.map_or(true, |(pi, pj)| e.abs() < d[(pi, pj)].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return Ok(SnfResult { u, d, v });
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if !d[(i, t)].is_zero() {
                    let q = -d[(i, t)].div_floor(&d[(t, t)]);
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    clean &= d[(i, t)].is_zero();
                }
            }
            if !clean {
                continue;
            }
            for j in t + 1..n {
                if !d[(t, j)].is_zero() {
                    let q = -d[(t, j)].div_floor(&d[(t, t)]);
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    clean &= d[(t, j)].is_zero();
                }
            }
            if !clean {
                continue;
            }
            let p = d[(t, t)].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Ok(SnfResult { u, d, v })
}

/// Re-expresses vectors in a lattice basis of their span.
///
/// Returns the images under a unimodular map that sends the span onto the
/// first `rank` coordinates, truncated to those coordinates, together with the
/// rank. Lattice points of any region inside the span correspond bijectively.
pub fn coordinates_in_span(vectors: &[IntVector]) -> Result<(Vec<IntVector>, usize)> {
    let w = IntMatrix::from_columns(vectors)?;
    let snf = smith_normal_form(&w)?;
    let rank = snf.rank();
    let images = vectors
        .iter()
        .map(|x| {
            let y = snf.u.mul_vec(x)?;
            debug_assert!(y.entries()[rank..].iter().all(Zero::is_zero));
            Ok(IntVector::new(y.entries()[..rank].to_vec()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((images, rank))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn diag(snf: &SnfResult) -> Vec<i64> {
        snf.invariant_factors()
            .iter()
            .map(|f| i64::try_from(f).unwrap())
            .collect()
    }

    fn check_invariants(a: &IntMatrix, snf: &SnfResult) {
        assert_eq!(&(&snf.u * a) * &snf.v, snf.d);
        assert!(snf.d.is_diagonal());
        assert_eq!(snf.u.determinant().unwrap().abs(), BigInt::from(1));
        assert_eq!(snf.v.determinant().unwrap().abs(), BigInt::from(1));
        let f = snf.invariant_factors();
        assert!(f.iter().all(|x| !x.is_negative()));
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]) || w[0].is_zero() && w[1].is_zero(), "{f:?}");
        }
    }

    #[test]
    fn small_cases() {
        let id = IntMatrix::identity(3);
        let s = smith_normal_form(&id).unwrap();
        assert_eq!(s.d, id);

        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]).unwrap();
        let s = smith_normal_form(&a).unwrap();
        check_invariants(&a, &s);
        assert_eq!(diag(&s), vec![1, 6]);

        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]).unwrap();
        let s = smith_normal_form(&a).unwrap();
        check_invariants(&a, &s);
        assert_eq!(diag(&s), vec![2, 4]);

        assert!(smith_normal_form(&IntMatrix::zeros(0, 2)).is_err());
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        let s = smith_normal_form(&a).unwrap();
        check_invariants(&a, &s);
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn span_coordinates_of_permutahedron_generators() {
        // e_i - e_j in R^3 span a rank-2 lattice.
        let gens = vec![
            IntVector::from_i64s(&[1, -1, 0]),
            IntVector::from_i64s(&[1, 0, -1]),
            IntVector::from_i64s(&[0, 1, -1]),
        ];
        let (img, rank) = coordinates_in_span(&gens).unwrap();
        assert_eq!(rank, 2);
        assert!(img.iter().all(|v| v.dim() == 2));
        // Unimodular change of coordinates preserves the lattice index (1 here).
        let m = IntMatrix::from_columns(&img[..2]).unwrap();
        assert_eq!(m.determinant().unwrap().abs(), BigInt::from(1));
    }

    proptest! {
        #[test]
        fn snf_invariants_hold(rows in 1usize..4, cols in 1usize..4,
                               seed in proptest::collection::vec(-9i64..10, 16)) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect())
                .collect();
            let a = IntMatrix::from_rows(&data).unwrap();
            let s = smith_normal_form(&a).unwrap();
            check_invariants(&a, &s);
            if rows == cols {
                let det_d: BigInt = s.invariant_factors().iter().product();
                prop_assert_eq!(det_d, a.determinant().unwrap().abs());
            }
        }
    }
}
