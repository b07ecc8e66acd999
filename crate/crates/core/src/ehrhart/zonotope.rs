//! Ehrhart polynomials of lattice zonotopes from their generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{Rational, RationalPolynomial};
use crate::lattice::{IntMatrix, IntVector};

/// `i(Z; t) = Σ_S g(S) t^|S|` over linearly independent subsets `S` of the
/// generators, `g(S)` the gcd of the maximal minors of the matrix with
/// columns `S` (and `g(∅) = 1`).
///
/// Subsets are grown in index order; a dependent subset has `g = 0` and none of
/// its supersets are visited.
pub fn zonotope_ehrhart(generators: &[IntVector]) -> Result<RationalPolynomial> {
    let n = generators
        .first()
        .map(IntVector::dim)
        .ok_or_else(|| Error::Domain("zonotope needs at least one generator".into()))?;
    if let Some(g) = generators.iter().find(|g| g.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.dim(),
        });
    }
    if generators.iter().any(IntVector::is_zero) {
        return Err(Error::Domain("zero generator".into()));
    }
    let mut coeffs = vec![BigInt::zero(); n.min(generators.len()) + 1];
    coeffs[0] = BigInt::from(1);
    let mut subset = Vec::new();
    grow(generators, 0, &mut subset, &mut coeffs)?;
    Ok(RationalPolynomial::new(coeffs.into_iter().map(Rational::from_integer).collect()))
}

fn grow(gens: &[IntVector], start: usize, subset: &mut Vec<usize>, coeffs: &mut [BigInt]) -> Result<()> {
    for i in start..gens.len() {
        subset.push(i);
        let g = minor_gcd(gens, subset)?;
        if !g.is_zero() {
            coeffs[subset.len()] += &g;
            if subset.len() < coeffs.len() - 1 {
                grow(gens, i + 1, subset, coeffs)?;
            }
        }
        subset.pop();
    }
    Ok(())
}

/// gcd of all `k × k` minors of the `n × k` matrix with the chosen columns.
pub(crate) fn minor_gcd(gens: &[IntVector], cols: &[usize]) -> Result<BigInt> {
    let k = cols.len();
    let n = gens[cols[0]].dim();
    let mut rows: Vec<usize> = (0..k).collect();
    let mut g = BigInt::zero();
    loop {
        let mut m = IntMatrix::zeros(k, k);
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                m[(ri, ci)] = gens[c][r].clone();
            }
        }
        g = g.gcd(&m.determinant()?);
        // next k-subset of 0..n in lexicographic order
        let Some(pos) = (0..k).rev().find(|&p| rows[p] < n - k + p) else {
            return Ok(g);
        };
        rows[pos] += 1;
        for p in pos + 1..k {
            rows[p] = rows[p - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::smith_normal_form;
    use num_traits::One;
    use proptest::prelude::*;

    fn gens(rows: &[Vec<i64>]) -> Vec<IntVector> {
        rows.iter().map(|r| IntVector::from_i64s(r)).collect()
    }

    fn ints(p: &RationalPolynomial) -> Vec<i64> {
        p.coeffs().iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn cubes_segments_permutahedra() {
        for d in 1..=6usize {
            let e: Vec<Vec<i64>> = (0..d)
                .map(|i| (0..d).map(|j| (i == j) as i64).collect())
                .collect();
            let expected: Vec<i64> = (0..=d as i64)
                .map(|k| i64::try_from(crate::exactmath::binomial(d as i64, k).unwrap()).unwrap())
                .collect();
            assert_eq!(ints(&zonotope_ehrhart(&gens(&e)).unwrap()), expected);
        }
        assert_eq!(ints(&zonotope_ehrhart(&gens(&[vec![2, 0]])).unwrap()), vec![1, 2]);
        let perm3 = crate::polytopes::permutahedron(3).unwrap();
        assert_eq!(ints(&zonotope_ehrhart(perm3.generators().unwrap()).unwrap()), vec![1, 6, 15, 16]);
        assert!(zonotope_ehrhart(&gens(&[vec![0, 0]])).is_err());
        assert!(zonotope_ehrhart(&[]).is_err());
    }

    /// Product of the nonzero invariant factors equals the gcd of maximal minors.
    fn snf_content(gens: &[IntVector], cols: &[usize]) -> BigInt {
        let m = IntMatrix::from_columns(&cols.iter().map(|&c| gens[c].clone()).collect::<Vec<_>>()).unwrap();
        let snf = smith_normal_form(&m).unwrap();
        if snf.rank() < cols.len() {
            return BigInt::zero();
        }
        snf.invariant_factors().iter().filter(|f| !f.is_zero()).fold(BigInt::one(), |a, f| a * f)
    }

    proptest! {
        #[test]
        fn minor_gcd_matches_smith_form(
            entries in proptest::collection::vec(-4i64..5, 12),
            k in 1usize..4,
        ) {
            let g: Vec<IntVector> = entries.chunks(3).map(IntVector::from_i64s).collect();
            prop_assume!(g.iter().all(|v| !v.is_zero()));
            let cols: Vec<usize> = (0..k).collect();
            prop_assert_eq!(minor_gcd(&g, &cols).unwrap(), snf_content(&g, &cols));
        }

        #[test]
        fn formula_matches_counting(entries in proptest::collection::vec(-2i64..3, 6..=8)) {
            let g: Vec<IntVector> = entries.chunks(2).filter(|c| c.len() == 2).map(IntVector::from_i64s).collect();
            prop_assume!(g.iter().all(|v| !v.is_zero()));
            let p = zonotope_ehrhart(&g).unwrap();
            let h = crate::polytopes::zonotope_hrep(&g).unwrap();
            for t in 0..3u64 {
                prop_assert_eq!(
                    p.eval_int(t as i64),
                    Rational::from_integer(h.count(t, u64::MAX).unwrap())
                );
            }
        }
    }
}
