//! Facet description of a zonotope from its generators.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{to_i64, HRep};
use crate::error::{Error, Result};
use crate::lattice::{coordinates_in_span, IntBox, IntMatrix, IntVector};

/// Inequalities for the zonotope of `generators`, written in a lattice basis of
/// their span (so the result is full-dimensional with the same lattice points).
///
/// Each facet normal is orthogonal to some `r - 1` independent generators,
/// `r` the rank; its two support values are the sums of the positive and
/// negative parts of `n · g` over all generators.
pub fn zonotope_hrep(generators: &[IntVector]) -> Result<HRep> {
    if generators.is_empty() || generators.iter().any(IntVector::is_zero) {
        return Err(Error::Domain("zonotope generators must be nonzero".into()));
    }
    let (gens, r) = coordinates_in_span(generators)?;
    let mut normals = BTreeSet::new();
    if r == 1 {
        normals.insert(vec![BigInt::from(1)]);
    } else {
        let mut subset = Vec::with_capacity(r - 1);
        collect_normals(&gens, r, 0, &mut subset, &mut normals)?;
    }
    let mut rows = Vec::with_capacity(2 * normals.len());
    let mut rhs = Vec::with_capacity(2 * normals.len());
    for n in &normals {
        let nv = IntVector::new(n.clone());
        let (mut hi, mut lo) = (BigInt::zero(), BigInt::zero());
        for g in &gens {
            let p = nv.dot(g);
            if p.is_positive() {
                hi += p;
            } else {
                lo += p;
            }
        }
        let row: Vec<i64> = n.iter().map(|e| to_i64(e, "facet normal")).collect::<Result<_>>()?;
        rows.push(row.iter().map(|e| -e).collect());
        rhs.push(to_i64(&-lo, "support value")?);
        rows.push(row);
        rhs.push(to_i64(&hi, "support value")?);
    }
    let mut lo = vec![0i64; r];
    let mut hi = vec![0i64; r];
    for g in &gens {
        for k in 0..r {
            let e = to_i64(&g[k], "generator entry")?;
            if e < 0 {
                lo[k] += e;
            } else {
                hi[k] += e;
            }
        }
    }
    HRep::new(rows, rhs, IntBox::new(lo, hi)?)
}

fn collect_normals(
    gens: &[IntVector],
    r: usize,
    start: usize,
    subset: &mut Vec<usize>,
    out: &mut BTreeSet<Vec<BigInt>>,
) -> Result<()> {
    if subset.len() == r - 1 {
        if let Some(n) = orthogonal_primitive(gens, subset, r)? {
            out.insert(n);
        }
        return Ok(());
    }
    for i in start..gens.len() {
        subset.push(i);
        collect_normals(gens, r, i + 1, subset, out)?;
        subset.pop();
    }
    Ok(())
}

/// Primitive vector orthogonal to the chosen `r - 1` vectors in `Z^r`,
/// normalized so its first nonzero entry is positive; `None` if they are
/// dependent.
fn orthogonal_primitive(gens: &[IntVector], subset: &[usize], r: usize) -> Result<Option<Vec<BigInt>>> {
    let mut n = Vec::with_capacity(r);
    for j in 0..r {
        let mut m = IntMatrix::zeros(r - 1, r - 1);
        for (ri, &gi) in subset.iter().enumerate() {
            for (ci, c) in (0..r).filter(|&c| c != j).enumerate() {
                m[(ri, ci)] = gens[gi][c].clone();
            }
        }
        let d = m.determinant()?;
        n.push(if j % 2 == 0 { d } else { -d });
    }
    let g = n.iter().fold(BigInt::zero(), |g, e| g.gcd(e));
    if g.is_zero() {
        return Ok(None);
    }
    let sign = n.iter().find(|e| !e.is_zero()).map_or(false, |e| e.is_negative());
    for e in &mut n {
        *e = &*e / &g;
        if sign {
            *e = -&*e;
        }
    }
    Ok(Some(n))
}
