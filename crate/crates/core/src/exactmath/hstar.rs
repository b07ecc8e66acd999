//! h*-vectors and the change of basis to and from Ehrhart polynomials.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::combinat::{binomial, binomial_poly, factorial};
use super::{Rational, RationalPolynomial};
use crate::error::{Error, Result};

/// Coefficients `h*_0, ..., h*_d` of an h*-polynomial, stored at full ambient
/// length `d + 1` (trailing zeros kept).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HStarVector {
    entries: Vec<BigUint>,
}

impl HStarVector {
    /// Fails unless there is at least one entry and `h*_0 = 1`.
    pub fn new(entries: Vec<BigUint>) -> Result<Self> {
        match entries.first() {
            Some(h0) if h0.is_one() => Ok(HStarVector { entries }),
            Some(h0) => Err(Error::NotEhrhart {
                dim: entries.len() - 1,
                reason: format!("h*_0 = {h0}, expected 1"),
            }),
            None => Err(Error::Domain("empty h*-vector".into())),
        }
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigUint::from(e)).collect())
    }

    /// Entries with nonnegativity checked.
    pub fn from_bigints(entries: &[BigInt]) -> Result<Self> {
        let dim = entries.len().saturating_sub(1);
        entries
            .iter()
            .enumerate()
            .map(|(j, e)| {
                e.to_biguint().ok_or_else(|| Error::NotEhrhart {
                    dim,
                    reason: format!("h*_{j} = {e} is negative"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .and_then(Self::new)
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, j: usize) -> BigUint {
        self.entries.get(j).cloned().unwrap_or_default()
    }

    /// `h*(1)`, the normalized volume.
    pub fn sum(&self) -> BigUint {
        self.entries.iter().sum()
    }

    /// Appends `k` zeros, the h*-vector of a `k`-fold lattice pyramid.
    pub fn padded(&self, k: usize) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(std::iter::repeat(BigUint::zero()).take(k));
        HStarVector { entries }
    }

    /// Entries with trailing zeros removed.
    pub fn support(&self) -> &[BigUint] {
        let end = self
            .entries
            .iter()
            .rposition(|e| !e.is_zero())
            .map_or(0, |i| i + 1);
        &self.entries[..end]
    }

    pub fn as_polynomial(&self) -> RationalPolynomial {
        RationalPolynomial::new(
            self.entries
                .iter()
                .map(|e| Rational::from_integer(BigInt::from(e.clone())))
                .collect(),
        )
    }

    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.entries.iter().map(ToPrimitive::to_u64).collect()
    }
}

impl fmt::Display for HStarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for HStarVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for e in &self.entries {
            match e.to_u64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&e.to_string())?,
            }
        }
        seq.end()
    }
}

/// `i(t) = Σ_j h*_j binomial(t + d - j, d)`.
pub fn hstar_to_ehrhart(h: &HStarVector) -> RationalPolynomial {
    let d = h.dim();
    h.entries
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .fold(RationalPolynomial::zero(), |acc, (j, e)| {
            let c = Rational::from_integer(BigInt::from(e.clone()));
            &acc + &binomial_poly(d, (d - j) as i64).scale(&c)
        })
}

/// Inverse of [`hstar_to_ehrhart`].
///
/// Reads the numerator of the Ehrhart series:
/// `h*_j = Σ_{i<=j} (-1)^i binomial(d+1, i) p(j - i)`.
pub fn ehrhart_to_hstar(p: &RationalPolynomial, d: usize) -> Result<HStarVector> {
    let not_ehrhart = |reason: String| Error::NotEhrhart { dim: d, reason };
    if p.degree() != Some(d) {
        return Err(not_ehrhart(format!(
            "degree {:?} differs from dimension",
            p.degree()
        )));
    }
    let values: Vec<Rational> = (0..=d as i64).map(|t| p.eval_int(t)).collect();
    let mut entries = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut acc = Rational::zero();
        for i in 0..=j {
            let c = Rational::from_integer(binomial(d as i64 + 1, i as i64)?);
            let term = c * &values[j - i];
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if !acc.is_integer() {
            return Err(not_ehrhart(format!("h*_{j} = {acc} is not an integer")));
        }
        entries.push(acc.to_integer());
    }
    let h = HStarVector::from_bigints(&entries)?;
    debug_assert_eq!(&hstar_to_ehrhart(&h), p);
    Ok(h)
}

/// Lagrange interpolation through `(t, value)` pairs, exact over the rationals.
pub fn interpolate(points: &[(i64, BigInt)]) -> Result<RationalPolynomial> {
    if points.is_empty() {
        return Err(Error::Domain("interpolation needs at least one point".into()));
    }
    let mut xs: Vec<i64> = points.iter().map(|p| p.0).collect();
    xs.sort_unstable();
    if let Some(w) = xs.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateAbscissa(w[0].to_string()));
    }
    let mut acc = RationalPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RationalPolynomial::one();
        let mut denom = BigInt::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &RationalPolynomial::from_integers([-xj, 1]);
                denom *= BigInt::from(xi - xj);
            }
        }
        acc = &acc + &basis.scale(&Rational::new(yi.clone(), denom));
    }
    Ok(acc)
}

/// Weakly rises then weakly falls. Trailing zeros count.
pub fn is_unimodal<T: Ord>(seq: &[T]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

/// First index `j` with `seq[j-1] > seq[j] < seq[k]` for some later `k`: a
/// dip that breaks unimodality.
pub fn unimodality_violation<T: Ord>(seq: &[T]) -> Option<usize> {
    (1..seq.len()).find(|&j| seq[j - 1] > seq[j] && seq[j + 1..].iter().any(|x| x > &seq[j]))
}

/// Every coefficient of degree `0..=deg p` strictly positive.
pub fn is_positive(p: &RationalPolynomial) -> bool {
    !p.is_zero() && p.coeffs().iter().all(|c| c.is_positive())
}

/// Symmetric after trailing zeros are dropped.
pub fn is_palindromic(h: &HStarVector) -> bool {
    let s = h.support();
    s.iter().eq(s.iter().rev())
}

/// Leading coefficient of an Ehrhart polynomial in terms of its h*-vector.
pub fn leading_from_hstar(h: &HStarVector) -> Rational {
    Rational::new(
        BigInt::from_biguint(Sign::Plus, h.sum()),
        BigInt::from(factorial(h.dim() as u64)),
    )
}
