//! Binomial coefficients, Stirling numbers and harmonic numbers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{Rational, RationalPolynomial};
use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Generalized binomial coefficient `n (n-1) ... (n-k+1) / k!`, defined for any
/// integer `n` and `k >= 0`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if k < 0 {
        return Err(Error::Domain(format!("binomial({n}, {k}) needs k >= 0")));
    }
    if n >= 0 && k > n {
        return Ok(BigInt::zero());
    }
    // Multiplicative form keeps every partial result integral.
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Ok(acc)
}

/// `binomial(t + shift, d)` as a polynomial in `t`.
pub fn binomial_poly(d: usize, shift: i64) -> RationalPolynomial {
    let mut acc = RationalPolynomial::one();
    for i in 0..d as i64 {
        let factor = RationalPolynomial::from_integers([shift - i, 1]);
        acc = &acc * &factor;
    }
    acc.scale(&Rational::new(
        BigInt::one(),
        BigInt::from(factorial(d as u64)),
    ))
}

/// Full table of unsigned Stirling numbers of the first kind, rows `0..=n`.
pub fn stirling1_table(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for m in 0..n {
        let prev = &rows[m];
        let mut next = vec![BigUint::zero(); m + 2];
        for k in 1..=m + 1 {
            let stay = prev.get(k).cloned().unwrap_or_default() * BigUint::from(m);
            next[k] = stay + &prev[k - 1];
        }
        rows.push(next);
    }
    rows
}

/// Unsigned Stirling number of the first kind `c(n, k)`.
pub fn stirling1_unsigned(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    stirling1_table(n)[n][k].clone()
}

/// `1 + 1/2 + ... + 1/d`.
pub fn harmonic(d: u64) -> Result<Rational> {
    if d < 1 {
        return Err(Error::Domain("harmonic number needs d >= 1".into()));
    }
    Ok((1..=d).fold(Rational::zero(), |acc, k| {
        acc + Rational::new(BigInt::one(), BigInt::from(k))
    }))
}
