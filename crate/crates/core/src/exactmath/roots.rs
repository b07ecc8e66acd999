//! Root location: exact real-root counting and numeric complex roots.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use super::RationalPolynomial;
use crate::error::{Error, Result};

/// A numeric complex root.
pub type ComplexApprox = Complex64;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const MAX_ITERATIONS: usize = 10_000;

/// Sturm sequence `p, p', -rem(p, p'), ...`.
pub fn sturm_sequence(p: &RationalPolynomial) -> Result<Vec<RationalPolynomial>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq[seq.len() - 1].is_zero() {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1])?;
        seq.push(-&r);
    }
    seq.pop();
    Ok(seq)
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_at_infinity(p: &RationalPolynomial, negative: bool) -> i8 {
    match (p.leading(), p.degree()) {
        (Some(lc), Some(deg)) => {
            let s = if lc.is_positive() { 1 } else { -1 };
            if negative && deg % 2 == 1 {
                -s
            } else {
                s
            }
        }
        _ => 0,
    }
}

/// Number of distinct real roots, by Sturm's theorem.
pub fn real_root_count(p: &RationalPolynomial) -> Result<usize> {
    let seq = sturm_sequence(p)?;
    let at_neg = sign_changes(seq.iter().map(|q| sign_at_infinity(q, true)));
    let at_pos = sign_changes(seq.iter().map(|q| sign_at_infinity(q, false)));
    Ok(at_neg - at_pos)
}

/// All complex roots real. Multiplicities are ignored by testing the squarefree part.
pub fn is_real_rooted(p: &RationalPolynomial) -> Result<bool> {
    let sf = p.squarefree_part()?;
    Ok(real_root_count(&sf)? == sf.degree().unwrap_or(0))
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::zero(), |acc, &c| acc * z + c)
}

fn horner_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `|p(z)|` relative to `Σ |a_i| |z|^i`, the backward error of evaluating at `z`.
fn relative_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let scale = coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * z.norm() + c.abs());
    if scale == 0.0 {
        0.0
    } else {
        horner(coeffs, z).norm() / scale
    }
}

/// Weierstrass (Durand-Kerner) iteration on a squarefree polynomial.
fn simultaneous_roots(p: &RationalPolynomial, tol: f64) -> Result<Vec<ComplexApprox>> {
    let raw = p.to_f64_coeffs();
    let n = raw.len() - 1;
    let lead = raw[n];
    let coeffs: Vec<f64> = raw.iter().map(|c| c / lead).collect();
    if n == 1 {
        return Ok(vec![Complex64::new(-coeffs[0], 0.0)]);
    }
    let radius = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / n as f64 + 0.4))
        .collect();

    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let denom = (0..n)
                .filter(|&j| j != k)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[k] - z[j]));
            let step = horner(&coeffs, z[k]) / denom;
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }
    // Newton polishing on the (well-conditioned) squarefree factor.
    for root in &mut z {
        for _ in 0..3 {
            let (v, dv) = horner_with_derivative(&coeffs, *root);
            if dv.norm() == 0.0 {
                break;
            }
            let step = v / dv;
            if step.is_finite() {
                *root -= step;
            }
        }
    }
    let ok = z.iter().all(|&r| r.is_finite() && relative_residual(&coeffs, r) < tol);
    if !(ok && (converged || z.iter().all(|&r| relative_residual(&coeffs, r) < 1e-12))) {
        return Err(Error::NoConvergence {
            poly: p.to_string(),
            iterations: MAX_ITERATIONS,
        });
    }
    Ok(z)
}

/// Approximations of all `deg p` complex roots, with multiplicity.
///
/// Each squarefree factor of `p` is solved separately, so repeated roots come
/// back as repeated (accurate) values instead of a spread-out cluster.
pub fn roots_numeric(p: &RationalPolynomial, tol: f64) -> Result<Vec<ComplexApprox>> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => {
            return Err(Error::Domain(
                "numeric roots need a nonconstant polynomial".into(),
            ))
        }
        _ => {}
    }
    let mut roots = Vec::new();
    for (factor, mult) in p.squarefree_decomposition()? {
        let found = simultaneous_roots(&factor, tol)?;
        for _ in 0..mult {
            roots.extend_from_slice(&found);
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

fn all_roots(p: &RationalPolynomial, tol: f64, pred: impl Fn(&ComplexApprox) -> bool) -> Result<bool> {
    if p.degree() == Some(0) {
        return Ok(true);
    }
    Ok(roots_numeric(p, tol)?.iter().all(pred))
}

/// Every root within `tol` of the unit circle.
pub fn all_roots_on_unit_circle(p: &RationalPolynomial, tol: f64) -> Result<bool> {
    all_roots(p, tol, |z| (z.norm() - 1.0).abs() < tol)
}

/// Every root within `tol` of the line `Re z = -1/2`.
pub fn all_roots_on_critical_line(p: &RationalPolynomial, tol: f64) -> Result<bool> {
    all_roots(p, tol, |z| (z.re + 0.5).abs() < tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::combinat::binomial_poly;
    use crate::exactmath::Rational;

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_integers(c.iter().copied())
    }

    #[test]
    fn sturm_counts() {
        let cube = p(&[1, 3, 3, 1]);
        assert_eq!(real_root_count(&cube).unwrap(), 1);
        assert!(is_real_rooted(&cube).unwrap());
        assert_eq!(real_root_count(&p(&[1, 0, 1])).unwrap(), 0);
        assert!(!is_real_rooted(&p(&[1, 0, 1])).unwrap());
        assert_eq!(real_root_count(&p(&[1, 4, 1])).unwrap(), 2);
        assert!(is_real_rooted(&p(&[1, 4, 1])).unwrap());
        assert!(is_real_rooted(&p(&[5])).unwrap());
        assert_eq!(real_root_count(&p(&[])), Err(Error::ZeroPolynomial));
        // (x-1)(x-2)(x-3)(x^2+1)
        let mixed = &(&(&p(&[-1, 1]) * &p(&[-2, 1])) * &p(&[-3, 1])) * &p(&[1, 0, 1]);
        assert_eq!(real_root_count(&mixed).unwrap(), 3);
    }

    #[test]
    fn numeric_roots() {
        let r = roots_numeric(&p(&[-1, 0, 1]), 1e-8).unwrap();
        assert!((r[0].re + 1.0).abs() < 1e-10 && (r[1].re - 1.0).abs() < 1e-10);
        let cyc = roots_numeric(&p(&[1, 1, 1]), 1e-8).unwrap();
        assert!(cyc.iter().all(|z| (z.norm() - 1.0).abs() < 1e-10));
        let quad = roots_numeric(&p(&[1, 4, 6, 4, 1]), 1e-8).unwrap();
        assert_eq!(quad.len(), 4);
        assert!(quad.iter().all(|z| (*z + 1.0).norm() < 1e-10));
        assert!(roots_numeric(&p(&[3]), 1e-8).is_err());
        assert!(roots_numeric(&p(&[1, 1]), 0.0).is_err());
    }

    #[test]
    fn circle_and_line() {
        let q = &p(&[1, 1, 1]) * &p(&[1, 1]);
        assert!(all_roots_on_unit_circle(&q, 1e-8).unwrap());
        assert!(!all_roots_on_unit_circle(&p(&[1, 6]), 1e-8).unwrap());
        // (1+z^3+z^6)(1+z+z^2+z^3)
        let payne = &p(&[1, 0, 0, 1, 0, 0, 1]) * &p(&[1, 1, 1, 1]);
        assert!(all_roots_on_unit_circle(&payne, 1e-8).unwrap());

        let diamond = RationalPolynomial::new(vec![
            Rational::new(1.into(), 1.into()),
            Rational::new(8.into(), 3.into()),
            Rational::new(2.into(), 1.into()),
            Rational::new(4.into(), 3.into()),
        ]);
        assert!(all_roots_on_critical_line(&diamond, 1e-8).unwrap());
        assert!(!all_roots_on_critical_line(&binomial_poly(3, 3), 1e-8).unwrap());
        assert!(all_roots_on_critical_line(&p(&[1, 2]), 1e-8).unwrap());
    }
}
