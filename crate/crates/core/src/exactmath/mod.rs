//! Exact arithmetic: rationals, polynomials, the h*/Ehrhart basis change,
//! combinatorial sequences and root diagnostics.

pub mod combinat;
pub mod hstar;
pub mod polynomial;
pub mod roots;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub use combinat::{binomial, binomial_poly, factorial, harmonic, stirling1_unsigned};
pub use hstar::{
    ehrhart_to_hstar, hstar_to_ehrhart, interpolate, is_palindromic, is_positive, is_unimodal,
    unimodality_violation, HStarVector,
};
pub use polynomial::{fraction_string, RationalPolynomial};
pub use roots::{
    all_roots_on_critical_line, all_roots_on_unit_circle, is_real_rooted, real_root_count,
    roots_numeric, ComplexApprox, DEFAULT_TOLERANCE,
};
