//! Integer-valued polynomials: p(ℤ) ⊆ ℤ.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Rational, RationalPolynomial};
use crate::combinatorics::factorial;

/// Whether `p(ℤ) ⊆ ℤ`, decided by testing the `deg(p) + 1` consecutive
/// points `0, 1, …, deg(p)`.
pub fn is_integer_valued(p: &RationalPolynomial) -> bool {
    (0..=p.degree().max(0)).all(|k| p.eval(&Rational::from_integer(BigInt::from(k))).is_integer())
}

/// Coefficients of `p` in the binomial basis `C(T, 0), C(T, 1), …`.
///
/// Peels off the top binomial term by leading coefficients, never evaluating `p`.
pub fn binomial_basis_coefficients(p: &RationalPolynomial) -> Vec<Rational> {
    let mut rest = p.clone();
    let mut out = vec![Rational::zero(); (p.degree() + 1) as usize];
    while !rest.is_zero() {
        let d = rest.degree() as usize;
        let c = rest.leading_coeff() * Rational::from_integer(BigInt::from(factorial(d)));
        rest = &rest - &binomial_poly(d).scale(&c);
        out[d] = c;
    }
    out
}

/// C(T, k) = T(T−1)…(T−k+1)/k!.
fn binomial_poly(k: usize) -> RationalPolynomial {
    let roots: Vec<Rational> = (0..k).map(|i| Rational::from_integer(BigInt::from(i))).collect();
    RationalPolynomial::from_roots(Rational::new(1.into(), BigInt::from(factorial(k))), &roots)
}

/// Whether all binomial-basis coefficients of `p` are integers.
pub fn is_integer_valued_binomial(p: &RationalPolynomial) -> bool {
    binomial_basis_coefficients(p).iter().all(|c| c.is_integer())
}
