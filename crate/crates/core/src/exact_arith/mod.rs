//! Exact arithmetic: rationals, polynomials in ℚ[T], simple number fields
//! ℚ[T]/(m), the content polynomial and the dimension polynomials Q_λ.

mod algebraic;
mod deligne;
mod factor;
mod integer_valued;
mod poly;

pub use algebraic::{algnum_is_rational_integer, reduce_mod, AlgebraicNumber};
pub use deligne::{content_polynomial, q_polynomial};
pub use factor::{factor_rational_roots, CofactorStatus, RootFactorization};
pub use integer_valued::{binomial_basis_coefficients, is_integer_valued, is_integer_valued_binomial};
pub use poly::RationalPolynomial;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"a/b"` or `"a"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A commutative ℚ-algebra in which polynomials can be evaluated.
///
/// Elements carry their own context (an algebraic number knows its modulus),
/// so the embedding of scalars is taken relative to an existing element.
pub trait RationalAlgebra: Clone {
    fn scalar_like(&self, c: &Rational) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;

    fn pow(&self, k: usize) -> Self {
        let mut acc = self.scalar_like(&Rational::one());
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl RationalAlgebra for Rational {
    fn scalar_like(&self, c: &Rational) -> Self {
        c.clone()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}
