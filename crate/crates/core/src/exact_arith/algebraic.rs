use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Rational, RationalAlgebra, RationalPolynomial};
use crate::error::{Error, Result};

/// An element of ℚ[T]/(m) for a monic modulus `m` of degree ≥ 1.
///
/// When `m` is the minimal polynomial of an algebraic number τ this is the
/// number field ℚ(τ) and the element stands for `rep(τ)`. No complex embedding
/// is carried: every question asked about these values is decided inside
/// the quotient ring. Moduli are compared syntactically.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraicNumber {
    modulus: RationalPolynomial,
    rep: RationalPolynomial,
}

/// The class of `p` in ℚ[T]/(m).
pub fn reduce_mod(p: &RationalPolynomial, m: &RationalPolynomial) -> Result<AlgebraicNumber> {
    AlgebraicNumber::new(m.clone(), p.clone())
}

impl AlgebraicNumber {
    /// Normalizes `modulus` to be monic and reduces `rep` modulo it.
    pub fn new(modulus: RationalPolynomial, rep: RationalPolynomial) -> Result<Self> {
        if modulus.degree() < 1 {
            return Err(Error::ConstantModulus);
        }
        let modulus = modulus.monic();
        let (_, rep) = rep.div_rem(&modulus)?;
        Ok(AlgebraicNumber { modulus, rep })
    }

    /// The class of `T`, i.e. a root of `modulus`.
    pub fn generator(modulus: RationalPolynomial) -> Result<Self> {
        Self::new(modulus, RationalPolynomial::t())
    }

    /// A rational number, presented as the root of `T − c`.
    pub fn rational(c: Rational) -> Self {
        AlgebraicNumber {
            modulus: RationalPolynomial::linear_factor(&c),
            rep: RationalPolynomial::constant(c),
        }
    }

    pub fn from_rational_in(modulus: &RationalPolynomial, c: Rational) -> Result<Self> {
        Self::new(modulus.clone(), RationalPolynomial::constant(c))
    }

    pub fn modulus(&self) -> &RationalPolynomial {
        &self.modulus
    }

    pub fn representative(&self) -> &RationalPolynomial {
        &self.rep
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }

    fn with_rep(&self, rep: RationalPolynomial) -> Self {
        let (_, rep) = rep.div_rem(&self.modulus).expect("modulus is nonzero");
        AlgebraicNumber { modulus: self.modulus.clone(), rep }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_rep(&self.rep + &other.rep))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_rep(&self.rep - &other.rep))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_rep(&self.rep * &other.rep))
    }

    /// The value as a rational number, if the representative is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        self.rep.is_constant().then(|| self.rep.coeff(0))
    }

    /// Whether the value is an element of ℤ.
    pub fn is_rational_integer(&self) -> bool {
        self.as_rational().is_some_and(|c| c.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

/// Free-function form of [`AlgebraicNumber::is_rational_integer`].
pub fn algnum_is_rational_integer(x: &AlgebraicNumber) -> bool {
    x.is_rational_integer()
}

impl RationalAlgebra for AlgebraicNumber {
    fn scalar_like(&self, c: &Rational) -> Self {
        self.with_rep(RationalPolynomial::constant(c.clone()))
    }

    /// Panics if the moduli differ; use [`AlgebraicNumber::checked_add`] for
    /// values of unknown provenance.
    fn add_ref(&self, other: &Self) -> Self {
        self.checked_add(other).expect("algebraic numbers over different moduli")
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("algebraic numbers over different moduli")
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus.degree() == 1 || self.rep.is_constant() {
            let c = self.rep.coeff(0);
            return write!(f, "{c}");
        }
        write!(f, "{} mod ({})", self.rep, self.modulus)
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicNumber({self})")
    }
}
