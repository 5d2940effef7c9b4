use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{parse_rational, Rational, RationalAlgebra};
use crate::error::{Error, Result};

/// Dense univariate polynomial over ℚ in the indeterminate `T`.
///
/// Coefficients are stored in ascending degree order. The vector is empty for
/// the zero polynomial and its last entry is nonzero otherwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        RationalPolynomial { coeffs }.normalize()
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `T`.
    pub fn t() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `T^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        RationalPolynomial { coeffs }
    }

    /// `T − r`.
    pub fn linear_factor(r: &Rational) -> Self {
        Self::from_coeffs(vec![-r.clone(), Rational::one()])
    }

    /// `c · ∏ (T − r_i)`.
    pub fn from_roots(c: Rational, roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Self::constant(c), |acc, r| &acc * &Self::linear_factor(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with the convention `deg(0) = −1`.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Quotient and remainder with `deg(remainder) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = divisor.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Divides by `T − r` with the remainder `p(r)` (synthetic division).
    pub fn div_linear(&self, r: &Rational) -> (Self, Rational) {
        if self.is_zero() {
            return (Self::zero(), Rational::zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &carry * r;
            if k == 0 {
                carry = v;
            } else {
                quot[k - 1] = v.clone();
                carry = v;
            }
        }
        (Self::from_coeffs(quot), carry)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates at an element of any ℚ-algebra by Horner's rule.
    pub fn eval_in<R: RationalAlgebra>(&self, x: &R) -> R {
        let mut acc = x.scalar_like(&Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(&x.scalar_like(c));
        }
        acc
    }

    /// `self(other(T))`.
    pub fn compose(&self, other: &Self) -> Self {
        self.eval_in(other)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Polynomial with integer coefficients `c · self` of content 1 and
    /// positive leading coefficient, together with `c`.
    pub fn primitive_integer_form(&self) -> (Vec<BigInt>, Rational) {
        use num_integer::Integer;
        if self.is_zero() {
            return (Vec::new(), Rational::one());
        }
        let l = self.denominator_lcm();
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (prim, Rational::new(l, g))
    }

    /// Whether all coefficients are integers.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coeffs(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $m(self, rhs: RationalPolynomial) -> RationalPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        -&self
    }
}

impl RationalAlgebra for RationalPolynomial {
    fn scalar_like(&self, c: &Rational) -> Self {
        RationalPolynomial::constant(c.clone())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

pub(crate) fn fmt_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

/// Expanded form in descending degree, e.g. `(1/3)*T^3 - 2*T^2 + (8/3)*T`.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{k}"),
            };
            if k == 0 {
                write!(f, "{}", fmt_coeff(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_coeff(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPolynomial({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    coeffs: Vec<String>,
}

impl Serialize for RationalPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyWire { coeffs: self.coeffs.iter().map(|c| c.to_string()).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = PolyWire::deserialize(d)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(RationalPolynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat};
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_i64(c)
    }

    #[test]
    fn basic_products() {
        let p = &poly(&[-1, 1]) * &poly(&[1, 1]);
        assert_eq!(p, poly(&[-1, 0, 1]));
        assert_eq!(RationalPolynomial::zero().degree(), -1);
        assert_eq!(poly(&[0, 0, 0]), RationalPolynomial::zero());
    }

    #[test]
    fn division_from_the_counterexample() {
        // (1/45)(T−8)(T−6)(T−4)(T−2)(T−1)T mod T²−7T+15
        let roots: Vec<_> = [8, 6, 4, 2, 1, 0].iter().map(|&r| int(r)).collect();
        let p = RationalPolynomial::from_roots(rat(1, 45), &roots);
        let m = poly(&[15, -7, 1]);
        let (q, r) = p.div_rem(&m).unwrap();
        assert_eq!(r, poly(&[-1080, 135]).scale(&rat(1, 45)));
        assert_eq!(r, poly(&[-24, 3]));
        assert_eq!(&(&q * &m) + &r, p);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(poly(&[1]).div_rem(&RationalPolynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        let q = RationalPolynomial::from_roots(rat(1, 3), &[int(4), int(2), int(0)]);
        assert_eq!(q.to_string(), "(1/3)*T^3 - 2*T^2 + (8/3)*T");
        assert_eq!(poly(&[15, -7, 1]).to_string(), "T^2 - 7*T + 15");
        assert_eq!(poly(&[-5]).to_string(), "-5");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_wire_format() {
        let q = RationalPolynomial::from_coeffs(vec![rat(8, 3), int(-2), rat(1, 3)]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"coeffs":["8/3","-2","1/3"]}"#);
        let back: RationalPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn synthetic_division_matches_div_rem() {
        let p = poly(&[3, -2, 0, 5, 1]);
        let r = rat(-3, 2);
        let (q, v) = p.div_linear(&r);
        let (q2, r2) = p.div_rem(&RationalPolynomial::linear_factor(&r)).unwrap();
        assert_eq!(q, q2);
        assert_eq!(RationalPolynomial::constant(v.clone()), r2);
        assert_eq!(v, p.eval(&r));
    }

    fn arb_poly() -> impl Strategy<Value = RationalPolynomial> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..7).prop_map(|cs| {
            RationalPolynomial::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!q.is_zero());
            let (quot, rem) = p.div_rem(&q).unwrap();
            prop_assert!(rem.degree() < q.degree());
            prop_assert_eq!(&(&quot * &q) + &rem, p);
        }

        #[test]
        fn evaluation_is_a_homomorphism(p in arb_poly(), q in arb_poly(), x in -7i64..7) {
            let x = int(x);
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
            prop_assert_eq!(p.compose(&RationalPolynomial::constant(x.clone())).coeff(0), p.eval(&x));
        }
    }
}
