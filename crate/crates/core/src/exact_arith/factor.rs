use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::fmt_coeff;
use super::{Rational, RationalPolynomial};

/// Largest |a₀| or |a_d| whose divisors are enumerated by trial division.
const DIVISOR_SEARCH_LIMIT: u128 = 100_000_000_000_000;

/// Integers of absolute value up to this are tried as roots before the
/// divisor search, which keeps a₀ small for polynomials with many small roots.
const SMALL_ROOT_RANGE: i64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CofactorStatus {
    /// The cofactor is a nonzero constant: `p` splits into rational linear factors.
    Constant,
    /// Degree 2 with non-square discriminant: irreducible over ℚ.
    IrreducibleQuadratic,
    /// Degree ≥ 3 without rational roots; left unfactored.
    Undecided,
    /// Coefficients too large for the divisor search; some rational roots may remain.
    Incomplete,
}

/// `p = ∏ (T − r)^k · cofactor`, with the cofactor free of rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootFactorization {
    pub roots: Vec<(Rational, usize)>,
    pub cofactor: RationalPolynomial,
    pub status: CofactorStatus,
}

impl RootFactorization {
    /// Whether every root is a natural number and nothing else remains.
    pub fn splits_over_naturals(&self) -> bool {
        self.status == CofactorStatus::Constant
            && self.roots.iter().all(|(r, _)| r.is_integer() && !r.is_negative())
    }

    pub fn expand(&self) -> RationalPolynomial {
        self.roots.iter().fold(self.cofactor.clone(), |acc, (r, k)| {
            (0..*k).fold(acc, |a, _| &a * &RationalPolynomial::linear_factor(r))
        })
    }
}

/// Factored form, e.g. `(1/3)*(T + 1)*(T^2 - 7*T + 15)`.
impl fmt::Display for RootFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = self.cofactor.leading_coeff();
        let mut factors: Vec<String> = Vec::new();
        if !lead.is_one() || (self.roots.is_empty() && self.cofactor.degree() < 1) {
            factors.push(fmt_coeff(&lead));
        }
        for (r, k) in &self.roots {
            let base = if r.is_zero() {
                "T".to_string()
            } else if r.is_negative() {
                format!("(T + {})", -r)
            } else {
                format!("(T - {r})")
            };
            factors.push(if *k == 1 { base } else { format!("{base}^{k}") });
        }
        if self.cofactor.degree() >= 1 {
            factors.push(format!("({})", self.cofactor.monic()));
        }
        write!(f, "{}", factors.join("*"))
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u128()?;
    if n > DIVISOR_SEARCH_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let root = n.sqrt();
    for d in 1..=root {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d != n / d {
                large.push(BigInt::from(n / d));
            }
        }
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

fn is_square(r: &Rational) -> bool {
    if r.is_negative() {
        return false;
    }
    let sq = |n: &BigInt| {
        let s = n.sqrt();
        &s * &s == *n
    };
    sq(r.numer()) && sq(r.denom())
}

fn strip_root(rest: &mut RationalPolynomial, r: &Rational) -> usize {
    let mut k = 0;
    while rest.degree() > 0 {
        let (q, v) = rest.div_linear(r);
        if !v.is_zero() {
            break;
        }
        *rest = q;
        k += 1;
    }
    k
}

/// Extracts all rational roots of `p` (rational root theorem on the primitive
/// integer form). A quadratic cofactor is certified irreducible by its
/// discriminant; cofactors of higher degree are reported as undecided.
pub fn factor_rational_roots(p: &RationalPolynomial) -> RootFactorization {
    let mut rest = p.clone();
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    if rest.is_zero() {
        return RootFactorization { roots, cofactor: rest, status: CofactorStatus::Constant };
    }
    let zero = Rational::zero();
    let mut k0 = 0;
    while rest.degree() > 0 && rest.coeff(0).is_zero() {
        rest = rest.div_linear(&zero).0;
        k0 += 1;
    }
    if k0 > 0 {
        roots.push((zero, k0));
    }
    for r in (1..=SMALL_ROOT_RANGE).flat_map(|k| [k, -k]) {
        let r = Rational::from_integer(BigInt::from(r));
        let k = strip_root(&mut rest, &r);
        if k > 0 {
            roots.push((r, k));
        }
    }
    let mut complete = true;
    if rest.degree() > 0 {
        let (ints, _) = rest.primitive_integer_form();
        match (divisors(&ints[0]), divisors(ints.last().unwrap())) {
            (Some(num), Some(den)) => {
                let mut candidates: Vec<Rational> = num
                    .iter()
                    .flat_map(|a| den.iter().flat_map(move |b| {
                        let r = Rational::new(a.clone(), b.clone());
                        [r.clone(), -r]
                    }))
                    .collect();
                candidates.sort();
                candidates.dedup();
                for r in candidates {
                    let k = strip_root(&mut rest, &r);
                    if k > 0 {
                        roots.push((r, k));
                    }
                }
            }
            _ => complete = false,
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    let status = match rest.degree() {
        _ if !complete => CofactorStatus::Incomplete,
        d if d <= 0 => CofactorStatus::Constant,
        2 => {
            let (c, b, a) = (rest.coeff(0), rest.coeff(1), rest.coeff(2));
            let disc = &b * &b - Rational::from_integer(BigInt::from(4)) * a * c;
            if is_square(&disc) {
                // cannot happen: a square discriminant gives rational roots
                CofactorStatus::Undecided
            } else {
                CofactorStatus::IrreducibleQuadratic
            }
        }
        _ => CofactorStatus::Undecided,
    };
    RootFactorization { roots, cofactor: rest, status }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat};

    #[test]
    fn counterexample_factorization() {
        let q = RationalPolynomial::from_roots(rat(1, 3), &[int(4), int(2), int(0)]);
        let f = factor_rational_roots(&(&q + &RationalPolynomial::from_i64(&[5])));
        assert_eq!(f.roots, vec![(int(-1), 1)]);
        assert_eq!(f.cofactor, RationalPolynomial::from_i64(&[15, -7, 1]).scale(&rat(1, 3)));
        assert_eq!(f.status, CofactorStatus::IrreducibleQuadratic);
        assert_eq!(f.to_string(), "(1/3)*(T + 1)*(T^2 - 7*T + 15)");
    }

    #[test]
    fn split_and_irreducible() {
        let f = factor_rational_roots(&RationalPolynomial::from_i64(&[2, -3, 1]));
        assert_eq!(f.roots, vec![(int(1), 1), (int(2), 1)]);
        assert_eq!(f.status, CofactorStatus::Constant);
        assert!(f.splits_over_naturals());
        let g = factor_rational_roots(&RationalPolynomial::from_i64(&[1, 0, 1]));
        assert!(g.roots.is_empty());
        assert_eq!(g.cofactor, RationalPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(g.status, CofactorStatus::IrreducibleQuadratic);
    }

    #[test]
    fn multiplicities_and_fractions() {
        let p = RationalPolynomial::from_roots(
            rat(-2, 7),
            &[int(0), int(0), rat(3, 2), rat(3, 2), int(-4)],
        );
        let f = factor_rational_roots(&p);
        assert_eq!(f.roots, vec![(int(-4), 1), (int(0), 2), (rat(3, 2), 2)]);
        assert_eq!(f.expand(), p);
        assert!(!f.splits_over_naturals());
    }

    #[test]
    fn cubic_cofactor_is_undecided() {
        let p = &RationalPolynomial::from_i64(&[-2, 0, 0, 1]) * &RationalPolynomial::from_i64(&[-1, 1]);
        let f = factor_rational_roots(&p);
        assert_eq!(f.roots, vec![(int(1), 1)]);
        assert_eq!(f.status, CofactorStatus::Undecided);
    }
}
