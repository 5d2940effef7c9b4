use num_bigint::BigInt;

use super::{Rational, RationalPolynomial};
use crate::combinatorics::{factorial, hook_dimension, Partition};

/// cp_λ(T) = ∏ over cells (i, j) of λ of (T + j − i).
pub fn content_polynomial(lambda: &Partition) -> RationalPolynomial {
    let roots: Vec<Rational> = lambda
        .cells()
        .map(|(i, j)| Rational::from_integer(BigInt::from(i as i64 - j as i64)))
        .collect();
    RationalPolynomial::from_roots(Rational::from_integer(1.into()), &roots)
}

/// Q_λ(T) = (dim V_λ / |λ|!) ∏_{a=1}^{|λ|} (T − (|λ| + λ_a − a)), the
/// polynomial giving the Euler characteristic of the simple object [λ]_t.
pub fn q_polynomial(lambda: &Partition) -> RationalPolynomial {
    let n = lambda.size();
    let lead = Rational::new(
        BigInt::from(hook_dimension(lambda)),
        BigInt::from(factorial(n)),
    );
    let roots: Vec<Rational> = (1..=n)
        .map(|a| Rational::from_integer(BigInt::from((n + lambda.part(a - 1)) as i64 - a as i64)))
        .collect();
    RationalPolynomial::from_roots(lead, &roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_partitions, pad_partition, partitions_up_to};
    use crate::exact_arith::{int, rat};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn content_polynomials() {
        assert_eq!(content_polynomial(&p(&[1])), RationalPolynomial::t());
        assert_eq!(content_polynomial(&p(&[2, 1])), RationalPolynomial::from_i64(&[0, -1, 0, 1]));
        assert_eq!(content_polynomial(&p(&[2])), RationalPolynomial::from_i64(&[0, 1, 1]));
        assert_eq!(content_polynomial(&Partition::empty()), RationalPolynomial::one());
    }

    #[test]
    fn content_polynomial_roots_lie_in_the_content_range() {
        for lambda in partitions_up_to(6).into_iter().skip(1) {
            let cp = content_polynomial(&lambda);
            assert_eq!(cp.degree(), lambda.size() as i64);
            assert_eq!(cp.leading_coeff(), int(1));
            assert_eq!(cp.eval(&int(0)), int(0));
            let lo = -(lambda.first() as i64 - 1);
            let hi = lambda.len() as i64 - 1;
            let mut rest = cp.clone();
            for r in lo..=hi {
                while rest.eval(&int(r)) == int(0) && rest.degree() > 0 {
                    rest = rest.div_linear(&int(r)).0;
                }
            }
            assert_eq!(rest.degree(), 0, "{lambda}");
        }
    }

    #[test]
    fn q_polynomials_from_the_counterexample() {
        let q21 = q_polynomial(&p(&[2, 1]));
        assert_eq!(q21, RationalPolynomial::from_roots(rat(1, 3), &[int(4), int(2), int(0)]));
        let q321 = q_polynomial(&p(&[3, 2, 1]));
        let roots: Vec<_> = [8, 6, 4, 2, 1, 0].iter().map(|&r| int(r)).collect();
        assert_eq!(q321, RationalPolynomial::from_roots(rat(1, 45), &roots));
        assert_eq!(q_polynomial(&p(&[1])), RationalPolynomial::from_i64(&[-1, 1]));
        assert_eq!(q21.eval(&int(-1)), int(-5));
    }

    #[test]
    fn q_interpolates_padded_dimensions() {
        for n in 0..=5 {
            for lambda in enumerate_partitions(n) {
                let q = q_polynomial(&lambda);
                assert_eq!(q.degree(), n as i64);
                for m in (2 * n + 1)..=15 {
                    let dim = hook_dimension(&pad_partition(&lambda, m).unwrap());
                    assert_eq!(q.eval(&int(m as i64)), Rational::from_integer(dim.into()), "{lambda} at {m}");
                }
            }
        }
    }
}
