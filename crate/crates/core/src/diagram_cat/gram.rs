use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modular::{interpolate_consecutive, large_primes, Crt, Montgomery};
use super::PartitionDiagram;
use crate::combinatorics::{bell, enumerate_set_partitions};
use crate::error::{Error, Result};
use crate::exact_arith::{Rational, RationalPolynomial};

/// Limits on Gram computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GramBudget {
    /// Largest diagram basis (Bell(2n)) handled at all.
    pub max_basis_size: usize,
    /// Largest basis for which the determinant is computed symbolically.
    pub max_exact_basis_size: usize,
}

impl Default for GramBudget {
    fn default() -> Self {
        GramBudget { max_basis_size: 203, max_exact_basis_size: 15 }
    }
}

/// The diagram basis of End of `n` strands, in restricted-growth order.
pub fn endomorphism_basis(n: usize) -> Vec<PartitionDiagram> {
    enumerate_set_partitions(2 * n)
        .into_iter()
        .map(|sp| PartitionDiagram::new(n, n, sp).expect("ground size is 2n"))
        .collect()
}

/// Number of diagrams in End of `n` strands, counted by enumeration and
/// checked against the Bell triangle.
pub fn end_dimension(n: usize) -> Result<u128> {
    let counted = endomorphism_basis(n).len() as u128;
    let expected = bell(2 * n);
    if counted != expected {
        return Err(Error::CrossCheck(format!("enumerated {counted} diagrams, Bell(2n) = {expected}")));
    }
    Ok(counted)
}

fn check_budget(n: usize, budget: &GramBudget) -> Result<usize> {
    let size = bell(2 * n);
    if size > budget.max_basis_size as u128 {
        return Err(Error::BoundExceeded { size: size as usize, bound: budget.max_basis_size });
    }
    Ok(size as usize)
}

/// Exponents `c(a, b)` with `G[a][b] = T^{c(a,b)} = Tr(a ∘ b)`.
pub fn gram_exponents(n: usize) -> Vec<Vec<usize>> {
    let basis = endomorphism_basis(n);
    basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| {
                    let (d, loops) = a.compose_after(b).expect("square diagrams");
                    loops + d.closure_components().expect("endomorphism")
                })
                .collect()
        })
        .collect()
}

pub fn gram_matrix(n: usize) -> Vec<Vec<RationalPolynomial>> {
    gram_exponents(n)
        .into_iter()
        .map(|row| row.into_iter().map(RationalPolynomial::monomial).collect())
        .collect()
}

pub fn gram_det(n: usize) -> Result<RationalPolynomial> {
    gram_det_with_budget(n, &GramBudget::default())
}

/// Determinant of the Gram matrix: fraction-free elimination over ℚ[T] for
/// small bases, multi-modular evaluation and interpolation otherwise.
pub fn gram_det_with_budget(n: usize, budget: &GramBudget) -> Result<RationalPolynomial> {
    let size = check_budget(n, budget)?;
    if size <= budget.max_exact_basis_size {
        Ok(bareiss_det(gram_matrix(n)))
    } else {
        Ok(interpolated_det(&gram_exponents(n)).polynomial)
    }
}

/// Determinant over ℚ[T] by Bareiss elimination with row pivoting.
pub fn bareiss_det(mut m: Vec<Vec<RationalPolynomial>>) -> RationalPolynomial {
    let n = m.len();
    let mut sign = RationalPolynomial::one();
    let mut prev = RationalPolynomial::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return RationalPolynomial::zero();
        };
        if piv != k {
            m.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss quotients are exact");
            }
            m[i][k] = RationalPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return RationalPolynomial::one();
    }
    &sign * &m[n - 1][n - 1]
}

/// Outcome of the modular determinant, with the bounds that justify it.
#[derive(Clone, Debug)]
pub struct InterpolatedDet {
    pub polynomial: RationalPolynomial,
    /// Power of T factored out of the rows before evaluation.
    pub row_valuation: usize,
    /// Degree bound for the remaining factor; one more evaluation point than this is used.
    pub degree_bound: usize,
    pub primes_used: usize,
}

/// Determinant of `(T^{e[a][b]})` by evaluation at consecutive integers
/// modulo several 62-bit primes, interpolation, and Chinese remaindering.
///
/// Row `a` is divided by `T^{min_b e[a][b]}` first. The remaining factor has
/// degree at most `Σ_a (max_b − min_b) e[a][b]` and, by Hadamard's inequality
/// on the unit circle, coefficients bounded by `N^{N/2}`.
pub fn interpolated_det(e: &[Vec<usize>]) -> InterpolatedDet {
    let n = e.len();
    let mins: Vec<usize> = e.iter().map(|r| r.iter().copied().min().unwrap_or(0)).collect();
    let shifted: Vec<Vec<usize>> =
        e.iter().zip(&mins).map(|(r, &lo)| r.iter().map(|&x| x - lo).collect()).collect();
    let row_valuation: usize = mins.iter().sum();
    let degree_bound: usize =
        shifted.iter().map(|r| r.iter().copied().max().unwrap_or(0)).sum();
    let max_exp = shifted.iter().flatten().copied().max().unwrap_or(0);

    // 2·N^{N/2} < 2^{bits}
    let bits = ((n as f64) / 2.0 * (n.max(1) as f64).log2()).ceil() as u64 + 2;
    let mut crts: Vec<Crt> = (0..=degree_bound).map(|_| Crt::new()).collect();
    let mut primes_used = 0;
    for p in large_primes() {
        if crts[0].modulus().bits() > bits {
            break;
        }
        let mg = Montgomery::new(p);
        let values: Vec<u64> = (0..=degree_bound as u64)
            .map(|t| mg.from_mont(mg.det(specialize_mod(&shifted, &mg, t, max_exp))))
            .collect();
        for (crt, c) in crts.iter_mut().zip(interpolate_consecutive(&values, p)) {
            crt.push(c, p);
        }
        primes_used += 1;
    }
    let mut coeffs = vec![Rational::zero(); row_valuation];
    coeffs.extend(crts.iter().map(|c| Rational::from_integer(c.balanced())));
    InterpolatedDet {
        polynomial: RationalPolynomial::from_coeffs(coeffs),
        row_valuation,
        degree_bound,
        primes_used,
    }
}

fn specialize_mod(e: &[Vec<usize>], mg: &Montgomery, t: u64, max_exp: usize) -> Vec<Vec<u64>> {
    let base = mg.to_mont(t);
    let mut powers = vec![mg.one()];
    for _ in 0..max_exp {
        powers.push(mg.mul(*powers.last().unwrap(), base));
    }
    e.iter().map(|r| r.iter().map(|&k| powers[k]).collect()).collect()
}

/// Rank of the Gram matrix after specializing `T ↦ t`.
pub fn gram_rank_at(n: usize, t: &Rational, budget: &GramBudget) -> Result<usize> {
    check_budget(n, budget)?;
    let e = gram_exponents(n);
    let max_exp = e.iter().flatten().copied().max().unwrap_or(0) as u32;
    // Scale by den^max_exp so every entry num^k·den^{max−k} is an integer.
    let (num, den) = (t.numer().clone(), t.denom().clone());
    let m: Vec<Vec<BigInt>> = e
        .iter()
        .map(|r| r.iter().map(|&k| num.pow(k as u32) * den.pow(max_exp - k as u32)).collect())
        .collect();
    Ok(integer_rank(m))
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(piv, rank);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "fraction-free elimination is exact");
                m[i][j] = q;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].abs();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// `N^{N/2}`, the coefficient bound used by [`interpolated_det`].
pub fn hadamard_bound(n: usize) -> BigUint {
    let nn = BigUint::from(n);
    let half = nn.pow((n / 2) as u32);
    if n % 2 == 1 {
        // N^{N/2} ≤ N^{⌈N/2⌉}
        half * nn
    } else {
        half
    }
}
