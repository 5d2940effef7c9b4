//! Super vector spaces: dimensions of Schur functors on (p|q)-dimensional
//! spaces, and supercommutative algebras with their supertrace forms.

mod algebra;
mod linalg;
mod random;

pub use algebra::{
    etale_implies_even_check, is_etale, odd_certificate, supertrace_form, OddCertificate,
    SuperAlgebraPresentation,
};
pub use linalg::{rational_det, rational_inverse};
pub use random::{random_graded_basis_change, random_supercommutative_algebra};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Largest |λ| accepted by [`super_schur_dim`].
pub const DEFAULT_SUPER_SCHUR_BOUND: usize = 8;

/// Dimensions of the even and odd parts of a super vector space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperDim {
    pub p: usize,
    pub q: usize,
}

impl SuperDim {
    pub fn new(p: usize, q: usize) -> Self {
        SuperDim { p, q }
    }

    /// Euler characteristic p − q.
    pub fn euler(&self) -> i64 {
        self.p as i64 - self.q as i64
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.p, self.q)
    }
}

pub fn super_schur_dim(lambda: &Partition, d: SuperDim) -> Result<u64> {
    super_schur_dim_with_bound(lambda, d, DEFAULT_SUPER_SCHUR_BOUND)
}

/// Number of (p|q)-semistandard tableaux of shape λ. Letters are
/// 1 < … < p < 1' < … < q'; rows and columns weakly increase, unprimed
/// letters strictly down columns and primed letters strictly along rows.
pub fn super_schur_dim_with_bound(lambda: &Partition, d: SuperDim, bound: usize) -> Result<u64> {
    if lambda.size() > bound {
        return Err(Error::BoundExceeded { size: lambda.size(), bound });
    }
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut filling: Vec<Vec<usize>> = lambda.parts().iter().map(|&r| vec![0; r]).collect();
    Ok(count_fillings(&cells, 0, d, &mut filling))
}

fn count_fillings(cells: &[(usize, usize)], idx: usize, d: SuperDim, filling: &mut [Vec<usize>]) -> u64 {
    let Some(&(i, j)) = cells.get(idx) else {
        return 1;
    };
    // Letter v < p is unprimed, v ≥ p is primed.
    let primed = |v: usize| v >= d.p;
    let left = (j > 0).then(|| filling[i][j - 1]);
    let up = (i > 0).then(|| filling[i - 1][j]);
    let lo = left.into_iter().chain(up).max().unwrap_or(0);
    let mut total = 0;
    for v in lo..d.p + d.q {
        if left == Some(v) && primed(v) {
            continue;
        }
        if up == Some(v) && !primed(v) {
            continue;
        }
        filling[i][j] = v;
        total += count_fillings(cells, idx + 1, d, filling);
    }
    total
}

/// Whether λ contains the rectangle with p + 1 rows of length q + 1.
pub fn schur_vanishes_super(lambda: &Partition, d: SuperDim) -> bool {
    lambda.len() > d.p && lambda.part(d.p) > d.q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_up_to;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(super_schur_dim(&p(&[1, 1]), SuperDim::new(1, 0)).unwrap(), 0);
        assert_eq!(super_schur_dim(&p(&[1, 1]), SuperDim::new(1, 1)).unwrap(), 2);
        assert_eq!(super_schur_dim(&p(&[2, 2]), SuperDim::new(1, 1)).unwrap(), 0);
        assert_eq!(super_schur_dim(&Partition::empty(), SuperDim::new(0, 0)).unwrap(), 1);
        assert!(super_schur_dim(&p(&[9]), SuperDim::new(1, 0)).is_err());
        assert!(schur_vanishes_super(&p(&[2, 2]), SuperDim::new(1, 1)));
        assert!(schur_vanishes_super(&p(&[3, 3, 3]), SuperDim::new(2, 2)));
        assert!(!schur_vanishes_super(&p(&[3, 3]), SuperDim::new(2, 2)));
        for n in 0..=8 {
            assert!(!schur_vanishes_super(&Partition::new(if n == 0 { vec![] } else { vec![n] }).unwrap(), SuperDim::new(1, 0)));
        }
        assert_eq!(SuperDim::new(1, 3).euler(), -2);
    }

    /// ∏_{cells} (p + c) / h: the number of semistandard tableaux with entries ≤ p.
    fn hook_content(lambda: &Partition, p_: i64) -> u64 {
        let conj = lambda.conjugate();
        let (mut num, mut den) = (1i128, 1i128);
        for (i, j) in lambda.cells() {
            num *= p_ as i128 + j as i128 - i as i128;
            den *= (lambda.part(i) - j + conj.part(j) - i - 1) as i128;
        }
        (num / den) as u64
    }

    #[test]
    fn even_specialization_is_classical() {
        for lambda in partitions_up_to(5) {
            for p_ in 0..=3 {
                let n = super_schur_dim(&lambda, SuperDim::new(p_, 0)).unwrap();
                assert_eq!(n, hook_content(&lambda, p_ as i64), "{lambda} p={p_}");
            }
        }
    }

    #[test]
    fn odd_specialization_is_conjugate() {
        for lambda in partitions_up_to(5) {
            for q_ in 0..=3 {
                let a = super_schur_dim(&lambda, SuperDim::new(0, q_)).unwrap();
                let b = super_schur_dim(&lambda.conjugate(), SuperDim::new(q_, 0)).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn vanishing_is_the_rectangle_criterion() {
        for lambda in partitions_up_to(6) {
            for p_ in 0..=2 {
                for q_ in 0..=2 {
                    let d = SuperDim::new(p_, q_);
                    assert_eq!(super_schur_dim(&lambda, d).unwrap() == 0, schur_vanishes_super(&lambda, d), "{lambda} {d}");
                }
            }
        }
    }

    #[test]
    fn total_dimension_of_tensor_power() {
        // Σ_λ f^λ · dim S_λ(V) = (p + q)^n
        use crate::combinatorics::{enumerate_partitions, hook_dimension};
        use num_bigint::BigUint;
        for n in 0..=5usize {
            for (p_, q_) in [(1, 1), (2, 1), (1, 2)] {
                let total: BigUint = enumerate_partitions(n)
                    .iter()
                    .map(|l| hook_dimension(l) * super_schur_dim(l, SuperDim::new(p_, q_)).unwrap())
                    .sum();
                assert_eq!(total, BigUint::from((p_ + q_) as u64).pow(n as u32));
            }
        }
    }
}
