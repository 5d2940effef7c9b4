use num_traits::{One, Zero};

use crate::exact_arith::Rational;

/// Determinant over ℚ by Gaussian elimination.
pub fn rational_det(m: &[Vec<Rational>]) -> Rational {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= &a[col][col];
        let inv = Rational::one() / &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for k in col..n {
                let delta = &f * &a[col][k];
                a[r][k] -= delta;
            }
        }
    }
    det
}

/// Inverse over ℚ by Gauss–Jordan elimination; `None` if singular.
pub fn rational_inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(piv, col);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for k in 0..2 * n {
                let delta = &f * &a[col][k];
                a[r][k] -= delta;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
