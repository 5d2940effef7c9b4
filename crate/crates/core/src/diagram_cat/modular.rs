//! Word-size modular arithmetic for evaluation/interpolation.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Montgomery arithmetic modulo an odd prime `p < 2^63`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Montgomery {
    p: u64,
    /// −p⁻¹ mod 2^64.
    neg_inv: u64,
    /// 2^128 mod p.
    r2: u64,
}

impl Montgomery {
    pub(crate) fn new(p: u64) -> Self {
        debug_assert!(p % 2 == 1 && p < 1 << 63);
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        Montgomery { p, neg_inv: inv.wrapping_neg(), r2 }
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.neg_inv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline]
    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    #[inline]
    pub(crate) fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub(crate) fn to_mont(&self, a: u64) -> u64 {
        self.mul(a % self.p, self.r2)
    }

    pub(crate) fn from_mont(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    pub(crate) fn one(&self) -> u64 {
        self.to_mont(1)
    }

    pub(crate) fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    /// Determinant of a square matrix of Montgomery residues; consumes it.
    pub(crate) fn det(&self, mut m: Vec<Vec<u64>>) -> u64 {
        let n = m.len();
        let mut det = self.one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m[r][col] != 0) else {
                return 0;
            };
            if piv != col {
                m.swap(piv, col);
                det = self.sub(0, det);
            }
            let pivot = m[col][col];
            det = self.mul(det, pivot);
            let inv = self.inv(pivot);
            let (head, tail) = m.split_at_mut(col + 1);
            let prow = &head[col];
            for row in tail.iter_mut() {
                if row[col] == 0 {
                    continue;
                }
                let f = self.mul(row[col], inv);
                for k in col + 1..n {
                    row[k] = self.sub(row[k], self.mul(f, prow[k]));
                }
                row[col] = 0;
            }
        }
        det
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, in decreasing order.
pub(crate) fn large_primes() -> impl Iterator<Item = u64> {
    let mut candidate = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime_u64(candidate) {
            candidate -= 2;
        }
        let p = candidate;
        candidate -= 2;
        Some(p)
    })
}

/// Coefficients (ascending) of the polynomial of degree ≤ d taking the
/// values `values[x]` at x = 0..=d, modulo p.
pub(crate) fn interpolate_consecutive(values: &[u64], p: u64) -> Vec<u64> {
    let d = values.len().saturating_sub(1);
    // Newton coefficients: forward differences divided by k!.
    let mut c = values.to_vec();
    for k in 1..=d {
        let inv_k = powmod(k as u64 % p, p - 2, p);
        for i in (k..=d).rev() {
            let diff = (c[i] + p - c[i - 1]) % p;
            c[i] = mulmod(diff, inv_k, p);
        }
    }
    // Horner in the Newton basis: P = c_d; P ← P·(T − k) + c_k.
    let mut poly = vec![0u64; d + 1];
    if let Some(&top) = c.last() {
        poly[0] = top;
    }
    let mut len = 1;
    for k in (0..d).rev() {
        let shift = k as u64 % p;
        for i in (0..=len).rev() {
            let hi = if i > 0 { poly[i - 1] } else { 0 };
            let lo = if i < len { mulmod(poly[i], shift, p) } else { 0 };
            poly[i] = (hi + p - lo) % p;
        }
        len += 1;
        poly[0] = (poly[0] + c[k]) % p;
    }
    poly
}

/// Chinese remaindering with balanced representatives.
pub(crate) struct Crt {
    value: BigInt,
    modulus: BigUint,
}

impl Crt {
    pub(crate) fn new() -> Self {
        Crt { value: BigInt::zero(), modulus: BigUint::one() }
    }

    pub(crate) fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    /// Incorporates `r mod p` (Garner step).
    pub(crate) fn push(&mut self, r: u64, p: u64) {
        let m_mod_p = (&self.modulus % p).to_u64_digits().first().copied().unwrap_or(0);
        let v = self.value.clone() % BigInt::from(p);
        let v = if v < BigInt::zero() { v + BigInt::from(p) } else { v };
        let v_mod_p = v.to_u64_digits().1.first().copied().unwrap_or(0);
        let delta = (r % p + p - v_mod_p) % p;
        let k = mulmod(delta, powmod(m_mod_p, p - 2, p), p);
        self.value += BigInt::from(self.modulus.clone()) * BigInt::from(k);
        self.modulus *= p;
    }

    /// The representative in (−M/2, M/2].
    pub(crate) fn balanced(&self) -> BigInt {
        let m = BigInt::from(self.modulus.clone());
        let v = ((&self.value % &m) + &m) % &m;
        if &v * 2 > m {
            v - m
        } else {
            v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn montgomery_matches_plain_arithmetic() {
        let p = large_primes().next().unwrap();
        let mg = Montgomery::new(p);
        for &(a, b) in &[(3u64, 5u64), (p - 1, p - 1), (1 << 61, 12345), (0, 7)] {
            let r = mg.from_mont(mg.mul(mg.to_mont(a), mg.to_mont(b)));
            assert_eq!(r, mulmod(a, b, p));
        }
        let x = mg.to_mont(987654321);
        assert_eq!(mg.from_mont(mg.mul(x, mg.inv(x))), 1);
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(!is_prime_u64(3215031751)); // strong pseudoprime to bases 2,3,5,7
        assert!(is_prime_u64((1 << 61) - 1));
        let ps: Vec<u64> = large_primes().take(3).collect();
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn modular_determinant() {
        let p = 1_000_000_007;
        let mg = Montgomery::new(p);
        let m: Vec<Vec<u64>> = [[2u64, 7, 1], [0, 3, 4], [5, 6, 0]]
            .iter()
            .map(|r| r.iter().map(|&x| mg.to_mont(x)).collect())
            .collect();
        // det = 2(0−24) − 7(0−20) + 1(0−15) = 77
        assert_eq!(mg.from_mont(mg.det(m)), 77);
        let singular = vec![vec![mg.one(), mg.one()], vec![mg.one(), mg.one()]];
        assert_eq!(mg.det(singular), 0);
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        let p = 1_000_000_007u64;
        let poly = [5u64, p - 3, 0, 7, 1];
        let values: Vec<u64> = (0..poly.len() as u64)
            .map(|x| poly.iter().rev().fold(0, |acc, &c| (mulmod(acc, x, p) + c) % p))
            .collect();
        assert_eq!(interpolate_consecutive(&values, p), poly.to_vec());
    }

    #[test]
    fn crt_reconstructs_signed_values() {
        let target = BigInt::from(-123456789012345678901234567i128);
        let mut crt = Crt::new();
        for p in large_primes().take(2) {
            let r = ((&target % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
            crt.push(r.to_u64_digits().1.first().copied().unwrap_or(0), p);
        }
        assert_eq!(crt.balanced(), target);
    }
}
