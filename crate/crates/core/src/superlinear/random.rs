//! Random supercommutative algebras of small dimension.
//!
//! Every generator builds an algebra that is supercommutative and
//! associative by construction: monomial quotients of free supercommutative
//! algebras, truncated and quotient polynomial rings, their products and
//! super tensor products, followed by a random graded change of basis.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use super::algebra::SuperAlgebraPresentation;
use super::linalg::{rational_det, rational_inverse};
use crate::exact_arith::{Rational, RationalPolynomial};

/// A monomial x^α θ_S with S a set of odd generators.
type Monomial = (Vec<usize>, Vec<usize>);

/// The quotient of ℚ[x_1..x_a] ⊗ Λ(θ_1..θ_b) by the span of all monomials
/// outside the downward-closed set `monomials`.
fn monomial_algebra(monomials: &BTreeSet<Monomial>) -> SuperAlgebraPresentation {
    let mut basis: Vec<&Monomial> = monomials.iter().filter(|m| m.1.len() % 2 == 0).collect();
    let p = basis.len();
    basis.extend(monomials.iter().filter(|m| m.1.len() % 2 == 1));
    let n = basis.len();
    let index = |m: &Monomial| basis.iter().position(|b| *b == m);
    let mut mult = vec![vec![vec![Rational::zero(); n]; n]; n];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            if a.1.iter().any(|s| b.1.contains(s)) {
                continue;
            }
            let inversions = a.1.iter().map(|s| b.1.iter().filter(|t| *t < s).count()).sum::<usize>();
            let alpha: Vec<usize> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
            let mut odd: Vec<usize> = a.1.iter().chain(&b.1).copied().collect();
            odd.sort_unstable();
            if let Some(k) = index(&(alpha, odd)) {
                mult[i][j][k] = if inversions % 2 == 0 { Rational::one() } else { -Rational::one() };
            }
        }
    }
    let mut unit = vec![Rational::zero(); n];
    unit[0] = Rational::one();
    SuperAlgebraPresentation::new(p, n - p, unit, mult).expect("monomial quotients are valid")
}

/// A random downward-closed monomial set with at most `max_p` even and
/// `max_q` odd monomials, and at least one odd monomial when `max_q > 0`.
fn random_monomial_set<R: Rng>(rng: &mut R, max_p: usize, max_q: usize) -> BTreeSet<Monomial> {
    let even_gens = rng.gen_range(0..=2usize);
    let odd_gens = rng.gen_range(1..=3usize).min(max_q.max(1));
    let one: Monomial = (vec![0; even_gens], vec![]);
    let mut set = BTreeSet::from([one]);
    let counts = |set: &BTreeSet<Monomial>| {
        let odd = set.iter().filter(|m| m.1.len() % 2 == 1).count();
        (set.len() - odd, odd)
    };
    let mut forced_odd = max_q > 0;
    for _ in 0..rng.gen_range(1..=8) {
        let candidates: Vec<Monomial> = addable(&set, even_gens, odd_gens)
            .into_iter()
            .filter(|m| {
                let (e, o) = counts(&set);
                if m.1.len() % 2 == 1 {
                    o < max_q
                } else {
                    e < max_p
                }
            })
            .filter(|m| !forced_odd || m.1.len() % 2 == 1)
            .collect();
        if candidates.is_empty() {
            break;
        }
        let m = candidates[rng.gen_range(0..candidates.len())].clone();
        forced_odd = false;
        set.insert(m);
    }
    set
}

fn addable(set: &BTreeSet<Monomial>, even_gens: usize, odd_gens: usize) -> Vec<Monomial> {
    let divisors_present = |m: &Monomial| {
        let even_ok = (0..even_gens).filter(|&g| m.0[g] > 0).all(|g| {
            let mut d = m.clone();
            d.0[g] -= 1;
            set.contains(&d)
        });
        let odd_ok = m.1.iter().all(|s| {
            let mut d = m.clone();
            d.1.retain(|t| t != s);
            set.contains(&d)
        });
        even_ok && odd_ok
    };
    let mut out = BTreeSet::new();
    for m in set {
        for g in 0..even_gens {
            let mut c = m.clone();
            c.0[g] += 1;
            out.insert(c);
        }
        for s in 0..odd_gens {
            if !m.1.contains(&s) {
                let mut c = m.clone();
                c.1.push(s);
                c.1.sort_unstable();
                out.insert(c);
            }
        }
    }
    out.into_iter().filter(|m| !set.contains(m) && divisors_present(m)).collect()
}

/// ℚ[x]/(f) for monic f, with basis 1, x, …, x^{d−1}; purely even.
fn even_quotient(f: &RationalPolynomial) -> SuperAlgebraPresentation {
    let d = f.degree() as usize;
    let mut mult = vec![vec![vec![Rational::zero(); d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            let (_, r) = RationalPolynomial::monomial(i + j).div_rem(f).expect("f is nonzero");
            for (k, slot) in mult[i][j].iter_mut().enumerate() {
                *slot = r.coeff(k);
            }
        }
    }
    let mut unit = vec![Rational::zero(); d];
    unit[0] = Rational::one();
    SuperAlgebraPresentation::new(d, 0, unit, mult).expect("ℚ[x]/(f) is valid")
}

fn random_monic<R: Rng>(rng: &mut R, degree: usize) -> RationalPolynomial {
    let mut c: Vec<Rational> = (0..degree).map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-3..=3)))).collect();
    c.push(Rational::one());
    RationalPolynomial::from_coeffs(c)
}

/// Direct product A × B.
pub(crate) fn product(a: &SuperAlgebraPresentation, b: &SuperAlgebraPresentation) -> SuperAlgebraPresentation {
    let (pa, pb, qa) = (a.p(), b.p(), a.q());
    let p = pa + pb;
    let n = a.dim() + b.dim();
    let map_a = |i: usize| if i < pa { i } else { p + (i - pa) };
    let map_b = |j: usize| if j < pb { pa + j } else { p + qa + (j - pb) };
    let mut mult = vec![vec![vec![Rational::zero(); n]; n]; n];
    let mut unit = vec![Rational::zero(); n];
    for (alg, map) in [(a, &map_a as &dyn Fn(usize) -> usize), (b, &map_b)] {
        for i in 0..alg.dim() {
            unit[map(i)] = alg.unit()[i].clone();
            for j in 0..alg.dim() {
                for k in 0..alg.dim() {
                    mult[map(i)][map(j)][map(k)] = alg.mult()[i][j][k].clone();
                }
            }
        }
    }
    SuperAlgebraPresentation::new(p, n - p, unit, mult).expect("products of valid algebras are valid")
}

/// Super tensor product A ⊗ B with the Koszul sign.
pub(crate) fn tensor(a: &SuperAlgebraPresentation, b: &SuperAlgebraPresentation) -> SuperAlgebraPresentation {
    let mut pairs: Vec<(usize, usize)> = (0..a.dim()).flat_map(|i| (0..b.dim()).map(move |j| (i, j))).collect();
    pairs.sort_by_key(|&(i, j)| a.is_odd(i) ^ b.is_odd(j));
    let p = pairs.iter().filter(|&&(i, j)| !(a.is_odd(i) ^ b.is_odd(j))).count();
    let n = pairs.len();
    let idx = |i: usize, j: usize| pairs.iter().position(|&x| x == (i, j)).expect("pair exists");
    let mut mult = vec![vec![vec![Rational::zero(); n]; n]; n];
    for (x, &(i, j)) in pairs.iter().enumerate() {
        for (y, &(k, l)) in pairs.iter().enumerate() {
            let sign = if b.is_odd(j) && a.is_odd(k) { -Rational::one() } else { Rational::one() };
            for r in 0..a.dim() {
                let ar = &a.mult()[i][k][r];
                if ar.is_zero() {
                    continue;
                }
                for s in 0..b.dim() {
                    let bs = &b.mult()[j][l][s];
                    if !bs.is_zero() {
                        mult[x][y][idx(r, s)] += &sign * ar * bs;
                    }
                }
            }
        }
    }
    let mut unit = vec![Rational::zero(); n];
    for (x, &(i, j)) in pairs.iter().enumerate() {
        unit[x] = &a.unit()[i] * &b.unit()[j];
    }
    SuperAlgebraPresentation::new(p, n - p, unit, mult).expect("tensor products of valid algebras are valid")
}

fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<Rational>> {
    loop {
        let m: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-2..=2)))).collect())
            .collect();
        if !rational_det(&m).is_zero() {
            return m;
        }
    }
}

/// Re-expresses A in the basis f_i = Σ_j M[i][j] e_j for a random
/// block-diagonal (even, odd) invertible M.
pub fn random_graded_basis_change<R: Rng>(rng: &mut R, a: &SuperAlgebraPresentation) -> SuperAlgebraPresentation {
    let (p, n) = (a.p(), a.dim());
    let even = random_invertible(rng, p);
    let odd = random_invertible(rng, n - p);
    let mut m = vec![vec![Rational::zero(); n]; n];
    for i in 0..p {
        for j in 0..p {
            m[i][j] = even[i][j].clone();
        }
    }
    for i in p..n {
        for j in p..n {
            m[i][j] = odd[i - p][j - p].clone();
        }
    }
    let inv = rational_inverse(&m).expect("M is invertible");
    // coordinates of v (in e) with respect to f: v · M⁻¹
    let to_f = |v: &[Rational]| -> Vec<Rational> {
        (0..n).map(|l| (0..n).fold(Rational::zero(), |acc, k| acc + &v[k] * &inv[k][l])).collect()
    };
    let mult = (0..n)
        .map(|i| (0..n).map(|j| to_f(&a.multiply(&m[i], &m[j]))).collect())
        .collect();
    SuperAlgebraPresentation::new(p, n - p, to_f(a.unit()), mult).expect("a change of basis preserves validity")
}

/// A random supercommutative algebra of dimension at most (max_p|max_q).
/// When `max_q ≥ 1` the result has at least one odd basis vector.
pub fn random_supercommutative_algebra<R: Rng>(rng: &mut R, max_p: usize, max_q: usize) -> SuperAlgebraPresentation {
    let max_p = max_p.max(1);
    let base = match rng.gen_range(0..4) {
        0 => monomial_algebra(&random_monomial_set(rng, max_p, max_q)),
        1 => {
            let m = monomial_algebra(&random_monomial_set(rng, max_p.saturating_sub(1).max(1), max_q));
            let room = max_p.saturating_sub(m.p());
            if room == 0 {
                m
            } else {
                let degree = rng.gen_range(1..=room);
                product(&m, &even_quotient(&random_monic(rng, degree)))
            }
        }
        2 => {
            let degree = rng.gen_range(1..=max_p.min(3));
            let f = random_monic(rng, degree);
            let odd_part = monomial_algebra(&random_monomial_set(rng, 1, 1));
            let t = tensor(&even_quotient(&f), &odd_part);
            if t.p() <= max_p && t.q() <= max_q {
                t
            } else {
                odd_part
            }
        }
        _ => {
            let a = monomial_algebra(&random_monomial_set(rng, max_p.div_ceil(2), max_q.div_ceil(2)));
            let b = monomial_algebra(&random_monomial_set(rng, max_p / 2, max_q / 2));
            let pr = product(&a, &b);
            if pr.p() <= max_p && pr.q() <= max_q {
                pr
            } else {
                a
            }
        }
    };
    random_graded_basis_change(rng, &base)
}
