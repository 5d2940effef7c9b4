//! Characters of the symmetric groups and the multiplicities built from them.
//!
//! Character values come from the Murnaghan–Nakayama rule, with rim hooks
//! removed on the beta-set (abacus) of the partition. Induction products are
//! computed twice, once by Frobenius reciprocity on characters and once by
//! counting Littlewood–Richardson tableaux, so each can check the other.
//! Generic-t tensor multiplicities in Rep(S_t) are stable Kronecker
//! coefficients, obtained from Σ_m character inner products of padded
//! partitions at two consecutive large values of m.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::{
    enumerate_partitions, factorial, pad_partition, partitions_up_to, CycleType, Partition,
};
use crate::error::{Error, Result};
use crate::exact_arith::Rational;

type MnKey = (Vec<usize>, Vec<usize>);

fn mn_cache() -> &'static RwLock<HashMap<MnKey, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<MnKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Partitions obtained by removing a rim hook of length `r`, with the sign
/// (−1)^(height) of the hook.
fn remove_rim_hooks(lambda: &[usize], r: usize) -> Vec<(Vec<usize>, i64)> {
    let k = lambda.len();
    let beads: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (k - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &x) in beads.iter().enumerate() {
        if x < r || beads.contains(&(x - r)) {
            continue;
        }
        let target = x - r;
        let between = beads.iter().filter(|&&y| y > target && y < x).count();
        let mut moved = beads.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (k - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn mn(lambda: &[usize], rho: &[usize]) -> i64 {
    if rho.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = mn_cache().read().unwrap().get(&key) {
        return v;
    }
    let v = remove_rim_hooks(lambda, rho[0])
        .into_iter()
        .map(|(mu, sign)| sign * mn(&mu, &rho[1..]))
        .sum();
    // concurrent writers can only ever insert the same value
    mn_cache().write().unwrap().insert(key, v);
    v
}

/// χ_λ(ρ), the value of the irreducible character V_λ on the class of cycle type ρ.
pub fn character_value(lambda: &Partition, rho: &CycleType) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| ≠ |{rho}|")));
    }
    Ok(mn(lambda.parts(), rho.parts()))
}

/// Number of permutations of cycle type ρ: n!/∏ k^{m_k} m_k!.
pub fn class_size(rho: &CycleType) -> BigUint {
    let mut denom = BigUint::from(1u32);
    let mut k = 0;
    while k < rho.len() {
        let part = rho.parts()[k];
        let m = rho.multiplicity(part);
        denom *= BigUint::from(part).pow(m as u32) * factorial(m);
        k += m;
    }
    factorial(rho.size()) / denom
}

/// The full character table of Σ_n, rows and columns indexed by
/// `enumerate_partitions(n)`.
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub class_sizes: Vec<BigInt>,
    pub values: Vec<Vec<i64>>,
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    fn compute(n: usize) -> Self {
        let partitions = enumerate_partitions(n);
        let class_sizes = partitions.iter().map(|r| BigInt::from(class_size(r))).collect();
        let values = partitions
            .iter()
            .map(|l| partitions.iter().map(|r| mn(l.parts(), r.parts())).collect())
            .collect();
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharacterTable { n, partitions, class_sizes, values, index }
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index[lambda]]
    }

    /// (1/n!) Σ_ρ |C_ρ| ∏_f f(ρ), for integer-valued class functions given as rows.
    fn average_product(&self, rows: &[&[i64]]) -> Rational {
        let total: BigInt = (0..self.partitions.len())
            .map(|c| {
                rows.iter()
                    .fold(self.class_sizes[c].clone(), |acc, r| acc * BigInt::from(r[c]))
            })
            .sum();
        Rational::new(total, BigInt::from(factorial(self.n)))
    }
}

/// Cached character table of Σ_n.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = tables.read().unwrap().get(&n) {
        return t.clone();
    }
    let table = Arc::new(CharacterTable::compute(n));
    tables.write().unwrap().entry(n).or_insert(table).clone()
}

/// A ℚ-valued class function on Σ_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: usize,
    pub values: BTreeMap<CycleType, Rational>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, f: impl Fn(&CycleType) -> Rational) -> Self {
        let values = enumerate_partitions(n).into_iter().map(|r| {
            let v = f(&r);
            (r, v)
        });
        ClassFunction { n, values: values.collect() }
    }

    /// The irreducible character χ_λ.
    pub fn character(lambda: &Partition) -> Self {
        let n = lambda.size();
        Self::from_fn(n, |rho| Rational::from_integer(mn(lambda.parts(), rho.parts()).into()))
    }

    /// The character of the regular representation.
    pub fn regular(n: usize) -> Self {
        Self::from_fn(n, |rho| {
            if rho.parts().iter().all(|&p| p == 1) {
                Rational::from_integer(BigInt::from(factorial(n)))
            } else {
                Rational::zero()
            }
        })
    }

    pub fn value(&self, rho: &CycleType) -> Rational {
        self.values.get(rho).cloned().unwrap_or_else(Rational::zero)
    }
}

/// ⟨φ, ψ⟩ = (1/n!) Σ_ρ |C_ρ| φ(ρ) ψ(ρ).
pub fn inner_product(phi: &ClassFunction, psi: &ClassFunction) -> Result<Rational> {
    if phi.n != psi.n {
        return Err(Error::SizeMismatch(format!("class functions on Σ_{} and Σ_{}", phi.n, psi.n)));
    }
    let total: Rational = phi
        .values
        .iter()
        .map(|(rho, v)| Rational::from_integer(BigInt::from(class_size(rho))) * v * psi.value(rho))
        .sum();
    Ok(total / Rational::from_integer(BigInt::from(factorial(phi.n))))
}

fn nonneg_integer(r: Rational, what: &str) -> Result<u64> {
    if !r.is_integer() {
        return Err(Error::CrossCheck(format!("{what} is not an integer: {r}")));
    }
    r.to_integer()
        .to_u64()
        .ok_or_else(|| Error::CrossCheck(format!("{what} is negative: {r}")))
}

/// Multiplicity of V_ν in Ind_{Σ_a×Σ_b}^{Σ_{a+b}}(V_λ ⊗ V_μ), by Frobenius
/// reciprocity: ⟨Res χ_ν, χ_λ × χ_μ⟩ over Σ_a × Σ_b.
pub fn induction_multiplicity(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let (a, b) = (lambda.size(), mu.size());
    if nu.size() != a + b {
        return Err(Error::SizeMismatch(format!("|{nu}| ≠ |{lambda}| + |{mu}|")));
    }
    let (ta, tb) = (character_table(a), character_table(b));
    let row_l = ta.row(lambda);
    let row_m = tb.row(mu);
    let mut total = BigInt::zero();
    for (i, r1) in ta.partitions.iter().enumerate() {
        for (j, r2) in tb.partitions.iter().enumerate() {
            let chi_nu = mn(nu.parts(), r1.union(r2).parts());
            total += &ta.class_sizes[i]
                * &tb.class_sizes[j]
                * BigInt::from(row_l[i])
                * BigInt::from(row_m[j])
                * BigInt::from(chi_nu);
        }
    }
    let denom = BigInt::from(factorial(a) * factorial(b));
    nonneg_integer(Rational::new(total, denom), "induction multiplicity")
}

/// Littlewood–Richardson coefficient c^ν_{λμ}, counted as semistandard skew
/// tableaux of shape ν/λ and content μ whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return 0;
    }
    // cells of ν/λ in reading order: rows top to bottom, right to left
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|i| (lambda.part(i)..nu.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut filling: Vec<Vec<usize>> = (0..nu.len()).map(|i| vec![0; nu.part(i)]).collect();
    let mut counts = vec![0usize; mu.len() + 1];

    fn rec(
        pos: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        mu: &Partition,
        filling: &mut [Vec<usize>],
        counts: &mut [usize],
    ) -> u64 {
        let Some(&(i, j)) = cells.get(pos) else {
            return 1;
        };
        // value must be ≤ the entry to the right (weak rows), filled earlier
        let upper = if j + 1 < filling[i].len() { filling[i][j + 1] } else { mu.len() };
        // strictly greater than the entry above, when that cell is skew
        let lower = if i > 0 && j >= lambda.part(i - 1) { filling[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in lower..=upper {
            if counts[v] >= mu.part(v - 1) || (v > 1 && counts[v] >= counts[v - 1]) {
                continue;
            }
            counts[v] += 1;
            filling[i][j] = v;
            total += rec(pos + 1, cells, lambda, mu, filling, counts);
            counts[v] -= 1;
        }
        filling[i][j] = 0;
        total
    }
    rec(0, &cells, lambda, mu, &mut filling, &mut counts)
}

/// The padding size used for stable multiplicities of λ ⊗ μ.
fn stable_size(lambda: &Partition, mu: &Partition) -> usize {
    2 * (lambda.size() + mu.size()) + 2
}

/// ⟨χ_{λ}_m χ_{μ}_m, χ_{ν}_m⟩ in Σ_m.
fn kronecker_at(m: usize, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Rational> {
    let table = character_table(m);
    let (l, u, v) = (pad_partition(lambda, m)?, pad_partition(mu, m)?, pad_partition(nu, m)?);
    Ok(table.average_product(&[table.row(&l), table.row(&u), table.row(&v)]))
}

/// Multiplicity of [ν]_t in [λ]_t ⊗ [μ]_t for generic t, i.e. the stable
/// (reduced) Kronecker coefficient. Computed at m and m + 1 with
/// m = 2(|λ| + |μ|) + 2; disagreement is reported as an error.
pub fn stable_tensor_multiplicity(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if nu.size() > lambda.size() + mu.size() {
        return Err(Error::SizeMismatch(format!("|{nu}| > |{lambda}| + |{mu}|")));
    }
    let m = stable_size(lambda, mu);
    let a = kronecker_at(m, lambda, mu, nu)?;
    let b = kronecker_at(m + 1, lambda, mu, nu)?;
    if a != b {
        return Err(Error::Unstable(format!("{lambda}⊗{mu} → {nu}: {a} at m={m}, {b} at m={}", m + 1)));
    }
    nonneg_integer(a, "stable tensor multiplicity")
}

/// Full generic-t decomposition of [λ]_t ⊗ [μ]_t, zero multiplicities omitted.
pub fn stable_tensor_decomposition(lambda: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let m = stable_size(lambda, mu);
    let at = |m: usize| -> Result<BTreeMap<Partition, Rational>> {
        let table = character_table(m);
        let l = table.row(&pad_partition(lambda, m)?).to_vec();
        let u = table.row(&pad_partition(mu, m)?).to_vec();
        partitions_up_to(lambda.size() + mu.size())
            .into_iter()
            .map(|nu| {
                let v = table.row(&pad_partition(&nu, m)?);
                Ok((nu, table.average_product(&[&l, &u, v])))
            })
            .collect()
    };
    let (a, b) = (at(m)?, at(m + 1)?);
    let mut out = BTreeMap::new();
    for (nu, x) in a {
        if b[&nu] != x {
            return Err(Error::Unstable(format!("{lambda}⊗{mu} → {nu}")));
        }
        let k = nonneg_integer(x, "stable tensor multiplicity")?;
        if k > 0 {
            out.insert(nu, k);
        }
    }
    Ok(out)
}

/// Multiplicities of the simple objects [λ]_t in [1]^{⊗n} for generic t:
/// (1/m!) Σ_σ fix(σ)^n χ_{λ}_m(σ), computed at m = 2n + 2 and m + 1.
pub fn generator_power_multiplicities(n: usize) -> Result<BTreeMap<Partition, u64>> {
    let at = |m: usize| -> Result<BTreeMap<Partition, Rational>> {
        let table = character_table(m);
        let perm_power: Vec<i64> = table
            .partitions
            .iter()
            .map(|rho| (rho.multiplicity(1) as i64).pow(n as u32))
            .collect();
        partitions_up_to(n)
            .into_iter()
            .map(|lambda| {
                let row = table.row(&pad_partition(&lambda, m)?);
                Ok((lambda, table.average_product(&[&perm_power, row])))
            })
            .collect()
    };
    let m = 2 * n + 2;
    let (a, b) = (at(m)?, at(m + 1)?);
    let mut out = BTreeMap::new();
    for (lambda, x) in a {
        if b[&lambda] != x {
            return Err(Error::Unstable(format!("[1]^{n} → {lambda}")));
        }
        let k = nonneg_integer(x, "generator power multiplicity")?;
        if k > 0 {
            out.insert(lambda, k);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{bell, cycle_type, hook_dimension, permutations};
    use crate::exact_arith::int;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn character_values() {
        assert_eq!(character_value(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character_value(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        for rho in enumerate_partitions(5) {
            assert_eq!(character_value(&p(&[5]), &rho).unwrap(), 1);
        }
        assert!(character_value(&p(&[2, 1]), &p(&[2])).is_err());
    }

    /// The standard representation of Σ_3 on {x ∈ ℚ³ : Σx = 0}, with basis
    /// e1 − e2, e2 − e3: trace of each permutation matrix computed directly.
    #[test]
    fn standard_rep_of_s3_by_matrices() {
        let basis = [[1i64, -1, 0], [0, 1, -1]];
        for sigma in permutations(3) {
            // image of basis vectors under σ: (σv)_σ(i) = v_i
            let image = |v: &[i64; 3]| {
                let mut w = [0i64; 3];
                for i in 0..3 {
                    w[sigma[i]] = v[i];
                }
                w
            };
            // coordinates of w = a(e1−e2) + b(e2−e3): a = w1, b = w1 + w2
            let coords = |w: [i64; 3]| (w[0], w[0] + w[1]);
            let (a0, _) = coords(image(&basis[0]));
            let (_, b1) = coords(image(&basis[1]));
            let trace = a0 + b1;
            assert_eq!(trace, character_value(&p(&[2, 1]), &cycle_type(&sigma)).unwrap());
        }
    }

    #[test]
    fn identity_class_gives_dimension() {
        for lambda in partitions_up_to(8) {
            let n = lambda.size();
            let id = Partition::from_unsorted(vec![1; n]);
            let d = character_value(&lambda, &id).unwrap();
            assert_eq!(BigUint::from(d as u64), hook_dimension(&lambda));
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&p(&[1, 1, 1])), BigUint::from(1u32));
        assert_eq!(class_size(&p(&[2, 1])), BigUint::from(3u32));
        assert_eq!(class_size(&p(&[3])), BigUint::from(2u32));
        for n in 0..=7 {
            let total: BigUint = enumerate_partitions(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn orthogonality_relations() {
        for n in 0..=6 {
            let t = character_table(n);
            let k = t.partitions.len();
            let nf = BigInt::from(factorial(n));
            for a in 0..k {
                for b in 0..k {
                    // rows
                    let s: BigInt = (0..k)
                        .map(|c| &t.class_sizes[c] * t.values[a][c] * t.values[b][c])
                        .sum();
                    assert_eq!(s, if a == b { nf.clone() } else { BigInt::zero() });
                    // columns
                    let s: i64 = (0..k).map(|l| t.values[l][a] * t.values[l][b]).sum();
                    let expected = if a == b { (&nf / &t.class_sizes[a]).to_i64().unwrap() } else { 0 };
                    assert_eq!(s, expected);
                }
            }
        }
    }

    #[test]
    fn inner_products() {
        let c21 = ClassFunction::character(&p(&[2, 1]));
        assert_eq!(inner_product(&c21, &c21).unwrap(), int(1));
        assert_eq!(inner_product(&c21, &ClassFunction::character(&p(&[3]))).unwrap(), int(0));
        assert_eq!(inner_product(&ClassFunction::regular(3), &c21).unwrap(), int(2));
        assert!(inner_product(&c21, &ClassFunction::character(&p(&[2]))).is_err());
    }

    #[test]
    fn induction_examples() {
        assert_eq!(induction_multiplicity(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
        assert_eq!(induction_multiplicity(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(induction_multiplicity(&p(&[2]), &p(&[2]), &p(&[2, 1, 1])).unwrap(), 0);
        assert!(induction_multiplicity(&p(&[2]), &p(&[2]), &p(&[3, 2])).is_err());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&Partition::empty(), &p(&[3, 1]), &p(&[3, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[2, 1]), &p(&[2, 2])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[2]), &p(&[3, 2])), 0);
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[2, 2])), 0);
    }

    #[test]
    fn lr_agrees_with_induction_up_to_six() {
        for n in 0..=6 {
            for a in 0..=n {
                for lambda in enumerate_partitions(a) {
                    for mu in enumerate_partitions(n - a) {
                        for nu in enumerate_partitions(n) {
                            assert_eq!(
                                lr_coefficient(&lambda, &mu, &nu),
                                induction_multiplicity(&lambda, &mu, &nu).unwrap(),
                                "{lambda} {mu} {nu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn stable_examples() {
        let one = p(&[1]);
        assert_eq!(stable_tensor_multiplicity(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
        assert_eq!(stable_tensor_multiplicity(&one, &one, &Partition::empty()).unwrap(), 1);
        // std ⊗ std = triv ⊕ std ⊕ V_(m−2,2) ⊕ V_(m−2,1,1)
        assert_eq!(stable_tensor_multiplicity(&one, &one, &one).unwrap(), 1);
        let dec = stable_tensor_decomposition(&one, &one).unwrap();
        let expected: BTreeMap<_, _> =
            [(Partition::empty(), 1), (one.clone(), 1), (p(&[2]), 1), (p(&[1, 1]), 1)].into();
        assert_eq!(dec, expected);
        assert!(stable_tensor_multiplicity(&one, &one, &p(&[3])).is_err());
    }

    #[test]
    fn generator_powers() {
        let m1 = generator_power_multiplicities(1).unwrap();
        assert_eq!(m1, [(Partition::empty(), 1), (p(&[1]), 1)].into());
        let m2 = generator_power_multiplicities(2).unwrap();
        assert_eq!(
            m2,
            [(Partition::empty(), 2), (p(&[1]), 3), (p(&[2]), 1), (p(&[1, 1]), 1)].into()
        );
        assert_eq!(generator_power_multiplicities(0).unwrap(), [(Partition::empty(), 1)].into());
        for n in 0..=4 {
            let m = generator_power_multiplicities(n).unwrap();
            let squares: u128 = m.values().map(|&k| (k as u128) * (k as u128)).sum();
            assert_eq!(squares, bell(2 * n), "n = {n}");
        }
    }
}
