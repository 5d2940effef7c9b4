//! Integer partitions, set partitions and the partition lattice.
//!
//! Partitions index the irreducible representations of the symmetric groups,
//! the simple objects of Rep(S_t) and the Schur functors. Set partitions index
//! the diagram basis of the partition category.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty sequence is the empty partition of 0. Partitions are ordered
/// first by size and then reverse lexicographically, so that
/// `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// Cycle type of a permutation; a partition of `n` whose parts are the cycle lengths.
pub type CycleType = Partition;

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// |λ|, the sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of (nonzero) parts, i.e. the number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-based), or 0 beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition((0..cols).map(|j| self.0.iter().take_while(|&&r| r > j).count()).collect())
    }

    /// Whether the Young diagram of `other` fits inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Cells `(row, col)`, 0-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// Union of the parts of two partitions (as multisets).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"2,1"`, `"(2,1)"`, and `"empty"`, `"0"` or `""` for ∅.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "empty" || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, in the crate's canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Hook length of cell `(i, j)` of `lambda`, with `conj` its conjugate.
fn hook(lambda: &Partition, conj: &Partition, i: usize, j: usize) -> usize {
    (lambda.part(i) - j - 1) + (conj.part(j) - i - 1) + 1
}

/// dim V_λ by the hook length formula.
pub fn hook_dimension(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let hooks = lambda
        .cells()
        .fold(BigUint::one(), |acc, (i, j)| acc * hook(lambda, &conj, i, j));
    factorial(lambda.size()) / hooks
}

/// The padded partition `{λ}_m = (m − |λ|, λ_1, λ_2, …)`.
///
/// Valid only for `m ≥ |λ| + λ_1`.
pub fn pad_partition(lambda: &Partition, m: usize) -> Result<Partition> {
    let bound = lambda.size() + lambda.first();
    if m < bound {
        return Err(Error::PaddingTooSmall { partition: lambda.to_string(), m, bound });
    }
    let mut parts = Vec::with_capacity(lambda.len() + 1);
    parts.push(m - lambda.size());
    parts.extend_from_slice(lambda.parts());
    Partition::new(parts)
}

/// A set partition of `{0, …, n−1}` stored as a restricted growth string.
///
/// `rgs[i]` is the index of the block containing `i`; blocks are numbered in
/// order of their least element, which makes the representation canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SetPartition {
    rgs: Vec<usize>,
}

impl SetPartition {
    /// Canonicalizes an arbitrary block labelling.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let rgs = labels
            .iter()
            .map(|&l| match map.iter().find(|(k, _)| *k == l) {
                Some(&(_, v)) => v,
                None => {
                    let v = map.len();
                    map.push((l, v));
                    v
                }
            })
            .collect();
        SetPartition { rgs }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidDiagram("empty block".into()));
            }
            for &x in block {
                if x >= n || labels[x] != usize::MAX {
                    return Err(Error::InvalidDiagram(format!(
                        "element {x} is out of range or repeated"
                    )));
                }
                labels[x] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::InvalidDiagram("blocks do not cover the ground set".into()));
        }
        Ok(Self::from_labels(&labels))
    }

    /// The partition of `n` points into singletons.
    pub fn discrete(n: usize) -> Self {
        SetPartition { rgs: (0..n).collect() }
    }

    /// The one-block partition (the empty partition when `n = 0`).
    pub fn full(n: usize) -> Self {
        SetPartition { rgs: vec![0; n] }
    }

    pub fn ground_size(&self) -> usize {
        self.rgs.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().max().map_or(0, |m| m + 1)
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.rgs[x]
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    /// Blocks sorted by least element, each block sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(x);
        }
        blocks
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        if self.ground_size() != coarser.ground_size() {
            return false;
        }
        let mut image = vec![usize::MAX; self.num_blocks()];
        for (x, &b) in self.rgs.iter().enumerate() {
            let c = coarser.rgs[x];
            if image[b] == usize::MAX {
                image[b] = c;
            } else if image[b] != c {
                return false;
            }
        }
        true
    }

    /// All set partitions ρ with `self ≤ ρ` (coarsenings, including `self`).
    pub fn coarsenings(&self) -> Vec<SetPartition> {
        enumerate_set_partitions(self.num_blocks())
            .into_iter()
            .map(|merge| {
                let labels: Vec<usize> = self.rgs.iter().map(|&b| merge.rgs[b]).collect();
                SetPartition::from_labels(&labels)
            })
            .collect()
    }
}

/// All set partitions of `{0, …, n−1}` in lexicographic order of their
/// restricted growth strings; there are Bell(n) of them.
pub fn enumerate_set_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(i: usize, n: usize, next: usize, cur: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == n {
            out.push(SetPartition { rgs: cur.clone() });
            return;
        }
        for b in 0..=next {
            cur.push(b);
            rec(i + 1, n, next.max(b + 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Set partitions of an arbitrary ordered ground set, as lists of blocks.
pub fn enumerate_labeled_set_partitions<T: Clone>(ground: &[T]) -> Vec<Vec<Vec<T>>> {
    enumerate_set_partitions(ground.len())
        .into_iter()
        .map(|sp| {
            sp.blocks()
                .into_iter()
                .map(|b| b.into_iter().map(|i| ground[i].clone()).collect())
                .collect()
        })
        .collect()
}

/// Möbius function μ(π, ρ) of the partition lattice.
pub fn moebius_partition_lattice(pi: &SetPartition, rho: &SetPartition) -> Result<i64> {
    if !pi.refines(rho) {
        return Err(Error::NotRefinement(format!("{:?}", pi.blocks()), format!("{:?}", rho.blocks())));
    }
    let mut inside = vec![0usize; rho.num_blocks()];
    let mut seen = vec![false; pi.num_blocks()];
    for (x, &b) in pi.rgs.iter().enumerate() {
        if !seen[b] {
            seen[b] = true;
            inside[rho.rgs[x]] += 1;
        }
    }
    Ok(inside.into_iter().fold(1i64, |acc, k| {
        let f: i64 = (1..k as i64).product();
        let sign = if k % 2 == 0 { -1 } else { 1 };
        acc * sign * f
    }))
}

/// Bell numbers B(0..=n) via the Bell triangle.
pub fn bell_numbers(n: usize) -> Vec<u128> {
    let mut bells = vec![1u128];
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
        bells.push(row[0]);
    }
    bells
}

pub fn bell(n: usize) -> u128 {
    bell_numbers(n)[n]
}

/// Cycle type of a permutation given by its images `sigma[i]` (0-based).
pub fn cycle_type(sigma: &[usize]) -> CycleType {
    let mut seen = vec![false; sigma.len()];
    let mut lens = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = sigma[x];
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_unsorted(lens)
}

/// All permutations of `{0, …, n−1}` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(6).len(), 11);
    }

    #[test]
    fn partition_count_matches_brute_force() {
        // weakly decreasing sequences of positive integers summing to n
        fn brute(n: usize, max: usize) -> usize {
            if n == 0 {
                return 1;
            }
            (1..=max.min(n)).map(|k| brute(n - k, k)).sum()
        }
        for n in 0..=12 {
            assert_eq!(enumerate_partitions(n).len(), brute(n, n));
        }
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!("empty".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(hook_dimension(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(hook_dimension(&p(&[3, 2, 1])), BigUint::from(16u32));
        assert_eq!(hook_dimension(&p(&[1, 1, 1])), BigUint::from(1u32));
        assert_eq!(hook_dimension(&Partition::empty()), BigUint::from(1u32));
    }

    #[test]
    fn burnside_sum_of_squares() {
        for n in 0..=8 {
            let total: BigUint = enumerate_partitions(n)
                .iter()
                .map(|l| {
                    let d = hook_dimension(l);
                    &d * &d
                })
                .sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn padding() {
        assert_eq!(pad_partition(&p(&[2, 1]), 7).unwrap(), p(&[4, 2, 1]));
        assert_eq!(pad_partition(&p(&[1]), 5).unwrap(), p(&[4, 1]));
        assert_eq!(pad_partition(&Partition::empty(), 3).unwrap(), p(&[3]));
        assert!(pad_partition(&p(&[2, 1]), 4).is_err());
        let padded = pad_partition(&p(&[3, 1]), 7).unwrap();
        assert_eq!(padded.size(), 7);
        assert_eq!(padded.first(), 3);
    }

    #[test]
    fn set_partition_counts() {
        assert_eq!(enumerate_set_partitions(0).len(), 1);
        assert_eq!(enumerate_set_partitions(2).len(), 2);
        assert_eq!(enumerate_set_partitions(4).len(), 15);
        let bells = bell_numbers(8);
        for n in 0..=8 {
            assert_eq!(enumerate_set_partitions(n).len() as u128, bells[n]);
        }
        assert_eq!(bell(6), 203);
        let labeled = enumerate_labeled_set_partitions(&["a", "b"]);
        assert_eq!(labeled, vec![vec![vec!["a", "b"]], vec![vec!["a"], vec!["b"]]]);
    }

    #[test]
    fn moebius_values() {
        let d3 = SetPartition::discrete(3);
        assert_eq!(moebius_partition_lattice(&d3, &d3).unwrap(), 1);
        assert_eq!(moebius_partition_lattice(&d3, &SetPartition::full(3)).unwrap(), 2);
        let d2 = SetPartition::discrete(2);
        assert_eq!(moebius_partition_lattice(&d2, &SetPartition::full(2)).unwrap(), -1);
        assert!(moebius_partition_lattice(&SetPartition::full(2), &d2).is_err());
    }

    #[test]
    fn moebius_sums_vanish_below_top() {
        for n in 0..=5 {
            for pi in enumerate_set_partitions(n) {
                let total: i64 = pi
                    .coarsenings()
                    .iter()
                    .map(|rho| moebius_partition_lattice(&pi, rho).unwrap())
                    .sum();
                let expected = if pi.num_blocks() <= 1 { 1 } else { 0 };
                assert_eq!(total, expected, "{:?}", pi.blocks());
            }
        }
    }

    #[test]
    fn coarsenings_are_exactly_the_upper_set() {
        for n in 0..=4 {
            let all = enumerate_set_partitions(n);
            for pi in &all {
                let mut up: Vec<_> = all.iter().filter(|r| pi.refines(r)).cloned().collect();
                let mut got = pi.coarsenings();
                up.sort();
                got.sort();
                assert_eq!(up, got);
            }
        }
    }

    #[test]
    fn cycle_types_and_permutations() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(cycle_type(&[1, 2, 0]), p(&[3]));
        assert_eq!(cycle_type(&[1, 0, 2]), p(&[2, 1]));
        assert_eq!(cycle_type(&[]), Partition::empty());
    }

    #[test]
    fn ordering_is_size_then_reverse_lex() {
        let mut v = vec![p(&[1, 1]), p(&[3]), Partition::empty(), p(&[2]), p(&[2, 1])];
        v.sort();
        assert_eq!(v, vec![Partition::empty(), p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1])]);
    }
}
