//! Interpolation in t: Euler characteristics of the simple objects [λ]_t,
//! Schur idempotents on the generator, integrality testing and the search
//! for integral objects whose tensor square is not integral.

mod report;

pub use report::{
    generator_power_report, reproduce_counterexample, search_counterexample, Counterexample,
    GENERATOR_POWER_BOUND, SEARCH_BOUND,
    CounterexampleReport, GeneratorPowerReport, ReportStep, SearchOutcome,
};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{character_value, class_size, stable_tensor_decomposition};
use crate::combinatorics::{cycle_type, enumerate_partitions, factorial, hook_dimension, permutations, Partition};
use crate::diagram_cat::{permutation_diagram, Basis, DiagramMorphism};
use crate::error::{Error, Result};
use crate::exact_arith::{
    content_polynomial, factor_rational_roots, q_polynomial, AlgebraicNumber, Rational, RationalAlgebra,
    RationalPolynomial,
};

/// Largest |λ| for which Schur idempotents are built by default.
pub const DEFAULT_SCHUR_BOUND: usize = 5;

/// Largest |λ| for which idempotency is checked by composition.
pub const IDEMPOTENCY_BOUND: usize = 4;

/// A value of the parameter t, with flags describing where it lies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterpolationPoint {
    value: AlgebraicNumber,
    is_natural: bool,
    is_rational_integer: bool,
}

impl InterpolationPoint {
    pub fn new(value: AlgebraicNumber) -> Self {
        let is_rational_integer = value.is_rational_integer();
        let is_natural = is_rational_integer && !value.as_rational().is_some_and(|r| r.is_negative());
        InterpolationPoint { value, is_natural, is_rational_integer }
    }

    pub fn integer(k: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(k)))
    }

    pub fn rational(r: Rational) -> Self {
        Self::new(AlgebraicNumber::rational(r))
    }

    /// The class of `rep` in ℚ[T]/(modulus).
    pub fn algebraic(modulus: RationalPolynomial, rep: RationalPolynomial) -> Result<Self> {
        Ok(Self::new(AlgebraicNumber::new(modulus, rep)?))
    }

    pub fn value(&self) -> &AlgebraicNumber {
        &self.value
    }

    pub fn is_natural(&self) -> bool {
        self.is_natural
    }

    pub fn is_rational_integer(&self) -> bool {
        self.is_rational_integer
    }

    /// Whether a modulus of degree ≥ 2 has a rational root, so that ℚ[T]/(m)
    /// is not a field.
    pub fn modulus_is_reducible(&self) -> bool {
        let m = self.value.modulus();
        m.degree() >= 2 && !factor_rational_roots(m).roots.is_empty()
    }

    fn require_not_natural(&self) -> Result<()> {
        if self.is_natural {
            Err(Error::NaturalParameter(self.value.to_string()))
        } else {
            Ok(())
        }
    }
}

impl<'de> Deserialize<'de> for InterpolationPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            value: AlgebraicNumber,
        }
        Ok(InterpolationPoint::new(Wire::deserialize(d)?.value))
    }
}

impl fmt::Display for InterpolationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A formal direct sum of simple objects [λ]_t with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VirtualObject {
    terms: BTreeMap<Partition, u64>,
}

impl VirtualObject {
    /// Zero multiplicities are dropped.
    pub fn new(terms: BTreeMap<Partition, u64>) -> Self {
        VirtualObject { terms: terms.into_iter().filter(|(_, k)| *k > 0).collect() }
    }

    pub fn simple(lambda: Partition) -> Self {
        Self::new(BTreeMap::from([(lambda, 1)]))
    }

    pub fn unit() -> Self {
        Self::simple(Partition::empty())
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct MultiplicityEntry {
    partition: Partition,
    mult: u64,
}

impl Serialize for VirtualObject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<MultiplicityEntry> = self
            .terms
            .iter()
            .map(|(p, &mult)| MultiplicityEntry { partition: p.clone(), mult })
            .collect();
        entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for VirtualObject {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<MultiplicityEntry>::deserialize(d)?;
        let mut terms = BTreeMap::new();
        for e in entries {
            if e.mult == 0 {
                return Err(serde::de::Error::custom(format!("multiplicity of {} must be positive", e.partition)));
            }
            *terms.entry(e.partition).or_insert(0) += e.mult;
        }
        Ok(VirtualObject { terms })
    }
}

/// χ([λ]_t) = Q_λ(t). Natural t is refused.
pub fn euler_char_simple(lambda: &Partition, t: &InterpolationPoint) -> Result<AlgebraicNumber> {
    t.require_not_natural()?;
    Ok(q_polynomial(lambda).eval_in(&t.value))
}

/// χ(S_λ X) for χ(X) = `chi`, computed as the cycle sum
/// (dim V_λ / n!) Σ_σ χ_λ(σ) χ^{#cycles σ} and as
/// (dim V_λ)² / n! · cp_λ(χ).
pub fn chi_schur_both_ways<R: RationalAlgebra>(lambda: &Partition, chi: &R) -> (R, R) {
    let n = lambda.size();
    let dim = BigInt::from(hook_dimension(lambda));
    let n_fact = BigInt::from(factorial(n));
    let mut sum = chi.scalar_like(&Rational::zero());
    for rho in enumerate_partitions(n) {
        let weight = BigInt::from(class_size(&rho)) * character_value(lambda, &rho).expect("sizes agree");
        if weight.is_zero() {
            continue;
        }
        let term = chi.pow(rho.len()).mul_ref(&chi.scalar_like(&Rational::from_integer(weight)));
        sum = sum.add_ref(&term);
    }
    let cycle_sum = sum.mul_ref(&chi.scalar_like(&Rational::new(dim.clone(), n_fact.clone())));
    let content = content_polynomial(lambda)
        .eval_in(chi)
        .mul_ref(&chi.scalar_like(&Rational::new(&dim * &dim, n_fact)));
    (cycle_sum, content)
}

/// 𝔡_λ = (dim V_λ / n!) Σ_σ χ_λ(σ) σ acting on n strands, in the diagram basis.
pub fn schur_idempotent(lambda: &Partition) -> Result<DiagramMorphism> {
    schur_idempotent_with_bound(lambda, DEFAULT_SCHUR_BOUND)
}

pub fn schur_idempotent_with_bound(lambda: &Partition, bound: usize) -> Result<DiagramMorphism> {
    let n = lambda.size();
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    let scale = Rational::new(BigInt::from(hook_dimension(lambda)), BigInt::from(factorial(n)));
    let terms = permutations(n)
        .into_iter()
        .map(|sigma| {
            let chi = character_value(lambda, &cycle_type(&sigma))?;
            let coeff = &scale * Rational::from_integer(BigInt::from(chi));
            Ok((permutation_diagram(&sigma)?, RationalPolynomial::constant(coeff)))
        })
        .collect::<Result<Vec<_>>>()?;
    DiagramMorphism::from_terms(n, n, Basis::Diagram, terms)
}

/// Whether 𝔡_λ vanishes in End([1]^{⊗n}).
pub fn is_zero_in_partition_algebra(lambda: &Partition) -> Result<bool> {
    Ok(schur_idempotent(lambda)?.is_zero())
}

fn check_idempotency_bound(n: usize) -> Result<()> {
    if n > IDEMPOTENCY_BOUND {
        return Err(Error::BoundExceeded { size: n, bound: IDEMPOTENCY_BOUND });
    }
    Ok(())
}

/// 𝔡_λ ∘ 𝔡_λ = 𝔡_λ.
pub fn idempotency_check(lambda: &Partition) -> Result<bool> {
    check_idempotency_bound(lambda.size())?;
    let d = schur_idempotent(lambda)?;
    Ok(d.compose(&d)? == d)
}

/// 𝔡_λ ∘ 𝔡_μ = 0 for λ ≠ μ of the same size.
pub fn orthogonality_check(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| ≠ |{mu}|")));
    }
    check_idempotency_bound(lambda.size())?;
    Ok(schur_idempotent(lambda)?.compose(&schur_idempotent(mu)?)?.is_zero())
}

/// Σ_{λ ⊢ n} 𝔡_λ = id.
pub fn idempotents_sum_to_identity(n: usize) -> Result<bool> {
    check_idempotency_bound(n)?;
    let mut sum = DiagramMorphism::zero(n, n, Basis::Diagram);
    for lambda in enumerate_partitions(n) {
        sum = sum.add(&schur_idempotent(&lambda)?)?;
    }
    Ok(sum == DiagramMorphism::identity(n))
}

/// Generic-t decomposition of X ⊗ Y, extended bilinearly from the stable
/// tensor multiplicities of simples.
pub fn tensor_decompose(x: &VirtualObject, y: &VirtualObject) -> Result<VirtualObject> {
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    for (lambda, a) in &x.terms {
        for (mu, b) in &y.terms {
            for (nu, c) in stable_tensor_decomposition(lambda, mu)? {
                *out.entry(nu).or_insert(0) += a * b * c;
            }
        }
    }
    Ok(VirtualObject::new(out))
}

/// [`tensor_decompose`] at a specific t, which must not be natural.
pub fn tensor_decompose_at(x: &VirtualObject, y: &VirtualObject, t: &InterpolationPoint) -> Result<VirtualObject> {
    t.require_not_natural()?;
    tensor_decompose(x, y)
}

/// Outcome of [`is_integral_type`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralityVerdict {
    pub integral: bool,
    /// The first simple summand (see [`witness_order`]) whose Euler
    /// characteristic is not a rational integer.
    pub witness: Option<IntegralityWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralityWitness {
    pub partition: Partition,
    pub chi: AlgebraicNumber,
}

/// Order in which summands are examined: larger |λ| first, then larger
/// multiplicity, then the partition order.
pub fn witness_order(x: &VirtualObject) -> Vec<(&Partition, u64)> {
    let mut v: Vec<(&Partition, u64)> = x.terms.iter().map(|(p, &k)| (p, k)).collect();
    v.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then(b.1.cmp(&a.1)).then(a.0.cmp(b.0)));
    v
}

/// Whether every simple summand of X has rational-integer Euler
/// characteristic at t.
pub fn is_integral_type(x: &VirtualObject, t: &InterpolationPoint) -> Result<IntegralityVerdict> {
    t.require_not_natural()?;
    for (lambda, _) in witness_order(x) {
        let chi = euler_char_simple(lambda, t)?;
        if !chi.is_rational_integer() {
            return Ok(IntegralityVerdict {
                integral: false,
                witness: Some(IntegralityWitness { partition: lambda.clone(), chi }),
            });
        }
    }
    Ok(IntegralityVerdict { integral: true, witness: None })
}
