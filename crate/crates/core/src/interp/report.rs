use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::{is_integral_type, tensor_decompose, InterpolationPoint, IntegralityVerdict, VirtualObject};
use crate::characters::{generator_power_multiplicities, induction_multiplicity, stable_tensor_multiplicity};
use crate::combinatorics::{bell, factorial, hook_dimension, Partition};
use crate::diagram_cat::end_dimension;
use crate::error::{Error, Result};
use crate::exact_arith::{
    factor_rational_roots, int, q_polynomial, AlgebraicNumber, CofactorStatus, Rational, RationalPolynomial,
};

/// One named, checked value of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportStep {
    pub name: String,
    pub value: String,
    /// The formula the value instantiates.
    pub anchor: String,
}

impl ReportStep {
    fn new(name: &str, value: impl ToString, anchor: &str) -> Self {
        ReportStep { name: name.into(), value: value.to_string(), anchor: anchor.into() }
    }
}

/// The full chain showing that [λ]_τ is of integral type while
/// [λ]_τ ⊗ [λ]_τ is not, for λ = (2,1) and τ a root of T² − 7T + 15.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub steps: Vec<ReportStep>,
    pub multiplicity: u64,
    pub remainder: String,
    pub remainder_unsimplified: String,
    pub witness: Partition,
    pub verdict: String,
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<T> {
    if got == want {
        Ok(got)
    } else {
        Err(Error::CrossCheck(format!("{what}: computed {got:?}, expected {want:?}")))
    }
}

/// Writes `c·p` with `p` primitive in ℤ[T], e.g. `(1/45)*(135*T - 1080)`.
fn scaled_form(scale: &Rational, p: &RationalPolynomial) -> String {
    format!("({scale})*({p})")
}

/// Rebuilds every number in the chain and fails on the first deviation.
pub fn reproduce_counterexample() -> Result<CounterexampleReport> {
    let lambda = Partition::new(vec![2, 1])?;
    let nu = Partition::new(vec![3, 2, 1])?;
    let mut steps = Vec::new();

    let q = q_polynomial(&lambda);
    let expected_q = RationalPolynomial::from_roots(Rational::new(1.into(), 3.into()), &[int(4), int(2), int(0)]);
    expect_eq("Q_(2,1)", &q, &expected_q)?;
    steps.push(ReportStep::new("dimension_polynomial", &q, "Q_(2,1)(T)"));
    steps.push(ReportStep::new("dimension_polynomial_factored", factor_rational_roots(&q), "Q_(2,1)(T)"));

    let at_minus_one = q.eval(&int(-1));
    expect_eq("Q_(2,1)(-1)", &at_minus_one, &int(-5))?;
    steps.push(ReportStep::new("euler_characteristic_at_minus_one", &at_minus_one, "Q_(2,1)(-1)"));

    let shifted = &q + &RationalPolynomial::constant(int(5));
    let f = factor_rational_roots(&shifted);
    let modulus = RationalPolynomial::from_i64(&[15, -7, 1]);
    expect_eq("rational roots of Q_(2,1) + 5", f.roots.len(), 1)?;
    expect_eq("rational root of Q_(2,1) + 5", &f.roots[0].0, &int(-1))?;
    expect_eq("quadratic cofactor", &f.cofactor.monic(), &modulus)?;
    if f.status != CofactorStatus::IrreducibleQuadratic {
        return Err(Error::CrossCheck("cofactor not certified irreducible".into()));
    }
    steps.push(ReportStep::new("shifted_factorization", &f, "Q_(2,1)(T) + 5"));
    steps.push(ReportStep::new("modulus", &modulus, "minimal polynomial of tau"));

    let tau = InterpolationPoint::algebraic(modulus.clone(), RationalPolynomial::t())?;
    let simple = VirtualObject::simple(lambda.clone());
    let chi_lambda = super::euler_char_simple(&lambda, &tau)?;
    expect_eq("chi([(2,1)]_tau)", chi_lambda.as_rational(), Some(int(-5)))?;
    let simple_verdict = is_integral_type(&simple, &tau)?;
    if !simple_verdict.integral {
        return Err(Error::CrossCheck("[(2,1)]_tau should be of integral type".into()));
    }
    steps.push(ReportStep::new("euler_characteristic_at_tau", &chi_lambda, "Q_(2,1)(tau)"));

    let multiplicity = induction_multiplicity(&lambda, &lambda, &nu)?;
    expect_eq("[Ind(V_(2,1) ⊗ V_(2,1)) : V_(3,2,1)]", multiplicity, 2)?;
    expect_eq("stable multiplicity of (3,2,1)", stable_tensor_multiplicity(&lambda, &lambda, &nu)?, 2)?;
    steps.push(ReportStep::new("multiplicity", multiplicity, "[(2,1)]⊗[(2,1)] : [(3,2,1)]"));

    let q_nu = q_polynomial(&nu);
    let scale = Rational::new(BigInt::from(hook_dimension(&nu)), BigInt::from(factorial(nu.size())));
    let (_, integral_part) = q_nu.scale(&(Rational::from_integer(1.into()) / &scale)).div_rem(&modulus)?;
    let remainder = q_nu.div_rem(&modulus)?.1;
    expect_eq("Q_(3,2,1) mod m", &remainder, &RationalPolynomial::from_i64(&[-24, 3]))?;
    expect_eq("unsimplified remainder", &integral_part.scale(&scale), &remainder)?;
    let remainder_unsimplified = scaled_form(&scale, &integral_part);
    steps.push(ReportStep::new("remainder_unsimplified", &remainder_unsimplified, "Q_(3,2,1)(T) mod m"));
    steps.push(ReportStep::new("remainder", &remainder, "Q_(3,2,1)(T) mod m"));

    let square = tensor_decompose(&simple, &simple)?;
    let IntegralityVerdict { integral, witness } = is_integral_type(&square, &tau)?;
    let witness = witness.filter(|_| !integral).ok_or_else(|| {
        Error::CrossCheck("[(2,1)]_tau ⊗ [(2,1)]_tau should not be of integral type".into())
    })?;
    expect_eq("witness", &witness.partition, &nu)?;
    steps.push(ReportStep::new("integral_type_of_simple", true, "chi([(2,1)]_tau) in Z"));
    steps.push(ReportStep::new("integral_type_of_square", false, "chi([(3,2,1)]_tau) not in Z"));

    Ok(CounterexampleReport {
        steps,
        multiplicity,
        remainder: remainder.to_string(),
        remainder_unsimplified,
        witness: witness.partition,
        verdict: "counterexample confirmed".into(),
    })
}

/// A t at which [λ]_t is of integral type but [λ]_t ⊗ [λ]_t is not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub point: InterpolationPoint,
    pub witness: Partition,
    pub chi: AlgebraicNumber,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found(Counterexample),
    NoneFound,
    /// Some factor of Q_λ − target has degree ≥ 3 and no rational roots.
    Undecided { cofactor: RationalPolynomial },
}

/// Largest |λ| accepted by [`search_counterexample`].
pub const SEARCH_BOUND: usize = 4;

/// Solves Q_λ(t) = target over the rational roots and certified-irreducible
/// quadratic factors of Q_λ − target, and tests the tensor square of [λ]_t
/// for integrality at each non-natural solution.
pub fn search_counterexample(lambda: &Partition, target: i64) -> Result<SearchOutcome> {
    if lambda.size() > SEARCH_BOUND {
        return Err(Error::BoundExceeded { size: lambda.size(), bound: SEARCH_BOUND });
    }
    let p = &q_polynomial(lambda) - &RationalPolynomial::constant(int(target));
    if p.is_zero() {
        return Ok(SearchOutcome::NoneFound);
    }
    let f = factor_rational_roots(&p);
    let mut points: Vec<InterpolationPoint> = f
        .roots
        .iter()
        .map(|(r, _)| InterpolationPoint::rational(r.clone()))
        .filter(|t| !t.is_natural())
        .collect();
    match f.status {
        CofactorStatus::IrreducibleQuadratic => {
            points.push(InterpolationPoint::algebraic(f.cofactor.monic(), RationalPolynomial::t())?)
        }
        CofactorStatus::Undecided | CofactorStatus::Incomplete => {
            return Ok(SearchOutcome::Undecided { cofactor: f.cofactor })
        }
        CofactorStatus::Constant => {}
    }
    let simple = VirtualObject::simple(lambda.clone());
    let square = tensor_decompose(&simple, &simple)?;
    for t in points {
        let base = is_integral_type(&simple, &t)?;
        if !base.integral {
            return Err(Error::CrossCheck(format!("Q_{lambda}({t}) should equal {target}")));
        }
        let verdict = is_integral_type(&square, &t)?;
        if let Some(w) = verdict.witness {
            return Ok(SearchOutcome::Found(Counterexample { point: t, witness: w.partition, chi: w.chi }));
        }
    }
    Ok(SearchOutcome::NoneFound)
}

/// Length and endomorphism dimension of [1]^{⊗n} for generic t.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorPowerReport {
    pub n: usize,
    pub multiplicities: VirtualObject,
    /// Σ mult: number of simple summands.
    pub length: u64,
    /// Σ mult², equal to dim End([1]^{⊗n}).
    pub end_dimension: u128,
    pub bell: u128,
    /// length² ≥ n!
    pub length_at_least_sqrt_factorial: bool,
}

/// Largest n accepted by [`generator_power_report`].
pub const GENERATOR_POWER_BOUND: usize = 5;

pub fn generator_power_report(n: usize) -> Result<GeneratorPowerReport> {
    if n > GENERATOR_POWER_BOUND {
        return Err(Error::BoundExceeded { size: n, bound: GENERATOR_POWER_BOUND });
    }
    let mults: BTreeMap<Partition, u64> = generator_power_multiplicities(n)?;
    let length: u64 = mults.values().sum();
    let squares: u128 = mults.values().map(|&k| (k as u128) * (k as u128)).sum();
    let bell = bell(2 * n);
    let diagrams = end_dimension(n)?;
    if squares != bell || diagrams != bell {
        return Err(Error::CrossCheck(format!(
            "Σ mult² = {squares}, diagram count = {diagrams}, Bell(2n) = {bell}"
        )));
    }
    let len_sq = BigInt::from(length) * BigInt::from(length);
    let bound_holds = len_sq >= BigInt::from(factorial(n));
    if !bound_holds {
        return Err(Error::CrossCheck(format!("length {length} below sqrt({n}!)")));
    }
    Ok(GeneratorPowerReport {
        n,
        multiplicities: VirtualObject::new(mults),
        length,
        end_dimension: squares,
        bell,
        length_at_least_sqrt_factorial: bound_holds,
    })
}
