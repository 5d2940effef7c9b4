use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::PartitionDiagram;
use crate::combinatorics::moebius_partition_lattice;
use crate::error::{Error, Result};
use crate::exact_arith::{Rational, RationalPolynomial};

/// Which basis the coefficients of a [`DiagramMorphism`] refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Partition diagrams `d_π`.
    Diagram,
    /// The Möbius-dual basis `x_π = Σ_{ρ ≥ π} μ(π, ρ) d_ρ`.
    Orbit,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::Diagram => "diagram",
            Basis::Orbit => "orbit",
        }
    }
}

/// A ℚ[T]-linear combination of partition diagrams with fixed top and bottom.
#[derive(Clone, PartialEq, Eq)]
pub struct DiagramMorphism {
    top: usize,
    bottom: usize,
    basis: Basis,
    terms: BTreeMap<PartitionDiagram, RationalPolynomial>,
}

impl DiagramMorphism {
    pub fn zero(top: usize, bottom: usize, basis: Basis) -> Self {
        DiagramMorphism { top, bottom, basis, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: PartitionDiagram, basis: Basis) -> Self {
        let mut m = Self::zero(d.top(), d.bottom(), basis);
        m.terms.insert(d, RationalPolynomial::one());
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(PartitionDiagram::identity(n), Basis::Diagram)
    }

    /// Builds a morphism from explicit terms; all diagrams must share the
    /// given shape. Repeated diagrams are summed.
    pub fn from_terms(
        top: usize,
        bottom: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (PartitionDiagram, RationalPolynomial)>,
    ) -> Result<Self> {
        let mut m = Self::zero(top, bottom, basis);
        for (d, c) in terms {
            if d.top() != top || d.bottom() != bottom {
                return Err(Error::SizeMismatch(format!(
                    "diagram {}→{} in a morphism {top}→{bottom}",
                    d.top(),
                    d.bottom()
                )));
            }
            m.add_term(d, c);
        }
        Ok(m)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<PartitionDiagram, RationalPolynomial> {
        &self.terms
    }

    pub fn coefficient(&self, d: &PartitionDiagram) -> RationalPolynomial {
        self.terms.get(d).cloned().unwrap_or_else(RationalPolynomial::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: PartitionDiagram, c: RationalPolynomial) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { expected: self.basis.name(), found: other.basis.name() });
        }
        if (self.top, self.bottom) != (other.top, other.bottom) {
            return Err(Error::SizeMismatch(format!(
                "{}→{} vs {}→{}",
                self.top, self.bottom, other.top, other.bottom
            )));
        }
        Ok(())
    }

    fn require(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch { expected: basis.name(), found: self.basis.name() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&RationalPolynomial::constant(Rational::from_integer(BigInt::from(-1)))))
    }

    pub fn scale(&self, c: &RationalPolynomial) -> Self {
        let mut out = Self::zero(self.top, self.bottom, self.basis);
        for (d, a) in &self.terms {
            out.add_term(d.clone(), a * c);
        }
        out
    }

    /// Specializes `T ↦ t` in every coefficient.
    pub fn specialize(&self, t: &Rational) -> BTreeMap<PartitionDiagram, Rational> {
        self.terms
            .iter()
            .map(|(d, c)| (d.clone(), c.eval(t)))
            .filter(|(_, v)| !num_traits::Zero::is_zero(v))
            .collect()
    }

    /// The composite `self ∘ f` in the diagram basis.
    pub fn compose(&self, f: &DiagramMorphism) -> Result<DiagramMorphism> {
        self.require(Basis::Diagram)?;
        f.require(Basis::Diagram)?;
        if f.bottom != self.top {
            return Err(Error::SizeMismatch(format!(
                "cannot compose: f has {} bottom strands, g has {} top strands",
                f.bottom, self.top
            )));
        }
        let mut out = Self::zero(f.top, self.bottom, Basis::Diagram);
        for (dg, cg) in &self.terms {
            for (df, cf) in &f.terms {
                let (d, loops) = dg.compose_after(df)?;
                let c = &(cg * cf) * &RationalPolynomial::monomial(loops);
                out.add_term(d, c);
            }
        }
        Ok(out)
    }

    /// The composite `self ∘ f` of two orbit-basis morphisms, in the orbit basis.
    pub fn compose_orbit(&self, f: &DiagramMorphism) -> Result<DiagramMorphism> {
        self.require(Basis::Orbit)?;
        f.require(Basis::Orbit)?;
        self.from_orbit_basis()?.compose(&f.from_orbit_basis()?)?.to_orbit_basis()
    }

    /// Horizontal juxtaposition, computed in the diagram basis and returned
    /// in the common basis of the inputs.
    pub fn tensor(&self, other: &DiagramMorphism) -> Result<DiagramMorphism> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { expected: self.basis.name(), found: other.basis.name() });
        }
        let (a, b) = (self.in_diagram_basis(), other.in_diagram_basis());
        let mut out = Self::zero(self.top + other.top, self.bottom + other.bottom, Basis::Diagram);
        for (d1, c1) in &a.terms {
            for (d2, c2) in &b.terms {
                out.add_term(d1.tensor(d2), c1 * c2);
            }
        }
        match self.basis {
            Basis::Diagram => Ok(out),
            Basis::Orbit => out.to_orbit_basis(),
        }
    }

    /// Categorical trace: each diagram contributes `T^c`, where `c` counts the
    /// components after closing every `t_i` to `b_i`.
    pub fn trace(&self) -> Result<RationalPolynomial> {
        if self.top != self.bottom {
            return Err(Error::NotEndomorphism { top: self.top, bottom: self.bottom });
        }
        let mut acc = RationalPolynomial::zero();
        for (d, c) in &self.in_diagram_basis().terms {
            acc = &acc + &(c * &RationalPolynomial::monomial(d.closure_components()?));
        }
        Ok(acc)
    }

    fn in_diagram_basis(&self) -> DiagramMorphism {
        match self.basis {
            Basis::Diagram => self.clone(),
            Basis::Orbit => self.from_orbit_basis().expect("tag checked"),
        }
    }

    /// Rewrites a diagram-basis morphism in the orbit basis using
    /// `d_π = Σ_{ρ ≥ π} x_ρ`.
    pub fn to_orbit_basis(&self) -> Result<DiagramMorphism> {
        self.require(Basis::Diagram)?;
        let mut out = Self::zero(self.top, self.bottom, Basis::Orbit);
        for (d, c) in &self.terms {
            for rho in d.blocks().coarsenings() {
                out.add_term(PartitionDiagram::new(self.top, self.bottom, rho)?, c.clone());
            }
        }
        Ok(out)
    }

    /// Rewrites an orbit-basis morphism in the diagram basis using
    /// `x_π = Σ_{ρ ≥ π} μ(π, ρ) d_ρ`.
    pub fn from_orbit_basis(&self) -> Result<DiagramMorphism> {
        self.require(Basis::Orbit)?;
        let mut out = Self::zero(self.top, self.bottom, Basis::Diagram);
        for (d, c) in &self.terms {
            for rho in d.blocks().coarsenings() {
                let mu = moebius_partition_lattice(d.blocks(), &rho)?;
                let coeff = c.scale(&Rational::from_integer(BigInt::from(mu)));
                out.add_term(PartitionDiagram::new(self.top, self.bottom, rho)?, coeff);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for DiagramMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let prefix = match self.basis {
            Basis::Diagram => "d",
            Basis::Orbit => "x",
        };
        let parts: Vec<String> =
            self.terms.iter().map(|(d, c)| format!("({c})·{prefix}{d:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    diagram: PartitionDiagram,
    coeff: RationalPolynomial,
}

#[derive(Serialize, Deserialize)]
struct MorphismWire {
    top: usize,
    bottom: usize,
    basis: Basis,
    terms: Vec<TermWire>,
}

impl Serialize for DiagramMorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MorphismWire {
            top: self.top,
            bottom: self.bottom,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| TermWire { diagram: d.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiagramMorphism {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = MorphismWire::deserialize(d)?;
        DiagramMorphism::from_terms(w.top, w.bottom, w.basis, w.terms.into_iter().map(|t| (t.diagram, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}
