use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::rational_det;
use crate::error::{Error, Result};
use crate::exact_arith::{parse_rational, Rational};

/// A finite-dimensional unital supercommutative associative algebra over ℚ,
/// given by structure constants in a homogeneous basis.
///
/// Basis vectors `0..p` are even and `p..p+q` odd; `mult[i][j][k]` is the
/// coefficient of `e_k` in `e_i · e_j`. All axioms are checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebraPresentation {
    p: usize,
    q: usize,
    unit: Vec<Rational>,
    mult: Vec<Vec<Vec<Rational>>>,
}

impl SuperAlgebraPresentation {
    pub fn new(p: usize, q: usize, unit: Vec<Rational>, mult: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let a = SuperAlgebraPresentation { p, q, unit, mult };
        a.validate()?;
        Ok(a)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn mult(&self) -> &[Vec<Vec<Rational>>] {
        &self.mult
    }

    /// Euler characteristic p − q.
    pub fn euler(&self) -> i64 {
        self.p as i64 - self.q as i64
    }

    pub fn is_odd(&self, i: usize) -> bool {
        i >= self.p
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let ab = ai * bj;
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        (0..self.dim()).map(|k| if k == i { Rational::one() } else { Rational::zero() }).collect()
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        let bad = |msg: String| Err(Error::InvalidAlgebra(msg));
        if self.unit.len() != n || self.mult.len() != n {
            return bad(format!("expected {n} basis vectors"));
        }
        for (i, row) in self.mult.iter().enumerate() {
            if row.len() != n || row.iter().any(|v| v.len() != n) {
                return bad(format!("structure constants of row {i} have the wrong shape"));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let parity = self.is_odd(i) ^ self.is_odd(j);
                    if !self.mult[i][j][k].is_zero() && self.is_odd(k) != parity {
                        return bad(format!("e{i}·e{j} has a component of the wrong parity"));
                    }
                }
            }
        }
        if (self.p..n).any(|k| !self.unit[k].is_zero()) {
            return bad("the unit must be even".into());
        }
        for j in 0..n {
            let e = self.basis_vector(j);
            if self.multiply(&self.unit, &e) != e || self.multiply(&e, &self.unit) != e {
                return bad(format!("the unit does not act as identity on e{j}"));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let sign = if self.is_odd(i) && self.is_odd(j) { -Rational::one() } else { Rational::one() };
                let swapped: Vec<Rational> = self.mult[j][i].iter().map(|c| c * &sign).collect();
                if self.mult[i][j] != swapped {
                    return bad(format!("e{i}·e{j} violates supercommutativity"));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let ek = self.basis_vector(k);
                    let left = self.multiply(ij, &ek);
                    let right = self.multiply(&self.basis_vector(i), &self.mult[j][k]);
                    if left != right {
                        return bad(format!("(e{i}·e{j})·e{k} ≠ e{i}·(e{j}·e{k})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// ℚ itself, (1|0).
    pub fn ground_field() -> Self {
        Self::product_of_fields(1)
    }

    /// ℚ^n with componentwise product.
    pub fn product_of_fields(n: usize) -> Self {
        let mut mult = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (i, row) in mult.iter_mut().enumerate() {
            row[i][i] = Rational::one();
        }
        Self::new(n, 0, vec![Rational::one(); n], mult).expect("ℚ^n is a valid algebra")
    }

    /// ℚ[x]/(x²) with x even.
    pub fn dual_numbers() -> Self {
        Self::monomial_even(2)
    }

    /// ℚ[x]/(x^d) with x even.
    fn monomial_even(d: usize) -> Self {
        let mut mult = vec![vec![vec![Rational::zero(); d]; d]; d];
        for i in 0..d {
            for j in 0..d - i {
                mult[i][j][i + j] = Rational::one();
            }
        }
        let mut unit = vec![Rational::zero(); d];
        unit[0] = Rational::one();
        Self::new(d, 0, unit, mult).expect("truncated polynomial ring is valid")
    }

    /// The exterior algebra Λ(θ) on one odd generator, (1|1).
    pub fn exterior_one() -> Self {
        let z = Rational::zero;
        let o = Rational::one;
        let mult = vec![vec![vec![o(), z()], vec![z(), o()]], vec![vec![z(), o()], vec![z(), z()]]];
        Self::new(1, 1, vec![o(), z()], mult).expect("Λ(θ) is valid")
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    p: usize,
    q: usize,
    unit: Vec<String>,
    mult: Vec<Vec<Vec<String>>>,
}

impl Serialize for SuperAlgebraPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let str_vec = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        Wire {
            p: self.p,
            q: self.q,
            unit: str_vec(&self.unit),
            mult: self.mult.iter().map(|row| row.iter().map(|v| str_vec(v)).collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SuperAlgebraPresentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let parse = |v: &[String]| v.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>();
        let build = || -> Result<SuperAlgebraPresentation> {
            let unit = parse(&w.unit)?;
            let mult = w
                .mult
                .iter()
                .map(|row| row.iter().map(|v| parse(v)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            SuperAlgebraPresentation::new(w.p, w.q, unit, mult)
        };
        build().map_err(serde::de::Error::custom)
    }
}

/// Supertrace of left multiplication by each basis vector.
fn supertraces(a: &SuperAlgebraPresentation) -> Vec<Rational> {
    let n = a.dim();
    (0..n)
        .map(|k| {
            (0..n).fold(Rational::zero(), |acc, i| {
                let c = &a.mult[k][i][i];
                if a.is_odd(i) {
                    acc - c
                } else {
                    acc + c
                }
            })
        })
        .collect()
}

/// Gram matrix of B(x, y) = str(L_{xy}) in the homogeneous basis.
pub fn supertrace_form(a: &SuperAlgebraPresentation) -> Vec<Vec<Rational>> {
    let t = supertraces(a);
    let n = a.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| a.mult[i][j].iter().zip(&t).fold(Rational::zero(), |acc, (c, tk)| acc + c * tk))
                .collect()
        })
        .collect()
}

/// Nondegeneracy of the supertrace form.
pub fn is_etale(a: &SuperAlgebraPresentation) -> bool {
    !rational_det(&supertrace_form(a)).is_zero()
}

/// Structural facts forcing the supertrace form to be degenerate when q ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCertificate {
    /// θ·θ = 0 for every odd basis vector and every pairwise sum of them.
    pub odd_squares_vanish: bool,
    /// str(L_{θ²}) = 0 for the same elements.
    pub odd_squares_traceless: bool,
    /// B(even, odd) = 0.
    pub mixed_block_zero: bool,
    /// B(odd, odd) = 0.
    pub odd_block_zero: bool,
}

impl OddCertificate {
    pub fn holds(&self) -> bool {
        self.odd_squares_vanish && self.odd_squares_traceless && self.mixed_block_zero && self.odd_block_zero
    }
}

pub fn odd_certificate(a: &SuperAlgebraPresentation) -> OddCertificate {
    let n = a.dim();
    let t = supertraces(a);
    let trace = |v: &[Rational]| v.iter().zip(&t).fold(Rational::zero(), |acc, (c, tk)| acc + c * tk);
    let mut odd_elements: Vec<Vec<Rational>> = (a.p..n).map(|i| a.basis_vector(i)).collect();
    for i in a.p..n {
        for j in i + 1..n {
            let mut v = a.basis_vector(i);
            v[j] = Rational::one();
            odd_elements.push(v);
        }
    }
    let squares: Vec<Vec<Rational>> = odd_elements.iter().map(|v| a.multiply(v, v)).collect();
    let b = supertrace_form(a);
    OddCertificate {
        odd_squares_vanish: squares.iter().all(|s| s.iter().all(Zero::is_zero)),
        odd_squares_traceless: squares.iter().all(|s| trace(s).is_zero()),
        mixed_block_zero: (0..a.p).all(|i| (a.p..n).all(|j| b[i][j].is_zero() && b[j][i].is_zero())),
        odd_block_zero: (a.p..n).all(|i| (a.p..n).all(|j| b[i][j].is_zero())),
    }
}

/// True iff every étale algebra in the sample is purely even (and hence has
/// positive Euler characteristic).
pub fn etale_implies_even_check(sample: &[SuperAlgebraPresentation]) -> bool {
    sample.iter().filter(|a| is_etale(a)).all(|a| a.q == 0 && a.euler() > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn canonical_forms() {
        let split = SuperAlgebraPresentation::product_of_fields(2);
        assert_eq!(supertrace_form(&split), ints(&[&[1, 0], &[0, 1]]));
        assert!(is_etale(&split));
        let dual = SuperAlgebraPresentation::dual_numbers();
        assert_eq!(supertrace_form(&dual), ints(&[&[2, 0], &[0, 0]]));
        assert!(!is_etale(&dual));
        let ext = SuperAlgebraPresentation::exterior_one();
        // the even unit has supertrace 1 − 1 = 0
        assert_eq!(supertrace_form(&ext), ints(&[&[0, 0], &[0, 0]]));
        assert!(!is_etale(&ext));
        assert!(odd_certificate(&ext).holds());
    }

    #[test]
    fn etale_check_on_samples() {
        let sample = vec![
            SuperAlgebraPresentation::product_of_fields(2),
            SuperAlgebraPresentation::dual_numbers(),
            SuperAlgebraPresentation::exterior_one(),
        ];
        assert!(etale_implies_even_check(&sample));
        let field = SuperAlgebraPresentation::ground_field();
        assert!(is_etale(&field) && field.euler() == 1);
        assert!(etale_implies_even_check(&[field]));
    }

    #[test]
    fn invalid_presentations_are_rejected() {
        let z = Rational::zero;
        let o = Rational::one;
        // θ·θ = 1 is not supercommutative (and has wrong parity)
        let bad = vec![vec![vec![o(), z()], vec![z(), o()]], vec![vec![z(), o()], vec![o(), z()]]];
        assert!(SuperAlgebraPresentation::new(1, 1, vec![o(), z()], bad).is_err());
        // wrong unit
        let m = SuperAlgebraPresentation::product_of_fields(2).mult().to_vec();
        assert!(SuperAlgebraPresentation::new(2, 0, vec![o(), z()], m).is_err());
        // ℚ[x]/(x² − x − 1)
        let golden = vec![
            vec![vec![o(), z()], vec![z(), o()]],
            vec![vec![z(), o()], vec![o(), o()]],
        ];
        assert!(SuperAlgebraPresentation::new(2, 0, vec![o(), z()], golden).is_ok());
        // (e1·e1)·e2 = e0 but e1·(e1·e2) = 0
        let broken = vec![
            vec![vec![o(), z(), z()], vec![z(), o(), z()], vec![z(), z(), o()]],
            vec![vec![z(), o(), z()], vec![z(), z(), o()], vec![z(), z(), z()]],
            vec![vec![z(), z(), o()], vec![z(), z(), z()], vec![o(), z(), z()]],
        ];
        assert!(SuperAlgebraPresentation::new(3, 0, vec![o(), z(), z()], broken).is_err());
        assert!(SuperAlgebraPresentation::new(1, 0, vec![], vec![]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let ext = SuperAlgebraPresentation::exterior_one();
        let json = serde_json::to_string(&ext).unwrap();
        assert_eq!(json, r#"{"p":1,"q":1,"unit":["1","0"],"mult":[[["1","0"],["0","1"]],[["0","1"],["0","0"]]]}"#);
        assert_eq!(serde_json::from_str::<SuperAlgebraPresentation>(&json).unwrap(), ext);
        let bad = r#"{"p":1,"q":1,"unit":["1","0"],"mult":[[["1","0"],["0","1"]],[["0","1"],["1","0"]]]}"#;
        assert!(serde_json::from_str::<SuperAlgebraPresentation>(bad).is_err());
    }
}
