//! The partition category: partition diagrams, their composition, tensor
//! product and trace, the orbit basis, and Gram determinants.

mod diagram;
mod gram;
mod modular;
mod morphism;

pub use diagram::PartitionDiagram;
pub use gram::{
    bareiss_det, end_dimension, endomorphism_basis, gram_det, gram_det_with_budget, gram_exponents,
    gram_matrix, gram_rank_at, hadamard_bound, integer_rank, interpolated_det, GramBudget,
    InterpolatedDet,
};
pub use morphism::{Basis, DiagramMorphism};

use crate::error::Result;

/// Diagram of a permutation given by its 0-based images.
pub fn permutation_diagram(sigma: &[usize]) -> Result<PartitionDiagram> {
    PartitionDiagram::permutation(sigma)
}

pub fn compose(g: &DiagramMorphism, f: &DiagramMorphism) -> Result<DiagramMorphism> {
    g.compose(f)
}

pub fn compose_orbit(g: &DiagramMorphism, f: &DiagramMorphism) -> Result<DiagramMorphism> {
    g.compose_orbit(f)
}

pub fn tensor(a: &DiagramMorphism, b: &DiagramMorphism) -> Result<DiagramMorphism> {
    a.tensor(b)
}

pub fn trace(f: &DiagramMorphism) -> Result<crate::exact_arith::RationalPolynomial> {
    f.trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{cycle_type, permutations, SetPartition};
    use crate::error::Error;
    use crate::exact_arith::{factor_rational_roots, int, rat, CofactorStatus, RationalPolynomial};
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn poly(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_i64(c)
    }

    fn d(m: PartitionDiagram) -> DiagramMorphism {
        DiagramMorphism::from_diagram(m, Basis::Diagram)
    }

    fn x(m: PartitionDiagram) -> DiagramMorphism {
        DiagramMorphism::from_diagram(m, Basis::Orbit)
    }

    fn random_diagram(rng: &mut ChaCha8Rng, top: usize, bottom: usize) -> PartitionDiagram {
        let k = rng.gen_range(1..=(top + bottom).max(1));
        let labels: Vec<usize> = (0..top + bottom).map(|_| rng.gen_range(0..k)).collect();
        PartitionDiagram::new(top, bottom, SetPartition::from_labels(&labels)).unwrap()
    }

    fn random_morphism(rng: &mut ChaCha8Rng, top: usize, bottom: usize) -> DiagramMorphism {
        let terms = (0..rng.gen_range(1..4)).map(|_| {
            let c: Vec<i64> = (0..rng.gen_range(1..3)).map(|_| rng.gen_range(-3..4)).collect();
            (random_diagram(rng, top, bottom), poly(&c))
        });
        DiagramMorphism::from_terms(top, bottom, Basis::Diagram, terms.collect::<Vec<_>>()).unwrap()
    }

    fn random_any(rng: &mut ChaCha8Rng, bound: usize) -> DiagramMorphism {
        let (top, bottom) = (rng.gen_range(0..bound), rng.gen_range(0..bound));
        random_morphism(rng, top, bottom)
    }

    #[test]
    fn composition_examples() {
        let disc = PartitionDiagram::discrete(1, 1);
        let join = PartitionDiagram::identity(1);
        assert_eq!(compose(&d(disc.clone()), &d(disc.clone())).unwrap(), d(disc.clone()).scale(&poly(&[0, 1])));
        assert_eq!(compose(&d(join), &d(disc.clone())).unwrap(), d(disc.clone()));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.gen_range(0..4);
            let f = random_morphism(&mut rng, n, n);
            assert_eq!(compose(&DiagramMorphism::identity(n), &f).unwrap(), f);
            assert_eq!(compose(&f, &DiagramMorphism::identity(n)).unwrap(), f);
        }
        let wide = d(PartitionDiagram::discrete(2, 2));
        assert!(matches!(compose(&wide, &d(disc.clone())), Err(Error::SizeMismatch(_))));
        assert!(matches!(compose(&x(disc.clone()), &d(disc)), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn composition_is_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..60 {
            let sizes: Vec<usize> = (0..4).map(|_| rng.gen_range(0..4)).collect();
            let f = random_morphism(&mut rng, sizes[0], sizes[1]);
            let g = random_morphism(&mut rng, sizes[1], sizes[2]);
            let h = random_morphism(&mut rng, sizes[2], sizes[3]);
            let left = compose(&compose(&h, &g).unwrap(), &f).unwrap();
            let right = compose(&h, &compose(&g, &f).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn tensor_examples() {
        let id1 = DiagramMorphism::identity(1);
        assert_eq!(tensor(&id1, &id1).unwrap(), DiagramMorphism::identity(2));
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..40 {
            let a = random_any(&mut rng, 3);
            let b = random_any(&mut rng, 3);
            let c = random_any(&mut rng, 3);
            let left = tensor(&tensor(&a, &b).unwrap(), &c).unwrap();
            let right = tensor(&a, &tensor(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
        assert!(tensor(&id1, &x(PartitionDiagram::identity(1))).is_err());
    }

    #[test]
    fn tensor_of_orbit_elements_stays_in_orbit_basis() {
        let disc = x(PartitionDiagram::discrete(1, 1));
        let t = tensor(&disc, &disc).unwrap();
        assert_eq!(t.basis(), Basis::Orbit);
        let direct = tensor(&disc.from_orbit_basis().unwrap(), &disc.from_orbit_basis().unwrap()).unwrap();
        assert_eq!(t.from_orbit_basis().unwrap(), direct);
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace(&DiagramMorphism::identity(2)).unwrap(), poly(&[0, 0, 1]));
        let swap = d(permutation_diagram(&[1, 0]).unwrap());
        assert_eq!(trace(&swap).unwrap(), poly(&[0, 1]));
        assert_eq!(trace(&d(PartitionDiagram::discrete(1, 1))).unwrap(), poly(&[0, 1]));
        assert_eq!(trace(&DiagramMorphism::identity(0)).unwrap(), poly(&[1]));
        assert!(matches!(
            trace(&d(PartitionDiagram::discrete(1, 2))),
            Err(Error::NotEndomorphism { top: 1, bottom: 2 })
        ));
    }

    #[test]
    fn permutation_traces_count_cycles() {
        for n in 0..=5 {
            for sigma in permutations(n) {
                let tr = trace(&d(permutation_diagram(&sigma).unwrap())).unwrap();
                assert_eq!(tr, RationalPolynomial::monomial(cycle_type(&sigma).len()));
            }
        }
    }

    #[test]
    fn permutation_diagrams_compose_like_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for n in 1..=5 {
            let perms = permutations(n);
            for _ in 0..10 {
                let s = &perms[rng.gen_range(0..perms.len())];
                let t = &perms[rng.gen_range(0..perms.len())];
                let st: Vec<usize> = (0..n).map(|i| s[t[i]]).collect();
                let lhs = d(permutation_diagram(&st).unwrap());
                let rhs = compose(&d(permutation_diagram(s).unwrap()), &d(permutation_diagram(t).unwrap()));
                assert_eq!(lhs, rhs.unwrap());
            }
        }
    }

    #[test]
    fn trace_is_cyclic_and_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..60 {
            let (m, n) = (rng.gen_range(0..4), rng.gen_range(0..4));
            let f = random_morphism(&mut rng, m, n);
            let g = random_morphism(&mut rng, n, m);
            assert_eq!(trace(&g.compose(&f).unwrap()).unwrap(), trace(&f.compose(&g).unwrap()).unwrap());
            let a = random_morphism(&mut rng, m, m);
            let b = random_morphism(&mut rng, n, n);
            let lhs = trace(&tensor(&a, &b).unwrap()).unwrap();
            assert_eq!(lhs, &trace(&a).unwrap() * &trace(&b).unwrap());
        }
    }

    #[test]
    fn orbit_basis_in_one_strand() {
        let disc = PartitionDiagram::discrete(1, 1);
        let join = PartitionDiagram::identity(1);
        let expected = x(disc.clone()).add(&x(join.clone())).unwrap();
        assert_eq!(d(disc.clone()).to_orbit_basis().unwrap(), expected);
        assert_eq!(d(join.clone()).to_orbit_basis().unwrap(), x(join.clone()));

        let xd = x(disc.clone());
        let xj = x(join.clone());
        // (T−2)·x_disc + (T−1)·x_join
        let square = compose_orbit(&xd, &xd).unwrap();
        let expected = xd.scale(&poly(&[-2, 1])).add(&xj.scale(&poly(&[-1, 1]))).unwrap();
        assert_eq!(square, expected);
        assert_eq!(compose_orbit(&xj, &xj).unwrap(), xj);
        assert!(compose_orbit(&d(join), &xj).is_err());
    }

    #[test]
    fn orbit_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..40 {
            let f = random_any(&mut rng, 4);
            let back = f.to_orbit_basis().unwrap().from_orbit_basis().unwrap();
            assert_eq!(back, f);
            let as_orbit = DiagramMorphism::from_terms(
                f.top(),
                f.bottom(),
                Basis::Orbit,
                f.terms().iter().map(|(k, v)| (k.clone(), v.clone())).collect::<Vec<_>>(),
            )
            .unwrap();
            assert_eq!(as_orbit.from_orbit_basis().unwrap().to_orbit_basis().unwrap(), as_orbit);
        }
    }

    fn factors_over_naturals(c: &RationalPolynomial) -> bool {
        let f = factor_rational_roots(c);
        f.status == CofactorStatus::Constant
            && f.roots.iter().all(|(r, _)| r.is_integer() && *r >= int(0))
    }

    #[test]
    fn orbit_structure_constants_factor_over_naturals() {
        for n in 0..=2 {
            let basis = endomorphism_basis(n);
            for a in &basis {
                for b in &basis {
                    let prod = compose_orbit(&x(a.clone()), &x(b.clone())).unwrap();
                    for c in prod.terms().values() {
                        assert!(factors_over_naturals(c), "{a:?}·{b:?} has coefficient {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn end_dimensions() {
        let dims: Vec<u128> = (0..=3).map(|n| end_dimension(n).unwrap()).collect();
        assert_eq!(dims, vec![1, 2, 15, 203]);
    }

    #[test]
    fn small_gram_determinants() {
        assert_eq!(gram_det(0).unwrap(), poly(&[1]));
        let g1 = gram_matrix(1);
        // basis order: join {t1,b1}, then discrete
        assert_eq!(g1, vec![vec![poly(&[0, 1]), poly(&[0, 1])], vec![poly(&[0, 1]), poly(&[0, 0, 1])]]);
        assert_eq!(gram_det(1).unwrap(), poly(&[0, 0, -1, 1]));
    }

    #[test]
    fn gram_two_roots_are_natural() {
        let det = gram_det(2).unwrap();
        assert!(!det.is_zero());
        let f = factor_rational_roots(&det);
        assert!(f.roots.iter().all(|(r, _)| r.is_integer() && *r >= int(0)));
        assert_eq!(f.status, CofactorStatus::Constant, "{f}");
        // exact and modular determinants agree
        assert_eq!(interpolated_det(&gram_exponents(2)).polynomial, det);
    }

    #[test]
    fn gram_rank_matches_determinant_roots() {
        let budget = GramBudget::default();
        for n in 0..=2 {
            let det = gram_det(n).unwrap();
            let size = end_dimension(n).unwrap() as usize;
            for t in [int(-1), int(-2), rat(1, 2), int(0), int(1), int(2), int(3)] {
                let rank = gram_rank_at(n, &t, &budget).unwrap();
                assert_eq!(rank == size, !det.eval(&t).is_zero(), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let tight = GramBudget { max_basis_size: 15, max_exact_basis_size: 15 };
        assert!(matches!(gram_det_with_budget(3, &tight), Err(Error::BoundExceeded { size: 203, bound: 15 })));
        assert!(gram_det_with_budget(4, &GramBudget::default()).is_err());
    }

    #[test]
    fn morphism_json() {
        let f = d(PartitionDiagram::discrete(1, 1)).scale(&poly(&[-1, 1]));
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"top":1,"bottom":1,"basis":"diagram","terms":[{"diagram":{"top":1,"bottom":1,"blocks":[["t1"],["b1"]]},"coeff":{"coeffs":["-1","1"]}}]}"#
        );
        let back: DiagramMorphism = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
}
