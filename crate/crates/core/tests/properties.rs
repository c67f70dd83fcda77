use proptest::prelude::*;

use pauli_isa::finite::{
    dist_bounded, symplectic_complement, FiniteLattice, FpSubspace, PhasedAutomorphism, PhasedPauli,
};
use pauli_isa::laurent::{ideal_contains, ideal_is_unit, nonzero_minors, LaurentMatrix, LaurentPoly};
use pauli_isa::pauli::zoo::example_z3;
use pauli_isa::pauli::{
    build_projector, check_invertible, commutant_generators, commutation_matrix, decompose_local, from_antihermitian,
    pairing, same_span, SubalgebraSpec,
};
use rand::SeedableRng;

const D: usize = 2;

fn poly(p: u32, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, D), 0..p as i64), 0..=max_terms)
        .prop_map(move |terms| LaurentPoly::from_terms(p, D, terms))
}

fn monomial(p: u32) -> impl Strategy<Value = LaurentPoly> {
    (prop::collection::vec(-2i32..=2, D), 1..p as i64).prop_map(move |(e, c)| LaurentPoly::monomial(p, e, c))
}

fn matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = LaurentMatrix> {
    prop::collection::vec(prop::collection::vec(poly(p, 2), cols), rows)
        .prop_map(move |r| LaurentMatrix::from_rows(p, D, r).unwrap())
}

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5])
}

fn odd_prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![3u32, 5])
}

fn symbol(p: u32) -> impl Strategy<Value = Vec<LaurentPoly>> {
    prop::collection::vec(poly(p, 3), 4)
}

fn elementary(p: u32, n: usize) -> impl Strategy<Value = LaurentMatrix> {
    (0..n, 0..n, poly(p, 2), monomial(p)).prop_map(move |(i, j, f, u)| {
        let mut e = LaurentMatrix::identity(p, D, n);
        if i == j {
            e[(i, i)] = u;
        } else {
            e[(i, j)] = f;
        }
        e
    })
}

fn subspace(p: u32, n: usize) -> impl Strategy<Value = FpSubspace> {
    prop::collection::vec(prop::collection::vec(0..p, n), 0..=n).prop_map(move |vs| FpSubspace::span(p, n, vs))
}

fn phased(p: u32, n: usize) -> impl Strategy<Value = PhasedPauli> {
    let m = if p == 2 { 4 } else { p };
    (0..m, prop::collection::vec(0..p, 2 * n)).prop_map(move |(c, v)| PhasedPauli::from_vector(p, c, &v))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms((f, g, h) in prime().prop_flat_map(|p| (poly(p, 4), poly(p, 4), poly(p, 4)))) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &LaurentPoly::one(f.prime(), D), f.clone());
    }

    #[test]
    fn bar_is_an_involutive_ring_map((f, g) in prime().prop_flat_map(|p| (poly(p, 4), poly(p, 4)))) {
        prop_assert_eq!(f.bar().bar(), f.clone());
        prop_assert_eq!((&f * &g).bar(), &f.bar() * &g.bar());
        prop_assert_eq!((&f + &g).bar(), &f.bar() + &g.bar());
    }

    #[test]
    fn parse_display_round_trip(f in prime().prop_flat_map(|p| poly(p, 5))) {
        let again = LaurentPoly::parse(&f.to_string(), f.prime(), D).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn determinantal_ideals_are_nested(m in prime().prop_flat_map(|p| matrix(p, 3, 2))) {
        let i1 = nonzero_minors(&m, 1).unwrap();
        for g in nonzero_minors(&m, 2).unwrap() {
            prop_assert!(ideal_contains(&i1, &g).unwrap(), "{} not in I_1", g);
        }
    }

    #[test]
    fn unit_test_ignores_units_and_redundant_generators(
        (gens, u, f) in prime().prop_flat_map(|p| (prop::collection::vec(poly(p, 3), 1..3), monomial(p), poly(p, 2)))
    ) {
        let base = ideal_is_unit(&gens).unwrap();
        let scaled: Vec<_> = gens.iter().map(|g| g * &u).collect();
        prop_assert_eq!(ideal_is_unit(&scaled).unwrap(), base);
        let mut extended = gens.clone();
        extended.push(&gens[0] * &f);
        prop_assert_eq!(ideal_is_unit(&extended).unwrap(), base);
    }

    #[test]
    fn unimodular_inverse(es in prime().prop_flat_map(|p| prop::collection::vec(elementary(p, 3), 1..4))) {
        let p = es[0].prime();
        let m = es.iter().fold(LaurentMatrix::identity(p, D, 3), |acc, e| &acc * e);
        let inv = m.inverse().unwrap();
        prop_assert_eq!(&m * &inv, LaurentMatrix::identity(p, D, 3));
        prop_assert_eq!(&inv * &m, LaurentMatrix::identity(p, D, 3));
    }

    #[test]
    fn commutation_matrix_is_antihermitian(v in prime().prop_flat_map(|p| matrix(p, 4, 3))) {
        let s = SubalgebraSpec::new(2, v).unwrap();
        prop_assert!(commutation_matrix(&s).is_antihermitian());
    }

    #[test]
    fn pairing_is_skew((u, v) in prime().prop_flat_map(|p| (symbol(p), symbol(p)))) {
        prop_assert_eq!(pairing(2, &u, &v), -&pairing(2, &v, &u).bar());
    }

    #[test]
    fn decompose_is_linear((w1, w2, m) in (symbol(3), symbol(3), monomial(3))) {
        let pi = build_projector(&example_z3()).unwrap();
        let combo: Vec<_> = w1.iter().zip(&w2).map(|(a, b)| a + &(b * &m)).collect();
        let (a, b) = decompose_local(&pi, &combo).unwrap();
        let (a1, b1) = decompose_local(&pi, &w1).unwrap();
        let (a2, b2) = decompose_local(&pi, &w2).unwrap();
        let lin = |x: &[LaurentPoly], y: &[LaurentPoly]| -> Vec<LaurentPoly> {
            x.iter().zip(y).map(|(s, t)| s + &(t * &m)).collect()
        };
        prop_assert_eq!(a, lin(&a1, &a2));
        prop_assert_eq!(b, lin(&b1, &b2));
    }

    #[test]
    fn symbolic_double_commutant(a in odd_prime().prop_flat_map(|p| matrix(p, 2, 2))) {
        let xi = &a - &a.dagger();
        let s = from_antihermitian(&xi, None).unwrap();
        prop_assert_eq!(commutation_matrix(&s), xi);
        let bb = commutant_generators(&commutant_generators(&s).unwrap()).unwrap();
        prop_assert!(same_span(&bb, &s).unwrap());
        prop_assert!(same_span(&s, &bb).unwrap());
    }

    #[test]
    fn finite_double_commutant(
        (l, s) in (prime(), 1usize..3, 2usize..5).prop_flat_map(|(p, q, n)| {
            let l = FiniteLattice::torus(p, q, vec![n]).unwrap();
            let dim = l.vector_len();
            (Just(l), subspace(p, dim))
        })
    ) {
        prop_assert_eq!(symplectic_complement(&symplectic_complement(&s, &l), &l), s);
    }

    #[test]
    fn criterion_invariant_under_column_ops(es in elementary(3, 2)) {
        let s = example_z3();
        let v = s.generators() * &es;
        let t = SubalgebraSpec::new(2, v).unwrap();
        prop_assert!(check_invertible(&t).unwrap().invertible);
    }

    #[test]
    fn phased_product_is_associative((a, b, c) in prime().prop_flat_map(|p| (phased(p, 3), phased(p, 3), phased(p, 3)))) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert!(a.mul(&a.dagger()).unwrap().is_scalar());
        prop_assert_eq!(a.mul(&a.dagger()).unwrap(), PhasedPauli::identity(a.p, 3));
    }

    #[test]
    fn commutation_matches_symplectic_pairing((a, b) in prime().prop_flat_map(|p| (phased(p, 3), phased(p, 3)))) {
        // UV = w^e VU with e = -(u_x . v_z - u_z . v_x)
        let p = a.p;
        let omega: u32 = (0..3).map(|i| (a.a[i] * b.b[i] + p * p - a.b[i] * b.a[i]) % p).sum::<u32>() % p;
        let e = a.commutation_exponent(&b).unwrap();
        prop_assert_eq!(e % a.modulus() / (a.modulus() / p), (p - omega) % p);
        prop_assert_eq!(a.commutes_with(&b).unwrap(), omega == 0);
    }

    #[test]
    fn x_then_z_picks_up_inverse_root(p in prime()) {
        let (x, z) = (PhasedPauli::x(p, 1, 0), PhasedPauli::z(p, 1, 0));
        let k = x.modulus() / p;
        prop_assert_eq!(x.commutation_exponent(&z).unwrap(), x.modulus() - k);
    }

    #[test]
    fn dist_axioms(seed in any::<u64>(), p in prime()) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let g: Vec<_> = (0..3).map(|_| PhasedAutomorphism::random(p, 3, 5, &mut rng)).collect();
        let d = |i: usize, j: usize| dist_bounded(&g[i], &g[j], 1, 2).unwrap().value;
        prop_assert_eq!(d(0, 0), 0.0);
        prop_assert!((d(0, 1) - d(1, 0)).abs() < 1e-12);
        prop_assert!(d(0, 2) <= d(0, 1) + d(1, 2) + 1e-12);
        prop_assert!(d(0, 1) <= 2.0 + 1e-12);
    }
}
