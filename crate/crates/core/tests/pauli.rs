use pauli_isa::laurent::{LaurentMatrix, LaurentPoly};
use pauli_isa::pauli::zoo::{example_xi, example_z3, example_z3_model, nonexample_1dxz, toric_code_z3_model};
use pauli_isa::pauli::*;
use pauli_isa::Error;

fn lp(s: &str, p: u32, n: usize) -> LaurentPoly {
    LaurentPoly::parse(s, p, n).unwrap()
}

#[test]
fn one_dimensional_xz_commutation_matrix() {
    let xi = commutation_matrix(&nonexample_1dxz());
    assert_eq!(xi, LaurentMatrix::parse_rows(2, 1, &[&["x - x^-1"]]).unwrap());
    assert!(xi.is_antihermitian());
}

#[test]
fn single_x_generator_commutes_with_translates() {
    let s = SubalgebraSpec::new(1, LaurentMatrix::parse_rows(3, 1, &[&["1"], &["0"]]).unwrap()).unwrap();
    assert!(commutation_matrix(&s).is_zero());
}

#[test]
fn example_commutation_matrix_round_trips() {
    let s = example_z3();
    assert_eq!(commutation_matrix(&s), example_xi());
    assert_eq!(s.q(), 2);
    assert_eq!(s.num_generators(), 2);
    assert_eq!(s.spread(), 1);
}

#[test]
fn example_determinant_is_four() {
    // 4 = 1 in F_3
    assert!(example_xi().determinant().unwrap().is_one());
    let cert = check_invertible(&example_z3()).unwrap();
    assert!(cert.invertible);
    assert_eq!(cert.rank, 2);
    assert_eq!(cert.determinant.as_deref(), Some("1"));
}

#[test]
fn nonexample_is_not_invertible() {
    let cert = check_invertible(&nonexample_1dxz()).unwrap();
    assert!(!cert.invertible);
    assert_eq!(cert.rank, 1);
    assert_eq!(cert.ideal.generators, vec!["x + x^-1".to_string()]);
    assert_eq!(build_projector(&nonexample_1dxz()), Err(Error::NotInvertibleSubalgebra));
}

#[test]
fn full_and_empty() {
    let full = SubalgebraSpec::full(3, 2, 2).unwrap();
    assert!(check_invertible(&full).unwrap().invertible);
    assert_eq!(commutation_matrix(&full), symplectic_form(3, 2, 2));
    assert_eq!(build_projector(&full).unwrap().matrix, LaurentMatrix::identity(3, 2, 4));
    assert_eq!(commutant_generators(&full).unwrap().num_generators(), 0);

    let empty = SubalgebraSpec::empty(3, 2, 2).unwrap();
    assert!(build_projector(&empty).unwrap().matrix.is_zero());
    assert!(same_span(&commutant_generators(&empty).unwrap(), &full).unwrap());
}

#[test]
fn from_antihermitian_cases() {
    let zero = LaurentMatrix::zeros(5, 1, 1, 1);
    let s = from_antihermitian(&zero, None).unwrap();
    assert_eq!(s.generators(), &LaurentMatrix::parse_rows(5, 1, &[&["1"], &["0"]]).unwrap());

    let xi = LaurentMatrix::parse_rows(2, 1, &[&["x - x^-1"]]).unwrap();
    assert!(matches!(from_antihermitian(&xi, None), Err(Error::Construction(_))));
    let m = LaurentMatrix::parse_rows(2, 1, &[&["x"]]).unwrap();
    assert_eq!(from_antihermitian(&xi, Some(&m)).unwrap(), nonexample_1dxz());
    let bad = LaurentMatrix::parse_rows(2, 1, &[&["x^2"]]).unwrap();
    assert!(matches!(from_antihermitian(&xi, Some(&bad)), Err(Error::Construction(_))));

    let not_ah = LaurentMatrix::parse_rows(3, 1, &[&["x"]]).unwrap();
    assert_eq!(from_antihermitian(&not_ah, None), Err(Error::NotAntihermitian));
}

#[test]
fn example_projector_identities() {
    let s = example_z3();
    let pi = build_projector(&s).unwrap();
    let m = &pi.matrix;
    let v = s.generators();
    let id = LaurentMatrix::identity(3, 2, 4);
    assert_eq!(&(m * m), m);
    assert_eq!(&(m * v), v);
    assert!((&(&v.dagger() * &s.lambda()) * &(&id - m)).is_zero());
    assert!(pi.spread <= 4, "spread {}", pi.spread);
    let comp = &id - m;
    for i in 0..4 {
        for j in 0..2 {
            assert!(pairing(2, &comp.column(i), &v.column(j)).is_zero());
        }
    }
}

#[test]
fn example_commutant_is_conjugate() {
    let s = example_z3();
    let b = commutant_generators(&s).unwrap();
    let expected =
        SubalgebraSpec::new(2, LaurentMatrix::identity(3, 2, 2).vstack(&example_xi().scale(1)).unwrap()).unwrap();
    // -Ξ/2 = -2Ξ = Ξ over F_3
    assert_eq!(b, expected);
    assert_eq!(b, s.conjugate());
    assert!(same_span(&b, &s.conjugate()).unwrap());
    assert!(same_span(&commutant_generators(&b).unwrap(), &s).unwrap());
}

#[test]
fn nonexample_commutant_is_z_x() {
    // Z(j) X(j+1) has symbol (x; 1) = x (1; x^-1)
    let b = commutant_generators(&nonexample_1dxz()).unwrap();
    assert_eq!(b.generators(), &LaurentMatrix::parse_rows(2, 1, &[&["1"], &["x^-1"]]).unwrap());
    assert!(span_contains(&b, &[lp("x", 2, 1), lp("1", 2, 1)]).unwrap());
}

#[test]
fn decompose_examples() {
    let s = example_z3();
    let pi = build_projector(&s).unwrap();
    for j in 0..2 {
        let (a, b) = decompose_local(&pi, &s.generator(j)).unwrap();
        assert_eq!(a, s.generator(j));
        assert!(b.iter().all(LaurentPoly::is_zero));
    }
    let e1: Vec<LaurentPoly> = (0..4).map(|i| LaurentPoly::constant(3, 2, i64::from(i == 0))).collect();
    let (a, b) = decompose_local(&pi, &e1).unwrap();
    for (i, f) in e1.iter().enumerate() {
        assert_eq!(&(&a[i] + &b[i]), f);
    }
    assert!(a.iter().chain(&b).all(|f| f.max_abs_exponent() <= 2));
    assert!(span_contains(&s, &a).unwrap());
    assert!(span_contains(&s.conjugate(), &b).unwrap());
    let zero = vec![LaurentPoly::zero(3, 2); 4];
    assert_eq!(decompose_local(&pi, &zero).unwrap(), (zero.clone(), zero));
}

#[test]
fn tensor_products() {
    let s = example_z3();
    let empty = SubalgebraSpec::empty(3, 2, 2).unwrap();
    let t = brauer_tensor(&s, &SubalgebraSpec::empty(3, 1, 2).unwrap()).unwrap();
    assert_eq!(commutation_matrix(&t), example_xi());
    assert!(check_invertible(&brauer_tensor(&s, &empty).unwrap()).unwrap().invertible);

    let sb = brauer_tensor(&s, &commutant_generators(&s).unwrap()).unwrap();
    let xi = commutation_matrix(&sb);
    assert_eq!(xi, example_xi().block_diag(&commutation_matrix(&s.conjugate())).unwrap());
    assert!(check_invertible(&sb).unwrap().invertible);

    let nn = brauer_tensor(&nonexample_1dxz(), &nonexample_1dxz()).unwrap();
    let cert = check_invertible(&nn).unwrap();
    assert!(!cert.invertible);
    assert_eq!(cert.rank, 2);

    let other = SubalgebraSpec::full(5, 1, 2).unwrap();
    assert!(matches!(brauer_tensor(&s, &other), Err(Error::IncompatibleRing(_))));
}

#[test]
fn hamiltonian_terms_commute_symbolically() {
    for model in [example_z3_model(), toric_code_z3_model(), example_z3_model().conjugate()] {
        let q = model.spec.q();
        for a in &model.terms {
            for b in &model.terms {
                assert!(pairing(q, a, b).is_zero(), "{}", model.name);
            }
            assert!(span_contains(&model.spec, a).unwrap());
        }
    }
}

#[test]
fn example_term_and_syndromes() {
    let model = example_z3_model();
    let h = &model.terms[0];
    let expect = ["1 - y", "1 - x^-1", "x*y - y", "y - 1"];
    for (f, e) in h.iter().zip(expect) {
        assert_eq!(f, &lp(e, 3, 2));
    }
    let s = &model.spec;
    assert_eq!(pairing(2, h, &s.generator(0)), lp("x^-1*y^-1 - y^-1", 3, 2));
    assert_eq!(pairing(2, h, &s.generator(1)), lp("y^-1 - 1", 3, 2));
}
