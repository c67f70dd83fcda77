use pauli_isa::finite::*;
use pauli_isa::pauli::zoo::{example_z3, nonexample_1dxz};
use pauli_isa::pauli::{build_projector, SubalgebraSpec};
use pauli_isa::qca::{lift_to_qca, CliffordQCA};

fn torus(p: u32, q: usize, sizes: &[usize]) -> FiniteLattice {
    FiniteLattice::torus(p, q, sizes.to_vec()).unwrap()
}

#[test]
fn example_dimension_and_complement() {
    let l = torus(3, 2, &[5, 5]);
    let s = instantiate_spec(&example_z3(), &l).unwrap();
    assert_eq!(s.dim(), 50);
    let comp = symplectic_complement(&s, &l);
    assert_eq!(comp.dim(), 50);
    assert_eq!(comp, instantiate_spec(&example_z3().conjugate(), &l).unwrap());
}

#[test]
fn finite_invertibility() {
    let l = torus(3, 2, &[7, 7]);
    let s = instantiate_spec(&example_z3(), &l).unwrap();
    assert!(check_invertible_finite(&s, &l).invertible);
    let full = instantiate_spec(&SubalgebraSpec::full(3, 2, 2).unwrap(), &l).unwrap();
    assert!(check_invertible_finite(&full, &l).invertible);
    assert_eq!(symplectic_complement(&full, &l).dim(), 0);
    for len in 2..7 {
        let ring = torus(2, 1, &[len]);
        let s = instantiate_spec(&nonexample_1dxz(), &ring).unwrap();
        let r = check_invertible_finite(&s, &ring);
        assert!(!r.invertible, "L = {len}");
        assert!(r.center_dim >= 1);
    }
}

#[test]
fn nonexample_center_is_all_y() {
    let ring = torus(2, 1, &[4]);
    let s = instantiate_spec(&nonexample_1dxz(), &ring).unwrap();
    let c = center(&s, &ring);
    assert!(c.contains(&[1, 1, 1, 1, 1, 1, 1, 1]));
    assert!(!symplectic_complement(&s, &ring).intersect(&s).basis().is_empty());
}

#[test]
fn visible_simplicity() {
    let l = torus(3, 2, &[5, 5]);
    let s = instantiate_spec(&example_z3(), &l).unwrap();
    assert!(check_vs(&s, &l, 2).holds);
    let full_l = torus(3, 2, &[3, 3]);
    let full = instantiate_spec(&SubalgebraSpec::full(3, 2, 2).unwrap(), &full_l).unwrap();
    assert!(check_vs(&full, &full_l, 0).holds);
    let ring = torus(2, 1, &[9]);
    let ns = instantiate_spec(&nonexample_1dxz(), &ring).unwrap();
    for range in 0..4 {
        assert!(!check_vs(&ns, &ring, range).holds);
    }
}

#[test]
fn center_lives_at_patch_boundary() {
    let spec = example_z3();
    let ell = build_projector(&spec).unwrap().spread.max(spec.spread()) as usize;
    for sizes in [vec![6, 7], vec![8, 7], vec![9, 4]] {
        let patch = FiniteLattice::patch(3, 2, sizes).unwrap();
        let s = instantiate_spec(&spec, &patch).unwrap();
        let r = center_near_boundary(&s, &patch, 2 * ell).unwrap();
        assert!(r.holds, "{r:?}");
        assert!(r.center_dim > 0);
    }
    // without invertibility the center reaches deep into the chain
    let chain = FiniteLattice::patch(2, 1, vec![10]).unwrap();
    let s = instantiate_spec(&nonexample_1dxz(), &chain).unwrap();
    let r = center_near_boundary(&s, &chain, 2).unwrap();
    assert!(!r.holds);
    assert_eq!(r.deepest_support, 5);
}

#[test]
fn boundary_of_identity_and_shifts() {
    let l = torus(3, 1, &[3, 6]);
    let id = instantiate_qca(&CliffordQCA::identity(3, 1, 2), &l).unwrap();
    let r = boundary_algebra_finite(&id, 1, 3, 1).unwrap();
    assert!(r.factorizes);
    assert_eq!(r.boundary_dim, 2 * 3);
    // a positive shift pushes H forward across the cut: two full sheets
    let up = instantiate_qca(&CliffordQCA::shift(3, 2, &[vec![0, 1]]).unwrap(), &l).unwrap();
    let r = boundary_algebra_finite(&up, 1, 3, 1).unwrap();
    assert!(r.factorizes);
    assert_eq!(r.boundary_dim, 2 * 2 * 3);
    let sheets: Vec<bool> = (0..l.vector_len()).map(|i| [3, 4].contains(&l.coords(l.site_of_index(i))[1])).collect();
    assert_eq!(r.boundary, FpSubspace::full(3, l.vector_len()).intersect_coordinates(&sheets));
    let down = instantiate_qca(&CliffordQCA::shift(3, 2, &[vec![0, -1]]).unwrap(), &l).unwrap();
    assert_eq!(boundary_algebra_finite(&down, 1, 3, 1).unwrap().boundary_dim, 0);
    assert!(boundary_algebra_finite(&up, 1, 3, 0).is_err());
}

#[test]
fn lifted_example_boundary_is_the_example() {
    let l = torus(3, 2, &[7, 7, 7]);
    let u = lift_to_qca(&example_z3()).unwrap();
    let alpha = instantiate_qca(&u, &l).unwrap();
    for cut in [2, 3] {
        let r = boundary_algebra_finite(&alpha, 2, cut, 1).unwrap();
        assert!(r.factorizes);
        let expected = instantiate_spec_on_sheet(&example_z3(), &l, 2, cut).unwrap();
        assert_eq!(r.boundary_dim, 2 * 49);
        assert_eq!(r.boundary, expected);
    }
}

#[test]
fn blends() {
    let l = torus(3, 1, &[2, 8]);
    let id = FiniteSymplecticAutomorphism::identity(l.clone());
    assert!(verify_blend(&id, &id, &id, 1, 4, 1).unwrap().holds);
    let mut bad = id.clone();
    let site = l.site(&[0, 6]);
    let i = l.row_index(site, 0);
    let mut v = bad.image(i).to_vec();
    v[l.row_index(site, 1)] = 1;
    bad.set_image(i, v);
    let r = verify_blend(&bad, &id, &id, 1, 4, 1).unwrap();
    assert!(!r.holds);
    assert_eq!(r.mismatch, Some((vec![0, 6], 0)));
}

#[test]
fn dist_witness() {
    let id = PhasedAutomorphism::identity(2, 6);
    let flip = PhasedAutomorphism::global_x_flip(2, 6);
    let r = dist_bounded(&flip, &id, 1, 1).unwrap();
    assert_eq!(r.value, 2.0);
    assert_eq!(r.chord, Chord { k: 4, modulus: 8 });
}
