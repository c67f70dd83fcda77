//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use clap::Parser;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use pauli_isa::anyon::{build_hamiltonian, gauss_sum_phase, spin_with_checks, Spin};
use pauli_isa::cli::{self, Cli};
use pauli_isa::finite::{
    boundary_algebra_finite, center_near_boundary, check_invertible_finite, dist_bounded, instantiate_qca,
    instantiate_spec, instantiate_spec_on_sheet, symplectic_complement, Chord, FiniteLattice, FpSubspace,
    PhasedAutomorphism,
};
use pauli_isa::laurent::{determinantal_profile, LaurentMatrix, LaurentPoly};
use pauli_isa::pauli::zoo::{example_z3, example_z3_model, nonexample_1dxz, toric_code_z3_model};
use pauli_isa::pauli::{
    build_projector, check_invertible, commutant_generators, from_antihermitian, same_span, SubalgebraSpec,
};
use pauli_isa::qca::{is_symplectic, lift_to_qca};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cli_run(args: &[&str]) -> Result<(i32, serde_json::Value), String> {
    let parsed =
        Cli::try_parse_from(std::iter::once("pauli-isa").chain(args.iter().copied())).map_err(|e| e.to_string())?;
    ok(cli::run(&parsed.command))
}

fn lp(s: &str, p: u32, n: usize) -> LaurentPoly {
    LaurentPoly::parse(s, p, n).unwrap()
}

fn c1_example_invertible() -> Check {
    let (code, cert) = cli_run(&["check", "example-z3"])?;
    ensure!(code == 0, "exit {code}");
    ensure!(cert["invertible"] == true, "not invertible");
    ensure!(cert["ideal"]["is_unit"] == true, "ideal not unit");
    let det = lp(cert["determinant"].as_str().ok_or("no determinant")?, 3, 2);
    ensure!(det == LaurentPoly::constant(3, 2, 4), "det = {det}, expected 4 = 1 in F_3");
    Ok(format!("det = {det} (= 4 mod 3), ideal unit"))
}

fn c2_nonexample() -> Check {
    let (code, cert) = cli_run(&["check", "nonexample-1dxz"])?;
    ensure!(code == 1, "exit {code}");
    ensure!(cert["invertible"] == false, "reported invertible");
    let spec = nonexample_1dxz();
    let mut prof = ok(determinantal_profile(&pauli_isa::pauli::commutation_matrix(&spec)))?;
    ensure!(prof.rank == 1 && !prof.is_unit, "profile rank {} unit {}", prof.rank, prof.is_unit);
    let target = lp("x - x^-1", 2, 1);
    ensure!(prof.ideal.generators() == [target.clone()], "ideal {:?}", prof.ideal.generators());
    ensure!(!prof.ideal.is_unit(), "ideal is unit");
    Ok(format!("smallest nonzero ideal ({target}) over F_2, not unit"))
}

fn c3_projector() -> Check {
    let s = example_z3();
    let pi = ok(build_projector(&s))?.matrix;
    let id = LaurentMatrix::identity(3, 2, 4);
    let comp = &id - &pi;
    ensure!(&pi * &pi == pi, "Pi^2 != Pi");
    ensure!(&pi * s.generators() == *s.generators(), "Pi V != V");
    ensure!((&(&s.generators().dagger() * &s.lambda()) * &comp).is_zero(), "V^dag lambda (id - Pi) != 0");
    let norm = pi.max_abs_exponent();
    ensure!(norm <= 4, "exponent norm {norm}");
    Ok(format!("identities exact, exponent norm {norm}"))
}

fn c4_commutant() -> Check {
    let s = example_z3();
    let b = ok(commutant_generators(&s))?;
    let conj = s.conjugate();
    ensure!(ok(same_span(&b, &conj))? && ok(same_span(&conj, &b))?, "spans differ");
    let l = ok(FiniteLattice::torus(3, 2, vec![7, 7]))?;
    let a = ok(instantiate_spec(&s, &l))?;
    let comp = symplectic_complement(&a, &l);
    let conj_fin = ok(instantiate_spec(&conj, &l))?;
    ensure!(comp == conj_fin, "finite complement dim {} vs conjugate dim {}", comp.dim(), conj_fin.dim());
    Ok(format!("mutual membership; 7x7 complement = conjugate (dim {})", comp.dim()))
}

fn c5_lift() -> Check {
    let s = example_z3();
    let u = ok(lift_to_qca(&s))?;
    ensure!(u.dims() == 3 && is_symplectic(2, u.matrix()), "not symplectic over F_3[x,y,z]");
    let pi = ok(build_projector(&s))?.matrix.extend_vars(3);
    let id = LaurentMatrix::identity(3, 3, 4);
    let zinv = LaurentPoly::monomial(3, vec![0, 0, -1], 1);
    let expected = &pi + &(&id - &pi).scale_poly(&zinv);
    ensure!(*u.inverse().matrix() == expected, "inverse != Pi + z^-1 (id - Pi)");
    ensure!((u.matrix() * u.inverse().matrix()) == id, "U U^-1 != id");
    let l = ok(FiniteLattice::torus(3, 2, vec![7, 7, 7]))?;
    let alpha = instantiate_qca(&u, &l).map_err(|e| e.to_string())?;
    for cut in 0..7 {
        let r = ok(boundary_algebra_finite(&alpha, 2, cut, 1))?;
        ensure!(r.factorizes, "cut {cut}: image does not factorize");
        let sheet = ok(instantiate_spec_on_sheet(&s, &l, 2, cut))?;
        ensure!(r.boundary == sheet, "cut {cut}: boundary dim {} vs {}", r.boundary_dim, sheet.dim());
    }
    Ok("symplectic, inverse exact, boundary = example on all 7 cuts".into())
}

fn c6_hamiltonian() -> Check {
    let l = ok(FiniteLattice::torus(3, 2, vec![9, 9]))?;
    // construction fails unless all pairs commute
    let h = ok(build_hamiltonian(&example_z3_model(), &l))?;
    let terms: Vec<_> = h.terms.iter().flatten().collect();
    for (i, a) in terms.iter().enumerate() {
        for b in &terms[i + 1..] {
            ensure!(ok(a.commutes_with(b))?, "terms fail to commute");
        }
    }
    let wrap = |c: [i64; 2]| -> Vec<usize> { c.iter().map(|&x| x.rem_euclid(9) as usize).collect() };
    let origin = l.site(&[0, 0]);
    let expected = [vec![wrap([0, -1]), wrap([-1, -1])], vec![wrap([0, 0]), wrap([0, -1])]];
    for (j, want) in expected.iter().enumerate() {
        let g = h.place(&h.model.spec.generator(j), origin).ok_or("generator does not fit")?;
        let mut got = h.syndrome(&g).sites(&l);
        got.sort();
        let mut want = want.clone();
        want.sort();
        ensure!(got == want, "generator {j}: syndrome {got:?}, expected {want:?}");
    }
    Ok(format!("{} terms pairwise commute; generator syndromes match", terms.len()))
}

fn c7_spin() -> Check {
    let l = ok(FiniteLattice::torus(3, 2, vec![13, 13]))?;
    let h = ok(build_hamiltonian(&example_z3_model(), &l))?;
    let r = ok(spin_with_checks(&h, &[1], 5))?;
    ensure!(r.theta_exponent == 1, "example theta exponent {}", r.theta_exponent);
    ensure!(r.invariance_checks.len() >= 3, "only {} geometries", r.invariance_checks.len());
    ensure!(r.invariance_checks.iter().all(|c| c.pass), "invariance failed: {:?}", r.invariance_checks);
    let t = ok(build_hamiltonian(&toric_code_z3_model(), &l))?;
    let e = ok(spin_with_checks(&t, &[1, 0], 5))?;
    ensure!(e.theta_exponent == 0, "toric e theta exponent {}", e.theta_exponent);
    ensure!(e.invariance_checks.iter().all(|c| c.pass), "toric invariance failed");
    Ok(format!("theta = w^1 for k=1, 1 for toric e; {} geometries each", r.invariance_checks.len()))
}

fn c8_gauss() -> Check {
    let g = ok(gauss_sum_phase(&[Spin::new(0, 1), Spin::new(1, 3), Spin::new(1, 3)]))?;
    ensure!(g.eighth_root == 2, "phase e^(2 pi i {}/8), expected i", g.eighth_root);
    let toric: Vec<Spin> = (0..9).map(|i| Spin::new((i / 3) * (i % 3), 3)).collect();
    let t = ok(gauss_sum_phase(&toric))?;
    ensure!(t.eighth_root == 0, "toric phase e^(2 pi i {}/8)", t.eighth_root);
    Ok("{1, w, w} -> i; toric code -> 1".into())
}

fn c9_dist() -> Check {
    let id = PhasedAutomorphism::identity(2, 6);
    let flip = PhasedAutomorphism::global_x_flip(2, 6);
    let r = ok(dist_bounded(&flip, &id, 1, 1))?;
    ensure!(r.value == 2.0 && r.chord == Chord { k: 4, modulus: 8 }, "dist {} ({:?})", r.value, r.chord);
    let mut rng = StdRng::seed_from_u64(9);
    for trial in 0..20 {
        let (p, n) = if trial % 2 == 0 { (2, 4) } else { (3, 3) };
        let abc: Vec<_> = (0..3).map(|_| PhasedAutomorphism::random(p, n, 6, &mut rng)).collect();
        let d = |x: usize, y: usize| dist_bounded(&abc[x], &abc[y], 1, 2).map(|r| r.value);
        let (ab, ba, bc, ac, aa) = (ok(d(0, 1))?, ok(d(1, 0))?, ok(d(1, 2))?, ok(d(0, 2))?, ok(d(0, 0))?);
        ensure!(aa == 0.0, "trial {trial}: d(a,a) = {aa}");
        ensure!((ab - ba).abs() < 1e-12, "trial {trial}: asymmetric {ab} vs {ba}");
        ensure!(ac <= ab + bc + 1e-12, "trial {trial}: triangle {ac} > {ab} + {bc}");
        ensure!(ab > 0.0 || abc[0] == abc[1], "trial {trial}: distinct automorphisms at distance 0");
    }
    Ok("global X flip at distance 2; metric axioms on 20 triples".into())
}

fn random_subspace(rng: &mut StdRng, p: u32, n: usize) -> FpSubspace {
    let k = rng.gen_range(0..=n);
    let vs = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
    FpSubspace::span(p, n, vs)
}

fn random_monomial(rng: &mut StdRng, p: u32, d: usize) -> LaurentPoly {
    let e = (0..d).map(|_| rng.gen_range(-1..=1)).collect();
    LaurentPoly::monomial(p, e, rng.gen_range(1..p as i64))
}

fn random_poly(rng: &mut StdRng, p: u32, d: usize) -> LaurentPoly {
    let terms =
        (0..rng.gen_range(0..3)).map(|_| ((0..d).map(|_| rng.gen_range(-1..=1)).collect(), rng.gen_range(0..p as i64)));
    LaurentPoly::from_terms(p, d, terms)
}

fn column_op(rng: &mut StdRng, v: &LaurentMatrix) -> LaurentMatrix {
    let (p, d, n) = (v.prime(), v.nvars(), v.cols());
    let mut cols: Vec<Vec<LaurentPoly>> = (0..n).map(|j| v.column(j)).collect();
    match rng.gen_range(0..3) {
        0 if n > 1 => {
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            cols.swap(i, j);
        }
        1 | 0 => {
            let j = rng.gen_range(0..n);
            let m = random_monomial(rng, p, d);
            cols[j] = cols[j].iter().map(|f| f * &m).collect();
        }
        _ => {
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if i != j {
                let f = random_poly(rng, p, d);
                let add: Vec<_> = cols[i].iter().map(|g| g * &f).collect();
                cols[j] = cols[j].iter().zip(&add).map(|(a, b)| a + b).collect();
            }
        }
    }
    LaurentMatrix::from_columns(p, d, v.rows(), cols).unwrap()
}

/// `Ξ = Ḡ^T Ξ_0 G` for a random product `G` of elementary matrices.
fn antihermitian_spec(rng: &mut StdRng, p: u32, xi0: &LaurentMatrix) -> SubalgebraSpec {
    let (d, n) = (xi0.nvars(), xi0.rows());
    let mut g = LaurentMatrix::identity(p, d, n);
    for _ in 0..2 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mut e = LaurentMatrix::identity(p, d, n);
        if i != j {
            e[(i, j)] = random_monomial(rng, p, d);
        }
        g = &g * &e;
    }
    let xi = &(&g.dagger() * xi0) * &g;
    from_antihermitian(&xi, None).unwrap()
}

fn c10_properties() -> Check {
    let mut rng = StdRng::seed_from_u64(10);

    for trial in 0..100 {
        let p = [2, 3, 5][trial % 3];
        let l = FiniteLattice::torus(p, 1 + trial % 2, vec![2 + trial % 5]).unwrap();
        let s = random_subspace(&mut rng, p, l.vector_len());
        let back = symplectic_complement(&symplectic_complement(&s, &l), &l);
        ensure!(back == s, "double commutant failed on trial {trial}");
    }

    let bases = [example_z3(), pauli_isa::pauli::brauer_tensor(&nonexample_1dxz(), &nonexample_1dxz()).unwrap()];
    let expected: Vec<bool> = bases.iter().map(|s| check_invertible(s).unwrap().invertible).collect();
    ensure!(expected == [true, false], "base criteria {expected:?}");
    for trial in 0..100 {
        let k = trial % 2;
        let v = column_op(&mut rng, bases[k].generators());
        let s = ok(SubalgebraSpec::new(bases[k].q(), v))?;
        ensure!(ok(check_invertible(&s))?.invertible == expected[k], "criterion changed on column op {trial}");
    }

    let mut specs = vec![
        ("example-z3".to_string(), example_z3()),
        ("full".to_string(), SubalgebraSpec::full(3, 2, 2).unwrap()),
        ("empty".to_string(), SubalgebraSpec::empty(3, 2, 2).unwrap()),
    ];
    for p in [3, 5] {
        let xi0 = LaurentMatrix::parse_rows(p, 2, &[&["0", "1"], &["-1", "0"]]).unwrap();
        specs.push((format!("random F_{p}"), antihermitian_spec(&mut rng, p, &xi0)));
        let degenerate = LaurentMatrix::parse_rows(p, 2, &[&["x - x^-1", "0"], &["0", "0"]]).unwrap();
        specs.push((format!("random singular F_{p}"), antihermitian_spec(&mut rng, p, &degenerate)));
    }
    let mut summary = Vec::new();
    for (name, s) in &specs {
        let size = 4 * s.spread().max(1) as usize + 1;
        let l = ok(FiniteLattice::torus(s.prime(), s.q(), vec![size, size]))?;
        let fin = check_invertible_finite(&ok(instantiate_spec(s, &l))?, &l).invertible;
        let sym = ok(check_invertible(s))?.invertible;
        ensure!(fin == sym, "{name}: finite {fin} vs symbolic {sym} on {size}x{size}");
        summary.push(format!("{name}:{sym}"));
    }

    for (spec, sizes) in [(example_z3(), vec![6, 7]), (example_z3(), vec![9, 4])] {
        let l = ok(FiniteLattice::patch(3, 2, sizes.clone()))?;
        let r = ok(center_near_boundary(&ok(instantiate_spec(&spec, &l))?, &l, 2 * spec.spread() as usize))?;
        ensure!(r.holds && r.center_dim > 0, "patch {sizes:?}: center not at boundary ({r:?})");
    }
    let chain = ok(FiniteLattice::patch(2, 1, vec![10]))?;
    let r = ok(center_near_boundary(&ok(instantiate_spec(&nonexample_1dxz(), &chain))?, &chain, 1))?;
    ensure!(!r.holds, "1dXZ center should reach the bulk");

    Ok(format!("double commutant x100, column ops x100, agreement [{}], patch centers", summary.join(", ")))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Check,
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "example invertible", budget: Duration::from_secs(1), run: c1_example_invertible },
        Criterion { id: 2, name: "1D XZ negative control", budget: Duration::from_secs(1), run: c2_nonexample },
        Criterion { id: 3, name: "projector identities", budget: Duration::from_secs(5), run: c3_projector },
        Criterion { id: 4, name: "commutant = conjugate", budget: Duration::from_secs(30), run: c4_commutant },
        Criterion { id: 5, name: "lifted QCA and boundary", budget: Duration::from_secs(120), run: c5_lift },
        Criterion { id: 6, name: "Hamiltonian and syndromes", budget: Duration::from_secs(30), run: c6_hamiltonian },
        Criterion { id: 7, name: "topological spin", budget: Duration::from_secs(120), run: c7_spin },
        Criterion { id: 8, name: "Gauss sum phase", budget: Duration::from_secs(1), run: c8_gauss },
        Criterion { id: 9, name: "dist metric", budget: Duration::from_secs(60), run: c9_dist },
        Criterion { id: 10, name: "property suites", budget: Duration::from_secs(300), run: c10_properties },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > c.budget => Err(format!("over budget ({:.2?} > {:?})", elapsed, c.budget)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {:<28} {:>9.2?}  {detail}", c.id, c.name, elapsed),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {:<28} {:>9.2?}  {why}", c.id, c.name, elapsed);
            }
        }
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failed, failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
