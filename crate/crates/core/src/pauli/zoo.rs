//! Named subalgebras and their commuting Hamiltonian terms.

use crate::error::{Error, Result};
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::pauli::algebra::from_antihermitian;
use crate::pauli::spec::SubalgebraSpec;

pub const BUILTIN_NAMES: [&str; 6] =
    ["example-z3", "example-z3-conjugate", "nonexample-1dxz", "full", "empty", "toric-code-z3"];

/// The 2x2 antihermitian commutation matrix over `F_3[x^±, y^±]` with
/// determinant 4.
pub fn example_xi() -> LaurentMatrix {
    LaurentMatrix::parse_rows(3, 2, &[&["x^-1 - x", "x + x*y - y + 1"], &["-x^-1 + y^-1 - x^-1*y^-1 - 1", "y - y^-1"]])
        .expect("literal parses")
}

/// `(id_2; Ξ/2)` over `F_3`, so `Ξ/2 = 2Ξ`.
pub fn example_z3() -> SubalgebraSpec {
    from_antihermitian(&example_xi(), None).expect("example is antihermitian")
}

/// Generated by `X(j) Z(j+1)` over `F_2`: symbol `(1; x)`.
pub fn nonexample_1dxz() -> SubalgebraSpec {
    SubalgebraSpec::new(1, LaurentMatrix::parse_rows(2, 1, &[&["1"], &["x"]]).unwrap()).unwrap()
}

/// Commuting Pauli terms inside a subalgebra.
#[derive(Clone, Debug)]
pub struct HamiltonianModel {
    pub name: String,
    pub spec: SubalgebraSpec,
    /// Symbols of the term at the origin, one per term type.
    pub terms: Vec<Vec<LaurentPoly>>,
    pub term_names: Vec<String>,
}

impl HamiltonianModel {
    pub fn conjugate(&self) -> HamiltonianModel {
        let q = self.spec.q();
        let terms = self
            .terms
            .iter()
            .map(|t| t.iter().enumerate().map(|(i, f)| if i < q { f.clone() } else { -f }).collect())
            .collect();
        HamiltonianModel {
            name: format!("{}-conjugate", self.name),
            spec: self.spec.conjugate(),
            terms,
            term_names: self.term_names.clone(),
        }
    }
}

fn lp(text: &str) -> LaurentPoly {
    LaurentPoly::parse(text, 3, 2).expect("literal parses")
}

/// `P_s` of the chiral example: `V (1-y; 1-x^{-1})`.
pub fn example_z3_model() -> HamiltonianModel {
    let spec = example_z3();
    let coeffs = LaurentMatrix::from_columns(3, 2, 2, vec![vec![lp("1 - y"), lp("1 - x^-1")]]).unwrap();
    let h = (spec.generators() * &coeffs).column(0);
    HamiltonianModel { name: "example-z3".into(), spec, terms: vec![h], term_names: vec!["P".into()] }
}

/// Qutrit toric code on the edges of the square lattice: qudit 1 is the
/// horizontal edge east of a vertex, qudit 2 the vertical edge north of it.
pub fn toric_code_z3_model() -> HamiltonianModel {
    let spec = SubalgebraSpec::full(3, 2, 2).unwrap();
    let zero = LaurentPoly::zero(3, 2);
    let star = vec![lp("1 - y"), lp("1 - x^-1"), zero.clone(), zero.clone()];
    let plaquette = vec![zero.clone(), zero, lp("1 - x"), lp("y^-1 - 1")];
    HamiltonianModel {
        name: "toric-code-z3".into(),
        spec,
        terms: vec![star, plaquette],
        term_names: vec!["star".into(), "plaquette".into()],
    }
}

pub fn builtin_spec(name: &str) -> Result<SubalgebraSpec> {
    match name {
        "example-z3" => Ok(example_z3()),
        "example-z3-conjugate" => Ok(example_z3().conjugate()),
        "nonexample-1dxz" => Ok(nonexample_1dxz()),
        "full" | "toric-code-z3" => SubalgebraSpec::full(3, 2, 2),
        "empty" => SubalgebraSpec::empty(3, 2, 2),
        _ => Err(Error::Usage(format!("unknown builtin {name:?}; known: {}", BUILTIN_NAMES.join(", ")))),
    }
}

pub fn builtin_model(name: &str) -> Result<HamiltonianModel> {
    match name {
        "example-z3" => Ok(example_z3_model()),
        "example-z3-conjugate" => Ok(example_z3_model().conjugate()),
        "toric-code-z3" => Ok(toric_code_z3_model()),
        _ => Err(Error::Usage(format!(
            "no Hamiltonian for {name:?}; models exist for example-z3, example-z3-conjugate, toric-code-z3"
        ))),
    }
}
