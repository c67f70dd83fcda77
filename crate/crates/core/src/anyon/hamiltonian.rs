use serde::Serialize;

use crate::error::{Error, Result};
use crate::field;
use crate::finite::instantiate::{omega, symbol_vector};
use crate::finite::lattice::FiniteLattice;
use crate::finite::linalg;
use crate::finite::weyl::PhasedPauli;
use crate::laurent::LaurentPoly;
use crate::pauli::HamiltonianModel;

/// The terms of a commuting Pauli Hamiltonian placed on a finite lattice.
#[derive(Clone, Debug)]
pub struct HamiltonianInstance {
    pub lattice: FiniteLattice,
    pub model: HamiltonianModel,
    /// `terms[site * T + t]`, absent where a term leaves an open patch.
    pub terms: Vec<Option<PhasedPauli>>,
}

/// Violated-term pattern: `values[site * T + t] = ω(P_{s,t}, op)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Syndrome {
    pub term_types: usize,
    pub values: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyndromeEntry {
    pub site: Vec<usize>,
    pub term: usize,
    pub value: u32,
}

impl Syndrome {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn entries(&self, lattice: &FiniteLattice) -> Vec<SyndromeEntry> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| SyndromeEntry {
                site: lattice.coords(i / self.term_types),
                term: i % self.term_types,
                value: v,
            })
            .collect()
    }

    /// Sites with a nonzero entry, as coordinates.
    pub fn sites(&self, lattice: &FiniteLattice) -> Vec<Vec<usize>> {
        let mut s: Vec<Vec<usize>> = self.entries(lattice).into_iter().map(|e| e.site).collect();
        s.dedup();
        s
    }

    pub fn add(&self, other: &Syndrome, p: u32) -> Syndrome {
        Syndrome {
            term_types: self.term_types,
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| field::add(a, b, p)).collect(),
        }
    }
}

impl HamiltonianInstance {
    pub fn num_term_types(&self) -> usize {
        self.model.terms.len()
    }

    pub fn prime(&self) -> u32 {
        self.lattice.p
    }

    pub fn term(&self, site: usize, t: usize) -> Option<&PhasedPauli> {
        self.terms[site * self.num_term_types() + t].as_ref()
    }

    pub fn syndrome(&self, op: &PhasedPauli) -> Syndrome {
        let v = op.to_vector();
        let values =
            self.terms.iter().map(|t| t.as_ref().map_or(0, |t| omega(&self.lattice, &t.to_vector(), &v))).collect();
        Syndrome { term_types: self.num_term_types(), values }
    }

    /// The translate of a symbol anchored at `site` as a phase-free Pauli.
    pub fn place(&self, symbol: &[LaurentPoly], site: usize) -> Option<PhasedPauli> {
        symbol_vector(&self.lattice, symbol, site).map(|v| PhasedPauli::from_vector(self.prime(), 0, &v))
    }

    /// Whether some nonempty product of powers of the terms is a phase times
    /// the identity, i.e. whether their exponent vectors are dependent over
    /// `F_p`. For `p = 3` the nonzero powers are exactly `P` and `P^†`.
    pub fn has_scalar_product(&self) -> bool {
        let vecs: Vec<Vec<u32>> = self.terms.iter().flatten().map(PhasedPauli::to_vector).collect();
        if vecs.is_empty() {
            return false;
        }
        let n = self.lattice.vector_len();
        let columns: Vec<Vec<u32>> = (0..n).map(|i| vecs.iter().map(|v| v[i]).collect()).collect();
        !linalg::nullspace(self.prime(), columns, vecs.len()).is_empty()
    }
}

/// Places every term type at every site and checks that all terms commute.
pub fn build_hamiltonian(model: &HamiltonianModel, lattice: &FiniteLattice) -> Result<HamiltonianInstance> {
    let spec = &model.spec;
    if spec.prime() == 2 {
        return Err(Error::InvalidSpec("phase-tracked anyon computations need an odd prime".into()));
    }
    if spec.prime() != lattice.p || spec.q() != lattice.q || spec.dims() != lattice.dims() {
        return Err(Error::InvalidLattice("lattice does not match the model".into()));
    }
    let mut terms = Vec::with_capacity(lattice.num_sites() * model.terms.len());
    for s in 0..lattice.num_sites() {
        for t in &model.terms {
            terms.push(symbol_vector(lattice, t, s).map(|v| PhasedPauli::from_vector(lattice.p, 0, &v)));
        }
    }
    let h = HamiltonianInstance { lattice: lattice.clone(), model: model.clone(), terms };
    let present: Vec<(usize, &PhasedPauli)> =
        h.terms.iter().enumerate().filter_map(|(i, t)| Some((i, t.as_ref()?))).collect();
    for (k, (i, a)) in present.iter().enumerate() {
        for (j, b) in &present[k + 1..] {
            if !a.commutes_with(b)? {
                let tt = h.num_term_types();
                return Err(Error::Construction(format!(
                    "terms {} at {:?} and {} at {:?} do not commute",
                    model.term_names[i % tt],
                    lattice.coords(i / tt),
                    model.term_names[j % tt],
                    lattice.coords(j / tt)
                )));
            }
        }
    }
    Ok(h)
}
