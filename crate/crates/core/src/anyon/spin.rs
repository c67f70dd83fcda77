//! String operators and the T-junction exchange phase.

use serde::Serialize;

use crate::anyon::hamiltonian::{HamiltonianInstance, SyndromeEntry};
use crate::error::{Error, Result};
use crate::field;
use crate::finite::linalg;
use crate::finite::weyl::PhasedPauli;

/// Sign applied to the raw exchange phase. Fixed once so that the
/// elementary anyon of the chiral `Z_3` example has spin exponent `+1`.
pub const ORIENTATION: i64 = 1;

/// Lattice path through the given displacements from `start`, moving one
/// unit step at a time and alternating axes while both still need to move.
pub fn staircase(h: &HamiltonianInstance, start: usize, waypoints: &[Vec<i64>]) -> Vec<usize> {
    let l = &h.lattice;
    let mut path = vec![start];
    let mut pos = vec![0i64; l.dims()];
    for wp in waypoints {
        loop {
            let remaining: Vec<i64> = wp.iter().zip(&pos).map(|(w, p)| w - p).collect();
            if remaining.iter().all(|&r| r == 0) {
                break;
            }
            // step along the axis with the most remaining distance
            let axis = (0..remaining.len()).max_by_key(|&i| (remaining[i].abs(), std::cmp::Reverse(i))).unwrap();
            pos[axis] += remaining[axis].signum();
            path.push(l.translate(start, &pos).expect("path stays on the lattice"));
        }
    }
    path
}

#[derive(Clone, Debug, Serialize)]
pub struct Hopping {
    #[serde(skip)]
    pub operator: PhasedPauli,
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub generators_used: usize,
    pub syndrome: Vec<SyndromeEntry>,
}

/// A product of generator translates near `path` whose syndrome is `-charge`
/// at the first site of the path, `+charge` at the last, and zero elsewhere.
pub fn solve_hopping(h: &HamiltonianInstance, path: &[usize], charge: &[u32], radius: usize) -> Result<Hopping> {
    let l = &h.lattice;
    let p = l.p;
    let (from, to) = (path[0], *path.last().unwrap());
    if from == to {
        return Err(Error::Usage("hopping endpoints must differ".into()));
    }
    let tt = h.num_term_types();
    if charge.len() != tt {
        return Err(Error::Shape(format!("charge has {} entries, model has {tt} term types", charge.len())));
    }
    let spec = &h.model.spec;
    let mut unknowns: Vec<PhasedPauli> = Vec::new();
    for s in 0..l.num_sites() {
        if path.iter().all(|&t| l.distance(s, t) > radius) {
            continue;
        }
        for j in 0..spec.num_generators() {
            if let Some(g) = h.place(&spec.generator(j), s) {
                if !g.is_scalar() {
                    unknowns.push(g);
                }
            }
        }
    }
    let syndromes: Vec<Vec<u32>> = unknowns.iter().map(|g| h.syndrome(g).values).collect();
    let rows: Vec<Vec<u32>> = (0..l.num_sites() * tt).map(|e| syndromes.iter().map(|s| s[e]).collect()).collect();
    let mut target = vec![0u32; l.num_sites() * tt];
    for t in 0..tt {
        target[from * tt + t] = field::neg(charge[t] % p, p);
        target[to * tt + t] = field::add(target[to * tt + t], charge[t] % p, p);
    }
    let coeffs = linalg::solve(p, &rows, &target, unknowns.len()).ok_or_else(|| {
        Error::Infeasible(format!(
            "no product of generators within distance {radius} of the path moves charge {charge:?} from {:?} to {:?}",
            l.coords(from),
            l.coords(to)
        ))
    })?;
    let mut op = PhasedPauli::identity(p, l.q * l.num_sites());
    let mut used = 0;
    for (g, &c) in unknowns.iter().zip(&coeffs) {
        if c != 0 {
            used += 1;
            op = op.mul(&g.pow(c as u64))?;
        }
    }
    let syndrome = h.syndrome(&op);
    debug_assert_eq!(syndrome.values, target);
    Ok(Hopping {
        operator: op,
        from: l.coords(from),
        to: l.coords(to),
        generators_used: used,
        syndrome: syndrome.entries(l),
    })
}

/// Three legs from a common junction, in counterclockwise order.
#[derive(Clone, Debug, Serialize)]
pub struct Junction {
    pub name: String,
    pub junction: Vec<usize>,
    /// Displacements of the waypoints of each leg, the last one being the
    /// endpoint.
    pub legs: [Vec<Vec<i64>>; 3],
}

impl Junction {
    /// East, north and southwest legs of length `len`.
    pub fn standard(junction: Vec<usize>, len: i64) -> Self {
        Junction {
            name: format!("straight legs of length {len} at {junction:?}"),
            junction,
            legs: [vec![vec![len, 0]], vec![vec![0, len]], vec![vec![-len, -len]]],
        }
    }

    /// Same endpoints as [`Junction::standard`], each leg bent through a
    /// detour.
    pub fn deformed(junction: Vec<usize>, len: i64) -> Self {
        let bend = (len / 2).max(1);
        Junction {
            name: format!("bent legs of length {len} at {junction:?}"),
            junction,
            legs: [
                vec![vec![0, -1], vec![bend, -1], vec![len, 0]],
                vec![vec![-1, 0], vec![-1, bend], vec![0, len]],
                vec![vec![-bend, 0], vec![-len, -len]],
            ],
        }
    }

    pub fn leg_length(&self) -> i64 {
        self.legs.iter().map(|leg| leg.last().unwrap().iter().map(|x| x.abs()).max().unwrap()).min().unwrap()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinResult {
    pub geometry: String,
    pub theta_exponent: u32,
    pub raw_exponent: u32,
    pub hoppings: Vec<Hopping>,
}

/// Spread used for geometry thresholds: the largest exponent among the
/// generators and the terms.
pub fn model_spread(h: &HamiltonianInstance) -> u32 {
    let t = h.model.terms.iter().flat_map(|t| t.iter().map(|f| f.max_abs_exponent())).max().unwrap_or(0);
    h.model.spec.spread().max(t).max(1)
}

pub const LEG_FACTOR: i64 = 4;

/// Exchange phase of charge `charge` from hopping operators along the three
/// legs: with `W_j` moving the anyon from the junction to endpoint `j` and
/// `M_ij` from endpoint `j` to `i`,
/// `θ = M_32 M_21 M_13 (M_13 M_21 M_32)^{-1}`.
pub fn topological_spin(h: &HamiltonianInstance, charge: &[u32], geometry: &Junction) -> Result<SpinResult> {
    let l = &h.lattice;
    if !l.periodic || l.dims() != 2 {
        return Err(Error::InvalidLattice("the exchange process runs on a 2D torus".into()));
    }
    let spread = model_spread(h) as i64;
    let len = geometry.leg_length();
    if len < LEG_FACTOR * spread {
        return Err(Error::TooShort(format!(
            "legs of length {len} are shorter than {LEG_FACTOR} x spread {spread}; the phase is not yet topological"
        )));
    }
    let reach = geometry.legs.iter().flatten().flatten().map(|x| x.abs()).max().unwrap();
    if l.sizes.iter().any(|&s| (s as i64) < 2 * reach + 1) {
        return Err(Error::TooShort(format!("torus {} is too small for legs of length {len}", l.describe())));
    }
    let j = l.site(&geometry.junction);
    let radius = spread as usize;
    let mut hops = Vec::with_capacity(3);
    for leg in &geometry.legs {
        hops.push(solve_hopping(h, &staircase(h, j, leg), charge, radius)?);
    }
    let w: Vec<&PhasedPauli> = hops.iter().map(|x| &x.operator).collect();
    let m13 = w[2].mul(&w[0].dagger())?;
    let m21 = w[0].mul(&w[1].dagger())?;
    let m32 = w[1].mul(&w[2].dagger())?;
    let forward = m32.mul(&m21)?.mul(&m13)?;
    let backward = m13.mul(&m21)?.mul(&m32)?;
    let ratio = forward.mul(&backward.dagger())?;
    if !ratio.is_scalar() {
        return Err(Error::Construction("exchange products differ by more than a phase".into()));
    }
    let p = l.p;
    let raw = ratio.c;
    let theta = field::reduce(ORIENTATION * raw as i64, p);
    Ok(SpinResult { geometry: geometry.name.clone(), theta_exponent: theta, raw_exponent: raw, hoppings: hops })
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceCheck {
    pub geometry: String,
    pub theta_exponent: Option<u32>,
    pub pass: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinReport {
    pub anyon: Vec<u32>,
    pub theta_exponent: u32,
    pub p: u32,
    pub orientation: String,
    pub leg_length: i64,
    pub junction: Vec<usize>,
    pub legs: [Vec<Vec<i64>>; 3],
    pub invariance_checks: Vec<InvarianceCheck>,
}

/// Spin on the standard geometry plus reruns with longer legs, a translated
/// junction and deformed legs. The report passes only if all agree.
pub fn spin_with_checks(h: &HamiltonianInstance, charge: &[u32], len: i64) -> Result<SpinReport> {
    let l = &h.lattice;
    let centre: Vec<usize> = l.sizes.iter().map(|s| s / 2).collect();
    let base = Junction::standard(centre.clone(), len);
    let main = topological_spin(h, charge, &base)?;
    let shifted: Vec<usize> = centre.iter().zip(&l.sizes).map(|(c, s)| (c + 1) % s).collect();
    let variants = [
        Junction::standard(centre.clone(), len + 1),
        Junction::standard(shifted.clone(), len),
        Junction::deformed(centre.clone(), len),
        Junction::deformed(shifted, len),
    ];
    let mut checks = Vec::new();
    for g in variants {
        let name = g.name.clone();
        match topological_spin(h, charge, &g) {
            Ok(r) => checks.push(InvarianceCheck {
                geometry: name,
                theta_exponent: Some(r.theta_exponent),
                pass: r.theta_exponent == main.theta_exponent,
                note: None,
            }),
            Err(e @ Error::TooShort(_)) => checks.push(InvarianceCheck {
                geometry: name,
                theta_exponent: None,
                pass: true,
                note: Some(format!("skipped: {e}")),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(SpinReport {
        anyon: charge.to_vec(),
        theta_exponent: main.theta_exponent,
        p: l.p,
        orientation: format!(
            "legs counterclockwise (east, north, southwest); theta = M32 M21 M13 (M13 M21 M32)^-1 with sign {ORIENTATION:+}"
        ),
        leg_length: len,
        junction: centre,
        legs: base.legs,
        invariance_checks: checks,
    })
}
