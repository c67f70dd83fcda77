//! Command-line front end. Every command prints one JSON certificate.
//!
//! Exit status: 0 when the computation succeeds and the checked property
//! holds, 1 when the property definitively fails, 2 on usage errors or
//! infeasible requests.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::anyon::{build_hamiltonian, gauss_sum_phase, spin_with_checks, Spin};
use crate::error::{Error, Result};
use crate::finite::{
    boundary_algebra_finite, center_near_boundary, check_invertible_finite, check_vs, dist_bounded, instantiate_qca,
    instantiate_spec, instantiate_spec_on_sheet, verify_blend, FiniteLattice, FiniteSymplecticAutomorphism,
    PhasedAutomorphism,
};
use crate::pauli::{
    build_projector, builtin_model, builtin_spec, check_invertible, commutant_generators, same_span, SubalgebraSpec,
};
use crate::qca::{lift_to_qca, CliffordQCA};

#[derive(Debug, Parser)]
#[command(name = "pauli-isa", version, about = "Invertible Pauli subalgebras, Clifford QCA and anyon checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the certificate here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpecArg {
    /// Builtin name or path to a spec JSON file.
    #[arg(value_name = "SPEC")]
    pub positional: Option<String>,
    /// Same as the positional SPEC.
    #[arg(long = "spec", value_name = "SPEC", conflicts_with = "positional")]
    pub flag: Option<String>,
}

impl SpecArg {
    /// Defaults to `example-z3`.
    pub fn name(&self) -> &str {
        self.flag.as_deref().or(self.positional.as_deref()).unwrap_or("example-z3")
    }
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    /// Periodic lattice, e.g. 7x7.
    #[arg(long, conflicts_with = "patch")]
    pub torus: Option<String>,
    /// Open-boundary lattice, e.g. 8x7.
    #[arg(long)]
    pub patch: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide invertibility by the determinantal criterion.
    Check(SpecArg),
    /// Generators of the commutant.
    Commutant(SpecArg),
    /// Decomposition projector.
    Project(SpecArg),
    /// Lift to a Clifford QCA one dimension up.
    Lift(SpecArg),
    /// Finite-lattice invertibility and visible simplicity.
    Oracle {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        lattice: LatticeArgs,
        /// Witness range for visible simplicity (default 2 x spread).
        #[arg(long)]
        window: Option<usize>,
    },
    /// Boundary algebra of the lifted QCA at a cut.
    Boundary {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        torus: String,
        /// Defaults to the lift axis.
        #[arg(long)]
        axis: Option<usize>,
        #[arg(long, default_value_t = 3)]
        cut: usize,
        #[arg(long, default_value_t = 1)]
        window: usize,
    },
    /// Check that gamma blends alpha (low side) into beta (high side).
    BlendVerify {
        /// QCA source: JSON path, `lift:<spec>`, or `identity`.
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        torus: String,
        #[arg(long, default_value_t = 0)]
        axis: usize,
        #[arg(long)]
        cut: usize,
        #[arg(long, default_value_t = 1)]
        window: usize,
    },
    /// Lower bound on the distance between two automorphisms.
    Dist {
        /// QCA source, `identity`, or `global-x-flip`.
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        torus: String,
        #[arg(long, default_value_t = 2)]
        max_support: usize,
        /// Prime for builtin automorphisms when no QCA fixes it.
        #[arg(long, default_value_t = 2)]
        prime: u32,
        /// Qudits per site for builtin automorphisms when no QCA fixes it.
        #[arg(long, default_value_t = 1)]
        qudits: usize,
    },
    /// Topological spin by the T-junction exchange process.
    Spin {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value = "13x13")]
        torus: String,
        /// Charge per term type, e.g. `1` or `1,0`.
        #[arg(long, default_value = "1")]
        charge: String,
        #[arg(long, default_value_t = 5)]
        leg: i64,
    },
    /// Gauss-sum phase of a set of abelian spins.
    Gauss {
        /// Spins as fractions of a turn, e.g. `0,1/3,1/3`. Without this the
        /// spins of every charge of `--spec` are computed.
        #[arg(long)]
        spins: Option<String>,
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value = "13x13")]
        torus: String,
        #[arg(long, default_value_t = 5)]
        leg: i64,
    },
}

pub fn parse_sizes(text: &str) -> Result<Vec<usize>> {
    text.split(['x', 'X'])
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Usage(format!("bad lattice size {text:?}"))))
        .collect()
}

/// Resolves a builtin name or reads a spec JSON file.
pub fn parse_spec(source: &str) -> Result<SubalgebraSpec> {
    match builtin_spec(source) {
        Ok(s) => Ok(s),
        Err(_) if Path::new(source).exists() => {
            let text = std::fs::read_to_string(source).map_err(|e| Error::Usage(format!("{source}: {e}")))?;
            SubalgebraSpec::from_json(&text)
        }
        Err(e) => Err(e),
    }
}

fn lattice_for(spec: &SubalgebraSpec, args: &LatticeArgs) -> Result<FiniteLattice> {
    match (&args.torus, &args.patch) {
        (Some(t), None) => FiniteLattice::torus(spec.prime(), spec.q(), parse_sizes(t)?),
        (None, Some(p)) => FiniteLattice::patch(spec.prime(), spec.q(), parse_sizes(p)?),
        _ => Err(Error::Usage("give exactly one of --torus or --patch".into())),
    }
}

fn ratio(lattice: &FiniteLattice, spread: u32) -> Value {
    let r = lattice.size_spread_ratio(spread);
    if r.is_finite() {
        json!(r)
    } else {
        Value::Null
    }
}

enum QcaSource {
    Qca(CliffordQCA),
    Identity,
    GlobalXFlip,
}

fn parse_qca(source: &str) -> Result<QcaSource> {
    match source {
        "identity" => Ok(QcaSource::Identity),
        "global-x-flip" => Ok(QcaSource::GlobalXFlip),
        s if s.starts_with("lift:") => Ok(QcaSource::Qca(lift_to_qca(&parse_spec(&s[5..])?)?)),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("{path}: {e}")))?;
            Ok(QcaSource::Qca(CliffordQCA::from_json(&text)?))
        }
    }
}

fn finite_automorphisms(
    sources: &[QcaSource],
    sizes: Vec<usize>,
    default_ring: (u32, usize),
) -> Result<Vec<FiniteSymplecticAutomorphism>> {
    let (p, q) = sources
        .iter()
        .find_map(|s| match s {
            QcaSource::Qca(u) => Some((u.prime(), u.q())),
            _ => None,
        })
        .unwrap_or(default_ring);
    let lattice = FiniteLattice::torus(p, q, sizes)?;
    sources
        .iter()
        .map(|s| match s {
            QcaSource::Qca(u) => instantiate_qca(u, &lattice),
            QcaSource::Identity => Ok(FiniteSymplecticAutomorphism::identity(lattice.clone())),
            QcaSource::GlobalXFlip => Err(Error::Usage("global-x-flip is only available for dist".into())),
        })
        .collect()
}

#[derive(Serialize)]
struct Certificate<T: Serialize> {
    command: &'static str,
    spec: Option<String>,
    spread: Option<u32>,
    #[serde(flatten)]
    body: T,
}

fn cert<T: Serialize>(command: &'static str, spec: Option<(&str, &SubalgebraSpec)>, body: T) -> Value {
    serde_json::to_value(Certificate {
        command,
        spec: spec.map(|(n, _)| n.to_string()),
        spread: spec.map(|(_, s)| s.spread()),
        body,
    })
    .expect("certificate serializes")
}

/// Runs one command, returning the exit status and the certificate.
pub fn run(command: &Command) -> Result<(i32, Value)> {
    match command {
        Command::Check(a) => {
            let spec = parse_spec(a.name())?;
            let c = check_invertible(&spec)?;
            let code = if c.invertible { 0 } else { 1 };
            Ok((code, cert("check", Some((a.name(), &spec)), c)))
        }
        Command::Commutant(a) => {
            let spec = parse_spec(a.name())?;
            let b = commutant_generators(&spec)?;
            let conj = same_span(&b, &spec.conjugate()).ok();
            let body = json!({ "commutant": b.to_json_value(), "equals_conjugate": conj });
            Ok((0, cert("commutant", Some((a.name(), &spec)), body)))
        }
        Command::Project(a) => {
            let spec = parse_spec(a.name())?;
            match build_projector(&spec) {
                Ok(pi) => {
                    let body = json!({
                        "projector": pi.matrix.to_strings(),
                        "projector_spread": pi.spread,
                        "identities_verified": true,
                    });
                    Ok((0, cert("project", Some((a.name(), &spec)), body)))
                }
                Err(Error::NotInvertibleSubalgebra) => {
                    let body = json!({ "invertible": false, "projector": Value::Null });
                    Ok((1, cert("project", Some((a.name(), &spec)), body)))
                }
                Err(e) => Err(e),
            }
        }
        Command::Lift(a) => {
            let spec = parse_spec(a.name())?;
            let u = lift_to_qca(&spec)?;
            let body = json!({
                "qca": u.to_json_value(),
                "symplectic": crate::qca::is_symplectic(u.q(), u.matrix()),
                "inverse": u.inverse().matrix().to_strings(),
                "qca_spread": u.spread(),
            });
            Ok((0, cert("lift", Some((a.name(), &spec)), body)))
        }
        Command::Oracle { spec: a, lattice, window } => {
            let spec = parse_spec(a.name())?;
            let l = lattice_for(&spec, lattice)?;
            let s = instantiate_spec(&spec, &l)?;
            let fin = check_invertible_finite(&s, &l);
            let range = window.unwrap_or(2 * spec.spread().max(1) as usize);
            let vs = check_vs(&s, &l, range);
            let symbolic = check_invertible(&spec)?.invertible;
            let well_separated = l.size_spread_ratio(spec.spread()) > 4.0;
            // on open patches a center is expected; it must hug the boundary
            let boundary_center =
                if l.periodic { None } else { Some(center_near_boundary(&s, &l, 2 * spec.spread() as usize)?) };
            let body = json!({
                "center_at_boundary": boundary_center,
                "lattice": l.describe(),
                "lattice_spread_ratio": ratio(&l, spec.spread()),
                "finite": fin,
                "vs": vs,
                "symbolic_invertible": symbolic,
                "agrees_with_symbolic": fin.invertible == symbolic,
                "well_separated": well_separated,
            });
            let holds = match &boundary_center {
                Some(c) => c.holds,
                None => fin.invertible,
            };
            let code = if holds { 0 } else { 1 };
            Ok((code, cert("oracle", Some((a.name(), &spec)), body)))
        }
        Command::Boundary { spec: a, torus, axis, cut, window } => {
            let spec = parse_spec(a.name())?;
            let u = lift_to_qca(&spec)?;
            let l = FiniteLattice::torus(spec.prime(), spec.q(), parse_sizes(torus)?)?;
            let axis = axis.unwrap_or(spec.dims());
            let alpha = instantiate_qca(&u, &l)?;
            let r = boundary_algebra_finite(&alpha, axis, *cut, *window)?;
            let equals_spec = if axis == spec.dims() {
                Some(r.boundary == instantiate_spec_on_sheet(&spec, &l, axis, *cut)?)
            } else {
                None
            };
            let ok = r.factorizes && equals_spec != Some(false);
            let body = json!({
                "lattice": l.describe(),
                "lattice_spread_ratio": ratio(&l, u.spread()),
                "qca_spread": u.spread(),
                "boundary": r,
                "equals_spec_on_cut_sheet": equals_spec,
            });
            Ok((if ok { 0 } else { 1 }, cert("boundary", Some((a.name(), &spec)), body)))
        }
        Command::BlendVerify { gamma, alpha, beta, torus, axis, cut, window } => {
            let sources = [parse_qca(gamma)?, parse_qca(alpha)?, parse_qca(beta)?];
            let autos = finite_automorphisms(&sources, parse_sizes(torus)?, (3, 2))?;
            let r = verify_blend(&autos[0], &autos[1], &autos[2], *axis, *cut, *window)?;
            let code = if r.holds { 0 } else { 1 };
            Ok((code, cert("blend-verify", None, json!({ "torus": torus, "blend": r }))))
        }
        Command::Dist { alpha, beta, torus, max_support, prime, qudits } => {
            let sources = [parse_qca(alpha)?, parse_qca(beta)?];
            let sizes = parse_sizes(torus)?;
            let (p, q) = sources
                .iter()
                .find_map(|s| match s {
                    QcaSource::Qca(u) => Some((u.prime(), u.q())),
                    _ => None,
                })
                .unwrap_or((*prime, *qudits));
            let lattice = FiniteLattice::torus(p, q, sizes)?;
            let n = lattice.q * lattice.num_sites();
            let autos = sources
                .iter()
                .map(|s| match s {
                    QcaSource::Qca(u) => PhasedAutomorphism::from_symplectic(&instantiate_qca(u, &lattice)?),
                    QcaSource::Identity => Ok(PhasedAutomorphism::identity(p, n)),
                    QcaSource::GlobalXFlip => Ok(PhasedAutomorphism::global_x_flip(p, n)),
                })
                .collect::<Result<Vec<_>>>()?;
            let r = dist_bounded(&autos[0], &autos[1], q, *max_support)?;
            Ok((0, cert("dist", None, json!({ "lattice": lattice.describe(), "dist": r }))))
        }
        Command::Spin { spec, torus, charge, leg } => {
            let model = builtin_model(spec.name())?;
            let l = FiniteLattice::torus(model.spec.prime(), model.spec.q(), parse_sizes(torus)?)?;
            let h = build_hamiltonian(&model, &l)?;
            let charge: Vec<u32> = charge
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| Error::Usage(format!("bad charge {charge:?}"))))
                .collect::<Result<_>>()?;
            let r = spin_with_checks(&h, &charge, *leg)?;
            let ok = r.invariance_checks.iter().all(|c| c.pass);
            let body = json!({
                "lattice": l.describe(),
                "lattice_spread_ratio": ratio(&l, model.spec.spread()),
                "spin": r,
            });
            Ok((if ok { 0 } else { 1 }, cert("spin", Some((spec.name(), &model.spec)), body)))
        }
        Command::Gauss { spins, spec, torus, leg } => {
            let (list, source) = match spins {
                Some(text) => (parse_spins(text)?, Value::Null),
                None => {
                    let model = builtin_model(spec.name())?;
                    let l = FiniteLattice::torus(model.spec.prime(), model.spec.q(), parse_sizes(torus)?)?;
                    let h = build_hamiltonian(&model, &l)?;
                    let p = l.p;
                    let t = model.terms.len();
                    let mut list = Vec::new();
                    let mut charges = Vec::new();
                    for idx in 0..(p as usize).pow(t as u32) {
                        let charge: Vec<u32> = (0..t).map(|k| (idx / (p as usize).pow(k as u32)) as u32 % p).collect();
                        let theta = if charge.iter().all(|&c| c == 0) {
                            0
                        } else {
                            crate::anyon::topological_spin(
                                &h,
                                &charge,
                                &crate::anyon::Junction::standard(l.sizes.iter().map(|s| s / 2).collect(), *leg),
                            )?
                            .theta_exponent
                        };
                        list.push(Spin::new(theta as i64, p as u64));
                        charges.push(json!({ "charge": charge, "theta_exponent": theta }));
                    }
                    (list, json!({ "model": spec.name(), "lattice": l.describe(), "anyons": charges }))
                }
            };
            let g = gauss_sum_phase(&list)?;
            let body = json!({
                "spins": list,
                "source": source,
                "gauss": g,
                "phase": format!("exp(2 pi i {}/8)", g.eighth_root),
                "central_charge_mod_8": g.eighth_root,
            });
            Ok((0, cert("gauss", None, body)))
        }
    }
}

fn parse_spins(text: &str) -> Result<Vec<Spin>> {
    text.split(',')
        .map(|item| {
            let item = item.trim();
            let bad = || Error::Usage(format!("bad spin {item:?}; expected n or n/d"));
            match item.split_once('/') {
                Some((n, d)) => {
                    Ok(Spin::new(n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?))
                }
                None => Ok(Spin::new(item.parse().map_err(|_| bad())?, 1)),
            }
        })
        .collect()
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotInvertibleSubalgebra => 1,
        _ => 2,
    }
}

/// Parses arguments, runs the command and writes the certificate.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli.command) {
        Ok((code, value)) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON") + "\n";
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return 2;
                    }
                }
                None => print!("{text}"),
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
