use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use uqrs_core::report::Report;
use uqrs_core::rmatrix::{
    build_r, build_r_z, check_braid_constant, check_min_poly, check_module_morphism, check_ybe_spectral, jimbo_compare,
};
use uqrs_core::scalars::{BigRat, Params, Sampled, Scalar, Symbolic};
use uqrs_core::uqrs::{
    check_defining_relations, highest_weight_vectors, hopf_antipode_check, natural_rep, tensor_power_rep,
    weight_spaces, Representation,
};
use uqrs_core::wedge::{build_wedge_module, spectral_projector_check, verify_fundamental};

use crate::json;

#[derive(Parser, Debug)]
#[command(name = "uqrs", version, about = "Exact computations in U_{r,s}(sl_n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Rank parameter: V is n-dimensional.
    #[arg(short = 'n', global = true)]
    pub n: Option<usize>,
    /// Tensor power or wedge degree.
    #[arg(short = 'k', global = true)]
    pub k: Option<usize>,
    #[arg(long, value_enum, global = true)]
    pub mode: Option<ModeArg>,
    /// Shorthand for `--mode symbolic`.
    #[arg(long, global = true)]
    pub symbolic: bool,
    /// Sample value of r (sampled mode, default 2).
    #[arg(long = "r", global = true, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// Sample value of s (sampled mode, default 3).
    #[arg(long = "s", global = true, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Write JSON here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum ModeArg {
    Symbolic,
    Sampled,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Natural module, tensor powers, and relation checks.
    Rep {
        #[command(subcommand)]
        action: RepAction,
    },
    /// The constant R-matrix, or R(z) at a rational z.
    Rmatrix {
        #[arg(short = 'z', allow_hyphen_values = true)]
        z: Option<String>,
        /// Emit the pencil R(z) = A + zB instead.
        #[arg(long, conflicts_with = "z")]
        spectral: bool,
    },
    /// Run one verification suite.
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
    /// The wedge module of degree k.
    Wedge {
        #[command(subcommand)]
        action: Option<WedgeAction>,
    },
    /// Weight spaces and highest weight vectors of V, V^{⊗k}, or a wedge module.
    Weights {
        /// Use the wedge module of degree k instead of V^{⊗k}.
        #[arg(long)]
        wedge: bool,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum RepAction {
    Natural,
    Tensor,
    /// Check the defining relations on V^{⊗k} (k = 1 by default).
    Check,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum VerifyCheck {
    Ybe,
    Braid,
    Minpoly,
    /// R_i commutes with the action on V^{⊗k} (k = 2 by default).
    Morphism,
    Hopf,
    /// Always symbolic: compares with the one-parameter R(z).
    Jimbo,
    /// Image and kernel of R(z) at z = rs⁻¹ and z = r⁻¹s.
    Prop41,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum WedgeAction {
    /// Highest weight, weights, dimension and cyclicity.
    Verify,
}

/// Why a run produced no passing result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Invalid configuration (exit code 2).
    Config(String),
    /// A construction failed its internal verification (exit code 1).
    Failed(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Config(m) | Self::Failed(m) => f.write_str(m),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Config(_) => 2,
            Self::Failed(_) => 1,
        }
    }
}

/// JSON result of a run and whether every requested check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub json: Value,
    pub passed: bool,
}

impl Outcome {
    fn artifact(json: Value) -> Self {
        Self { json, passed: true }
    }

    fn report<F: Scalar>(report: &Report<F>, params: Value) -> Self {
        let mut json = json::report(report);
        json.as_object_mut().unwrap().insert("params".into(), params);
        Self { passed: report.passed(), json }
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn parse_rational(name: &str, text: &str) -> Result<BigRat, CliError> {
    BigRat::from_str(text.trim()).map_err(|_| CliError::Config(format!("{name} = {text:?} is not a rational number")))
}

fn config<E: fmt::Display>(e: E) -> CliError {
    CliError::Config(e.to_string())
}

fn failed<E: fmt::Display>(e: E) -> CliError {
    CliError::Failed(e.to_string())
}

enum Field {
    Symbolic,
    Sampled(Sampled),
}

fn field(cli: &Cli) -> Result<Field, CliError> {
    let symbolic = match (cli.mode, cli.symbolic) {
        (Some(ModeArg::Sampled), true) => return Err(CliError::Config("--symbolic conflicts with --mode sampled".into())),
        (Some(ModeArg::Symbolic), _) | (None, true) => true,
        _ => false,
    };
    if symbolic {
        if cli.r.is_some() || cli.s.is_some() {
            return Err(CliError::Config("--r and --s apply only in sampled mode".into()));
        }
        return Ok(Field::Symbolic);
    }
    let r0 = cli.r.as_deref().map_or(Ok(BigRat::from_int(2)), |t| parse_rational("r", t))?;
    let s0 = cli.s.as_deref().map_or(Ok(BigRat::from_int(3)), |t| parse_rational("s", t))?;
    Sampled::new(r0, s0).map(Field::Sampled).map_err(config)
}

fn require_n(cli: &Cli, min: usize) -> Result<usize, CliError> {
    let n = cli.n.ok_or_else(|| CliError::Config("missing -n".into()))?;
    if n < min {
        return Err(CliError::Config(format!("n = {n} must be at least {min}")));
    }
    Ok(n)
}

fn require_k(cli: &Cli) -> Result<usize, CliError> {
    cli.k.ok_or_else(|| CliError::Config("missing -k".into()))
}

/// Runs the parsed command.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match field(cli)? {
        Field::Symbolic => run_in(cli, &Symbolic, json!({ "mode": "symbolic" })),
        Field::Sampled(p) => {
            let params = json!({ "mode": "sampled", "r": p.r0().to_string(), "s": p.s0().to_string() });
            run_in(cli, &p, params)
        }
    }
}

fn module<P: Params>(cli: &Cli, p: &P, n: usize, default_k: usize) -> Result<Representation<P::F>, CliError> {
    let k = cli.k.unwrap_or(default_k);
    let v = natural_rep(p, n).map_err(config)?;
    tensor_power_rep(&v, k).map_err(config)
}

fn run_in<P: Params>(cli: &Cli, p: &P, params: Value) -> Result<Outcome, CliError> {
    let out = match &cli.command {
        Command::Rep { action } => {
            let n = require_n(cli, 2)?;
            match action {
                RepAction::Natural => Outcome::artifact(json::representation(&natural_rep(p, n).map_err(config)?)),
                RepAction::Tensor => {
                    require_k(cli)?;
                    Outcome::artifact(json::representation(&module(cli, p, n, 1)?))
                }
                RepAction::Check => Outcome::report(&check_defining_relations(p, &module(cli, p, n, 1)?), params),
            }
        }
        Command::Rmatrix { z, spectral } => {
            let n = require_n(cli, 1)?;
            if *spectral {
                Outcome::artifact(json::spectral(&build_r_z(p, n).map_err(failed)?))
            } else if let Some(z) = z {
                let z = P::F::from_rat(&parse_rational("z", z)?);
                Outcome::artifact(json::matrix(&build_r_z(p, n).map_err(failed)?.eval(&z)))
            } else {
                Outcome::artifact(json::matrix(&build_r(p, n)))
            }
        }
        Command::Verify { check } => match check {
            VerifyCheck::Ybe => Outcome::report(&check_ybe_spectral(p, require_n(cli, 1)?).map_err(failed)?, params),
            VerifyCheck::Braid => Outcome::report(&check_braid_constant(p, require_n(cli, 1)?), params),
            VerifyCheck::Minpoly => Outcome::report(&check_min_poly(p, require_n(cli, 2)?), params),
            VerifyCheck::Morphism => {
                let k = cli.k.unwrap_or(2);
                if k < 2 {
                    return Err(CliError::Config(format!("k = {k} must be at least 2")));
                }
                Outcome::report(&check_module_morphism(p, require_n(cli, 2)?, k).map_err(config)?, params)
            }
            VerifyCheck::Hopf => Outcome::report(&hopf_antipode_check(&module(cli, p, require_n(cli, 2)?, 1)?), params),
            VerifyCheck::Jimbo => {
                Outcome::report(&jimbo_compare(require_n(cli, 1)?).map_err(failed)?, json!({ "mode": "symbolic" }))
            }
            VerifyCheck::Prop41 => {
                Outcome::report(&spectral_projector_check(p, require_n(cli, 2)?).map_err(failed)?, params)
            }
        },
        Command::Wedge { action } => {
            let (n, k) = (require_n(cli, 2)?, require_k(cli)?);
            let m = build_wedge_module(p, n, k).map_err(failed)?;
            match action {
                None => Outcome::artifact(json::wedge_module(&m)),
                Some(WedgeAction::Verify) => Outcome::report(&verify_fundamental(p, &m).map_err(failed)?, params),
            }
        }
        Command::Weights { wedge } => {
            let n = require_n(cli, 2)?;
            let rep = if *wedge {
                build_wedge_module(p, n, require_k(cli)?).map_err(failed)?.induced().clone()
            } else {
                module(cli, p, n, 1)?
            };
            weights(p, &rep)?
        }
    };
    Ok(out)
}

fn weights<P: Params>(p: &P, rep: &Representation<P::F>) -> Result<Outcome, CliError> {
    let spaces = weight_spaces(p, rep).map_err(failed)?;
    let highest = highest_weight_vectors(p, rep).map_err(failed)?;
    let spaces: Vec<Value> = spaces
        .iter()
        .rev()
        .map(|(w, s)| {
            let basis: Vec<usize> = s.pivots().map(|i| i + 1).collect();
            json!({ "weight": json::weight(w), "dim": s.dim(), "basis": basis })
        })
        .collect();
    let highest: Vec<Value> = highest
        .iter()
        .map(|(v, w)| json!({ "weight": json::weight(w), "vector": json::vector(v) }))
        .collect();
    Ok(Outcome::artifact(json!({
        "n": rep.n(),
        "dim": rep.dim(),
        "weight_spaces": spaces,
        "highest_weight_vectors": highest,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome, CliError> {
        run(&Cli::try_parse_from(std::iter::once("uqrs").chain(args.iter().copied())).unwrap())
    }

    #[test]
    fn genericity_violation_is_a_config_error() {
        let err = run_args(&["rep", "natural", "-n", "2", "--r", "2", "--s", "2"]).unwrap_err();
        assert_eq!(err, CliError::Config("r = s violates genericity".into()));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn symbolic_mode_rejects_samples() {
        assert!(matches!(run_args(&["rep", "natural", "-n", "2", "--symbolic", "--r", "2"]), Err(CliError::Config(_))));
    }

    #[test]
    fn wedge_3_2_has_dim_3() {
        let out = run_args(&["wedge", "-n", "3", "-k", "2"]).unwrap();
        assert_eq!(out.json["dim"], 3);
        assert_eq!(out.json["labels"], json!([[1, 2], [1, 3], [2, 3]]));
    }

    #[test]
    fn minpoly_passes() {
        let out = run_args(&["verify", "minpoly", "-n", "3", "--mode", "sampled", "--r", "2", "--s", "3"]).unwrap();
        assert!(out.passed);
        assert_eq!(out.exit_code(), 0);
    }

    #[test]
    fn failed_report_exits_one_with_witness() {
        use uqrs_core::linalg::Matrix;
        let p = Sampled::default();
        let r = build_r(&p, 2);
        let mut report = Report::new("corrupted");
        report.check_eq("R=I", &r, &Matrix::identity(4));
        let out = Outcome::report(&report, json!({}));
        assert!(!out.passed);
        assert_eq!(out.exit_code(), 1);
        let w = &out.json["witnesses"][0];
        assert_eq!(w["relation"], "R=I");
        assert_eq!(w["witness_basis_index"], 2);
        assert_eq!(w["lhs"], json!([[3, "2"]]));
        assert_eq!(w["rhs"], json!([[2, "1"]]));
    }

    #[test]
    fn spectral_at_zero_is_constant() {
        let at_zero = run_args(&["rmatrix", "-n", "2", "-z", "0"]).unwrap();
        let constant = run_args(&["rmatrix", "-n", "2"]).unwrap();
        assert_eq!(at_zero, constant);
        let pencil = run_args(&["rmatrix", "-n", "2", "--spectral"]).unwrap();
        assert_eq!(pencil.json["A"], constant.json);
    }
}
