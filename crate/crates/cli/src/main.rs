//! `taukit`: big test ideals, tight interiors, Cartier chains, conductor
//! ideals, and a verification suite for quotients of polynomial rings over
//! small prime fields.
//!
//! Exit codes: 0 success, 1 usage or parse failure, 2 precondition
//! violation, 3 non-stabilization, 4 verification failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use taukit_cli::report::{render_ideal, CheckRecord, ResultDocument, Verdict};
use taukit_cli::runner::{self, conductor_verdict_record, SuiteOptions, SUITE_NAMES};
use taukit_cli::spec::parse_ring_spec;
use taukit_core::conductor::{
    conductor_auto, conductor_identities_check, semigroup_conductor, stanley_reisner_conductor,
    finite_transform_check, ConductorMethod, ConductorResult,
};
use taukit_core::interior::{
    big_test_ideal_for_ring, big_test_ideal_with_element, cartier_chain_down, find_test_element,
    tight_interior_of_ideal, TauComputation,
};
use taukit_core::parse::parse_polynomial;
use taukit_core::{AlgebraError, Ideal, Polynomial, RingPresentation};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    RingFile { path: String, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::RingFile { .. } => 1,
            CliError::Algebra(e) => match e {
                AlgebraError::Parse { .. } | AlgebraError::Internal(_) => 1,
                AlgebraError::Precondition(_) | AlgebraError::UnsupportedInput(_) => 2,
                AlgebraError::NotStabilized { .. } => 3,
            },
        }
    }
}

#[derive(Parser)]
#[command(
    name = "taukit",
    version,
    about = "Test ideals and tight interiors over small prime fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Big test ideal of the quotient ring.
    Tau(CommonArgs),
    /// Tight interior of a module ideal.
    Interior(CommonArgs),
    /// Descending chain of iterated Cartier images from a starting ideal.
    Chain(CommonArgs),
    /// F-purity of the quotient.
    Fpure(CommonArgs),
    /// Strong F-regularity of the quotient.
    Sfr(CommonArgs),
    /// Conductor ideal with comparisons against the big test ideal.
    Conductor(CommonArgs),
    /// Finite-transformation comparison for semigroup rings.
    Transform(CommonArgs),
    /// Run a named verification suite over the bundled ring corpus.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Ring description file.
    #[arg(long, value_name = "FILE")]
    ring: PathBuf,
    /// Largest Frobenius exponent in the partial sums.
    #[arg(long, default_value_t = 4, value_name = "N")]
    emax: u32,
    /// Consecutive equal partial sums required for stabilization.
    #[arg(long, default_value_t = 2, value_name = "N")]
    window: u32,
    /// Test element, overriding the ring file and the automatic search.
    #[arg(long, value_name = "EXPR")]
    test_element: Option<String>,
    /// Module ideal generators, separated by `;`.
    #[arg(long, value_name = "EXPRS")]
    module_ideal: Option<String>,
    /// Conductor route: stanley_reisner, semigroup, or supplied.
    #[arg(long, value_name = "NAME")]
    method: Option<String>,
    /// Truncation degree for oracle comparisons.
    #[arg(long, default_value_t = 4, value_name = "N")]
    degree_cap: u64,
    /// Emit canonical single-line JSON (the default).
    #[arg(long)]
    json: bool,
    /// Plain-text rendering instead of JSON.
    #[arg(long, conflicts_with = "json")]
    pretty: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name.
    #[arg(default_value = "paper")]
    suite: String,
    /// Largest Frobenius exponent in the partial sums.
    #[arg(long, default_value_t = 4, value_name = "N")]
    emax: u32,
    /// Consecutive equal partial sums required for stabilization.
    #[arg(long, default_value_t = 2, value_name = "N")]
    window: u32,
    /// Truncation degree for the oracle cells.
    #[arg(long, default_value_t = 4, value_name = "N")]
    degree_cap: u64,
    /// Emit canonical single-line JSON (the default).
    #[arg(long)]
    json: bool,
    /// Plain-text rendering instead of JSON.
    #[arg(long, conflicts_with = "json")]
    pretty: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok((doc, pretty, code)) => {
            let rendered = if pretty {
                doc.to_pretty()
            } else {
                let mut line = doc.to_json();
                line.push('\n');
                line
            };
            // A closed pipe (`taukit verify | head`) is not an error.
            use std::io::Write;
            match std::io::stdout().write_all(rendered.as_bytes()) {
                Ok(()) => ExitCode::from(code),
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(code),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load_ring(args: &CommonArgs) -> Result<RingPresentation, CliError> {
    let path = args.ring.display().to_string();
    let text = std::fs::read_to_string(&args.ring).map_err(|e| CliError::RingFile {
        path: path.clone(),
        message: e.to_string(),
    })?;
    let spec = parse_ring_spec(&text).map_err(|e| CliError::RingFile {
        path: path.clone(),
        message: e.to_string(),
    })?;
    spec.build().map_err(|e| CliError::RingFile {
        path,
        message: e.to_string(),
    })
}

/// `--test-element` beats the ring file's declaration; both are validated
/// to lie in no minimal prime before use.
fn resolve_test_element(
    rp: &RingPresentation,
    args: &CommonArgs,
) -> Result<Option<Polynomial>, CliError> {
    let (c, shown) = match &args.test_element {
        Some(expr) => (parse_polynomial(rp.ambient(), expr)?, expr.clone()),
        None => match rp.declared_test_element() {
            Some(c) => (c.clone(), c.to_string()),
            None => return Ok(None),
        },
    };
    if !rp.is_nonzerodivisor(&c)? {
        return Err(AlgebraError::precondition(format!("{shown} is a zerodivisor")).into());
    }
    if !rp.avoids_minimal_primes(&c)? {
        return Err(
            AlgebraError::precondition(format!("{shown} lies in a minimal prime")).into(),
        );
    }
    Ok(Some(c))
}

fn parse_module_ideal(rp: &RingPresentation, exprs: &str) -> Result<Ideal, CliError> {
    let mut gens = Vec::new();
    for piece in exprs.split(';') {
        let expr = piece.trim();
        if expr.is_empty() {
            return Err(CliError::Usage(
                "empty polynomial in --module-ideal".to_string(),
            ));
        }
        gens.push(parse_polynomial(rp.ambient(), expr)?);
    }
    Ok(Ideal::new(rp.ambient(), gens))
}

fn module_ideal_or_unit(rp: &RingPresentation, args: &CommonArgs) -> Result<Ideal, CliError> {
    match &args.module_ideal {
        Some(exprs) => parse_module_ideal(rp, exprs),
        None => Ok(Ideal::unit(rp.ambient())),
    }
}

fn compute_tau(rp: &RingPresentation, args: &CommonArgs) -> Result<TauComputation, CliError> {
    match resolve_test_element(rp, args)? {
        Some(c) => Ok(big_test_ideal_with_element(rp, c, args.emax, args.window)?),
        None => Ok(big_test_ideal_for_ring(rp, args.emax, args.window)?),
    }
}

fn run(command: Command) -> Result<(ResultDocument, bool, u8), CliError> {
    match command {
        Command::Tau(args) => {
            let rp = load_ring(&args)?;
            let tau = compute_tau(&rp, &args)?;
            let doc = ResultDocument::from_trace(&rp, &tau.trace)
                .with_test_element(tau.test_element.to_string());
            Ok((doc, args.pretty, 0))
        }
        Command::Interior(args) => {
            let rp = load_ring(&args)?;
            if !rp.is_reduced()? {
                return Err(AlgebraError::precondition(
                    "the interior subcommand requires a reduced ring; tau handles non-reduced quotients",
                )
                .into());
            }
            let k = module_ideal_or_unit(&rp, &args)?;
            let c = match resolve_test_element(&rp, &args)? {
                Some(c) => c,
                None => find_test_element(&rp)?,
            };
            let trace = tight_interior_of_ideal(&rp, &k, &c, args.emax, args.window)?;
            let doc =
                ResultDocument::from_trace(&rp, &trace).with_test_element(c.to_string());
            Ok((doc, args.pretty, 0))
        }
        Command::Chain(args) => {
            let rp = load_ring(&args)?;
            let start = module_ideal_or_unit(&rp, &args)?;
            let chain = cartier_chain_down(&rp, &start, args.emax, 64)?;
            let verdict = if chain.descending {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            let steps: Vec<Vec<String>> =
                chain.steps.iter().map(|s| render_ideal(&rp, s)).collect();
            let doc = ResultDocument {
                ideal: render_ideal(&rp, &chain.fixed_point),
                stabilized_at: Some((chain.steps.len() - 1) as u32),
                trace: steps,
                test_element: None,
                checks: vec![CheckRecord::new("descending", verdict, vec![], vec![])],
            };
            Ok((doc, args.pretty, 0))
        }
        Command::Fpure(args) => {
            let rp = load_ring(&args)?;
            let pure = taukit_core::cartier::is_f_pure(&rp)?;
            let verdict = if pure { Verdict::Pass } else { Verdict::Fail };
            let doc = ResultDocument::empty().with_checks(vec![CheckRecord::new(
                "f_pure",
                verdict,
                vec![pure.to_string()],
                vec!["true".to_string()],
            )]);
            Ok((doc, args.pretty, 0))
        }
        Command::Sfr(args) => {
            let rp = load_ring(&args)?;
            let tau = compute_tau(&rp, &args)?;
            let regular = tau.trace.result.is_unit_ideal();
            let verdict = if regular { Verdict::Pass } else { Verdict::Fail };
            let check = CheckRecord::new(
                "strongly_f_regular",
                verdict,
                render_ideal(&rp, &tau.trace.result),
                vec!["1".to_string()],
            );
            let doc = ResultDocument::from_trace(&rp, &tau.trace)
                .with_test_element(tau.test_element.to_string())
                .with_checks(vec![check]);
            Ok((doc, args.pretty, 0))
        }
        Command::Conductor(args) => {
            let rp = load_ring(&args)?;
            let conductor = match args.method.as_deref() {
                None => conductor_auto(&rp)?,
                Some("stanley_reisner") => stanley_reisner_conductor(&rp)?,
                Some("semigroup") => semigroup_conductor(&rp)?.0,
                Some("supplied") => {
                    let exprs = args.module_ideal.as_deref().ok_or_else(|| {
                        CliError::Usage(
                            "--method supplied requires --module-ideal with the conductor generators"
                                .to_string(),
                        )
                    })?;
                    ConductorResult {
                        ideal: parse_module_ideal(&rp, exprs)?,
                        method: ConductorMethod::Supplied,
                    }
                }
                Some(other) => {
                    return Err(CliError::Usage(format!(
                        "unknown conductor method `{other}`"
                    )))
                }
            };
            let tau = compute_tau(&rp, &args)?;
            let verdicts = conductor_identities_check(&rp, &tau.trace.result, &conductor)?;
            let checks = verdicts
                .iter()
                .map(|v| conductor_verdict_record(v.name, v))
                .collect();
            let doc = ResultDocument {
                ideal: render_ideal(&rp, &conductor.ideal),
                stabilized_at: Some(tau.trace.stabilized_at),
                trace: tau
                    .trace
                    .partial_sums
                    .iter()
                    .map(|s| render_ideal(&rp, s))
                    .collect(),
                test_element: Some(tau.test_element.to_string()),
                checks,
            };
            Ok((doc, args.pretty, 0))
        }
        Command::Transform(args) => {
            let rp = load_ring(&args)?;
            let tau = compute_tau(&rp, &args)?;
            let out = finite_transform_check(&rp, &tau.trace.result, args.emax)?;
            let verdict = if out.matches { Verdict::Pass } else { Verdict::Fail };
            let check = CheckRecord::new(
                "finite_transformation",
                verdict,
                render_ideal(&rp, &out.lhs),
                render_ideal(&rp, &out.rhs),
            );
            let doc = ResultDocument::from_trace(&rp, &tau.trace)
                .with_test_element(tau.test_element.to_string())
                .with_checks(vec![check]);
            Ok((doc, args.pretty, 0))
        }
        Command::Verify(args) => {
            if !SUITE_NAMES.contains(&args.suite.as_str()) {
                return Err(CliError::Usage(format!("unknown suite `{}`", args.suite)));
            }
            let records = runner::run_suite(SuiteOptions {
                e_max: args.emax,
                window: args.window,
                degree_cap: args.degree_cap,
            })?;
            let code = runner::exit_code_for(&records);
            let doc = ResultDocument::empty().with_checks(records);
            Ok((doc, args.pretty, code))
        }
    }
}
