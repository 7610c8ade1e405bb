//! `ferrers`: edge ideals of Ferrers graphs from the command line.
//!
//! Exit codes: 0 success (and, for `certify`, a passing certificate),
//! 1 internal inconsistency or failed certification, 2 bad input,
//! 3 enumeration budget exceeded.

use std::process::exit;

use clap::{Args, Parser, Subcommand};

use ferrers::render::{render_diagram, MachineDiagram, RenderTooLarge};
use ferrers::report::{
    human_analysis, human_certification, human_decomposition, human_diagonals, human_oracle,
    MachineCertification, MachineOracle, MachineReport, EVIDENCE_NOTE,
};
use ferrers_core::certificate::verify_sv;
use ferrers_core::ideal::{edge_generators, full_decomposition, minimal_decomposition};
use ferrers_core::invariants::{invariant_report, InternalInconsistency};
use ferrers_core::oracle::{membership_equality, variety_equal, OracleError, DEFAULT_BUDGET};
use ferrers_core::shape::{Partition, PartitionError};
use ferrers_core::{diagonal_certificate, sv_sums, Polynomial};

#[derive(Parser)]
#[command(
    name = "ferrers",
    version,
    about = "Edge ideals of Ferrers graphs: diagonal generators, certificates, invariants, oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report (mu, ara, pd, cd, height, corners, STCI)
    Analyze(CommonArgs),
    /// The diagonal sums q_1..q_mu, one per line
    Diagonals(CommonArgs),
    /// Build the diagonal certificate and verify its three conditions
    Certify(CommonArgs),
    /// Both prime decompositions, redundant components marked
    Decompose(CommonArgs),
    /// Brute-force evidence: variety equality and membership equality
    Oracle(OracleArgs),
    /// Draw the Ferrers diagram with ascending-diagonal indices
    Render(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Partition as comma-separated parts, e.g. 6,4,4,2,1
    lambda: String,
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Field order for the variety comparison
    #[arg(long, default_value_t = 2, value_parser = supported_prime)]
    field: u32,
    /// Enumeration cap per check (points or monomials)
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
}

fn supported_prime(s: &str) -> Result<u32, String> {
    let value: u32 = s.parse().map_err(|_| format!("{s:?} is not an integer"))?;
    if [2, 3, 5, 7].contains(&value) {
        Ok(value)
    } else {
        Err(format!(
            "field order must be one of 2, 3, 5, 7 (got {value})"
        ))
    }
}

enum CliError {
    BadInput(String),
    BudgetExceeded(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            CliError::BadInput(_) => 2,
            CliError::BudgetExceeded(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::BadInput(m) | CliError::BudgetExceeded(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<PartitionError> for CliError {
    fn from(err: PartitionError) -> Self {
        CliError::BadInput(err.to_string())
    }
}

impl From<RenderTooLarge> for CliError {
    fn from(err: RenderTooLarge) -> Self {
        CliError::BadInput(err.to_string())
    }
}

impl From<InternalInconsistency> for CliError {
    fn from(err: InternalInconsistency) -> Self {
        CliError::Internal(err.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(err: OracleError) -> Self {
        match err {
            OracleError::BudgetExceeded { .. } => CliError::BudgetExceeded(err.to_string()),
            // A dimension mismatch cannot come from CLI input; it means the
            // generators and the point enumeration disagree about the ring.
            OracleError::DimensionMismatch { .. } => CliError::Internal(err.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => exit(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            exit(err.exit_code());
        }
    }
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Analyze(args) => {
            let p = Partition::parse(&args.lambda)?;
            if args.json {
                let report = MachineReport::build(&p)?;
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                print!("{}", human_analysis(&invariant_report(&p)?));
            }
            Ok(0)
        }
        Command::Diagonals(args) => {
            let p = Partition::parse(&args.lambda)?;
            if args.json {
                let report = MachineReport::build(&p)?;
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                print!("{}", human_diagonals(&p));
            }
            Ok(0)
        }
        Command::Certify(args) => {
            let p = Partition::parse(&args.lambda)?;
            let cert = diagonal_certificate(&p);
            let report = verify_sv(&cert).map_err(|e| CliError::Internal(e.to_string()))?;
            if args.json {
                let machine = MachineCertification::build(&p, &cert, &report);
                println!(
                    "{}",
                    serde_json::to_string_pretty(&machine).expect("serializable")
                );
            } else {
                print!("{}", human_certification(&p, &cert, &report));
            }
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Decompose(args) => {
            let p = Partition::parse(&args.lambda)?;
            if args.json {
                let report = MachineReport::build(&p)?;
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                print!("{}", human_decomposition(&p));
            }
            Ok(0)
        }
        Command::Oracle(args) => {
            let p = Partition::parse(&args.common.lambda)?;
            let report = run_oracle(&p, args.field, args.budget)?;
            if args.common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                print!("{}", human_oracle(&p, &report));
            }
            Ok(0)
        }
        Command::Render(args) => {
            let p = Partition::parse(&args.lambda)?;
            if args.json {
                let diagram = MachineDiagram {
                    lambda: p.parts().to_vec(),
                    rows: ferrers::render::diagram_rows(&p)?,
                    mu: p.mu(),
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&diagram).expect("serializable")
                );
            } else {
                print!("lambda = {p}\n{}", render_diagram(&p)?);
            }
            Ok(0)
        }
    }
}

fn run_oracle(p: &Partition, field: u32, budget: u64) -> Result<MachineOracle, CliError> {
    let gens: Vec<Polynomial> = edge_generators(p)
        .into_iter()
        .map(|m| Polynomial::monomial_sum(vec![m]))
        .collect();
    let sums = sv_sums(&diagonal_certificate(p));
    let dims = (p.row_count(), p.col_count());
    let variety = variety_equal(&gens, &sums, field, dims, budget)?;
    let full = membership_equality(p, &full_decomposition(p), budget)?;
    let minimal = membership_equality(p, &minimal_decomposition(p), budget)?;
    Ok(MachineOracle {
        lambda: p.parts().to_vec(),
        field,
        budget,
        variety_equal: (&variety).into(),
        membership_full: (&full).into(),
        membership_minimal: (&minimal).into(),
        note: EVIDENCE_NOTE.to_string(),
    })
}
