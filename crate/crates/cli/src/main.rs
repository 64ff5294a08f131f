//! Command-line front end for the λ-model ground-state engine.
//!
//! Exit codes: 0 success; 1 usage, parse, or I/O errors; 2 internal
//! inconsistency (symbolic and oracle routes disagree — never expected);
//! 3 depth limit exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use lambda_model::analysis::{
    enumerate_all, verify_all, verify_periodic_at, verify_weakly_periodic_at, AnalysisError,
    RunStatus, VerdictReport,
};
use lambda_model::configurations::{AnySpec, RootConvention};
use lambda_model::group_words::SubgroupDescriptor;
use lambda_model::model::{parse_decimal, LambdaParams};
use lambda_model::report::{
    analyze_spec, classify_params, render_analysis, render_params, render_verdict, ReportFormat,
};
use lambda_model::tree::TreeError;

/// Overridable soft cap on oracle depth (`LAMBDA_MODEL_MAX_DEPTH`); the
/// library's own hard cap still applies above it.
const DEFAULT_DEPTH_CAP: u32 = 12;

#[derive(Parser)]
#[command(
    name = "lambda-model",
    version,
    about = "Exact ground-state analysis of the lambda-model on the order-two Cayley tree"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Markdown,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> ReportFormat {
        match f {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Markdown => ReportFormat::Markdown,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichArg {
    Periodic,
    WeaklyPeriodic,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RootRuleArg {
    H0,
    H1,
    Both,
}

impl RootRuleArg {
    fn rules(self) -> Vec<RootConvention> {
        match self {
            RootRuleArg::H0 => vec![RootConvention::ParentInH0],
            RootRuleArg::H1 => vec![RootConvention::ParentInH1],
            RootRuleArg::Both => RootConvention::BOTH.to_vec(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a parameter point: the ten class energies, the minimum, and
    /// the classes attaining it.
    ClassifyParams {
        /// Exact decimal for a, e.g. "1.5" or "-2".
        #[arg(long)]
        a: String,
        /// Exact decimal for b.
        #[arg(long)]
        b: String,
        /// Exact decimal for c.
        #[arg(long)]
        c: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Symbolically analyze one spec: kind, realized classes with witnesses,
    /// exact ground-state region.
    AnalyzeSpec {
        /// "wp:" + four spin digits, or "p:" + two, spins in 1..=3.
        #[arg(long)]
        spec: String,
        /// Generator j defining the index-two subgroup H_{j} (1..=3).
        #[arg(long, default_value_t = 1)]
        subgroup: u8,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Process all 81 weakly periodic specs: classes, regions, catalog
    /// matches, carriers, and findings. Purely symbolic.
    Enumerate {
        /// Generator j defining the index-two subgroup H_{j} (1..=3).
        #[arg(long, default_value_t = 1)]
        subgroup: u8,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Re-derive the classical ground-state results and cross-check the
    /// symbolic route against the finite-tree oracle.
    Verify {
        /// Which theorem to verify.
        #[arg(value_enum, default_value_t = WhichArg::All)]
        which: WhichArg,
        /// Oracle tree depth.
        #[arg(long, default_value_t = 6)]
        depth: u32,
        /// Root parent-coset convention(s) for oracle runs.
        #[arg(long, value_enum, default_value_t = RootRuleArg::Both)]
        root_rule: RootRuleArg,
        /// Seed for the sampled oracle spot-check points.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

enum CliError {
    Usage(String),
    Internal(String),
    Depth(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Internal(_) => 2,
            CliError::Depth(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Internal(m) | CliError::Depth(m) => m,
        }
    }
}

fn from_analysis(e: AnalysisError) -> CliError {
    match e {
        AnalysisError::Tree(TreeError::DepthCap { requested, cap }) => {
            CliError::Depth(format!("depth {requested} exceeds the library cap {cap}"))
        }
        AnalysisError::Tree(TreeError::EmptyInterior { .. })
        | AnalysisError::UnsoundDepth { .. } => CliError::Usage(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

fn depth_cap() -> Result<u32, CliError> {
    match std::env::var("LAMBDA_MODEL_MAX_DEPTH") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid LAMBDA_MODEL_MAX_DEPTH value {raw:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_DEPTH_CAP),
        Err(e) => Err(CliError::Usage(format!(
            "unreadable LAMBDA_MODEL_MAX_DEPTH: {e}"
        ))),
    }
}

fn subgroup_arg(j: u8) -> Result<SubgroupDescriptor, CliError> {
    SubgroupDescriptor::single(j, 2).map_err(|e| CliError::Usage(e.to_string()))
}

fn params_arg(a: &str, b: &str, c: &str) -> Result<LambdaParams, CliError> {
    let parse = |name: &str, s: &str| {
        parse_decimal(s).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
    };
    Ok(LambdaParams::new(
        parse("a", a)?,
        parse("b", b)?,
        parse("c", c)?,
    ))
}

fn emit(output: &OutputArgs, rendered: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

/// Emit the verdict, then fail if it records an internal inconsistency: the
/// report always gets written, so a mismatch remains inspectable.
fn emit_verdict(report: &VerdictReport, output: &OutputArgs) -> Result<(), CliError> {
    emit(output, &render_verdict(report, output.format.into()))?;
    match report.status() {
        RunStatus::Pass => Ok(()),
        RunStatus::InternalMismatch => Err(CliError::Internal(
            "symbolic and oracle routes disagree; see the report for the mismatching rows"
                .to_owned(),
        )),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::ClassifyParams { a, b, c, output } => {
            let p = params_arg(&a, &b, &c)?;
            emit(
                &output,
                &render_params(&classify_params(&p), output.format.into()),
            )
        }
        Command::AnalyzeSpec {
            spec,
            subgroup,
            output,
        } => {
            let parsed = AnySpec::parse(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
            let a = subgroup_arg(subgroup)?;
            let report = analyze_spec(&parsed, &a).map_err(from_analysis)?;
            emit(&output, &render_analysis(&report, output.format.into()))
        }
        Command::Enumerate { subgroup, output } => {
            let a = subgroup_arg(subgroup)?;
            let report = enumerate_all(&a).map_err(from_analysis)?;
            emit_verdict(&report, &output)
        }
        Command::Verify {
            which,
            depth,
            root_rule,
            seed,
            output,
        } => {
            let cap = depth_cap()?;
            if depth > cap {
                return Err(CliError::Depth(format!(
                    "--depth {depth} exceeds the configured cap {cap}"
                )));
            }
            let rules = root_rule.rules();
            let report = match which {
                WhichArg::Periodic => verify_periodic_at(depth, &rules),
                WhichArg::WeaklyPeriodic => verify_weakly_periodic_at(depth, seed, &rules),
                WhichArg::All => verify_all(depth, seed, &rules),
            }
            .map_err(from_analysis)?;
            emit_verdict(&report, &output)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            // clap's own printer routes help to stdout, errors to stderr.
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
