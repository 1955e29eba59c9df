use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crystal_strata::cli::{
    cmd_census, cmd_construct, cmd_crystal, cmd_example, cmd_verify, exit_code_for, CommandOutput,
    Format, RunConfig,
};
use crystal_strata::oracle::ScaleGuard;

/// Tableau crystals and top semi-module strata for GL(n), superbasic slope m/n.
///
/// Exit codes: 0 all checks pass, 1 a check failed, 2 configuration error.
/// Set CRYSTAL_SM_SCALE_OVERRIDE=1 to lift all scale guards.
#[derive(Parser)]
#[command(name = "crystal-strata", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CaseArgs {
    /// Rank n (at least 2).
    #[arg(long)]
    n: usize,
    /// Slope numerator m, coprime to n; must equal the sum of the entries of mu.
    #[arg(long)]
    m: usize,
    /// Dominant shape as a comma list, e.g. 4,3,3,2,0. A nonzero last entry
    /// is removed by a central shift (echoed in the output).
    #[arg(long, value_delimiter = ',')]
    mu: Vec<i64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CommonArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest box count for crystal generation and census cells.
    #[arg(long, default_value_t = ScaleGuard::default().max_boxes)]
    max_boxes: usize,
    /// Largest n for which n!-scans run.
    #[arg(long, default_value_t = ScaleGuard::default().max_factorial)]
    max_factorial: usize,
    /// Seed for the sampled property checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Run the built-in worked example (n=5, m=12) and diff every
    /// intermediate against the embedded expected values.
    Example {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Emit one construction report per tableau of weight lambda_b in B_mu.
    /// JSON output is one header line followed by one report per line.
    Construct {
        #[command(flatten)]
        case: CaseArgs,
    },
    /// Run all module invariants at one (n, m, mu) case and report a
    /// pass/fail summary.
    Verify {
        #[command(flatten)]
        case: CaseArgs,
    },
    /// Bijection census over all coprime (n', m') with n' <= n, m' <= m and
    /// all partitions of m' into at most n' parts. TSV columns:
    /// n, m, mu, kostka, classes_constructed, classes_bruteforce, agree.
    Census {
        /// Largest rank.
        #[arg(long)]
        n: usize,
        /// Largest slope numerator.
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Export the crystal graph of a shape as an adjacency list.
    Crystal {
        /// Rank n.
        #[arg(long)]
        n: usize,
        /// Dominant shape as a comma list with non-negative entries.
        #[arg(long, value_delimiter = ',')]
        mu: Vec<i64>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn guard_from(common: &CommonArgs) -> ScaleGuard {
    if std::env::var("CRYSTAL_SM_SCALE_OVERRIDE").is_ok_and(|v| !v.is_empty()) {
        ScaleGuard::unlimited()
    } else {
        ScaleGuard {
            max_boxes: common.max_boxes,
            max_factorial: common.max_factorial,
            max_search: ScaleGuard::default().max_search,
        }
    }
}

fn run_config(case: &CaseArgs) -> crystal_strata::Result<RunConfig> {
    RunConfig::new(
        case.n,
        case.m,
        case.mu.clone(),
        case.common.format,
        guard_from(&case.common),
        case.common.seed,
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match &cli.command {
        Command::Example { common } => (common, cmd_example(common.format)),
        Command::Construct { case } => (
            &case.common,
            run_config(case).and_then(|config| cmd_construct(&config)),
        ),
        Command::Verify { case } => (
            &case.common,
            run_config(case).and_then(|config| cmd_verify(&config)),
        ),
        Command::Census { n, m, common } => (
            common,
            cmd_census(*n, *m, common.format, &guard_from(common)),
        ),
        Command::Crystal { n, mu, common } => (
            common,
            cmd_crystal(*n, mu.clone(), common.format, &guard_from(common)),
        ),
    };
    match result {
        Ok(CommandOutput { text, failures }) => {
            if let Some(path) = &common.out {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e) as u8)
        }
    }
}
