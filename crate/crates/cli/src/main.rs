//! `subfit`: JSON reports for the checks in `subfit-core`.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2
//! when the input cannot be used.

mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use subfit_core::symbolic::counterexample::{DEFAULT_BOUND, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "subfit",
    version,
    about = "Subfitness checks for finite and symbolic lattices"
)]
struct Cli {
    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for sweeps (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural predicates of one poset file.
    Check { file: String },
    /// The join-subfit elements of a join-semilattice with top.
    SubfitElements { file: String },
    /// Runs the witness construction for `a ∨ b = 1`, `t ≰ s`.
    ///
    /// Elements are given by label or by index; `#N` always means index N.
    Witness {
        file: String,
        a: String,
        b: String,
        s: String,
        t: String,
    },
    /// Builds the distributive envelope of a bounded join-semilattice.
    Envelope { file: String },
    /// The dual space of a distributive lattice, with round-trip checks.
    Dualize { file: String },
    /// Exhaustive sweep over all structures up to `--max-n` elements.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum)]
        verify: Verify,
    },
    /// Sampled and exact checks of the infinite counterexample.
    Counterexample {
        /// Claims to run, e.g. `1,2,3`. Defaults to all six unless only
        /// `--space` is given.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<u8>>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest explicit support element drawn by the sampler.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
        /// Also run the checks on the symbolic spectral space.
        #[arg(long)]
        space: bool,
    },
    /// Duality sweeps over all finite spaces up to `--max-n` points.
    SpaceCheck {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Verify {
    Thm21,
    Thm42,
    Prop52,
    Cor53,
    Union,
    Idealsubfit,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let result = match &cli.command {
        Command::Check { file } => commands::check(file),
        Command::SubfitElements { file } => commands::subfit_elements(file),
        Command::Witness { file, a, b, s, t } => commands::witness(file, [a, b, s, t]),
        Command::Envelope { file } => commands::envelope(file),
        Command::Dualize { file } => commands::dualize(file),
        Command::Enumerate { max_n, verify } => commands::enumerate(*max_n, *verify),
        Command::Counterexample {
            claims,
            samples,
            seed,
            bound,
            space,
        } => {
            let claims = match (claims, space) {
                (Some(c), _) => c.clone(),
                (None, true) => Vec::new(),
                (None, false) => (1..=6).collect(),
            };
            commands::counterexample(&claims, *samples, *seed, *bound, *space)
        }
        Command::SpaceCheck { max_n } => commands::space_check(*max_n),
    };
    let mut report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let text = if cli.pretty {
        serde_json::to_string_pretty(&report)
    } else {
        serde_json::to_string(&report)
    };
    println!("{}", text.expect("reports serialize"));
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
