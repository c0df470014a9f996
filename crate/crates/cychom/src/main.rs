use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cychom::input::{parse_domain, read_input};
use cychom::objects::Object;
use cychom::run::{run, Command, JobConfig, Suite, Variant};
use cychom::CliError;
use cychom_core::chains::Normalize;

/// Exact simplicial, Hochschild, cyclic and de Rham homology.
///
/// Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 over budget.
#[derive(Parser)]
#[command(name = "cychom", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Homology of a simplicial set.
    Homology(Common),
    /// Hochschild homology of an algebra.
    Hh(Common),
    /// Cyclic homology, or a windowed negative/periodic variant.
    Hc(Common),
    /// Dimensions of Ωⁿ and de Rham cohomology of a commutative algebra.
    Derham(Common),
    /// List the built-in objects.
    Presets(Common),
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Built-in object, e.g. circle, bg:cyclic:2, truncpoly:2 (see `presets`).
    #[arg(long, conflicts_with = "input")]
    preset: Option<String>,
    /// JSON file describing an algebra or a simplicial set.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Group for the bare `bg` and `cyclicbar` presets.
    #[arg(long)]
    group: Option<String>,
    /// Central element making `bg` cyclic.
    #[arg(long)]
    central: Option<usize>,
    /// Second factor for `verify aw-ez`.
    #[arg(long)]
    with: Option<String>,
    /// q, zp:<p> or z.
    #[arg(long, default_value = "q")]
    domain: String,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    #[arg(long, conflicts_with = "unnormalized")]
    normalized: bool,
    #[arg(long)]
    unnormalized: bool,
    #[arg(long, value_enum, default_value_t = Variant::Cyclic)]
    variant: Variant,
    /// Window width for the negative and periodic variants.
    #[arg(long, default_value_t = 4)]
    window: usize,
    #[arg(long)]
    json: bool,
    /// Largest basis any single degree may have.
    #[arg(long, default_value_t = 1 << 20)]
    budget: u128,
}

fn config(command: Command, c: &Common) -> Result<JobConfig, CliError> {
    let object = match (&c.preset, &c.input) {
        (Some(p), _) => Some(Object::from_preset(p, c.group.as_deref(), c.central)?),
        (None, Some(path)) => Some(Object::from_file(read_input(path)?)),
        (None, None) => None,
    };
    if c.budget == 0 {
        return Err(CliError::Parse("--budget must be positive".into()));
    }
    let mut cfg = JobConfig::new(command, object);
    cfg.with = c.with.as_deref().map(|w| Object::from_preset(w, None, None)).transpose()?;
    cfg.domain = parse_domain(&c.domain)?;
    cfg.max_degree = c.max_degree;
    cfg.normalize = if c.unnormalized { Normalize::Unnormalized } else { Normalize::Normalized };
    cfg.variant = c.variant;
    cfg.window = c.window;
    cfg.budget = c.budget;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match &cli.command {
        Cmd::Homology(c) => (Command::Homology, c),
        Cmd::Hh(c) => (Command::Hh, c),
        Cmd::Hc(c) => (Command::Hc, c),
        Cmd::Derham(c) => (Command::Derham, c),
        Cmd::Presets(c) => (Command::Presets, c),
        Cmd::Verify { suite, common } => (Command::Verify(*suite), common),
    };
    let result = config(command, common).and_then(|cfg| run(&cfg));
    match result {
        Ok(report) => {
            if common.json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
