use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hb_core::cells::{Assignment, CellError};
use hb_core::harness::{parse_cochar, parse_m, parse_restrict, run, Command, Format, HarnessError, RunConfig};

/// Spread-out Hilbert-Burch matrices and Bialynicki-Birula cells on Hilb^d(A^2).
///
/// Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
#[derive(Parser, Debug)]
#[command(name = "hbcells", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Staircase m_1,...,m_t (non-decreasing, m_t >= 1)
    #[arg(long = "m", global = true, value_name = "M", allow_hyphen_values = true)]
    m: Option<String>,

    /// Cocharacter alpha,beta
    #[arg(long, global = true, value_name = "ALPHA,BETA", allow_hyphen_values = true)]
    cochar: Option<String>,

    /// Keep only these parameters, e.g. a[1,2,2],a[2,1,2]
    #[arg(long, global = true, value_name = "TAGS")]
    restrict: Option<String>,

    /// JSON file mapping parameter tags to rationals
    #[arg(long, global = true, value_name = "FILE")]
    assign: Option<PathBuf>,

    /// Number of random cell points for `verify`
    #[arg(long, global = true, default_value_t = 25)]
    samples: usize,

    /// Seed for the sampling stream
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Append y^(t*m_t) to the minors (the minus construction)
    #[arg(long = "pi-minus", global = true)]
    pi_minus: bool,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Cmd {
    /// Staircase data, degree matrices and the parameter registry
    Staircase,
    /// The spread-out matrix, optionally restricted
    Matrix,
    /// res_E and the flatness/finiteness verdicts
    Resultant,
    /// Cell restriction for a cocharacter
    Cell,
    /// Matrix and minors at an assignment
    Specialize,
    /// Colength and torus limit at an assignment
    Limit,
    /// Rank of the tangent map at the origin
    Tangent,
    /// Random points of a cell checked for colength and limit
    Verify,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Staircase => Command::Staircase,
            Cmd::Matrix => Command::Matrix,
            Cmd::Resultant => Command::Resultant,
            Cmd::Cell => Command::Cell,
            Cmd::Specialize => Command::Specialize,
            Cmd::Limit => Command::Limit,
            Cmd::Tangent => Command::Tangent,
            Cmd::Verify => Command::Verify,
        }
    }
}

fn config(cli: &Cli) -> Result<RunConfig, HarnessError> {
    let m = cli.m.as_deref().ok_or_else(|| HarnessError::Usage("--m is required".into()))?;
    let mut cfg = RunConfig::new(cli.command.into(), parse_m(m)?);
    cfg.cocharacter = cli.cochar.as_deref().map(parse_cochar).transpose()?;
    cfg.restrict = cli.restrict.as_deref().map(parse_restrict).transpose()?;
    if let Some(path) = &cli.assign {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HarnessError::Usage(format!("--assign {}: {e}", path.display())))?;
        cfg.assignment = Some(Assignment::from_json(&text)?);
    }
    cfg.samples = cli.samples;
    cfg.seed = cli.seed;
    cfg.format = if cli.json { Format::Json } else { Format::Text };
    cfg.pi_minus = cli.pi_minus;
    Ok(cfg)
}

fn exit_code(err: &HarnessError) -> u8 {
    match err {
        HarnessError::Usage(_)
        | HarnessError::Cell(
            CellError::InvalidStaircase(_)
            | CellError::UnknownParameter(_)
            | CellError::OffCell(_)
            | CellError::Assignment(_),
        ) => 2,
        HarnessError::Cell(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match config(&cli).and_then(|cfg| run(&cfg)) {
        Ok((out, ok)) => {
            print!("{out}");
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(err) => {
            eprintln!("hbcells: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
