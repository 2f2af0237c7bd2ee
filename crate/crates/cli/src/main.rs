use std::path::PathBuf;
use std::process::ExitCode;

use branchcone_cli::config::parse_point;
use branchcone_cli::{run, CliError, Command, Format, JobConfig};
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    Facets,
    Rays,
    Check,
    Verify,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Fmt {
    Tsv,
    Json,
}

/// Inequalities and extremal rays of saturated branching cones.
#[derive(Debug, Parser)]
#[command(name = "branchcone", version)]
struct Args {
    /// Defaults to the job file's `command`.
    command: Option<Cmd>,
    /// Job file.
    #[arg(long)]
    config: PathBuf,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Fmt>,
    /// Largest N tried when looking for invariants.
    #[arg(long)]
    nmax: Option<u32>,
    /// Largest Weyl group the engine will enumerate.
    #[arg(long)]
    weyl_cap: Option<usize>,
    /// Point for `check`, as "mu ; muhat".
    #[arg(long)]
    point: Option<String>,
    /// Also search for an invariant witness in `check`.
    #[arg(long)]
    witness: bool,
}

fn execute(args: Args) -> Result<bool, CliError> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", args.config.display())))?;
    let mut cfg: JobConfig = text.parse()?;
    let command = match args.command {
        Some(Cmd::Facets) => Command::Facets,
        Some(Cmd::Rays) => Command::Rays,
        Some(Cmd::Check) => Command::Check,
        Some(Cmd::Verify) => Command::Verify,
        None => cfg.command.ok_or_else(|| CliError::Parse("no command given".into()))?,
    };
    if let Some(f) = args.format {
        cfg.format = match f {
            Fmt::Tsv => Format::Tsv,
            Fmt::Json => Format::Json,
        };
    }
    if let Some(n) = args.nmax {
        if n == 0 {
            return Err(CliError::Parse("--nmax must be positive".into()));
        }
        cfg.nmax = n;
    }
    if let Some(n) = args.weyl_cap {
        if n == 0 {
            return Err(CliError::Parse("--weyl-cap must be positive".into()));
        }
        cfg.weyl_cap = n;
    }
    if let Some(p) = &args.point {
        cfg.point = Some(parse_point(p)?);
    }
    cfg.witness |= args.witness;
    let out = args.out.or_else(|| cfg.output.as_ref().map(PathBuf::from));

    let report = run(&cfg, command)?;
    let text = report.render(cfg.format);
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    match execute(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("branchcone: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
