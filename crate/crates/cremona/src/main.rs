use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cremona::{cmd_analyze, cmd_chow, cmd_construct, cmd_theorem_b, Report, RunConfig, RunError, Tier};
use cremona_core::families::Family;

#[derive(Parser)]
#[command(name = "cremona", version, about = "Construct and analyze quarto-quartic Cremona transformations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member and write it as a fixture.
    Construct(Common),
    /// Analyze a fixture.
    Analyze {
        fixture: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// One member per family, the invariant table and the dimension row.
    #[command(name = "theoremB")]
    TheoremB(Common),
    /// Intersection numbers on P1 x P3 x P3.
    Chow(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = cremona_core::algebra::DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "D", value_parser = parse_family)]
    family: Family,
    #[arg(long, default_value_t = 4)]
    d: u32,
    #[arg(long, value_enum, default_value_t = TierArg::Fast)]
    tier: TierArg,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Record wall-clock time per family (makes reports non-reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Fast,
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| format!("unknown family `{s}` (expected J, R, D, C or loria)"))
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            prime: self.prime,
            seed: self.seed,
            family: self.family,
            d: self.d,
            tier: match self.tier {
                TierArg::Fast => Tier::Fast,
                TierArg::Full => Tier::Full,
            },
            timings: self.timings,
        }
    }

    fn emit(&self, text: &str) -> Result<(), RunError> {
        match &self.out {
            Some(p) => std::fs::write(p, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }

    fn emit_report(&self, r: &Report) -> Result<ExitCode, RunError> {
        match self.format {
            Format::Json => self.emit(&r.to_json())?,
            Format::Text => self.emit(&r.to_text())?,
        }
        let failures = r.failures();
        for f in &failures {
            eprintln!("FAIL {f}");
        }
        Ok(if failures.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
    }
}

fn run(cli: Cli) -> Result<ExitCode, RunError> {
    match cli.command {
        Command::Construct(c) => {
            c.emit(&cmd_construct(&c.config())?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { fixture, common } => {
            let text = std::fs::read_to_string(&fixture)?;
            common.emit_report(&cmd_analyze(&text, &common.config())?)
        }
        Command::TheoremB(c) => c.emit_report(&cmd_theorem_b(&c.config())?),
        Command::Chow(c) => c.emit_report(&cmd_chow(&c.config())),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
