use std::path::PathBuf;
use std::process::ExitCode;
use std::rc::Rc;

use anyhow::{bail, Context, Result};
use clap::{Parser, ValueEnum};
use dnc::cache::default_cache_dir;
use dnc::{parse_problem, run_command, run_command_with_store, Command, DiskCache};
use dnc_core::rees::FiberKind;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum At {
    Special,
    Generic,
}

/// Derived deformation to the normal cone, Rees algebras and blow-ups over Q.
#[derive(Debug, Parser)]
#[command(name = "dnc", version)]
struct Cli {
    /// One of: rees, fiber, normal-cone, blowup, exceptional, compare-deformation,
    /// compare-blowup, infnbhd, check-inf, check-excessive, deformation-as-blowup,
    /// homology, pi0.
    command: String,
    #[arg(long)]
    input: PathBuf,
    /// Internal-degree cutoff D; overrides the input file.
    #[arg(long)]
    cutoff: Option<u32>,
    /// Weight range `a..b`.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Homological degree range `a..b`.
    #[arg(long)]
    hdeg: Option<String>,
    #[arg(long)]
    no_cache: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fiber for `fiber`.
    #[arg(long, value_enum, default_value = "generic")]
    at: At,
    /// Order n for `infnbhd`.
    #[arg(long, default_value_t = 1)]
    level: u32,
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s.split_once("..").with_context(|| format!("expected a..b, got `{s}`"))?;
    let (a, b): (i64, i64) = (a.trim().parse()?, b.trim().parse()?);
    if a > b {
        bail!("empty range {a}..{b}");
    }
    Ok((a, b))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let text = std::fs::read_to_string(&cli.input).with_context(|| format!("reading {}", cli.input.display()))?;
    let mut spec = parse_problem(&text).with_context(|| format!("parsing {}", cli.input.display()))?;
    if let Some(c) = cli.cutoff {
        spec.cutoff = c;
    }
    if let Some(w) = &cli.weight {
        spec.weights = Some(parse_range(w)?);
    }
    if let Some(h) = &cli.hdeg {
        let (a, b) = parse_range(h)?;
        spec.hdegs = Some((u32::try_from(a).context("negative hdeg")?, u32::try_from(b).context("negative hdeg")?));
    }
    let command = match cli.command.parse::<Command>()? {
        Command::Fiber(_) => Command::Fiber(match cli.at {
            At::Special => FiberKind::Special,
            At::Generic => FiberKind::Generic,
        }),
        Command::Infnbhd(_) => Command::Infnbhd(cli.level),
        c => c,
    };
    let report = if cli.no_cache {
        run_command(&spec, command)?
    } else {
        let store = Rc::new(DiskCache::new(default_cache_dir()));
        run_command_with_store(&spec, command, store)?
    };
    let text = report.render(true);
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
