mod args;
mod report;
mod run;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use dpt_core::algebra::interval::default_floor;
use dpt_core::algebra::rational::parse_rational;
use dpt_core::par::Exec;
use serde::Deserialize;

use args::{Cli, OutputFormat};
use run::{CliError, CliResult, Settings};

/// Defaults read from `--config`. Flags on the command line win.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RunConfig {
    output: Option<OutputFormat>,
    seed: Option<u64>,
    precision: Option<String>,
    deep: Option<bool>,
    sequential: Option<bool>,
}

fn load_config(path: &Path) -> CliResult<RunConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| CliError::Config(e.to_string()))
}

fn settings(cli: &Cli) -> CliResult<Settings> {
    let cfg = match &cli.config {
        Some(p) => load_config(p)?,
        None => RunConfig::default(),
    };
    let floor = match cli.precision.as_ref().or(cfg.precision.as_ref()) {
        Some(s) => {
            let q = parse_rational(s)?;
            if q <= dpt_core::Rational::from_integer(0.into()) {
                return Err(dpt_core::Error::invalid("precision must be positive").into());
            }
            q
        }
        None => default_floor(),
    };
    Ok(Settings {
        output: cli.output.or(cfg.output).unwrap_or(OutputFormat::Json),
        seed: cli.seed.or(cfg.seed).unwrap_or(0),
        floor,
        deep: cli.deep || cfg.deep.unwrap_or(false),
        exec: if cfg.sequential.unwrap_or(false) {
            Exec::Sequential
        } else {
            Exec::Parallel
        },
    })
}

fn emit(r: &report::Report, fmt: OutputFormat) {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match r.render(fmt, &mut lock).and_then(|_| lock.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => eprintln!("error: writing report: {e}"),
        _ => {}
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let s = match settings(&cli) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let start = Instant::now();
    let stamp = |mut r: report::Report| {
        r.command = echo.clone();
        if cli.timing {
            r.timing_ms = Some(start.elapsed().as_millis() as u64);
        }
        r
    };
    match run::run(&cli.command, &s) {
        Ok(r) => {
            let r = stamp(r);
            emit(&r, s.output);
            ExitCode::from(run::success_code(&r) as u8)
        }
        Err(CliError::Mismatch(r, deltas)) => {
            emit(&stamp(*r), s.output);
            eprintln!("error: regression mismatch");
            for d in deltas {
                eprintln!("  {d}");
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
