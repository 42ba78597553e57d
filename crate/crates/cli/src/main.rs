use clap::{Parser, Subcommand};
use jacobi_mult_cli::config::Format;
use jacobi_mult_cli::{execute, resolve_config, write_outputs, Command, Overrides};
use std::path::PathBuf;
use std::process::ExitCode;

/// Reproducible multiplier experiments on Jacobi and ultraspherical expansions.
#[derive(Debug, Parser)]
#[command(name = "jmult", version)]
struct Cli {
    /// JSON experiment config; the built-in default is used without one.
    #[arg(long, global = true, env = "JMULT_CONFIG")]
    config: Option<PathBuf>,
    /// Output directory for reports, dumps and the manifest.
    #[arg(long, global = true, env = "JMULT_OUT")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, env = "JMULT_FORMAT")]
    format: Option<Format>,
    #[arg(long, global = true, env = "JMULT_SEED")]
    seed: Option<u64>,
    #[arg(long, global = true, env = "JMULT_MAX_DEGREE")]
    max_degree: Option<usize>,
    /// Worker threads; the output does not depend on it.
    #[arg(long, global = true, env = "JMULT_JOBS", default_value_t = 1,
          value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Exact identities and closed-form oracles.
    Identities,
    /// Sweep a functional over the parameter grid (`all` runs every default).
    Sweep { functional: String },
    /// Synthesize from coefficients and check the analysis round trip.
    Reconstruct,
    /// Multiplier-norm lower bounds over the standard trial family.
    NormBound,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cmd = match cli.command {
        Sub::Identities => Command::Identities,
        Sub::Sweep { functional } => Command::Sweep(functional),
        Sub::Reconstruct => Command::Reconstruct,
        Sub::NormBound => Command::NormBound,
    };
    let overrides = Overrides {
        seed: cli.seed,
        max_degree: cli.max_degree,
        format: cli.format,
        out: cli.out,
    };
    let run = || -> jacobi_mult_cli::error::Result<i32> {
        let cfg = resolve_config(&cmd, cli.config.as_deref(), &overrides)?;
        let mut out = execute(&cmd, &cfg, cli.jobs as usize)?;
        for w in &out.manifest.warnings {
            eprintln!("warning: {w}");
        }
        let path = write_outputs(&cmd, &cfg, &mut out)?;
        println!(
            "{}: {} rows, {} failing -> {}",
            cmd.stem(),
            out.rows.len(),
            out.failures(),
            path.display()
        );
        Ok(out.exit_code())
    };
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
