mod args;
mod commands;
mod config;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use zagier_core::exact::BernoulliCache;

use args::{parse_identities, Cli, Command};
use commands::{cmd_converge, cmd_eval, cmd_table, cmd_verify, Failure, Outcome};
use config::RunConfig;

fn run(cli: Cli, cfg: &RunConfig) -> Outcome {
    if cfg.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot size thread pool: {e}")))?;
    }
    if let Some(path) = &cfg.cache_path {
        if path.exists() {
            BernoulliCache::global().absorb(path)?;
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Eval { n, x, method } => cmd_eval(*method, *n, x.as_deref(), cfg, &mut out),
        Command::Table { n, step, x, method, compare } => {
            cmd_table(*method, n, *step, x.as_deref(), *compare, cfg, &mut out)
        }
        Command::Verify { identity, n_max } => {
            let ids = parse_identities(identity).map_err(Failure::Usage)?;
            cmd_verify(&ids, *n_max, cfg, &mut out, &mut io::stderr())
        }
        Command::Converge { series, n, x, terms } => cmd_converge(*series, *n, x, terms, cfg, &mut out),
    };
    out.flush()?;
    if let Some(path) = &cfg.cache_path {
        BernoulliCache::global().save(path)?;
    }
    result
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cfg = match RunConfig::resolve(&cli.global, std::env::var("ZAGIER_CACHE").ok()) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(cli, &cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Check => eprintln!("error: one or more checks failed"),
                Failure::Usage(m) | Failure::NonConvergence(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
