//! `folctl`: foliation files in, deterministic JSON reports out.
//!
//! Exit codes: 0 ok, 1 mathematical failure, 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use folcore::foliation::FoliationPresentation;
use serde_json::Value;

use folctl::commands::{self, Outcome};
use folctl::error::CliError;
use folctl::file::FoliationFile;
use folctl::{cache, report};

#[derive(Parser)]
#[command(name = "folctl", version, about = "Exact invariants of polynomial singular foliations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Add a `timing` field to the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Involutivity certificate or counterexample.
    Check { file: PathBuf },
    /// Tangent space, rank, isotropy and linear isotropy at a point.
    Point {
        file: PathBuf,
        /// Comma-separated rationals, e.g. `1/2,0`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Geometric resolution with exactness verdict.
    Resolve {
        file: PathBuf,
        /// Longest chain to compute; defaults to `n + 2`.
        #[arg(long)]
        max_length: Option<usize>,
        /// Directory for cached results keyed by input digest.
        #[arg(long, env = "FOLCTL_CACHE")]
        cache: Option<PathBuf>,
    },
    /// Almost-Lie algebroid bracket and its verdicts.
    Algebroid { file: PathBuf },
    /// 2-Lie algebroid over a length-two resolution.
    TwoAlgebroid { file: PathBuf },
    /// Koszul Lie-infinity algebroid of a polynomial.
    Koszul {
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
        /// Comma-separated variable names; defaults to those of `phi` in order of appearance.
        #[arg(long)]
        vars: Option<String>,
    },
    /// Lift to the blow-up charts at the origin.
    Blowup {
        file: PathBuf,
        /// 1-based chart; all charts when omitted.
        #[arg(long)]
        chart: Option<usize>,
    },
    /// Emit a catalog foliation as a foliation file.
    Example {
        /// vanishing-order, special-orthogonal, annihilator, vanishing-on-ideal, tangent-to-ideal
        #[arg(long)]
        kind: String,
        /// `key=value` pairs separated by commas; lists use `;`, e.g. `vars=x;y,ideal=x^2;x*y`.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        params: String,
        /// Write the file here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Point { .. } => "point",
            Command::Resolve { .. } => "resolve",
            Command::Algebroid { .. } => "algebroid",
            Command::TwoAlgebroid { .. } => "two-algebroid",
            Command::Koszul { .. } => "koszul",
            Command::Blowup { .. } => "blowup",
            Command::Example { .. } => "example",
        }
    }
}

struct Input {
    digest: String,
    foliation: Result<FoliationPresentation, CliError>,
}

fn load(path: &Path) -> Result<Input, CliError> {
    let bytes =
        fs::read(path).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let digest = report::digest(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| CliError::Usage("foliation file is not UTF-8".into()));
    let foliation = text.and_then(|t| FoliationFile::from_json(&t)).and_then(|f| f.to_presentation());
    Ok(Input { digest, foliation })
}

/// Digest of the input and the outcome of the command.
fn run(command: &Command) -> (Option<String>, Result<Outcome, CliError>) {
    let with_file =
        |path: &Path, f: &dyn Fn(&FoliationPresentation, &str) -> Result<Outcome, CliError>| match load(path) {
            Err(e) => (None, Err(e)),
            Ok(input) => {
                let out = input.foliation.and_then(|fol| f(&fol, &input.digest));
                (Some(input.digest), out)
            }
        };
    match command {
        Command::Check { file } => with_file(file, &|f, _| Ok(commands::check(f))),
        Command::Point { file, at } => with_file(file, &|f, _| {
            let m = commands::parse_point(at, f.nvars())?;
            commands::point(f, &m)
        }),
        Command::Resolve { file, max_length, cache } => with_file(file, &|f, digest| {
            let len = max_length.unwrap_or_else(|| folcore::resolution::default_max_len(f));
            if len == 0 {
                return Err(CliError::Usage("--max-length must be positive".into()));
            }
            if let Some(hit) = cache.as_deref().and_then(|dir| cache::load(dir, digest, len)) {
                return Ok(hit);
            }
            let out = commands::resolve(f, len)?;
            if let Some(dir) = cache {
                cache::store(dir, digest, len, &out);
            }
            Ok(out)
        }),
        Command::Algebroid { file } => with_file(file, &|f, _| commands::algebroid(f)),
        Command::TwoAlgebroid { file } => with_file(file, &|f, _| commands::two_algebroid(f)),
        Command::Blowup { file, chart } => with_file(file, &|f, _| commands::blowup(f, *chart)),
        Command::Koszul { phi, max_arity, vars } => {
            let canonical = format!("phi={}\nvars={}\nmax_arity={}", phi, vars.as_deref().unwrap_or(""), max_arity);
            let out = commands::koszul_vars(phi, vars.as_deref()).and_then(|v| commands::koszul(phi, &v, *max_arity));
            (Some(report::digest(canonical.as_bytes())), out)
        }
        Command::Example { .. } => unreachable!("handled before dispatch"),
    }
}

fn emit(value: &Value, format: Format) -> std::io::Result<()> {
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(value).expect("JSON values serialize")),
        Format::Text => report::to_text(value),
    };
    std::io::stdout().write_all(text.as_bytes())
}

fn example(kind: &str, params: &str, output: Option<&Path>, format: Format) -> ExitCode {
    match commands::example(kind, params) {
        Ok(file) => {
            let text = format!("{}\n", serde_json::to_string_pretty(&file).expect("foliation files serialize"));
            let written = match output {
                Some(path) => fs::write(path, text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("folctl: {}", e);
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            let canonical = format!("kind={}\nparams={}", kind, params);
            let r = report::report("example", Some(&report::digest(canonical.as_bytes())), false, e.payload(), None);
            let _ = emit(&r, format);
            eprintln!("folctl: {}", e);
            ExitCode::from(e.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Example { kind, params, output } = &cli.command {
        return example(kind, params, output.as_deref(), cli.format);
    }
    let start = Instant::now();
    let (digest, outcome) = run(&cli.command);
    let elapsed = cli.timing.then(|| start.elapsed().as_secs_f64() * 1000.0);
    let (payload, ok, code) = match outcome {
        Ok(o) => {
            let code = if o.ok { 0 } else { 1 };
            (o.payload, o.ok, code)
        }
        Err(e) => {
            eprintln!("folctl: {}", e);
            (e.payload(), false, e.exit_code())
        }
    };
    let r = report::report(cli.command.name(), digest.as_deref(), ok, payload, elapsed);
    if let Err(e) = emit(&r, cli.format) {
        eprintln!("folctl: {}", e);
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
