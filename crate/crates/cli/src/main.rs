use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use harmid::config::{Filter, Format, RunConfig};
use harmid::eval::{evaluate, parse_binding, EvalFailure};
use harmid::{list, run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use harmid_core::registry::{registry, IdentityClass};
use harmid_core::sumlang::Bindings;
use harmid_core::Rational;

#[derive(Parser)]
#[command(name = "harmid", version, about = "Verify identities between sums of generalized harmonic numbers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List catalog identities.
    List {
        #[command(flatten)]
        filter: FilterArgs,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Check identities and print a report; exits 1 if any fails.
    ///
    /// Setting HARMID_INJECT_FAULT=<id> shifts that identity's right-hand
    /// side by one, which must make the run fail.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Same checks as `verify`, written as a full report with timings.
    Report {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value = "md")]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate an expression: exactly when it is rational, numerically otherwise.
    Eval {
        expr: String,
        /// Variable binding, e.g. `--set N=10` or `--set z=1/2`.
        #[arg(long = "set", value_parser = parse_binding)]
        set: Vec<(String, Rational)>,
        #[command(flatten)]
        num: NumArgs,
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct FilterArgs {
    /// Identity id; repeat or separate with commas.
    #[arg(long, value_delimiter = ',')]
    id: Vec<String>,
    /// Identity class: finite, infinite, power, alternating or reference.
    #[arg(long, value_delimiter = ',')]
    class: Vec<String>,
}

#[derive(Args)]
struct NumArgs {
    /// Significant decimal digits.
    #[arg(long, env = "HARMID_DIGITS", default_value_t = 30)]
    digits: u32,
    /// Terms summed before the tail correction.
    #[arg(long, default_value_t = 10_000)]
    trunc_n: u64,
    /// Order of the tail expansion.
    #[arg(long, default_value_t = 10)]
    tail_order: u32,
    /// Tolerance floor for heuristic bounds [default: 1e-12, or 10^-(digits-10) if larger].
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    filter: FilterArgs,
    #[command(flatten)]
    num: NumArgs,
    /// Seed for the randomized general-identity checks (decimal or 0x hex).
    #[arg(long, value_parser = parse_seed)]
    seed: Option<u64>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Include per-identity times in the report.
    #[arg(long)]
    timings: bool,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    r.map_err(|e| format!("bad seed `{s}`: {e}"))
}

fn filter(args: &FilterArgs) -> Result<Filter, String> {
    let classes = args.class.iter().map(|c| c.parse::<IdentityClass>().map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    let reg = registry();
    for id in &args.id {
        reg.lookup(id).map_err(|e| e.to_string())?;
    }
    Ok(Filter { ids: args.id.clone(), classes })
}

fn config(num: &NumArgs, format: Format) -> Result<RunConfig, String> {
    let floor = 10f64.powi(-(num.digits as i32 - 10));
    let cfg = RunConfig {
        digits: num.digits,
        trunc_n: num.trunc_n,
        tail_order: num.tail_order,
        tol: num.tol.unwrap_or(1e-12f64.max(floor)),
        format,
        ..RunConfig::default()
    };
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn run_config(args: &RunArgs, format: Format, timings: bool) -> Result<RunConfig, String> {
    let mut cfg = config(&args.num, format)?;
    cfg.filter = filter(&args.filter)?;
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    cfg.jobs = args.jobs;
    cfg.timings = timings;
    cfg.inject_fault = std::env::var("HARMID_INJECT_FAULT").ok().filter(|s| !s.is_empty());
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn render(report: &harmid::Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Md => report.to_markdown(),
        Format::Text => report.to_text(),
    }
}

fn usage(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn verify(cfg: &RunConfig, output: Option<&PathBuf>) -> i32 {
    let report = match run(cfg) {
        Ok(r) => r,
        Err(e) => return usage(&e.to_string()),
    };
    let text = render(&report, cfg.format);
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_FAIL;
            }
        }
        None => emit(&text),
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::List { filter: f, format } => match filter(&f) {
            Ok(f) => {
                let recs: Vec<_> = registry().enumerate(None).into_iter().filter(|r| f.accepts(&r.id, r.class)).collect();
                emit(&list::render(&recs, format));
                EXIT_OK
            }
            Err(e) => usage(&e),
        },
        Cmd::Verify { run, format } => match run_config(&run, format, run.timings) {
            Ok(cfg) => verify(&cfg, None),
            Err(e) => usage(&e),
        },
        Cmd::Report { run, format, output } => match run_config(&run, format, true) {
            Ok(cfg) => verify(&cfg, output.as_ref()),
            Err(e) => usage(&e),
        },
        Cmd::Eval { expr, set, num, format } => match config(&num, format) {
            Ok(cfg) => {
                let bindings: Bindings = set.into_iter().collect();
                match evaluate(&expr, &bindings, &cfg) {
                    Ok(out) => {
                        emit(&match format {
                            Format::Json => out.to_json(),
                            Format::Md => out.to_markdown(),
                            Format::Text => out.to_text(),
                        });
                        EXIT_OK
                    }
                    Err(EvalFailure::Parse(diag)) => {
                        eprintln!("{diag}");
                        EXIT_USAGE
                    }
                    Err(EvalFailure::Eval(e)) => {
                        eprintln!("error: {e}");
                        EXIT_FAIL
                    }
                }
            }
            Err(e) => usage(&e),
        },
    };
    ExitCode::from(code as u8)
}
