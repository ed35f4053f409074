use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, ValueEnum};

use charres::problem::{load_problem, run_problem, RunOptions};
use charres::render::{render_pretty, render_structured};
use charres::{budget, Error};

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pretty,
    Structured,
    Both,
}

#[derive(Parser)]
#[command(
    name = "charres",
    version,
    about = "Minimal free resolutions and group characters on them"
)]
struct Cli {
    /// Problem file (TOML)
    problem: PathBuf,

    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,

    /// Write structured output to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,

    /// Extra verification to run; currently only "molien"
    #[arg(long)]
    check: Vec<String>,

    /// Truncation degree for power-series checks
    #[arg(long)]
    degree_bound: Option<u32>,

    /// Worker threads for per-element propagation (0 = all cores)
    #[arg(long)]
    threads: Option<usize>,

    /// Abort with a timeout error after this many seconds
    #[arg(long)]
    timeout: Option<u64>,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Invariance { .. } | Error::Containment(_) => 2,
        Error::Parse { .. } | Error::Usage(_) => 3,
        Error::Unsupported(_) | Error::UnsupportedConjugation | Error::ReducibleMinPoly => 4,
        Error::Timeout => 6,
        _ => 5,
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    for c in &cli.check {
        if c != "molien" {
            return Err(Error::Usage(format!("unknown check '{c}'")));
        }
    }
    #[cfg(feature = "parallel")]
    if let Some(k) = cli.threads {
        if k > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global()
                .map_err(|e| Error::Usage(format!("thread pool: {e}")))?;
        }
    }
    let source = std::fs::read_to_string(&cli.problem)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", cli.problem.display())))?;
    let problem = load_problem(&source)?;
    let opts = RunOptions {
        degree_bound: cli.degree_bound,
        check_molien: cli.check.iter().any(|c| c == "molien"),
        reverse_lift: false,
    };
    let deadline = cli.timeout.map(|s| Instant::now() + Duration::from_secs(s));
    let outputs = budget::with_deadline(deadline, || run_problem(&problem, &opts))?;

    if matches!(cli.format, Format::Pretty | Format::Both) {
        print!("{}", render_pretty(&problem.field, &outputs));
    }
    if matches!(cli.format, Format::Structured | Format::Both) {
        let doc = render_structured(&problem.field, &outputs);
        let text = serde_json::to_string_pretty(&doc).expect("serializable document");
        match &cli.output {
            Some(path) => std::fs::write(path, text + "\n")
                .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?,
            None => println!("{text}"),
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
