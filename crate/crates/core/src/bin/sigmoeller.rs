use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::Parser;

use sigmoeller::katsura::bundled_benchmark;
use sigmoeller::problem::ProblemFile;
use sigmoeller::run::{run, Algorithm, RunOptions};
use sigmoeller::sigmoeller::Criteria;

/// Weak Gröbner bases over ℤ, ℚ, ℚ[t] and (experimentally) ℚ[y1..yk].
#[derive(Debug, Parser)]
#[command(name = "sigmoeller", version)]
struct Args {
    /// Problem file; see the README for the format.
    #[arg(required_unless_present = "bench", conflicts_with = "bench")]
    problem: Option<PathBuf>,

    /// Run a bundled benchmark instead of a file: katsura2 or katsura3.
    #[arg(long)]
    bench: Option<String>,

    /// moeller or sigmoeller.
    #[arg(long, default_value = "sigmoeller")]
    algorithm: Algorithm,

    /// none, all, or a comma-separated subset of f5,singular,syzygy.
    #[arg(long, default_value = "none")]
    criteria: Criteria,

    /// Check the output is a weak Gröbner basis generating the same ideal as
    /// the inputs.
    #[arg(long)]
    verify: bool,

    /// Print SigMöller trace events.
    #[arg(long)]
    trace: bool,

    /// Write the statistics report as JSON.
    #[arg(long, value_name = "PATH")]
    stats_json: Option<PathBuf>,

    /// Allow multivariate polynomial coefficient rings.
    #[arg(long)]
    experimental_ufd: bool,

    /// Ceiling on processed saturated sets.
    #[arg(long, default_value_t = 100_000)]
    max_iterations: u64,

    /// Wall-clock budget for the run in seconds.
    #[arg(long, value_name = "SECS")]
    time_limit: Option<f64>,
}

fn load(args: &Args) -> Result<ProblemFile, String> {
    if let Some(name) = &args.bench {
        return bundled_benchmark(name).map_err(|e| e.to_string());
    }
    let path = args.problem.as_ref().expect("clap enforces a problem or --bench");
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    ProblemFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let args = Args::parse();
    let problem = match load(&args) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let time_limit = match args.time_limit.map(Duration::try_from_secs_f64).transpose() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: --time-limit: {e}");
            return ExitCode::from(2);
        }
    };
    let opts = RunOptions {
        algorithm: args.algorithm,
        criteria: args.criteria,
        verify: args.verify,
        trace: args.trace,
        experimental_ufd: args.experimental_ufd,
        max_iterations: args.max_iterations,
        time_limit,
    };
    let report = match run(&problem, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut text = String::new();
    for line in &report.trace {
        writeln!(text, "{line}").unwrap();
    }
    for (i, g) in report.basis.iter().enumerate() {
        match &g.signature {
            Some(s) => writeln!(text, "g{} = {}    [{}]", i + 1, g.poly, s).unwrap(),
            None => writeln!(text, "g{} = {}", i + 1, g.poly).unwrap(),
        }
    }
    let s = &report.stats;
    writeln!(
        text,
        "saturated sets: {}, S-polynomials: {}, reductions to zero: {}, basis: {}, {:.1} ms",
        s.saturated_sets_considered, s.s_polynomials_reduced, s.reductions_to_zero, s.basis_size, report.wall_time_ms
    )
    .unwrap();
    match report.verified {
        Some(true) => text.push_str("verification: pass\n"),
        Some(false) => text.push_str("verification: FAIL\n"),
        None => {}
    }
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if let Some(path) = &args.stats_json {
        let json = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = std::fs::write(path, json + "\n") {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.verified == Some(false) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
