use clap::{Parser, Subcommand};
use polyopt::arith::{alg_compare, AlgebraicNumber};
use polyopt::optimize::{optimize, OptimizationResult, Outcome, SolveConfig, SolveError};
use polyopt::oracle::{oracle_bruteforce, OracleEstimate};
use polyopt::problem::{parse_problem, ExpectedValue, ProblemFile};
use polyopt::report::{rational_string, result_json, result_text};
use std::cmp::Ordering;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

const EXIT_OK: u8 = 0;
const EXIT_PARSE: u8 = 2;
const EXIT_ASSUMPTIONS: u8 = 3;
const EXIT_RETRIES: u8 = 4;

#[derive(Parser)]
#[command(name = "polyopt", about = "Exact polynomial optimization over real algebraic sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem file and print the certified result
    Solve {
        file: PathBuf,
        /// machine-readable JSON output
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// decimal digits in value renderings
        #[arg(long, default_value_t = 30)]
        digits: usize,
        /// skip the Noether-position certification of the coordinates
        #[arg(long)]
        no_genericity_check: bool,
        #[arg(long, default_value_t = 8)]
        max_coord_retries: usize,
        #[arg(long, default_value_t = 2)]
        max_value_retries: usize,
    },
    /// Brute-force estimate (exact on sign-hypercube encodings)
    Oracle {
        file: PathBuf,
        /// grid subdivisions per axis for the penalized descent
        #[arg(long, default_value_t = 8)]
        grid: usize,
        /// penalty weight on squared constraints
        #[arg(long, default_value_t = 1000)]
        penalty: i64,
    },
    /// Solve every .pop file in a directory and check expect blocks
    Corpus {
        dir: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve {
            file,
            json,
            seed,
            digits,
            no_genericity_check,
            max_coord_retries,
            max_value_retries,
        } => {
            let config = SolveConfig {
                seed,
                max_coord_retries,
                max_value_retries,
                check_genericity: !no_genericity_check,
                ..SolveConfig::default()
            };
            solve_one(&file, &config, json, digits)
        }
        Command::Oracle { file, grid, penalty } => run_oracle(&file, grid, penalty),
        Command::Corpus { dir, seed } => run_corpus(&dir, seed),
    }
}

fn load(path: &Path) -> Result<ProblemFile, ExitCode> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(ExitCode::from(EXIT_PARSE));
        }
    };
    parse_problem(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        ExitCode::from(EXIT_PARSE)
    })
}

fn solve_error_exit(e: &SolveError) -> ExitCode {
    match e {
        SolveError::CoordinateRetriesExhausted { .. } => ExitCode::from(EXIT_RETRIES),
        SolveError::Rur(_) | SolveError::Sample(_) => ExitCode::from(EXIT_RETRIES),
        SolveError::DegreeBoundExceeded { .. } => ExitCode::from(EXIT_ASSUMPTIONS),
    }
}

fn solve_one(path: &Path, config: &SolveConfig, json: bool, digits: usize) -> ExitCode {
    let problem = match load(path) {
        Ok(p) => p,
        Err(code) => return code,
    };
    match optimize(&problem.objective, &problem.constraints, config) {
        Ok(result) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&result_json(&result, digits)).unwrap()
                );
            } else {
                print!("{}", result_text(&result, digits));
            }
            ExitCode::from(EXIT_OK)
        }
        Err(e) => {
            eprintln!("error: {e}");
            solve_error_exit(&e)
        }
    }
}

fn run_oracle(path: &Path, grid: usize, penalty: i64) -> ExitCode {
    let problem = match load(path) {
        Ok(p) => p,
        Err(code) => return code,
    };
    match oracle_bruteforce(&problem, grid, penalty) {
        OracleEstimate::Exact { minimum, minimizer } => {
            println!("exact minimum: {}", rational_string(&minimum));
            println!(
                "minimizer: [{}]",
                minimizer.iter().map(rational_string).collect::<Vec<_>>().join(", ")
            );
        }
        OracleEstimate::UpperBound { best, at, trace } => {
            println!("upper bound: {}", rational_string(&best));
            println!(
                "at: [{}]",
                at.iter().map(rational_string).collect::<Vec<_>>().join(", ")
            );
            println!(
                "trace: {}",
                trace.iter().map(rational_string).collect::<Vec<_>>().join(" -> ")
            );
        }
    }
    ExitCode::from(EXIT_OK)
}

/// Checks a solver outcome against a file's expect block.
fn matches_expectation(problem: &ProblemFile, result: &OptimizationResult) -> Result<(), String> {
    let Some(expect) = &problem.expect else { return Ok(()) };
    let status = result.status_str();
    if status != expect.status.as_str() {
        return Err(format!("status {status}, expected {}", expect.status.as_str()));
    }
    let got_value = match &result.outcome {
        Outcome::Attained { value, .. } => Some(value),
        Outcome::Unattained { value, .. } => Some(value),
        _ => None,
    };
    match (&expect.value, got_value) {
        (None, _) => Ok(()),
        (Some(_), None) => Err("expected a finite value".to_string()),
        (Some(ExpectedValue::Rational(r)), Some(v)) => {
            let want = AlgebraicNumber::from_rational(r.clone());
            if alg_compare(v, &want) == Ordering::Equal {
                Ok(())
            } else {
                Err(format!("value {} != expected {}", v.decimal(12), rational_string(r)))
            }
        }
        (Some(ExpectedValue::Root { annihilator, interval }), Some(v)) => {
            let want = AlgebraicNumber::new(annihilator, interval.clone());
            if alg_compare(v, &want) == Ordering::Equal {
                Ok(())
            } else {
                Err(format!("value {} != expected root", v.decimal(12)))
            }
        }
    }
}

fn run_corpus(dir: &Path, seed: u64) -> ExitCode {
    let mut entries: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(rd) => rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|e| e == "pop"))
            .collect(),
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", dir.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    entries.sort();
    if entries.is_empty() {
        eprintln!("error: no .pop files in {}", dir.display());
        return ExitCode::from(EXIT_PARSE);
    }
    let config = SolveConfig { seed, ..SolveConfig::default() };
    let mut failures = 0usize;
    for path in &entries {
        let name = path.file_stem().unwrap().to_string_lossy().to_string();
        let problem = match load(path) {
            Ok(p) => p,
            Err(_) => {
                failures += 1;
                println!("{name}: PARSE ERROR");
                continue;
            }
        };
        let t = Instant::now();
        match optimize(&problem.objective, &problem.constraints, &config) {
            Ok(result) => {
                let elapsed = t.elapsed();
                let value = match &result.outcome {
                    Outcome::Attained { value, .. } => value.decimal(12),
                    Outcome::Unattained { value, .. } => value.decimal(12),
                    Outcome::RealEmpty => "+inf".to_string(),
                    Outcome::UnboundedBelow => "-inf".to_string(),
                };
                match matches_expectation(&problem, &result) {
                    Ok(()) => {
                        let mark = if problem.expect.is_some() { "OK" } else { "--" };
                        println!(
                            "{name}: {} {value} [{elapsed:.2?}] {mark}",
                            result.status_str()
                        );
                    }
                    Err(msg) => {
                        failures += 1;
                        println!("{name}: MISMATCH ({msg}) [{elapsed:.2?}]");
                    }
                }
            }
            Err(e) => {
                failures += 1;
                println!("{name}: ERROR {e} [{:.2?}]", t.elapsed());
            }
        }
    }
    if failures == 0 {
        ExitCode::from(EXIT_OK)
    } else {
        eprintln!("{failures} corpus failure(s)");
        ExitCode::from(EXIT_RETRIES)
    }
}
