use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use maxbetti::cli::{
    bench_command, bench_csv_header, bench_csv_line, ideal_command, parse_bound_list, parse_polynomial, render_ideal,
    render_response, solve_command, BoundListInput, CommandError, PolynomialInput, RequestDocument,
};
use maxbetti::{AlgorithmChoice, Error, ResultsMode};

#[derive(Parser)]
#[command(name = "maxbetti", version, about = "Maximal total Betti numbers under Hilbert-function constraints")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Automatic,
    Simplified,
    Complete,
}

#[derive(Clone, Copy, ValueEnum)]
enum ResultsArg {
    None,
    One,
    AllMaxBettiSum,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Bound the total Betti numbers over a constrained family.
    Solve {
        /// JSON request file; flags given alongside override its fields.
        #[arg(long)]
        request: Option<PathBuf>,
        /// Number of variables N of the ambient ring.
        #[arg(long)]
        variables: Option<usize>,
        /// Coefficients, leading first, e.g. "3,-6,175".
        #[arg(long, allow_hyphen_values = true)]
        hilbert_polynomial: Option<String>,
        /// Positional lower bounds on h, gaps allowed: ",,,8".
        #[arg(long)]
        hf_lower: Option<String>,
        #[arg(long)]
        hf_upper: Option<String>,
        #[arg(long)]
        diff_lower: Option<String>,
        #[arg(long)]
        diff_upper: Option<String>,
        #[arg(long, value_enum)]
        algorithm: Option<AlgorithmArg>,
        #[arg(long, value_enum)]
        results: Option<ResultsArg>,
        /// Print the response as JSON.
        #[arg(long)]
        json: bool,
        /// Cross-check against brute-force enumeration (small instances).
        #[arg(long)]
        verify: bool,
    },
    /// Lexsegment ideal and Betti table for a Hilbert function.
    Ideal {
        #[arg(long)]
        variables: usize,
        /// Values h(0), h(1), ...; h stays constant afterwards.
        #[arg(long)]
        hilbert_function: String,
        #[arg(long)]
        json: bool,
    },
    /// Time constant Hilbert polynomials and print CSV.
    Bench {
        #[arg(long, default_value_t = 5)]
        variables: usize,
        #[arg(long, default_value_t = 0)]
        from: u64,
        #[arg(long, default_value_t = 100)]
        to: u64,
        #[arg(long, value_enum, default_value = "automatic")]
        algorithm: AlgorithmArg,
    },
}

fn algorithm(a: AlgorithmArg) -> AlgorithmChoice {
    match a {
        AlgorithmArg::Automatic => AlgorithmChoice::Automatic,
        AlgorithmArg::Simplified => AlgorithmChoice::Simplified,
        AlgorithmArg::Complete => AlgorithmChoice::Complete,
    }
}

fn list(text: &Option<String>) -> Result<Option<BoundListInput>, Error> {
    text.as_deref().map(|t| parse_bound_list(t).map(BoundListInput::Positional)).transpose()
}

fn execute(cli: Cli) -> Result<(), CommandError> {
    match cli.command {
        Command::Solve {
            request,
            variables,
            hilbert_polynomial,
            hf_lower,
            hf_upper,
            diff_lower,
            diff_upper,
            algorithm: algo,
            results,
            json,
            verify,
        } => {
            let mut doc = match &request {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?
                }
                None => RequestDocument::new(
                    variables.ok_or_else(|| Error::InvalidInput("--variables or --request is required".into()))?,
                ),
            };
            if let Some(v) = variables {
                doc.variables = v;
            }
            if let Some(p) = &hilbert_polynomial {
                let poly = parse_polynomial(p)?;
                doc.hilbert_polynomial = Some(match poly.constant_value().and_then(|c| u64::try_from(c).ok()) {
                    Some(c) if poly.degree().unwrap_or(0) == 0 => PolynomialInput::Constant(c),
                    _ => PolynomialInput::Descending(
                        p.split(',').map(|s| maxbetti::cli::RationalInput::Text(s.trim().into())).collect(),
                    ),
                });
            }
            for (slot, text) in [
                (&mut doc.hf_lower, &hf_lower),
                (&mut doc.hf_upper, &hf_upper),
                (&mut doc.diff_lower, &diff_lower),
                (&mut doc.diff_upper, &diff_upper),
            ] {
                if let Some(l) = list(text)? {
                    *slot = l;
                }
            }
            if let Some(a) = algo {
                doc.algorithm = algorithm(a);
            }
            if let Some(r) = results {
                doc.results = match r {
                    ResultsArg::None => ResultsMode::None,
                    ResultsArg::One => ResultsMode::One,
                    ResultsArg::AllMaxBettiSum => ResultsMode::AllMaxBettiSum,
                    ResultsArg::All => ResultsMode::All,
                };
            }
            doc.verify |= verify;
            let response = solve_command(&doc)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&response).expect("response serializes"));
            } else {
                print!("{}", render_response(&response));
            }
        }
        Command::Ideal { variables, hilbert_function, json } => {
            let h: Vec<u64> = parse_bound_list(&hilbert_function)?
                .into_iter()
                .map(|v| v.ok_or_else(|| Error::InvalidInput("gaps are not allowed in a Hilbert function".into())))
                .collect::<Result<_, _>>()?;
            let report = ideal_command(variables, &h)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", render_ideal(&report));
            }
        }
        Command::Bench { variables, from, to, algorithm: algo } => {
            println!("{}", bench_csv_header());
            bench_command(variables, from, to, algorithm(algo), |row| println!("{}", bench_csv_line(row)))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
