use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use spinhecke::characters::{character_table_in, generic_degree, schur_element};
use spinhecke::combinatorics::{enumerate, PartitionKind};
use spinhecke::parse::parse_element;
use spinhecke::spin_hecke::{self, parse_word, SpinTables};
use spinhecke::{traces, verify, Scalar, Suite};

mod output;

use output::{render_pairs, render_table, Format};

#[derive(Parser, Debug)]
#[command(name = "spinhecke", version, about = "Characters and trace forms of Hecke-Clifford and spin Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Common {
    /// Rank n >= 1.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=16))]
    n: u32,
    /// Output format for tables and maps.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character table of HC_n: rows strict, columns odd partitions.
    CharTable {
        #[command(flatten)]
        common: Common,
        /// Number of variables for the Frobenius expansion (at least n).
        #[arg(long)]
        m: Option<usize>,
    },
    /// Class polynomials f_nu of an element of HC_n.
    ClassPoly {
        #[command(flatten)]
        common: Common,
        /// e.g. "T1*c1 - (v-1)/2*T2".
        #[arg(long)]
        element: String,
    },
    /// Spin class polynomials of R_word.
    SpinClassPoly {
        #[command(flatten)]
        common: Common,
        /// Comma-joined generator indices, e.g. "2,1,3,2,3,1".
        #[arg(long)]
        word: String,
    },
    /// The symmetrizing trace of an element, or of R_word with --spin.
    Gimel {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with_all = ["spin", "word"], required_unless_present = "spin")]
        element: Option<String>,
        #[arg(long, requires = "word")]
        spin: bool,
        #[arg(long, requires = "spin")]
        word: Option<String>,
    },
    /// Schur elements c^lambda, or the spin ones with --spin.
    SchurElements {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        spin: bool,
    },
    /// Generic degrees D^lambda.
    GenericDegrees {
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Outcome {
    Output(String),
    Verified { report: String, passed: bool },
}

fn strict_map(n: usize, f: impl Fn(&spinhecke::Partition) -> spinhecke::Result<Scalar>) -> spinhecke::Result<Vec<(String, String)>> {
    enumerate(n, PartitionKind::Strict)
        .iter()
        .map(|l| Ok((l.to_string(), f(l)?.to_string())))
        .collect()
}

fn run(cmd: Command) -> spinhecke::Result<Outcome> {
    use Command::*;
    let out = match cmd {
        CharTable { common, m } => {
            let n = common.n as usize;
            let m = m.unwrap_or(n);
            render_table(&character_table_in(n, m)?, common.format)
        }
        ClassPoly { common, element } => {
            let h = parse_element(common.n as usize, &element)?;
            render_pairs(&traces::reduce(&h)?.to_pairs(), "nu", common.format)
        }
        SpinClassPoly { common, word } => {
            let n = common.n as usize;
            let w = parse_word(&word)?;
            let f = SpinTables::new(n)?.class_polynomials(&w)?;
            render_pairs(&f.to_pairs(), "nu", common.format)
        }
        Gimel { common, element, word, .. } => {
            let n = common.n as usize;
            let g = match (element, word) {
                (Some(e), _) => traces::gimel(&parse_element(n, &e)?)?,
                (None, Some(w)) => spin_hecke::gimel_minus(&parse_word(&w)?, n)?,
                (None, None) => unreachable!("clap requires --element or --spin --word"),
            };
            format!("{g}\n")
        }
        SchurElements { common, spin } => {
            let n = common.n as usize;
            let pairs = if spin {
                SpinTables::new(n)?
                    .schur_elements()?
                    .into_iter()
                    .map(|(l, c)| (l.to_string(), c.to_string()))
                    .collect()
            } else {
                strict_map(n, schur_element)?
            };
            render_pairs(&pairs, "lambda", common.format)
        }
        GenericDegrees { common } => {
            render_pairs(&strict_map(common.n as usize, generic_degree)?, "lambda", common.format)
        }
        Verify { common, suite, seed } => {
            let checks = verify::run_suite(suite, common.n as usize, seed);
            let passed = checks.iter().all(|c| c.passed);
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut report: String = checks.iter().map(|c| format!("{c}\n")).collect();
            report.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
            return Ok(Outcome::Verified { report, passed });
        }
    };
    Ok(Outcome::Output(out))
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("SPINHECKE_THREADS") else {
        return Ok(());
    };
    let k: usize = v
        .trim()
        .parse()
        .map_err(|_| format!("SPINHECKE_THREADS must be a nonnegative integer, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(Outcome::Output(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Verified { report, passed }) => {
            print!("{report}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
