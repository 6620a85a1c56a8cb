//! The `rvc` command line tool.
//!
//! Exit codes: 0 success, 1 bad input (including unreadable files and flag
//! errors), 2 the pipeline fell back to a flagged constant instance, 3 a
//! brute-force oracle was asked for but the instance is too large, 4 a
//! requested verification found the two sides non-equivalent.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::{emit_dimacs, gen_gnp, parse_dimacs};
use crate::instance::oracle::decide_bruteforce;
use crate::instance::{parse_instance, serialize_instance, stats_text};
use crate::pipeline::{compress, verify_equivalence, CoverChoice, PipelineConfig};
use crate::rank_reduction::Mode;

#[derive(Parser)]
#[command(
    name = "rvc",
    version,
    about = "Compress vertex-cover-above-matching instances into rank vertex cover"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Fast,
    Faithful,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exact,
    Approx,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compress a DIMACS graph with slack parameter k into an instance file
    Compress {
        /// DIMACS edge-format graph
        input: PathBuf,
        /// Budget slack above the maximum matching size
        #[arg(short, long)]
        k: u64,
        /// RNG seed; runs are reproducible from input, flags, and seed
        #[arg(long)]
        seed: u64,
        /// Total failure probability budget, as a fraction like 1/20
        #[arg(long, default_value = "1/20")]
        epsilon: String,
        #[arg(long, value_enum, default_value = "fast")]
        mode: ModeArg,
        /// How to pick the working vertex cover
        #[arg(long, value_enum, default_value = "exact")]
        strategy: StrategyArg,
        /// Brute-force check that the output decides like the input
        #[arg(long)]
        verify: bool,
        /// Always run the full reduction, even when k is small enough to
        /// decide the instance outright
        #[arg(long)]
        no_shortcut: bool,
        /// Write the instance here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the run report (always printed to stderr) to a file
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Decide a small instance file by brute force and print YES or NO
    Decide {
        /// Instance file
        input: PathBuf,
    },
    /// Check that two small instance files have the same answer
    Verify {
        left: PathBuf,
        right: PathBuf,
    },
    /// Sample a G(n, p) graph and print it in DIMACS edge format
    Gen {
        #[arg(short)]
        n: u32,
        /// Edge probability, as a fraction like 1/2
        #[arg(short)]
        p: String,
        #[arg(long)]
        seed: u64,
    },
    /// Print summary statistics of an instance file
    Stats {
        input: PathBuf,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version arrive here too and are not failures
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::OracleLimit { .. } => 3,
                _ => 1,
            }
        }
    }
}

fn parse_fraction(text: &str, what: &str) -> Result<BigRational> {
    text.parse()
        .map_err(|_| Error::Input(format!("{what} must be a fraction like 1/2, got `{text}`")))
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Compress {
            input,
            k,
            seed,
            epsilon,
            mode,
            strategy,
            verify,
            no_shortcut,
            output,
            report,
        } => {
            let graph = parse_dimacs(&fs::read_to_string(&input)?)?;
            let mut config = PipelineConfig::new(seed);
            config.epsilon = parse_fraction(&epsilon, "--epsilon")?;
            config.mode = match mode {
                ModeArg::Fast => Mode::Fast,
                ModeArg::Faithful => Mode::Faithful,
            };
            config.cover = match strategy {
                StrategyArg::Exact => CoverChoice::Exact,
                StrategyArg::Approx => CoverChoice::MatchingApprox,
            };
            config.oracle_verify = verify;
            config.use_shortcut = !no_shortcut;
            let (inst, run_report) = compress(&graph, k, &config)?;
            let inst_text = serialize_instance(&inst);
            match &output {
                Some(path) => fs::write(path, &inst_text)?,
                None => print!("{inst_text}"),
            }
            let report_text = run_report.to_text();
            eprint!("{report_text}");
            if let Some(path) = &report {
                fs::write(path, &report_text)?;
            }
            if run_report.fallback {
                return Ok(2);
            }
            if run_report.verified == Some(false) {
                return Ok(4);
            }
            Ok(0)
        }
        Cmd::Decide { input } => {
            let inst = parse_instance(&fs::read_to_string(&input)?)?;
            let yes = decide_bruteforce(&inst)?;
            println!("{}", if yes { "YES" } else { "NO" });
            Ok(0)
        }
        Cmd::Verify { left, right } => {
            let a = parse_instance(&fs::read_to_string(&left)?)?;
            let b = parse_instance(&fs::read_to_string(&right)?)?;
            if verify_equivalence(&a, &b, usize::MAX)? {
                println!("EQUIVALENT");
                Ok(0)
            } else {
                println!("NOT EQUIVALENT");
                Ok(4)
            }
        }
        Cmd::Gen { n, p, seed } => {
            let p = parse_fraction(&p, "-p")?;
            let graph = gen_gnp(n, &p, seed)?;
            print!("{}", emit_dimacs(&graph));
            Ok(0)
        }
        Cmd::Stats { input } => {
            let inst = parse_instance(&fs::read_to_string(&input)?)?;
            print!("{}", stats_text(&inst)?);
            Ok(0)
        }
    }
}
