//! The `lpo` command line.
//!
//! Exit codes: 0 success or `YES`, 1 `NO` or some rule not oriented,
//! 2 `MAYBE`, 3 bad input, 4 internal error.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{self, Family, CSV_HEADER};
use crate::io::{format_witness, parse_precedence, parse_term, parse_trs};
use crate::lpo::{Comparator, LpoError, OrderResult, Variant, DEFAULT_DEPTH_CAP};
use crate::precedence::QuasiPrecedence;
use crate::prover::{solve, ProverError, SolveResult, SolverConfig, Trs};
use crate::term::Signature;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_MAYBE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    /// strict order
    Lpo,
    /// reflexive order
    Qlpo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "lpo", version, about = "Lexicographic path order tools for term rewrite systems")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "lpo")]
    pub order: Order,
    /// Comparison variant (bench runs all three when omitted)
    #[arg(long, global = true, value_parser = parse_variant)]
    pub variant: Option<Variant>,
    /// Precedence in chain syntax, e.g. "ack > s ~ t > 0, f > g"
    #[arg(long, global = true)]
    pub prec: Option<String>,
    /// Comma-separated variable names for inline terms
    #[arg(long, global = true, default_value = "")]
    pub vars: String,
    /// Decision budget of the precedence search
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH_CAP)]
    pub depth_cap: usize,
    /// Output format (bench defaults to csv)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for the bench execution order
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Suppress per-rule lines
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for a precedence orienting every rule of a .trs file
    Prove { path: PathBuf },
    /// Compare two terms: prints GT, LT, EQV or INC
    Compare { left: String, right: String },
    /// Check that a precedence orients every rule of a .trs file
    Check { path: PathBuf },
    /// Time the comparison variants on a term family
    Bench {
        #[arg(value_parser = |s: &str| s.parse::<Family>())]
        family: Family,
        /// Sizes to run, `n` or `from..to` (inclusive)
        #[arg(long, default_value = "1..10", value_parser = parse_range)]
        k: RangeInclusive<usize>,
    },
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
            if lo > hi {
                return Err(format!("empty range {s}"));
            }
            Ok(lo..=hi)
        }
        None => num(s).map(|k| k..=k),
    }
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Failure {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }

    fn internal(message: impl ToString) -> Failure {
        Failure {
            code: EXIT_INTERNAL,
            message: message.to_string(),
        }
    }
}

impl From<LpoError> for Failure {
    fn from(e: LpoError) -> Failure {
        Failure::internal(e)
    }
}

impl From<ProverError> for Failure {
    fn from(e: ProverError) -> Failure {
        match e {
            ProverError::MalformedTrs(_) | ProverError::UnknownSymbol(_) => Failure::input(e),
            _ => Failure::internal(e),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::internal(e)
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cfg, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cfg: &CliConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cfg.command {
        Command::Prove { path } => cmd_prove(path, cfg, out),
        Command::Compare { left, right } => cmd_compare(left, right, cfg, out),
        Command::Check { path } => cmd_check(path, cfg, out),
        Command::Bench { family, k } => cmd_bench(*family, k.clone(), cfg, out),
    }
}

fn read_trs(path: &Path) -> Result<Trs, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_trs(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn precedence(cfg: &CliConfig, sig: &Signature) -> Result<QuasiPrecedence, Failure> {
    parse_precedence(cfg.prec.as_deref().unwrap_or(""), sig).map_err(|e| Failure::input(format!("--prec: {e}")))
}

fn cmd_prove(path: &Path, cfg: &CliConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    if cfg.order == Order::Qlpo {
        return Err(Failure::input("prove supports only --order lpo"));
    }
    let trs = read_trs(path)?;
    let solver = SolverConfig {
        budget: cfg.budget,
        depth_cap: cfg.depth_cap,
    };
    match solve(&trs, &solver)? {
        SolveResult::Witness(w) => {
            writeln!(out, "YES")?;
            if cfg.quiet {
                writeln!(out, "{}", w.precedence)?;
            } else {
                write!(out, "{}", format_witness(&trs, &w))?;
            }
            Ok(EXIT_OK)
        }
        result => {
            let (verdict, code) = match result {
                SolveResult::Unsat => ("NO", EXIT_NO),
                _ => ("MAYBE", EXIT_MAYBE),
            };
            writeln!(out, "{verdict}")?;
            if !cfg.quiet {
                for rule in trs.rules() {
                    let single = Trs::new(vec![rule.clone()])?;
                    let tag = match solve(&single, &solver)? {
                        SolveResult::Witness(_) => "ORIENTABLE",
                        SolveResult::Unsat => "UNORIENTABLE",
                        SolveResult::Timeout => "UNKNOWN",
                    };
                    writeln!(out, "{tag} {rule}")?;
                }
            }
            Ok(code)
        }
    }
}

fn cmd_compare(left: &str, right: &str, cfg: &CliConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let vars: Vec<&str> = cfg.vars.split(',').map(str::trim).filter(|v| !v.is_empty()).collect();
    let s = parse_term(left, &vars).map_err(Failure::input)?;
    let t = parse_term(right, &vars).map_err(Failure::input)?;
    let sig = Signature::from_terms([&s, &t]).map_err(Failure::input)?;
    let p = precedence(cfg, &sig)?;
    let mut cmp = Comparator::new(&p, cfg.variant.unwrap_or(Variant::Memoized)).with_depth_cap(cfg.depth_cap);
    let result = match cfg.order {
        Order::Lpo => cmp.compare(&s, &t)?,
        Order::Qlpo => match (cmp.geq(&s, &t)?, cmp.geq(&t, &s)?) {
            (true, true) => OrderResult::Eqv,
            (true, false) => OrderResult::Gt,
            (false, true) => OrderResult::Lt,
            (false, false) => OrderResult::Inc,
        },
    };
    writeln!(out, "{result}")?;
    Ok(EXIT_OK)
}

fn cmd_check(path: &Path, cfg: &CliConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let trs = read_trs(path)?;
    let p = precedence(cfg, trs.signature())?;
    let mut cmp = Comparator::new(&p, cfg.variant.unwrap_or(Variant::Naive)).with_depth_cap(cfg.depth_cap);
    let mut all = true;
    for rule in trs.rules() {
        let ok = match cfg.order {
            Order::Lpo => cmp.gt(rule.lhs(), rule.rhs())?,
            Order::Qlpo => cmp.geq(rule.lhs(), rule.rhs())?,
        };
        all &= ok;
        if !cfg.quiet {
            writeln!(out, "{} {rule}", if ok { "ORIENTED" } else { "FAILED" })?;
        }
    }
    Ok(if all { EXIT_OK } else { EXIT_NO })
}

fn cmd_bench(family: Family, ks: RangeInclusive<usize>, cfg: &CliConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let variants: Vec<Variant> = match cfg.variant {
        Some(v) => vec![v],
        None => Variant::ALL.to_vec(),
    };
    let ks: Vec<usize> = ks.collect();
    let rows = bench::run(family, &ks, &variants, cfg.seed, cfg.depth_cap)?;
    match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in &rows {
                writeln!(out, "{}", r.csv())?;
            }
        }
        Format::Text => {
            writeln!(
                out,
                "{:<6} {:>3} {:<9} {:>14} {:>14} {:>10}",
                "family", "k", "variant", "wall_ns", "calls", "memo_hits"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:<6} {:>3} {:<9} {:>14} {:>14} {:>10}",
                    r.family.as_str(),
                    r.k,
                    r.variant.as_str(),
                    r.wall_ns,
                    r.calls,
                    r.memo_hits
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}
