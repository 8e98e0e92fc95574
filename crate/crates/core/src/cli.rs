//! Command-line front end: `gen`, `delta`, `verify` and `profile`.
//!
//! Exit status: 0 on success, 1 when a verification or lemma check fails,
//! 2 on usage errors and radix/algorithm mismatches.
//!
//! Radix lists given with `--radixes` are read most significant digit
//! first, the same order in which words are printed.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::algorithm::Algorithm;
use crate::error::{GrayError, Result};
use crate::generator::GrayGenerator;
use crate::harness::{assert_lemmas, profile, verify_all, DEFAULT_MAX_WORDS};
use crate::oracle::delta_sequence;
use crate::word::{render, RadixVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "loopless-gray", version, about = "Loopless mixed-radix Gray code generators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every word of the Gray code, one per line.
    Gen(GenArgs),
    /// Print the changed digit position of every transition.
    Delta(DeltaArgs),
    /// Run several algorithms and compare their output.
    Verify(VerifyArgs),
    /// Report elementary operations per advance.
    Profile(ProfileArgs),
}

#[derive(Debug, Args)]
pub struct RadixArgs {
    /// Uniform radix.
    #[arg(long)]
    pub m: Option<u32>,
    /// Number of digits.
    #[arg(long)]
    pub n: Option<usize>,
    /// Mixed radixes, most significant first, e.g. `2,5,4,2`.
    #[arg(long, conflicts_with_all = ["m", "n"])]
    pub radixes: Option<String>,
}

impl RadixArgs {
    fn resolve(&self) -> Result<RadixVector> {
        match (&self.radixes, self.m, self.n) {
            (Some(list), _, _) => RadixVector::parse_msb_first(list),
            (None, Some(m), Some(n)) => RadixVector::uniform(m, n),
            _ => Err(GrayError::Parse("give --m and --n, or --radixes".into())),
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, default_value = "oracle")]
    pub algo: String,
    #[command(flatten)]
    pub radix: RadixArgs,
    /// Append the peg contents to every line.
    #[arg(long)]
    pub pegs: bool,
    /// Stop after this many words.
    #[arg(long)]
    pub limit: Option<u64>,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    #[command(flatten)]
    pub radix: RadixArgs,
    #[arg(long)]
    pub limit: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma separated algorithm names.
    #[arg(long)]
    pub algos: String,
    #[command(flatten)]
    pub radix: RadixArgs,
    /// Also run the buffer, step-sum and tower lemma checks.
    #[arg(long)]
    pub lemmas: bool,
    /// Emit lemma results as JSON lines.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(long)]
    pub algo: String,
    #[command(flatten)]
    pub radix: RadixArgs,
    /// Inclusive range of digit counts, `lo..hi`; needs `--m`.
    #[arg(long, conflicts_with_all = ["n", "radixes"])]
    pub n_range: Option<String>,
    /// Advances per row before the run is cut off.
    #[arg(long, default_value_t = DEFAULT_MAX_WORDS)]
    pub limit: u64,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a, out),
        Command::Delta(a) => cmd_delta(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Profile(a) => cmd_profile(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Failed(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_FAILED
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(GrayError),
    Failed(String),
    Io(io::Error),
}

impl From<GrayError> for CliError {
    fn from(e: GrayError) -> Self {
        match e {
            GrayError::ContractViolation(_) => CliError::Failed(e.to_string()),
            other => CliError::Usage(other),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult = std::result::Result<i32, CliError>;

fn check_renderable(radixes: &RadixVector) -> Result<()> {
    match radixes.as_slice().iter().find(|&&m| m > 10) {
        Some(&m) => Err(GrayError::UnsupportedFormat { radix: m }),
        None => Ok(()),
    }
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> CliResult {
    let algorithm: Algorithm = args.algo.parse()?;
    let radixes = args.radix.resolve()?;
    check_renderable(&radixes)?;
    let mut generator = algorithm.build(&radixes)?;
    let mut file;
    let mut stdout_buf;
    let sink: &mut dyn Write = match &args.output {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => {
            stdout_buf = BufWriter::new(out);
            &mut stdout_buf
        }
    };
    let mut printed = 0u64;
    loop {
        if args.limit.is_some_and(|l| printed >= l) {
            break;
        }
        let word = render(generator.current(), &radixes)?;
        match generator.peg_dump().filter(|_| args.pegs) {
            Some(dump) => writeln!(sink, "{word} {dump}")?,
            None => writeln!(sink, "{word}")?,
        }
        printed += 1;
        if generator.advance()?.is_none() {
            break;
        }
    }
    sink.flush()?;
    Ok(EXIT_OK)
}

fn cmd_delta(args: &DeltaArgs, out: &mut dyn Write) -> CliResult {
    let radixes = args.radix.resolve()?;
    let mut out = BufWriter::new(out);
    let limit = args.limit.unwrap_or(u64::MAX);
    for j in delta_sequence(radixes).take(limit.try_into().unwrap_or(usize::MAX)) {
        writeln!(out, "{j}")?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn parse_algorithms(list: &str) -> Result<Vec<Algorithm>> {
    list.split(',').map(str::parse).collect()
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let algorithms = parse_algorithms(&args.algos)?;
    if algorithms.len() < 2 {
        return Err(GrayError::Parse("verify needs at least two algorithms".into()).into());
    }
    let radixes = args.radix.resolve()?;
    let reports = verify_all(&algorithms, &radixes)?;
    let mut code = EXIT_OK;
    for r in &reports {
        writeln!(out, "{r}")?;
        if !r.is_equal() {
            code = EXIT_FAILED;
        }
    }
    if args.lemmas {
        let report = assert_lemmas(&radixes)?;
        if args.json {
            out.write_all(report.to_json_lines().as_bytes())?;
        } else {
            out.write_all(report.to_text().as_bytes())?;
        }
        if !report.passed() {
            code = EXIT_FAILED;
        }
    }
    Ok(code)
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let bad = || GrayError::Parse(format!("expected lo..hi, got {text:?}"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn cmd_profile(args: &ProfileArgs, out: &mut dyn Write) -> CliResult {
    let algorithm: Algorithm = args.algo.parse()?;
    let vectors: Vec<RadixVector> = match &args.n_range {
        Some(range) => {
            let (lo, hi) = parse_range(range)?;
            let m = args
                .radix
                .m
                .ok_or_else(|| GrayError::Parse("--n-range needs --m".into()))?;
            (lo..=hi)
                .map(|n| RadixVector::uniform(m, n))
                .collect::<Result<_>>()?
        }
        None => vec![args.radix.resolve()?],
    };
    let generators = vectors
        .iter()
        .map(|r| algorithm.build(r))
        .collect::<Result<Vec<_>>>()?;
    writeln!(
        out,
        "{:<18} {:>3} {:>10} {:>8} {:>10} complete",
        "algorithm", "n", "advances", "max_ops", "mean_ops"
    )?;
    for g in generators {
        let name = g.name();
        let s = profile(g, Some(args.limit))?;
        writeln!(
            out,
            "{:<18} {:>3} {:>10} {:>8} {:>10.3} {}",
            name,
            s.n,
            s.advances,
            s.max_ops,
            s.mean_ops,
            if s.complete { "yes" } else { "no" }
        )?;
    }
    Ok(EXIT_OK)
}
