//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 usage or I/O error, 2 non-prime input, 3 wrong
//! residue class, 4 input out of range, 5 certificate parse error,
//! 6 verification failure, 70 internal error.
//!
//! Results go to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::arith;
use crate::certificate::{self, Certificate};
use crate::descent::{representable, Oracle, Prover};
use crate::error::Error;
use crate::quadform::QuadRep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_PRIME: i32 = 2;
pub const EXIT_WRONG_CLASS: i32 = 3;
pub const EXIT_RANGE: i32 = 4;
pub const EXIT_PARSE: i32 = 5;
pub const EXIT_VERIFY: i32 = 6;
pub const EXIT_INTERNAL: i32 = 70;

/// Primes handed to the thread pool per batch during `scan`.
const SCAN_BATCH: usize = 4096;

#[derive(Debug, Parser)]
#[command(
    name = "quadrep",
    version,
    about = "Represent primes as x^2 + n*y^2 with checkable descent certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Represent a prime as x^2 + n*y^2.
    Repr {
        p: String,
        #[arg(long, default_value_t = 5, value_parser = parse_multiplier)]
        n: u32,
        /// Write the certificate to FILE.
        #[arg(long, value_name = "FILE")]
        cert: Option<PathBuf>,
    },
    /// Nontrivial x^2 + 5*y^2 for a product of two primes in 3,7 mod 20
    /// (one of them may be 2).
    Pair {
        q: String,
        q2: String,
        #[arg(long, value_name = "FILE")]
        cert: Option<PathBuf>,
    },
    /// Tabulate every representable odd prime other than n up to a bound.
    Scan {
        #[arg(long, value_parser = parse_multiplier)]
        n: u32,
        #[arg(long)]
        max: String,
        /// Only primes with these residues mod 20, comma separated.
        #[arg(long, value_delimiter = ',')]
        classes: Option<Vec<u64>>,
        /// Also check each row against brute-force enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Represent a prime as 2x^2 + 2xy + 3y^2.
    Form { p: String },
    /// Check a certificate file.
    Verify { file: PathBuf },
}

fn parse_multiplier(s: &str) -> Result<u32, String> {
    match s {
        "1" => Ok(1),
        "2" => Ok(2),
        "3" => Ok(3),
        "5" => Ok(5),
        _ => Err(format!("n must be one of 1, 2, 3, 5 (got `{s}`)")),
    }
}

/// A failed command: exit code plus message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::NotPrime(_) => EXIT_NOT_PRIME,
            Error::WrongClass(_) => EXIT_WRONG_CLASS,
            Error::OutOfRange(_) => EXIT_RANGE,
            Error::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure::new(code, err.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

fn parse_natural(s: &str) -> Result<u64, Failure> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("`{s}` is not a nonnegative integer"),
        ));
    }
    s.parse().map_err(|_| {
        Failure::new(
            EXIT_RANGE,
            format!("{s} exceeds the supported range (at most {})", u64::MAX),
        )
    })
}

fn write_cert(path: &Path, cert: &Certificate) -> Result<(), Failure> {
    fs::write(path, certificate::serialize(cert)).map_err(|e| {
        Failure::new(
            EXIT_USAGE,
            format!("cannot write certificate {}: {e}", path.display()),
        )
    })
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::new(EXIT_USAGE, format!("write failed: {e}"))
}

fn rep_line(value: impl std::fmt::Display, rep: &QuadRep) -> String {
    format!("{value} = {rep}")
}

struct Runner<'a, W: Write> {
    prover: &'a Prover,
    out: &'a mut W,
}

impl<W: Write> Runner<'_, W> {
    fn repr(&mut self, p: &str, n: u32, cert: Option<&Path>) -> CmdResult {
        let p = parse_natural(p)?;
        let (rep, certificate) = self.prover.represent(p, n)?;
        if let Some(path) = cert {
            write_cert(path, &certificate)?;
        }
        writeln!(self.out, "{}", rep_line(p, &rep)).map_err(io_failure)?;
        Ok(EXIT_OK)
    }

    fn pair(&mut self, q: &str, q2: &str, cert: Option<&Path>) -> CmdResult {
        let q = parse_natural(q)?;
        let q2 = parse_natural(q2)?;
        let (rep, certificate) = self.prover.represent_pair(q, q2)?;
        if let Some(path) = cert {
            write_cert(path, &certificate)?;
        }
        writeln!(self.out, "{}", rep_line(rep.value(), &rep)).map_err(io_failure)?;
        Ok(EXIT_OK)
    }

    fn form(&mut self, p: &str) -> CmdResult {
        let p = parse_natural(p)?;
        let form = self.prover.represent_form_2_2_3(p)?;
        writeln!(self.out, "{p} = {form}").map_err(io_failure)?;
        Ok(EXIT_OK)
    }

    fn scan(&mut self, n: u32, max: &str, classes: Option<&[u64]>, cross_check: bool) -> CmdResult {
        let max = parse_natural(max)?;
        let oracle = Oracle::from_env();
        // the degenerate primes 2 and n are left out of tables
        let wanted = |p: u64| {
            p != 2
                && p != u64::from(n)
                && representable(p, n)
                && classes.is_none_or(|cs| cs.contains(&(p % 20)))
                && arith::is_prime(p)
        };
        let mut rows = 0u64;
        let mut verified = 0u64;
        let mut batch = Vec::with_capacity(SCAN_BATCH);
        let mut candidates = (2..=max).filter(|&p| wanted(p)).peekable();
        while candidates.peek().is_some() {
            batch.clear();
            batch.extend(candidates.by_ref().take(SCAN_BATCH));
            let lines: Vec<(String, bool)> = batch
                .par_iter()
                .map(|&p| scan_row(self.prover, &oracle, p, n, cross_check))
                .collect();
            for (line, ok) in lines {
                writeln!(self.out, "{line}").map_err(io_failure)?;
                rows += 1;
                verified += ok as u64;
            }
        }
        writeln!(self.out, "{rows} primes, {verified} verified").map_err(io_failure)?;
        Ok(if rows == verified {
            EXIT_OK
        } else {
            EXIT_VERIFY
        })
    }
}

fn scan_row(prover: &Prover, oracle: &Oracle, p: u64, n: u32, cross_check: bool) -> (String, bool) {
    let class = p % 20;
    match prover.represent(p, n) {
        Ok((rep, cert)) => {
            let mut ok = certificate::verify(&cert).is_ok();
            if cross_check && p <= oracle.bound() {
                ok &= oracle
                    .enumerate(p, n, false)
                    .map(|all| all.contains(&rep))
                    .unwrap_or(false);
            }
            (format!("{p}\t{class}\t{}\t{}\t{ok}", rep.x(), rep.y()), ok)
        }
        Err(_) => (format!("{p}\t{class}\t-\t-\tfalse"), false),
    }
}

fn verify_file<W: Write>(out: &mut W, path: &Path) -> CmdResult {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    let cert = certificate::deserialize(&text)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("parse error: {e}")))?;
    certificate::verify(&cert)
        .map_err(|e| Failure::new(EXIT_VERIFY, format!("verification failed at {e}")))?;
    let rep = format!("{}^2 + {}*{}^2", cert.final_rep.x, cert.n, cert.final_rep.y);
    let extra = match cert.steps.last() {
        Some(certificate::Step::FormConvert { out: f, .. }) => {
            let half = &cert.target / 2u32;
            format!(
                "; {half} = 2*({x})^2 + 2*({x})*{y} + 3*{y}^2",
                x = f.x,
                y = f.y
            )
        }
        _ => String::new(),
    };
    writeln!(out, "verified: {} = {rep}{extra}", cert.target).map_err(io_failure)?;
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) with the given
/// streams and returns the process exit code.
pub fn run<I, T, O, E>(args: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    O: Write,
    E: Write,
{
    run_with(crate::descent::shared(), args, out, err)
}

/// [`run`] against a caller-supplied prover.
pub fn run_with<I, T, O, E>(prover: &Prover, args: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mut runner = Runner { prover, out };
    let result = match &cli.command {
        Command::Repr { p, n, cert } => runner.repr(p, *n, cert.as_deref()),
        Command::Pair { q, q2, cert } => runner.pair(q, q2, cert.as_deref()),
        Command::Scan {
            n,
            max,
            classes,
            verify,
        } => runner.scan(*n, max, classes.as_deref(), *verify),
        Command::Form { p } => runner.form(p),
        Command::Verify { file } => verify_file(runner.out, file),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Exit code the CLI would report for `err`.
pub fn exit_code(err: &Error) -> i32 {
    Failure::from(err.clone()).code
}
