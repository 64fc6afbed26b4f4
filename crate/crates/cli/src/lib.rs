//! The `qfib` command line: tables of weighted Fibonacci polynomials,
//! object listings, identity verification, determinants and scheme
//! validation. Exit codes: 0 success, 1 a check failed, 2 usage error.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qfib_core::lgv::{build_minor, closed_form_det, determinant, MinorSpec, MAX_DET_DIM};
use qfib_core::registry::{IdentityRegistry, SchemeCase, SchemeRegistry, VerifyContext};
use qfib_core::statistics::{distribution, objects_with_stat, Family, StatSetPair, Statistic};
use qfib_core::tiling::{enumerate_tilings, validate_weight_scheme, weighted_sum_recursive, AppendSpec, WeightScheme};
use qfib_core::Polynomial;
use serde_json::json;

/// Largest board the enumerating commands accept.
pub const MAX_ENUM_N: usize = 20;

pub const SEED_ENV: &str = "QFIB_SEED";

#[derive(Parser, Debug)]
#[command(name = "qfib", version, about = "Weighted k-Fibonacci tilings and their identities")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the weighted tiling polynomial F_n^k(z; q) for a scheme.
    Table(TableArgs),
    /// List tilings or layered objects, optionally with a statistic.
    Enumerate(EnumerateArgs),
    /// Check identities over a grid of board sizes.
    Verify(VerifyArgs),
    /// Determinant of the shifted Toeplitz minor and its product formula.
    Det(DetArgs),
    /// Check that a scheme's shift factors match its tile weights.
    ValidateScheme(ValidateArgs),
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// A statistic pair such as maj-lp, or generic:A,B,C.
    #[arg(long)]
    stat: String,
    /// Boards appended before and after, as `M-,M+`.
    #[arg(long)]
    append: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ObjectKind {
    Tilings,
    Lp,
    Rlp,
    Prlp,
    Lpi,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum)]
    object: ObjectKind,
    /// inv, maj, rb or ls.
    #[arg(long)]
    with_stat: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// recursion, convolution, kreduce, counts, display, det, det-sign,
    /// det-paths, or all.
    #[arg(long, default_value = "all")]
    identity: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    max_n: usize,
    /// Scheme to check; all built-in statistic schemes when omitted.
    #[arg(long)]
    stat: Option<String>,
    /// Number of random separable schemes to check.
    #[arg(long)]
    random_schemes: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Adds this multiple of (start-1)*trailing to every tile exponent
    /// without changing the claimed shifts.
    #[arg(long, hide = true)]
    inject_incoherent: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Show {
    Closed,
    Exact,
    Both,
}

#[derive(Args, Debug)]
struct DetArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    stat: String,
    #[arg(long, value_enum, default_value_t = Show::Both)]
    show: Show,
    /// Print values at z = q = 1 instead of polynomials.
    #[arg(long)]
    at_one: bool,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[arg(long)]
    stat: String,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, hide = true)]
    inject_incoherent: Option<u64>,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<qfib_core::Error> for Failure {
    fn from(e: qfib_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Runs the command line with the seed override taken from `QFIB_SEED`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_seed(args, std::env::var(SEED_ENV).ok(), out, err)
}

/// Runs the command line; `seed_override`, when set, replaces `--seed`.
pub fn run_with_seed<I, T>(args: I, seed_override: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let json = cli.format == Format::Json;
    let result = match cli.command {
        Command::Table(a) => cmd_table(a, json, out),
        Command::Enumerate(a) => cmd_enumerate(a, json, out),
        Command::Verify(a) => cmd_verify(a, seed_override, json, out, err),
        Command::Det(a) => cmd_det(a, json, out, err),
        Command::ValidateScheme(a) => cmd_validate(a, json, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn check_k(k: usize) -> Result<(), Failure> {
    if k == 0 {
        return Err(usage("--k must be at least 1"));
    }
    Ok(())
}

fn check_enum_n(n: usize) -> Result<(), Failure> {
    if n > MAX_ENUM_N {
        return Err(usage(format!("n = {n} exceeds the enumeration limit {MAX_ENUM_N}")));
    }
    Ok(())
}

fn parse_append(s: &str) -> Result<AppendSpec, Failure> {
    let bad = || usage(format!("--append expects M-,M+ (two nonnegative integers), got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let before = a.trim().parse().map_err(|_| bad())?;
    let after = b.trim().parse().map_err(|_| bad())?;
    Ok(AppendSpec::new(before, after))
}

fn print_poly(p: &Polynomial, json: bool, out: &mut dyn Write) -> io::Result<()> {
    if json {
        writeln!(out, "{}", serde_json::to_string(p).expect("polynomials serialize"))
    } else {
        writeln!(out, "{p}")
    }
}

fn cmd_table(a: TableArgs, json: bool, out: &mut dyn Write) -> Outcome {
    check_k(a.k)?;
    let app = match &a.append {
        Some(s) => parse_append(s)?,
        None => AppendSpec::NONE,
    };
    let registry = SchemeRegistry::standard();
    let poly = match registry.resolve(&a.stat) {
        Ok(factory) => {
            let w = factory.build(a.k)?;
            weighted_sum_recursive(a.n as i64, a.k, &w, app)?
        }
        // ls has no tile weight, but its distribution can still be listed
        // from the partitions themselves.
        Err(qfib_core::Error::UnsupportedScheme(_)) if app == AppendSpec::NONE => {
            check_enum_n(a.n)?;
            distribution(a.stat.parse()?, a.n, a.k)?
        }
        Err(e) => return Err(e.into()),
    };
    print_poly(&poly, json, out)?;
    Ok(0)
}

fn cmd_enumerate(a: EnumerateArgs, json: bool, out: &mut dyn Write) -> Outcome {
    check_k(a.k)?;
    check_enum_n(a.n)?;
    let family = match a.object {
        ObjectKind::Tilings => {
            if a.with_stat.is_some() {
                return Err(usage("--with-stat needs --object lp, rlp, prlp or lpi"));
            }
            for t in enumerate_tilings(a.n, a.k) {
                if json {
                    writeln!(out, "{}", json!({ "object": t.to_string(), "parts": t.parts() }))?;
                } else {
                    writeln!(out, "{t}")?;
                }
            }
            return Ok(0);
        }
        ObjectKind::Lp => Family::Lp,
        ObjectKind::Rlp => Family::Rlp,
        ObjectKind::Prlp => Family::Prlp,
        ObjectKind::Lpi => Family::Lpi,
    };
    match &a.with_stat {
        None => {
            for (_, o) in family.objects(a.n, a.k) {
                if json {
                    writeln!(out, "{}", json!({ "object": o.to_string() }))?;
                } else {
                    writeln!(out, "{o}")?;
                }
            }
        }
        Some(s) => {
            let pair = StatSetPair::new(Statistic::parse(s)?, family)?;
            for (o, v) in objects_with_stat(pair, a.n, a.k)? {
                if json {
                    writeln!(out, "{}", json!({ "object": o.to_string(), "stat": v }))?;
                } else {
                    writeln!(out, "{o} {v}")?;
                }
            }
        }
    }
    Ok(0)
}

fn cmd_verify(a: VerifyArgs, seed_override: Option<String>, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    check_k(a.k)?;
    if a.k > MAX_DET_DIM {
        return Err(usage(format!("k = {} exceeds the limit {MAX_DET_DIM}", a.k)));
    }
    if a.max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    check_enum_n(a.max_n)?;
    let seed = match seed_override {
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| usage(format!("{SEED_ENV} must be an unsigned integer, got {s:?}")))?,
        None => a.seed,
    };
    let registry = SchemeRegistry::standard();
    let mut cases = Vec::new();
    if let Some(s) = &a.stat {
        cases.push(SchemeCase::from_factory(registry.resolve(s)?.as_ref(), a.k)?);
    }
    if let Some(r) = a.random_schemes {
        for w in WeightScheme::random_family(a.k, seed, r) {
            cases.push(SchemeCase::new(w, None));
        }
    }
    if a.stat.is_none() && a.random_schemes.is_none() {
        for f in registry.builtins() {
            cases.push(SchemeCase::from_factory(f.as_ref(), a.k)?);
        }
    }
    if let Some(c) = a.inject_incoherent {
        cases = cases.iter().map(|x| x.corrupted(a.k, c)).collect::<Result<_, _>>()?;
    }
    let ctx = VerifyContext {
        k: a.k,
        max_n: a.max_n,
        cases,
    };
    let reports = IdentityRegistry::standard().run(&a.identity, &ctx)?;
    for r in &reports {
        if json {
            writeln!(out, "{}", serde_json::to_string(r).expect("reports serialize"))?;
        } else {
            writeln!(out, "{r}")?;
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if !json {
        writeln!(out, "{} checks, {failed} failed", reports.len())?;
    }
    match reports.iter().find(|r| !r.passed()) {
        Some(first) => {
            writeln!(err, "first failure: {first}")?;
            Ok(1)
        }
        None => Ok(0),
    }
}

fn cmd_det(a: DetArgs, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    check_k(a.k)?;
    if a.k > MAX_DET_DIM {
        return Err(usage(format!("k = {} exceeds the determinant limit {MAX_DET_DIM}", a.k)));
    }
    if a.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let w = SchemeRegistry::standard().resolve(&a.stat)?.build(a.k)?;
    let spec = MinorSpec::new(a.n, a.k)?;
    let exact = determinant(&build_minor(&spec, &w)?)?;
    let closed = closed_form_det(&spec, &w)?;
    let render = |p: &Polynomial| if a.at_one { p.at_one().to_string() } else { p.to_string() };
    let matches = exact == closed;
    if json {
        let value = |p: &Polynomial| {
            if a.at_one {
                json!(p.at_one().to_string())
            } else {
                serde_json::to_value(p).expect("polynomials serialize")
            }
        };
        let mut obj = json!({ "n": a.n, "k": a.k, "scheme": a.stat, "p": spec.p, "r": spec.r });
        if a.show != Show::Closed {
            obj["exact"] = value(&exact);
        }
        if a.show != Show::Exact {
            obj["closed"] = value(&closed);
        }
        if a.show == Show::Both {
            obj["match"] = json!(matches);
        }
        writeln!(out, "{obj}")?;
    } else {
        match a.show {
            Show::Exact => writeln!(out, "{}", render(&exact))?,
            Show::Closed => writeln!(out, "{}", render(&closed))?,
            Show::Both => {
                writeln!(out, "exact: {}", render(&exact))?;
                writeln!(out, "closed: {}", render(&closed))?;
            }
        }
    }
    if a.show == Show::Both && !matches {
        let diff = &exact - &closed;
        let witness = diff.leading_term().expect("sides differ");
        writeln!(err, "mismatch: exact determinant differs from the product formula; witness(exact-closed)={witness}")?;
        return Ok(1);
    }
    Ok(0)
}

fn cmd_validate(a: ValidateArgs, json: bool, out: &mut dyn Write) -> Outcome {
    check_k(a.k)?;
    let case = SchemeCase::from_factory(SchemeRegistry::standard().resolve(&a.stat)?.as_ref(), a.k)?;
    let case = match a.inject_incoherent {
        Some(c) => case.corrupted(a.k, c)?,
        None => case,
    };
    let report = validate_weight_scheme(case.weight.as_ref(), a.max_n)?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&report).expect("reports serialize"))?;
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}
