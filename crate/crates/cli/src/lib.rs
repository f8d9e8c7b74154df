//! Command-line front end for `mulrank`.
//!
//! [`run`] parses arguments, executes one subcommand and returns the process
//! exit status: 0 on success, 1 on malformed input or a failed verification,
//! 2 when no bound applies.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mulrank::arith;
use mulrank::bounds::{self, BestBound, BoundQuery, BoundResult, EpsilonChoice, Method, Target};
use mulrank::evalinterp::{self, AlgorithmJson, RankResult, SymmetricBilinearAlgorithm, VerificationReport};
use mulrank::gaps::{self, NamedEstimate, ValueSet};
use mulrank::{primes, rational, AlgebraSpec, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NO_BOUND: i32 = 2;

/// Environment variable naming the sieve cache directory; it takes
/// precedence over `--cache-dir`.
pub const CACHE_ENV: &str = "MULRANK_CACHE";

#[derive(Parser, Debug)]
#[command(name = "mulrank", version, about = "Bilinear multiplication algorithms and complexity bounds over finite fields")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Directory for the prime-sieve cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Best upper bound for one target, base and degree.
    Bound(BoundArgs),
    /// Bounds over a grid of characteristics, degrees and methods.
    Table(TableArgs),
    /// Build the genus-0 evaluation-interpolation algorithm.
    Construct(ConstructArgs),
    /// Check an algorithm given as JSON on every basis pair.
    Verify(VerifyArgs),
    /// Exhaustive symmetric rank of a tiny algebra.
    Rank(RankArgs),
    /// Gaps in an integer value set.
    Gaps(GapsArgs),
    /// Levels of X_0(N) with genus and point-count data.
    Curves(CurvesArgs),
}

#[derive(Args, Debug)]
struct Base {
    /// Characteristic; symmetric targets use F_{p^2}, classical ones F_p.
    #[arg(long, conflicts_with = "q")]
    p: Option<u64>,
    /// Base field order.
    #[arg(long)]
    q: Option<u64>,
}

#[derive(Args, Debug)]
struct Degree {
    /// Extension degree.
    #[arg(long, conflicts_with = "l")]
    k: Option<u64>,
    /// Truncation length of F_q[t]/(t^l).
    #[arg(long)]
    l: Option<u64>,
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long, default_value = "sym-ext")]
    target: Target,
    #[command(flatten)]
    base: Base,
    #[command(flatten)]
    degree: Degree,
    /// Largest level in the modular-curve search.
    #[arg(long, default_value_t = bounds::DEFAULT_N_MAX)]
    nmax: u64,
    /// Use the refined point-count bound where it applies.
    #[arg(long)]
    refined: bool,
    /// Restrict to these methods (comma separated tags).
    #[arg(long, value_delimiter = ',')]
    methods: Vec<Method>,
    /// Prime-gap input: `certified` or a named estimate.
    #[arg(long, default_value = "certified")]
    epsilon: String,
    /// Report every method, not only the winner.
    #[arg(long)]
    all: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Characteristics, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    p: Vec<u64>,
    /// Degrees: `a..b` (inclusive), a single value, or a comma list.
    #[arg(long)]
    k: String,
    #[arg(long, value_delimiter = ',')]
    methods: Vec<Method>,
    #[arg(long, default_value_t = bounds::DEFAULT_N_MAX)]
    nmax: u64,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long)]
    q: u64,
    #[command(flatten)]
    degree: Degree,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Read the algorithm from standard input.
    #[arg(long, conflicts_with = "file")]
    stdin: bool,
    #[arg(long)]
    file: Option<PathBuf>,
    /// Report every failing pair instead of the first.
    #[arg(long)]
    all_failures: bool,
}

#[derive(Args, Debug)]
struct RankArgs {
    #[arg(long)]
    q: u64,
    #[command(flatten)]
    degree: Degree,
    /// Largest length searched.
    #[arg(long)]
    nmax: usize,
}

#[derive(Args, Debug)]
struct GapsArgs {
    /// primes, psi, psi-coprime:<p>, phi, fa:<spec>[;coprime=<m>], power2-psi, smooth-psi:<l,..>:<p>
    #[arg(long)]
    set: ValueSet,
    /// List consecutive elements with left end in `lo..hi`.
    #[arg(long, conflicts_with = "x")]
    window: Option<String>,
    /// Certify the relative gap over `[x, ymax]`.
    #[arg(long, requires = "ymax")]
    x: Option<String>,
    #[arg(long)]
    ymax: Option<u64>,
}

#[derive(Args, Debug)]
struct CurvesArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1000)]
    nmax: u64,
    #[arg(long)]
    refined: bool,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Error(String),
    NoBound(String),
    /// Output already written; only the status remains.
    Status(i32),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoApplicableMethod(m) => Failure::NoBound(format!("NO_APPLICABLE_METHOD: {m}")),
            e => Failure::Error(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let cache = std::env::var_os(CACHE_ENV).map(PathBuf::from).or(cli.cache_dir.clone());
    primes::set_cache_dir(cache);

    let mut out = Vec::new();
    let result = dispatch(&cli, stdin, &mut out);
    let _ = stdout.write_all(&out);
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Status(c)) => c,
        Err(Failure::Error(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_ERROR
        }
        Err(Failure::NoBound(m)) => {
            let _ = writeln!(stderr, "{m}");
            EXIT_NO_BOUND
        }
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut Vec<u8>) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Bound(a) => cmd_bound(a, f, out),
        Command::Table(a) => cmd_table(a, f, out),
        Command::Construct(a) => cmd_construct(a, f, out),
        Command::Verify(a) => cmd_verify(a, f, stdin, out),
        Command::Rank(a) => cmd_rank(a, f, out),
        Command::Gaps(a) => cmd_gaps(a, f, out),
        Command::Curves(a) => cmd_curves(a, f, out),
    }
}

fn write_json(out: &mut Vec<u8>, v: &impl serde::Serialize) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| Failure::Error(e.to_string()))?;
    out.push(b'\n');
    Ok(())
}

fn no_csv(cmd: &str) -> Failure {
    Failure::Error(format!("csv output is not available for {cmd}"))
}

fn degree_of(d: &Degree, short: bool) -> std::result::Result<u64, Failure> {
    match (d.k, d.l) {
        (Some(k), None) if !short => Ok(k),
        (None, Some(l)) if short => Ok(l),
        (None, None) => Err(Failure::Error(format!("--{} is required", if short { "l" } else { "k" }))),
        _ => Err(Failure::Error(format!(
            "use --{} for this target",
            if short { "l" } else { "k" }
        ))),
    }
}

// ---------------------------------------------------------------------------
// bound

fn parse_epsilon(s: &str) -> std::result::Result<EpsilonChoice, Failure> {
    if s.eq_ignore_ascii_case("certified") {
        return Ok(EpsilonChoice::Certified);
    }
    s.parse::<NamedEstimate>()
        .map(EpsilonChoice::Named)
        .map_err(|e| Failure::Error(e.to_string()))
}

fn cmd_bound(a: &BoundArgs, f: Format, out: &mut Vec<u8>) -> Outcome {
    let target = a.target;
    let q = match (a.base.p, a.base.q) {
        (Some(p), None) => {
            if !primes::is_prime(p) {
                return Err(Error::NotPrime(p).into());
            }
            target.base_from_p(p)
        }
        (None, Some(q)) => q,
        _ => return Err(Failure::Error("one of --p or --q is required".into())),
    };
    let degree = degree_of(&a.degree, target.is_short())?;
    let query = BoundQuery::new(target, q, degree)
        .with_n_max(a.nmax)
        .with_refined(a.refined)
        .with_epsilon(parse_epsilon(&a.epsilon)?);

    let mut results = if a.methods.is_empty() {
        bounds::evaluate_all(&query)?
    } else {
        let mut ms = a.methods.clone();
        ms.sort();
        ms.dedup();
        ms.into_iter()
            .map(|m| bounds::evaluate_method(&query, m))
            .collect::<mulrank::Result<Vec<_>>>()?
    };

    if a.all {
        let any = results.iter().any(BoundResult::is_applicable);
        match f {
            Format::Json => write_json(out, &results)?,
            Format::Csv => bound_csv(out, &results),
            Format::Text => {
                for r in &results {
                    render_result(out, r);
                }
            }
        }
        return if any { Ok(()) } else { Err(Failure::Status(EXIT_NO_BOUND)) };
    }

    let best = results
        .iter()
        .enumerate()
        .filter(|(_, r)| r.is_applicable())
        .min_by_key(|(i, r)| (r.value, *i))
        .map(|(i, _)| i);
    let Some(i) = best else {
        let reasons: Vec<String> = results
            .iter()
            .map(|r| format!("{}: {}", r.method, r.reason().unwrap_or_default()))
            .collect();
        return Err(Failure::NoBound(format!(
            "NO_APPLICABLE_METHOD: {target} over F_{q} at degree {degree}: {}",
            reasons.join("; ")
        )));
    };
    let winner = results.remove(i);
    match f {
        Format::Json => write_json(out, &winner)?,
        Format::Csv => bound_csv(out, std::slice::from_ref(&winner)),
        Format::Text => {
            render_result(out, &winner);
            let best = BestBound { winner, others: results };
            let beaten: Vec<String> = best
                .others
                .iter()
                .filter(|r| r.is_applicable())
                .map(|r| format!("{} {}", r.method, r.value.unwrap()))
                .collect();
            if !beaten.is_empty() {
                out.extend_from_slice(format!("  other bounds: {}\n", beaten.join(", ")).as_bytes());
            }
        }
    }
    Ok(())
}

fn bound_csv(out: &mut Vec<u8>, rs: &[BoundResult]) {
    let mut s = String::from("target,q,degree,method,status,value,effective\n");
    for r in rs {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            r.target,
            r.q,
            r.degree,
            r.method,
            r.status,
            r.value.map(|v| v.to_string()).unwrap_or_default(),
            r.effective
        );
    }
    out.extend_from_slice(s.as_bytes());
}

fn render_result(out: &mut Vec<u8>, r: &BoundResult) {
    let mut s = String::new();
    let what = match r.value {
        Some(v) => v.to_string(),
        None => r.status.to_string(),
    };
    let _ = writeln!(s, "{} over F_{} at degree {}: {} [{}]", r.target, r.q, r.degree, what, r.method);
    if let Some(n) = r.nominal {
        let _ = writeln!(s, "  nominal value {n:.3}");
    }
    let p = &r.provenance;
    let mut facts = Vec::new();
    if let Some(n) = p.level {
        facts.push(format!("N = {n}"));
    }
    if let Some(g) = p.genus {
        facts.push(format!("genus {g}"));
    }
    if let Some(v) = p.psi {
        facts.push(format!("psi {v}"));
    }
    if let Some(x) = &p.psi_target {
        facts.push(format!("psi target {}", rational::to_string(x)));
    }
    if let Some(e) = &p.epsilon {
        facts.push(format!("eps {}", rational::to_string(e)));
    }
    if !facts.is_empty() {
        let _ = writeln!(s, "  {}", facts.join(", "));
    }
    if let Some(src) = &p.epsilon_source {
        let _ = writeln!(s, "  eps source: {src}");
    }
    if let Some(t) = &p.threshold {
        let _ = writeln!(s, "  threshold: {t}");
    }
    if let Some(n) = &p.note {
        let _ = writeln!(s, "  {n}");
    }
    for c in &r.conditions {
        let _ = writeln!(s, "  [{}] {}: {}", if c.passed { "ok" } else { "no" }, c.name, c.detail);
    }
    out.extend_from_slice(s.as_bytes());
}

// ---------------------------------------------------------------------------
// table

fn parse_k_list(s: &str) -> std::result::Result<Vec<u64>, Failure> {
    let bad = |t: &str| Failure::Error(format!("cannot parse degree list {t:?}"));
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let a: u64 = a.trim().parse().map_err(|_| bad(s))?;
        let b: u64 = b.trim().parse().map_err(|_| bad(s))?;
        if b >= a && b - a >= bounds::MAX_TABLE_CELLS {
            return Err(Error::OutOfRange(format!("degree range {s} exceeds {} values", bounds::MAX_TABLE_CELLS)).into());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(|t| t.trim().parse().map_err(|_| bad(s))).collect()
}

fn cmd_table(a: &TableArgs, f: Format, out: &mut Vec<u8>) -> Outcome {
    let ks = parse_k_list(&a.k)?;
    let methods = if a.methods.is_empty() { Method::ALL.to_vec() } else { a.methods.clone() };
    let rows = bounds::bound_table(&a.p, &ks, &methods, a.nmax)?;
    match f {
        Format::Json => write_json(out, &rows)?,
        Format::Csv => {
            let mut s = String::from("p,k,method,value,effective\n");
            for r in &rows {
                let v = r.value_field();
                let v = if v.contains(',') || v.contains('"') { format!("\"{}\"", v.replace('"', "\"\"")) } else { v };
                let _ = writeln!(s, "{},{},{},{},{}", r.p, r.k, r.method, v, r.effective);
            }
            out.extend_from_slice(s.as_bytes());
        }
        Format::Text => {
            let mut s = format!("{:>5} {:>8} {:<16} {}\n", "p", "k", "method", "value");
            for r in &rows {
                let _ = writeln!(s, "{:>5} {:>8} {:<16} {}", r.p, r.k, r.method.tag(), r.value_field());
            }
            out.extend_from_slice(s.as_bytes());
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// construct / verify / rank

fn spec_for(q: u64, d: &Degree) -> std::result::Result<AlgebraSpec, Failure> {
    Ok(match (d.k, d.l) {
        (Some(k), None) => AlgebraSpec::field(q, k as usize)?,
        (None, Some(l)) => AlgebraSpec::truncation(q, l as usize)?,
        _ => return Err(Failure::Error("exactly one of --k or --l is required".into())),
    })
}

fn cmd_construct(a: &ConstructArgs, f: Format, out: &mut Vec<u8>) -> Outcome {
    let alg = evalinterp::construct_genus0(spec_for(a.q, &a.degree)?)?;
    match f {
        Format::Json => write_json(out, &alg.to_json()),
        Format::Csv => Err(no_csv("construct")),
        Format::Text => {
            out.extend_from_slice(render_algorithm(&alg).as_bytes());
            Ok(())
        }
    }
}

fn render_algorithm(alg: &SymmetricBilinearAlgorithm) -> String {
    let spec = &alg.spec;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:?} of degree {} over F_{}, length {}",
        spec.kind(),
        spec.degree(),
        spec.base().order(),
        alg.length()
    );
    for (i, (form, w)) in alg.forms.iter().zip(&alg.outputs).enumerate() {
        let site = alg
            .points
            .as_ref()
            .map(|p| format!(" at {}", p[i]))
            .unwrap_or_default();
        let _ = writeln!(s, "  {i}{site}: form {form:?} -> {}", spec.render(w));
    }
    s
}

fn read_algorithm(a: &VerifyArgs, stdin: &mut dyn Read) -> std::result::Result<SymmetricBilinearAlgorithm, Failure> {
    let mut text = String::new();
    match (&a.file, a.stdin) {
        (Some(path), _) => {
            text = std::fs::read_to_string(path).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))?;
        }
        (None, true) => {
            stdin.read_to_string(&mut text)?;
        }
        (None, false) => return Err(Failure::Error("give --stdin or --file".into())),
    }
    let j: AlgorithmJson = serde_json::from_str(&text).map_err(|e| Failure::Error(format!("malformed algorithm JSON: {e}")))?;
    Ok(SymmetricBilinearAlgorithm::from_json(&j)?)
}

fn report_json(alg: &SymmetricBilinearAlgorithm, r: &VerificationReport) -> Value {
    let spec = &alg.spec;
    json!({
        "passed": r.passed,
        "length": alg.length(),
        "pairs_checked": r.pairs_checked,
        "failures": r.failures.iter().map(|b| json!({
            "a": b.a,
            "b": b.b,
            "expected": spec.encode_element(&b.expected),
            "computed": spec.encode_element(&b.computed),
        })).collect::<Vec<_>>(),
    })
}

fn cmd_verify(a: &VerifyArgs, f: Format, stdin: &mut dyn Read, out: &mut Vec<u8>) -> Outcome {
    let alg = read_algorithm(a, stdin)?;
    let report = evalinterp::verify(&alg, a.all_failures)?;
    match f {
        Format::Json => write_json(out, &report_json(&alg, &report))?,
        Format::Csv => return Err(no_csv("verify")),
        Format::Text => {
            let mut s = String::new();
            if report.passed {
                let _ = writeln!(s, "PASS ({} basis pairs, length {})", report.pairs_checked, alg.length());
            } else {
                let _ = writeln!(s, "FAIL");
                for b in &report.failures {
                    let _ = writeln!(
                        s,
                        "  pair ({}, {}): expected {}, computed {}",
                        b.a,
                        b.b,
                        alg.spec.render(&b.expected),
                        alg.spec.render(&b.computed)
                    );
                }
            }
            out.extend_from_slice(s.as_bytes());
        }
    }
    if report.passed { Ok(()) } else { Err(Failure::Status(EXIT_ERROR)) }
}

fn cmd_rank(a: &RankArgs, f: Format, out: &mut Vec<u8>) -> Outcome {
    let spec = spec_for(a.q, &a.degree)?;
    let res = evalinterp::bruteforce_symmetric_rank(&spec, a.nmax)?;
    match f {
        Format::Json => {
            let v = match &res {
                RankResult::Exact { rank, witness } => json!({"result": "EXACT", "rank": rank, "witness": witness.to_json()}),
                RankResult::Exceeds(n) => json!({"result": "EXCEEDS", "n_max": n}),
            };
            write_json(out, &v)?;
        }
        Format::Csv => return Err(no_csv("rank")),
        Format::Text => {
            let s = match &res {
                RankResult::Exact { rank, witness } => format!("RANK {rank}\n{}", render_algorithm(witness)),
                RankResult::Exceeds(n) => format!("EXCEEDS({n})\n"),
            };
            out.extend_from_slice(s.as_bytes());
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// gaps / curves

fn cmd_gaps(a: &GapsArgs, f: Format, out: &mut Vec<u8>) -> Outcome {
    if let Some(x) = &a.x {
        let x = rational::parse(x)?;
        let cert = gaps::epsilon_window(&x, a.ymax.unwrap(), &a.set)?;
        return match f {
            Format::Json => write_json(out, &cert),
            Format::Csv => Err(no_csv("a gap certificate")),
            Format::Text => {
                let s = format!(
                    "eps over [{}, {}] in {}: {}\n  ceiling at x: {}\n  maximised as y -> {} from above, next element {}\n",
                    rational::to_string(&cert.x),
                    cert.y_max,
                    cert.set,
                    rational::to_string(&cert.epsilon_window),
                    cert.witness,
                    rational::to_string(&cert.max_left),
                    cert.max_right
                );
                out.extend_from_slice(s.as_bytes());
                Ok(())
            }
        };
    }
    let Some(window) = &a.window else {
        return Err(Failure::Error("give --window lo..hi or --x with --ymax".into()));
    };
    let bad = || Failure::Error(format!("cannot parse window {window:?}; expected lo..hi"));
    let (lo, hi) = window.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    let rows = gaps::gap_rows(&a.set, lo, hi)?;
    match f {
        Format::Json => write_json(out, &rows)?,
        Format::Csv | Format::Text => {
            let mut s = String::from("y_left,y_right,gap,ratio_num,ratio_den\n");
            for r in &rows {
                let _ = writeln!(s, "{},{},{},{},{}", r.left, r.right, r.gap, r.ratio.numer(), r.ratio.denom());
            }
            out.extend_from_slice(s.as_bytes());
        }
    }
    Ok(())
}

fn cmd_curves(a: &CurvesArgs, f: Format, out: &mut Vec<u8>) -> Outcome {
    let cands = arith::curve_candidates(a.p, a.nmax, a.refined)?;
    match f {
        Format::Json => write_json(out, &cands)?,
        Format::Csv => arith::write_candidates_csv(&mut *out, &cands)?,
        Format::Text => {
            let mut s = format!("{:>8} {:>10} {:>6} {}\n", "N", "psi", "genus", "point_lb");
            for c in &cands {
                let _ = writeln!(s, "{:>8} {:>10} {:>6} {}", c.n, c.psi, c.genus, rational::to_string(&c.point_lb));
            }
            out.extend_from_slice(s.as_bytes());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut argv = vec!["mulrank"];
        argv.extend_from_slice(args);
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(argv, &mut input.as_bytes(), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn degree_lists() {
        assert_eq!(parse_k_list("30..40").ok().unwrap().len(), 11);
        assert_eq!(parse_k_list("30..=32").ok().unwrap(), vec![30, 31, 32]);
        assert_eq!(parse_k_list("5,7").ok().unwrap(), vec![5, 7]);
        assert!(parse_k_list("").ok().unwrap().is_empty());
        assert!(parse_k_list("40..30").ok().unwrap().is_empty());
        assert!(parse_k_list("x..3").is_err());
    }

    #[test]
    fn bound_json_matches_library() {
        let (code, out, _) = call(&["bound", "--target", "sym-ext", "--p", "7", "--k", "29", "--nmax", "10000", "--format", "json"], "");
        assert_eq!(code, EXIT_OK);
        let best = bounds::best_bound(&BoundQuery::new(Target::SymExt, 49, 29).with_n_max(10_000)).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v, serde_json::to_value(&best.winner).unwrap());
    }

    #[test]
    fn exit_codes() {
        let (code, out, err) = call(&["bound", "--target", "sym-ext", "--p", "5", "--k", "100"], "");
        assert_eq!(code, EXIT_NO_BOUND);
        assert!(out.is_empty());
        assert!(err.contains("NO_APPLICABLE_METHOD"));
        assert_eq!(call(&["bound", "--p", "7"], "").0, EXIT_ERROR);
        assert_eq!(call(&["bound", "--p", "8", "--k", "3"], "").0, EXIT_ERROR);
        assert_eq!(call(&["bound", "--p", "seven", "--k", "3"], "").0, EXIT_ERROR);
        assert_eq!(call(&["frobnicate"], "").0, EXIT_ERROR);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
        assert_eq!(call(&["bound", "--p", "7", "--k", "3", "--methods", "cor-iv"], "").0, EXIT_NO_BOUND);
    }

    #[test]
    fn verify_reads_stdin() {
        let (code, alg, _) = call(&["construct", "--q", "4", "--k", "3", "--format", "json"], "");
        assert_eq!(code, EXIT_OK);
        let (code, out, _) = call(&["verify", "--stdin"], &alg);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.starts_with("PASS"));
        assert_eq!(call(&["verify", "--stdin"], "{").0, EXIT_ERROR);
    }
}
