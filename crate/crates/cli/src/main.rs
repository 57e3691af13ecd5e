use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use bnclass_core::certify::{self, ScanPolicy};
use bnclass_core::chern::{self, Variant};
use bnclass_core::pairing::{self, EngineConfig, IdealPresentation, QuotientEngine};
use bnclass_core::porteous;
use bnclass_core::suites::{self, SuiteParams};
use bnclass_core::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "bnclass", version, about = "Virtual classes of rank-2 Brill-Noether loci")]
struct Cli {
    /// Switch off the closed-form pairing engine.
    #[arg(long, global = true)]
    no_thaddeus: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Inclusive range written `a..b`, or a single value.
#[derive(Clone, Copy, Debug)]
struct Span(u32, u32);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Span, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad bound '{t}': {e}"));
        let span = match s.split_once("..") {
            Some((a, b)) => Span(num(a)?, num(b.trim_start_matches('='))?),
            None => Span(num(s)?, num(s)?),
        };
        if span.0 == 0 || span.0 > span.1 {
            return Err(format!("empty or zero-based range '{s}'"));
        }
        Ok(span)
    }
}

impl Span {
    fn iter(self) -> std::ops::RangeInclusive<u32> {
        self.0..=self.1
    }
}

/// Exponents `m,n,p` of `alpha^m beta^n gamma^p`.
#[derive(Clone, Copy, Debug)]
struct Exponents(u64, u64, u64);

impl FromStr for Exponents {
    type Err = String;

    fn from_str(s: &str) -> Result<Exponents, String> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|e| format!("bad exponent '{t}': {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        match parts[..] {
            [m, n, p] => Ok(Exponents(m, n, p)),
            _ => Err(format!("expected m,n,p, got '{s}'")),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Chern class c_n.
    Chern {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "full")]
        variant: Variant,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the Porteous class P_k.
    Class {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit a mod-g non-vanishing certificate.
    Certify {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        g: u64,
        #[arg(long, default_value = "direct")]
        mode: String,
        #[arg(long)]
        json: bool,
    },
    /// Direct certification over a grid, as CSV.
    Scan {
        #[arg(long, default_value = "1..5")]
        r: Span,
        #[arg(long, default_value = "4..10")]
        k: Span,
        /// Further primes to try past the first admissible one.
        #[arg(long, default_value_t = 0)]
        extra_primes: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Intersection number of a top monomial.
    Pair {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        monomial: Exponents,
        #[arg(long, default_value = "quotient")]
        engine: String,
    },
    /// Intersection number of alpha^e P_k in genus g.
    PairClass {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "quotient")]
        engine: String,
    },
    /// Show the relation ideal, or express a Chern class in it.
    Ideal {
        #[arg(long)]
        g: u32,
        /// A class `cN`, taken with rank parameter `--r` (default g).
        #[arg(long)]
        express: Option<String>,
        #[arg(long)]
        r: Option<u32>,
    },
    /// Run a verification suite.
    Verify {
        /// chern, factorization, hankel, pairing, certify, appendix or all.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        r_max: Option<u32>,
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        u_max: Option<u32>,
        #[arg(long)]
        p_max: Option<u64>,
    },
    /// Genus thresholds as CSV.
    Thresholds {
        #[arg(long, default_value = "1..5")]
        r: Span,
        #[arg(long, default_value = "1..10")]
        k: Span,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Core(Error),
    Io(String),
    Suite,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Failure {
        Failure::Io(e.to_string())
    }
}

fn sink(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn chern_cmd(r: u32, n: usize, variant: Variant, format: Format) -> Result<(), Failure> {
    if r == 0 {
        return Err(Error::Precondition("r must be positive".into()).into());
    }
    let c = chern::chern_table(r, n, variant).get(n as i64);
    match format {
        Format::Text => println!("{c}"),
        Format::Json => {
            let v = json!({"r": r, "n": n, "variant": variant, "poly": c.to_string()});
            println!("{v}");
        }
    }
    Ok(())
}

fn class_cmd(r: u32, k: u32, format: Format) -> Result<(), Failure> {
    if r == 0 || k == 0 {
        return Err(Error::Precondition("r and k must be positive".into()).into());
    }
    let vc = porteous::virtual_class(r, k)?;
    match format {
        Format::Text => println!("{}", vc.poly),
        Format::Json => {
            let m = &vc.matrix;
            let matrix: Vec<Vec<String>> =
                (0..m.rows()).map(|i| (0..m.rows()).map(|j| m.get(i, j).to_string()).collect()).collect();
            let v = json!({
                "r": r,
                "k": k,
                "K": vc.degree(),
                "matrix": matrix,
                "poly": vc.poly.to_string(),
            });
            println!("{v}");
        }
    }
    Ok(())
}

fn certify_cmd(r: u32, k: u32, g: u64, mode: &str, as_json: bool) -> Result<(), Failure> {
    let cert = certify::certify(r, k, g, mode)?;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&cert).map_err(|e| Failure::Io(e.to_string()))?);
        return Ok(());
    }
    println!("r={} k={} g={} mode={}", cert.r, cert.k, cert.g, cert.mode);
    println!("test {} value {} mod {}", cert.test, cert.value, cert.g);
    if let Some(k0) = cert.k0 {
        println!("k0 {k0}");
    }
    match cert.valid_for_all_genus_ge {
        Some(g0) => println!("verdict {} (valid for all genus >= {g0})", cert.verdict),
        None => println!("verdict {}", cert.verdict),
    }
    Ok(())
}

fn scan_cmd(r: Span, k: Span, extra_primes: u32, out: &Option<PathBuf>) -> Result<(), Failure> {
    let rows = certify::scan(r.iter(), k.iter(), ScanPolicy { extra_primes })?;
    let mut w = csv::Writer::from_writer(sink(out)?);
    for row in &rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn pair_cmd(g: u64, e: Exponents, engine: &str, config: EngineConfig) -> Result<(), Failure> {
    let engine = pairing::pairing_engine(engine, config)?;
    let v = engine.pair(e.0, e.1, e.2, g)?;
    println!("(a^{}*b^{}*g^{}) = {v}  [g={g}, engine={}]", e.0, e.1, e.2, engine.name());
    Ok(())
}

fn pair_class_cmd(g: u64, r: u32, k: u32, engine: &str, config: EngineConfig) -> Result<(), Failure> {
    let engine = pairing::pairing_engine(engine, config)?;
    let class = pairing::top_multiple(r, k, g)?;
    let v = pairing::evaluate_class(&class, g, engine.as_ref())?;
    let e = certify::excess(r, k, g);
    println!("(a^{e}*P_{k}) = {v}  [r={r}, g={g}, engine={}]", engine.name());
    Ok(())
}

fn ideal_cmd(g: u32, express: &Option<String>, r: Option<u32>) -> Result<(), Failure> {
    let ideal = IdealPresentation::for_genus(g)?;
    let Some(class) = express else {
        for (name, p) in &ideal.generators {
            println!("{name} = {p}");
        }
        return Ok(());
    };
    let n: usize = class
        .strip_prefix('c')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected a class cN, got '{class}'")))?;
    let r = r.unwrap_or(g);
    // 2^n n! clears the denominators of c_n
    let scale = (1..=n as i64).product::<i64>() << n;
    let c = chern::chern_table_full(r, n).get(n as i64).scale_int(scale);
    let x = QuotientEngine::shared(g)?.express_in_ideal(&c)?;
    println!("{scale}*c{n} (r={r}) in I_{g}");
    for (name, coeff) in x.names.iter().zip(&x.coeffs) {
        println!("{name}: {coeff}");
    }
    println!("unique: {}", x.unique);
    Ok(())
}

fn verify_cmd(suite: &str, params: SuiteParams) -> Result<(), Failure> {
    let selected = if suite == "all" { suites::suite_registry() } else { vec![suites::verify_suite(suite)?] };
    let mut ok = true;
    for s in selected {
        let rep = s.run(&params);
        println!("suite {}", rep.suite);
        for c in &rep.checks {
            println!("{c}");
        }
        ok &= rep.passed();
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Suite)
    }
}

fn thresholds_cmd(r: Span, k: Span, out: &Option<PathBuf>) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(sink(out)?);
    w.write_record(["r", "k", "K", "g0", "g_prime", "g_thm", "teixidor", "improves_teixidor"])?;
    for r in r.iter() {
        for k in k.iter() {
            let t = certify::thresholds(r, k);
            w.write_record([
                t.r.to_string(),
                t.k.to_string(),
                t.big_k.to_string(),
                t.g0.to_string(),
                t.g_prime.to_string(),
                t.g_thm.to_string(),
                t.teixidor.to_string(),
                t.improves_teixidor().to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    let config = EngineConfig { thaddeus: !cli.no_thaddeus };
    match cli.cmd {
        Cmd::Chern { r, n, variant, format } => chern_cmd(r, n, variant, format),
        Cmd::Class { r, k, format } => class_cmd(r, k, format),
        Cmd::Certify { r, k, g, mode, json } => certify_cmd(r, k, g, &mode, json),
        Cmd::Scan { r, k, extra_primes, out } => scan_cmd(r, k, extra_primes, &out),
        Cmd::Pair { g, monomial, engine } => pair_cmd(g, monomial, &engine, config),
        Cmd::PairClass { g, r, k, engine } => pair_class_cmd(g, r, k, &engine, config),
        Cmd::Ideal { g, express, r } => ideal_cmd(g, &express, r),
        Cmd::Verify { suite, r_max, k_max, n_max, u_max, p_max } => {
            verify_cmd(&suite, SuiteParams { r_max, k_max, n_max, u_max, p_max, engines: config })
        }
        Cmd::Thresholds { r, k, out } => thresholds_cmd(r, k, &out),
    }
}

fn thread_pool() -> Result<(), String> {
    let Ok(raw) = std::env::var("BN_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("BN_THREADS must be a positive integer, got '{raw}'"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Err(msg) = thread_pool() {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Suite) => ExitCode::from(3),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
    }
}
