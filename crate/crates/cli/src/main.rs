use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use schurtrunc::cache::{self, LoadStatus, CACHE_ENV};
use schurtrunc::jt::{bigint_json, jt_determinant, jt_terms, positivity_report, truncation, truncation_schur};
use schurtrunc::kostant::{kostant_p, kostka_alternating_sum};
use schurtrunc::lorentzian::{is_lorentzian, normalized_truncation};
use schurtrunc::partition::{Partition, SkewShape};
use schurtrunc::sweep::{self, Suite, SweepConfig};
use schurtrunc::symfunc::{to_monomial, SymPoly};
use schurtrunc::tableau::count_ssyt;
use schurtrunc::weight::Weight;

const EXIT_USAGE: u8 = 2;
const EXIT_MATH: u8 = 3;

#[derive(Parser)]
#[command(name = "schurtrunc", version, about = "Exact Jacobi-Trudi truncations, Kostka numbers and Lorentzian checks")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Memo cache file for Kostant and Kostka values.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Both,
    Ssyt,
    Kostant,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    H,
    Schur,
    Monomial,
}

#[derive(Subcommand)]
enum Command {
    /// Kostka number K(λ, τ) from tableaux and/or the Kostant alternating sum.
    Kostka {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        tau: Weight,
        /// Rank; τ is padded with zeros up to it. Defaults to the length of τ.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Oracle::Both)]
        oracle: Oracle,
    },
    /// Kostant partition function p(v).
    Kostant {
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Truncation g^k of the Jacobi-Trudi expansion of μ/ν.
    Truncate {
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value = "")]
        nu: Partition,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::Schur)]
        basis: BasisArg,
    },
    /// Signed terms and determinant of the Jacobi-Trudi expansion of μ/ν.
    Jt {
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value = "")]
        nu: Partition,
        #[arg(long)]
        n: Option<usize>,
        /// Also report the Schur expansion of every truncation.
        #[arg(long)]
        positivity: bool,
    },
    /// Lorentzian check of the normalized truncation g^k of μ.
    Lorentzian {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        k: usize,
        #[arg(long, visible_alias = "vars")]
        n: Option<usize>,
    },
    /// Run verification sweeps over all skew shapes up to a size bound.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_boxes: u32,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Comma-separated suites; all of them when omitted.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<Suite>,
        /// Write the manifest, including wall time, to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

struct Report {
    json: Value,
    plain: String,
    ok: bool,
}

fn default_rank(mu: &Partition, nu: &Partition) -> usize {
    mu.len().max(nu.len() + 1)
}

fn kostka_cmd(lambda: Partition, tau: Weight, n: Option<usize>, oracle: Oracle) -> Result<Report, String> {
    let n = n.unwrap_or(tau.len());
    if tau.len() > n {
        return Err(format!("τ has {} entries but n = {n}", tau.len()));
    }
    let mut entries = tau.entries().to_vec();
    entries.resize(n, 0);
    let tau = Weight::new(entries);
    let ssyt = matches!(oracle, Oracle::Both | Oracle::Ssyt)
        .then(|| BigInt::from(count_ssyt(&SkewShape::straight(lambda.clone()), &tau)));
    let kostant = if matches!(oracle, Oracle::Both | Oracle::Kostant) {
        // λ with more than n parts has no weights in rank n
        Some(if lambda.len() > n { BigInt::default() } else { kostka_alternating_sum(&lambda, &tau).map_err(|e| e.to_string())? })
    } else {
        None
    };
    let agree = match (&ssyt, &kostant) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let mut plain = String::new();
    for (name, v) in [("kostant", &kostant), ("ssyt", &ssyt)] {
        if let Some(v) = v {
            writeln!(plain, "{name}: {v}").unwrap();
        }
    }
    if let Some(a) = agree {
        writeln!(plain, "{}", if a { "agree" } else { "DISAGREE" }).unwrap();
    }
    let json = json!({
        "schema": 1,
        "lambda": lambda.to_string(),
        "tau": tau.to_string(),
        "n": n,
        "kostant": kostant.as_ref().map(bigint_json),
        "ssyt": ssyt.as_ref().map(bigint_json),
        "agree": agree,
    });
    Ok(Report { json, plain, ok: agree != Some(false) })
}

fn kostant_cmd(weight: Weight) -> Report {
    let p = BigInt::from(kostant_p(&weight));
    Report {
        json: json!({ "schema": 1, "weight": weight.to_string(), "n": weight.len(), "value": bigint_json(&p) }),
        plain: format!("{p}\n"),
        ok: true,
    }
}

fn truncate_cmd(mu: Partition, nu: Partition, n: Option<usize>, k: usize, basis: BasisArg) -> Result<Report, String> {
    let n = n.unwrap_or_else(|| default_rank(&mu, &nu));
    let err = |e: schurtrunc::Error| e.to_string();
    let (poly, name): (SymPoly, &str) = match basis {
        BasisArg::H => (truncation(&mu, &nu, n, k).map_err(err)?, "h"),
        BasisArg::Schur => (truncation_schur(&mu, &nu, n, k).map_err(err)?, "schur"),
        BasisArg::Monomial => (to_monomial(&truncation(&mu, &nu, n, k).map_err(err)?).map_err(err)?, "monomial"),
    };
    let nonneg = (basis == BasisArg::Schur).then(|| poly.is_nonnegative());
    let mut json = json!({
        "schema": 1,
        "mu": mu.to_string(),
        "nu": nu.to_string(),
        "n": n,
        "k": k,
        "basis": name,
        "poly": poly,
    });
    let mut plain = format!("g^{k} for {mu}/{nu}, n = {n}: {poly}\n");
    if let Some(nonneg) = nonneg {
        json["nonneg"] = json!(nonneg);
        writeln!(plain, "{}", if nonneg { "nonneg" } else { "NEGATIVE COEFFICIENT" }).unwrap();
    }
    Ok(Report { json, plain, ok: nonneg != Some(false) })
}

fn jt_cmd(mu: Partition, nu: Partition, n: Option<usize>, positivity: bool) -> Result<Report, String> {
    let n = n.unwrap_or_else(|| default_rank(&mu, &nu));
    let err = |e: schurtrunc::Error| e.to_string();
    let terms = jt_terms(&mu, &nu, n).map_err(err)?;
    let det = jt_determinant(&mu, &nu, n).map_err(err)?;
    let mut plain = format!("{mu}/{nu}, n = {n}\n");
    let term_docs: Vec<Value> = terms
        .iter()
        .map(|t| {
            writeln!(plain, "{} l={} {} h[{}]", t.w, t.w.length(), if t.sign > 0 { "+" } else { "-" }, t.hvector).unwrap();
            json!({ "w": t.w, "length": t.w.length(), "sign": t.sign, "hvector": t.hvector, "dotweight": t.dotweight })
        })
        .collect();
    writeln!(plain, "det = {det}").unwrap();
    let mut json = json!({
        "schema": 1,
        "mu": mu.to_string(),
        "nu": nu.to_string(),
        "n": n,
        "terms": term_docs,
        "determinant": det,
    });
    let mut ok = true;
    if positivity {
        let report = positivity_report(&mu, &nu, n).map_err(err)?;
        for row in &report.rows {
            let coeffs: Vec<String> = row.schur_coefficients.iter().map(|(l, c)| format!("({l}):{c}")).collect();
            writeln!(plain, "k={} {} {}", row.k, coeffs.join(" "), if row.all_nonnegative { "nonneg" } else { "NEGATIVE" }).unwrap();
        }
        writeln!(plain, "telescoping ok").unwrap();
        ok = report.all_nonnegative();
        json["positivity"] = report.to_json();
    }
    Ok(Report { json, plain, ok })
}

fn lorentzian_cmd(mu: Partition, k: usize, n: Option<usize>) -> Result<Report, String> {
    let nu = Partition::empty();
    let n = n.unwrap_or_else(|| default_rank(&mu, &nu));
    let f = normalized_truncation(&mu, &nu, n, k).map_err(|e| e.to_string())?;
    let verdict = is_lorentzian(&f);
    let mut plain = format!("normalized g^{k} for {mu}, n = {n}: {f}\nlorentzian: {}\n", verdict.lorentzian);
    if let Some(fail) = &verdict.failed_condition {
        writeln!(plain, "failed: {} {}", fail.kind, fail.witness).unwrap();
    }
    let json = json!({
        "schema": 1,
        "mu": mu.to_string(),
        "k": k,
        "n": n,
        "degree": f.degree(),
        "lorentzian": verdict.lorentzian,
        "failed_condition": verdict.failed_condition,
    });
    Ok(Report { json, plain, ok: verdict.lorentzian })
}

fn verify_cmd(config: SweepConfig) -> Result<Report, String> {
    let manifest = sweep::run(&config).map_err(|e| e.to_string())?;
    if let Some(path) = &config.output {
        let text = serde_json::to_string_pretty(&manifest.to_json(true)).unwrap();
        fs::write(path, text + "\n").map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    let mut plain = format!("max_boxes = {}, n = {}\n", config.max_boxes, config.n);
    for r in &manifest.results {
        writeln!(plain, "{} {}: {} cases, {} failures", if r.failures == 0 { "PASS" } else { "FAIL" }, r.suite, r.cases, r.failures)
            .unwrap();
        for w in &r.witnesses {
            writeln!(plain, "    {w}").unwrap();
        }
    }
    Ok(Report { json: manifest.to_json(false), plain, ok: manifest.passed() })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // only fails if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    let cache_path = cli.cache.filter(|p| !p.as_os_str().is_empty());
    if let Some(path) = &cache_path {
        if cache::load(path) == LoadStatus::Discarded {
            eprintln!("warning: cache {} is unreadable; rebuilding", path.display());
        }
    }
    let result = match cli.command {
        Command::Kostka { lambda, tau, n, oracle } => kostka_cmd(lambda, tau, n, oracle),
        Command::Kostant { weight } => Ok(kostant_cmd(weight)),
        Command::Truncate { mu, nu, n, k, basis } => truncate_cmd(mu, nu, n, k, basis),
        Command::Jt { mu, nu, n, positivity } => jt_cmd(mu, nu, n, positivity),
        Command::Lorentzian { mu, k, n } => lorentzian_cmd(mu, k, n),
        Command::Verify { max_boxes, n, suites, output } => {
            let suites = if suites.is_empty() { Suite::ALL.to_vec() } else { suites };
            let config = SweepConfig { max_boxes, n, suites, output, cache: cache_path.clone(), jobs: cli.jobs };
            verify_cmd(config)
        }
    };
    let report = match result {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).unwrap()),
        Format::Plain => print!("{}", report.plain),
    }
    if let Some(path) = &cache_path {
        if let Err(e) = cache::save(path) {
            eprintln!("warning: cannot write cache {}: {e}", path.display());
        }
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MATH)
    }
}
