//! Verification sweeps over all skew shapes up to a size bound.
//!
//! Each suite turns into a list of independent cases that run in parallel.
//! Results are collected in case order, so the manifest does not depend on
//! scheduling.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::jt::{bigint_json, jt_determinant, jt_terms, telescoping_failure, truncation, truncation_schur};
use crate::kostant::{image_weight_mult, kostka_alternating_sum};
use crate::lorentzian::{densify, is_lorentzian, normalized_truncation};
use crate::partition::{enumerate_partitions, subpartitions, Partition, SkewShape};
use crate::perm::max_length;
use crate::symfunc::{bialternant_schur, skew_schur_monomial, to_monomial, Basis, SymPoly};
use crate::tableau::count_ssyt;
use crate::weight::{weights_with_sum, Weight};

/// Witnesses kept per suite in the manifest; the failure count is always exact.
pub const WITNESS_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    JacobiTrudi,
    Kostka,
    Positivity,
    Telescoping,
    ImagePositivity,
    Bialternant,
    Lorentzian,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::JacobiTrudi,
        Suite::Kostka,
        Suite::Positivity,
        Suite::Telescoping,
        Suite::ImagePositivity,
        Suite::Bialternant,
        Suite::Lorentzian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::JacobiTrudi => "jacobi-trudi",
            Suite::Kostka => "kostka",
            Suite::Positivity => "positivity",
            Suite::Telescoping => "telescoping",
            Suite::ImagePositivity => "image-positivity",
            Suite::Bialternant => "bialternant",
            Suite::Lorentzian => "lorentzian",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_boxes: u32,
    pub n: usize,
    pub suites: Vec<Suite>,
    pub output: Option<PathBuf>,
    pub cache: Option<PathBuf>,
    /// Worker threads; `0` means the rayon default.
    pub jobs: usize,
}

impl SweepConfig {
    pub fn new(max_boxes: u32, n: usize, suites: Vec<Suite>) -> Self {
        SweepConfig { max_boxes, n, suites, output: None, cache: None, jobs: 0 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::ZeroRank);
        }
        if self.suites.is_empty() {
            return Err(Error::InvalidConfig("no suite selected".into()));
        }
        if self.suites.contains(&Suite::Bialternant) && self.n > 4 {
            return Err(Error::DenseTooLarge(self.n));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteResult {
    pub suite: Suite,
    pub cases: usize,
    pub failures: usize,
    pub witnesses: Vec<Value>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Manifest {
    pub max_boxes: u32,
    pub n: usize,
    pub results: Vec<SuiteResult>,
    pub wall_time_ms: u128,
}

impl Manifest {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.failures == 0)
    }

    /// The manifest document; `timing` controls whether `wall_time_ms` is included.
    pub fn to_json(&self, timing: bool) -> Value {
        let suites: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                json!({
                    "suite": r.suite.name(),
                    "cases": r.cases,
                    "failures": r.failures,
                    "witnesses": r.witnesses,
                })
            })
            .collect();
        let mut doc = json!({
            "schema": 1,
            "max_boxes": self.max_boxes,
            "n": self.n,
            "suites": suites,
            "passed": self.passed(),
        });
        if timing {
            doc["wall_time_ms"] = json!(self.wall_time_ms as u64);
        }
        doc
    }
}

/// Runs every selected suite, in the order given, on a pool of `config.jobs` threads.
pub fn run(config: &SweepConfig) -> Result<Manifest> {
    config.validate()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let results = pool.install(|| config.suites.iter().map(|&s| run_suite(s, config.max_boxes, config.n)).collect::<Result<Vec<_>>>())?;
    Ok(Manifest { max_boxes: config.max_boxes, n: config.n, results, wall_time_ms: start.elapsed().as_millis() })
}

/// Skew shapes `μ/ν` with `|μ| ≤ max_boxes` and `ℓ(μ) ≤ n`.
pub fn skew_pairs(max_boxes: u32, n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for d in 0..=max_boxes {
        for mu in enumerate_partitions(d, n) {
            for nu in subpartitions(&mu) {
                out.push((mu.clone(), nu));
            }
        }
    }
    out
}

/// Partitions with at most `n` parts and at most `max_boxes` boxes.
pub fn shapes(max_boxes: u32, n: usize) -> Vec<Partition> {
    (0..=max_boxes).flat_map(|d| enumerate_partitions(d, n)).collect()
}

fn collect<C, F>(suite: Suite, cases: Vec<C>, check: F) -> Result<SuiteResult>
where
    C: Sync,
    F: Fn(&C) -> Result<Option<Value>> + Sync,
{
    let outcomes = cases.par_iter().map(&check).collect::<Result<Vec<_>>>()?;
    let failed: Vec<Value> = outcomes.into_iter().flatten().collect();
    Ok(SuiteResult {
        suite,
        cases: cases.len(),
        failures: failed.len(),
        witnesses: failed.into_iter().take(WITNESS_LIMIT).collect(),
    })
}

fn with_truncations(pairs: Vec<(Partition, Partition)>, n: usize) -> Vec<(Partition, Partition, usize)> {
    pairs.into_iter().flat_map(|(mu, nu)| (0..=max_length(n)).map(move |k| (mu.clone(), nu.clone(), k))).collect()
}

pub fn run_suite(suite: Suite, max_boxes: u32, n: usize) -> Result<SuiteResult> {
    match suite {
        Suite::JacobiTrudi => collect(suite, skew_pairs(max_boxes, n), |(mu, nu)| check_jacobi_trudi(mu, nu, n)),
        Suite::Kostka => {
            let cases: Vec<(Partition, Weight)> = shapes(max_boxes, n)
                .into_iter()
                .flat_map(|l| {
                    let d = l.size() as i64;
                    weights_with_sum(n, d, -2, d).into_iter().map(move |t| (l.clone(), t))
                })
                .collect();
            collect(suite, cases, |(l, t)| check_kostka(l, t))
        }
        Suite::Positivity => {
            collect(suite, with_truncations(skew_pairs(max_boxes, n), n), |(mu, nu, k)| check_positivity(mu, nu, n, *k))
        }
        Suite::Telescoping => collect(suite, skew_pairs(max_boxes, n), |(mu, nu)| check_telescoping(mu, nu, n)),
        Suite::ImagePositivity => {
            let cases: Vec<(Partition, usize, Weight)> = shapes(max_boxes, n)
                .into_iter()
                .flat_map(|nu| {
                    let d = nu.size() as i64;
                    let taus = weights_with_sum(n, d, -4, d + 4);
                    (0..=max_length(n)).flat_map(move |k| {
                        let nu = nu.clone();
                        taus.clone().into_iter().map(move |t| (nu.clone(), k, t))
                    })
                })
                .collect();
            collect(suite, cases, |(nu, k, t)| check_image_positivity(nu, *k, t))
        }
        Suite::Bialternant => collect(suite, shapes(max_boxes, n), |l| check_bialternant(l, n)),
        Suite::Lorentzian => {
            let pairs = shapes(max_boxes, n).into_iter().map(|mu| (mu, Partition::empty())).collect();
            collect(suite, with_truncations(pairs, n), |(mu, _, k)| check_lorentzian(mu, n, *k))
        }
    }
}

fn shape_json(mu: &Partition, nu: &Partition) -> Value {
    json!({ "mu": mu.to_string(), "nu": nu.to_string() })
}

/// `det(h_{μ_i−ν_j−i+j}) = s_{μ/ν}` in the monomial basis.
pub fn check_jacobi_trudi(mu: &Partition, nu: &Partition, n: usize) -> Result<Option<Value>> {
    let det = to_monomial(&jt_determinant(mu, nu, n)?)?;
    let skew = skew_schur_monomial(&SkewShape::new(mu.clone(), nu.clone())?, n)?;
    Ok((det != skew).then(|| json!({ "mu": mu.to_string(), "nu": nu.to_string(), "determinant": det.to_string(), "skew_schur": skew.to_string() })))
}

/// Alternating Kostant sum equals the SSYT count.
pub fn check_kostka(lambda: &Partition, tau: &Weight) -> Result<Option<Value>> {
    let alt = kostka_alternating_sum(lambda, tau)?;
    let ssyt = BigInt::from(count_ssyt(&SkewShape::straight(lambda.clone()), tau));
    Ok((alt != ssyt).then(|| {
        json!({ "lambda": lambda.to_string(), "tau": tau.to_string(), "kostant": bigint_json(&alt), "ssyt": bigint_json(&ssyt) })
    }))
}

/// Every Schur coefficient of `g^k` is non-negative.
pub fn check_positivity(mu: &Partition, nu: &Partition, n: usize, k: usize) -> Result<Option<Value>> {
    let g = truncation_schur(mu, nu, n, k)?;
    let negative: Vec<Value> =
        g.terms().iter().filter(|(_, c)| c.is_negative()).map(|(l, c)| json!({ "lambda": l.to_string(), "coeff": bigint_json(c) })).collect();
    Ok((!negative.is_empty()).then(|| {
        let mut w = shape_json(mu, nu);
        w["k"] = json!(k);
        w["negative"] = json!(negative);
        w
    }))
}

/// `g^k + g^{k+1}` equals the `k`-th layer for every `k`.
pub fn check_telescoping(mu: &Partition, nu: &Partition, n: usize) -> Result<Option<Value>> {
    let terms = jt_terms(mu, nu, n)?;
    Ok(telescoping_failure(&terms, n)?.map(|k| {
        let mut w = shape_json(mu, nu);
        w["k"] = json!(k);
        w
    }))
}

pub fn check_image_positivity(nu: &Partition, k: usize, tau: &Weight) -> Result<Option<Value>> {
    let m = image_weight_mult(nu, k, tau)?;
    Ok(m.is_negative().then(|| json!({ "nu": nu.to_string(), "k": k, "tau": tau.to_string(), "mult": bigint_json(&m) })))
}

/// The bialternant quotient equals the tableau expansion of `s_λ`.
pub fn check_bialternant(lambda: &Partition, n: usize) -> Result<Option<Value>> {
    let quotient = bialternant_schur(lambda, n)?;
    let tableaux = densify(&skew_schur_monomial(&SkewShape::straight(lambda.clone()), n)?)?;
    let agree = quotient == tableaux || (quotient.is_zero() && tableaux.is_zero());
    Ok((!agree).then(|| json!({ "lambda": lambda.to_string(), "bialternant": quotient.to_string(), "tableaux": tableaux.to_string() })))
}

pub fn check_lorentzian(mu: &Partition, n: usize, k: usize) -> Result<Option<Value>> {
    let f = normalized_truncation(mu, &Partition::empty(), n, k)?;
    let verdict = is_lorentzian(&f);
    Ok((!verdict.lorentzian).then(|| json!({ "mu": mu.to_string(), "k": k, "failed_condition": verdict.failed_condition })))
}

/// `g^0` equals the determinant, and for straight shapes its Schur expansion is `s_μ`.
pub fn check_endpoints(mu: &Partition, nu: &Partition, n: usize) -> Result<Option<Value>> {
    let g0 = truncation(mu, nu, n, 0)?;
    let det = jt_determinant(mu, nu, n)?;
    let mut ok = g0 == det;
    if nu.is_empty() {
        ok &= truncation_schur(mu, nu, n, 0)? == SymPoly::term(Basis::Schur, n, mu.clone(), BigInt::from(1));
    }
    Ok((!ok).then(|| shape_json(mu, nu)))
}
