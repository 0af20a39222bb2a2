//! Jacobi-Trudi determinants of skew shapes, their truncations `g^k`, and the
//! Schur expansions of the truncations.
//!
//! The determinant `det(h_{μ_i − ν_j − i + j})` is kept in Leibniz form as a
//! signed sum over `S_n`: the term for `w` is `(−1)^{ℓ(w)} h_{μ+δ−w(ν+δ)}`.
//! The truncation `g^k` keeps the terms with `ℓ(w) ≥ k` and multiplies by `(−1)^k`.
//! Its coefficient of `s_λ` is the composition multiplicity
//! `[L(λ) ⊗ V(ν,k) : L(μ)]` in category O, computed here as a signed sum of
//! Kostka numbers `K_{λ, μ+δ−w(ν+δ)}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::kostant::{kostant_p, kostka};
use crate::partition::{contains, enumerate_partitions, Partition};
use crate::perm::{max_length, symmetric_group, Permutation, PERMUTATION_BOUND};
use crate::symfunc::{h_of_vector, Basis, SymPoly};
use crate::weight::{act, dot, staircase, Weight};

/// One summand `(−1)^{ℓ(w)} h_{μ+δ−w(ν+δ)}` of the Jacobi-Trudi expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JtTerm {
    pub w: Permutation,
    pub sign: i32,
    /// `μ + δ − w(ν + δ)`.
    pub hvector: Weight,
    /// `w·ν`; `hvector = μ − dotweight`.
    pub dotweight: Weight,
}

fn check_inputs(mu: &Partition, nu: &Partition, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > PERMUTATION_BOUND {
        return Err(Error::RankTooLarge { n, bound: PERMUTATION_BOUND });
    }
    for p in [mu, nu] {
        if p.len() > n {
            return Err(Error::TooManyParts { partition: p.to_string(), n });
        }
    }
    if !contains(mu, nu) {
        return Err(Error::InvalidSkewShape { outer: mu.to_string(), inner: nu.to_string() });
    }
    Ok(())
}

fn check_k(k: usize, n: usize) -> Result<()> {
    let max = max_length(n);
    if k > max {
        return Err(Error::TruncationOutOfRange { k, max });
    }
    Ok(())
}

/// All `n!` terms, in lexicographic order of `w`.
pub fn jt_terms(mu: &Partition, nu: &Partition, n: usize) -> Result<Vec<JtTerm>> {
    check_inputs(mu, nu, n)?;
    let delta = staircase(n)?;
    let mu_shift = mu.padded(n)?.add(&delta)?;
    let nu_w = nu.padded(n)?;
    let nu_shift = nu_w.add(&delta)?;
    symmetric_group(n)?
        .iter()
        .map(|w| {
            let hvector = mu_shift.sub(&act(w, &nu_shift)?)?;
            let dotweight = dot(w, &nu_w)?;
            Ok(JtTerm { w: w.clone(), sign: w.sign(), hvector, dotweight })
        })
        .collect()
}

fn signed_h_sum<'a>(terms: impl Iterator<Item = &'a JtTerm>, n: usize, global_sign: i32) -> SymPoly {
    let mut out = SymPoly::zero(Basis::Complete, n);
    for t in terms {
        if let Some(key) = t.hvector.to_partition() {
            out.add_term(key, BigInt::from(t.sign * global_sign));
        }
    }
    out
}

/// `det(h_{μ_i−ν_j−i+j})` in the complete basis.
pub fn jt_determinant(mu: &Partition, nu: &Partition, n: usize) -> Result<SymPoly> {
    truncation(mu, nu, n, 0)
}

/// `g^k = (−1)^k Σ_{ℓ(w) ≥ k} (−1)^{ℓ(w)} h_{μ+δ−w(ν+δ)}`.
pub fn truncation(mu: &Partition, nu: &Partition, n: usize, k: usize) -> Result<SymPoly> {
    check_k(k, n)?;
    let terms = jt_terms(mu, nu, n)?;
    Ok(signed_h_sum(terms.iter().filter(|t| t.w.length() >= k), n, k_sign(k)))
}

/// `Σ_{ℓ(w) = k} h_{μ+δ−w(ν+δ)}`, the `k`-th layer of the expansion without signs.
pub fn layer(mu: &Partition, nu: &Partition, n: usize, k: usize) -> Result<SymPoly> {
    check_k(k, n)?;
    let terms = jt_terms(mu, nu, n)?;
    let mut out = SymPoly::zero(Basis::Complete, n);
    for t in terms.iter().filter(|t| t.w.length() == k) {
        out = out.add(&h_of_vector(&t.hvector, n))?;
    }
    Ok(out)
}

fn k_sign(k: usize) -> i32 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn truncation_coefficients(terms: &[JtTerm], mu: &Partition, nu: &Partition, n: usize, k: usize) -> Result<BTreeMap<Partition, BigInt>> {
    let degree = mu.size() - nu.size();
    let mut coeffs = BTreeMap::new();
    for lambda in enumerate_partitions(degree, n) {
        let mut c = BigInt::zero();
        for t in terms.iter().filter(|t| t.w.length() >= k) {
            let kl = BigInt::from(kostka(&lambda, &t.hvector)?);
            if (t.w.length() + k).is_multiple_of(2) {
                c += kl;
            } else {
                c -= kl;
            }
        }
        coeffs.insert(lambda, c);
    }
    Ok(coeffs)
}

/// Schur expansion of `g^k`: the coefficient of `s_λ` is
/// `(−1)^k Σ_{ℓ(w)≥k} (−1)^{ℓ(w)} K_{λ, μ+δ−w(ν+δ)}`.
pub fn truncation_schur(mu: &Partition, nu: &Partition, n: usize, k: usize) -> Result<SymPoly> {
    check_k(k, n)?;
    let terms = jt_terms(mu, nu, n)?;
    let mut out = SymPoly::zero(Basis::Schur, n);
    for (lambda, c) in truncation_coefficients(&terms, mu, nu, n, k)? {
        out.add_term(lambda, c);
    }
    Ok(out)
}

/// `[L(λ) ⊗ Δ(w·ν) : L(μ)] = K_{λ, μ+δ−w(ν+δ)}`.
pub fn tensor_verma_mult(lambda: &Partition, w: &Permutation, nu: &Partition, mu: &Partition, n: usize) -> Result<BigInt> {
    for p in [lambda, mu, nu] {
        if p.len() > n {
            return Err(Error::TooManyParts { partition: p.to_string(), n });
        }
    }
    if w.degree() != n {
        return Err(Error::LengthMismatch { expected: n, got: w.degree() });
    }
    let delta = staircase(n)?;
    let tau = mu.padded(n)?.add(&delta)?.sub(&act(w, &nu.padded(n)?.add(&delta)?)?)?;
    Ok(BigInt::from(kostka(lambda, &tau)?))
}

/// The same multiplicity read off Verma characters:
/// `[ch Δ(μ)] ch L(λ) · ch Δ(w·ν) = Σ_{v ∈ S_n} (−1)^{ℓ(v)} p(v·λ + w·ν − μ)`.
pub fn tensor_verma_mult_characters(lambda: &Partition, w: &Permutation, nu: &Partition, mu: &Partition, n: usize) -> Result<BigInt> {
    let shifted_nu = dot(w, &nu.padded(n)?)?;
    let mu = mu.padded(n)?;
    let lam = lambda.padded(n)?;
    let mut total = BigInt::zero();
    for v in symmetric_group(n)? {
        let p = BigInt::from(kostant_p(&dot(v, &lam)?.add(&shifted_nu)?.sub(&mu)?));
        if v.sign() > 0 {
            total += p;
        } else {
            total -= p;
        }
    }
    Ok(total)
}

/// Per-`k` row of a positivity report; `coeffs` lists every `λ ⊢ |μ|−|ν|`
/// with at most `n` parts, zeros included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityRow {
    pub k: usize,
    pub schur_coefficients: BTreeMap<Partition, BigInt>,
    pub all_nonnegative: bool,
    pub zero_poly: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub mu: Partition,
    pub nu: Partition,
    pub n: usize,
    pub rows: Vec<PositivityRow>,
    pub telescoping_ok: bool,
}

impl PositivityReport {
    pub fn k_max(&self) -> usize {
        max_length(self.n)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.rows.iter().all(|r| r.all_nonnegative)
    }

    /// `(k, λ, coefficient)` for every negative coefficient.
    pub fn negative_entries(&self) -> Vec<(usize, Partition, BigInt)> {
        self.rows
            .iter()
            .flat_map(|r| {
                r.schur_coefficients
                    .iter()
                    .filter(|(_, c)| c.is_negative())
                    .map(move |(l, c)| (r.k, l.clone(), c.clone()))
            })
            .collect()
    }

    /// `{schema, mu, nu, n, k_max, rows: [{k, coeffs, nonneg, zero}], telescoping_ok}`.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut coeffs = Map::new();
                for (l, c) in &r.schur_coefficients {
                    coeffs.insert(l.to_string(), bigint_json(c));
                }
                serde_json::json!({ "k": r.k, "coeffs": coeffs, "nonneg": r.all_nonnegative, "zero": r.zero_poly })
            })
            .collect();
        serde_json::json!({
            "schema": 1,
            "mu": self.mu.to_string(),
            "nu": self.nu.to_string(),
            "n": self.n,
            "k_max": self.k_max(),
            "rows": rows,
            "telescoping_ok": self.telescoping_ok,
        })
    }
}

/// An integer as an exact JSON number.
pub fn bigint_json(c: &BigInt) -> Value {
    let number: serde_json::Number = c.to_string().parse().expect("integer literal is valid JSON");
    Value::Number(number)
}

/// Runs `truncation_schur` for every `k` and checks the telescoping identity
/// `g^k + g^{k+1} = Σ_{ℓ(w)=k} h_{μ+δ−w(ν+δ)}`. A telescoping failure is an error.
pub fn positivity_report(mu: &Partition, nu: &Partition, n: usize) -> Result<PositivityReport> {
    let terms = jt_terms(mu, nu, n)?;
    let k_max = max_length(n);
    let rows = (0..=k_max)
        .into_par_iter()
        .map(|k| {
            let coeffs = truncation_coefficients(&terms, mu, nu, n, k)?;
            let all_nonnegative = coeffs.values().all(|c| !c.is_negative());
            let zero_poly = coeffs.values().all(Zero::is_zero);
            Ok(PositivityRow { k, schur_coefficients: coeffs, all_nonnegative, zero_poly })
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(k) = telescoping_failure(&terms, n)? {
        return Err(Error::TelescopingFailed(k));
    }
    Ok(PositivityReport { mu: mu.clone(), nu: nu.clone(), n, rows, telescoping_ok: true })
}

/// First `k` at which `g^k + g^{k+1}` differs from the `k`-th layer, if any.
pub fn telescoping_failure(terms: &[JtTerm], n: usize) -> Result<Option<usize>> {
    let k_max = terms.iter().map(|t| t.w.length()).max().unwrap_or(0);
    let truncations: Vec<SymPoly> =
        (0..=k_max).map(|k| signed_h_sum(terms.iter().filter(|t| t.w.length() >= k), n, k_sign(k))).collect();
    for k in 0..k_max {
        let lhs = truncations[k].add(&truncations[k + 1])?;
        let mut rhs = SymPoly::zero(Basis::Complete, n);
        for t in terms.iter().filter(|t| t.w.length() == k) {
            rhs = rhs.add(&h_of_vector(&t.hvector, n))?;
        }
        if lhs != rhs {
            return Ok(Some(k));
        }
    }
    Ok(None)
}
