//! Weight multiplicities for `sl_n` via the Kostant partition function.
//!
//! Verma module multiplicities are partition-function values; finite-dimensional
//! multiplicities (Kostka numbers) and the characters of the images `V(ν,k)` of
//! the BGG differentials are signed sums of them over `S_n`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::memo::{kostant_table, kostka_table};
use crate::partition::Partition;
use crate::perm::{max_length, symmetric_group};
use crate::weight::{dot, Weight};

fn outside_root_cone(v: &[i64]) -> bool {
    let mut prefix = 0;
    for &e in v {
        prefix += e;
        if prefix < 0 {
            return true;
        }
    }
    prefix != 0
}

/// Number of ways to write `v` as a non-negative integer combination of the
/// positive roots `e_i − e_j`, `i < j`.
///
/// The roots are grouped by their first index: the multiplicities of
/// `e_1 − e_j` must sum to `v_1`, and each such choice leaves a rank `n−1`
/// problem on the remaining coordinates.
pub fn kostant_p(v: &Weight) -> BigUint {
    if outside_root_cone(v.entries()) {
        return BigUint::zero();
    }
    if v.len() <= 1 {
        // the only surviving vector is 0 (or the empty vector)
        return BigUint::from(1u32);
    }
    let table = kostant_table();
    if let Some(p) = table.get(v) {
        return p;
    }
    let head = v[0] as u64;
    let tail = &v.entries()[1..];
    let mut total = BigUint::zero();
    let mut shifted = tail.to_vec();
    distribute(head, 0, &mut shifted, &mut |rest| {
        if !outside_root_cone(rest) {
            total += kostant_p(&Weight::new(rest.to_vec()));
        }
    });
    table.insert(v.clone(), total.clone());
    total
}

// Adds every composition of `amount` into `slots[from..]`, calling `f` on each result.
fn distribute(amount: u64, from: usize, slots: &mut [i64], f: &mut impl FnMut(&[i64])) {
    if from + 1 == slots.len() {
        slots[from] += amount as i64;
        f(slots);
        slots[from] -= amount as i64;
        return;
    }
    for c in 0..=amount {
        slots[from] += c as i64;
        distribute(amount - c, from + 1, slots, f);
        slots[from] -= c as i64;
    }
}

/// `dim Δ(λ)_τ = p(λ − τ)`.
pub fn verma_weight_mult(lambda: &Weight, tau: &Weight) -> Result<BigUint> {
    Ok(kostant_p(&lambda.sub(tau)?))
}

/// `Σ_{v ∈ S_n} (−1)^{ℓ(v)} p(v·λ − τ)` with no support shortcuts; `n = τ.len()`.
pub fn kostka_alternating_sum(lambda: &Partition, tau: &Weight) -> Result<BigInt> {
    let n = tau.len();
    let lam = lambda.padded(n)?;
    let mut total = BigInt::zero();
    for v in symmetric_group(n)? {
        let p = BigInt::from(kostant_p(&dot(v, &lam)?.sub(tau)?));
        if v.sign() > 0 {
            total += p;
        } else {
            total -= p;
        }
    }
    Ok(total)
}

/// Kostka number `K_{λ,τ}` from the Weyl character formula, `n = τ.len()`.
///
/// Zero when `|λ| ≠ Στ`, when `τ` has a negative entry, or when `λ` has more than `n` parts.
pub fn kostka(lambda: &Partition, tau: &Weight) -> Result<BigUint> {
    if lambda.size() as i64 != tau.sum() || !tau.is_nonnegative() || lambda.len() > tau.len() {
        return Ok(BigUint::zero());
    }
    let table = kostka_table();
    let key = (lambda.clone(), tau.clone());
    if let Some(k) = table.get(&key) {
        return Ok(k);
    }
    let sum = kostka_alternating_sum(lambda, tau)?;
    let k = sum.to_biguint().expect("a weight multiplicity is non-negative");
    table.insert(key, k.clone());
    Ok(k)
}

fn check_truncation(k: usize, n: usize) -> Result<()> {
    let max = max_length(n);
    if k > max {
        return Err(Error::TruncationOutOfRange { k, max });
    }
    Ok(())
}

/// Weight multiplicity of `τ` in `V(ν,k)`, the image of the `k`-th BGG differential
/// resolving `L(ν)`:
/// `(−1)^k Σ_{ℓ(w) ≥ k} (−1)^{ℓ(w)} p(w·ν − τ)`.
pub fn image_weight_mult(nu: &Partition, k: usize, tau: &Weight) -> Result<BigInt> {
    let n = tau.len();
    check_truncation(k, n)?;
    let nu = nu.padded(n)?;
    let mut total = BigInt::zero();
    for w in symmetric_group(n)?.iter().filter(|w| w.length() >= k) {
        let p = BigInt::from(kostant_p(&dot(w, &nu)?.sub(tau)?));
        if (w.length() + k).is_multiple_of(2) {
            total += p;
        } else {
            total -= p;
        }
    }
    Ok(total)
}

/// Weight multiplicity of `τ` in `C_k = ⊕_{ℓ(w)=k} Δ(w·ν)`.
pub fn chain_weight_mult(nu: &Partition, k: usize, tau: &Weight) -> Result<BigUint> {
    let n = tau.len();
    check_truncation(k, n)?;
    let nu = nu.padded(n)?;
    let mut total = BigUint::zero();
    for w in symmetric_group(n)?.iter().filter(|w| w.length() == k) {
        total += kostant_p(&dot(w, &nu)?.sub(tau)?);
    }
    Ok(total)
}
