//! Symmetric polynomials in `n` variables over the integers, tagged by basis.
//!
//! Monomial and Schur keys with more than `n` parts are dropped on insertion
//! since `m_λ` and `s_λ` vanish in `n` variables. Complete-basis keys are
//! formal products `h_{λ₁} h_{λ₂} …` and are kept as given; they are only
//! interpreted through a conversion.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dense::{distinct_permutations, DensePoly};
use crate::error::{Error, Result};
use crate::kostant::kostka;
use crate::memo::MemoTable;
use crate::partition::{enumerate_partitions, Partition, SkewShape};
use crate::perm::symmetric_group;
use crate::tableau::count_ssyt;
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Complete,
    Schur,
}

impl Basis {
    fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Complete => "h",
            Basis::Schur => "s",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SymPolyDoc", try_from = "SymPolyDoc")]
pub struct SymPoly {
    basis: Basis,
    n: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl SymPoly {
    pub fn zero(basis: Basis, n: usize) -> Self {
        SymPoly { basis, n, terms: BTreeMap::new() }
    }

    /// The constant `1` (the key `∅`).
    pub fn one(basis: Basis, n: usize) -> Self {
        Self::term(basis, n, Partition::empty(), BigInt::one())
    }

    pub fn term(basis: Basis, n: usize, key: Partition, coeff: BigInt) -> Self {
        let mut p = Self::zero(basis, n);
        p.add_term(key, coeff);
        p
    }

    /// Adds `coeff · b_key`, dropping keys that vanish in `n` variables.
    pub fn add_term(&mut self, key: Partition, coeff: BigInt) {
        if coeff.is_zero() || (self.basis != Basis::Complete && key.len() > self.n) {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, key: &Partition) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn check_compatible(&self, other: &SymPoly) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { left: self.basis, right: other.basis });
        }
        if self.n != other.n {
            return Err(Error::VariableMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::WrongBasis { expected: basis, got: self.basis });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymPoly) -> Result<SymPoly> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> SymPoly {
        let mut out = Self::zero(self.basis, self.n);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x * c);
        }
        out
    }

    /// Product in the complete basis (multiset union of keys) or the
    /// monomial basis. Schur products are not supported.
    pub fn mul(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_compatible(other)?;
        match self.basis {
            Basis::Complete => {
                let mut out = Self::zero(Basis::Complete, self.n);
                for (a, x) in &self.terms {
                    for (b, y) in &other.terms {
                        let mut parts = a.parts().to_vec();
                        parts.extend_from_slice(b.parts());
                        out.add_term(Partition::from_unsorted(parts), x * y);
                    }
                }
                Ok(out)
            }
            Basis::Monomial => Ok(monomial_product(self, other)),
            Basis::Schur => Err(Error::WrongBasis { expected: Basis::Monomial, got: Basis::Schur }),
        }
    }

    /// Largest key size, or `None` for the zero polynomial; keys of a
    /// homogeneous polynomial all share it.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }
}

// Coefficient of m_ρ in f·g is the coefficient of x^ρ, which reads
// Σ_{σ} g_σ Σ_{β rearranging σ, β ≤ ρ} f[sort(ρ − β)] by symmetry of f.
fn monomial_product(f: &SymPoly, g: &SymPoly) -> SymPoly {
    let n = f.n;
    let mut out = SymPoly::zero(Basis::Monomial, n);
    if f.is_zero() || g.is_zero() {
        return out;
    }
    let mut degrees: Vec<u32> = Vec::new();
    for a in f.terms.keys() {
        for b in g.terms.keys() {
            let d = a.size() + b.size();
            if !degrees.contains(&d) {
                degrees.push(d);
            }
        }
    }
    degrees.sort_unstable();
    let g_exponents: Vec<(Vec<u32>, &BigInt)> = g
        .terms
        .iter()
        .flat_map(|(sigma, c)| {
            let mut padded = sigma.parts().to_vec();
            padded.resize(n, 0);
            distinct_permutations(&padded).into_iter().map(move |beta| (beta, c))
        })
        .collect();
    for d in degrees {
        for rho in enumerate_partitions(d, n) {
            let mut target = rho.parts().to_vec();
            target.resize(n, 0);
            let mut total = BigInt::zero();
            for (beta, c) in &g_exponents {
                if beta.iter().zip(&target).any(|(b, r)| b > r) {
                    continue;
                }
                let rest = Partition::from_unsorted(target.iter().zip(beta).map(|(r, b)| r - b).collect());
                if let Some(x) = f.terms.get(&rest) {
                    total += x * *c;
                }
            }
            out.add_term(rho, total);
        }
    }
    out
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sym = self.basis.symbol();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{sym}[{k}]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymPolyDoc {
    basis: Basis,
    n: usize,
    terms: Vec<TermDoc>,
}

impl From<SymPoly> for SymPolyDoc {
    fn from(p: SymPoly) -> Self {
        SymPolyDoc {
            basis: p.basis,
            n: p.n,
            terms: p.terms.into_iter().map(|(partition, c)| TermDoc { partition, coeff: c.to_string() }).collect(),
        }
    }
}

impl TryFrom<SymPolyDoc> for SymPoly {
    type Error = Error;

    fn try_from(doc: SymPolyDoc) -> Result<Self> {
        let mut p = SymPoly::zero(doc.basis, doc.n);
        for t in doc.terms {
            let c: BigInt = t.coeff.parse().map_err(|_| Error::MalformedToken(t.coeff.clone()))?;
            p.add_term(t.partition, c);
        }
        Ok(p)
    }
}

/// `h_τ` as a single complete-basis term; zero if any entry is negative.
pub fn h_of_vector(tau: &Weight, n: usize) -> SymPoly {
    match tau.to_partition() {
        Some(key) => SymPoly::term(Basis::Complete, n, key, BigInt::one()),
        None => SymPoly::zero(Basis::Complete, n),
    }
}

fn complete_expansion_table() -> &'static MemoTable<(usize, Partition), SymPoly> {
    static TABLE: OnceLock<MemoTable<(usize, Partition), SymPoly>> = OnceLock::new();
    TABLE.get_or_init(MemoTable::new)
}

/// `h_k` in `n` variables: every monomial of degree `k`.
fn h_single_monomial(k: u32, n: usize) -> SymPoly {
    let mut p = SymPoly::zero(Basis::Monomial, n);
    for rho in enumerate_partitions(k, n) {
        p.add_term(rho, BigInt::one());
    }
    p
}

/// Monomial expansion of `h_{key}` in `n` variables, by iterated products of `h_k`.
fn h_to_monomial(key: &Partition, n: usize) -> SymPoly {
    let table = complete_expansion_table();
    let memo_key = (n, key.clone());
    if let Some(p) = table.get(&memo_key) {
        return p;
    }
    let result = match key.parts().split_last() {
        None => SymPoly::one(Basis::Monomial, n),
        Some((&last, rest)) => {
            let prefix = h_to_monomial(&Partition::new(rest.to_vec()).expect("prefix of a partition"), n);
            prefix.mul(&h_single_monomial(last, n)).expect("same basis and rank")
        }
    };
    table.insert(memo_key, result.clone());
    result
}

/// Monomial-basis representation of `f`.
pub fn to_monomial(f: &SymPoly) -> Result<SymPoly> {
    let n = f.n;
    match f.basis {
        Basis::Monomial => Ok(f.clone()),
        Basis::Schur => {
            let mut out = SymPoly::zero(Basis::Monomial, n);
            for (lambda, c) in &f.terms {
                for rho in enumerate_partitions(lambda.size(), n) {
                    let k = kostka(lambda, &rho.padded(n)?)?;
                    out.add_term(rho, c * BigInt::from(k));
                }
            }
            Ok(out)
        }
        Basis::Complete => {
            let mut out = SymPoly::zero(Basis::Monomial, n);
            for (key, c) in &f.terms {
                out = out.add(&h_to_monomial(key, n).scale(c))?;
            }
            Ok(out)
        }
    }
}

/// Schur expansion of a complete-basis polynomial via `h_τ = Σ_λ K_{λ,τ} s_λ`.
pub fn h_to_schur(f: &SymPoly) -> Result<SymPoly> {
    f.expect_basis(Basis::Complete)?;
    let n = f.n;
    let mut out = SymPoly::zero(Basis::Schur, n);
    for (tau, c) in &f.terms {
        let content = tau.padded(n.max(tau.len()))?;
        for lambda in enumerate_partitions(tau.size(), n) {
            let k = kostka(&lambda, &content)?;
            out.add_term(lambda, c * BigInt::from(k));
        }
    }
    Ok(out)
}

/// The skew Schur polynomial as an SSYT generating function, in the monomial basis.
pub fn skew_schur_monomial(shape: &SkewShape, n: usize) -> Result<SymPoly> {
    let mut out = SymPoly::zero(Basis::Monomial, n);
    for rho in enumerate_partitions(shape.size(), n) {
        let c = count_ssyt(shape, &rho.padded(n)?);
        out.add_term(rho, BigInt::from(c));
    }
    Ok(out)
}

/// `det(x_j^{λ_i+n−i}) / det(x_j^{n−i})` computed by exact division.
pub fn bialternant_schur(lambda: &Partition, n: usize) -> Result<DensePoly> {
    if n > 4 {
        return Err(Error::DenseTooLarge(n));
    }
    let shifted = lambda.padded(n)?.add(&crate::weight::staircase(n)?)?;
    let numerator = alternant(shifted.entries(), n)?;
    let denominator = alternant(crate::weight::staircase(n)?.entries(), n)?;
    numerator.exact_div(&denominator)
}

// det(x_j^{e_i}) = Σ_w sign(w) ∏_i x_{w(i)}^{e_i}
fn alternant(exponents: &[i64], n: usize) -> Result<DensePoly> {
    let degree = exponents.iter().sum::<i64>() as u32;
    let mut out = DensePoly::zero(n, degree);
    for w in symmetric_group(n)? {
        let mut e = vec![0u32; n];
        for (i, &x) in exponents.iter().enumerate() {
            e[w.apply(i)] = x as u32;
        }
        out.add_term(e, BigRational::from_integer(BigInt::from(w.sign())))?;
    }
    Ok(out)
}
