//! Homogeneous polynomials in `n` variables with exact rational coefficients,
//! stored as a sparse map from exponent vectors.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly {
    n: usize,
    degree: u32,
    terms: BTreeMap<Exponent, BigRational>,
}

impl DensePoly {
    pub fn zero(n: usize, degree: u32) -> Self {
        DensePoly { n, degree, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut p = Self::zero(n, 0);
        p.terms.insert(vec![0; n], BigRational::one());
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, merging repeats.
    /// All exponents must have length `n` and total degree `degree`.
    pub fn from_terms<I>(n: usize, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, BigRational)>,
    {
        let mut p = Self::zero(n, degree);
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exponent: Exponent, coeff: BigRational) -> Result<()> {
        if exponent.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: exponent.len() });
        }
        let d: u32 = exponent.iter().sum();
        if d != self.degree {
            return Err(Error::NotHomogeneous(self.degree, d));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry(exponent) {
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
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, exponent: &[u32]) -> BigRational {
        self.terms.get(exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }

    fn check_compatible(&self, other: &DensePoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &DensePoly) -> Result<DensePoly> {
        self.check_compatible(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DensePoly) -> Result<DensePoly> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> DensePoly {
        if c.is_zero() {
            return Self::zero(self.n, self.degree);
        }
        DensePoly { n: self.n, degree: self.degree, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &DensePoly) -> Result<DensePoly> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.n, self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y)?;
            }
        }
        Ok(out)
    }

    /// Exact division; errors unless `divisor` divides `self`.
    ///
    /// Lexicographic leading-term division by a single polynomial: the
    /// remainder is zero exactly when the divisor divides.
    pub fn exact_div(&self, divisor: &DensePoly) -> Result<DensePoly> {
        self.check_compatible(divisor)?;
        let (lead_exp, lead_coeff) = divisor.terms.iter().next_back().ok_or(Error::NonzeroRemainder)?;
        if divisor.degree > self.degree && !self.is_zero() {
            return Err(Error::NonzeroRemainder);
        }
        let qdeg = self.degree.saturating_sub(divisor.degree);
        let mut quotient = Self::zero(self.n, qdeg);
        let mut remainder = self.clone();
        while let Some((e, c)) = remainder.terms.iter().next_back() {
            if !e.iter().zip(lead_exp).all(|(a, b)| a >= b) {
                return Err(Error::NonzeroRemainder);
            }
            let qe: Exponent = e.iter().zip(lead_exp).map(|(a, b)| a - b).collect();
            let qc = c / lead_coeff;
            let mut step = Self::zero(self.n, qdeg);
            step.add_term(qe.clone(), qc.clone())?;
            remainder = remainder.sub(&step.mul(divisor)?)?;
            quotient.add_term(qe, qc)?;
        }
        Ok(quotient)
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute_variables(&self, perm: &[usize]) -> DensePoly {
        let mut out = Self::zero(self.n, self.degree);
        for (e, c) in &self.terms {
            let mut moved = vec![0; self.n];
            for (i, &x) in e.iter().enumerate() {
                moved[perm[i]] = x;
            }
            out.terms.insert(moved, c.clone());
        }
        out
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn integer_terms(&self) -> Option<BTreeMap<Exponent, BigInt>> {
        self.terms.iter().map(|(e, c)| c.is_integer().then(|| (e.clone(), c.to_integer()))).collect()
    }
}

fn var_name(i: usize, n: usize) -> String {
    if n <= 4 {
        ["x", "y", "z", "w"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Descending lex order, as usually written by hand.
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { var_name(i, self.n) } else { format!("{}^{}", var_name(i, self.n), x) })
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for DensePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exponent: &'a [u32],
            coeff: String,
        }
        let terms: Vec<Term> = self.terms.iter().map(|(e, c)| Term { exponent: e, coeff: c.to_string() }).collect();
        let mut st = s.serialize_struct("DensePoly", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// `∏ αᵢ!` for an exponent vector.
pub fn exponent_factorial(e: &[u32]) -> BigInt {
    e.iter().fold(BigInt::one(), |acc, &x| acc * (1..=x).fold(BigInt::one(), |f, i| f * i))
}

/// Distinct rearrangements of `v`, in lexicographic order.
pub fn distinct_permutations(v: &[u32]) -> Vec<Exponent> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = Vec::new();
    let n = cur.len();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot has a successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn poly(n: usize, d: u32, t: &[(&[u32], i64)]) -> DensePoly {
        DensePoly::from_terms(n, d, t.iter().map(|(e, c)| (e.to_vec(), q(*c)))).unwrap()
    }

    #[test]
    fn arithmetic() {
        let x_minus_y = poly(2, 1, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let x_plus_y = poly(2, 1, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let prod = x_minus_y.mul(&x_plus_y).unwrap();
        assert_eq!(prod, poly(2, 2, &[(&[2, 0], 1), (&[0, 2], -1)]));
        assert!(prod.sub(&prod).unwrap().is_zero());
        assert_eq!(prod.exact_div(&x_minus_y).unwrap(), x_plus_y);
    }

    #[test]
    fn division_reports_remainder() {
        let x2_plus_y2 = poly(2, 2, &[(&[2, 0], 1), (&[0, 2], 1)]);
        let x_minus_y = poly(2, 1, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(x2_plus_y2.exact_div(&x_minus_y), Err(Error::NonzeroRemainder));
    }

    #[test]
    fn homogeneity_enforced() {
        let mut p = DensePoly::zero(2, 2);
        assert_eq!(p.add_term(vec![1, 0], q(1)), Err(Error::NotHomogeneous(2, 1)));
        assert!(p.add_term(vec![1, 0, 1], q(1)).is_err());
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut p = poly(2, 1, &[(&[1, 0], 3)]);
        p.add_term(vec![1, 0], q(-3)).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn rearrangements() {
        assert_eq!(distinct_permutations(&[2, 1]), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(distinct_permutations(&[1, 1, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[0, 0]), vec![vec![0, 0]]);
        assert_eq!(exponent_factorial(&[3, 2, 0]), BigInt::from(12));
    }

    #[test]
    fn display() {
        let p = poly(2, 3, &[(&[2, 1], 1), (&[1, 2], 2)]);
        assert_eq!(p.to_string(), "x^2*y + (2)*x*y^2");
        assert_eq!(DensePoly::zero(2, 0).to_string(), "0");
    }
}
