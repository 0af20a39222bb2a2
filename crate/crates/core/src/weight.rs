//! Integer weights for `sl_n` in `gl_n` coordinates, the Weyl group action
//! and the dot action shifted by the staircase `δ = (n-1, …, 1, 0)`.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    fn check_len(&self, other: &Weight) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: other.len() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.check_len(other)?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        self.check_len(other)?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Sorted descending with zeros dropped, if every entry is non-negative.
    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_nonnegative() {
            return None;
        }
        Some(Partition::from_unsorted(self.0.iter().map(|&e| e as u32).collect()))
    }
}

impl Index<usize> for Weight {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_weight(s)
    }
}

/// Parses `"a,b,c"` with signed integers; empty text is the length-0 weight.
pub fn parse_weight(text: &str) -> Result<Weight> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Weight(Vec::new()));
    }
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::MalformedToken(t.trim().to_string())))
        .collect::<Result<Vec<_>>>()
        .map(Weight)
}

/// All length-`n` integer vectors with entries in `[lo, hi]` summing to `sum`,
/// in lexicographic order.
pub fn weights_with_sum(n: usize, sum: i64, lo: i64, hi: i64) -> Vec<Weight> {
    fn go(n: usize, left: i64, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        let slots = (n - cur.len()) as i64;
        if slots == 0 {
            if left == 0 {
                out.push(Weight(cur.clone()));
            }
            return;
        }
        if left < lo * slots || left > hi * slots {
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            go(n, left - v, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        go(n, sum, lo, hi, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// `δ = (n-1, n-2, …, 1, 0)`.
pub fn staircase(n: usize) -> Result<Weight> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(Weight((0..n as i64).rev().collect()))
}

/// `(w v)_i = v_{w⁻¹(i)}`, i.e. entry `j` of `v` moves to position `w(j)`.
pub fn act(w: &Permutation, v: &Weight) -> Result<Weight> {
    if w.degree() != v.len() {
        return Err(Error::LengthMismatch { expected: w.degree(), got: v.len() });
    }
    let mut out = vec![0; v.len()];
    for (j, &e) in v.entries().iter().enumerate() {
        out[w.apply(j)] = e;
    }
    Ok(Weight(out))
}

/// The dot action `w·λ = w(λ + δ) − δ`.
pub fn dot(w: &Permutation, lambda: &Weight) -> Result<Weight> {
    let delta = staircase(lambda.len().max(1))?;
    if lambda.len() != w.degree() {
        return Err(Error::LengthMismatch { expected: w.degree(), got: lambda.len() });
    }
    act(w, &lambda.add(&delta)?)?.sub(&delta)
}

/// Type `A_{n-1}` root data in `gl_n` coordinates.
#[derive(Clone, Debug)]
pub struct RootSystemA {
    n: usize,
    positive_roots: Vec<Weight>,
    weyl_vector: Weight,
}

impl RootSystemA {
    pub fn new(n: usize) -> Result<Self> {
        let weyl_vector = staircase(n)?;
        let mut positive_roots = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = -1;
                positive_roots.push(Weight(v));
            }
        }
        Ok(RootSystemA { n, positive_roots, weyl_vector })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `e_i − e_j` for `i < j`, lexicographic in `(i, j)`.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// The staircase `δ`, standing in for `ρ`.
    pub fn weyl_vector(&self) -> &Weight {
        &self.weyl_vector
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(3).unwrap(), w(&[2, 1, 0]));
        assert_eq!(staircase(1).unwrap(), w(&[0]));
        assert_eq!(staircase(4).unwrap(), w(&[3, 2, 1, 0]));
        assert_eq!(staircase(0), Err(Error::ZeroRank));
    }

    #[test]
    fn act_examples() {
        assert_eq!(act(&Permutation::identity(3), &w(&[2, 1, 0])).unwrap(), w(&[2, 1, 0]));
        assert_eq!(act(&Permutation::simple(2, 0), &w(&[3, 1])).unwrap(), w(&[1, 3]));
        assert_eq!(act(&Permutation::longest(3), &w(&[2, 1, 0])).unwrap(), w(&[0, 1, 2]));
        assert!(act(&Permutation::identity(2), &w(&[1, 2, 3])).is_err());
    }

    #[test]
    fn longest_element_is_product_of_transpositions() {
        // w₀ = s₁ s₂ s₁ in S_3
        let s1 = Permutation::simple(3, 0);
        let s2 = Permutation::simple(3, 1);
        let w0 = s1.compose(&s2).compose(&s1);
        assert_eq!(w0, Permutation::longest(3));
        let v = w(&[2, 1, 0]);
        let stepwise = act(&s1, &act(&s2, &act(&s1, &v).unwrap()).unwrap()).unwrap();
        assert_eq!(stepwise, w(&[0, 1, 2]));
    }

    #[test]
    fn act_is_a_left_action() {
        let v = w(&[5, -1, 3, 0]);
        let perms = crate::perm::all_permutations(4).unwrap();
        for a in perms.iter().step_by(5) {
            for b in perms.iter().step_by(7) {
                let lhs = act(&a.compose(b), &v).unwrap();
                let rhs = act(a, &act(b, &v).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn dot_examples() {
        assert_eq!(dot(&Permutation::identity(3), &w(&[4, 2, 1])).unwrap(), w(&[4, 2, 1]));
        assert_eq!(dot(&Permutation::simple(2, 0), &w(&[0, 0])).unwrap(), w(&[-1, 1]));
        assert_eq!(dot(&Permutation::longest(3), &w(&[0, 0, 0])).unwrap(), w(&[-2, 0, 2]));
        assert!(dot(&Permutation::identity(2), &w(&[0])).is_err());
    }

    #[test]
    fn roots() {
        let r = RootSystemA::new(4).unwrap();
        assert_eq!(r.positive_roots().len(), 6);
        assert!(r.positive_roots().iter().all(|a| a.sum() == 0));
        assert_eq!(r.weyl_vector(), &w(&[3, 2, 1, 0]));
    }

    #[test]
    fn weight_ranges() {
        let all = weights_with_sum(2, 1, -1, 2);
        assert_eq!(all, vec![w(&[-1, 2]), w(&[0, 1]), w(&[1, 0]), w(&[2, -1])]);
        assert_eq!(weights_with_sum(3, 0, 0, 0), vec![w(&[0, 0, 0])]);
        assert!(weights_with_sum(2, 9, 0, 2).is_empty());
    }

    #[test]
    fn parse() {
        assert_eq!(parse_weight("1, -2,3").unwrap(), w(&[1, -2, 3]));
        assert!(parse_weight("1,a").is_err());
    }
}
