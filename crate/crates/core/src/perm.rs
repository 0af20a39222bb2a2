//! Permutations of `{1..n}` with cached inversion count.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default ceiling on `n` for anything that enumerates all of `S_n`.
pub const PERMUTATION_BOUND: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based one-line notation: position i maps to map[i].
    map: Vec<usize>,
    length: usize,
}

fn inversions(map: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if map[i] > map[j] {
                count += 1;
            }
        }
    }
    count
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect(), length: 0 }
    }

    /// The longest element `w₀`, reversing `1..n`.
    pub fn longest(n: usize) -> Self {
        Self::from_zero_based((0..n).rev().collect()).expect("reversal is a bijection")
    }

    /// Simple transposition swapping positions `i` and `i+1` (0-based `i`).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i, i + 1);
        Permutation { map, length: 1 }
    }

    /// Builds from 1-based one-line notation, e.g. `[2, 1, 3]`.
    pub fn from_one_line(entries: &[usize]) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::MalformedToken("0".into()));
        }
        Self::from_zero_based(entries.iter().map(|e| e - 1).collect())
    }

    fn from_zero_based(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &m in &map {
            if m >= n || seen[m] {
                return Err(Error::MalformedToken(format!("{map:?} is not a permutation")));
            }
            seen[m] = true;
        }
        let length = inversions(&map);
        Ok(Permutation { map, length })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Number of inversions `ℓ(w)`.
    pub fn length(&self) -> usize {
        self.length
    }

    /// `(-1)^{ℓ(w)}`.
    pub fn sign(&self) -> i32 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Image of `i` (0-based).
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &m) in self.map.iter().enumerate() {
            inv[m] = i;
        }
        Permutation { map: inv, length: self.length }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let map = other.map.iter().map(|&i| self.map[i]).collect::<Vec<_>>();
        let length = inversions(&map);
        Permutation { map, length }
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|m| m + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, m) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", m + 1)?;
        }
        f.write_str("]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    check_degree(n, PERMUTATION_BOUND)?;
    Ok(generate(n))
}

fn generate(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut map: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation { length: inversions(&map), map: map.clone() });
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| map[i - 1] < map[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| map[j] > map[i - 1]).expect("pivot has a successor");
        map.swap(i - 1, j);
        map[i..].reverse();
    }
    out
}

/// Shared, lazily built copy of [`all_permutations`].
pub fn symmetric_group(n: usize) -> Result<&'static [Permutation]> {
    static GROUPS: [OnceLock<Vec<Permutation>>; PERMUTATION_BOUND + 1] = [const { OnceLock::new() }; PERMUTATION_BOUND + 1];
    check_degree(n, PERMUTATION_BOUND)?;
    Ok(GROUPS[n].get_or_init(|| all_permutations(n).expect("degree checked")))
}

fn check_degree(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > bound {
        return Err(Error::RankTooLarge { n, bound });
    }
    Ok(())
}

/// `S_n` bucketed by length; keys `0..=n(n-1)/2`, each bucket in lexicographic order.
pub fn permutations_by_length(n: usize) -> Result<BTreeMap<usize, Vec<Permutation>>> {
    permutations_by_length_bounded(n, PERMUTATION_BOUND)
}

pub fn permutations_by_length_bounded(n: usize, bound: usize) -> Result<BTreeMap<usize, Vec<Permutation>>> {
    check_degree(n, bound)?;
    let mut buckets: BTreeMap<usize, Vec<Permutation>> = (0..=max_length(n)).map(|k| (k, Vec::new())).collect();
    for w in generate(n) {
        buckets.get_mut(&w.length()).expect("length within range").push(w);
    }
    Ok(buckets)
}

/// `n(n-1)/2`, the length of `w₀`.
pub fn max_length(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    #[test]
    fn small_buckets() {
        let b = permutations_by_length(2).unwrap();
        assert_eq!(b[&0], vec![Permutation::identity(2)]);
        assert_eq!(b[&1], vec![Permutation::simple(2, 0)]);
        let b3 = permutations_by_length(3).unwrap();
        let sizes: Vec<usize> = b3.values().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 2, 1]);
        let b1 = permutations_by_length(1).unwrap();
        assert_eq!(b1.len(), 1);
        assert_eq!(b1[&0].len(), 1);
    }

    #[test]
    fn bucket_totals_are_factorial() {
        let mut fact = 1;
        for n in 1..=6 {
            fact *= n;
            let total: usize = permutations_by_length(n).unwrap().values().map(Vec::len).sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn bound_errors() {
        assert_eq!(permutations_by_length(0), Err(Error::ZeroRank));
        assert_eq!(permutations_by_length(8), Err(Error::RankTooLarge { n: 8, bound: 7 }));
        assert!(permutations_by_length_bounded(3, 2).is_err());
    }

    #[test]
    fn length_properties() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::longest(4).length(), 6);
        for w in all_permutations(5).unwrap() {
            assert_eq!(w.length(), w.inverse().length());
            assert!(w.compose(&w.inverse()).is_identity());
        }
        assert!(Permutation::from_one_line(&[1, 1, 2]).is_err());
        assert_eq!(Permutation::from_one_line(&[3, 1, 2]).unwrap().length(), 2);
    }

    /// BFS on the Cayley graph generated by adjacent transpositions.
    fn word_lengths(n: usize) -> HashMap<Vec<usize>, usize> {
        let mut dist = HashMap::new();
        let start: Vec<usize> = (0..n).collect();
        dist.insert(start.clone(), 0);
        let mut queue = VecDeque::from([start]);
        while let Some(cur) = queue.pop_front() {
            let d = dist[&cur];
            for i in 0..n.saturating_sub(1) {
                let mut next = cur.clone();
                next.swap(i, i + 1);
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        dist
    }

    #[test]
    fn inversion_count_matches_word_length() {
        for n in 1..=4 {
            let bfs = word_lengths(n);
            for w in all_permutations(n).unwrap() {
                let key: Vec<usize> = w.one_line().iter().map(|m| m - 1).collect();
                assert_eq!(bfs[&key], w.length(), "{w}");
            }
        }
    }
}
