//! Integer partitions and skew shapes.
//!
//! A [`Partition`] is stored in canonical form: weakly decreasing, trailing
//! zeros stripped. Zero-padding to a fixed rank happens at the use site via
//! [`Partition::padded`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from a weakly decreasing sequence, stripping zeros.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for (i, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::NotDecreasing { index: i, left: w[0], right: w[1] });
            }
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts descending and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The partition as a length-`n` weight, zero-padded.
    pub fn padded(&self, n: usize) -> Result<Weight> {
        if self.len() > n {
            return Err(Error::TooManyParts { partition: self.to_string(), n });
        }
        let mut v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        v.resize(n, 0);
        Ok(Weight::new(v))
    }

    /// Dominance order: `self ⊵ other` for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses `"a,b,c"`; spaces are tolerated and `""` or `"0"` give the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let value: i64 = token.parse().map_err(|_| Error::MalformedToken(token.to_string()))?;
        if value < 0 {
            return Err(Error::NegativePart(value));
        }
        let value = u32::try_from(value).map_err(|_| Error::MalformedToken(token.to_string()))?;
        parts.push(value);
    }
    Partition::new(parts)
}

/// True iff `inner` fits inside `outer` componentwise.
pub fn contains(outer: &Partition, inner: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts().iter().zip(outer.parts()).all(|(i, o)| i <= o)
}

/// All partitions of `d` with at most `max_parts` parts, in reverse
/// lexicographic order.
pub fn enumerate_partitions(d: u32, max_parts: usize) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            cur.push(p);
            go(remaining - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, max_parts, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `outer`, in reverse lexicographic order within each size,
/// sizes ascending.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    for d in 0..=outer.size() {
        out.extend(enumerate_partitions(d, outer.len()).into_iter().filter(|p| contains(outer, p)));
    }
    out
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&outer, &inner) {
            return Err(Error::InvalidSkewShape { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape { outer: shape, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Half-open column range `[start, end)` of row `r`.
    pub fn row_range(&self, r: usize) -> (u32, u32) {
        (self.inner.part(r), self.outer.part(r))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(parse_partition(o)?, parse_partition(i)?),
            None => Ok(SkewShape::straight(parse_partition(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_partition("3,2,1").unwrap(), p(&[3, 2, 1]));
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert_eq!(parse_partition("0").unwrap(), Partition::empty());
        assert_eq!(parse_partition(" 4 , 2,2,0 ").unwrap(), p(&[4, 2, 2]));
        assert!(matches!(parse_partition("2,3"), Err(Error::NotDecreasing { .. })));
        assert!(matches!(parse_partition("2,-1"), Err(Error::NegativePart(-1))));
        assert!(matches!(parse_partition("2,x"), Err(Error::MalformedToken(_))));
        assert!(matches!(parse_partition("2,,1"), Err(Error::MalformedToken(_))));
    }

    #[test]
    fn display_round_trips() {
        let q = p(&[5, 3, 3, 1]);
        assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn containment() {
        assert!(contains(&p(&[3, 2]), &p(&[1])));
        assert!(!contains(&p(&[2, 2]), &p(&[3])));
        assert!(contains(&p(&[2, 2, 1]), &p(&[2, 2, 1])));
        assert!(!contains(&p(&[2]), &p(&[1, 1])));
        assert!(contains(&p(&[2]), &Partition::empty()));
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_partitions(3, 2), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(enumerate_partitions(0, 3), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4, 4).len(), 5);
        assert_eq!(enumerate_partitions(8, 8).len(), 22);
        assert_eq!(enumerate_partitions(3, 0).len(), 0);
    }

    #[test]
    fn skew_parsing() {
        let s: SkewShape = "3,2,1/1,1".parse().unwrap();
        assert_eq!(s.size(), 4);
        assert_eq!(s.row_range(1), (1, 2));
        assert!("1/2".parse::<SkewShape>().is_err());
        let t: SkewShape = "2,1".parse().unwrap();
        assert_eq!(t.inner(), &Partition::empty());
    }

    #[test]
    fn dominance() {
        assert!(p(&[3]).dominates(&p(&[2, 1])));
        assert!(p(&[2, 1]).dominates(&p(&[1, 1, 1])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(!p(&[3, 3]).dominates(&p(&[4, 1, 1])));
    }

    #[test]
    fn subpartitions_of_small_shape() {
        let subs = subpartitions(&p(&[2, 1]));
        assert_eq!(subs, vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])]);
    }
}
