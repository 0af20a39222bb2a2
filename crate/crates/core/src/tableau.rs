//! Semistandard tableau counting for skew shapes.
//!
//! Fills the diagram column by column, left to right; each column is filled top
//! to bottom with the remaining content pruned as we go. The number of ways to
//! complete the diagram depends only on the current column and the content
//! still unused, so completed columns are memoized on that pair.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::partition::SkewShape;
use crate::weight::Weight;

struct Column {
    top: usize,
    height: usize,
}

struct Counter<'a> {
    columns: &'a [Column],
    n: usize,
    memo: HashMap<(usize, Vec<u16>, Vec<u16>), u128>,
}

impl Counter<'_> {
    fn count_from(&mut self, col: usize, prev: &[u16], remaining: &mut Vec<u16>) -> u128 {
        if col == self.columns.len() {
            return u128::from(remaining.iter().all(|&r| r == 0));
        }
        let key = (col, prev.to_vec(), remaining.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut current = Vec::with_capacity(self.columns[col].height);
        let total = self.fill_column(col, prev, &mut current, remaining);
        self.memo.insert(key, total);
        total
    }

    fn fill_column(&mut self, col: usize, prev: &[u16], current: &mut Vec<u16>, remaining: &mut Vec<u16>) -> u128 {
        let Column { top, height } = self.columns[col];
        if current.len() == height {
            let done = current.clone();
            return self.count_from(col + 1, &done, remaining);
        }
        let row = top + current.len();
        // Values are 1-based; strict increase down the column.
        let mut lo = current.last().map_or(1, |&v| v as usize + 1);
        if col > 0 {
            let prev_top = self.columns[col - 1].top;
            if row >= prev_top && row < prev_top + prev.len() {
                lo = lo.max(prev[row - prev_top] as usize);
            }
        }
        let cells_below = height - current.len() - 1;
        if lo + cells_below > self.n {
            return 0;
        }
        let mut total = 0;
        for v in lo..=self.n - cells_below {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            current.push(v as u16);
            total += self.fill_column(col, prev, current, remaining);
            current.pop();
            remaining[v - 1] += 1;
        }
        total
    }
}

/// Number of semistandard fillings of `shape` with entries `1..=content.len()`,
/// value `i` used exactly `content[i-1]` times.
///
/// Returns zero for impossible inputs: negative content entries or a size mismatch.
pub fn count_ssyt(shape: &SkewShape, content: &Weight) -> BigUint {
    if !content.is_nonnegative() || content.sum() != shape.size() as i64 {
        return BigUint::from(0u32);
    }
    let n = content.len();
    let outer = shape.outer();
    let width = outer.part(0) as usize;
    let mut columns = Vec::with_capacity(width);
    for c in 0..width as u32 {
        let rows = (0..outer.len()).filter(|&r| shape.row_range(r).0 <= c && c < shape.row_range(r).1);
        let rows: Vec<usize> = rows.collect();
        let top = rows.first().copied().unwrap_or(0);
        if rows.len() > n {
            return BigUint::from(0u32);
        }
        columns.push(Column { top, height: rows.len() });
    }
    let mut counter = Counter { columns: &columns, n, memo: HashMap::new() };
    let mut remaining: Vec<u16> = content.entries().iter().map(|&e| e as u16).collect();
    BigUint::from(counter.count_from(0, &[], &mut remaining))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    /// Exhaustive filling enumeration: tries every assignment of values to cells.
    pub(crate) fn brute_force_ssyt(shape: &SkewShape, content: &[i64]) -> u64 {
        if content.iter().any(|&c| c < 0) {
            return 0;
        }
        let n = content.len();
        let cells: Vec<(usize, u32)> = (0..shape.outer().len())
            .flat_map(|r| {
                let (a, b) = shape.row_range(r);
                (a..b).map(move |c| (r, c))
            })
            .collect();
        if cells.is_empty() {
            return u64::from(content.iter().all(|&c| c == 0));
        }
        if n == 0 {
            return 0;
        }
        let mut values = vec![1usize; cells.len()];
        let mut count = 0;
        loop {
            let mut used = vec![0i64; n];
            for &v in &values {
                used[v - 1] += 1;
            }
            if used == content {
                let at = |r: usize, c: u32| cells.iter().position(|&x| x == (r, c)).map(|i| values[i]);
                let ok = cells.iter().enumerate().all(|(i, &(r, c))| {
                    let v = values[i];
                    let left_ok = c == 0 || at(r, c - 1).is_none_or(|l| l <= v);
                    let up_ok = r == 0 || at(r - 1, c).is_none_or(|u| u < v);
                    left_ok && up_ok
                });
                count += u64::from(ok);
            }
            // odometer
            let mut i = 0;
            loop {
                if i == values.len() {
                    return count;
                }
                values[i] += 1;
                if values[i] <= n {
                    break;
                }
                values[i] = 1;
                i += 1;
            }
        }
    }

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn examples() {
        assert_eq!(count_ssyt(&shape("2,1"), &w(&[1, 1, 1])), BigUint::from(2u32));
        assert_eq!(count_ssyt(&shape("3,2,2"), &w(&[3, 2, 2])), BigUint::from(1u32));
        assert_eq!(count_ssyt(&shape("2,1/1"), &w(&[1, 1, 0])), BigUint::from(2u32));
        assert_eq!(count_ssyt(&shape("1/1"), &w(&[0, 0])), BigUint::from(1u32));
        assert_eq!(count_ssyt(&shape(""), &w(&[])), BigUint::from(1u32));
    }

    #[test]
    fn impossible_inputs_are_zero() {
        assert_eq!(count_ssyt(&shape("2,1"), &w(&[3, 0, 0])), BigUint::from(0u32));
        assert_eq!(count_ssyt(&shape("2,1"), &w(&[2, 2, -1])), BigUint::from(0u32));
        assert_eq!(count_ssyt(&shape("2,1"), &w(&[2, 1])), BigUint::from(1u32));
        assert_eq!(count_ssyt(&shape("1,1,1"), &w(&[2, 1])), BigUint::from(0u32));
        assert_eq!(count_ssyt(&shape("2"), &w(&[1, 0])), BigUint::from(0u32));
    }

    fn contents(total: i64, n: usize, lo: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        fn go(n: usize, left: i64, lo: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if cur.len() + 1 == n {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
                return;
            }
            let max = left - lo * (n - cur.len() - 1) as i64;
            for v in lo..=max {
                cur.push(v);
                go(n, left - v, lo, cur, out);
                cur.pop();
            }
        }
        go(n, total, lo, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn matches_brute_force_on_straight_and_skew_shapes() {
        for d in 0..=5u32 {
            for outer in enumerate_partitions(d, 3) {
                for inner in crate::partition::subpartitions(&outer) {
                    let s = SkewShape::new(outer.clone(), inner).unwrap();
                    for n in 1..=3 {
                        for c in contents(s.size() as i64, n, 0) {
                            let expected = brute_force_ssyt(&s, &c);
                            assert_eq!(count_ssyt(&s, &w(&c)), BigUint::from(expected), "{s} {c:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn highest_weight_and_dominance() {
        for d in 0..=6u32 {
            let parts = enumerate_partitions(d, 3);
            for lambda in &parts {
                let s = SkewShape::straight(lambda.clone());
                assert_eq!(count_ssyt(&s, &lambda.padded(3).unwrap()), BigUint::from(1u32));
                for mu in &parts {
                    let k = count_ssyt(&s, &mu.padded(3).unwrap());
                    if !lambda.dominates(mu) {
                        assert_eq!(k, BigUint::from(0u32), "{lambda} {mu}");
                    } else {
                        assert!(k >= BigUint::from(1u32));
                    }
                }
            }
        }
    }

    #[test]
    fn content_permutation_invariance() {
        for d in 0..=6u32 {
            for lambda in enumerate_partitions(d, 3) {
                let s = SkewShape::straight(lambda);
                for c in contents(d as i64, 3, 0) {
                    let base = count_ssyt(&s, &w(&c));
                    for p in crate::perm::all_permutations(3).unwrap() {
                        let moved = crate::weight::act(&p, &w(&c)).unwrap();
                        assert_eq!(count_ssyt(&s, &moved), base);
                    }
                }
            }
        }
    }
}
