//! Exact Lorentzian checks for homogeneous polynomials.
//!
//! A homogeneous `f` of degree `d` is Lorentzian when its coefficients are
//! non-negative, its support is M-convex, and every `(d−2)`-fold partial
//! derivative is a quadratic form with at most one positive eigenvalue. The
//! eigenvalue condition is decided exactly through the inertia of the Hessian.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dense::{distinct_permutations, exponent_factorial, DensePoly, Exponent};
use crate::error::{Error, Result};
use crate::jt::truncation_schur;
use crate::partition::Partition;
use crate::symfunc::{to_monomial, Basis, SymPoly};

/// Expands each `m_λ` into its distinct rearrangements.
pub fn densify(f: &SymPoly) -> Result<DensePoly> {
    if f.basis() != Basis::Monomial {
        return Err(Error::WrongBasis { expected: Basis::Monomial, got: f.basis() });
    }
    let n = f.n();
    let mut degree = None;
    for key in f.terms().keys() {
        match degree {
            None => degree = Some(key.size()),
            Some(d) if d != key.size() => return Err(Error::NotHomogeneous(d, key.size())),
            _ => {}
        }
    }
    let mut out = DensePoly::zero(n, degree.unwrap_or(0));
    for (key, c) in f.terms() {
        let mut padded = key.parts().to_vec();
        padded.resize(n, 0);
        for e in distinct_permutations(&padded) {
            out.add_term(e, BigRational::from_integer(c.clone()))?;
        }
    }
    Ok(out)
}

/// Divides the coefficient of `x^α` by `α!`.
pub fn normalize(f: &DensePoly) -> DensePoly {
    let terms = f
        .terms()
        .iter()
        .map(|(e, c)| (e.clone(), c / BigRational::from_integer(exponent_factorial(e))));
    DensePoly::from_terms(f.n(), f.degree(), terms).expect("same shape as the input")
}

fn unit_shift(alpha: &[u32], i: usize, j: usize) -> Exponent {
    let mut e = alpha.to_vec();
    e[i] -= 1;
    e[j] += 1;
    e
}

/// First violation of the exchange axiom, as `(α, β, i)`.
fn exchange_violation(support: &BTreeSet<Exponent>) -> Option<(Exponent, Exponent, usize)> {
    for alpha in support {
        for beta in support {
            for i in 0..alpha.len() {
                if alpha[i] <= beta[i] {
                    continue;
                }
                let ok = (0..alpha.len()).any(|j| alpha[j] < beta[j] && support.contains(&unit_shift(alpha, i, j)));
                if !ok {
                    return Some((alpha.clone(), beta.clone(), i));
                }
            }
        }
    }
    None
}

fn check_support(support: &[Exponent]) -> Result<BTreeSet<Exponent>> {
    if let Some(first) = support.first() {
        let d: u32 = first.iter().sum();
        for e in support {
            if e.len() != first.len() {
                return Err(Error::LengthMismatch { expected: first.len(), got: e.len() });
            }
            let de: u32 = e.iter().sum();
            if de != d {
                return Err(Error::NotHomogeneous(d, de));
            }
        }
    }
    Ok(support.iter().cloned().collect())
}

/// Brute-force M-convexity via the exchange axiom.
pub fn is_m_convex(support: &[Exponent]) -> Result<bool> {
    Ok(exchange_violation(&check_support(support)?).is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub n_pos: usize,
    pub n_neg: usize,
    pub n_zero: usize,
}

/// Signature of a symmetric rational matrix by exact congruence reduction.
///
/// A nonzero diagonal pivot contributes its sign. When the remaining diagonal
/// is zero but some `a_ij` is not, the `2×2` block `[[0, b], [b, 0]]` is a
/// hyperbolic plane and contributes one positive and one negative.
pub fn inertia(matrix: &[Vec<BigRational>]) -> Result<Inertia> {
    let dim = matrix.len();
    if matrix.iter().any(|row| row.len() != dim) {
        return Err(Error::NotSquare);
    }
    for i in 0..dim {
        for j in i + 1..dim {
            if matrix[i][j] != matrix[j][i] {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    let mut a: Vec<Vec<BigRational>> = matrix.to_vec();
    let mut out = Inertia { n_pos: 0, n_neg: 0, n_zero: 0 };
    while !a.is_empty() {
        let m = a.len();
        if let Some(p) = (0..m).find(|&i| !a[i][i].is_zero()) {
            let d = a[p][p].clone();
            if d.is_positive() {
                out.n_pos += 1;
            } else {
                out.n_neg += 1;
            }
            let keep: Vec<usize> = (0..m).filter(|&i| i != p).collect();
            a = keep
                .iter()
                .map(|&r| keep.iter().map(|&c| &a[r][c] - &a[r][p] * &a[p][c] / &d).collect())
                .collect();
        } else if let Some((i, j)) = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero()) {
            let b = a[i][j].clone();
            out.n_pos += 1;
            out.n_neg += 1;
            let keep: Vec<usize> = (0..m).filter(|&r| r != i && r != j).collect();
            a = keep
                .iter()
                .map(|&r| {
                    keep.iter()
                        .map(|&c| &a[r][c] - (&a[r][i] * &a[j][c] + &a[r][j] * &a[i][c]) / &b)
                        .collect()
                })
                .collect();
        } else {
            out.n_zero += m;
            break;
        }
    }
    Ok(out)
}

/// Which Lorentzian condition failed, with a witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub kind: String,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LorentzianVerdict {
    pub lorentzian: bool,
    pub failed_condition: Option<Failure>,
}

impl LorentzianVerdict {
    fn pass() -> Self {
        LorentzianVerdict { lorentzian: true, failed_condition: None }
    }

    fn fail(kind: &str, witness: Value) -> Self {
        LorentzianVerdict { lorentzian: false, failed_condition: Some(Failure { kind: kind.to_string(), witness }) }
    }
}

/// Multisets of size `r` from `0..n` as non-decreasing sequences, in colexicographic order.
pub fn multisets_colex(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, r: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in min..n {
            cur.push(v);
            go(n, r, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, r, 0, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Hessian of `∂^γ f` where `γ` counts the derivative indices; a constant
/// matrix with `H_ij = c_α · α!` for `α = γ + e_i + e_j`.
pub fn derivative_hessian(f: &DensePoly, derivative: &[usize]) -> Vec<Vec<BigRational>> {
    let n = f.n();
    let mut gamma = vec![0u32; n];
    for &i in derivative {
        gamma[i] += 1;
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut alpha = gamma.clone();
                    alpha[i] += 1;
                    alpha[j] += 1;
                    f.coeff(&alpha) * BigRational::from_integer(exponent_factorial(&alpha))
                })
                .collect()
        })
        .collect()
}

/// Checks the three Lorentzian conditions in order and reports the first failure.
pub fn is_lorentzian(f: &DensePoly) -> LorentzianVerdict {
    for (e, c) in f.terms() {
        if c.is_negative() {
            return LorentzianVerdict::fail("negative_coefficient", json!({ "exponent": e, "coeff": c.to_string() }));
        }
    }
    let d = f.degree() as usize;
    if d <= 1 {
        return LorentzianVerdict::pass();
    }
    let support: BTreeSet<Exponent> = f.terms().keys().cloned().collect();
    if let Some((alpha, beta, i)) = exchange_violation(&support) {
        return LorentzianVerdict::fail("support_not_m_convex", json!({ "alpha": alpha, "beta": beta, "i": i }));
    }
    for derivative in multisets_colex(f.n(), d - 2) {
        let h = derivative_hessian(f, &derivative);
        let sig = inertia(&h).expect("Hessians are symmetric");
        if sig.n_pos > 1 {
            let matrix: Vec<Vec<String>> = h.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            return LorentzianVerdict::fail(
                "hessian_signature",
                json!({ "derivative": derivative, "hessian": matrix, "inertia": sig }),
            );
        }
    }
    LorentzianVerdict::pass()
}

/// `normalize(densify(g^k))` for the truncation `g^k` of the skew shape `μ/ν`.
pub fn normalized_truncation(mu: &Partition, nu: &Partition, n: usize, k: usize) -> Result<DensePoly> {
    let g = truncation_schur(mu, nu, n, k)?;
    let mut dense = densify(&to_monomial(&g)?)?;
    if dense.is_zero() {
        dense = DensePoly::zero(n, mu.size() - nu.size());
    }
    Ok(normalize(&dense))
}

/// Convenience for integer matrices.
pub fn rational_matrix(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, Partition};
    use crate::symfunc::to_monomial;
    use num_traits::One;
    use proptest::prelude::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn schur_poly(lam: &Partition, n: usize) -> DensePoly {
        let s = SymPoly::term(Basis::Schur, n, lam.clone(), BigInt::one());
        normalize(&densify(&to_monomial(&s).unwrap()).unwrap())
    }

    #[test]
    fn densify_examples() {
        let m21 = SymPoly::term(Basis::Monomial, 2, p(&[2, 1]), BigInt::one());
        assert_eq!(densify(&m21).unwrap().to_string(), "x^2*y + x*y^2");
        let m11 = SymPoly::term(Basis::Monomial, 2, p(&[1, 1]), BigInt::one());
        assert_eq!(densify(&m11).unwrap().to_string(), "x*y");
        let m2 = SymPoly::term(Basis::Monomial, 3, p(&[2]), BigInt::one());
        assert_eq!(densify(&m2).unwrap().to_string(), "x^2 + y^2 + z^2");
        let mut mixed = m2.clone();
        mixed.add_term(p(&[1]), BigInt::one());
        assert!(matches!(densify(&mixed), Err(Error::NotHomogeneous(..))));
    }

    #[test]
    fn normalize_examples() {
        let f = DensePoly::from_terms(2, 3, [(vec![2, 1], q(1))]).unwrap();
        assert_eq!(normalize(&f).coeff(&[2, 1]), BigRational::new(1.into(), 2.into()));
        let g = DensePoly::from_terms(2, 2, [(vec![1, 1], q(1))]).unwrap();
        assert_eq!(normalize(&g), g);
        let h = DensePoly::from_terms(1, 3, [(vec![3], q(1))]).unwrap();
        assert_eq!(normalize(&h).coeff(&[3]), BigRational::new(1.into(), 6.into()));
    }

    #[test]
    fn m_convex_examples() {
        assert!(is_m_convex(&[vec![2, 0], vec![1, 1], vec![0, 2]]).unwrap());
        assert!(!is_m_convex(&[vec![2, 0], vec![0, 2]]).unwrap());
        assert!(is_m_convex(&[vec![3, 1, 0]]).unwrap());
        assert!(is_m_convex(&[]).unwrap());
        assert!(is_m_convex(&[vec![2, 0], vec![1, 0]]).is_err());
    }

    #[test]
    fn inertia_examples() {
        let sig = |m: &[Vec<i64>]| inertia(&rational_matrix(m)).unwrap();
        assert_eq!(sig(&[vec![1, 1], vec![1, 1]]), Inertia { n_pos: 1, n_neg: 0, n_zero: 1 });
        assert_eq!(sig(&[vec![0, 1], vec![1, 0]]), Inertia { n_pos: 1, n_neg: 1, n_zero: 0 });
        assert_eq!(sig(&[vec![0; 3], vec![0; 3], vec![0; 3]]), Inertia { n_pos: 0, n_neg: 0, n_zero: 3 });
        assert_eq!(sig(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]), Inertia { n_pos: 3, n_neg: 0, n_zero: 0 });
        assert_eq!(sig(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]), Inertia { n_pos: 1, n_neg: 2, n_zero: 0 });
        assert_eq!(inertia(&rational_matrix(&[vec![0, 1], vec![2, 0]])), Err(Error::NotSymmetric(0, 1)));
        assert_eq!(inertia(&rational_matrix(&[vec![0, 1]])), Err(Error::NotSquare));
        assert_eq!(sig(&[]), Inertia { n_pos: 0, n_neg: 0, n_zero: 0 });
    }

    #[test]
    fn lorentzian_examples() {
        let s2 = schur_poly(&p(&[2]), 2);
        assert_eq!(derivative_hessian(&s2, &[]), rational_matrix(&[vec![1, 1], vec![1, 1]]));
        assert!(is_lorentzian(&s2).lorentzian);
        let s11 = schur_poly(&p(&[1, 1]), 2);
        assert_eq!(derivative_hessian(&s11, &[]), rational_matrix(&[vec![0, 1], vec![1, 0]]));
        assert!(is_lorentzian(&s11).lorentzian);
        let gap = DensePoly::from_terms(2, 2, [(vec![2, 0], q(1)), (vec![0, 2], q(1))]).unwrap();
        let verdict = is_lorentzian(&gap);
        assert!(!verdict.lorentzian);
        assert_eq!(verdict.failed_condition.unwrap().kind, "support_not_m_convex");
    }

    #[test]
    fn lorentzian_failures_are_diagnosed() {
        let neg = DensePoly::from_terms(2, 2, [(vec![2, 0], q(1)), (vec![1, 1], q(-1))]).unwrap();
        assert_eq!(is_lorentzian(&neg).failed_condition.unwrap().kind, "negative_coefficient");
        // h_2 in three variables before normalization: Hessian [[2,1,1],[1,2,1],[1,1,2]] is positive definite.
        let sq = DensePoly::from_terms(
            3,
            2,
            [(vec![2, 0, 0], q(1)), (vec![0, 2, 0], q(1)), (vec![0, 0, 2], q(1)), (vec![1, 1, 0], q(1)), (vec![0, 1, 1], q(1)), (vec![1, 0, 1], q(1))],
        )
        .unwrap();
        let v = is_lorentzian(&sq);
        assert_eq!(v.failed_condition.unwrap().kind, "hessian_signature");
        assert!(is_lorentzian(&DensePoly::zero(3, 4)).lorentzian);
        assert!(is_lorentzian(&DensePoly::one(2)).lorentzian);
    }

    #[test]
    fn colex_multisets() {
        assert_eq!(multisets_colex(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(multisets_colex(3, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1], vec![0, 2], vec![1, 2], vec![2, 2]]);
        assert_eq!(multisets_colex(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(multisets_colex(3, 4).len(), 15);
    }

    #[test]
    fn schur_polynomials_are_lorentzian_in_three_variables() {
        for d in 0..=6 {
            for lam in enumerate_partitions(d, 3) {
                let f = schur_poly(&lam, 3);
                assert!(is_lorentzian(&f).lorentzian, "{lam}");
            }
        }
    }

    #[test]
    fn products_of_schur_polynomials_stay_lorentzian() {
        // normalize(f)·normalize(g) is not normalize(f·g); normalize the product.
        let pairs = [(p(&[1]), p(&[2])), (p(&[2, 1]), p(&[1, 1])), (p(&[2]), p(&[2])), (p(&[1, 1, 1]), p(&[3]))];
        for (a, b) in pairs {
            let dense = |lam: &Partition| densify(&to_monomial(&SymPoly::term(Basis::Schur, 3, lam.clone(), BigInt::one())).unwrap()).unwrap();
            let prod = normalize(&dense(&a).mul(&dense(&b)).unwrap());
            assert!(is_lorentzian(&prod).lorentzian, "{a} * {b}");
        }
    }

    #[test]
    fn variable_permutation_invariance() {
        let perms = [[1, 0, 2], [2, 1, 0], [1, 2, 0]];
        let gap = DensePoly::from_terms(3, 2, [(vec![2, 0, 0], q(1)), (vec![0, 2, 0], q(1))]).unwrap();
        for d in 2..=5 {
            for lam in enumerate_partitions(d, 3) {
                let f = schur_poly(&lam, 3);
                for perm in &perms {
                    assert_eq!(is_lorentzian(&f.permute_variables(perm)).lorentzian, is_lorentzian(&f).lorentzian);
                    assert!(!is_lorentzian(&gap.permute_variables(perm)).lorentzian);
                }
            }
        }
    }

    fn small_symmetric() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=4).prop_flat_map(|n| {
            prop::collection::vec(-3i64..=3, n * (n + 1) / 2).prop_map(move |upper| {
                let mut m = vec![vec![0; n]; n];
                let mut it = upper.into_iter();
                for i in 0..n {
                    for j in i..n {
                        let x = it.next().unwrap();
                        m[i][j] = x;
                        m[j][i] = x;
                    }
                }
                m
            })
        })
    }

    fn congruent(m: &[Vec<i64>], p: &[Vec<i64>]) -> Vec<Vec<i64>> {
        // pᵀ m p
        let n = m.len();
        let mut mp = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                mp[i][j] = (0..n).map(|k| m[i][k] * p[k][j]).sum();
            }
        }
        let mut out = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = (0..n).map(|k| p[k][i] * mp[k][j]).sum();
            }
        }
        out
    }

    proptest! {
        #[test]
        fn inertia_counts_sum_to_dimension(m in small_symmetric()) {
            let s = inertia(&rational_matrix(&m)).unwrap();
            prop_assert_eq!(s.n_pos + s.n_neg + s.n_zero, m.len());
        }

        #[test]
        fn inertia_is_congruence_invariant(m in small_symmetric(), lower in prop::collection::vec(-2i64..=2, 6), perm_seed in 0usize..24) {
            let n = m.len();
            // unit lower-triangular times a permutation matrix is invertible
            let mut l = vec![vec![0; n]; n];
            let mut it = lower.into_iter();
            for i in 0..n {
                l[i][i] = 1;
                for j in 0..i {
                    l[i][j] = it.next().unwrap_or(0);
                }
            }
            let perms = crate::perm::all_permutations(n).unwrap();
            let w = &perms[perm_seed % perms.len()];
            let mut pm = vec![vec![0; n]; n];
            for i in 0..n {
                pm[i][w.apply(i)] = 1;
            }
            let mut p = vec![vec![0; n]; n];
            for i in 0..n {
                for j in 0..n {
                    p[i][j] = (0..n).map(|k| l[i][k] * pm[k][j]).sum();
                }
            }
            let before = inertia(&rational_matrix(&m)).unwrap();
            let after = inertia(&rational_matrix(&congruent(&m, &p))).unwrap();
            prop_assert_eq!(before, after);
            let permuted = inertia(&rational_matrix(&congruent(&m, &pm))).unwrap();
            prop_assert_eq!(before, permuted);
        }
    }
}
