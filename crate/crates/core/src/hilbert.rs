//! Hilbert functions of `K[Omega]`, 2-normality and h-polynomials.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::monomial::{binomial, for_each_composition, Monomial, MonomialSet};

/// The distinct degree-`k` products of members of `omega`, `k >= 1`.
fn product_set(omega: &MonomialSet, k: u32, guard: u128) -> Result<HashSet<Vec<u32>>> {
    let mut cur: HashSet<Vec<u32>> = omega.iter().map(|m| m.exponents().to_vec()).collect();
    for _ in 1..k {
        let work = cur.len() as u128 * omega.len() as u128;
        if work > guard {
            return Err(Error::SizeGuard {
                what: "Hilbert function products".into(),
                count: work,
                ceiling: guard,
            });
        }
        let mut next = HashSet::with_capacity(cur.len() * 2);
        for p in &cur {
            for m in omega.iter() {
                next.insert(p.iter().zip(m.exponents()).map(|(a, b)| a + b).collect());
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// `HF(k) = dim K[Omega]_k`, the number of distinct degree-`k` products.
pub fn hilbert_function(omega: &MonomialSet, k: u32) -> Result<u128> {
    hilbert_function_with_guard(omega, k, crate::fibers::DEFAULT_GUARD)
}

pub fn hilbert_function_with_guard(omega: &MonomialSet, k: u32, guard: u128) -> Result<u128> {
    if k == 0 {
        return Ok(1);
    }
    Ok(product_set(omega, k, guard)?.len() as u128)
}

/// Values `HF(0..=k_max)`, sharing the iterated product sets.
pub fn hilbert_series_prefix(omega: &MonomialSet, k_max: u32, guard: u128) -> Result<Vec<u128>> {
    let mut out = vec![1u128];
    if k_max == 0 {
        return Ok(out);
    }
    let mut cur: HashSet<Vec<u32>> = omega.iter().map(|m| m.exponents().to_vec()).collect();
    out.push(cur.len() as u128);
    for _ in 2..=k_max {
        let work = cur.len() as u128 * omega.len() as u128;
        if work > guard {
            return Err(Error::SizeGuard {
                what: "Hilbert function products".into(),
                count: work,
                ceiling: guard,
            });
        }
        let mut next = HashSet::with_capacity(cur.len() * 2);
        for p in &cur {
            for m in omega.iter() {
                next.insert(
                    p.iter()
                        .zip(m.exponents())
                        .map(|(a, b)| a + b)
                        .collect::<Vec<u32>>(),
                );
            }
        }
        cur = next;
        out.push(cur.len() as u128);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoNormality {
    pub is_2_normal: bool,
    /// The lex-least degree-`2d` monomial that is not a product of two members.
    pub witness: Option<Monomial>,
    /// Number of unreachable degree-`2d` monomials.
    pub unreachable: u128,
}

/// Whether every monomial of degree `2d` is a product of two members.
pub fn is_2_normal(omega: &MonomialSet) -> TwoNormality {
    let reachable = product_set(omega, 2, u128::MAX).expect("no guard");
    let mut witness: Option<Vec<u32>> = None;
    let mut unreachable = 0u128;
    for_each_composition(omega.nvars(), 2 * omega.degree(), |c| {
        if !reachable.contains(c) {
            unreachable += 1;
            // compositions arrive in descending lex order; keep the last
            witness = Some(c.to_vec());
        }
    });
    TwoNormality {
        is_2_normal: unreachable == 0,
        witness: witness.map(Monomial::new),
        unreachable,
    }
}

/// Whether `m` has degree `2d` and is not a product of two members.
pub fn is_2_normality_witness(omega: &MonomialSet, m: &Monomial) -> Result<bool> {
    if m.nvars() != omega.nvars() {
        return Err(Error::DimensionMismatch {
            expected: omega.nvars(),
            got: m.nvars(),
        });
    }
    if m.degree() != 2 * omega.degree() {
        return Ok(false);
    }
    for a in omega.iter() {
        if a.divides(m)? && omega.contains(&a.quotient_of(m)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficients of `(sum_{k <= k_max} HF(k) z^k) (1 - z)^{n+1}`, checked to
/// vanish in the last three computed degrees and trimmed to length
/// `max(n + 1, deg + 1)`.
pub fn h_polynomial(omega: &MonomialSet, k_max: u32, guard: u128) -> Result<Vec<i128>> {
    if !omega.contains_pure_powers() {
        return domain("h_polynomial needs every pure power x_i^d in Omega");
    }
    let n1 = omega.nvars() as u32;
    if k_max < 3 {
        return domain("h_polynomial needs k_max >= 3");
    }
    let hf = hilbert_series_prefix(omega, k_max, guard)?;
    let mut coeffs = vec![0i128; k_max as usize + 1];
    for (k, c) in coeffs.iter_mut().enumerate() {
        for j in 0..=(k as u32).min(n1) {
            let b = binomial(n1 as u64, j as u64)? as i128;
            let term = b * hf[k - j as usize] as i128;
            if j % 2 == 0 {
                *c += term;
            } else {
                *c -= term;
            }
        }
    }
    let tail: Vec<i128> = coeffs[coeffs.len() - 3..].to_vec();
    if tail.iter().any(|&c| c != 0) {
        return Err(Error::NotStabilized { tail });
    }
    let last = coeffs.iter().rposition(|&c| c != 0).unwrap_or(0);
    coeffs.truncate((last + 1).max(n1 as usize));
    Ok(coeffs)
}

/// `k_max` large enough for `h_polynomial` whenever the numerator has degree
/// at most `n + 1`.
pub fn default_h_k_max(omega: &MonomialSet) -> u32 {
    omega.nvars() as u32 + 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{enumerate_degree, enumerate_support_bounded};

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn hf_examples() {
        let omega = enumerate_degree(2, 4).unwrap().without(&[mono(&[2, 2, 0])]);
        assert_eq!(hilbert_function(&omega, 2).unwrap(), 45);
        assert_eq!(hilbert_function(&omega, 0).unwrap(), 1);
        assert_eq!(hilbert_function(&omega, 1).unwrap(), 14);
    }

    #[test]
    fn two_normality_examples() {
        let pv = enumerate_support_bounded(3, 5, 2).unwrap();
        let r = is_2_normal(&pv);
        assert!(!r.is_2_normal);
        assert_eq!(r.witness, Some(mono(&[1, 1, 1, 7])));
        assert!(is_2_normality_witness(&pv, &mono(&[2, 2, 2, 4])).unwrap());
        assert!(!is_2_normality_witness(&pv, &mono(&[5, 5, 0, 0])).unwrap());
        let no_power = enumerate_degree(2, 4).unwrap().without(&[mono(&[4, 0, 0])]);
        assert!(!is_2_normal(&no_power).is_2_normal);
        let single = enumerate_degree(2, 4).unwrap().without(&[mono(&[2, 2, 0])]);
        assert!(is_2_normal(&single).is_2_normal);
        for (n, d) in [(3, 5), (4, 3)] {
            let s = (n + 3) / 2;
            assert!(is_2_normal(&enumerate_support_bounded(n, d, s).unwrap()).is_2_normal);
        }
    }

    #[test]
    fn veronese_h_polynomial() {
        let m22 = enumerate_degree(2, 2).unwrap();
        assert_eq!(h_polynomial(&m22, 6, u128::MAX).unwrap(), vec![1, 3, 0]);
        let missing = enumerate_degree(2, 2).unwrap().without(&[mono(&[2, 0, 0])]);
        assert!(h_polynomial(&missing, 6, u128::MAX).is_err());
    }

    #[test]
    fn stabilization_failure_carries_tail() {
        let m22 = enumerate_degree(2, 2).unwrap();
        // k_max = 3 keeps h_1 = 3 inside the checked window
        match h_polynomial(&m22, 3, u128::MAX) {
            Err(Error::NotStabilized { tail }) => assert_eq!(tail, vec![3, 0, 0]),
            other => panic!("unexpected {other:?}"),
        }
    }
}
