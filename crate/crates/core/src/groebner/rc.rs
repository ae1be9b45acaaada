//! The `(r, c)` lexicographic order for `<M_{d;0,1,k}>` with `d = t k (k-1)`.
//!
//! Every invariant `x0^a x1^b x2^c` of degree `d` solves `a + b + c = d` and
//! `b + k c = r d` for a unique `r`, and the pairs `(r, c)` that occur form
//! `W_d = {(0,0)} ∪ {(r,c) : 1 <= r <= k, (r-1) t k <= c <= r t (k-1)}`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::groebner::order::{OrderKind, TermOrder};
use crate::group::DiagonalGroup;
use crate::monomial::{Monomial, MonomialSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RcEntry {
    pub r: u32,
    pub c: u32,
    pub monomial: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcOrder {
    pub d: u32,
    pub k: u32,
    pub t: u32,
    /// `W_d` in ascending `(r, c)` order.
    pub table: Vec<RcEntry>,
    pub order: TermOrder,
}

fn check_params(d: u32, k: u32, t: u32) -> Result<()> {
    if k < 2 || t < 1 || (t as u64) * (k as u64) * (k as u64 - 1) != d as u64 {
        return domain(format!(
            "rc order needs d = t*k*(k-1) with k >= 2, t >= 1; got d={d}, k={k}, t={t}"
        ));
    }
    Ok(())
}

/// `W_d` with the monomial `((k-1)c - (r-1)d, r d - k c, c)` of each pair.
pub fn rc_table(d: u32, k: u32, t: u32) -> Result<Vec<RcEntry>> {
    check_params(d, k, t)?;
    let mut out = vec![RcEntry {
        r: 0,
        c: 0,
        monomial: Monomial::new(vec![d, 0, 0]),
    }];
    let (d, k, t) = (d as i64, k as i64, t as i64);
    for r in 1..=k {
        for c in (r - 1) * t * k..=r * t * (k - 1) {
            let a = (k - 1) * c - (r - 1) * d;
            let b = r * d - k * c;
            out.push(RcEntry {
                r: r as u32,
                c: c as u32,
                monomial: Monomial::new(vec![a as u32, b as u32, c as u32]),
            });
        }
    }
    Ok(out)
}

/// Lex on `S` with the variables ranked by `(r, c)`, the largest pair being
/// the greatest variable. `omega` must be `B_1` of `<M_{d;0,1,k}>`.
pub fn rc_term_order(omega: &MonomialSet, d: u32, k: u32, t: u32) -> Result<RcOrder> {
    let table = rc_table(d, k, t)?;
    if omega.n() != 2 || omega.degree() != d || omega.len() != table.len() {
        return domain(format!("Omega is not B_1 of <M_{{{d};0,1,{k}}}>"));
    }
    let mut vars = Vec::with_capacity(table.len());
    for e in table.iter().rev() {
        match omega.position(&e.monomial) {
            Some(i) => vars.push(i),
            None => return domain(format!("{} is missing from Omega", e.monomial)),
        }
    }
    Ok(RcOrder {
        d,
        k,
        t,
        table,
        order: TermOrder::ranked(OrderKind::Lex, vars)?,
    })
}

/// `(d, k, t)` when `g` is presented as `<M_{d;0,1,k}>` with `d = t k (k-1)`.
pub fn rc_parameters(g: &DiagonalGroup) -> Option<(u32, u32, u32)> {
    if g.n() != 2 || !g.is_cyclic_presentation() {
        return None;
    }
    let w = g.cyclic_weights().ok()?;
    if w[..2] != [0, 1] {
        return None;
    }
    let k = w[2];
    let d = g.order();
    if k < 2 || !d.is_multiple_of(k * (k - 1)) {
        return None;
    }
    Some((d, k, d / (k * (k - 1))))
}

/// All `(d, k, t)` with `d = t k (k-1) <= max_d`.
pub fn rc_instances(max_d: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for k in 2..=max_d {
        let base = k * (k - 1);
        if base > max_d {
            break;
        }
        for t in 1..=max_d / base {
            out.push((t * base, k, t));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d6_table() {
        let t = rc_table(6, 3, 1).unwrap();
        let pairs: Vec<(u32, u32)> = t.iter().map(|e| (e.r, e.c)).collect();
        assert_eq!(
            pairs,
            vec![(0, 0), (1, 0), (1, 1), (1, 2), (2, 3), (2, 4), (3, 6)]
        );
        let monos: Vec<Vec<u32>> = t.iter().map(|e| e.monomial.exponents().to_vec()).collect();
        assert_eq!(
            monos,
            vec![
                vec![6, 0, 0],
                vec![0, 6, 0],
                vec![2, 3, 1],
                vec![4, 0, 2],
                vec![0, 3, 3],
                vec![2, 0, 4],
                vec![0, 0, 6]
            ]
        );
    }

    #[test]
    fn tables_are_exactly_b1() {
        for (d, k, t) in rc_instances(30) {
            let g = DiagonalGroup::cyclic(d, &[0, 1, k as i64]).unwrap();
            let b1 = g.invariants_of_degree(1).unwrap();
            let table = rc_table(d, k, t).unwrap();
            assert_eq!(table.len(), b1.len(), "d={d} k={k}");
            for r in 1..=k {
                let size = table.iter().filter(|e| e.r == r).count() as u32;
                assert_eq!(size, t * (k - r) + 1);
            }
            for e in &table {
                assert!(g.is_invariant(&e.monomial).unwrap());
            }
            assert!(rc_term_order(&b1, d, k, t).is_ok());
            if k < d {
                assert_eq!(rc_parameters(&g), Some((d, k, t)));
            }
        }
        assert_eq!(rc_table(12, 3, 2).unwrap().len(), 10);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(rc_table(7, 3, 1).is_err());
        assert!(rc_table(6, 1, 6).is_err());
        let g = DiagonalGroup::cyclic(7, &[0, 1, 3]).unwrap();
        assert_eq!(rc_parameters(&g), None);
    }
}
