//! Splitting variables: `x_i` becomes the block `x_{i,0}, ..., x_{i,l_i - 1}`
//! and `psi(x_{ij}) = x_i`.

use crate::error::{domain, Error, Result};
use crate::groebner::order::TermOrder;
use crate::monomial::{for_each_composition, Monomial, MonomialSet, SetOrigin};

fn check_sizes(nvars: usize, sizes: &[usize]) -> Result<()> {
    if sizes.len() != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            got: sizes.len(),
        });
    }
    if sizes.contains(&0) {
        return domain("block sizes must be positive");
    }
    Ok(())
}

/// `psi`: sums the exponents within each block.
pub fn psi(sizes: &[usize], m: &Monomial) -> Result<Monomial> {
    let total: usize = sizes.iter().sum();
    if m.nvars() != total {
        return Err(Error::DimensionMismatch {
            expected: total,
            got: m.nvars(),
        });
    }
    let mut out = Vec::with_capacity(sizes.len());
    let mut at = 0;
    for &s in sizes {
        out.push(m.exponents()[at..at + s].iter().sum());
        at += s;
    }
    Ok(Monomial::new(out))
}

/// The preimage of `omega` under `psi`, in canonical order.
pub fn lift_omega(omega: &MonomialSet, sizes: &[usize]) -> Result<MonomialSet> {
    check_sizes(omega.nvars(), sizes)?;
    let mut members = Vec::new();
    for m in omega.iter() {
        let mut parts: Vec<Vec<Vec<u32>>> = Vec::with_capacity(sizes.len());
        for (&e, &s) in m.exponents().iter().zip(sizes) {
            let mut opts = Vec::new();
            for_each_composition(s, e, |c| opts.push(c.to_vec()));
            parts.push(opts);
        }
        let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
        for opts in &parts {
            let mut next = Vec::with_capacity(acc.len() * opts.len());
            for a in &acc {
                for o in opts {
                    let mut v = a.clone();
                    v.extend_from_slice(o);
                    next.push(v);
                }
            }
            acc = next;
        }
        members.extend(acc.into_iter().map(Monomial::new));
    }
    let n = sizes.iter().sum::<usize>() - 1;
    let lifted = MonomialSet::new(n, omega.degree(), members)?;
    // the preimage of B_t of G is B_t of the block group, so the group bound carries over
    if let Some((g, t)) = crate::groebner::origin_group(omega) {
        if let Ok(big) = g.block_group(sizes) {
            return Ok(lifted.with_origin(SetOrigin::GroupInvariants {
                group: big.to_string(),
                t,
            }));
        }
    }
    Ok(lifted)
}

/// For each member of `lifted`, the index of its `psi`-image in `base`.
pub fn lift_projection(
    base: &MonomialSet,
    lifted: &MonomialSet,
    sizes: &[usize],
) -> Result<Vec<usize>> {
    lifted
        .iter()
        .map(|m| {
            let img = psi(sizes, m)?;
            base.position(&img).ok_or_else(|| {
                Error::Domain(format!("{m} maps to {img}, which is not in the base set"))
            })
        })
        .collect()
}

/// The order on the lifted presentation ring: images under `phi` are compared
/// with `base_order`; ties are broken by graded reverse lex, ranking lifted
/// variables by the base rank of their image and then by their split
/// exponents in descending lex order. Returns the lifted set with the order.
pub fn lift_order(
    base_order: &TermOrder,
    base: &MonomialSet,
    sizes: &[usize],
) -> Result<(MonomialSet, TermOrder)> {
    if base_order.nvars() != base.len() {
        return Err(Error::DimensionMismatch {
            expected: base.len(),
            got: base_order.nvars(),
        });
    }
    let lifted = lift_omega(base, sizes)?;
    if sizes.iter().all(|&s| s == 1) {
        return Ok((lifted, base_order.clone()));
    }
    let phi = lift_projection(base, &lifted, sizes)?;
    let ranking = base_order.variable_ranking();
    let mut base_rank = vec![0usize; base.len()];
    for (r, &v) in ranking.iter().enumerate() {
        base_rank[v] = r;
    }
    let mut tie: Vec<usize> = (0..lifted.len()).collect();
    tie.sort_by(|&i, &j| {
        base_rank[phi[i]]
            .cmp(&base_rank[phi[j]])
            .then_with(|| lifted.get(j).exponents().cmp(lifted.get(i).exponents()))
    });
    let order = TermOrder::lifted(base_order.clone(), phi, tie, sizes.to_vec())?;
    Ok((lifted, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::enumerate_degree;
    use crate::DiagonalGroup;

    #[test]
    fn full_veronese_lifts_to_full_veronese() {
        let m12 = enumerate_degree(1, 2).unwrap();
        assert_eq!(
            lift_omega(&m12, &[2, 1]).unwrap(),
            enumerate_degree(2, 2).unwrap()
        );
        assert_eq!(lift_omega(&m12, &[1, 1]).unwrap(), m12);
        assert!(lift_omega(&m12, &[1, 0]).is_err());
    }

    #[test]
    fn lift_matches_block_group() {
        let g = DiagonalGroup::cyclic(4, &[0, 1, 3]).unwrap();
        let b1 = g.invariants_of_degree(1).unwrap();
        let sizes = [1, 2, 1];
        assert_eq!(
            lift_omega(&b1, &sizes).unwrap(),
            g.block_group(&sizes)
                .unwrap()
                .invariants_of_degree(1)
                .unwrap()
                .canonical()
        );
    }

    #[test]
    fn lifted_variable_ranking() {
        let m12 = enumerate_degree(1, 2).unwrap();
        let base = TermOrder::natural(crate::OrderKind::Lex, 3);
        let (lifted, order) = lift_order(&base, &m12, &[2, 1]).unwrap();
        let names: Vec<String> = order
            .variable_ranking()
            .iter()
            .map(|&i| lifted.get(i).to_string())
            .collect();
        // x0^2 splits into x00^2 > x00*x01 > x01^2, then x0*x1 splits, then x1^2
        assert_eq!(
            names,
            vec!["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2"]
        );
        let (_, same) = lift_order(&base, &m12, &[1, 1]).unwrap();
        assert_eq!(same, base);
    }
}
