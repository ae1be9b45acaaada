//! Groebner bases of toric ideals and term-order constructions.

pub mod buchberger;
pub mod certificate;
pub mod lift;
pub mod order;
pub mod rc;
pub mod search;

use crate::binomial::Binomial;
use crate::error::Result;
use crate::fibers::{generator_table, TableOptions};
use crate::group::DiagonalGroup;
use crate::group::Validation;
use crate::monomial::{MonomialSet, SetOrigin};

/// Minimal generators of the toric ideal of `omega`, complete when a theorem
/// bound applies and up to `user_k_max` otherwise. Without either, an
/// `Uncertified` error.
pub fn toric_generators(
    omega: &MonomialSet,
    user_k_max: Option<u32>,
    guard: u128,
) -> Result<Vec<Binomial>> {
    let opts = TableOptions {
        guard,
        representatives: true,
    };
    Ok(generator_table(omega, user_k_max, opts)?.generators())
}

/// The group recorded in the origin of `omega`, when it is a set of invariants.
pub fn origin_group(omega: &MonomialSet) -> Option<(DiagonalGroup, u32)> {
    match omega.origin() {
        SetOrigin::GroupInvariants { group, t } => DiagonalGroup::parse(group, Validation::Nominal)
            .ok()
            .map(|g| (g, *t)),
        SetOrigin::Plain => None,
    }
}

/// Known-good orders to try first: the `(r,c)` order when `omega` is `B_1`
/// of `<M_{d;0,1,k}>` with `d = t k (k-1)`.
pub fn default_hints(omega: &MonomialSet) -> Vec<order::TermOrder> {
    let mut out = Vec::new();
    if let Some((g, 1)) = origin_group(omega) {
        if let Some((d, k, t)) = rc::rc_parameters(&g) {
            if let Ok(rc) = rc::rc_term_order(omega, d, k, t) {
                out.push(rc.order);
            }
        }
    }
    out
}

/// Turns a parsed order description into an order on the variables of
/// `omega`. For `lift(...)`, `omega` is the lifted set and the base set is
/// its image under `psi`.
pub fn resolve_order(spec: &order::OrderSpec, omega: &MonomialSet) -> Result<order::TermOrder> {
    use crate::error::{domain, Error};
    use order::{OrderSpec, TermOrder};
    match spec {
        OrderSpec::Ranked { kind, vars } if vars.is_empty() => {
            Ok(TermOrder::natural(*kind, omega.len()))
        }
        OrderSpec::Ranked { kind, vars } => {
            if vars.len() != omega.len() {
                return Err(Error::DimensionMismatch {
                    expected: omega.len(),
                    got: vars.len(),
                });
            }
            TermOrder::ranked(*kind, vars.clone())
        }
        OrderSpec::Rc { d, k, t } => Ok(rc::rc_term_order(omega, *d, *k, *t)?.order),
        OrderSpec::Lift { base, sizes } => {
            let images = omega
                .iter()
                .map(|m| lift::psi(sizes, m))
                .collect::<Result<Vec<_>>>()?;
            let base_set = MonomialSet::new(sizes.len() - 1, omega.degree(), images)?;
            let base_order = resolve_order(base, &base_set)?;
            let (lifted, order) = lift::lift_order(&base_order, &base_set, sizes)?;
            if &lifted != omega {
                return domain("Omega is not the full preimage of its image, in canonical order");
            }
            Ok(order)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::order::OrderSpec;

    #[test]
    fn resolve_forms() {
        let g = DiagonalGroup::cyclic(6, &[0, 1, 3]).unwrap();
        let b1 = g.invariants_of_degree(1).unwrap();
        let rc = resolve_order(&OrderSpec::parse("rc(6,3,1)").unwrap(), &b1).unwrap();
        assert_eq!(rc.kind(), Some(order::OrderKind::Lex));
        assert_eq!(default_hints(&b1), vec![rc.clone()]);
        let lifted = lift::lift_omega(&b1, &[1, 1, 2]).unwrap();
        let o = resolve_order(
            &OrderSpec::parse("lift(rc(6,3,1); sizes=1,1,2)").unwrap(),
            &lifted,
        )
        .unwrap();
        assert_eq!(o.nvars(), lifted.len());
        assert!(resolve_order(&OrderSpec::parse("lex: w0 > w1").unwrap(), &b1).is_err());
    }
}
