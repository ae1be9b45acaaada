use proptest::prelude::*;
use veronese_core::fibers::DEFAULT_GUARD;
use veronese_core::groebner::toric_generators;
use veronese_core::{
    buchberger, generator_table, is_2_normal, DiagonalGroup, OrderKind, TableOptions, TermOrder,
};

fn surface_group() -> impl Strategy<Value = DiagonalGroup> {
    (3u32..9, 0i64..9, 0i64..9).prop_filter_map("common divisor", |(d, a1, a2)| {
        DiagonalGroup::cyclic(d, &[0, a1, a2]).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_basis_is_groebner_and_dominates_generators(g in surface_group(), lex in any::<bool>()) {
        let omega = g.invariants_of_degree(1).unwrap();
        let gens = toric_generators(&omega, None, DEFAULT_GUARD).unwrap();
        let kind = if lex { OrderKind::Lex } else { OrderKind::DegRevLex };
        let gb = buchberger(&gens, &TermOrder::natural(kind, omega.len())).unwrap();
        prop_assert!(gb.is_groebner());
        prop_assert!(gb.is_reduced());
        for b in &gens {
            prop_assert!(gb.reduces_to_zero(b));
        }
        let table = generator_table(&omega, None, TableOptions::default()).unwrap();
        prop_assert!(gb.max_degree >= table.max_degree().unwrap_or(0));
    }

    #[test]
    fn two_normal_sets_have_no_generators_above_three(g in surface_group()) {
        let omega = g.invariants_of_degree(1).unwrap();
        if is_2_normal(&omega).is_2_normal {
            let table = generator_table(&omega, None, TableOptions::default()).unwrap();
            prop_assert!(table.max_degree().unwrap_or(0) <= 3, "{:?}", table.as_pairs());
        }
    }
}
