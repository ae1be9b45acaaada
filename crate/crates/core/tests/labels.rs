use veronese_core::monomial::Monomial;
use veronese_core::scenario::{listed_set, LISTED_B2};
use veronese_core::{
    generator_table, koszul_label, quadratic_label, DiagonalGroup, FamilySpec, Property,
    TableOptions, Validation, VerdictStatus,
};

fn families() -> Vec<FamilySpec> {
    let group = |s: &str, t| FamilySpec::GroupInvariants {
        group: DiagonalGroup::parse(s, Validation::Nominal).unwrap(),
        t,
    };
    vec![
        FamilySpec::Veronese { n: 2, d: 3 },
        FamilySpec::Veronese { n: 3, d: 2 },
        FamilySpec::PinchedVeronese { n: 2, d: 3, s: 2 },
        FamilySpec::PinchedVeronese { n: 3, d: 4, s: 3 },
        FamilySpec::PinchedVeronese { n: 3, d: 5, s: 2 },
        FamilySpec::ComplementSingle {
            n: 2,
            d: 4,
            m: Monomial::parse("x0^2*x1^2", 3).unwrap(),
        },
        FamilySpec::CIComplement {
            n: 2,
            d: 5,
            lambda: 2,
        },
        FamilySpec::CoroKoszulI { n: 2, lambda: 2 },
        FamilySpec::CoroKoszulII { n: 2, lambda: 2 },
        FamilySpec::HigherDegree { d: 4 },
        FamilySpec::HigherDegree { d: 5 },
        group("C(4;0,1,2,3)", 1),
        group("C(5;0,1,2,3)", 1),
        group("C(6;0,1,3)", 1),
        group("C(5;0,1,2)", 1),
        group("C(7;0,1,3)", 1),
    ]
}

#[test]
fn verdicts_are_consistent_across_families() {
    for spec in families() {
        let q = quadratic_label(&spec, None).unwrap();
        let k = koszul_label(&spec).unwrap();
        if q.property == Property::NotQuadratic {
            assert_eq!(
                k.property,
                Property::NotKoszul,
                "{spec}: not quadratic, Koszul label {k:?}"
            );
        }
        if k.property == Property::Koszul && k.status != VerdictStatus::Unknown {
            let set = spec.build().unwrap();
            if let Ok(t) = generator_table(&set, Some(3), TableOptions::default()) {
                assert!(
                    t.degrees.keys().all(|&d| d == 2),
                    "{spec}: Koszul with table {:?}",
                    t.as_pairs()
                );
            }
        }
    }
}

#[test]
fn build_is_idempotent_and_round_trips_through_text() {
    for spec in families() {
        let a = spec.build().unwrap();
        let b = spec.build().unwrap();
        assert_eq!(a.members(), b.members());
        let reparsed = FamilySpec::parse(&spec.to_string()).unwrap();
        assert_eq!(reparsed.build().unwrap().members(), a.members(), "{spec}");
    }
}

#[test]
fn listed_degree_eight_set_is_b1_of_the_order_eight_group() {
    let listed = listed_set(LISTED_B2, 8).unwrap();
    let g = DiagonalGroup::cyclic(8, &[0, 1, 2, 3]).unwrap();
    assert_eq!(
        g.invariants_of_degree(1).unwrap().members(),
        listed.members()
    );
}
