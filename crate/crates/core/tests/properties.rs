use dsnum::{
    add, encode, normalize, parse, to_expansion, Expansion, FamilyNumeral, PlaceValueSet,
    RadixSequence, Style,
};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Systems with `b_{r+1} > 10^30`, mixing radices above and below 10.
fn large_system() -> impl Strategy<Value = PlaceValueSet> {
    prop::collection::vec(2u64..=24, 24..=48)
        .prop_map(|ks| PlaceValueSet::new(RadixSequence::new(ks).unwrap()))
        .prop_filter("needs b_top > 10^30", |p| {
            p.b_top() > &BigUint::from(10u32).pow(30)
        })
}

fn small_system() -> impl Strategy<Value = PlaceValueSet> {
    prop::collection::vec(1u64..=6, 1..=5)
        .prop_map(|ks| PlaceValueSet::new(RadixSequence::new(ks).unwrap()))
}

fn below(system: &PlaceValueSet, limbs: &[u32]) -> BigUint {
    BigUint::from_slice(limbs) % system.capacity()
}

fn limbs() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<u32>(), 1..=8)
}

fn numeral(system: &PlaceValueSet, limbs: &[u32]) -> FamilyNumeral {
    encode(&below(system, limbs), system).unwrap().into_numeral()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn encode_round_trips_on_large_systems(system in large_system(), limbs in limbs()) {
        let m = below(&system, &limbs);
        let rep = encode(&m, &system).unwrap();
        prop_assert_eq!(rep.value(), m);
        prop_assert_eq!(rep.start_level(), system.len());
        for (level, d) in rep.levels() {
            prop_assert!(d < system.k(level), "digit {} at level {}", d, level);
        }
    }

    #[test]
    fn addition_commutes_and_associates(
        system in large_system(),
        a in limbs(),
        b in limbs(),
        c in limbs(),
    ) {
        let (a, b, c) = (numeral(&system, &a), numeral(&system, &b), numeral(&system, &c));
        let ab = add(&a, &b).unwrap();
        prop_assert_eq!(&ab, &add(&b, &a).unwrap());
        let left = add(&ab, &c).unwrap();
        let right = add(&a, &add(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let total = (a.value() + b.value() + c.value()) % system.capacity();
        prop_assert_eq!(left.value(), total);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn parse_inverts_format(system in large_system(), limbs in limbs(), cut in 0usize..48) {
        let rep = encode(&below(&system, &limbs), &system).unwrap();
        // a non-canonical numeral: drop some top digits and start lower
        let drop = cut.min(rep.digits().len() - 1);
        let lower = FamilyNumeral::new(
            &system,
            rep.digits()[drop..].to_vec(),
            system.len() - drop,
        ).unwrap();
        for x in [rep.numeral(), &lower] {
            for style in [Style::Bare, Style::Subscripted, Style::Parenthesized] {
                if let Ok(text) = x.format(style) {
                    prop_assert_eq!(&parse(&text, &system).unwrap(), x, "{}", text);
                }
            }
            prop_assert!(x.format(Style::Subscripted).is_ok());
        }
    }

    #[test]
    fn normalize_fixes_canonical_numerals(system in small_system(), limbs in limbs()) {
        let rep = encode(&below(&system, &limbs), &system).unwrap();
        let again = normalize(&to_expansion(rep.numeral()));
        prop_assert_eq!(&again, &rep);
        prop_assert_eq!(normalize(&to_expansion(again.numeral())), again);
    }

    #[test]
    fn normalize_preserves_value(
        (system, coeffs) in small_system().prop_flat_map(|p| {
            let ranges: Vec<_> = (1..=p.len())
                .map(|q| {
                    let k = p.k(q) as i128;
                    -3 * k..=3 * k
                })
                .collect();
            (Just(p), ranges)
        }),
        constant in -8i128..=8,
    ) {
        let e = Expansion::new(&system, &coeffs, constant).unwrap();
        let rep = normalize(&e);
        prop_assert_eq!(rep.value(), e.reduced_value());
        prop_assert_eq!(rep.start_level(), system.len());
    }
}
