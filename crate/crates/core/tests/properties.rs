use std::collections::BTreeMap;

use proptest::prelude::*;

use iclneg::formula::expand_negations;
use iclneg::{
    equivalent, normalize, normalize_semantic, parse_formula, parse_nword, Formula, NWord,
    NegKind, RModel, RawModel,
};

/// Random finite partial order with random monotone valuation over two
/// variables. World 0 is the root unless the model is pseudo.
fn arb_model() -> impl Strategy<Value = RModel> {
    (1usize..=5)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n * n),
                proptest::collection::vec(0u8..4, n),
                any::<bool>(),
            )
        })
        .prop_map(|(n, edges, vals, pseudo)| {
            let name = |u: usize| format!("w{u}");
            let mut order = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    // Edges only go up in index order, so the result is acyclic.
                    if (a == 0 && !pseudo) || edges[a * n + b] {
                        order.push((name(a), name(b)));
                    }
                }
            }
            let mut valuation: BTreeMap<String, Vec<String>> = BTreeMap::new();
            for (u, &bits) in vals.iter().enumerate() {
                for (var, bit) in [("p1", 1u8), ("p2", 2u8)] {
                    if bits & bit != 0 {
                        valuation.entry(name(u)).or_default().push(var.to_string());
                    }
                }
            }
            let raw = RawModel {
                worlds: (0..n).map(name).collect(),
                root: (!pseudo).then(|| name(0)),
                order,
                valuation,
                pseudo,
                close: true,
            };
            upward_close(raw)
        })
}

/// Makes the valuation monotone by pushing every atom up the order.
fn upward_close(mut raw: RawModel) -> RModel {
    loop {
        match raw.validate() {
            Ok(m) => return m,
            Err(_) => {
                let m = RawModel { valuation: BTreeMap::new(), ..raw.clone() }
                    .validate()
                    .expect("order alone is well-formed");
                let mut valuation: BTreeMap<String, Vec<String>> = BTreeMap::new();
                for (u, id) in m.worlds().iter().enumerate() {
                    for (v, other) in m.worlds().iter().enumerate() {
                        if m.leq(v, u) {
                            for atom in raw.valuation.get(other).into_iter().flatten() {
                                let list = valuation.entry(id.clone()).or_default();
                                if !list.contains(atom) {
                                    list.push(atom.clone());
                                }
                            }
                        }
                    }
                }
                raw.valuation = valuation;
            }
        }
    }
}

fn arb_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::Zero),
        Just(Formula::One),
        Just(Formula::Bot),
        (1u32..=2).prop_map(Formula::Var),
    ];
    leaf.prop_recursive(6, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::int_neg),
            inner.clone().prop_map(Formula::perp_neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

fn arb_word(max: usize) -> impl Strategy<Value = NWord> {
    proptest::collection::vec(prop_oneof![Just(NegKind::Int), Just(NegKind::Perp)], 0..=max)
        .prop_map(NWord::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn forcing_is_monotone(m in arb_model(), f in arb_formula()) {
        let ext = m.extension(&f);
        for u in ext.iter() {
            prop_assert!(m.up_set(u).is_subset(ext));
        }
    }

    #[test]
    fn negations_agree_with_their_definitions(m in arb_model(), f in arb_formula()) {
        prop_assert_eq!(m.extension(&f), m.extension(&expand_negations(&f)));
    }

    #[test]
    fn forcing_is_local(m in arb_model(), f in arb_formula()) {
        let ext = m.extension(&f);
        for (u, id) in m.worlds().iter().enumerate() {
            let sub = m.generated_submodel(id).unwrap();
            prop_assert_eq!(sub.forces(id, &f).unwrap(), ext.contains(u));
        }
    }

    #[test]
    fn perp_negation_facts(m in arb_model(), a in arb_formula()) {
        let fa = m.extension(&a);
        let neg = m.extension(&Formula::perp_neg(a));
        for u in 0..m.len() {
            let refutes = !neg.contains(u);
            prop_assert_eq!(refutes, !m.is_imaginary(u) && fa.contains(u));
        }
    }

    #[test]
    fn printing_round_trips(f in arb_formula()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(parse_formula(&f.pretty()).unwrap(), f);
    }

    #[test]
    fn model_json_round_trips(m in arb_model()) {
        let back = RawModel::from_json(&m.to_json()).unwrap().validate().unwrap();
        prop_assert!(back.is_isomorphic(&m));
        prop_assert_eq!(back, m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn normalizers_agree_on_long_words(w in arb_word(24)) {
        let nf = normalize(&w);
        prop_assert_eq!(&nf, &normalize_semantic(&w).unwrap());
        prop_assert!(nf.len() <= 5);
        prop_assert_eq!(nf.parity(), w.parity());
        prop_assert!(equivalent(&nf, &w));
        prop_assert_eq!(normalize(&nf), nf);
    }

    #[test]
    fn words_round_trip(w in arb_word(16)) {
        prop_assert_eq!(parse_nword(&w.to_string()).unwrap(), w.clone());
        prop_assert_eq!(parse_nword(&w.pretty()).unwrap(), w);
    }

    #[test]
    fn prefixing_preserves_equivalence(x in arb_word(6), c in arb_word(4)) {
        let nf = normalize(&x);
        prop_assert!(equivalent(&x.with_prefix(&c), &nf.with_prefix(&c)));
    }
}
