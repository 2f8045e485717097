use locopt::enumerate::{
    count_dominating_sets, count_independent_sets, count_nae_sat, count_vertex_covers, maximal_independent_sets,
    minimal_edge_separators, oracle, separators, SeparatorKind,
};
use locopt::graph::SimpleGraph;
use locopt::reductions::reduce_is_to_nae;
use locopt::setfamily::{self, FamilyMode, SetFamily, Subset};
use locopt::verify::{check_sandwich, recover_count};
use locopt::BigCount;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
            let edges: Vec<_> = all.zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e).collect();
            SimpleGraph::new(n, edges).unwrap()
        })
    })
}

fn family() -> impl Strategy<Value = SetFamily> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::btree_set(1..=n, 0..=n), 0..6)
            .prop_map(move |sets| SetFamily::new(n, sets, FamilyMode::Indexed).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn separators_match_oracle(g in graph(7)) {
        for kind in SeparatorKind::ALL {
            let st = kind.needs_terminals().then_some((1, g.vertex_count())).filter(|&(s, t)| s != t);
            if kind.needs_terminals() && st.is_none() {
                continue;
            }
            prop_assert_eq!(separators(&g, kind, st).unwrap(), oracle::separators(&g, kind, st).unwrap());
        }
    }

    #[test]
    fn edge_separators_match_oracle(g in graph(7)) {
        let m = g.to_multigraph();
        prop_assert_eq!(minimal_edge_separators(&m, None).unwrap(), oracle::minimal_edge_separators(&m, None).unwrap());
    }

    #[test]
    fn counts_match_oracle(g in graph(8)) {
        prop_assert_eq!(count_independent_sets(&g), oracle::count_independent_sets(&g).unwrap());
        prop_assert_eq!(count_vertex_covers(&g), oracle::count_vertex_covers(&g).unwrap());
        prop_assert_eq!(count_dominating_sets(&g).unwrap(), oracle::count_dominating_sets(&g).unwrap());
        prop_assert_eq!(maximal_independent_sets(&g), oracle::maximal_independent_sets(&g).unwrap());
    }

    #[test]
    fn nae_counts_match_oracle(g in graph(8)) {
        let (phi, _) = reduce_is_to_nae(&g).unwrap();
        prop_assert_eq!(count_nae_sat(&phi), oracle::count_nae_sat(&phi).unwrap());
    }

    #[test]
    fn union_closure_is_closed(f in family()) {
        let closure = setfamily::union_closure(&f).unwrap();
        prop_assert_eq!(&closure, &setfamily::oracle::union_closure(&f).unwrap());
        prop_assert!(closure.contains(&Subset::new()));
        for m in f.members() {
            prop_assert!(closure.contains(m));
        }
        for a in &closure {
            for b in &closure {
                let u: Subset = a.union(b).copied().collect();
                prop_assert!(closure.binary_search(&u).is_ok());
            }
        }
    }

    #[test]
    fn union_representations_match_oracle(f in family(), bits in any::<u8>()) {
        let target: Subset = (1..=f.n()).filter(|i| bits >> (i - 1) & 1 == 1).collect();
        prop_assert_eq!(
            setfamily::count_union_representations(&f, &target).unwrap(),
            setfamily::oracle::count_union_representations(&f, &target).unwrap()
        );
    }

    #[test]
    fn recovery_inverts_the_sandwich(a in 0u64..1_000_000, exp in 2u64..40, frac in 0u64..=1000) {
        let c = BigCount::pow2(exp);
        let slack = BigCount::pow2(exp - 2).as_biguint() * frac / 1000u32;
        let b = BigCount::from(a) * c.clone() + BigCount::from(slack);
        prop_assert!(check_sandwich(&BigCount::from(a), &b, &c));
        prop_assert_eq!(recover_count(&b, &c), BigCount::from(a));
    }
}
