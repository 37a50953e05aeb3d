//! Property tests over randomly generated matroids: rank axioms on every
//! construction route, closure laws, minor rank formulas, and balancing of
//! computed weights.

use proptest::prelude::*;

use matroid_csm::{
    is_balanced, one_top, validate_rank_axioms, ChowContext, Matroid, MatroidSpec, Subset,
};

/// Random realizable matroids from small integer matrices, plus uniform and
/// graphic ones.
fn arb_matroid() -> impl Strategy<Value = Matroid> {
    let matrix = (1usize..=3, 2usize..=5).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, cols), rows).prop_map(
            |rows| {
                let rows = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(|x| x.to_string()).collect())
                    .collect();
                Matroid::build(&MatroidSpec::Matrix { rows }, None).expect("matrix matroid")
            },
        )
    });
    let uniform = (0usize..=4, 1usize..=5)
        .prop_map(|(r, n)| Matroid::uniform(r.min(n), n, None).expect("uniform matroid"));
    let graphic = (2usize..=4).prop_flat_map(|v| {
        proptest::collection::vec((0..v, 0..v), 1..=5)
            .prop_map(move |edges| Matroid::graphic(v, &edges, None).expect("graphic matroid"))
    });
    prop_oneof![matrix, uniform, graphic]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn built_matroids_satisfy_the_axioms(m in arb_matroid()) {
        prop_assert!(validate_rank_axioms(m.n(), m.rank_table()).is_ok());
    }

    #[test]
    fn closure_is_extensive_idempotent_and_rank_preserving(m in arb_matroid()) {
        for s in Subset::all(m.n()) {
            let c = m.closure(s);
            prop_assert!(s.is_subset_of(c));
            prop_assert_eq!(m.rank(c), m.rank(s));
            prop_assert_eq!(m.closure(c), c);
        }
    }

    #[test]
    fn flats_gain_rank_with_any_new_element(m in arb_matroid()) {
        let lattice = m.flats_lattice();
        for (f, r) in lattice.all() {
            if r < m.full_rank() {
                for i in 0..m.n() {
                    if !f.contains(i) {
                        prop_assert_eq!(m.rank(f.insert(i)), r + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn minor_rank_formulas_hold(m in arb_matroid()) {
        prop_assume!(m.n() >= 2);
        for i in 0..m.n() {
            let (del, dmap) = m.delete(i).unwrap();
            let (con, cmap) = m.contract(i).unwrap();
            let ri = m.rank(Subset::singleton(i));
            for s in Subset::all(m.n() - 1) {
                prop_assert_eq!(del.rank(s), m.rank(dmap.to_parent(s)));
                prop_assert_eq!(con.rank(s), m.rank(cmap.to_parent(s).insert(i)) - ri);
            }
        }
    }

    #[test]
    fn bases_rebuild_the_same_matroid(m in arb_matroid()) {
        prop_assume!(m.full_rank() >= 1);
        let rebuilt = Matroid::from_bases(m.n(), &m.bases(), None).unwrap();
        prop_assert_eq!(rebuilt.rank_table(), m.rank_table());
    }

    #[test]
    fn fundamental_weights_balance(m in arb_matroid()) {
        prop_assume!(!m.has_loops() && m.full_rank() >= 1);
        let w = one_top(&m).unwrap();
        prop_assert!(is_balanced(&m.flats_lattice(), &w));
    }

    #[test]
    fn normal_forms_kill_linear_relations(m in arb_matroid()) {
        prop_assume!(!m.has_loops() && m.full_rank() >= 1 && m.n() >= 2);
        let ctx = ChowContext::new(&m).unwrap();
        // Graded ranks are palindromic and the ends are one-dimensional.
        let ranks = ctx.graded_ranks();
        prop_assert_eq!(ranks[0], 1);
        prop_assert_eq!(ranks[ctx.top_degree()], 1);
        let mut rev = ranks.clone();
        rev.reverse();
        prop_assert_eq!(ranks, rev);
    }
}
