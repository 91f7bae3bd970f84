mod common;

use common::{
    arb_multigraph, choice_number, chromatic_number, dp_chromatic_brute, dp_colorable_brute,
    for_each_assignment, is_choosable,
};
use dpcolor::census::simple_graphs;
use dpcolor::cover::{enumerate_covers, EnumerationOptions, Transversal};
use dpcolor::multigraph::{make_family, Family, Multigraph};
use dpcolor::solver::{
    chi_dp, find_transversal, is_dp_h_colorable, is_h_minimal, ChiDp, CriticalityStatus,
    DecisionOptions, Deletion, Status,
};
use proptest::prelude::*;

#[test]
fn oracles_agree_with_known_values() {
    let k3 = make_family(&Family::CliqueMultiple { t: 3, q: 1 }).unwrap();
    let c4 = make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap();
    let k24 = Multigraph::simple(
        6,
        &[
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
        ],
    )
    .unwrap();
    assert_eq!(chromatic_number(&k3), 3);
    assert_eq!(chromatic_number(&c4), 2);
    assert_eq!(choice_number(&c4), 2);
    assert!(!is_choosable(&k24, 2));
    assert_eq!(dp_chromatic_brute(&c4), 3);
    assert!(!dp_colorable_brute(&c4, &[2; 4]));
    assert!(dp_colorable_brute(&k3, &[3; 3]));
}

#[test]
fn dp_chromatic_number_dominates_list_and_ordinary() {
    let opts = DecisionOptions::default();
    for n in 1..=4 {
        for g in simple_graphs(n) {
            let chi = chromatic_number(&g);
            let ch = choice_number(&g);
            let dp = match chi_dp(&g, 6, &opts).unwrap() {
                ChiDp::Exact(k) => k,
                other => panic!("{g:?}: {other:?}"),
            };
            assert!(
                dp >= ch && ch >= chi,
                "{g:?}: dp {dp}, list {ch}, ordinary {chi}"
            );
            if dp <= 3 {
                assert_eq!(dp, dp_chromatic_brute(&g), "{g:?}");
            }
        }
    }
}

fn arb_small_instance() -> impl Strategy<Value = (Multigraph, Vec<usize>)> {
    arb_multigraph(4, 2)
        .prop_filter("few edges", |g| g.edge_count() <= 5)
        .prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), proptest::collection::vec(1usize..=3, n))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decisions_match_brute_force((g, h) in arb_small_instance()) {
        let v = is_dp_h_colorable(&g, &h, &DecisionOptions::default()).unwrap();
        prop_assert_eq!(v.colorable(), Some(dp_colorable_brute(&g, &h)));
        if let Some(bad) = &v.bad_cover {
            prop_assert!(bad.is_h_cover(&h));
            prop_assert_eq!(bad.base(), &g);
            prop_assert_eq!(find_transversal(bad, 10_000_000).unwrap().status, Status::NotColorable);
        }
    }

    #[test]
    fn witnesses_are_valid_and_lex_least((g, h) in arb_small_instance()) {
        for cover in enumerate_covers(&g, &h, EnumerationOptions::default()).unwrap().into_iter().take(40) {
            let v = find_transversal(&cover, 10_000_000).unwrap();
            let mut first = None;
            for_each_assignment(cover.list_sizes(), |a| {
                if cover.is_transversal(&Transversal(a.to_vec())) {
                    first = Some(a.to_vec());
                    true
                } else {
                    false
                }
            });
            prop_assert_eq!(v.witness.as_ref().map(|t| t.0.clone()), first);
            if let Some(w) = &v.witness {
                prop_assert!(cover.is_transversal(w));
            }
        }
    }

    #[test]
    fn verdicts_do_not_depend_on_threads((g, h) in arb_small_instance()) {
        let one = is_dp_h_colorable(&g, &h, &DecisionOptions::default()).unwrap();
        let four = is_dp_h_colorable(&g, &h, &DecisionOptions { jobs: 4, ..DecisionOptions::default() }).unwrap();
        prop_assert_eq!(one, four);
    }

    #[test]
    fn h_minimality_matches_its_definition((g, h) in arb_small_instance()) {
        let r = is_h_minimal(&g, &h, &DecisionOptions::default()).unwrap();
        let colorable = dp_colorable_brute(&g, &h);
        let edge_deletions_ok = g
            .pairs()
            .all(|(u, v, _)| dp_colorable_brute(&g.with_edge_copy_removed(u, v).unwrap(), &h));
        let vertex_deletions_ok = g.vertex_count() < 2
            || g.isolated_vertices().iter().all(|&w| {
                let (rest, kept) = g.remove_vertices(&[w]);
                let hr: Vec<usize> = kept.iter().map(|&v| h[v]).collect();
                dp_colorable_brute(&rest, &hr)
            });
        let expected = if colorable {
            CriticalityStatus::Colorable
        } else if edge_deletions_ok && vertex_deletions_ok {
            CriticalityStatus::HMinimal
        } else {
            CriticalityStatus::HasNonColorableProperSubgraph
        };
        prop_assert_eq!(r.status, expected);
        if let Some(p) = &r.offending {
            let expected_graph = match p.deletion {
                Deletion::EdgeCopy(u, v) => g.with_edge_copy_removed(u, v).unwrap(),
                Deletion::Vertex(w) => g.remove_vertices(&[w]).0,
            };
            prop_assert_eq!(&p.graph, &expected_graph);
            prop_assert_eq!(find_transversal(&p.bad_cover, 10_000_000).unwrap().status, Status::NotColorable);
        }
    }
}

#[test]
fn budgets_produce_undecided_verdicts() {
    let k5_minus = make_family(&Family::CliqueMultiple { t: 5, q: 1 })
        .unwrap()
        .with_edge_copy_removed(0, 1)
        .unwrap();
    let tight = DecisionOptions {
        max_covers: 1000,
        ..DecisionOptions::default()
    };
    let v = is_dp_h_colorable(&k5_minus, &k5_minus.degrees(), &tight).unwrap();
    assert_eq!(v.status, Status::Undecided);
    assert!(v.reason.is_some());
}
