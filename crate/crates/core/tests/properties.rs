//! Property tests over random small connected graphs.

use proptest::prelude::*;

use manyrobbers::io::{from_graph6, to_graph6};
use manyrobbers::pursuit::{capture_time, GameTable};
use manyrobbers::scripts::{arena, OptimalRobbers, RandomRobbers, WalkScript};
use manyrobbers::zero_visibility::{clearing_step, extract_schedule, limit_probe, zero_vis_capture_time};
use manyrobbers::{GameValue, Graph};

/// A random spanning tree (vertex `i` hangs off some earlier vertex) plus
/// random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        let extra = proptest::collection::vec((0..n, 0..n), 0..=n * 2);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.into_iter().enumerate().map(|(i, p)| (i + 1, p)).collect();
            edges.extend(extra.into_iter().filter(|(a, b)| a != b));
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn monotone_in_robbers_and_cops(g in connected_graph(6)) {
        let one = GameTable::solve(&g, 1, 3).unwrap();
        let two = GameTable::solve(&g, 2, 3).unwrap();
        for m in 1..3 {
            prop_assert!(one.capture_time_for(m).unwrap() <= one.capture_time_for(m + 1).unwrap());
            prop_assert!(two.capture_time_for(m).unwrap() <= two.capture_time_for(m + 1).unwrap());
        }
        for m in 1..=3 {
            prop_assert!(two.capture_time_for(m).unwrap() <= one.capture_time_for(m).unwrap());
        }
    }

    #[test]
    fn winning_does_not_depend_on_robber_count(g in connected_graph(6)) {
        for k in 1..=2 {
            let table = GameTable::solve(&g, k, 3).unwrap();
            let finite: Vec<bool> = (1..=3).map(|m| table.capture_time_for(m).unwrap().is_finite()).collect();
            prop_assert!(finite.iter().all(|&f| f == finite[0]), "{:?}", finite);
        }
        prop_assert_eq!(capture_time(&g, 1, 1).unwrap().is_finite(), g.is_dismantlable());
    }

    #[test]
    fn retracts_are_no_slower(g in connected_graph(6)) {
        for u in g.traps() {
            let (h, f) = g.one_point_retract(u).unwrap();
            prop_assert!(f.is_retraction(&g, &h));
            for k in 1..=2 {
                for m in 1..=2 {
                    prop_assert!(capture_time(&h, k, m).unwrap() <= capture_time(&g, k, m).unwrap());
                }
            }
        }
    }

    #[test]
    fn zero_visibility_time_bounds_the_sequence(g in connected_graph(6), k in 1usize..=2) {
        let zv = zero_vis_capture_time(&g, k).unwrap();
        let table = GameTable::solve(&g, k, 3).unwrap();
        for m in 1..=3 {
            prop_assert!(table.capture_time_for(m).unwrap() <= zv);
        }
        let report = limit_probe(&g, k, 3).unwrap();
        prop_assert!(report.sequence.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn schedules_replay_within_their_length(g in connected_graph(6), k in 1usize..=2) {
        if let Ok(schedule) = extract_schedule(&g, k) {
            let len = schedule.rounds();
            let walk = WalkScript::new("schedule", &g, schedule.0.clone(), len);
            let table = GameTable::solve(&g, k, 3).unwrap();
            for m in 1..=3 {
                let t = arena(&g, &mut walk.clone(), &mut OptimalRobbers::new(&table), m, len + 1).unwrap();
                prop_assert!(t.capture_round().is_some_and(|r| r <= len));
            }
        }
    }

    #[test]
    fn contamination_never_sits_on_a_cop(g in connected_graph(7), cops in any::<u64>(), x in any::<u64>()) {
        let all = (1u64 << g.n()) - 1;
        let (cops, x) = (cops & all, x & all);
        let y = clearing_step(&g, x, cops);
        prop_assert_eq!(y & cops, 0);
        // growing the contaminated set never shrinks the result
        prop_assert_eq!(clearing_step(&g, x | all, cops) & y, y);
    }

    #[test]
    fn scripted_moves_are_legal_against_random_robbers(g in connected_graph(6), seed in any::<u64>()) {
        let table = GameTable::solve(&g, 2, 2).unwrap();
        if table.capture_time().is_finite() {
            let policy = manyrobbers::pursuit::CopPolicy::new(table);
            let mut cop = manyrobbers::scripts::OptimalCop::new(&policy);
            let t = arena(&g, &mut cop, &mut RandomRobbers::new(seed), 2, 40).unwrap();
            prop_assert!(GameValue::Finite(t.length() as u32) <= policy.value());
        }
    }

    #[test]
    fn graph6_round_trip(g in connected_graph(12)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn distances_are_symmetric(g in connected_graph(9)) {
        for u in g.vertices() {
            for v in g.vertices() {
                let d = g.distance(u, v);
                prop_assert_eq!(d, g.distance(v, u));
                prop_assert!(d <= g.eccentricity(u) && g.eccentricity(u) <= g.diameter());
            }
        }
    }
}
