use compart::graph::{cartesian_product, complement, line_graph};
use compart::io::{read_certificate, read_graph, write_certificate, write_graph};
use compart::solver::{decide_partition, exact_c, exact_p};
use compart::{
    find_transitive_orientation, is_comparability, make_graph, verify_partition, verify_transitive_orientation, Budget,
    Decision, Exact, Graph, Mode,
};
use proptest::prelude::*;

fn graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let k = pairs.len();
        proptest::sample::subsequence(pairs, 0..=k.min(max_m)).prop_map(move |es| make_graph(n, &es).unwrap())
    })
}

/// Tries all 2^m orientations.
fn brute_comparability(g: &Graph) -> bool {
    let m = g.m();
    let n = g.n();
    (0u32..1 << m).any(|mask| {
        let mut arc = vec![vec![false; n]; n];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> e & 1 == 0 {
                arc[u][v] = true;
            } else {
                arc[v][u] = true;
            }
        }
        (0..n).all(|a| (0..n).all(|b| !arc[a][b] || (0..n).all(|c| !arc[b][c] || arc[a][c])))
    })
}

fn value(x: Exact) -> usize {
    match x {
        Exact::Solved { value, .. } => value,
        other => panic!("unresolved {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(g in graph(9, 36)) {
        let c = complement(&g);
        prop_assert_eq!(c.m() + g.m(), g.n() * (g.n() - 1) / 2);
        let cc = complement(&c);
        prop_assert_eq!(cc.edges(), g.edges());
    }

    #[test]
    fn line_graph_size(g in graph(8, 20)) {
        let (l, _) = line_graph(&g, None).unwrap();
        let expected: usize = (0..g.n()).map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2).sum();
        prop_assert_eq!(l.n(), g.m());
        prop_assert_eq!(l.m(), expected);
    }

    #[test]
    fn product_size(g in graph(5, 10), h in graph(5, 10)) {
        let p = cartesian_product(&g, &h);
        prop_assert_eq!(p.n(), g.n() * h.n());
        prop_assert_eq!(p.m(), g.n() * h.m() + h.n() * g.m());
    }

    #[test]
    fn recognition_matches_brute_force(g in graph(7, 12)) {
        let all: Vec<usize> = (0..g.m()).collect();
        let found = find_transitive_orientation(&g, &all);
        prop_assert_eq!(found.is_some(), brute_comparability(&g));
        prop_assert_eq!(is_comparability(&g), found.is_some());
        if let Some(o) = found {
            prop_assert!(verify_transitive_orientation(&g, &all, &o).is_ok());
        }
    }

    #[test]
    fn graph_and_certificate_round_trip(g in graph(8, 16)) {
        let back = read_graph(&write_graph(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        if let Exact::Solved { partition, .. } = exact_p(&g, &mut Budget::unlimited()) {
            let text = write_certificate(&partition).unwrap();
            let ep = read_certificate(&text).unwrap();
            prop_assert_eq!(ep.parts(), partition.parts());
            prop_assert!(verify_partition(&back, &ep).unwrap().is_valid());
            prop_assert_eq!(write_certificate(&ep).unwrap(), text);
        }
    }

    #[test]
    fn cover_never_needs_more_than_partition(g in graph(7, 14)) {
        let p = value(exact_p(&g, &mut Budget::unlimited()));
        let c = value(exact_c(&g, &mut Budget::unlimited()));
        prop_assert!(c <= p);
    }

    #[test]
    fn partition_is_a_cover_and_monotone(g in graph(7, 12), t in 1usize..4) {
        let sat = |t, mode| matches!(decide_partition(&g, t, mode, &mut Budget::unlimited()).unwrap(), Decision::Sat(_));
        let part = sat(t, Mode::Partition);
        if part {
            prop_assert!(sat(t, Mode::Cover));
            prop_assert!(sat(t + 1, Mode::Partition));
        }
        if let Decision::Sat(ep) = decide_partition(&g, t, Mode::Partition, &mut Budget::unlimited()).unwrap() {
            prop_assert!(ep.len() <= t);
            prop_assert!(verify_partition(&g, &ep).unwrap().is_valid());
        }
    }
}
