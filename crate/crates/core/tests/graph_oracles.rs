mod common;

use std::collections::BTreeSet;

use bicay::graph::parse_graph;
use bicay::symmetry::{self, canonical_form, Classification};
use bicay::{Graph, GraphFormat, Permutation};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> =
            (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges: Vec<(u32, u32)> = pairs.iter().zip(&mask).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn relabelled(graph: &Graph, seed: &[u32]) -> Graph {
    // A permutation from a sequence of swap choices.
    let n = graph.vertex_count();
    let mut images: Vec<u32> = (0..n as u32).collect();
    for (k, &s) in seed.iter().enumerate().take(n) {
        images.swap(k, k + s as usize % (n - k));
    }
    graph.relabel(&Permutation::from_images(images).unwrap()).unwrap()
}

/// All permutations of `0..n`, for tiny `n`.
fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, (n - 1) as u32);
            out.push(q);
        }
    }
    out
}

fn edge_set(g: &Graph) -> BTreeSet<(u32, u32)> {
    g.edges().into_iter().collect()
}

fn maps_onto(g: &Graph, h: &Graph, p: &[u32]) -> bool {
    let target = edge_set(h);
    g.edges().iter().all(|&(u, v)| {
        let (a, b) = (p[u as usize], p[v as usize]);
        target.contains(&(a.min(b), a.max(b)))
    })
}

fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && permutations(g.vertex_count()).iter().any(|p| maps_onto(g, h, p))
}

fn brute_aut_count(g: &Graph) -> u128 {
    permutations(g.vertex_count()).iter().filter(|p| maps_onto(g, g, p)).count() as u128
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph_strategy(70)) {
        let text = g.to_graph6();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(Graph::from_graph6(&text).unwrap(), g.clone());
        let (parsed, format) = parse_graph(&format!("{text}\n")).unwrap();
        prop_assert_eq!(format, GraphFormat::Graph6);
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(20)) {
        let text = g.to_edge_list();
        let edges: Vec<(u32, u32)> = text
            .lines()
            .map(|l| {
                let mut it = l.split(' ').map(|x| x.parse::<u32>().unwrap());
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect();
        prop_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(edges.iter().all(|&(u, v)| u < v));
        let back = Graph::from_edge_list(&text, Some(g.vertex_count())).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn aut_order_matches_brute_force(g in graph_strategy(7)) {
        let search = symmetry::automorphism_search(&g).unwrap();
        prop_assert!(search.generators.iter().all(|p| g.is_automorphism(p)));
        prop_assert_eq!(search.order, Some(brute_aut_count(&g)));
    }

    #[test]
    fn canonical_form_is_a_complete_invariant(g in graph_strategy(7), h in graph_strategy(7)) {
        let same = canonical_form(&g).unwrap() == canonical_form(&h).unwrap();
        prop_assert_eq!(same, brute_isomorphic(&g, &h));
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph_strategy(40), seed in proptest::collection::vec(any::<u32>(), 40)) {
        let h = relabelled(&g, &seed);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let canon = symmetry::canonical_graph(&g).unwrap();
        let labelling = symmetry::canonical_labelling(&g).unwrap();
        prop_assert_eq!(g.relabel(&labelling).unwrap(), canon);
    }
}

#[test]
fn named_graphs_against_backtracking_oracle() {
    let cases = [
        ("petersen", common::petersen(), 120u128, Classification::ArcTransitive),
        ("heawood", common::heawood(), 336, Classification::ArcTransitive),
        ("pappus", common::pappus(), 216, Classification::ArcTransitive),
        ("gray", common::gray(), 1296, Classification::Semisymmetric),
    ];
    for (name, g, order, class) in cases {
        let brute = common::brute_automorphisms(&g);
        assert_eq!(brute.len() as u128, order, "{name}");
        let report = symmetry::classify(&g).unwrap();
        assert_eq!(report.aut_order, order, "{name}");
        assert_eq!(report.classification, class, "{name}");
        let gens: Vec<Vec<u32>> =
            symmetry::automorphism_search(&g).unwrap().generators.iter().map(|p| p.images().to_vec()).collect();
        assert_eq!(common::closure_order(g.vertex_count(), &gens) as u128, order, "{name}");
        assert_eq!(report.arc_orbits, common::arc_orbit_count(&g, &gens), "{name}");
    }
}

#[test]
fn permutation_group_orders_match_closure() {
    let g = common::gray();
    let aut = symmetry::aut_group(&g).unwrap();
    assert_eq!(aut.order(), 1296);
    let stab = aut.stabilizer(0);
    let gens: Vec<Vec<u32>> = stab.generators().iter().map(|p| p.images().to_vec()).collect();
    assert!(stab.generators().iter().all(|p| p.apply(0) == 0));
    assert_eq!(common::closure_order(54, &gens), 48);
    assert_eq!(stab.order(), 48);
    assert!(aut.is_normal(&aut).unwrap());
}

#[test]
fn classification_edge_cases() {
    let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let report = symmetry::classify(&path).unwrap();
    assert_eq!((report.vertex_orbits, report.edge_orbits), (2, 1));
    assert_eq!(report.classification, Classification::None);
    let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
    assert!(symmetry::check_stabilizer_law(&k33).unwrap());
    let hexagon = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
    assert!(symmetry::check_stabilizer_law(&hexagon).is_err());
}
