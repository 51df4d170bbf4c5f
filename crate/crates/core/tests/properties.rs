use std::collections::BTreeSet;

use bpsplit_core::biclique::{
    audit_part_in_s, audit_star_in_s, star_partition_balanced, star_partition_unbalanced,
    star_partition_with_order,
};
use bpsplit_core::cliques::{clique_number, count_maximal_cliques, independence_number};
use bpsplit_core::cube::{
    addressing_to_partition, distance, graham_pollak_addressing, is_one_neighborly,
    partition_to_addressing, subcube_cover, volume,
};
use bpsplit_core::io::{parse_graph, write_graph};
use bpsplit_core::solver::greedy_star_partition;
use bpsplit_core::split::{brute_force_split, mc_complement_closed_form, normalize_s_max};
use bpsplit_core::*;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn arb_split(max_k: usize, max_s: usize) -> impl Strategy<Value = Generated> {
    (0..=max_k, 0..=max_s, 0u32..=10, any::<u64>())
        .prop_filter("non-empty", |(k, s, _, _)| k + s > 0)
        .prop_map(|(k, s, p, seed)| {
            let edge_prob = f64::from(p) / 10.0;
            generate(&GenSpec {
                kind: GenKind::Split { k, s, edge_prob },
                seed,
            })
            .unwrap()
        })
}

/// A random biclique partition together with the graph it partitions: the
/// graph is the union of the bicliques.
fn arb_partitioned_graph() -> impl Strategy<Value = (Graph, BicliquePartition)> {
    (
        2usize..=8,
        proptest::collection::vec((any::<u64>(), any::<u64>()), 0..8),
    )
        .prop_map(|(n, draws)| {
            let mut used = BTreeSet::new();
            let mut bicliques = Vec::new();
            for (ma, mb) in draws {
                let a: Vec<usize> = (1..=n).filter(|v| ma >> v & 1 == 1).collect();
                let b: Vec<usize> = (1..=n)
                    .filter(|v| mb >> v & 1 == 1 && !a.contains(v))
                    .collect();
                if a.is_empty() || b.is_empty() {
                    continue;
                }
                let edges: Vec<(usize, usize)> = a
                    .iter()
                    .flat_map(|&x| b.iter().map(move |&y| (x.min(y), x.max(y))))
                    .collect();
                if edges.iter().any(|e| used.contains(e)) {
                    continue;
                }
                used.extend(edges);
                bicliques.push(Biclique::new(a, b));
            }
            let g = Graph::from_edges(n, used).unwrap();
            (g, BicliquePartition::new(bicliques))
        })
}

fn is_valid(g: &Graph, p: &BicliquePartition) -> bool {
    verify_partition(g, p).unwrap().is_ok()
}

fn exact(g: &Graph) -> SolverResult {
    bp_exact(g, &SolverConfig::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn complement_counts_and_involution(g in arb_graph(12)) {
        let c = g.complement();
        let n = g.n();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
        prop_assert_eq!(c.edges().count(), c.edge_count());
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn induced_keeps_inner_edges(g in arb_graph(10), mask in any::<u16>()) {
        let s: Vec<usize> = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
        let sub = g.induced(&s).unwrap();
        let inner = g.edges().filter(|(u, v)| s.contains(u) && s.contains(v)).count();
        prop_assert_eq!(sub.graph.edge_count(), inner);
        for (u, v) in sub.graph.edges() {
            prop_assert!(g.has_edge(sub.labels[u - 1], sub.labels[v - 1]));
        }
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn recognition_agrees_with_brute_force(g in arb_graph(10)) {
        prop_assert_eq!(recognize_split(&g).is_some(), brute_force_split(&g).is_some());
    }

    #[test]
    fn recognized_partition_is_s_max_and_exact(g in prop_oneof![
        arb_graph(10),
        arb_split(6, 5).prop_map(|x| x.graph),
    ]) {
        if let Some(p) = recognize_split(&g) {
            prop_assert!(g.is_clique(p.clique_side()));
            prop_assert!(g.is_independent(p.independent_side()));
            prop_assert_eq!(p.clique_side().len() + p.independent_side().len(), g.n());
            prop_assert_eq!(p.omega(), clique_number(&g).unwrap());
            prop_assert_eq!(p.alpha(), independence_number(&g).unwrap());
            prop_assert_eq!(p.independent_side().len(), p.alpha());
            prop_assert_ne!(p.class(), SplitClass::UnbalancedKMax);
        }
    }

    #[test]
    fn classification_is_exclusive_with_witnesses(x in arb_split(6, 5)) {
        let g = &x.graph;
        let p = x.intended.unwrap();
        let (k, s) = (p.clique_side().len(), p.independent_side().len());
        prop_assert_eq!(p.omega(), clique_number(g).unwrap());
        prop_assert_eq!(p.alpha(), independence_number(g).unwrap());
        let cases = [
            k == p.omega() && s == p.alpha(),
            k + 1 == p.omega() && s == p.alpha(),
            k == p.omega() && s + 1 == p.alpha(),
        ];
        prop_assert_eq!(cases.iter().filter(|&&c| c).count(), 1);
        match p.class() {
            SplitClass::Balanced => prop_assert!(cases[0]),
            SplitClass::UnbalancedSMax => {
                prop_assert!(cases[1]);
                let mut ext = p.clique_side().to_vec();
                ext.push(p.s_witness().unwrap());
                prop_assert!(g.is_clique(&ext));
                prop_assert_eq!(ext.len(), p.omega());
            }
            SplitClass::UnbalancedKMax => {
                prop_assert!(cases[2]);
                let mut ext = p.independent_side().to_vec();
                ext.push(p.k_witness().unwrap());
                prop_assert!(g.is_independent(&ext));
                prop_assert_eq!(ext.len(), p.alpha());
                let q = normalize_s_max(g, &p).unwrap();
                prop_assert_eq!(q.class(), SplitClass::UnbalancedSMax);
                prop_assert_eq!(q.clique_side().len() + 1, q.omega());
            }
        }
    }

    #[test]
    fn closed_form_mc_matches_enumeration(x in arb_split(7, 6)) {
        let mc = count_maximal_cliques(&x.graph.complement()).unwrap();
        prop_assert_eq!(mc_complement_closed_form(x.intended.as_ref().unwrap()), mc);
        prop_assert_eq!(mc_complement_closed_form(&recognize_split(&x.graph).unwrap()), mc);
    }

    #[test]
    fn star_constructions_are_valid(x in arb_split(7, 6)) {
        let g = &x.graph;
        let p = recognize_split(g).unwrap();
        let stars = match p.class() {
            SplitClass::Balanced => {
                let s = star_partition_balanced(g, &p).unwrap();
                prop_assert_eq!(s.len(), p.omega());
                prop_assert!(audit_star_in_s(&s, p.independent_side()).is_empty());
                s
            }
            _ => {
                let s = star_partition_unbalanced(g, &p).unwrap();
                prop_assert_eq!(s.len(), p.omega().saturating_sub(1));
                s
            }
        };
        prop_assert!(is_valid(g, &stars));
        prop_assert_eq!(stars.edge_count(), g.edge_count());
        let r = bp_split(g).unwrap();
        prop_assert_eq!(r.witness.len(), r.value);
    }

    #[test]
    fn any_star_order_is_valid(x in arb_split(6, 5), rot in 0usize..6) {
        let g = &x.graph;
        let p = recognize_split(g).unwrap();
        let mut order = p.clique_side().to_vec();
        if !order.is_empty() {
            let r = rot % order.len();
            order.rotate_left(r);
        }
        let stars = star_partition_with_order(g, &order);
        prop_assert!(is_valid(g, &stars));
    }

    #[test]
    fn partition_addressing_round_trip((g, p) in arb_partitioned_graph()) {
        prop_assert!(is_valid(&g, &p));
        prop_assert_eq!(p.edge_count(), g.edge_count());
        let a = partition_to_addressing(&g, &p).unwrap();
        prop_assert_eq!(a.width(), p.len());
        for u in g.vertices() {
            for v in u + 1..=g.n() {
                let d = distance(a.get(u), a.get(v)).unwrap();
                prop_assert_eq!(d, usize::from(g.has_edge(u, v)));
            }
        }
        let back = addressing_to_partition(&a);
        prop_assert_eq!(back.edge_assignment(), p.edge_assignment());
        prop_assert_eq!(back, p);
    }

    #[test]
    fn s_vertices_read_ones_and_jokers(x in arb_split(6, 5)) {
        let g = &x.graph;
        let p = recognize_split(g).unwrap();
        let s = p.independent_side();
        for part in [bp_split(g).unwrap().witness, greedy_star_partition(g), exact(g).witness] {
            let oriented = part.oriented_for_independent_side(s);
            prop_assert!(is_valid(g, &oriented));
            let a = partition_to_addressing(g, &oriented).unwrap();
            for &v in s {
                prop_assert!(a.get(v).in_ones_and_jokers());
            }
        }
    }

    #[test]
    fn neighborly_families_have_disjoint_subcubes((g, p) in arb_partitioned_graph()) {
        // restrict to a clique of the partitioned graph
        let cliques = bpsplit_core::cliques::enumerate_maximal_cliques(&g).unwrap();
        let a = partition_to_addressing(&g, &p).unwrap();
        for c in cliques {
            let family = a.family(&c);
            prop_assert!(is_one_neighborly(&family).unwrap());
            let cover = subcube_cover(&family).unwrap();
            prop_assert!(cover.is_disjoint());
            prop_assert_eq!(u128::from(cover.covered), volume(&family).unwrap());
        }
    }

    #[test]
    fn solver_invariant_under_relabelling(g in arb_graph(7), perm_seed in any::<u64>()) {
        let mut perm: Vec<usize> = g.vertices().collect();
        let mut rng = SplitMix64::new(perm_seed);
        for i in (1..perm.len()).rev() {
            perm.swap(i, (rng.next_u64() % (i as u64 + 1)) as usize);
        }
        let h = g.relabel(&perm).unwrap();
        let (rg, rh) = (exact(&g), exact(&h));
        prop_assert_eq!(rg.optimum, rh.optimum);
        prop_assert!(is_valid(&g, &rg.witness));
        prop_assert!(is_valid(&h, &rh.witness));
    }

    #[test]
    fn solver_respects_clique_lower_bound(g in arb_graph(9)) {
        let r = exact(&g);
        prop_assert!(r.optimum + 1 >= clique_number(&g).unwrap());
        prop_assert!(r.optimum <= greedy_star_partition(&g).len());
        prop_assert!(is_valid(&g, &r.witness));
        prop_assert_eq!(r.witness.len(), r.optimum);
    }

    #[test]
    fn solver_on_split_graphs(x in arb_split(5, 4)) {
        let g = &x.graph;
        let p = recognize_split(g).unwrap();
        let r = exact(g);
        let closed = bp_split(g).unwrap().value;
        prop_assert!(r.optimum <= closed);
        match p.class() {
            SplitClass::Balanced => {
                prop_assert!(r.optimum + 1 >= p.omega() && r.optimum <= p.omega());
            }
            _ => {
                prop_assert_eq!(r.optimum, p.omega().saturating_sub(1));
                prop_assert_eq!(r.optimum, closed);
            }
        }
    }
}

#[test]
fn balanced_split_partition_is_unique_for_small_graphs() {
    for seed in 0..400u64 {
        let k = 1 + (seed % 5) as usize;
        let s = 1 + (seed / 5 % 5) as usize;
        let x = generate(&GenSpec {
            kind: GenKind::Split {
                k,
                s,
                edge_prob: 0.5,
            },
            seed,
        })
        .unwrap();
        let g = &x.graph;
        let omega = clique_number(g).unwrap();
        let alpha = independence_number(g).unwrap();
        let balanced: Vec<u32> = (0u32..1 << g.n())
            .filter(|mask| {
                let (kk, ss): (Vec<usize>, Vec<usize>) =
                    g.vertices().partition(|&v| mask >> (v - 1) & 1 == 1);
                kk.len() == omega && ss.len() == alpha && g.is_clique(&kk) && g.is_independent(&ss)
            })
            .collect();
        assert!(
            balanced.len() <= 1,
            "seed {seed}: {} balanced partitions",
            balanced.len()
        );
        let is_balanced = recognize_split(g).unwrap().class().is_balanced();
        assert_eq!(is_balanced, balanced.len() == 1, "seed {seed}");
    }
}

#[test]
fn graham_pollak_addressing_identities() {
    for n in 2..=20 {
        let a = graham_pollak_addressing(n).unwrap();
        assert_eq!(a.width(), n - 1);
        assert!(is_one_neighborly(a.strings()).unwrap());
        assert_eq!(volume(a.strings()).unwrap(), 1u128 << (n - 1));
        let p = addressing_to_partition(&a);
        assert!(is_valid(&complete_graph(n).unwrap(), &p));
        assert_eq!(p.len(), n - 1);
    }
    for n in 2..=12 {
        let a = graham_pollak_addressing(n).unwrap();
        let cover = subcube_cover(a.strings()).unwrap();
        assert_eq!(cover.covered, 1 << (n - 1));
        assert!(cover.is_disjoint());
    }
}

/// Seven vertices, K = {1,2,3,4}, S = {5,6,7}: balanced with ω = 4, so the
/// star construction uses 4 bicliques, but 3 suffice.
#[test]
fn balanced_graph_below_clique_number() {
    let g = Graph::from_edges(
        7,
        [
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
            (1, 5),
            (1, 6),
            (1, 7),
            (2, 7),
            (3, 6),
            (4, 5),
        ],
    )
    .unwrap();
    let p = recognize_split(&g).unwrap();
    assert_eq!(p.class(), SplitClass::Balanced);
    assert_eq!(p.omega(), 4);
    assert_eq!(count_maximal_cliques(&g.complement()).unwrap(), 5);
    assert_eq!(bp_split(&g).unwrap().value, 4);

    let three = BicliquePartition::new(vec![
        Biclique::new([1, 4], [2, 5]),
        Biclique::new([1, 2], [3, 7]),
        Biclique::new([1, 3], [4, 6]),
    ]);
    assert!(is_valid(&g, &three));
    assert_eq!(exact(&g).optimum, 3);

    // the clique side reads 000, 10*, *10, 0*1: 1-neighborly with volume 7 < 2^3
    let a = partition_to_addressing(&g, &three).unwrap();
    let family = a.family(&[1, 2, 3, 4]);
    assert_eq!(
        family.iter().map(ToString::to_string).collect::<Vec<_>>(),
        ["000", "10*", "*10", "0*1"]
    );
    assert!(is_one_neighborly(&family).unwrap());
    assert_eq!(volume(&family).unwrap(), 7);

    // neither structural audit fires, yet the partition is smaller than ω
    assert!(audit_star_in_s(&three, &[5, 6, 7]).is_empty());
    assert!(audit_part_in_s(&three, &[5, 6, 7]).is_empty());
}

#[test]
fn exhaustive_small_balanced_graphs_need_omega() {
    // every balanced split graph with |K| ≤ 3 needs exactly ω bicliques
    for k in 1..=3usize {
        for s in 1..=4usize {
            for mask in 0u32..1 << (k * s) {
                let mut edges: Vec<(usize, usize)> = (1..=k)
                    .flat_map(|u| (u + 1..=k).map(move |v| (u, v)))
                    .collect();
                for i in 0..k {
                    for j in 0..s {
                        if mask >> (i * s + j) & 1 == 1 {
                            edges.push((i + 1, k + j + 1));
                        }
                    }
                }
                let g = Graph::from_edges(k + s, edges).unwrap();
                let kk: Vec<usize> = (1..=k).collect();
                let ss: Vec<usize> = (k + 1..=k + s).collect();
                let p = classify(&g, &kk, &ss).unwrap();
                if p.class().is_balanced() {
                    assert_eq!(exact(&g).optimum, p.omega(), "{g:?}");
                }
            }
        }
    }
}
