//! Property tests over random stacked balls.

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::subsequence;

use stacksphere::complex::{canonical_block_labeling, Simplex, StackedBall, Vertex};
use stacksphere::constructions::{glue, random_ball, random_linear_ball};
use stacksphere::io::{self, Instance};
use stacksphere::linear37::{transversal_3n7_with, Strategy as Cover};
use stacksphere::solver::{
    brute_force_tau, greedy_transversal, is_transversal, matching_lower_bound, min_transversal,
    min_transversal_with, SolveOptions,
};

fn ball() -> impl Strategy<Value = StackedBall> {
    (2usize..=4, 1usize..=40, any::<u64>()).prop_map(|(d, m, seed)| random_ball(d, m, seed).unwrap())
}

/// Random ball with at most 12 vertices and some facets taken out.
fn small_sphere() -> impl Strategy<Value = (StackedBall, Vec<Simplex>)> {
    (2usize..=3, any::<u64>())
        .prop_flat_map(|(d, seed)| (Just(d), 1..=12 - d - 1, Just(seed)))
        .prop_flat_map(|(d, m, seed)| {
            let b = random_ball(d, m, seed).unwrap();
            let facets: Vec<Simplex> = b.boundary().facets().iter().cloned().collect();
            let n = facets.len();
            (Just(b), subsequence(facets, 0..=n.min(3)))
        })
}

fn tau(b: &StackedBall, removed: &[Simplex]) -> usize {
    let h = b.boundary().remove_facets(removed).unwrap().to_hypergraph();
    min_transversal(&h).unwrap().0.size()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn counts_and_tree(b in ball()) {
        let d = b.dim();
        let m = b.len();
        let vertices: BTreeSet<Vertex> = b.simplices().iter().flatten().copied().collect();
        prop_assert_eq!(vertices.len(), m + d + 1);
        prop_assert_eq!(b.boundary().facet_count(), d * m + 2);
        let tree = b.dual_graph();
        prop_assert!(tree.is_tree());
        prop_assert_eq!(tree.edges().len(), m - 1);
    }

    #[test]
    fn reroot_keeps_boundary(b in ball(), root in any::<prop::sample::Index>()) {
        let r = b.reroot(root.index(b.len())).unwrap();
        prop_assert_eq!(r.boundary(), b.boundary());
        prop_assert_eq!(r.simplex(0), b.simplex(root.index(b.len())));
    }

    #[test]
    fn path_order_keeps_boundary(d in 2usize..=4, m in 1usize..=40, seed in any::<u64>()) {
        let b = random_linear_ball(d, m, seed).unwrap();
        prop_assert!(b.is_linear());
        let p = b.in_path_order().unwrap();
        prop_assert_eq!(p.boundary(), b.boundary());
        for i in 1..p.len() {
            prop_assert_eq!(p.simplex(i - 1).intersection_len(p.simplex(i)), d + 1);
        }
    }

    #[test]
    fn canonical_blocks(m in 8usize..=30, seed in any::<u64>()) {
        let b = random_linear_ball(2, m, seed).unwrap();
        let start = m - 7;
        let shared = b.simplex(start - 1).intersection(b.simplex(start));
        let (block, map) = canonical_block_labeling(&b, start, 7, shared.vertices()).unwrap();
        prop_assert_eq!(block.simplex(0).vertices(), &[1, 2, 3, 4]);
        for i in 1..7 {
            prop_assert_eq!(block.new_vertex(i), Some(i as Vertex + 4));
        }
        let mut pinned: Vec<Vertex> = shared.iter().map(|v| map[v]).collect();
        pinned.sort_unstable();
        prop_assert_eq!(pinned, vec![1, 2, 3]);
        for i in 0..7 {
            let back = block.simplex(i).map(|v| *map.iter().find(|e| *e.1 == v).unwrap().0).unwrap();
            prop_assert_eq!(&back, b.simplex(start + i));
        }
    }

    #[test]
    fn exact_matches_brute_force((b, removed) in small_sphere()) {
        let h = b.boundary().remove_facets(&removed).unwrap().to_hypergraph();
        let (cert, _) = min_transversal(&h).unwrap();
        prop_assert!(cert.optimal);
        prop_assert!(is_transversal(&h, &cert.vertices));
        prop_assert_eq!(brute_force_tau(&h, h.vertex_count()), Some(cert.size()));
    }

    #[test]
    fn sandwich((b, removed) in small_sphere()) {
        let h = b.boundary().remove_facets(&removed).unwrap().to_hypergraph();
        let exact = min_transversal(&h).unwrap().0.size();
        let greedy = greedy_transversal(&h).unwrap();
        prop_assert!(is_transversal(&h, &greedy.vertices));
        prop_assert!(matching_lower_bound(&h) <= exact);
        prop_assert!(exact <= greedy.size());
    }

    #[test]
    fn removing_facets_never_raises_tau((b, removed) in small_sphere()) {
        prop_assert!(tau(&b, &removed) <= tau(&b, &[]));
        if let Some((_, rest)) = removed.split_last() {
            prop_assert!(tau(&b, &removed) <= tau(&b, rest));
        }
    }

    #[test]
    fn solver_is_deterministic(b in ball()) {
        let h = b.boundary().to_hypergraph();
        let first = min_transversal(&h).unwrap().0;
        prop_assert_eq!(&min_transversal(&h).unwrap().0, &first);
        let par = min_transversal_with(&h, &SolveOptions { node_limit: None, parallel: true }).unwrap().0;
        prop_assert_eq!(par.size(), first.size());
    }

    #[test]
    fn cover_3n7(m in 1usize..=150, seed in any::<u64>()) {
        let b = random_linear_ball(2, m, seed).unwrap();
        let n = m + 3;
        let h = b.boundary().to_hypergraph();
        for strategy in [Cover::Search, Cover::Constructive] {
            let pair = transversal_3n7_with(&b, strategy).unwrap();
            for t in [&pair.t1, &pair.t2] {
                prop_assert!(is_transversal(&h, t));
                prop_assert!(7 * t.len() <= 3 * n + 6);
            }
            prop_assert!(pair.last_facet_hits >= 3);
        }
        prop_assert_eq!(transversal_3n7_with(&b, Cover::Search).unwrap(),
                        transversal_3n7_with(&b, Cover::Search).unwrap());
    }

    #[test]
    fn gluing_inequality(
        (d, ms, seeds, fi, gi) in (2usize..=3, (1usize..=4, 1usize..=4), any::<(u64, u64)>(), any::<prop::sample::Index>(), any::<prop::sample::Index>())
    ) {
        let s = random_ball(d, ms.0, seeds.0).unwrap();
        let t = random_ball(d, ms.1, seeds.1).unwrap();
        let sf: Vec<Simplex> = s.boundary().facets().iter().cloned().collect();
        let tf: Vec<Simplex> = t.boundary().facets().iter().cloned().collect();
        let f = &sf[fi.index(sf.len())];
        let g = &tf[gi.index(tf.len())];
        let k = glue(&s, f, &t, g).unwrap();
        prop_assert_eq!(k.ball.vertices().len(), s.vertices().len() + t.vertices().len());
        let h = k.distinguished_facet.clone();
        prop_assert!(tau(&k.ball, &[h]) >= tau(&s, std::slice::from_ref(f)) + tau(&t, std::slice::from_ref(g)));
    }

    #[test]
    fn files_round_trip((b, removed) in small_sphere(), json in any::<bool>()) {
        let mut inst = Instance::from_ball(b);
        inst.removed = removed;
        let text = if json { io::to_json(&inst) } else { io::to_text(&inst) };
        let back = io::parse(&text).unwrap();
        prop_assert_eq!(back.sphere().unwrap(), inst.sphere().unwrap());
        prop_assert_eq!(back, inst);
    }
}
