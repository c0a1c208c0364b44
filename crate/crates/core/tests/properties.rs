//! Randomised invariants across the graph, graphon and tiling layers.

#![allow(clippy::needless_range_loop)]

mod common;

use graphtile::lab::{
    bottleneck_graph, edit_distance_to_bottleneck, finite_komlos_check, komlos_threshold,
    sample_step_graphon, BottleneckGraphSpec, EditMode, InternalRule,
};
use graphtile::{
    bottleneck_graphon, chromatic_number, critical_chromatic_number, enumerate_copies, fcov_graph,
    ftil_graph, rational, til_graph, til_graphon, verify_duality, Graph, Rational, SignedStep,
    StepGraphon,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use common::{naive_copies, patterns, r, random_permutation, rng};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect::<Vec<_>>();
            Graph::new(n, edges).unwrap()
        })
    })
}

fn graphon_strategy(k_max: usize) -> impl Strategy<Value = StepGraphon> {
    any::<u64>().prop_map(move |seed| sample_step_graphon(&mut rng(seed, 0), k_max))
}

fn pattern_strategy() -> impl Strategy<Value = Graph> {
    proptest::sample::select(patterns().into_iter().map(|(_, g)| g).collect::<Vec<_>>())
}

fn l1(u: &SignedStep) -> Rational {
    let m = u.measures();
    let mut total = Rational::zero();
    for (p, row) in u.values().iter().enumerate() {
        for (q, v) in row.iter().enumerate() {
            total += &m[p] * &m[q] * v.abs();
        }
    }
    total
}

/// A random graphon on the partition of `a`.
fn same_partition(a: &StepGraphon, seed: u64) -> StepGraphon {
    use rand::Rng;
    let k = a.parts();
    let mut g = rng(seed, 2);
    let mut d = vec![vec![Rational::zero(); k]; k];
    for p in 0..k {
        for q in p..k {
            let v = r(g.gen_range(0..=8), 8);
            d[p][q] = v.clone();
            d[q][p] = v;
        }
    }
    StepGraphon::new(a.measures().to_vec(), d).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chromatic_data_is_label_invariant(g in graph_strategy(7), seed in any::<u64>()) {
        let perm = random_permutation(&mut rng(seed, 1), g.order());
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(chromatic_number(&g), chromatic_number(&h));
        prop_assert_eq!(critical_chromatic_number(&g).ok(), critical_chromatic_number(&h).ok());
    }

    #[test]
    fn copies_agree_with_naive_enumeration(h in pattern_strategy(), g in graph_strategy(7)) {
        let mut fast: Vec<Vec<usize>> = enumerate_copies(&h, &g);
        fast.sort();
        let mut slow = naive_copies(&h, &g);
        slow.sort();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn from_graph_min_degree_is_scaled(g in graph_strategy(8)) {
        let w = StepGraphon::from_graph(&g);
        prop_assert_eq!(w.min_degree(), rational::int(g.min_degree() as i64) / rational::int(g.order() as i64));
    }

    #[test]
    fn density_vanishes_iff_no_admissible_tuple(f in pattern_strategy(), w in graphon_strategy(5)) {
        prop_assert_eq!(w.hom_density(&f).is_zero(), w.admissible_tuples(&f).is_empty());
    }

    #[test]
    fn cut_norm_is_a_norm(a in graphon_strategy(5), seed in any::<u64>(), c in -4i64..=4) {
        let b = same_partition(&a, seed);
        let u = SignedStep::difference(&a, &b).unwrap();
        let v = SignedStep::difference(&b, &a).unwrap();
        let nu = u.cut_norm().unwrap();
        prop_assert!(SignedStep::difference(&a, &a).unwrap().cut_norm().unwrap().is_zero());
        prop_assert_eq!(&nu, &v.cut_norm().unwrap());
        prop_assert_eq!(u.scale(&rational::int(c)).cut_norm().unwrap(), &nu * rational::int(c.abs()));
        prop_assert!(nu <= l1(&u));
        let w = SignedStep::difference(&a, &same_partition(&a, seed ^ 1)).unwrap();
        prop_assert!(u.add(&w).unwrap().cut_norm().unwrap() <= &nu + w.cut_norm().unwrap());
    }

    #[test]
    fn bottleneck_graphon_hits_threshold(h in graph_strategy(6), a in 0i64..8, b in 1i64..8, internal in 0i64..=4) {
        prop_assume!(h.size() > 0 && a < b);
        let x = r(a, b);
        let t = komlos_threshold(&h, &x).unwrap();
        let w = bottleneck_graphon(&x, &t.chi_cr, &r(internal, 4)).unwrap();
        prop_assert_eq!(w.measures().iter().sum::<Rational>(), rational::one());
        prop_assert_eq!(w.min_degree(), t.delta);
    }

    #[test]
    fn duality_certificates_verify(f in pattern_strategy(), w in graphon_strategy(5)) {
        let report = verify_duality(&f, &w).unwrap();
        prop_assert!(report.tiling.is_feasible(&f, &w));
        prop_assert!(report.cover.is_feasible(&f, &w));
        prop_assert_eq!(report.tiling.size(), report.til);
    }

    #[test]
    fn tiling_is_invariant_under_refinement(f in pattern_strategy(), w in graphon_strategy(4), p in 0usize..4, seed in any::<u64>()) {
        let (base, _) = til_graphon(&f, &w).unwrap();
        let split = w.split_part(p % w.parts()).unwrap();
        prop_assert_eq!(&til_graphon(&f, &split).unwrap().0, &base);
        let perm = random_permutation(&mut rng(seed, 3), w.parts());
        prop_assert_eq!(&til_graphon(&f, &w.permute(&perm).unwrap()).unwrap().0, &base);
    }

    #[test]
    fn tiling_is_monotone_in_densities(f in pattern_strategy(), w in graphon_strategy(4), p in 0usize..4, q in 0usize..4) {
        let (p, q) = (p % w.parts(), q % w.parts());
        let (base, _) = til_graphon(&f, &w).unwrap();
        let raised = w.with_density(p, q, rational::one()).unwrap();
        prop_assert!(til_graphon(&f, &raised).unwrap().0 >= base);
    }

    #[test]
    fn finite_lp_duality_and_integrality_gap(h in pattern_strategy(), g in graph_strategy(7)) {
        prop_assume!(h.order() <= g.order());
        let ftil = ftil_graph(&h, &g).unwrap().value;
        prop_assert_eq!(&ftil, &fcov_graph(&h, &g).unwrap().value);
        let til = rational::int(til_graph(&h, &g).unwrap().value as i64);
        prop_assert!(til <= ftil);
        let n = rational::int(g.order() as i64);
        let (cell, _) = til_graphon(&h, &StepGraphon::from_graph(&g)).unwrap();
        prop_assert!(ftil / n <= cell);
    }

    #[test]
    fn clique_tilings_scale_exactly(k in 1usize..=4, g in graph_strategy(7)) {
        let h = Graph::complete(k);
        prop_assume!(k <= g.order());
        let scaled = ftil_graph(&h, &g).unwrap().value / rational::int(g.order() as i64);
        prop_assert_eq!(til_graphon(&h, &StepGraphon::from_graph(&g)).unwrap().0, scaled);
    }

    #[test]
    fn orbit_folding_preserves_the_optimum(f in pattern_strategy(), w in graphon_strategy(5)) {
        use graphtile::tiling::{til_graphon_with, TilingOptions};
        let plain = til_graphon_with(&f, &w, TilingOptions { fold_orbits: false }).unwrap().0;
        let folded = til_graphon_with(&f, &w, TilingOptions { fold_orbits: true }).unwrap().0;
        prop_assert_eq!(plain, folded);
    }

    #[test]
    fn graph_text_roundtrips(g in graph_strategy(9)) {
        prop_assert_eq!(g.to_text().parse::<Graph>().unwrap(), g);
    }

    #[test]
    fn graphon_text_roundtrips(w in graphon_strategy(8)) {
        prop_assert_eq!(w.to_text().parse::<StepGraphon>().unwrap(), w);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn edit_distance_is_label_invariant(g in graph_strategy(8), seed in any::<u64>()) {
        let perm = random_permutation(&mut rng(seed, 4), g.order());
        let h = g.relabel(&perm).unwrap();
        let x = r(1, 2);
        let chi_cr = rational::int(3);
        let a = edit_distance_to_bottleneck(&g, &x, &chi_cr, EditMode::Exact).unwrap();
        let b = edit_distance_to_bottleneck(&h, &x, &chi_cr, EditMode::Exact).unwrap();
        prop_assert_eq!(a.edits, b.edits);
        let local = edit_distance_to_bottleneck(&g, &x, &chi_cr, EditMode::LocalSearch { restarts: 4, seed }).unwrap();
        prop_assert!(local.edits >= a.edits);
    }

    #[test]
    fn bottleneck_graphs_sit_at_distance_zero(n in 4usize..=12, a in 0i64..4, clique in any::<bool>()) {
        let x = r(a, 4);
        let internal = if clique { InternalRule::Clique } else { InternalRule::None };
        let spec = BottleneckGraphSpec::new(n, x.clone(), rational::int(3), internal).unwrap();
        let g = bottleneck_graph(&spec).unwrap();
        prop_assert_eq!(g.order(), n);
        prop_assert_eq!(spec.class_sizes().unwrap().iter().sum::<usize>(), n);
        prop_assert_eq!(edit_distance_to_bottleneck(&g, &x, &rational::int(3), EditMode::Exact).unwrap().edits, 0);
    }

    #[test]
    fn finite_check_is_bounded_by_smallest_class(n in 6usize..=15) {
        let rep = finite_komlos_check(&Graph::complete(3), &r(1, 2), n).unwrap();
        prop_assert_eq!(rep.til, rep.smallest_class);
        prop_assert_eq!(rep.copies.len(), rep.til);
        prop_assert!((rational::int(rep.til as i64) - rep.target).abs() <= rational::one());
    }
}

#[test]
fn reports_serialise_deterministically() {
    let w = sample_step_graphon(&mut rng(9, 9), 5);
    let f = Graph::complete(3);
    let a = serde_json::to_string(&verify_duality(&f, &w).unwrap()).unwrap();
    let b = serde_json::to_string(&verify_duality(&f, &w).unwrap()).unwrap();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let til = v["til"].as_str().unwrap();
    assert_eq!(
        rational::parse_rational(til).unwrap(),
        verify_duality(&f, &w).unwrap().til
    );
}
