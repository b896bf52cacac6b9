use proptest::prelude::*;
use rayon::prelude::*;

use middle_roman::characterization::characterization_holds;
use middle_roman::generate::{random_corpus, random_tree, rng};
use middle_roman::io::parse_graph6_lines;
use middle_roman::mixed::{is_mrdf, is_pmrdf, to_middle_labeling};
use middle_roman::roman::{brute_force_oracle, is_dominating, MAX_SIZE_GUARD};
use middle_roman::{build_middle_graph, Graph, Solver, Variant};

const ATLAS: &str = include_str!("../../../data/graph_atlas.g6");
const CONNECTED: &str = include_str!("../../../data/connected_le7.g6");

fn load(text: &str) -> Vec<Graph> {
    parse_graph6_lines(text)
        .into_iter()
        .map(|(_, g)| g.unwrap())
        .collect()
}

fn wide() -> Solver {
    Solver::new(MAX_SIZE_GUARD).unwrap()
}

#[test]
fn atlas_counts() {
    let atlas = load(ATLAS);
    assert_eq!(atlas.len(), 1253);
    let connected = load(CONNECTED);
    assert_eq!(connected.len(), 996);
    assert!(connected.iter().all(Graph::is_connected));
    let per_order: Vec<usize> = (1..=7)
        .map(|n| connected.iter().filter(|g| g.order() == n).count())
        .collect();
    assert_eq!(per_order, vec![1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn oracle_agrees_on_atlas() {
    let atlas = load(ATLAS);
    atlas.par_iter().for_each(|g| {
        for v in [Variant::Roman, Variant::Perfect] {
            let solved = Solver::default().solve(g, v).unwrap();
            assert_eq!(solved.optimum, brute_force_oracle(g, v).unwrap(), "{g:?} {v:?}");
            assert!(is_dominating(g, &solved.witness, v).unwrap());
            assert_eq!(solved.witness.weight(), solved.optimum);
            assert_eq!(solved.witness.two_set(), solved.two_set);
        }
    });
}

#[test]
fn oracle_agrees_on_random_graphs_up_to_ten() {
    let corpus = random_corpus(40, 8, 10, 77);
    corpus.par_iter().for_each(|g| {
        let r = Solver::default().solve(g, Variant::Roman).unwrap().optimum;
        let pr = Solver::default().solve(g, Variant::Perfect).unwrap().optimum;
        assert_eq!(r, brute_force_oracle(g, Variant::Roman).unwrap());
        assert_eq!(pr, brute_force_oracle(g, Variant::Perfect).unwrap());
        assert!(pr >= r);
    });
}

#[test]
fn kim_and_ordering_on_middle_graphs() {
    let corpus: Vec<Graph> = load(ATLAS)
        .into_iter()
        .chain(random_corpus(200, 1, 9, 1))
        .collect();
    corpus.par_iter().for_each(|g| {
        let r = wide().solve_middle(g, Variant::Roman).unwrap();
        assert_eq!(r.optimum(), g.order(), "{g:?}");
        assert!(is_mrdf(g, &r.mixed).unwrap());
        if g.order() <= 7 {
            let pr = wide().solve_middle(g, Variant::Perfect).unwrap();
            assert!(pr.optimum() >= r.optimum());
            assert!(is_pmrdf(g, &pr.mixed).unwrap());
        }
    });
}

#[test]
fn characterization_and_claims_on_all_connected_graphs() {
    // includes order 7, beyond what the acceptance suite requires
    let corpus = load(CONNECTED);
    corpus.par_iter().for_each(|g| {
        let r = wide().check_characterization(g).unwrap();
        assert!(r.theorem_consistent, "{g:?}");
        assert_eq!(r.equal, r.gamma_r_star == r.gamma_pr_star);
        if let Some(w) = &r.witness {
            assert!(is_mrdf(g, w).unwrap());
            assert_eq!(w.weight(), r.gamma_r_star);
            assert!(characterization_holds(g, w).unwrap());
            // the witness is itself perfect
            assert!(is_pmrdf(g, w).unwrap());
        }
        if r.equal {
            let audit = &r.claims_audit;
            assert!(audit.examined > 0);
            assert_eq!(audit.hypothesis_failures, 0);
            assert!(audit.exists_all_hold, "{g:?}");
            assert!(audit.holds_for_all[..4].iter().all(|&c| c), "{g:?}");
        }
    });
}

#[test]
fn characterization_on_disconnected_graphs() {
    let atlas = load(ATLAS);
    for g in atlas.iter().filter(|g| g.order() <= 6 && !g.is_connected()) {
        assert!(Solver::default().check_characterization(g).unwrap().theorem_consistent);
    }
}

#[test]
fn additivity_on_middle_graphs() {
    let atlas = load(ATLAS);
    for g in atlas.iter().filter(|g| g.order() <= 6 && !g.is_connected()) {
        let mg = build_middle_graph(g);
        for v in [Variant::Roman, Variant::Perfect] {
            let split = Solver::default().solve_by_components(mg.graph(), v).unwrap();
            let whole = Solver::default().solve(mg.graph(), v).unwrap();
            assert_eq!(split.optimum, whole.optimum);
        }
    }
}

#[test]
fn tree_bound_beyond_acceptance_sample() {
    let mut r = rng(99);
    for i in 0..300 {
        let n = 3 + i % 16;
        let t = random_tree(n, &mut r);
        let gamma = Solver::default().solve(&t, Variant::Perfect).unwrap().optimum;
        assert!(5 * gamma <= 4 * n, "{t:?}");
    }
}

#[test]
fn repeated_solves_are_identical() {
    for g in random_corpus(30, 5, 12, 8) {
        for v in [Variant::Roman, Variant::Perfect] {
            let a = Solver::default().solve(&g, v).unwrap();
            let b = Solver::default().solve(&g, v).unwrap();
            assert_eq!(a, b);
        }
    }
}

fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::new(n, edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn solver_matches_oracle(g in arb_graph(8)) {
        for v in [Variant::Roman, Variant::Perfect] {
            prop_assert_eq!(
                Solver::default().solve(&g, v).unwrap().optimum,
                brute_force_oracle(&g, v).unwrap()
            );
        }
    }

    #[test]
    fn components_sum(g in arb_graph(10)) {
        for v in [Variant::Roman, Variant::Perfect] {
            let split = Solver::default().solve_by_components(&g, v).unwrap();
            prop_assert_eq!(split.optimum, Solver::default().solve(&g, v).unwrap().optimum);
            prop_assert!(is_dominating(&g, &split.witness, v).unwrap());
        }
    }

    #[test]
    fn every_optimal_two_set_completes_to_an_optimum(g in arb_graph(7)) {
        for v in [Variant::Roman, Variant::Perfect] {
            let best = Solver::default().solve(&g, v).unwrap();
            let all = Solver::default().optimal_labelings(&g, v).unwrap();
            prop_assert_eq!(&all[0], &best);
            for r in &all {
                prop_assert!(is_dominating(&g, &r.witness, v).unwrap());
                prop_assert_eq!(r.witness.weight(), best.optimum);
            }
        }
    }

    #[test]
    fn translated_predicates_agree(
        g in arb_graph(6),
        seed in any::<u64>(),
    ) {
        use rand::Rng;
        let mut r = rng(seed);
        let mg = build_middle_graph(&g);
        let f = middle_roman::MixedLabeling::new(
            &g,
            (0..g.order()).map(|_| r.gen_range(0..3)).collect(),
            (0..g.size()).map(|_| [0, 0, 1, 2][r.gen_range(0..4)]).collect(),
        ).unwrap();
        let l = to_middle_labeling(&mg, &f).unwrap();
        prop_assert_eq!(l.weight(), f.weight());
        prop_assert_eq!(is_mrdf(&g, &f).unwrap(), is_dominating(mg.graph(), &l, Variant::Roman).unwrap());
        prop_assert_eq!(is_pmrdf(&g, &f).unwrap(), is_dominating(mg.graph(), &l, Variant::Perfect).unwrap());
    }
}
