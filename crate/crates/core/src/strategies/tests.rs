use super::*;
use crate::engine::{simulate_script, GameSpec, Variant};
use crate::families::{Attachment, Recipe};
use crate::graph::Graph;

fn report(g: &Graph, ell: u32, s: &crate::engine::Script) -> crate::engine::CleaningReport {
    let spec = GameSpec::new(g, ell, s.cops(), Variant::See).unwrap();
    simulate_script(g, &spec, s).unwrap()
}

#[test]
fn one_visibility_tree_scripts() {
    let star = Recipe::Spider(vec![1; 5]).generate().unwrap().graph;
    let s = tree_one_visibility_script(&star).unwrap();
    assert_eq!(s.cops(), 1);
    assert!(verify_seeing(&star, 1, &s).unwrap());

    for legs in [vec![3, 3, 3], vec![6, 6], vec![5, 5, 4, 2], vec![9, 9, 9]] {
        let t = Recipe::Spider(legs.clone()).generate().unwrap().graph;
        let s = tree_one_visibility_script(&t).unwrap();
        let h = t.radius() as usize;
        assert_eq!(s.cops(), h.div_ceil(3).max(1), "{legs:?}");
        assert!(verify_seeing(&t, 1, &s).unwrap(), "{legs:?}");
    }
    for seed in 0..40 {
        let t = Recipe::RandomTree { n: 30, seed }.generate().unwrap().graph;
        let s = tree_one_visibility_script(&t).unwrap();
        assert_eq!(s.cops(), (t.radius() as usize).div_ceil(3).max(1));
        assert!(verify_seeing(&t, 1, &s).unwrap(), "seed {seed}");
    }
    let binary = Recipe::SubdividedBinary {
        depth: 3,
        subdivisions: 3,
    }
    .generate()
    .unwrap()
    .graph;
    let s = tree_one_visibility_script(&binary).unwrap();
    assert!(verify_seeing(&binary, 1, &s).unwrap());
    assert!(tree_one_visibility_script(&Recipe::Cycle(5).generate().unwrap().graph).is_err());
}

#[test]
fn family_scripts() {
    for ell in [1, 2] {
        for k in 1..=3 {
            let gen = Recipe::TFamily {
                k,
                ell,
                attach: Attachment::Hub,
            }
            .generate()
            .unwrap();
            let s = t_family_script(&gen.graph, ell, gen.certificate.as_ref()).unwrap();
            assert_eq!(s.cops(), k);
            assert!(
                verify_seeing(&gen.graph, ell, &s).unwrap(),
                "k={k} ell={ell}"
            );
        }
    }
    let gen = Recipe::TFamily {
        k: 2,
        ell: 1,
        attach: Attachment::Hub,
    }
    .generate()
    .unwrap();
    assert!(t_family_script(&gen.graph, 1, None).is_err());
}

#[test]
fn subdivided_binary_scripts() {
    for ell in [1, 2] {
        let g = Recipe::SubdividedBinary {
            depth: 3,
            subdivisions: 2 * ell as usize + 1,
        }
        .generate()
        .unwrap()
        .graph;
        let both = t_ell_scripts(&g, ell).unwrap();
        let two = report(&g, ell, &both.two_cop);
        assert!(two.seen_guaranteed_at.is_some(), "ell={ell}");
        assert!(!two.monotone);
        assert!(two.recontamination.iter().any(|e| e.vertex == 4));
        let three = report(&g, ell, &both.three_cop_monotone);
        assert!(three.seen_guaranteed_at.is_some(), "ell={ell}");
        assert!(three.monotone, "{:?}", three.recontamination);
    }
    let wrong = Recipe::Path(9).generate().unwrap().graph;
    assert!(t_ell_scripts(&wrong, 1).is_err());
}

fn root_kept(s: &crate::engine::Script, g: &Graph, ell: u32, root: usize, mode: RootGuard) -> bool {
    let ok = |t: usize| {
        s.at(t).iter().any(|&c| match mode {
            RootGuard::Occupied => c == root,
            RootGuard::Seen => g.dist(c, root) <= ell,
        })
    };
    (0..s.rounds()).all(|t| ok(t) || ok(t + 1))
}

#[test]
fn root_guarded() {
    let star = Recipe::Spider(vec![1; 4]).generate().unwrap().graph;
    let s = root_guarded_script(&star, 0, 2, 1, RootGuard::Occupied).unwrap();
    assert_eq!(s.cops(), 1);
    assert!(verify_seeing(&star, 1, &s).unwrap());
    assert!(root_kept(&s, &star, 1, 0, RootGuard::Occupied));

    let spider = Recipe::Spider(vec![4, 4, 4]).generate().unwrap().graph;
    for mode in [RootGuard::Occupied, RootGuard::Seen] {
        let s = root_guarded_script(&spider, 0, 3, 1, mode).unwrap();
        assert_eq!(s.cops(), 2);
        assert!(verify_seeing(&spider, 1, &s).unwrap(), "{mode:?}");
        assert!(root_kept(&s, &spider, 1, 0, mode), "{mode:?}");
    }
    assert!(root_guarded_script(&spider, 0, 2, 1, RootGuard::Occupied).is_err());

    let path = Recipe::Path(3).generate().unwrap().graph;
    assert!(root_guarded_script(&path, 0, 2, 1, RootGuard::Occupied).is_err());
    let s = root_guarded_script(&path, 0, 2, 1, RootGuard::Seen).unwrap();
    assert_eq!(s.walks[0], vec![0, 1, 2, 1, 0]);
    assert!(verify_seeing(&path, 1, &s).unwrap());
    assert!(root_kept(&s, &path, 1, 0, RootGuard::Seen));
    let long = Recipe::Path(8).generate().unwrap().graph;
    assert!(root_guarded_script(&long, 0, 2, 1, RootGuard::Occupied).is_err());

    for seed in 0..30 {
        let t = Recipe::RandomTree { n: 14, seed }.generate().unwrap().graph;
        let k = crate::treerank::rank(&t, 1).unwrap().k + 1;
        for mode in [RootGuard::Occupied, RootGuard::Seen] {
            if let Ok(s) = root_guarded_script(&t, 0, k, 1, mode) {
                assert!(verify_seeing(&t, 1, &s).unwrap(), "seed {seed} {mode:?}");
                assert!(root_kept(&s, &t, 1, 0, mode), "seed {seed} {mode:?}");
            }
        }
    }
}

#[test]
fn cleaning_search() {
    let c4 = Recipe::Cycle(4).generate().unwrap().graph;
    let r = find_cleaning_script(&c4, 1, 1, false, 100_000).unwrap();
    assert!(r.script.is_some());
    let c7 = Recipe::Cycle(7).generate().unwrap().graph;
    assert!(find_cleaning_script(&c7, 1, 1, false, 100_000)
        .unwrap()
        .script
        .is_none());
    let s = find_cleaning_script(&c7, 1, 2, false, 100_000)
        .unwrap()
        .script
        .unwrap();
    assert!(verify_seeing(&c7, 1, &s).unwrap());
    let spider = Recipe::Spider(vec![4, 4, 4]).generate().unwrap().graph;
    assert!(find_cleaning_script(&spider, 1, 1, false, 1_000_000)
        .unwrap()
        .script
        .is_none());
    let s = find_cleaning_script(&spider, 1, 2, true, 1_000_000)
        .unwrap()
        .script
        .unwrap();
    let rep = report(&spider, 1, &s);
    assert!(rep.monotone && rep.seen_guaranteed_at.is_some());
    assert!(matches!(
        find_cleaning_script(&spider, 1, 2, false, 3),
        Err(crate::Error::BudgetExceeded { .. })
    ));
}

#[test]
fn rank_sized_scripts() {
    let mut missed = Vec::new();
    for ell in [1, 2] {
        for seed in 0..60 {
            let t = Recipe::RandomTree {
                n: 12 + (seed as usize % 20),
                seed,
            }
            .generate()
            .unwrap()
            .graph;
            match rank_cleaning_script(&t, ell) {
                Ok(s) => assert!(verify_seeing(&t, ell, &s).unwrap()),
                Err(_) => missed.push((ell, seed)),
            }
        }
    }
    assert!(missed.is_empty(), "{missed:?}");
}

mod policies {
    use super::super::*;
    use crate::engine::{
        play_from, play_match, BeliefState, Concrete, FleeWalker, GameSpec, Mover, Outcome, Phase,
        RandomWalker, Variant,
    };
    use crate::families::Recipe;
    use crate::graph::chordal_peo;
    use crate::solver::{solve_full, DEFAULT_BUDGET};

    #[test]
    fn pursuit_on_paths_and_cliques() {
        for (recipe, ell) in [
            ("path:7", 1),
            ("path:7", 2),
            ("complete:5", 1),
            ("complete:5", 3),
        ] {
            let g = recipe.parse::<Recipe>().unwrap().generate().unwrap().graph;
            let peo = chordal_peo(&g).unwrap();
            let check = verify_chordal_pursuit(&g, &peo, ell).unwrap();
            assert!(
                check.captures && check.non_increasing,
                "{recipe} {ell} {check:?}"
            );
            if recipe.starts_with("complete") {
                assert_eq!(check.max_rounds, Some(1));
            }
        }
        let c5 = Recipe::Cycle(5).generate().unwrap().graph;
        assert!(verify_chordal_pursuit(
            &c5,
            &chordal_peo(&Recipe::Path(5).generate().unwrap().graph).unwrap(),
            1
        )
        .is_err());
    }

    #[test]
    fn pursuit_against_optimal_robber() {
        let mut peaks = (0, 0);
        for seed in 0..12 {
            for ell in [1, 2] {
                let g = Recipe::RandomChordal { n: 9, seed }
                    .generate()
                    .unwrap()
                    .graph;
                let peo = chordal_peo(&g).unwrap();
                let check = verify_chordal_pursuit(&g, &peo, ell).unwrap();
                assert!(
                    check.captures && check.non_increasing,
                    "seed {seed} ell {ell}"
                );
                assert_eq!(check.peaks, check.peak_decreases, "seed {seed} ell {ell}");
                peaks.0 += check.peaks;
                peaks.1 += check.peak_decreases;
                let spec = GameSpec::new(&g, ell, 1, Variant::Capture).unwrap();
                let mut robber = solve_full(&g, &spec, DEFAULT_BUDGET).unwrap();
                for c in 0..g.n() {
                    for r in 0..g.n() {
                        if c == r || g.dist(c, r) > spec.ell {
                            continue;
                        }
                        let state = BeliefState {
                            cops: vec![c],
                            phase: Phase::Visible(r),
                            snapshot: None,
                            to_move: Mover::Cops,
                        };
                        let mut cop = chordal_pursuit(&g, &peo, spec.ell, c, r).unwrap();
                        let trace =
                            play_from(&g, &spec, &state, &mut cop, &mut robber, 100).unwrap();
                        assert_eq!(trace.outcome, Outcome::Captured);
                    }
                }
            }
        }
        assert!(peaks.0 > 0);
    }

    #[test]
    fn see_then_pursue_captures() {
        for seed in 0..6 {
            let g = Recipe::RandomChordal { n: 8, seed }
                .generate()
                .unwrap()
                .graph;
            let peo = chordal_peo(&g).unwrap();
            let see = GameSpec::new(&g, 1, 1, Variant::See).unwrap();
            let Ok(sol) = solve_full(&g, &see, DEFAULT_BUDGET) else {
                continue;
            };
            if sol.placement().is_none() {
                continue;
            }
            let spec = GameSpec::new(&g, 1, 1, Variant::Capture).unwrap();
            let mut cop = SeeThenPursue::new(&g, &peo, 1, sol).unwrap();
            let mut robber = Concrete::new(FleeWalker);
            let trace = play_match(&g, &spec, &mut cop, &mut robber, 200).unwrap();
            assert_eq!(trace.outcome, Outcome::Captured, "seed {seed}");
        }
    }

    #[test]
    fn pursuit_survives_sight_lost_before_the_cop_turn() {
        // path 5-0-1-3-4-6 with a triangle 1-2-3: the cop at 1 sees the
        // robber on 3 after its move, and the robber steps to 4 out of range
        let g = "randchordal:n=7,seed=10"
            .parse::<Recipe>()
            .unwrap()
            .generate()
            .unwrap()
            .graph;
        let peo = chordal_peo(&g).unwrap();
        let see = solve_full(
            &g,
            &GameSpec::new(&g, 1, 1, Variant::See).unwrap(),
            DEFAULT_BUDGET,
        )
        .unwrap();
        let spec = GameSpec::new(&g, 1, 1, Variant::Capture).unwrap();
        let mut robber = solve_full(&g, &spec, DEFAULT_BUDGET).unwrap();
        let mut cop = SeeThenPursue::new(&g, &peo, 1, see).unwrap();
        let trace = play_match(&g, &spec, &mut cop, &mut robber, 100).unwrap();
        assert_eq!(trace.outcome, Outcome::Captured);
    }

    #[test]
    fn shadow_capture_playouts() {
        for recipe in ["cycle:6", "petersen", "kbip:3,3", "cycle:9"] {
            let g = recipe.parse::<Recipe>().unwrap().generate().unwrap().graph;
            let mut cop = ShadowCapture::new(&g, 2, DEFAULT_BUDGET).unwrap();
            let m = cop.cops();
            let spec = GameSpec::new(&g, 2, m, Variant::Capture).unwrap();
            let mut robber = Concrete::new(FleeWalker);
            let trace = play_match(&g, &spec, &mut cop, &mut robber, 300).unwrap();
            assert_eq!(trace.outcome, Outcome::Captured, "{recipe} flee");
            for seed in 0..10 {
                let mut robber = Concrete::new(RandomWalker::seeded(seed));
                let trace = play_match(&g, &spec, &mut cop, &mut robber, 300).unwrap();
                assert_eq!(trace.outcome, Outcome::Captured, "{recipe} seed {seed}");
            }
        }
        let c6 = Recipe::Cycle(6).generate().unwrap().graph;
        let mut cop = ShadowCapture::new(&c6, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(cop.cops(), 3);
        let spec = GameSpec::new(&c6, 2, 3, Variant::Capture).unwrap();
        let mut robber = solve_full(&c6, &spec, DEFAULT_BUDGET).unwrap();
        let trace = play_match(&c6, &spec, &mut cop, &mut robber, 300).unwrap();
        assert_eq!(trace.outcome, Outcome::Captured);
        assert!(ShadowCapture::new(&c6, 1, DEFAULT_BUDGET).is_err());
    }
}
