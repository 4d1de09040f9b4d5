//! Acceptance checks, one PASS/FAIL line each. Integer targets are exact.
//! Criteria 1, 3 and 4 run through the command-line entry point so that
//! criterion 12 can replay them with another worker count.

use copvis::cli::{run_args, Format};
use copvis::engine::{play_match, GameSpec, Outcome, Variant};
use copvis::families::Recipe;
use copvis::graph::{chordal_peo, find_retraction, k_domination_number, Graph, VertexSet};
use copvis::solver::{
    cop_number, profile, solve, solve_full, ProfileOptions, Winner, DEFAULT_BUDGET,
};
use copvis::strategies::{find_cleaning_script, verify_chordal_pursuit, SeeThenPursue};
use copvis::Error;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use std::time::Instant;

struct Tally {
    failed: Vec<u32>,
}

impl Tally {
    fn report(&mut self, id: u32, pass: bool, started: Instant, detail: String) {
        let secs = started.elapsed().as_secs_f64();
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("{tag} {id:>2} [{secs:7.1}s] {detail}");
        if !pass {
            self.failed.push(id);
        }
    }
}

/// Runs one command and returns its structured output as text.
fn cli_text(args: &[String]) -> String {
    let mut full = vec!["copvis".to_string()];
    full.extend(args.iter().cloned());
    let (_, report) = run_args(&full).expect("arguments parse");
    assert_eq!(
        report.code, 0,
        "{args:?} exited with {}: {:?}",
        report.code, report.error
    );
    report.render(Format::Structured)
}

fn cli(args: &[String]) -> Value {
    serde_json::from_str(&cli_text(args)).expect("structured output is JSON")
}

fn args(words: &str, recipes: &[String], workers: usize) -> Vec<String> {
    let mut out: Vec<String> = words.split_whitespace().map(String::from).collect();
    for r in recipes {
        out.push("--recipe".into());
        out.push(r.clone());
    }
    out.push("--format".into());
    out.push("structured".into());
    out.push("--workers".into());
    out.push(workers.to_string());
    out
}

fn numbers(v: &Value) -> Vec<u64> {
    v["results"]
        .as_array()
        .expect("results")
        .iter()
        .map(|r| r["number"].as_u64().expect("number"))
        .collect()
}

fn connected(n: usize, p: f64, seed: u64) -> Graph {
    Recipe::RandomConnected { n, p, seed }
        .generate()
        .unwrap()
        .graph
}

// ---- criterion 1

struct Expect {
    recipe: String,
    capture: u64,
    see: u64,
}

fn small_families(ell: u32) -> Vec<Expect> {
    let mut out = Vec::new();
    let mut add = |recipe: String, capture, see| {
        out.push(Expect {
            recipe,
            capture,
            see,
        })
    };
    for n in 1..=10 {
        add(format!("path:{n}"), 1, 1);
        add(format!("complete:{n}"), 1, 1);
    }
    for n in 4..=10 {
        let see = if n >= 2 * ell as usize + 3 { 2 } else { 1 };
        add(format!("cycle:{n}"), 2, see);
    }
    for m in 2..=5 {
        for n in m..=5 {
            add(format!("kbip:{m},{n}"), 2, 1);
        }
    }
    out
}

fn criterion_1_runs(workers: usize) -> Vec<String> {
    let mut out = Vec::new();
    for ell in [1, 2] {
        let recipes: Vec<String> = small_families(ell).into_iter().map(|e| e.recipe).collect();
        for variant in ["capture", "see"] {
            let words = format!("solve --ell {ell} --variant {variant}");
            out.push(cli_text(&args(&words, &recipes, workers)));
        }
    }
    out
}

fn criterion_1(t: &mut Tally) -> Vec<String> {
    let start = Instant::now();
    let runs = criterion_1_runs(1);
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for (i, ell) in [1u32, 2].into_iter().enumerate() {
        let expect = small_families(ell);
        let capture = numbers(&serde_json::from_str(&runs[2 * i]).unwrap());
        let see = numbers(&serde_json::from_str(&runs[2 * i + 1]).unwrap());
        for ((e, c), s) in expect.iter().zip(capture).zip(see) {
            checked += 2;
            if (c, s) != (e.capture, e.see) {
                mismatches.push(format!(
                    "{} ell={ell}: got ({c},{s}) want ({},{})",
                    e.recipe, e.capture, e.see
                ));
            }
        }
    }
    t.report(
        1,
        mismatches.is_empty(),
        start,
        format!(
            "small-family table: {checked} numbers, {} mismatches {:?}",
            mismatches.len(),
            mismatches
        ),
    );
    runs
}

// ---- criterion 2

fn criterion_2(t: &mut Tally) {
    let start = Instant::now();
    let mut got = Vec::new();
    let mut ok = true;
    for n in 1..=6usize {
        let g = Recipe::Complete(n).generate().unwrap().graph;
        let c = cop_number(&g, 0, Variant::ZeroVis, DEFAULT_BUDGET).unwrap();
        ok &= c == n.div_ceil(2);
        got.push(c);
    }
    t.report(
        2,
        ok,
        start,
        format!("zero-visibility K_1..K_6 = {got:?} (want ceil(n/2))"),
    );
}

// ---- criterion 3

fn criterion_3_runs(workers: usize) -> Vec<String> {
    let r = vec!["tfamily:k=2,ell=1".to_string()];
    vec![
        cli_text(&args("solve --ell 1 --variant capture", &r, workers)),
        cli_text(&args(
            "solve --ell 1 --variant capture --cops 1",
            &r,
            workers,
        )),
        cli_text(&args(
            "verify --ell 1 --variant capture --script tfamily",
            &r,
            workers,
        )),
        cli_text(&args("rank --ell 1", &r, workers)),
    ]
}

fn criterion_3(t: &mut Tally) -> Vec<String> {
    let start = Instant::now();
    let runs = criterion_3_runs(1);
    let v: Vec<Value> = runs
        .iter()
        .map(|s| serde_json::from_str(s).unwrap())
        .collect();
    let n = Recipe::TFamily {
        k: 2,
        ell: 1,
        attach: copvis::families::Attachment::Hub,
    }
    .generate()
    .unwrap()
    .graph
    .n();
    let number = v[0]["results"][0]["number"].as_u64();
    let one = v[1]["results"][0]["winner"].as_str();
    let verify = &v[2]["results"][0];
    let cleaned = verify["cleaned_at"].is_u64() && verify["cops"] == 2;
    let rank = v[3]["results"][0]["rank"].as_u64();
    let pass = n == 13 && number == Some(2) && one == Some("ROBBER") && cleaned && rank == Some(2);
    t.report(
        3,
        pass,
        start,
        format!(
            "rank-2 spider on {n} vertices: c_1={number:?}, 1 cop {one:?}, 2-cop script cleaned_at={}, rank={rank:?}",
            verify["cleaned_at"]
        ),
    );
    runs
}

// ---- criterion 4

fn tree_recipes() -> Vec<String> {
    (0..100u64)
        .map(|seed| format!("randtree:n={},seed={seed}", 5 + seed % 10))
        .collect()
}

fn criterion_4_runs(workers: usize) -> Vec<String> {
    let recipes = tree_recipes();
    let mut out = Vec::new();
    for ell in [1, 2] {
        out.push(cli_text(&args(
            &format!("solve --ell {ell} --variant capture"),
            &recipes,
            workers,
        )));
        out.push(cli_text(&args(
            &format!("rank --ell {ell}"),
            &recipes,
            workers,
        )));
    }
    out
}

fn criterion_4(t: &mut Tally) -> Vec<String> {
    let start = Instant::now();
    let runs = criterion_4_runs(1);
    let recipes = tree_recipes();
    let mut mismatches = Vec::new();
    let (mut over_levels, mut over_ecc, mut invalid) = (0, 0, 0);
    for (i, ell) in [1u32, 2].into_iter().enumerate() {
        let solved = numbers(&serde_json::from_str(&runs[2 * i]).unwrap());
        let ranked: Value = serde_json::from_str(&runs[2 * i + 1]).unwrap();
        for ((recipe, c), r) in recipes
            .iter()
            .zip(solved)
            .zip(ranked["results"].as_array().unwrap())
        {
            let k = r["rank"].as_u64().unwrap();
            if c != k {
                mismatches.push(format!("{recipe} ell={ell}: solver {c} rank {k}"));
            }
            if r["certificate_valid"] != true {
                invalid += 1;
            }
            if c > r["height_bound"]["levels_reading"].as_u64().unwrap() {
                over_levels += 1;
            }
            if c > r["height_bound"]["eccentricity_reading"].as_u64().unwrap() {
                over_ecc += 1;
            }
        }
    }
    t.report(
        4,
        mismatches.is_empty() && over_levels == 0 && invalid == 0,
        start,
        format!(
            "{} trees x ell 1,2: {} rank mismatches {:?}, {invalid} invalid certificates, rooted-height bound exceeded {over_levels} times (eccentricity reading exceeded {over_ecc} times, reported only)",
            recipes.len(),
            mismatches.len(),
            mismatches
        ),
    );
    runs
}

// ---- criterion 5

fn criterion_5(t: &mut Tally) {
    let start = Instant::now();
    let (mut graphs, mut unequal, mut pursuit_fail, mut match_fail, mut configs) = (0, 0, 0, 0, 0);
    for seed in 0..50u64 {
        let n = 4 + (seed as usize % 7);
        let g = Recipe::RandomChordal { n, seed }.generate().unwrap().graph;
        let peo = chordal_peo(&g).expect("generator makes chordal graphs");
        graphs += 1;
        for ell in [1u32, 2] {
            let c = cop_number(&g, ell, Variant::Capture, DEFAULT_BUDGET).unwrap();
            let s = cop_number(&g, ell, Variant::See, DEFAULT_BUDGET).unwrap();
            if c != s {
                unequal += 1;
            }
            // every robber, so in particular the optimal one
            let check = verify_chordal_pursuit(&g, &peo, ell).unwrap();
            configs += check.configurations;
            if !check.captures || check.lost_sight {
                pursuit_fail += 1;
            }
            // full match: optimal seeing play, then one pursuer, against the
            // robber that is optimal for the capture game with s cops
            let see = solve_full(
                &g,
                &GameSpec::new(&g, ell, s, Variant::See).unwrap(),
                DEFAULT_BUDGET,
            )
            .unwrap();
            let mut cops = SeeThenPursue::new(&g, &peo, ell, see).unwrap();
            let spec = GameSpec::new(&g, ell, s, Variant::Capture).unwrap();
            let mut robber = solve_full(&g, &spec, DEFAULT_BUDGET).unwrap();
            let trace = play_match(&g, &spec, &mut cops, &mut robber, 4 * g.n() + 10).unwrap();
            if !matches!(trace.outcome, Outcome::Captured) {
                match_fail += 1;
            }
        }
    }
    t.report(
        5,
        unequal == 0 && pursuit_fail == 0 && match_fail == 0,
        start,
        format!(
            "{graphs} chordal graphs x ell 1,2: {unequal} with see != capture, pursuit failed in {pursuit_fail} ({configs} first-sight configurations), {match_fail} matches not captured"
        ),
    );
}

// ---- criterion 6

fn criterion_6(t: &mut Tally) {
    let start = Instant::now();
    let r = vec!["subdivided:3,3".to_string()];
    let two = cli(&args("verify --ell 1 --script tell_2cop", &r, 1));
    let three = cli(&args("verify --ell 1 --script tell_3cop", &r, 1));
    let two = &two["results"][0];
    let three = &three["results"][0];
    let n = Recipe::SubdividedBinary {
        depth: 3,
        subdivisions: 3,
    }
    .generate()
    .unwrap();
    let b = n.annotations.get("b").copied().unwrap_or(4);
    let g = n.graph;
    let at_b = two["recontamination"]
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["vertex"].as_u64() == Some(b as u64));
    let scripts_ok = two["cleaned"] == true
        && two["monotone"] == false
        && at_b
        && three["cleaned"] == true
        && three["monotone"] == true;

    let spec = GameSpec::new(&g, 1, 2, Variant::MonotoneCapture).unwrap();
    let solver = solve(&g, &spec, DEFAULT_BUDGET).unwrap();
    let solver_ok = solver.winner != Winner::Cops;

    let search = match find_cleaning_script(&g, 1, 2, true, 10_000_000) {
        Ok(res) if res.script.is_none() => {
            format!("no monotone 2-cop script ({} states)", res.states)
        }
        Ok(_) => "FOUND a monotone 2-cop script".to_string(),
        Err(Error::BudgetExceeded { budget }) => format!("INCONCLUSIVE at budget {budget}"),
        Err(e) => format!("error {e}"),
    };
    let search_ok = !search.starts_with("FOUND") && !search.starts_with("error");
    t.report(
        6,
        scripts_ok && solver_ok && search_ok,
        start,
        format!(
            "{} vertices: 2-cop script cleaned={} monotone={} recontaminates b={b}: {at_b}; 3-cop cleaned={} monotone={}; monotone 2-cop solve {:?} ({} states); script search: {search}",
            g.n(),
            two["cleaned"],
            two["monotone"],
            three["cleaned"],
            three["monotone"],
            solver.winner,
            solver.stats.states
        ),
    );
}

// ---- criterion 7

fn criterion_7(t: &mut Tally) {
    let start = Instant::now();
    let mut violations = Vec::new();
    let (mut graphs, mut gaps) = (0, 0);
    for seed in 0..100u64 {
        let n = 3 + (seed as usize % 6);
        let g = connected(n, [0.2, 0.35, 0.5][seed as usize % 3], seed);
        graphs += 1;
        let c = cop_number(&g, 0, Variant::Classical, DEFAULT_BUDGET).unwrap();
        let c2 = cop_number(&g, 2, Variant::Capture, DEFAULT_BUDGET).unwrap();
        let s2 = cop_number(&g, 2, Variant::See, DEFAULT_BUDGET).unwrap();
        if s2 != c2 {
            gaps += 1;
            if !(c <= c2 && c2 <= c + 1) {
                violations.push(format!("seed {seed}: c={c} c_2={c2} c'_2={s2}"));
            }
        }
    }
    t.report(
        7,
        violations.is_empty(),
        start,
        format!(
            "{graphs} graphs at ell=2: {gaps} with see != capture, {} violations {violations:?}",
            violations.len()
        ),
    );
}

// ---- criterion 8

fn criterion_8(t: &mut Tally) {
    let start = Instant::now();
    let (mut graphs, mut cut_checks, mut vacuous) = (0, 0, 0);
    let mut violations = Vec::new();
    for seed in 0..200u64 {
        let n = 3 + (seed as usize % 7);
        let g = connected(n, [0.15, 0.25, 0.4][seed as usize % 3], 1000 + seed);
        graphs += 1;
        let p = profile(&g, &ProfileOptions::default()).unwrap();
        for v in &p.violations {
            violations.push(format!("seed {seed}: {} {}", v.rule, v.detail));
        }
        // the zero-visibility number opens the capture chain
        if p.entries.first().map(|e| e.capture) != Some(p.zero_visibility) {
            violations.push(format!(
                "seed {seed}: capture at ell=0 differs from zero visibility"
            ));
        }
        for e in &p.entries {
            if e.ell >= 1 && e.domination != k_domination_number(&g, e.ell) {
                violations.push(format!("seed {seed}: domination mismatch"));
            }
        }
        if p.entry(p.radius).map(|e| e.see) != Some(1) {
            violations.push(format!("seed {seed}: seeing number at the radius is not 1"));
        }
        for b in &p.cut_bounds {
            match b.bound {
                Some(_) => cut_checks += 1,
                None => vacuous += 1,
            }
        }
    }
    t.report(
        8,
        violations.is_empty(),
        start,
        format!(
            "{graphs} graphs: {} chain violations {violations:?}; cut-vertex bound checked {cut_checks} times, {vacuous} cases where the ball covers the graph reported separately",
            violations.len()
        ),
    );
}

// ---- criterion 9

fn criterion_9(t: &mut Tally) {
    let start = Instant::now();
    let v = cli(&[
        "witness".into(),
        "--max-n".into(),
        "8".into(),
        "--max-candidates".into(),
        "100000".into(),
        "--ell".into(),
        "1".into(),
        "--format".into(),
        "structured".into(),
    ]);
    let r = &v["results"][0];
    let nums = &r["numbers"];
    let pass = r["found"] == true
        && r["graph"]["n"].as_u64().is_some_and(|n| n <= 8)
        && nums["classical"] == 1
        && nums["see"] == 1
        && nums["capture"] == 2;
    t.report(
        9,
        pass,
        start,
        format!(
            "witness at candidate {} on {} vertices: c={} c'_1={} c_1={}",
            r["found_at"], r["graph"]["n"], nums["classical"], nums["see"], nums["capture"]
        ),
    );
}

// ---- criterion 10

fn criterion_10(t: &mut Tally) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut pairs, mut tries) = (0, 0);
    let mut violations = Vec::new();
    let mut seed = 0u64;
    while pairs < 30 && tries < 5000 {
        tries += 1;
        seed += 1;
        let n = 4 + (seed as usize % 6);
        let g = connected(n, 0.3, 5000 + seed);
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut rng);
        let keep = 2 + (seed as usize % (n - 2));
        let image = VertexSet::from_iter(n, verts[..keep].iter().copied());
        let Some(f) = find_retraction(&g, &image) else {
            continue;
        };
        assert!(image.iter().all(|v| f[v] == v));
        let h = g.induced(&image.to_vec());
        if !h.is_connected() {
            continue;
        }
        pairs += 1;
        for ell in [1u32, 2] {
            for variant in [Variant::Capture, Variant::See] {
                let ch = cop_number(&h, ell, variant, DEFAULT_BUDGET).unwrap();
                let cg = cop_number(&g, ell, variant, DEFAULT_BUDGET).unwrap();
                if ch > cg {
                    violations.push(format!("seed {seed} {variant} ell={ell}: H {ch} > G {cg}"));
                }
            }
        }
    }
    t.report(
        10,
        pairs >= 20 && violations.is_empty(),
        start,
        format!(
            "{pairs} retract pairs: {} violations {violations:?}",
            violations.len()
        ),
    );
}

// ---- criterion 11

fn all_connected(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

fn criterion_11(t: &mut Tally) {
    let start = Instant::now();
    let (mut graphs, mut flags) = (0, 0);
    let mut violations = Vec::new();
    for n in 1..=5 {
        for g in all_connected(n) {
            graphs += 1;
            let c = cop_number(&g, 0, Variant::Classical, DEFAULT_BUDGET).unwrap();
            let ct = cop_number(&g, 0, Variant::TimeDelayed, DEFAULT_BUDGET).unwrap();
            if ct < c {
                violations.push(format!("{:?}: c_t={ct} < c={c}", g.edges()));
            }
            if ct > k_domination_number(&g, 1) {
                flags += 1;
                if flags <= 3 {
                    println!(
                        "     flag: time-delayed number {ct} exceeds domination on edges {:?}",
                        g.edges()
                    );
                }
            }
        }
    }
    t.report(
        11,
        violations.is_empty(),
        start,
        format!(
            "{graphs} labeled connected graphs n<=5: {} with c_t < c, {flags} flagged with c_t above the domination number",
            violations.len()
        ),
    );
}

// ---- criterion 12

fn criterion_12(t: &mut Tally, one: &[String], three: &[String], four: &[String]) {
    let start = Instant::now();
    let same =
        |a: &[String], b: &[String]| a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y);
    let r1 = same(one, &criterion_1_runs(4));
    let r3 = same(three, &criterion_3_runs(4));
    let r4 = same(four, &criterion_4_runs(4));
    t.report(
        12,
        r1 && r3 && r4,
        start,
        format!(
            "structured output identical with 1 and 4 workers: criterion 1 {r1}, 3 {r3}, 4 {r4}"
        ),
    );
}

fn main() {
    // answer the listing probe that `cargo test -- --list` sends
    let argv: Vec<String> = std::env::args().collect();
    if argv.iter().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let mut t = Tally { failed: Vec::new() };
    let one = criterion_1(&mut t);
    criterion_2(&mut t);
    let three = criterion_3(&mut t);
    let four = criterion_4(&mut t);
    criterion_5(&mut t);
    criterion_6(&mut t);
    criterion_7(&mut t);
    criterion_8(&mut t);
    criterion_9(&mut t);
    criterion_10(&mut t);
    criterion_11(&mut t);
    criterion_12(&mut t, &one, &three, &four);
    if t.failed.is_empty() {
        println!("acceptance: all 12 criteria pass");
    } else {
        println!("acceptance: failed {:?}", t.failed);
        std::process::exit(1);
    }
}
