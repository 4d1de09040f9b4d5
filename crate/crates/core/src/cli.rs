//! Command-line surface: argument definitions and command execution.
//! Structured output is `{"command": ..., "results": [...]}` with one
//! result per input graph; every result carries the graph hash.

use crate::batch::par_map;
use crate::engine::{
    play_match, simulate_script, Concrete, CopPolicy, FleeWalker, GameSpec, RandomWalker,
    RobberPolicy, Script, Variant,
};
use crate::error::{Error, Result};
use crate::families::{random_copwin, Generated, Recipe};
use crate::graph::{
    chordal_peo, copwin_ordering, k_domination_number, parse_graph, Graph, GraphFile,
};
use crate::solver::{
    cop_number, profile, solve, solve_full, ProfileOptions, Winner, DEFAULT_BUDGET,
};
use crate::strategies::{
    find_cleaning_script, rank_cleaning_script, t_ell_scripts, t_family_script,
    tree_one_visibility_script, SeeThenPursue, ShadowCapture,
};
use crate::treerank;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "copvis",
    version,
    about = "Cops and Robber with limited visibility: solve, profile, verify and simulate"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// State budget for each solve.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Worker threads for batches of graphs or witness candidates.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Seed for random robbers and witness candidates.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "json")]
    Structured,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Input {
    /// Graph file: "n m" then one "u v" line per edge, or {"n":..,"edges":[[u,v],..]}.
    #[arg(long, conflicts_with = "recipe")]
    pub graph: Option<PathBuf>,
    /// Generator recipe such as cycle:6 or tfamily:k=2,ell=1; repeat for a batch.
    #[arg(long)]
    pub recipe: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CopKind {
    /// Optimal policy extracted from the solved game.
    Solver,
    /// Optimal seeing policy, then one cop pursues (chordal graphs).
    Pursuit,
    /// Seeing policy, then shadow tracking with a classical team (ℓ >= 2).
    Shadow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RobberKind {
    /// Delays capture as long as possible against any cop play.
    Optimal,
    /// Keeps away from the nearest cop.
    Flee,
    /// Uniformly random moves from the seed.
    Random,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit a generated graph with its annotations.
    Generate {
        #[arg(long)]
        recipe: String,
    },
    /// Metrics, recognitions, cuts, domination numbers and tree rank.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Decide a game for a cop count, or find the least winning count.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        ell: u32,
        #[arg(long)]
        cops: Option<usize>,
        #[arg(long, default_value = "capture")]
        variant: Variant,
        /// Write the cop policy table (JSON) here; needs --cops.
        #[arg(long, requires = "cops")]
        policy: Option<PathBuf>,
    },
    /// Every cop number across visibility radii, with the inequality checks.
    Profile {
        #[command(flatten)]
        input: Input,
        /// Radii to evaluate (default 0 through the diameter).
        #[arg(long, value_delimiter = ',')]
        ells: Option<Vec<u32>>,
        #[arg(long)]
        monotone: bool,
        #[arg(long)]
        delayed: bool,
    },
    /// Tree rank with its certificate and the height bounds.
    Rank {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        ell: u32,
    },
    /// Simulate a cleaning script and report how the unseen territory evolves.
    Verify {
        #[command(flatten)]
        input: Input,
        /// tell_2cop, tell_3cop, tree1vis, tfamily, rank, search, or a script file.
        #[arg(long)]
        script: String,
        #[arg(long, default_value_t = 1)]
        ell: u32,
        #[arg(long, default_value = "see")]
        variant: Variant,
        /// Cop count for `search`.
        #[arg(long)]
        cops: Option<usize>,
        /// Restrict `search` to scripts whose territory never grows.
        #[arg(long)]
        monotone: bool,
        /// Save the script that was simulated.
        #[arg(long)]
        save_script: Option<PathBuf>,
        /// Include the per-round territory snapshots.
        #[arg(long)]
        rounds: bool,
    },
    /// Play a cop policy against a robber.
    Simulate {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        ell: u32,
        #[arg(long, default_value = "capture")]
        variant: Variant,
        /// Cop count (default: the least that wins).
        #[arg(long)]
        cops: Option<usize>,
        #[arg(long, value_enum, default_value_t = CopKind::Solver)]
        cop: CopKind,
        #[arg(long, value_enum, default_value_t = RobberKind::Optimal)]
        robber: RobberKind,
        #[arg(long, default_value_t = 500)]
        max_rounds: usize,
    },
    /// Search random cop-win graphs for one where one cop sees the robber
    /// but two are needed to capture it.
    Witness {
        /// Vertex count of the candidates.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 100_000)]
        max_candidates: usize,
        #[arg(long, default_value_t = 1)]
        ell: u32,
    },
}

/// Result of running one command.
#[derive(Debug)]
pub struct Report {
    /// 0 on success, 1 on input errors, 2 when a budget ran out.
    pub code: i32,
    pub text: String,
    pub structured: Value,
    pub error: Option<String>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Structured => {
                let mut s =
                    serde_json::to_string_pretty(&self.structured).expect("values serialize");
                s.push('\n');
                s
            }
        }
    }
}

struct Item {
    text: String,
    value: Value,
    inconclusive: bool,
}

impl Item {
    fn new(text: String, value: Value) -> Item {
        Item {
            text,
            value,
            inconclusive: false,
        }
    }
}

struct Source {
    name: String,
    graph: Graph,
    generated: Option<Generated>,
}

fn load(input: &Input) -> Result<Vec<Source>> {
    if let Some(path) = &input.graph {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        return Ok(vec![Source {
            name: path.display().to_string(),
            graph: parse_graph(&text)?,
            generated: None,
        }]);
    }
    if input.recipe.is_empty() {
        return Err(Error::Parse("give --graph FILE or --recipe RECIPE".into()));
    }
    input
        .recipe
        .iter()
        .map(|r| {
            let gen = r.parse::<Recipe>()?.generate()?;
            Ok(Source {
                name: r.clone(),
                graph: gen.graph.clone(),
                generated: Some(gen),
            })
        })
        .collect()
}

fn header(src: &Source) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("source".into(), json!(src.name));
    m.insert("graph_hash".into(), json!(src.graph.hash()));
    m
}

fn with(mut base: serde_json::Map<String, Value>, extra: Value) -> Value {
    if let Value::Object(e) = extra {
        base.extend(e);
    }
    Value::Object(base)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> std::result::Result<(Cli, Report), clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    let report = execute(&cli);
    Ok((cli, report))
}

pub fn execute(cli: &Cli) -> Report {
    let name = match &cli.command {
        Command::Generate { .. } => "generate",
        Command::Analyze { .. } => "analyze",
        Command::Solve { .. } => "solve",
        Command::Profile { .. } => "profile",
        Command::Rank { .. } => "rank",
        Command::Verify { .. } => "verify",
        Command::Simulate { .. } => "simulate",
        Command::Witness { .. } => "witness",
    };
    match dispatch(cli) {
        Ok(items) => {
            let code = if items.iter().any(|i| i.inconclusive) {
                2
            } else {
                0
            };
            let text: String = items.iter().map(|i| i.text.as_str()).collect();
            let results: Vec<Value> = items.into_iter().map(|i| i.value).collect();
            Report {
                code,
                text,
                structured: json!({ "command": name, "results": results }),
                error: None,
            }
        }
        Err(e) => {
            let code = if matches!(e, Error::BudgetExceeded { .. }) {
                2
            } else {
                1
            };
            Report {
                code,
                text: String::new(),
                structured: json!({ "command": name, "error": e.to_string() }),
                error: Some(e.to_string()),
            }
        }
    }
}

fn batch<F>(cli: &Cli, input: &Input, f: F) -> Result<Vec<Item>>
where
    F: Fn(&Source) -> Result<Item> + Sync + Send,
{
    let sources = load(input)?;
    par_map(cli.workers, &sources, |s| f(s))
        .into_iter()
        .collect()
}

fn dispatch(cli: &Cli) -> Result<Vec<Item>> {
    let budget = cli.budget;
    match &cli.command {
        Command::Generate { recipe } => Ok(vec![generate(recipe)?]),
        Command::Analyze { input } => batch(cli, input, analyze),
        Command::Solve {
            input,
            ell,
            cops,
            variant,
            policy,
        } => {
            if policy.is_some() && input.recipe.len() > 1 {
                return Err(Error::Parse("--policy takes a single graph".into()));
            }
            batch(cli, input, |s| {
                solve_one(s, *ell, *cops, *variant, policy.as_ref(), budget)
            })
        }
        Command::Profile {
            input,
            ells,
            monotone,
            delayed,
        } => {
            let opts = ProfileOptions {
                ells: ells.clone(),
                monotone: *monotone,
                delayed: *delayed,
                budget,
            };
            batch(cli, input, |s| profile_one(s, &opts))
        }
        Command::Rank { input, ell } => batch(cli, input, |s| rank_one(s, *ell)),
        Command::Verify {
            input,
            script,
            ell,
            variant,
            cops,
            monotone,
            save_script,
            rounds,
        } => {
            let sources = load(input)?;
            let opts = VerifyOpts {
                script,
                ell: *ell,
                variant: *variant,
                cops: *cops,
                monotone: *monotone,
                rounds: *rounds,
                budget,
            };
            let mut out = Vec::new();
            for s in &sources {
                let (item, sc) = verify_one(s, &opts)?;
                if let (Some(path), Some(sc)) = (save_script, sc) {
                    std::fs::write(path, sc.to_text())?;
                }
                out.push(item);
            }
            Ok(out)
        }
        Command::Simulate {
            input,
            ell,
            variant,
            cops,
            cop,
            robber,
            max_rounds,
        } => {
            let sources = load(input)?;
            sources
                .iter()
                .map(|s| {
                    simulate_one(
                        s,
                        *ell,
                        *variant,
                        *cops,
                        *cop,
                        *robber,
                        *max_rounds,
                        cli.seed,
                        budget,
                    )
                })
                .collect()
        }
        Command::Witness {
            max_n,
            max_candidates,
            ell,
        } => Ok(vec![witness(
            *max_n,
            *max_candidates,
            *ell,
            cli.seed,
            cli.workers,
            budget,
        )?]),
    }
}

fn generate(recipe: &str) -> Result<Item> {
    let gen = recipe.parse::<Recipe>()?.generate()?;
    let mut text = format!("# recipe {recipe}\n");
    for (k, v) in &gen.annotations {
        let _ = writeln!(text, "# {k} {v}");
    }
    text.push_str(&gen.graph.to_text());
    let value = json!({
        "source": recipe,
        "graph_hash": gen.graph.hash(),
        "graph": GraphFile::from(&gen.graph),
        "annotations": gen.annotations,
        "certificate": gen.certificate,
    });
    Ok(Item::new(text, value))
}

fn analyze(src: &Source) -> Result<Item> {
    let g = &src.graph;
    let m = g.metrics()?;
    let chordal = chordal_peo(g).is_ok();
    let copwin = copwin_ordering(g).is_ok();
    let domination: Vec<usize> = (1..=m.diameter.max(1))
        .map(|k| k_domination_number(g, k))
        .collect();
    let ranks: Option<Vec<usize>> = if g.is_tree() {
        Some(
            [1, 2]
                .iter()
                .map(|&l| treerank::rank(g, l).map(|c| c.k))
                .collect::<Result<_>>()?,
        )
    } else {
        None
    };
    let mut text = format!(
        "{}: n={} m={} radius={} diameter={} center={:?}\n  tree={} chordal={chordal} copwin={copwin}\n  cut vertices {:?}\n  domination by radius 1.. {:?}\n",
        src.name,
        g.n(),
        g.edge_count(),
        m.radius,
        m.diameter,
        m.center,
        g.is_tree(),
        g.cut_vertices(),
        domination
    );
    if let Some(r) = &ranks {
        let _ = writeln!(text, "  tree rank for ell=1,2: {r:?}");
    }
    let value = with(
        header(src),
        json!({
            "n": g.n(),
            "m": g.edge_count(),
            "metrics": m,
            "tree": g.is_tree(),
            "chordal": chordal,
            "copwin": copwin,
            "cut_vertices": g.cut_vertices(),
            "cut_edges": g.cut_edges(),
            "domination": domination,
            "tree_rank": ranks,
        }),
    );
    Ok(Item::new(text, value))
}

fn solve_one(
    src: &Source,
    ell: u32,
    cops: Option<usize>,
    variant: Variant,
    policy: Option<&PathBuf>,
    budget: usize,
) -> Result<Item> {
    let g = &src.graph;
    match cops {
        Some(k) => {
            let spec = GameSpec::new(g, ell, k, variant)?;
            let outcome = if let Some(path) = policy {
                let sol = solve_full(g, &spec, budget)?;
                let table = json!({
                    "graph_hash": g.hash(),
                    "spec": spec,
                    "policy": sol.cop_policy_table(),
                });
                std::fs::write(
                    path,
                    serde_json::to_string_pretty(&table).expect("serializes"),
                )?;
                sol.outcome(budget)
            } else {
                solve(g, &spec, budget)?
            };
            let text = format!(
                "{}: {} ell={} cops={k}: {:?}{} ({} states)\n",
                src.name,
                variant,
                spec.ell,
                outcome.winner,
                outcome
                    .rounds
                    .map(|r| format!(" in {r} rounds"))
                    .unwrap_or_default(),
                outcome.stats.states
            );
            let value = with(
                header(src),
                json!({
                    "spec": spec,
                    "winner": outcome.winner,
                    "rounds": outcome.rounds,
                    "states": outcome.stats.states,
                    "budget": budget,
                }),
            );
            Ok(Item {
                text,
                value,
                inconclusive: outcome.winner == Winner::Inconclusive,
            })
        }
        None => {
            let spec = GameSpec::new(g, ell, 1, variant)?;
            let (number, inconclusive) = match cop_number(g, ell, variant, budget) {
                Ok(k) => (Some(k), false),
                Err(Error::BudgetExceeded { .. }) => (None, true),
                Err(e) => return Err(e),
            };
            let text = match number {
                Some(k) => format!("{}: {} ell={} number {k}\n", src.name, variant, spec.ell),
                None => format!(
                    "{}: {} ell={} INCONCLUSIVE (budget {budget})\n",
                    src.name, variant, spec.ell
                ),
            };
            let value = with(
                header(src),
                json!({
                    "spec": { "ell": spec.ell, "variant": variant },
                    "winner": if inconclusive { Winner::Inconclusive } else { Winner::Cops },
                    "number": number,
                    "budget": budget,
                }),
            );
            Ok(Item {
                text,
                value,
                inconclusive,
            })
        }
    }
}

fn profile_one(src: &Source, opts: &ProfileOptions) -> Result<Item> {
    let p = profile(&src.graph, opts)?;
    let mut text = format!(
        "{}: n={} radius={} diameter={} classical={} zero-visibility={} gamma={}\n",
        src.name, p.n, p.radius, p.diameter, p.classical, p.zero_visibility, p.gamma
    );
    text.push_str("  ell capture see monotone domination\n");
    for e in &p.entries {
        let mono = e.monotone.map_or("-".to_string(), |m| m.to_string());
        let _ = writeln!(
            text,
            "  {:>3} {:>7} {:>3} {:>8} {:>10}",
            e.ell, e.capture, e.see, mono, e.domination
        );
    }
    if let Some(t) = p.time_delayed {
        let _ = writeln!(text, "  time-delayed {t}");
    }
    for v in &p.violations {
        let _ = writeln!(text, "  VIOLATION {}: {}", v.rule, v.detail);
    }
    for f in &p.flags {
        let _ = writeln!(text, "  flag: {f}");
    }
    Ok(Item::new(text, with(header(src), json!({ "profile": p }))))
}

fn rank_one(src: &Source, ell: u32) -> Result<Item> {
    let g = &src.graph;
    let cert = treerank::rank(g, ell)?;
    let bound = treerank::height_bound(g, ell)?;
    let valid = treerank::verify_certificate(g, ell, &cert);
    let text = format!(
        "{}: rank {} at ell={ell} (hub {}), height bounds {} / {}\n",
        src.name, cert.k, cert.q, bound.eccentricity_reading, bound.levels_reading
    );
    let value = with(
        header(src),
        json!({
            "ell": ell,
            "rank": cert.k,
            "certificate": cert,
            "certificate_valid": valid,
            "height_bound": bound,
        }),
    );
    Ok(Item::new(text, value))
}

struct VerifyOpts<'a> {
    script: &'a str,
    ell: u32,
    variant: Variant,
    cops: Option<usize>,
    monotone: bool,
    rounds: bool,
    budget: usize,
}

fn build_script(src: &Source, o: &VerifyOpts) -> Result<Option<Script>> {
    let g = &src.graph;
    Ok(Some(match o.script {
        "tell_2cop" => t_ell_scripts(g, o.ell)?.two_cop,
        "tell_3cop" => t_ell_scripts(g, o.ell)?.three_cop_monotone,
        "tree1vis" => tree_one_visibility_script(g)?,
        "tfamily" => {
            let cert = match src.generated.as_ref().and_then(|x| x.certificate.clone()) {
                Some(c) => c,
                None => treerank::rank(g, o.ell)?,
            };
            t_family_script(g, o.ell, Some(&cert))?
        }
        "rank" => rank_cleaning_script(g, o.ell)?,
        "search" => {
            let k = o.cops.unwrap_or(1);
            return Ok(find_cleaning_script(g, o.ell, k, o.monotone, o.budget)?.script);
        }
        path => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            Script::parse(&text)?
        }
    }))
}

fn verify_one(src: &Source, o: &VerifyOpts) -> Result<(Item, Option<Script>)> {
    let g = &src.graph;
    let script = match build_script(src, o) {
        Ok(s) => s,
        Err(Error::BudgetExceeded { budget }) => {
            let text = format!(
                "{}: {} INCONCLUSIVE (budget {budget})\n",
                src.name, o.script
            );
            let value = with(
                header(src),
                json!({ "script": o.script, "found": null, "budget": budget }),
            );
            return Ok((
                Item {
                    text,
                    value,
                    inconclusive: true,
                },
                None,
            ));
        }
        Err(e) => return Err(e),
    };
    let Some(script) = script else {
        let text = format!(
            "{}: no {}-cop script exists\n",
            src.name,
            o.cops.unwrap_or(1)
        );
        let value = with(
            header(src),
            json!({ "script": o.script, "found": false, "cops": o.cops.unwrap_or(1), "monotone_only": o.monotone }),
        );
        return Ok((Item::new(text, value), None));
    };
    let spec = GameSpec::new(g, o.ell, script.cops(), o.variant)?;
    let report = simulate_script(g, &spec, &script)?;
    let cleaned = report.seen_guaranteed_at.is_some();
    let mut text = format!(
        "{}: script {} with {} cops, {} rounds: cleaned={cleaned}",
        src.name,
        o.script,
        script.cops(),
        script.rounds()
    );
    if let Some(t) = report.seen_guaranteed_at {
        let _ = write!(text, " at round {t}");
    }
    let _ = writeln!(text, ", monotone={}", report.monotone);
    for e in &report.recontamination {
        let _ = writeln!(text, "  recontaminated {} at round {}", e.vertex, e.round);
    }
    let mut extra = json!({
        "script": o.script,
        "found": true,
        "spec": spec,
        "cops": script.cops(),
        "script_rounds": script.rounds(),
        "cleaned": cleaned,
        "seen_guaranteed_at": report.seen_guaranteed_at,
        "cleaned_at": report.cleaned_at,
        "monotone": report.monotone,
        "recontamination": report.recontamination,
    });
    if o.rounds {
        extra["rounds"] = json!(report.rounds);
        for r in &report.rounds {
            let _ = writeln!(
                text,
                "  round {:>3} cops {:?} unseen {:?}",
                r.round, r.cops, r.after_cops
            );
        }
    }
    Ok((Item::new(text, with(header(src), extra)), Some(script)))
}

#[allow(clippy::too_many_arguments)]
fn simulate_one(
    src: &Source,
    ell: u32,
    variant: Variant,
    cops: Option<usize>,
    cop: CopKind,
    robber: RobberKind,
    max_rounds: usize,
    seed: u64,
    budget: usize,
) -> Result<Item> {
    let g = &src.graph;
    let mut policy: Box<dyn CopPolicy> = match cop {
        CopKind::Solver => {
            let k = match cops {
                Some(k) => k,
                None => cop_number(g, ell, variant, budget)?,
            };
            Box::new(solve_full(g, &GameSpec::new(g, ell, k, variant)?, budget)?)
        }
        CopKind::Pursuit => {
            let peo = chordal_peo(g)?;
            let k = match cops {
                Some(k) => k,
                None => cop_number(g, ell, Variant::See, budget)?,
            };
            let see = solve_full(g, &GameSpec::new(g, ell, k, Variant::See)?, budget)?;
            Box::new(SeeThenPursue::new(g, &peo, ell, see)?)
        }
        CopKind::Shadow => Box::new(ShadowCapture::new(g, ell, budget)?),
    };
    let k = match (cop, cops) {
        (CopKind::Shadow, _) => ShadowCapture::new(g, ell, budget)?.cops(),
        (_, Some(k)) => k,
        (CopKind::Solver, None) => cop_number(g, ell, variant, budget)?,
        (CopKind::Pursuit, None) => cop_number(g, ell, Variant::See, budget)?,
    };
    let spec = GameSpec::new(g, ell, k, variant)?;
    let mut adversary: Box<dyn RobberPolicy> = match robber {
        RobberKind::Optimal => Box::new(solve_full(g, &spec, budget)?),
        RobberKind::Flee => Box::new(Concrete::new(FleeWalker)),
        RobberKind::Random => Box::new(Concrete::new(RandomWalker::seeded(seed))),
    };
    let trace = play_match(g, &spec, policy.as_mut(), adversary.as_mut(), max_rounds)?;
    let mut text = format!(
        "{}: {:?} cops ({k}) vs {:?} robber, {} ell={}: {:?} after {} rounds\n",
        src.name, cop, robber, variant, spec.ell, trace.outcome, trace.rounds
    );
    for s in &trace.steps {
        let _ = writeln!(
            text,
            "  round {:>3} {:<9} cops {:?} robber {}",
            s.round,
            format!("{:?}", s.half).to_lowercase(),
            s.cops,
            s.robber.map_or("?".to_string(), |r| r.to_string())
        );
    }
    let value = with(
        header(src),
        json!({
            "spec": spec,
            "cop": format!("{cop:?}").to_lowercase(),
            "robber": format!("{robber:?}").to_lowercase(),
            "outcome": trace.outcome,
            "rounds": trace.rounds,
            "steps": trace.steps,
        }),
    );
    Ok(Item::new(text, value))
}

/// Numbers checked for a witness candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct WitnessNumbers {
    pub classical: usize,
    pub see: usize,
    pub capture: usize,
}

/// Cop-win graph where one cop sees the robber with visibility `ell` but
/// capture needs exactly two.
pub fn seeing_gap(g: &Graph, ell: u32, budget: usize) -> Result<Option<WitnessNumbers>> {
    let classical = cop_number(g, 0, Variant::Classical, budget)?;
    if classical != 1 {
        return Ok(None);
    }
    let see = cop_number(g, ell, Variant::See, budget)?;
    if see != 1 {
        return Ok(None);
    }
    let capture = cop_number(g, ell, Variant::Capture, budget)?;
    Ok((capture == 2).then_some(WitnessNumbers {
        classical,
        see,
        capture,
    }))
}

/// Candidate `i` of the witness stream: a random cop-win graph on `max_n`
/// vertices that is not chordal and has no dominating vertex. Chordal
/// graphs have equal seeing and capture numbers and a dominating vertex
/// gives capture with one cop, so neither can be a witness.
/// Below 6 vertices no graph passes the filter and the raw sample is used.
pub fn witness_candidate(i: usize, max_n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(
        seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(i as u64),
    );
    loop {
        let p = rng.gen_range(0.3..0.9);
        let g = random_copwin(max_n, p, &mut rng);
        if max_n < 6 || (chordal_peo(&g).is_err() && k_domination_number(&g, 1) > 1) {
            return g;
        }
    }
}

fn witness(
    max_n: usize,
    max_candidates: usize,
    ell: u32,
    seed: u64,
    workers: usize,
    budget: usize,
) -> Result<Item> {
    const CHUNK: usize = 64;
    let mut inconclusive = 0;
    let mut start = 0;
    while start < max_candidates {
        let idx: Vec<usize> = (start..(start + CHUNK).min(max_candidates)).collect();
        let results = par_map(workers, &idx, |&i| {
            let g = witness_candidate(i, max_n, seed);
            (seeing_gap(&g, ell, budget), g)
        });
        for (i, r) in idx.iter().zip(results) {
            let (verdict, g) = r;
            match verdict {
                Ok(Some(nums)) => {
                    let text = format!(
                        "witness found at candidate {i}: n={} edges {:?}\n  classical={} see={} capture={}\n",
                        g.n(),
                        g.edges(),
                        nums.classical,
                        nums.see,
                        nums.capture
                    );
                    let value = json!({
                        "found": true,
                        "found_at": i,
                        "examined": i + 1,
                        "inconclusive": inconclusive,
                        "ell": ell,
                        "graph_hash": g.hash(),
                        "graph": GraphFile::from(&g),
                        "numbers": nums,
                    });
                    return Ok(Item::new(text, value));
                }
                Ok(None) => {}
                Err(Error::BudgetExceeded { .. }) => inconclusive += 1,
                Err(e) => return Err(e),
            }
        }
        start += CHUNK;
    }
    let text =
        format!("no witness among {max_candidates} candidates ({inconclusive} inconclusive)\n");
    let value = json!({
        "found": false,
        "examined": max_candidates,
        "inconclusive": inconclusive,
        "ell": ell,
    });
    Ok(Item {
        text,
        value,
        inconclusive: inconclusive > 0,
    })
}
