//! Game semantics over belief states.
//!
//! A round is: cops move (all at once, passes allowed), the cops observe,
//! the robber moves (never onto a cop), the cops observe again. Round 0
//! is the cop placement followed by the robber placement and one
//! observation. The robber is seen whenever some cop is within distance
//! `ell`; captured when a cop lands on him.

use crate::error::{Error, Result};
use crate::graph::{chordal_peo, Graph, VertexSet};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Variant {
    /// Cops win as soon as the robber is seen.
    See,
    /// Cops must capture; they see within `ell`.
    Capture,
    /// Capture, with the post-cop-move unseen territory never allowed to grow.
    MonotoneCapture,
    /// Capture; cops learn the robber's previous vertex at the end of each round.
    TimeDelayed,
    /// Perfect information capture (`ell` raised to the diameter).
    Classical,
    /// Capture with `ell = 0`.
    ZeroVis,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        Ok(match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "see" => Variant::See,
            "capture" => Variant::Capture,
            "monotone" | "monotone_capture" => Variant::MonotoneCapture,
            "time_delayed" | "delayed" => Variant::TimeDelayed,
            "classical" => Variant::Classical,
            "zero_vis" | "zero" => Variant::ZeroVis,
            other => return Err(Error::Parse(format!("unknown variant {other:?}"))),
        })
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Variant::See => "see",
            Variant::Capture => "capture",
            Variant::MonotoneCapture => "monotone_capture",
            Variant::TimeDelayed => "time_delayed",
            Variant::Classical => "classical",
            Variant::ZeroVis => "zero_vis",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameSpec {
    pub ell: u32,
    pub cops: usize,
    pub variant: Variant,
}

impl GameSpec {
    /// Normalizes `ell` for the variants that fix it: classical play uses
    /// at least the diameter, zero visibility uses 0.
    pub fn new(g: &Graph, ell: u32, cops: usize, variant: Variant) -> Result<GameSpec> {
        if cops == 0 {
            return Err(Error::Precondition("at least one cop is required".into()));
        }
        let ell = match variant {
            Variant::Classical => ell.max(g.diameter()),
            Variant::ZeroVis => 0,
            _ => ell,
        };
        Ok(GameSpec { ell, cops, variant })
    }

    pub fn with_cops(self, cops: usize) -> GameSpec {
        GameSpec { cops, ..self }
    }

    pub fn win_on_sight(&self) -> bool {
        self.variant == Variant::See
    }

    pub fn monotone(&self) -> bool {
        self.variant == Variant::MonotoneCapture
    }

    pub fn delayed(&self) -> bool {
        self.variant == Variant::TimeDelayed
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mover {
    Cops,
    Robber,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    /// Robber unseen; he is somewhere in the territory.
    Invisible(VertexSet),
    /// Robber seen at this vertex.
    Visible(usize),
    /// Time-delayed belief: the robber's possible current vertices.
    Delayed(VertexSet),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BeliefState {
    /// Sorted multiset of cop vertices.
    pub cops: Vec<usize>,
    pub phase: Phase,
    /// Monotone play only: the previous post-cop-move unseen territory;
    /// `None` when no constraint is active yet.
    pub snapshot: Option<VertexSet>,
    pub to_move: Mover,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WinKind {
    Captured,
    Seen,
    /// The cops occupy every vertex at placement.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    CopWin {
        kind: WinKind,
        vertex: Option<usize>,
    },
    Continue(BeliefState),
}

pub type BranchSet = Vec<Branch>;

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}

fn seen_or_visible(spec: &GameSpec, v: usize, state: BeliefState) -> Branch {
    if spec.win_on_sight() {
        Branch::CopWin {
            kind: WinKind::Seen,
            vertex: Some(v),
        }
    } else {
        Branch::Continue(state)
    }
}

/// Whether the cops at `from` can reach the multiset `to` in one
/// simultaneous move (each cop passes or steps along an edge).
pub fn cop_step_legal(g: &Graph, from: &[usize], to: &[usize]) -> bool {
    if from.len() != to.len() {
        return false;
    }
    // bipartite matching: old cop i -> new slot j
    let k = from.len();
    let mut slot_owner = vec![usize::MAX; k];
    fn augment(
        g: &Graph,
        i: usize,
        from: &[usize],
        to: &[usize],
        seen: &mut [bool],
        owner: &mut [usize],
    ) -> bool {
        for j in 0..to.len() {
            if seen[j] || (from[i] != to[j] && !g.has_edge(from[i], to[j])) {
                continue;
            }
            seen[j] = true;
            if owner[j] == usize::MAX || augment(g, owner[j], from, to, seen, owner) {
                owner[j] = i;
                return true;
            }
        }
        false
    }
    (0..k).all(|i| augment(g, i, from, to, &mut vec![false; k], &mut slot_owner))
}

fn check_vertices(g: &Graph, vs: &[usize]) -> Result<()> {
    match vs.iter().find(|&&v| v >= g.n()) {
        Some(&v) => Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        }),
        None => Ok(()),
    }
}

/// Robber choices after the cops take up `placement`.
pub fn initial_branches(g: &Graph, spec: &GameSpec, placement: &[usize]) -> Result<BranchSet> {
    if placement.len() != spec.cops {
        return Err(Error::WrongCopCount {
            expected: spec.cops,
            got: placement.len(),
        });
    }
    check_vertices(g, placement)?;
    let cops = sorted(placement);
    let occupied = VertexSet::from_iter(g.n(), cops.iter().copied());
    let free = VertexSet::full(g.n()).difference(&occupied);
    if free.is_empty() {
        return Ok(vec![Branch::CopWin {
            kind: WinKind::Vacuous,
            vertex: None,
        }]);
    }
    let state = |phase| BeliefState {
        cops: cops.clone(),
        phase,
        snapshot: None,
        to_move: Mover::Cops,
    };
    if spec.delayed() {
        return Ok(vec![Branch::Continue(state(Phase::Delayed(free)))]);
    }
    let view = g.ball_of_set(&cops, spec.ell);
    let mut out: BranchSet = free
        .intersection(&view)
        .iter()
        .map(|v| seen_or_visible(spec, v, state(Phase::Visible(v))))
        .collect();
    let unseen = free.difference(&view);
    if !unseen.is_empty() {
        out.push(Branch::Continue(state(Phase::Invisible(unseen))));
    }
    Ok(out)
}

/// The cops move to `new_cops`; returns the robber-to-move branches.
pub fn cop_turn(
    g: &Graph,
    spec: &GameSpec,
    state: &BeliefState,
    new_cops: &[usize],
) -> Result<BranchSet> {
    if state.to_move != Mover::Cops {
        return Err(Error::WrongPhase("cop_turn needs a cops-to-move state"));
    }
    if new_cops.len() != state.cops.len() {
        return Err(Error::WrongCopCount {
            expected: state.cops.len(),
            got: new_cops.len(),
        });
    }
    check_vertices(g, new_cops)?;
    let cops = sorted(new_cops);
    if !cop_step_legal(g, &state.cops, &cops) {
        return Err(Error::IllegalCopStep {
            from: state.cops.clone(),
            to: cops,
        });
    }
    let occupied = VertexSet::from_iter(g.n(), cops.iter().copied());
    let next = |phase, snapshot| BeliefState {
        cops: cops.clone(),
        phase,
        snapshot,
        to_move: Mover::Robber,
    };
    let captured = |v| Branch::CopWin {
        kind: WinKind::Captured,
        vertex: Some(v),
    };
    let mut out = Vec::new();
    match &state.phase {
        Phase::Invisible(t) => {
            let view = g.ball_of_set(&cops, spec.ell);
            let unseen = t.difference(&view);
            if spec.monotone() {
                if let Some(snap) = &state.snapshot {
                    if !unseen.is_subset(snap) {
                        return Err(Error::MonotonicityViolation {
                            gained: unseen.difference(snap).to_vec(),
                        });
                    }
                }
            }
            out.extend(t.intersection(&occupied).iter().map(captured));
            for v in t.intersection(&view).difference(&occupied).iter() {
                out.push(seen_or_visible(spec, v, next(Phase::Visible(v), None)));
            }
            if !unseen.is_empty() {
                let snap = spec.monotone().then(|| unseen.clone());
                out.push(Branch::Continue(next(Phase::Invisible(unseen), snap)));
            }
        }
        Phase::Visible(r) => {
            if occupied.contains(*r) {
                out.push(captured(*r));
            } else {
                out.push(seen_or_visible(spec, *r, next(Phase::Visible(*r), None)));
            }
        }
        Phase::Delayed(b) => {
            out.extend(b.intersection(&occupied).iter().map(captured));
            let rest = b.difference(&occupied);
            if !rest.is_empty() {
                out.push(Branch::Continue(next(Phase::Delayed(rest), None)));
            }
        }
    }
    Ok(out)
}

/// The robber moves; returns the cops-to-move branches.
pub fn robber_turn(g: &Graph, spec: &GameSpec, state: &BeliefState) -> Result<BranchSet> {
    if state.to_move != Mover::Robber {
        return Err(Error::WrongPhase(
            "robber_turn needs a robber-to-move state",
        ));
    }
    let cops = &state.cops;
    let occupied = VertexSet::from_iter(g.n(), cops.iter().copied());
    let next = |phase, snapshot| BeliefState {
        cops: cops.clone(),
        phase,
        snapshot,
        to_move: Mover::Cops,
    };
    let view = || g.ball_of_set(cops, spec.ell);
    let mut out = Vec::new();
    match &state.phase {
        Phase::Invisible(t1) => {
            let t2 = g.expand(t1).difference(&occupied);
            let view = view();
            for v in t2.intersection(&view).iter() {
                out.push(seen_or_visible(spec, v, next(Phase::Visible(v), None)));
            }
            let unseen = t2.difference(&view);
            if !unseen.is_empty() {
                out.push(Branch::Continue(next(
                    Phase::Invisible(unseen),
                    state.snapshot.clone(),
                )));
            }
        }
        Phase::Visible(r) => {
            let choices = g.closed_neighborhood(*r).difference(&occupied);
            let view = view();
            for v in choices.intersection(&view).iter() {
                out.push(seen_or_visible(spec, v, next(Phase::Visible(v), None)));
            }
            let unseen = choices.difference(&view);
            if !unseen.is_empty() {
                out.push(Branch::Continue(next(Phase::Invisible(unseen), None)));
            }
        }
        Phase::Delayed(b) => {
            let mut beliefs: Vec<VertexSet> = b
                .iter()
                .map(|v| g.closed_neighborhood(v).difference(&occupied))
                .collect();
            beliefs.sort();
            beliefs.dedup();
            for belief in beliefs {
                if belief.is_empty() {
                    out.push(Branch::CopWin {
                        kind: WinKind::Captured,
                        vertex: None,
                    });
                } else {
                    out.push(Branch::Continue(next(Phase::Delayed(belief), None)));
                }
            }
        }
    }
    if out.is_empty() {
        out.push(Branch::CopWin {
            kind: WinKind::Captured,
            vertex: None,
        });
    }
    Ok(out)
}

impl BeliefState {
    /// Checks the canonical-form invariants against `g` and `spec`.
    pub fn is_canonical(&self, g: &Graph, spec: &GameSpec) -> bool {
        let sorted = self.cops.windows(2).all(|w| w[0] <= w[1]);
        let in_range = self.cops.iter().all(|&c| c < g.n());
        let occupied = VertexSet::from_iter(g.n(), self.cops.iter().copied());
        sorted
            && in_range
            && self.cops.len() == spec.cops
            && match &self.phase {
                Phase::Invisible(t) => {
                    !t.is_empty() && t.is_disjoint(&g.ball_of_set(&self.cops, spec.ell))
                }
                Phase::Visible(r) => *r < g.n() && !occupied.contains(*r),
                Phase::Delayed(b) => !b.is_empty() && b.is_disjoint(&occupied),
            }
    }

    /// Stable text key: `C:0,3|I:2,4|S:2,4|R` (phase letter `I`, `V` or
    /// `D`; `S` present only with a snapshot; trailing mover `C` or `R`).
    pub fn encode(&self) -> String {
        let join = |it: &mut dyn Iterator<Item = usize>| {
            it.map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        };
        let mut s = format!("C:{}", join(&mut self.cops.iter().copied()));
        match &self.phase {
            Phase::Invisible(t) => s += &format!("|I:{}", join(&mut t.iter())),
            Phase::Visible(r) => s += &format!("|V:{r}"),
            Phase::Delayed(b) => s += &format!("|D:{}", join(&mut b.iter())),
        }
        if let Some(snap) = &self.snapshot {
            s += &format!("|S:{}", join(&mut snap.iter()));
        }
        s += match self.to_move {
            Mover::Cops => "|C",
            Mover::Robber => "|R",
        };
        s
    }
}

/// Pre-scripted cop walks, one row per cop, all of the same length.
/// Entry 0 is the placement; consecutive entries are equal or adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Script {
    pub walks: Vec<Vec<usize>>,
}

impl Script {
    pub fn new(walks: Vec<Vec<usize>>) -> Script {
        Script { walks }
    }

    pub fn cops(&self) -> usize {
        self.walks.len()
    }

    /// Number of moving rounds after the placement.
    pub fn rounds(&self) -> usize {
        self.walks.first().map_or(0, |w| w.len().saturating_sub(1))
    }

    /// Cop positions at `round` in per-cop order.
    pub fn at(&self, round: usize) -> Vec<usize> {
        self.walks.iter().map(|w| w[round]).collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let len = match self.walks.first() {
            Some(w) if !w.is_empty() => w.len(),
            _ => {
                return Err(Error::InvalidScript(
                    "script has no cops or no rounds".into(),
                ))
            }
        };
        for (i, w) in self.walks.iter().enumerate() {
            if w.len() != len {
                return Err(Error::InvalidScript(format!(
                    "walk {i} has length {} but walk 0 has {len}",
                    w.len()
                )));
            }
            check_vertices(g, w)?;
            if let Some(t) = (1..len).find(|&t| w[t] != w[t - 1] && !g.has_edge(w[t - 1], w[t])) {
                return Err(Error::InvalidScript(format!(
                    "walk {i} jumps from {} to {} at round {t}",
                    w[t - 1],
                    w[t]
                )));
            }
        }
        Ok(())
    }

    /// Pads every walk with passes to the longest length.
    pub fn pad(&mut self) {
        let len = self.walks.iter().map(Vec::len).max().unwrap_or(0);
        for w in &mut self.walks {
            if let Some(&last) = w.last() {
                w.resize(len, last);
            }
        }
    }

    /// Text form: one row per cop, whitespace-separated vertices.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for w in &self.walks {
            let row: Vec<String> = w.iter().map(|v| v.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the text form; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Script> {
        let walks = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse()
                            .map_err(|_| Error::InvalidScript(format!("bad vertex {t:?}")))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Script { walks })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Half {
    Placement,
    Cops,
    Robber,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundSnapshot {
    pub round: usize,
    pub cops: Vec<usize>,
    /// Unseen territory right after the cop move (round 0: after placement).
    pub after_cops: Vec<usize>,
    /// Unseen territory after the robber move and observation.
    pub after_robber: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Event {
    pub round: usize,
    pub half: Half,
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CleaningReport {
    pub rounds: Vec<RoundSnapshot>,
    /// First round after whose cop move no unseen position remains.
    pub seen_guaranteed_at: Option<usize>,
    /// `seen_guaranteed_at` when sight is enough to win: under the seeing
    /// goal, or on chordal graphs where one cop converts any sighting into
    /// a capture.
    pub cleaned_at: Option<usize>,
    /// True when the post-cop-move territory never gained a vertex.
    pub monotone: bool,
    /// Vertices that re-entered the post-cop-move territory.
    pub recontamination: Vec<Event>,
    /// Observations after which the territory was a single vertex.
    pub located: Vec<Event>,
    /// Robber positions that would have been seen.
    pub seen: Vec<Event>,
}

/// Worst-case evolution of the unseen territory while the cops follow
/// `script`. Sightings are recorded but not pursued.
pub fn simulate_script(g: &Graph, spec: &GameSpec, script: &Script) -> Result<CleaningReport> {
    script.validate(g)?;
    if script.cops() != spec.cops {
        return Err(Error::WrongCopCount {
            expected: spec.cops,
            got: script.cops(),
        });
    }
    let n = g.n();
    let mut report = CleaningReport {
        rounds: Vec::new(),
        seen_guaranteed_at: None,
        cleaned_at: None,
        monotone: true,
        recontamination: Vec::new(),
        located: Vec::new(),
        seen: Vec::new(),
    };
    let event = |round, half, vertex| Event {
        round,
        half,
        vertex,
    };
    let p0 = script.at(0);
    let occupied = VertexSet::from_iter(n, p0.iter().copied());
    let view = g.ball_of_set(&p0, spec.ell);
    for v in view.difference(&occupied).iter() {
        report.seen.push(event(0, Half::Placement, v));
    }
    let mut territory = VertexSet::full(n).difference(&view);
    let mut previous = territory.clone();
    report.rounds.push(RoundSnapshot {
        round: 0,
        cops: p0,
        after_cops: territory.to_vec(),
        after_robber: territory.to_vec(),
    });
    if territory.len() == 1 {
        report
            .located
            .push(event(0, Half::Placement, territory.to_vec()[0]));
    }
    if territory.is_empty() {
        report.seen_guaranteed_at = Some(0);
    }
    let mut round = 0;
    while report.seen_guaranteed_at.is_none() && round < script.rounds() {
        round += 1;
        let cops = script.at(round);
        let occupied = VertexSet::from_iter(n, cops.iter().copied());
        let view = g.ball_of_set(&cops, spec.ell);
        for v in territory.intersection(&view).difference(&occupied).iter() {
            report.seen.push(event(round, Half::Cops, v));
        }
        let after_cops = territory.difference(&view);
        for v in after_cops.difference(&previous).iter() {
            report.monotone = false;
            report.recontamination.push(event(round, Half::Cops, v));
        }
        if after_cops.len() == 1 {
            report
                .located
                .push(event(round, Half::Cops, after_cops.to_vec()[0]));
        }
        previous = after_cops.clone();
        let moved = g.expand(&after_cops).difference(&occupied);
        for v in moved.intersection(&view).iter() {
            report.seen.push(event(round, Half::Robber, v));
        }
        territory = moved.difference(&view);
        if territory.len() == 1 {
            report
                .located
                .push(event(round, Half::Robber, territory.to_vec()[0]));
        }
        report.rounds.push(RoundSnapshot {
            round,
            cops,
            after_cops: after_cops.to_vec(),
            after_robber: territory.to_vec(),
        });
        if after_cops.is_empty() {
            report.seen_guaranteed_at = Some(round);
        }
    }
    let sight_wins = spec.win_on_sight() || chordal_peo(g).is_ok();
    report.cleaned_at = report.seen_guaranteed_at.filter(|_| sight_wins);
    Ok(report)
}

/// Which observation a robber decision is made at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Placement,
    AfterCops,
    AfterRobber,
}

/// A cop controller that sees only what the cops are entitled to see.
pub trait CopPolicy {
    fn place(&mut self, g: &Graph, spec: &GameSpec) -> Vec<usize>;
    /// Next cop multiset from a cops-to-move state.
    fn step(&mut self, g: &Graph, spec: &GameSpec, state: &BeliefState) -> Vec<usize>;
    /// Called with the state observed after the cop move, before the
    /// robber moves.
    fn observe(&mut self, _g: &Graph, _spec: &GameSpec, _state: &BeliefState) {}
}

/// An adversary that picks one branch of every transition.
pub trait RobberPolicy {
    /// `cops` is the cop multiset the robber is reacting to.
    fn choose(
        &mut self,
        g: &Graph,
        spec: &GameSpec,
        stage: Stage,
        cops: &[usize],
        branches: &[Branch],
    ) -> usize;
    /// Actual robber vertex, when the adversary commits to one.
    fn position(&self) -> Option<usize> {
        None
    }
}

/// A robber that occupies a concrete vertex.
pub trait RobberWalker {
    fn place(&mut self, g: &Graph, cops: &[usize]) -> usize;
    /// Next vertex from `at`; must be in `N[at]` and not on a cop.
    fn step(&mut self, g: &Graph, cops: &[usize], at: usize) -> usize;
}

/// Adapts a concrete walker to branch choices by locating the branch
/// consistent with its true position.
pub struct Concrete<W> {
    pub walker: W,
    pos: Option<usize>,
    prev: Option<usize>,
    illegal: Option<(usize, usize)>,
}

impl<W: RobberWalker> Concrete<W> {
    pub fn new(walker: W) -> Self {
        Concrete {
            walker,
            pos: None,
            prev: None,
            illegal: None,
        }
    }

    /// A walker already standing at `v`, for play that starts mid-game.
    pub fn starting_at(walker: W, v: usize) -> Self {
        Concrete {
            walker,
            pos: Some(v),
            prev: None,
            illegal: None,
        }
    }

    /// An illegal walker move seen during play, if any.
    pub fn illegal_move(&self) -> Option<(usize, usize)> {
        self.illegal
    }
}

/// Index of the branch consistent with a robber at `v` (for delayed play,
/// having just left `prev`).
pub fn locate_branch(
    g: &Graph,
    branches: &[Branch],
    v: usize,
    prev: Option<usize>,
) -> Option<usize> {
    branches.iter().position(|b| match b {
        Branch::CopWin { vertex, .. } => *vertex == Some(v),
        Branch::Continue(s) => match &s.phase {
            Phase::Invisible(t) => t.contains(v),
            Phase::Visible(r) => *r == v,
            Phase::Delayed(belief) => match (s.to_move, prev) {
                (Mover::Cops, Some(p)) => {
                    let occupied = VertexSet::from_iter(g.n(), s.cops.iter().copied());
                    *belief == g.closed_neighborhood(p).difference(&occupied)
                }
                _ => belief.contains(v),
            },
        },
    })
}

impl<W: RobberWalker> RobberPolicy for Concrete<W> {
    fn choose(
        &mut self,
        g: &Graph,
        _spec: &GameSpec,
        stage: Stage,
        cops: &[usize],
        branches: &[Branch],
    ) -> usize {
        match stage {
            Stage::Placement => {
                self.pos = Some(self.walker.place(g, cops));
                self.prev = None;
            }
            Stage::AfterCops => {}
            Stage::AfterRobber => {
                let at = self.pos.expect("robber placed before moving");
                let to = self.walker.step(g, cops, at);
                if to >= g.n() || (to != at && !g.has_edge(at, to)) || cops.contains(&to) {
                    self.illegal = Some((at, to));
                }
                self.prev = Some(at);
                self.pos = Some(to);
            }
        }
        let v = self.pos.expect("placed");
        let prev = if stage == Stage::AfterRobber {
            self.prev
        } else {
            None
        };
        locate_branch(g, branches, v, prev).unwrap_or(0)
    }

    fn position(&self) -> Option<usize> {
        self.pos
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Captured,
    Seen,
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub round: usize,
    pub half: Half,
    pub cops: Vec<usize>,
    /// Concrete robber vertex when the adversary has one.
    pub robber: Option<usize>,
    /// Canonical encoding of the state the cops now face, if play continues.
    pub state: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub outcome: Outcome,
    /// Round in which the game ended (equals `max_rounds` on timeout).
    pub rounds: usize,
    pub steps: Vec<TraceStep>,
}

fn finish(kind: WinKind) -> Outcome {
    match kind {
        WinKind::Seen => Outcome::Seen,
        _ => Outcome::Captured,
    }
}

/// Plays `cop` against `robber` for at most `max_rounds` moving rounds.
pub fn play_match(
    g: &Graph,
    spec: &GameSpec,
    cop: &mut dyn CopPolicy,
    robber: &mut dyn RobberPolicy,
    max_rounds: usize,
) -> Result<Trace> {
    let mut steps = Vec::new();
    let placement = cop.place(g, spec);
    let branches = initial_branches(g, spec, &placement)?;
    let pick = robber.choose(g, spec, Stage::Placement, &sorted(&placement), &branches);
    let state = match take(&branches, pick)? {
        Ok(s) => s,
        Err(kind) => {
            return Ok(Trace {
                outcome: finish(kind),
                rounds: 0,
                steps: vec![step(0, Half::Placement, sorted(&placement), robber, None)],
            })
        }
    };
    steps.push(step(
        0,
        Half::Placement,
        state.cops.clone(),
        robber,
        Some(&state),
    ));
    let mut trace = play_from(g, spec, &state, cop, robber, max_rounds)?;
    steps.append(&mut trace.steps);
    trace.steps = steps;
    Ok(trace)
}

/// Continues play from a cops-to-move `state` for at most `max_rounds`
/// moving rounds; round numbers in the trace start at 1.
pub fn play_from(
    g: &Graph,
    spec: &GameSpec,
    state: &BeliefState,
    cop: &mut dyn CopPolicy,
    robber: &mut dyn RobberPolicy,
    max_rounds: usize,
) -> Result<Trace> {
    if state.to_move != Mover::Cops {
        return Err(Error::WrongPhase("play starts with the cops to move"));
    }
    let mut steps = Vec::new();
    let mut state = state.clone();
    for round in 1..=max_rounds {
        let next = cop.step(g, spec, &state);
        let branches = cop_turn(g, spec, &state, &next)?;
        let pick = robber.choose(g, spec, Stage::AfterCops, &sorted(&next), &branches);
        let mid = match take(&branches, pick)? {
            Ok(s) => s,
            Err(kind) => {
                steps.push(step(round, Half::Cops, sorted(&next), robber, None));
                return Ok(Trace {
                    outcome: finish(kind),
                    rounds: round,
                    steps,
                });
            }
        };
        cop.observe(g, spec, &mid);
        steps.push(step(
            round,
            Half::Cops,
            mid.cops.clone(),
            robber,
            Some(&mid),
        ));
        let branches = robber_turn(g, spec, &mid)?;
        let pick = robber.choose(g, spec, Stage::AfterRobber, &mid.cops, &branches);
        match take(&branches, pick)? {
            Ok(s) => {
                steps.push(step(round, Half::Robber, s.cops.clone(), robber, Some(&s)));
                state = s;
            }
            Err(kind) => {
                steps.push(step(round, Half::Robber, mid.cops.clone(), robber, None));
                return Ok(Trace {
                    outcome: finish(kind),
                    rounds: round,
                    steps,
                });
            }
        }
    }
    Ok(Trace {
        outcome: Outcome::Timeout,
        rounds: max_rounds,
        steps,
    })
}

fn step(
    round: usize,
    half: Half,
    cops: Vec<usize>,
    robber: &dyn RobberPolicy,
    state: Option<&BeliefState>,
) -> TraceStep {
    TraceStep {
        round,
        half,
        cops,
        robber: robber.position(),
        state: state.map(BeliefState::encode),
    }
}

fn take(branches: &[Branch], pick: usize) -> Result<std::result::Result<BeliefState, WinKind>> {
    match branches.get(pick) {
        None => Err(Error::Precondition(format!(
            "robber picked branch {pick} of {}",
            branches.len()
        ))),
        Some(Branch::CopWin { kind, .. }) => Ok(Err(*kind)),
        Some(Branch::Continue(s)) => Ok(Ok(s.clone())),
    }
}

/// Graphviz rendering with cops filled black and `territory` shaded.
pub fn to_dot(g: &Graph, cops: &[usize], territory: &[usize]) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let style = if cops.contains(&v) {
            " [style=filled, fillcolor=black, fontcolor=white]"
        } else if territory.contains(&v) {
            " [style=filled, fillcolor=gray]"
        } else {
            ""
        };
        s += &format!("  {v}{style};\n");
    }
    for &(u, v) in g.edges() {
        s += &format!("  {u} -- {v};\n");
    }
    s.push_str("}\n");
    s
}

/// Seeded robber that moves to a uniformly random legal vertex.
pub struct RandomWalker(pub rand_chacha::ChaCha8Rng);

impl RandomWalker {
    pub fn seeded(seed: u64) -> Self {
        use rand::SeedableRng;
        RandomWalker(rand_chacha::ChaCha8Rng::seed_from_u64(seed))
    }
}

impl RobberWalker for RandomWalker {
    fn place(&mut self, g: &Graph, cops: &[usize]) -> usize {
        use rand::seq::IteratorRandom;
        (0..g.n())
            .filter(|v| !cops.contains(v))
            .choose(&mut self.0)
            .unwrap_or(0)
    }

    fn step(&mut self, g: &Graph, cops: &[usize], at: usize) -> usize {
        use rand::seq::IteratorRandom;
        g.closed_neighborhood(at)
            .iter()
            .filter(|v| !cops.contains(v))
            .choose(&mut self.0)
            .unwrap_or(at)
    }
}

/// Robber that keeps as far from the nearest cop as it can, preferring the
/// lowest vertex among ties.
pub struct FleeWalker;

impl RobberWalker for FleeWalker {
    fn place(&mut self, g: &Graph, cops: &[usize]) -> usize {
        (0..g.n())
            .filter(|v| !cops.contains(v))
            .max_by_key(|&v| (g.dist_to_set(v, cops), std::cmp::Reverse(v)))
            .unwrap_or(0)
    }

    fn step(&mut self, g: &Graph, cops: &[usize], at: usize) -> usize {
        g.closed_neighborhood(at)
            .iter()
            .filter(|v| !cops.contains(v))
            .max_by_key(|&v| (g.dist_to_set(v, cops), std::cmp::Reverse(v)))
            .unwrap_or(at)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Recipe;

    fn gen(s: &str) -> Graph {
        s.parse::<Recipe>().unwrap().generate().unwrap().graph
    }

    fn spec(g: &Graph, ell: u32, cops: usize, v: Variant) -> GameSpec {
        GameSpec::new(g, ell, cops, v).unwrap()
    }

    fn visible(b: &Branch) -> Option<usize> {
        match b {
            Branch::Continue(BeliefState {
                phase: Phase::Visible(v),
                ..
            }) => Some(*v),
            _ => None,
        }
    }

    fn invisible(b: &[Branch]) -> Option<Vec<usize>> {
        b.iter().find_map(|b| match b {
            Branch::Continue(BeliefState {
                phase: Phase::Invisible(t),
                ..
            }) => Some(t.to_vec()),
            _ => None,
        })
    }

    #[test]
    fn placement_branches() {
        let k1 = gen("complete:1");
        let s = spec(&k1, 1, 1, Variant::Capture);
        assert_eq!(
            initial_branches(&k1, &s, &[0]).unwrap(),
            vec![Branch::CopWin {
                kind: WinKind::Vacuous,
                vertex: None
            }]
        );
        let c5 = gen("cycle:5");
        let b = initial_branches(&c5, &spec(&c5, 1, 1, Variant::Capture), &[0]).unwrap();
        let seen: Vec<_> = b.iter().filter_map(visible).collect();
        assert_eq!(seen, vec![1, 4]);
        assert_eq!(invisible(&b), Some(vec![2, 3]));
        let c4 = gen("cycle:4");
        let b = initial_branches(&c4, &spec(&c4, 1, 1, Variant::Capture), &[0]).unwrap();
        assert_eq!(b.iter().filter_map(visible).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(invisible(&b), Some(vec![2]));
        let see = initial_branches(&c4, &spec(&c4, 1, 1, Variant::See), &[0]).unwrap();
        assert_eq!(
            see.iter()
                .filter(|b| matches!(
                    b,
                    Branch::CopWin {
                        kind: WinKind::Seen,
                        ..
                    }
                ))
                .count(),
            2
        );
        assert_eq!(
            initial_branches(&c4, &spec(&c4, 1, 2, Variant::Capture), &[0]),
            Err(Error::WrongCopCount {
                expected: 2,
                got: 1
            })
        );
    }

    fn state(n: usize, cops: Vec<usize>, phase: Phase, to_move: Mover) -> BeliefState {
        let _ = n;
        BeliefState {
            cops,
            phase,
            snapshot: None,
            to_move,
        }
    }

    #[test]
    fn cop_moves() {
        let c4 = gen("cycle:4");
        let s = spec(&c4, 1, 1, Variant::Capture);
        let st = state(
            4,
            vec![0],
            Phase::Invisible(VertexSet::from_iter(4, [2])),
            Mover::Cops,
        );
        let b = cop_turn(&c4, &s, &st, &[1]).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(visible(&b[0]), Some(2));
        let b = cop_turn(
            &c4,
            &s,
            &state(4, vec![0], Phase::Visible(1), Mover::Cops),
            &[1],
        )
        .unwrap();
        assert_eq!(
            b,
            vec![Branch::CopWin {
                kind: WinKind::Captured,
                vertex: Some(1)
            }]
        );
        assert!(matches!(
            cop_turn(&c4, &s, &st, &[2]),
            Err(Error::IllegalCopStep { .. })
        ));

        let p5 = gen("path:5");
        let s = spec(&p5, 1, 1, Variant::Capture);
        let st = state(
            5,
            vec![0],
            Phase::Invisible(VertexSet::from_iter(5, [3, 4])),
            Mover::Cops,
        );
        let b = cop_turn(&p5, &s, &st, &[1]).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(invisible(&b), Some(vec![3, 4]));
    }

    #[test]
    fn robber_moves() {
        let p5 = gen("path:5");
        let s = spec(&p5, 1, 1, Variant::Capture);
        let st = state(
            5,
            vec![1],
            Phase::Invisible(VertexSet::from_iter(5, [4])),
            Mover::Robber,
        );
        let b = robber_turn(&p5, &s, &st).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(invisible(&b), Some(vec![3, 4]));

        let c4 = gen("cycle:4");
        let s = spec(&c4, 1, 1, Variant::Capture);
        let b = robber_turn(
            &c4,
            &s,
            &state(4, vec![0], Phase::Visible(2), Mover::Robber),
        )
        .unwrap();
        assert_eq!(b.iter().filter_map(visible).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(invisible(&b), Some(vec![2]));
        assert!(matches!(
            robber_turn(&c4, &s, &state(4, vec![0], Phase::Visible(2), Mover::Cops)),
            Err(Error::WrongPhase(_))
        ));
    }

    #[test]
    fn delayed_beliefs() {
        let p3 = gen("path:3");
        let s = spec(&p3, 1, 1, Variant::TimeDelayed);
        let st = state(
            3,
            vec![0],
            Phase::Delayed(VertexSet::from_iter(3, [1, 2])),
            Mover::Cops,
        );
        let b = cop_turn(&p3, &s, &st, &[1]).unwrap();
        assert_eq!(
            b[0],
            Branch::CopWin {
                kind: WinKind::Captured,
                vertex: Some(1)
            }
        );
        let Branch::Continue(mid) = &b[1] else {
            panic!("expected survivor")
        };
        let after = robber_turn(&p3, &s, mid).unwrap();
        assert_eq!(after.len(), 1);
        let Branch::Continue(BeliefState {
            phase: Phase::Delayed(d),
            ..
        }) = &after[0]
        else {
            panic!()
        };
        assert_eq!(d.to_vec(), vec![2]);
    }

    #[test]
    fn monotone_moves_rejected_when_territory_grows() {
        let p5 = gen("path:5");
        let s = spec(&p5, 0, 1, Variant::MonotoneCapture);
        let mut st = state(
            5,
            vec![2],
            Phase::Invisible(VertexSet::from_iter(5, [0, 1, 3, 4])),
            Mover::Cops,
        );
        st.snapshot = Some(VertexSet::from_iter(5, [3, 4]));
        assert_eq!(
            cop_turn(&p5, &s, &st, &[3]),
            Err(Error::MonotonicityViolation { gained: vec![0, 1] })
        );
    }

    #[test]
    fn scripts_on_paths_and_cycles() {
        let p5 = gen("path:5");
        let s = spec(&p5, 1, 1, Variant::Capture);
        let script = Script::new(vec![vec![0, 1, 2, 3, 4]]);
        let r = simulate_script(&p5, &s, &script).unwrap();
        assert!(r.seen_guaranteed_at.is_some());
        assert!(r.monotone);
        assert_eq!(r.cleaned_at, r.seen_guaranteed_at);

        let everywhere = Script::new((0..5).map(|v| vec![v]).collect());
        let r = simulate_script(&p5, &spec(&p5, 1, 5, Variant::Capture), &everywhere).unwrap();
        assert_eq!(r.seen_guaranteed_at, Some(0));

        let bad = Script::new(vec![vec![0, 2]]);
        assert!(matches!(
            simulate_script(&p5, &s, &bad),
            Err(Error::InvalidScript(_))
        ));
    }

    #[test]
    fn script_text_roundtrip() {
        let s = Script::new(vec![vec![0, 1, 1], vec![3, 3, 2]]);
        assert_eq!(
            Script::parse(&format!("# two cops\n{}", s.to_text())).unwrap(),
            s
        );
    }

    #[test]
    fn encoding_is_stable() {
        let st = BeliefState {
            cops: vec![0, 3],
            phase: Phase::Invisible(VertexSet::from_iter(6, [2, 4])),
            snapshot: Some(VertexSet::from_iter(6, [2, 4])),
            to_move: Mover::Robber,
        };
        assert_eq!(st.encode(), "C:0,3|I:2,4|S:2,4|R");
    }

    #[test]
    fn matching_allows_swapped_cops() {
        let p3 = gen("path:3");
        assert!(cop_step_legal(&p3, &[0, 2], &[1, 1]));
        assert!(cop_step_legal(&p3, &[0, 1], &[1, 2]));
        assert!(!cop_step_legal(&p3, &[0, 0], &[2, 0]));
    }

    struct Greedy;
    impl CopPolicy for Greedy {
        fn place(&mut self, _g: &Graph, _s: &GameSpec) -> Vec<usize> {
            vec![0]
        }
        fn step(&mut self, g: &Graph, _s: &GameSpec, st: &BeliefState) -> Vec<usize> {
            let target = match &st.phase {
                Phase::Visible(r) => *r,
                Phase::Invisible(t) | Phase::Delayed(t) => t.iter().next().unwrap(),
            };
            let c = st.cops[0];
            if c == target || g.has_edge(c, target) {
                vec![target]
            } else {
                vec![g.geodesic(c, target)[1]]
            }
        }
    }

    #[test]
    fn greedy_cop_on_complete_graphs() {
        for n in 2..7 {
            let g = gen(&format!("complete:{n}"));
            let s = spec(&g, 1, 1, Variant::Capture);
            let mut robber = Concrete::new(FleeWalker);
            let t = play_match(&g, &s, &mut Greedy, &mut robber, 10).unwrap();
            assert_eq!(t.outcome, Outcome::Captured);
            assert!(t.rounds <= 2);
        }
        let p2 = gen("path:2");
        let s = spec(&p2, 1, 1, Variant::Capture);
        let t = play_match(&p2, &s, &mut Greedy, &mut Concrete::new(FleeWalker), 10).unwrap();
        assert_eq!((t.outcome, t.rounds), (Outcome::Captured, 1));
    }
}
