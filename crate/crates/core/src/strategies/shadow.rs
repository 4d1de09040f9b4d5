//! Capture with `max(c′_ℓ, c+1)` cops for `ℓ >= 2` by tracking the
//! robber's shadow, its vertex before its latest move.

use super::search::match_step;
use crate::engine::{BeliefState, CopPolicy, GameSpec, Mover, Phase, Variant};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{cop_number, solve_full, Solution};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Mode {
    /// Following the seeing policy; robber not yet seen.
    Seeing,
    /// `tracker` keeps the shadow in range while `team` walks to the
    /// classical start and then plays the classical strategy against
    /// the shadow.
    Tracking {
        tracker: usize,
        team: Vec<usize>,
        playing: bool,
    },
    /// `anchor` stands on the shadow every round, keeping the robber in
    /// sight; `team` plays the classical strategy against the robber.
    Anchored {
        anchor: usize,
        team: Vec<usize>,
        playing: bool,
    },
}

/// Which stage a [`ShadowCapture`] is in, for reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShadowStage {
    Seeing,
    Tracking,
    Anchored,
}

pub struct ShadowCapture {
    see: Solution,
    classical: Solution,
    home: Vec<usize>,
    cops: Vec<usize>,
    shadow: Option<usize>,
    mode: Mode,
}

impl ShadowCapture {
    /// Solves the seeing game with `max(c′_ℓ, c+1)` cops and the classical
    /// game with `c` cops.
    pub fn new(g: &Graph, ell: u32, budget: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::Precondition("shadow tracking needs ℓ >= 2".into()));
        }
        let c = cop_number(g, ell, Variant::Classical, budget)?;
        let see_number = cop_number(g, ell, Variant::See, budget)?;
        let m = see_number.max(c + 1);
        let see = solve_full(g, &GameSpec::new(g, ell, m, Variant::See)?, budget)?;
        let classical = solve_full(g, &GameSpec::new(g, ell, c, Variant::Classical)?, budget)?;
        Self::from_solutions(see, classical)
    }

    /// Builds the policy from a winning seeing solution and a winning
    /// classical solution with fewer cops.
    pub fn from_solutions(see: Solution, classical: Solution) -> Result<Self> {
        if see.spec().ell < 2 {
            return Err(Error::Precondition("shadow tracking needs ℓ >= 2".into()));
        }
        let home = match (see.placement(), classical.placement()) {
            (Some(_), Some(p)) => p,
            _ => {
                return Err(Error::Precondition(
                    "both solutions must be cop wins".into(),
                ))
            }
        };
        if classical.spec().cops >= see.spec().cops {
            return Err(Error::Precondition(
                "need more seeing cops than classical cops".into(),
            ));
        }
        Ok(ShadowCapture {
            see,
            classical,
            home,
            cops: Vec::new(),
            shadow: None,
            mode: Mode::Seeing,
        })
    }

    pub fn cops(&self) -> usize {
        self.see.spec().cops
    }

    pub fn stage(&self) -> ShadowStage {
        match self.mode {
            Mode::Seeing => ShadowStage::Seeing,
            Mode::Tracking { .. } => ShadowStage::Tracking,
            Mode::Anchored { .. } => ShadowStage::Anchored,
        }
    }

    fn start_tracking(&mut self, g: &Graph, r: usize) {
        let tracker = (0..self.cops.len())
            .min_by_key(|&i| (g.dist(self.cops[i], r), i))
            .expect("at least one cop");
        let others: Vec<usize> = (0..self.cops.len()).filter(|&i| i != tracker).collect();
        let team = self.pick_team(g, &others);
        self.mode = Mode::Tracking {
            tracker,
            team,
            playing: false,
        };
    }

    /// Chooses cops from `pool` for the classical start positions, greedily
    /// by distance; `team[j]` heads for `home[j]`.
    fn pick_team(&self, g: &Graph, pool: &[usize]) -> Vec<usize> {
        let mut pairs: Vec<(u32, usize, usize)> = pool
            .iter()
            .flat_map(|&i| (0..self.home.len()).map(move |j| (i, j)))
            .map(|(i, j)| (g.dist(self.cops[i], self.home[j]), j, i))
            .collect();
        pairs.sort_unstable();
        let mut team = vec![usize::MAX; self.home.len()];
        let mut used = Vec::new();
        for (_, j, i) in pairs {
            if team[j] == usize::MAX && !used.contains(&i) {
                team[j] = i;
                used.push(i);
            }
        }
        team
    }

    fn toward(g: &Graph, from: usize, to: usize) -> usize {
        if from == to {
            from
        } else {
            g.geodesic(from, to)[1]
        }
    }

    /// Moves `team` one round: toward the classical start until all have
    /// arrived, then by the classical solution against `target`.
    fn team_round(
        &self,
        g: &Graph,
        team: &[usize],
        playing: &mut bool,
        target: Option<usize>,
        next: &mut [usize],
    ) {
        if !*playing {
            for (j, &i) in team.iter().enumerate() {
                next[i] = Self::toward(g, self.cops[i], self.home[j]);
            }
            *playing = team
                .iter()
                .enumerate()
                .all(|(j, &i)| next[i] == self.home[j]);
            return;
        }
        let Some(target) = target else { return };
        let now: Vec<usize> = team.iter().map(|&i| self.cops[i]).collect();
        let mut sorted = now.clone();
        sorted.sort_unstable();
        let state = BeliefState {
            cops: sorted,
            phase: Phase::Visible(target),
            snapshot: None,
            to_move: Mover::Cops,
        };
        let moved = self
            .classical
            .cop_move(&state)
            .and_then(|m| match_step(g, &now, &m))
            .unwrap_or_else(|| now.iter().map(|&c| Self::toward(g, c, target)).collect());
        for (&i, v) in team.iter().zip(moved) {
            next[i] = v;
        }
    }
}

impl CopPolicy for ShadowCapture {
    fn place(&mut self, _g: &Graph, _spec: &GameSpec) -> Vec<usize> {
        self.mode = Mode::Seeing;
        self.shadow = None;
        self.cops = self.see.placement().expect("checked at construction");
        self.cops.clone()
    }

    fn step(&mut self, g: &Graph, _spec: &GameSpec, state: &BeliefState) -> Vec<usize> {
        let robber = match state.phase {
            Phase::Visible(r) => Some(r),
            _ => None,
        };
        if let Some(r) = robber {
            if let Some(i) = (0..self.cops.len()).find(|&i| g.has_edge(self.cops[i], r)) {
                self.cops[i] = r;
                return self.cops.clone();
            }
            if self.mode == Mode::Seeing {
                self.start_tracking(g, r);
            }
        }
        let mut next = self.cops.clone();
        let mut mode = self.mode.clone();
        match &mut mode {
            Mode::Seeing => {
                let m = self
                    .see
                    .cop_move(state)
                    .unwrap_or_else(|| self.cops.clone());
                next = match_step(g, &self.cops, &m).unwrap_or(m);
            }
            Mode::Tracking {
                tracker,
                team,
                playing,
            } => {
                let target = robber.or(self.shadow);
                if let Some(t) = target {
                    next[*tracker] = Self::toward(g, self.cops[*tracker], t);
                }
                self.team_round(g, team, playing, self.shadow, &mut next);
                if let Some(s) = self.shadow {
                    if let Some(&anchor) = team.iter().find(|&&i| next[i] == s) {
                        let pool: Vec<usize> =
                            (0..self.cops.len()).filter(|&i| i != anchor).collect();
                        let team = self.pick_team(g, &pool);
                        mode = Mode::Anchored {
                            anchor,
                            team,
                            playing: false,
                        };
                    }
                }
            }
            Mode::Anchored {
                anchor,
                team,
                playing,
            } => {
                if let Some(s) = self.shadow {
                    next[*anchor] = Self::toward(g, self.cops[*anchor], s);
                }
                self.team_round(g, team, playing, robber, &mut next);
            }
        }
        self.mode = mode;
        self.cops = next;
        self.cops.clone()
    }

    fn observe(&mut self, g: &Graph, _spec: &GameSpec, state: &BeliefState) {
        if let Phase::Visible(r) = state.phase {
            self.shadow = Some(r);
            if self.mode == Mode::Seeing {
                self.start_tracking(g, r);
            }
        }
    }
}
