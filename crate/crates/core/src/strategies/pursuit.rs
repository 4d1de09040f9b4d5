//! Single-cop pursuit on chordal graphs once the robber has been seen.

use super::search::match_step;
use crate::engine::{BeliefState, CopPolicy, GameSpec, Phase};
use crate::error::{Error, Result};
use crate::graph::{EliminationKind, EliminationOrdering, Graph};

/// One pursuit move: capture an adjacent robber, otherwise step to the
/// neighbor one closer to `shadow` (the robber's vertex at the last
/// observation before its move) with the lowest elimination index.
/// `robber` is the current vertex when it is in sight.
pub fn pursuit_step(
    g: &Graph,
    index: &[usize],
    cop: usize,
    shadow: usize,
    robber: Option<usize>,
) -> usize {
    if let Some(r) = robber {
        if g.has_edge(cop, r) {
            return r;
        }
    }
    let target = match robber {
        Some(r) if cop == shadow => r,
        _ => shadow,
    };
    let d = g.dist(cop, target);
    g.neighbors(cop)
        .iter()
        .copied()
        .filter(|&w| g.dist(w, target) + 1 == d)
        .min_by_key(|&w| index[w])
        .unwrap_or(cop)
}

/// The pursuit as an online policy for one cop.
#[derive(Clone, Debug)]
pub struct ChordalPursuit {
    index: Vec<usize>,
    at: usize,
    shadow: usize,
    start: usize,
}

fn elimination_index(g: &Graph, peo: &EliminationOrdering) -> Result<Vec<usize>> {
    if peo.kind != EliminationKind::Simplicial || !peo.validate(g) {
        return Err(Error::NotChordal);
    }
    Ok(peo.positions())
}

/// Pursuit for a cop at `start` that has just seen the robber at
/// `first_sight`, with the cops to move.
pub fn chordal_pursuit(
    g: &Graph,
    peo: &EliminationOrdering,
    ell: u32,
    start: usize,
    first_sight: usize,
) -> Result<ChordalPursuit> {
    let index = elimination_index(g, peo)?;
    if g.dist(start, first_sight) > ell || start == first_sight {
        return Err(Error::Precondition(format!(
            "robber at {first_sight} is not in sight of a cop at {start}"
        )));
    }
    Ok(ChordalPursuit {
        index,
        at: start,
        shadow: first_sight,
        start,
    })
}

impl ChordalPursuit {
    pub fn position(&self) -> usize {
        self.at
    }

    pub fn shadow(&self) -> usize {
        self.shadow
    }
}

impl CopPolicy for ChordalPursuit {
    fn place(&mut self, _g: &Graph, _spec: &GameSpec) -> Vec<usize> {
        vec![self.start]
    }

    fn step(&mut self, g: &Graph, _spec: &GameSpec, state: &BeliefState) -> Vec<usize> {
        let robber = match state.phase {
            Phase::Visible(r) => Some(r),
            _ => None,
        };
        self.at = pursuit_step(g, &self.index, self.at, self.shadow, robber);
        vec![self.at]
    }

    fn observe(&mut self, _g: &Graph, _spec: &GameSpec, state: &BeliefState) {
        if let Phase::Visible(r) = state.phase {
            self.shadow = r;
        }
    }
}

/// Outcome of checking the pursuit against every robber.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PursuitCheck {
    /// First-sight configurations (cop, sighted vertex, robber after its
    /// next step) examined.
    pub configurations: usize,
    /// Reachable (cop, shadow, robber) states.
    pub states: usize,
    /// Every robber is captured from every configuration.
    pub captures: bool,
    /// Worst-case rounds to capture over all configurations.
    pub max_rounds: Option<u32>,
    /// The robber was out of sight right after some cop move.
    pub lost_sight: bool,
    /// Cop-to-shadow distance never grew from one cop turn to the next.
    pub non_increasing: bool,
    /// Robber moves `s -> r -> r2` where `r` comes before both neighbors
    /// in the elimination order.
    pub peaks: usize,
    /// Peaks after which the next cop move captured or left the cop closer
    /// to the shadow `r2` than it was to `s`.
    pub peak_decreases: usize,
}

/// Explores every robber reply from every first-sight configuration.
pub fn verify_chordal_pursuit(
    g: &Graph,
    peo: &EliminationOrdering,
    ell: u32,
) -> Result<PursuitCheck> {
    let index = elimination_index(g, peo)?;
    let n = g.n();
    let id = |c: usize, s: usize, r: usize| (c * n + s) * n + r;
    // per state: 0 unseen, 1 on stack, 2 done
    let mut color = vec![0u8; n * n * n];
    let mut rounds = vec![0u32; n * n * n];
    let mut check = PursuitCheck {
        configurations: 0,
        states: 0,
        captures: true,
        max_rounds: Some(0),
        lost_sight: false,
        non_increasing: true,
        peaks: 0,
        peak_decreases: 0,
    };
    let seen = |c: usize, r: usize| (g.dist(c, r) <= ell).then_some(r);
    let successors = |c: usize, s: usize, r: usize| -> (usize, Vec<usize>) {
        let c2 = pursuit_step(g, &index, c, s, seen(c, r));
        if c2 == r {
            return (c2, Vec::new());
        }
        let moves = g
            .closed_neighborhood(r)
            .iter()
            .filter(|&x| x != c2)
            .collect();
        (c2, moves)
    };
    // first sight either at the cops' turn (robber still on the sighted
    // vertex) or right after a cop move, followed by any robber step
    let starts: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|c| (0..n).map(move |s| (c, s)))
        .filter(|&(c, s)| c != s && g.dist(c, s) <= ell)
        .flat_map(|(c, s)| {
            g.closed_neighborhood(s)
                .iter()
                .filter(move |&r| r != c)
                .map(move |r| (c, s, r))
                .collect::<Vec<_>>()
        })
        .collect();
    for (c0, s0, r0) in starts {
        check.configurations += 1;
        let mut stack = vec![(c0, s0, r0)];
        while let Some(&(c, s, r)) = stack.last() {
            let here = id(c, s, r);
            if color[here] == 2 {
                stack.pop();
                continue;
            }
            let (c2, moves) = successors(c, s, r);
            if color[here] == 0 {
                color[here] = 1;
                check.states += 1;
                if g.dist(c2, r) > ell {
                    check.lost_sight = true;
                }
                if g.dist(c2, r) > g.dist(c, s) {
                    check.non_increasing = false;
                }
                for &r2 in &moves {
                    // eliminated earlier means higher in the deletion
                    // order, so a peak is a minimum of the position
                    if index[r] < index[s] && index[r] < index[r2] {
                        check.peaks += 1;
                        let c3 = pursuit_step(g, &index, c2, r, seen(c2, r2));
                        if c3 == r2 || g.dist(c3, r2) < g.dist(c, s) {
                            check.peak_decreases += 1;
                        }
                    }
                    let next = id(c2, r, r2);
                    match color[next] {
                        0 => stack.push((c2, r, r2)),
                        1 => check.captures = false,
                        _ => {}
                    }
                }
                continue;
            }
            // all successors finished
            let worst = moves
                .iter()
                .map(|&r2| rounds[id(c2, r, r2)])
                .max()
                .unwrap_or(0);
            rounds[here] = worst + 1;
            color[here] = 2;
            stack.pop();
        }
        check.max_rounds = check.max_rounds.map(|m| m.max(rounds[id(c0, s0, r0)]));
    }
    if !check.captures || check.lost_sight {
        check.captures = false;
        check.max_rounds = None;
    }
    Ok(check)
}

/// Runs a seeing policy until first sight, then hands over to one
/// pursuing cop while the others stand still.
pub struct SeeThenPursue<P> {
    see: P,
    index: Vec<usize>,
    ell: u32,
    cops: Vec<usize>,
    chase: Option<Chase>,
}

#[derive(Clone, Copy, Debug)]
struct Chase {
    cop: usize,
    shadow: usize,
}

impl<P: CopPolicy> SeeThenPursue<P> {
    pub fn new(g: &Graph, peo: &EliminationOrdering, ell: u32, see: P) -> Result<Self> {
        Ok(SeeThenPursue {
            see,
            index: elimination_index(g, peo)?,
            ell,
            cops: Vec::new(),
            chase: None,
        })
    }

    fn follow(&mut self, g: &Graph, next: Vec<usize>) -> Vec<usize> {
        self.cops = match_step(g, &self.cops, &next).unwrap_or(next);
        self.cops.clone()
    }
}

impl<P: CopPolicy> CopPolicy for SeeThenPursue<P> {
    fn place(&mut self, g: &Graph, spec: &GameSpec) -> Vec<usize> {
        self.chase = None;
        self.cops = self.see.place(g, spec);
        self.cops.clone()
    }

    fn step(&mut self, g: &Graph, spec: &GameSpec, state: &BeliefState) -> Vec<usize> {
        match (state.phase.clone(), self.chase) {
            (Phase::Visible(r), chase) => {
                let chase = chase.unwrap_or_else(|| {
                    let cop = (0..self.cops.len())
                        .min_by_key(|&i| (g.dist(self.cops[i], r), self.cops[i]))
                        .expect("at least one cop");
                    Chase { cop, shadow: r }
                });
                let at = self.cops[chase.cop];
                self.cops[chase.cop] = pursuit_step(g, &self.index, at, chase.shadow, Some(r));
                self.chase = Some(chase);
                self.cops.clone()
            }
            (_, None) => {
                let next = self.see.step(g, spec, state);
                self.follow(g, next)
            }
            // seen after the cop move, then stepped out of range
            (_, Some(chase)) => {
                let at = self.cops[chase.cop];
                self.cops[chase.cop] = pursuit_step(g, &self.index, at, chase.shadow, None);
                self.cops.clone()
            }
        }
    }

    fn observe(&mut self, g: &Graph, spec: &GameSpec, state: &BeliefState) {
        if let Phase::Visible(r) = state.phase {
            match &mut self.chase {
                Some(chase) => chase.shadow = r,
                None => {
                    let cop = (0..self.cops.len())
                        .filter(|&i| g.dist(self.cops[i], r) <= self.ell)
                        .min_by_key(|&i| (g.dist(self.cops[i], r), self.cops[i]));
                    if let Some(cop) = cop {
                        self.chase = Some(Chase { cop, shadow: r });
                    }
                }
            }
        }
        self.see.observe(g, spec, state);
    }
}
