//! Round-by-round construction of multi-cop scripts.

use crate::engine::Script;
use crate::graph::{Graph, VertexSet};

/// A cop alternating between two adjacent vertices. A cop elsewhere
/// first walks to `home`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vibration {
    pub cop: usize,
    pub home: usize,
    pub away: usize,
}

/// Script under construction. Cops are unplaced until first used; an
/// unplaced cop's earlier rounds are filled with its first position.
pub struct Builder<'a> {
    g: &'a Graph,
    walks: Vec<Vec<Option<usize>>>,
    guards: Vec<Vibration>,
    /// Where never-used cops are parked.
    park: usize,
}

impl<'a> Builder<'a> {
    pub fn new(g: &'a Graph, cops: usize, park: usize) -> Self {
        Builder {
            g,
            walks: vec![vec![None]; cops],
            guards: Vec::new(),
            park,
        }
    }

    pub fn pos(&self, cop: usize) -> Option<usize> {
        *self.walks[cop].last().expect("walks start with one entry")
    }

    /// Puts an unplaced cop at `v` from round 0 on.
    pub fn place(&mut self, cop: usize, v: usize) {
        if self.pos(cop).is_none() {
            for slot in &mut self.walks[cop] {
                *slot = Some(v);
            }
        }
    }

    pub fn push_guard(&mut self, vib: Vibration) {
        self.place(vib.cop, vib.home);
        self.guards.push(vib);
    }

    pub fn pop_guard(&mut self) {
        self.guards.pop();
    }

    fn toward(&self, from: usize, to: usize) -> usize {
        if from == to {
            from
        } else {
            self.g.geodesic(from, to)[1]
        }
    }

    /// One round: each listed cop steps toward its target, every active
    /// guard not listed vibrates, everyone else passes.
    pub fn step(&mut self, moves: &[(usize, usize)]) {
        for &(c, t) in moves {
            self.place(c, t);
        }
        let mut next: Vec<Option<usize>> = (0..self.walks.len()).map(|c| self.pos(c)).collect();
        for &(c, t) in moves {
            let p = self.pos(c).expect("placed above");
            next[c] = Some(self.toward(p, t));
        }
        for vib in &self.guards {
            if moves.iter().any(|&(c, _)| c == vib.cop) {
                continue;
            }
            let p = self.pos(vib.cop).expect("guards are placed when pushed");
            next[vib.cop] = Some(if p == vib.home {
                vib.away
            } else if p == vib.away {
                vib.home
            } else {
                self.toward(p, vib.home)
            });
        }
        for (w, v) in self.walks.iter_mut().zip(next) {
            w.push(v);
        }
    }

    /// Moves every listed cop to its target along geodesics, one round at
    /// a time, until all have arrived. Unplaced cops are placed there.
    pub fn go(&mut self, moves: &[(usize, usize)]) {
        for &(c, t) in moves {
            self.place(c, t);
        }
        while moves.iter().any(|&(c, t)| self.pos(c) != Some(t)) {
            self.step(moves);
        }
    }

    /// Runs `sub` with `cops[i]` playing walk `i`, first walking the cops
    /// to the script's starting positions.
    pub fn play(&mut self, cops: &[usize], sub: &Script) {
        let start: Vec<(usize, usize)> = cops.iter().copied().zip(sub.at(0)).collect();
        self.go(&start);
        for t in 1..=sub.rounds() {
            let moves: Vec<(usize, usize)> = cops.iter().copied().zip(sub.at(t)).collect();
            self.step(&moves);
        }
    }

    pub fn rounds(&self) -> usize {
        self.walks[0].len() - 1
    }

    pub fn finish(self) -> Script {
        let park = self.park;
        let walks = self
            .walks
            .into_iter()
            .map(|w| w.into_iter().map(|v| v.unwrap_or(park)).collect())
            .collect();
        Script::new(walks)
    }
}

/// Neighbors of `v` other than `parent`.
pub fn children(t: &Graph, v: usize, parent: Option<usize>) -> Vec<usize> {
    t.neighbors(v)
        .iter()
        .copied()
        .filter(|&w| Some(w) != parent)
        .collect()
}

/// Vertices of the subtree at `s` hanging away from `parent` (everything
/// when `parent` is `None`).
pub fn subtree(t: &Graph, s: usize, parent: Option<usize>) -> VertexSet {
    match parent {
        None => VertexSet::full(t.n()),
        Some(p) => VertexSet::from_iter(
            t.n(),
            (0..t.n()).filter(|&w| t.dist(p, w) == t.dist(s, w) + 1),
        ),
    }
}

/// Largest distance from `s` within its subtree.
pub fn rooted_height(t: &Graph, s: usize, parent: Option<usize>) -> u32 {
    subtree(t, s, parent)
        .iter()
        .map(|w| t.dist(s, w))
        .max()
        .unwrap_or(0)
}

/// Vertices of the subtree at `s` at distance exactly `d` from `s`, each
/// paired with its parent.
pub fn descendants_at(t: &Graph, s: usize, parent: Option<usize>, d: u32) -> Vec<(usize, usize)> {
    let region = subtree(t, s, parent);
    region
        .iter()
        .filter(|&w| t.dist(s, w) == d && d > 0)
        .map(|w| {
            let p = t.geodesic(w, s)[1];
            (w, p)
        })
        .collect()
}
