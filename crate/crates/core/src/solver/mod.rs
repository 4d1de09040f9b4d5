//! Exact solving by least fixpoint over the reachable cops-to-move states.
//!
//! States are packed into fixed-size keys (vertex sets as `u64` masks, so
//! graphs are limited to 64 vertices). Exploration is breadth-first from
//! every placement; node ids follow discovery order, which makes every
//! result independent of hashing. A node is cop-winning when some move
//! leaves only cop-winning successors; infinite play counts for the robber.

mod profile;

pub use profile::{
    cop_number, cop_number_with, cut_vertex_bounds, profile, search_witness, ChainViolation,
    CutBound, Profile, ProfileOptions, WitnessSearch,
};

use crate::engine::{
    initial_branches, robber_turn, BeliefState, Branch, CopPolicy, GameSpec, Mover, Phase,
    RobberPolicy, Stage,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;
/// Largest supported cop count (cops are packed 6 bits apiece).
pub const MAX_COPS: usize = 21;
/// State budget used when callers do not choose one.
pub const DEFAULT_BUDGET: usize = 5_000_000;

const INVISIBLE: u8 = 0;
const VISIBLE: u8 = 1;
const DELAYED: u8 = 2;
const ROOT: u8 = 3;
const HAS_SNAPSHOT: u8 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Key {
    cops: u128,
    info: u64,
    snap: u64,
    tag: u8,
}

fn pack(cops: &[usize]) -> u128 {
    cops.iter()
        .enumerate()
        .fold(0u128, |acc, (i, &c)| acc | ((c as u128) << (6 * i)))
}

fn unpack(packed: u128, k: usize) -> Vec<usize> {
    (0..k)
        .map(|i| ((packed >> (6 * i)) & 63) as usize)
        .collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Mask-based transition relation mirroring the engine.
struct Arena {
    k: usize,
    full: u64,
    nb: Vec<u64>,
    ball: Vec<u64>,
    see: bool,
    monotone: bool,
    delayed: bool,
}

impl Arena {
    fn new(g: &Graph, spec: &GameSpec) -> Result<Arena> {
        let n = g.n();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                limit: MAX_VERTICES,
            });
        }
        if spec.cops > MAX_COPS {
            return Err(Error::TooLarge {
                n: spec.cops,
                limit: MAX_COPS,
            });
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(Arena {
            k: spec.cops,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            nb: (0..n).map(|v| g.closed_neighborhood(v).to_mask()).collect(),
            ball: (0..n)
                .map(|v| g.closed_ball(v, spec.ell).to_mask())
                .collect(),
            see: spec.win_on_sight(),
            monotone: spec.monotone(),
            delayed: spec.delayed(),
        })
    }

    fn expand(&self, set: u64) -> u64 {
        bits(set).fold(0, |acc, v| acc | self.nb[v])
    }

    fn view(&self, cops: &[usize]) -> (u64, u64) {
        let occupied = cops.iter().fold(0u64, |m, &c| m | (1u64 << c));
        let view = cops.iter().fold(0u64, |m, &c| m | self.ball[c]);
        (occupied, view)
    }

    /// All distinct cop multisets reachable in one move, in a fixed order.
    fn moves(&self, cops: &[usize]) -> Vec<u128> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.k);
        self.moves_rec(cops, &mut cur, &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn moves_rec(&self, cops: &[usize], cur: &mut Vec<usize>, out: &mut Vec<u128>) {
        let i = cur.len();
        if i == cops.len() {
            let mut s = cur.clone();
            s.sort_unstable();
            out.push(pack(&s));
            return;
        }
        for w in bits(self.nb[cops[i]]) {
            cur.push(w);
            self.moves_rec(cops, cur, out);
            cur.pop();
        }
    }

    /// Every sorted multiset of `k` vertices.
    fn placements(&self, n: usize) -> Vec<u128> {
        let mut out = Vec::new();
        let mut cur = vec![0usize; self.k];
        loop {
            out.push(pack(&cur));
            // next non-decreasing sequence
            let mut i = self.k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] + 1 < n {
                    let v = cur[i] + 1;
                    for c in &mut cur[i..] {
                        *c = v;
                    }
                    break;
                }
            }
        }
    }

    fn key(&self, cops: u128, tag: u8, info: u64, snap: Option<u64>) -> Key {
        match snap {
            Some(s) => Key {
                cops,
                info,
                snap: s,
                tag: tag | HAS_SNAPSHOT,
            },
            None => Key {
                cops,
                info,
                snap: 0,
                tag,
            },
        }
    }

    /// Robber at `v` steps and is observed by cops with `occupied`/`view`.
    fn robber_from(&self, cops: u128, v: u64, occupied: u64, view: u64, out: &mut Vec<Key>) {
        let choices = self.nb[v as usize] & !occupied;
        if !self.see {
            for u in bits(choices & view) {
                out.push(self.key(cops, VISIBLE, u as u64, None));
            }
        }
        let unseen = choices & !view;
        if unseen != 0 {
            out.push(self.key(cops, INVISIBLE, unseen, None));
        }
    }

    /// Successors after the placement `cops`; empty means an immediate win.
    fn initial(&self, packed: u128, out: &mut Vec<Key>) {
        out.clear();
        let cops = unpack(packed, self.k);
        let (occupied, view) = self.view(&cops);
        let free = self.full & !occupied;
        if free == 0 {
            return;
        }
        if self.delayed {
            out.push(self.key(packed, DELAYED, free, None));
            return;
        }
        if !self.see {
            for v in bits(free & view) {
                out.push(self.key(packed, VISIBLE, v as u64, None));
            }
        }
        if free & !view != 0 {
            out.push(self.key(packed, INVISIBLE, free & !view, None));
        }
    }

    /// Cops-to-move successors of `key` after the cop move `mv` and the
    /// robber reply. False when the move is illegal (monotone play only).
    fn step(&self, key: &Key, mv: u128, out: &mut Vec<Key>) -> bool {
        out.clear();
        let cops = unpack(mv, self.k);
        let (occupied, view) = self.view(&cops);
        match key.tag & 3 {
            INVISIBLE => {
                let t = key.info;
                let t1 = t & !view;
                if self.monotone && key.tag & HAS_SNAPSHOT != 0 && t1 & !key.snap != 0 {
                    return false;
                }
                if !self.see {
                    for v in bits(t & view & !occupied) {
                        self.robber_from(mv, v as u64, occupied, view, out);
                    }
                }
                if t1 != 0 {
                    let t2 = self.expand(t1) & !occupied;
                    if !self.see {
                        for u in bits(t2 & view) {
                            out.push(self.key(mv, VISIBLE, u as u64, None));
                        }
                    }
                    let unseen = t2 & !view;
                    if unseen != 0 {
                        let snap = self.monotone.then_some(t1);
                        out.push(self.key(mv, INVISIBLE, unseen, snap));
                    }
                }
            }
            VISIBLE => {
                let r = key.info;
                if occupied & (1u64 << r) == 0 {
                    self.robber_from(mv, r, occupied, view, out);
                }
            }
            DELAYED => {
                for v in bits(key.info & !occupied) {
                    out.push(self.key(mv, DELAYED, self.nb[v] & !occupied, None));
                }
            }
            _ => unreachable!("root has no cop position"),
        }
        out.sort_unstable();
        out.dedup();
        true
    }

    fn decode(&self, n: usize, key: &Key) -> BeliefState {
        let phase = match key.tag & 3 {
            INVISIBLE => Phase::Invisible(VertexSet::from_mask(n, key.info)),
            VISIBLE => Phase::Visible(key.info as usize),
            DELAYED => Phase::Delayed(VertexSet::from_mask(n, key.info)),
            _ => unreachable!("root is not a game state"),
        };
        BeliefState {
            cops: unpack(key.cops, self.k),
            phase,
            snapshot: (key.tag & HAS_SNAPSHOT != 0).then(|| VertexSet::from_mask(n, key.snap)),
            to_move: Mover::Cops,
        }
    }

    fn encode(&self, s: &BeliefState) -> Option<Key> {
        if s.to_move != Mover::Cops || s.cops.len() != self.k {
            return None;
        }
        let (tag, info) = match &s.phase {
            Phase::Invisible(t) => (INVISIBLE, t.to_mask()),
            Phase::Visible(r) => (VISIBLE, *r as u64),
            Phase::Delayed(b) => (DELAYED, b.to_mask()),
        };
        Some(self.key(
            pack(&s.cops),
            tag,
            info,
            s.snapshot.as_ref().map(VertexSet::to_mask),
        ))
    }
}

/// Cops-to-move successors of `state` after the cops move to `new_cops`
/// and the robber replies, computed on the solver's packed representation.
/// `None` when the move is illegal for monotone play. Terminal cop wins
/// are omitted. Exposed for cross-checking against the engine.
pub fn packed_successors(
    g: &Graph,
    spec: &GameSpec,
    state: &BeliefState,
    new_cops: &[usize],
) -> Result<Option<Vec<BeliefState>>> {
    let arena = Arena::new(g, spec)?;
    let key = arena.encode(state).ok_or(Error::WrongPhase(
        "packed_successors needs a cops-to-move state",
    ))?;
    let mut cops = new_cops.to_vec();
    cops.sort_unstable();
    let mut out = Vec::new();
    if !arena.step(&key, pack(&cops), &mut out) {
        return Ok(None);
    }
    Ok(Some(out.iter().map(|k| arena.decode(g.n(), k)).collect()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Winner {
    Cops,
    Robber,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Stored game states (excluding the virtual root).
    pub states: usize,
    /// Stored (state, move) pairs.
    pub moves: usize,
    /// Stored move-to-successor edges.
    pub edges: usize,
    /// Breadth-first layers explored and the widest layer.
    pub layers: usize,
    pub max_frontier: usize,
}

/// Fully solved game: the reachable state graph with win distances.
pub struct Solution {
    g: Graph,
    spec: GameSpec,
    arena: Arena,
    keys: Vec<Key>,
    index: HashMap<Key, u32>,
    move_start: Vec<u32>,
    succ_start: Vec<u64>,
    succ: Vec<u32>,
    /// Rounds needed to force a win from each node; `u32::MAX` if the
    /// robber escapes forever.
    dist: Vec<u32>,
    pub stats: SolveStats,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub spec: GameSpec,
    pub winner: Winner,
    /// Rounds after placement the cops need against best play (cop wins only).
    pub rounds: Option<u32>,
    pub stats: SolveStats,
    pub budget: usize,
}

const LOST: u32 = u32::MAX;

impl Solution {
    pub fn spec(&self) -> &GameSpec {
        &self.spec
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn winner(&self) -> Winner {
        if self.dist[0] == LOST {
            Winner::Robber
        } else {
            Winner::Cops
        }
    }

    /// Rounds the cops need from the placement on.
    pub fn rounds(&self) -> Option<u32> {
        (self.dist[0] != LOST).then(|| self.dist[0] - 1)
    }

    pub fn outcome(&self, budget: usize) -> SolveOutcome {
        SolveOutcome {
            spec: self.spec,
            winner: self.winner(),
            rounds: self.rounds(),
            stats: self.stats.clone(),
            budget,
        }
    }

    fn moves_of(&self, node: usize) -> Vec<u128> {
        let key = &self.keys[node];
        if key.tag == ROOT {
            return self.arena.placements(self.g.n());
        }
        let cops = unpack(key.cops, self.arena.k);
        let mut buf = Vec::new();
        self.arena
            .moves(&cops)
            .into_iter()
            .filter(|&m| self.arena.step(key, m, &mut buf))
            .collect()
    }

    fn move_value(&self, m: usize) -> u32 {
        let range = self.succ_start[m] as usize..self.succ_start[m + 1] as usize;
        self.succ[range]
            .iter()
            .map(|&s| self.dist[s as usize])
            .max()
            .unwrap_or(0)
    }

    fn best_move(&self, node: usize) -> Option<Vec<usize>> {
        let d = self.dist[node];
        if d == LOST {
            return None;
        }
        let moves = self.moves_of(node);
        let base = self.move_start[node] as usize;
        let is_root = node == 0;
        moves.iter().enumerate().find_map(|(i, &mv)| {
            let v = self.move_value(base + i);
            let total = if is_root { v + 1 } else { v.saturating_add(1) };
            (v != LOST && total == d).then(|| unpack(mv, self.arena.k))
        })
    }

    /// Optimal placement for a cop win.
    pub fn placement(&self) -> Option<Vec<usize>> {
        self.best_move(0)
    }

    fn node_of(&self, state: &BeliefState) -> Option<usize> {
        let key = self.arena.encode(state)?;
        self.index.get(&key).map(|&i| i as usize)
    }

    /// Rounds needed to win from a cops-to-move state; `None` if the robber
    /// escapes or the state was never reached.
    pub fn distance(&self, state: &BeliefState) -> Option<u32> {
        self.node_of(state)
            .map(|i| self.dist[i])
            .filter(|&d| d != LOST)
    }

    pub fn is_cop_win(&self, state: &BeliefState) -> Option<bool> {
        self.node_of(state).map(|i| self.dist[i] != LOST)
    }

    /// Optimal cop move (minimizing the win distance) from a winning state.
    pub fn cop_move(&self, state: &BeliefState) -> Option<Vec<usize>> {
        self.best_move(self.node_of(state)?)
    }

    /// Win distance of a cops-to-move state for the robber's ranking:
    /// escaping states rank highest.
    fn rank(&self, state: &BeliefState) -> u64 {
        match self.node_of(state) {
            Some(i) if self.dist[i] == LOST => u64::MAX,
            Some(i) => self.dist[i] as u64,
            None => 0,
        }
    }

    /// Cop policy table keyed by canonical state encoding.
    pub fn cop_policy_table(&self) -> BTreeMap<String, Vec<usize>> {
        let mut out = BTreeMap::new();
        if let Some(p) = self.placement() {
            out.insert("PLACE".to_string(), p);
        }
        for node in 1..self.keys.len() {
            if let Some(m) = self.best_move(node) {
                out.insert(self.arena.decode(self.g.n(), &self.keys[node]).encode(), m);
            }
        }
        out
    }

    /// Robber-won states keyed by canonical encoding, each with one
    /// successor per cop move that keeps the robber safe.
    pub fn robber_policy_table(&self) -> BTreeMap<String, Vec<(Vec<usize>, String)>> {
        let mut out = BTreeMap::new();
        let n = self.g.n();
        for node in 1..self.keys.len() {
            if self.dist[node] != LOST {
                continue;
            }
            let base = self.move_start[node] as usize;
            let replies = self
                .moves_of(node)
                .iter()
                .enumerate()
                .filter_map(|(i, &mv)| {
                    let m = base + i;
                    let range = self.succ_start[m] as usize..self.succ_start[m + 1] as usize;
                    self.succ[range]
                        .iter()
                        .find(|&&s| self.dist[s as usize] == LOST)
                        .map(|&s| {
                            let st = self.arena.decode(n, &self.keys[s as usize]);
                            (unpack(mv, self.arena.k), st.encode())
                        })
                })
                .collect();
            out.insert(self.arena.decode(n, &self.keys[node]).encode(), replies);
        }
        out
    }

    /// Iterates over every stored cops-to-move state with its distance.
    pub fn states(&self) -> impl Iterator<Item = (BeliefState, Option<u32>)> + '_ {
        (1..self.keys.len()).map(move |i| {
            let d = self.dist[i];
            (
                self.arena.decode(self.g.n(), &self.keys[i]),
                (d != LOST).then_some(d),
            )
        })
    }
}

impl CopPolicy for Solution {
    fn place(&mut self, g: &Graph, spec: &GameSpec) -> Vec<usize> {
        self.placement()
            .unwrap_or_else(|| vec![0; spec.cops.min(g.n().max(1))])
    }

    fn step(&mut self, _g: &Graph, _spec: &GameSpec, state: &BeliefState) -> Vec<usize> {
        self.cop_move(state).unwrap_or_else(|| state.cops.clone())
    }
}

impl RobberPolicy for Solution {
    fn choose(
        &mut self,
        g: &Graph,
        spec: &GameSpec,
        stage: Stage,
        _cops: &[usize],
        branches: &[Branch],
    ) -> usize {
        let value = |b: &Branch| -> u64 {
            match b {
                Branch::CopWin { .. } => 0,
                Branch::Continue(s) if stage == Stage::AfterCops => robber_turn(g, spec, s)
                    .map(|next| {
                        next.iter()
                            .map(|b| match b {
                                Branch::CopWin { .. } => 0,
                                Branch::Continue(t) => self.rank(t),
                            })
                            .max()
                            .unwrap_or(0)
                    })
                    .unwrap_or(0),
                Branch::Continue(s) => self.rank(s),
            }
        };
        let mut best = 0;
        let mut best_v = None;
        for (i, b) in branches.iter().enumerate() {
            let v = value(b);
            if best_v.is_none_or(|bv| v > bv) {
                best = i;
                best_v = Some(v);
            }
        }
        best
    }
}

/// Explores every reachable state and solves the game exactly.
/// Returns `Err(BudgetExceeded)` when more than `budget` states are needed.
pub fn solve_full(g: &Graph, spec: &GameSpec, budget: usize) -> Result<Solution> {
    let arena = Arena::new(g, spec)?;
    let root = Key {
        cops: 0,
        info: 0,
        snap: 0,
        tag: ROOT,
    };
    let mut keys = vec![root];
    let mut index: HashMap<Key, u32> = HashMap::new();
    index.insert(root, 0);
    let mut move_start: Vec<u32> = vec![0];
    let mut succ_start: Vec<u64> = vec![0];
    let mut succ: Vec<u32> = Vec::new();
    let mut buf = Vec::new();
    let mut stats = SolveStats {
        states: 0,
        moves: 0,
        edges: 0,
        layers: 0,
        max_frontier: 0,
    };
    let mut layer_end = 1;
    let mut next = 0usize;
    while next < keys.len() {
        if next == layer_end {
            stats.layers += 1;
            stats.max_frontier = stats.max_frontier.max(keys.len() - layer_end);
            layer_end = keys.len();
        }
        let key = keys[next];
        let moves = if key.tag == ROOT {
            arena.placements(g.n())
        } else {
            arena.moves(&unpack(key.cops, arena.k))
        };
        for mv in moves {
            let legal = if key.tag == ROOT {
                arena.initial(mv, &mut buf);
                true
            } else {
                arena.step(&key, mv, &mut buf)
            };
            if !legal {
                continue;
            }
            for s in &buf {
                let id = match index.get(s) {
                    Some(&id) => id,
                    None => {
                        if keys.len() > budget {
                            return Err(Error::BudgetExceeded { budget });
                        }
                        let id = keys.len() as u32;
                        keys.push(*s);
                        index.insert(*s, id);
                        id
                    }
                };
                succ.push(id);
            }
            succ_start.push(succ.len() as u64);
        }
        move_start.push((succ_start.len() - 1) as u32);
        next += 1;
    }
    stats.states = keys.len() - 1;
    stats.moves = succ_start.len() - 1;
    stats.edges = succ.len();

    let dist = retrograde(&keys, &move_start, &succ_start, &succ);
    Ok(Solution {
        g: g.clone(),
        spec: *spec,
        arena,
        keys,
        index,
        move_start,
        succ_start,
        succ,
        dist,
        stats,
    })
}

/// Least fixpoint with per-move counters of unresolved successors.
/// Nodes resolve in nondecreasing distance order, so the first move of a
/// node to complete fixes its minimal win distance.
fn retrograde(keys: &[Key], move_start: &[u32], succ_start: &[u64], succ: &[u32]) -> Vec<u32> {
    let nodes = keys.len();
    let moves = succ_start.len() - 1;
    let mut owner = vec![0u32; moves];
    for node in 0..nodes {
        for m in move_start[node]..move_start[node + 1] {
            owner[m as usize] = node as u32;
        }
    }
    // reverse edges: successor -> moves leading to it (each move counted once per distinct successor)
    let mut unmet = vec![0u32; moves];
    let mut rev_count = vec![0u32; nodes + 1];
    for m in 0..moves {
        let range = succ_start[m] as usize..succ_start[m + 1] as usize;
        let list = &succ[range];
        for (i, &s) in list.iter().enumerate() {
            if !list[..i].contains(&s) {
                unmet[m] += 1;
                rev_count[s as usize + 1] += 1;
            }
        }
    }
    for i in 0..nodes {
        rev_count[i + 1] += rev_count[i];
    }
    let rev_start = rev_count.clone();
    let mut fill = rev_count;
    let mut rev = vec![0u32; rev_start[nodes] as usize];
    for m in 0..moves {
        let range = succ_start[m] as usize..succ_start[m + 1] as usize;
        let list = &succ[range];
        for (i, &s) in list.iter().enumerate() {
            if !list[..i].contains(&s) {
                rev[fill[s as usize] as usize] = m as u32;
                fill[s as usize] += 1;
            }
        }
    }

    let mut dist = vec![LOST; nodes];
    let mut queue = VecDeque::new();
    for m in 0..moves {
        if unmet[m] == 0 {
            let o = owner[m] as usize;
            if dist[o] == LOST {
                dist[o] = 1;
                queue.push_back(o as u32);
            }
        }
    }
    while let Some(x) = queue.pop_front() {
        let d = dist[x as usize];
        for &m in &rev[rev_start[x as usize] as usize..rev_start[x as usize + 1] as usize] {
            let m = m as usize;
            unmet[m] -= 1;
            if unmet[m] == 0 {
                let o = owner[m] as usize;
                if dist[o] == LOST {
                    dist[o] = d + 1;
                    queue.push_back(o as u32);
                }
            }
        }
    }
    dist
}

/// Solves and summarizes; a budget overrun yields an `INCONCLUSIVE` outcome
/// instead of an error.
pub fn solve(g: &Graph, spec: &GameSpec, budget: usize) -> Result<SolveOutcome> {
    match solve_full(g, spec, budget) {
        Ok(sol) => Ok(sol.outcome(budget)),
        Err(Error::BudgetExceeded { .. }) => Ok(SolveOutcome {
            spec: *spec,
            winner: Winner::Inconclusive,
            rounds: None,
            stats: SolveStats {
                states: budget,
                moves: 0,
                edges: 0,
                layers: 0,
                max_frontier: 0,
            },
            budget,
        }),
        Err(e) => Err(e),
    }
}

/// Winner only, using forward search when every cop move has at most one
/// continuing branch (seeing goal, zero visibility); otherwise the full
/// fixpoint.
pub fn decide(g: &Graph, spec: &GameSpec, budget: usize) -> Result<Winner> {
    let single_branch =
        spec.win_on_sight() || (spec.ell == 0 && !spec.delayed() && !spec.monotone());
    if !single_branch {
        return Ok(solve(g, spec, budget)?.winner);
    }
    let arena = Arena::new(g, spec)?;
    let mut seen: HashSet<Key> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut buf = Vec::new();
    for p in arena.placements(g.n()) {
        arena.initial(p, &mut buf);
        debug_assert!(buf.len() <= 1);
        match buf.first() {
            None => return Ok(Winner::Cops),
            Some(k) => {
                if !seen.contains(k) {
                    if seen.len() >= budget {
                        return Ok(Winner::Inconclusive);
                    }
                    seen.insert(*k);
                    queue.push_back(*k);
                }
            }
        }
    }
    while let Some(key) = queue.pop_front() {
        for mv in arena.moves(&unpack(key.cops, arena.k)) {
            arena.step(&key, mv, &mut buf);
            match buf.first() {
                None => return Ok(Winner::Cops),
                Some(k) => {
                    if !seen.contains(k) {
                        if seen.len() >= budget {
                            return Ok(Winner::Inconclusive);
                        }
                        seen.insert(*k);
                        queue.push_back(*k);
                    }
                }
            }
        }
    }
    Ok(Winner::Robber)
}

/// Convenience: the robber-side branch a solved robber would take from the
/// placement (used by examples and tests).
pub fn robber_reply(sol: &Solution, placement: &[usize]) -> Result<Option<BeliefState>> {
    let branches = initial_branches(&sol.g, &sol.spec, placement)?;
    Ok(branches
        .into_iter()
        .filter_map(|b| match b {
            Branch::Continue(s) => Some(s),
            _ => None,
        })
        .max_by_key(|s| sol.rank(s)))
}
