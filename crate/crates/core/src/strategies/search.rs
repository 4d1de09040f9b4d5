//! Exhaustive search for cleaning scripts: single cop-move sequences that
//! leave no unseen robber position, optionally without the post-move
//! territory ever growing.

use crate::engine::Script;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::hash_map::Entry;
use std::collections::HashMap;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Node {
    cops: u128,
    territory: u64,
    /// Previous post-move territory (monotone search only).
    prev: u64,
}

fn pack(cops: &[usize]) -> u128 {
    cops.iter()
        .enumerate()
        .fold(0u128, |acc, (i, &c)| acc | ((c as u128) << (7 * i)))
}

fn unpack(p: u128, k: usize) -> Vec<usize> {
    (0..k).map(|i| ((p >> (7 * i)) & 127) as usize).collect()
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

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub script: Option<Script>,
    pub states: usize,
}

/// Breadth-first search for a `k`-cop script after which no robber
/// position is unseen. With `monotone`, moves that let the post-move
/// territory gain a vertex are forbidden. The script found is shortest.
pub fn find_cleaning_script(
    g: &Graph,
    ell: u32,
    k: usize,
    monotone: bool,
    budget: usize,
) -> Result<SearchResult> {
    let n = g.n();
    if n > 64 {
        return Err(Error::TooLarge { n, limit: 64 });
    }
    if k == 0 || k > 18 {
        return Err(Error::Precondition(
            "cop count must be between 1 and 18".into(),
        ));
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let nb: Vec<u64> = (0..n).map(|v| g.closed_neighborhood(v).to_mask()).collect();
    let ball: Vec<u64> = (0..n).map(|v| g.closed_ball(v, ell).to_mask()).collect();
    let view = |cops: &[usize]| cops.iter().fold(0u64, |m, &c| m | ball[c]);
    let occ = |cops: &[usize]| cops.iter().fold(0u64, |m, &c| m | (1u64 << c));

    let mut nodes: Vec<Node> = Vec::new();
    let mut parent: Vec<u32> = Vec::new();
    let mut index: HashMap<Node, u32> = HashMap::new();
    let mut found: Option<(u32, Vec<usize>)> = None;

    // placements in non-decreasing order
    let mut cur = vec![0usize; k];
    'place: loop {
        let t0 = full & !view(&cur);
        if t0 == 0 {
            found = Some((u32::MAX, cur.clone()));
            break 'place;
        }
        let node = Node {
            cops: pack(&cur),
            territory: t0,
            prev: if monotone { t0 } else { 0 },
        };
        if let Entry::Vacant(e) = index.entry(node) {
            e.insert(nodes.len() as u32);
            nodes.push(node);
            parent.push(u32::MAX);
        }
        let mut i = k;
        loop {
            if i == 0 {
                break 'place;
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

    let mut head = 0;
    while found.is_none() && head < nodes.len() {
        let node = nodes[head];
        let cops = unpack(node.cops, k);
        let mut moves = Vec::new();
        let mut pick = Vec::with_capacity(k);
        fn rec(
            i: usize,
            cops: &[usize],
            nb: &[u64],
            pick: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if i == cops.len() {
                let mut s = pick.clone();
                s.sort_unstable();
                out.push(s);
                return;
            }
            for w in bits(nb[cops[i]]) {
                pick.push(w);
                rec(i + 1, cops, nb, pick, out);
                pick.pop();
            }
        }
        rec(0, &cops, &nb, &mut pick, &mut moves);
        moves.sort_unstable();
        moves.dedup();
        for m in moves {
            let v = view(&m);
            let t1 = node.territory & !v;
            if monotone && t1 & !node.prev != 0 {
                continue;
            }
            if t1 == 0 {
                found = Some((head as u32, m));
                break;
            }
            let t2 = bits(t1).fold(0u64, |acc, x| acc | nb[x]) & !occ(&m) & !v;
            if t2 == 0 {
                found = Some((head as u32, m));
                break;
            }
            let next = Node {
                cops: pack(&m),
                territory: t2,
                prev: if monotone { t1 } else { 0 },
            };
            if let Entry::Vacant(e) = index.entry(next) {
                if nodes.len() >= budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                e.insert(nodes.len() as u32);
                nodes.push(next);
                parent.push(head as u32);
            }
        }
        head += 1;
    }

    let states = nodes.len();
    let Some((last, final_move)) = found else {
        return Ok(SearchResult {
            script: None,
            states,
        });
    };
    let mut seq = vec![final_move];
    let mut at = last;
    while at != u32::MAX {
        seq.push(unpack(nodes[at as usize].cops, k));
        at = parent[at as usize];
    }
    seq.reverse();
    Ok(SearchResult {
        script: Some(assign_walks(g, &seq)),
        states,
    })
}

/// Turns a sequence of cop multisets into per-cop walks by matching each
/// multiset to the next.
pub fn assign_walks(g: &Graph, seq: &[Vec<usize>]) -> Script {
    let k = seq[0].len();
    let mut walks: Vec<Vec<usize>> = seq[0].iter().map(|&v| vec![v]).collect();
    for next in &seq[1..] {
        let cur: Vec<usize> = walks.iter().map(|w| *w.last().expect("nonempty")).collect();
        let assignment =
            match_step(g, &cur, next).expect("consecutive multisets are one move apart");
        for i in 0..k {
            walks[i].push(assignment[i]);
        }
    }
    Script::new(walks)
}

/// For cops at `from` (in cop order), an ordering of the multiset `to`
/// such that cop `i` can reach entry `i` in one step.
pub fn match_step(g: &Graph, from: &[usize], to: &[usize]) -> Option<Vec<usize>> {
    let k = from.len();
    let mut owner = vec![usize::MAX; k];
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
    for i in 0..k {
        if !augment(g, i, from, to, &mut vec![false; k], &mut owner) {
            return None;
        }
    }
    let mut out = vec![0; k];
    for (j, &i) in owner.iter().enumerate() {
        out[i] = to[j];
    }
    Some(out)
}
