use super::{Graph, VertexSet};
use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EliminationKind {
    Simplicial,
    Copwin,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationOrdering {
    pub kind: EliminationKind,
    /// `order[i]` is the i-th vertex eliminated.
    pub order: Vec<usize>,
    /// For cop-win orderings, the vertex dominating `order[i]` in the graph
    /// remaining at that step (`None` for the final vertex). Empty for
    /// simplicial orderings.
    pub dominators: Vec<Option<usize>>,
}

impl EliminationOrdering {
    /// Position of each vertex in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Re-checks the ordering against `g` from scratch.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut seen = vec![false; n];
        if self.order.len() != n
            || self
                .order
                .iter()
                .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
        {
            return false;
        }
        let pos = self.positions();
        match self.kind {
            EliminationKind::Simplicial => self.order.iter().all(|&v| {
                let later: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| pos[w] > pos[v])
                    .collect();
                later
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            }),
            EliminationKind::Copwin => {
                if self.dominators.len() != n {
                    return false;
                }
                self.order
                    .iter()
                    .enumerate()
                    .all(|(i, &v)| match self.dominators[i] {
                        None => i + 1 == n,
                        Some(u) => pos[u] > i && dominated_in(g, v, u, |w| pos[w] >= i),
                    })
            }
        }
    }
}

/// `N[v] ⊆ N[u]` within the subgraph of vertices accepted by `alive`.
fn dominated_in(g: &Graph, v: usize, u: usize, alive: impl Fn(usize) -> bool) -> bool {
    (v == u || g.has_edge(v, u))
        && g.neighbors(v)
            .iter()
            .all(|&w| !alive(w) || w == u || g.has_edge(w, u))
}

/// Perfect elimination ordering from maximum cardinality search, checked
/// against the clique condition before being returned.
pub fn chordal_peo(g: &Graph) -> Result<EliminationOrdering> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex remains");
        numbered[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    let peo = EliminationOrdering {
        kind: EliminationKind::Simplicial,
        order: visit,
        dominators: Vec::new(),
    };
    if peo.validate(g) {
        Ok(peo)
    } else {
        Err(Error::NotChordal)
    }
}

/// Repeatedly strips a corner (a vertex whose closed neighborhood is
/// contained in another's within the remaining graph).
pub fn copwin_ordering(g: &Graph) -> Result<EliminationOrdering> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut dominators = Vec::with_capacity(n);
    for _ in 1..n {
        let found = (0..n).filter(|&v| alive[v]).find_map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .find(|&u| alive[u] && dominated_in(g, v, u, |w| alive[w]))
                .map(|u| (v, u))
        });
        let (v, u) = found.ok_or(Error::NotCopWin)?;
        alive[v] = false;
        order.push(v);
        dominators.push(Some(u));
    }
    if n > 0 {
        order.push((0..n).find(|&v| alive[v]).expect("one vertex left"));
        dominators.push(None);
    }
    Ok(EliminationOrdering {
        kind: EliminationKind::Copwin,
        order,
        dominators,
    })
}

/// Size of a smallest set within distance `k` of every vertex, found by
/// trying subsets in increasing size. Exponential; meant for small graphs.
pub fn k_domination_number(g: &Graph, k: u32) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let balls: Vec<VertexSet> = (0..n).map(|v| g.closed_ball(v, k)).collect();
    let full = VertexSet::full(n);
    for size in 1..=n {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let mut cover = VertexSet::empty(n);
            for &v in &pick {
                cover.union_with(&balls[v]);
            }
            if cover == full {
                return size;
            }
            if !next_combination(&mut pick, n) {
                break;
            }
        }
    }
    n
}

/// Advances `pick` to the next size-|pick| subset of `0..n` in
/// lexicographic order; false when exhausted.
pub(crate) fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Whether `f` maps `g` onto `image`, fixes `image` pointwise, and sends
/// every edge to an edge or a single vertex.
pub fn is_retraction(g: &Graph, image: &VertexSet, f: &[usize]) -> bool {
    f.len() == g.n()
        && (0..g.n()).all(|v| image.contains(f[v]) && (!image.contains(v) || f[v] == v))
        && g.edges()
            .iter()
            .all(|&(u, v)| f[u] == f[v] || g.has_edge(f[u], f[v]))
}

/// Backtracking search for a retraction onto `image` (edges may collapse
/// to a vertex). Meant for graphs up to about a dozen vertices.
pub fn find_retraction(g: &Graph, image: &VertexSet) -> Option<Vec<usize>> {
    let n = g.n();
    if image.is_empty() {
        return None;
    }
    let targets = image.to_vec();
    let mut f = vec![usize::MAX; n];
    for v in image.iter() {
        f[v] = v;
    }
    // assign vertices in order of distance from the image so that each has
    // an already-mapped neighbor where possible
    let mut rest: Vec<usize> = (0..n).filter(|&v| !image.contains(v)).collect();
    rest.sort_by_key(|&v| (g.dist_to_set(v, &targets), v));

    fn go(g: &Graph, rest: &[usize], targets: &[usize], f: &mut [usize]) -> bool {
        let Some((&v, tail)) = rest.split_first() else {
            return true;
        };
        for &t in targets {
            let ok = g
                .neighbors(v)
                .iter()
                .all(|&w| f[w] == usize::MAX || f[w] == t || g.has_edge(f[w], t));
            if ok {
                f[v] = t;
                if go(g, tail, targets, f) {
                    return true;
                }
            }
        }
        f[v] = usize::MAX;
        false
    }

    go(g, &rest, &targets, &mut f).then_some(f)
}
