//! Largest member of the recursive tree family contained in a tree.
//!
//! A rank-1 witness is a single vertex. A rank-k witness is a hub `q` with
//! three branches leaving through distinct neighbors of `q`; each branch
//! is a path of `2ℓ+2` edges ending at `r_i`, and beyond `r_i` (away from
//! `q`) sits a rank-(k-1) witness.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub k: usize,
    pub q: usize,
    pub branches: Vec<Branch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    /// Neighbor of `q` the branch leaves through (equals `path[0]`).
    pub direction: usize,
    /// The `2ℓ+2` vertices after `q`, ending at `r_i`.
    pub path: Vec<usize>,
    pub child: RankCertificate,
}

impl RankCertificate {
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = vec![self.q];
        for b in &self.branches {
            out.extend(&b.path);
            out.extend(b.child.vertices());
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Shifts every vertex id by `offset`.
    pub fn offset(&self, offset: usize) -> RankCertificate {
        RankCertificate {
            k: self.k,
            q: self.q + offset,
            branches: self
                .branches
                .iter()
                .map(|b| Branch {
                    direction: b.direction + offset,
                    path: b.path.iter().map(|v| v + offset).collect(),
                    child: b.child.offset(offset),
                })
                .collect(),
        }
    }
}

/// Vertices `w` whose path from `q` passes through `r` (including `r`).
fn away(t: &Graph, q: usize, r: usize) -> VertexSet {
    let dqr = t.dist(q, r);
    VertexSet::from_iter(
        t.n(),
        (0..t.n()).filter(|&w| t.dist(q, w) == dqr + t.dist(r, w)),
    )
}

struct Ranker<'a> {
    t: &'a Graph,
    span: u32,
    memo: HashMap<VertexSet, RankCertificate>,
}

impl Ranker<'_> {
    fn best(&mut self, region: &VertexSet) -> RankCertificate {
        if let Some(c) = self.memo.get(region) {
            return c.clone();
        }
        let t = self.t;
        let first = region.iter().next().expect("regions are nonempty");
        let mut best = RankCertificate {
            k: 1,
            q: first,
            branches: Vec::new(),
        };
        for q in region.iter() {
            let dirs: Vec<usize> = t
                .neighbors(q)
                .iter()
                .copied()
                .filter(|&d| region.contains(d))
                .collect();
            if dirs.len() < 3 {
                continue;
            }
            let mut per_dir: Vec<Branch> = Vec::new();
            for &d in &dirs {
                let mut top: Option<Branch> = None;
                for r in region.iter() {
                    if t.dist(q, r) != self.span || t.dist(d, r) + 1 != self.span {
                        continue;
                    }
                    let child_region = away(t, q, r).intersection(region);
                    let child = self.best(&child_region);
                    if top.as_ref().is_none_or(|b| child.k > b.child.k) {
                        let mut path = t.geodesic(q, r);
                        path.remove(0);
                        top = Some(Branch {
                            direction: d,
                            path,
                            child,
                        });
                    }
                }
                if let Some(b) = top {
                    per_dir.push(b);
                }
            }
            if per_dir.len() < 3 {
                continue;
            }
            // stable sort keeps the lowest-numbered directions among ties
            per_dir.sort_by_key(|b| std::cmp::Reverse(b.child.k));
            per_dir.truncate(3);
            let k = per_dir[2].child.k + 1;
            if k > best.k {
                best = RankCertificate {
                    k,
                    q,
                    branches: per_dir,
                };
            }
        }
        self.memo.insert(region.clone(), best.clone());
        best
    }
}

/// Greatest `k` such that the tree contains a rank-`k` witness, with the
/// witness itself.
pub fn rank(t: &Graph, ell: u32) -> Result<RankCertificate> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let mut r = Ranker {
        t,
        span: 2 * ell + 2,
        memo: HashMap::new(),
    };
    Ok(r.best(&VertexSet::full(t.n())))
}

/// Structural check of a certificate against `t`.
pub fn verify_certificate(t: &Graph, ell: u32, cert: &RankCertificate) -> bool {
    t.is_tree() && check(t, 2 * ell as usize + 2, cert, &VertexSet::full(t.n()))
}

fn check(t: &Graph, span: usize, c: &RankCertificate, region: &VertexSet) -> bool {
    if c.q >= t.n() || !region.contains(c.q) || c.k == 0 {
        return false;
    }
    if c.k == 1 {
        return c.branches.is_empty();
    }
    if c.branches.len() != 3 {
        return false;
    }
    let mut used = VertexSet::empty(t.n());
    used.insert(c.q);
    for b in &c.branches {
        if b.path.len() != span || b.path[0] != b.direction || b.child.k + 1 != c.k {
            return false;
        }
        let mut prev = c.q;
        for &v in &b.path {
            if v >= t.n() || !region.contains(v) || used.contains(v) || !t.has_edge(prev, v) {
                return false;
            }
            used.insert(v);
            prev = v;
        }
        let r = *b.path.last().expect("nonempty path");
        let child_region = away(t, c.q, r).intersection(region);
        if !check(t, span, &b.child, &child_region) {
            return false;
        }
    }
    // distinct directions follow from vertex-disjoint paths
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeightBound {
    /// `⌈h / (2ℓ+2)⌉` with `h` the minimum eccentricity.
    pub eccentricity_reading: usize,
    /// `⌈(h + 1) / (2ℓ+2)⌉`: counts the levels of the tree rooted at a
    /// center rather than its edge height.
    pub levels_reading: usize,
}

pub fn height_bound(t: &Graph, ell: u32) -> Result<HeightBound> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let h = t.radius() as usize;
    let span = 2 * ell as usize + 2;
    Ok(HeightBound {
        eccentricity_reading: h.div_ceil(span).max(1),
        levels_reading: (h + 1).div_ceil(span).max(1),
    })
}
