//! Immutable simple graphs with cached all-pairs distances, plus the
//! structural recognizers the game analysis leans on.

mod format;
mod recognize;
mod vertex_set;

pub use format::{parse_graph, GraphFile};
pub use recognize::{
    chordal_peo, copwin_ordering, find_retraction, is_retraction, k_domination_number,
    EliminationKind, EliminationOrdering,
};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::VecDeque;

/// Distance value for vertex pairs in different components.
pub const INF: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    dist: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<usize>,
    /// Minimum eccentricity, reported only for trees.
    pub height: Option<u32>,
}

impl Graph {
    /// Builds a simple graph. Edges are undirected; `(u, v)` and `(v, u)`
    /// are the same edge and listing both is a duplicate.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
            norm.push((u.min(v), u.max(v)));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let mut g = Graph {
            n,
            adj,
            edges: norm,
            dist: Vec::new(),
        };
        g.dist = g.all_pairs_bfs();
        Ok(g)
    }

    fn all_pairs_bfs(&self) -> Vec<u32> {
        let n = self.n;
        let mut dist = vec![INF; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if row[w] == INF {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        dist
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order, each normalized as `(min, max)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Distance from `v` to the nearest member of `set`; `INF` for an empty set.
    pub fn dist_to_set(&self, v: usize, set: &[usize]) -> u32 {
        set.iter().map(|&c| self.dist(v, c)).min().unwrap_or(INF)
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::from_iter(self.n, self.adj[v].iter().copied());
        s.insert(v);
        s
    }

    /// `{ u : d(u, v) <= r }`.
    pub fn closed_ball(&self, v: usize, r: u32) -> VertexSet {
        assert!(v < self.n, "vertex {v} out of range");
        VertexSet::from_iter(self.n, (0..self.n).filter(|&u| self.dist(u, v) <= r))
    }

    /// Union of the radius-`r` balls around every vertex in `centers`.
    pub fn ball_of_set(&self, centers: &[usize], r: u32) -> VertexSet {
        VertexSet::from_iter(
            self.n,
            (0..self.n).filter(|&u| centers.iter().any(|&c| self.dist(u, c) <= r)),
        )
    }

    /// Closed neighborhood of a set: every vertex within one step of it.
    pub fn expand(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || (0..self.n).all(|v| self.dist(0, v) != INF)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edges.len() + 1 == self.n
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        (0..self.n).map(|u| self.dist(v, u)).max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    pub fn radius(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).min().unwrap_or(0)
    }

    pub fn metrics(&self) -> Result<Metrics> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let ecc: Vec<u32> = (0..self.n).map(|v| self.eccentricity(v)).collect();
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let center = (0..self.n).filter(|&v| ecc[v] == radius).collect();
        Ok(Metrics {
            radius,
            diameter,
            center,
            height: self.is_tree().then_some(radius),
        })
    }

    /// Connected components of the subgraph induced by `keep`.
    pub fn components_within(&self, keep: &VertexSet) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for s in keep.iter() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if keep.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `vertices` (relabelled in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::new(vertices.len(), &edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let all = VertexSet::full(self.n);
        let base = self.components_within(&all).len();
        (0..self.n)
            .filter(|&v| {
                let mut keep = all.clone();
                keep.remove(v);
                self.components_within(&keep).len() > base
            })
            .collect()
    }

    /// Edges whose removal disconnects the graph.
    pub fn cut_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| {
                // u and v stay connected without the edge iff some other path exists
                let mut seen = vec![false; self.n];
                let mut stack = vec![u];
                seen[u] = true;
                while let Some(x) = stack.pop() {
                    for &w in &self.adj[x] {
                        if (x == u && w == v) || (x == v && w == u) || seen[w] {
                            continue;
                        }
                        seen[w] = true;
                        stack.push(w);
                    }
                }
                !seen[v]
            })
            .collect()
    }

    /// Path from `u` to `v` along a shortest route; ties broken by the
    /// smallest next vertex.
    pub fn geodesic(&self, u: usize, v: usize) -> Vec<usize> {
        assert!(self.dist(u, v) != INF, "no path between {u} and {v}");
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| self.dist(w, v) + 1 == self.dist(cur, v))
                .expect("bfs distances are consistent");
            path.push(cur);
        }
        path
    }

    /// Hex SHA-256 over the canonical text form (`n m`, then sorted edges).
    pub fn hash(&self) -> String {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        let mut h = Sha256::new();
        h.update(format!("{} {}\n", self.n, edges.len()));
        for (u, v) in edges {
            h.update(format!("{u} {v}\n"));
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.dist(0, 0), 0);
        let m = g.metrics().unwrap();
        assert_eq!((m.radius, m.diameter, m.height), (0, 0, Some(0)));
    }

    #[test]
    fn cycle_metrics() {
        assert_eq!(cycle(4).dist(0, 2), 2);
        let m = cycle(6).metrics().unwrap();
        assert_eq!((m.radius, m.diameter), (3, 3));
        assert_eq!(m.center.len(), 6);
        assert_eq!(m.height, None);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(1, 0))
        );
    }

    #[test]
    fn balls_on_cycles() {
        let c6 = cycle(6);
        assert_eq!(c6.closed_ball(0, 0).to_vec(), vec![0]);
        assert_eq!(c6.closed_ball(0, 2).to_vec(), vec![0, 1, 2, 4, 5]);
        let c5 = cycle(5);
        let b = c5.closed_ball(0, 1);
        assert_eq!(b.to_vec(), vec![0, 1, 4]);
        assert_eq!(b.len(), 3);
    }

    #[test]
    fn path_and_spider_metrics() {
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let m = p5.metrics().unwrap();
        assert_eq!((m.radius, m.diameter, m.height), (2, 4, Some(2)));
        // three legs of length four from centre 0
        let mut edges = Vec::new();
        let mut next = 1;
        for _ in 0..3 {
            let mut prev = 0;
            for _ in 0..4 {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        let spider = Graph::new(next, &edges).unwrap();
        let m = spider.metrics().unwrap();
        assert_eq!((m.height, m.diameter), (Some(4), 8));
    }

    #[test]
    fn cut_structure() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.cut_vertices(), vec![1, 2]);
        assert_eq!(p4.cut_edges().len(), 3);
        assert!(cycle(5).cut_vertices().is_empty());
        assert!(cycle(5).cut_edges().is_empty());
    }

    #[test]
    fn disconnected_metrics_rejected() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(g.metrics(), Err(Error::Disconnected));
        assert_eq!(g.components_within(&VertexSet::full(3)).len(), 2);
    }

    #[test]
    fn geodesic_follows_distances() {
        let c6 = cycle(6);
        let p = c6.geodesic(0, 3);
        assert_eq!(p.len(), 4);
        assert!(p.windows(2).all(|w| c6.has_edge(w[0], w[1])));
    }
}
