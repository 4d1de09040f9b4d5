//! Deterministic graph generators and the recipe strings that name them.

use crate::error::{Error, Result};
use crate::graph::{chordal_peo, Graph};
use crate::treerank::{Branch, RankCertificate};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Which vertex of each sub-member the new hub path attaches to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Attachment {
    /// The sub-member's own hub.
    Hub,
    /// The vertex with this local index in the sub-member (taken modulo its size).
    Local(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Recipe {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Leg lengths, all attached to vertex 0.
    Spider(Vec<usize>),
    TFamily {
        k: usize,
        ell: u32,
        attach: Attachment,
    },
    /// Perfect binary tree of the given depth, every edge subdivided `subdivisions` times.
    SubdividedBinary {
        depth: u32,
        subdivisions: usize,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
    RandomChordal {
        n: usize,
        seed: u64,
    },
    /// Random spanning tree plus each remaining pair with probability `p`.
    RandomConnected {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// Each new vertex copies part of an existing closed neighborhood, so the
    /// result is dismantlable.
    RandomCopwin {
        n: usize,
        seed: u64,
    },
    Petersen,
}

#[derive(Clone, Debug, Serialize)]
pub struct Generated {
    pub graph: Graph,
    /// Designated vertices by name (hub, attachment points, tree labels).
    pub annotations: BTreeMap<String, usize>,
    /// Construction witness for members of the recursive tree family.
    pub certificate: Option<RankCertificate>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidRecipe(msg.into())
}

impl Recipe {
    pub fn generate(&self) -> Result<Generated> {
        let plain = |graph: Graph| Generated {
            graph,
            annotations: BTreeMap::new(),
            certificate: None,
        };
        Ok(match *self {
            Recipe::Path(n) => {
                if n == 0 {
                    return Err(bad("path needs at least one vertex"));
                }
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                plain(Graph::new(n, &edges)?)
            }
            Recipe::Cycle(n) => {
                if n < 3 {
                    return Err(bad("cycle needs at least three vertices"));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                plain(Graph::new(n, &edges)?)
            }
            Recipe::Complete(n) => {
                if n == 0 {
                    return Err(bad("complete graph needs at least one vertex"));
                }
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                plain(Graph::new(n, &edges)?)
            }
            Recipe::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return Err(bad(
                        "both sides of a complete bipartite graph must be nonempty",
                    ));
                }
                let mut edges = Vec::new();
                for u in 0..a {
                    for v in a..a + b {
                        edges.push((u, v));
                    }
                }
                plain(Graph::new(a + b, &edges)?)
            }
            Recipe::Spider(ref legs) => {
                if legs.is_empty() || legs.contains(&0) {
                    return Err(bad("spider legs must be positive and at least one"));
                }
                let mut edges = Vec::new();
                let mut ann = BTreeMap::new();
                let mut next = 1;
                for (i, &len) in legs.iter().enumerate() {
                    let mut prev = 0;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                    ann.insert(format!("leg{}", i + 1), prev);
                }
                ann.insert("center".into(), 0);
                Generated {
                    graph: Graph::new(next, &edges)?,
                    annotations: ann,
                    certificate: None,
                }
            }
            Recipe::TFamily { k, ell, attach } => t_family(k, ell, attach)?,
            Recipe::SubdividedBinary {
                depth,
                subdivisions,
            } => subdivided_binary(depth, subdivisions)?,
            Recipe::RandomTree { n, seed } => {
                if n == 0 {
                    return Err(bad("tree needs at least one vertex"));
                }
                plain(random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed)))
            }
            Recipe::RandomChordal { n, seed } => {
                if n == 0 {
                    return Err(bad("graph needs at least one vertex"));
                }
                plain(random_chordal(n, &mut ChaCha8Rng::seed_from_u64(seed)))
            }
            Recipe::RandomConnected { n, p, seed } => {
                if n == 0 || !(0.0..=1.0).contains(&p) {
                    return Err(bad("need n >= 1 and 0 <= p <= 1"));
                }
                plain(random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
            }
            Recipe::RandomCopwin { n, seed } => {
                if n == 0 {
                    return Err(bad("graph needs at least one vertex"));
                }
                plain(random_copwin(n, 0.5, &mut ChaCha8Rng::seed_from_u64(seed)))
            }
            Recipe::Petersen => {
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                plain(Graph::new(10, &edges)?)
            }
        })
    }
}

/// Vertex count of a family member: `n(1) = 1`, `n(k) = 3 n(k-1) + 3(2ℓ+1) + 1`.
pub fn t_family_size(k: usize, ell: u32) -> usize {
    let legs = 3 * (2 * ell as usize + 1) + 1;
    (1..k).fold(1, |n, _| 3 * n + legs)
}

fn t_family(k: usize, ell: u32, attach: Attachment) -> Result<Generated> {
    if k == 0 {
        return Err(bad("k must be at least 1"));
    }
    let (n, edges, cert) = build_t(k, ell, attach);
    let mut ann = BTreeMap::new();
    ann.insert("q".into(), cert.q);
    for (i, b) in cert.branches.iter().enumerate() {
        ann.insert(
            format!("r{}", i + 1),
            *b.path.last().expect("nonempty path"),
        );
    }
    Ok(Generated {
        graph: Graph::new(n, &edges)?,
        annotations: ann,
        certificate: Some(cert),
    })
}

/// Layout: the three sub-members in order, then the internal vertices of
/// each hub path (listed from the `r_i` end), then `q` last.
fn build_t(
    k: usize,
    ell: u32,
    attach: Attachment,
) -> (usize, Vec<(usize, usize)>, RankCertificate) {
    if k == 1 {
        let cert = RankCertificate {
            k: 1,
            q: 0,
            branches: Vec::new(),
        };
        return (1, Vec::new(), cert);
    }
    let (m, sub_edges, sub_cert) = build_t(k - 1, ell, attach);
    let inner = 2 * ell as usize + 1;
    let n = 3 * m + 3 * inner + 1;
    let q = n - 1;
    let local_r = match attach {
        Attachment::Hub => sub_cert.q,
        Attachment::Local(i) => i % m,
    };
    let mut edges = Vec::with_capacity(n - 1);
    let mut branches = Vec::new();
    for i in 0..3 {
        let off = i * m;
        edges.extend(sub_edges.iter().map(|&(u, v)| (u + off, v + off)));
        let base = 3 * m + i * inner;
        let r = local_r + off;
        let mut prev = r;
        for j in 0..inner {
            edges.push((prev, base + j));
            prev = base + j;
        }
        edges.push((prev, q));
        let mut path: Vec<usize> = (base..base + inner).rev().collect();
        path.push(r);
        branches.push(Branch {
            direction: path[0],
            path,
            child: sub_cert.offset(off),
        });
    }
    (n, edges, RankCertificate { k, q, branches })
}

/// Heap-indexed original nodes `0..2^(d+1)-1` (children of `i` are
/// `2i+1`, `2i+2`), followed by the subdivision vertices of each edge in
/// order of the child index, listed from the parent end.
fn subdivided_binary(depth: u32, s: usize) -> Result<Generated> {
    if depth > 12 {
        return Err(bad("depth above 12 is not supported"));
    }
    let nodes = (1usize << (depth + 1)) - 1;
    let n = nodes + (nodes - 1) * s;
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = nodes;
    for child in 1..nodes {
        let mut prev = (child - 1) / 2;
        for _ in 0..s {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, child));
    }
    let mut ann = BTreeMap::new();
    for i in 0..nodes {
        ann.insert(format!("node{i}"), i);
    }
    if depth == 3 {
        for (name, v) in [
            ("r", 0),
            ("a", 1),
            ("a'", 2),
            ("a_L", 3),
            ("b", 4),
            ("a'_L", 5),
            ("b'", 6),
        ] {
            ann.insert(name.into(), v);
        }
    }
    Ok(Generated {
        graph: Graph::new(n, &edges)?,
        annotations: ann,
        certificate: None,
    })
}

/// Subdivision vertices strictly between original node `child` and its
/// parent, ordered from the parent end.
pub fn subdivision_path(depth: u32, s: usize, child: usize) -> Vec<usize> {
    let nodes = (1usize << (depth + 1)) - 1;
    let start = nodes + (child - 1) * s;
    (start..start + s).collect()
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        return Graph::new(n, &edges).expect("valid path");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("prufer decoding has a leaf");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).expect("prufer decoding gives a tree")
}

fn random_chordal(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        let mut cand = adj[u].clone();
        cand.shuffle(rng);
        for w in cand {
            if rng.gen_bool(0.5) && clique.iter().all(|c| adj[*c].contains(&w)) {
                clique.push(w);
            }
        }
        for &c in &clique {
            adj[c].push(v);
            adj[v].push(c);
            edges.push((c, v));
        }
    }
    let g = Graph::new(n, &edges).expect("construction is simple");
    debug_assert!(chordal_peo(&g).is_ok());
    g
}

fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("construction is simple")
}

/// Random cop-win graph: each new vertex joins a random earlier vertex `u`
/// and each neighbor of `u` with probability `p`, so it is dominated by `u`.
pub fn random_copwin(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut nbrs = vec![u];
        for &w in &adj[u] {
            if rng.gen_bool(p) {
                nbrs.push(w);
            }
        }
        for &w in &nbrs {
            adj[w].push(v);
            adj[v].push(w);
            edges.push((w, v));
        }
    }
    Graph::new(n, &edges).expect("construction is simple")
}

fn kv(body: &str) -> Result<BTreeMap<String, String>> {
    body.split(',')
        .filter(|s| !s.is_empty())
        .map(|item| {
            item.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| bad(format!("expected key=value, got {item:?}")))
        })
        .collect()
}

fn num<T: FromStr>(s: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| bad(format!("bad number {s:?}")))
}

fn get<T: FromStr>(map: &BTreeMap<String, String>, key: &str) -> Result<T> {
    num(map.get(key).ok_or_else(|| bad(format!("missing {key}")))?)
}

fn list(body: &str) -> Result<Vec<usize>> {
    body.split(',').map(num).collect()
}

impl FromStr for Recipe {
    type Err = Error;

    /// Accepts `path:5`, `cycle:4`, `complete:5`, `kbip:2,3`,
    /// `spider:4,4,4`, `tfamily:k=2,ell=1[,attach=hub|N]`,
    /// `subdivided:3,3`, `randtree:n=10,seed=1`, `randchordal:n=10,seed=1`,
    /// `randconn:n=8,p=0.4,seed=3`, `randcopwin:n=8,seed=3`, `petersen`.
    fn from_str(s: &str) -> Result<Recipe> {
        let (kind, body) = s.split_once(':').unwrap_or((s, ""));
        let one = |body: &str| -> Result<usize> { num(body) };
        Ok(match kind.trim() {
            "path" => Recipe::Path(one(body)?),
            "cycle" => Recipe::Cycle(one(body)?),
            "complete" => Recipe::Complete(one(body)?),
            "kbip" => match list(body)?[..] {
                [a, b] => Recipe::CompleteBipartite(a, b),
                _ => return Err(bad("kbip takes two sizes")),
            },
            "spider" => Recipe::Spider(list(body)?),
            "tfamily" => {
                let m = kv(body)?;
                let attach = match m.get("attach").map(String::as_str) {
                    None | Some("hub") => Attachment::Hub,
                    Some(i) => Attachment::Local(num(i)?),
                };
                Recipe::TFamily {
                    k: get(&m, "k")?,
                    ell: get(&m, "ell")?,
                    attach,
                }
            }
            "subdivided" => match list(body)?[..] {
                [d, s] => Recipe::SubdividedBinary {
                    depth: d as u32,
                    subdivisions: s,
                },
                _ => return Err(bad("subdivided takes depth,subdivisions")),
            },
            "randtree" | "randchordal" | "randcopwin" => {
                let m = kv(body)?;
                let (n, seed) = (get(&m, "n")?, get(&m, "seed")?);
                match kind {
                    "randtree" => Recipe::RandomTree { n, seed },
                    "randchordal" => Recipe::RandomChordal { n, seed },
                    _ => Recipe::RandomCopwin { n, seed },
                }
            }
            "randconn" => {
                let m = kv(body)?;
                Recipe::RandomConnected {
                    n: get(&m, "n")?,
                    p: get(&m, "p")?,
                    seed: get(&m, "seed")?,
                }
            }
            "petersen" => Recipe::Petersen,
            other => return Err(bad(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Recipe::Path(n) => write!(f, "path:{n}"),
            Recipe::Cycle(n) => write!(f, "cycle:{n}"),
            Recipe::Complete(n) => write!(f, "complete:{n}"),
            Recipe::CompleteBipartite(a, b) => write!(f, "kbip:{a},{b}"),
            Recipe::Spider(legs) => write!(f, "spider:{}", join(legs)),
            Recipe::TFamily { k, ell, attach } => {
                write!(f, "tfamily:k={k},ell={ell}")?;
                match attach {
                    Attachment::Hub => Ok(()),
                    Attachment::Local(i) => write!(f, ",attach={i}"),
                }
            }
            Recipe::SubdividedBinary {
                depth,
                subdivisions,
            } => write!(f, "subdivided:{depth},{subdivisions}"),
            Recipe::RandomTree { n, seed } => write!(f, "randtree:n={n},seed={seed}"),
            Recipe::RandomChordal { n, seed } => write!(f, "randchordal:n={n},seed={seed}"),
            Recipe::RandomConnected { n, p, seed } => write!(f, "randconn:n={n},p={p},seed={seed}"),
            Recipe::RandomCopwin { n, seed } => write!(f, "randcopwin:n={n},seed={seed}"),
            Recipe::Petersen => write!(f, "petersen"),
        }
    }
}
