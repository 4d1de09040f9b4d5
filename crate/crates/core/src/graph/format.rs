use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Structured graph form: `{"n": 4, "edges": [[0,1],[1,2]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

/// Serialized in the structured graph file form.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphFile::from(self).serialize(s)
    }
}

impl GraphFile {
    pub fn build(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(self.n, &edges)
    }
}

/// Parses either the JSON object form or the text form: a header line
/// `n m` followed by `m` lines `u v`. Blank lines and lines starting with
/// `#` are skipped in the text form.
pub fn parse_graph(input: &str) -> Result<Graph> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') {
        let file: GraphFile =
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        return file.build();
    }
    let mut lines = input
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let [n, m] = parse_pair(header, 1)?;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines {
        let pair = parse_pair(line, i + 1)?;
        edges.push((pair[0], pair[1]));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges but {} were listed",
            edges.len()
        )));
    }
    Graph::new(n, &edges)
}

fn parse_pair(line: &str, lineno: usize) -> Result<[usize; 2]> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!(
            "line {lineno}: expected two integers, got {line:?}"
        )));
    }
    let mut out = [0; 2];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p
            .parse()
            .map_err(|_| Error::Parse(format!("line {lineno}: bad integer {p:?}")))?;
    }
    Ok(out)
}

impl Graph {
    /// Text form accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.edge_count());
        for &(u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}
