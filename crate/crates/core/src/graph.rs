//! Finite simple graphs and their text format.
//!
//! The text format is a header `n m` followed by `m` pairs `u v` of 0-based
//! endpoints. Tokens are separated by arbitrary whitespace.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite simple graph on the vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and endpoints outside `0..n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "graph must have at least one vertex".into(),
            ));
        }
        let mut adj = vec![vec![false; n]; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if adj[u][v] {
                return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
            }
            adj[u][v] = true;
            adj[v][u] = true;
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            adj,
            edges: list,
        })
    }

    fn from_pairs_unchecked(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Graph::new(n, edges).expect("generated edge list is simple")
    }

    pub fn empty(n: usize) -> Self {
        Self::from_pairs_unchecked(n, [])
    }

    pub fn complete(n: usize) -> Self {
        Self::from_pairs_unchecked(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        Self::from_pairs_unchecked(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::from_pairs_unchecked(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_pairs_unchecked(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// Complete multipartite graph; vertices are labelled class by class.
    /// Classes of size zero are allowed and contribute nothing.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        let class: Vec<usize> = sizes
            .iter()
            .enumerate()
            .flat_map(|(c, &s)| std::iter::repeat_n(c, s))
            .collect();
        let n = class.len();
        Self::from_pairs_unchecked(
            n,
            (0..n).flat_map(|u| {
                let class = &class;
                (u + 1..n)
                    .filter(move |&v| class[u] != class[v])
                    .map(move |v| (u, v))
            }),
        )
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Self::from_pairs_unchecked(10, outer.chain(spokes).chain(inner))
    }

    /// Disjoint union, vertices of `other` shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        Self::from_pairs_unchecked(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v]
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&a| a).count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || perm
                .iter()
                .any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter(
                "relabelling is not a permutation".into(),
            ));
        }
        Ok(Self::from_pairs_unchecked(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        ))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let (a, b) = (u.min(v), u.max(v));
        Self::from_pairs_unchecked(self.n, self.edges.iter().copied().filter(|&e| e != (a, b)))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn next_usize<'a>(tokens: &mut impl Iterator<Item = &'a str>, what: &str) -> Result<usize> {
    let tok = tokens
        .next()
        .ok_or_else(|| Error::Parse(format!("unexpected end of input, expected {what}")))?;
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!(
            "`{tok}` is not a nonnegative integer ({what})"
        )));
    }
    tok.parse()
        .map_err(|_| Error::Parse(format!("`{tok}` is out of range ({what})")))
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let n = next_usize(&mut tokens, "vertex count")?;
        let m = next_usize(&mut tokens, "edge count")?;
        let max_edges = n.saturating_mul(n.saturating_sub(1)) / 2;
        if m > max_edges {
            return Err(Error::Parse(format!(
                "{m} edges cannot fit a simple graph on {n} vertices"
            )));
        }
        let mut edges = Vec::with_capacity(m);
        for i in 0..m {
            let u = next_usize(&mut tokens, &format!("endpoint of edge {i}"))?;
            let v = next_usize(&mut tokens, &format!("endpoint of edge {i}"))?;
            edges.push((u, v));
        }
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse(format!(
                "trailing token `{extra}` after {m} edges"
            )));
        }
        Graph::new(n, edges)
    }
}
