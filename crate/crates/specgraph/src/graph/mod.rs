//! Simple undirected graphs: representation, named families, joined unions,
//! metric and degree statistics, graph6 interchange, and small-order
//! exhaustive enumeration.

mod enumerate;
mod families;
mod graph6;
mod joined;
mod metrics;

pub use enumerate::{canonical_form, enumerate_graphs};
pub use families::{build_named, FamilySpec};
pub use graph6::{decode_graph6, encode_graph6, read_graph6_file};
pub use joined::{joined_union, JoinedUnionSpec};
pub use metrics::{degree_profile, distances, DegreeProfile, DistanceData, TransmissionProfile};

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Simple undirected graph on vertices `0..n`, adjacency kept as sorted
/// neighbor lists. No loops, no multi-edges; symmetry holds by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices (`n >= 1`).
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter(
                "graph must have at least one vertex".into(),
            ));
        }
        Ok(Graph {
            n,
            adj: vec![Vec::new(); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Insert edge `{u, v}`; inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Parameter(format!("loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::Parameter(format!(
                "edge ({u},{v}) out of range for order {}",
                self.n
            )));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos2 = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos2, u);
        }
        Ok(())
    }

    /// Remove edge `{u, v}` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if let Ok(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(pos);
            let pos2 = self.adj[v].binary_search(&u).unwrap();
            self.adj[v].remove(pos2);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn pendant_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 1).count()
    }

    pub fn is_regular(&self) -> bool {
        let d0 = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d0)
    }

    /// Connected-component labels, numbered by first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([s]);
            label[s] = next;
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if label[v] == usize::MAX {
                        label[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Two-color if possible; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    pub fn complement(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                if v != u && !self.has_edge(u, v) {
                    adj[u].push(v);
                }
            }
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut adj = self.adj.clone();
        for nb in &other.adj {
            adj.push(nb.iter().map(|&v| v + shift).collect());
        }
        Graph {
            n: self.n + other.n,
            adj,
        }
    }

    /// Subgraph induced on `verts` (relabelled 0.. in the given order).
    pub fn induced(&self, verts: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(verts.len())?;
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX && index[w] > i {
                    g.add_edge(i, index[w])?;
                }
            }
        }
        Ok(g)
    }

    /// Relabel vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Dimension("permutation length != order".into()));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Breadth-first distances from `src`; `usize::MAX` marks unreachable.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Parse the "n m" / "u v" edge-list text format (0-indexed).
    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parameter("empty edge list".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parameter("bad edge-list header".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parameter("bad edge-list header".into()))?;
        let mut g = Graph::empty(n)?;
        let mut count = 0;
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parameter(format!("bad edge line: {line}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parameter(format!("bad edge line: {line}")))?;
            g.add_edge(u, v)?;
            count += 1;
        }
        if count != m {
            return Err(Error::Parameter(format!(
                "edge-list header declares {m} edges, found {count}"
            )));
        }
        Ok(g)
    }

    /// Render the "n m" / "u v" edge-list text format.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
