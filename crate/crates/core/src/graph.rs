//! Simple undirected graphs with dense vertex ids and a stable fingerprint.
//!
//! Graphs are immutable values: every "mutation" builds a new graph. All
//! witnesses produced elsewhere in this crate cite vertex ids of the graph
//! value they were computed on, together with its [`Fingerprint`], so a
//! witness can be re-checked later (or rejected as stale).

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex id {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate vertex {0} in sequence")]
    DuplicateVertex(usize),
    #[error("vertex sets must be disjoint (both contain {0})")]
    OverlappingSets(usize),
    #[error("label count {0} does not match vertex count {1}")]
    LabelCountMismatch(usize, usize),
}

/// Fixed-size bitset over vertex ids `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
    n: usize,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            words: vec![0; n.div_ceil(64)],
            n,
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = VertexSet::new(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .any(|(a, b)| a & b != 0)
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// Identity of a graph value: vertex count, edge count and a 64-bit hash of
/// the adjacency matrix. Witness files carry this so stale witnesses are
/// rejected instead of silently mis-validated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub n: usize,
    pub edges: usize,
    pub adjacency_hash: u64,
}

const FNV_OFFSET: u64 = 0xcbf29ce484222325;
const FNV_PRIME: u64 = 0x100000001b3;

fn fnv1a(hash: u64, bytes: &[u8]) -> u64 {
    let mut h = hash;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// Immutable simple undirected graph. Vertex ids are dense `0..n`.
///
/// Adjacency is stored twice: bitset rows for subset queries and
/// anticompleteness tests, sorted neighbor lists for traversal.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: usize,
    rows: Vec<VertexSet>,
    neighbors: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    fingerprint: Fingerprint,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}
impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut rows = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(n, rows, None))
    }

    fn from_rows(n: usize, rows: Vec<VertexSet>, labels: Option<Vec<String>>) -> Self {
        let neighbors: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().collect()).collect();
        let edges = neighbors.iter().map(|l| l.len()).sum::<usize>() / 2;
        let mut h = FNV_OFFSET;
        h = fnv1a(h, &(n as u64).to_le_bytes());
        for row in &rows {
            for w in &row.words {
                h = fnv1a(h, &w.to_le_bytes());
            }
        }
        Graph {
            n,
            edges,
            fingerprint: Fingerprint {
                n,
                edges,
                adjacency_hash: h,
            },
            rows,
            neighbors,
            labels,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCountMismatch(labels.len(), self.n));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn fingerprint(&self) -> Fingerprint {
        self.fingerprint
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        v < self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Adjacency row of `v` as a bitset.
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Edges in canonical order: `(u, v)` with `u < v`, lexicographic.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.rows[v].intersection_count(set)
    }

    fn check_vertices(&self, xs: &[usize]) -> Result<(), GraphError> {
        for &x in xs {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange(x, self.n));
            }
        }
        Ok(())
    }

    /// Subgraph induced by `xs`, plus the relabeling map: new vertex `i`
    /// corresponds to old vertex `map[i] = xs[i]`.
    pub fn induced_subgraph(&self, xs: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_vertices(xs)?;
        let mut seen = VertexSet::new(self.n);
        for &x in xs {
            if seen.contains(x) {
                return Err(GraphError::DuplicateVertex(x));
            }
            seen.insert(x);
        }
        let k = xs.len();
        let mut rows = vec![VertexSet::new(k); k];
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(xs[i], xs[j]) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| xs.iter().map(|&x| ls[x].clone()).collect());
        Ok((Graph::from_rows(k, rows, labels), xs.to_vec()))
    }

    /// True iff no edge joins `xs` and `ys`. The sets must be disjoint.
    pub fn are_anticomplete(&self, xs: &[usize], ys: &[usize]) -> Result<bool, GraphError> {
        self.check_vertices(xs)?;
        self.check_vertices(ys)?;
        let yset = VertexSet::from_iter(self.n, ys.iter().copied());
        for &x in xs {
            if yset.contains(x) {
                return Err(GraphError::OverlappingSets(x));
            }
        }
        Ok(xs.iter().all(|&x| !self.rows[x].intersects(&yset)))
    }

    /// True iff every pair with one end in `xs` and one in `ys` is an edge.
    pub fn are_complete(&self, xs: &[usize], ys: &[usize]) -> Result<bool, GraphError> {
        self.check_vertices(xs)?;
        self.check_vertices(ys)?;
        let yset = VertexSet::from_iter(self.n, ys.iter().copied());
        let ylen = yset.len();
        for &x in xs {
            if yset.contains(x) {
                return Err(GraphError::OverlappingSets(x));
            }
        }
        Ok(xs
            .iter()
            .all(|&x| self.rows[x].intersection_count(&yset) == ylen))
    }

    fn check_distinct(&self, seq: &[usize]) -> Result<(), GraphError> {
        self.check_vertices(seq)?;
        let mut seen = VertexSet::new(self.n);
        for &v in seq {
            if seen.contains(v) {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen.insert(v);
        }
        Ok(())
    }

    /// True iff `seq` lists the vertices of an induced path in order:
    /// consecutive vertices adjacent, all other pairs non-adjacent.
    pub fn is_induced_path(&self, seq: &[usize]) -> Result<bool, GraphError> {
        if seq.is_empty() {
            return Err(GraphError::DuplicateVertex(usize::MAX));
        }
        self.check_distinct(seq)?;
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                let adjacent = self.has_edge(seq[i], seq[j]);
                if adjacent != (j == i + 1) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff `seq` lists the vertices of an induced cycle in cyclic order.
    pub fn is_induced_cycle(&self, seq: &[usize]) -> Result<bool, GraphError> {
        self.check_distinct(seq)?;
        let k = seq.len();
        if k < 3 {
            return Ok(false);
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if self.has_edge(seq[i], seq[j]) != consecutive {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Line graph: one vertex per edge of `self`, adjacent iff the edges
    /// share an end. Also returns the map from new vertex id to the edge it
    /// represents, in canonical edge order.
    pub fn line_graph(&self) -> (Graph, Vec<(usize, usize)>) {
        let edges = self.edge_list();
        let k = edges.len();
        let mut rows = vec![VertexSet::new(k); k];
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        (Graph::from_rows(k, rows, None), edges)
    }

    /// True iff the graph is connected (vacuously true when empty).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.connected_within(&VertexSet::from_iter(self.n, 0..self.n))
    }

    /// True iff the nonempty set induces a connected subgraph.
    pub fn connected_within(&self, set: &VertexSet) -> bool {
        let Some(start) = set.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if set.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == set.len()
    }

    /// Two-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.neighbors[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| color[v] == 0).collect();
        let b = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((a, b))
    }
}

/// An induced path, stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
}

impl PathWitness {
    pub fn new(vertices: Vec<usize>) -> Self {
        PathWitness { vertices }
    }

    pub fn len_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Length of a path is its number of edges.
    pub fn len_edges(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// The ends; for a one-vertex path both ends coincide.
    pub fn ends(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn interior(&self) -> &[usize] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// An induced cycle, stored in cyclic vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
}

impl CycleWitness {
    pub fn new(vertices: Vec<usize>) -> Self {
        CycleWitness { vertices }
    }

    /// Length of a cycle: number of vertices = number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn vertex_set_ops() {
        let mut s = VertexSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.len(), 3);
        assert!(s.contains(64));
        assert!(!s.contains(63));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        s.remove(64);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn rejects_self_loops_and_bad_ids() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange(3, 3))
        );
    }

    #[test]
    fn induced_subgraph_of_complete_is_complete() {
        let k4 = generators::gen_complete(4).unwrap();
        let (g, map) = k4.induced_subgraph(&[0, 2, 3]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(map, vec![0, 2, 3]);
    }

    #[test]
    fn induced_subgraph_of_cycle_arc_is_path() {
        let c9 = generators::gen_cycle(9).unwrap();
        let (g, _) = c9.induced_subgraph(&[2, 3, 4, 5]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_induced_path(&[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn induced_subgraph_is_transitive() {
        let pd = generators::gen_pd(3).unwrap().0;
        let first: Vec<usize> = vec![0, 1, 2, 3, 4, 5, 6];
        let (g1, map1) = pd.induced_subgraph(&first).unwrap();
        let second: Vec<usize> = vec![0, 2, 4, 6];
        let (g2, _) = g1.induced_subgraph(&second).unwrap();
        let preimage: Vec<usize> = second.iter().map(|&i| map1[i]).collect();
        let (g3, _) = pd.induced_subgraph(&preimage).unwrap();
        assert_eq!(g2, g3);
    }

    #[test]
    fn anticomplete_and_complete() {
        let (pd6, _) = generators::gen_pd(6).unwrap();
        let l1: Vec<usize> = (6..12).collect();
        let l2: Vec<usize> = (12..18).collect();
        assert!(pd6.are_anticomplete(&l1, &l2).unwrap());
        let k4 = generators::gen_complete(4).unwrap();
        assert!(!k4.are_anticomplete(&[0], &[1]).unwrap());
        assert!(k4.are_complete(&[0], &[1, 2]).unwrap());
        let empty = Graph::from_edges(0, &[]).unwrap();
        assert!(empty.are_anticomplete(&[], &[]).unwrap());
        assert_eq!(
            k4.are_anticomplete(&[0, 1], &[1, 2]),
            Err(GraphError::OverlappingSets(1))
        );
    }

    #[test]
    fn induced_path_and_cycle_checks() {
        let c5 = generators::gen_cycle(5).unwrap();
        assert!(c5.is_induced_cycle(&[0, 1, 2, 3, 4]).unwrap());
        assert!(!c5.is_induced_cycle(&[0, 2, 1, 3, 4]).unwrap());
        let k4 = generators::gen_complete(4).unwrap();
        assert!(!k4.is_induced_path(&[0, 1, 2]).unwrap());
        let (pd6, _) = generators::gen_pd(6).unwrap();
        let l1: Vec<usize> = (6..12).collect();
        assert!(pd6.is_induced_path(&l1).unwrap());
        assert_eq!(
            c5.is_induced_path(&[0, 1, 0]),
            Err(GraphError::DuplicateVertex(0))
        );
    }

    #[test]
    fn pd_attachment_pattern_in_induced_subgraph() {
        // inside PD_6, each stable vertex has exactly one neighbor on each path
        let (pd6, _) = generators::gen_pd(6).unwrap();
        let mut xs: Vec<usize> = (0..6).collect();
        xs.extend(6..12); // stable set plus first path
        let (g, _) = pd6.induced_subgraph(&xs).unwrap();
        for j in 0..6 {
            assert_eq!(g.degree(j), 1, "stable vertex {j}");
            assert!(g.has_edge(j, 6 + j));
        }
    }

    #[test]
    fn line_graph_small_cases() {
        let k3 = generators::gen_complete(3).unwrap();
        let (l, map) = k3.line_graph();
        assert_eq!(l.vertex_count(), 3);
        assert_eq!(l.edge_count(), 3);
        assert_eq!(map.len(), 3);

        let p4 = generators::gen_path(4).unwrap();
        let (l, _) = p4.line_graph();
        assert!(l.is_induced_path(&[0, 1, 2]).unwrap());

        let star = generators::gen_biclique(1, 3).unwrap();
        let (l, _) = star.line_graph();
        assert_eq!(l.vertex_count(), 3);
        assert_eq!(l.edge_count(), 3);
    }

    #[test]
    fn line_graph_counts() {
        let g = generators::gen_grid(4).unwrap();
        let (l, _) = g.line_graph();
        assert_eq!(l.vertex_count(), g.edge_count());
        let expected: usize = g
            .vertices()
            .map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2)
            .sum();
        assert_eq!(l.edge_count(), expected);
    }

    #[test]
    fn fingerprint_distinguishes_graphs() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(4, &[(0, 1), (1, 3)]).unwrap();
        assert_ne!(a.fingerprint(), b.fingerprint());
        let c = Graph::from_edges(4, &[(1, 2), (0, 1), (1, 2)]).unwrap();
        assert_eq!(a.fingerprint(), c.fingerprint());
    }
}
