//! Deterministic constructors for the graph families and structured
//! instances used throughout the crate. Generators that embody a structure
//! return the witness alongside the graph; every returned witness passes the
//! corresponding validator (tested by the round-trip suites).
//!
//! All randomness flows from a single 64-bit seed through ChaCha8: identical
//! seeds reproduce identical graphs byte-for-byte in graph6.

use crate::graph::{Graph, PathWitness};
use crate::structures::{ArrayWitness, Constellation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("parameter {name} must be at least {min} (got {got})")]
    TooSmall {
        name: &'static str,
        min: usize,
        got: usize,
    },
    #[error("subdivision spec missing edge ({0}, {1})")]
    SpecMissingEdge(usize, usize),
    #[error("subdivision spec names ({0}, {1}) which is not an edge of the base graph")]
    SpecUnknownEdge(usize, usize),
    #[error("expansion spec touches stable-set edge ({0}, {1})")]
    SpecTouchesStableEdge(usize, usize),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

fn require(name: &'static str, got: usize, min: usize) -> Result<(), GenError> {
    if got < min {
        Err(GenError::TooSmall { name, min, got })
    } else {
        Ok(())
    }
}

pub fn gen_complete(t: usize) -> Result<Graph, GenError> {
    require("t", t, 1)?;
    let mut edges = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            edges.push((i, j));
        }
    }
    Ok(Graph::from_edges(t, &edges).expect("complete graph"))
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`.
pub fn gen_biclique(a: usize, b: usize) -> Result<Graph, GenError> {
    require("a", a, 1)?;
    require("b", b, 1)?;
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Ok(Graph::from_edges(a + b, &edges).expect("biclique"))
}

pub fn gen_path(n: usize) -> Result<Graph, GenError> {
    require("n", n, 1)?;
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edges(n, &edges).expect("path graph"))
}

pub fn gen_cycle(n: usize) -> Result<Graph, GenError> {
    require("n", n, 3)?;
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Ok(Graph::from_edges(n, &edges).expect("cycle graph"))
}

/// t-by-t square lattice; vertex (i,j) has id i*t + j.
pub fn gen_grid(t: usize) -> Result<Graph, GenError> {
    require("t", t, 1)?;
    let id = |i: usize, j: usize| i * t + j;
    let mut edges = Vec::new();
    for i in 0..t {
        for j in 0..t {
            if j + 1 < t {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < t {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Ok(Graph::from_edges(t * t, &edges).expect("grid graph"))
}

/// The t-by-t brick wall, built on the (t+1)-by-(t+1) square grid: all
/// horizontal edges; vertical edges on the two boundary columns, and on
/// interior columns only where (row + column) is even, giving the staggered
/// brick pattern. Vertex (i,j) has id i*(t+1) + j. No degree-1 vertices
/// arise, every vertex has degree at most 3, and the graph stays a subgraph
/// of the square lattice (hence planar and bipartite).
pub fn gen_wall(t: usize) -> Result<Graph, GenError> {
    require("t", t, 2)?;
    let cols = t + 1;
    let id = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..=t {
        for j in 0..t {
            edges.push((id(i, j), id(i, j + 1)));
        }
    }
    for i in 0..t {
        for j in 0..=t {
            if j == 0 || j == t || (i + j) % 2 == 0 {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Ok(Graph::from_edges(cols * cols, &edges).expect("wall graph"))
}

/// How many extra vertices to place on each edge of a base graph. Keys are
/// canonical edges `(min, max)`; a spec with every count at most r yields a
/// subdivision in which every replacement path has length at most r+1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionSpec {
    pub extra: BTreeMap<(usize, usize), usize>,
}

impl SubdivisionSpec {
    pub fn zero(g: &Graph) -> Self {
        SubdivisionSpec {
            extra: g.edge_list().into_iter().map(|e| (e, 0)).collect(),
        }
    }

    pub fn uniform(g: &Graph, count: usize) -> Self {
        SubdivisionSpec {
            extra: g.edge_list().into_iter().map(|e| (e, count)).collect(),
        }
    }

    pub fn random(g: &Graph, max_extra: usize, rng: &mut impl Rng) -> Self {
        SubdivisionSpec {
            extra: g
                .edge_list()
                .into_iter()
                .map(|e| (e, rng.gen_range(0..=max_extra)))
                .collect(),
        }
    }

    pub fn max_extra(&self) -> usize {
        self.extra.values().copied().max().unwrap_or(0)
    }
}

/// Where each piece of a subdivision ended up: base vertex u keeps id u, and
/// each base edge maps to the full replacement path (branch ends included).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionMap {
    pub branch: Vec<usize>,
    pub edge_paths: Vec<((usize, usize), PathWitness)>,
}

/// Subdivides every edge of `h` as `spec` prescribes. Branch vertices keep their
/// ids; interior vertices are appended in canonical edge order.
pub fn gen_subdivision(h: &Graph, spec: &SubdivisionSpec) -> Result<(Graph, SubdivisionMap), GenError> {
    let base_edges = h.edge_list();
    for key in spec.extra.keys() {
        if !base_edges.contains(key) {
            return Err(GenError::SpecUnknownEdge(key.0, key.1));
        }
    }
    let mut edges = Vec::new();
    let mut next = h.vertex_count();
    let mut edge_paths = Vec::new();
    for &(u, v) in &base_edges {
        let &count = spec
            .extra
            .get(&(u, v))
            .ok_or(GenError::SpecMissingEdge(u, v))?;
        let mut path = vec![u];
        for _ in 0..count {
            path.push(next);
            next += 1;
        }
        path.push(v);
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        edge_paths.push(((u, v), PathWitness::new(path)));
    }
    let g = Graph::from_edges(next, &edges).expect("subdivision");
    Ok((
        g,
        SubdivisionMap {
            branch: (0..h.vertex_count()).collect(),
            edge_paths,
        },
    ))
}

/// The stable-set-plus-paths graph on s + s^2 vertices: stable vertices
/// 0..s, path i occupying s + i*s .. s + (i+1)*s, and stable vertex j
/// adjacent to exactly the j-th vertex of every path. Returns the canonical
/// array witness (identity order, no gaps, so hollowness 1).
pub fn gen_pd(s: usize) -> Result<(Graph, ArrayWitness), GenError> {
    require("s", s, 1)?;
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    for i in 0..s {
        let base = s + i * s;
        for j in 0..s - 1 {
            edges.push((base + j, base + j + 1));
        }
        for j in 0..s {
            edges.push((j, base + j));
        }
        paths.push(PathWitness::new((base..base + s).collect()));
    }
    let g = Graph::from_edges(s + s * s, &edges).expect("pd graph");
    let arr = ArrayWitness {
        stable_order: (0..s).collect(),
        paths,
        hollow: 1,
    };
    Ok((g, arr))
}

/// An expansion: the same construction with the path edges subdivided as
/// `spec` prescribes. Its keys are edges of `gen_pd(s)`; only path edges may
/// carry extra vertices. The witness stays a valid array at hollowness 1
/// since each stable vertex keeps exactly one neighbor per path.
pub fn gen_pd_expansion(
    s: usize,
    spec: &SubdivisionSpec,
) -> Result<(Graph, ArrayWitness), GenError> {
    let (pd, _) = gen_pd(s)?;
    for (&(u, v), &count) in &spec.extra {
        if count > 0 && (u < s || v < s) {
            return Err(GenError::SpecTouchesStableEdge(u, v));
        }
    }
    let mut full = SubdivisionSpec::zero(&pd);
    for (&e, &count) in &spec.extra {
        if !full.extra.contains_key(&e) {
            return Err(GenError::SpecUnknownEdge(e.0, e.1));
        }
        full.extra.insert(e, count);
    }
    let (g, map) = gen_subdivision(&pd, &full)?;
    // reassemble each expanded path by chaining the replacement paths of its
    // original edges
    let mut paths = Vec::new();
    for i in 0..s {
        let base = s + i * s;
        let mut verts = vec![base];
        for j in 0..s - 1 {
            let key = (base + j, base + j + 1);
            let (_, p) = map
                .edge_paths
                .iter()
                .find(|(e, _)| *e == key)
                .expect("path edge present");
            verts.extend_from_slice(&p.vertices[1..]);
        }
        paths.push(PathWitness::new(verts));
    }
    let arr = ArrayWitness {
        stable_order: (0..s).collect(),
        paths,
        hollow: 1,
    };
    Ok((g, arr))
}

/// Random expansion of the s-vertex construction: path edges receive 0 to
/// `max_extra` extra vertices, drawn from the seed.
pub fn gen_pd_expansion_random(
    s: usize,
    max_extra: usize,
    seed: u64,
) -> Result<(Graph, ArrayWitness), GenError> {
    let (pd, _) = gen_pd(s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spec = SubdivisionSpec::default();
    for (u, v) in pd.edge_list() {
        if u >= s && v >= s {
            spec.extra.insert((u, v), rng.gen_range(0..=max_extra));
        }
    }
    gen_pd_expansion(s, &spec)
}

/// One stable vertex's attachment on one path: how many neighbors it has
/// and the edge-distances between consecutive neighbors (each must be
/// shorter than the hollowness bound).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachmentBlock {
    /// k-1 distances for k neighbors; empty means a single neighbor.
    pub neighbor_gaps: Vec<usize>,
}

/// Attachment plan for an (s,h)-array instance: for each path and each
/// order position, the attachment block, plus the separations (in edges)
/// between consecutive blocks and around them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayProfile {
    pub s: usize,
    pub h: usize,
    /// blocks[p][i]: attachment of the stable vertex at order position i on
    /// path p.
    pub blocks: Vec<Vec<AttachmentBlock>>,
    /// separations[p]: s+1 entries: lead-in before the first block,
    /// distances between consecutive blocks (at least 1), tail after the
    /// last block.
    pub separations: Vec<Vec<usize>>,
}

impl ArrayProfile {
    /// The degenerate profile: single attachments, unit separations, no
    /// lead-in or tail. Realizes exactly `gen_pd(s)`.
    pub fn pd_pattern(s: usize) -> Self {
        ArrayProfile {
            s,
            h: 1,
            blocks: vec![vec![AttachmentBlock { neighbor_gaps: vec![] }; s]; s],
            separations: vec![
                {
                    let mut sep = vec![1; s + 1];
                    sep[0] = 0;
                    sep[s] = 0;
                    sep
                };
                s
            ],
        }
    }

    /// A random profile at the given parameters: blocks of 1..=3 neighbors
    /// with gaps below h, separations 1..=h+1, per-path lead-ins and tails.
    pub fn random(s: usize, h: usize, rng: &mut impl Rng) -> Self {
        let mut blocks = Vec::new();
        let mut separations = Vec::new();
        for _ in 0..s {
            let mut row = Vec::new();
            for _ in 0..s {
                let k = if h == 1 { 1 } else { rng.gen_range(1..=3) };
                let neighbor_gaps = (1..k).map(|_| rng.gen_range(1..=h - 1)).collect();
                row.push(AttachmentBlock { neighbor_gaps });
            }
            blocks.push(row);
            let mut sep: Vec<usize> = (0..=s).map(|_| rng.gen_range(1..=h + 1)).collect();
            sep[0] = rng.gen_range(0..=1);
            sep[s] = rng.gen_range(0..=1);
            separations.push(sep);
        }
        ArrayProfile {
            s,
            h,
            blocks,
            separations,
        }
    }

    fn check(&self) -> Result<(), GenError> {
        require("s", self.s, 1)?;
        require("h", self.h, 1)?;
        if self.blocks.len() != self.s || self.separations.len() != self.s {
            return Err(GenError::Infeasible(
                "profile needs s paths of blocks and separations".into(),
            ));
        }
        for (p, row) in self.blocks.iter().enumerate() {
            if row.len() != self.s {
                return Err(GenError::Infeasible(format!(
                    "path {p} has {} blocks, expected {}",
                    row.len(),
                    self.s
                )));
            }
            for b in row {
                if self.h == 1 && !b.neighbor_gaps.is_empty() {
                    return Err(GenError::Infeasible(
                        "hollowness 1 forces single attachments".into(),
                    ));
                }
                if b.neighbor_gaps.iter().any(|&gp| gp == 0 || gp >= self.h) {
                    return Err(GenError::Infeasible(format!(
                        "neighbor gap outside 1..{} on path {p}",
                        self.h.saturating_sub(1)
                    )));
                }
            }
            let sep = &self.separations[p];
            if sep.len() != self.s + 1 {
                return Err(GenError::Infeasible(format!(
                    "path {p} needs s+1 separations"
                )));
            }
            if sep[1..self.s].contains(&0) {
                return Err(GenError::Infeasible(
                    "blocks of distinct stable vertices may not share a vertex".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Builds the array instance the profile describes. Stable vertices are
/// 0..s in order position; paths follow.
pub fn gen_array_instance(profile: &ArrayProfile) -> Result<(Graph, ArrayWitness), GenError> {
    profile.check()?;
    let s = profile.s;
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    let mut next = s;
    for p in 0..s {
        let start = next;
        let mut positions: Vec<Vec<usize>> = Vec::new(); // positions[i] = attachment offsets
        let mut offset = profile.separations[p][0];
        for i in 0..s {
            let block = &profile.blocks[p][i];
            let mut pos = vec![offset];
            for &gp in &block.neighbor_gaps {
                offset += gp;
                pos.push(offset);
            }
            positions.push(pos);
            // separation to the next block, or the tail after the last one
            offset += profile.separations[p][i + 1];
        }
        let len = offset + 1;
        // path vertices start..start+len
        for j in 0..len - 1 {
            edges.push((start + j, start + j + 1));
        }
        for (i, pos) in positions.iter().enumerate() {
            for &q in pos {
                edges.push((i, start + q));
            }
        }
        paths.push(PathWitness::new((start..start + len).collect()));
        next = start + len;
    }
    let g = Graph::from_edges(next, &edges).expect("array instance");
    let arr = ArrayWitness {
        stable_order: (0..s).collect(),
        paths,
        hollow: profile.h,
    };
    Ok((g, arr))
}

/// Random (s,h)-array instance from a seed.
pub fn gen_array_random(s: usize, h: usize, seed: u64) -> Result<(Graph, ArrayWitness), GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gen_array_instance(&ArrayProfile::random(s, h, &mut rng))
}

/// Random d-meager (s,l)-constellation; plain when requested, otherwise a
/// few edges between distinct paths are thrown in (needs l >= 2). Path
/// lengths (in vertices) are drawn from `path_len`.
#[allow(clippy::too_many_arguments)]
pub fn gen_random_constellation(
    s: usize,
    l: usize,
    path_len: (usize, usize),
    d: usize,
    plain: bool,
    seed: u64,
) -> Result<(Graph, Constellation), GenError> {
    require("s", s, 1)?;
    require("l", l, 1)?;
    require("d", d, 1)?;
    let (lo, hi) = path_len;
    if lo == 0 || hi < lo {
        return Err(GenError::Infeasible("empty path length range".into()));
    }
    if lo * d < s {
        return Err(GenError::Infeasible(format!(
            "a path of {lo} vertices cannot host {s} stable vertices at meagerness {d}"
        )));
    }
    if !plain && l < 2 {
        return Err(GenError::Infeasible(
            "a single-path polypath is always plain".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    let mut next = s;
    for _ in 0..l {
        let len = rng.gen_range(lo..=hi);
        for j in 0..len - 1 {
            edges.push((next + j, next + j + 1));
        }
        // spread attachments while respecting the meagerness budget
        let mut load = vec![0usize; len];
        for x in 0..s {
            let mut placed = false;
            for _ in 0..(8 * len) {
                let q = rng.gen_range(0..len);
                if load[q] < d {
                    load[q] += 1;
                    edges.push((x, next + q));
                    placed = true;
                    break;
                }
            }
            if !placed {
                // fall back to the first vertex with spare budget
                let q = (0..len)
                    .find(|&q| load[q] < d)
                    .expect("capacity checked above");
                load[q] += 1;
                edges.push((x, next + q));
            }
        }
        paths.push(PathWitness::new((next..next + len).collect()));
        next += len;
    }
    if !plain {
        // at least one edge between distinct paths
        let cnt = 1 + rng.gen_range(0..l);
        for _ in 0..cnt {
            let a = rng.gen_range(0..l);
            let mut b = rng.gen_range(0..l);
            if a == b {
                b = (b + 1) % l;
            }
            let va = paths[a].vertices[rng.gen_range(0..paths[a].vertices.len())];
            let vb = paths[b].vertices[rng.gen_range(0..paths[b].vertices.len())];
            edges.push((va, vb));
        }
    }
    let g = Graph::from_edges(next, &edges).expect("random constellation");
    Ok((
        g,
        Constellation {
            stable: (0..s).collect(),
            paths,
        },
    ))
}

/// Erdos-Renyi graph for fuzzing, deterministic per seed.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("random graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{
        is_hollow, is_meager, validate_array, validate_constellation,
    };

    #[test]
    fn basic_family_counts() {
        let k4 = gen_complete(4).unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        let k33 = gen_biclique(3, 3).unwrap();
        assert_eq!((k33.vertex_count(), k33.edge_count()), (6, 9));
        // triangle-free
        for u in 0..6 {
            for v in u + 1..6 {
                for w in v + 1..6 {
                    assert!(
                        !(k33.has_edge(u, v) && k33.has_edge(v, w) && k33.has_edge(u, w)),
                        "triangle {u},{v},{w}"
                    );
                }
            }
        }
        let g6 = gen_grid(6).unwrap();
        assert_eq!((g6.vertex_count(), g6.edge_count()), (36, 60));
        assert!(gen_complete(0).is_err());
        assert!(gen_biclique(0, 2).is_err());
    }

    #[test]
    fn wall_golden_counts_and_degree() {
        // pinned counts for the documented construction
        let expected = [(2, 9, 11), (3, 16, 21), (4, 25, 34), (5, 36, 50), (6, 49, 69)];
        for (t, n, m) in expected {
            let w = gen_wall(t).unwrap();
            assert_eq!((w.vertex_count(), w.edge_count()), (n, m), "wall({t})");
            assert_eq!(
                w.vertices().map(|v| w.degree(v)).max().unwrap(),
                3,
                "wall({t}) max degree"
            );
            assert!(w.vertices().all(|v| w.degree(v) >= 2));
            assert!(w.is_connected());
        }
        assert!(gen_wall(1).is_err());
    }

    #[test]
    fn wall_is_bipartite_and_a_lattice_subgraph() {
        let w = gen_wall(6).unwrap();
        assert!(w.bipartition().is_some());
        // every edge joins lattice-adjacent coordinates, so the drawing on
        // the grid is planar by construction
        let cols = 7;
        for (u, v) in w.edge_list() {
            let (ui, uj) = (u / cols, u % cols);
            let (vi, vj) = (v / cols, v % cols);
            let dist = ui.abs_diff(vi) + uj.abs_diff(vj);
            assert_eq!(dist, 1, "edge ({u},{v}) is not a lattice edge");
        }
        // wall(2) contains a cycle: more edges than a forest allows
        let w2 = gen_wall(2).unwrap();
        assert!(w2.edge_count() >= w2.vertex_count());
    }

    #[test]
    fn subdivision_identity_and_uniform() {
        let k3 = gen_complete(3).unwrap();
        let (same, map) = gen_subdivision(&k3, &SubdivisionSpec::zero(&k3)).unwrap();
        assert_eq!(same, k3);
        assert_eq!(map.edge_paths.len(), 3);

        let k4 = gen_complete(4).unwrap();
        let (g, map) = gen_subdivision(&k4, &SubdivisionSpec::uniform(&k4, 1)).unwrap();
        assert_eq!(g.vertex_count(), 10);
        for (_, p) in &map.edge_paths {
            assert_eq!(p.len_edges(), 2);
            assert!(g.is_induced_path(&p.vertices).unwrap());
        }
    }

    #[test]
    fn subdivision_spec_errors() {
        let k3 = gen_complete(3).unwrap();
        let mut spec = SubdivisionSpec::zero(&k3);
        spec.extra.remove(&(0, 1));
        assert_eq!(
            gen_subdivision(&k3, &spec),
            Err(GenError::SpecMissingEdge(0, 1))
        );
        let mut spec = SubdivisionSpec::zero(&k3);
        spec.extra.insert((0, 5), 1);
        assert!(matches!(
            gen_subdivision(&k3, &spec),
            Err(GenError::SpecUnknownEdge(0, 5))
        ));
    }

    #[test]
    fn pd_counts_and_witness() {
        let (g, arr) = gen_pd(6).unwrap();
        assert_eq!(g.vertex_count(), 42);
        validate_array(&g, &arr).unwrap();

        let (g1, _) = gen_pd(1).unwrap();
        assert_eq!((g1.vertex_count(), g1.edge_count()), (2, 1));

        let (g4, arr4) = gen_pd(4).unwrap();
        validate_array(&g4, &arr4).unwrap();
        assert_eq!(arr4.s(), 4);
        // each stable vertex has exactly one neighbor per path
        for j in 0..4 {
            assert_eq!(g4.degree(j), 4);
        }
    }

    #[test]
    fn pd_expansion_witness_and_guards() {
        let (g0, arr0) = gen_pd_expansion(3, &SubdivisionSpec::default()).unwrap();
        assert_eq!(g0, gen_pd(3).unwrap().0);
        validate_array(&g0, &arr0).unwrap();

        let (g, arr) = gen_pd_expansion_random(6, 3, 11).unwrap();
        validate_array(&g, &arr).unwrap();
        assert!(g.vertex_count() >= 42);
        // stable vertices keep degree s
        for j in 0..6 {
            assert_eq!(g.degree(j), 6);
        }

        let mut bad = SubdivisionSpec::default();
        bad.extra.insert((0, 6), 2); // the edge from stable vertex 0 to path 0
        assert!(matches!(
            gen_pd_expansion(6, &bad),
            Err(GenError::SpecTouchesStableEdge(_, _))
        ));
    }

    #[test]
    fn degenerate_profile_reproduces_pd() {
        let (g, arr) = gen_array_instance(&ArrayProfile::pd_pattern(3)).unwrap();
        let (pd, pd_arr) = gen_pd(3).unwrap();
        assert_eq!(g, pd);
        assert_eq!(arr, pd_arr);
    }

    #[test]
    fn multi_neighbor_array_profile() {
        // a (3,3)-array with multi-vertex attachments, like a wider variant
        // of the attachment picture
        let block = |gaps: &[usize]| AttachmentBlock {
            neighbor_gaps: gaps.to_vec(),
        };
        let profile = ArrayProfile {
            s: 3,
            h: 2,
            blocks: vec![
                vec![block(&[1]), block(&[]), block(&[1, 1])],
                vec![block(&[]), block(&[1]), block(&[])],
                vec![block(&[1]), block(&[1]), block(&[1])],
            ],
            separations: vec![vec![1, 2, 1, 0], vec![0, 1, 3, 1], vec![2, 1, 1, 2]],
        };
        let (g, arr) = gen_array_instance(&profile).unwrap();
        validate_array(&g, &arr).unwrap();
        assert!(arr.paths.iter().any(|p| p.len_vertices() > 3));
    }

    #[test]
    fn random_array_instances_validate() {
        for s in [3, 4] {
            for h in [1, 2] {
                for seed in 0..5 {
                    let (g, arr) = gen_array_random(s, h, seed).unwrap();
                    validate_array(&g, &arr)
                        .unwrap_or_else(|e| panic!("s={s} h={h} seed={seed}: {e}"));
                }
            }
        }
    }

    #[test]
    fn random_constellation_respects_parameters() {
        let (g, c) = gen_random_constellation(5, 1, (8, 14), 3, true, 7).unwrap();
        validate_constellation(&g, &c, true).unwrap();
        assert!(is_meager(&g, &c, 3).unwrap());

        let (g, c) = gen_random_constellation(12, 2, (8, 16), 2, true, 9).unwrap();
        validate_constellation(&g, &c, true).unwrap();
        assert!(is_meager(&g, &c, 2).unwrap());

        let (g, c) = gen_random_constellation(1, 1, (1, 3), 1, true, 0).unwrap();
        validate_constellation(&g, &c, true).unwrap();

        // non-plain instances really carry a cross edge
        let (g, c) = gen_random_constellation(3, 2, (5, 9), 2, false, 4).unwrap();
        validate_constellation(&g, &c, false).unwrap();
        assert!(validate_constellation(&g, &c, true).is_err());

        assert!(gen_random_constellation(9, 1, (2, 3), 2, true, 0).is_err());
    }

    #[test]
    fn generators_are_seed_deterministic() {
        let a = gen_array_random(4, 2, 42).unwrap().0;
        let b = gen_array_random(4, 2, 42).unwrap().0;
        assert_eq!(
            crate::graph6::graph6_emit(&a).unwrap(),
            crate::graph6::graph6_emit(&b).unwrap()
        );
        let c = gen_array_random(4, 2, 43).unwrap().0;
        assert_ne!(a.fingerprint(), c.fingerprint());
    }

    #[test]
    fn hollow_and_meager_match_profiles() {
        let (g, arr) = gen_array_random(4, 2, 1).unwrap();
        let c = arr.constellation();
        assert!(is_hollow(&g, &c, 2).unwrap());
        // arrays are 1-meager by the alignment clause
        assert!(is_meager(&g, &c, 1).unwrap());
    }
}
