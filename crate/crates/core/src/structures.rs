//! Domain structures and their validators.
//!
//! Every structure here is a certificate: a plain value citing vertex ids of
//! a specific graph. Each validator re-checks the full definition clause by
//! clause and reports the first violated clause by name, so that anything an
//! oracle or extractor emits can be checked independently of how it was
//! found.

use crate::graph::{CycleWitness, Graph, PathWitness, VertexSet};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// First violated clause of a definition, by name, with a short detail.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("clause {clause} violated: {detail}")]
pub struct Violation {
    pub clause: &'static str,
    pub detail: String,
}

fn violation(clause: &'static str, detail: impl Into<String>) -> Violation {
    Violation {
        clause,
        detail: detail.into(),
    }
}

pub type Checked = Result<(), Violation>;

/// A stable-set side together with a polypath side; the two sides may
/// overlap and nothing is required of the stable side yet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    pub stable: Vec<usize>,
    pub paths: Vec<PathWitness>,
}

/// An (s,l)-constellation: a stable set disjoint from a polypath, every
/// stable vertex having a neighbor in every path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constellation {
    pub stable: Vec<usize>,
    pub paths: Vec<PathWitness>,
}

impl Constellation {
    pub fn s(&self) -> usize {
        self.stable.len()
    }

    pub fn l(&self) -> usize {
        self.paths.len()
    }

    pub fn single_path(&self) -> Option<&PathWitness> {
        if self.paths.len() == 1 {
            Some(&self.paths[0])
        } else {
            None
        }
    }
}

/// A single-path constellation with a bijection `position -> stable vertex`
/// under which the neighbor blocks appear in strictly increasing order along
/// the path, traversed from `from_end`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alignment {
    /// `stable_order[i]` is the stable vertex at position `i+1`.
    pub stable_order: Vec<usize>,
    pub path: PathWitness,
    /// The end of `path` the order is measured from.
    pub from_end: usize,
}

/// An (s,h)-array: a plain, h-hollow (s,s)-constellation that is an
/// s-alignment on every path under one shared order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayWitness {
    pub stable_order: Vec<usize>,
    pub paths: Vec<PathWitness>,
    /// Hollowness parameter h the array is certified at.
    pub hollow: usize,
}

impl ArrayWitness {
    pub fn s(&self) -> usize {
        self.stable_order.len()
    }

    pub fn vertex_set(&self) -> Vec<usize> {
        let mut vs = self.stable_order.clone();
        for p in &self.paths {
            vs.extend_from_slice(&p.vertices);
        }
        vs
    }

    pub fn constellation(&self) -> Constellation {
        Constellation {
            stable: self.stable_order.clone(),
            paths: self.paths.clone(),
        }
    }

    /// The canonical complete-bipartite minor model: each stable vertex is
    /// its own branch set, each path contracts to one branch set.
    pub fn biclique_minor_model(&self) -> MinorModelWitness {
        let s = self.s();
        let mut target_edges = Vec::new();
        for i in 0..s {
            for j in 0..s {
                target_edges.push((i, s + j));
            }
        }
        let target = Graph::from_edges(2 * s, &target_edges).expect("complete bipartite target");
        let mut branch_sets: Vec<Vec<usize>> =
            self.stable_order.iter().map(|&x| vec![x]).collect();
        for p in &self.paths {
            branch_sets.push(p.vertices.clone());
        }
        MinorModelWitness {
            target,
            branch_sets,
        }
    }
}

/// A pinch witness: `cycles.len()` induced cycles through the common hub,
/// otherwise pairwise disjoint and anticomplete.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PinchWitness {
    pub hub: usize,
    pub cycles: Vec<CycleWitness>,
}

/// A k-block: a vertex set with at least k internally disjoint paths between
/// every pair; strong blocks additionally keep distinct pairs' families
/// disjoint except at shared ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockWitness {
    pub block: Vec<usize>,
    pub k: usize,
    pub strong: bool,
    pub families: Vec<PairFamily>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFamily {
    pub x: usize,
    pub y: usize,
    pub paths: Vec<PathWitness>,
}

/// A (d,r)-patch for a target set: one hub plus r disjoint paths, each path
/// meeting the target in exactly one end and the hub in exactly the other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchWitness {
    pub hub: usize,
    pub paths: Vec<PathWitness>,
    pub target: Vec<usize>,
}

/// A (d,r)-match for a target set: r disjoint paths meeting the target in
/// exactly their ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchWitness {
    pub paths: Vec<PathWitness>,
    pub target: Vec<usize>,
}

/// A minor model: disjoint connected branch sets, one per target vertex,
/// with an edge between branch sets for every target edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModelWitness {
    #[serde(with = "crate::witness::graph_as_graph6")]
    pub target: Graph,
    pub branch_sets: Vec<Vec<usize>>,
}

/// A tree decomposition presented as a tree plus one bag per node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecompositionWitness {
    pub node_count: usize,
    pub tree_edges: Vec<(usize, usize)>,
    pub bags: Vec<Vec<usize>>,
    pub width: usize,
}

// ---------------------------------------------------------------------------
// Validators
// ---------------------------------------------------------------------------

pub fn validate_path(g: &Graph, p: &PathWitness) -> Checked {
    if p.vertices.is_empty() {
        return Err(violation("path-nonempty", "empty vertex sequence"));
    }
    match g.is_induced_path(&p.vertices) {
        Ok(true) => Ok(()),
        Ok(false) => Err(violation(
            "path-induced",
            format!("{:?} is not an induced path", p.vertices),
        )),
        Err(e) => Err(violation("path-well-formed", e.to_string())),
    }
}

pub fn validate_cycle(g: &Graph, c: &CycleWitness) -> Checked {
    if c.len() < 3 {
        return Err(violation("cycle-min-length", "fewer than 3 vertices"));
    }
    match g.is_induced_cycle(&c.vertices) {
        Ok(true) => Ok(()),
        Ok(false) => Err(violation(
            "cycle-induced",
            format!("{:?} is not an induced cycle", c.vertices),
        )),
        Err(e) => Err(violation("cycle-well-formed", e.to_string())),
    }
}

fn paths_pairwise_disjoint(g: &Graph, paths: &[PathWitness]) -> Checked {
    let mut seen = VertexSet::new(g.vertex_count());
    for p in paths {
        for &v in &p.vertices {
            if seen.contains(v) {
                return Err(violation(
                    "paths-disjoint",
                    format!("vertex {v} on two paths"),
                ));
            }
            seen.insert(v);
        }
    }
    Ok(())
}

fn paths_pairwise_anticomplete(g: &Graph, paths: &[PathWitness]) -> Checked {
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            let anti = g
                .are_anticomplete(&paths[i].vertices, &paths[j].vertices)
                .map_err(|e| violation("plain", e.to_string()))?;
            if !anti {
                return Err(violation(
                    "plain",
                    format!("edge between path {i} and path {j}"),
                ));
            }
        }
    }
    Ok(())
}

/// Checks an (s,l)-bundle: disjoint induced paths; plainness on request.
pub fn validate_bundle(g: &Graph, b: &Bundle, plain: bool) -> Checked {
    for &x in &b.stable {
        if !g.has_vertex(x) {
            return Err(violation("vertex-range", format!("vertex {x} not in graph")));
        }
    }
    for p in &b.paths {
        validate_path(g, p)?;
    }
    paths_pairwise_disjoint(g, &b.paths)?;
    if plain {
        paths_pairwise_anticomplete(g, &b.paths)?;
    }
    Ok(())
}

/// Checks all constellation clauses; `plain` additionally requires the
/// polypath pairwise anticomplete.
pub fn validate_constellation(g: &Graph, c: &Constellation, plain: bool) -> Checked {
    if c.stable.is_empty() || c.paths.is_empty() {
        return Err(violation("size", "constellation needs s >= 1 and l >= 1"));
    }
    validate_bundle(
        g,
        &Bundle {
            stable: c.stable.clone(),
            paths: c.paths.clone(),
        },
        plain,
    )?;
    let mut stable_set = VertexSet::new(g.vertex_count());
    for &x in &c.stable {
        if stable_set.contains(x) {
            return Err(violation("stable-distinct", format!("vertex {x} repeated")));
        }
        stable_set.insert(x);
    }
    for p in &c.paths {
        for &v in &p.vertices {
            if stable_set.contains(v) {
                return Err(violation(
                    "S-disjoint-from-paths",
                    format!("vertex {v} in both sides"),
                ));
            }
        }
    }
    for (i, &x) in c.stable.iter().enumerate() {
        for &y in &c.stable[i + 1..] {
            if g.has_edge(x, y) {
                return Err(violation("S-stable", format!("edge {x}-{y} inside S")));
            }
        }
    }
    for &x in &c.stable {
        for (pi, p) in c.paths.iter().enumerate() {
            if !p.vertices.iter().any(|&v| g.has_edge(x, v)) {
                return Err(violation(
                    "neighbor-in-every-path",
                    format!("vertex {x} has no neighbor on path {pi}"),
                ));
            }
        }
    }
    Ok(())
}

/// Positions (indices into `path.vertices`) of the neighbors of `x`.
pub fn neighbor_positions(g: &Graph, path: &PathWitness, x: usize) -> Vec<usize> {
    path.vertices
        .iter()
        .enumerate()
        .filter(|&(_, &v)| g.has_edge(x, v))
        .map(|(i, _)| i)
        .collect()
}

/// Maximal gaps of `x` on one path, in path order: the subpath between each
/// pair of consecutive neighbors of `x`. A vertex with k neighbors on the
/// path yields k-1 gaps; the length of a gap is its number of edges.
pub fn gaps_on_path(g: &Graph, path: &PathWitness, x: usize) -> Vec<PathWitness> {
    let pos = neighbor_positions(g, path, x);
    pos.windows(2)
        .map(|w| PathWitness::new(path.vertices[w[0]..=w[1]].to_vec()))
        .collect()
}

/// All maximal gaps of `x` in a single-path constellation.
pub fn gaps_of(g: &Graph, c: &Constellation, x: usize) -> Result<Vec<PathWitness>, Violation> {
    let path = c
        .single_path()
        .ok_or_else(|| violation("single-path", "gaps are defined on one path"))?;
    if !c.stable.contains(&x) {
        return Err(violation(
            "x-in-stable-set",
            format!("vertex {x} not in the stable side"),
        ));
    }
    Ok(gaps_on_path(g, path, x))
}

/// d-hollow: every gap of every stable vertex on every path is shorter
/// than d.
pub fn is_hollow(g: &Graph, c: &Constellation, d: usize) -> Result<bool, Violation> {
    validate_constellation(g, c, false)?;
    Ok(hollow_unchecked(g, c, d))
}

pub(crate) fn hollow_unchecked(g: &Graph, c: &Constellation, d: usize) -> bool {
    c.stable.iter().all(|&x| {
        c.paths
            .iter()
            .flat_map(|p| gaps_on_path(g, p, x))
            .all(|gap| gap.len_edges() < d)
    })
}

/// d-meager: every path vertex has at most d neighbors in the stable side.
pub fn is_meager(g: &Graph, c: &Constellation, d: usize) -> Result<bool, Violation> {
    validate_constellation(g, c, false)?;
    Ok(meager_unchecked(g, c, d))
}

pub(crate) fn meager_unchecked(g: &Graph, c: &Constellation, d: usize) -> bool {
    let stable_set = VertexSet::from_iter(g.vertex_count(), c.stable.iter().copied());
    c.paths
        .iter()
        .flat_map(|p| &p.vertices)
        .all(|&v| g.degree_into(v, &stable_set) <= d)
}

/// Checks the ordering clause alone: traversing `path` from `from_end`, all
/// neighbors of `order[i]` appear strictly before all neighbors of
/// `order[j]` whenever i < j.
pub fn alignment_order_holds(
    g: &Graph,
    order: &[usize],
    path: &PathWitness,
    from_end: usize,
) -> bool {
    let n = path.vertices.len();
    let forward = path.vertices[0] == from_end;
    if !forward && *path.vertices.last().unwrap() != from_end {
        return false;
    }
    let mut prev_max: Option<usize> = None;
    for &x in order {
        let pos = neighbor_positions(g, path, x);
        if pos.is_empty() {
            return false;
        }
        let (lo, hi) = if forward {
            (pos[0], *pos.last().unwrap())
        } else {
            (n - 1 - pos.last().unwrap(), n - 1 - pos[0])
        };
        if let Some(pm) = prev_max {
            if lo <= pm {
                return false;
            }
        }
        prev_max = Some(hi);
    }
    true
}

/// Validates an alignment against its declared end.
pub fn validate_alignment(g: &Graph, a: &Alignment) -> Checked {
    let c = Constellation {
        stable: a.stable_order.clone(),
        paths: vec![a.path.clone()],
    };
    validate_constellation(g, &c, false)?;
    let (e0, e1) = a.path.ends();
    if a.from_end != e0 && a.from_end != e1 {
        return Err(violation(
            "(AL)",
            format!("declared end {} is not an end of the path", a.from_end),
        ));
    }
    if !alignment_order_holds(g, &a.stable_order, &a.path, a.from_end) {
        return Err(violation("(AL)", "neighbor blocks out of order".to_string()));
    }
    Ok(())
}

/// Variant that accepts the alignment if the ordering holds from either end.
pub fn validate_alignment_any_end(g: &Graph, a: &Alignment) -> Checked {
    let (e0, e1) = a.path.ends();
    let mut alt = a.clone();
    alt.from_end = e0;
    if validate_alignment(g, &alt).is_ok() {
        return Ok(());
    }
    alt.from_end = e1;
    validate_alignment(g, &alt)
}

/// Validates an (s,h)-array: plain h-hollow (s,s)-constellation plus the
/// shared-order alignment clause on every path.
pub fn validate_array(g: &Graph, arr: &ArrayWitness) -> Checked {
    let s = arr.stable_order.len();
    if arr.paths.len() != s {
        return Err(violation(
            "square",
            format!("{} stable vertices but {} paths", s, arr.paths.len()),
        ));
    }
    if arr.hollow == 0 {
        return Err(violation("h-positive", "hollowness parameter must be >= 1"));
    }
    let c = arr.constellation();
    validate_constellation(g, &c, true)?;
    if !hollow_unchecked(g, &c, arr.hollow) {
        return Err(violation(
            "h-hollow",
            format!("a gap of length >= {} exists", arr.hollow),
        ));
    }
    for (i, p) in arr.paths.iter().enumerate() {
        let (e0, e1) = p.ends();
        if !alignment_order_holds(g, &arr.stable_order, p, e0)
            && !alignment_order_holds(g, &arr.stable_order, p, e1)
        {
            return Err(violation(
                "(AL)",
                format!("path {i} is not aligned under the shared order"),
            ));
        }
    }
    Ok(())
}

/// Validates a pinch witness at parameters (c,h): c induced cycles of length
/// at least h+2 through the hub, otherwise pairwise disjoint and
/// anticomplete.
pub fn validate_pinch_witness(g: &Graph, w: &PinchWitness, c: usize, h: usize) -> Checked {
    if w.cycles.len() != c {
        return Err(violation(
            "cycle-count",
            format!("expected {c} cycles, found {}", w.cycles.len()),
        ));
    }
    for (i, cyc) in w.cycles.iter().enumerate() {
        validate_cycle(g, cyc)?;
        if cyc.len() < h + 2 {
            return Err(violation(
                "cycle-length",
                format!("cycle {i} has length {} < {}", cyc.len(), h + 2),
            ));
        }
        if !cyc.contains(w.hub) {
            return Err(violation(
                "hub-on-cycle",
                format!("cycle {i} avoids hub {}", w.hub),
            ));
        }
    }
    let rests: Vec<Vec<usize>> = w
        .cycles
        .iter()
        .map(|cyc| {
            cyc.vertices
                .iter()
                .copied()
                .filter(|&v| v != w.hub)
                .collect()
        })
        .collect();
    for i in 0..rests.len() {
        for j in i + 1..rests.len() {
            let a = VertexSet::from_iter(g.vertex_count(), rests[i].iter().copied());
            if rests[j].iter().any(|&v| a.contains(v)) {
                return Err(violation(
                    "cycles-share-only-hub",
                    format!("cycles {i} and {j} share a non-hub vertex"),
                ));
            }
            let anti = g
                .are_anticomplete(&rests[i], &rests[j])
                .map_err(|e| violation("cycles-anticomplete", e.to_string()))?;
            if !anti {
                return Err(violation(
                    "cycles-anticomplete",
                    format!("edge between cycles {i} and {j} off the hub"),
                ));
            }
        }
    }
    Ok(())
}

/// Validates a k-block (and the strong clause when claimed).
pub fn validate_block(g: &Graph, b: &BlockWitness) -> Checked {
    if b.block.len() < b.k {
        return Err(violation(
            "block-size",
            format!("|B| = {} < k = {}", b.block.len(), b.k),
        ));
    }
    let mut seen = VertexSet::new(g.vertex_count());
    for &v in &b.block {
        if !g.has_vertex(v) {
            return Err(violation("vertex-range", format!("vertex {v} not in graph")));
        }
        if seen.contains(v) {
            return Err(violation("block-distinct", format!("vertex {v} repeated")));
        }
        seen.insert(v);
    }
    let mut by_pair: BTreeMap<(usize, usize), &PairFamily> = BTreeMap::new();
    for f in &b.families {
        let key = (f.x.min(f.y), f.x.max(f.y));
        if by_pair.insert(key, f).is_some() {
            return Err(violation(
                "family-duplicate",
                format!("two families for pair {key:?}"),
            ));
        }
    }
    for i in 0..b.block.len() {
        for j in i + 1..b.block.len() {
            let (x, y) = (b.block[i].min(b.block[j]), b.block[i].max(b.block[j]));
            let fam = by_pair.get(&(x, y)).ok_or_else(|| {
                violation("family-missing", format!("no family for pair ({x},{y})"))
            })?;
            if fam.paths.len() < b.k {
                return Err(violation(
                    "family-size",
                    format!("pair ({x},{y}) has {} < k paths", fam.paths.len()),
                ));
            }
            for p in &fam.paths {
                validate_path(g, p)?;
                let (a, z) = p.ends();
                if (a, z) != (x, y) && (a, z) != (y, x) {
                    return Err(violation(
                        "path-ends",
                        format!("path ends {:?} are not ({x},{y})", (a, z)),
                    ));
                }
            }
            for (pi, p) in fam.paths.iter().enumerate() {
                for q in &fam.paths[pi + 1..] {
                    let pset = VertexSet::from_iter(g.vertex_count(), p.vertices.iter().copied());
                    if q.vertices
                        .iter()
                        .any(|&v| pset.contains(v) && v != x && v != y)
                    {
                        return Err(violation(
                            "internally-disjoint",
                            format!("pair ({x},{y}) paths share an interior vertex"),
                        ));
                    }
                }
            }
        }
    }
    if b.strong {
        let fams: Vec<(&(usize, usize), &&PairFamily)> = by_pair.iter().collect();
        for i in 0..fams.len() {
            for j in i + 1..fams.len() {
                let (p1, f1) = fams[i];
                let (p2, f2) = fams[j];
                let allowed: Vec<usize> = [p1.0, p1.1]
                    .into_iter()
                    .filter(|v| *v == p2.0 || *v == p2.1)
                    .collect();
                let v1 = VertexSet::from_iter(
                    g.vertex_count(),
                    f1.paths.iter().flat_map(|p| p.vertices.iter().copied()),
                );
                for p in &f2.paths {
                    for &v in &p.vertices {
                        if v1.contains(v) && !allowed.contains(&v) {
                            return Err(violation(
                                "strong-intersection",
                                format!(
                                    "families {p1:?} and {p2:?} share vertex {v} beyond their common ends"
                                ),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Validates a (d,r)-patch for its target set.
pub fn validate_patch(g: &Graph, p: &PatchWitness, d: usize, r: usize) -> Checked {
    let x_set = &p.target;
    if p.paths.len() != r {
        return Err(violation(
            "path-count",
            format!("expected {r} paths, found {}", p.paths.len()),
        ));
    }
    if !g.has_vertex(p.hub) {
        return Err(violation("vertex-range", format!("hub {}", p.hub)));
    }
    for q in &p.paths {
        validate_path(g, q)?;
    }
    paths_pairwise_disjoint(g, &p.paths)?;
    let target = VertexSet::from_iter(g.vertex_count(), x_set.iter().copied());
    for (i, q) in p.paths.iter().enumerate() {
        if q.contains(p.hub) {
            return Err(violation("(P1)", format!("hub on path {i}")));
        }
        if q.len_edges() < d {
            return Err(violation(
                "(P2)",
                format!("path {i} has length {} < {d}", q.len_edges()),
            ));
        }
        let in_target: Vec<usize> = q
            .vertices
            .iter()
            .copied()
            .filter(|&v| target.contains(v))
            .collect();
        let hub_nbrs: Vec<usize> = q
            .vertices
            .iter()
            .copied()
            .filter(|&v| g.has_edge(p.hub, v))
            .collect();
        let (e0, e1) = q.ends();
        let ok = match (&in_target[..], &hub_nbrs[..]) {
            ([xv], [yv]) => {
                if q.len_vertices() == 1 {
                    *xv == e0 && *yv == e0
                } else {
                    (*xv == e0 && *yv == e1) || (*xv == e1 && *yv == e0)
                }
            }
            _ => false,
        };
        if !ok {
            return Err(violation(
                "(P3)",
                format!(
                    "path {i}: target hits {:?}, hub neighbors {:?}",
                    in_target, hub_nbrs
                ),
            ));
        }
    }
    Ok(())
}

/// Validates a (d,r)-match for its target set.
pub fn validate_match(g: &Graph, m: &MatchWitness, d: usize, r: usize) -> Checked {
    let x_set = &m.target;
    if m.paths.len() != r {
        return Err(violation(
            "path-count",
            format!("expected {r} paths, found {}", m.paths.len()),
        ));
    }
    for q in &m.paths {
        validate_path(g, q)?;
    }
    paths_pairwise_disjoint(g, &m.paths)?;
    for (i, q) in m.paths.iter().enumerate() {
        if q.len_edges() < d {
            return Err(violation(
                "(M1)",
                format!("path {i} has length {} < {d}", q.len_edges()),
            ));
        }
    }
    let target = VertexSet::from_iter(g.vertex_count(), x_set.iter().copied());
    let mut boundary = VertexSet::new(g.vertex_count());
    for q in &m.paths {
        let (e0, e1) = q.ends();
        boundary.insert(e0);
        boundary.insert(e1);
    }
    for q in &m.paths {
        for &v in &q.vertices {
            let in_x = target.contains(v);
            let in_b = boundary.contains(v);
            if in_x != in_b {
                return Err(violation(
                    "(M2)",
                    format!("vertex {v}: in target = {in_x}, path end = {in_b}"),
                ));
            }
        }
    }
    Ok(())
}

/// Validates a minor model of `m.target` in `g`.
pub fn validate_minor_model(g: &Graph, m: &MinorModelWitness) -> Checked {
    if m.branch_sets.len() != m.target.vertex_count() {
        return Err(violation(
            "branch-count",
            format!(
                "{} branch sets for a {}-vertex target",
                m.branch_sets.len(),
                m.target.vertex_count()
            ),
        ));
    }
    let mut seen = VertexSet::new(g.vertex_count());
    let mut sets = Vec::with_capacity(m.branch_sets.len());
    for (i, bs) in m.branch_sets.iter().enumerate() {
        if bs.is_empty() {
            return Err(violation("branch-set-empty", format!("branch set {i}")));
        }
        let mut set = VertexSet::new(g.vertex_count());
        for &v in bs {
            if !g.has_vertex(v) {
                return Err(violation("vertex-range", format!("vertex {v}")));
            }
            if seen.contains(v) {
                return Err(violation(
                    "branch-sets-disjoint",
                    format!("vertex {v} in two branch sets"),
                ));
            }
            seen.insert(v);
            set.insert(v);
        }
        if !g.connected_within(&set) {
            return Err(violation(
                "branch-set-connected",
                format!("branch set {i} is disconnected"),
            ));
        }
        sets.push(set);
    }
    for (u, v) in m.target.edge_list() {
        let hit = m.branch_sets[u]
            .iter()
            .any(|&a| sets[v].intersects(g.row(a)));
        if !hit {
            return Err(violation(
                "edge-uncovered",
                format!("no edge between branch sets {u} and {v}"),
            ));
        }
    }
    Ok(())
}

/// Validates a tree decomposition of claimed width `t.width`.
pub fn validate_tree_decomposition(g: &Graph, t: &TreeDecompositionWitness) -> Checked {
    if t.node_count == 0 {
        return Err(violation("tree-shape", "decomposition tree is empty"));
    }
    if t.bags.len() != t.node_count {
        return Err(violation(
            "tree-shape",
            format!("{} bags for {} nodes", t.bags.len(), t.node_count),
        ));
    }
    if t.tree_edges.len() != t.node_count - 1 {
        return Err(violation(
            "tree-shape",
            format!(
                "{} edges cannot form a tree on {} nodes",
                t.tree_edges.len(),
                t.node_count
            ),
        ));
    }
    let mut adj = vec![Vec::new(); t.node_count];
    for &(a, b) in &t.tree_edges {
        if a >= t.node_count || b >= t.node_count {
            return Err(violation("tree-shape", format!("edge ({a},{b}) out of range")));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; t.node_count];
    let mut stack = vec![0];
    seen[0] = true;
    let mut found = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                found += 1;
                stack.push(y);
            }
        }
    }
    if found != t.node_count {
        return Err(violation("tree-shape", "decomposition tree is disconnected"));
    }
    for (i, bag) in t.bags.iter().enumerate() {
        if bag.len() > t.width + 1 {
            return Err(violation(
                "(T2)",
                format!("bag {i} has {} > width+1 vertices", bag.len()),
            ));
        }
        for &v in bag {
            if !g.has_vertex(v) {
                return Err(violation("vertex-range", format!("vertex {v} in bag {i}")));
            }
        }
    }
    let mut nodes_of: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, bag) in t.bags.iter().enumerate() {
        for &v in bag {
            nodes_of[v].push(i);
        }
    }
    for v in g.vertices() {
        if nodes_of[v].is_empty() {
            return Err(violation(
                "vertex-covered",
                format!("vertex {v} appears in no bag"),
            ));
        }
        // the nodes holding v must induce a connected subtree
        let members: Vec<usize> = nodes_of[v].clone();
        let mut inside = vec![false; t.node_count];
        for &m in &members {
            inside[m] = true;
        }
        let mut seen = vec![false; t.node_count];
        let mut stack = vec![members[0]];
        seen[members[0]] = true;
        let mut cnt = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if inside[y] && !seen[y] {
                    seen[y] = true;
                    cnt += 1;
                    stack.push(y);
                }
            }
        }
        if cnt != members.len() {
            return Err(violation(
                "subtree-connectivity",
                format!("bags holding vertex {v} are not connected"),
            ));
        }
    }
    for (u, v) in g.edge_list() {
        let covered = t.bags.iter().any(|bag| bag.contains(&u) && bag.contains(&v));
        if !covered {
            return Err(violation("(T1)", format!("edge ({u},{v}) in no bag")));
        }
    }
    Ok(())
}
