//! Exhaustive search for induced subdivisions, and for induced line graphs
//! of subdivisions, both bounded by a host-vertex budget.
//!
//! The subdivision search interleaves branch-vertex placement with edge
//! routing: after each branch vertex is placed, every pattern edge to an
//! already-placed branch vertex is routed immediately under the exact
//! adjacency discipline (a new host vertex must be adjacent to precisely the
//! vertices the final subdivision prescribes), so dead placements die early.

use crate::graph::{Graph, PathWitness, VertexSet};
use crate::generators::{gen_subdivision, SubdivisionSpec};
use crate::structures::{Checked, Violation};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// An induced subdivision of a base graph inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionEmbedding {
    #[serde(with = "crate::witness::graph_as_graph6")]
    pub base: Graph,
    /// `branch[u]` is the host vertex the base vertex u maps to.
    pub branch: Vec<usize>,
    /// Replacement path per base edge (canonical edge order), including the
    /// branch ends.
    pub edge_paths: Vec<((usize, usize), PathWitness)>,
}

impl SubdivisionEmbedding {
    /// Number of host vertices the embedding occupies.
    pub fn vertex_count(&self) -> usize {
        let mut all: Vec<usize> = self.branch.clone();
        for (_, p) in &self.edge_paths {
            all.extend(p.interior());
        }
        all.len()
    }

    /// True iff no base edge path has an interior, except possibly `allowed`
    /// of them.
    pub fn unsubdivided_edges(&self) -> usize {
        self.edge_paths
            .iter()
            .filter(|(_, p)| p.len_edges() == 1)
            .count()
    }
}

pub fn validate_subdivision_embedding(g: &Graph, w: &SubdivisionEmbedding) -> Checked {
    let violation = |clause: &'static str, detail: String| Violation { clause, detail };
    let k = w.base.vertex_count();
    if w.branch.len() != k {
        return Err(violation(
            "branch-size",
            format!("{} branch images for {k} base vertices", w.branch.len()),
        ));
    }
    if w.edge_paths.len() != w.base.edge_count()
        || w.edge_paths
            .iter()
            .map(|(e, _)| *e)
            .ne(w.base.edge_list())
    {
        return Err(violation(
            "edge-coverage",
            "edge paths do not list the base edges in canonical order".into(),
        ));
    }
    let mut occupancy: BTreeMap<usize, usize> = BTreeMap::new();
    for &b in &w.branch {
        *occupancy.entry(b).or_insert(0) += 1;
    }
    if occupancy.len() != k {
        return Err(violation("branch-injective", "branch images repeat".into()));
    }
    for ((u, v), p) in &w.edge_paths {
        if p.len_edges() < 1 {
            return Err(violation(
                "path-nonzero-length",
                format!("edge ({u},{v}) replaced by a single vertex"),
            ));
        }
        let (a, b) = p.ends();
        if a != w.branch[*u] || b != w.branch[*v] {
            return Err(violation(
                "path-ends",
                format!("path for ({u},{v}) does not join the branch images"),
            ));
        }
        for &x in p.interior() {
            *occupancy.entry(x).or_insert(0) += 1;
        }
    }
    if occupancy.values().any(|&c| c > 1) {
        return Err(violation(
            "internally-disjoint",
            "an interior vertex is reused".into(),
        ));
    }
    // the union must induce exactly the subdivision: consecutive path
    // vertices adjacent, everything else non-adjacent
    let union: Vec<usize> = occupancy.keys().copied().collect();
    for &x in &union {
        if !g.has_vertex(x) {
            return Err(violation("vertex-range", format!("vertex {x}")));
        }
    }
    let mut expected: BTreeMap<usize, VertexSet> = union
        .iter()
        .map(|&x| (x, VertexSet::new(g.vertex_count())))
        .collect();
    for (_, p) in &w.edge_paths {
        for win in p.vertices.windows(2) {
            expected.get_mut(&win[0]).unwrap().insert(win[1]);
            expected.get_mut(&win[1]).unwrap().insert(win[0]);
        }
    }
    for (i, &x) in union.iter().enumerate() {
        for &y in &union[i + 1..] {
            let want = expected[&x].contains(y);
            if g.has_edge(x, y) != want {
                return Err(violation(
                    "induced",
                    format!("pair ({x},{y}): adjacency {} expected {want}", g.has_edge(x, y)),
                ));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedSearch<T> {
    Found(T),
    NoneWithinBudget,
}

impl<T> BoundedSearch<T> {
    pub fn found(self) -> Option<T> {
        match self {
            BoundedSearch::Found(t) => Some(t),
            BoundedSearch::NoneWithinBudget => None,
        }
    }

    pub fn is_none(&self) -> bool {
        matches!(self, BoundedSearch::NoneWithinBudget)
    }
}

enum Task {
    Place(usize),
    Route(usize, usize),
}

struct SubdivisionSearch<'a> {
    g: &'a Graph,
    base: &'a Graph,
    tasks: Vec<Task>,
    budget: usize,
    /// Cap on the number of base edges mapped to single host edges.
    max_unsubdivided: usize,
    unsubdivided: usize,
    branch: Vec<usize>,
    used: VertexSet,
    used_count: usize,
    paths: BTreeMap<(usize, usize), Vec<usize>>,
}

impl<'a> SubdivisionSearch<'a> {
    /// Host neighbors of `w` inside the current partial embedding.
    fn used_neighbors(&self, w: usize) -> Vec<usize> {
        self.g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&x| self.used.contains(x))
            .collect()
    }

    fn run(&mut self, step: usize) -> bool {
        let Some(task) = self.tasks.get(step) else {
            return true;
        };
        match task {
            Task::Place(p) => {
                let p = *p;
                let pdeg = self.base.degree(p);
                // adjacency into the partial embedding may only touch placed
                // branch neighbors of p, and is otherwise resolved when the
                // connecting edges are routed
                let allowed: Vec<usize> = self
                    .base
                    .neighbors(p)
                    .iter()
                    .filter(|&&q| self.branch[q] != usize::MAX)
                    .map(|&q| self.branch[q])
                    .collect();
                for w in self.g.vertices() {
                    if self.used.contains(w) || self.g.degree(w) < pdeg {
                        continue;
                    }
                    if self.used_count + 1 > self.budget {
                        continue;
                    }
                    if !self.used_neighbors(w).iter().all(|x| allowed.contains(x)) {
                        continue;
                    }
                    self.branch[p] = w;
                    self.used.insert(w);
                    self.used_count += 1;
                    if self.run(step + 1) {
                        return true;
                    }
                    self.used.remove(w);
                    self.used_count -= 1;
                    self.branch[p] = usize::MAX;
                }
                false
            }
            Task::Route(u, v) => {
                let (u, v) = (*u, *v);
                let (a, b) = (self.branch[u], self.branch[v]);
                if self.g.has_edge(a, b) {
                    // a chord would remain under any longer route
                    if self.unsubdivided == self.max_unsubdivided {
                        return false;
                    }
                    self.unsubdivided += 1;
                    self.paths.insert(key(u, v), vec![a, b]);
                    let ok = self.run(step + 1);
                    if !ok {
                        self.paths.remove(&key(u, v));
                        self.unsubdivided -= 1;
                    }
                    return ok;
                }
                self.extend_route(u, v, a, vec![], step)
            }
        }
    }

    /// Grows the interior of the route for base edge (u,v); `tail` is the
    /// interior so far, `last` the current route head.
    fn extend_route(
        &mut self,
        u: usize,
        v: usize,
        last: usize,
        tail: Vec<usize>,
        step: usize,
    ) -> bool {
        if self.used_count + 1 > self.budget {
            return false;
        }
        let target = self.branch[v];
        for &w in self.g.neighbors(last) {
            if self.used.contains(w) {
                continue;
            }
            // w may touch the embedding only through its predecessor and,
            // if it closes the route, the target
            let mut closes = false;
            let mut ok = true;
            for x in self.used_neighbors(w) {
                if x == last {
                    continue;
                }
                if x == target {
                    closes = true;
                } else {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            self.used.insert(w);
            self.used_count += 1;
            if closes {
                let mut path = vec![self.branch[u]];
                path.extend(&tail);
                path.push(w);
                path.push(target);
                self.paths.insert(key(u, v), path);
                if self.run(step + 1) {
                    return true;
                }
                self.paths.remove(&key(u, v));
            } else {
                let mut tail2 = tail.clone();
                tail2.push(w);
                if self.extend_route(u, v, w, tail2, step) {
                    return true;
                }
            }
            self.used.remove(w);
            self.used_count -= 1;
        }
        false
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Finds an induced subdivision of `base` in `g` occupying at most `budget`
/// host vertices. Exhaustive within the budget.
pub fn find_induced_subdivision(
    g: &Graph,
    base: &Graph,
    budget: usize,
) -> BoundedSearch<SubdivisionEmbedding> {
    find_induced_subdivision_capped(g, base, budget, usize::MAX)
}

/// Same search restricted to subdivisions with at most `max_unsubdivided`
/// base edges kept as single host edges.
pub fn find_induced_subdivision_capped(
    g: &Graph,
    base: &Graph,
    budget: usize,
    max_unsubdivided: usize,
) -> BoundedSearch<SubdivisionEmbedding> {
    let k = base.vertex_count();
    if k > g.vertex_count() || k > budget {
        return BoundedSearch::NoneWithinBudget;
    }
    // order base vertices as in the embedding search, then interleave
    // routing tasks
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    for _ in 0..k {
        let best = (0..k)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let anchored = base.neighbors(p).iter().filter(|&&q| placed[q]).count();
                (anchored, base.degree(p), std::cmp::Reverse(p))
            })
            .unwrap();
        placed[best] = true;
        order.push(best);
    }
    let mut tasks = Vec::new();
    let mut done = vec![false; k];
    for &p in &order {
        tasks.push(Task::Place(p));
        done[p] = true;
        for &q in base.neighbors(p) {
            if done[q] {
                tasks.push(Task::Route(p, q));
            }
        }
    }
    let mut search = SubdivisionSearch {
        g,
        base,
        tasks,
        budget,
        max_unsubdivided: max_unsubdivided.min(base.edge_count()),
        unsubdivided: 0,
        branch: vec![usize::MAX; k],
        used: VertexSet::new(g.vertex_count()),
        used_count: 0,
        paths: BTreeMap::new(),
    };
    if !search.run(0) {
        return BoundedSearch::NoneWithinBudget;
    }
    let edge_paths = base
        .edge_list()
        .into_iter()
        .map(|(u, v)| {
            let raw = &search.paths[&(u, v)];
            let path = if raw[0] == search.branch[u] {
                raw.clone()
            } else {
                raw.iter().rev().copied().collect()
            };
            ((u, v), PathWitness::new(path))
        })
        .collect();
    BoundedSearch::Found(SubdivisionEmbedding {
        base: base.clone(),
        branch: search.branch,
        edge_paths,
    })
}

/// The line graph of a subdivision of `base`, embedded in a host graph. The
/// subdivision is described by its per-edge interior counts; `line_map`
/// sends each edge of that subdivision (canonical order) to a host vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineSubdivisionEmbedding {
    #[serde(with = "crate::witness::graph_as_graph6")]
    pub base: Graph,
    pub extra: Vec<usize>,
    pub line_map: Vec<usize>,
}

impl LineSubdivisionEmbedding {
    /// Rebuilds the subdivided graph and the induced-embedding view of this
    /// witness.
    pub fn as_embedding(&self) -> Result<super::embedding::EmbeddingWitness, Violation> {
        let base_edges = self.base.edge_list();
        if self.extra.len() != base_edges.len() {
            return Err(Violation {
                clause: "extra-size",
                detail: "one interior count per base edge required".into(),
            });
        }
        let spec = SubdivisionSpec {
            extra: base_edges
                .iter()
                .copied()
                .zip(self.extra.iter().copied())
                .collect(),
        };
        let (subdivided, _) = gen_subdivision(&self.base, &spec).map_err(|e| Violation {
            clause: "subdivision-spec",
            detail: e.to_string(),
        })?;
        let (line, _) = subdivided.line_graph();
        Ok(super::embedding::EmbeddingWitness {
            pattern: line,
            map: self.line_map.clone(),
        })
    }
}

pub fn validate_line_subdivision_embedding(g: &Graph, w: &LineSubdivisionEmbedding) -> Checked {
    let emb = w.as_embedding()?;
    super::embedding::validate_embedding(g, &emb)
}

struct LineSearch<'a> {
    g: &'a Graph,
    /// Base edges in processing order; every route runs from the smaller
    /// base endpoint to the larger.
    edge_order: Vec<(usize, usize)>,
    budget: usize,
    used: VertexSet,
    used_count: usize,
    /// Host vertices of subdivision edges incident to each base vertex;
    /// they form a clique in the line graph.
    slots: Vec<Vec<usize>>,
    /// Host route per processed edge, parallel to `edge_order`.
    routes: Vec<Vec<usize>>,
}

impl<'a> LineSearch<'a> {
    fn used_neighbors(&self, w: usize) -> Vec<usize> {
        self.g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&x| self.used.contains(x))
            .collect()
    }

    /// Exact-adjacency test: w's neighbors inside the embedding must be
    /// precisely `required` (which is sorted and deduplicated).
    fn matches(&self, w: usize, required: &[usize]) -> bool {
        let nbrs = self.used_neighbors(w);
        nbrs.len() == required.len() && nbrs.iter().all(|x| required.binary_search(x).is_ok())
    }

    fn run(&mut self, idx: usize) -> bool {
        if idx == self.edge_order.len() {
            return true;
        }
        let (u, v) = self.edge_order[idx];
        self.route(u, v, idx, usize::MAX, Vec::new())
    }

    /// Adds the next host vertex of the route for base edge (u,v); `last`
    /// is the previous one (MAX when starting), `seq` the route so far.
    fn route(&mut self, u: usize, v: usize, idx: usize, last: usize, seq: Vec<usize>) -> bool {
        if self.used_count + 1 > self.budget {
            return false;
        }
        let starting = last == usize::MAX;
        // an extending vertex shares a subdivision vertex with its
        // predecessor only (plus the whole clique at u when it starts the
        // route); a closing vertex additionally joins the clique at v
        let mut open_req: Vec<usize> = if starting {
            self.slots[u].clone()
        } else {
            vec![last]
        };
        open_req.sort_unstable();
        open_req.dedup();
        let mut close_req = open_req.clone();
        close_req.extend(self.slots[v].iter().copied());
        close_req.sort_unstable();
        close_req.dedup();

        for w in self.g.vertices() {
            if self.used.contains(w) {
                continue;
            }
            if self.matches(w, &close_req) {
                self.used.insert(w);
                self.used_count += 1;
                let mut seq2 = seq.clone();
                seq2.push(w);
                let first = seq2[0];
                self.slots[u].push(first);
                self.slots[v].push(w);
                self.routes.push(seq2);
                if self.run(idx + 1) {
                    return true;
                }
                self.routes.pop();
                self.slots[v].pop();
                self.slots[u].pop();
                self.used.remove(w);
                self.used_count -= 1;
            }
            // extension: exact match against the open requirement. When the
            // two requirements coincide the same vertex may close or extend,
            // and both branches run; otherwise they are exclusive.
            if self.matches(w, &open_req) {
                self.used.insert(w);
                self.used_count += 1;
                let mut seq2 = seq.clone();
                seq2.push(w);
                if self.route(u, v, idx, w, seq2) {
                    return true;
                }
                self.used.remove(w);
                self.used_count -= 1;
            }
        }
        false
    }
}

/// Finds an induced subgraph of `g` isomorphic to the line graph of some
/// subdivision of `base`, using at most `budget` host vertices (one per
/// subdivision edge). Exhaustive within the budget.
pub fn find_induced_line_subdivision(
    g: &Graph,
    base: &Graph,
    budget: usize,
) -> BoundedSearch<LineSubdivisionEmbedding> {
    let base_edges = base.edge_list();
    if base_edges.len() > budget || base_edges.len() > g.vertex_count() {
        return BoundedSearch::NoneWithinBudget;
    }
    if base_edges.is_empty() {
        return BoundedSearch::Found(LineSubdivisionEmbedding {
            base: base.clone(),
            extra: vec![],
            line_map: vec![],
        });
    }
    // process edges so each new one shares a base vertex with the part
    // already built whenever the base is connected
    let mut edge_order: Vec<(usize, usize)> = Vec::with_capacity(base_edges.len());
    let mut remaining: Vec<(usize, usize)> = base_edges.clone();
    let mut visited = vec![false; base.vertex_count()];
    while !remaining.is_empty() {
        let pick = remaining
            .iter()
            .position(|&(u, v)| visited[u] || visited[v])
            .unwrap_or(0);
        let (u, v) = remaining.remove(pick);
        visited[u] = true;
        visited[v] = true;
        edge_order.push((u, v));
    }
    let mut search = LineSearch {
        g,
        edge_order,
        budget,
        used: VertexSet::new(g.vertex_count()),
        used_count: 0,
        slots: vec![Vec::new(); base.vertex_count()],
        routes: Vec::new(),
    };
    if !search.run(0) {
        return BoundedSearch::NoneWithinBudget;
    }
    // reassemble: per-edge interior counts, then the subdivision's canonical
    // edge order mapped onto the recorded routes
    let mut route_of: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (e, r) in search.edge_order.iter().zip(&search.routes) {
        route_of.insert(*e, r.clone());
    }
    let extra: Vec<usize> = base_edges.iter().map(|e| route_of[e].len() - 1).collect();
    let spec = SubdivisionSpec {
        extra: base_edges
            .iter()
            .copied()
            .zip(extra.iter().copied())
            .collect(),
    };
    let (subdivided, map) = gen_subdivision(base, &spec).expect("spec covers all edges");
    let mut host_of_sedge: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for ((e, path), hosts) in map
        .edge_paths
        .iter()
        .map(|(e, p)| (*e, p))
        .zip(base_edges.iter().map(|e| &route_of[e]))
    {
        let _ = e;
        for (win, &h) in path.vertices.windows(2).zip(hosts.iter()) {
            let k = (win[0].min(win[1]), win[0].max(win[1]));
            host_of_sedge.insert(k, h);
        }
    }
    let (_, s_edges) = subdivided.line_graph();
    let line_map: Vec<usize> = s_edges.iter().map(|e| host_of_sedge[e]).collect();
    BoundedSearch::Found(LineSubdivisionEmbedding {
        base: base.clone(),
        extra,
        line_map,
    })
}
