//! Exhaustive induced-subgraph-isomorphism search by backtracking.

use crate::graph::{Graph, VertexSet};
use crate::structures::{Checked, Violation};
use serde::{Deserialize, Serialize};

/// An injective map from a pattern graph into a host graph that preserves
/// both adjacency and non-adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingWitness {
    #[serde(with = "crate::witness::graph_as_graph6")]
    pub pattern: Graph,
    /// `map[p]` is the host vertex the pattern vertex `p` maps to.
    pub map: Vec<usize>,
}

pub fn validate_embedding(g: &Graph, w: &EmbeddingWitness) -> Checked {
    let k = w.pattern.vertex_count();
    if w.map.len() != k {
        return Err(Violation {
            clause: "map-size",
            detail: format!("map has {} entries for a {k}-vertex pattern", w.map.len()),
        });
    }
    let mut seen = VertexSet::new(g.vertex_count());
    for &v in &w.map {
        if !g.has_vertex(v) {
            return Err(Violation {
                clause: "vertex-range",
                detail: format!("host vertex {v}"),
            });
        }
        if seen.contains(v) {
            return Err(Violation {
                clause: "map-injective",
                detail: format!("host vertex {v} used twice"),
            });
        }
        seen.insert(v);
    }
    for i in 0..k {
        for j in i + 1..k {
            let want = w.pattern.has_edge(i, j);
            let have = g.has_edge(w.map[i], w.map[j]);
            if want != have {
                return Err(Violation {
                    clause: "adjacency-preserved",
                    detail: format!(
                        "pattern pair ({i},{j}) adjacency {want} maps to {have}"
                    ),
                });
            }
        }
    }
    Ok(())
}

/// Outcome of a budgeted exhaustive search: a proof of absence is only
/// claimed when the search space was exhausted within the budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult<T> {
    Found(T),
    NoneExhaustive,
    BudgetExhausted,
}

impl<T> SearchResult<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchResult::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_none_exhaustive(&self) -> bool {
        matches!(self, SearchResult::NoneExhaustive)
    }
}

/// Finds an induced embedding of `pattern` into `g`, spending at most
/// `node_budget` search-tree nodes. The first witness in the deterministic
/// search order is returned.
pub fn find_induced_embedding(
    g: &Graph,
    pattern: &Graph,
    node_budget: u64,
) -> SearchResult<EmbeddingWitness> {
    let k = pattern.vertex_count();
    if k > g.vertex_count() {
        return SearchResult::NoneExhaustive;
    }
    if k == 0 {
        return SearchResult::Found(EmbeddingWitness {
            pattern: pattern.clone(),
            map: vec![],
        });
    }
    // order pattern vertices: highest degree first, then prefer vertices
    // with the most already-ordered neighbors so adjacency constraints bind
    // early
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    for _ in 0..k {
        let best = (0..k)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let anchored = pattern
                    .neighbors(p)
                    .iter()
                    .filter(|&&q| placed[q])
                    .count();
                (anchored, pattern.degree(p), std::cmp::Reverse(p))
            })
            .unwrap();
        placed[best] = true;
        order.push(best);
    }
    let mut map = vec![usize::MAX; k];
    let mut used = VertexSet::new(g.vertex_count());
    let mut nodes: u64 = 0;
    let res = embed_rec(
        g,
        pattern,
        &order,
        0,
        &mut map,
        &mut used,
        &mut nodes,
        node_budget,
    );
    match res {
        Some(true) => SearchResult::Found(EmbeddingWitness {
            pattern: pattern.clone(),
            map,
        }),
        Some(false) => SearchResult::NoneExhaustive,
        None => SearchResult::BudgetExhausted,
    }
}

#[allow(clippy::too_many_arguments)]
fn embed_rec(
    g: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut VertexSet,
    nodes: &mut u64,
    budget: u64,
) -> Option<bool> {
    if depth == order.len() {
        return Some(true);
    }
    let p = order[depth];
    let pdeg = pattern.degree(p);
    for w in g.vertices() {
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        if used.contains(w) || g.degree(w) < pdeg {
            continue;
        }
        let ok = order[..depth].iter().all(|&q| {
            let want = pattern.has_edge(p, q);
            g.has_edge(w, map[q]) == want
        });
        if !ok {
            continue;
        }
        map[p] = w;
        used.insert(w);
        match embed_rec(g, pattern, order, depth + 1, map, used, nodes, budget) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
        used.remove(w);
        map[p] = usize::MAX;
    }
    Some(false)
}
