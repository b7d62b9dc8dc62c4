//! Exact treewidth by dynamic programming over vertex subsets (elimination
//! orderings), a min-fill upper bound, and minor-based lower bounds.

use crate::graph::Graph;
use crate::structures::{
    validate_minor_model, MinorModelWitness, TreeDecompositionWitness, Violation,
};
use thiserror::Error;

/// Hard ceiling for the subset DP; 2^22 states is the most the table is
/// allowed to take.
pub const TW_HARD_CAP: usize = 22;
pub const TW_DEFAULT_CAP: usize = 18;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwError {
    #[error("graph has {0} vertices, exceeding the exact-solver cap {1}")]
    CapExceeded(usize, usize),
    #[error("minor model does not validate: {0}")]
    InvalidModel(Violation),
    #[error("minor target is neither complete nor complete bipartite")]
    UnsupportedTarget,
}

fn neighbor_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| {
            let mut m = 0u32;
            for &w in g.neighbors(v) {
                m |= 1 << w;
            }
            m
        })
        .collect()
}

/// Vertices outside `s | {v}` reachable from v through `s`: the back-degree
/// of v when eliminated right after the set `s`.
fn q_size(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut seen: u32 = 1 << v;
    let mut stack: u32 = adj[v] & !seen;
    let mut out: u32 = 0;
    seen |= stack;
    while stack != 0 {
        let w = stack.trailing_zeros() as usize;
        stack &= stack - 1;
        if s >> w & 1 == 1 {
            let fresh = adj[w] & !seen;
            seen |= fresh;
            stack |= fresh;
        } else {
            out |= 1 << w;
        }
    }
    out.count_ones()
}

/// Exact treewidth with a reconstructed decomposition. The DP computes, for
/// every vertex subset S, the least possible maximum back-degree of an
/// elimination ordering starting with S; the optimal ordering is then turned
/// into a decomposition the standard way.
pub fn treewidth_exact(g: &Graph, cap: usize) -> Result<(usize, TreeDecompositionWitness), TwError> {
    let n = g.vertex_count();
    let cap = cap.min(TW_HARD_CAP);
    if n > cap {
        return Err(TwError::CapExceeded(n, cap));
    }
    if n == 0 {
        return Ok((
            0,
            TreeDecompositionWitness {
                node_count: 1,
                tree_edges: vec![],
                bags: vec![vec![]],
                width: 0,
            },
        ));
    }
    let adj = neighbor_masks(g);
    let full: u32 = (1u32 << n) - 1;
    let mut dp = vec![u8::MAX; 1usize << n];
    let mut choice = vec![u8::MAX; 1usize << n];
    dp[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut pick = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = s & !(1u32 << v);
            let q = q_size(&adj, prev, v) as u8;
            let val = dp[prev as usize].max(q);
            if val < best {
                best = val;
                pick = v as u8;
            }
        }
        dp[s as usize] = best;
        choice[s as usize] = pick;
    }
    let width = dp[full as usize] as usize;

    // recover the elimination ordering (choice[S] is eliminated last in S)
    let mut order = vec![0usize; n];
    let mut s = full;
    for i in (0..n).rev() {
        let v = choice[s as usize] as usize;
        order[i] = v;
        s &= !(1u32 << v);
    }
    let witness = decomposition_from_order(g, &order, width);
    Ok((width, witness))
}

/// Back-neighbors of v right after the set `eliminated`: vertices outside
/// it reachable from v through it. Works at any size.
fn back_neighbors(g: &Graph, eliminated: &crate::graph::VertexSet, v: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = crate::graph::VertexSet::new(n);
    seen.insert(v);
    let mut stack = vec![v];
    let mut out = Vec::new();
    while let Some(x) = stack.pop() {
        for &w in g.neighbors(x) {
            if !seen.contains(w) {
                seen.insert(w);
                if eliminated.contains(w) {
                    stack.push(w);
                } else {
                    out.push(w);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Turns an elimination ordering into a tree decomposition: the bag of v is
/// v plus its back-neighbors at elimination time, attached to the bag of the
/// earliest-eliminated back-neighbor.
fn decomposition_from_order(g: &Graph, order: &[usize], width: usize) -> TreeDecompositionWitness {
    let n = order.len();
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut tree_edges = Vec::new();
    let mut prefix = crate::graph::VertexSet::new(n);
    let mut back_sets = Vec::with_capacity(n);
    for &v in order.iter() {
        let q = back_neighbors(g, &prefix, v);
        let mut bag = vec![v];
        bag.extend_from_slice(&q);
        bags.push(bag);
        back_sets.push(q);
        prefix.insert(v);
    }
    for (i, q) in back_sets.iter().enumerate() {
        if let Some(parent) = q.iter().map(|&w| position[w]).min() {
            tree_edges.push((i, parent));
        } else if i + 1 < n {
            tree_edges.push((i, i + 1));
        }
    }
    TreeDecompositionWitness {
        node_count: n,
        tree_edges,
        bags,
        width,
    }
}

/// Min-fill elimination heuristic: a valid decomposition whose width upper
/// bounds the treewidth. No size cap.
pub fn treewidth_upper_minfill(g: &Graph) -> (usize, TreeDecompositionWitness) {
    let n = g.vertex_count();
    if n == 0 {
        return (
            0,
            TreeDecompositionWitness {
                node_count: 1,
                tree_edges: vec![],
                bags: vec![vec![]],
                width: 0,
            },
        );
    }
    // work on a mutable fill graph
    let mut adj: Vec<std::collections::BTreeSet<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: Vec<bool> = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut width = 0usize;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| {
                let nb: Vec<usize> = adj[v].iter().copied().collect();
                let mut fill = 0usize;
                for i in 0..nb.len() {
                    for j in i + 1..nb.len() {
                        if !adj[nb[i]].contains(&nb[j]) {
                            fill += 1;
                        }
                    }
                }
                (fill, v)
            })
            .expect("alive vertex");
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        width = width.max(nb.len());
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        }
        for &w in &nb {
            adj[w].remove(&v);
        }
        adj[v].clear();
        alive[v] = false;
        order.push(v);
    }
    let witness = decomposition_from_order(g, &order, width);
    (width, witness)
}

/// Treewidth lower bound certified by a minor model: complete targets give
/// their clique number minus one, complete bipartite targets the smaller
/// side.
pub fn treewidth_lower_via_minor(g: &Graph, model: &MinorModelWitness) -> Result<usize, TwError> {
    validate_minor_model(g, model).map_err(TwError::InvalidModel)?;
    let t = &model.target;
    let n = t.vertex_count();
    let complete = n >= 1 && t.edge_count() == n * (n - 1) / 2;
    if complete {
        return Ok(n - 1);
    }
    if let Some((a, b)) = t.bipartition() {
        if !a.is_empty()
            && !b.is_empty()
            && t.edge_count() == a.len() * b.len()
            && t.are_complete(&a, &b).unwrap_or(false)
        {
            return Ok(a.len().min(b.len()));
        }
    }
    Err(TwError::UnsupportedTarget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::structures::validate_tree_decomposition;

    fn check_exact(g: &Graph, expect: usize) {
        let (w, td) = treewidth_exact(g, TW_DEFAULT_CAP).unwrap();
        assert_eq!(w, expect);
        assert_eq!(td.width, expect);
        validate_tree_decomposition(g, &td).unwrap();
    }

    #[test]
    fn cliques_and_trees() {
        check_exact(&generators::gen_complete(5).unwrap(), 4);
        check_exact(&generators::gen_complete(1).unwrap(), 0);
        check_exact(&generators::gen_path(9).unwrap(), 1);
        check_exact(&generators::gen_cycle(9).unwrap(), 2);
    }

    #[test]
    fn bicliques_and_grids() {
        check_exact(&generators::gen_biclique(3, 3).unwrap(), 3);
        check_exact(&generators::gen_grid(3).unwrap(), 3);
        check_exact(&generators::gen_grid(4).unwrap(), 4);
    }

    #[test]
    fn wall_three_has_treewidth_three() {
        check_exact(&generators::gen_wall(3).unwrap(), 3);
    }

    #[test]
    fn pd_values() {
        check_exact(&generators::gen_pd(3).unwrap().0, 3);
        check_exact(&generators::gen_pd(2).unwrap().0, 2);
    }

    #[test]
    fn cap_is_enforced() {
        let g = generators::gen_random_graph(19, 0.5, 1);
        assert_eq!(
            treewidth_exact(&g, 18),
            Err(TwError::CapExceeded(19, 18))
        );
    }

    #[test]
    fn minfill_is_valid_and_sandwiches() {
        for seed in 0..10 {
            let g = generators::gen_random_graph(12, 0.3, seed);
            let (ub, td) = treewidth_upper_minfill(&g);
            validate_tree_decomposition(&g, &td).unwrap();
            let (exact, _) = treewidth_exact(&g, 18).unwrap();
            assert!(exact <= ub, "seed {seed}: exact {exact} > minfill {ub}");
        }
        let tree = generators::gen_path(30).unwrap();
        assert_eq!(treewidth_upper_minfill(&tree).0, 1);
    }

    #[test]
    fn minor_lower_bounds() {
        let (pd6, arr) = generators::gen_pd(6).unwrap();
        let model = arr.biclique_minor_model();
        assert_eq!(treewidth_lower_via_minor(&pd6, &model).unwrap(), 6);

        let (pd3, arr3) = generators::gen_pd(3).unwrap();
        let model3 = arr3.biclique_minor_model();
        let lower = treewidth_lower_via_minor(&pd3, &model3).unwrap();
        let (exact, _) = treewidth_exact(&pd3, 18).unwrap();
        let (ub, _) = treewidth_upper_minfill(&pd3);
        assert!(lower <= exact && exact <= ub);
        assert_eq!(lower, 3);
    }

    #[test]
    fn monotone_under_induced_subgraphs() {
        let g = generators::gen_random_graph(10, 0.45, 7);
        let (w, _) = treewidth_exact(&g, 18).unwrap();
        let xs: Vec<usize> = (0..7).collect();
        let (sub, _) = g.induced_subgraph(&xs).unwrap();
        let (ws, _) = treewidth_exact(&sub, 18).unwrap();
        assert!(ws <= w);
    }
}
