//! Constructive quantified Ramsey: a graph on at least c^s vertices yields
//! a clique of size c or a stable set of size s, by the standard recursion.

use super::{bounds, ExtractError};
use crate::graph::Graph;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RamseyOutcome {
    Clique(Vec<usize>),
    Stable(Vec<usize>),
}

impl RamseyOutcome {
    pub fn vertices(&self) -> &[usize] {
        match self {
            RamseyOutcome::Clique(v) | RamseyOutcome::Stable(v) => v,
        }
    }
}

/// Checks an outcome against the graph.
pub fn ramsey_outcome_valid(g: &Graph, out: &RamseyOutcome, c: usize, s: usize) -> bool {
    match out {
        RamseyOutcome::Clique(vs) => {
            vs.len() == c
                && vs.iter().enumerate().all(|(i, &u)| {
                    vs[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v))
                })
        }
        RamseyOutcome::Stable(vs) => {
            vs.len() == s
                && vs.iter().enumerate().all(|(i, &u)| {
                    vs[i + 1..].iter().all(|&v| u != v && !g.has_edge(u, v))
                })
        }
    }
}

/// Constructive extraction under the c^s precondition. Picks the lowest
/// vertex, recurses into its neighborhood at (c-1, s) or its
/// non-neighborhood at (c, s-1); above the bound one side always meets its
/// own bound, so the recursion never dead-ends.
pub fn ramsey_clique_or_stable(
    g: &Graph,
    c: usize,
    s: usize,
) -> Result<RamseyOutcome, ExtractError> {
    if c == 0 {
        return Err(ExtractError::ZeroParam("c"));
    }
    if s == 0 {
        return Err(ExtractError::ZeroParam("s"));
    }
    let need = bounds::ramsey_bound(c, s);
    if BigUint::from(g.vertex_count()) < need {
        return Err(ExtractError::TooFewVertices {
            need: need.to_string(),
            have: g.vertex_count(),
        });
    }
    let verts: Vec<usize> = g.vertices().collect();
    let mut budget = u64::MAX;
    let out = ramsey_search(g, &verts, c, s, &mut budget)
        .expect("the bound guarantees an outcome");
    debug_assert!(ramsey_outcome_valid(g, &out, c, s));
    Ok(out)
}

enum Branch {
    Neighborhood,
    NonNeighborhood,
}

/// Backtracking variant for under-bound inputs: tries the guaranteed branch
/// first, then the other; `None` when neither pans out within the budget.
/// Above the bound the first branch always succeeds.
pub fn ramsey_search(
    g: &Graph,
    verts: &[usize],
    c: usize,
    s: usize,
    budget: &mut u64,
) -> Option<RamseyOutcome> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    if c == 1 {
        return verts.first().map(|&v| RamseyOutcome::Clique(vec![v]));
    }
    if s == 1 {
        return verts.first().map(|&v| RamseyOutcome::Stable(vec![v]));
    }
    let (&v, rest) = verts.split_first()?;
    let neigh: Vec<usize> = rest.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
    let non: Vec<usize> = rest
        .iter()
        .copied()
        .filter(|&w| !g.has_edge(v, w))
        .collect();
    let neigh_first = BigUint::from(neigh.len()) >= bounds::ramsey_bound(c - 1, s);
    let order = if neigh_first {
        [Branch::Neighborhood, Branch::NonNeighborhood]
    } else {
        [Branch::NonNeighborhood, Branch::Neighborhood]
    };
    for branch in order {
        match branch {
            Branch::Neighborhood => match ramsey_search(g, &neigh, c - 1, s, budget) {
                Some(RamseyOutcome::Clique(mut k)) => {
                    k.push(v);
                    k.sort_unstable();
                    return Some(RamseyOutcome::Clique(k));
                }
                Some(stable) => return Some(stable),
                None => {}
            },
            Branch::NonNeighborhood => match ramsey_search(g, &non, c, s - 1, budget) {
                Some(RamseyOutcome::Stable(mut st)) => {
                    st.push(v);
                    st.sort_unstable();
                    return Some(RamseyOutcome::Stable(st));
                }
                Some(clique) => return Some(clique),
                None => {}
            },
        }
    }
    None
}
