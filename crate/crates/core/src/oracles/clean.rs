//! Budgeted cleanness check: does the graph contain any of the four basic
//! obstructions at level t?
//!
//! Complete and complete bipartite patterns are checked exactly. The wall
//! checks (a subdivision of the t-by-t wall, or the line graph of one) are
//! only decidable up to a size bound, so the verdict carries the vertex
//! budget it was established under.

use super::embedding::{find_induced_embedding, EmbeddingWitness, SearchResult};
use super::subdivision::{
    find_induced_line_subdivision, find_induced_subdivision, LineSubdivisionEmbedding,
    SubdivisionEmbedding,
};
use crate::generators::{gen_biclique, gen_complete, gen_wall};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasicObstruction {
    Clique(EmbeddingWitness),
    Biclique(EmbeddingWitness),
    WallSubdivision(SubdivisionEmbedding),
    LineOfWallSubdivision(LineSubdivisionEmbedding),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CleanVerdict {
    /// No t-basic obstruction exists on at most `budget` vertices. The
    /// complete and complete bipartite checks are exact regardless.
    CleanWithinBudget { budget: usize },
    Obstruction(Box<BasicObstruction>),
}

impl CleanVerdict {
    pub fn is_clean(&self) -> bool {
        matches!(self, CleanVerdict::CleanWithinBudget { .. })
    }
}

/// Checks the four t-basic obstructions; wall-shaped ones only up to
/// `budget` vertices. t = 1 degenerates to the complete checks (the wall is
/// only defined from t = 2 on, and K_1 is found in any nonempty graph
/// first).
pub fn is_t_clean_bounded(g: &Graph, t: usize, budget: usize) -> CleanVerdict {
    assert!(t >= 1, "cleanness level starts at 1");
    let kt = gen_complete(t).expect("t >= 1");
    if let SearchResult::Found(w) = find_induced_embedding(g, &kt, u64::MAX) {
        return CleanVerdict::Obstruction(Box::new(BasicObstruction::Clique(w)));
    }
    let ktt = gen_biclique(t, t).expect("t >= 1");
    if let SearchResult::Found(w) = find_induced_embedding(g, &ktt, u64::MAX) {
        return CleanVerdict::Obstruction(Box::new(BasicObstruction::Biclique(w)));
    }
    if t >= 2 {
        let wall = gen_wall(t).expect("t >= 2");
        let cap = budget.min(g.vertex_count());
        if let Some(w) = find_induced_subdivision(g, &wall, cap).found() {
            return CleanVerdict::Obstruction(Box::new(BasicObstruction::WallSubdivision(w)));
        }
        if let Some(w) = find_induced_line_subdivision(g, &wall, cap).found() {
            return CleanVerdict::Obstruction(Box::new(BasicObstruction::LineOfWallSubdivision(
                w,
            )));
        }
    }
    CleanVerdict::CleanWithinBudget { budget }
}
