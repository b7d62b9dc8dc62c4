//! Standalone block-side steps, exposed as their own certificate-producing
//! operations: the short-link Ramsey split over a strong block, and the
//! rigidity split of one polypath against another.

use super::ramsey::{ramsey_search, RamseyOutcome};
use super::{bounds, BoundMode, ExtractError};
use crate::graph::{Graph, PathWitness, VertexSet};
use crate::structures::{
    validate_block, validate_constellation, validate_path, BlockWitness, Constellation, Violation,
};
use num_bigint::BigUint;

/// Outcome of the short-link split: either m block vertices pairwise joined
/// by short paths (internally disjoint, forming a short subdivision of the
/// complete graph as a subgraph), or b+1 block vertices all of whose
/// connecting paths are long.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockLinkOutcome {
    ShortSubdivision {
        core: Vec<usize>,
        paths: Vec<PathWitness>,
    },
    ScatteredSet {
        vertices: Vec<usize>,
    },
}

pub fn validate_block_link_outcome(
    g: &Graph,
    block: &BlockWitness,
    out: &BlockLinkOutcome,
    h: usize,
) -> Result<(), Violation> {
    match out {
        BlockLinkOutcome::ShortSubdivision { core, paths } => {
            let pairs = core.len() * (core.len() - 1) / 2;
            if paths.len() != pairs {
                return Err(Violation {
                    clause: "pair-coverage",
                    detail: format!("{} paths for {} pairs", paths.len(), pairs),
                });
            }
            for p in paths {
                validate_path(g, p)?;
                if p.len_edges() > h || p.len_edges() < 1 {
                    return Err(Violation {
                        clause: "short-link",
                        detail: format!("path of length {}", p.len_edges()),
                    });
                }
            }
            // pairwise internally disjoint
            for (i, p) in paths.iter().enumerate() {
                let pset = VertexSet::from_iter(g.vertex_count(), p.vertices.iter().copied());
                for q in &paths[i + 1..] {
                    let (qa, qb) = q.ends();
                    for &v in &q.vertices {
                        if pset.contains(v) {
                            let (pa, pb) = p.ends();
                            let shared_end =
                                (v == qa || v == qb) && (v == pa || v == pb);
                            if !shared_end {
                                return Err(Violation {
                                    clause: "internally-disjoint",
                                    detail: format!("paths share vertex {v}"),
                                });
                            }
                        }
                    }
                }
            }
            Ok(())
        }
        BlockLinkOutcome::ScatteredSet { vertices } => {
            for (i, &x) in vertices.iter().enumerate() {
                for &y in &vertices[i + 1..] {
                    let fam = block
                        .families
                        .iter()
                        .find(|f| (f.x == x && f.y == y) || (f.x == y && f.y == x))
                        .ok_or(Violation {
                            clause: "family-missing",
                            detail: format!("pair ({x},{y})"),
                        })?;
                    if fam.paths.iter().any(|p| p.len_edges() <= h) {
                        return Err(Violation {
                            clause: "long-links",
                            detail: format!("pair ({x},{y}) has a short path"),
                        });
                    }
                }
            }
            Ok(())
        }
    }
}

/// Ramsey split of a strong block by link length: in the auxiliary graph
/// joining two block vertices when some family path between them has length
/// at most h, find a clique of size m (short subdivision of the complete
/// graph on m vertices, as a subgraph) or a stable set of size b+1 (all
/// links long). Strict mode requires |B| >= m^(b+1).
pub fn block_clique_or_scattered(
    g: &Graph,
    block: &BlockWitness,
    h: usize,
    m: usize,
    b: usize,
    mode: BoundMode,
) -> Result<BlockLinkOutcome, ExtractError> {
    for (name, v) in [("h", h), ("m", m), ("b", b)] {
        if v == 0 {
            return Err(ExtractError::ZeroParam(name));
        }
    }
    if !block.strong {
        return Err(ExtractError::InvalidInput(Violation {
            clause: "strong",
            detail: "the short-subdivision side needs a strong block".into(),
        }));
    }
    validate_block(g, block)?;
    if mode == BoundMode::Strict {
        let need = bounds::ramsey_bound(m, b + 1);
        if BigUint::from(block.block.len()) < need {
            return Err(ExtractError::TooSmallStable {
                need: need.to_string(),
                have: block.block.len(),
            });
        }
    }
    // auxiliary short-link graph on block positions
    let n = block.block.len();
    let index_of = |v: usize| block.block.iter().position(|&b| b == v).unwrap();
    let mut edges = Vec::new();
    for f in &block.families {
        if f.paths.iter().any(|p| p.len_edges() <= h) {
            edges.push((index_of(f.x), index_of(f.y)));
        }
    }
    let aux = Graph::from_edges(n, &edges).expect("aux graph");
    let verts: Vec<usize> = (0..n).collect();
    let mut budget = 1u64 << 22;
    let outcome = ramsey_search(&aux, &verts, m, b + 1, &mut budget).ok_or_else(|| {
        ExtractError::BoundNotMet("short-link graph yielded neither side".into())
    })?;
    let out = match outcome {
        RamseyOutcome::Clique(idxs) => {
            let core: Vec<usize> = idxs.iter().map(|&i| block.block[i]).collect();
            let mut paths = Vec::new();
            for (i, &x) in core.iter().enumerate() {
                for &y in &core[i + 1..] {
                    let fam = block
                        .families
                        .iter()
                        .find(|f| (f.x == x && f.y == y) || (f.x == y && f.y == x))
                        .expect("block validated");
                    let p = fam
                        .paths
                        .iter()
                        .find(|p| p.len_edges() <= h)
                        .expect("aux edge means a short path");
                    paths.push(p.clone());
                }
            }
            BlockLinkOutcome::ShortSubdivision { core, paths }
        }
        RamseyOutcome::Stable(idxs) => BlockLinkOutcome::ScatteredSet {
            vertices: idxs.iter().map(|&i| block.block[i]).collect(),
        },
    };
    validate_block_link_outcome(g, block, &out, h)
        .map_err(|v| ExtractError::BoundNotMet(format!("assembled outcome fails {v}")))?;
    Ok(out)
}

/// Rigidity split of one plain polypath against another, disentangled one:
/// either some path of the first has no vertex with neighbors in l paths of
/// the second (it is returned), or s rigid paths share the same l target
/// paths and their pivot vertices form a plain (s,l)-constellation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RigidityOutcome {
    Constellation(Constellation),
    NonRigidPath { index: usize, path: PathWitness },
}

pub fn constellation_or_nonrigid_path(
    g: &Graph,
    paths_a: &[PathWitness],
    paths_b: &[PathWitness],
    s: usize,
    l: usize,
    mode: BoundMode,
) -> Result<RigidityOutcome, ExtractError> {
    for (name, v) in [("s", s), ("l", l)] {
        if v == 0 {
            return Err(ExtractError::ZeroParam(name));
        }
    }
    for group in [paths_a, paths_b] {
        for p in group {
            validate_path(g, p)?;
        }
    }
    // pairwise disjoint and plain within each side, and disentangled plus
    // anticomplete across? Only vertex-disjointness across is required;
    // edges across are exactly what rigidity measures.
    let mut seen = VertexSet::new(g.vertex_count());
    for p in paths_a.iter().chain(paths_b) {
        for &v in &p.vertices {
            if seen.contains(v) {
                return Err(ExtractError::InvalidInput(Violation {
                    clause: "disentangled",
                    detail: format!("vertex {v} on two paths"),
                }));
            }
            seen.insert(v);
        }
    }
    if mode == BoundMode::Strict {
        let need = BigUint::from(s) * BigUint::from(paths_b.len()).pow(l as u32);
        if BigUint::from(paths_a.len()) < need {
            return Err(ExtractError::TooFewPaths {
                need: need.to_string(),
                have: paths_a.len(),
            });
        }
    }
    let b_sets: Vec<VertexSet> = paths_b
        .iter()
        .map(|p| VertexSet::from_iter(g.vertex_count(), p.vertices.iter().copied()))
        .collect();
    let mut rigid: Vec<(Vec<usize>, usize)> = Vec::new(); // (l target paths, pivot vertex)
    for (ai, p) in paths_a.iter().enumerate() {
        let mut pivot = None;
        for &v in &p.vertices {
            let touched: Vec<usize> = b_sets
                .iter()
                .enumerate()
                .filter(|(_, set)| g.row(v).intersects(set))
                .map(|(i, _)| i)
                .collect();
            if touched.len() >= l {
                pivot = Some((touched[..l].to_vec(), v));
                break;
            }
        }
        match pivot {
            Some(t) => rigid.push(t),
            None => {
                return Ok(RigidityOutcome::NonRigidPath {
                    index: ai,
                    path: p.clone(),
                })
            }
        }
    }
    use std::collections::BTreeMap;
    let mut buckets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (targets, pivot) in rigid {
        buckets.entry(targets).or_default().push(pivot);
    }
    let Some((targets, pivots)) = buckets
        .into_iter()
        .max_by_key(|(k, v)| (v.len(), std::cmp::Reverse(k.clone())))
    else {
        return Err(ExtractError::BoundNotMet("no rigid paths at all".into()));
    };
    if pivots.len() < s {
        return Err(ExtractError::BoundNotMet(format!(
            "largest shared-target bucket has {} pivots, needs {s}",
            pivots.len()
        )));
    }
    let c = Constellation {
        stable: pivots[..s].to_vec(),
        paths: targets.iter().map(|&i| paths_b[i].clone()).collect(),
    };
    validate_constellation(g, &c, true)
        .map_err(|v| ExtractError::BoundNotMet(format!("assembled constellation fails {v}")))?;
    Ok(RigidityOutcome::Constellation(c))
}
