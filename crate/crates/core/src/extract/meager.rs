//! Either a t-meager sub-constellation on l of the paths, or an induced
//! complete or complete bipartite subgraph assembled from crowded path
//! vertices sharing one stable neighborhood.

use super::ramsey::{ramsey_search, RamseyOutcome};
use super::{bounds, BoundMode, ExtractError};
use crate::generators::{gen_biclique, gen_complete};
use crate::graph::{Graph, VertexSet};
use crate::oracles::embedding::{validate_embedding, EmbeddingWitness};
use crate::structures::{validate_constellation, Constellation};
use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeagerOrBiclique {
    Meager(Constellation),
    Embedding(EmbeddingWitness),
}

/// Biclique assembly from paths whose crowded vertices share a common t-set
/// of stable neighbors: a clique among them gives K_t, a stable set gives
/// K_{t,t} across.
pub(crate) fn biclique_from_crowded(
    g: &Graph,
    stable: &[usize],
    crowded: &[(usize, Vec<usize>)], // (path vertex, its first t stable neighbors)
    t: usize,
) -> Option<EmbeddingWitness> {
    use std::collections::BTreeMap;
    let mut buckets: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for (u, tset) in crowded {
        buckets.entry(tset).or_default().push(*u);
    }
    let (tset, hubs) = buckets.into_iter().max_by_key(|(k, v)| {
        (v.len(), std::cmp::Reverse(k.to_vec()))
    })?;
    let _ = stable;
    let mut budget = 1u64 << 22;
    match ramsey_search(g, &hubs, t, t, &mut budget)? {
        RamseyOutcome::Clique(k) => {
            let w = EmbeddingWitness {
                pattern: gen_complete(t).ok()?,
                map: k,
            };
            validate_embedding(g, &w).ok()?;
            Some(w)
        }
        RamseyOutcome::Stable(us) => {
            let mut map = tset.to_vec();
            map.extend(us);
            let w = EmbeddingWitness {
                pattern: gen_biclique(t, t).ok()?,
                map,
            };
            validate_embedding(g, &w).ok()?;
            Some(w)
        }
    }
}

/// Per path, the crowded-vertex data: the first vertex (in path order) with
/// at least t stable neighbors, with those neighbors.
fn crowded_vertex(
    g: &Graph,
    stable_set: &VertexSet,
    path: &[usize],
    t: usize,
) -> Option<(usize, Vec<usize>)> {
    for &v in path {
        if g.degree_into(v, stable_set) >= t {
            let nbrs: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&x| stable_set.contains(x))
                .take(t)
                .collect();
            return Some((v, nbrs));
        }
    }
    None
}

/// Either (S, first l paths with no t-crowded vertex) as a t-meager
/// constellation, or an embedding of K_t or K_{t,t}. Strict mode enforces
/// the path-count bound l + (st)^t and is then total.
pub fn meager_or_biclique(
    g: &Graph,
    c: &Constellation,
    l: usize,
    t: usize,
    mode: BoundMode,
) -> Result<MeagerOrBiclique, ExtractError> {
    if l == 0 {
        return Err(ExtractError::ZeroParam("l"));
    }
    if t == 0 {
        return Err(ExtractError::ZeroParam("t"));
    }
    validate_constellation(g, c, false)?;
    if mode == BoundMode::Strict {
        let need = bounds::meager_path_bound(c.s(), l, t);
        if BigUint::from(c.l()) < need {
            return Err(ExtractError::TooFewPaths {
                need: need.to_string(),
                have: c.l(),
            });
        }
    }
    let stable_set = VertexSet::from_iter(g.vertex_count(), c.stable.iter().copied());
    let mut good = Vec::new();
    let mut crowded = Vec::new();
    for p in &c.paths {
        match crowded_vertex(g, &stable_set, &p.vertices, t) {
            Some(cv) => crowded.push(cv),
            None => good.push(p.clone()),
        }
    }
    let threshold = BigUint::from(c.s() * t).pow(t as u32);
    let crowd_heavy = BigUint::from(crowded.len()) >= threshold;
    if !crowd_heavy && good.len() >= l {
        let out = Constellation {
            stable: c.stable.clone(),
            paths: good[..l].to_vec(),
        };
        return Ok(MeagerOrBiclique::Meager(out));
    }
    if let Some(w) = biclique_from_crowded(g, &c.stable, &crowded, t) {
        return Ok(MeagerOrBiclique::Embedding(w));
    }
    if good.len() >= l {
        let out = Constellation {
            stable: c.stable.clone(),
            paths: good[..l].to_vec(),
        };
        return Ok(MeagerOrBiclique::Meager(out));
    }
    Err(ExtractError::BoundNotMet(format!(
        "{} calm paths (need {l}) and {} crowded ones produced no biclique",
        good.len(),
        crowded.len()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PathWitness;
    use crate::structures::is_meager;

    #[test]
    fn already_meager_paths_pass_through() {
        let (g, c) = crate::generators::gen_random_constellation(3, 4, (5, 8), 1, true, 2).unwrap();
        match meager_or_biclique(&g, &c, 3, 2, BoundMode::Relaxed).unwrap() {
            MeagerOrBiclique::Meager(m) => {
                assert_eq!(m.paths, c.paths[..3].to_vec());
                assert!(is_meager(&g, &m, 2).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    /// Constellation whose paths all carry a vertex seeing the same t-set
    /// of stable vertices; those vertices form a clique or a stable set by
    /// construction.
    fn crowded_fixture(t: usize, paths: usize, hub_clique: bool) -> (Graph, Constellation) {
        let s = t;
        let plen = 3usize;
        let mut edges = Vec::new();
        let mut pws = Vec::new();
        let mut next = s;
        let mut specials = Vec::new();
        for _ in 0..paths {
            for j in 0..plen - 1 {
                edges.push((next + j, next + j + 1));
            }
            // middle vertex sees every stable vertex
            let mid = next + 1;
            specials.push(mid);
            for x in 0..s {
                edges.push((x, mid));
            }
            pws.push(PathWitness::new((next..next + plen).collect()));
            next += plen;
        }
        if hub_clique {
            for i in 0..specials.len() {
                for j in i + 1..specials.len() {
                    edges.push((specials[i], specials[j]));
                }
            }
        }
        let g = Graph::from_edges(next, &edges).unwrap();
        (
            g,
            Constellation {
                stable: (0..s).collect(),
                paths: pws,
            },
        )
    }

    #[test]
    fn planted_clique_is_found() {
        let (g, c) = crowded_fixture(2, 16, true);
        match meager_or_biclique(&g, &c, 1, 2, BoundMode::Relaxed).unwrap() {
            MeagerOrBiclique::Embedding(w) => {
                assert_eq!(w.pattern.vertex_count(), 2);
                assert_eq!(w.pattern.edge_count(), 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn planted_biclique_is_found() {
        let (g, c) = crowded_fixture(2, 17, false);
        match meager_or_biclique(&g, &c, 1, 2, BoundMode::Strict).unwrap() {
            MeagerOrBiclique::Embedding(w) => {
                // K_{2,2}
                assert_eq!(w.pattern.vertex_count(), 4);
                assert_eq!(w.pattern.edge_count(), 4);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn strict_bound_is_checked() {
        let (g, c) = crate::generators::gen_random_constellation(2, 2, (4, 6), 1, true, 9).unwrap();
        assert!(matches!(
            meager_or_biclique(&g, &c, 2, 2, BoundMode::Strict),
            Err(ExtractError::TooFewPaths { .. })
        ));
    }
}
