//! Witness-producing extraction on single-path constellations: either an
//! alignment inside the input, or a plain multi-path constellation obtained
//! by splitting the path, or (on pinched instances) a pinch witness
//! assembled from interlacing attachments.

use super::{bounds, BoundMode, ExtractError};
use crate::graph::{CycleWitness, Graph, PathWitness};
use crate::structures::{
    meager_unchecked, validate_alignment, validate_constellation, validate_pinch_witness,
    Alignment, Constellation, PinchWitness,
};
use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlignOrConst {
    Alignment(Alignment),
    Constellation(Constellation),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlignOrPinch {
    Alignment(Alignment),
    Pinch(PinchWitness),
}

fn check_positive(params: &[(&'static str, usize)]) -> Result<(), ExtractError> {
    for &(name, v) in params {
        if v == 0 {
            return Err(ExtractError::ZeroParam(name));
        }
    }
    Ok(())
}

fn single_path_input<'c>(
    g: &Graph,
    c0: &'c Constellation,
    d: usize,
) -> Result<&'c PathWitness, ExtractError> {
    validate_constellation(g, c0, false)?;
    let path = c0
        .single_path()
        .ok_or(ExtractError::NotSinglePath(c0.l()))?;
    if !meager_unchecked(g, c0, d) {
        return Err(ExtractError::NotMeager(d));
    }
    Ok(path)
}

/// Either an a-alignment with stable side inside the input's, or a plain
/// (s,l)-constellation whose paths are disjoint anticomplete subpaths of the
/// input path. Strict mode enforces the stable-side bound
/// a^(l-1)(s + d(l-1)) and is then total.
pub fn alignment_or_constellation(
    g: &Graph,
    c0: &Constellation,
    a: usize,
    d: usize,
    s: usize,
    l: usize,
    mode: BoundMode,
) -> Result<AlignOrConst, ExtractError> {
    check_positive(&[("a", a), ("d", d), ("s", s), ("l", l)])?;
    let path = single_path_input(g, c0, d)?;
    if mode == BoundMode::Strict {
        let need = bounds::alignment_bound(a, d, s, l);
        if BigUint::from(c0.s()) < need {
            return Err(ExtractError::TooSmallStable {
                need: need.to_string(),
                have: c0.s(),
            });
        }
    }
    let out = recurse(g, path, c0.stable.clone(), 0, path.len_vertices(), a, s, l)?;
    match &out {
        AlignOrConst::Alignment(al) => validate_alignment(g, al).map_err(|v| {
            ExtractError::BoundNotMet(format!("assembled alignment fails {v}"))
        })?,
        AlignOrConst::Constellation(c) => {
            validate_constellation(g, c, true).map_err(|v| {
                ExtractError::BoundNotMet(format!("assembled constellation fails {v}"))
            })?;
            if c.s() != s || c.l() != l {
                return Err(ExtractError::BoundNotMet(format!(
                    "assembled constellation is ({},{}) instead of ({s},{l})",
                    c.s(),
                    c.l()
                )));
            }
        }
    }
    Ok(out)
}

/// One level of the split recursion on the subpath `orig[lo..hi]`.
#[allow(clippy::too_many_arguments)]
fn recurse(
    g: &Graph,
    orig: &PathWitness,
    stable: Vec<usize>,
    lo: usize,
    hi: usize,
    a: usize,
    s: usize,
    level: usize,
) -> Result<AlignOrConst, ExtractError> {
    let subpath = || PathWitness::new(orig.vertices[lo..hi].to_vec());
    // spans: first and last neighbor position of each stable vertex on the
    // current subpath
    let mut spans: Vec<(usize, usize, usize)> = Vec::with_capacity(stable.len()); // (start, end, x)
    for &x in &stable {
        let mut first = usize::MAX;
        let mut last = 0;
        for (i, &v) in orig.vertices[lo..hi].iter().enumerate() {
            if g.has_edge(x, v) {
                if first == usize::MAX {
                    first = i;
                }
                last = i;
            }
        }
        if first == usize::MAX {
            return Err(ExtractError::BoundNotMet(format!(
                "stable vertex {x} lost all neighbors on the current subpath"
            )));
        }
        spans.push((first, last, x));
    }

    let chosen = select_disjoint_spans(&spans);
    if chosen.len() >= a {
        let order: Vec<usize> = chosen.iter().take(a).map(|&i| spans[i].2).collect();
        return Ok(AlignOrConst::Alignment(Alignment {
            stable_order: order,
            path: subpath(),
            from_end: orig.vertices[lo],
        }));
    }
    if level == 1 {
        if stable.len() < s {
            return Err(ExtractError::BoundNotMet(format!(
                "only {} stable vertices left for an (s,1) piece needing {s}",
                stable.len()
            )));
        }
        return Ok(AlignOrConst::Constellation(Constellation {
            stable: stable[..s].to_vec(),
            paths: vec![subpath()],
        }));
    }

    // pigeonhole a span start lying inside the most spans
    let starts: Vec<usize> = chosen.iter().map(|&i| spans[i].0).collect();
    let mut best: Option<(usize, usize)> = None; // (offset, count)
    for &w in &starts {
        let cnt = spans
            .iter()
            .filter(|&&(a0, b0, _)| a0 <= w && w <= b0)
            .count();
        let better = match best {
            None => true,
            Some((bw, bc)) => cnt > bc || (cnt == bc && w < bw),
        };
        if better {
            best = Some((w, cnt));
        }
    }
    let Some((w_off, _)) = best else {
        return Err(ExtractError::BoundNotMet("no spans to split on".into()));
    };
    let w_vertex = orig.vertices[lo + w_off];
    // drop w's own neighbors, then keep only vertices attached on both sides
    let survivors: Vec<usize> = spans
        .iter()
        .filter(|&&(a0, b0, x)| a0 <= w_off && w_off <= b0 && !g.has_edge(x, w_vertex))
        .map(|&(_, _, x)| x)
        .filter(|&x| {
            let left = orig.vertices[lo..lo + w_off]
                .iter()
                .any(|&v| g.has_edge(x, v));
            let right = orig.vertices[lo + w_off + 1..hi]
                .iter()
                .any(|&v| g.has_edge(x, v));
            left && right
        })
        .collect();
    if survivors.is_empty() {
        return Err(ExtractError::BoundNotMet(
            "pigeonholed split vertex dominates every remaining stable vertex".into(),
        ));
    }
    let right_piece = PathWitness::new(orig.vertices[lo + w_off + 1..hi].to_vec());
    match recurse(g, orig, survivors, lo, lo + w_off, a, s, level - 1)? {
        AlignOrConst::Alignment(al) => Ok(AlignOrConst::Alignment(al)),
        AlignOrConst::Constellation(mut c) => {
            c.paths.push(right_piece);
            Ok(AlignOrConst::Constellation(c))
        }
    }
}

/// Maximum-cardinality pairwise disjoint spans, pushed right by the exchange
/// rule: while some stable vertex's span avoids every chosen start, swap it
/// for the unique chosen span it overlaps. Returns indices into `spans`,
/// sorted by start.
fn select_disjoint_spans(spans: &[(usize, usize, usize)]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..spans.len()).collect();
    order.sort_by_key(|&i| (spans[i].1, spans[i].0, spans[i].2));
    let mut chosen: Vec<usize> = Vec::new();
    let mut last_end: Option<usize> = None;
    for &i in &order {
        if last_end.is_none_or(|e| spans[i].0 > e) {
            chosen.push(i);
            last_end = Some(spans[i].1);
        }
    }
    let overlap = |i: usize, j: usize| spans[i].0.max(spans[j].0) <= spans[i].1.min(spans[j].1);
    let cap = 4 * spans.len() * spans.len() + 16;
    for _ in 0..cap {
        chosen.sort_by_key(|&i| spans[i].0);
        let starts: Vec<usize> = chosen.iter().map(|&i| spans[i].0).collect();
        // an unchosen span disjoint from every chosen one extends the set
        if let Some(i) = (0..spans.len())
            .filter(|i| !chosen.contains(i))
            .find(|&i| chosen.iter().all(|&j| !overlap(i, j)))
        {
            chosen.push(i);
            continue;
        }
        // a span containing no chosen start displaces its unique overlap
        let violator = (0..spans.len())
            .filter(|i| !chosen.contains(i))
            .find(|&i| starts.iter().all(|&w| !(spans[i].0 <= w && w <= spans[i].1)));
        match violator {
            Some(i) => {
                let Some(pos) = chosen.iter().position(|&j| overlap(i, j)) else {
                    break;
                };
                let j = chosen[pos];
                // the swap must keep the set disjoint and move starts right
                let still_disjoint = chosen
                    .iter()
                    .all(|&k| k == j || !overlap(i, k));
                if !still_disjoint || spans[i].0 <= spans[j].0 {
                    break;
                }
                chosen[pos] = i;
            }
            None => break,
        }
    }
    chosen.sort_by_key(|&i| spans[i].0);
    chosen
}

/// On a pinched instance the constellation branch cannot survive: either an
/// a-alignment exists inside the input, or the split pieces assemble into a
/// (c,h)-pinch witness. Strict mode enforces the stable-side bound
/// a^(2cdh-1) d (h + 2cdh - 1).
pub fn pinched_alignment_or_witness(
    g: &Graph,
    c0: &Constellation,
    a: usize,
    c: usize,
    d: usize,
    h: usize,
    mode: BoundMode,
) -> Result<AlignOrPinch, ExtractError> {
    check_positive(&[("a", a), ("c", c), ("d", d), ("h", h)])?;
    let path = single_path_input(g, c0, d)?;
    if mode == BoundMode::Strict {
        let need = bounds::pinched_alignment_bound(a, c, d, h);
        if BigUint::from(c0.s()) < need {
            return Err(ExtractError::TooSmallStable {
                need: need.to_string(),
                have: c0.s(),
            });
        }
    }
    let inner = alignment_or_constellation(g, c0, a, d, d * h, 2 * c * d * h, mode)?;
    let pieces = match inner {
        AlignOrConst::Alignment(al) => return Ok(AlignOrPinch::Alignment(al)),
        AlignOrConst::Constellation(pieces) => pieces,
    };
    let witness = pinch_from_pieces(g, path, &pieces, c)?;
    validate_pinch_witness(g, &witness, c, h)
        .map_err(|v| ExtractError::BoundNotMet(format!("assembled pinch witness fails {v}")))?;
    Ok(AlignOrPinch::Pinch(witness))
}

/// Builds the c cycles through one stable vertex out of a plain sub-split
/// of the original path, following the interlacing-attachment argument.
fn pinch_from_pieces(
    g: &Graph,
    orig: &PathWitness,
    pieces: &Constellation,
    c: usize,
) -> Result<PinchWitness, ExtractError> {
    let mut pos_of = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in orig.vertices.iter().enumerate() {
        pos_of[v] = i;
    }
    // order the split paths along the original one
    let mut paths: Vec<&PathWitness> = pieces.paths.iter().collect();
    paths.sort_by_key(|p| pos_of[p.vertices[0]]);
    // per path: the shortest suffix (toward the path's far end) dominating
    // the whole stable side, its boundary vertex, and the stable vertex
    // pinned to that boundary
    let mut pinned: Vec<(usize, usize, usize)> = Vec::new(); // (path idx, w vertex, x vertex)
    for (pi, p) in paths.iter().enumerate() {
        let m = p.len_vertices();
        let mut satisfied = vec![false; pieces.stable.len()];
        let mut missing = pieces.stable.len();
        let mut j = m;
        while j > 0 && missing > 0 {
            j -= 1;
            for (si, &x) in pieces.stable.iter().enumerate() {
                if !satisfied[si] && g.has_edge(x, p.vertices[j]) {
                    satisfied[si] = true;
                    missing -= 1;
                }
            }
        }
        if missing > 0 {
            return Err(ExtractError::BoundNotMet(format!(
                "piece {pi} does not dominate the stable side"
            )));
        }
        let w = p.vertices[j];
        let x = pieces
            .stable
            .iter()
            .copied()
            .find(|&x| {
                g.has_edge(x, w) && p.vertices[j + 1..].iter().all(|&v| !g.has_edge(x, v))
            })
            .ok_or_else(|| {
                ExtractError::BoundNotMet(format!(
                    "piece {pi} has no stable vertex pinned to its suffix boundary"
                ))
            })?;
        pinned.push((pi, w, x));
    }
    // a stable vertex pinned on 2c pieces yields the c cycles
    let hub = pieces
        .stable
        .iter()
        .copied()
        .max_by_key(|&x| {
            (
                pinned.iter().filter(|&&(_, _, px)| px == x).count(),
                std::cmp::Reverse(x),
            )
        })
        .ok_or_else(|| ExtractError::BoundNotMet("empty stable side".into()))?;
    let idx: Vec<usize> = pinned
        .iter()
        .filter(|&&(_, _, px)| px == hub)
        .map(|&(pi, _, _)| pi)
        .collect();
    if idx.len() < 2 * c {
        return Err(ExtractError::BoundNotMet(format!(
            "hub candidate {hub} pinned on {} pieces, needs {}",
            idx.len(),
            2 * c
        )));
    }
    let mut cycles = Vec::with_capacity(c);
    for k in 0..c {
        let i_k = idx[2 * k];
        let j_k = idx[2 * k + 1];
        let w_i = pinned[i_k].1;
        let w_j = pinned[j_k].1;
        let v_i = *paths[i_k].vertices.last().unwrap();
        let vprime_pos = pos_of[v_i] + 1;
        let end_pos = pos_of[w_j];
        let wprime_pos = (vprime_pos..=end_pos)
            .find(|&q| g.has_edge(hub, orig.vertices[q]))
            .ok_or_else(|| {
                ExtractError::BoundNotMet("hub lost its neighbor past the piece".into())
            })?;
        let mut verts = vec![hub];
        verts.extend_from_slice(&orig.vertices[pos_of[w_i]..=wprime_pos]);
        cycles.push(CycleWitness::new(verts));
    }
    Ok(PinchWitness { hub, cycles })
}
