//! Exhaustive search for pinch witnesses: c induced cycles of length at
//! least h+2 through one common vertex, otherwise pairwise disjoint and
//! anticomplete.

use crate::graph::{CycleWitness, Graph, VertexSet};
use crate::structures::{validate_pinch_witness, PinchWitness};

/// All induced cycles through `x` of length at least `min_len`, each as a
/// cyclic vertex list starting at `x`. Enumeration is deterministic: cycles
/// are sorted by length, then by vertex sequence.
pub fn induced_cycles_through(g: &Graph, x: usize, min_len: usize) -> Vec<CycleWitness> {
    let mut cycles = Vec::new();
    let nbrs = g.neighbors(x);
    // interior vertices may not touch x at all; x's cycle neighbors are
    // exactly the two chosen ends
    let mut blocked = VertexSet::from_iter(g.vertex_count(), nbrs.iter().copied());
    blocked.insert(x);
    for (i, &u) in nbrs.iter().enumerate() {
        for &v in &nbrs[i + 1..] {
            let mut path = vec![u];
            let mut on_path = VertexSet::new(g.vertex_count());
            on_path.insert(u);
            enumerate_paths(g, &blocked, v, &mut path, &mut on_path, &mut |p| {
                if p.len() + 1 >= min_len {
                    let mut verts = vec![x];
                    verts.extend_from_slice(p);
                    cycles.push(CycleWitness::new(verts));
                }
            });
        }
    }
    cycles.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    cycles
}

/// Extends an induced path toward `target`, invoking `emit` for every
/// induced path reaching it. Interior vertices come from outside `blocked`.
fn enumerate_paths(
    g: &Graph,
    blocked: &VertexSet,
    target: usize,
    path: &mut Vec<usize>,
    on_path: &mut VertexSet,
    emit: &mut impl FnMut(&[usize]),
) {
    let last = *path.last().unwrap();
    if g.has_edge(last, target) {
        // the target may close the path only if it sees just the last vertex
        if path[..path.len() - 1].iter().all(|&p| !g.has_edge(target, p)) {
            path.push(target);
            emit(path);
            path.pop();
        }
    }
    for &w in g.neighbors(last) {
        if w == target || blocked.contains(w) || on_path.contains(w) {
            continue;
        }
        // keep the path induced: w may only touch its predecessor
        if path[..path.len() - 1].iter().any(|&p| g.has_edge(w, p)) {
            continue;
        }
        path.push(w);
        on_path.insert(w);
        enumerate_paths(g, blocked, target, path, on_path, emit);
        on_path.remove(w);
        path.pop();
    }
}

/// Searches for a (c,h)-pinch witness. `None` means the graph is
/// (c,h)-pinched: the search is exhaustive over hubs (in decreasing degree,
/// ties by id) and over tuples of enumerated cycles (in enumeration order),
/// so the first valid tuple is deterministic.
pub fn find_pinch_witness(g: &Graph, c: usize, h: usize) -> Option<PinchWitness> {
    assert!(c >= 1 && h >= 1, "pinch parameters start at 1");
    let mut hubs: Vec<usize> = g.vertices().collect();
    hubs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for x in hubs {
        // c cycles pairwise sharing only x need 2c distinct neighbors of x
        if g.degree(x) < 2 * c {
            continue;
        }
        let cycles = induced_cycles_through(g, x, h + 2);
        if cycles.len() < c {
            continue;
        }
        // mask[i]: vertices of cycle i (hub removed) plus their neighbors;
        // two cycles are compatible iff either set avoids the other's mask
        let rests: Vec<Vec<usize>> = cycles
            .iter()
            .map(|cy| cy.vertices.iter().copied().filter(|&v| v != x).collect())
            .collect();
        let masks: Vec<VertexSet> = rests
            .iter()
            .map(|rest| {
                let mut m = VertexSet::from_iter(g.vertex_count(), rest.iter().copied());
                for &v in rest {
                    m.union_with(g.row(v));
                }
                m.remove(x);
                m
            })
            .collect();
        let mut chosen: Vec<usize> = Vec::new();
        if pick_cycles(c, &rests, &masks, 0, &mut chosen) {
            let w = PinchWitness {
                hub: x,
                cycles: chosen.iter().map(|&i| cycles[i].clone()).collect(),
            };
            debug_assert!(validate_pinch_witness(g, &w, c, h).is_ok());
            return Some(w);
        }
    }
    None
}

fn pick_cycles(
    c: usize,
    rests: &[Vec<usize>],
    masks: &[VertexSet],
    from: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == c {
        return true;
    }
    for i in from..rests.len() {
        let compatible = chosen
            .iter()
            .all(|&j| rests[i].iter().all(|&v| !masks[j].contains(v)));
        if !compatible {
            continue;
        }
        chosen.push(i);
        if pick_cycles(c, rests, masks, i + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
