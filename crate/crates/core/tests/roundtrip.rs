//! Generator/validator round trips and serialization invariants.

use pinchkit::generators as gen;
use pinchkit::graph::Graph;
use pinchkit::structures::{
    is_hollow, is_meager, validate_array, validate_constellation, validate_minor_model,
};
use pinchkit::witness::{validate_witness, NoParams, Witness, WitnessBody};
use pinchkit::{graph6_emit, graph6_parse};
use proptest::prelude::*;

/// Independent graph6 encoder: builds the bit string character by character
/// straight from the published packing rule, sharing nothing with the
/// library implementation.
fn reference_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= 62, "reference encoder only handles short sizes");
    let mut bits = String::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push('0');
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.as_bytes().chunks(6) {
        let mut v = 0u8;
        for &b in chunk {
            v = v << 1 | (b - b'0');
        }
        out.push((v + 63) as char);
    }
    out
}

#[test]
fn graph6_matches_independent_reference_on_100_graphs() {
    for seed in 0..100u64 {
        let n = 1 + (seed as usize * 7) % 62;
        let g = gen::gen_random_graph(n, 0.4, seed);
        assert_eq!(
            graph6_emit(&g).unwrap(),
            reference_graph6(&g),
            "seed {seed}, n {n}"
        );
    }
}

proptest! {
    #[test]
    fn graph6_round_trip_identity(n in 0usize..64, seed in 0u64..10_000) {
        let g = gen::gen_random_graph(n, 0.5, seed);
        let enc = graph6_emit(&g).unwrap();
        let back = graph6_parse(&enc).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.fingerprint(), g.fingerprint());
    }

    #[test]
    fn are_anticomplete_agrees_with_edge_scan(n in 2usize..12, seed in 0u64..500) {
        let g = gen::gen_random_graph(n, 0.4, seed);
        let xs: Vec<usize> = (0..n / 2).collect();
        let ys: Vec<usize> = (n / 2..n).collect();
        let direct = g
            .edge_list()
            .into_iter()
            .all(|(u, v)| !(xs.contains(&u) && ys.contains(&v) || xs.contains(&v) && ys.contains(&u)));
        prop_assert_eq!(g.are_anticomplete(&xs, &ys).unwrap(), direct);
    }

    #[test]
    fn line_graph_counts_hold(n in 1usize..10, seed in 0u64..300) {
        let g = gen::gen_random_graph(n, 0.5, seed);
        let (l, map) = g.line_graph();
        prop_assert_eq!(l.vertex_count(), g.edge_count());
        prop_assert_eq!(map.len(), g.edge_count());
        let expected: usize = g
            .vertices()
            .map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2)
            .sum();
        prop_assert_eq!(l.edge_count(), expected);
    }
}

#[test]
fn every_generator_witness_validates_over_seeds() {
    for seed in 0..25u64 {
        for s in [3, 4] {
            for h in [1, 2] {
                let (g, arr) = gen::gen_array_random(s, h, seed).unwrap();
                validate_array(&g, &arr).unwrap();
                let c = arr.constellation();
                assert!(is_hollow(&g, &c, h).unwrap());
                let model = arr.biclique_minor_model();
                validate_minor_model(&g, &model).unwrap();
            }
        }
        let (g, arr) = gen::gen_pd_expansion_random(4, 3, seed).unwrap();
        validate_array(&g, &arr).unwrap();
        let (g, c) =
            gen::gen_random_constellation(4, 3, (6, 12), 2, seed % 2 == 0, seed).unwrap();
        validate_constellation(&g, &c, seed % 2 == 0).unwrap();
        assert!(is_meager(&g, &c, 2).unwrap());
    }
}

#[test]
fn witness_envelopes_round_trip_through_json() {
    let (g, arr) = gen::gen_pd(4).unwrap();
    let model = arr.biclique_minor_model();
    let bodies = vec![
        WitnessBody::Array {
            parameters: NoParams {},
            payload: arr,
        },
        WitnessBody::MinorModel {
            parameters: NoParams {},
            payload: model,
        },
    ];
    for body in bodies {
        let w = Witness::new(&g, body);
        let text = w.to_json().unwrap();
        let back = Witness::from_json(&text).unwrap();
        assert_eq!(back, w);
        validate_witness(&g, &back).unwrap();
    }
}

#[test]
fn subdivision_generator_stays_within_rate() {
    // a spec with all counts <= r yields a subdivision where every
    // replacement path has length at most r+1
    let k4 = gen::gen_complete(4).unwrap();
    for seed in 0..20u64 {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let r = 3usize;
        let spec = gen::SubdivisionSpec::random(&k4, r, &mut rng);
        let (g, map) = gen::gen_subdivision(&k4, &spec).unwrap();
        for (_, p) in &map.edge_paths {
            assert!(p.len_edges() <= r + 1);
            assert!(g.is_induced_path(&p.vertices).unwrap());
        }
        // branch vertices keep the adjacency pattern through the paths
        let emb = pinchkit::oracles::SubdivisionEmbedding {
            base: k4.clone(),
            branch: map.branch.clone(),
            edge_paths: map.edge_paths.clone(),
        };
        pinchkit::oracles::validate_subdivision_embedding(&g, &emb).unwrap();
    }
}
