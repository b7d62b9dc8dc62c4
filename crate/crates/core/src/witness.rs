//! Versioned JSON envelope for certificates.
//!
//! Layout: `{schema_version, graph_fingerprint, kind, parameters, payload}`.
//! The fingerprint ties a witness to the exact graph value it cites;
//! validation rejects stale witnesses before looking at any clause.
//!
//! Kinds and their parameters:
//!
//! | kind                         | parameters               | payload |
//! |------------------------------|--------------------------|---------|
//! | `path`, `cycle`              | none                     | vertex sequence |
//! | `bundle`                     | `plain`                  | stable set + paths |
//! | `constellation`              | `plain`, opt. `meager`/`hollow` | stable set + paths |
//! | `alignment`                  | none                     | ordered stable set, path, `from_end` |
//! | `array`                      | none                     | ordered stable set, paths, `hollow` |
//! | `pinch`                      | `c`, `h`                 | hub + cycles |
//! | `block`                      | none                     | block set, `k`, `strong`, pair families |
//! | `patch`, `match`             | `d`, `r`                 | paths (+ hub) + target set |
//! | `minor_model`                | none                     | target graph6 + branch sets |
//! | `tree_decomposition`         | none                     | tree, bags, `width` |
//! | `embedding`                  | none                     | pattern graph6 + vertex map |
//! | `subdivision_embedding`      | none                     | base graph6, branch map, edge paths |
//! | `line_subdivision_embedding` | none                     | base graph6, interior counts, line map |

use crate::graph::{CycleWitness, Fingerprint, Graph, PathWitness};
use crate::oracles::embedding::{validate_embedding, EmbeddingWitness};
use crate::oracles::subdivision::{
    validate_line_subdivision_embedding, validate_subdivision_embedding, LineSubdivisionEmbedding,
    SubdivisionEmbedding,
};
use crate::structures::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

/// Serializes a graph as its graph6 string (labels are not preserved).
pub mod graph_as_graph6 {
    use crate::graph::Graph;
    use crate::graph6::{graph6_emit, graph6_parse};
    use serde::{de::Error as _, ser::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(g: &Graph, ser: S) -> Result<S::Ok, S::Error> {
        let text = graph6_emit(g).map_err(S::Error::custom)?;
        ser.serialize_str(&text)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(de)?;
        graph6_parse(&text).map_err(D::Error::custom)
    }
}

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("unsupported schema_version {found} (expected {expected})")]
    UnsupportedSchema { found: u32, expected: u32 },
    #[error("fingerprint mismatch: witness cites n={wn} m={wm} hash={wh:016x}, graph is n={gn} m={gm} hash={gh:016x}")]
    FingerprintMismatch {
        wn: usize,
        wm: usize,
        wh: u64,
        gn: usize,
        gm: usize,
        gh: u64,
    },
    #[error(transparent)]
    Invalid(#[from] Violation),
    #[error("malformed witness JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoParams {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlainParam {
    #[serde(default)]
    pub plain: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstellationParams {
    #[serde(default)]
    pub plain: bool,
    /// When present, the constellation must additionally be this meager.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meager: Option<usize>,
    /// When present, the constellation must additionally be this hollow.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hollow: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PinchParams {
    pub c: usize,
    pub h: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpreadParams {
    pub d: usize,
    pub r: usize,
}

/// One certificate kind with its parameters and payload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessBody {
    Path {
        #[serde(default)]
        parameters: NoParams,
        payload: PathWitness,
    },
    Cycle {
        #[serde(default)]
        parameters: NoParams,
        payload: CycleWitness,
    },
    Bundle {
        parameters: PlainParam,
        payload: Bundle,
    },
    Constellation {
        parameters: ConstellationParams,
        payload: Constellation,
    },
    Alignment {
        #[serde(default)]
        parameters: NoParams,
        payload: Alignment,
    },
    Array {
        #[serde(default)]
        parameters: NoParams,
        payload: ArrayWitness,
    },
    Pinch {
        parameters: PinchParams,
        payload: PinchWitness,
    },
    Block {
        #[serde(default)]
        parameters: NoParams,
        payload: BlockWitness,
    },
    Patch {
        parameters: SpreadParams,
        payload: PatchWitness,
    },
    Match {
        parameters: SpreadParams,
        payload: MatchWitness,
    },
    MinorModel {
        #[serde(default)]
        parameters: NoParams,
        payload: MinorModelWitness,
    },
    TreeDecomposition {
        #[serde(default)]
        parameters: NoParams,
        payload: TreeDecompositionWitness,
    },
    Embedding {
        #[serde(default)]
        parameters: NoParams,
        payload: EmbeddingWitness,
    },
    SubdivisionEmbedding {
        #[serde(default)]
        parameters: NoParams,
        payload: SubdivisionEmbedding,
    },
    LineSubdivisionEmbedding {
        #[serde(default)]
        parameters: NoParams,
        payload: LineSubdivisionEmbedding,
    },
}

impl WitnessBody {
    pub fn kind(&self) -> &'static str {
        match self {
            WitnessBody::Path { .. } => "path",
            WitnessBody::Cycle { .. } => "cycle",
            WitnessBody::Bundle { .. } => "bundle",
            WitnessBody::Constellation { .. } => "constellation",
            WitnessBody::Alignment { .. } => "alignment",
            WitnessBody::Array { .. } => "array",
            WitnessBody::Pinch { .. } => "pinch",
            WitnessBody::Block { .. } => "block",
            WitnessBody::Patch { .. } => "patch",
            WitnessBody::Match { .. } => "match",
            WitnessBody::MinorModel { .. } => "minor_model",
            WitnessBody::TreeDecomposition { .. } => "tree_decomposition",
            WitnessBody::Embedding { .. } => "embedding",
            WitnessBody::SubdivisionEmbedding { .. } => "subdivision_embedding",
            WitnessBody::LineSubdivisionEmbedding { .. } => "line_subdivision_embedding",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub schema_version: u32,
    pub graph_fingerprint: Fingerprint,
    #[serde(flatten)]
    pub body: WitnessBody,
}

impl Witness {
    pub fn new(g: &Graph, body: WitnessBody) -> Self {
        Witness {
            schema_version: SCHEMA_VERSION,
            graph_fingerprint: g.fingerprint(),
            body,
        }
    }

    pub fn to_json(&self) -> Result<String, WitnessError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self, WitnessError> {
        let w: Witness = serde_json::from_str(text)?;
        if w.schema_version != SCHEMA_VERSION {
            return Err(WitnessError::UnsupportedSchema {
                found: w.schema_version,
                expected: SCHEMA_VERSION,
            });
        }
        Ok(w)
    }
}

/// Full validation: schema version, fingerprint, then the clause checks of
/// the kind at hand.
pub fn validate_witness(g: &Graph, w: &Witness) -> Result<(), WitnessError> {
    if w.schema_version != SCHEMA_VERSION {
        return Err(WitnessError::UnsupportedSchema {
            found: w.schema_version,
            expected: SCHEMA_VERSION,
        });
    }
    let fp = g.fingerprint();
    if w.graph_fingerprint != fp {
        return Err(WitnessError::FingerprintMismatch {
            wn: w.graph_fingerprint.n,
            wm: w.graph_fingerprint.edges,
            wh: w.graph_fingerprint.adjacency_hash,
            gn: fp.n,
            gm: fp.edges,
            gh: fp.adjacency_hash,
        });
    }
    match &w.body {
        WitnessBody::Path { payload, .. } => validate_path(g, payload)?,
        WitnessBody::Cycle { payload, .. } => validate_cycle(g, payload)?,
        WitnessBody::Bundle {
            parameters,
            payload,
        } => validate_bundle(g, payload, parameters.plain)?,
        WitnessBody::Constellation {
            parameters,
            payload,
        } => {
            validate_constellation(g, payload, parameters.plain)?;
            if let Some(d) = parameters.meager {
                if !meager_unchecked(g, payload, d) {
                    return Err(Violation {
                        clause: "d-meager",
                        detail: format!("a path vertex has more than {d} stable neighbors"),
                    }
                    .into());
                }
            }
            if let Some(d) = parameters.hollow {
                if !hollow_unchecked(g, payload, d) {
                    return Err(Violation {
                        clause: "d-hollow",
                        detail: format!("a gap of length at least {d} exists"),
                    }
                    .into());
                }
            }
        }
        WitnessBody::Alignment { payload, .. } => validate_alignment(g, payload)?,
        WitnessBody::Array { payload, .. } => validate_array(g, payload)?,
        WitnessBody::Pinch {
            parameters,
            payload,
        } => validate_pinch_witness(g, payload, parameters.c, parameters.h)?,
        WitnessBody::Block { payload, .. } => validate_block(g, payload)?,
        WitnessBody::Patch {
            parameters,
            payload,
        } => validate_patch(g, payload, parameters.d, parameters.r)?,
        WitnessBody::Match {
            parameters,
            payload,
        } => validate_match(g, payload, parameters.d, parameters.r)?,
        WitnessBody::MinorModel { payload, .. } => validate_minor_model(g, payload)?,
        WitnessBody::TreeDecomposition { payload, .. } => {
            validate_tree_decomposition(g, payload)?
        }
        WitnessBody::Embedding { payload, .. } => validate_embedding(g, payload)?,
        WitnessBody::SubdivisionEmbedding { payload, .. } => {
            validate_subdivision_embedding(g, payload)?
        }
        WitnessBody::LineSubdivisionEmbedding { payload, .. } => {
            validate_line_subdivision_embedding(g, payload)?
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn round_trip_and_validate_array_witness() {
        let (g, arr) = generators::gen_pd(3).unwrap();
        let w = Witness::new(
            &g,
            WitnessBody::Array {
                parameters: NoParams {},
                payload: arr,
            },
        );
        let text = w.to_json().unwrap();
        assert!(text.contains("\"schema_version\": 1"));
        assert!(text.contains("\"kind\": \"array\""));
        let back = Witness::from_json(&text).unwrap();
        assert_eq!(back, w);
        validate_witness(&g, &back).unwrap();
    }

    #[test]
    fn stale_witness_is_rejected() {
        let (g, arr) = generators::gen_pd(3).unwrap();
        let w = Witness::new(
            &g,
            WitnessBody::Array {
                parameters: NoParams {},
                payload: arr,
            },
        );
        let (other, _) = generators::gen_pd(4).unwrap();
        assert!(matches!(
            validate_witness(&other, &w),
            Err(WitnessError::FingerprintMismatch { .. })
        ));
    }

    #[test]
    fn unknown_schema_version_is_loud() {
        let (g, arr) = generators::gen_pd(3).unwrap();
        let mut w = Witness::new(
            &g,
            WitnessBody::Array {
                parameters: NoParams {},
                payload: arr,
            },
        );
        w.schema_version = 99;
        let text = serde_json::to_string(&w).unwrap();
        assert!(matches!(
            Witness::from_json(&text),
            Err(WitnessError::UnsupportedSchema { found: 99, .. })
        ));
    }

    #[test]
    fn connectivity_witness_kinds_round_trip() {
        use crate::graph::PathWitness;
        use crate::structures::{BlockWitness, MatchWitness, PairFamily, PatchWitness};
        let mut edges = Vec::new();
        for i in 0..4 {
            let base = 1 + 4 * i;
            edges.extend([(base, base + 1), (base + 1, base + 2), (base + 2, base + 3)]);
            edges.push((0, base));
        }
        let g = crate::graph::Graph::from_edges(17, &edges).unwrap();
        let patch = PatchWitness {
            hub: 0,
            paths: (0..4)
                .map(|i| PathWitness::new((1 + 4 * i..5 + 4 * i).collect()))
                .collect(),
            target: vec![4, 8, 12, 16],
        };
        let w = Witness::new(
            &g,
            WitnessBody::Patch {
                parameters: SpreadParams { d: 3, r: 4 },
                payload: patch,
            },
        );
        let back = Witness::from_json(&w.to_json().unwrap()).unwrap();
        validate_witness(&g, &back).unwrap();

        let m = MatchWitness {
            paths: vec![
                PathWitness::new((1..5).collect()),
                PathWitness::new((5..9).collect()),
            ],
            target: vec![1, 4, 5, 8],
        };
        let w = Witness::new(
            &g,
            WitnessBody::Match {
                parameters: SpreadParams { d: 3, r: 2 },
                payload: m,
            },
        );
        let back = Witness::from_json(&w.to_json().unwrap()).unwrap();
        validate_witness(&g, &back).unwrap();

        // a 1-block between the hub and a far end
        let b = BlockWitness {
            block: vec![0, 3],
            k: 1,
            strong: false,
            families: vec![PairFamily {
                x: 0,
                y: 3,
                paths: vec![PathWitness::new(vec![0, 1, 2, 3])],
            }],
        };
        let w = Witness::new(
            &g,
            WitnessBody::Block {
                parameters: NoParams {},
                payload: b,
            },
        );
        let back = Witness::from_json(&w.to_json().unwrap()).unwrap();
        validate_witness(&g, &back).unwrap();
    }

    #[test]
    fn constellation_params_checked() {
        let (g, c) = generators::gen_random_constellation(4, 2, (6, 9), 2, true, 3).unwrap();
        let ok = Witness::new(
            &g,
            WitnessBody::Constellation {
                parameters: ConstellationParams {
                    plain: true,
                    meager: Some(2),
                    hollow: None,
                },
                payload: c.clone(),
            },
        );
        validate_witness(&g, &ok).unwrap();
        let bad = Witness::new(
            &g,
            WitnessBody::Constellation {
                parameters: ConstellationParams {
                    plain: true,
                    meager: Some(0),
                    hollow: None,
                },
                payload: c,
            },
        );
        assert!(validate_witness(&g, &bad).is_err());
    }
}
