//! Witness-producing extraction: each operation returns exactly one of the
//! alternatives its statement promises, always as a certificate that passes
//! the corresponding validator; a wrong certificate is never returned.
//!
//! Every extractor runs in one of two modes. Strict mode enforces the exact
//! size bound and is total: any input meeting the bound yields an
//! alternative. Relaxed mode runs the same control flow on under-bound
//! inputs and may end with the explicit fourth outcome "bound not met".

pub mod alignment;
pub mod array;
pub mod bounds;
pub mod fragments;
pub mod meager;
pub mod ramsey;

use crate::structures::Violation;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    Strict,
    Relaxed,
}

#[derive(Debug, Error)]
pub enum ExtractError {
    #[error("input does not validate: {0}")]
    InvalidInput(#[from] Violation),
    #[error("parameter {0} must be at least 1")]
    ZeroParam(&'static str),
    #[error("input constellation has {0} paths, expected exactly one")]
    NotSinglePath(usize),
    #[error("input is not {0}-meager")]
    NotMeager(usize),
    #[error("too small stable side: need {need}, have {have}")]
    TooSmallStable { need: String, have: usize },
    #[error("too few paths: need {need}, have {have}")]
    TooFewPaths { need: String, have: usize },
    #[error("too few vertices: need {need}, have {have}")]
    TooFewVertices { need: String, have: usize },
    #[error("bound not met and no alternative found: {0}")]
    BoundNotMet(String),
}

impl ExtractError {
    /// The relaxed-mode fourth outcome, as opposed to a rejected input.
    pub fn is_bound_not_met(&self) -> bool {
        matches!(self, ExtractError::BoundNotMet(_))
    }
}

pub use alignment::{
    alignment_or_constellation, pinched_alignment_or_witness, AlignOrConst, AlignOrPinch,
};
pub use array::{
    array_or_witness, certify_array_properties, ArrayCertificationReport, ArrayOutcome,
    CheckReport,
};
pub use fragments::{
    block_clique_or_scattered, constellation_or_nonrigid_path, validate_block_link_outcome,
    BlockLinkOutcome, RigidityOutcome,
};
pub use meager::{meager_or_biclique, MeagerOrBiclique};
pub use ramsey::{ramsey_clique_or_stable, ramsey_outcome_valid, ramsey_search, RamseyOutcome};

/// Serializable result of a CLI extraction run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ExtractionResult {
    Alignment {
        alignment: crate::structures::Alignment,
    },
    Constellation {
        constellation: crate::structures::Constellation,
        plain: bool,
    },
    Array {
        array: crate::structures::ArrayWitness,
    },
    Embedding {
        embedding: crate::oracles::embedding::EmbeddingWitness,
    },
    Pinch {
        pinch: crate::structures::PinchWitness,
        c: usize,
        h: usize,
    },
    Clique {
        vertices: Vec<usize>,
    },
    Stable {
        vertices: Vec<usize>,
    },
    BoundNotMet {
        reason: String,
    },
}
