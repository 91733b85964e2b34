//! Mapping synset words onto model rows.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{RawSynsetError, ResolveError};
use crate::geometry::{ResolvedSynset, SynsetWord};
use crate::model::EmbeddingModel;

/// Fewest words a synset needs for partitions of `S \ {v}` to exist.
pub const MIN_SYNSET_SIZE: usize = 3;

/// A synset as read from a definition file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSynset {
    pub id: String,
    pub headword: Option<String>,
    pub words: Vec<String>,
}

impl RawSynset {
    pub fn new(
        id: impl Into<String>,
        headword: Option<String>,
        words: Vec<String>,
    ) -> Result<Self, RawSynsetError> {
        let id = id.into();
        if id.is_empty() {
            return Err(RawSynsetError::EmptyId);
        }
        if words.is_empty() {
            return Err(RawSynsetError::EmptyWordList);
        }
        let mut seen = BTreeSet::new();
        for w in &words {
            if w.is_empty() {
                return Err(RawSynsetError::EmptyWord);
            }
            if !seen.insert(w.as_str()) {
                return Err(RawSynsetError::DuplicateWord(w.clone()));
            }
        }
        Ok(RawSynset {
            id,
            headword: headword.filter(|h| !h.is_empty()),
            words,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OovMode {
    /// Drop missing words and keep going.
    #[default]
    DropWord,
    /// Skip the whole synset when any word is missing.
    SkipSynset,
    /// Treat any missing word as an error.
    Fail,
}

impl OovMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            OovMode::DropWord => "drop-word",
            OovMode::SkipSynset => "skip-synset",
            OovMode::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OovPolicy {
    mode: OovMode,
    tag_suffixes: Vec<String>,
    lowercase_fallback: bool,
}

impl OovPolicy {
    pub fn new(
        mode: OovMode,
        tag_suffixes: Vec<String>,
        lowercase_fallback: bool,
    ) -> Result<Self, ResolveError> {
        let mut seen = BTreeSet::new();
        for s in &tag_suffixes {
            if !seen.insert(s.as_str()) {
                return Err(ResolveError::DuplicateSuffix(s.clone()));
            }
        }
        Ok(OovPolicy {
            mode,
            tag_suffixes,
            lowercase_fallback,
        })
    }

    pub fn mode(&self) -> OovMode {
        self.mode
    }

    pub fn tag_suffixes(&self) -> &[String] {
        &self.tag_suffixes
    }

    pub fn lowercase_fallback(&self) -> bool {
        self.lowercase_fallback
    }

    /// Model keys tried for `token`, in lookup order: the token itself, the
    /// token with each suffix, then the same for its lowercase form.
    pub fn candidates(&self, token: &str) -> Vec<String> {
        let mut out = Vec::new();
        let mut push = |base: &str| {
            out.push(String::from(base));
            for s in &self.tag_suffixes {
                let mut k = String::from(base);
                k.push_str(s);
                out.push(k);
            }
        };
        push(token);
        if self.lowercase_fallback {
            let lower = token.to_lowercase();
            if lower != token {
                push(&lower);
            }
        }
        out
    }

    /// First candidate key present in `model`.
    pub fn lookup<'m>(&self, model: &'m EmbeddingModel, token: &str) -> Option<&'m str> {
        self.candidates(token)
            .iter()
            .find_map(|k| model.index_of(k))
            .map(|i| model.words()[i].as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DropReason {
    /// None of the candidate keys are in the model.
    OutOfVocabulary { tried: usize },
}

impl fmt::Display for DropReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DropReason::OutOfVocabulary { tried } => {
                write!(f, "out of vocabulary ({tried} keys tried)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DroppedWord {
    pub token: String,
    pub reason: DropReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolutionStatus {
    Resolved,
    TooSmallAfterFilter,
    Skipped,
}

impl ResolutionStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ResolutionStatus::Resolved => "resolved",
            ResolutionStatus::TooSmallAfterFilter => "too-small-after-filter",
            ResolutionStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResolutionOutcome {
    /// Present exactly when `status` is `Resolved`.
    pub resolved: Option<ResolvedSynset>,
    /// Missing words in synset order.
    pub dropped: Vec<DroppedWord>,
    pub status: ResolutionStatus,
}

/// Looks up every word of `synset` in `model` under `policy`.
///
/// Surviving words keep their order. Fewer than three survivors yields
/// `TooSmallAfterFilter`.
pub fn resolve(
    synset: &RawSynset,
    model: &EmbeddingModel,
    policy: &OovPolicy,
) -> Result<ResolutionOutcome, ResolveError> {
    let mut words = Vec::with_capacity(synset.words.len());
    let mut dropped = Vec::new();
    for token in &synset.words {
        match policy.lookup(model, token) {
            Some(key) => words.push(SynsetWord {
                token: token.clone(),
                model_key: String::from(key),
                vector: model
                    .vector(key)
                    .map(|v| v.components.to_vec())
                    .unwrap_or_default(),
            }),
            None => {
                if policy.mode == OovMode::Fail {
                    return Err(ResolveError::OutOfVocabulary {
                        synset: synset.id.clone(),
                        token: token.clone(),
                    });
                }
                dropped.push(DroppedWord {
                    token: token.clone(),
                    reason: DropReason::OutOfVocabulary {
                        tried: policy.candidates(token).len(),
                    },
                });
            }
        }
    }

    let status = if policy.mode == OovMode::SkipSynset && !dropped.is_empty() {
        ResolutionStatus::Skipped
    } else if words.len() < MIN_SYNSET_SIZE {
        ResolutionStatus::TooSmallAfterFilter
    } else {
        ResolutionStatus::Resolved
    };
    let resolved = match status {
        ResolutionStatus::Resolved => Some(
            ResolvedSynset::new(synset.id.clone(), words, synset.words.len())
                .expect("model rows are unit vectors of one dimension and raw tokens are unique"),
        ),
        _ => None,
    };
    Ok(ResolutionOutcome {
        resolved,
        dropped,
        status,
    })
}
