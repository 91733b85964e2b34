//! Batch processing of synset collections against one or two models.
//!
//! Synsets are independent, so they are scored in parallel; results always come
//! back in input order.

use rayon::prelude::*;
use synattr_core::PartitionOutcome;
use synattr_core::{
    analyze_synset, partition_outcomes, rank_and_centrality, resolve, AnalysisOptions, DroppedWord,
    EmbeddingModel, GeometryError, OovPolicy, RawSynset, ResolutionStatus, ResolveError,
    ResolvedSynset, SynsetReport, WordAttributes,
};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipKind {
    TooSmallAfterFilter,
    /// At least one word was missing under the skip-synset policy.
    OutOfVocabulary,
    TooLarge,
    DegenerateGeometry,
}

impl SkipKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SkipKind::TooSmallAfterFilter => ResolutionStatus::TooSmallAfterFilter.as_str(),
            SkipKind::OutOfVocabulary => ResolutionStatus::Skipped.as_str(),
            SkipKind::TooLarge => "too-large",
            SkipKind::DegenerateGeometry => "degenerate-geometry",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Analyzed {
    pub headword: Option<String>,
    pub dropped: Vec<DroppedWord>,
    pub report: SynsetReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Skipped {
    pub id: String,
    pub headword: Option<String>,
    pub kind: SkipKind,
    pub reason: String,
    pub dropped: Vec<DroppedWord>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SynsetResult {
    Analyzed(Analyzed),
    Skipped(Skipped),
}

impl SynsetResult {
    pub fn id(&self) -> &str {
        match self {
            SynsetResult::Analyzed(a) => &a.report.id,
            SynsetResult::Skipped(s) => &s.id,
        }
    }

    pub fn analyzed(&self) -> Option<&Analyzed> {
        match self {
            SynsetResult::Analyzed(a) => Some(a),
            SynsetResult::Skipped(_) => None,
        }
    }

    pub fn interior_size(&self) -> Option<usize> {
        self.analyzed().map(|a| a.report.interior.len())
    }
}

/// Resolves and scores one synset. Only a fail-mode lookup miss is an error;
/// every other problem becomes a [`Skipped`] result.
pub fn analyze_one(
    raw: &RawSynset,
    model: &EmbeddingModel,
    policy: &OovPolicy,
    options: &AnalysisOptions,
) -> Result<SynsetResult, ResolveError> {
    let outcome = resolve(raw, model, policy)?;
    let skip = |kind: SkipKind, reason: String, dropped: Vec<DroppedWord>| {
        SynsetResult::Skipped(Skipped {
            id: raw.id.clone(),
            headword: raw.headword.clone(),
            kind,
            reason,
            dropped,
        })
    };
    let Some(resolved) = outcome.resolved else {
        let (kind, reason) = match outcome.status {
            ResolutionStatus::Skipped => (
                SkipKind::OutOfVocabulary,
                format!("{} word(s) out of vocabulary", outcome.dropped.len()),
            ),
            _ => (
                SkipKind::TooSmallAfterFilter,
                format!(
                    "{} of {} words resolved; at least 3 are required",
                    raw.words.len() - outcome.dropped.len(),
                    raw.words.len()
                ),
            ),
        };
        return Ok(skip(kind, reason, outcome.dropped));
    };
    Ok(match analyze_synset(&resolved, options) {
        Ok(report) => SynsetResult::Analyzed(Analyzed {
            headword: raw.headword.clone(),
            dropped: outcome.dropped,
            report,
        }),
        Err(e @ GeometryError::TooLarge { .. }) => {
            skip(SkipKind::TooLarge, e.to_string(), outcome.dropped)
        }
        Err(e) => skip(SkipKind::DegenerateGeometry, e.to_string(), outcome.dropped),
    })
}

pub fn analyze_all(
    synsets: &[RawSynset],
    model: &EmbeddingModel,
    policy: &OovPolicy,
    options: &AnalysisOptions,
) -> Result<Vec<SynsetResult>, ResolveError> {
    synsets
        .par_iter()
        .map(|raw| analyze_one(raw, model, policy, options))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub total: usize,
    pub analyzed: usize,
    pub skipped: usize,
    /// Analyzed synsets with an empty interior.
    pub weak: usize,
}

impl Summary {
    pub fn of(results: &[SynsetResult]) -> Summary {
        let analyzed: Vec<&Analyzed> = results.iter().filter_map(SynsetResult::analyzed).collect();
        Summary {
            total: results.len(),
            analyzed: analyzed.len(),
            skipped: results.len() - analyzed.len(),
            weak: analyzed
                .iter()
                .filter(|a| a.report.interior.is_empty())
                .count(),
        }
    }
}

/// Analyzed synsets whose interior is empty.
pub fn weak_synsets(results: &[SynsetResult]) -> Vec<&Analyzed> {
    results
        .iter()
        .filter_map(SynsetResult::analyzed)
        .filter(|a| a.report.interior.is_empty())
        .collect()
}

/// One synset scored under two models.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub id: String,
    pub headword: Option<String>,
    pub sides: [SynsetResult; 2],
}

impl ComparisonRow {
    /// Interior sizes differ, or only one model could analyze the synset.
    pub fn differs(&self) -> bool {
        self.sides[0].interior_size() != self.sides[1].interior_size()
    }
}

pub fn compare(
    synsets: &[RawSynset],
    models: [&EmbeddingModel; 2],
    policy: &OovPolicy,
    options: &AnalysisOptions,
) -> Result<Vec<ComparisonRow>, ResolveError> {
    synsets
        .par_iter()
        .map(|raw| {
            Ok(ComparisonRow {
                id: raw.id.clone(),
                headword: raw.headword.clone(),
                sides: [
                    analyze_one(raw, models[0], policy, options)?,
                    analyze_one(raw, models[1], policy, options)?,
                ],
            })
        })
        .collect()
}

#[derive(Debug, Error)]
pub enum DumpError {
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("synset {synset:?} could not be analyzed ({status})")]
    NotResolved {
        synset: String,
        status: &'static str,
    },
    #[error("word {token:?} is not in synset {synset:?}")]
    UnknownWord { synset: String, token: String },
    #[error("word {token:?} of synset {synset:?} is not in the model")]
    WordDropped { synset: String, token: String },
    #[error("partition totals disagree with the rank computation for {token:?}")]
    Inconsistent { token: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartitionRow {
    pub first: Vec<String>,
    pub second: Vec<String>,
    pub outcome: PartitionOutcome,
}

/// Every partition for one focus word, with totals summed from the rows.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionDump {
    pub synset_id: String,
    pub n: usize,
    pub rows: Vec<PartitionRow>,
    pub totals: WordAttributes,
}

pub fn partition_dump(
    raw: &RawSynset,
    model: &EmbeddingModel,
    policy: &OovPolicy,
    options: &AnalysisOptions,
    focus_token: &str,
) -> Result<PartitionDump, DumpError> {
    if !raw.words.iter().any(|w| w == focus_token) {
        return Err(DumpError::UnknownWord {
            synset: raw.id.clone(),
            token: focus_token.to_owned(),
        });
    }
    let outcome = resolve(raw, model, policy)?;
    let resolved: ResolvedSynset = outcome.resolved.ok_or_else(|| DumpError::NotResolved {
        synset: raw.id.clone(),
        status: outcome.status.as_str(),
    })?;
    let focus = resolved
        .position(focus_token)
        .ok_or_else(|| DumpError::WordDropped {
            synset: raw.id.clone(),
            token: focus_token.to_owned(),
        })?;

    let outcomes = partition_outcomes(&resolved, focus, options)?;
    let rest = resolved.remaining(focus);
    let m = rest.len();
    let token = |j: usize| resolved.words()[rest[j]].token.clone();
    let rows: Vec<PartitionRow> = outcomes
        .into_iter()
        .map(|o| PartitionRow {
            first: o.partition.first_block(m).map(token).collect(),
            second: o.partition.second_block(m).map(token).collect(),
            outcome: o,
        })
        .collect();

    let word = &resolved.words()[focus];
    let totals = WordAttributes {
        token: word.token.clone(),
        model_key: word.model_key.clone(),
        rank_doubled: rows.iter().map(|r| i64::from(r.outcome.r_doubled)).sum(),
        centrality: rows.iter().map(|r| r.outcome.centrality_delta).sum(),
        in_interior: rows.iter().all(|r| r.outcome.approaches(options.eps)),
        partition_count: rows.len() as u64,
    };
    let check = rank_and_centrality(&resolved, focus, options)?;
    if check.rank_doubled != totals.rank_doubled
        || (check.centrality - totals.centrality).abs() > 1e-9
        || check.in_interior != totals.in_interior
        || check.partition_count != totals.partition_count
    {
        return Err(DumpError::Inconsistent {
            token: totals.token,
        });
    }
    Ok(PartitionDump {
        synset_id: raw.id.clone(),
        n: resolved.len(),
        rows,
        totals,
    })
}
