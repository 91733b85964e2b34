//! Interior, rank and centrality of the words of a synset.
//!
//! For a focus word `v` and a split `S \ {v} = S1 ⊔ S2` three similarities are
//! measured between block means: `sim = sim{S1, S2}`, `sim1 = sim{S1 ∪ v, S2}`
//! and `sim2 = sim{S1, S2 ∪ v}`. The split's rank contribution is
//! `(sgn(sim1 - sim) + sgn(sim2 - sim)) / 2`, kept here as the doubled integer
//! so that half values stay exact, and its centrality contribution is
//! `(sim1 - sim) + (sim2 - sim)`. A word is interior when both differences
//! exceed `eps` on every split, which happens exactly when its doubled rank
//! equals twice the number of splits.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::GeometryError;
use crate::partition::{enumerate_partitions, partition_count, sgn_eps, Partition, MAX_ELEMENTS};
use crate::vector::{self, clamp_unit, DEGENERATE_NORM};

pub const DEFAULT_EPS: f64 = 1e-9;
pub const DEFAULT_MAX_SYNSET_SIZE: usize = 16;
/// Hard ceiling on synset size, set by the width of partition masks.
pub const MAX_SUPPORTED_SIZE: usize = MAX_ELEMENTS + 1;

const UNIT_NORM_TOLERANCE: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisOptions {
    /// Dead band for comparing similarities; shared by rank and interior tests.
    pub eps: f64,
    /// Synsets larger than this are refused (partition count is `2^(n-2) - 1`).
    pub max_size: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            eps: DEFAULT_EPS,
            max_size: DEFAULT_MAX_SYNSET_SIZE,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynsetWord {
    pub token: String,
    /// The model key the token was resolved to, e.g. `бой_NOUN` for `бой`.
    pub model_key: String,
    pub vector: Vec<f32>,
}

/// A synset whose words all carry unit vectors of one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedSynset {
    id: String,
    words: Vec<SynsetWord>,
    source_size: usize,
}

impl ResolvedSynset {
    pub fn new(
        id: impl Into<String>,
        words: Vec<SynsetWord>,
        source_size: usize,
    ) -> Result<Self, GeometryError> {
        let id = id.into();
        let Some(first) = words.first() else {
            return Err(GeometryError::TooSmall { synset: id, n: 0 });
        };
        let dim = first.vector.len();
        let mut seen = BTreeSet::new();
        for w in &words {
            if !seen.insert(w.token.as_str()) {
                return Err(GeometryError::DuplicateToken(w.token.clone()));
            }
            if w.vector.len() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    found: w.vector.len(),
                });
            }
            let norm = vector::norm(&w.vector);
            if norm.is_nan() || (norm - 1.0).abs() >= UNIT_NORM_TOLERANCE {
                return Err(GeometryError::NotUnitNorm {
                    token: w.token.clone(),
                    norm,
                });
            }
        }
        Ok(ResolvedSynset {
            id,
            words,
            source_size,
        })
    }

    /// Builds a synset from raw vectors, normalizing each; the token doubles as model key.
    pub fn from_vectors<I, S>(id: impl Into<String>, words: I) -> Result<Self, GeometryError>
    where
        I: IntoIterator<Item = (S, Vec<f32>)>,
        S: Into<String>,
    {
        let mut out = Vec::new();
        for (token, mut v) in words {
            let token = token.into();
            let norm = vector::norm(&v);
            if norm <= DEGENERATE_NORM || !norm.is_finite() {
                return Err(GeometryError::Degenerate { norm });
            }
            for c in &mut v {
                *c = (f64::from(*c) / norm) as f32;
            }
            out.push(SynsetWord {
                model_key: token.clone(),
                token,
                vector: v,
            });
        }
        let n = out.len();
        Self::new(id, out, n)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn words(&self) -> &[SynsetWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Word count before out-of-vocabulary filtering.
    pub fn source_size(&self) -> usize {
        self.source_size
    }

    pub fn dim(&self) -> usize {
        self.words[0].vector.len()
    }

    pub fn position(&self, token: &str) -> Option<usize> {
        self.words.iter().position(|w| w.token == token)
    }

    /// Synset indices of the words other than `focus`, in order.
    pub fn remaining(&self, focus: usize) -> Vec<usize> {
        (0..self.words.len()).filter(|&i| i != focus).collect()
    }
}

/// Similarities and contributions of one partition for one focus word.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionOutcome {
    pub partition: Partition,
    pub sim: f64,
    pub sim1: f64,
    pub sim2: f64,
    /// Twice the rank contribution, in `-2..=2`.
    pub r_doubled: i8,
    pub centrality_delta: f64,
}

impl PartitionOutcome {
    pub fn rank_contribution(&self) -> f64 {
        f64::from(self.r_doubled) / 2.0
    }

    /// Both additions improve the similarity by more than `eps`.
    pub fn approaches(&self, eps: f64) -> bool {
        self.sim1 - self.sim > eps && self.sim2 - self.sim > eps
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WordAttributes {
    pub token: String,
    pub model_key: String,
    /// Twice the rank, exact.
    pub rank_doubled: i64,
    pub centrality: f64,
    pub in_interior: bool,
    pub partition_count: u64,
}

impl WordAttributes {
    pub fn rank(&self) -> f64 {
        self.rank_doubled as f64 / 2.0
    }

    /// Largest attainable doubled rank, reached exactly by interior words.
    pub fn max_rank_doubled(&self) -> i64 {
        2 * self.partition_count as i64
    }
}

/// Per-word attributes ordered by rank, then centrality (both descending), then token.
#[derive(Debug, Clone, PartialEq)]
pub struct SynsetReport {
    pub id: String,
    pub n: usize,
    pub source_size: usize,
    pub partition_count: u64,
    pub words: Vec<WordAttributes>,
    /// Interior tokens in lexicographic order.
    pub interior: Vec<String>,
}

/// Subset sums of the remaining words, split into a low-bit table and a
/// high-bit table so that any block sum costs one vector addition.
struct BlockSums {
    dim: usize,
    low_bits: usize,
    low: Vec<f64>,
    high: Vec<f64>,
}

impl BlockSums {
    fn new(rows: &[&[f32]], dim: usize) -> Self {
        let low_bits = rows.len() / 2;
        BlockSums {
            dim,
            low_bits,
            low: Self::table(&rows[..low_bits], dim),
            high: Self::table(&rows[low_bits..], dim),
        }
    }

    fn table(rows: &[&[f32]], dim: usize) -> Vec<f64> {
        let size = 1usize << rows.len();
        let mut t = vec![0.0f64; size * dim];
        for k in 1..size {
            let bit = k.trailing_zeros() as usize;
            let prev = k & (k - 1);
            let (done, rest) = t.split_at_mut(k * dim);
            let src = &done[prev * dim..(prev + 1) * dim];
            for ((dst, &s), &x) in rest[..dim].iter_mut().zip(src).zip(rows[bit]) {
                *dst = s + f64::from(x);
            }
        }
        t
    }

    fn sum_into(&self, mask: u32, out: &mut [f64]) {
        let lo = (mask as usize) & ((1usize << self.low_bits) - 1);
        let hi = (mask as usize) >> self.low_bits;
        let a = &self.low[lo * self.dim..(lo + 1) * self.dim];
        let b = &self.high[hi * self.dim..(hi + 1) * self.dim];
        for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
            *o = x + y;
        }
    }
}

/// Scores every partition for one focus word.
struct FocusScorer<'a> {
    synset: &'a ResolvedSynset,
    focus: usize,
    m: usize,
    sums: BlockSums,
    s1: Vec<f64>,
    s2: Vec<f64>,
}

impl<'a> FocusScorer<'a> {
    fn new(synset: &'a ResolvedSynset, focus: usize) -> Self {
        let dim = synset.dim();
        let rows: Vec<&[f32]> = synset
            .remaining(focus)
            .into_iter()
            .map(|i| synset.words[i].vector.as_slice())
            .collect();
        FocusScorer {
            synset,
            focus,
            m: rows.len(),
            sums: BlockSums::new(&rows, dim),
            s1: vec![0.0; dim],
            s2: vec![0.0; dim],
        }
    }

    fn degenerate(&self, mask: u32, norm: f64) -> GeometryError {
        GeometryError::DegeneratePartition {
            synset: self.synset.id.clone(),
            focus: self.synset.words[self.focus].token.clone(),
            mask,
            norm,
        }
    }

    fn outcome(&mut self, mask: u32, eps: f64) -> Result<PartitionOutcome, GeometryError> {
        let full = Partition::full_mask(self.m);
        self.sums.sum_into(mask, &mut self.s1);
        self.sums.sum_into(!mask & full, &mut self.s2);
        let v = &self.synset.words[self.focus].vector;
        let k1 = mask.count_ones() as f64;
        let k2 = self.m as f64 - k1;

        // Blocks are averaged before normalizing: same direction as the sum, but a
        // block of identical vectors averages to that vector exactly, whatever its size.
        // Accumulators: a·a, b·b, a·b, a'·a', b'·b', a'·b, a·b' where a, b are the
        // block averages and a', b' the averages with v added.
        let mut acc = [0.0f64; 7];
        for ((&s1, &s2), &x) in self.s1.iter().zip(&self.s2).zip(v) {
            let x = f64::from(x);
            let (a, b) = (s1 / k1, s2 / k2);
            let (av, bv) = ((s1 + x) / (k1 + 1.0), (s2 + x) / (k2 + 1.0));
            acc[0] += a * a;
            acc[1] += b * b;
            acc[2] += a * b;
            acc[3] += av * av;
            acc[4] += bv * bv;
            acc[5] += av * b;
            acc[6] += a * bv;
        }
        let norms = [
            libm::sqrt(acc[0]),
            libm::sqrt(acc[1]),
            libm::sqrt(acc[3]),
            libm::sqrt(acc[4]),
        ];
        let counts = [k1, k2, k1 + 1.0, k2 + 1.0];
        for (&n, &k) in norms.iter().zip(&counts) {
            if n * k <= DEGENERATE_NORM {
                return Err(self.degenerate(mask, n * k));
            }
        }
        let [n1, n2, n1v, n2v] = norms;
        let sim = clamp_unit(acc[2] / (n1 * n2));
        let sim1 = clamp_unit(acc[5] / (n1v * n2));
        let sim2 = clamp_unit(acc[6] / (n1 * n2v));
        let (d1, d2) = (sim1 - sim, sim2 - sim);
        Ok(PartitionOutcome {
            partition: Partition {
                focus: self.focus,
                mask,
            },
            sim,
            sim1,
            sim2,
            r_doubled: sgn_eps(d1, eps) + sgn_eps(d2, eps),
            centrality_delta: d1 + d2,
        })
    }
}

fn check_focus(synset: &ResolvedSynset, focus: usize) -> Result<(), GeometryError> {
    if focus >= synset.len() {
        return Err(GeometryError::FocusOutOfRange {
            index: focus,
            n: synset.len(),
        });
    }
    Ok(())
}

fn check_size(synset: &ResolvedSynset, max_size: usize) -> Result<(), GeometryError> {
    let n = synset.len();
    if n < 3 {
        return Err(GeometryError::TooSmall {
            synset: synset.id.clone(),
            n,
        });
    }
    let max = max_size.min(MAX_SUPPORTED_SIZE);
    if n > max {
        return Err(GeometryError::TooLarge {
            synset: synset.id.clone(),
            n,
            max,
        });
    }
    Ok(())
}

/// Scores a single partition.
pub fn partition_outcome(
    synset: &ResolvedSynset,
    partition: Partition,
    eps: f64,
) -> Result<PartitionOutcome, GeometryError> {
    check_size(synset, MAX_SUPPORTED_SIZE)?;
    check_focus(synset, partition.focus)?;
    let m = synset.len() - 1;
    if !partition.is_canonical(m) {
        return Err(GeometryError::InvalidPartition {
            mask: partition.mask,
            m,
        });
    }
    FocusScorer::new(synset, partition.focus).outcome(partition.mask, eps)
}

/// Scores every canonical partition of `S \ {focus}`, in enumeration order.
pub fn partition_outcomes(
    synset: &ResolvedSynset,
    focus: usize,
    options: &AnalysisOptions,
) -> Result<Vec<PartitionOutcome>, GeometryError> {
    check_size(synset, options.max_size)?;
    check_focus(synset, focus)?;
    let mut scorer = FocusScorer::new(synset, focus);
    enumerate_partitions(scorer.m)?
        .map(|mask| scorer.outcome(mask, options.eps))
        .collect()
}

fn summarize(
    synset: &ResolvedSynset,
    focus: usize,
    outcomes: &[PartitionOutcome],
    eps: f64,
) -> WordAttributes {
    let word = &synset.words[focus];
    WordAttributes {
        token: word.token.clone(),
        model_key: word.model_key.clone(),
        rank_doubled: outcomes.iter().map(|o| i64::from(o.r_doubled)).sum(),
        centrality: outcomes.iter().map(|o| o.centrality_delta).sum(),
        in_interior: outcomes.iter().all(|o| o.approaches(eps)),
        partition_count: partition_count(synset.len() - 1),
    }
}

/// Rank, centrality and interior membership of the word at `focus`.
pub fn rank_and_centrality(
    synset: &ResolvedSynset,
    focus: usize,
    options: &AnalysisOptions,
) -> Result<WordAttributes, GeometryError> {
    let outcomes = partition_outcomes(synset, focus, options)?;
    Ok(summarize(synset, focus, &outcomes, options.eps))
}

/// Whether adding the focus word to either block raises the block similarity
/// by more than `eps` on every partition.
///
/// All partitions are scored, so a degenerate split is reported even when an
/// earlier split already rules the word out.
pub fn interior_membership(
    synset: &ResolvedSynset,
    focus: usize,
    options: &AnalysisOptions,
) -> Result<bool, GeometryError> {
    let outcomes = partition_outcomes(synset, focus, options)?;
    Ok(outcomes.iter().all(|o| o.approaches(options.eps)))
}

fn report_order(a: &WordAttributes, b: &WordAttributes) -> Ordering {
    b.rank_doubled
        .cmp(&a.rank_doubled)
        .then_with(|| b.centrality.total_cmp(&a.centrality))
        .then_with(|| a.token.cmp(&b.token))
}

/// Attributes of every word, sorted for presentation.
pub fn analyze_synset(
    synset: &ResolvedSynset,
    options: &AnalysisOptions,
) -> Result<SynsetReport, GeometryError> {
    check_size(synset, options.max_size)?;
    let mut words = Vec::with_capacity(synset.len());
    for focus in 0..synset.len() {
        let outcomes = partition_outcomes(synset, focus, options)?;
        words.push(summarize(synset, focus, &outcomes, options.eps));
    }
    words.sort_by(report_order);
    let interior: BTreeSet<&str> = words
        .iter()
        .filter(|w| w.in_interior)
        .map(|w| w.token.as_str())
        .collect();
    Ok(SynsetReport {
        id: synset.id.clone(),
        n: synset.len(),
        source_size: synset.source_size,
        partition_count: partition_count(synset.len() - 1),
        interior: interior.into_iter().map(String::from).collect(),
        words,
    })
}
