//! In-memory embedding model with unit-length rows.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{GeometryError, ModelError};
use crate::vector;

/// Vocabulary plus a dense `len × dim` matrix of normalized `f32` rows.
///
/// Immutable once built; share it freely between readers.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingModel {
    dim: usize,
    words: Vec<String>,
    vectors: Vec<f32>,
    index: BTreeMap<String, usize>,
}

/// A borrowed row of an [`EmbeddingModel`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WordVector<'a> {
    pub token: &'a str,
    pub components: &'a [f32],
}

impl WordVector<'_> {
    pub fn cosine(&self, other: &WordVector<'_>) -> Result<f64, GeometryError> {
        vector::cosine(self.components, other.components)
    }
}

impl EmbeddingModel {
    /// Builds a model from `(token, components)` rows, normalizing each row.
    pub fn from_rows<I, S, V>(dim: usize, rows: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = (S, V)>,
        S: Into<String>,
        V: AsRef<[f32]>,
    {
        let mut builder = ModelBuilder::new(dim)?;
        for (token, components) in rows {
            builder.push(token, components.as_ref())?;
        }
        Ok(builder.finish())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Tokens in row order.
    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn row(&self, index: usize) -> &[f32] {
        &self.vectors[index * self.dim..(index + 1) * self.dim]
    }

    pub fn index_of(&self, token: &str) -> Option<usize> {
        self.index.get(token).copied()
    }

    pub fn contains(&self, token: &str) -> bool {
        self.index.contains_key(token)
    }

    /// The normalized row for `token`. Lookup is exact and case-sensitive.
    pub fn vector(&self, token: &str) -> Option<WordVector<'_>> {
        self.index_of(token).map(|i| WordVector {
            token: &self.words[i],
            components: self.row(i),
        })
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = WordVector<'_>> + '_ {
        self.words.iter().enumerate().map(|(i, token)| WordVector {
            token,
            components: self.row(i),
        })
    }
}

/// Incremental construction used by the file readers.
#[derive(Debug)]
pub struct ModelBuilder {
    dim: usize,
    words: Vec<String>,
    vectors: Vec<f32>,
    index: BTreeMap<String, usize>,
}

impl ModelBuilder {
    pub fn new(dim: usize) -> Result<Self, ModelError> {
        if dim == 0 {
            return Err(ModelError::ZeroDimension);
        }
        Ok(ModelBuilder {
            dim,
            words: Vec::new(),
            vectors: Vec::new(),
            index: BTreeMap::new(),
        })
    }

    pub fn with_capacity(dim: usize, rows: usize) -> Result<Self, ModelError> {
        let mut b = Self::new(dim)?;
        b.words.reserve(rows);
        b.vectors.reserve(rows.saturating_mul(dim));
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Appends one row, scaled to unit length. The original norm is discarded.
    pub fn push(&mut self, token: impl Into<String>, components: &[f32]) -> Result<(), ModelError> {
        let token = token.into();
        if token.is_empty() {
            return Err(ModelError::EmptyToken);
        }
        if components.len() != self.dim {
            return Err(ModelError::ComponentCount {
                token,
                expected: self.dim,
                found: components.len(),
            });
        }
        if let Some(position) = components.iter().position(|c| !c.is_finite()) {
            return Err(ModelError::NonFinite { token, position });
        }
        if self.index.contains_key(&token) {
            return Err(ModelError::DuplicateToken(token));
        }
        let norm = vector::norm(components);
        if norm <= 0.0 || !norm.is_finite() {
            return Err(ModelError::ZeroNorm(token));
        }
        self.vectors
            .extend(components.iter().map(|&c| (f64::from(c) / norm) as f32));
        self.index.insert(token.clone(), self.words.len());
        self.words.push(token);
        Ok(())
    }

    pub fn finish(self) -> EmbeddingModel {
        EmbeddingModel {
            dim: self.dim,
            words: self.words,
            vectors: self.vectors,
            index: self.index,
        }
    }
}
