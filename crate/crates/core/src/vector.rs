//! Similarity primitives.
//!
//! Vectors are stored as `f32` and every sum or inner product accumulates in
//! `f64`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::GeometryError;

/// A vector sum whose norm is at or below this is treated as having no direction.
pub const DEGENERATE_NORM: f64 = 1e-12;

pub(crate) fn dot(a: &[f32], b: &[f32]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| f64::from(x) * f64::from(y))
        .sum()
}

pub(crate) fn norm(a: &[f32]) -> f64 {
    libm::sqrt(dot(a, a))
}

pub(crate) fn clamp_unit(x: f64) -> f64 {
    x.clamp(-1.0, 1.0)
}

/// Cosine similarity `(a, b) / (|a| |b|)`, clamped to `[-1, 1]`.
///
/// Model rows are already unit length, so the division only removes the
/// `f32` rounding left in their norms.
pub fn cosine(a: &[f32], b: &[f32]) -> Result<f64, GeometryError> {
    if a.len() != b.len() {
        return Err(GeometryError::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let (na, nb) = (norm(a), norm(b));
    let smaller = na.min(nb);
    if smaller <= DEGENERATE_NORM {
        return Err(GeometryError::Degenerate { norm: smaller });
    }
    Ok(clamp_unit(dot(a, b) / (na * nb)))
}

/// Sum of `vectors` rescaled to unit length.
pub fn normalized_mean(vectors: &[&[f32]]) -> Result<Vec<f64>, GeometryError> {
    let first = vectors.first().ok_or(GeometryError::EmptySet)?;
    let dim = first.len();
    let mut sum = vec![0.0f64; dim];
    for v in vectors {
        if v.len() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        for (s, &x) in sum.iter_mut().zip(v.iter()) {
            *s += f64::from(x);
        }
    }
    let norm = libm::sqrt(sum.iter().map(|x| x * x).sum());
    if norm <= DEGENERATE_NORM {
        return Err(GeometryError::Degenerate { norm });
    }
    // Normalize the average rather than the sum so that copies of one vector
    // give bit-identical means regardless of how many there are.
    let count = vectors.len() as f64;
    for s in &mut sum {
        *s /= count;
    }
    let avg_norm = libm::sqrt(sum.iter().map(|x| x * x).sum());
    for s in &mut sum {
        *s /= avg_norm;
    }
    Ok(sum)
}

/// Similarity of two word sets: the inner product of their normalized means.
pub fn set_similarity(a: &[&[f32]], b: &[&[f32]]) -> Result<f64, GeometryError> {
    let ma = normalized_mean(a)?;
    let mb = normalized_mean(b)?;
    if ma.len() != mb.len() {
        return Err(GeometryError::DimensionMismatch {
            expected: ma.len(),
            found: mb.len(),
        });
    }
    Ok(clamp_unit(ma.iter().zip(&mb).map(|(x, y)| x * y).sum()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const HALF_SQRT2: f64 = core::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn cosine_axis_cases() {
        assert_eq!(cosine(&[1.0, 0.0], &[1.0, 0.0]).unwrap(), 1.0);
        assert_eq!(cosine(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 0.0);
        assert_eq!(cosine(&[1.0, 0.0], &[-1.0, 0.0]).unwrap(), -1.0);
    }

    #[test]
    fn cosine_clamps_rounding_overshoot() {
        let a = [1.000_000_1f32, 0.0];
        assert_eq!(cosine(&a, &a).unwrap(), 1.0);
    }

    #[test]
    fn cosine_of_zero_vector() {
        assert!(matches!(
            cosine(&[0.0, 0.0], &[1.0, 0.0]),
            Err(GeometryError::Degenerate { .. })
        ));
    }

    #[test]
    fn cosine_dimension_mismatch() {
        assert_eq!(
            cosine(&[1.0, 0.0], &[1.0, 0.0, 0.0]),
            Err(GeometryError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn normalized_mean_cases() {
        assert_eq!(normalized_mean(&[&[1.0, 0.0]]).unwrap(), vec![1.0, 0.0]);
        let m = normalized_mean(&[&[1.0, 0.0], &[0.0, 1.0]]).unwrap();
        assert!((m[0] - HALF_SQRT2).abs() < 1e-15);
        assert!((m[1] - HALF_SQRT2).abs() < 1e-15);
        assert!(matches!(
            normalized_mean(&[&[1.0, 0.0], &[-1.0, 0.0]]),
            Err(GeometryError::Degenerate { .. })
        ));
        assert_eq!(normalized_mean(&[]), Err(GeometryError::EmptySet));
    }

    #[test]
    fn set_similarity_cases() {
        assert_eq!(set_similarity(&[&[1.0, 0.0]], &[&[1.0, 0.0]]).unwrap(), 1.0);
        assert_eq!(set_similarity(&[&[1.0, 0.0]], &[&[0.0, 1.0]]).unwrap(), 0.0);
        let s = set_similarity(&[&[1.0, 0.0], &[0.0, 1.0]], &[&[1.0, 0.0]]).unwrap();
        assert!((s - HALF_SQRT2).abs() < 1e-15);
    }

    #[test]
    fn set_similarity_propagates_degenerate() {
        assert!(matches!(
            set_similarity(&[&[1.0, 0.0], &[-1.0, 0.0]], &[&[1.0, 0.0]]),
            Err(GeometryError::Degenerate { .. })
        ));
    }
}
