mod common;

use common::{fixture, unit_vector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use synattr::model_io::{read_binary, read_text, save_model, write_binary, write_text};
use synattr::{load_model, LoadError, ModelFormat};
use synattr_core::{EmbeddingModel, ModelError};

fn random_model(words: usize, dim: usize, seed: u64) -> EmbeddingModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    EmbeddingModel::from_rows(
        dim,
        (0..words).map(|i| (format!("w{i:02}"), unit_vector(&mut rng, dim))),
    )
    .unwrap()
}

fn assert_close(a: &EmbeddingModel, b: &EmbeddingModel, tol: f32) {
    assert_eq!(a.words(), b.words());
    assert_eq!(a.dim(), b.dim());
    for i in 0..a.len() {
        for (x, y) in a.row(i).iter().zip(b.row(i)) {
            assert!((x - y).abs() <= tol, "row {i}: {x} vs {y}");
        }
    }
}

#[test]
fn text_and_binary_round_trip() {
    let model = random_model(50, 10, 11);
    let dir = tempfile::tempdir().unwrap();
    for (name, format) in [("m.txt", ModelFormat::Text), ("m.bin", ModelFormat::Binary)] {
        let path = dir.path().join(name);
        save_model(&model, &path, format).unwrap();
        let loaded = load_model(&path, ModelFormat::Auto).unwrap();
        assert_close(&model, &loaded, 1e-6);
    }
}

#[test]
fn in_memory_round_trip_preserves_non_ascii_tokens() {
    let model = EmbeddingModel::from_rows(
        3,
        [
            ("битва", vec![1.0, 2.0, 2.0]),
            ("сражение", vec![0.0, -3.0, 4.0]),
        ],
    )
    .unwrap();
    let mut text = Vec::new();
    write_text(&model, &mut text).unwrap();
    assert_close(&model, &read_text(text.as_slice()).unwrap(), 1e-6);
    let mut bin = Vec::new();
    write_binary(&model, &mut bin).unwrap();
    assert_close(&model, &read_binary(bin.as_slice()).unwrap(), 0.0);
}

#[test]
fn duplicate_token_fixtures() {
    for name in ["duplicate_token.txt", "duplicate_token.bin"] {
        match load_model(&fixture(name), ModelFormat::Auto) {
            Err(LoadError::Entry {
                source: ModelError::DuplicateToken(t),
                ..
            }) => assert_eq!(t, "alpha"),
            other => panic!("{name}: {other:?}"),
        }
    }
}

#[test]
fn truncation_fixtures() {
    for name in ["truncated.txt", "truncated.bin"] {
        match load_model(&fixture(name), ModelFormat::Auto) {
            Err(LoadError::Truncated {
                expected: 3,
                found: 2,
            }) => {}
            other => panic!("{name}: {other:?}"),
        }
    }
}

#[test]
fn fixture_model_loads_normalized() {
    let model = load_model(&fixture("model.txt"), ModelFormat::Text).unwrap();
    assert_eq!(model.len(), 25);
    assert_eq!(model.dim(), 4);
    for i in 0..model.len() {
        let norm: f64 = model
            .row(i)
            .iter()
            .map(|&x| (x as f64) * (x as f64))
            .sum::<f64>()
            .sqrt();
        assert!((norm - 1.0).abs() < 1e-6);
    }
}
