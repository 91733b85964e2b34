mod common;

use std::cmp::Ordering;

use common::{fixture, oracle, path_str, stdout, synattr};
use serde_json::Value;
use synattr::render::fixed;
use synattr_core::DEFAULT_EPS;

fn golden_text() -> String {
    std::fs::read_to_string(fixture("analyze_golden.json")).unwrap()
}

fn run_analyze(synsets: &str) -> String {
    let out = synattr(&[
        "analyze",
        "--model",
        path_str(&fixture("model.txt")),
        "--synsets",
        path_str(&fixture(synsets)),
        "--output",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    stdout(&out)
}

#[test]
fn cli_output_is_byte_identical_to_golden() {
    let golden = golden_text();
    assert_eq!(run_analyze("synsets.tsv"), golden);
    assert_eq!(run_analyze("synsets.tsv"), golden);
    assert_eq!(run_analyze("synsets.jsonl"), golden);
}

#[test]
fn golden_values_agree_with_naive_oracle() {
    let model = synattr::load_text_model(&fixture("model.txt")).unwrap();
    let golden: Value = serde_json::from_str(&golden_text()).unwrap();
    let synsets = golden["synsets"].as_array().unwrap();
    assert_eq!(synsets.len(), 4);

    for synset in synsets {
        let id = synset["id"].as_str().unwrap();
        let words = synset["words"].as_array().unwrap();
        let rows: Vec<Vec<f32>> = words
            .iter()
            .map(|w| {
                let key = w["model_key"].as_str().unwrap();
                model.vector(key).unwrap().components.to_vec()
            })
            .collect();
        let n = rows.len();
        assert_eq!(synset["n"].as_u64().unwrap() as usize, n);
        assert_eq!(
            synset["partition_count"].as_u64().unwrap(),
            (1u64 << (n - 2)) - 1
        );

        let mut expected = Vec::new();
        for (i, w) in words.iter().enumerate() {
            let token = w["token"].as_str().unwrap().to_owned();
            let o = oracle::word(&rows, i, DEFAULT_EPS).expect("non-degenerate fixture");
            assert_eq!(
                (w["rank"].as_f64().unwrap() * 2.0) as i64,
                o.rank_doubled,
                "{id}/{token} rank"
            );
            let rendered: f64 = fixed(o.centrality, 4).parse().unwrap();
            assert_eq!(
                w["centrality"].as_f64().unwrap(),
                rendered,
                "{id}/{token} centrality"
            );
            assert_eq!(
                w["in_interior"].as_bool().unwrap(),
                o.in_interior,
                "{id}/{token} interior"
            );
            expected.push((token, o));
        }

        expected.sort_by(|(ta, a), (tb, b)| {
            b.rank_doubled
                .cmp(&a.rank_doubled)
                .then(
                    b.centrality
                        .partial_cmp(&a.centrality)
                        .unwrap_or(Ordering::Equal),
                )
                .then(ta.cmp(tb))
        });
        let order: Vec<&str> = words.iter().map(|w| w["token"].as_str().unwrap()).collect();
        let oracle_order: Vec<&str> = expected.iter().map(|(t, _)| t.as_str()).collect();
        assert_eq!(order, oracle_order, "{id} order");

        let mut interior: Vec<&str> = expected
            .iter()
            .filter(|(_, o)| o.in_interior)
            .map(|(t, _)| t.as_str())
            .collect();
        interior.sort();
        let golden_interior: Vec<&str> = synset["interior"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t.as_str().unwrap())
            .collect();
        assert_eq!(golden_interior, interior, "{id} interior");
    }

    let skipped = golden["skipped"].as_array().unwrap();
    assert_eq!(skipped.len(), 1);
    assert_eq!(skipped[0]["id"], "s4");
    assert_eq!(skipped[0]["status"], "too-small-after-filter");
    assert_eq!(golden["synsets"][2]["dropped"][0]["token"], "speedy");
}
