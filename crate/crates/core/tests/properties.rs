//! Property tests for the similarity primitives and synset attributes.

mod common;

use proptest::prelude::*;
use synattr_core::{
    analyze_synset, cosine, enumerate_partitions, interior_membership, partition_outcome,
    partition_outcomes, set_similarity, AnalysisOptions, EmbeddingModel, Partition, ResolvedSynset,
};

fn raw_vector(dim: usize) -> impl Strategy<Value = Vec<f32>> {
    prop::collection::vec(-1.0f32..1.0, dim)
        .prop_filter("nonzero", |v| v.iter().map(|x| x * x).sum::<f32>() > 1e-3)
}

/// Raw vectors for a synset of `3..=7` words in `2..=6` dimensions.
fn synset_rows() -> impl Strategy<Value = Vec<Vec<f32>>> {
    (3usize..=7, 2usize..=6).prop_flat_map(|(n, dim)| prop::collection::vec(raw_vector(dim), n))
}

fn build(rows: &[Vec<f32>]) -> Option<ResolvedSynset> {
    ResolvedSynset::from_vectors(
        "p",
        rows.iter()
            .enumerate()
            .map(|(i, r)| (format!("w{i}"), r.clone())),
    )
    .ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cosine_and_set_similarity_are_symmetric(
        (a, b, c) in (2usize..8).prop_flat_map(|d| (raw_vector(d), raw_vector(d), raw_vector(d)))
    ) {
        prop_assert_eq!(cosine(&a, &b).unwrap(), cosine(&b, &a).unwrap());
        let left = [a.as_slice(), c.as_slice()];
        let right = [b.as_slice()];
        if let (Ok(x), Ok(y)) = (set_similarity(&left, &right), set_similarity(&right, &left)) {
            prop_assert_eq!(x, y);
            prop_assert!((-1.0..=1.0).contains(&x));
        }
    }

    #[test]
    fn singleton_sets_reduce_to_cosine(
        (a, b) in (2usize..8).prop_flat_map(|d| (raw_vector(d), raw_vector(d)))
    ) {
        let s = set_similarity(&[&a], &[&b]).unwrap();
        prop_assert!((s - cosine(&a, &b).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn load_normalization_is_scale_invariant(
        rows in prop::collection::vec(raw_vector(5), 1..6),
        scale in 1e-3f32..1e3,
    ) {
        let named = |k: f32| -> Vec<(String, Vec<f32>)> {
            rows.iter().enumerate()
                .map(|(i, r)| (format!("t{i}"), r.iter().map(|x| x * k).collect()))
                .collect()
        };
        let a = EmbeddingModel::from_rows(5, named(1.0)).unwrap();
        let b = EmbeddingModel::from_rows(5, named(scale)).unwrap();
        for (x, y) in a.iter().zip(b.iter()) {
            let norm: f64 = x.components.iter().map(|&c| f64::from(c) * f64::from(c)).sum::<f64>().sqrt();
            prop_assert!((norm - 1.0).abs() < 1e-5);
            for (p, q) in x.components.iter().zip(y.components) {
                prop_assert!((p - q).abs() < 1e-5);
            }
        }
    }

    #[test]
    fn interior_iff_maximal_rank_and_bounds_hold(rows in synset_rows()) {
        let Some(s) = build(&rows) else { return Ok(()) };
        let opts = AnalysisOptions::default();
        let Ok(report) = analyze_synset(&s, &opts) else { return Ok(()) };
        for w in &report.words {
            let max = 2 * w.partition_count as i64;
            prop_assert!(w.rank_doubled.abs() <= max);
            prop_assert!(w.centrality.abs() <= 4.0 * w.partition_count as f64);
            prop_assert_eq!(w.in_interior, w.rank_doubled == max);
            let focus = s.position(&w.token).unwrap();
            prop_assert_eq!(interior_membership(&s, focus, &opts).unwrap(), w.in_interior);
        }
        prop_assert_eq!(
            report.interior.len(),
            report.words.iter().filter(|w| w.in_interior).count()
        );
    }

    #[test]
    fn swapping_block_labels_swaps_sim1_and_sim2(rows in synset_rows(), pick in any::<prop::sample::Index>()) {
        let Some(s) = build(&rows) else { return Ok(()) };
        let m = s.len() - 1;
        let masks: Vec<u32> = enumerate_partitions(m).unwrap().collect();
        let mask = masks[pick.index(masks.len())];
        let Ok(orig) = partition_outcome(&s, Partition { focus: 0, mask }, 1e-9) else { return Ok(()) };

        // Reorder the remaining words so that the first member of the second
        // block comes first; the same split is then canonical with labels swapped.
        let rest: Vec<usize> = (1..s.len()).collect();
        let lead = (0..m).find(|j| mask >> j & 1 == 0).unwrap();
        let mut order = vec![0, rest[lead]];
        order.extend(rest.iter().copied().filter(|&i| i != rest[lead]));
        let mut swapped_mask = 0u32;
        for (new_j, &old) in order[1..].iter().enumerate() {
            if mask >> (old - 1) & 1 == 0 {
                swapped_mask |= 1 << new_j;
            }
        }
        let t = ResolvedSynset::new(
            "q",
            order.iter().map(|&i| s.words()[i].clone()).collect(),
            s.len(),
        ).unwrap();
        let swapped = partition_outcome(&t, Partition { focus: 0, mask: swapped_mask }, 1e-9).unwrap();
        prop_assert!((orig.sim - swapped.sim).abs() < 1e-12);
        prop_assert!((orig.sim1 - swapped.sim2).abs() < 1e-12);
        prop_assert!((orig.sim2 - swapped.sim1).abs() < 1e-12);
        prop_assert!((orig.centrality_delta - swapped.centrality_delta).abs() < 1e-12);
        prop_assert!(orig.centrality_delta.abs() <= 4.0);
    }

    #[test]
    fn permuting_words_permutes_rows_only(rows in synset_rows(), seed in any::<u64>()) {
        let Some(s) = build(&rows) else { return Ok(()) };
        let opts = AnalysisOptions::default();
        let Ok(base) = analyze_synset(&s, &opts) else { return Ok(()) };

        let mut order: Vec<usize> = (0..s.len()).collect();
        let mut state = seed;
        for i in (1..order.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let shuffled = ResolvedSynset::new(
            "p",
            order.iter().map(|&i| s.words()[i].clone()).collect(),
            s.len(),
        ).unwrap();
        let other = analyze_synset(&shuffled, &opts).unwrap();
        prop_assert_eq!(&base.interior, &other.interior);
        for w in &base.words {
            let o = other.words.iter().find(|x| x.token == w.token).unwrap();
            prop_assert_eq!(w.rank_doubled, o.rank_doubled);
            prop_assert!((w.centrality - o.centrality).abs() < 1e-9);
        }
    }

    #[test]
    fn per_partition_invariants(rows in synset_rows()) {
        let Some(s) = build(&rows) else { return Ok(()) };
        let eps = 1e-9;
        let Ok(outs) = partition_outcomes(&s, 0, &AnalysisOptions::default()) else { return Ok(()) };
        for o in outs {
            let recomputed = (o.sim1 - o.sim) + (o.sim2 - o.sim);
            prop_assert!((o.centrality_delta - recomputed).abs() <= 1e-12);
            prop_assert!((-2..=2).contains(&o.r_doubled));
            let sg = |x: f64| if x > eps { 1 } else if x < -eps { -1 } else { 0 };
            prop_assert_eq!(i32::from(o.r_doubled), sg(o.sim1 - o.sim) + sg(o.sim2 - o.sim));
        }
    }
}
