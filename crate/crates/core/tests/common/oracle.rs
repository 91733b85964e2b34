//! From-scratch reference for partition outcomes.
//!
//! Walks every subset of the remaining words, keeps those that contain word 0
//! and leave the other block nonempty, and recomputes each block mean
//! directly. Shares no code with the library.

#![allow(dead_code)]

#[derive(Debug, Clone, PartialEq)]
pub struct OracleOutcome {
    pub mask: u32,
    pub sim: f64,
    pub sim1: f64,
    pub sim2: f64,
    pub r_doubled: i32,
    pub centrality_delta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleWord {
    pub rank_doubled: i64,
    pub centrality: f64,
    pub in_interior: bool,
    pub partitions: u64,
}

fn mean(vectors: &[&[f32]]) -> Option<Vec<f64>> {
    let dim = vectors[0].len();
    let mut acc = vec![0.0f64; dim];
    for v in vectors {
        for k in 0..dim {
            acc[k] += v[k] as f64;
        }
    }
    let len = acc.iter().map(|x| x * x).sum::<f64>().sqrt();
    if len <= 1e-12 {
        return None;
    }
    Some(acc.into_iter().map(|x| x / len).collect())
}

fn sim(a: &[&[f32]], b: &[&[f32]]) -> Option<f64> {
    let (ma, mb) = (mean(a)?, mean(b)?);
    let d: f64 = ma.iter().zip(&mb).map(|(x, y)| x * y).sum();
    Some(d.clamp(-1.0, 1.0))
}

fn sign(x: f64, eps: f64) -> i32 {
    if x.abs() <= eps {
        0
    } else if x > 0.0 {
        1
    } else {
        -1
    }
}

/// Outcomes for every split of `rows \ {focus}`, ordered by mask. `None` if any
/// block mean is degenerate.
pub fn outcomes(rows: &[Vec<f32>], focus: usize, eps: f64) -> Option<Vec<OracleOutcome>> {
    let v = rows[focus].as_slice();
    let rest: Vec<&[f32]> = rows
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != focus)
        .map(|(_, r)| r.as_slice())
        .collect();
    let m = rest.len();
    let mut out = Vec::new();
    for subset in 0u32..(1u32 << m) {
        let in_first = |j: usize| subset & (1 << j) != 0;
        if !in_first(0) || (0..m).all(in_first) {
            continue;
        }
        let s1: Vec<&[f32]> = (0..m).filter(|&j| in_first(j)).map(|j| rest[j]).collect();
        let s2: Vec<&[f32]> = (0..m).filter(|&j| !in_first(j)).map(|j| rest[j]).collect();
        let mut s1v = s1.clone();
        s1v.push(v);
        let mut s2v = s2.clone();
        s2v.push(v);
        let base = sim(&s1, &s2)?;
        let with1 = sim(&s1v, &s2)?;
        let with2 = sim(&s1, &s2v)?;
        out.push(OracleOutcome {
            mask: subset,
            sim: base,
            sim1: with1,
            sim2: with2,
            r_doubled: sign(with1 - base, eps) + sign(with2 - base, eps),
            centrality_delta: (with1 - base) + (with2 - base),
        });
    }
    Some(out)
}

pub fn word(rows: &[Vec<f32>], focus: usize, eps: f64) -> Option<OracleWord> {
    let outs = outcomes(rows, focus, eps)?;
    Some(OracleWord {
        rank_doubled: outs.iter().map(|o| o.r_doubled as i64).sum(),
        centrality: outs.iter().map(|o| o.centrality_delta).sum(),
        in_interior: outs
            .iter()
            .all(|o| o.sim1 - o.sim > eps && o.sim2 - o.sim > eps),
        partitions: outs.len() as u64,
    })
}
