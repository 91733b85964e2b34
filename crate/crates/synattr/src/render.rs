//! Table, CSV and JSON renderings of command results.
//!
//! JSON is the machine format. Its layout is fixed so that identical inputs
//! give byte-identical output: keys appear in declaration order, centrality is
//! printed with 4 decimals, similarities with 6, and ranks as integers or with
//! a trailing `.5`.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::value::RawValue;
use synattr_core::{DroppedWord, WordAttributes};

use crate::analysis::{
    weak_synsets, Analyzed, ComparisonRow, PartitionDump, Skipped, Summary, SynsetResult,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

/// `x` with `decimals` places; negative zero prints without a sign.
pub fn fixed(x: f64, decimals: usize) -> String {
    let s = format!("{x:.decimals$}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_owned()
    } else {
        s
    }
}

/// A doubled rank as a decimal: `6` → `3`, `3` → `1.5`, `-1` → `-0.5`.
pub fn rank_text(doubled: i64) -> String {
    let sign = if doubled < 0 { "-" } else { "" };
    let abs = doubled.unsigned_abs();
    if abs.is_multiple_of(2) {
        format!("{sign}{}", abs / 2)
    } else {
        format!("{sign}{}.5", abs / 2)
    }
}

fn raw(text: String) -> Box<RawValue> {
    RawValue::from_string(text).expect("formatted numbers are valid JSON")
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report structures serialize");
    s.push('\n');
    s
}

fn interior_mark(w: &WordAttributes) -> &'static str {
    if w.in_interior {
        "+"
    } else {
        "-"
    }
}

#[derive(Serialize)]
struct WordJson<'a> {
    token: &'a str,
    model_key: &'a str,
    rank: Box<RawValue>,
    centrality: Box<RawValue>,
    in_interior: bool,
}

impl<'a> From<&'a WordAttributes> for WordJson<'a> {
    fn from(w: &'a WordAttributes) -> Self {
        WordJson {
            token: &w.token,
            model_key: &w.model_key,
            rank: raw(rank_text(w.rank_doubled)),
            centrality: raw(fixed(w.centrality, 4)),
            in_interior: w.in_interior,
        }
    }
}

#[derive(Serialize)]
struct DroppedJson<'a> {
    token: &'a str,
    reason: String,
}

fn dropped_json(d: &[DroppedWord]) -> Vec<DroppedJson<'_>> {
    d.iter()
        .map(|d| DroppedJson {
            token: &d.token,
            reason: d.reason.to_string(),
        })
        .collect()
}

#[derive(Serialize)]
struct SynsetJson<'a> {
    id: &'a str,
    headword: Option<&'a str>,
    n: usize,
    source_size: usize,
    partition_count: u64,
    interior: &'a [String],
    words: Vec<WordJson<'a>>,
    dropped: Vec<DroppedJson<'a>>,
}

impl<'a> From<&'a Analyzed> for SynsetJson<'a> {
    fn from(a: &'a Analyzed) -> Self {
        SynsetJson {
            id: &a.report.id,
            headword: a.headword.as_deref(),
            n: a.report.n,
            source_size: a.report.source_size,
            partition_count: a.report.partition_count,
            interior: &a.report.interior,
            words: a.report.words.iter().map(WordJson::from).collect(),
            dropped: dropped_json(&a.dropped),
        }
    }
}

#[derive(Serialize)]
struct SkippedJson<'a> {
    id: &'a str,
    headword: Option<&'a str>,
    status: &'static str,
    reason: &'a str,
    dropped: Vec<DroppedJson<'a>>,
}

impl<'a> From<&'a Skipped> for SkippedJson<'a> {
    fn from(s: &'a Skipped) -> Self {
        SkippedJson {
            id: &s.id,
            headword: s.headword.as_deref(),
            status: s.kind.as_str(),
            reason: &s.reason,
            dropped: dropped_json(&s.dropped),
        }
    }
}

#[derive(Serialize)]
struct SummaryJson {
    total: usize,
    analyzed: usize,
    skipped: usize,
    weak: usize,
}

impl From<Summary> for SummaryJson {
    fn from(s: Summary) -> Self {
        SummaryJson {
            total: s.total,
            analyzed: s.analyzed,
            skipped: s.skipped,
            weak: s.weak,
        }
    }
}

fn split(results: &[SynsetResult]) -> (Vec<&Analyzed>, Vec<&Skipped>) {
    let mut analyzed = Vec::new();
    let mut skipped = Vec::new();
    for r in results {
        match r {
            SynsetResult::Analyzed(a) => analyzed.push(a),
            SynsetResult::Skipped(s) => skipped.push(s),
        }
    }
    (analyzed, skipped)
}

fn headword_suffix(h: Option<&str>) -> String {
    h.map(|h| format!(" ({h})")).unwrap_or_default()
}

fn skipped_lines(out: &mut String, skipped: &[&Skipped]) {
    for s in skipped {
        let _ = writeln!(out, "skipped {} [{}]: {}", s.id, s.kind.as_str(), s.reason);
    }
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).expect("writing CSV to memory");
    String::from_utf8(w.into_inner().expect("flushing CSV to memory")).expect("CSV input is UTF-8")
}

pub fn render_analysis(results: &[SynsetResult], format: OutputFormat) -> String {
    let (analyzed, skipped) = split(results);
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                synsets: Vec<SynsetJson<'a>>,
                skipped: Vec<SkippedJson<'a>>,
                summary: SummaryJson,
            }
            to_json(&Out {
                synsets: analyzed.iter().map(|a| SynsetJson::from(*a)).collect(),
                skipped: skipped.iter().map(|s| SkippedJson::from(*s)).collect(),
                summary: Summary::of(results).into(),
            })
        }
        OutputFormat::Csv => csv_string(|w| {
            w.write_record([
                "synset",
                "headword",
                "token",
                "model_key",
                "rank",
                "centrality",
                "in_interior",
            ])?;
            for a in &analyzed {
                for word in &a.report.words {
                    w.write_record([
                        a.report.id.as_str(),
                        a.headword.as_deref().unwrap_or(""),
                        &word.token,
                        &word.model_key,
                        &rank_text(word.rank_doubled),
                        &fixed(word.centrality, 4),
                        if word.in_interior { "true" } else { "false" },
                    ])?;
                }
            }
            Ok(())
        }),
        OutputFormat::Table => {
            let mut out = String::new();
            for a in &analyzed {
                let r = &a.report;
                let _ = writeln!(
                    out,
                    "synset {}{}  n={}/{}  |IntS|={}  partitions per word={}",
                    r.id,
                    headword_suffix(a.headword.as_deref()),
                    r.n,
                    r.source_size,
                    r.interior.len(),
                    r.partition_count
                );
                let width = r
                    .words
                    .iter()
                    .map(|w| w.token.chars().count())
                    .max()
                    .unwrap_or(0)
                    .max(5);
                let _ = writeln!(
                    out,
                    "  {:<width$}  {:>6}  {:>10}  IntS",
                    "token", "rank", "centrality"
                );
                for w in &r.words {
                    let _ = writeln!(
                        out,
                        "  {:<width$}  {:>6}  {:>10}  {}",
                        w.token,
                        rank_text(w.rank_doubled),
                        fixed(w.centrality, 4),
                        interior_mark(w)
                    );
                }
                for d in &a.dropped {
                    let _ = writeln!(out, "  dropped {}: {}", d.token, d.reason);
                }
                out.push('\n');
            }
            skipped_lines(&mut out, &skipped);
            let s = Summary::of(results);
            let _ = writeln!(
                out,
                "analyzed {} of {} synsets ({} skipped)",
                s.analyzed, s.total, s.skipped
            );
            out
        }
    }
}

pub fn render_partitions(dump: &PartitionDump, format: OutputFormat) -> String {
    let t = &dump.totals;
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                index: usize,
                s1: &'a [String],
                s2: &'a [String],
                sim: Box<RawValue>,
                sim1: Box<RawValue>,
                sim2: Box<RawValue>,
                delta_rank: Box<RawValue>,
                delta_centrality: Box<RawValue>,
            }
            #[derive(Serialize)]
            struct Totals {
                rank: Box<RawValue>,
                centrality: Box<RawValue>,
                in_interior: bool,
                partition_count: u64,
            }
            #[derive(Serialize)]
            struct Out<'a> {
                synset: &'a str,
                token: &'a str,
                model_key: &'a str,
                n: usize,
                partitions: Vec<Row<'a>>,
                totals: Totals,
            }
            to_json(&Out {
                synset: &dump.synset_id,
                token: &t.token,
                model_key: &t.model_key,
                n: dump.n,
                partitions: dump
                    .rows
                    .iter()
                    .enumerate()
                    .map(|(i, r)| Row {
                        index: i + 1,
                        s1: &r.first,
                        s2: &r.second,
                        sim: raw(fixed(r.outcome.sim, 6)),
                        sim1: raw(fixed(r.outcome.sim1, 6)),
                        sim2: raw(fixed(r.outcome.sim2, 6)),
                        delta_rank: raw(rank_text(i64::from(r.outcome.r_doubled))),
                        delta_centrality: raw(fixed(r.outcome.centrality_delta, 6)),
                    })
                    .collect(),
                totals: Totals {
                    rank: raw(rank_text(t.rank_doubled)),
                    centrality: raw(fixed(t.centrality, 4)),
                    in_interior: t.in_interior,
                    partition_count: t.partition_count,
                },
            })
        }
        OutputFormat::Csv => csv_string(|w| {
            w.write_record([
                "index",
                "s1",
                "s2",
                "sim",
                "sim1",
                "sim2",
                "delta_rank",
                "delta_centrality",
            ])?;
            for (i, r) in dump.rows.iter().enumerate() {
                w.write_record([
                    (i + 1).to_string(),
                    r.first.join("|"),
                    r.second.join("|"),
                    fixed(r.outcome.sim, 6),
                    fixed(r.outcome.sim1, 6),
                    fixed(r.outcome.sim2, 6),
                    rank_text(i64::from(r.outcome.r_doubled)),
                    fixed(r.outcome.centrality_delta, 6),
                ])?;
            }
            w.write_record([
                "total".to_owned(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                rank_text(t.rank_doubled),
                fixed(t.centrality, 4),
            ])
        }),
        OutputFormat::Table => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "synset {}, word {} ({}): {} partitions of the other {} words",
                dump.synset_id,
                t.token,
                t.model_key,
                dump.rows.len(),
                dump.n - 1
            );
            let blocks: Vec<(String, String)> = dump
                .rows
                .iter()
                .map(|r| (r.first.join(", "), r.second.join(", ")))
                .collect();
            let w1 = blocks
                .iter()
                .map(|b| b.0.chars().count())
                .max()
                .unwrap_or(0)
                .max(2);
            let w2 = blocks
                .iter()
                .map(|b| b.1.chars().count())
                .max()
                .unwrap_or(0)
                .max(2);
            let _ = writeln!(
                out,
                "  {:>3}  {:<w1$}  {:<w2$}  {:>9}  {:>9}  {:>9}  {:>5}  {:>11}",
                "#", "S1", "S2", "sim", "sim1", "sim2", "Δrank", "Δcentrality"
            );
            for (i, (r, (b1, b2))) in dump.rows.iter().zip(&blocks).enumerate() {
                let _ = writeln!(
                    out,
                    "  {:>3}  {:<w1$}  {:<w2$}  {:>9}  {:>9}  {:>9}  {:>5}  {:>11}",
                    i + 1,
                    b1,
                    b2,
                    fixed(r.outcome.sim, 6),
                    fixed(r.outcome.sim1, 6),
                    fixed(r.outcome.sim2, 6),
                    rank_text(i64::from(r.outcome.r_doubled)),
                    fixed(r.outcome.centrality_delta, 6)
                );
            }
            let _ = writeln!(
                out,
                "total: rank {}, centrality {}, IntS {}",
                rank_text(t.rank_doubled),
                fixed(t.centrality, 4),
                interior_mark(t)
            );
            out
        }
    }
}

#[derive(Serialize)]
struct SideJson<'a> {
    status: &'static str,
    n: Option<usize>,
    interior_size: Option<usize>,
    interior: &'a [String],
    /// Tokens in report order (rank, then centrality).
    ordered_words: Vec<&'a str>,
    reason: Option<&'a str>,
}

impl<'a> From<&'a SynsetResult> for SideJson<'a> {
    fn from(r: &'a SynsetResult) -> Self {
        match r {
            SynsetResult::Analyzed(a) => SideJson {
                status: "analyzed",
                n: Some(a.report.n),
                interior_size: Some(a.report.interior.len()),
                interior: &a.report.interior,
                ordered_words: a.report.words.iter().map(|w| w.token.as_str()).collect(),
                reason: None,
            },
            SynsetResult::Skipped(s) => SideJson {
                status: s.kind.as_str(),
                n: None,
                interior_size: None,
                interior: &[],
                ordered_words: Vec::new(),
                reason: Some(&s.reason),
            },
        }
    }
}

fn opt_text(x: Option<usize>) -> String {
    x.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}

/// `IntS = {...}, OutS = {...}` with words in report order.
fn interior_split(r: &SynsetResult) -> String {
    match r {
        SynsetResult::Analyzed(a) => {
            let (ins, outs): (Vec<&WordAttributes>, Vec<&WordAttributes>) =
                a.report.words.iter().partition(|w| w.in_interior);
            let names = |v: Vec<&WordAttributes>| {
                v.iter()
                    .map(|w| w.token.as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            format!("IntS = {{{}}}, OutS = {{{}}}", names(ins), names(outs))
        }
        SynsetResult::Skipped(s) => format!("not analyzed [{}]: {}", s.kind.as_str(), s.reason),
    }
}

pub fn render_comparison(
    rows: &[ComparisonRow],
    labels: [&str; 2],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                id: &'a str,
                headword: Option<&'a str>,
                differs: bool,
                results: [SideJson<'a>; 2],
            }
            #[derive(Serialize)]
            struct Totals {
                total: usize,
                differing: usize,
            }
            #[derive(Serialize)]
            struct Out<'a> {
                models: [&'a str; 2],
                rows: Vec<Row<'a>>,
                summary: Totals,
            }
            to_json(&Out {
                models: labels,
                rows: rows
                    .iter()
                    .map(|r| Row {
                        id: &r.id,
                        headword: r.headword.as_deref(),
                        differs: r.differs(),
                        results: [SideJson::from(&r.sides[0]), SideJson::from(&r.sides[1])],
                    })
                    .collect(),
                summary: Totals {
                    total: rows.len(),
                    differing: rows.iter().filter(|r| r.differs()).count(),
                },
            })
        }
        OutputFormat::Csv => csv_string(|w| {
            w.write_record([
                "synset",
                "headword",
                "model",
                "status",
                "n",
                "interior_size",
                "interior",
                "ordered_words",
                "differs",
            ])?;
            for r in rows {
                for (label, side) in labels.iter().zip(&r.sides) {
                    let j = SideJson::from(side);
                    w.write_record([
                        r.id.as_str(),
                        r.headword.as_deref().unwrap_or(""),
                        label,
                        j.status,
                        &opt_text(j.n),
                        &opt_text(j.interior_size),
                        &j.interior.join("|"),
                        &j.ordered_words.join("|"),
                        if r.differs() { "true" } else { "false" },
                    ])?;
                }
            }
            Ok(())
        }),
        OutputFormat::Table => {
            let mut out = String::new();
            for r in rows {
                let _ = writeln!(
                    out,
                    "{}synset {}{}",
                    if r.differs() { "* " } else { "  " },
                    r.id,
                    headword_suffix(r.headword.as_deref())
                );
                for (label, side) in labels.iter().zip(&r.sides) {
                    let n = side.analyzed().map(|a| a.report.n);
                    let _ = writeln!(
                        out,
                        "    {label}: n={} |IntS|={}  {}",
                        opt_text(n),
                        opt_text(side.interior_size()),
                        interior_split(side)
                    );
                }
            }
            let differing = rows.iter().filter(|r| r.differs()).count();
            let _ = writeln!(
                out,
                "{differing} of {} synsets differ in |IntS| (marked *)",
                rows.len()
            );
            out
        }
    }
}

pub fn render_audit(results: &[SynsetResult], format: OutputFormat) -> String {
    let weak = weak_synsets(results);
    let (_, skipped) = split(results);
    let summary = Summary::of(results);
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Weak<'a> {
                id: &'a str,
                headword: Option<&'a str>,
                n: usize,
                words: Vec<WordJson<'a>>,
            }
            #[derive(Serialize)]
            struct Out<'a> {
                weak: Vec<Weak<'a>>,
                skipped: Vec<SkippedJson<'a>>,
                summary: SummaryJson,
            }
            to_json(&Out {
                weak: weak
                    .iter()
                    .map(|a| Weak {
                        id: &a.report.id,
                        headword: a.headword.as_deref(),
                        n: a.report.n,
                        words: a.report.words.iter().map(WordJson::from).collect(),
                    })
                    .collect(),
                skipped: skipped.iter().map(|s| SkippedJson::from(*s)).collect(),
                summary: summary.into(),
            })
        }
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["synset", "headword", "n", "ordered_words"])?;
            for a in &weak {
                let words: Vec<&str> = a.report.words.iter().map(|w| w.token.as_str()).collect();
                w.write_record([
                    a.report.id.as_str(),
                    a.headword.as_deref().unwrap_or(""),
                    &a.report.n.to_string(),
                    &words.join("|"),
                ])?;
            }
            Ok(())
        }),
        OutputFormat::Table => {
            let mut out = String::new();
            for a in &weak {
                let words: Vec<String> = a
                    .report
                    .words
                    .iter()
                    .map(|w| {
                        format!(
                            "{} ({}, {})",
                            w.token,
                            rank_text(w.rank_doubled),
                            fixed(w.centrality, 4)
                        )
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "weak {}{}  n={}: {}",
                    a.report.id,
                    headword_suffix(a.headword.as_deref()),
                    a.report.n,
                    words.join(", ")
                );
            }
            skipped_lines(&mut out, &skipped);
            let _ = writeln!(
                out,
                "total {}, analyzed {}, skipped {}, weak {}",
                summary.total, summary.analyzed, summary.skipped, summary.weak
            );
            out
        }
    }
}
