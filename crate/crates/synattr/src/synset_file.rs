//! Synset definition files.
//!
//! TSV: one synset per line, `<id>\t<headword>\t<word1>|<word2>|...`, with an
//! empty headword field allowed. JSONL: one object per line with `id`,
//! optional `headword`, and a `words` array. Blank lines and, in TSV, lines
//! starting with `#` are ignored.

use std::collections::HashSet;
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use serde::Deserialize;
use synattr_core::{RawSynset, RawSynsetError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SynsetFileError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: RawSynsetError,
    },
    #[error("line {line}: duplicate synset id {id:?}")]
    DuplicateId { line: usize, id: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SynsetFormat {
    Tsv,
    Jsonl,
}

impl SynsetFormat {
    /// JSONL for `.jsonl`/`.json` files, TSV otherwise.
    pub fn from_path(path: &Path) -> SynsetFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("jsonl") || e.eq_ignore_ascii_case("json") => {
                SynsetFormat::Jsonl
            }
            _ => SynsetFormat::Tsv,
        }
    }
}

pub fn parse_synsets(path: &Path, format: SynsetFormat) -> Result<Vec<RawSynset>, SynsetFileError> {
    let reader = BufReader::new(File::open(path)?);
    match format {
        SynsetFormat::Tsv => read_tsv(reader),
        SynsetFormat::Jsonl => read_jsonl(reader),
    }
}

struct Collector {
    seen: HashSet<String>,
    out: Vec<RawSynset>,
}

impl Collector {
    fn new() -> Self {
        Collector {
            seen: HashSet::new(),
            out: Vec::new(),
        }
    }

    fn add(
        &mut self,
        line: usize,
        id: String,
        headword: Option<String>,
        words: Vec<String>,
    ) -> Result<(), SynsetFileError> {
        let synset = RawSynset::new(id, headword, words)
            .map_err(|source| SynsetFileError::Invalid { line, source })?;
        if !self.seen.insert(synset.id.clone()) {
            return Err(SynsetFileError::DuplicateId {
                line,
                id: synset.id,
            });
        }
        self.out.push(synset);
        Ok(())
    }
}

pub fn read_tsv<R: BufRead>(reader: R) -> Result<Vec<RawSynset>, SynsetFileError> {
    let mut synsets = Collector::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [id, headword, words] = fields[..] else {
            return Err(SynsetFileError::Malformed {
                line: line_no,
                message: format!("expected 3 tab-separated fields, found {}", fields.len()),
            });
        };
        let words: Vec<String> = if words.trim().is_empty() {
            Vec::new()
        } else {
            words.split('|').map(|w| w.trim().to_owned()).collect()
        };
        let headword = Some(headword.trim().to_owned());
        synsets.add(line_no, id.trim().to_owned(), headword, words)?;
    }
    Ok(synsets.out)
}

#[derive(Deserialize)]
struct JsonSynset {
    id: String,
    #[serde(default)]
    headword: Option<String>,
    words: Vec<String>,
}

pub fn read_jsonl<R: BufRead>(reader: R) -> Result<Vec<RawSynset>, SynsetFileError> {
    let mut synsets = Collector::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed: JsonSynset =
            serde_json::from_str(&line).map_err(|e| SynsetFileError::Malformed {
                line: line_no,
                message: e.to_string(),
            })?;
        synsets.add(line_no, parsed.id, parsed.headword, parsed.words)?;
    }
    Ok(synsets.out)
}
