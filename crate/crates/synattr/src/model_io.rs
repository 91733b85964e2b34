//! Readers and writers for the word2vec text and binary formats.
//!
//! Both formats start with an ASCII header `<vocab_size> <dimension>\n`. The
//! text format then has one `<token> <c1> ... <c_dim>` line per entry. The
//! binary format stores each entry as the token bytes, one space, and `dim`
//! little-endian `f32` values, optionally followed by a newline byte.
//!
//! Rows are normalized to unit length on load.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use synattr_core::{EmbeddingModel, ModelBuilder, ModelError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("malformed header: {0}")]
    Header(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("entry {entry}: {source}")]
    Entry {
        entry: usize,
        #[source]
        source: ModelError,
    },
    #[error("entry {entry}: token is not valid UTF-8")]
    InvalidToken { entry: usize },
    #[error("truncated model: header declares {expected} entries, only {found} complete")]
    Truncated { expected: usize, found: usize },
    #[error("line {line}: more entries than the {expected} declared in the header")]
    TrailingData { line: usize, expected: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModelFormat {
    Text,
    Binary,
    /// Binary for `.bin` files, text otherwise.
    #[default]
    Auto,
}

impl ModelFormat {
    pub fn resolve(self, path: &Path) -> ModelFormat {
        match self {
            ModelFormat::Auto => match path.extension().and_then(|e| e.to_str()) {
                Some(ext) if ext.eq_ignore_ascii_case("bin") => ModelFormat::Binary,
                _ => ModelFormat::Text,
            },
            other => other,
        }
    }
}

pub fn load_model(path: &Path, format: ModelFormat) -> Result<EmbeddingModel, LoadError> {
    match format.resolve(path) {
        ModelFormat::Binary => load_binary_model(path),
        _ => load_text_model(path),
    }
}

pub fn load_text_model(path: &Path) -> Result<EmbeddingModel, LoadError> {
    read_text(BufReader::new(File::open(path)?))
}

pub fn load_binary_model(path: &Path) -> Result<EmbeddingModel, LoadError> {
    read_binary(BufReader::new(File::open(path)?))
}

fn parse_header(line: &str) -> Result<(usize, usize), LoadError> {
    let fields: Vec<&str> = line.split_ascii_whitespace().collect();
    let [vocab, dim] = fields[..] else {
        return Err(LoadError::Header(format!(
            "expected `<vocab_size> <dimension>`, got {:?}",
            line.trim_end()
        )));
    };
    let parse = |s: &str, what: &str| -> Result<usize, LoadError> {
        match s.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(LoadError::Header(format!("invalid {what} {s:?}"))),
        }
    };
    Ok((parse(vocab, "vocabulary size")?, parse(dim, "dimension")?))
}

pub fn read_text<R: BufRead>(mut reader: R) -> Result<EmbeddingModel, LoadError> {
    let mut line = String::new();
    if reader.read_line(&mut line)? == 0 {
        return Err(LoadError::Header("empty file".into()));
    }
    let (vocab, dim) = parse_header(&line)?;
    let mut builder = ModelBuilder::with_capacity(dim, vocab)
        .map_err(|source| LoadError::Entry { entry: 0, source })?;
    let mut components = Vec::with_capacity(dim);
    let mut line_no = 1;

    loop {
        line.clear();
        if reader.read_line(&mut line)? == 0 {
            break;
        }
        line_no += 1;
        let mut fields = line.split_ascii_whitespace();
        let Some(token) = fields.next() else { continue };
        if builder.len() == vocab {
            return Err(LoadError::TrailingData {
                line: line_no,
                expected: vocab,
            });
        }
        components.clear();
        for field in fields {
            let value = field.parse::<f32>().map_err(|_| LoadError::Parse {
                line: line_no,
                message: format!("invalid component {field:?}"),
            })?;
            components.push(value);
        }
        if components.len() != dim {
            return Err(LoadError::Parse {
                line: line_no,
                message: format!("expected {dim} components, found {}", components.len()),
            });
        }
        let entry = builder.len() + 1;
        builder
            .push(token, &components)
            .map_err(|source| LoadError::Entry { entry, source })?;
    }

    if builder.len() < vocab {
        return Err(LoadError::Truncated {
            expected: vocab,
            found: builder.len(),
        });
    }
    Ok(builder.finish())
}

pub fn read_binary<R: BufRead>(mut reader: R) -> Result<EmbeddingModel, LoadError> {
    let mut header = Vec::new();
    reader.read_until(b'\n', &mut header)?;
    if header.is_empty() {
        return Err(LoadError::Header("empty file".into()));
    }
    let header = std::str::from_utf8(&header)
        .map_err(|_| LoadError::Header("header is not ASCII".into()))?;
    let (vocab, dim) = parse_header(header)?;
    let mut builder = ModelBuilder::with_capacity(dim, vocab)
        .map_err(|source| LoadError::Entry { entry: 0, source })?;
    let mut token = Vec::new();
    let mut raw = vec![0u8; dim * 4];
    let mut components = vec![0f32; dim];

    for entry in 1..=vocab {
        let truncated = || LoadError::Truncated {
            expected: vocab,
            found: entry - 1,
        };
        // Entries may be separated by a newline byte.
        loop {
            match reader.fill_buf()?.first() {
                Some(b'\n') => reader.consume(1),
                Some(_) => break,
                None => return Err(truncated()),
            }
        }
        token.clear();
        reader.read_until(b' ', &mut token)?;
        if token.pop() != Some(b' ') {
            return Err(truncated());
        }
        let word = std::str::from_utf8(&token).map_err(|_| LoadError::InvalidToken { entry })?;
        reader.read_exact(&mut raw).map_err(|e| match e.kind() {
            io::ErrorKind::UnexpectedEof => truncated(),
            _ => LoadError::Io(e),
        })?;
        for (c, bytes) in components.iter_mut().zip(raw.chunks_exact(4)) {
            *c = f32::from_le_bytes([bytes[0], bytes[1], bytes[2], bytes[3]]);
        }
        builder
            .push(word, &components)
            .map_err(|source| LoadError::Entry { entry, source })?;
    }
    Ok(builder.finish())
}

pub fn write_text<W: Write>(model: &EmbeddingModel, mut w: W) -> io::Result<()> {
    writeln!(w, "{} {}", model.len(), model.dim())?;
    for row in model.iter() {
        w.write_all(row.token.as_bytes())?;
        for c in row.components {
            write!(w, " {c}")?;
        }
        w.write_all(b"\n")?;
    }
    w.flush()
}

pub fn write_binary<W: Write>(model: &EmbeddingModel, mut w: W) -> io::Result<()> {
    writeln!(w, "{} {}", model.len(), model.dim())?;
    for row in model.iter() {
        w.write_all(row.token.as_bytes())?;
        w.write_all(b" ")?;
        for c in row.components {
            w.write_all(&c.to_le_bytes())?;
        }
        w.write_all(b"\n")?;
    }
    w.flush()
}

pub fn save_model(model: &EmbeddingModel, path: &Path, format: ModelFormat) -> io::Result<()> {
    let w = BufWriter::new(File::create(path)?);
    match format.resolve(path) {
        ModelFormat::Binary => write_binary(model, w),
        _ => write_text(model, w),
    }
}
