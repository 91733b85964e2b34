//! Command-line arguments and command drivers.

use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use synattr_core::geometry::MAX_SUPPORTED_SIZE;
use synattr_core::{
    AnalysisOptions, EmbeddingModel, OovMode, OovPolicy, DEFAULT_EPS, DEFAULT_MAX_SYNSET_SIZE,
};

use crate::analysis::{analyze_all, compare, partition_dump, Summary};
use crate::model_io::{load_model, ModelFormat};
use crate::render::{
    render_analysis, render_audit, render_comparison, render_partitions, OutputFormat,
};
use crate::synset_file::{parse_synsets, SynsetFormat};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FATAL: u8 = 1;
pub const EXIT_NOTHING_ANALYZED: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "synattr",
    version,
    about = "Synset interior, word rank and centrality over word2vec embeddings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank, centrality and interior membership for every word of every synset.
    Analyze(CommonArgs),
    /// Per-partition detail for one word of one synset.
    Partitions(PartitionsArgs),
    /// Score every synset under two models side by side.
    Compare(CommonArgs),
    /// List synsets with an empty interior.
    Audit(CommonArgs),
}

#[derive(Debug, Args)]
pub struct PartitionsArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Id of the synset to dump.
    #[arg(long)]
    pub synset_id: String,
    /// The word whose partitions are listed.
    #[arg(long)]
    pub word: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModelFormatArg {
    Auto,
    Text,
    Binary,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SynsetFormatArg {
    Tsv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OutputArg {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OovArg {
    DropWord,
    SkipSynset,
    Fail,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// word2vec model file; give it twice for `compare`.
    #[arg(long = "model", required = true)]
    pub models: Vec<PathBuf>,
    /// Model file format; `auto` treats `.bin` files as binary.
    #[arg(long, value_enum, default_value = "auto")]
    pub model_format: ModelFormatArg,
    /// Synset definition file.
    #[arg(long)]
    pub synsets: PathBuf,
    /// Synset file format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<SynsetFormatArg>,
    #[arg(long, value_enum, default_value = "table")]
    pub output: OutputArg,
    /// Tolerance below which similarity differences count as ties.
    #[arg(long, default_value_t = DEFAULT_EPS)]
    pub eps: f64,
    /// What to do with words missing from the model.
    #[arg(long, value_enum, default_value = "drop-word")]
    pub oov: OovArg,
    /// Comma-separated suffixes tried after an exact miss, e.g. `_NOUN,_ADJ`.
    #[arg(long, value_delimiter = ',')]
    pub tag_suffixes: Vec<String>,
    /// Also try the lowercase form of missing words.
    #[arg(long)]
    pub lowercase_fallback: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_SYNSET_SIZE)]
    pub max_synset_size: usize,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Validated settings shared by all commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub models: Vec<PathBuf>,
    pub model_format: ModelFormat,
    pub synsets: PathBuf,
    pub synset_format: SynsetFormat,
    pub options: AnalysisOptions,
    pub policy: OovPolicy,
    pub output: OutputFormat,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(args: &CommonArgs) -> Result<RunConfig> {
        ensure!(
            args.eps > 0.0 && args.eps.is_finite(),
            "--eps must be a positive number"
        );
        ensure!(
            (3..=MAX_SUPPORTED_SIZE).contains(&args.max_synset_size),
            "--max-synset-size must be between 3 and {MAX_SUPPORTED_SIZE}"
        );
        let mode = match args.oov {
            OovArg::DropWord => OovMode::DropWord,
            OovArg::SkipSynset => OovMode::SkipSynset,
            OovArg::Fail => OovMode::Fail,
        };
        let suffixes = args
            .tag_suffixes
            .iter()
            .map(|s| s.trim().to_owned())
            .filter(|s| !s.is_empty())
            .collect();
        Ok(RunConfig {
            models: args.models.clone(),
            model_format: match args.model_format {
                ModelFormatArg::Auto => ModelFormat::Auto,
                ModelFormatArg::Text => ModelFormat::Text,
                ModelFormatArg::Binary => ModelFormat::Binary,
            },
            synsets: args.synsets.clone(),
            synset_format: match args.format {
                Some(SynsetFormatArg::Tsv) => SynsetFormat::Tsv,
                Some(SynsetFormatArg::Jsonl) => SynsetFormat::Jsonl,
                None => SynsetFormat::from_path(&args.synsets),
            },
            options: AnalysisOptions {
                eps: args.eps,
                max_size: args.max_synset_size,
            },
            policy: OovPolicy::new(mode, suffixes, args.lowercase_fallback)?,
            output: match args.output {
                OutputArg::Table => OutputFormat::Table,
                OutputArg::Csv => OutputFormat::Csv,
                OutputArg::Json => OutputFormat::Json,
            },
            out: args.out.clone(),
        })
    }

    fn single_model(&self) -> Result<EmbeddingModel> {
        ensure!(
            self.models.len() == 1,
            "exactly one --model is required, got {}",
            self.models.len()
        );
        load(&self.models[0], self.model_format)
    }

    fn synset_list(&self) -> Result<Vec<synattr_core::RawSynset>> {
        parse_synsets(&self.synsets, self.synset_format)
            .with_context(|| format!("reading synsets from {}", self.synsets.display()))
    }
}

fn load(path: &Path, format: ModelFormat) -> Result<EmbeddingModel> {
    load_model(path, format).with_context(|| format!("loading model {}", path.display()))
}

/// Rendered report plus the process exit code and any warnings for stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub report: String,
    pub exit_code: u8,
    pub warnings: Vec<String>,
}

fn warnings_for(results: &[crate::analysis::SynsetResult]) -> Vec<String> {
    let mut out = Vec::new();
    for r in results {
        match r {
            crate::analysis::SynsetResult::Analyzed(a) => {
                for d in &a.dropped {
                    out.push(format!(
                        "synset {}: dropped {:?}: {}",
                        a.report.id, d.token, d.reason
                    ));
                }
            }
            crate::analysis::SynsetResult::Skipped(s) => {
                out.push(format!(
                    "synset {} skipped [{}]: {}",
                    s.id,
                    s.kind.as_str(),
                    s.reason
                ));
            }
        }
    }
    out
}

pub fn cmd_analyze(config: &RunConfig) -> Result<CommandOutput> {
    let model = config.single_model()?;
    let synsets = config.synset_list()?;
    let results = analyze_all(&synsets, &model, &config.policy, &config.options)?;
    let mut warnings = warnings_for(&results);
    let exit_code = if Summary::of(&results).analyzed == 0 {
        warnings.push("no synsets analyzed".into());
        EXIT_NOTHING_ANALYZED
    } else {
        EXIT_OK
    };
    Ok(CommandOutput {
        report: render_analysis(&results, config.output),
        exit_code,
        warnings,
    })
}

pub fn cmd_partitions(config: &RunConfig, synset_id: &str, word: &str) -> Result<CommandOutput> {
    let model = config.single_model()?;
    let synsets = config.synset_list()?;
    let Some(raw) = synsets.iter().find(|s| s.id == synset_id) else {
        bail!(
            "no synset with id {synset_id:?} in {}",
            config.synsets.display()
        );
    };
    let dump = partition_dump(raw, &model, &config.policy, &config.options, word)?;
    Ok(CommandOutput {
        report: render_partitions(&dump, config.output),
        exit_code: EXIT_OK,
        warnings: Vec::new(),
    })
}

fn model_labels(paths: &[PathBuf]) -> [String; 2] {
    let name = |p: &PathBuf| {
        p.file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| p.display().to_string())
    };
    let (a, b) = (name(&paths[0]), name(&paths[1]));
    if a == b {
        [format!("1:{a}"), format!("2:{b}")]
    } else {
        [a, b]
    }
}

pub fn cmd_compare(config: &RunConfig) -> Result<CommandOutput> {
    ensure!(
        config.models.len() == 2,
        "compare needs exactly two --model arguments, got {}",
        config.models.len()
    );
    let (first, second) = rayon::join(
        || load(&config.models[0], config.model_format),
        || load(&config.models[1], config.model_format),
    );
    let (first, second) = (first?, second?);
    let synsets = config.synset_list()?;
    let rows = compare(&synsets, [&first, &second], &config.policy, &config.options)?;
    let labels = model_labels(&config.models);

    let mut warnings = Vec::new();
    for (i, label) in labels.iter().enumerate() {
        let side: Vec<_> = rows.iter().map(|r| r.sides[i].clone()).collect();
        warnings.extend(
            warnings_for(&side)
                .into_iter()
                .map(|w| format!("{label}: {w}")),
        );
    }
    let any = rows
        .iter()
        .any(|r| r.sides.iter().any(|s| s.analyzed().is_some()));
    let exit_code = if any {
        EXIT_OK
    } else {
        warnings.push("no synsets analyzed".into());
        EXIT_NOTHING_ANALYZED
    };
    Ok(CommandOutput {
        report: render_comparison(&rows, [&labels[0], &labels[1]], config.output),
        exit_code,
        warnings,
    })
}

pub fn cmd_audit(config: &RunConfig) -> Result<CommandOutput> {
    let model = config.single_model()?;
    let synsets = config.synset_list()?;
    let results = analyze_all(&synsets, &model, &config.policy, &config.options)?;
    Ok(CommandOutput {
        report: render_audit(&results, config.output),
        exit_code: EXIT_OK,
        warnings: warnings_for(&results),
    })
}

/// Runs a parsed command line; returns the rendered output and the destination.
pub fn run(cli: &Cli) -> Result<(CommandOutput, Option<PathBuf>)> {
    let common = match &cli.command {
        Command::Analyze(a) | Command::Compare(a) | Command::Audit(a) => a,
        Command::Partitions(p) => &p.common,
    };
    let config = RunConfig::from_args(common)?;
    let output = match &cli.command {
        Command::Analyze(_) => cmd_analyze(&config)?,
        Command::Partitions(p) => cmd_partitions(&config, &p.synset_id, &p.word)?,
        Command::Compare(_) => cmd_compare(&config)?,
        Command::Audit(_) => cmd_audit(&config)?,
    };
    Ok((output, config.out))
}
