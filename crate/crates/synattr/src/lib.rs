//! Model files, synset files and the `synattr` command line on top of
//! [`synattr_core`].

pub mod analysis;
pub mod cli;
pub mod model_io;
pub mod render;
pub mod synset_file;

pub use analysis::{analyze_all, analyze_one, compare, partition_dump, SynsetResult};
pub use model_io::{load_binary_model, load_model, load_text_model, LoadError, ModelFormat};
pub use render::OutputFormat;
pub use synset_file::{parse_synsets, SynsetFileError, SynsetFormat};
