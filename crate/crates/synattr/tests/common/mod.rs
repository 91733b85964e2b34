#![allow(dead_code)]

#[path = "../../../core/tests/common/mod.rs"]
mod shared;

#[allow(unused_imports)]
pub use shared::*;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn synattr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_synattr"))
        .args(args)
        .output()
        .expect("spawn synattr")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}
