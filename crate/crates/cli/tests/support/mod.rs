//! Runs the `catkit` binary over the checked-in corpus.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("corpus")
}

/// Every specification file in the corpus, sorted by name.
pub fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x != "txt"))
        .collect();
    files.sort();
    files
}

/// Argument lists from `commands.txt`.
pub fn corpus_commands() -> Vec<Vec<String>> {
    std::fs::read_to_string(corpus_dir().join("commands.txt"))
        .unwrap()
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect()
}

pub fn catkit<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catkit")).args(args).current_dir(corpus_dir()).output().unwrap()
}

/// Exit code, stdout and stderr of one invocation as a single byte string.
pub fn transcript<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Vec<u8> {
    let out = catkit(args);
    let mut bytes = format!("{:?}\n", out.status.code()).into_bytes();
    bytes.extend(out.stdout);
    bytes.extend(out.stderr);
    bytes
}

/// Transcripts of the whole command corpus, in order.
pub fn corpus_transcript() -> Vec<Vec<u8>> {
    corpus_commands().iter().map(|c| transcript(c)).collect()
}
