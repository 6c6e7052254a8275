#![allow(dead_code)]

//! Runs every line of `golden/matrix.txt` through the built binary and renders
//! a transcript of exit codes and output streams.

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Case {
    pub line: String,
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_line(line: &str) -> Case {
    let args = shlex::split(line).unwrap_or_else(|| panic!("bad quoting in matrix line {line:?}"));
    let out = Command::new(env!("CARGO_BIN_EXE_latgroup"))
        .args(&args)
        .current_dir(dir())
        .output()
        .expect("binary runs");
    Case {
        line: line.to_string(),
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn cases() -> Vec<Case> {
    let matrix = std::fs::read_to_string(dir().join("matrix.txt")).unwrap();
    matrix
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(run_line)
        .collect()
}

pub fn transcript(cases: &[Case]) -> String {
    let mut out = String::new();
    for c in cases {
        out.push_str(&format!("$ {}\nexit {}\n", c.line, c.code));
        for l in c.stdout.lines() {
            out.push_str(&format!("> {l}\n"));
        }
        for l in c.stderr.lines() {
            out.push_str(&format!("! {l}\n"));
        }
    }
    out
}

pub fn expected_path() -> PathBuf {
    dir().join("matrix.out")
}
