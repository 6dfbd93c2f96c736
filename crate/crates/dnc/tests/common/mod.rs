#![allow(dead_code)]

use std::path::PathBuf;

use dnc::{parse_problem, ProblemSpec};

pub const SUITE: [&str; 6] = ["c0", "c1", "c2", "c3", "c4", "cu"];

pub fn inputs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("inputs")
}

pub fn load(name: &str) -> ProblemSpec {
    let path = inputs_dir().join(format!("{name}.dnc"));
    parse_problem(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

/// Report bytes without timing, or the error chain.
pub fn render(spec: &ProblemSpec, command: dnc::Command) -> String {
    match dnc::run_command(spec, command) {
        Ok(r) => r.render(false),
        Err(e) => {
            let source = std::error::Error::source(&e).map(|s| s.to_string()).unwrap_or_default();
            format!("{{\n  \"error\": \"{e}: {source}\"\n}}\n")
        }
    }
}
