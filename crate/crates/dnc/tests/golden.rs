//! Reports for every suite center and command against files in tests/golden.
//! Regenerate with `UPDATE_GOLDEN=1 cargo test -p dnc --test golden`.

mod common;

use std::path::PathBuf;

use dnc::Command;
use dnc_core::rees::FiberKind;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn cases() -> Vec<(String, Command, String)> {
    let mut out = Vec::new();
    for c in common::SUITE {
        for cmd in Command::all() {
            out.push((c.to_string(), cmd, format!("{c}/{}.json", cmd.name())));
        }
        out.push((c.to_string(), Command::Fiber(FiberKind::Special), format!("{c}/fiber-special.json")));
    }
    out.push(("c2_pullback".into(), Command::CheckExcessive, "c2_pullback/check-excessive.json".into()));
    out.push(("c3".into(), Command::Infnbhd(3), "c3/infnbhd-3.json".into()));
    out
}

#[test]
fn reports_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatched = Vec::new();
    for (center, cmd, file) in cases() {
        let got = common::render(&common::load(&center), cmd);
        let path = golden_dir().join(&file);
        if update {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {file}"));
        if got != want {
            mismatched.push(file);
        }
    }
    assert!(mismatched.is_empty(), "reports differ from golden files: {mismatched:?}");
}
