//! Golden outputs for the fixture corpus. Set `UPDATE_GOLDEN=1` to rewrite them.

mod support;

use std::path::Path;

use cohomlie_cli::run;
use support::{args_for, golden_path, has_human_golden, CASES};

fn compare(path: &Path, actual: &str) {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(path)
        .unwrap_or_else(|_| panic!("missing golden {}; run with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {}", path.display());
}

#[test]
fn machine_reports_match_golden_files() {
    for (name, args, exit) in CASES {
        let out = run(args_for(args, "machine"));
        assert_eq!(out.exit_code, *exit, "{name}: {}", out.stderr);
        compare(&golden_path(name, "json"), &out.stdout);
    }
}

#[test]
fn human_reports_match_golden_files() {
    for (name, args, exit) in CASES.iter().filter(|c| has_human_golden(c.0)) {
        let out = run(args_for(args, "human"));
        assert_eq!(out.exit_code, *exit, "{name}");
        compare(&golden_path(name, "txt"), &out.stdout);
    }
}

#[test]
fn machine_reports_are_byte_stable() {
    for (name, args, _) in CASES {
        let a = run(args_for(args, "machine"));
        let b = run(args_for(args, "machine"));
        assert_eq!(a, b, "{name}");
    }
}
