//! Golden cases shared by the golden suite and the acceptance gate.

use std::path::PathBuf;

pub const CASES: &[(&str, &[&str], i32)] = &[
    ("verify_ab1", &["verify", "ab1"], 0),
    ("verify_g4a", &["verify", "g4a"], 1),
    ("verify_g4a0", &["verify", "g4a0"], 0),
    ("verify_g2a", &["verify", "g2a"], 1),
    ("verify_d2", &["verify", "d2"], 0),
    ("verify_h3", &["verify", "h3"], 0),
    ("verify_h3_pair", &["verify", "h3_pair"], 0),
    ("verify_h3_pair_extension", &["verify", "h3_pair_extension"], 0),
    ("cohomology_d2_0", &["cohomology", "d2", "--degree", "0"], 0),
    ("cohomology_d2_2", &["cohomology", "d2", "--degree", "2"], 0),
    ("cohomology_h3_1", &["cohomology", "h3", "--degree", "1"], 0),
    ("cohomology_g4a0_2", &["cohomology", "g4a0", "--degree", "2"], 0),
    ("cohomology_d2_compare_1", &["cohomology", "d2", "--degree", "1", "--flavor", "compare"], 0),
    ("cohomology_h3_pair_2", &["cohomology", "h3_pair", "--degree", "2"], 0),
    ("cohomology_g4a_1", &["cohomology", "g4a", "--degree", "1"], 1),
    ("derivations_h3", &["derivations", "h3"], 0),
    ("derivations_d2", &["derivations", "d2"], 0),
    ("nijenhuis_g4a", &["nijenhuis", "g4a", "--operator", "N"], 0),
    ("nijenhuis_g4a0", &["nijenhuis", "g4a0"], 0),
    ("nijenhuis_d2", &["nijenhuis", "d2", "--operator", "N"], 0),
    ("nijenhuis_h3_pair", &["nijenhuis", "h3_pair"], 0),
    ("rota_baxter_g2a", &["rota-baxter", "g2a", "--operator", "R"], 0),
    ("deform_verify_d2", &["deform-verify", "d2_deformation"], 0),
    ("deform_verify_h3_pair", &["deform-verify", "h3_pair_deformation"], 0),
    ("deform_obstruct_h3_pair", &["deform-obstruct", "h3_pair_deformation"], 0),
    ("deform_obstruct_obstructed", &["deform-obstruct", "h3_pair_obstructed"], 1),
    ("extension_build_h3_pair", &["extension-build", "h3_pair_extension"], 0),
    ("extension_classify_equivalent", &["extension-classify", "h3_pair_extension"], 0),
    ("extension_classify_distinct", &["extension-classify", "h3_pair_extension_distinct"], 1),
    ("mc_check_d2", &["mc-check", "d2"], 0),
    ("mc_check_h3_pair", &["mc-check", "h3_pair"], 0),
    ("mc_check_g2a", &["mc-check", "g2a"], 1),
];

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn args_for(args: &[&str], format: &str) -> Vec<String> {
    let mut out = vec!["cohomlie".to_string(), args[0].to_string()];
    let fixture = root().join("fixtures").join(format!("{}.json", args[1]));
    out.push(fixture.display().to_string());
    out.extend(args[2..].iter().map(|s| s.to_string()));
    out.push("--format".into());
    out.push(format.into());
    out
}

pub fn golden_path(name: &str, ext: &str) -> PathBuf {
    root().join("tests/golden").join(format!("{name}.{ext}"))
}

/// Whether human output is also pinned for this case.
pub fn has_human_golden(name: &str) -> bool {
    name.starts_with("verify") || name.starts_with("cohomology")
}
