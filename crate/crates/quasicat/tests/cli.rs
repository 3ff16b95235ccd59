use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quasicat")).args(args).output().expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn classify_exit_codes() {
    let (code, out) = run(&["classify", &data("nerve_c2.json")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("classification: kan, quasicategory, nerve_like up to dim 3"));
    let (code, out) = run(&["classify", &data("horn21.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL quasicategory: no filler for Λ^2_1"));
    assert_eq!(run(&["classify", &data("malformed.json")]).0, 2);
    assert_eq!(run(&["classify", &data("no_such_file.json")]).0, 2);
    assert_eq!(run(&["classify", &data("nerve_ord2.json"), "--budget", "5"]).0, 3);
}

#[test]
fn ho_needs_a_quasicategory() {
    let (code, out) = run(&["ho", &data("nerve_ord2.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("morphisms: 6"));
    assert_eq!(run(&["ho", &data("horn21.json")]).0, 4);
}

#[test]
fn ho_writes_the_category() {
    let dir = std::env::temp_dir().join(format!("quasicat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("ho.json");
    let (code, _) = run(&["ho", &data("nerve_ord2.json"), "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let c = quasicat::io::parse_category(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(quasicat::category::category_isomorphism(&c, &quasicat::category::FiniteCategory::ordinal(2)).is_some());
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn join_slice_limits() {
    let (code, out) = run(&["join", &data("delta1.json"), &data("point.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("non-degenerate: [3, 3, 1, 0]"));
    let (code, out) = run(&["slice", &data("diamond.json"), &data("diagram_top.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("has final object: yes"));
    let (code, out) = run(&["limits", "--dmax", "2", &data("diamond.json"), &data("diagram_pair.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("limit apexes: [\"bot\"]"));
    let (code, out) = run(&["limits", &data("diamond.json"), &data("diagram_empty.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("limit apexes: [\"top\"]"));
    assert_eq!(run(&["limits", &data("diamond.json"), &data("diagram_pair.json")]).0, 3);
    assert_eq!(run(&["limits", "--dmax", "9", &data("diamond.json"), &data("diagram_pair.json")]).0, 4);
}

#[test]
fn monoidal_subcommands() {
    let (code, out) = run(&["monoidal", "validate", &data("corrupted_pentagon.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("pentagon fails at (0, 0, 1, 1)"));
    assert_eq!(run(&["monoidal", "validate", &data("signed_twisted.json")]).0, 0);
    assert_eq!(run(&["monoidal", "build-opfib", &data("max_poset.json")]).0, 0);
    assert_eq!(run(&["monoidal", "extract", &data("signed_twisted.json")]).0, 0);
    assert_eq!(run(&["monoidal", "extract", "--symmetric", &data("super_signed.json")]).0, 0);
    assert_eq!(run(&["monoidal", "extract", "--symmetric", &data("signed_twisted.json")]).0, 4);
    let (code, out) =
        run(&["monoidal", "algebra-check", &data("signed_twisted.json"), "--object", "0", "--mu", "+0", "--eta", "+0"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("initial: yes"));
    let (code, _) =
        run(&["monoidal", "algebra-check", &data("signed_twisted.json"), "--object", "0", "--mu", "+0", "--eta", "-0"]);
    assert_eq!(code, 1);
    assert_eq!(run(&["monoidal", "algebra-check", &data("signed_twisted.json"), "--object", "7", "--mu", "+0", "--eta", "+0"]).0, 2);
}

#[test]
fn dual_find() {
    let (code, out) = run(&["monoidal", "dual-find", "--matrix", "2", "--object", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("witnesses: 6"));
    assert_eq!(run(&["monoidal", "dual-find", "--matrix", "2", "--object", "2", "--budget", "10"]).0, 3);
    assert_eq!(run(&["monoidal", "dual-find", "--matrix", "5", "--object", "2"]).0, 3);
    let (code, out) = run(&["monoidal", "dual-find", &data("super_signed.json"), "--object", "1"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn json_output_is_deterministic() {
    let args = ["classify", "--json", &data("horn21.json")];
    let (c1, a) = run(&args);
    let (c2, b) = run(&args);
    assert_eq!((c1, &a), (c2, &b));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["exit_code_hint"], 1);
    assert_eq!(v["verdicts"][1]["pass"], false);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["classify"]).0, 2);
}
