use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_genus-forge");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn golden(name: &str) -> Vec<u8> {
    std::fs::read(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn catalog_matches_goldens() {
    assert_eq!(run(&["catalog"]).stdout, golden("catalog.json"));
    assert_eq!(run(&["catalog", "--format", "csv"]).stdout, golden("catalog.csv"));
}

#[test]
fn out_flag_writes_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.csv");
    let o = run(&["catalog", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(path).unwrap(), golden("catalog.csv"));
}

#[test]
fn genus_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p2.json");
    std::fs::write(&path, r#"{"schema":"genus-forge/variety/v1","name":"P2","dim":2,"chi":[1,-1,1]}"#).unwrap();
    let o = run(&["genus", "--input", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "P2,2,3,1,1,1 -1 1\n");
    let o = run(&["genus", "--input", path.to_str().unwrap()]);
    assert!(stdout(&o).contains("\"chi_y\": [\n      1,\n      -1,\n      1\n    ]"));
}

#[test]
fn bundle_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bd.json");
    std::fs::write(
        &path,
        r#"{"schema":"genus-forge/bundle/v1","fiber":"curve:25","base":{"dim":1,"hodge":[[1,2],[2,1]]},"total":"bd:2,2"}"#,
    )
    .unwrap();
    let o = run(&["bundle", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("\"signature_defect\": 16"));
    assert!(text.contains("\"verdict\": \"multiplicative-only-at-minus-one\""));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"schema":"genus-forge/variety/v1","dim":1,"chi":[1,2]}"#).unwrap();
    let o = run(&["genus", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("duality violated at indices (0, 1)"));

    let o = run(&["verify", "--claim", "difference-identity", "--dims", "2..5"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "--claim", "signature-mod4", "--dims", "2..4", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("\"type\": \"assignment\""));

    assert_eq!(run(&["genus", "--input", dir.path().join("missing.json").to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(run(&["bundle", "--fiber", "curve:1"]).status.code(), Some(1));
    assert_eq!(run(&["bryan-donagi", "1", "2"]).status.code(), Some(1));
}

#[test]
fn sampled_claims_use_seed() {
    let a = run(&["verify", "--claim", "strict-triples", "--dims", "2..3", "--samples", "20", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).contains("\"seed\": 9"));
    let o = run(&["verify", "--claim", "round-trip", "--dims", "1..3", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0));
}
