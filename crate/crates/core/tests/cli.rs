use std::path::PathBuf;
use std::process::{Command, Output};

use zinbiel::format::{self, Document};
use zinbiel::{corpus, Field};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn zinbiel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zinbiel"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn bundled_files_match_the_corpus() {
    let q = Field::Rational;
    assert_eq!(format::parse_algebra(&std::fs::read_to_string(data("n2.txt")).unwrap()).unwrap(), corpus::n2(q));
    assert_eq!(format::parse_algebra(&std::fs::read_to_string(data("h3.txt")).unwrap()).unwrap(), corpus::h3(q));
    for entry in std::fs::read_dir(data("")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = format::parse(&text).unwrap();
        assert_eq!(format::write(&doc), text, "{} is not canonical", path.display());
    }
}

#[test]
fn validate_exit_codes() {
    assert_eq!(zinbiel(&["validate", "algebra", "data/n2.txt"]).status.code(), Some(0));
    let bad = zinbiel(&["validate", "algebra", "data/idempotent-line.txt"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("at (e1,e1,e1)"));
    assert_eq!(zinbiel(&["validate", "bialgebra", "data/n2.txt"]).status.code(), Some(2));
    assert_eq!(zinbiel(&["validate", "algebra", "data/missing.txt"]).status.code(), Some(2));
    assert_eq!(zinbiel(&["no-such-command"]).status.code(), Some(2));
    for (kind, file) in [
        ("rep", "n2-coregular.rep.txt"),
        ("matched-pair", "n2-coregular.matched-pair.txt"),
        ("bialgebra", "n2-coboundary.bialgebra.txt"),
        ("rb-operator", "double-n2.rb.txt"),
    ] {
        let o = zinbiel(&["validate", kind, &format!("data/{file}")]);
        assert_eq!(o.status.code(), Some(0), "{kind}: {}", stdout(&o));
    }
    let t = zinbiel(&["validate", "tensor2", "data/n2-zybe.tensor.txt", "--algebra", "data/n2.txt"]);
    assert!(stdout(&t).contains("classification: triangular"));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = std::env::temp_dir().join(format!("zinbiel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.txt");
    std::fs::write(&file, "algebra Z dim 1 field Q flavor zinbiel\nprod 1 1 -> 1/0*1\n").unwrap();
    let o = zinbiel(&["validate", "algebra", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("line 2, column 13"), "{}", stdout(&o));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn r_matrix_commands() {
    let c = zinbiel(&["classify-r", "--algebra", "data/double-n2.txt", "--tensor", "data/double-n2-r.tensor.txt"]);
    assert_eq!(c.status.code(), Some(0));
    assert!(stdout(&c).starts_with("classification: factorizable"));
    let rb = zinbiel(&[
        "rb-roundtrip",
        "--algebra",
        "data/double-n2.txt",
        "--tensor",
        "data/double-n2-r.tensor.txt",
        "--lambda",
        "-3",
    ]);
    assert_eq!(rb.status.code(), Some(0));
    assert!(stdout(&rb).contains("difference-support: 0"));
    let degenerate = zinbiel(&["rb-roundtrip", "--algebra", "data/n2.txt", "--tensor", "data/n2-zybe.tensor.txt"]);
    assert_eq!(degenerate.status.code(), Some(1));
    for args in [
        vec!["connes-roundtrip", "--algebra", "data/double-n2.txt", "--form", "data/double-n2.form.txt"],
        vec!["connes-roundtrip", "--rb", "data/double-n2.rb.txt"],
    ] {
        let o = zinbiel(&args);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("difference-support: 0"));
    }
}

#[test]
fn double_and_search_write_documents() {
    let dir = std::env::temp_dir().join(format!("zinbiel-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let algebra = dir.join("double.txt");
    let r = dir.join("r.txt");
    let o = zinbiel(&[
        "build-double",
        "--bialgebra",
        "data/n2-coboundary.bialgebra.txt",
        "--out",
        algebra.to_str().unwrap(),
        "--r-out",
        r.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let c = zinbiel(&["classify-r", "--algebra", algebra.to_str().unwrap(), "--tensor", r.to_str().unwrap()]);
    assert!(stdout(&c).starts_with("classification: factorizable"));

    let found = dir.join("found");
    let s = zinbiel(&["search-zybe", "--algebra", "data/n2.txt", "--symmetric", "--out", found.to_str().unwrap()]);
    assert_eq!(s.status.code(), Some(0));
    assert!(stdout(&s).starts_with("solutions: 48"));
    let first = std::fs::read_to_string(found.join("r1.txt")).unwrap();
    assert!(matches!(format::parse(&first).unwrap(), Document::Tensor2 { .. }));

    let j = zinbiel(&["search-zybe", "--algebra", "data/n2.txt", "--limit", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["result"]["solutions"], "3");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn convert_maps_into_prime_field() {
    let o = zinbiel(&["convert", "data/f3-2-1.txt", "--field", "Fp:7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("algebra F3(2,1) dim 3 field Fp:7 flavor zinbiel\n"));
    assert_eq!(zinbiel(&["convert", "data/n2.txt", "--field", "Fp:4"]).status.code(), Some(2));
}
