use std::path::{Path, PathBuf};
use std::process::Command;

use hopfkit::{parse_document, run_command, serialize_document, Options, Verb};
use serde_json::{json, Value};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn hopfkit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfkit")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn doc(text: &str) -> hopfkit::Document {
    parse_document(text).unwrap()
}

const MORPHISM_DOC: &str = r#"{
  "field": "Q",
  "objects": {
    "H": { "kind": "catalog", "name": "group Z2" },
    "delta": { "kind": "coaction", "algebra": "H", "hopf": "H", "map": [[0, 0, 0, "1"], [1, 1, 1, "1"]] },
    "P": { "kind": "bundle", "coaction": "delta" },
    "half": { "kind": "morphism", "source": "P", "target": "P", "matrix": [["2/4", 0], ["0", "-6/3"]] }
  }
}"#;

#[test]
fn serialization_round_trips_in_lowest_terms() {
    let d = doc(MORPHISM_DOC);
    let text = serialize_document(&d);
    assert!(text.contains("\"1/2\""));
    assert!(text.contains("\"-2\""));
    assert!(!text.contains("2/4"));
    assert!(text.ends_with('\n'));
    let again = doc(&text);
    assert_eq!(serialize_document(&again), text);
}

#[test]
fn catalog_documents_round_trip() {
    for name in ["group S3", "functions Z2xZ2", "sweedler", "truncated 3"] {
        let (code, out, _) = hopfkit(&["catalog", name]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(serialize_document(&doc(&out)), out, "{name}");
    }
    let (code, out, _) = hopfkit(&["catalog", "taft 3 7 2", "--field", "Fp:7"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["field"], json!({ "Fp": 7 }));
    let (code, _, err) = hopfkit(&["catalog", "group Q8"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown group"));
}

#[test]
fn malformed_documents_are_rejected() {
    let cases = [
        (r#"{"field": "Q", "objects": {"c": {"kind": "coaction", "algebra": "x", "hopf": "x", "map": []}}}"#, "undefined object \"x\""),
        (r#"{"field": "Q", "objects": {"a": {"kind": "bundle", "coaction": "a"}}}"#, "cyclic reference"),
        (r#"{"field": "Q", "objects": {"a": {"kind": "lattice"}}}"#, "unknown kind"),
        (r#"{"field": {"Fp": 6}, "objects": {}}"#, "not prime"),
        (r#"{"field": "Q", "objects": {}, "extra": 1}"#, "extra"),
        (r#"{"field": "Q", "objects": {"a": {"kind": "algebra", "dim": 1, "unit": ["1"], "mult": [[0, 0, 0, "1/0"]]}}}"#, "1/0"),
        (r#"{"field": "Q", "objects": {"a": {"kind": "algebra", "dim": 1, "unit": ["1"], "mult": [[0, 0, 3, "1"]]}}}"#, "mult"),
        ("{", "malformed JSON"),
    ];
    for (text, needle) in cases {
        let e = parse_document(text).expect_err(text).to_string();
        assert!(e.contains(needle), "{text}: {e}");
    }
}

#[test]
fn unchecked_objects_skip_strict_validation() {
    let broken = r#"{
      "field": "Q",
      "objects": {
        "H": { "kind": "hopf", "dim": 2, "unit": ["1", "0"],
               "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]],
               "comult": [[0, 0, 0, "1"], [1, 1, 1, "1"]], "counit": ["1", "1"],
               "antipode": [[0, 0, "1"], [1, 1, "-1"]] UNCHECKED },
        "delta": { "kind": "coaction", "algebra": "H", "hopf": "H", "map": [[0, 0, 0, "1"], [1, 1, 1, "1"]] }
      }
    }"#;
    let strict = doc(&broken.replace(" UNCHECKED", ""));
    let lax = doc(&broken.replace(" UNCHECKED", r#", "unchecked": true"#));

    let out = run_command(Verb::CheckHopf, &strict, &Options::default()).unwrap();
    assert_eq!(out.exit_code, 1);
    assert_eq!(out.document["report"]["valid"], json!(false));
    assert!(!out.document["report"]["violations"].as_array().unwrap().is_empty());

    let e = run_command(Verb::Coinvariants, &strict, &Options::default()).unwrap_err();
    assert!(e.to_string().contains("Hopf algebra axioms"), "{e}");
    let out = run_command(Verb::Coinvariants, &lax, &Options::default()).unwrap();
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.document["objects"]["H"]["unchecked"], json!(true));
}

#[test]
fn verbs_report_and_derive_objects() {
    let d = doc(&std::fs::read_to_string(data("embedding.json")).unwrap());
    let out = run_command(Verb::HopfImage, &d, &Options::default()).unwrap();
    let objects = out.document["objects"].as_object().unwrap();
    assert!(objects.contains_key("delta.hopf_image"));
    assert!(objects.contains_key("delta.image_coaction"));
    assert_eq!(out.document["report"]["hopf_image"]["dim"], json!(2));
    assert_eq!(out.document["report"]["inner_faithful"], json!(false));
    // derived objects must themselves parse
    let text = hopfkit::to_canonical_string(&out.document);
    let again = doc(&text);
    assert!(again.objects.contains_key("delta.hopf_image"));

    let out = run_command(Verb::Reduce, &d, &Options::default()).unwrap();
    assert_eq!(out.exit_code, 0);
    let objects = out.document["objects"].as_object().unwrap();
    for suffix in ["algebra", "hopf", "coaction", "bundle", "ideal"] {
        assert!(objects.contains_key(&format!("P.reduced.{suffix}")), "{suffix}");
    }
    assert_eq!(out.document["report"]["seed"]["source"], json!("kernel of the declared augmentation"));

    let out = run_command(Verb::QpbCheck, &d, &Options::default()).unwrap();
    assert_eq!(out.exit_code, 1, "the embedding is not a principal bundle over ℚ[Z2×Z2]");
}

#[test]
fn seed_resolution() {
    let graded = std::fs::read_to_string(data("graded.json")).unwrap();
    let d = doc(&graded);
    let out = run_command(Verb::Reduce, &d, &Options::default()).unwrap();
    assert_eq!(out.exit_code, 1);
    assert_eq!(out.document["report"]["seed"]["source"], json!("bundle seed \"seed\""));

    let opts = Options { seed: Some("seed".into()), ..Options::default() };
    let out = run_command(Verb::Reduce, &d, &opts).unwrap();
    assert_eq!(out.document["report"]["seed"]["source"], json!("subspace \"seed\""));

    let opts = Options { seed: Some("P".into()), ..Options::default() };
    assert!(run_command(Verb::Reduce, &d, &opts).is_err());

    let (code, _, err) = hopfkit(&["reduce", data("trivial.json").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("largest stable ideal is ambiguous"), "{err}");
}

#[test]
fn equivalence_needs_a_witness() {
    let z2 = data("z2_regular.json");
    let (code, out, _) = hopfkit(&["equivalent", z2.to_str().unwrap(), "--object", "id", "--witness", "id"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["equivalent"], json!(true));
    let (code, _, err) = hopfkit(&["equivalent", z2.to_str().unwrap(), "--object", "id"]);
    assert_eq!(code, 2);
    assert!(err.contains("witness"), "{err}");

    let (code, out, _) = hopfkit(&["reduce-morphism", z2.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["matrix"], json!([["1", "0"], ["0", "1"]]));
    assert!(v["objects"]["id.reduced"].is_object());
}

#[test]
fn exit_codes_and_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let (code, out, _) = hopfkit(&["galois", data("graded.json").to_str().unwrap(), "--report", target.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    let v: Value = serde_json::from_str(&written).unwrap();
    assert_eq!(v["report"]["rank"], json!(3));

    let (code, _, err) = hopfkit(&["frobnicate", data("graded.json").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown verb"));
    let (code, _, _) = hopfkit(&["galois", "/nonexistent/doc.json"]);
    assert_eq!(code, 2);
    let (code, out, _) = hopfkit(&["cosemisimple", data("fp.json").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("\"unsupported\""));
    let (code, _, err) = hopfkit(&["check-hopf", data("z2_regular.json").to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
}

#[test]
fn repeated_runs_are_byte_identical() {
    for verb in ["reduce", "qpb-check", "hopf-image", "coinvariants"] {
        let path = data("embedding.json");
        let a = hopfkit(&[verb, path.to_str().unwrap()]);
        let b = hopfkit(&[verb, path.to_str().unwrap()]);
        assert_eq!(a, b, "{verb}");
    }
}

#[test]
fn z6_degree_two_grading_image() {
    let (code, out, _) = hopfkit(&["hopf-image", data("z6_grading.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["hopf_image"]["dim"], json!(3));
    assert_eq!(v["report"]["hopf_image"]["basis"], json!(["1", "g^2", "g^4"]));
    let (code, _, _) = hopfkit(&["inner-faithful", data("z6_grading.json").to_str().unwrap()]);
    assert_eq!(code, 1);
}
