//! Golden-file regression tests: the `expand` output for every named series
//! is pinned under `testdata/` to q-order 30 (31 coefficients per row).
//!
//! To regenerate after an intentional change, run
//! `QTELESCOPE_REGEN_GOLDEN=1 cargo test --test golden` and review the diff;
//! the files never change on an ordinary run.

use std::path::PathBuf;
use std::process::Command;

const Q_ORDER: &str = "30";

fn golden_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata").join(file)
}

fn expand(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_qtelescope"))
        .arg("expand")
        .args(args)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "expand {args:?} failed");
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn check(file: &str, args: &[&str]) {
    let produced = expand(args);
    let path = golden_path(file);
    if std::env::var_os("QTELESCOPE_REGEN_GOLDEN").is_some() {
        std::fs::write(&path, &produced).expect("golden file writable");
    }
    let pinned = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {file}: {e}"));
    let produced: serde_json::Value = serde_json::from_str(&produced).expect("valid JSON");
    let pinned: serde_json::Value = serde_json::from_str(&pinned).expect("valid golden JSON");
    assert_eq!(produced, pinned, "{file} drifted; regenerate only if the change is intended");
    // every pinned row carries exactly 31 coefficients
    for row in pinned["rows"].as_array().expect("rows") {
        assert_eq!(row.as_array().expect("row").len(), 31);
    }
}

#[test]
fn single_variable_series() {
    check("schur-bilateral.json", &["schur-bilateral", "--q-order", Q_ORDER]);
    check("rr1-sum.json", &["rr1-sum", "--q-order", Q_ORDER]);
    check("rr1-product.json", &["rr1-product", "--q-order", Q_ORDER]);
    check("rr2-sum.json", &["rr2-sum", "--q-order", Q_ORDER]);
    check("rr2-product.json", &["rr2-product", "--q-order", Q_ORDER]);
}

#[test]
fn two_variable_series() {
    check("watson-lhs.json", &["watson-lhs", "--a-order", "5", "--q-order", Q_ORDER]);
    check("watson-rhs.json", &["watson-rhs", "--a-order", "5", "--q-order", Q_ORDER]);
    check("sylvester-lhs.json", &["sylvester-lhs", "--a-order", "5", "--q-order", Q_ORDER]);
}

#[test]
fn indexed_gauss_series() {
    for n in ["3", "4"] {
        check(&format!("gauss-lhs-n{n}.json"), &["gauss-lhs", "--n", n, "--q-order", Q_ORDER]);
        check(&format!("gauss-rhs-n{n}.json"), &["gauss-rhs", "--n", n, "--q-order", Q_ORDER]);
    }
}

#[test]
fn pinned_families_agree_where_the_identities_say_so() {
    // the pins themselves witness the identities: sum = product, lhs = rhs
    let read = |file: &str| -> serde_json::Value {
        serde_json::from_str(&std::fs::read_to_string(golden_path(file)).expect("golden file"))
            .expect("valid golden JSON")
    };
    assert_eq!(read("rr1-sum.json")["rows"], read("rr1-product.json")["rows"]);
    assert_eq!(read("rr2-sum.json")["rows"], read("rr2-product.json")["rows"]);
    assert_eq!(read("watson-lhs.json")["rows"], read("watson-rhs.json")["rows"]);
    assert_eq!(read("gauss-lhs-n3.json")["rows"], read("gauss-rhs-n3.json")["rows"]);
    assert_eq!(read("gauss-lhs-n4.json")["rows"], read("gauss-rhs-n4.json")["rows"]);
}
