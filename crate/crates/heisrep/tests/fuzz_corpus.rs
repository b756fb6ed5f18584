//! Replays the checked-in fuzz corpus seeds through the parser entry points
//! on every test run, asserting the same invariants the fuzz targets do.
//! Keeps the corpus honest without needing the fuzzing toolchain.

use std::fs;
use std::path::PathBuf;

use heisrep::json::{
    algebra_to_string, parse_algebra, parse_representation, representation_to_string,
};
use heisrep::linalg::{format_rational, is_canonical, parse_rational};

fn corpus_dir(target: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target)
}

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = corpus_dir(target);
    let mut out: Vec<(String, Vec<u8>)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("corpus dir {} missing: {e}", dir.display()))
        .map(|entry| {
            let entry = entry.expect("corpus entry");
            let name = entry.file_name().to_string_lossy().into_owned();
            let bytes = fs::read(entry.path()).expect("corpus file reads");
            (name, bytes)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds checked in for {target}");
    out
}

#[test]
fn rational_parse_seeds() {
    for (name, bytes) in seeds("rational_parse") {
        let Ok(text) = std::str::from_utf8(&bytes) else {
            continue;
        };
        if let Ok(r) = parse_rational(text) {
            assert!(is_canonical(&r), "{name}: non-canonical parse");
            let back = parse_rational(&format_rational(&r)).unwrap();
            assert_eq!(r, back, "{name}: round trip changed the value");
        }
    }
}

#[test]
fn algebra_json_seeds() {
    let mut accepted = 0;
    for (name, bytes) in seeds("algebra_json") {
        let Ok(text) = std::str::from_utf8(&bytes) else {
            continue;
        };
        if let Ok(alg) = parse_algebra(text) {
            accepted += 1;
            let back = parse_algebra(&algebra_to_string(&alg)).unwrap();
            assert_eq!(alg, back, "{name}: round trip changed the algebra");
        }
    }
    assert!(accepted >= 2, "expected several well-formed algebra seeds");
}

#[test]
fn representation_json_seeds() {
    let mut accepted = 0;
    for (name, bytes) in seeds("representation_json") {
        let Ok(text) = std::str::from_utf8(&bytes) else {
            continue;
        };
        if let Ok(rep) = parse_representation(text) {
            accepted += 1;
            let back = parse_representation(&representation_to_string(&rep)).unwrap();
            assert_eq!(rep, back, "{name}: round trip changed the representation");
        }
    }
    assert!(
        accepted >= 2,
        "expected several well-formed representation seeds"
    );
}
