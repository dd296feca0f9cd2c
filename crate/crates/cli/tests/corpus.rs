//! The shipped corpus matches its generator, round-trips through JSON, and
//! produces the recorded reports. Set `QUASITORIC_BLESS=1` to rewrite the
//! golden reports.

use std::fs;

use quasitoric::corpus::{all_entries, corpus_dir};
use quasitoric::doc::{pretty, Document};
use quasitoric::report::full_report;

fn bless() -> bool {
    std::env::var_os("QUASITORIC_BLESS").is_some_and(|v| v == "1")
}

#[test]
fn corpus_files_match_generator() {
    let dir = corpus_dir();
    let mut expected: Vec<String> = Vec::new();
    for d in all_entries() {
        let name = d.name.clone().unwrap();
        let path = dir.join(format!("{name}.json"));
        let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(text, d.to_json(), "{name} is out of date; regenerate with `quasitoric examples`");
        let parsed = Document::from_json(&text).unwrap();
        assert_eq!(parsed, d);
        assert_eq!(Document::from_json(&parsed.to_json()).unwrap(), parsed);
        expected.push(format!("{name}.json"));
    }
    let mut present: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .filter_map(|e| e.ok())
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".json"))
        .collect();
    present.sort();
    expected.sort();
    assert_eq!(present, expected);
}

#[test]
fn reports_match_goldens() {
    let golden = corpus_dir().join("golden");
    if bless() {
        fs::create_dir_all(&golden).unwrap();
    }
    for d in all_entries() {
        let name = d.name.clone().unwrap();
        let text = pretty(&full_report(&d.load().unwrap())) + "\n";
        let path = golden.join(format!("{name}.json"));
        if bless() {
            fs::write(&path, &text).unwrap();
            continue;
        }
        let recorded = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(text, recorded, "report for {name} differs from {}", path.display());
    }
}

#[test]
fn kite_golden_records_the_sum() {
    let path = corpus_dir().join("golden/kite.json");
    let Ok(text) = fs::read_to_string(path) else { return assert!(bless()) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let c = &v["configuration"];
    assert_eq!(c["balanced"], false);
    assert_eq!(c["sum"][0], "1");
    assert_ne!(c["sum"][1], "0");
    assert_eq!(v["note"], quasitoric::corpus::KITE_NOTE);
    assert_eq!(v["gale"]["error"].as_str().unwrap().split(':').next().unwrap(), "error[NotBalanced]");
}
