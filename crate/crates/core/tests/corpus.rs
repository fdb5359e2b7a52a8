//! The files under `fixtures/` are exactly what `kervaire build fixtures`
//! writes, and every shipped scenario loads.

use std::path::Path;

use kervaire::harness::{fixtures, load_scenario};

#[test]
fn shipped_files_match_builders() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for (rel, value) in fixtures::corpus() {
        let text = std::fs::read_to_string(dir.join(&rel))
            .unwrap_or_else(|e| panic!("{rel}: {e}; regenerate with `kervaire build fixtures`"));
        let shipped: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            shipped, value,
            "{rel} is stale; regenerate with `kervaire build fixtures`"
        );
    }
}

#[test]
fn scenarios_load() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/scenarios");
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_stem().unwrap().to_str().unwrap().to_string();
        let loaded = load_scenario(&path);
        if name == "bad_boundary_euler" {
            assert!(loaded.is_err());
        } else {
            let s = loaded.unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(s.name, name);
            assert_eq!(s.dimension, 5);
        }
    }
}
