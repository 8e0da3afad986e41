use std::path::{Path, PathBuf};

use coregkit::codim::{run_codim, CodimFile};
use coregkit::run_scenario;
use dualcx::toric::toric_fano;
use dualcx::{regularity, DualComplex, Fan};

fn dir(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(name)
}

fn files(name: &str) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir(name)).unwrap().map(|e| e.unwrap().path()).collect();
    v.sort();
    v
}

#[test]
fn shipped_scenarios_pass_except_the_wrong_cusp() {
    let all = files("scenarios");
    assert!(all.len() >= 9);
    for f in all {
        let r = run_scenario(&f).unwrap_or_else(|e| panic!("{}: {e}", f.display()));
        if f.ends_with("cusp_wrong_expectation.json") {
            assert_eq!(r.failed, 1);
            let diffs: Vec<_> = r.expectations.iter().filter_map(|o| o.diff.as_deref()).collect();
            assert_eq!(diffs, ["5/6 ≠ 5/9"]);
        } else {
            assert!(r.ok(), "{}", r.to_text());
        }
    }
}

#[test]
fn reports_are_deterministic() {
    for f in files("scenarios") {
        let a = serde_json::to_string(&run_scenario(&f).unwrap()).unwrap();
        let b = serde_json::to_string(&run_scenario(&f).unwrap()).unwrap();
        assert_eq!(a, b, "{}", f.display());
    }
    let codim: CodimFile =
        serde_json::from_str(&std::fs::read_to_string(dir("codim/quartic_sections.json")).unwrap()).unwrap();
    assert_eq!(run_codim(&codim).unwrap(), run_codim(&codim).unwrap());
}

#[test]
fn fan_files_agree_with_recipes() {
    let pairs =
        [("p3.json", "1.17"), ("blowup_p3_point.json", "2.35"), ("p1xp2.json", "2.34"), ("p1xp1xp1.json", "3.27")];
    for (file, id) in pairs {
        let fan: Fan = serde_json::from_str(&std::fs::read_to_string(dir("fans").join(file)).unwrap()).unwrap();
        let recipe = toric_fano(id).unwrap();
        assert!(fan.is_smooth(), "{file}");
        assert_eq!(fan.picard_rank(), recipe.picard_rank(), "{file}");
        assert_eq!(fan.anticanonical_degree().unwrap(), recipe.anticanonical_degree().unwrap(), "{file}");
        let a = DualComplex::build(&fan.toric_boundary().unwrap()).unwrap();
        let b = DualComplex::build(&recipe.toric_boundary().unwrap()).unwrap();
        assert_eq!(a.canonical_hash(), b.canonical_hash(), "{file}");
        assert_eq!(regularity(&a, 3, None).coreg, 0);
    }
}

#[test]
fn schema_lists_every_op() {
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir("schema/scenario.schema.json")).unwrap()).unwrap();
    let ops: Vec<&str> = schema["properties"]["steps"]["items"]["properties"]["op"]["enum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(ops, coregkit::ops::OPS);
}
