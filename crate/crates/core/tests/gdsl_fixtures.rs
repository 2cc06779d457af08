use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use gslice::emit::{groupoid_dot, slice_dot, to_json, KernelReport};
use gslice::gdsl::{self, Model};
use gslice::kernel::induced_functor;
use gslice::slice::slice;
use gslice::ObjId;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn gd_files(dir: &Path) -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "gd"))
        .collect();
    out.sort();
    out
}

/// `# expect: Kind line:col` on the first line.
fn expectation(text: &str) -> (String, usize, usize) {
    let rest = text.lines().next().unwrap().strip_prefix("# expect: ").unwrap();
    let (kind, pos) = rest.split_once(' ').unwrap();
    let (line, col) = pos.trim().split_once(':').unwrap();
    (kind.to_string(), line.parse().unwrap(), col.parse().unwrap())
}

fn same_model(a: &Model, b: &Model) {
    assert_eq!(a.groupoids(), b.groupoids());
    assert_eq!(a.functors(), b.functors());
    assert_eq!(a.subgroupoids(), b.subgroupoids());
}

#[test]
fn valid_fixtures_round_trip() {
    for path in ["z4_mod2.gd", "pair2.gd"].map(|f| fixtures().join(f)) {
        let text = fs::read_to_string(&path).unwrap();
        let model = gdsl::load(&text).unwrap();
        let written = gdsl::serialize(&model.document);
        let again = gdsl::load(&written).unwrap();
        same_model(&model, &again);
        assert_eq!(gdsl::serialize(&again.document), written, "{}", path.display());
    }
}

#[test]
fn error_fixtures_report_their_first_diagnostic() {
    let mut files = gd_files(&fixtures().join("errors"));
    files.push(fixtures().join("bad_assoc.gd"));
    assert!(files.len() >= 12);
    for path in files {
        let text = fs::read_to_string(&path).unwrap();
        let (kind, line, col) = expectation(&text);
        let diags = gdsl::load(&text).err().unwrap_or_else(|| panic!("{} loaded", path.display()));
        let first = &diags[0];
        assert_eq!(
            (first.kind, first.span.line, first.span.col),
            (kind.as_str(), line, col),
            "{}: {first}",
            path.display()
        );
        assert!(first.span.len >= 1);
        let rendered = first.render("f.gd", Some(&text));
        assert!(rendered.starts_with(&format!("f.gd:{line}:{col}: {kind}: ")));
    }
}

#[test]
fn emitters_are_deterministic() {
    let text = fs::read_to_string(fixtures().join("z4_mod2.gd")).unwrap();
    let render = || {
        let model = gdsl::load(&text).unwrap();
        let z4 = model.groupoid("Z4").unwrap().clone();
        let f = model.functor("F").unwrap();
        let fx = induced_functor(f, ObjId(0)).unwrap();
        (
            groupoid_dot(&z4),
            slice_dot(&slice(Arc::clone(&z4), ObjId(0)).unwrap()),
            to_json(&KernelReport::new("F", &fx)),
        )
    };
    assert_eq!(render(), render());
}
