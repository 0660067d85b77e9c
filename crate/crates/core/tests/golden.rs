use std::collections::BTreeSet;
use std::path::PathBuf;

use lframes::graph::{build_intersection_graph, exact_mds};
use lframes::io::{emit_instance, parse_instance};

fn data(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn five_frame_instance_has_the_expected_edges() {
    let inst = parse_instance(&data("five_frames.txt")).unwrap();
    let g = build_intersection_graph(&inst);
    let got: BTreeSet<(String, String)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (g.label(u).to_string(), g.label(v).to_string());
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let want: BTreeSet<(String, String)> =
        ["ab", "ae", "bc", "cd", "ce", "de"].iter().map(|s| (s[..1].to_string(), s[1..].to_string())).collect();
    assert_eq!(got, want);
    assert_eq!(exact_mds(&g).unwrap().len(), 2);
}

#[test]
fn golden_file_round_trips() {
    let inst = parse_instance(&data("five_frames.txt")).unwrap();
    let text = emit_instance(&inst);
    assert_eq!(parse_instance(&text).unwrap(), inst);
    assert!(text.lines().all(|l| !l.starts_with('#')));
}
