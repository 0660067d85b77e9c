use std::path::Path;
use std::process::{Command, Output};

use lframes::io::RunReport;

fn lframes(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lframes")).args(args).current_dir(dir).output().unwrap()
}

fn report(out: &Output) -> RunReport {
    RunReport::parse(&String::from_utf8(out.stdout.clone()).unwrap()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn generate_then_solve() {
    let dir = tempfile::tempdir().unwrap();
    let out = lframes(
        dir.path(),
        &["generate", "--family", "anchored-one-sided", "--n", "9", "--seed", "4", "--out", "a.txt"],
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(report(&out).get("instance"), Some("9 frames, model standard, diagonal 0"));

    let out = lframes(dir.path(), &["solve", "a.txt", "--algo", "local-search", "--k", "2", "--oracle", "--seed", "4"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let r = report(&out);
    assert_eq!(r.get("dominating"), Some("true"));
    assert_eq!(r.get("k"), Some("2"));
    assert_eq!(r.get("seed"), Some("4"));
    let size: usize = r.get("size").unwrap().parse().unwrap();
    let opt: usize = r.get("oracle_optimum").unwrap().parse().unwrap();
    assert!(opt <= size);
    assert_eq!(r.get("solution").unwrap().split(' ').count(), size);
    assert!(r.get("wall_ms").is_none());

    let out = lframes(dir.path(), &["solve", "a.txt", "--algo", "greedy", "--timing"]);
    assert!(report(&out).get("wall_ms").is_some());
}

#[test]
fn every_family_generates_and_certificates_verify() {
    let dir = tempfile::tempdir().unwrap();
    for fam in ["circle-diagonal", "circle-vertical", "sat", "vc-epg", "eds-epg"] {
        let file = format!("{fam}.txt");
        let out = lframes(dir.path(), &["generate", "--family", fam, "--n", "4", "--seed", "2", "--out", &file]);
        assert!(out.status.success(), "{fam}: {}", stderr(&out));
        let cert = report(&out).get("cert").unwrap().to_string();
        let out = lframes(dir.path(), &["verify", "--cert", &cert, "--instance", &file]);
        assert!(out.status.success(), "{fam}: {}", stderr(&out));
        assert_eq!(report(&out).get("holds"), Some("true"));
    }
    for fam in ["anchored-two-sided", "anchored-rects", "two-line"] {
        let out = lframes(dir.path(), &["generate", "--family", fam, "--n", "6", "--out", "x.txt"]);
        assert!(out.status.success());
        assert!(report(&out).get("cert").is_none());
    }
}

#[test]
fn tampered_certificate_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    lframes(
        dir.path(),
        &["generate", "--family", "vc-epg", "--n", "3", "--seed", "1", "--out", "v.txt", "--cert", "v.json"],
    );
    let text = std::fs::read_to_string(dir.path().join("v.json")).unwrap();
    let tampered = text.replacen("\"hspan\": 2", "\"hspan\": 3", 1);
    assert_ne!(text, tampered);
    std::fs::write(dir.path().join("bad.json"), tampered).unwrap();
    let out = lframes(dir.path(), &["verify", "--cert", "bad.json"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(report(&out).get("rebuild_matches"), Some("false"));

    std::fs::write(dir.path().join("other.txt"), "format 1\nmodel edge\nx 0 0 1 1\n").unwrap();
    let out = lframes(dir.path(), &["verify", "--cert", "v.json", "--instance", "other.txt"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exchange_verification() {
    let dir = tempfile::tempdir().unwrap();
    lframes(
        dir.path(),
        &[
            "generate",
            "--family",
            "anchored-one-sided",
            "--n",
            "12",
            "--seed",
            "8",
            "--side",
            "below",
            "--out",
            "o.txt",
        ],
    );
    let out = lframes(dir.path(), &["verify", "--exchange", "o.txt", "--svg", "o.svg"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let r = report(&out);
    assert_eq!(r.get("crossings"), Some("0"));
    assert_eq!(r.get("local_exchange"), Some("true"));
    let svg = std::fs::read_to_string(dir.path().join("o.svg")).unwrap();
    assert_eq!(svg.matches("<polyline ").count(), 12);

    lframes(dir.path(), &["generate", "--family", "anchored-two-sided", "--n", "12", "--seed", "3", "--out", "t.txt"]);
    let out = lframes(dir.path(), &["verify", "--exchange", "t.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p.txt"), "format 1\nf1 0 0 x 3\n").unwrap();
    let out = lframes(dir.path(), &["solve", "p.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    std::fs::write(dir.path().join("z.txt"), "format 1\nf1 0 0 0 3\n").unwrap();
    let out = lframes(dir.path(), &["solve", "z.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("zero-length"));

    assert_eq!(lframes(dir.path(), &["solve", "missing.txt"]).status.code(), Some(2));

    lframes(dir.path(), &["generate", "--family", "anchored-two-sided", "--n", "6", "--out", "t.txt"]);
    assert_eq!(lframes(dir.path(), &["solve", "t.txt", "--algo", "permutation"]).status.code(), Some(2));
    assert_eq!(lframes(dir.path(), &["solve", "t.txt", "--algo", "local-search", "--k", "0"]).status.code(), Some(2));
}

#[test]
fn large_instances() {
    let dir = tempfile::tempdir().unwrap();
    lframes(
        dir.path(),
        &["generate", "--family", "anchored-two-sided", "--n", "40", "--seed", "5", "--out", "big.txt"],
    );
    let out = lframes(dir.path(), &["solve", "big.txt", "--algo", "exact"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lframes(dir.path(), &["solve", "big.txt", "--algo", "two-sided", "--oracle"]);
    assert!(out.status.success());
    assert!(report(&out).get("oracle").unwrap().starts_with("skipped"));
}

#[test]
fn usage_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(lframes(dir.path(), &["frobnicate"]).status.code(), Some(1));
    assert_eq!(lframes(dir.path(), &["solve", "a.txt", "--algo", "magic"]).status.code(), Some(1));
    assert_eq!(lframes(dir.path(), &["verify"]).status.code(), Some(1));
    assert_eq!(lframes(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn render_highlights_solution() {
    let dir = tempfile::tempdir().unwrap();
    lframes(dir.path(), &["generate", "--family", "two-line", "--n", "7", "--seed", "9", "--out", "t.txt"]);
    let out = lframes(dir.path(), &["render", "t.txt", "--out", "t.svg", "--algo", "permutation"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let svg = std::fs::read_to_string(dir.path().join("t.svg")).unwrap();
    let size: usize = report(&out).get("size").unwrap().parse().unwrap();
    assert_eq!(svg.matches("stroke-width=\"3\"").count(), size);
    assert_eq!(svg.matches("stroke-dasharray").count(), 2);
}
