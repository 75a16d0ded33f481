//! End-to-end tests of the `welldom` binary: exit-code contract, record
//! lines, byte-determinism of generated artifacts, and the verify summary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const C4: &str = "p graph 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n";
const P3: &str = "p graph 3 2\ne 0 1\ne 1 2\n";
const ISOLATED: &str = "p graph 3 1\ne 0 1\n";
const PAIRS: &str = "p hyper 4 2\na b c d\na b\nc d\n";
const TRIANGLE: &str = "p hyper 3 3\na b c\na b\nb c\na c\n";
const UNIVERSAL: &str = "p hyper 3 2\na b c\na b\na c\n";

fn welldom(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_welldom"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn fixture(dir: &Path, name: &str, content: &str) {
    fs::write(dir.join(name), content).unwrap();
}

fn setup() -> TempDir {
    let dir = TempDir::new().unwrap();
    fixture(dir.path(), "c4.graph", C4);
    fixture(dir.path(), "p3.graph", P3);
    fixture(dir.path(), "isolated.graph", ISOLATED);
    fixture(dir.path(), "pairs.hyper", PAIRS);
    fixture(dir.path(), "triangle.hyper", TRIANGLE);
    fixture(dir.path(), "universal.hyper", UNIVERSAL);
    dir
}

#[test]
fn check_exit_codes_and_records() {
    let dir = setup();
    let out = welldom(&["check", "well-dominated", "c4.graph"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("well"));

    let out = welldom(
        &["check", "well-dominated", "p3.graph", "--output", "record"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "well-dominated not-well 1,2 1 0,2\n");

    let out = welldom(
        &["check", "well-dominated", "c4.graph", "--output", "record"],
        dir.path(),
    );
    assert_eq!(stdout(&out), "well-dominated well 2 - -\n");

    // isolated vertex: total domination is infeasible, distinct error
    let out = welldom(&["check", "well-total-dominated", "isolated.graph"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("isolated"));

    // kind mismatch: a graph property on a hypergraph file
    let out = welldom(&["check", "well-dominated", "pairs.hyper"], dir.path());
    assert_eq!(out.status.code(), Some(2));

    let out = welldom(&["check", "no-such-property", "c4.graph"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hypergraph_checks() {
    let dir = setup();
    let out = welldom(
        &["check", "well-hitting-set", "pairs.hyper", "--output", "record"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "well-hitting-set well 2 - -\n");

    let out = welldom(&["check", "well-hitting-set-cover", "triangle.hyper"], dir.path());
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn reduce_writes_deterministic_gadgets() {
    let dir = setup();
    let out1 = welldom(&["reduce", "hs-to-wtd", "pairs.hyper"], dir.path());
    assert_eq!(out1.status.code(), Some(0));
    let text = stdout(&out1);
    assert!(text.starts_with("p graph 8 9\n"), "got: {text}");
    assert!(text.contains("r 0 hub -\n"));
    assert!(text.contains("r 7 set S1\n"));
    let out2 = welldom(&["reduce", "hs-to-wtd", "pairs.hyper"], dir.path());
    assert_eq!(out1.stdout, out2.stdout, "gadget bytes must be stable");

    // file output with role sidecar
    let out = welldom(
        &["reduce", "hs-to-wtd", "pairs.hyper", "--out", "gadget.graph"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let written = fs::read_to_string(dir.path().join("gadget.graph")).unwrap();
    assert!(written.starts_with("p graph 8 9\n"));
    let roles = fs::read_to_string(dir.path().join("gadget.graph.roles")).unwrap();
    assert_eq!(roles.lines().count(), 8);

    let out = welldom(
        &["reduce", "hs-to-wd", "triangle.hyper", "--k", "2"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("p graph 7 15\n"));
}

#[test]
fn reduce_surfaces_precondition_errors() {
    let dir = setup();
    let out = welldom(
        &["reduce", "hs-to-wd", "triangle.hyper", "--k", "1"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("k >= 2"));

    let out = welldom(&["reduce", "hs-to-wtd", "universal.hyper"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hits every set"));
}

#[test]
fn reduce_translations() {
    let dir = setup();
    let out = welldom(&["reduce", "vc-to-hs", "p3.graph"], dir.path());
    assert_eq!(stdout(&out), "p hyper 3 2\n0 1 2\n0 1\n1 2\n");

    let out = welldom(&["reduce", "dom-to-hs", "c4.graph", "--mode", "closed"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("p hyper 4 4\n"));

    let out = welldom(&["reduce", "dom-to-hs", "isolated.graph", "--mode", "open"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_fails_as_expected() {
    let dir = setup();
    let out = welldom(
        &[
            "verify",
            "total-domination",
            "--random",
            "20",
            "--seed",
            "7",
            "--max-universe",
            "6",
            "--max-sets",
            "5",
            "--output",
            "record",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next().unwrap_or(""), "verify total-domination 20 20 0 30 7");

    let out = welldom(
        &["verify", "well-domination", "--random", "20", "--seed", "7"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("20/20 passed"));

    // negative control: a damaged gadget must produce counterexamples
    let out = welldom(
        &[
            "verify",
            "total-domination",
            "--random",
            "5",
            "--seed",
            "7",
            "--mutate",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("first counterexample"));
}

#[test]
fn verify_is_deterministic() {
    let dir = setup();
    let args = ["verify", "well-domination", "--random", "15", "--seed", "3", "--output", "record"];
    let a = welldom(&args, dir.path());
    let b = welldom(&args, dir.path());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn params_and_enumerate() {
    let dir = setup();
    let out = welldom(&["params", "p3.graph"], dir.path());
    assert_eq!(stdout(&out), "1 2 1 2\n");

    let out = welldom(
        &["enumerate", "minimal-dominating-sets", "c4.graph", "--output", "record"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("family minimal-dominating-set "));
    assert!(header.ends_with(" 6"));
    assert_eq!(lines.count(), 6);

    // hitting-set solutions print element names
    let out = welldom(
        &["enumerate", "minimal-hitting-sets", "pairs.hyper"],
        dir.path(),
    );
    let text = stdout(&out);
    assert!(text.contains("{a,c}"), "got: {text}");

    // the cap is surfaced as an error, not truncation
    let out = welldom(
        &["enumerate", "minimal-dominating-sets", "c4.graph", "--cap", "2"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn gen_is_byte_deterministic() {
    let dir = setup();
    let args = ["gen", "hyper", "--seed", "1", "--elements", "5", "--sets", "4"];
    let a = welldom(&args, dir.path());
    let b = welldom(&args, dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("p hyper 5 4\na b c d e\n"));

    let g1 = welldom(&["gen", "graph", "--seed", "2", "--n", "6"], dir.path());
    let g2 = welldom(&["gen", "graph", "--seed", "2", "--n", "6"], dir.path());
    assert_eq!(g1.stdout, g2.stdout);
    // generated instances parse back
    let parsed = welldom(&["gen", "graph", "--seed", "2", "--n", "6"], dir.path());
    fs::write(dir.path().join("gen.graph"), parsed.stdout).unwrap();
    let out = welldom(&["params", "gen.graph"], dir.path());
    assert_eq!(out.status.code(), Some(0));
}
