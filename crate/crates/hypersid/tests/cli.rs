use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hypersid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypersid")).args(args).env_remove("HYPERSID_JOBS").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = hypersid(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas/report.schema.json")).unwrap())
            .unwrap();
    assert!(jsonschema::is_valid(&schema, &v), "{}", v);
    v
}

#[test]
fn counts_and_densities() {
    assert_eq!(stdout(&["hom", "--pattern", "path:3", "--host", "complete:2,3"]), "12\n");
    assert_eq!(stdout(&["density", "--pattern", "cycle:4", "--host", "complete:2,3"]), "18/81 = 2/9\n");
    let v = json(&["check-sidorenko", "--pattern", "cycle:4", "--host", "complete:2,3"]);
    assert_eq!(v["result"]["holds"], true);
    assert_eq!(v["result"]["target"], "16/81");
}

#[test]
fn domination_on_one_host_and_by_search() {
    let text = stdout(&["check-dominate", "--f", "cycle:4", "--fp", "complete:2,2", "--host", "complete:2,3"]);
    assert!(text.starts_with("holds, sides 2/9 vs 16/81"), "{}", text);
    let v = json(&["check-dominate", "--f", "path:4", "--max-host", "4"]);
    assert_eq!(v["result"]["counterexample"], true);
    let v = json(&["check-dominate", "--f", "cycle:4", "--max-host", "4"]);
    assert_eq!(v["result"]["counterexample"], false);
    assert!(!hypersid(&["check-dominate", "--f", "cycle:4", "--fp", "path:2"]).status.success());
}

#[test]
fn tight_cycle_certificate_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let text = stdout(&["bound", "tight-cycle", "--ell", "2", "--cert-out", cert.to_str().unwrap()]);
    assert!(text.starts_with("bound: 14\n"));
    assert!(text.contains("instance bound: 12"));
    let c: hypersid::json::CertificateJson = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let hypersid::json::CertificateJson::Bound { bound, theorem, .. } = c else { panic!() };
    assert_eq!((bound.as_str(), theorem.as_str()), ("14", "tight-cycle"));
    // hypothesis failures are errors, not certificates
    let out = hypersid(&["bound", "sparse", "--pattern", "complete:3,4"]);
    assert!(!out.status.success());
}

#[test]
fn other_bounds() {
    let v = json(&["bound", "sparse", "--pattern", "tight-cycle:3,6"]);
    assert_eq!(v["result"]["bound"], "72");
    let v = json(&["bound", "lift", "--s", "4", "--edges", "4", "--t", "2"]);
    assert_eq!(v["result"]["kind"], "bound");
    let v = json(&["bound", "bipartite-links", "--pattern", "tight-cycle:3,6", "--g", "cycle:4"]);
    assert_eq!(v["result"]["theorem"], "bipartite-links");
}

#[test]
fn worker_count_does_not_change_results() {
    let base = ["norming-suite", "--pattern", "path:4", "--trials", "60", "--seed", "9"];
    let one = stdout(&[&base[..], &["--jobs", "1"]].concat());
    let four = stdout(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);
    assert!(one.starts_with("seed: 9\nfailed"), "{}", one);
    let base = ["search-exponent", "--pattern", "cycle:4", "--evaluations", "400", "--seed", "2", "--format", "json"];
    assert_eq!(stdout(&[&base[..], &["--jobs", "1"]].concat()), stdout(&[&base[..], &["--jobs", "3"]].concat()));
}

#[test]
fn missing_seed_is_drawn_and_reported() {
    let text = stdout(&["norming-suite", "--pattern", "cycle:4", "--trials", "3"]);
    let first = text.lines().next().unwrap();
    assert!(first.starts_with("seed: ") && first.ends_with(" (drawn)"), "{}", first);
    let seed = first.trim_start_matches("seed: ").trim_end_matches(" (drawn)");
    let again = stdout(&["norming-suite", "--pattern", "cycle:4", "--trials", "3", "--seed", seed]);
    assert_eq!(text.lines().nth(1), again.lines().nth(1));
}

#[test]
fn files_round_trip_through_commands() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = dir.path().join("c6.txt");
    stdout(&["construct", "tight-cycle:3,6", "--out", c6.to_str().unwrap()]);
    let text = std::fs::read_to_string(&c6).unwrap();
    assert!(text.starts_with("3 6 6\nparts"));
    assert_eq!(stdout(&["hom", "--pattern", c6.to_str().unwrap(), "--host", "complete:3,3"]), "6\n");
    let lift = stdout(&["construct", "lift:2", "--base", "cycle:4"]);
    assert!(lift.starts_with("3 6 8\n"), "{}", lift);
}

#[test]
fn parse_errors_point_at_the_token() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "2 3 2\n0 1\n1 7\n").unwrap();
    let out = hypersid(&["hom", "--pattern", bad.to_str().unwrap(), "--host", "complete:2,3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bad.txt:3:3: vertex 7 outside 0..3"), "{}", err);
    assert!(!hypersid(&["hom", "--pattern", "no-such-family:3", "--host", "complete:2,3"]).status.success());
}

#[test]
fn csg_from_kernel_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    std::fs::write(&a, r#"{"uniformity":2,"resolution":2,"entries":[{"cells":[0,0],"value":"1"},{"cells":[0,1],"value":"1/2"}]}"#).unwrap();
    std::fs::write(&b, r#"{"uniformity":2,"resolution":2,"entries":[{"cells":[1,1],"value":"3/4"},{"cells":[0,1],"value":"1/3"}]}"#).unwrap();
    let ks = format!("{},{}", a.display(), b.display());
    let v = json(&["csg", "--pattern", "cycle:4", "--kernels", &ks, "--coloring", "0,1,0,1"]);
    assert_eq!(v["result"]["holds"], true);
    assert_eq!(v["result"]["multiplicities"], serde_json::json!([2, 2]));
}

#[test]
fn extremal_commands() {
    assert!(stdout(&["ex-small", "--n", "5", "--pattern", "cycle:4"]).starts_with("ex(5, F) = 6 "));
    let v = json(&["embed", "--host", "complete:3,4", "--pattern", "complete:2,2", "--t", "2"]);
    assert_eq!(v["result"]["found"], true);
    let v = json(&["threshold", "--n", "8", "--pattern", "complete:2,2", "--t", "1", "--s", "1"]);
    assert_eq!(v["result"]["min_edges"], 54);
    assert_eq!(v["result"]["attainable"], true);
    let v = json(&["deletion-lower", "--n", "12", "--pattern", "cycle:4"]);
    assert!(v["result"]["approx"].as_f64().unwrap() > 0.0);
}

#[test]
fn trace_on_apex_instance() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.txt");
    // apex over links {01} and {12, 23} inside C_4 on {0, 1, 2, 3}
    std::fs::write(&f, "3 7 7\nparts 1 2 1 2 3 3 3\n0 1 4\n1 2 5\n2 3 5\n0 1 6\n1 2 6\n2 3 6\n0 3 6\n").unwrap();
    let m = dir.path().join("m.txt");
    std::fs::write(&m, "2 7 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let v = json(&["trace", "--pattern", f.to_str().unwrap(), "--m", m.to_str().unwrap(), "--host", "complete:3,5"]);
    assert_eq!(v["result"]["claim1"], true);
    assert_eq!(v["result"]["final_holds"], true);
    assert_eq!(v["result"]["consistent"], true);
    let v = json(&["bound", "unified", "--pattern", f.to_str().unwrap(), "--m", m.to_str().unwrap(), "--case", "dominating"]);
    assert_eq!(v["result"]["bound"], "11");
}
