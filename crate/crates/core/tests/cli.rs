use std::process::{Command, Output};

fn qfrob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfrob"))
        .args(args)
        .env("QFROB_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_temp(name: &str, body: &str) -> std::path::PathBuf {
    let p = std::env::temp_dir().join(format!("qfrob-{}-{name}", std::process::id()));
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn pbar_strings() {
    for (args, expected) in [
        (["--n", "2", "--m", "3", "--k", "1"], "y1^3 - 3*y1\n"),
        (["--n", "3", "--m", "2", "--k", "1"], "y1^2 - 2*y2\n"),
        (["--n", "4", "--m", "1", "--k", "3"], "y3\n"),
    ] {
        let mut full = vec!["pbar"];
        full.extend(args);
        let o = qfrob(&full);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), expected);
    }
    let json = qfrob(&["pbar", "--n", "2", "--m", "2", "--k", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["n"], 2);
}

#[test]
fn bad_ranges_exit_two() {
    assert_eq!(qfrob(&["pbar", "--n", "3", "--m", "2", "--k", "3"]).status.code(), Some(2));
    assert_eq!(qfrob(&["pbar", "--n", "3"]).status.code(), Some(2));
    assert_eq!(qfrob(&["verify", "frobenius", "--n", "2", "--order", "32"]).status.code(), Some(2));
}

#[test]
fn verify_examples_pass() {
    let o = qfrob(&["verify", "frobenius", "--n", "2", "--order", "48", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports[0]["verdict"], "pass");
    assert_eq!(reports[0]["N"], 3);
    // 2n^2 N^2 = 72 = 24 mod 48, half the order
    assert_eq!(reports[0]["eta"], -1);
    let o = qfrob(&["verify", "classical", "--n", "4", "--m", "5", "--k", "2", "--trials", "20", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn quick_suite_is_fast_and_deterministic() {
    let start = std::time::Instant::now();
    let a = qfrob(&["verify", "all", "--level", "quick", "--no-timing"]);
    assert!(start.elapsed().as_secs() < 60);
    assert_eq!(a.status.code(), Some(0));
    let b = qfrob(&["verify", "all", "--level", "quick", "--no-timing"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn quiver_golden_triangle() {
    let o = qfrob(&["quiver", "--preset", "P3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["K"], serde_json::json!([[1, 1, 0], [0, 1, 1], [1, 0, 1]]));
    assert_eq!(v["vertices"][0], "f0(0,1,1)");
    assert_eq!(v["extended"]["V"].as_array().unwrap().len(), 6);

    let surface = write_temp("p4.json", r#"{"n": 3, "faces": 2, "gluings": [[0, 1, 1, 1]]}"#);
    let o = qfrob(&["quiver", "--surface", surface.to_str().unwrap(), "--emit", "K"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["HK_is_n_identity"], true);
    assert!(v.get("Q").is_none());
}

#[test]
fn quiver_errors() {
    let closed = write_temp("closed.json", r#"{"n": 2, "faces": 2, "gluings": [[0,1,1,1],[0,2,1,3],[0,3,1,2]]}"#);
    let o = qfrob(&["quiver", "--surface", closed.to_str().unwrap(), "--emit", "QHKP,extended"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("closed surface"));

    let broken = write_temp("broken.json", r#"{"n": 2, "faces": "#);
    let path = broken.to_str().unwrap();
    assert_eq!(qfrob(&["quiver", "--surface", path]).status.code(), Some(2));

    let self_glued = write_temp("self.json", r#"{"n": 2, "faces": 1, "gluings": [[0, 1, 0, 2]]}"#);
    let o = qfrob(&["quiver", "--surface", self_glued.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let rep: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep["verdict"], "fail");
}
