use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blanchfield"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn alexander() {
    assert_eq!(stdout(&["alexander", "trefoil"]), "t - 1 + t^-1");
    assert_eq!(stdout(&["alexander", "unknot"]), "1");
    let doc: Value = serde_json::from_str(&stdout(&["alexander", "--json", "figure-eight"])).unwrap();
    assert_eq!(doc["result"]["alexander"], "-t + 3 - t^-1");
    assert_eq!(stdout(&["alexander", "cinquefoil"]), "t^2 - t + 1 - t^-1 + t^-2");
}

#[test]
fn json_schema_and_key_order() {
    let text = stdout(&["--json", "alexander", "trefoil"]);
    let doc: Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "diagnostics", "input", "result"]);
    assert_eq!(doc["command"], "alexander");
    // byte-stable across runs
    assert_eq!(text, stdout(&["--json", "alexander", "trefoil"]));
}

#[test]
fn pairing() {
    assert_eq!(stdout(&["pairing", "trefoil", "--v", "1,0", "--w", "1,0"]), "(-t)/(t^2 - t + 1)");
    assert_eq!(stdout(&["pairing", "unknot"]), "[]");
    let doc = json(&["pairing", "trefoil-fibred"]);
    let m = &doc["result"]["matrix"];
    assert_eq!(m[0][0], "(-t)/(t^2 - t + 1)");
    assert_eq!(m[0][1], "(1)/(t^2 - t + 1)");
    assert_eq!(m[1][0], "(t - 1)/(t^2 - t + 1)");
    let doc = json(&["pairing", "trefoil", "--v", "-t,1", "--w", "t^-1,0"]);
    assert_eq!(doc["input"]["v"], "-t,1");
    assert!(doc["result"]["value"].is_string());
}

#[test]
fn mk() {
    let text = stdout(&["mk", "trefoil"]);
    assert!(text.contains("M_K(t) = [[-1, -t], [-t^-1, t - 2 + t^-1]]"), "{text}");
    assert!(text.contains("det M_K = -t + 1 - t^-1"), "{text}");
    assert!(stdout(&["mk", "unknot"]).starts_with("M_K(t) = []"));
    let doc = json(&["mk", "figure-eight"]);
    assert_eq!(doc["result"]["det"], "t - 3 + t^-1");
}

#[test]
fn signature() {
    assert_eq!(stdout(&["signature", "trefoil", "--z", "theta:3.14159"]), "-2");
    assert_eq!(stdout(&["signature", "trefoil", "--z", "-1+0i"]), "-2");
    let profile = stdout(&["signature", "unknot", "--samples", "5"]);
    let values: Vec<&str> = profile.lines().map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(values, ["0"; 5]);
    assert_eq!(stdout(&["signature", "trefoil", "--z", "theta:3.14159", "--check-mk"]), "-2 -2 OK");
}

#[test]
fn indeterminate_points_are_marked() {
    let root = format!("theta:{}", std::f64::consts::FRAC_PI_3);
    assert_eq!(stdout(&["signature", "trefoil", "--z", &root]), "?");
    let doc = json(&["signature", "trefoil", "--samples", "5"]);
    assert!(doc["result"][1]["signature"].is_null());
    assert_eq!(doc["result"][2]["signature"], -2);
    assert_eq!(doc["diagnostics"].as_array().unwrap().len(), 1);
}

#[test]
fn verify() {
    let text = stdout(&["verify", "trefoil", "--trials", "100", "--seed", "7"]);
    assert!(!text.contains("FAIL"), "{text}");
    assert!(text.contains("well-defined: PASS"));
    assert!(text.contains("kearton-ill-defined: WITNESS FOUND"));
    let text = stdout(&["verify", "unknot"]);
    assert!(!text.contains("FAIL"), "{text}");
    let a = stdout(&["verify", "--random", "3", "4", "--seed", "1", "--trials", "3"]);
    assert_eq!(a, stdout(&["verify", "--random", "3", "4", "--seed", "1", "--trials", "3"]));
    assert!(!a.contains("FAIL"), "{a}");
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["alexander", "no-such-knot"],
        vec!["mk", "trefoil-fibred"],
        vec!["pairing", "trefoil", "--v", "1", "--w", "1,0"],
        vec!["pairing", "trefoil", "--v", "1,q", "--w", "1,0"],
        vec!["signature", "trefoil", "--z", "0.5+0i"],
        vec!["signature", "trefoil"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn files_and_invariant_errors() {
    let dir = std::env::temp_dir().join(format!("blanchfield-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let good = dir.join("trefoil.txt");
    std::fs::write(&good, stdout(&["show", "trefoil"])).unwrap();
    assert_eq!(stdout(&["alexander", good.to_str().unwrap()]), "t - 1 + t^-1");

    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "name: bad\nkind: fibred\nP: [[1,0],[0,1]]\nJ: [[0,1],[1,0]]\n").unwrap();
    let out = run(&["alexander", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("J skew-symmetric"));

    let broken = dir.join("broken.txt");
    std::fs::write(&broken, "name: x\nkind: seifert\nA: [[1,\n").unwrap();
    let out = run(&["alexander", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn list_names_every_builtin() {
    let text = stdout(&["list"]);
    for name in ["unknot", "trefoil", "figure-eight", "trefoil-fibred"] {
        assert!(text.lines().any(|l| l.split_whitespace().next() == Some(name)), "{name}");
    }
}
