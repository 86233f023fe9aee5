use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pipedream-reg"))
        .args(args)
        .env_remove("PIPEDREAM_REG_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bin(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn assert_golden(args: &[&str], name: &str) {
    assert_eq!(stdout(args), golden(name), "{args:?}");
}

#[test]
fn stats_goldens() {
    assert_golden(&["stats", "293417568"], "stats_293417568.txt");
    assert_golden(&["stats", "462357918"], "stats_462357918.txt");
    assert_golden(&["stats", "1"], "stats_1.txt");
    let s = golden("stats_293417568.txt");
    for line in ["raj_code           (3,7,2,2,1,2,0,0,0)", "raj                17", "inv                12", "regularity         5"] {
        assert!(s.contains(line), "{line}");
    }
    assert!(golden("stats_462357918.txt").contains("2|34|56|17|89"));
}

#[test]
fn poly_goldens() {
    assert_golden(&["poly", "1243", "--which", "cmxy"], "poly_1243_cmxy.txt");
    assert_golden(&["poly", "4123", "--which", "rajpoly"], "poly_4123_rajpoly.txt");
    assert_golden(&["poly", "1", "--which", "groth"], "poly_1_groth.txt");
    assert_golden(&["poly", "1432", "--which", "groth", "--cross-check"], "poly_1432_groth.txt");
    assert_eq!(golden("poly_1243_cmxy.txt"), "x1*x2*x3*y1*y2*y3\n");
    assert_eq!(golden("poly_4123_rajpoly.txt"), "x1^3\n");
}

#[test]
fn cross_check_every_kind() {
    for which in ["groth", "grothxy", "schubert", "cm", "cmxy", "rajpoly"] {
        for w in ["2143", "1432", "31524"] {
            stdout(&["poly", w, "--which", which, "--cross-check"]);
        }
    }
}

#[test]
fn pipedream_goldens() {
    assert_golden(&["pipedreams", "42153", "count"], "pipedreams_42153_count.txt");
    assert_golden(&["pipedreams", "42153", "list"], "pipedreams_42153_list.txt");
    assert_golden(&["pipedreams", "14523", "max"], "pipedreams_14523_max.txt");
    assert_golden(&["pipedreams", "1", "max"], "pipedreams_1_max.txt");
    assert_eq!(golden("pipedreams_42153_count.txt"), "reduced 3\ntotal 7\n");
    assert!(golden("pipedreams_14523_max.txt").contains("crosses 6\n"));
}

#[test]
fn maxreg_golden() {
    assert_golden(&["maxreg", "10"], "maxreg_10.txt");
    let values: Vec<String> = golden("maxreg_10.txt")
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(2).unwrap().to_string())
        .collect();
    assert_eq!(values, ["0", "0", "1", "2", "4", "7", "10", "14", "19", "25"]);
    let enumerated = stdout(&["maxreg", "6", "--enumerate"]);
    assert!(enumerated.lines().nth(4).unwrap().contains("1243 1432 2143"));
}

#[test]
fn verify_golden() {
    assert_golden(&["verify", "fireworks_bell", "5"], "verify_fireworks_bell_5.txt");
    assert!(golden("verify_fireworks_bell_5.txt").contains("1,2,5,15,52"));
}

#[test]
fn json_outputs_parse() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "verify", "maxreg", "6"])).unwrap();
    assert_eq!(v["passed"], true);
    let r = &v["reports"][0];
    for key in ["check", "n_max", "checked", "failures", "ms"] {
        assert!(r.get(key).is_some(), "{key}");
    }
    let s: pipedream_reg::PermStats =
        serde_json::from_str(&stdout(&["--format", "json", "stats", "462357918"])).unwrap();
    assert_eq!(s.raj, 20);
    let c: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "pipedreams", "42153", "count"])).unwrap();
    assert_eq!((c["reduced"].as_u64(), c["total"].as_u64()), (Some(3), Some(7)));
}

#[test]
fn csv_outputs() {
    let s = stdout(&["--format", "csv", "stats", "1"]);
    assert_eq!(s.lines().count(), 2);
    assert!(s.starts_with("perm,inv,inv_code"));
}

#[test]
fn output_is_stable() {
    let a = stdout(&["verify", "cover_lemmas", "valley_unique", "4"]);
    let b = stdout(&["--jobs", "2", "verify", "cover_lemmas", "valley_unique", "4"]);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["verify", "no_such_check"]).status.code(), Some(2));
    assert_eq!(bin(&["stats", "1233"]).status.code(), Some(2));
    assert_eq!(bin(&["bogus"]).status.code(), Some(2));
    assert_eq!(bin(&["pipedreams", "12345678", "count"]).status.code(), Some(3));
    assert_eq!(bin(&["verify", "cauchy", "5"]).status.code(), Some(3));
    assert_eq!(bin(&["maxreg", "9", "--enumerate"]).status.code(), Some(3));
    assert_eq!(bin(&["poly", "12345678", "--which", "groth", "--cross-check"]).status.code(), Some(3));
}

#[test]
fn cap_override_warns() {
    let out = Command::new(env!("CARGO_BIN_EXE_pipedream-reg"))
        .args(["verify", "cauchy", "4"])
        .env("PIPEDREAM_REG_CAP", "5")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}
