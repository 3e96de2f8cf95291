use std::process::{Command, Output};

fn qpbw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpbw")).args(args).output().expect("run qpbw")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn trivial_gamma_record() {
    let o = qpbw(&["compute", "--algebra", "A2", "--kind", "gamma", "--in", "0,0,0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"algebra\":\"A2\",\"kind\":\"gamma\",\"in\":\"0,0,0\",\"out\":\"0,0,0\",\"coeff\":\"1\"}\n");
}

#[test]
fn gamma_and_phi_are_transposed_tables() {
    // gamma from word 1 equals phi from word 2 entrywise, with in and out swapped.
    let g = qpbw(&["compute", "--algebra", "C2", "--kind", "gamma", "--weight", "2,3", "--format", "csv"]);
    let p = qpbw(&["compute", "--algebra", "C2", "--kind", "phi", "--source", "2", "--weight", "2,3", "--format", "csv"]);
    assert!(g.status.success() && p.status.success());
    let rows = |o: &Output| {
        let mut r = csv::Reader::from_reader(o.stdout.as_slice());
        let mut v: Vec<(String, String, String)> =
            r.records().map(|x| x.unwrap()).map(|x| (x[2].to_string(), x[3].to_string(), x[4].to_string())).collect();
        v.sort();
        v
    };
    let mut swapped: Vec<_> = rows(&p).into_iter().map(|(i, o, c)| (o, i, c)).collect();
    swapped.sort();
    assert!(!swapped.is_empty());
    assert_eq!(rows(&g), swapped);
}

#[test]
fn output_is_sorted_and_deterministic() {
    let dir = std::env::temp_dir();
    let a = dir.join(format!("qpbw-{}-a.json", std::process::id()));
    let b = dir.join(format!("qpbw-{}-b.json", std::process::id()));
    for path in [&a, &b] {
        let o = qpbw(&["compute", "--algebra", "A2", "--kind", "R", "--max-height", "4", "--out", path.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let keys: Vec<(Vec<i32>, Vec<i32>)> = String::from_utf8(x)
        .unwrap()
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            let t = |k: &str| v[k].as_str().unwrap().split(',').map(|s| s.parse().unwrap()).collect::<Vec<i32>>();
            (t("out"), t("in"))
        })
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compute", "--algebra", "B2", "--kind", "R", "--in", "0,0,0"][..],
        &["compute", "--algebra", "A2", "--kind", "F", "--in", "0,0,0"],
        &["compute", "--algebra", "A2", "--kind", "R", "--in", "1,2"],
        &["compute", "--algebra", "A2", "--kind", "R", "--in", "3,1,4", "--max-height", "8"],
        &["verify", "tetra", "--mode", "fuzzy"],
        &["nonsense"],
    ] {
        assert_eq!(qpbw(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_suites_pass_on_small_bounds() {
    for args in [
        &["verify", "theorem", "--algebra", "C2", "--max-height", "4"][..],
        &["verify", "props", "--algebra", "A2", "--max-height", "3"],
        &["verify", "intertwine", "--algebra", "A2", "--max-height", "2"],
        &["verify", "tetra", "--max-occ", "1", "--mode", "exact"],
    ] {
        let o = qpbw(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("PASS\n"));
    }
}

#[test]
fn config_file_sets_bounds() {
    let path = std::env::temp_dir().join(format!("qpbw-{}.conf", std::process::id()));
    std::fs::write(&path, "max_height.G2 = 2\n").unwrap();
    let o = qpbw(&["--config", path.to_str().unwrap(), "verify", "theorem", "--algebra", "G2"]);
    assert!(o.status.success());
    // Heights 0..=2 give 6 weights per source word.
    assert!(stdout(&o).starts_with("theorem G2: 12 checks, 0 failed"), "{}", stdout(&o));
    std::fs::write(&path, "max_height = lots\n").unwrap();
    assert_eq!(qpbw(&["--config", path.to_str().unwrap(), "selftest"]).status.code(), Some(2));
    let _ = std::fs::remove_file(path);
}

#[test]
fn worker_count_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qpbw"))
        .env("QPBW_WORKERS", "2")
        .args(["compute", "--algebra", "G2", "--kind", "F", "--in", "0,1,0,1,0,1"])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 9);
    let bad = Command::new(env!("CARGO_BIN_EXE_qpbw")).env("QPBW_WORKERS", "0").arg("selftest").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = qpbw(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
