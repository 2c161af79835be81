use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn nderiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nderiv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn builtin(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut full = vec!["builtin"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let o = nderiv(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn every_builtin_writes_a_valid_file() {
    let dir = TempDir::new().unwrap();
    let cases: &[(&str, &[&str])] = &[
        ("sv.json", &["sv", "--max", "2"]),
        ("sv-nc.json", &["sv", "--max", "2", "--no-center"]),
        ("witt.json", &["witt", "--d", "2", "--max", "1"]),
        ("sl.json", &["sl", "--n", "3"]),
        ("borel.json", &["borel", "--n", "3", "--sign", "-"]),
        ("k.json", &["K"]),
    ];
    for (name, args) in cases {
        let p = builtin(&dir, name, args);
        let bytes = std::fs::read(&p).unwrap();
        nderiv::format::load(&bytes).unwrap();
        let o = nderiv(&["check", s(&p)]);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).contains("\"valid\": true"));
    }
}

#[test]
fn sv_comparison_is_equal() {
    let dir = TempDir::new().unwrap();
    let sv = builtin(&dir, "sv4.json", &["sv", "--max", "4"]);
    let o = nderiv(&[
        "compare",
        s(&sv),
        "--orders",
        "2,3",
        "--gamma",
        "0",
        "--buffer",
        "4",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("\"equal\": true"));
}

#[test]
fn counterexample_comparison_prints_witness() {
    let dir = TempDir::new().unwrap();
    let k = builtin(&dir, "K.json", &["K"]);
    let o = nderiv(&[
        "compare",
        s(&k),
        "--orders",
        "2,3",
        "--gamma",
        "-2",
        "--buffer",
        "0",
    ]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equal"], false);
    assert_eq!(v["witness"]["order"], 3);
    assert_eq!(
        v["witness"]["vector"],
        serde_json::json!([["M_1,M_-1", "1"]])
    );
}

#[test]
fn gamma_range_sweep() {
    let dir = TempDir::new().unwrap();
    let k = builtin(&dir, "K.json", &["K"]);
    let o = nderiv(&[
        "compare",
        s(&k),
        "--orders",
        "2,4",
        "--gamma-range",
        "-2..2",
        "--buffer",
        "0",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 5);
    let o = nderiv(&[
        "compare",
        s(&k),
        "--orders",
        "2,3",
        "--gamma-range",
        "-2..2",
        "--buffer",
        "0",
    ]);
    assert_eq!(code(&o), 1);
}

const K_SOLVE_GOLDEN: &str = r#"{
  "N": 2,
  "algebra": "K",
  "basis": [
    [
      [
        "M_1,M_1",
        "1"
      ]
    ],
    [
      [
        "M_-1,M_-1",
        "1"
      ]
    ]
  ],
  "constraints": 1,
  "gamma": [
    0
  ],
  "nullity": 2,
  "unknowns": 3
}
"#;

#[test]
fn solve_report_golden() {
    let dir = TempDir::new().unwrap();
    let k = builtin(&dir, "K.json", &["K"]);
    let out = dir.path().join("solve.json");
    let o = nderiv(&[
        "solve",
        s(&k),
        "--order",
        "2",
        "--gamma",
        "0",
        "-o",
        s(&out),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), K_SOLVE_GOLDEN);
    let o = nderiv(&[
        "solve",
        s(&k),
        "--order",
        "2",
        "--gamma",
        "0",
        "--format",
        "text",
    ]);
    assert!(stdout(&o).contains("nullity      2"));
}

#[test]
fn property_p_reports() {
    let dir = TempDir::new().unwrap();
    let sv = builtin(&dir, "sv4.json", &["sv", "--max", "4"]);
    let o = nderiv(&["propp", s(&sv), "--element", "L_1"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let w = &v["witnesses"][0];
    assert_eq!(w["kind"], "P2");
    assert_eq!(w["partner"], "L_-1");
    assert_eq!(w["verified"], true);

    let o = nderiv(&["propp", s(&sv), "--element", "M_1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witnesses"][0]["left"], "L_-3");
    assert_eq!(v["witnesses"][0]["right"], "1/4*M_4");

    let k = builtin(&dir, "K.json", &["K"]);
    let o = nderiv(&["propp", s(&k), "--all-basis"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("none-found"));
}

#[test]
fn decompose_map_file() {
    let dir = TempDir::new().unwrap();
    let k = builtin(&dir, "K.json", &["K"]);
    let map = dir.path().join("map.json");
    std::fs::write(
        &map,
        r#"{"images": [{"source": "L_0", "value": [{"label": "M_1", "c": "1"}, {"label": "M_-1", "c": "1"}]}]}"#,
    )
    .unwrap();
    let o = nderiv(&["decompose", s(&k), "--map", s(&map)]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let gammas: Vec<&serde_json::Value> = v["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| &c["gamma"])
        .collect();
    assert_eq!(gammas, [&serde_json::json!([-1]), &serde_json::json!([1])]);
}

#[test]
fn invalid_algebra_is_a_negative_result() {
    let dir = TempDir::new().unwrap();
    let k = builtin(&dir, "K.json", &["K"]);
    let text = std::fs::read_to_string(&k).unwrap();
    // [L_0, M_1] = 2 M_1 and [L_0, M_-1] = 5 L_0 break the eigenvector and grading conditions
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut v = v;
    v["brackets"][0]["terms"][0]["c"] = "2".into();
    v["brackets"][1]["terms"] = serde_json::json!([{"k": 0, "c": "5"}]);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_vec(&v).unwrap()).unwrap();
    let o = nderiv(&["check", s(&bad), "--format", "text"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(
        out.contains("violation 1:") && out.contains("violation 2:"),
        "{out}"
    );
    assert_eq!(
        code(&nderiv(&["solve", s(&bad), "--order", "2", "--gamma", "0"])),
        1
    );
}

#[test]
fn usage_and_io_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let k = builtin(&dir, "K.json", &["K"]);
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&nderiv(&["check", s(&missing)])), 2);
    assert_eq!(
        code(&nderiv(&["solve", s(&k), "--order", "1", "--gamma", "0"])),
        2
    );
    assert_eq!(
        code(&nderiv(&["solve", s(&k), "--order", "2", "--gamma", "0,0"])),
        2
    );
    assert_eq!(
        code(&nderiv(&[
            "compare",
            s(&k),
            "--orders",
            "2",
            "--gamma",
            "0"
        ])),
        2
    );
    assert_eq!(
        code(&nderiv(&[
            "compare",
            s(&k),
            "--orders",
            "2,3",
            "--gamma",
            "0",
            "--buffer",
            "1"
        ])),
        2
    );
    assert_eq!(code(&nderiv(&["propp", s(&k), "--element", "X"])), 2);
    assert_eq!(code(&nderiv(&["frobnicate"])), 2);
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{").unwrap();
    assert_eq!(code(&nderiv(&["check", s(&garbage)])), 2);
    let o = nderiv(&["solve", s(&k), "--order", "2", "--gamma", "0", "--bogus"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--bogus"));
}

#[test]
fn reports_are_byte_stable() {
    let dir = TempDir::new().unwrap();
    let sv = builtin(&dir, "sv.json", &["sv", "--max", "3"]);
    let run = || {
        nderiv(&[
            "compare",
            s(&sv),
            "--orders",
            "2,3",
            "--gamma-range",
            "-2..2",
            "--buffer",
            "3",
        ])
        .stdout
    };
    assert_eq!(run(), run());
    let run = || nderiv(&["propp", s(&sv), "--seed", "7", "--samples", "4"]).stdout;
    assert_eq!(run(), run());
    let again = builtin(&dir, "sv2.json", &["sv", "--max", "3"]);
    assert_eq!(std::fs::read(&sv).unwrap(), std::fs::read(&again).unwrap());
}
