use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn symcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcoh")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = symcoh(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    symcoh(args).status.code().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

#[test]
fn euler_trivial_conic() {
    let v = json(&["euler", "--pair", "conics", "--lambda", "0,0"]);
    assert_eq!(v["schema"], 1);
    let chi = v["chi"].as_array().unwrap();
    assert_eq!(chi.len(), 1);
    assert_eq!(ints(&chi[0]["weight"]), vec![0, 0]);
    assert_eq!(chi[0]["mult"].as_i64(), Some(1));
    assert_eq!(chi[0]["dim"].as_i64(), Some(1));
}

#[test]
fn bound_versus_exact() {
    let args = |mode: &'static str| ["cohomology", "--pair", "conics", "--lambda", "-14,8", mode];
    let has_01_in_h2 = |v: &Value| {
        v["records"].as_array().unwrap().iter().any(|r| {
            r["degree"] == 2
                && r["modules"].as_array().unwrap().iter().any(|m| ints(&m["weight"]) == vec![0, 1])
        })
    };
    let bound = json(&args("--bound"));
    let exact = json(&args("--exact"));
    assert!(has_01_in_h2(&bound));
    assert!(!has_01_in_h2(&exact));
    assert!(bound["records"].as_array().unwrap().iter().all(|r| r["degree"] != 1));
}

#[test]
fn output_is_deterministic() {
    let args = ["cohomology", "--pair", "CnH4", "--n", "4", "--lambda", "-5,1", "--bound"];
    let a = symcoh(&args);
    let b = symcoh(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn weights_have_ambient_length() {
    for (pair, n, lambda) in [("conics", None, "-4,2"), ("CnH4", Some("5"), "-3,0"), ("P2", None, "-6")] {
        let mut args = vec!["cohomology", "--pair", pair, "--lambda", lambda, "--bound"];
        if let Some(n) = n {
            args.extend(["--n", n]);
        }
        let v = json(&args);
        let rank = match pair {
            "CnH4" => 5,
            "P2" => 1,
            _ => 2,
        };
        assert_eq!(v["lambda"].as_array().unwrap().len(), rank);
        for r in v["records"].as_array().unwrap() {
            for m in r["modules"].as_array().unwrap() {
                assert_eq!(m["weight"].as_array().unwrap().len(), rank, "{pair}");
            }
        }
    }
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(code(&["euler", "--pair", "conics", "--lambda", "1,0", "--ambient"]), 2);
    assert_eq!(code(&["euler", "--pair", "no-such-pair", "--lambda", "0"]), 2);
    assert_eq!(code(&["euler", "--pair", "conics", "--lambda", "1,2,3"]), 2);
    assert_eq!(code(&["cohomology", "--pair", "split-A", "--n", "3", "--lambda", "0,0,0", "--exact"]), 2);
    assert_eq!(code(&["regions", "--pair", "P2", "--window", "-3:3,-3:3"]), 2);
    assert_eq!(code(&["check", "--suite", "nonsense"]), 2);
}

#[test]
fn regions_ascii_and_svg() {
    let out = symcoh(&["regions", "--pair", "conics", "--window", "-8:8,-8:8", "--emit", "ascii"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains('0') && text.contains('5'));

    let path = scratch("cnh4.svg");
    let p = path.to_str().unwrap();
    let out = symcoh(&["regions", "--pair", "CnH4", "--n", "4", "--window", "-12:4,-10:4", "--emit", "svg", "--out", p]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let svg = fs::read_to_string(&path).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    assert!(doc.descendants().filter(|n| n.is_element()).count() > 10);
}

#[test]
fn custom_pair_through_search_path() {
    let dir = scratch("pairs");
    fs::create_dir_all(&dir).unwrap();
    fs::write(
        dir.join("AIII-2.toml"),
        "name = \"AIII-2\"\nfamily = \"A\"\nrank = 3\ndelta0 = [2]\nthetabar = [[1, 3]]\n",
    )
    .unwrap();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_symcoh"))
            .args(args)
            .env("SYMCOH_PAIR_PATH", &dir)
            .output()
            .unwrap()
    };
    let out = run(&["euler", "--pair", "AIII-2", "--lambda", "0"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(ints(&v["lambda"]), vec![0, 0, 0]);

    let out = run(&["catalog-list"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let pairs = v["pairs"].as_array().unwrap();
    assert!(pairs.iter().any(|p| p["name"] == "AIII-2" && p["source"] != "builtin"));
    assert!(pairs.iter().any(|p| p["name"] == "conics" && p["source"] == "builtin"));
}

#[test]
fn check_suites_pass() {
    for suite in ["h1-vanishing", "sp-equality", "table1"] {
        let out = symcoh(&["check", "--suite", suite]);
        assert!(out.status.success(), "{suite}: {}", String::from_utf8_lossy(&out.stdout));
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("PASS") && !text.contains("FAIL"));
    }
}
