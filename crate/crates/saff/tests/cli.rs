use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn saff(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_saff"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, body: &str) -> String {
    let p = scratch(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn schur_commands() {
    assert_eq!(saff(&["dim", "--n", "3", "--lambda", "2,1,0"]).1, "8\n");
    assert_eq!(
        saff(&["dual", "--n", "3", "--lambda", "[2,0,0]"]).1,
        "[2,2,0]\n"
    );
    assert_eq!(
        saff(&["tensor", "--n", "3", "--a", "1,0,0", "--b", "1,0,0"]).1,
        "[2,0,0] + [1,1,0]\n"
    );
    assert_eq!(
        saff(&["pieri", "--n", "3", "--lambda", "3,0,0", "--k", "1"]).1,
        "[4,0,0] + [3,1,0]\n"
    );
}

#[test]
fn json_reports_echo_the_seed() {
    let (code, out, _) = saff(&[
        "tensor", "--n", "3", "--a", "1", "--b", "1", "--format", "json", "--seed", "42",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["summands"].as_array().unwrap().len(), 2);
}

#[test]
fn parse_errors_name_the_token() {
    let (code, _, err) = saff(&["dim", "--n", "3", "--lambda", "2,q,0"]);
    assert_eq!(code, 1);
    assert!(err.contains("\"q\""), "{err}");
    let (code, _, _) = saff(&["dim", "--n", "3"]);
    assert_eq!(code, 1);
    let (code, _, _) = saff(&["no-such-command"]);
    assert_eq!(code, 1);
}

#[test]
fn classify_examples() {
    let wedge = write(
        "wedge10.json",
        r#"{"n":10,"summands":[{"lambda":[1,1],"mult":1}]}"#,
    );
    let (code, out, _) = saff(&["classify", &wedge, "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["class"], "Bad");
    let cubic = write(
        "cubic3.json",
        r#"{"n":3,"summands":[{"lambda":[3,0,0],"mult":1}]}"#,
    );
    let v: Value =
        serde_json::from_str(&saff(&["classify", &cubic, "--format", "json"]).1).unwrap();
    assert_eq!(v["class"], "Good");
    let (_, out, _) = saff(&[
        "classify", "--n", "3", "--lambda", "1,0,0", "--mult", "3", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["class"], "GoodHeuristic");
    assert_eq!(v["stabilizer"]["stab_dim"], 0);
    assert_eq!(v["stabilizer"]["seed"], v["seed"]);
}

#[test]
fn model_cap_is_reported() {
    let (code, _, err) = saff(&[
        "model",
        "sym-dual",
        "--n",
        "3",
        "--l",
        "4",
        "--max-model-dim",
        "10",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("10"), "{err}");
}

#[test]
fn filtrate_polynomial_model() {
    let path = scratch("poly22.json");
    let p = path.to_str().unwrap();
    assert_eq!(
        saff(&["model", "sym-dual", "--n", "2", "--l", "2", "--out", p]).0,
        0
    );
    let (code, out, _) = saff(&["filtrate", p, "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let dims: Vec<u64> = v["chain_dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(dims, [1, 3, 6]);
    for check in ["duality", "blocks", "embedding", "degree_bound"] {
        assert_eq!(v["checks"][check], true, "{check}");
    }
    // Round trip: the model file read back and written again is identical.
    let back = scratch("poly22_dual_dual.json");
    let mid = scratch("poly22_dual.json");
    saff(&["model", "dual", p, "--out", mid.to_str().unwrap()]);
    saff(&[
        "model",
        "dual",
        mid.to_str().unwrap(),
        "--out",
        back.to_str().unwrap(),
    ]);
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        std::fs::read_to_string(&back).unwrap()
    );
}

#[test]
fn filtrate_sl_only_and_example() {
    let path = scratch("ad3.json");
    let p = path.to_str().unwrap();
    saff(&[
        "model", "sl-only", "--n", "3", "--lambda", "2,1,0", "--out", p,
    ]);
    let v: Value = serde_json::from_str(&saff(&["filtrate", p, "--format", "json"]).1).unwrap();
    assert_eq!(v["layers"].as_array().unwrap().len(), 1);

    let path = scratch("forms3.json");
    let p = path.to_str().unwrap();
    saff(&["model", "exact-top-forms", "--n", "3", "--out", p]);
    let (code, out, _) = saff(&["filtrate", p, "--kind", "radical"]);
    assert_eq!(code, 0);
    assert!(out.contains("Q'_0 = (C^3)^∨"), "{out}");
    assert!(out.contains("Q'_1 = Sym^2(C^3)^∨"), "{out}");
    assert!(out.contains("Q'_2 = Sym^3(C^3)^∨ ⊕ C^3"), "{out}");
}

#[test]
fn broken_model_names_the_failed_relation() {
    let path = scratch("broken.json");
    let p = path.to_str().unwrap();
    saff(&["model", "sym-dual", "--n", "1", "--l", "1", "--out", p]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["trans_gens"][0][1][0] = Value::from("1/1");
    let bad = write("broken2.json", &v.to_string());
    let (code, _, err) = saff(&["filtrate", &bad]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"), "{err}");
}

fn ext_file(name: &str, n: usize, s: &str, q: &str, free: bool) -> String {
    let body = format!(
        r#"{{"n":{n},"S":{{"n":{n},"summands":{s}}},"Q":{{"n":{n},"summands":{q}}},"W":{{"n":{n},"summands":[]}},"assume_generically_free":{free}}}"#
    );
    write(name, &body)
}

#[test]
fn check2step_exit_codes() {
    let b = ext_file(
        "b.json",
        3,
        r#"[{"lambda":[1,0,0],"mult":8}]"#,
        r#"[{"lambda":[0,0,0],"mult":8}]"#,
        true,
    );
    let (code, out, _) = saff(&["check2step", &b, "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["outcome"], "RationalByB");

    let e = ext_file(
        "e.json",
        10,
        r#"[{"lambda":[1,1,1],"mult":1}]"#,
        r#"[{"lambda":[1,1],"mult":1}]"#,
        true,
    );
    assert_eq!(saff(&["check2step", &e]).0, 2);

    let p = ext_file(
        "p.json",
        3,
        r#"[{"lambda":[2,0,0],"mult":1}]"#,
        r#"[{"lambda":[1,0,0],"mult":1}]"#,
        false,
    );
    assert_eq!(saff(&["check2step", &p]).0, 3);

    let bad = ext_file(
        "s.json",
        3,
        r#"[{"lambda":[3,0,0],"mult":1}]"#,
        r#"[{"lambda":[1,0,0],"mult":1}]"#,
        false,
    );
    let (code, _, err) = saff(&["check2step", &bad]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn enumerate_is_deterministic_and_capped() {
    let first = saff(&["enumerate", "--n", "3"]);
    let second = saff(&["enumerate", "--n", "3"]);
    assert_eq!(first.0, 0);
    assert_eq!(first.1, second.1);
    let lines: Vec<&str> = first.1.lines().collect();
    let summary: Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(
        summary["summary"]["entries"].as_u64().unwrap() as usize,
        lines.len() - 1
    );

    let (code, out, _) = saff(&["enumerate", "--n", "3", "--max-dim-s", "14"]);
    assert_eq!(code, 0);
    for line in out.lines().filter(|l| !l.starts_with("{\"summary\"")) {
        let v: Value = serde_json::from_str(line).unwrap();
        let dim: u64 = v["S"]["summands"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| {
                let parts: Vec<i64> = s["lambda"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_i64().unwrap())
                    .collect();
                let w = saff_core::schur::Weight::normalize(3, &parts).unwrap();
                w.dim() * s["mult"].as_u64().unwrap()
            })
            .sum();
        assert!(dim <= 14);
    }

    let (code, _, err) = saff(&["enumerate", "--n", "3", "--max-dim-s", "15"]);
    assert_eq!(code, 1);
    assert!(err.contains("max-dim-s"), "{err}");
}

#[test]
fn selftest_single_criterion() {
    let (code, out, _) = saff(&["selftest", "--criterion", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("[PASS]"));
}
