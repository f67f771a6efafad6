use std::process::{Command, Output};

use serde_json::Value;

fn freeprob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeprob")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn values(v: &Value) -> Vec<(Vec<u64>, String)> {
    v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            let w = c["word"].as_array().unwrap().iter().map(|l| l.as_u64().unwrap()).collect();
            (w, c["value"].as_str().unwrap().to_string())
        })
        .collect()
}

#[test]
fn free_add_of_diracs_is_a_dirac() {
    let v = stdout_json(&freeprob(&["free-add", "dirac:3", "dirac:4", "--order", "5"]));
    let got = values(&v);
    assert_eq!(got.len(), 5);
    for (k, (w, value)) in got.iter().enumerate() {
        assert_eq!(w.len(), k + 1);
        assert_eq!(value, &7u64.pow(k as u32 + 1).to_string());
    }
}

#[test]
fn zeta_box_moeb_is_the_unit() {
    let v = stdout_json(&freeprob(&["box-conv", "zeta", "moeb", "--s", "1", "--order", "6"]));
    assert_eq!(values(&v), vec![(vec![1], "1".to_string())]);
    let v = stdout_json(&freeprob(&["box-conv", "zeta", "moeb", "--s", "2", "--order", "4"]));
    assert_eq!(values(&v), vec![(vec![1], "1".to_string()), (vec![2], "1".to_string())]);
}

#[test]
fn files_round_trip_through_commands() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.json");
    let c = dir.path().join("c.json");
    let back = dir.path().join("back.json");
    let (m, c, back) = (m.to_str().unwrap(), c.to_str().unwrap(), back.to_str().unwrap());

    assert!(freeprob(&["law", "semicircle:1/2:3", "--order", "6", "-o", m]).status.success());
    assert!(freeprob(&["cumulants", m, "-o", c]).status.success());
    assert!(freeprob(&["moments", c, "-o", back]).status.success());
    let a: Value = serde_json::from_str(&std::fs::read_to_string(m).unwrap()).unwrap();
    let b: Value = serde_json::from_str(&std::fs::read_to_string(back).unwrap()).unwrap();
    assert_eq!(a, b);

    let cum: Value = serde_json::from_str(&std::fs::read_to_string(c).unwrap()).unwrap();
    assert_eq!(values(&cum), vec![(vec![1], "1/2".to_string()), (vec![1, 1], "3/4".to_string())]);

    // series verbs accept a distribution file as its moment series
    let r = stdout_json(&freeprob(&["m2c", m]));
    assert_eq!(values(&r), values(&cum));
}

#[test]
fn free_product_then_freeness_check() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("d.json");
    let d = d.to_str().unwrap();
    let out = freeprob(&["free-product", "x=semicircle:0:1", "y=poisson:2:1", "--order", "4", "-o", d]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&freeprob(&["check-free", d, "--groups", "x;y"]));
    assert_eq!(v["combinatorially_free"], Value::Bool(true));
    assert_eq!(v["classically_free"], Value::Bool(true));
}

#[test]
fn domain_errors_exit_one_with_a_category() {
    let out = freeprob(&["box-inv", "lambda:1"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    std::fs::write(
        &f,
        r#"{"s":1,"order":2,"ring":"rational","coeffs":[{"word":[1,1],"value":"1"}]}"#,
    )
    .unwrap();
    let out = freeprob(&["box-inv", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("error["), "{err}");
    assert!(out.stdout.is_empty());

    let out = freeprob(&["cumulants", "/nonexistent/d.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error[io]"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(freeprob(&["zeta"]).status.code(), Some(2));
    assert_eq!(freeprob(&["no-such-verb"]).status.code(), Some(2));
    assert_eq!(freeprob(&["law", "dirac:1", "--order", "3", "--ring", "mod:x"]).status.code(), Some(2));
    assert_eq!(freeprob(&["verify", "--suite", "other"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["free-mul", "semicircle:1:1", "poisson:1:2", "--order", "5"];
    let a = freeprob(&args);
    let b = freeprob(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let a = freeprob(&["verify", "--only", "1", "--seed", "7", "--order", "3"]);
    let b = freeprob(&["verify", "--only", "1", "--seed", "7", "--order", "3"]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    let text = String::from_utf8_lossy(&a.stdout);
    assert!(text.starts_with("criterion  1 [PASS]"), "{text}");
    // only the timing may differ
    let strip = |o: &Output| String::from_utf8_lossy(&o.stdout).split('(').next().unwrap().to_string();
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn modular_ring() {
    let v = stdout_json(&freeprob(&["free-add", "dirac:3", "dirac:4", "--order", "3", "--ring", "mod:5"]));
    assert_eq!(v["ring"], "mod:5");
    let got: Vec<String> = values(&v).into_iter().map(|(_, x)| x).collect();
    assert_eq!(got, vec!["2", "4", "3"]);

    // 1/2 does not exist mod 2
    let out = freeprob(&["law", "dirac:1/2", "--order", "2", "--ring", "mod:2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ring_flag_must_match_files() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("q.json");
    let p = dir.path().join("p.json");
    let (q, p) = (q.to_str().unwrap(), p.to_str().unwrap());
    assert!(freeprob(&["law", "dirac:2", "--order", "3", "-o", q]).status.success());
    assert!(freeprob(&["law", "dirac:2", "--order", "3", "--ring", "mod:7", "-o", p]).status.success());

    let out = freeprob(&["cumulants", q, "--ring", "mod:7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error[ring-mismatch]"));

    let out = freeprob(&["free-add", q, p]);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error[ring-mismatch]"));

    // the file's ring is used when no flag is given
    let v = stdout_json(&freeprob(&["cumulants", p]));
    assert_eq!(v["ring"], "mod:7");

    let out = freeprob(&["cumulants", q, "--order", "4"]);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error[shape-mismatch]"));
}

#[test]
fn hopf_verbs() {
    let v = stdout_json(&freeprob(&["coproduct", "1,2"]));
    assert_eq!(v["coproduct"], "X(1)*X(2) ⊗ X(1,2) + X(1,2) ⊗ X(1)*X(2)");
    let v = stdout_json(&freeprob(&["antipode", "(1)"]));
    assert_eq!(v["polynomial"], "X(1)^-1");
    let v = stdout_json(&freeprob(&["counit", "X(1)^-1*X(1,1) + 3*X(1) - 2"]));
    assert_eq!(v["counit"], "1");
    let v = stdout_json(&freeprob(&["hopf-check", "--s", "2", "--order", "3"]));
    assert_eq!(v["passed"], Value::Bool(true));
}

#[test]
fn s_transform_matrix_is_unipotent_for_mean_one() {
    let v = stdout_json(&freeprob(&["s-transform", "poisson:1:1", "--order", "3", "--n", "2"]));
    let rows = v["rows"].as_array().unwrap();
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().unwrap();
        assert_eq!(row[i], "1");
        for x in &row[..i] {
            assert_eq!(x, "0");
        }
    }
}

#[test]
fn witt_verbs() {
    let v = stdout_json(&freeprob(&["ghost", "lambda:1,2,3"]));
    assert_eq!(v["coeffs"], serde_json::json!(["-1", "-3", "-4"]));

    let dir = tempfile::tempdir().unwrap();
    let (l, k, e) = (dir.path().join("l.json"), dir.path().join("k.json"), dir.path().join("e.json"));
    let (l, k, e) = (l.to_str().unwrap(), k.to_str().unwrap(), e.to_str().unwrap());
    assert!(freeprob(&["log", "poisson:1:1", "--order", "4", "-o", l]).status.success());
    assert!(freeprob(&["cumulants", l, "-o", k]).status.success());
    let k: Value = serde_json::from_str(&std::fs::read_to_string(k).unwrap()).unwrap();
    assert_eq!(k["order"], 3);
    let got: Vec<String> = values(&k).into_iter().map(|(_, x)| x).collect();
    assert_eq!(got, vec!["1", "-1", "1"]);

    assert!(freeprob(&["exp", l, "-o", e]).status.success());
    let a = stdout_json(&freeprob(&["law", "poisson:1:1", "--order", "4"]));
    let b: Value = serde_json::from_str(&std::fs::read_to_string(e).unwrap()).unwrap();
    assert_eq!(a["coeffs"], b["coeffs"]);
}
