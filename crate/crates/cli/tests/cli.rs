use std::process::{Command, Output};

fn bnclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bnclass")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn chern_text_and_json() {
    let out = bnclass(&["chern", "--r", "1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1/8*a^2 + -1/8*b");
    let out = bnclass(&["chern", "--r", "1", "--n", "2", "--variant", "alpha0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["poly"], "-1/8*b");
    assert_eq!(v["variant"], "alpha0");
}

#[test]
fn class_json_has_matrix() {
    let out = bnclass(&["class", "--r", "1", "--k", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["K"], 6);
    assert_eq!(v["matrix"][1][0], "1/8*a^2 + -1/8*b");
}

#[test]
fn certificate_schema() {
    let out = bnclass(&["certify", "--r", "1", "--k", "5", "--g", "11", "--mode", "direct", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in
        ["r", "k", "g", "prefactor_bits", "M", "Mprime", "test", "value", "verdict", "valid_for_all_genus_ge"]
    {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["verdict"], "nonzero");
    assert_eq!(v["valid_for_all_genus_ge"], 11);
    assert!(v["M"][0].is_string());
}

#[test]
fn verdicts_are_never_zero() {
    for (r, k, g, mode) in [(1, 5, 11, "direct"), (2, 4, 13, "theorem36"), (1, 1, 5, "direct")] {
        let (r, k, g) = (r.to_string(), k.to_string(), g.to_string());
        let out = bnclass(&["certify", "--r", &r, "--k", &k, "--g", &g, "--mode", mode]);
        let text = stdout(&out);
        let verdict = text.lines().find_map(|l| l.strip_prefix("verdict ")).unwrap();
        let token = verdict.split_whitespace().next().unwrap();
        assert!(token == "nonzero" || token == "inconclusive", "{text}");
    }
}

#[test]
fn pairings() {
    let out = bnclass(&["pair", "--g", "3", "--monomial", "6,0,0"]);
    assert!(stdout(&out).contains("= 224"));
    let out = bnclass(&["pair-class", "--g", "3", "--r", "1", "--k", "2"]);
    assert!(stdout(&out).contains("= 1 "));
    let out = bnclass(&["pair-class", "--g", "8", "--r", "1", "--k", "4", "--engine", "thaddeus"]);
    assert!(stdout(&out).contains("= 13 "));
    let out = bnclass(&["--no-thaddeus", "pair", "--g", "5", "--monomial", "12,0,0", "--engine", "thaddeus"]);
    assert_eq!(out.status.code(), Some(1));
    let out = bnclass(&["pair", "--g", "4", "--monomial", "9,0,0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ideal_expression() {
    let out = bnclass(&["ideal", "--g", "3", "--express", "c6"]);
    let text = stdout(&out);
    assert!(text.starts_with("46080*c6"));
    assert!(text.contains("eta4: 17/1*a^2 + 75/1*b"));
    assert!(text.contains("unique: true"));
    let out = bnclass(&["ideal", "--g", "4", "--express", "c6", "--r", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn thresholds_csv() {
    let out = bnclass(&["thresholds", "--r", "1", "--k", "1..5"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,k,K,g0,g_prime,g_thm,teixidor,improves_teixidor"));
    assert!(text.contains("1,2,6,3,3,7,3,false"));
    assert!(text.contains("\n1,5,30,11,11,13,19,true"));
}

#[test]
fn scan_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_bnclass"))
            .args(["scan", "--r", "1..2", "--k", "1..5"])
            .env("BN_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let text = stdout(&one);
    assert!(text.starts_with("r,k,K,g0,g_prime,g_thm,teixidor,certified_g,verdict\n"));
    assert!(text.contains("1,5,30,11,11,13,19,11,nonzero"));
    assert_eq!(run("zero").status.code(), Some(1));
}

#[test]
fn scan_writes_file() {
    let dir = std::env::temp_dir().join(format!("bnclass-scan-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = bnclass(&["scan", "--r", "1", "--k", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_exit_codes() {
    let out = bnclass(&["verify", "--suite", "appendix"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().skip(1).all(|l| l.starts_with("PASS ")));
    // u = v = 4, r = 1, p = 5 vanishes although it meets the stated bound
    let out = bnclass(&[
        "verify", "--suite", "hankel", "--r-max", "1", "--k-max", "2", "--u-max", "4", "--p-max", "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("FAIL det A_uv non-vanishing"));
    let out = bnclass(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors() {
    assert_eq!(bnclass(&["--help"]).status.code(), Some(0));
    assert_eq!(bnclass(&["chern", "--r", "1"]).status.code(), Some(1));
    assert_eq!(bnclass(&["chern", "--r", "1", "--n", "2", "--bogus"]).status.code(), Some(1));
    assert_eq!(bnclass(&["certify", "--r", "1", "--k", "5", "--g", "12"]).status.code(), Some(1));
    assert_eq!(
        bnclass(&["certify", "--r", "1", "--k", "5", "--g", "11", "--mode", "x"]).status.code(),
        Some(1)
    );
    assert_eq!(bnclass(&["scan", "--r", "3..1"]).status.code(), Some(1));
}
