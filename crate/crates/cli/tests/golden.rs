use std::process::{Command, Output};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fatpoints"))
        .args(args)
        .env("LC_ALL", "C")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn value(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}\t")))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
        .to_string()
}

#[test]
fn hilbert_of_twenty_one_points() {
    let out = stdout(&["hilbert", &data("twentyone.json")]);
    assert!(out.trim_end().ends_with("1,3,6,10,14,17,20,21 (stable)"), "{out}");
    assert!(out.contains("5\t4\t17\n"));
    let pretty = stdout(&["--format", "pretty", "hilbert", &data("twentyone.json")]);
    assert!(pretty.trim_end().ends_with("20,21 (stable)"));
}

#[test]
fn reduction_and_vector_commands() {
    let out = stdout(&["reduction", &data("twentyone.json")]);
    assert_eq!(value(&out, "d"), "(8,6,5,2)");
    assert_eq!(value(&stdout(&["diag", "8,6,5,2"]), "diag"), "1,2,3,4,4,3,3,1");
    let out = stdout(&["cht-bounds", "8,5,5,2", "--t", "6"]);
    assert_eq!(out.lines().nth(1).unwrap(), "6\t19\tfalse\t19");
    let out = stdout(&["realize", "--dvector", "3,2,1"]);
    assert_eq!(value(&out, "H_R/I"), "1,3,6 (stable)");
    let pretty = stdout(&["--format", "pretty", "diag", "3,1"]);
    assert!(pretty.ends_with("*\n* * *\n"), "{pretty}");
}

#[test]
fn reduce_seventeen() {
    let out = stdout(&["reduce", "17;6,6,6,6,6,6,6,6"]);
    assert_eq!(value(&out, "reduced"), "e0");
    assert!(value(&out, "word").starts_with("s0 "));
    assert_eq!(value(&stdout(&["shgh-alpha", "6,6,6,6,6,6,6,6"]), "alpha"), "17");
}

#[test]
fn macaulay_and_sequences() {
    let out = stdout(&["macaulay", "--h", "15", "--d", "3"]);
    assert_eq!(value(&out, "growth"), "22");
    assert_eq!(value(&out, "expansion"), "C(5,3) + C(3,2) + C(2,1)");
    let out = stdout(&["osequence", "1,3,6,9,10,11"]);
    assert_eq!(value(&out, "kind"), "differentiable-O");
    assert_eq!(value(&stdout(&["osequence", "1,3,2,0"]), "kind"), "O");
    let out = stdout(&["gmr", "--sequence", "1,3,6,9,10,11"]);
    assert_eq!(value(&out, "J"), "x1^6, x1^3*x2, x1^2*x2^2, x2^3");
    assert_eq!(value(&out, "points").split(' ').count(), 11);
}

#[test]
fn curves() {
    let pair = data("cusp_pair.json");
    let out = stdout(&["intmult", &pair, "--point", "0,1,0"]);
    assert_eq!(value(&out, "I_p"), "3");
    let out = stdout(&["bezout", &pair]);
    assert_eq!(value(&out, "total"), "6");
    assert_eq!(value(&out, "complete"), "true");
    let out = stdout(&["tangent", &pair, "--point", "1,1,1"]);
    assert!(out.contains("0\tX1 - 2*X2\n"), "{out}");
    assert_eq!(value(&out, "common_tangent"), "false");
    assert_eq!(value(&stdout(&["mult", &pair, "--point", "1,1,1", "--curve", "1"]), "mult"), "1");
    let out = stdout(&["bezout", &data("tangent_line.json")]);
    assert_eq!(value(&out, "total"), "2");
    assert!(out.contains("(1:0:0)\t2\n"));
}

#[test]
fn picard() {
    assert_eq!(value(&stdout(&["pair", "4;3,3,1,1", "1;1,1,0,0"]), "pairing"), "-2");
    assert_eq!(value(&stdout(&["weyl", "--word", "0", "0;-1,0,0"]), "basis"), "e0-e2-e3");
    assert_eq!(value(&stdout(&["expdim", "4;3,3,1,1"]), "expdim"), "1");
    let out = stdout(&["shgh", "13,13,10,10,10,10,10", "--t", "30"]);
    assert_eq!(value(&out, "H_I"), "39");
    assert_eq!(value(&stdout(&["exceptional", "--r", "6"]), "count"), "27");
}

#[test]
fn schemes() {
    let tri = data("triangle.json");
    assert_eq!(value(&stdout(&["alpha", &tri]), "alpha"), "2");
    let out = stdout(&["waldschmidt", &tri, "--mmax", "2"]);
    assert_eq!(value(&out, "upper"), "3/2");
    assert_eq!(value(&out, "lower"), "1");
    let out = stdout(&["containment", &tri, "--m", "2", "--r", "2", "--direction", "symbolic-in-ordinary"]);
    assert_eq!(value(&out, "holds"), "false");
    assert_eq!(value(&out, "degree"), "3");
    let out = stdout(&["containment", &tri, "--m", "3", "--r", "2"]);
    assert_eq!(value(&out, "holds"), "false");
    let out = stdout(&["generators", &tri]);
    assert_eq!(out.lines().count(), 4);
    let out = stdout(&["--field", "10007", "alpha", "star:4x3"]);
    assert_eq!(value(&out, "alpha"), "7");
}

#[test]
fn seeded_output_is_deterministic() {
    let args = ["--field", "2147483647", "--seed", "9", "waldschmidt", "generic:4", "--mmax", "3"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    assert_eq!(value(&a, "upper"), "2");
    let unseeded = ["--field", "2147483647", "realize", "--dvector", "4,2", "--json"];
    assert_eq!(stdout(&unseeded), stdout(&unseeded));
}

#[test]
fn exit_statuses() {
    let out = run(&["reduce", "17;6,x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("class"));
    let out = run(&["hilbert", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["alpha", &data("triangle.json"), "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["shgh", "1,1,1,1,1,1,1,1,1,1", "--t", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["--field", "100", "diag", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--field"));
    let out = run(&["exceptional", "--r", "9"]);
    assert_eq!(out.status.code(), Some(1));
}
