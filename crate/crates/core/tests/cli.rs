use std::process::{Command, Output};

fn bkl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bkl-braid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normalize_prints_normal_forms() {
    let o = bkl(&["normalize", "--n", "3", "a(3,2) a(2,1)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "D^1 e\n");
    assert_eq!(stdout(&bkl(&["normalize", "--n", "3", ""])), "e\n");
    assert_eq!(
        stdout(&bkl(&["normalize", "--n", "3", "a(2,1) a(2,1) a(3,1)"])),
        "D^1 a(3,2)\n"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(
        bkl(&["equal", "--n", "4", "s1 s2 s1", "s2 s1 s2"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        bkl(&["equal", "--n", "3", "a(2,1)", "a(3,1)"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        bkl(&["equal", "--n", "3", "D D^-1", ""]).status.code(),
        Some(0)
    );
    let bad = bkl(&["normalize", "--n", "3", "a(2,1) a(9,1)"]);
    assert_eq!(bad.status.code(), Some(2));
    let msg = String::from_utf8(bad.stderr).unwrap();
    assert!(msg.contains("token 1") && msg.contains("column 8"), "{msg}");
    assert_eq!(bkl(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bkl(&["--help"]).status.code(), Some(0));
}

#[test]
fn crosscheck_and_conversion() {
    let o = bkl(&["equal", "--n", "5", "--crosscheck", "a(5,1) D", "D a(2,1)"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(
        stdout(&bkl(&["convert", "--n", "4", "--to", "artin", "a(3,1)"])),
        "s2 s1 s2^-1\n"
    );
    assert_eq!(
        stdout(&bkl(&["convert", "--n", "4", "--to", "band", "s2"])),
        "a(3,2)\n"
    );
    assert_eq!(
        stdout(&bkl(&["convert", "--n", "3", "--to", "band", "s1^-1"])),
        "D^-1 a(3,2)\n"
    );
}

#[test]
fn verify_and_selftest_pass() {
    for (n, m) in [("3", "1"), ("2", "2"), ("4", "0")] {
        let o = bkl(&["verify", "--n", n, "--max-wildcard", m]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    for (n, trials, seed) in [("3", "100", "7"), ("2", "10", "0"), ("5", "200", "1")] {
        let o = bkl(&["selftest", "--n", n, "--trials", trials, "--seed", seed]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
}

#[test]
fn structured_output_is_reproducible() {
    let args = [
        "verify",
        "--n",
        "4",
        "--max-wildcard",
        "0",
        "--format",
        "json-like",
    ];
    let (a, b) = (bkl(&args), bkl(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["coverage"], "complete");
    assert!(v["failures"].as_array().unwrap().is_empty());
}
