use std::io::Write;
use std::process::{Command, Output};

use partition_sieve::catalog::Builtin;
use partition_sieve::pairfile::render_family_pair;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_partition-sieve"));
    cmd.env_remove("PARTITION_SIEVE_THREADS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_temp(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn dist_euler_x_at_four() {
    let o = run(&[
        "dist", "--pair", "euler", "--side", "X", "--n", "4", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["0"], "2");
    assert_eq!(v["counts"]["1"], "3");
    assert_eq!(v["total"], "5");
}

#[test]
fn dist_glaisher_y_csv_equals_x() {
    let y = run(&[
        "dist", "--pair", "glaisher", "--d", "2", "--side", "Y", "--n", "4", "--format", "csv",
    ]);
    let x = run(&[
        "dist", "--pair", "glaisher", "--d", "2", "--side", "X", "--n", "4", "--format", "csv",
    ]);
    assert_eq!(y.status.code(), Some(0));
    assert!(stdout(&y).starts_with("n,j,count,total\n"));
    assert_eq!(stdout(&x), stdout(&y));
}

#[test]
fn compare_exit_codes() {
    assert_eq!(
        run(&["compare", "--pair", "euler", "--n-max", "20"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["compare", "--pair", "remmel_consecutive", "--n-max", "20"])
            .status
            .code(),
        Some(0)
    );
    let o = run(&["compare", "--pair", "mod6", "--prose-y", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first at n=6"), "{}", stdout(&o));
}

#[test]
fn sieve_reports_crosscheck() {
    let o = run(&["sieve", "--pair", "euler", "--side", "X", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("crosscheck: PASS"), "{out}");
    assert!(out.contains("N_0 = 5") && out.contains("N_1 = 3"), "{out}");
    let o = run(&["sieve", "--pair", "euler", "--side", "X", "--n", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("crosscheck: PASS"));
    let o = run(&[
        "sieve",
        "--pair",
        "euler",
        "--side",
        "X",
        "--n",
        "30",
        "--subset-cap",
        "10",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["truncated"], true);
}

#[test]
fn check_commands() {
    assert_eq!(
        run(&[
            "check",
            "--pair",
            "squares",
            "--theorem",
            "b",
            "--n-max",
            "30"
        ])
        .status
        .code(),
        Some(0)
    );
    let o = run(&[
        "check",
        "--pair",
        "remmel_consecutive",
        "--theorem",
        "b",
        "--n-max",
        "30",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"]["element"], "4");
    assert_eq!(
        run(&[
            "check",
            "--pair",
            "remmel_consecutive",
            "--theorem",
            "c",
            "--n-max",
            "24"
        ])
        .status
        .code(),
        Some(0)
    );
}

#[test]
fn pair_file_round_trip() {
    let doc = write_temp(&render_family_pair(&Builtin::Euler.pair()));
    let path = doc.path().to_str().unwrap();
    let o = run(&["--pair-file", path, "compare", "--n-max", "15"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["sieve", "--pair-file", path, "--side", "Y", "--n", "12"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn pair_file_errors_exit_two() {
    let bad = write_temp("{\"name\": \"x\",\n \"F\": [ {\"entries\": ");
    let o = run(&[
        "--pair-file",
        bad.path().to_str().unwrap(),
        "compare",
        "--n-max",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let zero = write_temp(
        r#"{"name":"z","F":[{"entries":[{"size":[0,1,-1],"mult":[0,1]}]}],
            "G":[{"entries":[{"size":[0,1,0],"mult":[0,1]}]}]}"#,
    );
    let o = run(&[
        "--pair-file",
        zero.path().to_str().unwrap(),
        "compare",
        "--n-max",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("strand 0") && err.contains("entry 0"), "{err}");
}

#[test]
fn andrews_from_m1_file() {
    let all = write_temp(&(1..=30).map(|v| format!("{v}\n")).collect::<String>());
    let o = run(&[
        "compare",
        "--pair",
        "andrews",
        "--m1-file",
        all.path().to_str().unwrap(),
        "--n-max",
        "20",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let broken = write_temp("1\n2\n4\n");
    let o = run(&[
        "compare",
        "--pair",
        "andrews",
        "--m1-file",
        broken.path().to_str().unwrap(),
        "--n-max",
        "20",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("doubling"), "{}", stderr(&o));

    let o = run(&["compare", "--pair", "andrews", "--n-max", "20"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn outputs_are_stable_across_thread_counts() {
    let args = [
        "compare", "--pair", "squares", "--n-max", "22", "--format", "json",
    ];
    let base = run(&args);
    for threads in ["1", "3", "8"] {
        let o = bin()
            .args(args)
            .env("PARTITION_SIEVE_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.stdout, base.stdout, "threads={threads}");
    }
    let csv = [
        "dist", "--pair", "mod6", "--side", "Y", "--n", "25", "--format", "csv",
    ];
    let a = run(&csv);
    let b = bin()
        .args(csv)
        .env("PARTITION_SIEVE_THREADS", "6")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn invalid_thread_env_is_usage_error() {
    let o = bin()
        .args(["catalog"])
        .env("PARTITION_SIEVE_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn machine_numbers_are_strings() {
    let o = run(&[
        "check",
        "--pair",
        "euler",
        "--theorem",
        "c",
        "--n-max",
        "20",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["verified_up_to"].is_string());
    assert!(v["subsets_explored"].is_string());
}
