//! Exit-status and diagnostic-format contract: 0 on success, 1 on domain
//! errors with a one-line `error: <code>: <message>`, 2 on usage errors.

use std::process::Command;

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_convalg")).args(args).output().expect("spawn CLI");
    (
        out.status.code(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn success_is_exit_zero() {
    let (code, stdout, stderr) = run(&["characteristic", "--field", "Q"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, "0\n");
    assert!(stderr.is_empty());
}

#[test]
fn domain_errors_are_exit_one_with_machine_parsable_line() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["series-invert", "--field", "Q", "--input", "1*t^1", "--order", "4"],
            "error: zero-constant-term:",
        ),
        (&["quotient", "--ring", "Z", "--mod", "6", "--eval", "inv(2)"], "error: not-invertible:"),
        (&["characteristic", "--field", "Fp:9"], "error: nonprime-modulus:"),
        (
            &["laurent-recip", "--field", "Q", "--input", "0", "--probe", "8", "--order", "3"],
            "error: uncertified-nonzero:",
        ),
        (
            &["classify", "--ring", "Q[t]", "--gen", "1*t^4 + 1"],
            "error: classification-unsupported:",
        ),
        (&["specrad", "--input", "no-such-file.coef"], "error: io:"),
    ];
    for (args, prefix) in cases {
        let (code, stdout, stderr) = run(args);
        assert_eq!(code, Some(1), "{args:?}: {stderr}");
        assert!(stdout.is_empty(), "{args:?} wrote to stdout");
        let line = stderr.lines().next().unwrap_or_default();
        assert!(line.starts_with(prefix), "{args:?} -> {line}");
    }
}

#[test]
fn file_parse_failures_name_the_line() {
    let dir = tempdir();
    let bad = dir.join("bad.coef");
    std::fs::write(&bad, "0 1\nnot a rational here at all!\n").unwrap();
    let good = dir.join("good.coef");
    std::fs::write(&good, "0 1\n").unwrap();
    let (code, _, stderr) = run(&[
        "conv",
        "--monoid",
        "W",
        "--field",
        "Q",
        bad.to_str().unwrap(),
        good.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(1));
    assert!(stderr.starts_with("error: parse:"), "{stderr}");
    assert!(stderr.contains("line 2"), "{stderr}");
}

#[test]
fn usage_errors_are_exit_two() {
    let cases: &[&[&str]] = &[
        &["bogus-verb"],
        &["conv", "--monoid", "W", "--field", "Q"],
        &["conv", "--monoid", "Q", "--field", "W", "--input", "1", "--input", "1"],
        &["series-invert", "--field", "F:bad", "--input", "1", "--order", "2"],
        &["quotient", "--ring", "Z", "--eval", "1"],
        &["fourier", "--input", "x.coef", "--grid", "0"],
    ];
    for args in cases {
        let (code, _, stderr) = run(args);
        assert_eq!(code, Some(2), "{args:?}: {stderr}");
    }
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("convalg-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
