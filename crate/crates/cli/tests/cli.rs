use std::fs;

use hijac::{rg, run, EXIT_ABORT, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use hijac_core::poly::parse_poly;
use hijac_core::resolve::{m_separate, resolve_curve};

fn status(args: &[&str]) -> i32 {
    let mut argv = vec!["hijac"];
    argv.extend_from_slice(args);
    run(argv).status
}

#[test]
fn resolve_output_reads_back_exactly() {
    let dir = tempfile::tempdir().unwrap();
    for f in ["x1^3 - x2^2", "x1*x2", "x1^2*x2 + x2^4", "x1^2 + x2^2", "x2^2 - x1^3 - x1^2"] {
        let path = dir.path().join("g.rg");
        let out = run(["hijac", "resolve", "-f", f, "-o", path.to_str().unwrap()]);
        assert_eq!(out.status, EXIT_OK, "{f}: {}", out.stderr);
        let parsed = rg::read(&fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(parsed, resolve_curve(&parse_poly(f, 2).unwrap()).unwrap(), "{f}");
        assert_eq!(status(&["zeta", "--graph", path.to_str().unwrap()]), EXIT_OK);
    }
}

#[test]
fn separate_matches_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("cusp.rg"), dir.path().join("cusp7.rg"));
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    assert_eq!(status(&["resolve", "-f", "x1^3 - x2^2", "-o", a]), EXIT_OK);
    assert_eq!(status(&["separate", "--graph", a, "--m", "7", "-o", b]), EXIT_OK);
    let want = m_separate(&resolve_curve(&parse_poly("x1^3 - x2^2", 2).unwrap()).unwrap(), 7).unwrap();
    assert_eq!(rg::read(&fs::read_to_string(b).unwrap()).unwrap(), want);
}

#[test]
fn output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.rg");
    let g = g.to_str().unwrap();
    assert_eq!(status(&["resolve", "-f", "x1^3 - x2^2", "-o", g]), EXIT_OK);
    let jobs: [&[&str]; 6] = [
        &["jac", "-f", "x1^3 - x2^2", "-n", "2"],
        &["--json", "nash-dim", "-f", "x1^3 - x2^2", "-n", "2"],
        &["zeta", "--graph", g, "--expand", "6", "-d", "2"],
        &["--json", "expand", "--graph", g, "--upto", "4"],
        &["nearby", "--graph", g],
        &["--json", "compare", "--f", "x1^3 - x2^2", "--g", "(1 + x1^6)*(x1^3 - x2^2)"],
    ];
    for args in jobs {
        let mut argv = vec!["hijac"];
        argv.extend_from_slice(args);
        let (a, b) = (run(argv.clone()), run(argv));
        assert_eq!(a, b, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn json_records() {
    let out = run(["hijac", "--json", "jac", "-f", "x1^3 - x2^2", "-d", "2", "-n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["entries"][0][4], "-1");
    assert_eq!(v["columns"].as_array().unwrap().len(), 5);
    let out = run(["hijac", "--json", "check", "inclusion", "-f", "x1^3 - x2^2", "-n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "PASS");
    let out = run(["hijac", "--json", "resolve", "-f", "x1*x2"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["graph"]["divisors"].as_array().unwrap().len(), 2);
}

#[test]
fn text_outputs() {
    let out = run(["hijac", "ideal", "-f", "x1^3 - x2^2", "-d", "2", "-n", "1"]);
    let gens: Vec<&str> = out.stdout.lines().skip(1).collect();
    assert_eq!(gens, ["x1^2", "x2"]);
    let out = run(["hijac", "nash-dim", "-f", "x1^3 - x2^2", "-n", "1"]);
    assert!(out.stdout.contains(": 2\nbasis: 1, x1\n"), "{}", out.stdout);
    let out = run(["hijac", "nash-dim", "-f", "x1^2", "-d", "2", "-n", "1"]);
    assert!(out.stdout.contains("infinite"));
}

#[test]
fn exit_status_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.rg");
    fs::write(&bad, "ambient d=2\ndivisor id=E1 N=two nu=1 kind=exceptional\n").unwrap();
    let bad = bad.to_str().unwrap();
    let cusp = "x1^3 - x2^2";
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["jac", "-f", cusp, "-n", "2"], EXIT_OK),
        (vec!["jac", "-f", cusp, "-n", "2", "--version", "jacobi-taylor"], EXIT_OK),
        (vec!["check", "unit", "-f", cusp, "-u", "1 + x1", "-n", "2"], EXIT_OK),
        (vec!["check", "det-congruence", "-f", cusp, "-u", "1 + x1", "-n", "2"], EXIT_OK),
        (vec!["check", "autoeq", "-f", cusp, "--sigma", "x1 + x2^2; x2", "-n", "2"], EXIT_OK),
        (vec!["check", "inclusion", "-f", "x1^2 + x2^3 + x3^3", "-n", "2"], EXIT_OK),
        (vec!["check", "weighted", "-f", cusp, "-u", "1 + x1", "-n", "2"], EXIT_OK),
        (
            vec!["check", "contact", "-f", cusp, "-g", "(1 + x1)*((x1 + x2^2)^3 - x2^2)", "--sigma", "x1 + x2^2;x2", "-u", "1 + x1", "-n", "2"],
            EXIT_OK,
        ),
        // a wrong witness
        (vec!["check", "contact", "-f", cusp, "-g", "x1^2 - x2^2", "-n", "1"], EXIT_FAIL),
        // g - f = x1^2 is not in J_2(f)
        (vec!["compare", "--f", cusp, "--g", "x1^3 - x2^2 + x1^2"], EXIT_FAIL),
        (vec!["jac", "-f", "x1^^2"], EXIT_USAGE),
        (vec!["jac", "-f", "x3", "-d", "2"], EXIT_USAGE),
        (vec!["jac", "-f", cusp, "-n", "0"], EXIT_USAGE),
        (vec!["check", "unit", "-f", cusp, "-u", "x1", "-n", "1"], EXIT_USAGE),
        (vec!["check", "weighted", "-f", "x1^3 - x2^2 + x1*x2", "-u", "1", "-n", "1"], EXIT_USAGE),
        (vec!["resolve", "-f", "1 + x1"], EXIT_USAGE),
        (vec!["zeta", "--graph", "/nonexistent/g.rg"], EXIT_USAGE),
        (vec!["zeta", "--graph", bad], EXIT_USAGE),
        (vec!["frobnicate"], EXIT_USAGE),
        (vec!["resolve", "-f", "(x2^2 - 2*x1^2)^2 + x1^5"], EXIT_ABORT),
    ];
    for (args, want) in cases {
        let mut argv = vec!["hijac"];
        argv.extend_from_slice(&args);
        let out = run(argv);
        assert_eq!(out.status, want, "{args:?}\n{}{}", out.stdout, out.stderr);
    }
}
