use std::io::Write;

use zeta3::cli::run;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zeta3").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn list_prints_every_entry() {
    let (code, out, _) = invoke(&["list"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "s1 series 1 0.602\ns2 series 1 1.431\ns3 series 0 1.806\nlhs_s1 series 0 0.000\n\
         lhs_s2 series 0 0.000\ns1 pair 1 0.602\ns2 pair 1 1.431\n"
    );
}

#[test]
fn verify_grid_passes() {
    let (code, out, _) = invoke(&["verify", "--pair", "s1", "--nmax", "60"]);
    assert_eq!(code, 0);
    assert_eq!(out, "PASS mode=grid points=1830\n");
}

#[test]
fn verify_symbolic_reports_degrees() {
    let (code, out, _) = invoke(&["verify", "--pair", "S1", "--symbolic"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS mode=symbolic"), "{out}");
    assert!(out.contains("degree_n="));
}

#[test]
fn verify_failure_exits_one() {
    let dir = std::env::temp_dir().join(format!("zeta3-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "g_s1 = 3 * (-1)^k * k!^2 * (n-k)! / ((n+k+1)! * (n+1)^2)").unwrap();
    drop(f);
    let (code, out, _) = invoke(&["--catalog", path.to_str().unwrap(), "verify", "--pair", "s1", "--nmax", "2"]);
    assert_eq!(code, 1);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "1 0 -1/3 -1/2 FAIL");
    assert!(lines.last().unwrap().starts_with("FAIL mode=grid points=3"));
}

#[test]
fn digits_of_s3() {
    let (code, out, err) = invoke(&["digits", "--series", "s3", "--digits", "50"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1.2020569031595942853"), "{out}");
    assert!(out.contains("\ncertified_digits=50\n"));
    assert!(out.ends_with("series=s3\n"));
    assert!(err.contains("elapsed_ms="));
}

#[test]
fn scaled_mode_reports_rounding() {
    let (code, out, _) = invoke(&["digits", "--series", "s1", "--digits", "12", "--mode", "scaled"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "1.202056903159");
    assert_eq!(lines[5], "mode=scaled");
    assert!(lines[3].starts_with("rounding_bound=") && lines[3] != "rounding_bound=0");
}

#[test]
fn eval_expression() {
    assert_eq!(invoke(&["eval", "--expr", "(k+1)", "--n", "0", "--k", "41"]).1, "42\n");
    let (code, out, _) = invoke(&[
        "eval",
        "--expr",
        "(-1)^k * k!^2 * (2n-k-1)! / ((2n+k+1)! * (k+1))",
        "--n",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "1/6\n");
}

#[test]
fn accelerate_lists_terms_then_comparison() {
    let (code, out, _) = invoke(&["accelerate", "--pair", "s1", "--terms", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[..3], ["1 5/2", "2 -5/48", "3 1/108"]);
    assert!(lines[3].starts_with("lhs_partial=2.40"), "{}", lines[3]);
    assert!(lines[3].ends_with("consistent=true"));
}

#[test]
fn rate_estimate() {
    let (code, out, _) = invoke(&["rate", "--series", "s2", "--lo", "100", "--hi", "200"]);
    assert_eq!(code, 0);
    let v: f64 = out.trim().parse().unwrap();
    assert!((v - 1.431).abs() < 0.02);
    assert!(!out.contains('e'));
}

#[test]
fn errors_exit_two_with_one_line() {
    for args in [
        &["bogus"][..],
        &["digits", "--series", "s1"],
        &["digits", "--series", "s1", "--digits", "5", "--frobnicate"],
        &["digits", "--series", "nope", "--digits", "5"],
        &["digits", "--series", "s1", "--digits", "5", "--mode", "fuzzy"],
        &["eval", "--expr", "(n-k!", "--n", "1"],
        &["eval", "--expr", "(n-k-1)!", "--n", "1", "--k", "1"],
        &["digits", "--series", "lhs_s1", "--digits", "5"],
        &["--catalog", "/nonexistent/catalog.txt", "list"],
    ] {
        let (code, out, err) = invoke(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["digits", "--series", "s2", "--digits", "80", "--mode", "scaled"];
    assert_eq!(invoke(&args).1, invoke(&args).1);
}
