use std::io::Write;
use std::process::{Command, Stdio};

use signed_spectra::cli::{run, Outcome};

fn cli(args: &[&str], input: &str) -> Outcome {
    let mut argv = vec!["signed-spectra"];
    argv.extend_from_slice(args);
    run(argv, &mut input.as_bytes())
}

fn ok(args: &[&str], input: &str) -> String {
    let o = cli(args, input);
    assert_eq!(o.code, 0, "{args:?}: {}", o.stderr);
    o.stdout
}

const NEG_TRIANGLE: &str = "3 3\n0 1 -\n1 2 +\n0 2 +\n";
const PATH: &str = "4 3\n0 1 -\n1 2 +\n2 3 -\n";

#[test]
fn spectral_commands_on_negative_triangle() {
    assert_eq!(ok(&["index", "-"], NEG_TRIANGLE), "1\n");
    assert_eq!(ok(&["spectrum", "-"], NEG_TRIANGLE), "1 1 -2\n");
    assert_eq!(ok(&["charpoly", "-"], NEG_TRIANGLE), "2 -3 0 1\n");
    assert_eq!(ok(&["charpoly", "--schwenk", "--vertex", "2", "-"], NEG_TRIANGLE), "2 -3 0 1\n");
}

#[test]
fn balance_certificates() {
    assert_eq!(ok(&["balance", "-"], NEG_TRIANGLE), "unbalanced\n0 1 2\n");
    assert_eq!(ok(&["balance", "-"], PATH), "balanced\n+--+\n");
}

#[test]
fn family_outputs() {
    assert_eq!(ok(&["family", "--which", "2", "--n", "5", "--charpoly"], ""), "0 6 0 -6 0 1\n");
    assert_eq!(ok(&["family", "--which", "5", "--n", "36", "--index"], ""), "5.8660896376\n");
    let g1 = ok(&["family", "--which", "1", "--n", "6"], "");
    assert_eq!(g1, "6 7\n0 1 -\n0 2 +\n0 3 +\n0 4 +\n0 5 +\n1 2 +\n3 4 +\n");
    assert_eq!(
        ok(&["classify", "-"], &g1),
        "Infinity(3,3)\nbase: 0 1 2 3 4\ncycle -: 0 1 2\ncycle +: 0 3 4\nunbalanced\n"
    );
}

#[test]
fn canon_is_idempotent() {
    for which in 1..=5 {
        let g = ok(&["family", "--which", &which.to_string(), "--n", "12"], "");
        let once = ok(&["canon", "-"], &g);
        assert_eq!(ok(&["canon", "-"], &once), once, "family {which}");
        assert_eq!(ok(&["charpoly", "-"], &once), ok(&["charpoly", "-"], &g));
    }
}

#[test]
fn perturb_report() {
    let out = ok(&["perturb", "--op", "alpha", "--edge", "1,2", "-"], PATH);
    assert!(out.starts_with("operation: alpha 1,2\n"), "{out}");
    assert!(out.contains("output: n=4 m=3 0-1- 1-2+ 1-3-\n"));
    assert!(out.contains("hypothesis: alpha-cut-edge\n"));
    assert!(out.contains("lambda_before: 1.61803398875\n"));
    assert!(out.contains("guarantee_held: true\n"));
    let out = ok(&["perturb", "--op", "relocate", "--edge", "0,2", "--targets", "3", "-"], PATH);
    assert!(out.contains("output: n=4 m=3 0-1- 0-3- 1-2+\n"), "{out}");
    let out = ok(&["perturb", "--op", "collapse", "--root", "1", "-"], PATH);
    assert!(out.starts_with("operation: collapse root=1\n"), "{out}");
}

#[test]
fn enumerate_and_ordering() {
    let out = ok(&["enumerate", "--n", "5", "--top", "2"], "");
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("n=5 underlying=5 classes=11 infinity=2 dumbbell=0 theta=9"));
    assert_eq!(lines[2], "1\t2.2360679775\tInfinity(3,3)\t-\t0-1");
    assert_eq!(lines.len(), 4);
    let out = ok(&["verify-ordering", "--n-min", "36", "--n-max", "37"], "");
    assert!(out.starts_with("OK n=36: 5.92598032132 > 5.92119035006 > 5.87038903919 > 5.86664073626 > 5.8660896376\n"));
    assert_eq!(cli(&["verify-ordering", "--n-min", "10", "--n-max", "40"], "").code, 1);
}

#[test]
fn exclusions_report_and_seed() {
    let out = ok(&["verify-exclusions", "--n", "36", "--samples", "200", "--seed", "1"], "");
    assert!(out.contains("violations: 0\n"), "{out}");
    assert!(out.contains("seed: 1\n"));
    // the sampler reaches a θ-type graph above the fifth family with this seed
    let o = cli(&["verify-exclusions", "--n", "36", "--samples", "2000", "--seed", "36"], "");
    assert_eq!(o.code, 1);
    assert!(o.stderr.starts_with("error: ExclusionViolated: "));
}

#[test]
fn error_codes() {
    let o = cli(&["index", "/nonexistent/graph.sg"], "");
    assert_eq!(o.code, 1);
    assert!(o.stderr.starts_with("error: Io: "));
    let o = cli(&["family", "--which", "9", "--n", "10"], "");
    assert_eq!((o.code, o.stderr.as_str()), (1, "error: InvalidArgument: invalid argument: family id 9 is not in 1..=5\n"));
    let o = cli(&["index", "-"], "3 1\n0 0 +\n");
    assert_eq!(o.code, 1);
    assert!(o.stderr.starts_with("error: SelfLoop: "), "{}", o.stderr);
    assert_eq!(cli(&["spectrum"], "").code, 2);
    assert_eq!(cli(&["perturb", "--op", "twist", "-"], PATH).code, 2);
    assert_eq!(cli(&["perturb", "--op", "relocate", "--edge", "1", "-"], PATH).code, 2);
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_signed-spectra"))
        .args(["charpoly", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(NEG_TRIANGLE.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2 -3 0 1\n");
    let status = Command::new(env!("CARGO_BIN_EXE_signed-spectra")).arg("frobnicate").output().unwrap().status;
    assert_eq!(status.code(), Some(2));
}
