use std::process::{Command, Output};

fn lpo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpo"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = lpo(args);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn prove_distributivity() {
    let (code, out, _) = run(&["prove", "fixtures/distributivity.trs"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "YES\n* > +\nORIENTED *(x,+(y,z)) -> +(*(x,y),*(x,z))\nORIENTED *(+(x,y),z) -> +(*(x,z),*(y,z))\n"
    );
}

#[test]
fn prove_commutativity() {
    let (code, out, _) = run(&["prove", "fixtures/commutativity.trs"]);
    assert_eq!(code, 1);
    assert_eq!(out, "NO\nUNORIENTABLE +(x,y) -> +(y,x)\n");
    let (code, out, _) = run(&["prove", "--quiet", "fixtures/commutativity.trs"]);
    assert_eq!((code, out.as_str()), (1, "NO\n"));
}

#[test]
fn prove_reports_orientable_rules_of_a_failing_system() {
    let (code, out, _) = run(&["prove", "fixtures/mixed.trs"]);
    assert_eq!(code, 1);
    assert_eq!(out, "NO\nORIENTABLE f(x) -> x\nUNORIENTABLE +(x,y) -> +(y,x)\n");
}

#[test]
fn prove_malformed_is_an_input_error() {
    let (code, out, err) = run(&["prove", "fixtures/malformed.trs"]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert!(err.contains("line 3, column 8"), "{err}");
    assert_eq!(run(&["prove", "fixtures/missing.trs"]).0, 3);
    assert_eq!(run(&["--order", "qlpo", "prove", "fixtures/distributivity.trs"]).0, 3);
}

#[test]
fn compare_outputs() {
    assert_eq!(run(&["compare", "--prec", "a>b", "a", "b"]).1, "GT\n");
    assert_eq!(run(&["compare", "--prec", "a>b", "b", "a"]).1, "LT\n");
    assert_eq!(run(&["compare", "--vars", "x", "--prec", "", "x", "x"]).1, "EQV\n");
    assert_eq!(run(&["compare", "--vars", "x,y", "--prec", "", "x", "y"]).1, "INC\n");
    for v in ["naive", "improved", "memoized"] {
        let (code, out, _) = run(&["compare", "--variant", v, "--vars", "x,y,z", "--prec", "*>+", "*(x,+(y,z))", "+(*(x,y),*(x,z))"]);
        assert_eq!((code, out.as_str()), (0, "GT\n"));
    }
    assert_eq!(run(&["compare", "f(", "a"]).0, 3);
    assert_eq!(run(&["compare", "--prec", "q>a", "a", "a"]).0, 3);
}

#[test]
fn check_outputs() {
    let (code, out, _) = run(&["check", "--prec", "*>+", "fixtures/distributivity.trs"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("ORIENTED ")).count(), 2);
    let (code, out, _) = run(&["check", "--prec", "+>*", "fixtures/distributivity.trs"]);
    assert_eq!(code, 1);
    assert!(out.lines().any(|l| l.starts_with("FAILED ")));
    assert_eq!(run(&["check", "--prec", "q>*", "fixtures/distributivity.trs"]).0, 3);
    assert_eq!(run(&["check", "--prec", "*>", "fixtures/distributivity.trs"]).0, 3);
}

#[test]
fn bench_is_deterministic_apart_from_timing() {
    let strip = |s: String| -> Vec<String> {
        s.lines()
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                format!("{},{},{},{},{}", f[0], f[1], f[2], f[4], f[5])
            })
            .collect()
    };
    let a = run(&["bench", "dup", "--k", "1..6", "--seed", "7"]);
    let b = run(&["bench", "dup", "--k", "1..6", "--seed", "99"]);
    assert_eq!(a.0, 0);
    assert!(a.1.starts_with("family,k,variant,wall_ns,calls,memo_hits\n"));
    assert_eq!(a.1.lines().count(), 1 + 6 * 3);
    assert_eq!(strip(a.1), strip(b.1));
    for family in ["wide", "twin"] {
        assert_eq!(run(&["bench", family, "--k", "2..4"]).0, 0);
    }
    assert_eq!(run(&["bench", "dup", "--k", "3", "--format", "text"]).0, 0);
}

#[test]
fn help_and_usage_errors() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&[]).0, 3);
    assert_eq!(run(&["frobnicate"]).0, 3);
    assert_eq!(run(&["prove", "fixtures/ackermann.trs", "--budget", "0"]).0, 3);
}

#[test]
fn exhausted_budget_gives_maybe() {
    let (code, out, _) = run(&["prove", "--quiet", "--budget", "2", "fixtures/choices.trs"]);
    assert_eq!((code, out.as_str()), (2, "MAYBE\n"));
    let (code, out, _) = run(&["prove", "--budget", "2", "fixtures/choices.trs"]);
    assert_eq!(code, 2);
    assert_eq!(out.lines().filter(|l| l.starts_with("ORIENTABLE ")).count(), 4);
    assert_eq!(run(&["prove", "fixtures/choices.trs"]).0, 0);
}
