use lens_skein::cli::run;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Run {
    cli_stdin(args, "")
}

fn cli_stdin(args: &[&str], input: &str) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lens-skein").chain(args.iter().copied());
    let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

#[test]
fn trace_of_primed_word() {
    let r = cli(&["trace", "t^2 t1'^3", "--n", "2"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.trim(), "s[2]s[3]");
}

#[test]
fn lemma4_suite_at_low_level_passes() {
    let r = cli(&["verify", "--suite", "lemma4", "--p", "2", "--k", "2"]);
    assert_eq!(r.code, 0, "{}", r.out);
}

#[test]
fn reduce_json_has_first_rules() {
    let r = cli(&["reduce", "--p", "2", "--k-max", "2", "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    let rules = v["reduced"]["rules"].as_array().unwrap();
    let head = |h: &[i64]| rules.iter().find(|x| x["head"] == serde_json::json!(h)).unwrap()["value"].clone();
    let one = head(&[2]);
    assert_eq!(one[0]["monomial"], serde_json::json!([]));
    assert_eq!(one[0]["coeff"]["num"], "1");
    let s1 = head(&[3]);
    assert_eq!(s1[0]["monomial"], serde_json::json!([1]));
    assert_eq!(v["reduced"]["sound"], true);

    let text = cli(&["reduce", "--p", "2", "--k-max", "2"]).out;
    assert!(text.contains("s[2] -> 1\n"));
    assert!(text.contains("s[3] -> s[1]\n"));
}

#[test]
fn suites_from_examples_pass() {
    for args in [
        &["verify", "--suite", "relations", "--n", "4", "--samples", "200", "--seed", "7"][..],
        &["verify", "--suite", "invariance", "--n", "3", "--samples", "100"],
        &["verify", "--suite", "grading", "--k", "4", "--p", "2"],
    ] {
        let r = cli(args);
        assert_eq!(r.code, 0, "{args:?}: {}", r.out);
    }
}

#[test]
fn failing_suite_exits_2_with_counterexample() {
    let r = cli(&["verify", "--suite", "lemma4", "--p", "2", "--k", "3"]);
    assert_eq!(r.code, 2);
    assert!(r.out.contains("first failure: I(tr(t^2 t1^-3 g1^-1))"), "{}", r.out);
}

#[test]
fn domain_errors_exit_1() {
    let r = cli(&["trace", "t^2 x7"]);
    assert_eq!(r.code, 1);
    assert!(r.err.starts_with("error: parse error"), "{}", r.err);

    let r = cli(&["imap", "t^5", "--p", "2"]);
    assert_eq!(r.code, 1, "{}", r.out);

    let r = cli(&["gen-system", "--p", "0", "--k-max", "1"]);
    assert_eq!(r.code, 1);
}

#[test]
fn usage_errors_exit_1_and_help_exits_0() {
    assert_eq!(cli(&["trace"]).code, 1);
    assert_eq!(cli(&["trace", "t", "--bogus"]).code, 1);
    assert_eq!(cli(&["verify", "--suite", "nope"]).code, 1);
    let h = cli(&["--help"]);
    assert_eq!(h.code, 0);
    assert!(h.out.contains("gen-system"));
}

#[test]
fn stdin_word_input() {
    let a = cli_stdin(&["normalize", "-"], "t g1 t\n");
    let b = cli(&["normalize", "t g1 t"]);
    assert_eq!(a.code, 0, "{}", a.err);
    assert_eq!(a.out, b.out);
}

#[test]
fn imap_accepts_trace_json() {
    let t = cli(&["trace", "t^-1", "--format", "json"]);
    let r = cli(&["imap", t.out.trim(), "--p", "2"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.trim(), "s[1]");
}

#[test]
fn small_commands() {
    assert_eq!(cli(&["order", "t^2", "t t1"]).out.trim(), "t^2 < t t1");
    assert_eq!(cli(&["fmap", "t^2 t1^-1"]).out.trim(), "t^-2 t1");
    assert_eq!(cli(&["enum", "--level", "3"]).out.lines().count(), 4);
    assert_eq!(cli(&["enum", "--level", "-2", "--side", "-"]).out.lines().count(), 2);
    assert_eq!(cli(&["bbm", "t", "--sign", "+", "--p", "2"]).out.trim(), "t^2 t1 g1");
    let x = cli(&["invariant", "g1", "--format", "json"]);
    assert_eq!(x.code, 0);
    serde_json::from_str::<serde_json::Value>(&x.out).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "markov", "--samples", "40", "--seed", "11", "--format", "json"];
    assert_eq!(cli(&args).out, cli(&args).out);
    let args = ["gen-system", "--p", "3", "--k-max", "2", "--side", "-"];
    assert_eq!(cli(&args).out, cli(&args).out);
}
