use qweight::cli::{run_with_io, summary_path};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qweight").chain(args.iter().copied());
    let code = run_with_io(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn kl_json_and_plain() {
    let (code, out, _) = run(&["kl", "--type", "C", "--rank", "3", "--lambda", "1,1", "--mu", "", "--L", "standard"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"coeffs\":[0,0,1,0,1]}\n");

    let (_, out, _) = run(&["kl", "--type", "C", "--rank", "3", "--lambda", "1,1", "--mu", "", "--format", "plain"]);
    assert_eq!(out.trim(), "q^2 + q^4");

    let (_, out, _) = run(&["kl", "--type", "C", "--rank", "2", "--lambda", "2,1", "--mu", "2,1"]);
    assert_eq!(out.trim(), "{\"coeffs\":[1]}");

    let (_, out, _) = run(&["kl", "--type", "A", "--rank", "3", "--lambda", "2,1", "--mu", "1,1,1"]);
    assert_eq!(out.trim(), "{\"coeffs\":[0,1,1]}");
}

#[test]
fn kl_stable_and_csv() {
    let (code, out, _) = run(&["kl", "--type", "C", "--rank", "2", "--lambda", "2", "--mu", "", "--L", "glA", "--stable", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("exponent,coefficient\n"), "{out}");
}

#[test]
fn kl_bad_input_exits_2() {
    let (code, _, err) = run(&["kl", "--type", "C", "--rank", "2", "--lambda", "1,2", "--mu", ""]);
    assert_eq!(code, 2);
    assert!(err.contains("weakly decreasing"), "{err}");

    let (code, _, err) = run(&["kl", "--type", "C", "--rank", "2", "--lambda", "1,1,1", "--mu", ""]);
    assert_eq!(code, 2);
    assert!(err.contains("more than 2 parts"), "{err}");

    let (code, _, _) = run(&["kl", "--type", "C", "--rank", "2", "--lambda", "1", "--mu", "", "--bogus"]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["kl", "ssot", "verify"] {
        assert!(out.contains(sub));
    }
    let (code, out, _) = run(&["verify", "--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("conj1-box") && out.contains("stable-identity"));
}

#[test]
fn ssot_listings() {
    let (_, out, _) = run(&["ssot", "--shape", "1", "--weight", "1,1,1", "--gcap", "2", "--emit", "count"]);
    assert_eq!(out.trim(), "3");
    let (_, out, _) = run(&["ssot", "--shape", "", "--weight", "", "--gcap", "0", "--emit", "count"]);
    assert_eq!(out.trim(), "1");
    let (_, out, _) = run(&["ssot", "--shape", "1", "--weight", "1,1,1", "--gcap", "1", "--emit", "tensors"]);
    assert_eq!(out.trim(), "[[1,1,-1],[1,-1,1]]");

    let (code, out, _) = run(&["ssot", "--shape", "1", "--weight", "1,1,1", "--gcap", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0].as_array().unwrap().len(), 3, "one triple per strip");
}

#[test]
fn ssot_tensors_need_unit_strips() {
    let (code, _, err) = run(&["ssot", "--shape", "1", "--weight", "1,2", "--gcap", "2", "--emit", "tensors"]);
    assert_eq!(code, 2);
    assert!(err.contains("size to be 1"), "{err}");
}

#[test]
fn verify_examples_exit_0() {
    assert_eq!(run(&["verify", "example13"]).0, 0);
    assert_eq!(run(&["verify", "conj1-box", "--n", "3", "--g", "2", "--lambda", "2,2,1"]).0, 0);
    assert_eq!(run(&["verify", "stable-identity", "--type", "C", "--rank", "2", "--lambda", "2", "--mu", ""]).0, 0);
    assert_eq!(run(&["verify", "conj1-count", "--rank", "2", "--g", "1"]).0, 0);
    assert_eq!(run(&["verify", "stabilization", "--type", "C", "--n", "3", "--lambda", "1,1", "--mu", "", "--k-max", "4"]).0, 0);
    assert_eq!(run(&["verify", "typea-charge", "--n", "3", "--bound", "4"]).0, 0);
    assert_eq!(run(&["verify", "demazure", "--type", "C", "--rank", "2", "--mu", "1", "--q-max", "4"]).0, 0);
}

#[test]
fn verify_theorem_failure_exits_3() {
    let (code, out, _) = run(&["verify", "stable-identity", "--type", "B", "--rank", "2", "--lambda", "2", "--mu", "", "--format", "plain"]);
    assert_eq!(code, 3);
    assert!(out.starts_with("FAIL stable-identity"), "{out}");
}

#[test]
fn verify_bad_grid_exits_2() {
    let (code, _, err) = run(&["verify", "conj1-box", "--n", "2", "--g", "1", "--lambda", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("error"), "{err}");
    assert_eq!(run(&["verify", "conj2", "--n", "2", "--lambda", "1"]).0, 2);
    assert_eq!(run(&["verify", "stable-identity", "--n", "2", "--lambda", "1", "--mu", "1"]).0, 2);
}

#[test]
fn verify_gla_demazure_is_unsupported() {
    let (code, out, _) = run(&["verify", "demazure", "--rank", "2", "--mu", "", "--L", "glA", "--format", "plain"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("UNSUPPORTED"), "{out}");
}

#[test]
fn verify_report_files() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("out.json");
    let r = report.to_str().unwrap();
    let (code, _, _) = run(&["verify", "conj1-box", "--n", "2", "--g", "2", "--report", r]);
    assert_eq!(code, 0);
    let reports: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 2 + 3 + 3 + 6);
    let csv = std::fs::read_to_string(summary_path(&report)).unwrap();
    assert_eq!(csv.lines().next(), Some("check,params,status,lhs,rhs,millis"));
    assert_eq!(csv.lines().count(), 1 + 14);
}

#[test]
fn verify_output_is_deterministic_across_jobs() {
    let base = ["verify", "conj2", "--n", "3", "--max-size", "4", "--no-timing"];
    let outputs: Vec<String> = ["1", "4", "8"]
        .iter()
        .map(|j| {
            let mut args = base.to_vec();
            args.extend(["--jobs", j]);
            run(&args).1
        })
        .collect();
    assert!(!outputs[0].is_empty());
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}

#[test]
fn config_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("q.toml");
    std::fs::write(&cfg, "format = \"plain\"\njobs = 2\n").unwrap();
    let c = cfg.to_str().unwrap();
    let (_, out, _) = run(&["--config", c, "kl", "--type", "C", "--rank", "3", "--lambda", "1,1", "--mu", ""]);
    assert_eq!(out.trim(), "q^2 + q^4");
    let (_, out, _) = run(&["--config", c, "--format", "json", "kl", "--type", "C", "--rank", "3", "--lambda", "1,1", "--mu", ""]);
    assert_eq!(out.trim(), "{\"coeffs\":[0,0,1,0,1]}");

    std::fs::write(&cfg, "colour = \"red\"\n").unwrap();
    let (code, _, err) = run(&["--config", c, "verify", "example13"]);
    assert_eq!(code, 2);
    assert!(err.contains("colour"), "{err}");
}

#[test]
fn verify_json_round_trips() {
    let (_, out, _) = run(&["verify", "example13", "--no-timing"]);
    let sweep: qweight::harness::Sweep = serde_json::from_str(&out).unwrap();
    assert_eq!(sweep.summary.pass, 1);
    assert_eq!(serde_json::to_string(&sweep).unwrap(), out.trim());
}
