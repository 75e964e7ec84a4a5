use std::io::Write;
use std::process::{Command, Output, Stdio};

use shallow_core::harness::ParameterReport;

fn corpus_path() -> String {
    format!("{}/../core/data/corpus6.g6", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_shallow"))
        .args(args)
        .env_remove("SHALLOW_MAX_VERTICES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("wait")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let o = run(&full, "");
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn cycle_bramble_number_pipeline() {
    let c6 = gen(&["--family", "cycle", "--n", "6"]);
    let o = run(&["compute", "--param", "bn", "--radius", "1", "--input", "-"], &c6);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "EhEG bn@1=3\n");
}

#[test]
fn complete_graph_report() {
    let k4 = gen(&["--family", "complete", "--n", "4"]);
    let o = run(&["--json", "compute", "--param", "all", "--radius", "1"], &k4);
    assert_eq!(o.status.code(), Some(0));
    let rep: ParameterReport = serde_json::from_str(stdout(&o).trim()).unwrap();
    for key in ["scol@1", "bn@1", "omega@1"] {
        assert_eq!(rep.parameters[key].to_string(), "4", "{key}");
    }
}

#[test]
fn json_round_trips() {
    let o = run(&["--json", "witness", "--param", "all", "--radius", "inf"], "C~\nEhEG\nDhc\n");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    for line in text.lines() {
        let rep: ParameterReport = serde_json::from_str(line).unwrap();
        assert!(rep.witnesses.as_ref().is_some_and(|w| !w.is_empty()));
        assert_eq!(serde_json::to_string(&rep).unwrap(), line);
    }
}

#[test]
fn radius_inf_and_plain_witness_lines() {
    let o = run(&["witness", "--param", "scol", "--radius", "inf"], "EhEG\n");
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "EhEG scol@inf=3");
    assert!(lines[1].starts_with("EhEG witness scol@inf {"));
}

#[test]
fn verify_corpus_has_no_violations() {
    let path = corpus_path();
    let o = run(&["verify", "--suite", "thm32", "--rmax", "2", "--tmax", "3", "--input", &path], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 143);
    assert!(text.lines().all(|l| l.contains(" violations=0 ")));
}

#[test]
fn disjoint_well_mode_passes_all_suites() {
    let path = corpus_path();
    let args = [
        "verify",
        "--suite",
        "all",
        "--rmax",
        "2",
        "--tmax",
        "3",
        "--well-mode",
        "disjoint",
        "--collect",
        "--summary",
        "--input",
        &path,
    ];
    let o = run(&args, "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).lines().last().unwrap().contains(" violations=0 "));
}

#[test]
fn disjoint_well_mode_is_never_smaller() {
    let path = corpus_path();
    let well = |mode: &str| {
        let o = run(&["compute", "--param", "well", "--radius", "inf", "--well-mode", mode, "--input", &path], "");
        assert_eq!(o.status.code(), Some(0));
        stdout(&o).lines().map(|l| l.rsplit('=').next().unwrap().parse::<usize>().unwrap()).collect::<Vec<_>>()
    };
    let (p, d) = (well("permissive"), well("disjoint"));
    assert_eq!(p.len(), 143);
    assert!(p.iter().zip(&d).all(|(a, b)| a <= b));
    // On the path with three vertices an overlapping pair rules out {0,1,2}.
    assert_eq!((p[2], d[2]), (2, 3));
}

#[test]
fn verify_summary_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "C~\nEhEG").unwrap();
    let path = f.path().to_str().unwrap();
    let o = run(&["verify", "--suite", "all", "--rmax", "1", "--tmax", "2", "--summary", "--input", path], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("item"));
    assert!(text.lines().last().unwrap().starts_with("graphs=2 "));
    assert!(text.contains("classical:scol_inf==bn_inf"));
}

#[test]
fn output_does_not_depend_on_threads() {
    let path = corpus_path();
    let args = |k: &'static str| {
        vec!["--json", "--threads", k, "verify", "--suite", "all", "--rmax", "1", "--tmax", "2", "--input"]
    };
    let mut one = args("1");
    one.push(&path);
    let mut four = args("4");
    four.push(&path);
    let a = run(&one, "");
    let b = run(&four, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn lemma_suite() {
    let o = run(&["--json", "verify", "--suite", "lemma41", "--d", "3", "--s", "0", "--rmax", "1"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["graph"], "petersen");

    let o = run(&["verify", "--suite", "lemma41", "--d", "3", "--s", "2"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--suite", "lemma41"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn self_test_rejects_forgeries() {
    let o = run(&["verify", "--self-test", "--rmax", "1"], "C~\nEhEG\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "self-test graphs=2 rejected=2\n");
}

#[test]
fn exit_codes() {
    let o = run(&["compute", "--param", "bn"], "A_\nnot graph6!\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = run(&["compute", "--param", "bogus"], "A_\n");
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["compute", "--param", "bn", "--input", "/nonexistent/file"], "");
    assert_eq!(o.status.code(), Some(2));

    let petersen = gen(&["--family", "petersen"]);
    let o = run(&["--max-vertices", "8", "compute", "--param", "bn"], &petersen);
    assert_eq!(o.status.code(), Some(3));

    let o = run(&["gen", "--family", "dodecahedron"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn max_vertices_from_environment() {
    let petersen = gen(&["--family", "petersen"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_shallow"))
        .args(["compute", "--param", "omega", "--radius", "0"])
        .env("SHALLOW_MAX_VERTICES", "5")
        .stdin(Stdio::piped())
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(petersen.as_bytes()).unwrap();
    assert_eq!(child.wait().unwrap().code(), Some(3));
}

#[test]
fn encode_canonicalizes() {
    // Two labelings of the path on three vertices.
    let o = run(&["encode"], "Bg\nBW\n");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], lines[1]);
}
