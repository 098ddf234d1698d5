use std::io::Write;
use std::process::{Command, Stdio};

use alternator::codec::parse_augmented_pd;
use alternator::samples::{FLIPPED_TREFOIL, TREFOIL};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn alternator(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_alternator"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn label_trefoil() {
    let r = alternator(&["label"], TREFOIL);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("alternating: true, non-alternating edges: 0\n"));
}

#[test]
fn label_flipped_trefoil_lists_both_kinds() {
    let r = alternator(&["label"], FLIPPED_TREFOIL);
    assert_eq!(r.code, 0);
    for line in ["edge 1: ++", "edge 2: ++", "edge 4: --", "edge 5: --", "edge 3: -+", "edge 6: +-"] {
        assert!(r.stdout.contains(line), "{line} missing from\n{}", r.stdout);
    }
    let json = alternator(&["label", "--format", "json"], FLIPPED_TREFOIL);
    let v: serde_json::Value = serde_json::from_str(json.stdout.trim()).unwrap();
    assert_eq!(v["non_alternating_edges"], serde_json::json!([1, 2, 4, 5]));
    assert_eq!(v["alternating"], false);
}

#[test]
fn malformed_input_reports_location() {
    let r = alternator(&["label"], "X[1,2,3]\n");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 1: column 8"), "{}", r.stderr);

    let r = alternator(&["run"], &format!("{TREFOIL}\n\nX[1,1,2,2] X[3,3,4,5]\n"));
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 3: column 18"), "{}", r.stderr);
    assert_eq!(r.stdout.lines().count(), 1);
}

#[test]
fn run_flipped_trefoil_gives_one_component() {
    let r = alternator(&["run", "--verify"], FLIPPED_TREFOIL);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let line = r.stdout.trim();
    let (pd, report) = line.split_once(" # verify: ").unwrap();
    let report: alternator::Report = serde_json::from_str(report).unwrap();
    assert!(report.all_pass());
    let aug = parse_augmented_pd(pd).unwrap();
    assert_eq!(aug.circles().len(), 1);
    assert!(aug.diagram().is_alternating());
}

#[test]
fn no_merge_keeps_every_circle() {
    let r = alternator(&["run", "--no-merge"], FLIPPED_TREFOIL);
    assert_eq!(r.code, 0);
    let aug = parse_augmented_pd(r.stdout.trim()).unwrap();
    assert_eq!(aug.circles().len(), 1);
    assert_eq!(aug.diagram().crossing_count(), 7);
    assert_eq!(r.stdout.matches(';').count(), 0);

    let multi =
        alternator(&["gen", "--strands", "4", "--length", "30", "--count", "20", "--seed", "1"], "").stdout;
    let kept = alternator(&["run", "--no-merge", "--verify"], &multi);
    assert_eq!(kept.code, 0, "{}", kept.stderr);
    assert!(kept.stdout.lines().any(|l| l.contains(';')));
}

#[test]
fn alternating_input_passes_through_or_fails_strict() {
    let r = alternator(&["run"], TREFOIL);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("already alternating"));
    assert!(r.stdout.trim().ends_with("A{}"));

    let strict = alternator(&["run", "--strict"], TREFOIL);
    assert_eq!(strict.code, 3);
    assert!(strict.stdout.is_empty());
}

#[test]
fn gen_counts_and_bounds() {
    let one = alternator(&["gen", "--strands", "2", "--length", "3", "--count", "1", "--seed", "7"], "");
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout.lines().count(), 1);
    assert_eq!(one.stdout.matches("X[").count(), 3);

    let many = alternator(&["gen", "--count", "17"], "");
    assert_eq!(many.stdout.lines().count(), 17);

    assert_eq!(alternator(&["gen", "--strands", "1"], "").code, 2);
    assert_eq!(alternator(&["gen", "--strands", "5", "--length", "3"], "").code, 2);
    assert_eq!(alternator(&["gen", "--count", "many"], "").code, 2);
}

#[test]
fn gen_run_verify_pipe() {
    let dir = tempfile::tempdir().unwrap();
    let corpus =
        alternator(&["gen", "--strands", "4", "--length", "30", "--count", "1000", "--seed", "3"], "").stdout;
    let run = alternator(&["run", "--verify"], &corpus);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout.lines().count(), 1000);
    assert!(run.stdout.lines().all(|l| l.contains("# verify: ") && !l.contains(":false")));

    let original = file(&dir, "corpus.pd", &corpus);
    let checked = alternator(&["verify", &original], &run.stdout);
    assert_eq!(checked.code, 0, "{}", checked.stderr);
    assert_eq!(checked.stdout.lines().count(), 1000);
}

#[test]
fn verify_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let original = file(&dir, "flipped.pd", FLIPPED_TREFOIL);
    let good = alternator(&["run"], FLIPPED_TREFOIL).stdout;
    assert_eq!(alternator(&["verify", &original], &good).code, 0);

    // Swapping two labels of the first tuple rotates it, which switches the crossing.
    let first = good.split(']').next().unwrap().trim_start_matches("X[");
    let nums: Vec<&str> = first.split(',').collect();
    let rotated = format!("X[{},{},{},{}", nums[1], nums[2], nums[3], nums[0]);
    let tampered = good.replacen(&format!("X[{first}"), &rotated, 1);
    let r = alternator(&["verify", &original], &tampered);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("\"alternating\":false"));

    let trefoil = file(&dir, "trefoil.pd", TREFOIL);
    let r = alternator(&["verify", &trefoil], &format!("{TREFOIL} A{{}}"));
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("\"circle_count\":0"));

    assert_eq!(alternator(&["verify", &original], "X[1,2").code, 2);
    assert_eq!(alternator(&["verify", &original], &format!("{good}{good}")).code, 2);
}

#[test]
fn json_results_verify_too() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = alternator(&["gen", "--count", "5", "--seed", "11"], "").stdout;
    let run = alternator(&["run", "--format", "json", "--verify"], &corpus);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout.lines().count(), 5);
    let original = file(&dir, "corpus.pd", &corpus);
    assert_eq!(alternator(&["verify", &original], &run.stdout).code, 0);
}

#[test]
fn emit_graph_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.dot");
    let r = alternator(&["run", "--emit-graph", path.to_str().unwrap()], FLIPPED_TREFOIL);
    assert_eq!(r.code, 0);
    let dot = std::fs::read_to_string(path).unwrap();
    assert!(dot.starts_with("graph alternator {"));
    assert!(dot.contains("style=dashed"));
}

#[test]
fn input_from_file_argument() {
    let dir = tempfile::tempdir().unwrap();
    let path = file(&dir, "in.pd", &format!("# two records\n{TREFOIL}\n{FLIPPED_TREFOIL}\n"));
    let r = alternator(&["label", &path], "");
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.matches("alternating:").count(), 2);
    assert_eq!(alternator(&["label", "/no/such/file"], "").code, 2);
}
