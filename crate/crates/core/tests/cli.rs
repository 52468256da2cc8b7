use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn pacalc(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pacalc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn pipeline_from_catalog_into_check() {
    let shown = pacalc(&["catalog", "show", "P_3_9"], b"");
    assert!(shown.status.success());
    let checked = pacalc(&["check", "-"], &shown.stdout);
    assert_eq!(checked.status.code(), Some(0));
    let v = json(&checked);
    assert_eq!(v["status"], "ok");
    assert!(v["payload"]["verdicts"].as_object().unwrap().values().all(|x| x == true));
}

#[test]
fn missing_input_exits_with_one() {
    let o = pacalc(&["check", "does-not-exist.json"], b"");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["status"], "error");
}

#[test]
fn nilradical_through_a_pipe() {
    let shown = pacalc(&["catalog", "show", "P_3_3", "--param", "alpha=0"], b"");
    let v = json(&pacalc(&["nilradical", "-"], &shown.stdout));
    assert_eq!(v["payload"]["nilradical"]["basis"], serde_json::json!([["1", "0", "0"], ["0", "1", "0"]]));
}

#[test]
fn out_flag_writes_the_envelope() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = pacalc(&["catalog", "show", "P_2_6", "--out", path.to_str().unwrap()], b"");
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["payload"]["dim"], 2);
}

#[test]
fn cohomology_and_deform_commands() {
    let shown = pacalc(&["catalog", "show", "P_3_9"], b"");
    let v = json(&pacalc(&["cohomology", "-", "--degree", "2"], &shown.stdout));
    assert_eq!(v["payload"]["dims"]["cohomology"], 0);

    let dir = tempfile::tempdir().unwrap();
    let terms = dir.path().join("t.json");
    std::fs::write(&terms, r#"[{"dim":3,"cochain":[{"i":0,"j":2,"out":[{"k":2,"v":"1"}]},{"i":2,"j":0,"out":[{"k":2,"v":"-1"}]}]}]"#).unwrap();
    let p37 = pacalc(&["catalog", "show", "P_3_7", "--param", "alpha=2"], b"");
    let v = json(&pacalc(&["deform", "-", "--terms", terms.to_str().unwrap()], &p37.stdout));
    assert_eq!(v["payload"]["first_failing_order"], Value::Null);
    assert_eq!(v["payload"]["orders"].as_array().unwrap().len(), 4);
}

#[test]
fn pretty_output_is_text() {
    let o = pacalc(&["catalog", "show", "P_3_9", "--pretty"], b"");
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("e2·e3 = e1"));
}
