use std::io::Write;
use std::process::{Command, Output, Stdio};

const P3: &str = "3\n1 2\n2 3\n";
const TRIANGLE: &str = "3\n1 2\n1 3\n2 3\n";

fn beid(args: &[&str], stdin: &str) -> Output {
    beid_env(args, stdin, &[])
}

fn beid_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_beid"))
        .args(args)
        .env_remove("BEID_FIELD")
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("beid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn analyze_p3_matches_golden() {
    let out = beid(&["analyze", "-", "--json", "--truncation", "4"], P3);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("golden/analyze_p3.json");
    assert_eq!(stdout(&out).trim_end(), golden.trim_end());
}

#[test]
fn analyze_p3_values() {
    let v = json(&beid(&["analyze", "-", "--json"], P3));
    assert_eq!(v["closedness"]["search"]["closed"], true);
    assert_eq!(v["gb"]["quadratic"], true);
    assert_eq!(v["gb"]["match"], true);
    assert_eq!((v["betti"]["beta1"].as_u64(), v["betti"]["beta2"].as_u64()), (Some(6), Some(17)));
    assert_eq!(v["dual"]["count"], 19);
    assert!(v["hilbert"].is_null());
}

#[test]
fn json_is_byte_stable_across_input_formats() {
    let a = beid(&["analyze", "-", "--json"], P3);
    let b = beid(&["analyze", "-", "--json"], P3);
    let c = beid(&["analyze", "-", "--json"], "Bg\n");
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a), stdout(&c));
}

#[test]
fn analyze_c4_is_not_koszul() {
    let v = json(&beid(&["analyze", "-", "--json"], "4\n1 2\n2 3\n3 4\n4 1\n"));
    assert_eq!(v["closedness"]["search"]["closed"], false);
    assert_eq!(v["koszul"]["verdict"], "No");
    assert_eq!(v["koszul"]["reason"], "NotChordal");
    assert_eq!(v["koszul"]["witness"]["induced_cycle"].as_array().unwrap().len(), 4);
}

#[test]
fn analyze_edge_addition() {
    let out = beid(&["analyze", "-", "--json", "--skip-gb", "--add-edge", "2,4"], "4\n1 2\n1 3\n2 3\n3 4\n");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["edge_addition"]["nonzerodivisor"], false);
    assert_eq!(v["edge_addition"]["strongly_free"], false);
    assert_eq!(v["edge_addition"]["truncation"], 10);
    assert!(v["edge_addition"]["caveat"].is_null());
    assert!(v["gb"]["buchberger"].is_null());
}

#[test]
fn nonzerodivisor_verdicts_carry_a_caveat() {
    let v = json(&beid(&["analyze", "-", "--json", "--add-edge", "1,2", "--truncation", "6"], "3\n2 3\n"));
    assert_eq!(v["edge_addition"]["nonzerodivisor"], true);
    assert!(v["edge_addition"]["caveat"].as_str().unwrap().contains("up to degree 6"));
}

#[test]
fn labeling_flag() {
    let v = json(&beid(&["analyze", "-", "--json", "--labeling", "2,1,3"], P3));
    assert_eq!(v["gb"]["quadratic"], false);
    assert_eq!(v["closedness"]["labeling_closed"], false);
    assert_eq!(v["gb"]["match"], true);
    let bad = beid(&["analyze", "-", "--labeling", "1,1,2"], P3);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn field_flag_and_environment() {
    let v = json(&beid(&["gb", "-", "--json", "--field", "p:7"], "4\n1 2\n2 3\n3 4\n4 1\n"));
    assert_eq!(v["field"], "GF(7)");
    assert_eq!(v["match"], true);
    let v = json(&beid_env(&["analyze", "-", "--json"], P3, &[("BEID_FIELD", "p:32003")]));
    assert_eq!(v["field"], "GF(32003)");
    let v = json(&beid_env(&["analyze", "-", "--json"], P3, &[]));
    assert_eq!(v["field"], "QQ");
    assert_eq!(beid(&["gb", "-", "--field", "p:9"], P3).status.code(), Some(2));
}

#[test]
fn gb_subcommand_text() {
    let out = beid(&["gb", "-"], "3\n1 3\n2 3\n");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("x1*x3*y2 - x2*x3*y1\nx1*y3 - x3*y1\nx2*y3 - x3*y2\n"));
    assert!(text.contains("quadratic: false, matches Buchberger: true"));
}

#[test]
fn dual_and_betti_subcommands() {
    let v = json(&beid(&["dual", "-", "--json"], "2\n1 2\n"));
    assert_eq!(v["count"], 9);
    assert_eq!(v["relations"][8], "x1*y2 + y2*x1 + x2*y1 + y1*x2");
    let v = json(&beid(&["betti", "-", "--json"], TRIANGLE));
    assert_eq!(v["betti"]["beta2"], 18);
    assert_eq!(v["syzygies"]["kernel_dim"], 18);
}

#[test]
fn hilbert_subcommand() {
    let out = beid(&["hilbert", "-", "--truncation", "3"], "1\n");
    assert_eq!(stdout(&out), "1 + 2*t + 3*t^2 + 4*t^3 + O(t^4)\n");
}

#[test]
fn cone_output_feeds_analyze() {
    let out = beid(&["cone", "-"], "2\n1 2\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), TRIANGLE);
    let v = json(&beid(&["analyze", "-", "--json"], &stdout(&out)));
    assert_eq!(v["graph"]["n"], 3);
    assert_eq!(v["koszul"]["verdict"], "Yes");
}

#[test]
fn glue_triangles_into_a_bowtie() {
    let t = temp_file("triangle.txt", TRIANGLE);
    let t = t.to_str().unwrap();
    let out = beid(&["glue", t, "3", t, "1"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "5\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n");
    let v = json(&beid(&["analyze", "-", "--json"], &stdout(&out)));
    assert_eq!(v["koszul"]["verdict"], "Yes");
}

#[test]
fn glue_at_non_free_vertex_fails() {
    let p = temp_file("p3.txt", P3);
    let p = p.to_str().unwrap();
    let out = beid(&["glue", p, "2", p, "1"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not free"));
}

#[test]
fn input_errors_exit_2() {
    let out = beid(&["analyze", "-"], "3\n1 4\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(beid(&["analyze", "/nonexistent/graph.txt"], "").status.code(), Some(2));
    assert_eq!(beid(&["analyze", "-", "--add-edge", "1"], P3).status.code(), Some(2));
    assert_eq!(beid(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn capacity_errors_exit_3() {
    assert_eq!(beid(&["sweep", "--nmax", "8"], "").status.code(), Some(3));
}

#[test]
fn sweep_exit_codes_and_stability() {
    let clean = beid(&["sweep", "--nmax", "4", "--json", "--jobs", "1"], "");
    assert_eq!(clean.status.code(), Some(0));
    let parallel = beid(&["sweep", "--nmax", "4", "--json", "--jobs", "3"], "");
    assert_eq!(stdout(&clean), stdout(&parallel));
    let v = json(&clean);
    assert_eq!(v["sweep"]["graphs"], 1 + 2 + 8 + 64);
    assert_eq!(v["sweep"]["violations"].as_array().unwrap().len(), 0);

    let broken = beid(&["sweep", "--nmax", "3", "--checks", "broken-quadratic"], "");
    assert_eq!(broken.status.code(), Some(1));
    assert!(stdout(&broken).contains("reproduce: echo"));
}

#[test]
fn canonical_cone_sweep_is_clean() {
    let out = beid(&["sweep", "--nmax", "6", "--canonical", "--checks", "cone,cone-narrow"], "");
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}
