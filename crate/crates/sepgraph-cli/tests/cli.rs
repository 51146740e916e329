use std::path::PathBuf;
use std::process::{Command, Output};

use sepgraph_core::{load, Layer};
use serde_json::Value;

fn corpus_file(name: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../sepgraph-core/corpus");
    dir.join(format!("{name}.sgf")).display().to_string()
}

fn sepgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepgraph")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = sepgraph(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn level_prints_sgf() {
    let out = sepgraph(&["level", "-n", "1", &corpus_file("e23")]);
    assert_eq!(out.status.code(), Some(0));
    let g = load(&stdout(&out)).unwrap();
    assert_eq!(g.vertex_count(), 7);
    assert_eq!(g.layer_vertices(Layer::Zero).count(), 1);
    assert_eq!(g.edge_count(), 12);
}

#[test]
fn level_formats_and_output_file() {
    let v = json(&["level", "-n", "1", "corpus:e23", "--format", "json"]);
    assert_eq!(v["summary"]["group_sizes"], serde_json::json!([2, 2, 2, 3, 3]));
    assert_eq!(v["graph"]["vertices"].as_array().unwrap().len(), 7);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e23_1.sgf");
    let out = sepgraph(&["level", "-n", "1", "corpus:e23", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(load(&std::fs::read_to_string(&path).unwrap()).unwrap().vertex_count(), 7);
}

#[test]
fn prime_reports_not_prime() {
    let v = json(&["prime", &corpus_file("ex_dead_end")]);
    assert_eq!(v["verdict"], "not_prime");
    assert!(!strings(&v["witness"]["v_left"]).is_empty());
    assert_eq!(v["cantor"]["cantor"], true);
    assert_eq!(strings(&v["cantor"]["dead_ends"]), ["y3~"]);

    assert_eq!(json(&["prime", "corpus:e23"])["verdict"], "prime");
    assert_eq!(json(&["prime", "corpus:two_cycle"])["verdict"], "not_applicable");
}

#[test]
fn validate_reports_diagnostics() {
    let v = json(&["validate", &corpus_file("e23")]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["summary"]["edges"], 5);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.sgf");
    std::fs::write(&bad, "vertex v layer=0\nedge e v w\n").unwrap();
    let out = sepgraph(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
    assert!(stderr(&out).contains("unknown vertex `w`"));

    let out = sepgraph(&["validate", "no/such/file.sgf"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sepgraph(&["validate", "corpus:nothing"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [&["bogus"][..], &["level", "corpus:e23"], &["level", "-n", "x", "corpus:e23"], &[]] {
        let out = sepgraph(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&out).is_empty());
    }
    let out = sepgraph(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("fromwords"));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["tower", "-n", "2", "corpus:lamplighter"][..],
        &["dot", "-n", "1", "corpus:e22"],
        &["hsets", "-n", "1", "corpus:e23"],
        &["prime", "corpus:ex_unique_pair"],
        &["balls", "-n", "2", "corpus:e22"],
    ] {
        let (a, b) = (sepgraph(args), sepgraph(args));
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn tower_writes_levels_and_naming() {
    let v = json(&["tower", "-n", "3", "corpus:lamplighter"]);
    let sizes: Vec<(u64, u64)> = v["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| (l["layer0"].as_u64().unwrap(), l["layer1"].as_u64().unwrap()))
        .collect();
    assert_eq!(sizes, [(1, 2), (2, 4), (4, 8), (8, 16)]);

    let dir = tempfile::tempdir().unwrap();
    let out = sepgraph(&["tower", "-n", "1", "corpus:e23", "-o", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let level1 = load(&std::fs::read_to_string(dir.path().join("level_1.sgf")).unwrap()).unwrap();
    assert_eq!(level1.vertex_count(), 7);
    let manifest: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("manifest.json")).unwrap()).unwrap();
    let naming = &manifest["naming"][0];
    assert_eq!(naming["tuples"].as_array().unwrap().len(), 6);
    let tuple = naming["tuples"].as_array().unwrap().iter().find(|t| t["vertex"] == "v[a2|b1]").unwrap();
    assert_eq!(tuple["over"], "w");
    assert_eq!(strings(&tuple["tuple"]), ["a2", "b1"]);
    assert_eq!(naming["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn dot_colors_edges_by_group() {
    let out = sepgraph(&["dot", "-n", "1", "corpus:e23"]);
    let text = stdout(&out);
    assert!(text.starts_with("digraph "));
    assert!(text.trim_end().ends_with('}'));
    let edge_lines: Vec<&str> = text.lines().filter(|l| l.contains("->")).collect();
    assert_eq!(edge_lines.len(), 12);
    let colors: std::collections::BTreeSet<&str> =
        edge_lines.iter().map(|l| l.split("color=\"").nth(1).unwrap().split('"').next().unwrap()).collect();
    assert_eq!(colors.len(), 5);
}

#[test]
fn lattice_closure_and_quotient() {
    let v = json(&["hsets", "corpus:e23"]);
    assert_eq!(v["trivial"], true);
    assert_eq!(v["count"], 2);

    let v = json(&["hsets", "-n", "1", "corpus:e22"]);
    let sets = v["sets"].as_array().unwrap();
    let maximal: Vec<Vec<String>> =
        v["maximal_proper"].as_array().unwrap().iter().map(|i| strings(&sets[i.as_u64().unwrap() as usize])).collect();
    assert!(maximal.contains(&vec!["v[a1|b2]".to_string(), "v[a2|b1]".to_string()]));

    let v = json(&["closure", "-n", "1", "corpus:e22", "--set", "v[a1|b1],v[a1|b2]"]);
    assert_eq!(v["full"], true);

    let out = sepgraph(&["quotient", "-n", "1", "corpus:e22", "--set", "v[a1|b2],v[a2|b1]"]);
    let q = load(&stdout(&out)).unwrap();
    assert_eq!(q.vertex_count(), 3);
    assert_eq!(q.edge_count(), 4);

    let out = sepgraph(&["quotient", "-n", "1", "corpus:e22", "--set", "v"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sepgraph(&["closure", "corpus:e22", "--set", "nope"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn k0_and_balls() {
    let v = json(&["k0", "corpus:e23"]);
    assert_eq!(v["group"], "0");
    assert_eq!(v["free_rank"], 0);
    let v = json(&["balls", "-n", "1", "corpus:e23"]);
    assert_eq!(v["count"], 7);
}

#[test]
fn budget_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_sepgraph"))
        .args(["level", "-n", "2", "corpus:e23"])
        .env("SEPGRAPH_MAX_VERTICES", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("budget"), "{}", stderr(&out));
}

#[test]
fn recode_and_represent_take_json_specs() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full.json");
    std::fs::write(&full, r#"{"alphabet": ["a", "b"], "radius": 1}"#).unwrap();
    let v = json(&["represent", full.to_str().unwrap(), "--format", "json"]);
    assert_eq!(v["summary"]["vertices"], 144);
    assert_eq!(v["summary"]["edges"], 256);

    let one = dir.path().join("one.json");
    std::fs::write(&one, r#"{"alphabet": ["a"], "radius": 2, "forbidden": [{"radius": 1, "words": ["a", "a~"]}]}"#)
        .unwrap();
    let v = json(&["recode", one.to_str().unwrap()]);
    assert_eq!(v["depth"], 1);
    assert!(v["allowed"].as_u64().unwrap() > 0);
    let out = sepgraph(&["represent", one.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    load(&stdout(&out)).unwrap();

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"alphabet": ["a"], "radius": 1, "forbidden": [{"radius": 1, "words": ["c"]}]}"#).unwrap();
    assert_eq!(sepgraph(&["represent", bad.to_str().unwrap()]).status.code(), Some(1));
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(sepgraph(&["recode", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn classify_and_cantor() {
    let v = json(&["classify", "corpus:two_cycle"]);
    assert_eq!(v["verdict"], "free_group");
    assert_eq!(v["rank"], 1);
    let v = json(&["classify", "corpus:e23"]);
    assert_eq!(v["verdict"], "not_simple");
    assert_eq!(v["level"], 1);
    let v = json(&["classify", "corpus:e12"]);
    assert_eq!(v["verdict"], "graph_algebra");

    let v = json(&["cantor", "corpus:two_cycle"]);
    assert_eq!(v["cantor"], false);
    assert!(!v["isolated"].as_array().unwrap().is_empty());
    assert_eq!(json(&["cantor", "corpus:e23"])["cantor"], true);
}

#[test]
fn fromwords_reports_sets_and_quotients() {
    let v = json(&["fromwords", "--even", "-n", "2"]);
    assert_eq!(strings(&v["hset"]["words"]), ["010"]);

    let v = json(&["fromwords", "010", "-n", "2", "--detect", "6"]);
    assert_eq!(v["finite_type"]["n"], 2);

    let v = json(&["fromwords", "--even", "-n", "2", "--detect", "8"]);
    assert_eq!(v["finite_type"], "unknown_up_to_8");

    let v = json(&["fromwords", "0110", "--orbit", "-n", "3", "--quotient"]);
    let q = load(v["quotient"].as_str().unwrap()).unwrap();
    assert_eq!(q.vertex_count(), 8);
    assert_eq!(q.edge_count(), 8);

    let out = sepgraph(&["fromwords", "--even", "-n", "3", "--quotient"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sepgraph(&["fromwords", "012", "-n", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sepgraph(&["fromwords", "01,10", "--orbit", "-n", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sepgraph(&["fromwords", "01", "--even", "-n", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn repro_prints_a_table() {
    let out = sepgraph(&["repro", "--only", "1,10"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("PASS"));
    assert!(lines[2].starts_with("2/2"));

    let v = json(&["repro", "--only", "7", "--json"]);
    assert_eq!(v["criteria"][0]["id"], 7);
    assert_eq!(v["criteria"][0]["passed"], true);
}
