// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use vsdtc::coloring::{verify_r_vsdtc, ColoringDocument};
use vsdtc::graph::{generate, parse_graph, Family};

fn vsdtc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vsdtc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("vsdtc-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const P3: &str = "c path on three vertices\np 3 2\ne 1 2\ne 2 3\n";

const P3_WITNESS: &str = r#"{
  "palette_size": 4,
  "vertices": [1, 2, 1],
  "edges": [{"u": 0, "v": 1, "color": 3}, {"u": 1, "v": 2, "color": 4}]
}"#;

#[test]
fn solve_p4_prints_five() {
    let o = vsdtc(&["solve", "--r", "1", "path(4)"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "5\n");
}

#[test]
fn solve_reads_graph_files() {
    let g = scratch("p3.txt");
    fs::write(&g, P3).unwrap();
    let o = vsdtc(&["solve", g.to_str().unwrap()]);
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn table_matches_complete_graph_values() {
    let o = vsdtc(&["table", "--r", "1", "--max-n", "5", "--format", "csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,n,m,delta_max,k_degeneracy,r,lower,exact,status,constructive,bound"
    );
    let got: Vec<(String, String)> = lines
        .map(|l| {
            let mut rdr = csv::ReaderBuilder::new().has_headers(false).from_reader(l.as_bytes());
            let rec = rdr.records().next().unwrap().unwrap();
            (rec[1].to_string(), rec[7].to_string())
        })
        .collect();
    let want: Vec<(String, String)> = [(3, 5), (4, 6), (5, 8)]
        .iter()
        .map(|(n, x)| (n.to_string(), x.to_string()))
        .collect();
    assert_eq!(got, want);
}

#[test]
fn verify_accepts_p3_witness() {
    let g = scratch("verify-p3.txt");
    let f = scratch("verify-p3.json");
    fs::write(&g, P3).unwrap();
    fs::write(&f, P3_WITNESS).unwrap();
    let o = vsdtc(&["verify", "--r", "1", g.to_str().unwrap(), f.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "valid\n");
}

#[test]
fn verify_rejects_equal_color_sets_with_code_two() {
    let g = scratch("verify-bad.txt");
    let f = scratch("verify-bad.json");
    fs::write(&g, P3).unwrap();
    // Ends get {1,2,3} and {1,2,3}: fine at r=1, equal at distance 2.
    let doc = r#"{"palette_size": 4, "vertices": [1, 2, 1],
        "edges": [{"u": 0, "v": 1, "color": 3}, {"u": 1, "v": 2, "color": 3}]}"#;
    fs::write(&f, doc).unwrap();
    let o = vsdtc(&["verify", g.to_str().unwrap(), f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: VerificationFailed:"));
}

#[test]
fn json_output_round_trips() {
    for cmd in ["solve", "greedy"] {
        let out = scratch(&format!("{cmd}-c6.json"));
        let o = vsdtc(&[cmd, "cycle(6)", "--format", "json", "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}", stderr(&o));
        let text = fs::read_to_string(&out).unwrap();
        let doc = ColoringDocument::from_json(&text).unwrap();
        let g = generate(&Family::Cycle(6), 0).unwrap();
        let f = doc.to_coloring(&g).unwrap();
        assert!(verify_r_vsdtc(&g, &f, 1).unwrap().is_valid());
        assert!(doc.verification.unwrap().valid);
        assert_eq!(ColoringDocument::from_json(&doc_json(&text)).unwrap().to_coloring(&g).unwrap(), f);
        let gfile = scratch(&format!("{cmd}-c6.txt"));
        fs::write(&gfile, vsdtc(&["gen", "cycle(6)"]).stdout).unwrap();
        let o = vsdtc(&["verify", gfile.to_str().unwrap(), out.to_str().unwrap()]);
        assert_eq!(stdout(&o), "valid\n");
    }
}

fn doc_json(text: &str) -> String {
    ColoringDocument::from_json(text).unwrap().to_json()
}

#[test]
fn gen_writes_parseable_graphs() {
    let o = vsdtc(&["gen", "random_k_degenerate(20,2)", "--seed", "4"]);
    let g = parse_graph(&stdout(&o)).unwrap();
    assert_eq!(g, generate(&Family::RandomKDegenerate { n: 20, k: 2 }, 4).unwrap());
}

#[test]
fn reruns_are_byte_identical() {
    let runs = [
        vec!["gen", "gnp(15,0.3)", "--seed", "9"],
        vec!["scan", "random_tree(9)", "--count", "6", "--seed", "3", "--format", "json"],
        vec!["table", "--max-n", "4", "--format", "csv"],
        vec!["greedy", "random_k_degenerate(30,3)", "--seed", "1", "--format", "json"],
    ];
    for args in runs {
        assert_eq!(vsdtc(&args).stdout, vsdtc(&args).stdout, "{args:?}");
    }
}

#[test]
fn error_lines_and_exit_codes() {
    let o = vsdtc(&["solve", "path(2)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: IsolatedEdge:"));
    assert_eq!(stderr(&o).lines().count(), 1);

    let o = vsdtc(&["solve", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: InvalidInput:"));

    let o = vsdtc(&["solve", "complete(6)", "--max-nodes", "500"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error: Timeout:"));

    let o = vsdtc(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: InvalidInput:"));

    let o = vsdtc(&["greedy", "cycle(5)", "--method", "forest"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: NotAForest:"));
}

#[test]
fn bounds_lists_known_values() {
    let o = vsdtc(&["bounds", "path(5)"]);
    let text = stdout(&o);
    assert!(text.contains("lower 4"));
    assert!(text.contains("upper 5"));
    let o = vsdtc(&["bounds", "path(5)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lower"]["value"], 4);
}

#[test]
fn scan_reports_no_violations_on_trees() {
    let o = vsdtc(&["scan", "random_tree(12)", "--count", "10", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["log_violations"].as_array().unwrap().len(), 0);
    assert!(v["min_log_margin"].as_i64().unwrap() >= 0);
}
