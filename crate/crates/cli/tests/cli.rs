use std::path::PathBuf;
use std::process::{Command, Output};

use polynormal_cli::PolytopeDocument;
use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn polynormal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polynormal"))
        .args(args)
        .env_remove("POLYNORMAL_BUDGET")
        .output()
        .unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad report ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn corpus_round_trips() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = PolytopeDocument::parse(&text).unwrap();
        let printed = doc.print();
        let again = PolytopeDocument::parse(&printed).unwrap();
        assert_eq!(again.print(), printed, "{}", path.display());
        let p = doc.to_polytope().unwrap();
        let canon = PolytopeDocument::from_polytope(&p, doc.name.clone());
        let reparsed = PolytopeDocument::parse(&canon.print()).unwrap();
        assert_eq!(reparsed, canon);
        assert_eq!(reparsed.to_polytope().unwrap(), p);
        seen += 1;
    }
    assert!(seen >= 9);
}

#[test]
fn report_schema_and_gset() {
    let out = polynormal(&["gset", &data("simplex-1.5.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema"], polynormal_cli::SCHEMA);
    assert_eq!(r["verdict"], "info");
    assert_eq!(r["result"]["count"], 9);
    assert_eq!(r["command"][0], "gset");
}

#[test]
fn minkowski_and_edges() {
    let r = report(&polynormal(&["minkowski", &data("square.json"), &data("rect07.json")]));
    let verts = &r["result"]["polytope"]["vertices"];
    assert_eq!(
        verts,
        &serde_json::json!([["0", "0"], ["0", "17/10"], ["2", "0"], ["2", "17/10"]])
    );
    let r = report(&polynormal(&["edges", &data("hexagon.json")]));
    assert_eq!(r["result"]["count"], 6);
    let mut lengths: Vec<String> = r["result"]["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["length"].as_str().unwrap().to_string())
        .collect();
    lengths.sort();
    assert_eq!(lengths, ["1", "1", "2", "2", "3", "3"]);
}

#[test]
fn idp_exit_statuses() {
    let out = polynormal(&["idp", &data("p3-simplex.json"), "--kmax", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["result"]["witness"], serde_json::json!(["1", "1", "1"]));
    let out = polynormal(&["idp", "--pair", &data("cex-q.json"), &data("cex-p.json")]);
    assert_eq!(out.status.code(), Some(1));
    let out = polynormal(&["idp", "--pair", &data("square.json"), &data("square.json")]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn covering_commands() {
    let out = polynormal(&["convex-normal", &data("simplex-1.5.json"), "--c", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = polynormal(&["convex-normal", &data("simplex.json"), "--c", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["result"]["witness"], serde_json::json!(["2/3", "2/3"]));
    let out = polynormal(&["convex-normal-pair", &data("rect07.json"), &data("square.json")]);
    assert_eq!(out.status.code(), Some(0));
    let out = polynormal(&["convex-normal-pair", &data("square.json"), &data("rect07.json")]);
    assert_eq!(out.status.code(), Some(1));
    let out = polynormal(&["convex-normal", &data("square.json"), "--k", "3", "--denom", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(r["result"]["claim"].as_str().unwrap().starts_with("grid-verified"));
    assert_eq!(r["result"]["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn fan_commands() {
    let out = polynormal(&["refines", &data("hexagon.json"), &data("quad.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["refines"], true);
    let out = polynormal(&["refines", &data("quad.json"), &data("hexagon.json")]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&polynormal(&["phi", &data("hexagon.json"), &data("quad.json")]));
    let row = r["result"]["table"]
        .as_array()
        .unwrap()
        .iter()
        .find(|row| row["face"]["vertices"] == serde_json::json!([["-1", "-1"], ["0", "0"]]))
        .expect("edge row");
    assert_eq!(row["image"]["vertices"], serde_json::json!([["0", "0"]]));
    let r = report(&polynormal(&["fan", &data("hexagon.json")]));
    assert_eq!(r["result"]["cones"].as_array().unwrap().len(), 13);
    let out = polynormal(&["edge-check", "--factor", "1", &data("hexagon.json"), &data("quad.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(r["result"]["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .any(|p| p["status"] == "collapsed"));
}

#[test]
fn catalog_and_harness() {
    let out = polynormal(&["verify-paper", "--filter", "phi-hexagon"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["cases"].as_array().unwrap().len(), 1);
    let out = polynormal(&["verify-paper", "--filter", "no-such-case"]);
    assert_eq!(out.status.code(), Some(2));
    let out = polynormal(&[
        "harness", "--which", "mainB", "--trials", "10", "--seed", "7", "--dim", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["failures"], serde_json::json!([]));
}

#[test]
fn errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"dim\": 2,\n  \"vertices\": [[\"0\" \"1\"]]\n}\n").unwrap();
    let out = polynormal(&["gset", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("line 3, column"), "{msg}");

    let flat = dir.path().join("flat.json");
    std::fs::write(&flat, r#"{"dim": 2, "vertices": [["0","0"],["1","1"],["2","2"]]}"#).unwrap();
    let out = polynormal(&["gset", flat.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = polynormal(&["gset", "missing.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_override() {
    let big = data("simplex3-24.json");
    let out = Command::new(env!("CARGO_BIN_EXE_polynormal"))
        .args(["lattice-points", &big])
        .env("POLYNORMAL_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    let out = polynormal(&["--budget", "10", "lattice-points", &big]);
    assert_eq!(out.status.code(), Some(2));
    let out = polynormal(&["lattice-points", &big]);
    assert_eq!(report(&out)["result"]["count"], 2925);
}

#[test]
fn stdin_input_and_pretty() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_polynormal"))
        .args(["--pretty", "lattice-points", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"dim": 1, "vertices": [["0.5"], ["5/2"]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("lattice points: 2 point(s)"), "{text}");
}

#[test]
fn svg_figures_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str], name: &str| {
        let path = dir.path().join(name);
        let mut full: Vec<&str> = args.to_vec();
        let p = path.to_str().unwrap().to_string();
        full.extend(["--out", &p]);
        let out = polynormal(&full);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        std::fs::read_to_string(path).unwrap()
    };
    let cover = run(&["svg", "cover", &data("simplex-1.5.json"), "--c", "2"], "a.svg");
    assert_eq!(cover.matches("class=\"tile ").count(), 9);
    assert_eq!(
        cover,
        run(&["svg", "cover", &data("simplex-1.5.json"), "--c", "2"], "b.svg")
    );
    let residual = run(&["svg", "cover", &data("simplex.json"), "--c", "2"], "c.svg");
    assert_eq!(residual.matches("class=\"residual\"").count(), 1);
    let fan = run(&["svg", "fan", &data("hexagon.json")], "d.svg");
    assert_eq!(fan.matches("class=\"sector ").count(), 6);
    assert_eq!(fan, run(&["svg", "fan", &data("hexagon.json")], "e.svg"));
    run(&["svg", "pair", &data("rect07.json"), &data("square.json")], "f.svg");

    let out = polynormal(&["svg", "fan", &data("p3-simplex.json"), "--out", "/dev/null"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("two-dimensional"));
}
