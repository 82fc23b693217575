mod common;

use std::collections::BTreeMap;

use common::*;
use serde_json::Value;

fn dir() -> tempfile::TempDir {
    tempfile::tempdir().unwrap()
}

fn verify(d: &std::path::Path, kind: &str, doc: &std::path::Path, input: &str) -> Run {
    hadwiger(d, &["verify", "--kind", kind, doc.to_str().unwrap(), input])
}

#[test]
fn path_coloring_uses_few_colors_and_singletons() {
    let d = dir();
    write(d.path(), "path20.graph", &path_graph_text(20));
    let (run, saved) = hadwiger_saved(d.path(), "p", &["partition", "--t", "3", "--capacity", "1", "path20.graph"]);
    assert_eq!(run.code, 0, "{}", run.doc);
    assert_eq!(run.doc["outcome"], "coloring");
    let p = &run.doc["payload"];
    assert!(p["colors_used"].as_u64().unwrap() <= 9);
    assert_eq!(p["max_component_size"], 1);
    // Independent recount: consecutive path vertices never share a colour.
    let colors: BTreeMap<String, u64> = p["assignment"]
        .as_array()
        .unwrap()
        .iter()
        .map(|pair| (pair[0].as_str().unwrap().to_string(), pair[1].as_u64().unwrap()))
        .collect();
    assert_eq!(colors.len(), 20);
    for v in 2..=20 {
        assert_ne!(colors[&(v - 1).to_string()], colors[&v.to_string()]);
    }
    assert!(colors.values().all(|c| (1..=9).contains(c)));
    assert_eq!(verify(d.path(), "coloring", &saved, "path20.graph").code, 0);
}

#[test]
fn complete_graph_yields_an_audited_witness() {
    let d = dir();
    write(d.path(), "k10.graph", &complete_graph_text(10));
    let (run, saved) =
        hadwiger_saved(d.path(), "w", &["partition", "--t", "3", "--capacity", "1", "--audit", "k10.graph"]);
    assert_eq!(run.code, 0, "{}", run.doc);
    assert_eq!(run.doc["outcome"], "witness");
    let p = &run.doc["payload"];
    let minor = adjacency(&p["minor"]);
    assert!(brute_k_connected(&minor, 4));
    assert_eq!(p["minor_order"].as_u64().unwrap() as usize, minor.len());
    assert_eq!(p["audit"]["clique_minor"]["result"], "found");
    assert_eq!(p["audit"]["clique_minor"]["branch_sets"].as_array().unwrap().len(), 3);
    assert_eq!(verify(d.path(), "witness", &saved, "k10.graph").code, 0);
}

#[test]
fn empty_graph_gets_an_empty_coloring() {
    let d = dir();
    write(d.path(), "empty.graph", "p 0 0\n");
    let run = hadwiger(d.path(), &["partition", "--t", "3", "--capacity", "1", "empty.graph"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.doc["outcome"], "coloring");
    assert!(run.doc["payload"]["assignment"].as_array().unwrap().is_empty());
    assert!(run.doc["names"].as_array().unwrap().is_empty());
}

#[test]
fn petersen_connectivity_matches_brute_force() {
    let d = dir();
    write(d.path(), "petersen.graph", PETERSEN);
    let g = petersen_adjacency();
    for k in 0..=5 {
        let run = hadwiger(d.path(), &["connectivity", "--k", &k.to_string(), "petersen.graph"]);
        assert_eq!(run.code, 0);
        assert_eq!(run.doc["payload"]["k_connected"], Value::Bool(brute_k_connected(&g, k)), "k = {k}");
    }
    let run = hadwiger(d.path(), &["connectivity", "--k", "4", "petersen.graph"]);
    let cut = &run.doc["payload"]["cut"];
    assert_eq!(cut["cut"].as_array().unwrap().len(), 3);
}

fn petersen_adjacency() -> Adj {
    let mut view = serde_json::json!({ "vertices": [], "edges": [] });
    view["vertices"] = (1..=10).map(|i| Value::from(i.to_string())).collect();
    view["edges"] = PETERSEN
        .lines()
        .filter(|l| l.starts_with('e'))
        .map(|l| {
            let f: Vec<&str> = l.split(' ').collect();
            serde_json::json!([f[1], f[2]])
        })
        .collect();
    adjacency(&view)
}

#[test]
fn watkins_instance_verifies() {
    let d = dir();
    let (run, saved) = hadwiger_saved(d.path(), "w", &["watkins", "--k", "5", "--n", "4", "-o", "w.graph"]);
    assert_eq!(run.code, 0, "{}", run.doc);
    assert_eq!(run.doc["outcome"], "instance");
    let text = std::fs::read_to_string(d.path().join("w.graph")).unwrap();
    assert!(text.starts_with("p 9 "));
    let checks = &run.doc["payload"]["checks"];
    for key in ["connectivity", "separation", "contractions", "degrees"] {
        assert_eq!(checks[key], true, "{key}");
    }
    let v = verify(d.path(), "instance", &saved, "w.graph");
    assert_eq!(v.code, 0, "{}", v.doc);
    assert_eq!(v.doc["verification"]["ok"], true);
}

#[test]
fn contracting_one_vertex_of_k6() {
    let d = dir();
    write(d.path(), "k6.graph", &complete_graph_text(6));
    let (run, saved) = hadwiger_saved(d.path(), "c", &["contract", "--k", "4", "--z", "1", "k6.graph"]);
    assert_eq!(run.code, 0, "{}", run.doc);
    assert_eq!(run.doc["outcome"], "plan");
    let p = &run.doc["payload"];
    assert!(p["contractions"].as_array().unwrap().len() <= 1);
    assert!(brute_k_connected(&adjacency(&p["result"]), 4));
    assert_eq!(verify(d.path(), "plan", &saved, "k6.graph").code, 0);
}

#[test]
fn minor_search_outcomes() {
    let d = dir();
    write(d.path(), "petersen.graph", PETERSEN);
    let (found, saved) = hadwiger_saved(d.path(), "m5", &["minor", "--t", "5", "petersen.graph"]);
    assert_eq!((found.code, found.doc["outcome"].as_str()), (0, Some("witness")));
    assert_eq!(verify(d.path(), "witness", &saved, "petersen.graph").code, 0);
    let (absent, saved) = hadwiger_saved(d.path(), "m6", &["minor", "--t", "6", "petersen.graph"]);
    assert_eq!((absent.code, absent.doc["payload"]["search"]["result"].as_str()), (0, Some("absent")));
    assert_eq!(verify(d.path(), "verdict", &saved, "petersen.graph").code, 0);
}

#[test]
fn separation_is_good_and_small() {
    let d = dir();
    write(d.path(), "path5.graph", &path_graph_text(5));
    let (run, saved) = hadwiger_saved(d.path(), "s", &["separation", "--t", "1", "--z", "1", "path5.graph"]);
    assert_eq!(run.code, 0);
    let sep = &run.doc["payload"]["separation"];
    assert_eq!(sep["order"], 1);
    let (a, b) = (strings(&sep["a"]), strings(&sep["b"]));
    assert!(a.iter().any(|v| !b.contains(v) && v != "1"));
    assert!(b.iter().any(|v| !a.contains(v) && v != "1"));
    assert_eq!(verify(d.path(), "verdict", &saved, "path5.graph").code, 0);
    write(d.path(), "k5.graph", &complete_graph_text(5));
    let run = hadwiger(d.path(), &["separation", "--t", "3", "k5.graph"]);
    assert_eq!(run.doc["payload"]["separation"], Value::Null);
}

#[test]
fn parse_errors_report_lines() {
    let d = dir();
    let cases = [
        ("loop.graph", "p 2 1\ne 1 1\n", 2),
        ("dup.graph", "c comment\np 3 2\ne 1 2\ne 2 1\n", 4),
        ("count.graph", "p 3 2\ne 1 2\n", 1),
        ("range.graph", "p 3 1\n\ne 1 4\n", 3),
        ("crlf.graph", "p 2 1\r\ne 1 2\r\n", 1),
    ];
    for (name, text, line) in cases {
        write(d.path(), name, text);
        let run = hadwiger(d.path(), &["connectivity", "--k", "1", name]);
        assert_eq!(run.code, 3, "{name}");
        assert_eq!(run.doc["outcome"], "error");
        assert_eq!(run.doc["payload"]["kind"], "parse");
        assert_eq!(run.doc["payload"]["line"], line, "{name}");
    }
    write(d.path(), "g.graph", "p 2 1\ne 1 2\n");
    write(d.path(), "pre.txt", "1 2\n1 3\n");
    let run = hadwiger(d.path(), &["partition", "--t", "2", "--capacity", "1", "--precolor", "pre.txt", "g.graph"]);
    assert_eq!((run.code, run.doc["payload"]["line"].as_u64()), (3, Some(2)));
}

#[test]
fn usage_errors_are_documents() {
    let d = dir();
    write(d.path(), "g.graph", "p 2 1\ne 1 2\n");
    for args in [
        vec!["partition", "--t", "0", "--capacity", "1", "g.graph"],
        vec!["partition", "--capacity", "1", "g.graph"],
        vec!["frobnicate"],
        vec![],
        vec!["contract", "--k", "2", "--z", "9", "g.graph"],
    ] {
        let run = hadwiger(d.path(), &args);
        assert_eq!(run.code, 2, "{args:?}");
        assert_eq!(run.doc["outcome"], "error");
        assert_eq!(run.doc["payload"]["kind"], "usage");
        assert_eq!(run.doc["verification"]["ok"], false);
    }
}

#[test]
fn distinct_failure_codes() {
    let d = dir();
    write(d.path(), "c5.graph", "p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n");
    let run = hadwiger(d.path(), &["contract", "--k", "3", "--z", "1", "c5.graph"]);
    assert_eq!(run.code, 4);
    assert_eq!(run.doc["payload"]["detail"]["failure"], "good_separation");

    let run = hadwiger(d.path(), &["watkins", "--k", "6", "--n", "4", "-o", "x.graph"]);
    assert_eq!(run.code, 4);

    write(d.path(), "pre.txt", "1 1\n2 1\n3 1\n4 1\n");
    let run = hadwiger(d.path(), &["partition", "--t", "2", "--capacity", "1", "--precolor", "pre.txt", "c5.graph"]);
    assert_eq!(run.code, 4, "{}", run.doc);

    write(d.path(), "k8.graph", &complete_graph_text(8));
    let run = hadwiger(d.path(), &["minor", "--t", "8", "--budget", "0", "k8.graph"]);
    assert_eq!(run.code, 5);
    assert_eq!(run.doc["payload"]["search"]["result"], "budget_exceeded");

    let run = hadwiger(d.path(), &["connectivity", "--k", "1", "missing.graph"]);
    assert_eq!((run.code, run.doc["payload"]["kind"].as_str()), (1, Some("io")));
}

#[test]
fn tampered_documents_fail_verification() {
    let d = dir();
    write(d.path(), "path6.graph", &path_graph_text(6));
    let (run, saved) = hadwiger_saved(d.path(), "p", &["partition", "--t", "1", "--capacity", "1", "path6.graph"]);
    assert_eq!(run.code, 0);

    // Recolour every vertex alike: one component of size 6 > bound 2.
    let mut doc = run.doc.clone();
    for pair in doc["payload"]["assignment"].as_array_mut().unwrap() {
        pair[1] = Value::from(1);
    }
    let bad = write(d.path(), "bad.json", &doc.to_string());
    let v = verify(d.path(), "coloring", &bad, "path6.graph");
    assert_eq!(v.code, 6);
    assert_eq!(v.doc["verification"]["ok"], false);

    // Same document against a different input.
    write(d.path(), "other.graph", &path_graph_text(7));
    assert_eq!(verify(d.path(), "coloring", &saved, "other.graph").code, 6);
    // Wrong kind.
    assert_eq!(verify(d.path(), "plan", &saved, "path6.graph").code, 6);

    let garbage = write(d.path(), "garbage.json", "{ not json");
    assert_eq!(verify(d.path(), "coloring", &garbage, "path6.graph").code, 3);
}

#[test]
fn generated_instances_record_their_seed() {
    let d = dir();
    let (a, saved) =
        hadwiger_saved(d.path(), "g", &["generate", "--family", "gnp", "--n", "12", "--p", "0.4", "--seed", "7", "-o", "a.graph"]);
    hadwiger(d.path(), &["generate", "--family", "gnp", "--n", "12", "--p", "0.4", "--seed", "7", "-o", "b.graph"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.doc["parameters"]["seed"], 7);
    assert_eq!(a.doc["payload"]["seed"], 7);
    let (ta, tb) = (
        std::fs::read(d.path().join("a.graph")).unwrap(),
        std::fs::read(d.path().join("b.graph")).unwrap(),
    );
    assert_eq!(ta, tb);
    assert_eq!(verify(d.path(), "instance", &saved, "a.graph").code, 0);
}
