#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub doc: Value,
}

pub fn hadwiger(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hadwiger"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs");
    let doc = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)));
    Run { code: out.status.code().expect("exit code"), doc }
}

/// Runs a command, stores its document as `<name>.json` and returns both.
pub fn hadwiger_saved(dir: &Path, name: &str, args: &[&str]) -> (Run, PathBuf) {
    let run = hadwiger(dir, args);
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, serde_json::to_string_pretty(&run.doc).unwrap()).unwrap();
    (run, path)
}

pub fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

pub fn complete_graph_text(n: usize) -> String {
    let mut out = format!("p {n} {}\n", n * n.saturating_sub(1) / 2);
    for u in 1..=n {
        for v in u + 1..=n {
            out.push_str(&format!("e {u} {v}\n"));
        }
    }
    out
}

pub fn path_graph_text(n: usize) -> String {
    let mut out = format!("p {n} {}\n", n.saturating_sub(1));
    for v in 2..=n {
        out.push_str(&format!("e {} {v}\n", v - 1));
    }
    out
}

pub const PETERSEN: &str = "c Petersen graph\np 10 15\n\
e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n\
e 1 6\ne 2 7\ne 3 8\ne 4 9\ne 5 10\n\
e 6 8\ne 8 10\ne 10 7\ne 7 9\ne 9 6\n";

pub type Adj = BTreeMap<String, BTreeSet<String>>;

/// Adjacency from a `{vertices, edges}` view.
pub fn adjacency(view: &Value) -> Adj {
    let mut adj: Adj = view["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| (v.as_str().unwrap().to_string(), BTreeSet::new()))
        .collect();
    for e in view["edges"].as_array().unwrap() {
        let (u, v) = (e[0].as_str().unwrap().to_string(), e[1].as_str().unwrap().to_string());
        adj.get_mut(&u).unwrap().insert(v.clone());
        adj.get_mut(&v).unwrap().insert(u);
    }
    adj
}

fn connected_without(adj: &Adj, removed: &BTreeSet<&String>) -> bool {
    let mut left = adj.keys().filter(|v| !removed.contains(v));
    let Some(start) = left.next() else { return true };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for w in &adj[u] {
            if !removed.contains(w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == adj.len() - removed.len()
}

/// More than `k` vertices and connected after deleting any `k - 1` of them.
pub fn brute_k_connected(adj: &Adj, k: usize) -> bool {
    if adj.len() <= k {
        return false;
    }
    let names: Vec<&String> = adj.keys().collect();
    fn rec<'a>(adj: &Adj, names: &[&'a String], from: usize, left: usize, removed: &mut BTreeSet<&'a String>) -> bool {
        if !connected_without(adj, removed) {
            return false;
        }
        if left == 0 {
            return true;
        }
        (from..names.len()).all(|i| {
            removed.insert(names[i]);
            let ok = rec(adj, names, i + 1, left - 1, removed);
            removed.remove(names[i]);
            ok
        })
    }
    rec(adj, &names, 0, k.saturating_sub(1), &mut BTreeSet::new())
}

pub fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}
