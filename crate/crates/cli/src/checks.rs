//! Independent re-checks of each payload against the input graph. Commands
//! embed their result; `verify` runs them again on a stored document.

use std::collections::BTreeMap;

use hadwiger_core::contraction::replay;
use hadwiger_core::{
    color_count, find_clique_minor_with_budget, find_good_separation, is_k_connected, verify_coloring,
    verify_embedding, verify_tightness, watkins_graph, ClusteredColoring, Edge, Graph, ListAssignment,
    MinorEmbedding, MinorSearch, Separation, VertexId, VertexSet,
};

use crate::document::{Names, Verification};
use crate::generate::Family;
use crate::payload::*;

/// Name lookup for one document.
pub struct Resolver(BTreeMap<String, VertexId>);

impl Resolver {
    pub fn new(names: &Names) -> Self {
        Resolver(names.0.iter().enumerate().map(|(i, n)| (n.clone(), VertexId(i as u32))).collect())
    }

    pub fn id(&self, name: &str) -> Result<VertexId, String> {
        self.0.get(name).copied().ok_or_else(|| format!("unknown vertex name `{name}`"))
    }

    pub fn set(&self, names: &[String]) -> Result<VertexSet, String> {
        names.iter().map(|n| self.id(n)).collect()
    }

    pub fn edge(&self, e: &[String; 2]) -> Result<Edge, String> {
        let (u, v) = (self.id(&e[0])?, self.id(&e[1])?);
        if u == v {
            return Err(format!("loop at `{}`", e[0]));
        }
        Ok(Edge::new(u, v))
    }

    pub fn graph(&self, view: &GraphView) -> Result<Graph, String> {
        let vertices = self.set(&view.vertices)?;
        let edges = view
            .edges
            .iter()
            .map(|e| self.edge(e).map(Edge::endpoints))
            .collect::<Result<Vec<_>, _>>()?;
        Graph::new(vertices, edges).map_err(|e| e.to_string())
    }
}

/// Runs `body`, turning a resolution error into a failed check.
fn resolved(v: &mut Verification, body: impl FnOnce(&mut Verification) -> Result<(), String>) {
    if let Err(e) = body(v) {
        v.fail(format!("names: {e}"));
    }
}

pub fn lists_for(g: &Graph, r: &Resolver, p: &ColoringPayload) -> Result<ListAssignment, String> {
    let mut lists = match &p.lists {
        None => ListAssignment::uniform(g, p.t),
        Some(custom) => {
            let mut out = ListAssignment::default();
            for (name, colors) in custom {
                out.lists.insert(r.id(name)?, colors.iter().copied().collect());
            }
            out
        }
    };
    for (name, c) in &p.precolored {
        lists.precolor(r.id(name)?, *c);
    }
    Ok(lists)
}

pub fn coloring(g: &Graph, names: &Names, p: &ColoringPayload) -> Verification {
    let mut v = Verification::new();
    let r = Resolver::new(names);
    resolved(&mut v, |v| {
        let lists = lists_for(g, &r, p)?;
        v.check("list hypotheses", lists.validate(g, p.t).is_ok(), || {
            lists.validate(g, p.t).unwrap_err().to_string()
        });
        let mut assignment = BTreeMap::new();
        for (name, c) in &p.assignment {
            if assignment.insert(r.id(name)?, *c).is_some() {
                return Err(format!("`{name}` coloured twice"));
            }
        }
        let bound = p.capacity + 2 * p.t - 1;
        v.check("component bound", p.component_bound == bound, || {
            format!("document says {}, expected {bound}", p.component_bound)
        });
        let c = ClusteredColoring { assignment, component_bound: bound };
        v.check("assignment covers the graph", c.assignment.len() == g.vertex_count(), || {
            format!("{} colours for {} vertices", c.assignment.len(), g.vertex_count())
        });
        let verdict = verify_coloring(g, &c, &lists, bound);
        v.check("colouring conditions", verdict.is_ok(), || verdict.unwrap_err().to_string());
        let used = c.colors_used().len();
        v.check("colours used", used == p.colors_used, || format!("document says {}, found {used}", p.colors_used));
        if p.lists.is_none() {
            v.check("palette size", used <= color_count(p.t), || {
                format!("{used} colours exceed {}", color_count(p.t))
            });
        }
        let largest = c.max_component_size(g);
        v.check("max component size", largest == p.max_component_size, || {
            format!("document says {}, found {largest}", p.max_component_size)
        });
        Ok(())
    });
    v
}

pub fn witness(g: &Graph, names: &Names, p: &WitnessPayload) -> Verification {
    let mut v = Verification::new();
    let r = Resolver::new(names);
    resolved(&mut v, |v| {
        let sub = r.graph(&p.subgraph)?;
        let inside = sub.edges().all(|e| g.has_edge(e.low(), e.high()));
        v.check("subgraph of input", inside, || "an edge is missing from the input".into());
        let z = r.set(&p.z)?;
        let edges = p.contractions.iter().map(|e| r.edge(e)).collect::<Result<Vec<_>, _>>()?;
        let minor = r.graph(&p.minor)?;
        match replay(&sub, &z, &edges) {
            Ok((h, _, leftover)) => {
                v.check("deleted vertices", leftover == r.set(&p.deleted)?, || {
                    format!("replay leaves {:?}", names.set(&leftover))
                });
                v.check("minor matches replay", h.remove_vertices(&leftover) == minor, || {
                    "replaying the contractions gives a different graph".into()
                });
            }
            Err(e) => v.fail(format!("replay: {e}")),
        }
        v.check("minor order", p.minor_order == minor.vertex_count(), || {
            format!("document says {}, minor has {}", p.minor_order, minor.vertex_count())
        });
        v.check(
            "order lower bound",
            minor.vertex_count() + z.len() >= sub.vertex_count(),
            || format!("{} + {} < {}", minor.vertex_count(), z.len(), sub.vertex_count()),
        );
        let connected = is_k_connected(&minor, p.t + 1);
        v.check("minor connectivity", connected && p.minor_connected, || {
            format!("minor is not {}-connected", p.t + 1)
        });
        if let Some(audit) = &p.audit {
            if let Some(sets) = &audit.clique_minor.branch_sets {
                let emb = MinorEmbedding { branch_sets: sets.iter().map(|s| r.set(s)).collect::<Result<_, _>>()? };
                let verdict = verify_embedding(&minor, &emb, p.t);
                v.check("audit embedding", verdict.is_ok(), || verdict.unwrap_err().to_string());
            }
        }
        Ok(())
    });
    v
}

fn separates(g: &Graph, x: VertexId, y: VertexId, cut: &VertexSet) -> bool {
    !g.reachable_from(x, cut).contains(&y)
}

pub fn connectivity(g: &Graph, names: &Names, p: &ConnectivityPayload) -> Verification {
    let mut v = Verification::new();
    let r = Resolver::new(names);
    resolved(&mut v, |v| {
        v.check("vertex count", p.vertex_count == g.vertex_count(), || {
            format!("document says {}", p.vertex_count)
        });
        let truth = is_k_connected(g, p.k);
        v.check("verdict", truth == p.k_connected, || format!("recomputed {truth}"));
        match &p.cut {
            Some(c) => {
                let (x, y) = (r.id(&c.pair[0])?, r.id(&c.pair[1])?);
                let cut = r.set(&c.cut)?;
                let ok = x != y
                    && !g.has_edge(x, y)
                    && !cut.contains(&x)
                    && !cut.contains(&y)
                    && cut.len() < p.k
                    && separates(g, x, y, &cut);
                v.check("cut separates the pair", ok, || "not a separating set below k".into());
            }
            None => v.check("cut present when needed", truth || g.vertex_count() <= p.k, || {
                "no cut was recorded".into()
            }),
        }
        Ok(())
    });
    v
}

pub fn separation(g: &Graph, names: &Names, p: &SeparationPayload) -> Verification {
    let mut v = Verification::new();
    let r = Resolver::new(names);
    resolved(&mut v, |v| {
        let z = r.set(&p.z)?;
        match &p.separation {
            Some(s) => match Separation::new(g, r.set(&s.a)?, r.set(&s.b)?) {
                Ok(sep) => {
                    v.check("order", sep.order() == s.order && s.order <= p.t, || {
                        format!("order {} against t = {}", sep.order(), p.t)
                    });
                    v.check("separator", sep.separator() == r.set(&s.separator)?, || {
                        "separator differs from A ∩ B".into()
                    });
                    v.check("good for z", sep.is_good_for(&z), || "a fragment lies inside z".into());
                }
                Err(e) => v.fail(format!("separation: {e}")),
            },
            None => v.check("no good separation", find_good_separation(g, &z, p.t).is_none(), || {
                "search finds one".into()
            }),
        }
        Ok(())
    });
    v
}

pub fn plan(g: &Graph, names: &Names, p: &PlanPayload) -> Verification {
    let mut v = Verification::new();
    let r = Resolver::new(names);
    resolved(&mut v, |v| {
        let z = r.set(&p.z)?;
        let edges = p.contractions.iter().map(|e| r.edge(e)).collect::<Result<Vec<_>, _>>()?;
        let result = r.graph(&p.result)?;
        match replay(g, &z, &edges) {
            Ok((h, _, leftover)) => {
                v.check("deleted vertices", leftover == r.set(&p.deleted)?, || {
                    format!("replay leaves {:?}", names.set(&leftover))
                });
                v.check("result matches replay", h.remove_vertices(&leftover) == result, || {
                    "replaying the contractions gives a different graph".into()
                });
            }
            Err(e) => v.fail(format!("replay: {e}")),
        }
        let connected = is_k_connected(&result, p.k);
        v.check("result connectivity", connected && p.k_connected, || {
            format!("result is not {}-connected", p.k)
        });
        Ok(())
    });
    v
}

/// Found models are checked directly. A refutation is re-derived only when
/// `rerun` is set, since it costs a full search.
pub fn minor(g: &Graph, names: &Names, p: &MinorPayload, rerun: bool) -> Verification {
    let mut v = Verification::new();
    let r = Resolver::new(names);
    resolved(&mut v, |v| {
        match p.search.result.as_str() {
            "found" => {
                let sets = p.search.branch_sets.as_ref().ok_or("found without branch sets")?;
                let emb = MinorEmbedding { branch_sets: sets.iter().map(|s| r.set(s)).collect::<Result<_, _>>()? };
                let verdict = verify_embedding(g, &emb, p.t);
                v.check("embedding", verdict.is_ok(), || verdict.unwrap_err().to_string());
            }
            "absent" if rerun => {
                let again = find_clique_minor_with_budget(g, p.t, p.budget);
                v.check("refutation", again == MinorSearch::Absent, || format!("search now gives {again:?}"));
            }
            "absent" => v.check("refutation", true, String::new),
            "budget_exceeded" => v.fail("search exhausted its budget"),
            other => v.fail(format!("unknown search result `{other}`")),
        }
        Ok(())
    });
    v
}

pub fn watkins(g: &Graph, names: &Names, p: &WatkinsPayload) -> Verification {
    let mut v = Verification::new();
    let inst = match watkins_graph(p.k, p.n) {
        Ok(inst) => inst,
        Err(e) => {
            v.fail(format!("parameters: {e}"));
            return v;
        }
    };
    v.check("graph matches construction", *g == inst.graph, || "input differs from the construction".into());
    v.check("apex", p.apex == names.of(inst.apex), || format!("expected {}", names.of(inst.apex)));
    let attachments: Vec<String> = inst.attachments.iter().map(|&a| names.of(a)).collect();
    v.check("attachments", p.attachments == attachments, || format!("expected {attachments:?}"));
    let report = verify_tightness(&inst);
    let k = p.k;
    let recomputed = TightnessChecks {
        connectivity: report.connectivity_ok(),
        separation: report.separation_ok(),
        contractions: report.contractions_ok(k),
        degrees: report.degrees_ok(),
    };
    v.check("k-connected", recomputed.connectivity, || format!("weak pair {:?}", report.weak_pair));
    v.check("no good separation", recomputed.separation, || "a good separation exists".into());
    v.check("every attachment contraction fails", recomputed.contractions, || {
        "some contraction stays k-connected".into()
    });
    v.check("degrees", recomputed.degrees, || format!("{:?}", report.degree_mismatches));
    v.check("recorded checks", p.checks == recomputed, || "document disagrees with recomputation".into());
    v
}

pub fn generated(g: &Graph, p: &GeneratePayload) -> Verification {
    let mut v = Verification::new();
    match p.family.parse::<Family>() {
        Ok(family) => match family.build(p.n, p.p, p.seed) {
            Ok(h) => v.check("graph matches seed", *g == h, || "regenerated graph differs".into()),
            Err(e) => v.fail(e),
        },
        Err(e) => v.fail(e),
    }
    v.check("counts", (g.vertex_count(), g.edge_count()) == (p.vertex_count, p.edge_count), || {
        "counts differ".into()
    });
    v
}
