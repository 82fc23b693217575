//! Argument definitions and the subcommands.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hadwiger_core::connectivity::FlowNetwork;
use hadwiger_core::minors::DEFAULT_BUDGET;
use hadwiger_core::{
    audit_witness, clustered_color, contract_to_k_connected, find_clique_minor_with_budget, find_good_separation,
    is_k_connected, watkins_graph, CapacityParams, ContractionError, Graph, ListAssignment, MinorSearch,
    PartitionError, PartitionOutcome, PreconditionFailure, VertexSet,
};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::checks;
use crate::document::{digest, Names, OutcomeKind, ResultDocument, Verification};
use crate::format::{parse_graph, parse_lists, parse_precolor, parse_vertex_list, write_graph, FormatError};
use crate::generate::Family;
use crate::payload::*;

#[derive(Parser, Debug)]
#[command(name = "hadwiger", version, about = "Clustered colouring, connectivity and clique-minor tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Colour with small monochromatic components, or return a highly connected minor.
    Partition(PartitionArgs),
    /// Decide whether the graph is k-connected.
    Connectivity(ConnectivityArgs),
    /// Find a separation of order at most t that is good for Z.
    Separation(SeparationArgs),
    /// Contract edges at Z until the graph is k-connected.
    Contract(ContractArgs),
    /// Search for a K_t minor.
    Minor(MinorArgs),
    /// Write the tightness construction for odd k and n.
    Watkins(WatkinsArgs),
    /// Write a seeded random or named instance.
    Generate(GenerateArgs),
    /// Re-check a stored result document against its input graph.
    Verify(VerifyArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Partition(_) => "partition",
            Command::Connectivity(_) => "connectivity",
            Command::Separation(_) => "separation",
            Command::Contract(_) => "contract",
            Command::Minor(_) => "minor",
            Command::Watkins(_) => "watkins",
            Command::Generate(_) => "generate",
            Command::Verify(_) => "verify",
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(x) => Ok(x),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args, Debug)]
pub struct PartitionArgs {
    #[arg(long, value_parser = positive)]
    pub t: usize,
    #[arg(long, value_parser = positive)]
    pub capacity: usize,
    /// Lines `<vertex> <color>`.
    #[arg(long)]
    pub precolor: Option<PathBuf>,
    /// Lines `<vertex> <c1> <c2> ...`; unlisted vertices get the uniform palette.
    #[arg(long)]
    pub lists: Option<PathBuf>,
    /// Search a witness minor for K_t.
    #[arg(long)]
    pub audit: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct ConnectivityArgs {
    #[arg(long)]
    pub k: usize,
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct SeparationArgs {
    #[arg(long, value_parser = positive)]
    pub t: usize,
    /// Comma-separated vertex names.
    #[arg(long, default_value = "")]
    pub z: String,
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct ContractArgs {
    #[arg(long, value_parser = positive)]
    pub k: usize,
    /// Comma-separated vertex names.
    #[arg(long)]
    pub z: String,
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct MinorArgs {
    #[arg(long)]
    pub t: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct WatkinsArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, default_value_t = 10)]
    pub n: u32,
    /// Edge probability for `gnp`, deletion probability for `planar`.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub kind: OutcomeKind,
    pub result: PathBuf,
    pub input: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Other = 1,
    Usage = 2,
    Parse = 3,
    Precondition = 4,
    Budget = 5,
    Verification = 6,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug)]
pub struct Failure {
    pub exit: Exit,
    pub payload: ErrorPayload,
}

impl Failure {
    fn new(exit: Exit, kind: &str, message: impl Into<String>) -> Self {
        Failure {
            exit,
            payload: ErrorPayload { kind: kind.into(), message: message.into(), line: None, detail: None },
        }
    }

    fn detail(mut self, detail: Value) -> Self {
        self.payload.detail = Some(detail);
        self
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure::new(Exit::Other, "io", format!("{}: {e}", path.display()))
    }

    fn format(path: &Path, e: FormatError) -> Self {
        let mut f = Failure::new(Exit::Parse, "parse", format!("{}: {e}", path.display()));
        f.payload.line = Some(e.line);
        f
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure::new(Exit::Usage, "usage", message)
    }
}

struct Reply {
    outcome: OutcomeKind,
    payload: Value,
    verification: Verification,
    exit: Exit,
}

impl Reply {
    fn new(outcome: OutcomeKind, payload: impl Serialize, verification: Verification) -> Self {
        let exit = if verification.ok { Exit::Success } else { Exit::Verification };
        Reply { outcome, payload: to_value(payload), verification, exit }
    }
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("payloads serialize")
}

struct Ctx {
    command: &'static str,
    parameters: BTreeMap<String, Value>,
    digest: Option<String>,
    names: Names,
}

impl Ctx {
    fn param(&mut self, key: &str, value: impl Serialize) {
        self.parameters.insert(key.into(), to_value(value));
    }

    fn finish(self, outcome: OutcomeKind, payload: Value, verification: Verification) -> ResultDocument {
        ResultDocument {
            command: self.command.into(),
            input_digest: self.digest,
            parameters: self.parameters,
            outcome,
            names: self.names.0,
            payload,
            verification,
        }
    }

    fn load(&mut self, path: &Path) -> Result<Graph, Failure> {
        let bytes = fs::read(path).map_err(|e| Failure::io(path, e))?;
        self.digest = Some(digest(&bytes));
        let g = parse_graph(ascii(&bytes).map_err(|e| Failure::format(path, e))?)
            .map_err(|e| Failure::format(path, e))?;
        self.names = Names::sequential(g.vertex_count());
        Ok(g)
    }
}

/// Graph and list files are ASCII with LF line endings.
fn ascii(bytes: &[u8]) -> Result<&str, FormatError> {
    let mut line = 1;
    for &b in bytes {
        match b {
            b'\n' => line += 1,
            b'\r' => return Err(FormatError { line, message: "carriage return; use LF line endings".into() }),
            _ if !b.is_ascii() => return Err(FormatError { line, message: "non-ASCII byte".into() }),
            _ => {}
        }
    }
    Ok(std::str::from_utf8(bytes).expect("ASCII is UTF-8"))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::io(path, e))?;
    ascii(&bytes).map(str::to_owned).map_err(|e| Failure::format(path, e))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

/// Runs one parsed command. The exit status follows the document: zero
/// only for a verified success.
pub fn run(cli: Cli) -> (ResultDocument, Exit) {
    let mut ctx = Ctx {
        command: cli.command.name(),
        parameters: BTreeMap::new(),
        digest: None,
        names: Names(Vec::new()),
    };
    let result = match &cli.command {
        Command::Partition(a) => partition(&mut ctx, a),
        Command::Connectivity(a) => connectivity(&mut ctx, a),
        Command::Separation(a) => separation(&mut ctx, a),
        Command::Contract(a) => contract(&mut ctx, a),
        Command::Minor(a) => minor(&mut ctx, a),
        Command::Watkins(a) => watkins(&mut ctx, a),
        Command::Generate(a) => generate(&mut ctx, a),
        Command::Verify(a) => verify(&mut ctx, a),
    };
    match result {
        Ok(reply) => (ctx.finish(reply.outcome, reply.payload, reply.verification), reply.exit),
        Err(f) => {
            let mut v = Verification::new();
            v.fail(f.payload.message.clone());
            (ctx.finish(OutcomeKind::Error, to_value(&f.payload), v), f.exit)
        }
    }
}

/// Error document for arguments clap rejected.
pub fn usage_document(err: &clap::Error, command: Option<&str>) -> ResultDocument {
    let message = err.to_string();
    let mut v = Verification::new();
    v.fail(message.trim_end().to_string());
    ResultDocument {
        command: command.unwrap_or("hadwiger").into(),
        input_digest: None,
        parameters: BTreeMap::new(),
        outcome: OutcomeKind::Error,
        names: Vec::new(),
        payload: to_value(ErrorPayload { kind: "usage".into(), message, line: None, detail: None }),
        verification: v,
    }
}

fn vertex_list(text: &str, n: usize) -> Result<VertexSet, Failure> {
    parse_vertex_list(text, n).map_err(|e| Failure::usage(format!("--z: {}", e.message)))
}

fn partition_failure(e: PartitionError, names: &Names) -> Failure {
    match &e {
        PartitionError::VerificationFailed(_) => Failure::new(Exit::Verification, "verification", e.to_string()),
        PartitionError::InvalidLists { vertex, reason } => Failure::new(Exit::Precondition, "precondition", e.to_string())
            .detail(json!({ "vertex": vertex.map(|v| names.of(v)), "reason": reason })),
        PartitionError::WitnessFailure(inner) => {
            let f = contraction_failure(inner.clone(), names);
            Failure::new(f.exit, &f.payload.kind, e.to_string()).detail(f.payload.detail.unwrap_or(Value::Null))
        }
        _ => Failure::new(Exit::Precondition, "precondition", e.to_string()),
    }
}

fn precondition_detail(f: &PreconditionFailure, names: &Names) -> Value {
    match f {
        PreconditionFailure::ZeroTarget => json!({ "failure": "zero_target" }),
        PreconditionFailure::NotInZ(v) => json!({ "failure": "not_in_z", "vertex": names.of(*v) }),
        PreconditionFailure::NoOutsideNeighbor(v) => {
            json!({ "failure": "no_outside_neighbor", "vertex": names.of(*v) })
        }
        PreconditionFailure::GoodSeparation(s) => {
            json!({ "failure": "good_separation", "separation": SeparationView::of(s, names) })
        }
        PreconditionFailure::LowDegree { vertex, degree, doubled_threshold } => json!({
            "failure": "low_degree",
            "vertex": names.of(*vertex),
            "degree": degree,
            "doubled_threshold": doubled_threshold,
        }),
        PreconditionFailure::TooFewVertices { remaining, needed } => {
            json!({ "failure": "too_few_vertices", "remaining": remaining, "needed": needed })
        }
        PreconditionFailure::NotKConnected => json!({ "failure": "not_k_connected" }),
    }
}

fn contraction_failure(e: ContractionError, names: &Names) -> Failure {
    let message = e.to_string();
    match e {
        ContractionError::PreconditionViolated(f) => {
            Failure::new(Exit::Precondition, "precondition", message).detail(precondition_detail(&f, names))
        }
        ContractionError::NoEdgeFound { v, low_degree } => Failure::new(Exit::Precondition, "precondition", message)
            .detail(json!({
                "failure": "no_edge_found",
                "vertex": names.of(v),
                "low_degree": low_degree.iter().map(|&(w, d)| (names.of(w), d)).collect::<Vec<_>>(),
            })),
        ContractionError::ResultNotConnectedEnough { .. } => Failure::new(Exit::Verification, "verification", message),
        ContractionError::Graph(_) | ContractionError::InvalidPlan(_) => Failure::new(Exit::Other, "internal", message),
    }
}

fn partition(ctx: &mut Ctx, a: &PartitionArgs) -> Result<Reply, Failure> {
    ctx.param("t", a.t);
    ctx.param("capacity", a.capacity);
    ctx.param("precolor", a.precolor.as_ref().map(|p| p.display().to_string()));
    ctx.param("lists", a.lists.as_ref().map(|p| p.display().to_string()));
    ctx.param("audit", a.audit);
    ctx.param("budget", a.budget);
    ctx.param("input", a.input.display().to_string());
    let g = ctx.load(&a.input)?;
    let n = g.vertex_count();
    let mut lists = ListAssignment::uniform(&g, a.t);
    if let Some(path) = &a.lists {
        let custom = parse_lists(&read_text(path)?, n).map_err(|e| Failure::format(path, e))?;
        lists.lists.extend(custom);
    }
    let precolored = match &a.precolor {
        Some(path) => parse_precolor(&read_text(path)?, n).map_err(|e| Failure::format(path, e))?,
        None => BTreeMap::new(),
    };
    for (&v, &c) in &precolored {
        lists.precolor(v, c);
    }
    let params = CapacityParams::new(a.t, a.capacity).map_err(|e| partition_failure(e, &ctx.names))?;
    let outcome = clustered_color(&g, params, &lists).map_err(|e| partition_failure(e, &ctx.names))?;
    let names = &ctx.names;
    match outcome {
        PartitionOutcome::Coloring(c) => {
            let payload = ColoringPayload {
                t: a.t,
                capacity: a.capacity,
                assignment: c.assignment.iter().map(|(&v, &col)| (names.of(v), col)).collect(),
                colors_used: c.colors_used().len(),
                max_component_size: c.max_component_size(&g),
                component_bound: c.component_bound,
                precolored: precolored.iter().map(|(&v, &col)| (names.of(v), col)).collect(),
                lists: a.lists.as_ref().map(|_| {
                    lists
                        .lists
                        .iter()
                        .filter(|(v, _)| !lists.precolored.contains(v))
                        .map(|(&v, l)| (names.of(v), l.iter().copied().collect()))
                        .collect()
                }),
            };
            let verification = checks::coloring(&g, names, &payload);
            Ok(Reply::new(OutcomeKind::Coloring, payload, verification))
        }
        PartitionOutcome::Witness(w) => {
            let audit = a.audit.then(|| {
                let audit = audit_witness(&w, a.t, a.budget);
                AuditView {
                    budget: a.budget,
                    connectivity_ok: audit.connectivity_ok,
                    order_ok: audit.order_ok,
                    clique_minor: SearchView::of(&audit.clique_minor, names),
                }
            });
            let payload = WitnessPayload {
                t: a.t,
                capacity: a.capacity,
                subgraph: GraphView::of(&w.subgraph, names),
                z: names.set(&w.z),
                contractions: w.plan.edges.iter().map(|&e| names.edge(e)).collect(),
                deleted: names.set(&w.plan.deleted),
                minor: GraphView::of(&w.minor, names),
                minor_order: w.minor_order,
                minor_connected: is_k_connected(&w.minor, a.t + 1),
                audit,
            };
            let verification = checks::witness(&g, names, &payload);
            Ok(Reply::new(OutcomeKind::Witness, payload, verification))
        }
    }
}

fn connectivity(ctx: &mut Ctx, a: &ConnectivityArgs) -> Result<Reply, Failure> {
    ctx.param("k", a.k);
    ctx.param("input", a.input.display().to_string());
    let g = ctx.load(&a.input)?;
    let k_connected = is_k_connected(&g, a.k);
    let mut cut = None;
    if !k_connected {
        let vs: Vec<_> = g.vertices().collect();
        let mut net = FlowNetwork::new(&g);
        'pairs: for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                if g.has_edge(x, y) || net.local_connectivity(&g, x, y, a.k).expect("distinct nonadjacent") >= a.k {
                    continue;
                }
                let s = net.min_vertex_cut(&g, x, y).expect("distinct nonadjacent");
                cut = Some(CutView { pair: [ctx.names.of(x), ctx.names.of(y)], cut: ctx.names.set(&s) });
                break 'pairs;
            }
        }
    }
    let payload = ConnectivityPayload { k: a.k, k_connected, vertex_count: g.vertex_count(), cut };
    let verification = checks::connectivity(&g, &ctx.names, &payload);
    Ok(Reply::new(OutcomeKind::Verdict, payload, verification))
}

fn separation(ctx: &mut Ctx, a: &SeparationArgs) -> Result<Reply, Failure> {
    ctx.param("t", a.t);
    ctx.param("z", &a.z);
    ctx.param("input", a.input.display().to_string());
    let g = ctx.load(&a.input)?;
    let z = vertex_list(&a.z, g.vertex_count())?;
    let sep = find_good_separation(&g, &z, a.t);
    let payload = SeparationPayload {
        t: a.t,
        z: ctx.names.set(&z),
        separation: sep.map(|s| SeparationView::of(&s, &ctx.names)),
    };
    let verification = checks::separation(&g, &ctx.names, &payload);
    Ok(Reply::new(OutcomeKind::Verdict, payload, verification))
}

fn contract(ctx: &mut Ctx, a: &ContractArgs) -> Result<Reply, Failure> {
    ctx.param("k", a.k);
    ctx.param("z", &a.z);
    ctx.param("input", a.input.display().to_string());
    let g = ctx.load(&a.input)?;
    let z = vertex_list(&a.z, g.vertex_count())?;
    let plan = contract_to_k_connected(&g, &z, a.k).map_err(|e| contraction_failure(e, &ctx.names))?;
    let names = &ctx.names;
    let payload = PlanPayload {
        k: a.k,
        z: names.set(&z),
        contractions: plan.edges.iter().map(|&e| names.edge(e)).collect(),
        deleted: names.set(&plan.deleted),
        result: GraphView::of(&plan.result, names),
        k_connected: is_k_connected(&plan.result, a.k),
    };
    let verification = checks::plan(&g, names, &payload);
    Ok(Reply::new(OutcomeKind::Plan, payload, verification))
}

fn minor(ctx: &mut Ctx, a: &MinorArgs) -> Result<Reply, Failure> {
    ctx.param("t", a.t);
    ctx.param("budget", a.budget);
    ctx.param("input", a.input.display().to_string());
    let g = ctx.load(&a.input)?;
    let search = find_clique_minor_with_budget(&g, a.t, a.budget);
    let outcome = if search.is_found() { OutcomeKind::Witness } else { OutcomeKind::Verdict };
    let payload = MinorPayload { t: a.t, budget: a.budget, search: SearchView::of(&search, &ctx.names) };
    let verification = checks::minor(&g, &ctx.names, &payload, false);
    let mut reply = Reply::new(outcome, payload, verification);
    if matches!(search, MinorSearch::BudgetExceeded { .. }) {
        reply.exit = Exit::Budget;
    }
    Ok(reply)
}

fn watkins(ctx: &mut Ctx, a: &WatkinsArgs) -> Result<Reply, Failure> {
    ctx.param("k", a.k);
    ctx.param("n", a.n);
    ctx.param("output", a.output.display().to_string());
    let inst = watkins_graph(a.k, a.n).map_err(|e| Failure::new(Exit::Precondition, "precondition", e.to_string()))?;
    let text = write_graph(&inst.graph);
    write_text(&a.output, &text)?;
    ctx.digest = Some(digest(text.as_bytes()));
    let g = parse_graph(&text).expect("written graphs parse");
    ctx.names = Names::sequential(g.vertex_count());
    let names = &ctx.names;
    let report = hadwiger_core::verify_tightness(&inst);
    let payload = WatkinsPayload {
        k: inst.k,
        n: inst.n,
        p: inst.p,
        apex: names.of(inst.apex),
        attachments: inst.attachments.iter().map(|&v| names.of(v)).collect(),
        copies: (0..inst.n).map(|i| names.set(&inst.copy(i))).collect(),
        graph_file: a.output.display().to_string(),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        checks: TightnessChecks {
            connectivity: report.connectivity_ok(),
            separation: report.separation_ok(),
            contractions: report.contractions_ok(inst.k),
            degrees: report.degrees_ok(),
        },
    };
    let verification = checks::watkins(&g, names, &payload);
    Ok(Reply::new(OutcomeKind::Instance, payload, verification))
}

fn generate(ctx: &mut Ctx, a: &GenerateArgs) -> Result<Reply, Failure> {
    ctx.param("family", a.family.name());
    ctx.param("n", a.n);
    ctx.param("p", a.p);
    ctx.param("seed", a.seed);
    ctx.param("output", a.output.display().to_string());
    let built = a.family.build(a.n, a.p, a.seed).map_err(|e| Failure::new(Exit::Precondition, "precondition", e))?;
    let text = write_graph(&built);
    write_text(&a.output, &text)?;
    ctx.digest = Some(digest(text.as_bytes()));
    let g = parse_graph(&text).expect("written graphs parse");
    ctx.names = Names::sequential(g.vertex_count());
    let payload = GeneratePayload {
        family: a.family.name().into(),
        n: a.n,
        p: a.p,
        seed: a.seed,
        graph_file: a.output.display().to_string(),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
    };
    let verification = checks::generated(&g, &payload);
    Ok(Reply::new(OutcomeKind::Instance, payload, verification))
}

fn typed<T: DeserializeOwned>(doc: &ResultDocument, path: &Path) -> Result<T, Failure> {
    serde_json::from_value(doc.payload.clone())
        .map_err(|e| Failure::new(Exit::Parse, "parse", format!("{}: payload: {e}", path.display())))
}

fn verify(ctx: &mut Ctx, a: &VerifyArgs) -> Result<Reply, Failure> {
    ctx.param("kind", a.kind.as_str());
    ctx.param("result", a.result.display().to_string());
    ctx.param("input", a.input.display().to_string());
    let raw = fs::read(&a.result).map_err(|e| Failure::io(&a.result, e))?;
    ctx.param("result_digest", digest(&raw));
    let doc: ResultDocument = serde_json::from_slice(&raw).map_err(|e| {
        let mut f = Failure::new(Exit::Parse, "parse", format!("{}: {e}", a.result.display()));
        f.payload.line = Some(e.line());
        f
    })?;
    let g = ctx.load(&a.input)?;
    let names = ctx.names.clone();
    let mut v = Verification::new();
    v.check("input digest", doc.input_digest == ctx.digest, || "input file differs from the recorded one".into());
    v.check("names table", doc.names == names.0, || "names differ from the input's".into());
    v.check("kind", doc.outcome == a.kind, || format!("document holds a {}", doc.outcome.as_str()));
    v.check("recorded verdict", doc.verification.ok, || "document records a failed verification".into());
    let path = &a.result;
    let inner = match (doc.command.as_str(), doc.outcome) {
        ("partition", OutcomeKind::Coloring) => Some(checks::coloring(&g, &names, &typed(&doc, path)?)),
        ("partition", OutcomeKind::Witness) => Some(checks::witness(&g, &names, &typed(&doc, path)?)),
        ("connectivity", OutcomeKind::Verdict) => Some(checks::connectivity(&g, &names, &typed(&doc, path)?)),
        ("separation", OutcomeKind::Verdict) => Some(checks::separation(&g, &names, &typed(&doc, path)?)),
        ("contract", OutcomeKind::Plan) => Some(checks::plan(&g, &names, &typed(&doc, path)?)),
        ("minor", OutcomeKind::Witness | OutcomeKind::Verdict) => {
            Some(checks::minor(&g, &names, &typed(&doc, path)?, true))
        }
        ("watkins", OutcomeKind::Instance) => Some(checks::watkins(&g, &names, &typed(&doc, path)?)),
        ("generate", OutcomeKind::Instance) => Some(checks::generated(&g, &typed(&doc, path)?)),
        _ => None,
    };
    match inner {
        Some(inner) => {
            v.ok &= inner.ok;
            v.checks.extend(inner.checks);
            v.failures.extend(inner.failures);
        }
        None => v.fail(format!("no checks for a {} {} document", doc.command, doc.outcome.as_str())),
    }
    let payload = VerifyPayload {
        kind: a.kind.as_str().into(),
        command: doc.command.clone(),
        failures: v.failures.clone(),
    };
    Ok(Reply::new(OutcomeKind::Verdict, payload, v))
}
