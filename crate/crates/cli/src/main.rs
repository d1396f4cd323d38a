use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stature_core::artin::{self, q_contractible, q_fillable, QVerdict, DEFAULT_COSET_LIMIT};
use stature_core::closure::{build_table, closure, verify_certificate, ClosureCertificate, ClosureError, Limits};
use stature_core::io::{to_dot, GraphDocument, IoError};
use stature_core::{connected_components, fiber_product, project_second, rank, ColoredGraph};

#[derive(Parser)]
#[command(name = "stature", version, about = "Fiber products, q-checks and closure certificates over W(n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named graph as a JSON document.
    Build {
        #[arg(long, value_enum)]
        graph: Named,
        #[arg(long)]
        n: u32,
        /// Apply β this many times.
        #[arg(long, default_value_t = 0)]
        beta: u32,
    },
    /// Connected components of the fiber product of two documents.
    Fiber {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Label components by the right factor.
        #[arg(long)]
        project: bool,
    },
    /// q-fillability and q-contractibility of every component.
    Qcheck {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_COSET_LIMIT)]
        limit: usize,
    },
    /// Compute the closed set S and its certificate.
    Closure {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_COSET_LIMIT)]
        limit: usize,
        #[arg(long, default_value_t = 10)]
        rounds: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Component table of an n = 4 certificate, compared with the reference.
    Table {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, default_value_t = DEFAULT_COSET_LIMIT)]
        limit: usize,
    },
    /// Recheck a certificate without searching.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Render a document as Graphviz.
    Dot { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Named {
    #[value(name = "W")]
    W,
    #[value(name = "X1")]
    X1,
    #[value(name = "X2")]
    X2,
    #[value(name = "ngon")]
    Ngon,
    #[value(name = "Y1")]
    Y1,
    #[value(name = "Y2")]
    Y2,
    #[value(name = "Y3")]
    Y3,
}

/// Failure with its exit code: 1 assertion or diff, 2 parse or invariant,
/// 3 unknown verdict.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(code: u8, kind: &'static str, message: impl ToString) -> Self {
        Failure { code, kind, message: message.to_string() }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Parse(_) => Failure::new(2, "parse_error", e),
            IoError::Invariant(_) => Failure::new(2, "invariant_violation", e),
        }
    }
}

impl From<artin::ArtinError> for Failure {
    fn from(e: artin::ArtinError) -> Self {
        Failure::new(2, "invariant_violation", e)
    }
}

impl From<stature_core::GraphError> for Failure {
    fn from(e: stature_core::GraphError) -> Self {
        Failure::new(2, "invariant_violation", e)
    }
}

impl From<ClosureError> for Failure {
    fn from(e: ClosureError) -> Self {
        match e {
            ClosureError::Unknown { .. } => Failure::new(3, "unknown_verdict", e),
            ClosureError::NonTermination(_) | ClosureError::Assertion(_) => Failure::new(1, "assertion_failure", e),
            ClosureError::Io(inner) => inner.into(),
            ClosureError::Artin(_) | ClosureError::Certificate(_) => Failure::new(2, "invariant_violation", e),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(2, "io_error", format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<(ColoredGraph, u32), Failure> {
    let doc = GraphDocument::from_json(&read(path)?)?;
    Ok((doc.to_graph()?, doc.n))
}

fn read_cert(path: &Path) -> Result<ClosureCertificate, Failure> {
    Ok(ClosureCertificate::from_json(&read(path)?)?)
}

fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    // ignore EPIPE
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn print(value: &Value) {
    emit(&(serde_json::to_string_pretty(value).expect("serializable") + "\n"));
}

fn build(graph: Named, n: u32, times: u32) -> Result<(), Failure> {
    let mut g = match graph {
        Named::W => artin::build_w(n)?,
        Named::X1 => artin::build_x1(n)?,
        Named::X2 => artin::build_x2(n)?,
        Named::Ngon => artin::build_red_ngon(n)?,
        Named::Y1 => artin::build_y1(n)?,
        Named::Y2 => artin::build_y2(n)?,
        Named::Y3 => artin::build_y3(n)?,
    };
    for _ in 0..times {
        g = artin::beta(&g, n)?;
    }
    emit(&(GraphDocument::from_graph(&g, n).to_json() + "\n"));
    Ok(())
}

fn fiber(left: &Path, right: &Path, project: bool) -> Result<(), Failure> {
    let (g, n) = read_graph(left)?;
    let (h, m) = read_graph(right)?;
    if n != m {
        return Err(Failure::new(2, "invariant_violation", format!("documents disagree on n: {n} and {m}")));
    }
    let product = fiber_product(&g, &h)?;
    let mut components = Vec::new();
    for c in connected_components(&product) {
        let c = if project { project_second(&c)? } else { c };
        components.push(json!({
            "vertices": c.vertex_count(),
            "edges": c.edge_count(),
            "rank": rank(&c)?,
            "graph": GraphDocument::from_graph(&c, n),
        }));
    }
    print(&json!({ "n": n, "count": components.len(), "components": components }));
    Ok(())
}

fn qcheck(file: &Path, limit: usize) -> Result<(), Failure> {
    let (g, n) = read_graph(file)?;
    let mut unknown = false;
    let mut out = Vec::new();
    for c in connected_components(&g) {
        let fillable = q_fillable(&c, n);
        let verdict: Value = if fillable {
            let v = q_contractible(&c, n, limit)?;
            unknown |= v.is_unknown();
            serde_json::to_value(&v).expect("serializable")
        } else {
            Value::Null
        };
        out.push(json!({
            "vertices": c.vertex_count(),
            "edges": c.edge_count(),
            "fillable": fillable,
            "contractible": match &verdict {
                Value::Null => Value::Null,
                _ => json!(match serde_json::from_value::<QVerdict>(verdict.clone()).expect("round trip") {
                    QVerdict::Contractible { .. } => "true",
                    QVerdict::NotContractible { .. } => "false",
                    QVerdict::Unknown { .. } => "unknown",
                }),
            },
            "evidence": verdict,
        }));
    }
    print(&json!({ "n": n, "components": out }));
    if unknown {
        return Err(Failure::new(3, "unknown_verdict", "coset enumeration exceeded the limit"));
    }
    Ok(())
}

fn run_closure(n: u32, limit: usize, rounds: usize, out: Option<&Path>) -> Result<(), Failure> {
    let cert = closure(n, Limits { cosets: limit, rounds })?;
    let text = cert.to_json();
    match out {
        Some(path) => {
            fs::write(path, text + "\n").map_err(|e| Failure::new(2, "io_error", format!("{}: {e}", path.display())))?;
            print(&json!({ "n": n, "maximal": cert.maximal, "elements": cert.elements.len(), "q_bucket": cert.q_bucket.len() }));
        }
        None => emit(&(text + "\n")),
    }
    Ok(())
}

fn table(cert: &Path, limit: usize) -> Result<(), Failure> {
    let cert = read_cert(cert)?;
    let t = build_table(&cert, limit)?;
    print(&json!({ "rows": t.rows, "matches": t.ok(), "diff": t.diff() }));
    if !t.ok() {
        return Err(Failure::new(1, "table_mismatch", t.diff().join("; ")));
    }
    Ok(())
}

fn verify(cert: &Path) -> Result<(), Failure> {
    let cert = read_cert(cert)?;
    let report = verify_certificate(&cert);
    print(&serde_json::to_value(&report).expect("serializable"));
    if !report.ok() {
        return Err(Failure::new(1, "verification_failed", format!("{} failed checks", report.failures.len())));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build { graph, n, beta } => build(graph, n, beta),
        Command::Fiber { left, right, project } => fiber(&left, &right, project),
        Command::Qcheck { file, limit } => qcheck(&file, limit),
        Command::Closure { n, limit, rounds, out } => run_closure(n, limit, rounds, out.as_deref()),
        Command::Table { cert, limit } => table(&cert, limit),
        Command::Verify { cert } => verify(&cert),
        Command::Dot { file } => read_graph(&file).map(|(g, _)| emit(&to_dot(&g))),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", json!({ "error": f.kind, "message": f.message }));
            ExitCode::from(f.code)
        }
    }
}
