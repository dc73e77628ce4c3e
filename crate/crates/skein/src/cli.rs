//! The `skein` command line. Exit codes: 0 success, 1 domain error, 2 usage
//! error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use skein_core::arrowdiag::{apply_move_with_inverse, move_catalog, ArrowDiagram, MoveSpec, NamedGenerator};
use skein_core::bracket::{bracket_recursive, PlanarDiagram};
use skein_core::chebyshev::{chebyshev_s, to_chebyshev};
use skein_core::grammar::{parse_laurent, parse_tpoly};
use skein_core::modpres::{
    manifold_catalog, marche_type_check_with, normal_form, rank_over_qa, relation, TypeCheck, DEFAULT_MAX_K,
    DEFAULT_MAX_POWER, DEFAULT_RANK_BOUND,
};
use skein_core::Basis;

use crate::certificate::{
    obstruction_certificate, rank_certificate, to_json, torsion_certificate, verify_json, Certificate,
};
use crate::diagram::parse_diagram;
use crate::parallel::bracket_threaded;
use crate::selftest;

#[derive(Debug, Parser)]
#[command(
    name = "skein",
    version,
    about = "Kauffman bracket skein computations and certificates"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Certificate output path (torsion, obstruction, rank).
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Statesum,
    Recursive,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kauffman bracket of a planar diagram JSON file.
    Bracket {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "statesum")]
        method: Method,
        /// Worker threads for the state sum.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Chebyshev polynomial S_n(t) in the monomial basis.
    Cheb { n: u32 },
    /// Relation r_n of the presentation.
    Relation { n: u32 },
    /// Normal form of a polynomial in t or S_k over Z[A, A^-1].
    Nf { expr: String },
    /// Torsion witness certificate for r_n.
    Torsion { n: u32 },
    /// Non-principality certificate for the ideal attached to r_n.
    Obstruction { n: u32 },
    /// Rank over Q(A) with the per-n reduction report.
    Rank {
        #[arg(long, default_value_t = DEFAULT_RANK_BOUND)]
        bound: u32,
    },
    /// Known-manifold profiles.
    Catalog,
    /// Least k with the annihilator dividing a power of A^k - A^-k.
    Typecheck {
        expr: String,
        #[arg(long, default_value_t = DEFAULT_MAX_K)]
        max_k: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_POWER)]
        max_power: u32,
    },
    /// Arrow diagrams.
    Arrow {
        #[command(subcommand)]
        command: ArrowCommand,
    },
    /// Re-verify a certificate file.
    Verify { file: PathBuf },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Debug, Subcommand)]
enum ArrowCommand {
    /// Check a diagram file and report arrow parities.
    Validate { file: PathBuf },
    /// Apply moves (a JSON move or array of moves, inline or a file path).
    Apply { file: PathBuf, moves: String },
    /// Print a named generator: empty, x, t, K, K'.
    Template { name: String },
    /// List the move catalog.
    Moves,
}

enum Failure {
    Domain(String),
}

type Outcome = Result<(), Failure>;

fn domain(e: impl ToString) -> Failure {
    Failure::Domain(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| domain(format!("cannot read '{}': {e}", path.display())))
}

fn write_file(path: &Path, body: &str) -> Outcome {
    fs::write(path, format!("{body}\n"))
        .map_err(|e| domain(format!("cannot write '{}': {e}", path.display())))
}

struct Ctx<'a> {
    json: bool,
    out: Option<PathBuf>,
    stdout: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.stdout, "{}", s.as_ref());
    }

    fn emit_json<T: Serialize>(&mut self, v: &T) {
        let text = serde_json::to_string_pretty(v).expect("plain data serializes");
        self.line(text);
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::*;
            return match e.kind() {
                DisplayHelp | DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    2
                }
            };
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        out: cli.out,
        stdout,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn dispatch(ctx: &mut Ctx, command: Command) -> Outcome {
    match command {
        Command::Bracket {
            file,
            method,
            threads,
        } => bracket(ctx, &file, method, threads),
        Command::Cheb { n } => cheb(ctx, n),
        Command::Relation { n } => relation_cmd(ctx, n),
        Command::Nf { expr } => nf(ctx, &expr),
        Command::Torsion { n } => torsion(ctx, n),
        Command::Obstruction { n } => obstruction(ctx, n),
        Command::Rank { bound } => rank(ctx, bound),
        Command::Catalog => catalog(ctx),
        Command::Typecheck {
            expr,
            max_k,
            max_power,
        } => typecheck(ctx, &expr, max_k, max_power),
        Command::Arrow { command } => arrow(ctx, command),
        Command::Verify { file } => verify(ctx, &file),
        Command::Selftest => selftest_cmd(ctx),
    }
}

fn bracket(ctx: &mut Ctx, file: &Path, method: Method, threads: usize) -> Outcome {
    let d: PlanarDiagram =
        parse_diagram(&read(file)?).map_err(|e| domain(format!("{}: {e}", file.display())))?;
    let v = match method {
        Method::Statesum => bracket_threaded(&d, threads),
        Method::Recursive => bracket_recursive(&d),
    };
    if ctx.json {
        ctx.emit_json(&json!({ "crossings": d.crossing_count(), "bracket": v.to_string() }));
    } else {
        ctx.line(v.to_string());
    }
    Ok(())
}

fn cheb(ctx: &mut Ctx, n: u32) -> Outcome {
    let s = chebyshev_s(n);
    if ctx.json {
        ctx.emit_json(&json!({ "n": n, "basis": "monomial", "polynomial": s.to_string() }));
    } else {
        ctx.line(format!("# {}", Basis::Monomial));
        ctx.line(s.to_string());
    }
    Ok(())
}

fn relation_cmd(ctx: &mut Ctx, n: u32) -> Outcome {
    let r = relation(n).map_err(domain)?;
    let mono = r.expression.in_basis(Basis::Monomial);
    if ctx.json {
        ctx.emit_json(&json!({
            "n": n,
            "c": r.c.to_string(),
            "d": r.d.to_string(),
            "chebyshev": r.expression.to_string(),
            "monomial": mono.to_string(),
        }));
    } else {
        ctx.line(format!("c = {}", r.c));
        ctx.line(format!("d = {}", r.d));
        ctx.line(format!("# {}", Basis::Chebyshev));
        ctx.line(r.expression.to_string());
        ctx.line(format!("# {}", Basis::Monomial));
        ctx.line(mono.to_string());
    }
    Ok(())
}

fn nf(ctx: &mut Ctx, expr: &str) -> Outcome {
    let p = parse_tpoly(expr).map_err(|e| domain(format!("parse error at {e}")))?;
    let f = normal_form(&p);
    if ctx.json {
        let residues: serde_json::Map<String, Value> = f
            .residues
            .iter()
            .map(|(n, r)| (n.to_string(), Value::from(r.to_string())))
            .collect();
        ctx.emit_json(&json!({
            "input": to_chebyshev(&p).to_string(),
            "a0": f.a0.to_string(),
            "a1": f.a1.to_string(),
            "residues": residues,
            "normal_form": f.to_string(),
            "is_zero": f.is_zero(),
        }));
    } else {
        ctx.line(format!("# {}", Basis::Chebyshev));
        ctx.line(format!("normal form: {f}"));
        ctx.line(format!("  S_0: {}", f.a0));
        ctx.line(format!("  S_1: {}", f.a1));
        for (n, r) in &f.residues {
            ctx.line(format!("  S_{n}: {r}  (window A^-{} .. A^{n})", n + 1));
        }
        ctx.line(format!(
            "zero in the module: {}",
            if f.is_zero() { "yes" } else { "no" }
        ));
    }
    Ok(())
}

fn emit_certificate(
    ctx: &mut Ctx,
    cert: &Certificate,
    default: Option<String>,
) -> Result<Option<PathBuf>, Failure> {
    let body = to_json(cert);
    let path = ctx.out.clone().or(default.map(PathBuf::from));
    if let Some(path) = &path {
        write_file(path, &body)?;
    }
    if ctx.json {
        ctx.line(&body);
    }
    Ok(path)
}

fn torsion(ctx: &mut Ctx, n: u32) -> Outcome {
    let t = torsion_certificate(n).map_err(domain)?;
    let cert = Certificate::Torsion(t.clone());
    let path = emit_certificate(ctx, &cert, Some(format!("torsion-{n}.json")))?;
    if ctx.json {
        return Ok(());
    }
    ctx.line(format!("n = {n}: gcd(c_n, d_n) = {}", t.gcd));
    match &t.witness {
        Some(w) => {
            ctx.line(format!("witness: {}", w.element));
            ctx.line(format!("annihilator: {}", w.annihilator));
            ctx.line(format!("normal form of witness: {}", w.element_normal_form));
            ctx.line(format!("annihilator * witness = {}  (reduces to 0)", w.product));
        }
        None => ctx.line("no witness: the gcd is a unit"),
    }
    if let Some(p) = path {
        ctx.line(format!("certificate: {}", p.display()));
    }
    Ok(())
}

fn obstruction(ctx: &mut Ctx, n: u32) -> Outcome {
    let o = obstruction_certificate(n).map_err(domain)?;
    let cert = Certificate::Obstruction(o.clone());
    let path = emit_certificate(ctx, &cert, Some(format!("obstruction-{n}.json")))?;
    if ctx.json {
        return Ok(());
    }
    ctx.line(format!("n = {n}: ideal ({}, {})", o.g1, o.g2));
    ctx.line(format!("verdict: {}", o.status));
    ctx.line(format!("gcd of generators: {}", o.gcd.gcd));
    if let Some(pr) = &o.properness {
        ctx.line(format!(
            "proper modulo {}: common factor with coefficients {:?} (ascending)",
            pr.prime, pr.common_factor
        ));
    }
    if let Some(pj) = &o.principal {
        ctx.line(format!("generator: {}", pj.generator));
    }
    if let Some(p) = path {
        ctx.line(format!("certificate: {}", p.display()));
    }
    Ok(())
}

fn rank(ctx: &mut Ctx, bound: u32) -> Outcome {
    if bound < 2 {
        return Err(domain("--bound must be at least 2"));
    }
    let report = rank_over_qa(bound);
    let cert = Certificate::Rank(rank_certificate(&report));
    emit_certificate(ctx, &cert, None)?;
    if ctx.json {
        return Ok(());
    }
    ctx.line(report.rank().to_string());
    ctx.line(format!("free part: K, K' (rank {})", report.free_rank));
    let basis: Vec<String> = report.basis.iter().map(|n| format!("S_{n}")).collect();
    ctx.line(format!(
        "quotient part over Q(A): span{{{}}} (rank {})",
        basis.join(", "),
        report.quotient_rank
    ));
    for row in &report.rows {
        let mark = if row.matches_relation { "ok" } else { "MISMATCH" };
        ctx.line(format!(
            "  S_{} = ({}) * S_{}  [{mark}]",
            row.n, row.coefficient, row.target
        ));
    }
    ctx.line(format!(
        "verified for n <= {}: {}",
        report.bound,
        report.verified()
    ));
    Ok(())
}

fn catalog(ctx: &mut Ctx) -> Outcome {
    let cat = manifold_catalog();
    if ctx.json {
        let v: Vec<Value> = cat
            .iter()
            .map(|m| {
                json!({
                    "name": m.name,
                    "d": m.d.to_string(),
                    "torsion_family": m.torsion_family,
                    "torsion": m.torsion.iter().map(|r| json!({
                        "k": r.k,
                        "annihilator": r.annihilator.to_string(),
                        "identity_checked": r.identity_checked,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        ctx.emit_json(&v);
        return Ok(());
    }
    for m in &cat {
        ctx.line(format!("{}: d = {}, torsion: {}", m.name, m.d, m.torsion_family));
        for r in &m.torsion {
            let flag = if r.identity_checked {
                "= -A^k (A^k - A^-k), checked"
            } else {
                "identity FAILED"
            };
            ctx.line(format!("  k = {}: {}  {flag}", r.k, r.annihilator));
        }
    }
    Ok(())
}

fn typecheck(ctx: &mut Ctx, expr: &str, max_k: u32, max_power: u32) -> Outcome {
    let a = parse_laurent(expr).map_err(|e| domain(format!("parse error at {e}")))?;
    let tc = marche_type_check_with(&a, max_k, max_power).map_err(domain)?;
    match (ctx.json, tc) {
        (true, TypeCheck::OfType { k, power }) => {
            ctx.emit_json(&json!({ "annihilator": a.to_string(), "of_type": true, "k": k, "power": power }))
        }
        (true, TypeCheck::NotOfType { max_k, max_power }) => ctx.emit_json(
            &json!({ "annihilator": a.to_string(), "of_type": false, "max_k": max_k, "max_power": max_power }),
        ),
        (false, TypeCheck::OfType { k, power }) => {
            ctx.line(format!("k = {k}  ({a} divides (A^{k} - A^-{k})^{power})"))
        }
        (false, TypeCheck::NotOfType { max_k, max_power }) => {
            ctx.line(format!("not of type within k <= {max_k}, power <= {max_power}"))
        }
    }
    Ok(())
}

fn load_arrow(path: &Path) -> Result<ArrowDiagram, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| domain(format!("{}: {e}", path.display())))
}

fn load_moves(spec: &str) -> Result<Vec<MoveSpec>, Failure> {
    let trimmed = spec.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        spec.to_string()
    } else {
        read(Path::new(spec))?
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| domain(format!("moves: {e}")))?;
    let list = if v.is_array() { v } else { Value::Array(vec![v]) };
    serde_json::from_value(list).map_err(|e| domain(format!("moves: {e}")))
}

fn arrow(ctx: &mut Ctx, command: ArrowCommand) -> Outcome {
    match command {
        ArrowCommand::Validate { file } => {
            let d = load_arrow(&file)?;
            let violations = d.validate();
            if ctx.json {
                let v: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                let parity = if violations.is_empty() {
                    d.arrow_count_parity()
                } else {
                    Vec::new()
                };
                ctx.emit_json(&json!({ "valid": v.is_empty(), "violations": v, "arrow_parity": parity }));
            } else if violations.is_empty() {
                ctx.line("valid");
                ctx.line(format!(
                    "arrow parity per component: {:?}",
                    d.arrow_count_parity()
                ));
            }
            if violations.is_empty() {
                Ok(())
            } else {
                let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                Err(domain(format!(
                    "{}: invalid diagram: {}",
                    file.display(),
                    list.join("; ")
                )))
            }
        }
        ArrowCommand::Apply { file, moves } => {
            let mut d = load_arrow(&file)?;
            if !d.is_valid() {
                return Err(domain(format!("{}: invalid diagram", file.display())));
            }
            let mut inverses = Vec::new();
            for (i, m) in load_moves(&moves)?.iter().enumerate() {
                let (e, inv) =
                    apply_move_with_inverse(&d, m).map_err(|e| domain(format!("move {i}: {e}")))?;
                d = e;
                inverses.push(inv);
            }
            inverses.reverse();
            if ctx.json {
                ctx.emit_json(&json!({ "diagram": d, "inverse": inverses }));
            } else {
                ctx.line(serde_json::to_string(&d).expect("plain data serializes"));
                ctx.line(format!(
                    "inverse: {}",
                    serde_json::to_string(&inverses).expect("plain data serializes")
                ));
            }
            Ok(())
        }
        ArrowCommand::Template { name } => {
            let g = NamedGenerator::from_name(&name)
                .ok_or_else(|| domain(format!("unknown template '{name}' (empty, x, t, K, K')")))?;
            let d = g.diagram();
            if ctx.json {
                ctx.emit_json(&d);
            } else {
                ctx.line(serde_json::to_string(&d).expect("plain data serializes"));
            }
            Ok(())
        }
        ArrowCommand::Moves => {
            for m in move_catalog() {
                let twisted = if m.twisted_only {
                    " (antipodal boundary only)"
                } else {
                    ""
                };
                ctx.line(format!(
                    "{:?}: {}{twisted}; arrow count change {:?}, boundary pair change {:?}",
                    m.kind, m.name, m.arrow_deltas, m.pair_deltas
                ));
            }
            Ok(())
        }
    }
}

fn verify(ctx: &mut Ctx, file: &Path) -> Outcome {
    let cert = verify_json(&read(file)?).map_err(|e| domain(format!("{}: {e}", file.display())))?;
    let kind = match cert {
        Certificate::Torsion(_) => "torsion",
        Certificate::Obstruction(_) => "obstruction",
        Certificate::Rank(_) => "rank",
    };
    if ctx.json {
        ctx.emit_json(&json!({ "certificate": kind, "verified": true }));
    } else {
        ctx.line(format!("{kind} certificate verified"));
    }
    Ok(())
}

fn selftest_cmd(ctx: &mut Ctx) -> Outcome {
    let results = selftest::run_all();
    if ctx.json {
        let v: Vec<Value> = results
            .iter()
            .map(|r| json!({ "criterion": r.id, "title": r.title, "passed": r.passed, "detail": r.detail }))
            .collect();
        ctx.emit_json(&v);
    } else {
        for r in &results {
            ctx.line(r.to_string());
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(domain(format!("{failed} criteria failed")))
    }
}
