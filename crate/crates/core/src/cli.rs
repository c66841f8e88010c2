//! The `cliffkit` command line. Human-readable text goes to stdout; a
//! structured verdict is written to `--json PATH` when requested.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{Multivector, MultivectorJson, Signature, MAX_GENERATORS};
use crate::cech::{self, CechError, Complex, GroupCocycle, LiftOutcome};
use crate::groups::{self, GroupError, PseudoOrthogonalMatrix, Versor};
use crate::repr::{self, AnyRep};
use crate::spinors::{self, HermitianIdempotent, SpinorError};
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "cliffkit", version, about = "Exact Clifford algebra representations, spin groups and lift obstructions")]
pub struct Cli {
    /// Seed for every randomized check.
    #[arg(long, global = true, env = "CLIFFKIT_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Write a JSON verdict (`ok`, `result` or `error`) to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the matrix algebra isomorphic to C(p,q).
    Classify { p: usize, q: usize },
    /// Build explicit generator matrices for C(p,q), or CC(n) with --complex.
    Compile {
        p: Option<usize>,
        q: Option<usize>,
        #[arg(long, value_name = "N")]
        complex: Option<usize>,
        /// Re-check every generator relation and injectivity.
        #[arg(long)]
        verify: bool,
    },
    /// The orthogonal matrix by which a versor acts on vectors.
    Zeta {
        #[arg(long, value_parser = parse_signature)]
        sig: Signature,
        /// JSON list of grade-1 multivectors.
        #[arg(long, value_name = "FILE")]
        versor: PathBuf,
    },
    /// Write a pseudo-orthogonal matrix as a product of reflections.
    Decompose {
        #[arg(long, value_parser = parse_signature)]
        sig: Signature,
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Find a versor acting as the given matrix.
    Lift {
        #[arg(long, value_parser = parse_signature)]
        sig: Signature,
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Spinor space of CC(n) as a minimal left ideal.
    Spinor {
        #[arg(long, value_name = "N")]
        complex: usize,
        /// `auto` or a JSON file holding a Hermitian idempotent.
        #[arg(long, default_value = "auto")]
        idempotent: String,
        /// Also build the generator action and its intertwiner to the column model.
        #[arg(long)]
        model: bool,
    },
    /// Z2 cohomology of simplicial complexes and cocycle lifting.
    Cech {
        #[command(subcommand)]
        action: CechCommand,
    },
    /// Run every acceptance check and print a pass/fail table.
    VerifyAll,
}

#[derive(Debug, Subcommand)]
pub enum CechCommand {
    /// Dimension of H^k(X; Z2).
    Betti {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Check the cocycle condition on every triangle.
    Check { file: PathBuf },
    /// Lift an O(p,q) cocycle to Pin(p,q), or report the obstruction.
    Lift { file: PathBuf },
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    let (p, q) = s.split_once(',').ok_or("expected p,q")?;
    let p: usize = p.trim().parse().map_err(|e| format!("{e}"))?;
    let q: usize = q.trim().parse().map_err(|e| format!("{e}"))?;
    if p + q > MAX_GENERATORS {
        return Err(format!("at most {MAX_GENERATORS} generators"));
    }
    Ok(Signature::new(p, q))
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Check { location: String, message: String },
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn failed(location: impl Into<String>, message: impl Into<String>) -> Failure {
    Failure::Check { location: location.into(), message: message.into() }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Format(m) => usage(m),
            GroupError::SignatureMismatch { .. } | GroupError::OddDimension(_) => usage(e.to_string()),
            other => failed("group", other.to_string()),
        }
    }
}

impl From<SpinorError> for Failure {
    fn from(e: SpinorError) -> Self {
        match e {
            SpinorError::Format(m) => usage(m),
            other => failed("spinor", other.to_string()),
        }
    }
}

impl From<CechError> for Failure {
    fn from(e: CechError) -> Self {
        failed("complex", e.to_string())
    }
}

/// What a command produced: text for stdout, a JSON result, and whether
/// its checks passed.
struct Report {
    text: String,
    result: Value,
    failure: Option<(String, String)>,
}

impl Report {
    fn ok(text: String, result: Value) -> Self {
        Self { text, result, failure: None }
    }
}

/// Parses `args` and runs the command, writing human output to `out`.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let name = command_name(&cli.command);
    let outcome = dispatch(&cli);
    let (code, envelope) = match outcome {
        Ok(report) => {
            let _ = write!(out, "{}", report.text);
            match report.failure {
                None => (0, json!({"ok": true, "command": name, "result": report.result})),
                Some((location, message)) => {
                    let _ = writeln!(out, "fail at {location}: {message}");
                    let error = json!({"location": location, "message": message});
                    (1, json!({"ok": false, "command": name, "result": report.result, "error": error}))
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            (2, json!({"ok": false, "command": name, "error": {"location": "usage", "message": msg}}))
        }
        Err(Failure::Check { location, message }) => {
            let _ = writeln!(out, "fail at {location}: {message}");
            (1, json!({"ok": false, "command": name, "error": {"location": location, "message": message}}))
        }
    };
    if let Some(path) = &cli.json {
        let body = serde_json::to_string_pretty(&envelope).expect("serializable") + "\n";
        if let Err(e) = std::fs::write(path, body) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Compile { .. } => "compile",
        Command::Zeta { .. } => "zeta",
        Command::Decompose { .. } => "decompose",
        Command::Lift { .. } => "lift",
        Command::Spinor { .. } => "spinor",
        Command::Cech { action: CechCommand::Betti { .. } } => "cech betti",
        Command::Cech { action: CechCommand::Check { .. } } => "cech check",
        Command::Cech { action: CechCommand::Lift { .. } } => "cech lift",
        Command::VerifyAll => "verify-all",
    }
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Classify { p, q } => classify(*p, *q),
        Command::Compile { p, q, complex, verify } => compile(*p, *q, *complex, *verify),
        Command::Zeta { sig, versor } => zeta(*sig, versor),
        Command::Decompose { sig, matrix } => decompose(*sig, matrix),
        Command::Lift { sig, matrix } => lift(*sig, matrix),
        Command::Spinor { complex, idempotent, model } => spinor(*complex, idempotent, *model),
        Command::Cech { action } => match action {
            CechCommand::Betti { file, k } => cech_betti(file, *k),
            CechCommand::Check { file } => cech_check(file),
            CechCommand::Lift { file } => cech_lift(file),
        },
        Command::VerifyAll => Ok(verify_all(cli.seed)),
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn signature_arg(p: usize, q: usize) -> Result<Signature, Failure> {
    parse_signature(&format!("{p},{q}")).map_err(usage)
}

fn classify(p: usize, q: usize) -> Result<Report, Failure> {
    let target = repr::classify(signature_arg(p, q)?);
    Ok(Report::ok(format!("{target}\n"), json!({"kind": target.kind.name(), "m": target.m})))
}

fn compile(p: Option<usize>, q: Option<usize>, complex: Option<usize>, verify: bool) -> Result<Report, Failure> {
    let rep = match (p, q, complex) {
        (Some(p), Some(q), None) => repr::compile_rep(signature_arg(p, q)?),
        (None, None, Some(n)) => {
            if n > MAX_GENERATORS {
                return Err(usage(format!("at most {MAX_GENERATORS} generators")));
            }
            let r = repr::compile_complex_rep(n).map_err(|e| usage(e.to_string()))?;
            AnyRep::Complex(r)
        }
        (_, _, Some(_)) => return Err(usage("give either p q or --complex n")),
        _ => return Err(usage("compile needs p q or --complex n")),
    };
    let mut text = rep.to_string();
    let mut report_failure = None;
    if verify {
        match rep.verify_relations() {
            Ok(()) => text.push_str("relations: verified\n"),
            Err(e) => report_failure = Some(("relations".to_string(), e.to_string())),
        }
        if rep.is_injective() {
            text.push_str("injective: verified\n");
        } else if report_failure.is_none() {
            report_failure = Some(("injectivity".to_string(), "blade images are linearly dependent".to_string()));
        }
    }
    Ok(Report { text, result: rep.to_json(), failure: report_failure })
}

fn zeta(sig: Signature, path: &Path) -> Result<Report, Failure> {
    let g = Versor::from_json(sig, &read_json(path)?)?;
    let m = groups::zeta(&g)?;
    let text = format!(
        "g = {g}\nzeta(g) =\n{m}det = {}\nM^T eta M = eta: verified\n",
        m.determinant()
    );
    Ok(Report::ok(text, json!({"matrix": m.to_json(), "det": m.determinant().to_string()})))
}

fn read_matrix(sig: Signature, path: &Path) -> Result<PseudoOrthogonalMatrix, Failure> {
    Ok(PseudoOrthogonalMatrix::from_json(sig, &read_json(path)?)?)
}

fn vectors_json(vs: &[Multivector<crate::scalar::Rational>]) -> Value {
    Value::Array(vs.iter().map(|v| serde_json::to_value(MultivectorJson::from_real(v)).expect("serializable")).collect())
}

fn decompose(sig: Signature, path: &Path) -> Result<Report, Failure> {
    let m = read_matrix(sig, path)?;
    let d = groups::cartan_dieudonne(&m)?;
    let mut text = format!("{} reflections, {} fallback columns\n", d.len(), d.fallbacks);
    for (k, w) in d.vectors.iter().enumerate() {
        text.push_str(&format!("w{} = {w}\n", k + 1));
    }
    let failure = if d.recompose(sig)? == m {
        text.push_str("recomposition: exact\n");
        None
    } else {
        Some(("recomposition".to_string(), "product of reflections differs from input".to_string()))
    };
    let result = json!({"vectors": vectors_json(&d.vectors), "fallbacks": d.fallbacks});
    Ok(Report { text, result, failure })
}

fn lift(sig: Signature, path: &Path) -> Result<Report, Failure> {
    let m = read_matrix(sig, path)?;
    let g = groups::lift_to_pin(&m)?;
    let back = groups::zeta(&g)?;
    let mut text = format!("g = {g}\nparity: {}\nspin: {}\n", if g.is_even() { "even" } else { "odd" }, g.is_spin());
    let failure = if back == m {
        text.push_str("zeta(g) = M: verified\n");
        None
    } else {
        Some(("lift".to_string(), "zeta(g) differs from input".to_string()))
    };
    Ok(Report { text, result: json!({"versor": g.to_json(), "spin": g.is_spin()}), failure })
}

fn spinor(n: usize, idempotent: &str, model: bool) -> Result<Report, Failure> {
    if n > 8 {
        return Err(usage("spinor spaces are built for n <= 8"));
    }
    let p = if idempotent == "auto" {
        spinors::primitive_idempotent(n)?
    } else {
        let p = HermitianIdempotent::from_json(&read_json(Path::new(idempotent))?)?;
        if p.n() != n {
            return Err(usage(format!("idempotent lives in CC({}), not CC({n})", p.n())));
        }
        p
    };
    let space = spinors::left_ideal(&p);
    let mut text = format!(
        "p = {}\ndim = {} ({})\n",
        p.element(),
        space.dim(),
        if space.is_minimal() { "minimal" } else { "not minimal" }
    );
    for (k, b) in space.basis().iter().enumerate() {
        text.push_str(&format!("psi{} = {b}\n", k + 1));
    }
    let mut result = space.to_json();
    let mut failure = None;
    if model {
        let m = spinors::spinor_matrix_model(&space)?;
        for (a, g) in m.action.iter().enumerate() {
            text.push_str(&format!("e{} acts as\n{g}", a + 1));
        }
        if m.check() {
            text.push_str("intertwiner to column model: verified\n");
        } else {
            failure = Some(("model".to_string(), "intertwiner check failed".to_string()));
        }
        result["model"] = json!({
            "action": m.action.iter().map(repr::matrix_to_json).collect::<Vec<_>>(),
            "intertwiner": repr::matrix_to_json(&m.intertwiner),
        });
    }
    Ok(Report { text, result, failure })
}

fn cech_betti(path: &Path, k: usize) -> Result<Report, Failure> {
    let complex = Complex::from_json(&read_json(path)?).map_err(|e| usage(e.to_string()))?;
    if k > 3 {
        return Err(usage("k must be at most 3"));
    }
    let b = cech::z2_betti(&complex, k);
    Ok(Report::ok(format!("{b}\n"), json!({"k": k, "betti": b})))
}

fn read_cocycle(path: &Path) -> Result<GroupCocycle, Failure> {
    GroupCocycle::from_json(&read_json(path)?).map_err(|e| usage(e.to_string()))
}

fn cech_check(path: &Path) -> Result<Report, Failure> {
    let c = read_cocycle(path)?;
    let v = cech::check_cocycle(&c);
    let failure = v.witness.map(|t| (format!("triangle {t:?}"), "g_ij g_jk != g_ik".to_string()));
    let text = if v.ok { "cocycle condition: verified\n".to_string() } else { String::new() };
    Ok(Report { text, result: json!({"cocycle": v.ok}), failure })
}

fn cech_lift(path: &Path) -> Result<Report, Failure> {
    let c = read_cocycle(path)?;
    match cech::pin_lift_cocycle(&c)? {
        LiftOutcome::Lifted { lifts, correction, h1 } => {
            let mut text = format!("lift exists; {} inequivalent lifts (dim H1 = {h1})\n", 1u64 << h1);
            let mut edges = Vec::new();
            for ((i, j), g) in &lifts {
                text.push_str(&format!("g[{i},{j}] = {g}\n"));
                edges.push(json!({"e": [i, j], "versor": g.to_json()}));
            }
            let flips: Vec<_> = correction.support(&c.complex).iter().map(|e| e.to_vec()).collect();
            Ok(Report::ok(text, json!({"lifted": true, "h1": h1, "edges": edges, "sign_flips": flips})))
        }
        LiftOutcome::Obstructed { class } => {
            let support: Vec<Vec<usize>> = class.support(&c.complex).iter().map(|t| t.to_vec()).collect();
            let text = format!("obstructed: discrepancy class is not a coboundary ({} triangles)\n", support.len());
            let location = support.first().map_or("H2".to_string(), |t| format!("triangle {t:?}"));
            Ok(Report {
                text,
                result: json!({"lifted": false, "class": support}),
                failure: Some((location, "no Pin lift exists".to_string())),
            })
        }
    }
}

fn verify_all(seed: u64) -> Report {
    let reports = std::thread::scope(|s| {
        let handles: Vec<_> = verify::CRITERIA.iter().map(|c| s.spawn(move || verify::run(c.0, seed))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread")).collect::<Vec<_>>()
    });
    let width = reports.iter().map(|r| r.title.chars().count()).max().unwrap_or(0);
    let mut text = format!("seed {seed}\n");
    for r in &reports {
        let mark = if r.passed { "pass" } else { "FAIL" };
        text.push_str(&format!("{:>2}  {:<width$}  {mark}  {}\n", r.id, r.title, r.detail));
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    text.push_str(&format!("{passed}/{} criteria passed\n", reports.len()));
    let result = Value::Array(
        reports.iter().map(|r| json!({"id": r.id, "name": r.title, "pass": r.passed, "detail": r.detail})).collect(),
    );
    let failure = reports
        .iter()
        .find(|r| !r.passed)
        .map(|r| (format!("criterion {}", r.id), r.detail.clone()));
    Report { text, result, failure }
}
