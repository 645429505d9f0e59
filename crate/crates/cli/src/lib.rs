//! The `hayd` command line: verify and check JSON structure-constant
//! documents, build derived structures, and run the builtin suite.
//!
//! Exit codes: 0 when every check passes, 1 when one fails, 2 on any input
//! or usage error.

pub mod builtins;
pub mod checks;
pub mod doc;
pub mod fields;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hayd_core::ayd::tensor_product;
use hayd_core::double::{build_ah, double_hopf, tensor_basis_names};
use hayd_core::galois::make_sayd_prop5;
use hayd_core::hopf::{verify_hopf_axioms, HopfStructure};
use hayd_core::rep::{verify_action, verify_coaction};
use hayd_core::{Case, ComoduleAlgebra, Field, FieldSpec, FinHopfAlgebra, TwoSidedStructure};
use serde_json::json;

use crate::builtins::Builtin;
use crate::checks::{case_check, comodule_algebra_check, hopf_check, module_check};
use crate::checks::{CASE_CHECKS, COMODULE_ALGEBRA_CHECKS, HOPF_CHECKS, MODULE_CHECKS};
use crate::doc::{parse_document, Document, Kind};
use crate::fields::SUPPORTED_PRIMES;
use crate::report::{all_passed, render, CheckReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub const DEFAULT_MAX_DIM: usize = 64;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
}

pub type CliResult<T> = Result<T, CliError>;

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn unsupported<T>(p: u64) -> CliResult<T> {
    Err(CliError::Input(format!("F{p} is not supported; available primes: {SUPPORTED_PRIMES:?}")))
}

#[derive(Parser, Debug)]
#[command(name = "hayd", version, about = "Exact checks for finite-dimensional Hopf algebras and (anti-)Yetter-Drinfeld modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct OutputArgs {
    /// Machine-readable report.
    #[arg(long)]
    json: bool,
    /// Include wall-clock times (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify the axioms of a document.
    Verify {
        file: PathBuf,
        /// Hopf algebra or algebra (file or builtin name) that module-like documents live over.
        #[arg(long, alias = "hopf")]
        over: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run one named check.
    Check {
        check: String,
        /// Hopf algebra document or builtin name.
        #[arg(long)]
        hopf: String,
        /// two_sided or comodule_algebra document.
        #[arg(long)]
        module: Option<PathBuf>,
        /// Restrict adjoint_yd/trivial_module to one case, or read the module in this case.
        #[arg(long)]
        case: Option<Case>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Construct a derived structure and print it as a document.
    Build {
        #[command(subcommand)]
        what: BuildCommand,
    },
    /// Run the Hopf-algebra checks on builtins and files.
    Suite {
        /// `all` or a comma-separated list of builtin names.
        #[arg(long, value_delimiter = ',')]
        builtin: Vec<String>,
        /// Hopf algebra documents to include.
        files: Vec<PathBuf>,
        /// Comma-separated subset of checks (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List the builtin Hopf algebras.
    ListBuiltins {
        #[arg(long)]
        json: bool,
    },
    /// Write a builtin as a hopf document.
    Export {
        builtin: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the available check names.
    ListChecks,
}

#[derive(Subcommand, Debug)]
enum BuildCommand {
    /// The algebra A(H) on H*⊗H.
    Ah {
        #[arg(long)]
        hopf: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The Drinfeld double D(H) as a Hopf algebra.
    Double {
        #[arg(long)]
        hopf: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The stable aYD module of a Hopf-Galois extension (P = H by default).
    SaydProp5 {
        #[arg(long)]
        hopf: String,
        /// comodule_algebra document.
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Tensor product of a YD module and an aYD module of the same case.
    Tensor {
        #[arg(long)]
        hopf: String,
        #[arg(long)]
        yd: PathBuf,
        #[arg(long)]
        ayd: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_PASS
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn max_dim() -> CliResult<usize> {
    match std::env::var("HAYD_MAX_DIM") {
        Ok(v) => v
            .parse::<usize>()
            .ok()
            .filter(|d| *d > 0)
            .ok_or_else(|| CliError::Usage(format!("HAYD_MAX_DIM must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Verify { file, over, out: o } => {
            let reports = verify(&file, over.as_deref())?;
            emit_reports(out, &reports, o)
        }
        Command::Check { check, hopf, module, case, out: o } => {
            let reports = check_command(&check, &hopf, module.as_deref(), case)?;
            emit_reports(out, &reports, o)
        }
        Command::Build { what } => {
            let (doc, output) = build(what)?;
            write_output(out, output.as_deref(), &doc.to_pretty())?;
            Ok(EXIT_PASS)
        }
        Command::Suite { builtin, files, checks, out: o } => {
            let reports = suite(&builtin, &files, &checks)?;
            emit_reports(out, &reports, o)
        }
        Command::ListBuiltins { json } => {
            write_output(out, None, &list_builtins(json))?;
            Ok(EXIT_PASS)
        }
        Command::Export { builtin, output } => {
            let b = Builtin::parse(&builtin).ok_or_else(|| CliError::Usage(format!("unknown builtin {builtin:?}")))?;
            let doc = with_field!(b.field, F => export::<F>(b), unsupported)?;
            write_output(out, output.as_deref(), &doc.to_pretty())?;
            Ok(EXIT_PASS)
        }
        Command::ListChecks => {
            let mut s = String::new();
            for (label, names) in
                [("hopf", &HOPF_CHECKS[..]), ("two_sided", &MODULE_CHECKS[..]), ("comodule_algebra", &COMODULE_ALGEBRA_CHECKS[..])]
            {
                s.push_str(&format!("{label}: {}\n", names.join(", ")));
            }
            write_output(out, None, &s)?;
            Ok(EXIT_PASS)
        }
    }
}

fn emit_reports(out: &mut dyn Write, reports: &[CheckReport], o: OutputArgs) -> CliResult<i32> {
    write_output(out, None, &render(reports, o.json, o.timings))?;
    Ok(if all_passed(reports) { EXIT_PASS } else { EXIT_FAIL })
}

fn write_output(out: &mut dyn Write, path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Input(format!("cannot write {}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(input),
    }
}

pub fn read_document(path: &Path) -> CliResult<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text, max_dim()?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// A Hopf algebra named on the command line.
#[derive(Clone, Debug)]
enum Source {
    Builtin(Builtin),
    File(String, Document),
}

impl Source {
    /// An existing file wins over a builtin of the same name.
    fn resolve(s: &str, kinds: &[Kind]) -> CliResult<Source> {
        let path = Path::new(s);
        if path.exists() {
            let doc = read_document(path)?;
            if !kinds.contains(&doc.kind) {
                return Err(CliError::Input(format!("{s}: expected a hopf document, got {}", doc.kind)));
            }
            return Ok(Source::File(s.to_string(), doc));
        }
        Builtin::parse(s)
            .map(Source::Builtin)
            .ok_or_else(|| CliError::Input(format!("{s:?} is neither a file nor a builtin name")))
    }

    fn field(&self) -> FieldSpec {
        match self {
            Source::Builtin(b) => b.field,
            Source::File(_, d) => d.field,
        }
    }

    fn label(&self) -> String {
        match self {
            Source::Builtin(b) => b.to_string(),
            Source::File(p, _) => p.clone(),
        }
    }

    fn raw<F: Field>(&self) -> CliResult<HopfStructure<F>> {
        match self {
            Source::Builtin(b) => Ok(b.family.build::<F>().map_err(input)?.structure()),
            Source::File(_, d) => d.hopf_structure().map_err(input),
        }
    }

    fn hopf<F: Field>(&self) -> CliResult<FinHopfAlgebra<F>> {
        match self {
            Source::Builtin(b) => b.family.build::<F>().map_err(|e| CliError::Input(format!("{b}: {e}"))),
            Source::File(p, d) => FinHopfAlgebra::new(d.hopf_structure().map_err(input)?)
                .map_err(|e| CliError::Input(format!("{p} is not a Hopf algebra: {e}"))),
        }
    }
}

fn same_field(doc: &Document, label: &str, field: FieldSpec) -> CliResult<()> {
    if doc.field != field {
        return Err(CliError::Input(format!("{label} is over {} but the Hopf algebra is over {field}", doc.field)));
    }
    Ok(())
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u128) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_millis())
}

fn verify(file: &Path, over: Option<&str>) -> CliResult<Vec<CheckReport>> {
    let doc = read_document(file)?;
    let label = file.display().to_string();
    let over = over.map(|s| Source::resolve(s, &[Kind::Hopf, Kind::Algebra])).transpose()?;
    if let Some(o) = &over {
        same_field(&doc, &label, o.field())?;
    }
    with_field!(doc.field, F => verify_generic::<F>(&doc, &label, over.as_ref()), unsupported)
}

fn verify_generic<F: Field>(doc: &Document, label: &str, over: Option<&Source>) -> CliResult<Vec<CheckReport>> {
    let need_over = || over.ok_or_else(|| CliError::Usage(format!("a {} document needs --over <hopf>", doc.kind)));
    let report = |check: &str, r: (hayd_core::Report<F>, u128)| CheckReport::from_core(check, label, &r.0, r.1);
    Ok(match doc.kind {
        Kind::Hopf => {
            let raw = doc.hopf_structure::<F>().map_err(input)?;
            vec![report("hopf_axioms", timed(|| verify_hopf_axioms(&raw).expect("document shapes are validated")))]
        }
        Kind::Algebra => {
            let a = doc.algebra::<F>().map_err(input)?;
            vec![report("algebra_axioms", timed(|| a.verify()))]
        }
        Kind::Action => {
            let alg = match need_over()? {
                Source::File(p, d) if d.kind == Kind::Algebra => {
                    let a = d.algebra::<F>().map_err(input)?;
                    if !a.verify().passed {
                        return Err(CliError::Input(format!("{p} is not an associative unital algebra")));
                    }
                    a
                }
                src => src.hopf::<F>()?.algebra().clone(),
            };
            let a = doc.action::<F>().map_err(input)?;
            if a.alg_dim() != alg.dim() {
                return Err(CliError::Input(format!("{label} acts by an algebra of dim {}, got dim {}", a.alg_dim(), alg.dim())));
            }
            vec![report("action_axioms", timed(|| verify_action(&alg, &a).expect("dimensions checked")))]
        }
        Kind::Coaction => {
            let h = need_over()?.hopf::<F>()?;
            let c = doc.coaction::<F>().map_err(input)?;
            if c.hopf_dim() != h.dim() {
                return Err(CliError::Input(format!("{label} is over dim {}, got dim {}", c.hopf_dim(), h.dim())));
            }
            vec![report("coaction_axioms", timed(|| verify_coaction(&h, &c).expect("dimensions checked")))]
        }
        Kind::TwoSided => {
            let h = need_over()?.hopf::<F>()?;
            let m = doc.two_sided(&h).map_err(input)?;
            vec![
                report("action_axioms", timed(|| verify_action(h.algebra(), &m.action).expect("dimensions checked"))),
                report("coaction_axioms", timed(|| verify_coaction(&h, &m.coaction).expect("dimensions checked"))),
            ]
        }
        Kind::ComoduleAlgebra => {
            let h = need_over()?.hopf::<F>()?;
            let p = doc.comodule_algebra(&h).map_err(input)?;
            let (r, ms) = timed(|| comodule_algebra_check("comodule_algebra", &p).expect("known check"));
            vec![CheckReport::from_core("comodule_algebra", label, &r, ms)]
        }
    })
}

fn check_command(name: &str, hopf: &str, module: Option<&Path>, case: Option<Case>) -> CliResult<Vec<CheckReport>> {
    let src = Source::resolve(hopf, &[Kind::Hopf])?;
    let module = match module {
        Some(p) => {
            let d = read_document(p)?;
            same_field(&d, &p.display().to_string(), src.field())?;
            Some((p.display().to_string(), d))
        }
        None => None,
    };
    with_field!(src.field(), F => check_generic::<F>(name, &src, module.as_ref(), case), unsupported)
}

fn check_generic<F: Field>(
    name: &str,
    src: &Source,
    module: Option<&(String, Document)>,
    case: Option<Case>,
) -> CliResult<Vec<CheckReport>> {
    let known = HOPF_CHECKS.contains(&name) || MODULE_CHECKS.contains(&name) || COMODULE_ALGEBRA_CHECKS.contains(&name);
    if !known {
        return Err(CliError::Usage(format!("unknown check {name:?}; see `hayd list-checks`")));
    }
    let Some((label, doc)) = module else {
        if !HOPF_CHECKS.contains(&name) {
            return Err(CliError::Usage(format!("check {name} needs --module")));
        }
        if case.is_some() && !CASE_CHECKS.contains(&name) {
            return Err(CliError::Usage(format!("--case does not apply to {name}")));
        }
        let label = src.label();
        if name == "hopf_axioms" {
            let raw = src.raw::<F>()?;
            let (r, ms) = timed(|| verify_hopf_axioms(&raw).expect("document shapes are validated"));
            return Ok(vec![CheckReport::from_core(name, &label, &r, ms)]);
        }
        let h = src.hopf::<F>()?;
        let (r, ms) = match case {
            Some(c) => {
                let (r, ms) = timed(|| case_check(name, &h, c));
                let r = r.ok_or_else(|| CliError::Usage(format!("--case does not apply to {name}")))?;
                (r, ms)
            }
            None => {
                let (r, ms) = timed(|| hopf_check(name, &h));
                let r = r.ok_or_else(|| CliError::Usage(format!("{name} needs a finite field, {label} is over {}", src.field())))?;
                (r, ms)
            }
        };
        return Ok(vec![CheckReport::from_core(name, &label, &r, ms)]);
    };
    let h = src.hopf::<F>()?;
    let (r, ms) = match doc.kind {
        Kind::TwoSided if MODULE_CHECKS.contains(&name) => {
            let mut m = doc.two_sided(&h).map_err(input)?;
            if let Some(c) = case {
                m = m.mirror(c);
            }
            timed(|| module_check(name, &m).expect("known check"))
        }
        Kind::ComoduleAlgebra if COMODULE_ALGEBRA_CHECKS.contains(&name) => {
            if case.is_some() {
                return Err(CliError::Usage("--case does not apply to comodule algebras".into()));
            }
            let p = doc.comodule_algebra(&h).map_err(input)?;
            timed(|| comodule_algebra_check(name, &p).expect("known check"))
        }
        kind => return Err(CliError::Usage(format!("check {name} does not apply to a {kind} document"))),
    };
    Ok(vec![CheckReport::from_core(name, label, &r, ms)])
}

fn build(what: BuildCommand) -> CliResult<(Document, Option<PathBuf>)> {
    let (hopf, output) = match &what {
        BuildCommand::Ah { hopf, output }
        | BuildCommand::Double { hopf, output }
        | BuildCommand::SaydProp5 { hopf, output, .. }
        | BuildCommand::Tensor { hopf, output, .. } => (hopf.clone(), output.clone()),
    };
    let src = Source::resolve(&hopf, &[Kind::Hopf])?;
    let doc = with_field!(src.field(), F => build_generic::<F>(&what, &src), unsupported)?;
    Ok((doc, output))
}

fn load_two_sided<F: Field>(path: &Path, h: &FinHopfAlgebra<F>) -> CliResult<TwoSidedStructure<F>> {
    let label = path.display().to_string();
    let d = read_document(path)?;
    same_field(&d, &label, F::spec())?;
    let m = d.two_sided(h).map_err(|e| CliError::Input(format!("{label}: {e}")))?;
    TwoSidedStructure::new(m.hopf, m.action, m.coaction).map_err(|e| CliError::Input(format!("{label}: {e}")))
}

fn build_generic<F: Field>(what: &BuildCommand, src: &Source) -> CliResult<Document> {
    let h = src.hopf::<F>()?;
    Ok(match what {
        BuildCommand::Ah { .. } => {
            let a = build_ah(&h).map_err(input)?;
            Document::from_algebra(&a, Some(tensor_basis_names(&h)))
        }
        BuildCommand::Double { .. } => Document::from_hopf(&double_hopf(&h).map_err(input)?),
        BuildCommand::SaydProp5 { module, .. } => {
            let p = match module {
                Some(path) => {
                    let label = path.display().to_string();
                    let d = read_document(path)?;
                    same_field(&d, &label, F::spec())?;
                    let p = d.comodule_algebra(&h).map_err(|e| CliError::Input(format!("{label}: {e}")))?;
                    ComoduleAlgebra::new(p.algebra, p.hopf, p.coaction)
                        .map_err(|e| CliError::Input(format!("{label}: {e}")))?
                }
                None => ComoduleAlgebra::regular(&h),
            };
            Document::from_two_sided(&make_sayd_prop5(&p).map_err(input)?)
        }
        BuildCommand::Tensor { yd, ayd, .. } => {
            let n = load_two_sided(yd, &h)?;
            let m = load_two_sided(ayd, &h)?;
            let case = n.case();
            Document::from_two_sided(&tensor_product(&n, &m, case).map_err(input)?)
        }
    })
}

fn export<F: Field>(b: Builtin) -> CliResult<Document> {
    let h = b.family.build::<F>().map_err(|e| CliError::Input(format!("{b}: {e}")))?;
    Ok(Document::from_hopf(&h))
}

fn suite(builtin: &[String], files: &[PathBuf], checks: &[String]) -> CliResult<Vec<CheckReport>> {
    let mut targets = Vec::new();
    if builtin.iter().any(|b| b == "all") || (builtin.is_empty() && files.is_empty()) {
        targets.extend(Builtin::all().into_iter().map(Source::Builtin));
    }
    for name in builtin.iter().filter(|b| *b != "all") {
        let b = Builtin::parse(name).ok_or_else(|| CliError::Usage(format!("unknown builtin {name:?}")))?;
        targets.push(Source::Builtin(b));
    }
    for path in files {
        let doc = read_document(path)?;
        if doc.kind != Kind::Hopf {
            return Err(CliError::Input(format!("{}: expected a hopf document, got {}", path.display(), doc.kind)));
        }
        targets.push(Source::File(path.display().to_string(), doc));
    }
    let selected: Vec<&str> = if checks.is_empty() {
        HOPF_CHECKS.to_vec()
    } else {
        let mut v = Vec::new();
        for c in checks {
            let known = HOPF_CHECKS
                .iter()
                .find(|k| *k == c)
                .ok_or_else(|| CliError::Usage(format!("unknown suite check {c:?}")))?;
            v.push(*known);
        }
        v
    };
    // every target must load before any check runs
    for t in &targets {
        with_field!(t.field(), F => t.hopf::<F>().map(|_| ()), unsupported)?;
    }
    let results: Vec<CliResult<Vec<CheckReport>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = targets
            .iter()
            .map(|t| {
                let selected = &selected;
                scope.spawn(move || with_field!(t.field(), F => suite_target::<F>(t, selected), unsupported))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite worker panicked")).collect()
    });
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    reports.sort_by(|a, b| (&a.check, &a.target).cmp(&(&b.check, &b.target)));
    Ok(reports)
}

fn suite_target<F: Field>(t: &Source, checks: &[&str]) -> CliResult<Vec<CheckReport>> {
    let h = t.hopf::<F>()?;
    let label = t.label();
    let mut out = Vec::new();
    for name in checks {
        let (r, ms) = timed(|| hopf_check(name, &h));
        if let Some(r) = r {
            out.push(CheckReport::from_core(name, &label, &r, ms));
        }
    }
    Ok(out)
}

fn list_builtins(json: bool) -> String {
    let all = Builtin::all();
    if json {
        let v: Vec<_> = all
            .iter()
            .map(|b| json!({"name": b.to_string(), "dim": b.family.dim(), "field": b.field.to_string(), "description": b.family.description()}))
            .collect();
        let mut s = serde_json::to_string_pretty(&v).expect("serializes");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for b in all {
            s.push_str(&format!("{:<20} dim {:<2} {}  {}\n", b.to_string(), b.family.dim(), b.field, b.family.description()));
        }
        s.push_str("append @q or @f<p> to change the field, e.g. sweedler@q\n");
        s
    }
}
