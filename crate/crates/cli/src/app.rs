//! Subcommand dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};

use agtilt::ar::{enumerate_indecomposables, IndCatalog};
use agtilt::homology::HomDim;
use agtilt::theorems::{evaluate, main_theorem, AlgebraVerdict, CheckOutcome, CheckResult, Context, Settings};
use agtilt::{Algebra, Error};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::corpus;
use crate::format::{parse_algebra_file, AlgebraFile};
use crate::report::{human_verdict, json_lines, summary_table};

#[derive(Parser, Debug)]
#[command(name = "agtilt", version, about = "Homological invariants and tilting checks for bound quiver algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(clap::Args, Debug, Clone, Default)]
pub struct Options {
    /// Prime for the ground field; overrides the file.
    #[arg(long, global = true)]
    pub prime: Option<u32>,
    /// Seed for randomized searches.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub nilpotency_cap: Option<usize>,
    #[arg(long, global = true)]
    pub resolution_cap: Option<usize>,
    #[arg(long, global = true)]
    pub domdim_cap: Option<usize>,
    #[arg(long, global = true)]
    pub catalog_cap: Option<usize>,
    /// Random extensions sampled per algebra for the SES bound.
    #[arg(long, global = true)]
    pub ses_samples: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Destination of JSON records or DOT output; standard output if absent.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Human,
    Json,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, gl.dim, domdim and Gorenstein data.
    Info { input: String },
    /// Catalog of indecomposables with pd, id and τ-links.
    Ind { input: String },
    /// AR quiver in DOT syntax.
    Dot { input: String },
    /// A single decision.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        input: String,
    },
    /// Every theorem check on the given algebras.
    Suite {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// The suite over the bundled corpus, or over `*.alg` files in a directory.
    Corpus {
        /// Defaults to the AGTILT_CORPUS_DIR variable, then the bundled files.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    #[value(name = "1ag")]
    OneAg,
    Auslander,
    Tilted,
    Main,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    Inconclusive = 2,
    InputError = 3,
}

impl Status {
    fn of_outcome(o: CheckOutcome) -> Status {
        match o {
            CheckOutcome::Pass | CheckOutcome::Vacuous => Status::Ok,
            CheckOutcome::Fail => Status::Failed,
            CheckOutcome::Inconclusive => Status::Inconclusive,
        }
    }

    fn of_error(e: &Error) -> Status {
        match e {
            Error::InvalidInput(_) | Error::NotAdmissible(_) => Status::InputError,
            Error::CrossCheckMismatch(_) | Error::ValidationFailed(_) => Status::Failed,
            _ => Status::Inconclusive,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Ok => "pass",
            Status::Failed => "fail",
            Status::Inconclusive => "inconclusive",
            Status::InputError => "input-error",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// A parsed, built algebra with its effective settings.
pub struct Loaded {
    pub source: String,
    pub name: String,
    pub file: AlgebraFile,
    pub algebra: Algebra,
    pub settings: Settings,
}

fn resolve(input: &str) -> Result<(String, String), AppError> {
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| AppError::Input(format!("{input}: {e}")))?;
        let stem = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
        return Ok((stem, text));
    }
    corpus::bundled(input)
        .map(|t| (input.to_string(), t.to_string()))
        .ok_or_else(|| AppError::Input(format!("{input}: no such file or bundled algebra")))
}

pub fn load(source: &str, text: &str, opts: &Options) -> Result<Loaded, AppError> {
    let file = parse_algebra_file(text).map_err(|e| AppError::Input(format!("{source}: {e}")))?;
    let prime = opts.prime.or(file.prime).unwrap_or(agtilt::DEFAULT_PRIME);
    let nilpotency = opts
        .nilpotency_cap
        .or(file.caps.nilpotency)
        .unwrap_or(agtilt::examples::NILPOTENCY_CAP);
    let algebra = file
        .build(prime, nilpotency)
        .map_err(|e| AppError::Input(format!("{source}: {e}")))?
        .with_seed(opts.seed.unwrap_or(agtilt::DEFAULT_SEED));
    let d = Settings::default();
    let settings = Settings {
        resolution_cap: opts.resolution_cap.or(file.caps.resolution).unwrap_or(d.resolution_cap),
        domdim_cap: opts.domdim_cap.or(file.caps.domdim).unwrap_or(d.domdim_cap),
        catalog_cap: opts.catalog_cap.or(file.caps.catalog).unwrap_or(d.catalog_cap),
        ses_samples: opts.ses_samples.unwrap_or(d.ses_samples),
    };
    Ok(Loaded {
        source: source.to_string(),
        name: file.name.clone().unwrap_or_else(|| source.to_string()),
        file,
        algebra,
        settings,
    })
}

/// Compares `expect.*` lines of the file with the computed verdict.
pub fn expectation_check(file: &AlgebraFile, v: &AlgebraVerdict) -> CheckResult {
    const NAME: &str = "declared_invariants";
    if file.expect.is_empty() {
        return CheckResult {
            name: NAME,
            outcome: CheckOutcome::Vacuous,
            detail: "no expect lines".into(),
        };
    }
    let dim = |d: &Option<HomDim>| d.map(|d| d.to_string());
    let flag = |b: &Option<bool>| b.map(|b| b.to_string());
    let mut mismatches = Vec::new();
    let mut undecided = Vec::new();
    for (key, want) in &file.expect {
        let got = match key.as_str() {
            "dim" => Some(v.dim.to_string()),
            "gldim" => dim(&v.gldim),
            "domdim" => dim(&v.domdim),
            "catalog" => v.catalog_size.map(|n| n.to_string()),
            "selfinjective" => Some(v.is_selfinjective.to_string()),
            "gorenstein" => flag(&v.is_gorenstein),
            "1ag" => flag(&v.is_1ag),
            "auslander" => flag(&v.is_auslander),
            "tilted" => flag(&v.is_tilted),
            _ => None,
        };
        match got {
            Some(g) if &g == want => {}
            Some(g) => mismatches.push(format!("{key} expected {want} got {g}")),
            None => undecided.push(key.clone()),
        }
    }
    let (outcome, detail) = if !mismatches.is_empty() {
        (CheckOutcome::Fail, mismatches.join("; "))
    } else if !undecided.is_empty() {
        (CheckOutcome::Inconclusive, format!("undecided: {}", undecided.join(", ")))
    } else {
        (CheckOutcome::Pass, format!("{} declared values match", file.expect.len()))
    };
    CheckResult {
        name: NAME,
        outcome,
        detail,
    }
}

pub fn verdict_of(l: &Loaded) -> AlgebraVerdict {
    let mut v = evaluate(&l.name, &l.algebra, l.settings);
    v.checks.push(expectation_check(&l.file, &v));
    v
}

fn worst(v: &AlgebraVerdict) -> Status {
    v.checks
        .iter()
        .map(|c| Status::of_outcome(c.outcome))
        .max()
        .unwrap_or(Status::Ok)
}

struct Sink<'a> {
    out: &'a mut dyn Write,
    opts: &'a Options,
}

impl Sink<'_> {
    fn human(&self) -> bool {
        self.opts.format != Format::Json
    }

    fn json(&self) -> bool {
        self.opts.format != Format::Human
    }

    fn text(&mut self, s: &str) -> Result<(), AppError> {
        if self.human() {
            self.out.write_all(s.as_bytes())?;
        }
        Ok(())
    }

    /// Machine-readable text to `--output`, or standard output.
    fn records(&mut self, s: &str) -> Result<(), AppError> {
        if !self.json() {
            return Ok(());
        }
        match &self.opts.output {
            Some(p) => std::fs::write(p, s)?,
            None => self.out.write_all(s.as_bytes())?,
        }
        Ok(())
    }
}

fn record(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string(&value).expect("serializable");
    s.push('\n');
    s
}

fn show(d: &Result<HomDim, Error>) -> String {
    d.as_ref().map_or_else(|_| "?".to_string(), |d| d.to_string())
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, AppError> {
    let opts = &cli.options;
    let mut sink = Sink { out, opts };
    match &cli.command {
        Command::Info { input } => {
            let (source, text) = resolve(input)?;
            let l = load(&source, &text, opts)?;
            info(&l, &mut sink)
        }
        Command::Ind { input } => {
            let (source, text) = resolve(input)?;
            let l = load(&source, &text, opts)?;
            ind(&l, &mut sink)
        }
        Command::Dot { input } => {
            let (source, text) = resolve(input)?;
            let l = load(&source, &text, opts)?;
            match catalog(&l) {
                Ok(cat) => {
                    let dot = cat.ar_quiver_dot(&l.name);
                    match &opts.output {
                        Some(p) => std::fs::write(p, dot)?,
                        None => sink.out.write_all(dot.as_bytes())?,
                    }
                    Ok(Status::Ok)
                }
                Err(e) => {
                    writeln!(sink.out, "{}: {e}", l.name)?;
                    Ok(Status::of_error(&e))
                }
            }
        }
        Command::Check { kind, input } => {
            let (source, text) = resolve(input)?;
            let l = load(&source, &text, opts)?;
            check(&l, *kind, &mut sink)
        }
        Command::Suite { inputs } => {
            let texts = inputs.iter().map(|i| resolve(i)).collect::<Result<Vec<_>, _>>()?;
            suite(&texts, &mut sink)
        }
        Command::Corpus { dir } => {
            let dir = dir
                .clone()
                .or_else(|| std::env::var_os(corpus::CORPUS_DIR_VAR).map(PathBuf::from));
            let texts = corpus::load(dir.as_deref())?;
            if texts.is_empty() {
                return Err(AppError::Input("corpus directory has no .alg files".into()));
            }
            suite(&texts, &mut sink)
        }
    }
}

fn catalog(l: &Loaded) -> Result<IndCatalog, Error> {
    enumerate_indecomposables(&l.algebra, l.settings.catalog_cap, l.settings.resolution_cap)
}

fn info(l: &Loaded, sink: &mut Sink) -> Result<Status, AppError> {
    use agtilt::homology::{domdim, gldim, gorenstein_data, is_selfinjective};
    let alg = &l.algebra;
    let gl = gldim(alg, l.settings.resolution_cap);
    let dd = domdim(alg, l.settings.domdim_cap);
    let gor = gorenstein_data(alg, l.settings.resolution_cap);
    let (idr, pdd) = match &gor {
        Ok((a, b)) => (Ok(*a), Ok(*b)),
        Err(e) => (Err(e.clone()), Err(e.clone())),
    };
    let selfinj = is_selfinjective(alg);
    let status = [&gl, &dd, &idr]
        .iter()
        .map(|r| match r {
            Ok(d) if d.is_decided() => Status::Ok,
            Ok(_) => Status::Inconclusive,
            Err(e) => Status::of_error(e),
        })
        .max()
        .unwrap_or(Status::Ok);
    let rows = [
        ("algebra", l.name.clone()),
        ("prime", alg.field().p().to_string()),
        ("vertices", alg.vertex_count().to_string()),
        ("arrows", alg.arrow_count().to_string()),
        ("dimension", alg.dim().to_string()),
        ("gl.dim", show(&gl)),
        ("domdim", show(&dd)),
        ("id Λ", show(&idr)),
        ("pd DΛ", show(&pdd)),
        ("selfinjective", selfinj.to_string()),
    ];
    let mut s = String::new();
    for (k, v) in rows {
        s.push_str(&format!("{k:<14}{v}\n"));
    }
    sink.text(&s)?;
    sink.records(&record(json!({
        "record": "info",
        "source": l.source,
        "name": l.name,
        "prime": alg.field().p(),
        "vertices": alg.vertex_count(),
        "arrows": alg.arrow_count(),
        "dim": alg.dim(),
        "gldim": show(&gl),
        "domdim": show(&dd),
        "id_regular": show(&idr),
        "pd_dual": show(&pdd),
        "is_selfinjective": selfinj,
    })))?;
    Ok(status)
}

fn ind(l: &Loaded, sink: &mut Sink) -> Result<Status, AppError> {
    let cat = match catalog(l) {
        Ok(c) => c,
        Err(e) => {
            sink.text(&format!("{}: {e}\n", l.name))?;
            return Ok(Status::of_error(&e));
        }
    };
    let mut s = format!("{}: {} indecomposables\n", l.name, cat.len());
    s.push_str(&format!(
        "{:>4}  {:<16} {:>4} {:>4} {:>5} {:>5} {:>5} {:>5}\n",
        "#", "dims", "pd", "id", "proj", "inj", "τ", "τ⁻¹"
    ));
    let idx = |i: Option<usize>| i.map_or_else(|| "-".to_string(), |i| i.to_string());
    let mut json = String::new();
    for e in cat.entries() {
        let dims = e.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
        s.push_str(&format!(
            "{:>4}  {:<16} {:>4} {:>4} {:>5} {:>5} {:>5} {:>5}\n",
            e.index,
            dims,
            e.pd.to_string(),
            e.id.to_string(),
            if e.projective { "P" } else { "" },
            if e.injective { "I" } else { "" },
            idx(e.tau),
            idx(e.tau_inv)
        ));
        let mut v = serde_json::to_value(&e).expect("serializable");
        v["record"] = json!("indecomposable");
        json.push_str(&record(v));
    }
    sink.text(&s)?;
    sink.records(&json)?;
    Ok(Status::Ok)
}

fn check(l: &Loaded, kind: CheckKind, sink: &mut Sink) -> Result<Status, AppError> {
    let ctx = Context::new(&l.algebra, l.settings);
    type Answer = (Option<bool>, String, Status);
    let (label, result): (&str, Result<Answer, Error>) = match kind {
        CheckKind::OneAg => (
            "1ag",
            ctx.is_1ag().map(|b| {
                let ids = ctx.gorenstein.as_ref().map(|g| g.0.to_string()).unwrap_or_default();
                (Some(b), format!("id Λ {ids}, domdim {}", show(&ctx.domdim)), Status::Ok)
            }),
        ),
        CheckKind::Auslander => (
            "auslander",
            ctx.is_auslander().map(|b| {
                (Some(b), format!("gl.dim {}, domdim {}", show(&ctx.gldim), show(&ctx.domdim)), Status::Ok)
            }),
        ),
        CheckKind::Tilted => (
            "tilted",
            ctx.tilted_witness().map(|w| match w {
                Some(s) => (Some(true), format!("sincere witness {s:?}"), Status::Ok),
                None => (Some(false), format!("gl.dim {}, no sincere witness", show(&ctx.gldim)), Status::Ok),
            }),
        ),
        CheckKind::Main => (
            "main",
            main_theorem(&ctx).map(|m| match m {
                None => (None, "vacuous: not 1-AG".to_string(), Status::Ok),
                Some(m) => {
                    let status = if m.lhs == m.rhs { Status::Ok } else { Status::Failed };
                    (
                        Some(m.lhs == m.rhs),
                        format!(
                            "tilted {}, add L = Cogen T_C {}; L {:?}, Cogen T_C {:?}",
                            m.lhs, m.rhs, m.left_part, m.cogen_tc
                        ),
                        status,
                    )
                }
            }),
        ),
    };
    let (value, detail, status) = match result {
        Ok(r) => r,
        Err(e) => (None, e.to_string(), Status::of_error(&e)),
    };
    let shown = value.map_or_else(|| "-".to_string(), |b| b.to_string());
    sink.text(&format!("{} {label}: {shown} ({detail})\n", l.name))?;
    sink.records(&record(json!({
        "record": "check",
        "check": label,
        "source": l.source,
        "name": l.name,
        "value": value,
        "detail": detail,
        "status": status.label(),
    })))?;
    Ok(status)
}

fn suite(texts: &[(String, String)], sink: &mut Sink) -> Result<Status, AppError> {
    let opts = sink.opts;
    let loaded = texts
        .iter()
        .map(|(s, t)| load(s, t, opts))
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<(String, AlgebraVerdict)> = loaded
        .par_iter()
        .map(|l| (l.source.clone(), verdict_of(l)))
        .collect();
    let status = rows.iter().map(|(_, v)| worst(v)).max().unwrap_or(Status::Ok);
    let mut human = String::new();
    for (source, v) in &rows {
        human.push_str(&human_verdict(source, v));
        human.push('\n');
    }
    human.push_str(&summary_table(&rows));
    sink.text(&human)?;
    sink.records(&json_lines(&rows, status.label()))?;
    Ok(status)
}
