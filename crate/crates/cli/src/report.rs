//! Human tables and JSON-lines records.

use std::fmt::Write as _;

use agtilt::theorems::{AlgebraVerdict, CheckOutcome};
use serde::Serialize;

pub fn outcome_label(o: CheckOutcome) -> &'static str {
    match o {
        CheckOutcome::Pass => "pass",
        CheckOutcome::Fail => "FAIL",
        CheckOutcome::Vacuous => "vacuous",
        CheckOutcome::Inconclusive => "inconclusive",
    }
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "?".to_string(), |x| x.to_string())
}

fn set(v: &Option<Vec<usize>>) -> String {
    v.as_ref().map_or_else(|| "?".to_string(), |s| format!("{s:?}"))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub inconclusive: usize,
}

impl Tally {
    pub fn of(v: &AlgebraVerdict) -> Tally {
        let mut t = Tally::default();
        for c in &v.checks {
            t.add(c.outcome);
        }
        t
    }

    fn add(&mut self, o: CheckOutcome) {
        match o {
            CheckOutcome::Pass => self.pass += 1,
            CheckOutcome::Fail => self.fail += 1,
            CheckOutcome::Vacuous => self.vacuous += 1,
            CheckOutcome::Inconclusive => self.inconclusive += 1,
        }
    }

    fn merge(&mut self, other: Tally) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.vacuous += other.vacuous;
        self.inconclusive += other.inconclusive;
    }
}

/// Per-algebra block: invariants, decisions, then one line per check.
pub fn human_verdict(source: &str, v: &AlgebraVerdict) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "== {} ({source}, p = {}, dim {}, {} ms)", v.name, v.prime, v.dim, v.elapsed_ms);
    let _ = writeln!(
        s,
        "   gl.dim {}  domdim {}  id Λ {}  pd DΛ {}  indecomposables {}",
        opt(&v.gldim),
        opt(&v.domdim),
        opt(&v.id_regular),
        opt(&v.pd_dual),
        opt(&v.catalog_size)
    );
    let _ = writeln!(
        s,
        "   selfinjective {}  Gorenstein {}  1-AG {}  Auslander {}  tilted {}",
        v.is_selfinjective,
        opt(&v.is_gorenstein),
        opt(&v.is_1ag),
        opt(&v.is_auslander),
        opt(&v.is_tilted)
    );
    let _ = writeln!(
        s,
        "   L = {}  Cogen T_C = {}  P¹ = {}",
        set(&v.left_part),
        set(&v.cogen_tc),
        set(&v.p1_class)
    );
    let width = v.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &v.checks {
        let _ = writeln!(s, "   {:<12} {:<width$}  {}", outcome_label(c.outcome), c.name, c.detail);
    }
    s
}

/// One row per algebra and a totals line.
pub fn summary_table(rows: &[(String, AlgebraVerdict)]) -> String {
    let mut s = String::new();
    let width = rows.iter().map(|(n, _)| n.len()).max().unwrap_or(7).max(7);
    let _ = writeln!(
        s,
        "{:<width$}  {:>4} {:>4} {:>6} {:>6} {:>5} {:>5} {:>6} {:>6}  {:>4} {:>4} {:>4} {:>4} {:>7}",
        "algebra", "dim", "ind", "gldim", "domdim", "1-AG", "Ausl", "tilted", "main", "pass", "fail", "vac", "inc", "ms"
    );
    let mut total = Tally::default();
    let yn = |b: &Option<bool>| match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "?",
    };
    for (name, v) in rows {
        let t = Tally::of(v);
        total.merge(t);
        let main = match v.main_theorem_consistent {
            Some(true) => "ok",
            Some(false) => "BROKEN",
            None => "n/a",
        };
        let _ = writeln!(
            s,
            "{:<width$}  {:>4} {:>4} {:>6} {:>6} {:>5} {:>5} {:>6} {:>6}  {:>4} {:>4} {:>4} {:>4} {:>7}",
            name,
            v.dim,
            opt(&v.catalog_size),
            opt(&v.gldim),
            opt(&v.domdim),
            yn(&v.is_1ag),
            yn(&v.is_auslander),
            yn(&v.is_tilted),
            main,
            t.pass,
            t.fail,
            t.vacuous,
            t.inconclusive,
            v.elapsed_ms
        );
    }
    let _ = writeln!(
        s,
        "{} algebras: {} pass, {} fail, {} vacuous, {} inconclusive",
        rows.len(),
        total.pass,
        total.fail,
        total.vacuous,
        total.inconclusive
    );
    s
}

#[derive(Serialize)]
struct AlgebraRecord<'a> {
    record: &'static str,
    source: &'a str,
    #[serde(flatten)]
    verdict: &'a AlgebraVerdict,
}

#[derive(Serialize)]
struct SummaryRecord {
    record: &'static str,
    algebras: usize,
    #[serde(flatten)]
    tally: Tally,
    status: &'static str,
}

/// One `algebra` record per verdict and a closing `summary` record.
/// Timings are left out so that reruns are byte-identical.
pub fn json_lines(rows: &[(String, AlgebraVerdict)], status: &'static str) -> String {
    let mut s = String::new();
    let mut total = Tally::default();
    for (source, v) in rows {
        total.merge(Tally::of(v));
        let rec = AlgebraRecord {
            record: "algebra",
            source,
            verdict: v,
        };
        s.push_str(&serde_json::to_string(&rec).expect("serializable"));
        s.push('\n');
    }
    let summary = SummaryRecord {
        record: "summary",
        algebras: rows.len(),
        tally: total,
        status,
    };
    s.push_str(&serde_json::to_string(&summary).expect("serializable"));
    s.push('\n');
    s
}
