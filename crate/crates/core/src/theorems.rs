//! Decision procedures for 1-Auslander–Gorenstein, Auslander and tilted
//! algebras, the left part, and the cross-validated theorem checks.

use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::ar::{enumerate_indecomposables, stable_hom_dim_injective, tau, tau_inv, IndCatalog, DEFAULT_CATALOG_CAP};
use crate::hom::{ext1, hom_dim, in_cogen};
use crate::homology::{
    cosyzygy, domdim, gldim, gorenstein_data, id, is_selfinjective, pd, syzygy, HomDim,
    DEFAULT_DOMDIM_CAP, DEFAULT_RESOLUTION_CAP,
};
use crate::module::Module;
use crate::tilting::{
    basic_sum, catalog_indices, check_tilting_with_cap, construct_cc, construct_tc,
    ext_projectives_of_torsion_class, in_c_lambda, torsion_pair_of_tilting, TiltingReport,
};
use crate::Error;

pub const TILTED_SEARCH_LIMIT: usize = 25;
pub const DEFAULT_SES_SAMPLES: usize = 16;
const SALT_SES: u64 = 0x5e5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Settings {
    pub resolution_cap: usize,
    pub domdim_cap: usize,
    pub catalog_cap: usize,
    pub ses_samples: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            resolution_cap: DEFAULT_RESOLUTION_CAP,
            domdim_cap: DEFAULT_DOMDIM_CAP,
            catalog_cap: DEFAULT_CATALOG_CAP,
            ses_samples: DEFAULT_SES_SAMPLES,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail,
    Vacuous,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub outcome: CheckOutcome,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, outcome: CheckOutcome, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            outcome,
            detail: detail.into(),
        }
    }

    fn from_error(name: &'static str, e: &Error) -> Self {
        let outcome = match e {
            Error::CrossCheckMismatch(_) | Error::ValidationFailed(_) => CheckOutcome::Fail,
            _ => CheckOutcome::Inconclusive,
        };
        CheckResult::new(name, outcome, e.to_string())
    }

    fn verdict(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        let outcome = if ok { CheckOutcome::Pass } else { CheckOutcome::Fail };
        CheckResult::new(name, outcome, detail)
    }

    fn vacuous(name: &'static str, why: impl Into<String>) -> Self {
        CheckResult::new(name, CheckOutcome::Vacuous, why)
    }
}

/// Names of all suite checks, in report order.
pub const CHECK_NAMES: [&str; 24] = [
    "gldim_formula",
    "one_ag_characterization",
    "auslander_characterization",
    "tc_tilting_iff_domdim",
    "tc_cc_isomorphic",
    "catalog_closure",
    "ar_formula",
    "adjunctions",
    "tau_inverse",
    "ext_vanishing_on_c_lambda",
    "torsion_pair_tc",
    "splitting_iff_pd_torsionfree",
    "left_part",
    "left_part_predecessor_closed",
    "p1_in_cogen_tc",
    "p1_equals_cogen_tc_iff_auslander",
    "main_theorem",
    "main_theorem_forces_auslander",
    "auslander_tilted_splits",
    "tilted_auslander_criterion",
    "tilted_pd_id_criteria",
    "one_ag_symmetry",
    "ses_pd_bound",
    "ses_samples",
];

/// Everything the checks share, computed once per algebra.
pub struct Context {
    pub alg: Algebra,
    pub settings: Settings,
    pub gldim: Result<HomDim, Error>,
    pub domdim: Result<HomDim, Error>,
    pub gorenstein: Result<(HomDim, HomDim), Error>,
    pub selfinjective: bool,
    pub tc: Result<Vec<Module>, Error>,
    pub cc: Result<Vec<Module>, Error>,
    pub tc_report: Result<TiltingReport, Error>,
    pub cc_report: Result<TiltingReport, Error>,
    pub catalog: Result<IndCatalog, Error>,
}

fn decided(value: Option<bool>, what: &str) -> Result<bool, Error> {
    value.ok_or_else(|| Error::Inconclusive(format!("{what} hit its cap")))
}

impl Context {
    pub fn new(alg: &Algebra, settings: Settings) -> Context {
        let tc = construct_tc(alg);
        let cc = construct_cc(alg);
        let tc_report = tc
            .clone()
            .and_then(|t| check_tilting_with_cap(alg, &t, settings.resolution_cap));
        let cc_report = cc
            .clone()
            .and_then(|c| check_tilting_with_cap(alg, &c, settings.resolution_cap));
        Context {
            alg: alg.clone(),
            settings,
            gldim: gldim(alg, settings.resolution_cap),
            domdim: domdim(alg, settings.domdim_cap),
            gorenstein: gorenstein_data(alg, settings.resolution_cap),
            selfinjective: is_selfinjective(alg),
            tc,
            cc,
            tc_report,
            cc_report,
            catalog: enumerate_indecomposables(alg, settings.catalog_cap, settings.resolution_cap),
        }
    }

    fn catalog(&self) -> Result<&IndCatalog, Error> {
        self.catalog.as_ref().map_err(Clone::clone)
    }

    fn tc(&self) -> Result<&[Module], Error> {
        self.tc.as_deref().map_err(Clone::clone)
    }

    fn domdim_at_least_two(&self) -> Result<bool, Error> {
        decided(self.domdim.clone()?.at_least(2), "domdim")
    }

    fn gldim_at_most(&self, k: usize) -> Result<bool, Error> {
        decided(self.gldim.clone()?.at_most(k), "gl.dim")
    }

    /// `T_C` is tilting, cotilting, and lies in `C_Λ`.
    pub fn tc_tilting_cotilting_in_c(&self) -> Result<bool, Error> {
        let report = self.tc_report.clone()?;
        Ok(report.is_tilting
            && report.is_cotilting
            && self.tc()?.iter().all(|m| in_c_lambda(&self.alg, m)))
    }

    /// `id Λ_Λ ≤ 2 ≤ domdim Λ`, cross-checked against the existence of a
    /// tilting-cotilting module in `C_Λ`.
    pub fn is_1ag(&self) -> Result<bool, Error> {
        let (id_reg, _) = self.gorenstein.clone()?;
        let by_definition = decided(id_reg.at_most(2), "id Λ")? && self.domdim_at_least_two()?;
        let by_tilting = self.tc_tilting_cotilting_in_c()?;
        if by_definition != by_tilting {
            return Err(Error::CrossCheckMismatch(format!(
                "1-AG is {by_definition} by definition but {by_tilting} via T_C"
            )));
        }
        Ok(by_definition)
    }

    /// `gl.dim ≤ 2 ≤ domdim`, cross-checked against the tilting-cotilting
    /// criterion when gl.dim is finite.
    pub fn is_auslander(&self) -> Result<bool, Error> {
        let by_definition = self.gldim_at_most(2)? && self.domdim_at_least_two()?;
        if self.gldim.clone()?.finite().is_some() {
            let by_tilting = self.tc_tilting_cotilting_in_c()?;
            if by_definition != by_tilting {
                return Err(Error::CrossCheckMismatch(format!(
                    "Auslander is {by_definition} by definition but {by_tilting} via T_C"
                )));
            }
        }
        Ok(by_definition)
    }

    pub fn is_gorenstein(&self) -> Result<bool, Error> {
        let (a, b) = self.gorenstein.clone()?;
        if !a.is_decided() || !b.is_decided() {
            return Err(Error::Inconclusive("Gorenstein dimensions hit their cap".into()));
        }
        Ok(a.finite().is_some() && b.finite().is_some())
    }

    /// Tiltedness oracle; `Some(witness)` when tilted.
    pub fn tilted_witness(&self) -> Result<Option<Vec<usize>>, Error> {
        is_tilted_oracle(&self.alg, self.catalog()?, self.gldim.clone()?)
    }

    pub fn is_tilted(&self) -> Result<bool, Error> {
        Ok(self.tilted_witness()?.is_some())
    }

    pub fn tc_indices(&self) -> Result<Vec<usize>, Error> {
        catalog_indices(&self.alg, self.catalog()?, self.tc()?)
    }

    pub fn cogen_tc(&self) -> Result<Vec<usize>, Error> {
        Ok(cogen_tc_set(&self.alg, self.catalog()?, self.tc()?))
    }
}

/// `Y ∈ L_Λ` iff every predecessor has `pd ≤ 1`; cross-checked against
/// `Hom(X, Y) = 0` for all `X` with `pd X ≥ 2`.
pub fn left_part(catalog: &IndCatalog) -> Result<Vec<usize>, Error> {
    let small: Vec<bool> = catalog
        .pd_table
        .iter()
        .map(|d| decided(d.at_most(1), "pd"))
        .collect::<Result<_, _>>()?;
    let n = catalog.len();
    let by_predecessors: Vec<usize> = (0..n)
        .filter(|&y| catalog.predecessors(y).iter().all(|&x| small[x]))
        .collect();
    let by_hom: Vec<usize> = (0..n)
        .filter(|&y| (0..n).all(|x| small[x] || catalog.hom_dims[x][y] == 0))
        .collect();
    if by_predecessors != by_hom {
        return Err(Error::CrossCheckMismatch(format!(
            "left part {by_predecessors:?} from predecessors but {by_hom:?} from Hom-vanishing"
        )));
    }
    Ok(by_predecessors)
}

pub fn cogen_tc_set(alg: &Algebra, catalog: &IndCatalog, tc: &[Module]) -> Vec<usize> {
    let t = basic_sum(alg, tc);
    (0..catalog.len())
        .filter(|&i| in_cogen(alg, &catalog.modules[i], &t))
        .collect()
}

pub fn p1_set(catalog: &IndCatalog) -> Result<Vec<usize>, Error> {
    let mut out = Vec::new();
    for (i, d) in catalog.pd_table.iter().enumerate() {
        if decided(d.at_most(1), "pd")? {
            out.push(i);
        }
    }
    Ok(out)
}

fn support_mask(m: &Module) -> u64 {
    m.dims()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .fold(0, |acc, (v, _)| acc | (1u64 << v))
}

/// Tilted iff `gl.dim ≤ 2` and some sincere `⊕S` (`S` a set of catalog
/// entries) has, for every `X`, `Hom(S, τX) = 0` or `Hom(X, S) = 0`.
/// Returns the first such `S` found by an exact depth-first search.
pub fn is_tilted_oracle(alg: &Algebra, catalog: &IndCatalog, gl: HomDim) -> Result<Option<Vec<usize>>, Error> {
    if !decided(gl.at_most(2), "gl.dim")? {
        return Ok(None);
    }
    let n = catalog.len();
    if n > TILTED_SEARCH_LIMIT {
        return Err(Error::SearchInfeasible(format!(
            "{n} indecomposables exceed the search bound {TILTED_SEARCH_LIMIT}"
        )));
    }
    // conflict masks over X: a[s] has bit X when Hom(s, τX) ≠ 0, b[s] when Hom(X, s) ≠ 0
    let mut a = vec![0u64; n];
    let mut b = vec![0u64; n];
    for s in 0..n {
        for x in 0..n {
            if let Some(t) = catalog.tau_index[x] {
                if catalog.hom_dims[s][t] != 0 {
                    a[s] |= 1 << x;
                }
            }
            if catalog.hom_dims[x][s] != 0 {
                b[s] |= 1 << x;
            }
        }
    }
    let support: Vec<u64> = catalog.modules.iter().map(support_mask).collect();
    let full: u64 = if alg.vertex_count() == 64 {
        u64::MAX
    } else {
        (1u64 << alg.vertex_count()) - 1
    };
    // suffix unions of support, for pruning
    let mut rest = vec![0u64; n + 1];
    for s in (0..n).rev() {
        rest[s] = rest[s + 1] | support[s];
    }
    struct Search<'a> {
        a: &'a [u64],
        b: &'a [u64],
        support: &'a [u64],
        rest: &'a [u64],
        full: u64,
        chosen: Vec<usize>,
    }
    impl Search<'_> {
        fn go(&mut self, next: usize, hit_a: u64, hit_b: u64, sup: u64) -> bool {
            if sup == self.full {
                return true;
            }
            if next == self.a.len() || (sup | self.rest[next]) != self.full {
                return false;
            }
            let (na, nb) = (hit_a | self.a[next], hit_b | self.b[next]);
            if na & nb == 0 {
                self.chosen.push(next);
                if self.go(next + 1, na, nb, sup | self.support[next]) {
                    return true;
                }
                self.chosen.pop();
            }
            self.go(next + 1, hit_a, hit_b, sup)
        }
    }
    let mut search = Search {
        a: &a,
        b: &b,
        support: &support,
        rest: &rest,
        full,
        chosen: Vec::new(),
    };
    if !search.go(0, 0, 0, 0) {
        return Ok(None);
    }
    if !quiver_is_acyclic(alg) {
        return Err(Error::CrossCheckMismatch(format!(
            "sincere witness {:?} found but the quiver has an oriented cycle",
            search.chosen
        )));
    }
    Ok(Some(search.chosen))
}

/// Tilted algebras are triangular.
pub fn quiver_is_acyclic(alg: &Algebra) -> bool {
    let n = alg.vertex_count();
    let arrows = alg.quiver().arrows();
    let mut indegree = vec![0usize; n];
    for a in arrows {
        indegree[a.target] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for a in arrows.iter().filter(|a| a.source == v) {
            indegree[a.target] -= 1;
            if indegree[a.target] == 0 {
                ready.push(a.target);
            }
        }
    }
    seen == n
}

/// `pd N ≤ max(pd M, 1 + pd L)` for `0 -> L -> M -> N -> 0`, with equality
/// when `pd M ≠ pd L`. `None` when some value is undecided.
pub fn ses_pd_bound_holds(l: HomDim, m: HomDim, n: HomDim) -> Option<bool> {
    if !(l.is_decided() && m.is_decided() && n.is_decided()) {
        return None;
    }
    let bound = m.max(l.succ());
    let le = match (n, bound) {
        (_, HomDim::Infinite) => true,
        (HomDim::Infinite, _) => false,
        (HomDim::Finite(x), HomDim::Finite(y)) => x <= y,
        _ => unreachable!(),
    };
    Some(le && (m == l || n == bound))
}

#[derive(Clone, Debug, Serialize)]
pub struct SesSample {
    pub left: usize,
    pub right: usize,
    pub pds: [HomDim; 3],
    pub holds: bool,
}

/// Random non-split extensions between catalog entries, with the SES bound
/// evaluated on each.
pub fn sample_ses_bound(ctx: &Context, samples: usize) -> Result<Vec<SesSample>, Error> {
    let catalog = ctx.catalog()?;
    let alg = &ctx.alg;
    let pairs: Vec<(usize, usize)> = (0..catalog.len())
        .flat_map(|r| (0..catalog.len()).map(move |l| (r, l)))
        .filter(|&(r, l)| catalog.ext_dims[r][l] != 0)
        .collect();
    if pairs.is_empty() {
        return Ok(Vec::new());
    }
    let mut rng = crate::rng(alg, SALT_SES);
    let p = alg.field().p();
    let cap = ctx.settings.resolution_cap;
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let (r, l) = pairs[rng.gen_range(0..pairs.len())];
        let (right, left) = (&catalog.modules[r], &catalog.modules[l]);
        let ext = ext1(alg, right, left)?;
        let mut coeffs: Vec<u32> = (0..ext.dim()).map(|_| rng.gen_range(0..p)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            coeffs[0] = 1;
        }
        let ses = ext.extension(alg, right, left, &coeffs);
        let pds = [
            catalog.pd_table[l],
            pd(alg, &ses.middle, cap)?,
            catalog.pd_table[r],
        ];
        let holds = ses_pd_bound_holds(pds[0], pds[1], pds[2])
            .ok_or_else(|| Error::Inconclusive("pd hit its cap".into()))?;
        out.push(SesSample {
            left: l,
            right: r,
            pds,
            holds,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraVerdict {
    pub name: String,
    pub prime: u32,
    pub vertices: usize,
    pub dim: usize,
    pub gldim: Option<HomDim>,
    pub domdim: Option<HomDim>,
    pub id_regular: Option<HomDim>,
    pub pd_dual: Option<HomDim>,
    pub is_selfinjective: bool,
    pub is_gorenstein: Option<bool>,
    #[serde(rename = "is_1ag")]
    pub is_1ag: Option<bool>,
    pub is_auslander: Option<bool>,
    pub is_tilted: Option<bool>,
    pub catalog_size: Option<usize>,
    pub tc_summands: Vec<Vec<usize>>,
    pub left_part: Option<Vec<usize>>,
    pub cogen_tc: Option<Vec<usize>>,
    pub p1_class: Option<Vec<usize>>,
    pub tilted_witness: Option<Vec<usize>>,
    pub main_theorem_lhs: Option<bool>,
    pub main_theorem_rhs: Option<bool>,
    pub main_theorem_consistent: Option<bool>,
    pub checks: Vec<CheckResult>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl AlgebraVerdict {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn worst(&self) -> CheckOutcome {
        if self.checks.iter().any(|c| c.outcome == CheckOutcome::Fail) {
            CheckOutcome::Fail
        } else if self.checks.iter().any(|c| c.outcome == CheckOutcome::Inconclusive) {
            CheckOutcome::Inconclusive
        } else {
            CheckOutcome::Pass
        }
    }
}

fn run(name: &'static str, f: impl FnOnce() -> Result<CheckResult, Error>) -> CheckResult {
    f().unwrap_or_else(|e| CheckResult::from_error(name, &e))
}

fn fmt_set(s: &[usize]) -> String {
    format!("{s:?}")
}

/// Every suite check on one algebra.
pub fn run_checks(ctx: &Context) -> Vec<CheckResult> {
    let alg = &ctx.alg;
    let mut out = Vec::with_capacity(CHECK_NAMES.len());

    out.push(run("gldim_formula", || {
        let g = ctx.gldim.clone()?;
        Ok(CheckResult::verdict("gldim_formula", true, format!("gl.dim {g} from radicals agrees with simples")))
    }));

    out.push(run("one_ag_characterization", || {
        let v = ctx.is_1ag()?;
        Ok(CheckResult::verdict("one_ag_characterization", true, format!("1-AG {v} both ways")))
    }));

    out.push(run("auslander_characterization", || {
        let v = ctx.is_auslander()?;
        Ok(CheckResult::verdict("auslander_characterization", true, format!("Auslander {v}")))
    }));

    out.push(run("tc_tilting_iff_domdim", || {
        let d = ctx.domdim_at_least_two()?;
        let t = ctx.tc_report.clone()?;
        let c = ctx.cc_report.clone()?;
        let tc_in_c = ctx.tc()?.iter().all(|m| in_c_lambda(alg, m));
        let cc_in_c = ctx.cc.clone()?.iter().all(|m| in_c_lambda(alg, m));
        let ok = d == (t.is_tilting && tc_in_c) && d == (c.is_cotilting && cc_in_c);
        Ok(CheckResult::verdict(
            "tc_tilting_iff_domdim",
            ok,
            format!(
                "domdim≥2 {d}, T_C tilting {} in C {tc_in_c}, C_C cotilting {} in C {cc_in_c}",
                t.is_tilting, c.is_cotilting
            ),
        ))
    }));

    out.push(run("tc_cc_isomorphic", || {
        if !ctx.is_1ag()? {
            return Ok(CheckResult::vacuous("tc_cc_isomorphic", "not 1-AG"));
        }
        let (tc, cc) = (ctx.tc()?, ctx.cc.clone()?);
        let same = tc.len() == cc.len()
            && tc.iter().all(|t| cc.iter().any(|c| crate::decompose::is_isomorphic_indecomposable(alg, t, c)));
        Ok(CheckResult::verdict("tc_cc_isomorphic", same, format!("{} and {} summands", tc.len(), cc.len())))
    }));

    out.push(run("catalog_closure", || {
        let cat = ctx.catalog()?;
        cat.check_closure()?;
        cat.validate_ar_sequences(alg)?;
        let connected = cat.is_connected();
        Ok(CheckResult::verdict(
            "catalog_closure",
            connected,
            format!("{} indecomposables, AR sequences validated, connected {connected}", cat.len()),
        ))
    }));

    out.push(run("ar_formula", || {
        let cat = ctx.catalog()?;
        for (i, m) in cat.modules.iter().enumerate() {
            let tm = tau(alg, m);
            for (j, n) in cat.modules.iter().enumerate() {
                let stable = stable_hom_dim_injective(alg, n, &tm);
                if stable != cat.ext_dims[i][j] {
                    return Ok(CheckResult::verdict(
                        "ar_formula",
                        false,
                        format!("Ext¹(X{i}, X{j}) = {} but stable Hom = {stable}", cat.ext_dims[i][j]),
                    ));
                }
            }
        }
        Ok(CheckResult::verdict("ar_formula", true, format!("{} pairs", cat.len() * cat.len())))
    }));

    out.push(run("adjunctions", || {
        let cat = ctx.catalog()?;
        for (i, m) in cat.modules.iter().enumerate() {
            for v in 0..alg.vertex_count() {
                let p = hom_dim(alg, alg.projective(v), m);
                let q = hom_dim(alg, m, &alg.injective(v));
                if p != m.dim_at(v) || q != m.dim_at(v) {
                    return Ok(CheckResult::verdict(
                        "adjunctions",
                        false,
                        format!("X{i} at vertex {}: Hom(P,X) {p}, Hom(X,I) {q}, dim {}", v + 1, m.dim_at(v)),
                    ));
                }
            }
        }
        Ok(CheckResult::verdict("adjunctions", true, format!("{} pairs", cat.len() * alg.vertex_count())))
    }));

    out.push(run("tau_inverse", || {
        let cat = ctx.catalog()?;
        for (i, m) in cat.modules.iter().enumerate() {
            if cat.projective[i] {
                continue;
            }
            let back = tau_inv(alg, &tau(alg, m));
            if !crate::decompose::is_isomorphic_indecomposable(alg, m, &back) {
                return Ok(CheckResult::verdict("tau_inverse", false, format!("τ⁻¹τX{i} ≇ X{i}")));
            }
        }
        Ok(CheckResult::verdict("tau_inverse", true, "τ⁻¹τ is the identity on non-projectives"))
    }));

    out.push(run("ext_vanishing_on_c_lambda", || {
        let cat = ctx.catalog()?;
        let in_c: Vec<usize> = (0..cat.len()).filter(|&i| in_c_lambda(alg, &cat.modules[i])).collect();
        let pd_one: Vec<usize> = (0..cat.len())
            .filter(|&i| cat.pd_table[i] == HomDim::Finite(1))
            .collect();
        if in_c.is_empty() || pd_one.is_empty() {
            return Ok(CheckResult::vacuous("ext_vanishing_on_c_lambda", "no pairs"));
        }
        for &x in &in_c {
            for &y in &pd_one {
                if cat.ext_dims[y][x] != 0 {
                    return Ok(CheckResult::verdict(
                        "ext_vanishing_on_c_lambda",
                        false,
                        format!("Ext¹(X{y}, X{x}) ≠ 0 with X{x} in C_Λ and pd X{y} = 1"),
                    ));
                }
            }
        }
        Ok(CheckResult::verdict(
            "ext_vanishing_on_c_lambda",
            true,
            format!("{} pairs", in_c.len() * pd_one.len()),
        ))
    }));

    out.push(run("torsion_pair_tc", || {
        if !ctx.tc_report.clone()?.is_tilting {
            return Ok(CheckResult::vacuous("torsion_pair_tc", "T_C is not tilting"));
        }
        let cat = ctx.catalog()?;
        let pair = torsion_pair_of_tilting(alg, cat, &ctx.tc_indices()?)?;
        let ext_proj = ext_projectives_of_torsion_class(cat, &pair)?;
        Ok(CheckResult::verdict(
            "torsion_pair_tc",
            true,
            format!(
                "T {} F {} Ext-projectives {}",
                fmt_set(&pair.torsion),
                fmt_set(&pair.torsionfree),
                fmt_set(&ext_proj)
            ),
        ))
    }));

    out.push(run("splitting_iff_pd_torsionfree", || {
        if !ctx.domdim_at_least_two()? {
            return Ok(CheckResult::vacuous("splitting_iff_pd_torsionfree", "domdim < 2"));
        }
        let cat = ctx.catalog()?;
        let pair = torsion_pair_of_tilting(alg, cat, &ctx.tc_indices()?)?;
        let mut small = true;
        for &f in &pair.torsionfree {
            small &= decided(cat.pd_table[f].at_most(1), "pd")?;
        }
        Ok(CheckResult::verdict(
            "splitting_iff_pd_torsionfree",
            pair.splitting == small,
            format!("splitting {}, pd ≤ 1 on F {small}", pair.splitting),
        ))
    }));

    out.push(run("left_part", || {
        let l = left_part(ctx.catalog()?)?;
        Ok(CheckResult::verdict("left_part", true, format!("L = {}", fmt_set(&l))))
    }));

    out.push(run("left_part_predecessor_closed", || {
        let cat = ctx.catalog()?;
        let l = left_part(cat)?;
        let closed = l
            .iter()
            .all(|&y| cat.predecessors(y).iter().all(|x| l.binary_search(x).is_ok()));
        let in_p1 = p1_set(cat)?;
        let contained = l.iter().all(|y| in_p1.binary_search(y).is_ok());
        Ok(CheckResult::verdict(
            "left_part_predecessor_closed",
            closed && contained,
            format!("closed {closed}, inside P¹ {contained}"),
        ))
    }));

    out.push(run("p1_in_cogen_tc", || {
        if !ctx.is_1ag()? {
            return Ok(CheckResult::vacuous("p1_in_cogen_tc", "not 1-AG"));
        }
        let (p1, cg) = (p1_set(ctx.catalog()?)?, ctx.cogen_tc()?);
        let ok = p1.iter().all(|i| cg.binary_search(i).is_ok());
        Ok(CheckResult::verdict(
            "p1_in_cogen_tc",
            ok,
            format!("P¹ {} Cogen T_C {}", fmt_set(&p1), fmt_set(&cg)),
        ))
    }));

    out.push(run("p1_equals_cogen_tc_iff_auslander", || {
        if !ctx.is_1ag()? {
            return Ok(CheckResult::vacuous("p1_equals_cogen_tc_iff_auslander", "not 1-AG"));
        }
        let equal = p1_set(ctx.catalog()?)? == ctx.cogen_tc()?;
        let a = ctx.is_auslander()?;
        Ok(CheckResult::verdict(
            "p1_equals_cogen_tc_iff_auslander",
            equal == a,
            format!("P¹ = Cogen T_C {equal}, Auslander {a}"),
        ))
    }));

    let main = main_theorem(ctx);
    out.push(match &main {
        Ok(None) => CheckResult::vacuous("main_theorem", "not 1-AG"),
        Ok(Some(m)) => CheckResult::verdict(
            "main_theorem",
            m.lhs == m.rhs,
            format!(
                "tilted {}, add L = Cogen T_C {} (L {}, Cogen T_C {})",
                m.lhs,
                m.rhs,
                fmt_set(&m.left_part),
                fmt_set(&m.cogen_tc)
            ),
        ),
        Err(e) => CheckResult::from_error("main_theorem", e),
    });

    out.push(run("main_theorem_forces_auslander", || match &main {
        Ok(Some(m)) if m.rhs => {
            let a = ctx.is_auslander()?;
            Ok(CheckResult::verdict("main_theorem_forces_auslander", a, format!("Auslander {a}")))
        }
        Ok(_) => Ok(CheckResult::vacuous("main_theorem_forces_auslander", "hypothesis not met")),
        Err(e) => Err(e.clone()),
    }));

    out.push(run("auslander_tilted_splits", || {
        if !(ctx.is_auslander()? && ctx.is_tilted()?) {
            return Ok(CheckResult::vacuous("auslander_tilted_splits", "not Auslander and tilted"));
        }
        let pair = torsion_pair_of_tilting(alg, ctx.catalog()?, &ctx.tc_indices()?)?;
        Ok(CheckResult::verdict(
            "auslander_tilted_splits",
            pair.splitting,
            format!("splitting {}", pair.splitting),
        ))
    }));

    out.push(run("tilted_auslander_criterion", || {
        if !(ctx.is_auslander()? && ctx.gldim.clone()? == HomDim::Finite(2)) {
            return Ok(CheckResult::vacuous("tilted_auslander_criterion", "not Auslander of gl.dim 2"));
        }
        let v = tau(alg, &syzygy(alg, &alg.dual_regular_module()));
        let small = decided(pd(alg, &v, ctx.settings.resolution_cap)?.at_most(1), "pd")?;
        let tilted = ctx.is_tilted()?;
        Ok(CheckResult::verdict(
            "tilted_auslander_criterion",
            small == tilted,
            format!("pd τΩDΛ ≤ 1 {small}, tilted {tilted}"),
        ))
    }));

    out.push(run("tilted_pd_id_criteria", || {
        if !(ctx.is_tilted()? && ctx.gldim.clone()? == HomDim::Finite(2)) {
            return Ok(CheckResult::vacuous("tilted_pd_id_criteria", "not tilted of gl.dim 2"));
        }
        tilted_pd_id(ctx)
    }));

    out.push(run("one_ag_symmetry", || {
        let here = ctx.is_1ag()?;
        let op = Context::new(&alg.opposite(), ctx.settings);
        let there = op.is_1ag()?;
        Ok(CheckResult::verdict(
            "one_ag_symmetry",
            here == there,
            format!("1-AG {here}, opposite {there}"),
        ))
    }));

    let samples = sample_ses_bound(ctx, ctx.settings.ses_samples);
    out.push(match &samples {
        Ok(s) if s.is_empty() => CheckResult::vacuous("ses_pd_bound", "no non-split extensions"),
        Ok(s) => match s.iter().find(|x| !x.holds) {
            Some(bad) => CheckResult::verdict(
                "ses_pd_bound",
                false,
                format!("0 -> X{} -> E -> X{} -> 0 with pds {:?}", bad.left, bad.right, bad.pds),
            ),
            None => CheckResult::verdict("ses_pd_bound", true, format!("{} extensions", s.len())),
        },
        Err(e) => CheckResult::from_error("ses_pd_bound", e),
    });
    out.push(match &samples {
        Ok(s) => CheckResult::new(
            "ses_samples",
            if s.is_empty() { CheckOutcome::Vacuous } else { CheckOutcome::Pass },
            format!("{}", s.len()),
        ),
        Err(e) => CheckResult::from_error("ses_samples", e),
    });
    debug_assert_eq!(out.len(), CHECK_NAMES.len());
    out
}

/// Both sides of the tilted criterion for 1-AG algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MainTheorem {
    /// Tilted per the oracle.
    pub lhs: bool,
    /// `add L = Cogen T_C`.
    pub rhs: bool,
    pub left_part: Vec<usize>,
    pub cogen_tc: Vec<usize>,
}

/// `None` when the algebra is not 1-AG.
pub fn main_theorem(ctx: &Context) -> Result<Option<MainTheorem>, Error> {
    if !ctx.is_1ag()? {
        return Ok(None);
    }
    let lhs = ctx.is_tilted()?;
    let left_part = left_part(ctx.catalog()?)?;
    let cogen_tc = ctx.cogen_tc()?;
    Ok(Some(MainTheorem {
        lhs,
        rhs: left_part == cogen_tc,
        left_part,
        cogen_tc,
    }))
}

fn tilted_pd_id(ctx: &Context) -> Result<CheckResult, Error> {
    const NAME: &str = "tilted_pd_id_criteria";
    let alg = &ctx.alg;
    let cat = ctx.catalog()?;
    let cap = ctx.settings.resolution_cap;
    let u = tau_inv(alg, &cosyzygy(alg, &alg.regular_module()));
    let v = tau(alg, &syzygy(alg, &alg.dual_regular_module()));
    for (i, m) in cat.modules.iter().enumerate() {
        let pd_small = decided(cat.pd_table[i].at_most(1), "pd")?;
        let id_small = decided(cat.id_table[i].at_most(1), "id")?;
        if pd_small != (hom_dim(alg, &u, m) == 0) {
            return Ok(CheckResult::verdict(NAME, false, format!("pd criterion fails at X{i}")));
        }
        if id_small != (hom_dim(alg, m, &v) == 0) {
            return Ok(CheckResult::verdict(NAME, false, format!("id criterion fails at X{i}")));
        }
        if !(pd_small || id_small) {
            return Ok(CheckResult::verdict(NAME, false, format!("X{i} has pd and id above 1")));
        }
    }
    for x in cat.summand_indices(alg, &u)? {
        if !decided(id(alg, &cat.modules[x], cap)?.at_most(1), "id")? {
            return Ok(CheckResult::verdict(NAME, false, format!("summand X{x} of τ⁻¹Ω⁻¹Λ has id > 1")));
        }
    }
    for x in cat.summand_indices(alg, &v)? {
        if !decided(cat.pd_table[x].at_most(1), "pd")? {
            return Ok(CheckResult::verdict(NAME, false, format!("summand X{x} of τΩDΛ has pd > 1")));
        }
    }
    Ok(CheckResult::verdict(NAME, true, format!("{} modules", cat.len())))
}

/// Builds the context, runs every check and assembles the verdict.
pub fn evaluate(name: &str, alg: &Algebra, settings: Settings) -> AlgebraVerdict {
    let start = Instant::now();
    let ctx = Context::new(alg, settings);
    let checks = run_checks(&ctx);
    let main = main_theorem(&ctx).ok().flatten();
    let catalog = ctx.catalog.as_ref().ok();
    let (id_regular, pd_dual) = match &ctx.gorenstein {
        Ok((a, b)) => (Some(*a), Some(*b)),
        Err(_) => (None, None),
    };
    AlgebraVerdict {
        name: name.to_string(),
        prime: alg.field().p(),
        vertices: alg.vertex_count(),
        dim: alg.dim(),
        gldim: ctx.gldim.clone().ok(),
        domdim: ctx.domdim.clone().ok(),
        id_regular,
        pd_dual,
        is_selfinjective: ctx.selfinjective,
        is_gorenstein: ctx.is_gorenstein().ok(),
        is_1ag: ctx.is_1ag().ok(),
        is_auslander: ctx.is_auslander().ok(),
        is_tilted: ctx.is_tilted().ok(),
        catalog_size: catalog.map(IndCatalog::len),
        tc_summands: ctx
            .tc
            .as_ref()
            .map(|t| t.iter().map(|m| m.dims().to_vec()).collect())
            .unwrap_or_default(),
        left_part: catalog.and_then(|c| left_part(c).ok()),
        cogen_tc: ctx.cogen_tc().ok(),
        p1_class: catalog.and_then(|c| p1_set(c).ok()),
        tilted_witness: ctx.tilted_witness().ok().flatten(),
        main_theorem_lhs: main.as_ref().map(|m| m.lhs),
        main_theorem_rhs: main.as_ref().map(|m| m.rhs),
        main_theorem_consistent: main.as_ref().map(|m| m.lhs == m.rhs),
        checks,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::*;

    fn verdict(alg: &Algebra) -> AlgebraVerdict {
        evaluate("t", alg, Settings::default())
    }

    #[test]
    fn ses_bound_arithmetic() {
        use HomDim::*;
        assert_eq!(ses_pd_bound_holds(Finite(1), Finite(0), Finite(2)), Some(true));
        assert_eq!(ses_pd_bound_holds(Finite(1), Finite(0), Finite(1)), Some(false));
        assert_eq!(ses_pd_bound_holds(Finite(0), Finite(0), Finite(1)), Some(true));
        assert_eq!(ses_pd_bound_holds(Infinite, Finite(0), Infinite), Some(true));
        assert_eq!(ses_pd_bound_holds(Exceeded(3), Finite(0), Finite(1)), None);
    }

    #[test]
    fn decision_examples() {
        let v = verdict(&truncated_polynomial(101, 2));
        assert_eq!((v.is_1ag, v.is_auslander, v.is_tilted), (Some(true), Some(false), Some(false)));
        let v = verdict(&linear_a(101, 2));
        assert_eq!((v.is_1ag, v.is_auslander, v.is_tilted), (Some(false), Some(false), Some(true)));
        let v = verdict(&auslander_dual_numbers(101));
        assert_eq!((v.is_1ag, v.is_auslander), (Some(true), Some(true)));
        assert_eq!(v.main_theorem_consistent, Some(true));
        let v = verdict(&semisimple(101));
        assert_eq!((v.is_1ag, v.is_auslander, v.is_tilted), (Some(true), Some(true), Some(true)));
        assert_eq!(v.main_theorem_lhs, Some(true));
        assert_eq!(v.main_theorem_rhs, Some(true));
    }

    #[test]
    fn auslander_algebra_of_dual_numbers_is_not_tilted() {
        let alg = auslander_dual_numbers(101);
        assert!(!quiver_is_acyclic(&alg));
        let v = verdict(&alg);
        assert_eq!(v.is_tilted, Some(false));
        assert_eq!(v.left_part, Some(vec![]));
        assert_eq!((v.main_theorem_lhs, v.main_theorem_rhs), (Some(false), Some(false)));
        assert_eq!(v.check("tilted_auslander_criterion").unwrap().outcome, CheckOutcome::Pass);
        assert!(quiver_is_acyclic(&commutative_square(101)));
    }

    #[test]
    fn cyclic_nakayama_has_empty_left_part() {
        let v = verdict(&cyclic_nakayama_rad2(101, 3));
        assert_eq!(v.left_part, Some(vec![]));
        assert_eq!(v.cogen_tc.as_ref().map(Vec::len), Some(6));
        assert_eq!(v.main_theorem_lhs, Some(false));
        assert_eq!(v.main_theorem_rhs, Some(false));
    }

    #[test]
    fn every_check_reported_once_and_none_fail() {
        for alg in [linear_a(101, 3), auslander_dual_numbers(101), commutative_square(101)] {
            let v = verdict(&alg);
            let names: Vec<&str> = v.checks.iter().map(|c| c.name).collect();
            assert_eq!(names, CHECK_NAMES.to_vec());
            for c in &v.checks {
                assert_ne!(c.outcome, CheckOutcome::Fail, "{}: {}", c.name, c.detail);
                assert_ne!(c.outcome, CheckOutcome::Inconclusive, "{}: {}", c.name, c.detail);
            }
        }
    }
}
