//! Auslander–Reiten translates, almost split sequences and the catalog of
//! indecomposables of a representation-finite algebra.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{Algebra, Path};
use crate::decompose::{
    canonical_cmp, fingerprint, is_isomorphic_indecomposable, local_radical, summands, Fingerprint,
};
use crate::hom::{cocycles_and_coboundaries, end, ext1, ext1_dim, hom, hom_dim, span_dim, ShortExact};
use crate::homology::{
    id, injective_envelope, is_injective, is_projective, pd, projective_cover, radical, HomDim,
};
use crate::linalg::Matrix;
use crate::module::{from_projective, DirectSum, Module, Morphism};
use crate::Error;

pub const DEFAULT_CATALOG_CAP: usize = 256;
/// Socle candidates tried before an almost split sequence is declared invalid.
pub const AR_CANDIDATE_BUDGET: usize = 16;

/// An almost split sequence `0 -> τM -> E -> M -> 0`.
#[derive(Clone, Debug)]
pub struct ARSequence {
    pub left: Module,
    pub middle: Module,
    pub right: Module,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

impl From<ShortExact> for ARSequence {
    fn from(s: ShortExact) -> Self {
        ARSequence {
            left: s.left,
            middle: s.middle,
            right: s.right,
            inclusion: s.inclusion,
            projection: s.projection,
        }
    }
}

/// Minimal projective presentation `P1 -d-> P0 -> M -> 0`, with `d` given
/// by its components: `components[j][i]` is the element of `e_{v_i} Λ e_{w_j}`
/// (coordinates over the basis paths `v_i -> w_j`) that the generator of the
/// `j`-th summand of `P1` is sent to in the `i`-th summand of `P0`.
struct MinimalPresentation {
    top: Vec<usize>,
    relations: Vec<usize>,
    components: Vec<Vec<Vec<u32>>>,
}

fn minimal_presentation(alg: &Algebra, m: &Module) -> MinimalPresentation {
    let cover0 = projective_cover(alg, m);
    let (omega, incl) = cover0.epi.kernel(alg, &cover0.sum.module);
    let cover1 = projective_cover(alg, &omega);
    let d = incl.after(&cover1.epi);
    let components = cover1
        .vertices
        .iter()
        .enumerate()
        .map(|(j, &w)| {
            let column = d.at(w).column(cover1.generator_position(j));
            cover0
                .vertices
                .iter()
                .enumerate()
                .map(|(i, _)| {
                    let start = cover0.sum.offsets[i][w];
                    let len = cover0.sum.part_dims[i][w];
                    column[start..start + len].to_vec()
                })
                .collect()
        })
        .collect();
    MinimalPresentation {
        top: cover0.vertices,
        relations: cover1.vertices,
        components,
    }
}

/// `Tr M`, a right module over the opposite algebra: the cokernel of
/// `Hom(P0, Λ) -> Hom(P1, Λ)` for a minimal presentation of `M`.
/// Projective summands of `M` contribute nothing.
pub fn transpose(alg: &Algebra, m: &Module) -> Module {
    let op = alg.opposite();
    let pres = minimal_presentation(alg, m);
    let basis = alg.presentation();
    let op_basis = op.presentation();
    let f = alg.field();
    let src_parts: Vec<&Module> = pres.top.iter().map(|&v| op.projective(v)).collect();
    let dst_parts: Vec<&Module> = pres.relations.iter().map(|&w| op.projective(w)).collect();
    let src = DirectSum::new(&op, &src_parts);
    let dst = DirectSum::new(&op, &dst_parts);
    let mut dual = Morphism::zero(&src.module, &dst.module);
    for (j, &w) in pres.relations.iter().enumerate() {
        for (i, &v) in pres.top.iter().enumerate() {
            let coords = &pres.components[j][i];
            if coords.iter().all(|&c| c == 0) {
                continue;
            }
            // reverse each path v -> w and renormalize over the opposite basis
            let targets = op_basis.basis_between(w, v);
            let mut element = vec![0u32; targets.len()];
            for (k, &pi) in basis.basis_between(v, w).iter().enumerate() {
                if coords[k] == 0 {
                    continue;
                }
                let p = &basis.basis()[pi];
                let reversed = Path {
                    source: p.target,
                    target: p.source,
                    arrows: p.arrows.iter().rev().copied().collect(),
                };
                for (bi, c) in op_basis.normal_form(&reversed) {
                    let pos = targets
                        .iter()
                        .position(|&t| t == bi)
                        .expect("reversed path stays between the same vertices");
                    element[pos] = f.add(element[pos], f.mul(c, coords[k]));
                }
            }
            let component = from_projective(&op, v, dst_parts[j], &element);
            dual = dual.add(&dst.injection(j).after(&component.after(&src.projection(i))));
        }
    }
    debug_assert!(dual.is_homomorphism(&op, &src.module, &dst.module));
    dual.cokernel(&op, &dst.module).0
}

/// `τM = D Tr M`.
pub fn tau(alg: &Algebra, m: &Module) -> Module {
    transpose(alg, m).dual()
}

/// `τ⁻¹M = Tr D M`.
pub fn tau_inv(alg: &Algebra, m: &Module) -> Module {
    transpose(&alg.opposite(), &m.dual())
}

/// Cocycle blocks flattened in layout order.
fn flatten_blocks(blocks: &[Matrix]) -> Vec<u32> {
    blocks.iter().flat_map(|b| b.entries().iter().copied()).collect()
}

/// Candidates for the almost split sequence ending in the indecomposable
/// non-projective `m`: extensions whose class lies in the socle of
/// `Ext¹(M, τM)` over `End(M)`.
pub fn ar_sequence_candidates(alg: &Algebra, m: &Module) -> Result<Vec<ARSequence>, Error> {
    if is_projective(alg, m) {
        return Err(Error::InvalidInput(
            "almost split sequences end in non-projective modules".into(),
        ));
    }
    let f = alg.field();
    let left = tau(alg, m);
    let ext = ext1(alg, m, &left)?;
    if ext.is_zero() {
        return Err(Error::ValidationFailed(format!(
            "Ext¹(M, τM) vanishes for M = {}",
            m.dim_label()
        )));
    }
    let end_space = end(alg, m);
    let rad = local_radical(alg, m, &end_space).ok_or(Error::NonSplitField)?;
    let (_, _, b) = cocycles_and_coboundaries(alg, m, &left);
    let modulo_b = b.cokernel_projection();
    let quiver = alg.quiver();
    // columns: classes ρ_r(X_i) mod B, stacked over r
    let mut blocks = Vec::with_capacity(rad.len());
    for r in &rad {
        let cols: Vec<Vec<u32>> = ext
            .cocycles()
            .iter()
            .map(|c| {
                let pulled: Vec<Matrix> = quiver
                    .arrows()
                    .iter()
                    .enumerate()
                    .map(|(ai, a)| c[ai].mul(r.at(a.source)))
                    .collect();
                modulo_b.mul_vec(&flatten_blocks(&pulled))
            })
            .collect();
        blocks.push(Matrix::from_columns(f, modulo_b.rows(), &cols));
    }
    let socle = if blocks.is_empty() {
        Matrix::identity(f, ext.dim())
    } else {
        Matrix::vstack_all(f, ext.dim(), &blocks).kernel_basis()
    };
    let mut coefficient_sets: Vec<Vec<u32>> = socle.columns();
    for i in 0..socle.cols() {
        for j in i + 1..socle.cols() {
            let sum: Vec<u32> = socle
                .column(i)
                .iter()
                .zip(socle.column(j))
                .map(|(&x, y)| f.add(x, y))
                .collect();
            coefficient_sets.push(sum);
        }
    }
    coefficient_sets.truncate(AR_CANDIDATE_BUDGET);
    Ok(coefficient_sets
        .iter()
        .map(|coeffs| ext.extension(alg, m, &left, coeffs).into())
        .collect())
}

/// The first socle candidate; see [`validate_almost_split`] for certification.
pub fn ar_sequence(alg: &Algebra, m: &Module) -> Result<ARSequence, Error> {
    ar_sequence_candidates(alg, m)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::ValidationFailed("empty socle of Ext¹(M, τM)".into()))
}

/// Checks that every non-retraction from `M` itself and from each module in
/// `test_modules` factors through the middle term.
pub fn validate_almost_split(alg: &Algebra, seq: &ARSequence, test_modules: &[Module]) -> Result<(), Error> {
    let m = &seq.right;
    let fail = |what: String| Err(Error::ValidationFailed(what));
    if seq.middle.total_dim() != seq.left.total_dim() + m.total_dim() {
        return fail("middle term has the wrong dimension".into());
    }
    let end_space = end(alg, m);
    let rad = local_radical(alg, m, &end_space).ok_or(Error::NonSplitField)?;
    let lifted: Vec<Morphism> = hom(alg, m, &seq.middle)
        .basis
        .iter()
        .map(|g| seq.projection.after(g))
        .collect();
    let image = span_dim(&lifted);
    if image != rad.len() || span_dim(&[lifted.clone(), rad].concat()) != image {
        return fail(format!("sequence ending in {} is split or not almost split", m.dim_label()));
    }
    for x in test_modules {
        if is_isomorphic_indecomposable(alg, x, m) {
            continue;
        }
        let target = hom_dim(alg, x, m);
        if target == 0 {
            continue;
        }
        let lifted: Vec<Morphism> = hom(alg, x, &seq.middle)
            .basis
            .iter()
            .map(|g| seq.projection.after(g))
            .collect();
        if span_dim(&lifted) != target {
            return fail(format!(
                "a map {} -> {} does not factor through the middle term",
                x.dim_label(),
                m.dim_label()
            ));
        }
    }
    Ok(())
}

/// First candidate that validates against `test_modules`.
pub fn ar_sequence_validated(alg: &Algebra, m: &Module, test_modules: &[Module]) -> Result<ARSequence, Error> {
    let mut last = None;
    for seq in ar_sequence_candidates(alg, m)? {
        match validate_almost_split(alg, &seq, test_modules) {
            Ok(()) => return Ok(seq),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::ValidationFailed("no candidate sequence".into())))
}

/// Dimension of `Hom(N, M)` modulo maps factoring through an injective.
pub fn stable_hom_dim_injective(alg: &Algebra, n: &Module, m: &Module) -> usize {
    let total = hom_dim(alg, n, m);
    if total == 0 {
        return 0;
    }
    let env = injective_envelope(alg, n);
    let through: Vec<Morphism> = hom(alg, &env.module, m)
        .basis
        .iter()
        .map(|g| g.after(&env.mono))
        .collect();
    total - span_dim(&through)
}

/// Pairwise non-isomorphic indecomposables with their Hom/Ext tables,
/// translates and homological dimensions.
#[derive(Clone, Debug)]
pub struct IndCatalog {
    pub modules: Vec<Module>,
    pub fingerprints: Vec<Fingerprint>,
    pub hom_dims: Vec<Vec<usize>>,
    pub ext_dims: Vec<Vec<usize>>,
    pub tau_index: Vec<Option<usize>>,
    pub tau_inv_index: Vec<Option<usize>>,
    pub pd_table: Vec<HomDim>,
    pub id_table: Vec<HomDim>,
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
    /// For non-projective `i`: the AR-sequence middle term as
    /// `(catalog index, multiplicity)` pairs.
    pub ar_middles: Vec<Option<Vec<(usize, usize)>>>,
    /// Irreducible maps `(from, to) -> multiplicity`.
    pub irreducible: BTreeMap<(usize, usize), usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub index: usize,
    pub dims: Vec<usize>,
    pub pd: HomDim,
    pub id: HomDim,
    pub projective: bool,
    pub injective: bool,
    pub tau: Option<usize>,
    pub tau_inv: Option<usize>,
}

struct Builder<'a> {
    alg: &'a Algebra,
    cap: usize,
    modules: Vec<Module>,
    prints: Vec<Fingerprint>,
}

impl Builder<'_> {
    fn find(&self, m: &Module, print: &Fingerprint) -> Option<usize> {
        (0..self.modules.len()).find(|&i| {
            &self.prints[i] == print && is_isomorphic_indecomposable(self.alg, &self.modules[i], m)
        })
    }

    /// Catalog indices of the indecomposable summands of `m`, inserting new ones.
    fn insert(&mut self, m: &Module, queue: &mut VecDeque<usize>) -> Result<Vec<usize>, Error> {
        let mut out = Vec::new();
        for s in summands(self.alg, m)? {
            let print = fingerprint(self.alg, &s.module);
            let idx = match self.find(&s.module, &print) {
                Some(i) => i,
                None => {
                    if self.modules.len() >= self.cap {
                        return Err(Error::RepInfiniteSuspected(self.cap));
                    }
                    self.modules.push(s.module);
                    self.prints.push(print);
                    queue.push_back(self.modules.len() - 1);
                    self.modules.len() - 1
                }
            };
            out.push(idx);
        }
        Ok(out)
    }
}

fn multiplicities(indices: &[usize]) -> Vec<(usize, usize)> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &i in indices {
        *counts.entry(i).or_default() += 1;
    }
    counts.into_iter().collect()
}

/// AR-closure of the projectives, injectives and simples.
pub fn enumerate_indecomposables(alg: &Algebra, cap: usize, resolution_cap: usize) -> Result<IndCatalog, Error> {
    let mut b = Builder {
        alg,
        cap,
        modules: Vec::new(),
        prints: Vec::new(),
    };
    let mut queue = VecDeque::new();
    for v in 0..alg.vertex_count() {
        b.insert(alg.projective(v), &mut queue)?;
        b.insert(&alg.injective(v), &mut queue)?;
        b.insert(&alg.simple(v), &mut queue)?;
    }
    let mut tau_raw: BTreeMap<usize, usize> = BTreeMap::new();
    let mut tau_inv_raw: BTreeMap<usize, usize> = BTreeMap::new();
    let mut middles_raw: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut radicals_raw: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    while let Some(i) = queue.pop_front() {
        let m = b.modules[i].clone();
        if is_projective(alg, &m) {
            let (rad, _) = radical(alg, &m);
            let parts = b.insert(&rad, &mut queue)?;
            radicals_raw.insert(i, parts);
        } else {
            let t = b.insert(&tau(alg, &m), &mut queue)?;
            if t.len() != 1 {
                return Err(Error::ValidationFailed(format!(
                    "τ of indecomposable {} has {} summands",
                    m.dim_label(),
                    t.len()
                )));
            }
            tau_raw.insert(i, t[0]);
            let seq = ar_sequence(alg, &m)?;
            middles_raw.insert(i, b.insert(&seq.middle, &mut queue)?);
        }
        if !is_injective(alg, &m) {
            let t = b.insert(&tau_inv(alg, &m), &mut queue)?;
            if t.len() != 1 {
                return Err(Error::ValidationFailed(format!(
                    "τ⁻¹ of indecomposable {} has {} summands",
                    m.dim_label(),
                    t.len()
                )));
            }
            tau_inv_raw.insert(i, t[0]);
        }
    }

    // canonical order
    let n = b.modules.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| {
        canonical_cmp((&b.modules[x], &b.prints[x]), (&b.modules[y], &b.prints[y]))
    });
    let mut rank = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let modules: Vec<Module> = order.iter().map(|&o| b.modules[o].clone()).collect();
    let fingerprints: Vec<Fingerprint> = order.iter().map(|&o| b.prints[o].clone()).collect();
    let remap = |raw: &BTreeMap<usize, usize>| -> Vec<Option<usize>> {
        order.iter().map(|o| raw.get(o).map(|&t| rank[t])).collect()
    };
    let tau_index = remap(&tau_raw);
    let tau_inv_index = remap(&tau_inv_raw);
    let ar_middles: Vec<Option<Vec<(usize, usize)>>> = order
        .iter()
        .map(|o| {
            middles_raw.get(o).map(|parts| {
                let mapped: Vec<usize> = parts.iter().map(|&p| rank[p]).collect();
                multiplicities(&mapped)
            })
        })
        .collect();
    let mut irreducible: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut add_edge = |from: usize, to: usize, k: usize| {
        let e = irreducible.entry((from, to)).or_default();
        *e = (*e).max(k);
    };
    for (i, middle) in ar_middles.iter().enumerate() {
        if let (Some(parts), Some(t)) = (middle, tau_index[i]) {
            for &(x, k) in parts {
                add_edge(x, i, k);
                add_edge(t, x, k);
            }
        }
    }
    for (old, parts) in &radicals_raw {
        let mapped: Vec<usize> = parts.iter().map(|&p| rank[p]).collect();
        for (x, k) in multiplicities(&mapped) {
            add_edge(x, rank[*old], k);
        }
    }

    let hom_dims: Vec<Vec<usize>> = modules
        .iter()
        .map(|x| modules.iter().map(|y| hom_dim(alg, x, y)).collect())
        .collect();
    let ext_dims: Vec<Vec<usize>> = modules
        .iter()
        .map(|x| modules.iter().map(|y| ext1_dim(alg, x, y)).collect())
        .collect();
    let mut pd_table = Vec::with_capacity(n);
    let mut id_table = Vec::with_capacity(n);
    for m in &modules {
        pd_table.push(pd(alg, m, resolution_cap)?);
        id_table.push(id(alg, m, resolution_cap)?);
    }
    let projective = modules.iter().map(|m| is_projective(alg, m)).collect();
    let injective = modules.iter().map(|m| is_injective(alg, m)).collect();
    Ok(IndCatalog {
        modules,
        fingerprints,
        hom_dims,
        ext_dims,
        tau_index,
        tau_inv_index,
        pd_table,
        id_table,
        projective,
        injective,
        ar_middles,
        irreducible,
    })
}

impl IndCatalog {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// Catalog index of an indecomposable module.
    pub fn index_of(&self, alg: &Algebra, m: &Module) -> Option<usize> {
        let print = fingerprint(alg, m);
        (0..self.len()).find(|&i| {
            self.fingerprints[i] == print && is_isomorphic_indecomposable(alg, &self.modules[i], m)
        })
    }

    /// Catalog indices (with repetition) of the indecomposable summands of `m`.
    pub fn summand_indices(&self, alg: &Algebra, m: &Module) -> Result<Vec<usize>, Error> {
        summands(alg, m)?
            .iter()
            .map(|s| {
                self.index_of(alg, &s.module).ok_or_else(|| {
                    Error::ValidationFailed(format!(
                        "summand {} missing from the catalog",
                        s.module.dim_label()
                    ))
                })
            })
            .collect()
    }

    /// Every `i` with a chain of nonzero maps `X_i -> ... -> X_j`, sorted.
    pub fn predecessors(&self, j: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        seen[j] = true;
        let mut stack = vec![j];
        while let Some(k) = stack.pop() {
            for i in 0..self.len() {
                if !seen[i] && self.hom_dims[i][k] != 0 {
                    seen[i] = true;
                    stack.push(i);
                }
            }
        }
        (0..self.len()).filter(|&i| seen[i]).collect()
    }

    /// Whether the nonzero-Hom graph, made undirected, is connected.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(k) = stack.pop() {
            for i in 0..self.len() {
                if !seen[i] && (self.hom_dims[i][k] != 0 || self.hom_dims[k][i] != 0) {
                    seen[i] = true;
                    stack.push(i);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Re-derives every AR sequence and validates it against the whole
    /// catalog; also checks the recorded middle terms.
    pub fn validate_ar_sequences(&self, alg: &Algebra) -> Result<(), Error> {
        for i in 0..self.len() {
            if self.projective[i] {
                continue;
            }
            let seq = ar_sequence_validated(alg, &self.modules[i], &self.modules)?;
            let mut parts = self.summand_indices(alg, &seq.middle)?;
            parts.sort_unstable();
            if Some(multiplicities(&parts)) != self.ar_middles[i] {
                return Err(Error::ValidationFailed(format!(
                    "middle term of the sequence ending in entry {i} changed"
                )));
            }
        }
        Ok(())
    }

    /// Closure: τ, τ⁻¹ and middle terms stay inside the catalog, and τ, τ⁻¹
    /// are mutually inverse on non-projectives and non-injectives.
    pub fn check_closure(&self) -> Result<(), Error> {
        for i in 0..self.len() {
            match (self.projective[i], self.tau_index[i]) {
                (false, Some(t)) => {
                    if self.tau_inv_index[t] != Some(i) || self.injective[t] {
                        return Err(Error::ValidationFailed(format!("τ⁻¹τ fails at entry {i}")));
                    }
                }
                (true, None) => {}
                _ => return Err(Error::ValidationFailed(format!("τ link broken at entry {i}"))),
            }
            match (self.injective[i], self.tau_inv_index[i]) {
                (false, Some(t)) => {
                    if self.tau_index[t] != Some(i) || self.projective[t] {
                        return Err(Error::ValidationFailed(format!("ττ⁻¹ fails at entry {i}")));
                    }
                }
                (true, None) => {}
                _ => return Err(Error::ValidationFailed(format!("τ⁻¹ link broken at entry {i}"))),
            }
            if self.hom_dims[i][i] == 0 {
                return Err(Error::ValidationFailed(format!("entry {i} has no endomorphisms")));
            }
        }
        Ok(())
    }

    pub fn entries(&self) -> Vec<CatalogEntry> {
        (0..self.len())
            .map(|i| CatalogEntry {
                index: i,
                dims: self.modules[i].dims().to_vec(),
                pd: self.pd_table[i],
                id: self.id_table[i],
                projective: self.projective[i],
                injective: self.injective[i],
                tau: self.tau_index[i],
                tau_inv: self.tau_inv_index[i],
            })
            .collect()
    }

    /// The AR quiver in DOT syntax: solid edges for irreducible maps (labelled
    /// with their multiplicity when above one), dashed edges `M -> τM`.
    pub fn ar_quiver_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "'"));
        let _ = writeln!(out, "  rankdir=LR;");
        for (i, m) in self.modules.iter().enumerate() {
            let shape = match (self.projective[i], self.injective[i]) {
                (true, true) => "doublebox",
                (true, false) => "box",
                (false, true) => "ellipse",
                (false, false) => "plaintext",
            };
            let _ = writeln!(out, "  n{i} [label=\"{}\", shape={shape}];", m.dim_label());
        }
        for (&(from, to), &k) in &self.irreducible {
            if k > 1 {
                let _ = writeln!(out, "  n{from} -> n{to} [label=\"{k}\"];");
            } else {
                let _ = writeln!(out, "  n{from} -> n{to};");
            }
        }
        for (i, t) in self.tau_index.iter().enumerate() {
            if let Some(t) = t {
                let _ = writeln!(out, "  n{i} -> n{t} [style=dashed, constraint=false];");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::is_isomorphic;
    use crate::examples::*;

    #[test]
    fn transpose_and_tau_over_a2() {
        let alg = linear_a(101, 2);
        let s1 = alg.simple(0);
        assert!(transpose(&alg, alg.projective(0)).is_zero());
        let tr = transpose(&alg, &s1);
        assert_eq!(tr.total_dim(), 1);
        let t = tau(&alg, &s1);
        assert!(is_isomorphic(&alg, &t, &alg.simple(1)).unwrap());
        assert!(tau(&alg, alg.projective(1)).is_zero());
        assert!(is_isomorphic(&alg, &tau_inv(&alg, &t), &s1).unwrap());
        assert!(tau_inv(&alg, &alg.injective(0)).is_zero());
    }

    #[test]
    fn ar_sequence_of_simple_over_a2() {
        let alg = linear_a(101, 2);
        let seq = ar_sequence(&alg, &alg.simple(0)).unwrap();
        assert!(is_isomorphic(&alg, &seq.left, &alg.simple(1)).unwrap());
        assert!(is_isomorphic(&alg, &seq.middle, alg.projective(0)).unwrap());
        let all = [alg.simple(1), alg.projective(0).clone(), alg.simple(0)];
        validate_almost_split(&alg, &seq, &all).unwrap();
    }

    #[test]
    fn ar_sequence_over_truncated_cubic() {
        let alg = truncated_polynomial(101, 3);
        let s = alg.simple(0);
        let seq = ar_sequence(&alg, &s).unwrap();
        assert_eq!(seq.left.dims(), &[1]);
        assert_eq!(seq.middle.dims(), &[2]);
        assert!(crate::decompose::is_indecomposable(&alg, &seq.middle).unwrap());
    }

    #[test]
    fn catalog_sizes() {
        let cases = [
            (semisimple(101), 1),
            (linear_a(101, 2), 3),
            (linear_a(101, 3), 6),
            (truncated_polynomial(101, 3), 3),
            (truncated_polynomial(101, 2), 2),
            (auslander_dual_numbers(101), 5),
            (cyclic_nakayama_rad2(101, 3), 6),
            (commutative_square(101), 11),
        ];
        for (alg, expected) in cases {
            let cat = enumerate_indecomposables(&alg, 256, 24).unwrap();
            assert_eq!(cat.len(), expected, "{alg:?}");
            cat.check_closure().unwrap();
            cat.validate_ar_sequences(&alg).unwrap();
            assert!(cat.is_connected());
        }
    }

    #[test]
    fn predecessors_over_a2() {
        let alg = linear_a(101, 2);
        let cat = enumerate_indecomposables(&alg, 256, 24).unwrap();
        let s1 = cat.index_of(&alg, &alg.simple(0)).unwrap();
        let s2 = cat.index_of(&alg, &alg.simple(1)).unwrap();
        assert_eq!(cat.predecessors(s1).len(), 3);
        assert_eq!(cat.predecessors(s2), vec![s2]);
        let dot = cat.ar_quiver_dot("A2");
        assert_eq!(dot.matches("label=\"(").count(), 3);
        assert_eq!(dot.matches("dashed").count(), 1);
    }

    #[test]
    fn ar_formula_on_a3() {
        let alg = linear_a(101, 3);
        let cat = enumerate_indecomposables(&alg, 256, 24).unwrap();
        for (i, m) in cat.modules.iter().enumerate() {
            let tm = tau(&alg, m);
            for (j, n) in cat.modules.iter().enumerate() {
                assert_eq!(cat.ext_dims[i][j], stable_hom_dim_injective(&alg, n, &tm));
            }
        }
    }

    #[test]
    fn rep_infinite_is_refused() {
        let alg = linear_a(101, 3);
        let err = enumerate_indecomposables(&alg, 4, 24).unwrap_err();
        assert_eq!(err, Error::RepInfiniteSuspected(4));
    }
}
