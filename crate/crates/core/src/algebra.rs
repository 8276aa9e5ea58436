//! Bound quiver algebras `kQ/I` and their path bases.
//!
//! Paths compose left to right: `p·q` means first `p`, then `q`, so it is
//! defined when `target(p) = source(q)`. Right modules are representations
//! with one linear map `M_v -> M_w` per arrow `v -> w`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::linalg::{Matrix, PrimeField};
use crate::module::Module;
use crate::Error;

pub const DEFAULT_NILPOTENCY_CAP: usize = 30;

/// Enumerating more paths than this without witnessing nilpotency is treated
/// as a non-admissible presentation.
const PATH_LIMIT: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn new(name: impl Into<String>, source: usize, target: usize) -> Self {
        Arrow {
            name: name.into(),
            source,
            target,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, Error> {
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(Error::InvalidInput(format!(
                    "arrow {} has an endpoint outside 0..{vertex_count}",
                    a.name
                )));
            }
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::InvalidInput(format!("duplicate arrow id {}", a.name)));
            }
        }
        Ok(Quiver {
            vertex_count,
            arrows,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same arrow ids, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(u32, Vec<usize>)>,
}

impl Relation {
    pub fn new(terms: Vec<(u32, Vec<usize>)>) -> Self {
        Relation { terms }
    }

    fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (*c, p.iter().rev().copied().collect()))
                .collect(),
        }
    }
}

/// A path in the quiver. Trivial paths have no arrows and `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    fn extended(&self, arrow: usize, target: usize) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Path {
            source: self.source,
            target,
            arrows,
        }
    }

    pub fn label(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", self.source + 1)
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrow(a).name.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

/// Canonical order: by length, then arrow sequence, then source vertex.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A fully reduced presentation: quiver, relations, and a basis of `kQ/I`
/// made of paths, together with the reduction of every short path onto it.
#[derive(Clone, Debug)]
pub struct Presentation {
    field: PrimeField,
    quiver: Quiver,
    relations: Vec<Relation>,
    nilpotency_cap: usize,
    /// Paths of length `> vanishing_length` are zero in the algebra.
    vanishing_length: usize,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    /// Normal form of every path of length `<= vanishing_length`.
    normal_forms: HashMap<Path, Vec<(usize, u32)>>,
    right_multiplication: Vec<Matrix>,
}

impl Presentation {
    pub fn build(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: PrimeField,
        nilpotency_cap: usize,
    ) -> Result<Self, Error> {
        let mut relations = relations;
        for r in relations.iter_mut() {
            normalize_relation(&quiver, r, field)?;
        }
        relations.retain(|r| !r.terms.is_empty());

        let mut levels: Vec<Vec<Path>> = vec![(0..quiver.vertex_count()).map(Path::trivial).collect()];
        let mut total = levels[0].len();
        for length in 1..=nilpotency_cap {
            let mut next: Vec<Path> = Vec::new();
            for p in &levels[length - 1] {
                for (ai, a) in quiver.arrows().iter().enumerate() {
                    if a.source == p.target {
                        next.push(p.extended(ai, a.target));
                    }
                }
            }
            next.sort();
            total += next.len();
            if total > PATH_LIMIT {
                return Err(Error::NotAdmissible(format!(
                    "more than {PATH_LIMIT} paths of length <= {length} before the relations vanish"
                )));
            }
            levels.push(next);
            if let Some(reduction) = reduce_at(&quiver, &relations, field, &levels)? {
                return Ok(Self::assemble(
                    field,
                    quiver,
                    relations,
                    nilpotency_cap,
                    length,
                    reduction,
                ));
            }
        }
        Err(Error::NotAdmissible(format!(
            "paths of length {nilpotency_cap} survive the relations"
        )))
    }

    fn assemble(
        field: PrimeField,
        quiver: Quiver,
        relations: Vec<Relation>,
        nilpotency_cap: usize,
        vanishing_length: usize,
        reduction: Reduction,
    ) -> Self {
        let Reduction {
            mut basis,
            pivot_forms,
        } = reduction;
        basis.sort();
        let basis_index: HashMap<Path, usize> =
            basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut normal_forms: HashMap<Path, Vec<(usize, u32)>> = HashMap::new();
        for p in &basis {
            normal_forms.insert(p.clone(), vec![(basis_index[p], 1)]);
        }
        for (p, form) in pivot_forms {
            let mut v: Vec<(usize, u32)> = form
                .into_iter()
                .map(|(q, c)| (basis_index[&q], c))
                .collect();
            v.sort();
            normal_forms.insert(p, v);
        }
        let dim = basis.len();
        let mut right_multiplication = Vec::new();
        for (ai, a) in quiver.arrows().iter().enumerate() {
            let mut m = Matrix::zeros(field, dim, dim);
            for (i, p) in basis.iter().enumerate() {
                if p.target != a.source || p.len() + 1 > vanishing_length {
                    continue;
                }
                let q = p.extended(ai, a.target);
                for &(j, c) in &normal_forms[&q] {
                    m.set(j, i, c);
                }
            }
            right_multiplication.push(m);
        }
        Presentation {
            field,
            quiver,
            relations,
            nilpotency_cap,
            vanishing_length,
            basis,
            basis_index,
            normal_forms,
            right_multiplication,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn nilpotency_cap(&self) -> usize {
        self.nilpotency_cap
    }

    /// Length beyond which every path is zero.
    pub fn vanishing_length(&self) -> usize {
        self.vanishing_length
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_position(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// Basis paths from `v` to `w`, in canonical order.
    pub fn basis_between(&self, v: usize, w: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].source == v && self.basis[i].target == w)
            .collect()
    }

    /// Coordinates of a path in the path basis; zero beyond the vanishing length.
    pub fn normal_form(&self, path: &Path) -> Vec<(usize, u32)> {
        if path.len() > self.vanishing_length {
            return Vec::new();
        }
        self.normal_forms.get(path).cloned().unwrap_or_default()
    }

    /// Right multiplication by arrow `a` on the path basis (`dim x dim`).
    pub fn right_multiplication(&self, a: usize) -> &Matrix {
        &self.right_multiplication[a]
    }

    /// Product of two basis elements, in basis coordinates.
    pub fn multiply_basis(&self, i: usize, j: usize) -> Vec<(usize, u32)> {
        let (p, q) = (&self.basis[i], &self.basis[j]);
        if p.target != q.source {
            return Vec::new();
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        self.normal_form(&Path {
            source: p.source,
            target: q.target,
            arrows,
        })
    }

    pub fn opposite(&self) -> Result<Presentation, Error> {
        Presentation::build(
            self.quiver.opposite(),
            self.relations.iter().map(Relation::reversed).collect(),
            self.field,
            self.nilpotency_cap,
        )
    }
}

fn normalize_relation(quiver: &Quiver, r: &mut Relation, field: PrimeField) -> Result<(), Error> {
    let mut endpoints: Option<(usize, usize)> = None;
    for (c, path) in r.terms.iter_mut() {
        *c %= field.p();
        if path.len() < 2 {
            return Err(Error::InvalidInput(
                "relation paths must have length at least 2".into(),
            ));
        }
        if let Some(&bad) = path.iter().find(|&&a| a >= quiver.arrows().len()) {
            return Err(Error::InvalidInput(format!("unknown arrow index {bad}")));
        }
        for w in path.windows(2) {
            if quiver.arrow(w[0]).target != quiver.arrow(w[1]).source {
                return Err(Error::InvalidInput(format!(
                    "arrows {} and {} do not compose",
                    quiver.arrow(w[0]).name,
                    quiver.arrow(w[1]).name
                )));
            }
        }
        let ends = (
            quiver.arrow(path[0]).source,
            quiver.arrow(*path.last().unwrap()).target,
        );
        match endpoints {
            None => endpoints = Some(ends),
            Some(e) if e != ends => {
                return Err(Error::InvalidInput(
                    "relation paths are not parallel".into(),
                ))
            }
            _ => {}
        }
    }
    // merge repeated paths and drop zero coefficients
    let mut merged: Vec<(u32, Vec<usize>)> = Vec::new();
    for (c, p) in r.terms.drain(..) {
        match merged.iter_mut().find(|(_, q)| *q == p) {
            Some(t) => t.0 = field.add(t.0, c),
            None => merged.push((c, p)),
        }
    }
    merged.retain(|(c, _)| *c != 0);
    r.terms = merged;
    Ok(())
}

struct Reduction {
    basis: Vec<Path>,
    pivot_forms: Vec<(Path, Vec<(Path, u32)>)>,
}

/// With all paths of length `<= m` enumerated in `levels`, span the ideal
/// modulo paths of length `> m` and test whether every length-`m` path lies in
/// it. For an admissible ideal that forces `J^m ⊆ I`, and the quotient of the
/// short paths by the span is the algebra.
fn reduce_at(
    quiver: &Quiver,
    relations: &[Relation],
    field: PrimeField,
    levels: &[Vec<Path>],
) -> Result<Option<Reduction>, Error> {
    let m = levels.len() - 1;
    let n = quiver.vertex_count();
    let mut blocks: HashMap<(usize, usize), Vec<Path>> = HashMap::new();
    for p in levels.iter().flatten() {
        blocks.entry((p.source, p.target)).or_default().push(p.clone());
    }
    let mut by_target: Vec<Vec<&Path>> = vec![Vec::new(); n];
    let mut by_source: Vec<Vec<&Path>> = vec![Vec::new(); n];
    for p in levels.iter().flatten() {
        by_target[p.target].push(p);
        by_source[p.source].push(p);
    }

    let mut basis = Vec::new();
    let mut pivot_forms = Vec::new();
    let mut keys: Vec<(usize, usize)> = blocks.keys().copied().collect();
    keys.sort();
    for key in keys {
        let mut paths = blocks.remove(&key).unwrap();
        // longest paths first so that they become pivots
        paths.sort_by(|a, b| b.cmp(a));
        let col: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for r in relations {
            let first = &r.terms[0].1;
            let rs = quiver.arrow(first[0]).source;
            let rt = quiver.arrow(*first.last().unwrap()).target;
            let min_len = r.terms.iter().map(|(_, p)| p.len()).min().unwrap();
            for u in by_target[rs].iter().filter(|u| u.source == key.0) {
                if u.len() + min_len > m {
                    continue;
                }
                for w in by_source[rt].iter().filter(|w| w.target == key.1) {
                    if u.len() + min_len + w.len() > m {
                        continue;
                    }
                    let mut row = vec![0u32; paths.len()];
                    for (c, p) in &r.terms {
                        let len = u.len() + p.len() + w.len();
                        if len > m {
                            continue;
                        }
                        let mut arrows = u.arrows.clone();
                        arrows.extend_from_slice(p);
                        arrows.extend_from_slice(&w.arrows);
                        let q = Path {
                            source: key.0,
                            target: key.1,
                            arrows,
                        };
                        let j = col[&q];
                        row[j] = field.add(row[j], *c);
                    }
                    rows.push(row);
                }
            }
        }
        let ech = if rows.is_empty() {
            None
        } else {
            let mat = Matrix::from_fn(field, rows.len(), paths.len(), |r, c| rows[r][c]);
            Some(mat.rref())
        };
        let pivots: Vec<usize> = ech.as_ref().map(|e| e.pivots.clone()).unwrap_or_default();
        let is_pivot = |j: usize| pivots.contains(&j);
        for (j, p) in paths.iter().enumerate() {
            if is_pivot(j) {
                continue;
            }
            if p.len() == m {
                // a longest path survives: nilpotency not yet witnessed
                return Ok(None);
            }
            basis.push(p.clone());
        }
        if let Some(e) = ech {
            for (i, &pc) in e.pivots.iter().enumerate() {
                let form: Vec<(Path, u32)> = (0..paths.len())
                    .filter(|&j| !is_pivot(j) && e.reduced.get(i, j) != 0)
                    .map(|j| (paths[j].clone(), field.neg(e.reduced.get(i, j))))
                    .collect();
                if paths[pc].len() == m && !form.is_empty() {
                    return Ok(None);
                }
                pivot_forms.push((paths[pc].clone(), form));
            }
        }
    }
    Ok(Some(Reduction { basis, pivot_forms }))
}

struct Side {
    presentation: Presentation,
    projectives: OnceLock<Vec<Module>>,
    projective_is_injective: OnceLock<Vec<bool>>,
}

/// Shared handle on an algebra and its opposite. Cloning is cheap; the
/// opposite of the opposite is the original handle.
#[derive(Clone)]
pub struct Algebra {
    sides: Arc<[Side; 2]>,
    flipped: bool,
    seed: u64,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("vertices", &self.vertex_count())
            .field("arrows", &self.quiver().arrows().len())
            .field("dim", &self.dim())
            .field("opposite", &self.flipped)
            .finish()
    }
}

impl Algebra {
    pub fn build(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: PrimeField,
        nilpotency_cap: usize,
    ) -> Result<Self, Error> {
        let presentation = Presentation::build(quiver, relations, field, nilpotency_cap)?;
        let opposite = presentation.opposite()?;
        let side = |presentation| Side {
            presentation,
            projectives: OnceLock::new(),
            projective_is_injective: OnceLock::new(),
        };
        Ok(Algebra {
            sides: Arc::new([side(presentation), side(opposite)]),
            flipped: false,
            seed: crate::DEFAULT_SEED,
        })
    }

    /// Same algebra, with a different seed for the randomized searches.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn side(&self) -> &Side {
        &self.sides[self.flipped as usize]
    }

    pub fn presentation(&self) -> &Presentation {
        &self.side().presentation
    }

    pub fn opposite(&self) -> Algebra {
        Algebra {
            sides: Arc::clone(&self.sides),
            flipped: !self.flipped,
            seed: self.seed,
        }
    }

    pub fn is_opposite(&self) -> bool {
        self.flipped
    }

    /// Handles to the same algebra (or to each other's opposite) share storage.
    pub fn same_side(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.sides, &other.sides) && self.flipped == other.flipped
    }

    pub fn field(&self) -> PrimeField {
        self.presentation().field()
    }

    pub fn quiver(&self) -> &Quiver {
        self.presentation().quiver()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver().vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver().arrows().len()
    }

    pub fn dim(&self) -> usize {
        self.presentation().dim()
    }

    /// The indecomposable projective `P_v = e_v Λ`.
    pub fn projective(&self, v: usize) -> &Module {
        &self.side().projectives.get_or_init(|| {
            (0..self.vertex_count())
                .map(|w| Module::projective_from_paths(self, w))
                .collect()
        })[v]
    }

    /// The indecomposable injective `I_v = D(Λ e_v)`, realized as the dual of
    /// the projective of the opposite algebra at `v`.
    pub fn injective(&self, v: usize) -> Module {
        self.opposite().projective(v).dual()
    }

    pub fn simple(&self, v: usize) -> Module {
        Module::simple(self, v)
    }

    /// The right regular module `Λ_Λ = ⊕ P_v`.
    pub fn regular_module(&self) -> Module {
        let parts: Vec<&Module> = (0..self.vertex_count()).map(|v| self.projective(v)).collect();
        Module::direct_sum(self, &parts)
    }

    /// `DΛ = ⊕ I_v`.
    pub fn dual_regular_module(&self) -> Module {
        let parts: Vec<Module> = (0..self.vertex_count()).map(|v| self.injective(v)).collect();
        let refs: Vec<&Module> = parts.iter().collect();
        Module::direct_sum(self, &refs)
    }

    /// Which `P_v` are also injective.
    pub fn projective_is_injective(&self) -> &[bool] {
        self.side().projective_is_injective.get_or_init(|| {
            (0..self.vertex_count())
                .map(|v| crate::homology::is_injective(self, self.projective(v)))
                .collect()
        })
    }

    /// Which `I_v` are also projective.
    pub fn injective_is_projective(&self) -> Vec<bool> {
        self.opposite().projective_is_injective().to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn arrow(name: &str, s: usize, t: usize) -> Arrow {
        Arrow {
            name: name.into(),
            source: s,
            target: t,
        }
    }

    #[test]
    fn linear_a2_has_three_paths() {
        let q = Quiver::new(2, vec![arrow("a", 0, 1)]).unwrap();
        let p = Presentation::build(q, vec![], k(), 30).unwrap();
        assert_eq!(p.dim(), 3);
        assert!(p.basis().iter().any(|b| b.arrows == vec![0]));
    }

    #[test]
    fn loop_with_square_zero() {
        let q = Quiver::new(1, vec![arrow("x", 0, 0)]).unwrap();
        let r = Relation::new(vec![(1, vec![0, 0])]);
        let p = Presentation::build(q, vec![r], k(), 30).unwrap();
        assert_eq!(p.dim(), 2);
    }

    #[test]
    fn auslander_algebra_of_dual_numbers() {
        let q = Quiver::new(2, vec![arrow("a", 0, 1), arrow("b", 1, 0)]).unwrap();
        let r = Relation::new(vec![(1, vec![0, 1])]);
        let p = Presentation::build(q, vec![r], k(), 30).unwrap();
        let labels: Vec<String> = p.basis().iter().map(|b| b.label(p.quiver())).collect();
        assert_eq!(labels, vec!["e1", "e2", "a", "b", "b.a"]);
        let op = p.opposite().unwrap();
        assert_eq!(op.dim(), 5);
    }

    #[test]
    fn free_loop_is_not_admissible() {
        let q = Quiver::new(1, vec![arrow("x", 0, 0)]).unwrap();
        let err = Presentation::build(q, vec![], k(), 30).unwrap_err();
        assert!(matches!(err, Error::NotAdmissible(_)));
    }

    #[test]
    fn commutativity_relation_identifies_paths() {
        // 1 -a-> 2 -b-> 4, 1 -c-> 3 -d-> 4, a.b = c.d
        let q = Quiver::new(
            4,
            vec![arrow("a", 0, 1), arrow("b", 1, 3), arrow("c", 0, 2), arrow("d", 2, 3)],
        )
        .unwrap();
        let f = k();
        let r = Relation::new(vec![(1, vec![0, 1]), (f.neg(1), vec![2, 3])]);
        let p = Presentation::build(q, vec![r], f, 30).unwrap();
        assert_eq!(p.dim(), 4 + 4 + 1);
        let ab = p.normal_form(&Path {
            source: 0,
            target: 3,
            arrows: vec![0, 1],
        });
        let cd = p.normal_form(&Path {
            source: 0,
            target: 3,
            arrows: vec![2, 3],
        });
        assert_eq!(ab, cd);
    }

    #[test]
    fn rejects_bad_relations() {
        let q = Quiver::new(2, vec![arrow("a", 0, 1), arrow("b", 1, 0)]).unwrap();
        let short = Relation::new(vec![(1, vec![0])]);
        assert!(Presentation::build(q.clone(), vec![short], k(), 30).is_err());
        let not_parallel = Relation::new(vec![(1, vec![0, 1]), (1, vec![1, 0])]);
        assert!(Presentation::build(q.clone(), vec![not_parallel], k(), 30).is_err());
        let broken = Relation::new(vec![(1, vec![0, 0])]);
        assert!(Presentation::build(q, vec![broken], k(), 30).is_err());
    }

    #[test]
    fn double_opposite_restores_dimension() {
        let q = Quiver::new(2, vec![arrow("a", 0, 1), arrow("b", 1, 0)]).unwrap();
        let r = Relation::new(vec![(1, vec![0, 1])]);
        let alg = Algebra::build(q, vec![r], k(), 30).unwrap();
        let op = alg.opposite();
        assert_eq!(op.dim(), 5);
        assert_eq!(op.quiver().arrow(0).source, 1);
        assert!(op.opposite().same_side(&alg));
    }
}
