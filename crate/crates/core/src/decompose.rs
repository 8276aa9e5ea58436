//! Krull–Schmidt decomposition by Fitting splitting, and isomorphism tests.

use std::cmp::Ordering;

use rand::Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::hom::{end, hom, hom_dim, span_matrix, HomSpace};
use crate::homology::{socle_dims, top_dims};
use crate::linalg::Matrix;
use crate::module::{Module, Morphism};
use crate::poly::{is_power_of_linear, minimal_polynomial, roots};
use crate::Error;

pub const SPLIT_BUDGET: usize = 64;
pub const ISO_RANDOM_TRIES: usize = 16;
pub const ISO_EXHAUSTIVE_LIMIT: u64 = 4096;

const SALT_SPLIT: u64 = 0x51;
const SALT_ISO: u64 = 0x150;

/// Cheap isomorphism invariants, used for canonical ordering only.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fingerprint {
    pub dims: Vec<usize>,
    pub top: Vec<usize>,
    pub socle: Vec<usize>,
    pub end_dim: usize,
}

pub fn fingerprint(alg: &Algebra, m: &Module) -> Fingerprint {
    Fingerprint {
        dims: m.dims().to_vec(),
        top: top_dims(alg, m),
        socle: socle_dims(alg, m),
        end_dim: hom_dim(alg, m, m),
    }
}

/// Canonical order: total dimension, dimension vector, then fingerprint.
pub fn canonical_cmp(a: (&Module, &Fingerprint), b: (&Module, &Fingerprint)) -> Ordering {
    a.0.total_dim()
        .cmp(&b.0.total_dim())
        .then_with(|| a.0.dims().cmp(b.0.dims()))
        .then_with(|| a.1.cmp(b.1))
}

fn endo_from_flat(m: &Module, v: &[u32]) -> Morphism {
    let f = m.field();
    let mut off = 0;
    Morphism::new(
        m.dims()
            .iter()
            .map(|&d| {
                let block = Matrix::from_fn(f, d, d, |r, c| v[off + r * d + c]);
                off += d * d;
                block
            })
            .collect(),
    )
}

fn span_basis(m: &Module, morphisms: &[Morphism]) -> Vec<Morphism> {
    match span_matrix(morphisms) {
        None => Vec::new(),
        Some(mat) => {
            let space = mat.column_space();
            (0..space.cols())
                .map(|c| endo_from_flat(m, &space.column(c)))
                .collect()
        }
    }
}

fn single_eigenvalue(alg: &Algebra, phi: &Morphism) -> Option<u32> {
    let mu = minimal_polynomial(alg.field(), phi.maps());
    let rts = roots(alg.field(), &mu);
    match rts.as_slice() {
        [lambda] if is_power_of_linear(alg.field(), &mu, *lambda) => Some(*lambda),
        _ => None,
    }
}

/// If `End(M)` is local with residue field `F_p`, a basis of its radical.
///
/// Each basis endomorphism `b` must be `λ_b + nilpotent`; the span of the
/// `b - λ_b` must then be a nilpotent subspace, checked through its powers.
pub fn local_radical(alg: &Algebra, m: &Module, end_space: &HomSpace) -> Option<Vec<Morphism>> {
    if m.is_zero() {
        return None;
    }
    let id = Morphism::identity(m);
    let mut shifted = Vec::with_capacity(end_space.dim());
    for b in &end_space.basis {
        let lambda = single_eigenvalue(alg, b)?;
        shifted.push(b.sub(&id.scale(lambda)));
    }
    let rad = span_basis(m, &shifted);
    if rad.len() + 1 != end_space.dim() {
        return None;
    }
    let mut power = rad.clone();
    for _ in 0..=end_space.dim() {
        if power.is_empty() {
            return Some(rad);
        }
        let products: Vec<Morphism> = power
            .iter()
            .flat_map(|x| rad.iter().map(move |y| x.after(y)))
            .filter(|p| !p.is_zero())
            .collect();
        power = span_basis(m, &products);
    }
    None
}

/// Fitting decomposition along `φ - λ`: generalized kernel and image.
fn fitting_split(alg: &Algebra, m: &Module, phi: &Morphism, lambda: u32) -> [(Module, Morphism); 2] {
    let psi = phi.sub(&Morphism::identity(m).scale(lambda));
    let powers: Vec<Matrix> = psi
        .maps()
        .iter()
        .map(|p| p.pow(p.rows() as u32))
        .collect();
    let kernels: Vec<Matrix> = powers.iter().map(Matrix::kernel_basis).collect();
    let images: Vec<Matrix> = powers.iter().map(Matrix::column_space).collect();
    [m.submodule(alg, &kernels), m.submodule(alg, &images)]
}

enum Split {
    Indecomposable,
    Found(Box<[(Module, Morphism); 2]>),
}

fn try_split(alg: &Algebra, m: &Module) -> Result<Split, Error> {
    let end_space = end(alg, m);
    if end_space.dim() <= 1 {
        return Ok(Split::Indecomposable);
    }
    let mut root_free = false;
    let attempt = |phi: &Morphism, root_free: &mut bool| -> Option<[(Module, Morphism); 2]> {
        let mu = minimal_polynomial(alg.field(), phi.maps());
        let rts = roots(alg.field(), &mu);
        let Some(&lambda) = rts.first() else {
            *root_free = true;
            return None;
        };
        if is_power_of_linear(alg.field(), &mu, lambda) {
            return None;
        }
        Some(fitting_split(alg, m, phi, lambda))
    };
    for b in &end_space.basis {
        if let Some(parts) = attempt(b, &mut root_free) {
            return Ok(Split::Found(Box::new(parts)));
        }
    }
    if !root_free && local_radical(alg, m, &end_space).is_some() {
        return Ok(Split::Indecomposable);
    }
    let mut rng = crate::rng(alg, SALT_SPLIT);
    let p = alg.field().p();
    for _ in 0..SPLIT_BUDGET {
        let coeffs: Vec<u32> = (0..end_space.dim()).map(|_| rng.gen_range(0..p)).collect();
        let phi = Morphism::combination(&end_space.basis, &coeffs, m, m);
        if let Some(parts) = attempt(&phi, &mut root_free) {
            return Ok(Split::Found(Box::new(parts)));
        }
    }
    if root_free {
        Err(Error::NonSplitField)
    } else {
        Err(Error::Inconclusive(format!(
            "no splitting endomorphism found for module {}",
            m.dim_label()
        )))
    }
}

/// Whether `End(M)` is local (and split), i.e. `M` is indecomposable.
pub fn is_indecomposable(alg: &Algebra, m: &Module) -> Result<bool, Error> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(matches!(try_split(alg, m)?, Split::Indecomposable))
}

/// An indecomposable summand together with its inclusion into the module
/// that was decomposed.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: Morphism,
}

/// Indecomposable summands with inclusions, in canonical order, repeated
/// according to multiplicity.
pub fn summands(alg: &Algebra, m: &Module) -> Result<Vec<Summand>, Error> {
    let mut done = Vec::new();
    let mut stack = vec![Summand {
        module: m.clone(),
        inclusion: Morphism::identity(m),
    }];
    while let Some(s) = stack.pop() {
        if s.module.is_zero() {
            continue;
        }
        match try_split(alg, &s.module)? {
            Split::Indecomposable => done.push(s),
            Split::Found(parts) => {
                let [(a, ia), (b, ib)] = *parts;
                stack.push(Summand {
                    module: b,
                    inclusion: s.inclusion.after(&ib),
                });
                stack.push(Summand {
                    module: a,
                    inclusion: s.inclusion.after(&ia),
                });
            }
        }
    }
    let mut keyed: Vec<(Fingerprint, Summand)> = done
        .into_iter()
        .map(|s| (fingerprint(alg, &s.module), s))
        .collect();
    keyed.sort_by(|x, y| canonical_cmp((&x.1.module, &x.0), (&y.1.module, &y.0)));
    Ok(keyed.into_iter().map(|(_, s)| s).collect())
}

/// `M ≅ ⊕ X_i^{m_i}` with pairwise non-isomorphic indecomposables `X_i`, in
/// canonical order.
pub fn decompose(alg: &Algebra, m: &Module) -> Result<Vec<(Module, usize)>, Error> {
    let mut groups: Vec<(Module, usize)> = Vec::new();
    for s in summands(alg, m)? {
        match groups
            .iter_mut()
            .find(|(x, _)| is_isomorphic_indecomposable(alg, x, &s.module))
        {
            Some(g) => g.1 += 1,
            None => groups.push((s.module, 1)),
        }
    }
    Ok(groups)
}

/// Decisive test for an indecomposable `a`: `a ≅ b` iff some composite
/// `a -> b -> a` of basis maps is not nilpotent.
pub fn is_isomorphic_indecomposable(alg: &Algebra, a: &Module, b: &Module) -> bool {
    if a.dims() != b.dims() {
        return false;
    }
    if a.is_zero() {
        return true;
    }
    let there = hom(alg, a, b);
    if there.is_zero() {
        return false;
    }
    let back = hom(alg, b, a);
    there.basis.iter().any(|f| {
        back.basis
            .iter()
            .any(|g| !g.after(f).is_nilpotent_endomorphism())
    })
}

/// Whether some basis combination of `hom(a, b)` is invertible. Random
/// combinations first; exhaustive search when the space is small; otherwise
/// compare decompositions.
pub fn is_isomorphic(alg: &Algebra, a: &Module, b: &Module) -> Result<bool, Error> {
    if a.dims() != b.dims() {
        return Ok(false);
    }
    if a.is_zero() {
        return Ok(true);
    }
    if top_dims(alg, a) != top_dims(alg, b) || socle_dims(alg, a) != socle_dims(alg, b) {
        return Ok(false);
    }
    let h = hom(alg, a, b);
    let end_dim = hom_dim(alg, a, a);
    if h.dim() != end_dim || hom_dim(alg, b, b) != end_dim {
        return Ok(false);
    }
    let p = alg.field().p();
    let mut rng = crate::rng(alg, SALT_ISO);
    for _ in 0..ISO_RANDOM_TRIES {
        let coeffs: Vec<u32> = (0..h.dim()).map(|_| rng.gen_range(0..p)).collect();
        if Morphism::combination(&h.basis, &coeffs, a, b).is_isomorphism() {
            return Ok(true);
        }
    }
    let space = (p as u64).checked_pow(h.dim() as u32);
    if let Some(total) = space.filter(|&t| t <= ISO_EXHAUSTIVE_LIMIT) {
        let mut coeffs = vec![0u32; h.dim()];
        for mut code in 0..total {
            for c in coeffs.iter_mut() {
                *c = (code % p as u64) as u32;
                code /= p as u64;
            }
            if Morphism::combination(&h.basis, &coeffs, a, b).is_isomorphism() {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    let da = decompose(alg, a).map_err(|_| Error::InconclusiveIso)?;
    let db = decompose(alg, b).map_err(|_| Error::InconclusiveIso)?;
    if da.len() != db.len() {
        return Ok(false);
    }
    let mut used = vec![false; db.len()];
    for (x, k) in &da {
        let hit = db
            .iter()
            .enumerate()
            .position(|(j, (y, l))| !used[j] && l == k && is_isomorphic_indecomposable(alg, x, y));
        match hit {
            Some(j) => used[j] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Index of the first entry of `list` isomorphic to the indecomposable `m`.
pub fn find_indecomposable(alg: &Algebra, list: &[Module], m: &Module) -> Option<usize> {
    list.iter()
        .position(|x| is_isomorphic_indecomposable(alg, x, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Arrow, Quiver, Relation};
    use crate::linalg::PrimeField;

    fn a2() -> Algebra {
        let q = Quiver::new(2, vec![Arrow::new("a", 0, 1)]).unwrap();
        Algebra::build(q, vec![], PrimeField::new(101).unwrap(), 30).unwrap()
    }

    fn truncated_loop(n: usize, p: u32) -> Algebra {
        let q = Quiver::new(1, vec![Arrow::new("x", 0, 0)]).unwrap();
        let rel = Relation::new(vec![(1, vec![0; n])]);
        Algebra::build(q, vec![rel], PrimeField::new(p).unwrap(), 30).unwrap()
    }

    #[test]
    fn regular_module_of_a2_splits_into_projectives() {
        let alg = a2();
        let parts = decompose(&alg, &alg.regular_module()).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0.dims(), &[0, 1]);
        assert_eq!(parts[1].0.dims(), &[1, 1]);
        assert!(parts.iter().all(|(_, k)| *k == 1));
    }

    #[test]
    fn simple_squared_has_multiplicity_two() {
        let alg = a2();
        let s = alg.simple(0);
        let parts = decompose(&alg, &s.power(&alg, 2)).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, 2);
        assert!(is_isomorphic(&alg, &parts[0].0, &s).unwrap());
    }

    #[test]
    fn indecomposables_are_recognized() {
        let alg = truncated_loop(3, 101);
        for m in [alg.projective(0).clone(), alg.simple(0)] {
            assert!(is_indecomposable(&alg, &m).unwrap());
            assert_eq!(decompose(&alg, &m).unwrap().len(), 1);
        }
    }

    #[test]
    fn projective_and_injective_of_a2_agree() {
        let alg = a2();
        assert!(is_isomorphic(&alg, alg.projective(0), &alg.injective(1)).unwrap());
        assert!(!is_isomorphic(&alg, &alg.simple(0), &alg.simple(1)).unwrap());
        assert!(is_isomorphic(&alg, &alg.simple(0), &alg.simple(0)).unwrap());
    }

    #[test]
    fn small_prime_uses_exhaustive_search() {
        let alg = truncated_loop(2, 2);
        let m = alg.regular_module();
        assert!(is_isomorphic(&alg, &m, &alg.injective(0)).unwrap());
        let s2 = alg.simple(0).power(&alg, 2);
        assert!(!is_isomorphic(&alg, &m, &s2).unwrap());
    }

    #[test]
    fn local_radical_of_projective_over_truncated_loop() {
        let alg = truncated_loop(3, 5);
        let p = alg.projective(0);
        let rad = local_radical(&alg, p, &end(&alg, p)).unwrap();
        assert_eq!(rad.len(), 2);
        let sum = Module::direct_sum(&alg, &[p, &alg.simple(0)]);
        assert!(local_radical(&alg, &sum, &end(&alg, &sum)).is_none());
    }
}
