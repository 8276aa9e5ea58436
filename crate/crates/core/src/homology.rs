//! Radicals, covers, syzygies and the homological dimensions pd, id, gl.dim
//! and domdim.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::Algebra;
use crate::decompose::is_isomorphic;
use crate::linalg::Matrix;
use crate::module::{from_projective, DirectSum, Module, Morphism};
use crate::Error;

pub const DEFAULT_RESOLUTION_CAP: usize = 24;
pub const DEFAULT_DOMDIM_CAP: usize = 8;

/// A projective or injective dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomDim {
    Finite(usize),
    /// Certified by a repeating syzygy (or cosyzygy).
    Infinite,
    /// The walk hit its cap before deciding.
    Exceeded(usize),
}

impl HomDim {
    /// `Some(self <= k)`, or `None` when the value is undecided.
    pub fn at_most(self, k: usize) -> Option<bool> {
        match self {
            HomDim::Finite(n) => Some(n <= k),
            HomDim::Infinite => Some(false),
            // exceeding a cap at least k means the value is larger than k
            HomDim::Exceeded(cap) if cap >= k => Some(false),
            HomDim::Exceeded(_) => None,
        }
    }

    pub fn at_least(self, k: usize) -> Option<bool> {
        self.at_most(k.saturating_sub(1)).map(|b| !b || k == 0)
    }

    pub fn is_decided(self) -> bool {
        !matches!(self, HomDim::Exceeded(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn succ(self) -> HomDim {
        match self {
            HomDim::Finite(n) => HomDim::Finite(n + 1),
            other => other,
        }
    }

    /// Maximum, with a certified infinity winning over an undecided value.
    pub fn max(self, other: HomDim) -> HomDim {
        use HomDim::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Exceeded(a), Exceeded(b)) => Exceeded(a.max(b)),
            (Exceeded(a), _) | (_, Exceeded(a)) => Exceeded(a),
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        }
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::Finite(n) => write!(f, "{n}"),
            HomDim::Infinite => write!(f, "inf"),
            HomDim::Exceeded(cap) => write!(f, ">{cap}?"),
        }
    }
}

impl Serialize for HomDim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn incoming_images(alg: &Algebra, m: &Module, v: usize) -> Matrix {
    let f = alg.field();
    let parts: Vec<Matrix> = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.target == v)
        .map(|(ai, _)| m.map(ai).clone())
        .collect();
    Matrix::hstack_all(f, m.dim_at(v), &parts)
}

fn outgoing_maps(alg: &Algebra, m: &Module, v: usize) -> Matrix {
    let f = alg.field();
    let parts: Vec<Matrix> = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.source == v)
        .map(|(ai, _)| m.map(ai).clone())
        .collect();
    Matrix::vstack_all(f, m.dim_at(v), &parts)
}

fn radical_spaces(alg: &Algebra, m: &Module) -> Vec<Matrix> {
    (0..alg.vertex_count())
        .map(|v| incoming_images(alg, m, v).column_space())
        .collect()
}

fn socle_spaces(alg: &Algebra, m: &Module) -> Vec<Matrix> {
    (0..alg.vertex_count())
        .map(|v| outgoing_maps(alg, m, v).kernel_basis())
        .collect()
}

/// `rad M`, the sum of the images of all arrow maps, with its inclusion.
pub fn radical(alg: &Algebra, m: &Module) -> (Module, Morphism) {
    m.submodule(alg, &radical_spaces(alg, m))
}

/// `soc M`, the joint kernel of all arrow maps, with its inclusion.
pub fn socle(alg: &Algebra, m: &Module) -> (Module, Morphism) {
    m.submodule(alg, &socle_spaces(alg, m))
}

/// `top M = M / rad M` with the projection.
pub fn top(alg: &Algebra, m: &Module) -> (Module, Morphism) {
    m.quotient(alg, &radical_spaces(alg, m))
}

/// Multiplicity of each simple in `top M`.
pub fn top_dims(alg: &Algebra, m: &Module) -> Vec<usize> {
    (0..alg.vertex_count())
        .map(|v| m.dim_at(v) - incoming_images(alg, m, v).rank())
        .collect()
}

/// Multiplicity of each simple in `soc M`.
pub fn socle_dims(alg: &Algebra, m: &Module) -> Vec<usize> {
    (0..alg.vertex_count())
        .map(|v| m.dim_at(v) - outgoing_maps(alg, m, v).rank())
        .collect()
}

/// Projective cover `⊕ P_v -> M`, one copy of `P_v` per top multiplicity.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub sum: DirectSum,
    /// Vertex of each summand, in summand order.
    pub vertices: Vec<usize>,
    pub epi: Morphism,
}

impl ProjectiveCover {
    pub fn module(&self) -> &Module {
        &self.sum.module
    }

    /// Position of the generator `e_v` of summand `i` inside `P_v`'s vertex space.
    pub fn generator_position(&self, i: usize) -> usize {
        // the trivial path is first among the paths v -> v
        self.sum.offsets[i][self.vertices[i]]
    }
}

pub fn projective_cover(alg: &Algebra, m: &Module) -> ProjectiveCover {
    let mut vertices = Vec::new();
    let mut components = Vec::new();
    for v in 0..alg.vertex_count() {
        if m.dim_at(v) == 0 {
            continue;
        }
        let rad = incoming_images(alg, m, v).column_space();
        let lifts = rad.cokernel_projection().right_inverse();
        for j in 0..lifts.cols() {
            vertices.push(v);
            components.push(from_projective(alg, v, m, &lifts.column(j)));
        }
    }
    let parts: Vec<&Module> = vertices.iter().map(|&v| alg.projective(v)).collect();
    let sum = DirectSum::new(alg, &parts);
    let epi = sum.out_of(m, &components);
    debug_assert!(epi.is_surjective());
    debug_assert!(
        {
            let kernel: Vec<Matrix> = epi.maps().iter().map(Matrix::kernel_basis).collect();
            let rad = radical_spaces(alg, &sum.module);
            kernel
                .iter()
                .zip(&rad)
                .all(|(k, r)| r.column_span_contains(k))
        },
        "projective cover is not minimal"
    );
    ProjectiveCover {
        sum,
        vertices,
        epi,
    }
}

/// Injective envelope `M -> ⊕ I_v`, one copy of `I_v` per socle multiplicity.
#[derive(Clone, Debug)]
pub struct InjectiveEnvelope {
    pub module: Module,
    pub vertices: Vec<usize>,
    pub mono: Morphism,
}

pub fn injective_envelope(alg: &Algebra, m: &Module) -> InjectiveEnvelope {
    let op = alg.opposite();
    let cover = projective_cover(&op, &m.dual());
    let envelope = InjectiveEnvelope {
        module: cover.sum.module.dual(),
        vertices: cover.vertices,
        mono: cover.epi.dual(),
    };
    debug_assert!(envelope.mono.is_homomorphism(alg, m, &envelope.module));
    envelope
}

/// `ΩM` with its inclusion into the projective cover.
pub fn syzygy_with_inclusion(alg: &Algebra, m: &Module) -> (Module, Morphism, ProjectiveCover) {
    let cover = projective_cover(alg, m);
    let (k, incl) = cover.epi.kernel(alg, &cover.sum.module);
    (k, incl, cover)
}

pub fn syzygy(alg: &Algebra, m: &Module) -> Module {
    syzygy_with_inclusion(alg, m).0
}

pub fn cosyzygy(alg: &Algebra, m: &Module) -> Module {
    let env = injective_envelope(alg, m);
    env.mono.cokernel(alg, &env.module).0
}

pub fn is_projective(alg: &Algebra, m: &Module) -> bool {
    let covered: usize = top_dims(alg, m)
        .iter()
        .enumerate()
        .map(|(v, &k)| k * alg.projective(v).total_dim())
        .sum();
    covered == m.total_dim()
}

pub fn is_injective(alg: &Algebra, m: &Module) -> bool {
    let op = alg.opposite();
    let covered: usize = socle_dims(alg, m)
        .iter()
        .enumerate()
        .map(|(v, &k)| k * op.projective(v).total_dim())
        .sum();
    covered == m.total_dim()
}

/// Projective dimension by iterated syzygies. A syzygy isomorphic to an
/// earlier nonzero one certifies an infinite value.
pub fn pd(alg: &Algebra, m: &Module, cap: usize) -> Result<HomDim, Error> {
    if m.is_zero() {
        return Ok(HomDim::Finite(0));
    }
    let mut seen: Vec<Module> = Vec::new();
    let mut current = m.clone();
    for i in 0..=cap {
        if is_projective(alg, &current) {
            return Ok(HomDim::Finite(i));
        }
        for earlier in &seen {
            if earlier.dims() == current.dims() && is_isomorphic(alg, earlier, &current)? {
                return Ok(HomDim::Infinite);
            }
        }
        let next = syzygy(alg, &current);
        seen.push(current);
        current = next;
    }
    Ok(HomDim::Exceeded(cap))
}

/// Injective dimension, as the projective dimension of the dual over the
/// opposite algebra.
pub fn id(alg: &Algebra, m: &Module, cap: usize) -> Result<HomDim, Error> {
    pd(&alg.opposite(), &m.dual(), cap)
}

/// Global dimension via `1 + max pd(rad P_v)`, cross-checked against
/// `max pd(S_v)` whenever both are finite.
pub fn gldim(alg: &Algebra, cap: usize) -> Result<HomDim, Error> {
    let mut via_radicals: Option<HomDim> = None;
    for v in 0..alg.vertex_count() {
        let (rad, _) = radical(alg, alg.projective(v));
        if rad.is_zero() {
            continue;
        }
        let d = pd(alg, &rad, cap)?.succ();
        via_radicals = Some(via_radicals.map_or(d, |acc| acc.max(d)));
    }
    let result = via_radicals.unwrap_or(HomDim::Finite(0));
    if let HomDim::Finite(g) = result {
        let mut via_simples = 0;
        for v in 0..alg.vertex_count() {
            match pd(alg, &alg.simple(v), cap)? {
                HomDim::Finite(d) => via_simples = via_simples.max(d),
                other => {
                    return Err(Error::CrossCheckMismatch(format!(
                        "gl.dim {g} from radicals but pd(S_{}) = {other}",
                        v + 1
                    )))
                }
            }
        }
        if via_simples != g {
            return Err(Error::CrossCheckMismatch(format!(
                "gl.dim {g} from radicals but {via_simples} from simples"
            )));
        }
    }
    Ok(result)
}

pub fn is_selfinjective(alg: &Algebra) -> bool {
    alg.projective_is_injective().iter().all(|&b| b)
}

/// Number of leading projective terms in the minimal injective coresolution
/// of `Λ_Λ`.
pub fn domdim(alg: &Algebra, cap: usize) -> Result<HomDim, Error> {
    if is_selfinjective(alg) {
        return Ok(HomDim::Infinite);
    }
    let inj_proj = alg.injective_is_projective();
    let mut seen: Vec<Module> = Vec::new();
    let mut current = alg.regular_module();
    for n in 0..=cap {
        if current.is_zero() {
            return Ok(HomDim::Infinite);
        }
        let soc = socle_dims(alg, &current);
        if soc.iter().enumerate().any(|(v, &k)| k > 0 && !inj_proj[v]) {
            return Ok(HomDim::Finite(n));
        }
        for earlier in &seen {
            if earlier.dims() == current.dims() && is_isomorphic(alg, earlier, &current)? {
                return Ok(HomDim::Infinite);
            }
        }
        let next = cosyzygy(alg, &current);
        seen.push(current);
        current = next;
    }
    Ok(HomDim::Exceeded(cap))
}

/// `(id Λ_Λ, pd DΛ)`.
pub fn gorenstein_data(alg: &Algebra, cap: usize) -> Result<(HomDim, HomDim), Error> {
    let mut id_reg = HomDim::Finite(0);
    for v in 0..alg.vertex_count() {
        id_reg = id_reg.max(id(alg, alg.projective(v), cap)?);
    }
    let mut pd_dual = HomDim::Finite(0);
    for v in 0..alg.vertex_count() {
        pd_dual = pd_dual.max(pd(alg, &alg.injective(v), cap)?);
    }
    Ok((id_reg, pd_dual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::is_isomorphic;
    use crate::examples::*;

    #[test]
    fn homdim_comparisons() {
        assert_eq!(HomDim::Finite(1).at_most(1), Some(true));
        assert_eq!(HomDim::Infinite.at_most(5), Some(false));
        assert_eq!(HomDim::Exceeded(24).at_most(2), Some(false));
        assert_eq!(HomDim::Exceeded(1).at_most(2), None);
        assert_eq!(HomDim::Finite(2).at_least(2), Some(true));
        assert_eq!(HomDim::Infinite.at_least(2), Some(true));
        assert_eq!(HomDim::Finite(1).at_least(2), Some(false));
        assert_eq!(HomDim::Finite(0).at_least(0), Some(true));
        assert_eq!(HomDim::Finite(3).max(HomDim::Infinite), HomDim::Infinite);
        assert_eq!(HomDim::Exceeded(4).max(HomDim::Finite(9)), HomDim::Exceeded(4));
        assert_eq!(HomDim::Infinite.to_string(), "inf");
    }

    #[test]
    fn radicals_and_socles_over_a2() {
        let alg = linear_a(101, 2);
        assert!(radical(&alg, &alg.simple(0)).0.is_zero());
        let p1 = alg.projective(0);
        assert_eq!(radical(&alg, p1).0.dims(), &[0, 1]);
        assert_eq!(socle(&alg, p1).0.dims(), &[0, 1]);
        assert_eq!(top(&alg, p1).0.dims(), &[1, 0]);
    }

    #[test]
    fn covers_and_envelopes_over_a2() {
        let alg = linear_a(101, 2);
        let cover = projective_cover(&alg, &alg.simple(0));
        assert_eq!(cover.vertices, vec![0]);
        assert_eq!(cover.module().dims(), &[1, 1]);
        let cover = projective_cover(&alg, alg.projective(1));
        assert!(cover.epi.is_isomorphism());
        let env = injective_envelope(&alg, &alg.simple(1));
        assert_eq!(env.vertices, vec![1]);
        assert!(env.mono.is_injective());
        assert!(is_isomorphic(&alg, &env.module, alg.projective(0)).unwrap());
        assert!(projective_cover(&alg, &Module::zero(&alg)).vertices.is_empty());
    }

    #[test]
    fn syzygies_over_a2() {
        let alg = linear_a(101, 2);
        assert!(syzygy(&alg, alg.projective(0)).is_zero());
        assert!(is_isomorphic(&alg, &syzygy(&alg, &alg.simple(0)), &alg.simple(1)).unwrap());
        assert!(is_isomorphic(&alg, &cosyzygy(&alg, alg.projective(1)), &alg.simple(0)).unwrap());
    }

    #[test]
    fn projective_dimensions() {
        let alg = linear_a(101, 2);
        assert_eq!(pd(&alg, alg.projective(0), 24).unwrap(), HomDim::Finite(0));
        assert_eq!(pd(&alg, &alg.simple(0), 24).unwrap(), HomDim::Finite(1));
        assert_eq!(id(&alg, &alg.simple(1), 24).unwrap(), HomDim::Finite(1));
        let dual = truncated_polynomial(101, 2);
        assert_eq!(pd(&dual, &dual.simple(0), 24).unwrap(), HomDim::Infinite);
        assert_eq!(pd(&dual, &dual.simple(0), 0).unwrap(), HomDim::Exceeded(0));
    }

    #[test]
    fn global_dimensions() {
        assert_eq!(gldim(&semisimple(101), 24).unwrap(), HomDim::Finite(0));
        assert_eq!(gldim(&linear_a(101, 2), 24).unwrap(), HomDim::Finite(1));
        assert_eq!(gldim(&linear_a(101, 4), 24).unwrap(), HomDim::Finite(1));
        assert_eq!(gldim(&truncated_polynomial(101, 2), 24).unwrap(), HomDim::Infinite);
        assert_eq!(gldim(&auslander_dual_numbers(101), 24).unwrap(), HomDim::Finite(2));
        assert_eq!(gldim(&auslander_truncated_cubic(101), 24).unwrap(), HomDim::Finite(2));
        assert_eq!(gldim(&linear_nakayama_rad2(101, 3), 24).unwrap(), HomDim::Finite(2));
    }

    #[test]
    fn dominant_dimensions() {
        assert_eq!(domdim(&truncated_polynomial(101, 2), 8).unwrap(), HomDim::Infinite);
        assert_eq!(domdim(&linear_a(101, 2), 8).unwrap(), HomDim::Finite(1));
        assert_eq!(domdim(&auslander_dual_numbers(101), 8).unwrap(), HomDim::Finite(2));
        assert_eq!(domdim(&auslander_truncated_cubic(101), 8).unwrap(), HomDim::Finite(2));
        assert_eq!(domdim(&commutative_square(101), 8).unwrap(), HomDim::Finite(1));
        assert_eq!(domdim(&semisimple(101), 8).unwrap(), HomDim::Infinite);
    }

    #[test]
    fn selfinjectivity_and_gorenstein_data() {
        assert!(is_selfinjective(&truncated_polynomial(101, 2)));
        assert!(is_selfinjective(&cyclic_nakayama_rad2(101, 3)));
        assert!(!is_selfinjective(&linear_a(101, 2)));
        let (id_reg, pd_dual) = gorenstein_data(&auslander_dual_numbers(101), 24).unwrap();
        assert_eq!(id_reg, HomDim::Finite(2));
        assert_eq!(pd_dual, HomDim::Finite(2));
    }
}
