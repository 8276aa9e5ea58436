//! Hom and Ext¹ spaces between modules, and Gen/Cogen membership.

use crate::algebra::{Algebra, Path};
use crate::homology::projective_cover;
use crate::linalg::Matrix;
use crate::module::{from_projective, Module, Morphism};
use crate::Error;

/// A basis of `Hom_Λ(M, N)`, canonical given the two modules.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<Morphism>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
}

/// Offsets of the unknown vertex maps `f_v` inside the flattened vector.
fn vertex_layout(source: &Module, target: &Module) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(source.dims().len());
    let mut total = 0;
    for (s, t) in source.dims().iter().zip(target.dims()) {
        offsets.push(total);
        total += s * t;
    }
    (offsets, total)
}

/// Linear system whose null space is `Hom(M, N)`: for every arrow `a: v -> w`,
/// `N(a) f_v - f_w M(a) = 0`.
fn intertwining_system(alg: &Algebra, source: &Module, target: &Module) -> (Matrix, Vec<usize>) {
    let f = alg.field();
    let (offsets, unknowns) = vertex_layout(source, target);
    let rows: usize = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| target.dim_at(a.target) * source.dim_at(a.source))
        .sum();
    let mut sys = Matrix::zeros(f, rows, unknowns);
    let mut row0 = 0;
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let (v, w) = (a.source, a.target);
        let (mv, mw) = (source.dim_at(v), source.dim_at(w));
        let (nv, nw) = (target.dim_at(v), target.dim_at(w));
        let na = target.map(ai);
        let ma = source.map(ai);
        // equation (i, j), i < nw, j < mv
        for i in 0..nw {
            for j in 0..mv {
                let r = row0 + i * mv + j;
                for k in 0..nv {
                    let c = na.get(i, k);
                    if c != 0 {
                        let col = offsets[v] + k * mv + j;
                        sys.set(r, col, f.add(sys.get(r, col), c));
                    }
                }
                for k in 0..mw {
                    let c = ma.get(k, j);
                    if c != 0 {
                        let col = offsets[w] + i * mw + k;
                        sys.set(r, col, f.sub(sys.get(r, col), c));
                    }
                }
            }
        }
        row0 += nw * mv;
    }
    (sys, offsets)
}

fn unflatten(source: &Module, target: &Module, offsets: &[usize], v: &[u32]) -> Morphism {
    let f = source.field();
    Morphism::new(
        (0..source.dims().len())
            .map(|x| {
                let (s, t) = (source.dim_at(x), target.dim_at(x));
                Matrix::from_fn(f, t, s, |r, c| v[offsets[x] + r * s + c])
            })
            .collect(),
    )
}

pub fn hom(alg: &Algebra, source: &Module, target: &Module) -> HomSpace {
    let (sys, offsets) = intertwining_system(alg, source, target);
    let kernel = sys.kernel_basis();
    HomSpace {
        basis: (0..kernel.cols())
            .map(|c| unflatten(source, target, &offsets, &kernel.column(c)))
            .collect(),
    }
}

pub fn hom_dim(alg: &Algebra, source: &Module, target: &Module) -> usize {
    if source.is_zero() || target.is_zero() {
        return 0;
    }
    let (sys, _) = intertwining_system(alg, source, target);
    sys.cols() - sys.rank()
}

pub fn end(alg: &Algebra, m: &Module) -> HomSpace {
    hom(alg, m, m)
}

/// Dimension of the span of a family of morphisms, as flattened vectors.
pub(crate) fn span_dim(morphisms: &[Morphism]) -> usize {
    span_matrix(morphisms).map_or(0, |m| m.rank())
}

/// Flattened morphisms as the columns of one matrix.
pub(crate) fn span_matrix(morphisms: &[Morphism]) -> Option<Matrix> {
    let first = morphisms.first()?;
    let f = first.maps().first().map(|m| m.field())?;
    let cols: Vec<Vec<u32>> = morphisms.iter().map(Morphism::flatten).collect();
    Some(Matrix::from_columns(f, cols[0].len(), &cols))
}

/// `M ∈ Cogen T`: the joint kernel of all maps `M -> T` is zero.
pub fn in_cogen(alg: &Algebra, m: &Module, t: &Module) -> bool {
    if m.is_zero() {
        return true;
    }
    let h = hom(alg, m, t);
    (0..m.dims().len()).all(|v| {
        let d = m.dim_at(v);
        if d == 0 {
            return true;
        }
        let blocks: Vec<Matrix> = h.basis.iter().map(|g| g.at(v).clone()).collect();
        Matrix::vstack_all(alg.field(), d, &blocks).rank() == d
    })
}

/// `M ∈ Gen T`: the images of all maps `T -> M` together span `M`.
pub fn in_gen(alg: &Algebra, m: &Module, t: &Module) -> bool {
    if m.is_zero() {
        return true;
    }
    let h = hom(alg, t, m);
    (0..m.dims().len()).all(|v| {
        let d = m.dim_at(v);
        if d == 0 {
            return true;
        }
        let blocks: Vec<Matrix> = h.basis.iter().map(|g| g.at(v).clone()).collect();
        Matrix::hstack_all(alg.field(), d, &blocks).rank() == d
    })
}

/// A monomorphism `M -> T^d` built from a basis of `Hom(M, T)`, when `M ∈ Cogen T`.
pub fn cogen_embedding(alg: &Algebra, m: &Module, t: &Module) -> Option<(Module, Morphism)> {
    let h = hom(alg, m, t);
    let power = t.power(alg, h.dim());
    let maps = (0..m.dims().len())
        .map(|v| {
            let blocks: Vec<Matrix> = h.basis.iter().map(|g| g.at(v).clone()).collect();
            Matrix::vstack_all(alg.field(), m.dim_at(v), &blocks)
        })
        .collect();
    let emb = Morphism::new(maps);
    emb.is_injective().then_some((power, emb))
}

/// `Ext¹_Λ(M, N)` with cocycle witnesses.
///
/// An extension `0 -> N -> E -> M -> 0` of representations has
/// `E(a) = [[N(a), c_a], [0, M(a)]]`; the cocycles `c` are the solutions of the
/// linearized relations, and coboundaries come from `⊕_v Hom_k(M_v, N_v)`.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    dim: usize,
    /// One cocycle per basis class; each holds one block `c_a` per arrow.
    cocycles: Vec<Vec<Matrix>>,
}

/// A short exact sequence `0 -> left -> middle -> right -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub left: Module,
    pub middle: Module,
    pub right: Module,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

impl ExtSpace {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn cocycles(&self) -> &[Vec<Matrix>] {
        &self.cocycles
    }

    /// The extension with class `Σ coeffs[i] * basis[i]`.
    pub fn extension(&self, alg: &Algebra, source: &Module, target: &Module, coeffs: &[u32]) -> ShortExact {
        let f = alg.field();
        let blocks: Vec<Matrix> = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut acc = Matrix::zeros(f, target.dim_at(a.target), source.dim_at(a.source));
                for (k, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        acc = acc.add(&self.cocycles[k][ai].scale(c));
                    }
                }
                acc
            })
            .collect();
        extension_from_cocycle(alg, source, target, &blocks)
    }
}

/// Middle term `E` for the cocycle `blocks` (one `N_w x M_v` block per arrow).
pub fn extension_from_cocycle(alg: &Algebra, source: &Module, target: &Module, blocks: &[Matrix]) -> ShortExact {
    let f = alg.field();
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| target.dim_at(v) + source.dim_at(v)).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let (v, w) = (a.source, a.target);
            let mut m = Matrix::zeros(f, dims[w], dims[v]);
            m.set_block(0, 0, target.map(ai));
            m.set_block(0, target.dim_at(v), &blocks[ai]);
            m.set_block(target.dim_at(w), target.dim_at(v), source.map(ai));
            m
        })
        .collect();
    let middle = Module::from_parts(alg, dims, maps);
    let inclusion = Morphism::new(
        (0..n)
            .map(|v| {
                let mut m = Matrix::zeros(f, target.dim_at(v) + source.dim_at(v), target.dim_at(v));
                m.set_block(0, 0, &Matrix::identity(f, target.dim_at(v)));
                m
            })
            .collect(),
    );
    let projection = Morphism::new(
        (0..n)
            .map(|v| {
                let mut m = Matrix::zeros(f, source.dim_at(v), target.dim_at(v) + source.dim_at(v));
                m.set_block(0, target.dim_at(v), &Matrix::identity(f, source.dim_at(v)));
                m
            })
            .collect(),
    );
    ShortExact {
        left: target.clone(),
        middle,
        right: source.clone(),
        inclusion,
        projection,
    }
}

pub(crate) struct CocycleLayout {
    pub offsets: Vec<usize>,
    pub len: usize,
}

pub(crate) fn cocycle_layout(alg: &Algebra, source: &Module, target: &Module) -> CocycleLayout {
    let mut offsets = Vec::new();
    let mut len = 0;
    for a in alg.quiver().arrows() {
        offsets.push(len);
        len += target.dim_at(a.target) * source.dim_at(a.source);
    }
    CocycleLayout { offsets, len }
}

pub(crate) fn cocycle_blocks(alg: &Algebra, source: &Module, target: &Module, layout: &CocycleLayout, v: &[u32]) -> Vec<Matrix> {
    let f = alg.field();
    alg.quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let (r, c) = (target.dim_at(a.target), source.dim_at(a.source));
            Matrix::from_fn(f, r, c, |i, j| v[layout.offsets[ai] + i * c + j])
        })
        .collect()
}

/// Cocycle space `Z` (columns) and a spanning set of coboundaries `B` (columns).
pub(crate) fn cocycles_and_coboundaries(alg: &Algebra, source: &Module, target: &Module) -> (CocycleLayout, Matrix, Matrix) {
    let f = alg.field();
    let quiver = alg.quiver();
    let layout = cocycle_layout(alg, source, target);

    // linearized relations
    let mut eq_rows: Vec<Vec<u32>> = Vec::new();
    for rel in alg.presentation().relations() {
        let first = &rel.terms[0].1;
        let s = quiver.arrow(first[0]).source;
        let t = quiver.arrow(*first.last().unwrap()).target;
        let (rows, cols) = (target.dim_at(t), source.dim_at(s));
        let mut block = vec![vec![0u32; layout.len]; rows * cols];
        for (coef, path) in &rel.terms {
            for (i, &ai) in path.iter().enumerate() {
                let a = quiver.arrow(ai);
                let suffix = Path {
                    source: a.target,
                    target: t,
                    arrows: path[i + 1..].to_vec(),
                };
                let prefix = Path {
                    source: s,
                    target: a.source,
                    arrows: path[..i].to_vec(),
                };
                let left = target.path_action(&suffix);
                let right = source.path_action(&prefix);
                let (cr, cc) = (target.dim_at(a.target), source.dim_at(a.source));
                for r in 0..rows {
                    for c in 0..cols {
                        let eq = &mut block[r * cols + c];
                        for x in 0..cr {
                            let l = left.get(r, x);
                            if l == 0 {
                                continue;
                            }
                            for y in 0..cc {
                                let rr = right.get(y, c);
                                if rr == 0 {
                                    continue;
                                }
                                let idx = layout.offsets[ai] + x * cc + y;
                                eq[idx] = f.add(eq[idx], f.mul(*coef, f.mul(l, rr)));
                            }
                        }
                    }
                }
            }
        }
        eq_rows.extend(block);
    }
    let z = if eq_rows.is_empty() {
        Matrix::identity(f, layout.len)
    } else {
        Matrix::from_fn(f, eq_rows.len(), layout.len, |r, c| eq_rows[r][c]).kernel_basis()
    };

    // coboundaries: h ↦ (N(a) h_v - h_w M(a))_a
    let (h_offsets, h_len) = vertex_layout(source, target);
    let mut bmap = Matrix::zeros(f, layout.len, h_len);
    for (ai, a) in quiver.arrows().iter().enumerate() {
        let (v, w) = (a.source, a.target);
        let (mv, mw) = (source.dim_at(v), source.dim_at(w));
        let (nv, nw) = (target.dim_at(v), target.dim_at(w));
        let (na, ma) = (target.map(ai), source.map(ai));
        for i in 0..nw {
            for j in 0..mv {
                let r = layout.offsets[ai] + i * mv + j;
                for k in 0..nv {
                    let c = na.get(i, k);
                    if c != 0 {
                        let col = h_offsets[v] + k * mv + j;
                        bmap.set(r, col, f.add(bmap.get(r, col), c));
                    }
                }
                for k in 0..mw {
                    let c = ma.get(k, j);
                    if c != 0 {
                        let col = h_offsets[w] + i * mw + k;
                        bmap.set(r, col, f.sub(bmap.get(r, col), c));
                    }
                }
            }
        }
    }
    (layout, z, bmap.column_space())
}

/// `Ext¹(M, N)` computed from cocycles; the class representatives complement
/// the coboundaries inside the cocycles.
pub fn ext1_cocycles(alg: &Algebra, source: &Module, target: &Module) -> ExtSpace {
    let (layout, z, b) = cocycles_and_coboundaries(alg, source, target);
    let stacked = b.hstack(&z);
    let pivots = stacked.rref().pivots;
    let cocycles: Vec<Vec<Matrix>> = pivots
        .iter()
        .filter(|&&p| p >= b.cols())
        .map(|&p| cocycle_blocks(alg, source, target, &layout, &stacked.column(p)))
        .collect();
    ExtSpace {
        dim: cocycles.len(),
        cocycles,
    }
}

/// `dim Ext¹(M, N) = dim Hom(ΩM, N) - dim(image of Hom(P(M), N) -> Hom(ΩM, N))`.
pub fn ext1_dim(alg: &Algebra, source: &Module, target: &Module) -> usize {
    if source.is_zero() || target.is_zero() {
        return 0;
    }
    let cover = projective_cover(alg, source);
    let (omega, incl) = cover.epi.kernel(alg, &cover.sum.module);
    if omega.is_zero() {
        return 0;
    }
    let h = hom_dim(alg, &omega, target);
    if h == 0 {
        return 0;
    }
    let f = alg.field();
    let mut restricted = Vec::new();
    for (i, &v) in cover.vertices.iter().enumerate() {
        let proj = cover.sum.projection(i);
        for k in 0..target.dim_at(v) {
            let mut e = vec![0u32; target.dim_at(v)];
            e[k] = 1 % f.p();
            let g = from_projective(alg, v, target, &e).after(&proj);
            restricted.push(g.after(&incl));
        }
    }
    h - span_dim(&restricted)
}

/// Both routes; their dimensions must agree.
pub fn ext1(alg: &Algebra, source: &Module, target: &Module) -> Result<ExtSpace, Error> {
    let space = ext1_cocycles(alg, source, target);
    let d = ext1_dim(alg, source, target);
    if space.dim() != d {
        return Err(Error::CrossCheckMismatch(format!(
            "Ext¹({}, {}) has dimension {} from cocycles but {d} from a presentation",
            source.dim_label(),
            target.dim_label(),
            space.dim()
        )));
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{auslander_dual_numbers, linear_a, truncated_polynomial};

    #[test]
    fn hom_examples_over_a2() {
        let alg = linear_a(101, 2);
        let (s1, s2) = (alg.simple(0), alg.simple(1));
        assert_eq!(hom(&alg, &s1, &s1).dim(), 1);
        assert_eq!(hom(&alg, &s1, &s2).dim(), 0);
        assert_eq!(hom(&alg, alg.projective(0), alg.projective(1)).dim(), 0);
        assert_eq!(hom(&alg, alg.projective(1), alg.projective(0)).dim(), 1);
        for b in &hom(&alg, alg.projective(1), alg.projective(0)).basis {
            assert!(b.is_homomorphism(&alg, alg.projective(1), alg.projective(0)));
        }
    }

    #[test]
    fn ext_examples_over_a2() {
        let alg = linear_a(101, 2);
        let (s1, s2) = (alg.simple(0), alg.simple(1));
        assert_eq!(ext1(&alg, &s1, &s2).unwrap().dim(), 1);
        assert_eq!(ext1(&alg, &s2, &s1).unwrap().dim(), 0);
        assert_eq!(ext1(&alg, alg.projective(0), &s2).unwrap().dim(), 0);
        let ext = ext1(&alg, &s1, &s2).unwrap();
        let ses = ext.extension(&alg, &s1, &s2, &[1]);
        assert_eq!(ses.middle.dims(), &[1, 1]);
        assert!(!ses.middle.map(0).is_zero());
        assert!(ses.inclusion.is_homomorphism(&alg, &s2, &ses.middle));
        assert!(ses.projection.is_homomorphism(&alg, &ses.middle, &s1));
    }

    #[test]
    fn self_extension_of_simple_over_dual_numbers() {
        let alg = truncated_polynomial(7, 2);
        let s = alg.simple(0);
        let ext = ext1(&alg, &s, &s).unwrap();
        assert_eq!(ext.dim(), 1);
        let ses = ext.extension(&alg, &s, &s, &[3]);
        assert!(ses.middle.satisfies_relations(&alg));
        assert_eq!(hom_dim(&alg, &ses.middle, &ses.middle), 2);
    }

    #[test]
    fn adjunctions_hold_on_auslander_algebra() {
        let alg = auslander_dual_numbers(101);
        let modules = [alg.simple(0), alg.simple(1), alg.regular_module(), alg.dual_regular_module()];
        for m in &modules {
            for v in 0..2 {
                assert_eq!(hom_dim(&alg, alg.projective(v), m), m.dim_at(v));
                assert_eq!(hom_dim(&alg, m, &alg.injective(v)), m.dim_at(v));
            }
        }
    }

    #[test]
    fn gen_and_cogen_examples() {
        let alg = linear_a(101, 2);
        let (s1, s2) = (alg.simple(0), alg.simple(1));
        let (p1, p2) = (alg.projective(0), alg.projective(1));
        assert!(in_cogen(&alg, p1, p1));
        assert!(in_cogen(&alg, &s2, p1));
        assert!(!in_cogen(&alg, &s1, p2));
        assert!(in_gen(&alg, p1, p1));
        assert!(in_gen(&alg, &s1, p1));
        assert!(!in_gen(&alg, &s2, &s1));
        let (power, mono) = cogen_embedding(&alg, &s2, p1).unwrap();
        assert!(mono.is_injective());
        assert!(mono.is_homomorphism(&alg, &s2, &power));
        assert!(cogen_embedding(&alg, &s1, p2).is_none());
    }
}
