//! Right modules as quiver representations, and their morphisms.

use crate::algebra::{Algebra, Path};
use crate::linalg::{Matrix, PrimeField};
use crate::Error;

/// A representation of the bound quiver: one space per vertex (given by its
/// dimension) and one matrix `dims[target] x dims[source]` per arrow.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Module {
    field: PrimeField,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A family of vertex maps `M_v -> N_v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    maps: Vec<Matrix>,
}

impl Module {
    /// Validating constructor: shapes must match the quiver and every relation
    /// must act as zero.
    pub fn new(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self, Error> {
        if dims.len() != alg.vertex_count() || maps.len() != alg.arrow_count() {
            return Err(Error::InvalidInput(
                "module data does not match the quiver".into(),
            ));
        }
        for (a, m) in alg.quiver().arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidInput(format!(
                    "arrow {} needs a {}x{} matrix",
                    a.name, dims[a.target], dims[a.source]
                )));
            }
        }
        let m = Module {
            field: alg.field(),
            dims,
            maps,
        };
        if !m.satisfies_relations(alg) {
            return Err(Error::InvalidInput(
                "module does not satisfy the relations".into(),
            ));
        }
        Ok(m)
    }

    pub(crate) fn from_parts(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        let m = Module {
            field: alg.field(),
            dims,
            maps,
        };
        debug_assert!(m.satisfies_relations(alg), "constructed module breaks a relation");
        m
    }

    pub fn zero(alg: &Algebra) -> Self {
        let f = alg.field();
        Module {
            field: f,
            dims: vec![0; alg.vertex_count()],
            maps: vec![Matrix::zeros(f, 0, 0); alg.arrow_count()],
        }
    }

    pub fn simple(alg: &Algebra, v: usize) -> Self {
        let f = alg.field();
        let dims: Vec<usize> = (0..alg.vertex_count()).map(|w| (w == v) as usize).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Module {
            field: f,
            dims,
            maps,
        }
    }

    /// `e_v Λ` on the basis paths starting at `v`, arrows acting by right
    /// multiplication.
    pub(crate) fn projective_from_paths(alg: &Algebra, v: usize) -> Self {
        let pres = alg.presentation();
        let n = alg.vertex_count();
        let spaces: Vec<Vec<usize>> = (0..n).map(|w| pres.basis_between(v, w)).collect();
        let dims: Vec<usize> = spaces.iter().map(|s| s.len()).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mult = pres.right_multiplication(ai);
                Matrix::from_fn(alg.field(), dims[a.target], dims[a.source], |r, c| {
                    mult.get(spaces[a.target][r], spaces[a.source][c])
                })
            })
            .collect();
        Module::from_parts(alg, dims, maps)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Supported at every vertex.
    pub fn is_sincere(&self) -> bool {
        self.dims.iter().all(|&d| d > 0)
    }

    /// Action of a path `M_source -> M_target`, composing arrow maps in order.
    pub fn path_action(&self, path: &Path) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.dims[path.source]);
        for &a in &path.arrows {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    fn arrow_path_action(&self, alg: &Algebra, arrows: &[usize]) -> Matrix {
        let source = alg.quiver().arrow(arrows[0]).source;
        let target = alg.quiver().arrow(*arrows.last().unwrap()).target;
        self.path_action(&Path {
            source,
            target,
            arrows: arrows.to_vec(),
        })
    }

    pub fn satisfies_relations(&self, alg: &Algebra) -> bool {
        let f = self.field;
        alg.presentation().relations().iter().all(|r| {
            let first = &r.terms[0].1;
            let s = alg.quiver().arrow(first[0]).source;
            let t = alg.quiver().arrow(*first.last().unwrap()).target;
            let mut acc = Matrix::zeros(f, self.dims[t], self.dims[s]);
            for (c, p) in &r.terms {
                acc = acc.add(&self.arrow_path_action(alg, p).scale(*c));
            }
            acc.is_zero()
        })
    }

    /// The dual `DM = Hom_k(M, k)`, a module over the opposite algebra: same
    /// arrow ids, transposed maps.
    pub fn dual(&self) -> Module {
        Module {
            field: self.field,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn direct_sum(alg: &Algebra, parts: &[&Module]) -> Module {
        DirectSum::new(alg, parts).module
    }

    pub fn power(&self, alg: &Algebra, times: usize) -> Module {
        let parts: Vec<&Module> = std::iter::repeat_n(self, times).collect();
        Module::direct_sum(alg, &parts)
    }

    /// The submodule spanned at each vertex by the columns of `spaces[v]`.
    /// Returns the submodule and its inclusion.
    pub fn submodule(&self, alg: &Algebra, spaces: &[Matrix]) -> (Module, Morphism) {
        let f = self.field;
        let bases: Vec<Matrix> = spaces.iter().map(|s| s.column_space()).collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let image = self.maps[ai].mul(&bases[a.source]);
                bases[a.target]
                    .solve(&image)
                    .unwrap_or_else(|| panic!("subspaces not closed under arrow {}", a.name))
            })
            .collect::<Vec<_>>();
        debug_assert!(maps.iter().all(|m| m.field() == f));
        let sub = Module::from_parts(alg, dims, maps);
        (sub, Morphism { maps: bases })
    }

    /// `M / U` for a submodule given by subspaces. Returns the quotient and
    /// the canonical projection.
    pub fn quotient(&self, alg: &Algebra, spaces: &[Matrix]) -> (Module, Morphism) {
        let projections: Vec<Matrix> = spaces.iter().map(|s| s.cokernel_projection()).collect();
        let sections: Vec<Matrix> = projections.iter().map(|q| q.right_inverse()).collect();
        let dims: Vec<usize> = projections.iter().map(|q| q.rows()).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                projections[a.target]
                    .mul(&self.maps[ai])
                    .mul(&sections[a.source])
            })
            .collect();
        let q = Module::from_parts(alg, dims, maps);
        (q, Morphism { maps: projections })
    }

    /// Short human-readable dimension vector, e.g. `(1,2,0)`.
    pub fn dim_label(&self) -> String {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl Morphism {
    pub fn new(maps: Vec<Matrix>) -> Self {
        Morphism { maps }
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        Morphism {
            maps: source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| Matrix::zeros(source.field, t, s))
                .collect(),
        }
    }

    pub fn identity(m: &Module) -> Self {
        Morphism {
            maps: m.dims.iter().map(|&d| Matrix::identity(m.field, d)).collect(),
        }
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn at(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        Morphism {
            maps: self
                .maps
                .iter()
                .zip(&first.maps)
                .map(|(g, f)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism {
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        Morphism {
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, s: u32) -> Morphism {
        Morphism {
            maps: self.maps.iter().map(|m| m.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn is_nilpotent_endomorphism(&self) -> bool {
        self.maps.iter().all(Matrix::is_nilpotent)
    }

    /// Whether the family intertwines the arrow actions of `source` and `target`.
    pub fn is_homomorphism(&self, alg: &Algebra, source: &Module, target: &Module) -> bool {
        alg.quiver().arrows().iter().enumerate().all(|(ai, a)| {
            target.maps[ai].mul(&self.maps[a.source]) == self.maps[a.target].mul(&source.maps[ai])
        })
    }

    /// Entries of every vertex map, concatenated.
    pub fn flatten(&self) -> Vec<u32> {
        self.maps.iter().flat_map(|m| m.entries().iter().copied()).collect()
    }

    pub fn dual(&self) -> Morphism {
        Morphism {
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn kernel(&self, alg: &Algebra, source: &Module) -> (Module, Morphism) {
        let spaces: Vec<Matrix> = self.maps.iter().map(Matrix::kernel_basis).collect();
        source.submodule(alg, &spaces)
    }

    pub fn image(&self, alg: &Algebra, target: &Module) -> (Module, Morphism) {
        let spaces: Vec<Matrix> = self.maps.iter().map(Matrix::column_space).collect();
        target.submodule(alg, &spaces)
    }

    pub fn cokernel(&self, alg: &Algebra, target: &Module) -> (Module, Morphism) {
        let spaces: Vec<Matrix> = self.maps.iter().map(Matrix::column_space).collect();
        target.quotient(alg, &spaces)
    }

    /// Linear combination `Σ coeffs[i] * basis[i]`.
    pub fn combination(basis: &[Morphism], coeffs: &[u32], source: &Module, target: &Module) -> Morphism {
        let mut acc = Morphism::zero(source, target);
        for (m, &c) in basis.iter().zip(coeffs) {
            if c != 0 {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }
}

/// `⊕ parts` with the bookkeeping needed to build maps between sums.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    /// `offsets[i][v]` is where summand `i` starts inside the vertex space `v`.
    pub offsets: Vec<Vec<usize>>,
    pub part_dims: Vec<Vec<usize>>,
}

impl DirectSum {
    pub fn new(alg: &Algebra, parts: &[&Module]) -> Self {
        let f = alg.field();
        let n = alg.vertex_count();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut dims = vec![0; n];
        for p in parts {
            offsets.push(dims.clone());
            for v in 0..n {
                dims[v] += p.dims[v];
            }
        }
        let maps = (0..alg.arrow_count())
            .map(|ai| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.maps[ai].clone()).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        DirectSum {
            module: Module {
                field: f,
                dims,
                maps,
            },
            offsets,
            part_dims: parts.iter().map(|p| p.dims.clone()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn injection(&self, i: usize) -> Morphism {
        let f = self.module.field;
        Morphism {
            maps: (0..self.module.dims.len())
                .map(|v| {
                    let mut m = Matrix::zeros(f, self.module.dims[v], self.part_dims[i][v]);
                    for k in 0..self.part_dims[i][v] {
                        m.set(self.offsets[i][v] + k, k, 1);
                    }
                    m
                })
                .collect(),
        }
    }

    pub fn projection(&self, i: usize) -> Morphism {
        Morphism {
            maps: self.injection(i).maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Morphism `⊕ parts -> target` whose restriction to summand `i` is `components[i]`.
    pub fn out_of(&self, target: &Module, components: &[Morphism]) -> Morphism {
        let mut acc = Morphism::zero(&self.module, target);
        for (i, c) in components.iter().enumerate() {
            acc = acc.add(&c.after(&self.projection(i)));
        }
        acc
    }

    /// Morphism `source -> ⊕ parts` whose `i`-th component is `components[i]`.
    pub fn into_sum(&self, source: &Module, components: &[Morphism]) -> Morphism {
        let mut acc = Morphism::zero(source, &self.module);
        for (i, c) in components.iter().enumerate() {
            acc = acc.add(&self.injection(i).after(c));
        }
        acc
    }
}

/// The morphism `P_v -> M` sending the trivial path `e_v` to `element ∈ M_v`.
pub fn from_projective(alg: &Algebra, v: usize, target: &Module, element: &[u32]) -> Morphism {
    let pres = alg.presentation();
    let f = alg.field();
    let x = Matrix::column_vector(f, element);
    let maps = (0..alg.vertex_count())
        .map(|w| {
            let paths = pres.basis_between(v, w);
            let cols: Vec<Vec<u32>> = paths
                .iter()
                .map(|&i| target.path_action(&pres.basis()[i]).mul(&x).column(0))
                .collect();
            Matrix::from_columns(f, target.dims[w], &cols)
        })
        .collect();
    Morphism { maps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Arrow, Quiver, Relation};

    fn a2() -> Algebra {
        let q = Quiver::new(
            2,
            vec![Arrow {
                name: "a".into(),
                source: 0,
                target: 1,
            }],
        )
        .unwrap();
        Algebra::build(q, vec![], PrimeField::new(101).unwrap(), 30).unwrap()
    }

    #[test]
    fn projectives_and_injectives_of_a2() {
        let alg = a2();
        assert_eq!(alg.projective(0).dims(), &[1, 1]);
        assert_eq!(alg.projective(1).dims(), &[0, 1]);
        assert_eq!(alg.injective(1).dims(), &[1, 1]);
        assert_eq!(alg.injective(0).dims(), &[1, 0]);
        assert_eq!(alg.regular_module().dims(), &[1, 2]);
        assert!(alg.injective(1).satisfies_relations(&alg));
    }

    #[test]
    fn simple_has_indicator_dims() {
        let alg = a2();
        assert_eq!(alg.simple(1).dims(), &[0, 1]);
        assert!(!alg.simple(0).is_sincere());
        assert!(alg.projective(0).is_sincere());
        assert!(alg.regular_module().is_sincere());
    }

    #[test]
    fn new_rejects_relation_violations() {
        let f = PrimeField::new(101).unwrap();
        let q = Quiver::new(
            1,
            vec![Arrow {
                name: "x".into(),
                source: 0,
                target: 0,
            }],
        )
        .unwrap();
        let alg = Algebra::build(q, vec![Relation::new(vec![(1, vec![0, 0])])], f, 30).unwrap();
        let jordan = Matrix::from_rows(f, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert!(Module::new(&alg, vec![3], vec![jordan]).is_err());
        let ok = Matrix::from_rows(f, &[vec![0, 1], vec![0, 0]]);
        assert!(Module::new(&alg, vec![2], vec![ok]).is_ok());
        assert!(Module::new(&alg, vec![2], vec![Matrix::zeros(f, 1, 2)]).is_err());
    }

    #[test]
    fn projective_maps_intertwine() {
        let alg = a2();
        let p1 = alg.projective(0).clone();
        let f = from_projective(&alg, 1, &p1, &[1]);
        assert!(f.is_homomorphism(&alg, alg.projective(1), &p1));
        assert!(f.is_injective());
    }

    #[test]
    fn submodule_and_quotient_of_p1() {
        let alg = a2();
        let p1 = alg.projective(0).clone();
        let f = alg.field();
        let spaces = vec![Matrix::zeros(f, 1, 0), Matrix::identity(f, 1)];
        let (sub, inc) = p1.submodule(&alg, &spaces);
        assert_eq!(sub.dims(), &[0, 1]);
        assert!(inc.is_homomorphism(&alg, &sub, &p1));
        let (quo, proj) = p1.quotient(&alg, &spaces);
        assert_eq!(quo.dims(), &[1, 0]);
        assert!(proj.is_homomorphism(&alg, &p1, &quo));
    }
}
