//! Tilting and cotilting modules, the subcategory `C_Λ`, the modules `T_C`
//! and `C_C`, and torsion pairs induced by a tilting module.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::ar::{tau, IndCatalog};
use crate::decompose::{decompose, is_isomorphic_indecomposable, local_radical};
use crate::hom::{end, ext1, hom, in_cogen, in_gen};
use crate::homology::{cosyzygy, pd, syzygy, DEFAULT_RESOLUTION_CAP};
use crate::linalg::Matrix;
use crate::module::{from_projective, DirectSum, Module, Morphism};
use crate::Error;

/// `Q̃`: each projective-injective `P_v` once; zero if there is none.
pub fn projective_injectives(alg: &Algebra) -> Module {
    let flags = alg.projective_is_injective().to_vec();
    let parts: Vec<&Module> = (0..alg.vertex_count())
        .filter(|&v| flags[v])
        .map(|v| alg.projective(v))
        .collect();
    Module::direct_sum(alg, &parts)
}

/// `M ∈ C_Λ`: generated and cogenerated by `Q̃`.
pub fn in_c_lambda(alg: &Algebra, m: &Module) -> bool {
    let q = projective_injectives(alg);
    in_gen(alg, m, &q) && in_cogen(alg, m, &q)
}

/// Pairwise non-isomorphic indecomposable summands of the given modules,
/// in canonical order.
pub fn basic_summands(alg: &Algebra, modules: &[Module]) -> Result<Vec<Module>, Error> {
    let parts: Vec<&Module> = modules.iter().collect();
    let total = Module::direct_sum(alg, &parts);
    Ok(decompose(alg, &total)?.into_iter().map(|(m, _)| m).collect())
}

pub fn basic_sum(alg: &Algebra, summands: &[Module]) -> Module {
    let parts: Vec<&Module> = summands.iter().collect();
    Module::direct_sum(alg, &parts)
}

/// Summands of `T_C = Q̃ ⊕ ⊕ Ω⁻¹P` over the projective non-injective `P`.
pub fn construct_tc(alg: &Algebra) -> Result<Vec<Module>, Error> {
    let flags = alg.projective_is_injective().to_vec();
    let mut parts = vec![projective_injectives(alg)];
    for v in 0..alg.vertex_count() {
        if !flags[v] {
            parts.push(cosyzygy(alg, alg.projective(v)));
        }
    }
    basic_summands(alg, &parts)
}

/// Summands of `C_C = Q̃ ⊕ ⊕ ΩI` over the injective non-projective `I`.
pub fn construct_cc(alg: &Algebra) -> Result<Vec<Module>, Error> {
    let flags = alg.injective_is_projective();
    let mut parts = vec![projective_injectives(alg)];
    for v in 0..alg.vertex_count() {
        if !flags[v] {
            parts.push(syzygy(alg, &alg.injective(v)));
        }
    }
    basic_summands(alg, &parts)
}

/// Evidence for condition (3): the universal map `Λ -> T^d`.
#[derive(Clone, Debug, Serialize)]
pub struct ApproximationWitness {
    pub middle_dims: Vec<usize>,
    pub injective: bool,
    pub cokernel_dims: Vec<usize>,
    pub cokernel_in_add_t: bool,
}

/// One side (tilting or cotilting) of a report.
#[derive(Clone, Debug, Serialize)]
pub struct SideReport {
    pub dimension_at_most_one: bool,
    pub self_orthogonal: bool,
    pub partial: bool,
    pub constructive: bool,
    pub count_criterion: bool,
    pub full: bool,
    pub witness: ApproximationWitness,
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltingReport {
    pub dims: Vec<usize>,
    pub summand_count: usize,
    pub is_partial_tilting: bool,
    pub is_tilting: bool,
    pub is_partial_cotilting: bool,
    pub is_cotilting: bool,
    pub tilting: SideReport,
    pub cotilting: SideReport,
}

fn in_add(alg: &Algebra, m: &Module, summands: &[Module]) -> Result<bool, Error> {
    for (x, _) in decompose(alg, m)? {
        if !summands.iter().any(|s| is_isomorphic_indecomposable(alg, s, &x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimal left `add T`-approximation of `P_v`: one map `P_v -> T_i` for
/// each vector of a complement, in `(T_i)_v`, to the images of radical maps
/// into `T_i`.
fn minimal_approximation(alg: &Algebra, v: usize, summands: &[Module], radical_maps: &[Vec<Morphism>]) -> (Module, Morphism) {
    let f = alg.field();
    let mut targets = Vec::new();
    let mut components = Vec::new();
    for (ti, rad) in summands.iter().zip(radical_maps) {
        let d = ti.dim_at(v);
        let mut span: Vec<Vec<u32>> = rad.iter().flat_map(|g| g.at(v).columns()).collect();
        let mut rank = Matrix::from_columns(f, d, &span).rank();
        for k in 0..d {
            let mut e = vec![0; d];
            e[k] = 1;
            span.push(e.clone());
            let next = Matrix::from_columns(f, d, &span).rank();
            if next > rank {
                rank = next;
                targets.push(ti);
                components.push(from_projective(alg, v, ti, &e));
            }
        }
    }
    let sum = DirectSum::new(alg, &targets);
    let map = sum.into_sum(alg.projective(v), &components);
    (sum.module, map)
}

/// Condition (3) witnessed by `0 -> Λ -> T' -> T'' -> 0` with `Λ -> T'` the
/// minimal left `add T`-approximation.
fn approximation_witness(alg: &Algebra, summands: &[Module]) -> Result<ApproximationWitness, Error> {
    let mut radical_maps = Vec::with_capacity(summands.len());
    for (i, ti) in summands.iter().enumerate() {
        let mut maps = Vec::new();
        for (j, tj) in summands.iter().enumerate() {
            if i == j {
                let e = end(alg, ti);
                maps.extend(local_radical(alg, ti, &e).ok_or_else(|| {
                    Error::InvalidInput("tilting summands must be indecomposable".into())
                })?);
            } else {
                maps.extend(hom(alg, tj, ti).basis);
            }
        }
        radical_maps.push(maps);
    }
    let n = alg.vertex_count();
    let mut witness = ApproximationWitness {
        middle_dims: vec![0; n],
        injective: true,
        cokernel_dims: vec![0; n],
        cokernel_in_add_t: true,
    };
    for v in 0..n {
        let (middle, map) = minimal_approximation(alg, v, summands, &radical_maps);
        let (cokernel, _) = map.cokernel(alg, &middle);
        for w in 0..n {
            witness.middle_dims[w] += middle.dim_at(w);
            witness.cokernel_dims[w] += cokernel.dim_at(w);
        }
        witness.injective &= map.is_injective();
        if witness.injective && witness.cokernel_in_add_t {
            witness.cokernel_in_add_t = in_add(alg, &cokernel, summands)?;
        }
    }
    if !witness.injective {
        witness.cokernel_in_add_t = false;
    }
    Ok(witness)
}

fn tilting_side(alg: &Algebra, summands: &[Module], cap: usize) -> Result<SideReport, Error> {
    let t = basic_sum(alg, summands);
    let mut dimension_at_most_one = true;
    for s in summands {
        if pd(alg, s, cap)?.at_most(1) != Some(true) {
            dimension_at_most_one = false;
        }
    }
    let self_orthogonal = ext1(alg, &t, &t)?.is_zero();
    let partial = dimension_at_most_one && self_orthogonal;

    let witness = approximation_witness(alg, summands)?;
    let constructive = witness.injective && witness.cokernel_in_add_t;
    let count_criterion = summands.len() == alg.vertex_count();
    if partial && constructive != count_criterion {
        return Err(Error::CrossCheckMismatch(format!(
            "tilting condition (3) is {constructive} constructively but the summand count is {} of {}",
            summands.len(),
            alg.vertex_count()
        )));
    }
    Ok(SideReport {
        dimension_at_most_one,
        self_orthogonal,
        partial,
        constructive,
        count_criterion,
        full: partial && constructive,
        witness,
    })
}

/// Tilting conditions directly, cotilting ones as tilting of `DT` over the
/// opposite algebra. `summands` must be pairwise non-isomorphic
/// indecomposables.
pub fn check_tilting(alg: &Algebra, summands: &[Module]) -> Result<TiltingReport, Error> {
    check_tilting_with_cap(alg, summands, DEFAULT_RESOLUTION_CAP)
}

pub fn check_tilting_with_cap(alg: &Algebra, summands: &[Module], cap: usize) -> Result<TiltingReport, Error> {
    let tilting = tilting_side(alg, summands, cap)?;
    let duals: Vec<Module> = summands.iter().map(Module::dual).collect();
    let cotilting = tilting_side(&alg.opposite(), &duals, cap)?;
    Ok(TiltingReport {
        dims: basic_sum(alg, summands).dims().to_vec(),
        summand_count: summands.len(),
        is_partial_tilting: tilting.partial,
        is_tilting: tilting.full,
        is_partial_cotilting: cotilting.partial,
        is_cotilting: cotilting.full,
        tilting,
        cotilting,
    })
}

/// Summand indices of a basic module inside the catalog.
pub fn catalog_indices(alg: &Algebra, catalog: &IndCatalog, summands: &[Module]) -> Result<Vec<usize>, Error> {
    let mut out = Vec::with_capacity(summands.len());
    for s in summands {
        out.push(catalog.index_of(alg, s).ok_or_else(|| {
            Error::ValidationFailed(format!("summand {} missing from the catalog", s.dim_label()))
        })?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionPairData {
    pub tilter: Vec<usize>,
    pub torsion: Vec<usize>,
    pub torsionfree: Vec<usize>,
    pub splitting: bool,
}

/// `(T(T), F(T))` on the catalog, with `Gen T`, `Cogen τT`, orthogonality and
/// maximality cross-checks.
pub fn torsion_pair_of_tilting(alg: &Algebra, catalog: &IndCatalog, tilter: &[usize]) -> Result<TorsionPairData, Error> {
    let n = catalog.len();
    let torsion: Vec<usize> = (0..n)
        .filter(|&i| tilter.iter().all(|&s| catalog.ext_dims[s][i] == 0))
        .collect();
    let torsionfree: Vec<usize> = (0..n)
        .filter(|&i| tilter.iter().all(|&s| catalog.hom_dims[s][i] == 0))
        .collect();
    let t_parts: Vec<Module> = tilter.iter().map(|&i| catalog.modules[i].clone()).collect();
    let t = basic_sum(alg, &t_parts);
    let tau_t = tau(alg, &t);
    for i in 0..n {
        let x = &catalog.modules[i];
        let in_t = torsion.binary_search(&i).is_ok();
        let in_f = torsionfree.binary_search(&i).is_ok();
        if in_gen(alg, x, &t) != in_t {
            return Err(Error::CrossCheckMismatch(format!(
                "entry {i}: membership in Gen T differs from Ext¹(T, -) = 0"
            )));
        }
        if in_cogen(alg, x, &tau_t) != in_f {
            return Err(Error::CrossCheckMismatch(format!(
                "entry {i}: membership in Cogen τT differs from Hom(T, -) = 0"
            )));
        }
        let left_orthogonal = torsionfree.iter().all(|&f| catalog.hom_dims[i][f] == 0);
        let right_orthogonal = torsion.iter().all(|&s| catalog.hom_dims[s][i] == 0);
        if left_orthogonal != in_t || right_orthogonal != in_f {
            return Err(Error::CrossCheckMismatch(format!(
                "entry {i}: torsion pair is not maximal on both sides"
            )));
        }
    }
    Ok(TorsionPairData {
        tilter: tilter.to_vec(),
        splitting: torsion.len() + torsionfree.len() == n,
        torsion,
        torsionfree,
    })
}

/// Ext-projectives of the torsion class, computed directly and through the
/// τ-criterion; both must agree with the summands of the tilting module.
pub fn ext_projectives_of_torsion_class(catalog: &IndCatalog, pair: &TorsionPairData) -> Result<Vec<usize>, Error> {
    let direct: Vec<usize> = pair
        .torsion
        .iter()
        .copied()
        .filter(|&x| pair.torsion.iter().all(|&y| catalog.ext_dims[x][y] == 0))
        .collect();
    let via_tau: Vec<usize> = pair
        .torsion
        .iter()
        .copied()
        .filter(|&x| match catalog.tau_index[x] {
            None => true,
            Some(t) => pair.torsionfree.binary_search(&t).is_ok(),
        })
        .collect();
    if direct != via_tau {
        return Err(Error::CrossCheckMismatch(format!(
            "Ext-projectives {direct:?} directly but {via_tau:?} through τ"
        )));
    }
    if direct != pair.tilter {
        return Err(Error::CrossCheckMismatch(format!(
            "Ext-projectives {direct:?} differ from the summands {:?} of the tilting module",
            pair.tilter
        )));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar::enumerate_indecomposables;
    use crate::decompose::is_isomorphic;
    use crate::examples::*;

    #[test]
    fn projective_injectives_examples() {
        let a2 = linear_a(101, 2);
        assert_eq!(projective_injectives(&a2).dims(), &[1, 1]);
        let dual = truncated_polynomial(101, 2);
        assert_eq!(projective_injectives(&dual).dims(), &[2]);
        assert_eq!(projective_injectives(&semisimple(101)).dims(), &[1]);
    }

    #[test]
    fn c_lambda_membership() {
        let a2 = linear_a(101, 2);
        assert!(in_c_lambda(&a2, &projective_injectives(&a2)));
        assert!(!in_c_lambda(&a2, &a2.simple(0)));
        assert!(in_c_lambda(&a2, &Module::zero(&a2)));
    }

    #[test]
    fn tilting_examples_over_a2() {
        let a2 = linear_a(101, 2);
        let regular = vec![a2.projective(1).clone(), a2.projective(0).clone()];
        assert!(check_tilting(&a2, &regular).unwrap().is_tilting);
        let injectives = vec![a2.injective(0), a2.injective(1)];
        let report = check_tilting(&a2, &injectives).unwrap();
        assert!(report.is_tilting && report.is_cotilting);
        let s2 = vec![a2.simple(1)];
        let report = check_tilting(&a2, &s2).unwrap();
        assert!(report.is_partial_tilting && !report.is_tilting);
    }

    #[test]
    fn tc_over_a2_and_auslander_algebra() {
        let a2 = linear_a(101, 2);
        let tc = construct_tc(&a2).unwrap();
        assert_eq!(tc.len(), 2);
        assert!(is_isomorphic(&a2, &basic_sum(&a2, &tc), &a2.dual_regular_module()).unwrap());

        let alg = auslander_dual_numbers(101);
        let tc = construct_tc(&alg).unwrap();
        let cc = construct_cc(&alg).unwrap();
        let report = check_tilting(&alg, &tc).unwrap();
        assert!(report.is_tilting && report.is_cotilting);
        assert!(tc.iter().all(|m| in_c_lambda(&alg, m)));
        assert!(is_isomorphic(&alg, &basic_sum(&alg, &tc), &basic_sum(&alg, &cc)).unwrap());
    }

    #[test]
    fn torsion_pairs_and_ext_projectives() {
        let a2 = linear_a(101, 2);
        let cat = enumerate_indecomposables(&a2, 256, 24).unwrap();
        let regular: Vec<usize> = (0..cat.len()).filter(|&i| cat.projective[i]).collect();
        let pair = torsion_pair_of_tilting(&a2, &cat, &regular).unwrap();
        assert_eq!(pair.torsion.len(), 3);
        assert!(pair.torsionfree.is_empty() && pair.splitting);
        assert_eq!(ext_projectives_of_torsion_class(&cat, &pair).unwrap(), regular);

        let tc = catalog_indices(&a2, &cat, &construct_tc(&a2).unwrap()).unwrap();
        let pair = torsion_pair_of_tilting(&a2, &cat, &tc).unwrap();
        let s2 = cat.index_of(&a2, &a2.simple(1)).unwrap();
        assert_eq!(pair.torsionfree, vec![s2]);
        assert_eq!(ext_projectives_of_torsion_class(&cat, &pair).unwrap(), tc);
    }
}
