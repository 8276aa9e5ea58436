use agtilt::ar::{enumerate_indecomposables, tau, tau_inv};
use agtilt::decompose::is_isomorphic_indecomposable;
use agtilt::examples::*;
use agtilt::hom::hom_dim;
use agtilt::homology::*;
use agtilt::theorems::{sample_ses_bound, Context, Settings};
use agtilt::{Algebra, HomDim};

fn corpus() -> Vec<(&'static str, Algebra)> {
    vec![
        ("semisimple", semisimple(101)),
        ("A2", linear_a(101, 2)),
        ("A3", linear_a(101, 3)),
        ("x2", truncated_polynomial(101, 2)),
        ("x3", truncated_polynomial(101, 3)),
        ("auslander x2", auslander_dual_numbers(101)),
        ("auslander x3", auslander_truncated_cubic(101)),
        ("nakayama 3", linear_nakayama_rad2(101, 3)),
        ("cyclic 3", cyclic_nakayama_rad2(101, 3)),
        ("square", commutative_square(101)),
    ]
}

#[test]
fn ext_balance_through_syzygy_and_cosyzygy() {
    for (name, alg) in corpus() {
        let cat = enumerate_indecomposables(&alg, 256, 24).unwrap();
        for (i, m) in cat.modules.iter().enumerate() {
            let cover = projective_cover(&alg, m);
            let omega = syzygy(&alg, m);
            for (j, n) in cat.modules.iter().enumerate() {
                let env = injective_envelope(&alg, n);
                let co = cosyzygy(&alg, n);
                let base = hom_dim(&alg, m, n);
                let left = hom_dim(&alg, &omega, n) + base - hom_dim(&alg, cover.module(), n);
                let right = hom_dim(&alg, m, &co) + base - hom_dim(&alg, m, &env.module);
                assert_eq!(left, cat.ext_dims[i][j], "{name}: X{i}, X{j}");
                assert_eq!(right, cat.ext_dims[i][j], "{name}: X{i}, X{j}");
            }
        }
    }
}

#[test]
fn adjunction_dimensions() {
    for (name, alg) in corpus() {
        let cat = enumerate_indecomposables(&alg, 256, 24).unwrap();
        for m in &cat.modules {
            for v in 0..alg.vertex_count() {
                assert_eq!(hom_dim(&alg, alg.projective(v), m), m.dim_at(v), "{name}");
                assert_eq!(hom_dim(&alg, m, &alg.injective(v)), m.dim_at(v), "{name}");
            }
        }
    }
}

#[test]
fn tau_and_tau_inverse_are_mutually_inverse() {
    for (name, alg) in corpus() {
        let cat = enumerate_indecomposables(&alg, 256, 24).unwrap();
        for (i, m) in cat.modules.iter().enumerate() {
            if !cat.projective[i] {
                assert!(is_isomorphic_indecomposable(&alg, m, &tau_inv(&alg, &tau(&alg, m))), "{name}: X{i}");
            }
            if !cat.injective[i] {
                assert!(is_isomorphic_indecomposable(&alg, m, &tau(&alg, &tau_inv(&alg, m))), "{name}: X{i}");
            }
        }
    }
}

#[test]
fn auslander_global_dimension_formula() {
    for (name, alg) in corpus() {
        let by_radicals = (0..alg.vertex_count())
            .map(|v| pd(&alg, &radical(&alg, alg.projective(v)).0, 24).unwrap())
            .fold(HomDim::Finite(0), HomDim::max);
        let by_radicals = if (0..alg.vertex_count()).all(|v| radical(&alg, alg.projective(v)).0.is_zero()) {
            HomDim::Finite(0)
        } else {
            by_radicals.succ()
        };
        let by_simples = (0..alg.vertex_count())
            .map(|v| pd(&alg, &alg.simple(v), 24).unwrap())
            .fold(HomDim::Finite(0), HomDim::max);
        assert_eq!(gldim(&alg, 24).unwrap(), by_radicals, "{name}");
        assert_eq!(by_radicals, by_simples, "{name}");
    }
}

#[test]
fn dominant_dimension_is_left_right_symmetric() {
    for (name, alg) in corpus() {
        assert_eq!(domdim(&alg, 8).unwrap(), domdim(&alg.opposite(), 8).unwrap(), "{name}");
    }
}

#[test]
fn ses_pd_bound_on_random_extensions() {
    let settings = Settings {
        ses_samples: 24,
        ..Settings::default()
    };
    let mut total = 0;
    for (name, alg) in corpus() {
        let ctx = Context::new(&alg, settings);
        let samples = sample_ses_bound(&ctx, settings.ses_samples).unwrap();
        for s in &samples {
            assert!(s.holds, "{name}: {s:?}");
        }
        total += samples.len();
    }
    assert!(total >= 100, "only {total} extensions");
}

#[test]
fn one_ag_is_left_right_symmetric() {
    for (name, alg) in corpus() {
        let here = Context::new(&alg, Settings::default()).is_1ag().unwrap();
        let there = Context::new(&alg.opposite(), Settings::default()).is_1ag().unwrap();
        assert_eq!(here, there, "{name}");
    }
}

#[test]
fn desk_values() {
    assert_eq!(domdim(&linear_a(101, 2), 8).unwrap(), HomDim::Finite(1));
    let aus = auslander_dual_numbers(101);
    assert_eq!(domdim(&aus, 8).unwrap(), HomDim::Finite(2));
    assert_eq!(aus.dim(), 5);
    assert_eq!(enumerate_indecomposables(&linear_a(101, 2), 256, 24).unwrap().len(), 3);
    assert_eq!(enumerate_indecomposables(&truncated_polynomial(101, 3), 256, 24).unwrap().len(), 3);
    let x2 = truncated_polynomial(101, 2);
    assert_eq!(pd(&x2, &x2.simple(0), 24).unwrap(), HomDim::Infinite);
}
