use agtilt::{Matrix, PrimeField};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

const PRIMES: [u32; 2] = [101, 7];

fn config() -> Config {
    Config {
        cases: 600,
        rng_seed: RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn matrix(max: usize) -> impl Strategy<Value = (u32, usize, usize, Vec<u32>)> {
    (0..PRIMES.len(), 1..=max, 1..=max).prop_flat_map(|(pi, r, c)| {
        // low-rank cases are common with a small range of entries
        let entries = prop_oneof![
            proptest::collection::vec(0u32..3, r * c),
            proptest::collection::vec(any::<u32>(), r * c),
        ];
        (Just(PRIMES[pi]), Just(r), Just(c), entries)
    })
}

fn square(max: usize) -> impl Strategy<Value = (u32, usize, Vec<u32>)> {
    (0..PRIMES.len(), 1..=max).prop_flat_map(|(pi, n)| {
        (Just(PRIMES[pi]), Just(n), proptest::collection::vec(0u32..4, n * n))
    })
}

fn build(p: u32, r: usize, c: usize, e: &[u32]) -> Matrix {
    Matrix::from_fn(PrimeField::new(p).unwrap(), r, c, |i, j| e[i * c + j])
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rank_nullity((p, r, c, e) in matrix(8)) {
        let a = build(p, r, c, &e);
        let k = a.kernel_basis();
        prop_assert_eq!(a.rank() + k.cols(), c);
        prop_assert!(a.mul(&k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn solve_round_trip((p, r, c, e) in matrix(8), seed in any::<u64>()) {
        let a = build(p, r, c, &e);
        let f = a.field();
        let x0 = Matrix::from_fn(f, c, 1, |i, _| (seed.rotate_left(i as u32 * 7) % p as u64) as u32);
        let b = a.mul(&x0);
        let x = a.solve(&b).expect("consistent system");
        prop_assert_eq!(a.mul(&x), b);

        let q = a.cokernel_projection();
        prop_assert!(q.mul(&a).is_zero());
        prop_assert_eq!(q.rank(), r - a.rank());
        let outside = Matrix::from_fn(f, r, 1, |i, _| (seed >> (i % 60)) as u32);
        let solvable = a.hstack(&outside).rank() == a.rank();
        prop_assert_eq!(a.solve(&outside).is_some(), solvable);
    }

    #[test]
    fn echelon_and_inverse((p, r, e) in square(7)) {
        let a = build(p, r, r, &e);
        let ech = a.rref();
        prop_assert_eq!(ech.reduced.rref().reduced, ech.reduced.clone());
        prop_assert_eq!(a.column_space().cols(), a.rank());
        match a.inverse() {
            Some(inv) => {
                prop_assert_eq!(a.mul(&inv), Matrix::identity(a.field(), r));
                prop_assert_eq!(a.rank(), r);
            }
            None => prop_assert!(a.rank() < r),
        }
    }
}
