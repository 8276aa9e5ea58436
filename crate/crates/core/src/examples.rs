//! Small standard algebras, built over `F_p` with the default nilpotency cap.

use crate::algebra::{Algebra, Arrow, Quiver, Relation};
use crate::linalg::PrimeField;

pub const NILPOTENCY_CAP: usize = 30;

fn build(p: u32, n: usize, arrows: Vec<Arrow>, relations: Vec<Relation>) -> Algebra {
    let field = PrimeField::new(p).expect("prime");
    let quiver = Quiver::new(n, arrows).expect("valid quiver");
    Algebra::build(quiver, relations, field, NILPOTENCY_CAP).expect("admissible")
}

fn monomial(arrows: &[usize]) -> Relation {
    Relation::new(vec![(1, arrows.to_vec())])
}

/// One vertex, no arrows.
pub fn semisimple(p: u32) -> Algebra {
    build(p, 1, vec![], vec![])
}

/// Linearly oriented `A_n`: `1 -> 2 -> ... -> n`.
pub fn linear_a(p: u32, n: usize) -> Algebra {
    let arrows = (0..n.saturating_sub(1))
        .map(|i| Arrow::new(format!("a{}", i + 1), i, i + 1))
        .collect();
    build(p, n, arrows, vec![])
}

/// `k[x]/(x^n)`.
pub fn truncated_polynomial(p: u32, n: usize) -> Algebra {
    build(p, 1, vec![Arrow::new("x", 0, 0)], vec![monomial(&vec![0; n])])
}

/// Linear `A_n` with all paths of length two set to zero.
pub fn linear_nakayama_rad2(p: u32, n: usize) -> Algebra {
    let arrows: Vec<Arrow> = (0..n.saturating_sub(1))
        .map(|i| Arrow::new(format!("a{}", i + 1), i, i + 1))
        .collect();
    let relations = (0..arrows.len().saturating_sub(1))
        .map(|i| monomial(&[i, i + 1]))
        .collect();
    build(p, n, arrows, relations)
}

/// Oriented cycle on `n` vertices with all paths of length two set to zero.
pub fn cyclic_nakayama_rad2(p: u32, n: usize) -> Algebra {
    let arrows: Vec<Arrow> = (0..n)
        .map(|i| Arrow::new(format!("a{}", i + 1), i, (i + 1) % n))
        .collect();
    let relations = (0..n).map(|i| monomial(&[i, (i + 1) % n])).collect();
    build(p, n, arrows, relations)
}

/// Auslander algebra of `k[x]/(x^2)`: `a: 1 -> 2`, `b: 2 -> 1`, `a.b = 0`.
pub fn auslander_dual_numbers(p: u32) -> Algebra {
    build(
        p,
        2,
        vec![Arrow::new("a", 0, 1), Arrow::new("b", 1, 0)],
        vec![monomial(&[0, 1])],
    )
}

/// Auslander algebra of `k[x]/(x^3)`: arrows `a1: 1 -> 2`, `a2: 2 -> 3`,
/// `b1: 2 -> 1`, `b2: 3 -> 2` with `a1.b1 = 0` and `b1.a1 = a2.b2`.
pub fn auslander_truncated_cubic(p: u32) -> Algebra {
    let field = PrimeField::new(p).expect("prime");
    build(
        p,
        3,
        vec![
            Arrow::new("a1", 0, 1),
            Arrow::new("a2", 1, 2),
            Arrow::new("b1", 1, 0),
            Arrow::new("b2", 2, 1),
        ],
        vec![
            monomial(&[0, 2]),
            Relation::new(vec![(1, vec![2, 0]), (field.neg(1), vec![1, 3])]),
        ],
    )
}

/// Commutative square `1 -> 2 -> 4`, `1 -> 3 -> 4` with `a.b = c.d`.
pub fn commutative_square(p: u32) -> Algebra {
    let field = PrimeField::new(p).expect("prime");
    build(
        p,
        4,
        vec![
            Arrow::new("a", 0, 1),
            Arrow::new("b", 1, 3),
            Arrow::new("c", 0, 2),
            Arrow::new("d", 2, 3),
        ],
        vec![Relation::new(vec![(1, vec![0, 1]), (field.neg(1), vec![2, 3])])],
    )
}
