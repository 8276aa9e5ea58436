//! Univariate polynomials over `F_p`, just enough for endomorphism splitting.

use crate::linalg::{Matrix, PrimeField};

/// Coefficients from the constant term upward. Always monic when produced by
/// [`minimal_polynomial`].
pub type Poly = Vec<u32>;

/// Minimal polynomial of the block-diagonal operator `blocks[0] ⊕ blocks[1] ⊕ ...`,
/// found as the first linear dependency among its powers.
pub fn minimal_polynomial(field: PrimeField, blocks: &[Matrix]) -> Poly {
    let len: usize = blocks.iter().map(|b| b.rows() * b.cols()).sum();
    let flatten = |ms: &[Matrix]| -> Vec<u32> {
        ms.iter().flat_map(|m| m.entries().iter().copied()).collect()
    };
    let mut power: Vec<Matrix> = blocks
        .iter()
        .map(|b| Matrix::identity(field, b.rows()))
        .collect();
    let mut cols: Vec<Vec<u32>> = Vec::new();
    loop {
        let v = flatten(&power);
        if !cols.is_empty() {
            let basis = Matrix::from_columns(field, len, &cols);
            if let Some(x) = basis.solve(&Matrix::column_vector(field, &v)) {
                let mut poly: Poly = x.column(0).iter().map(|&c| field.neg(c)).collect();
                poly.push(1);
                return poly;
            }
        } else if v.iter().all(|&c| c == 0) {
            // zero-dimensional operator
            return vec![1];
        }
        cols.push(v);
        power = power.iter().zip(blocks).map(|(p, b)| p.mul(b)).collect();
    }
}

pub fn eval(field: PrimeField, poly: &[u32], x: u32) -> u32 {
    poly.iter()
        .rev()
        .fold(0, |acc, &c| field.add(field.mul(acc, x), c))
}

/// All roots in `F_p`, ascending, found by scanning the field.
pub fn roots(field: PrimeField, poly: &[u32]) -> Vec<u32> {
    if poly.len() <= 1 {
        return Vec::new();
    }
    (0..field.p()).filter(|&x| eval(field, poly, x) == 0).collect()
}

fn mul(field: PrimeField, a: &[u32], b: &[u32]) -> Poly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    out
}

/// Whether `poly` equals `(x - root)^deg(poly)`.
pub fn is_power_of_linear(field: PrimeField, poly: &[u32], root: u32) -> bool {
    let deg = poly.len().saturating_sub(1);
    let linear = [field.neg(root), 1];
    let mut acc: Poly = vec![1];
    for _ in 0..deg {
        acc = mul(field, &acc, &linear);
    }
    acc == poly
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomial_of_jordan_block() {
        let k = PrimeField::new(7).unwrap();
        let j = Matrix::from_rows(k, &[vec![3, 1], vec![0, 3]]);
        let mu = minimal_polynomial(k, &[j]);
        // (x - 3)^2 = x^2 - 6x + 9 = x^2 + x + 2 mod 7
        assert_eq!(mu, vec![2, 1, 1]);
        assert_eq!(roots(k, &mu), vec![3]);
        assert!(is_power_of_linear(k, &mu, 3));
    }

    #[test]
    fn blocks_take_lcm() {
        let k = PrimeField::new(5).unwrap();
        let a = Matrix::from_rows(k, &[vec![1]]);
        let b = Matrix::from_rows(k, &[vec![2]]);
        let mu = minimal_polynomial(k, &[a, b]);
        assert_eq!(mu.len(), 3);
        assert_eq!(roots(k, &mu), vec![1, 2]);
        assert!(!is_power_of_linear(k, &mu, 1));
    }

    #[test]
    fn rotation_has_no_roots_mod_three() {
        let k = PrimeField::new(3).unwrap();
        let r = Matrix::from_rows(k, &[vec![0, -1], vec![1, 0]]);
        let mu = minimal_polynomial(k, &[r]);
        assert_eq!(mu, vec![1, 0, 1]);
        assert!(roots(k, &mu).is_empty());
    }
}
