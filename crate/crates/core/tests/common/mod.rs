#![allow(dead_code)]

use gradmod::exactla::{Field, Matrix, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A random matrix of size at most 8×8; half the time a product of two
/// thinner matrices, so rank deficiency is common.
pub fn random_matrix(rng: &mut ChaCha8Rng, field: Field) -> Matrix {
    let rows = rng.gen_range(1..=8);
    let cols = rng.gen_range(1..=8);
    let entries = |r: usize, c: usize, rng: &mut ChaCha8Rng| {
        let data: Vec<Vec<i64>> = (0..r)
            .map(|_| {
                (0..c)
                    .map(|_| match field {
                        Field::Prime(p) if rng.gen_bool(0.5) => rng.gen_range(0..p as i64),
                        _ if rng.gen_bool(0.3) => 0,
                        _ => rng.gen_range(-5..=5),
                    })
                    .collect()
            })
            .collect();
        Matrix::from_i64(field, &data)
    };
    if rng.gen_bool(0.5) {
        let inner = rng.gen_range(1..=rows.min(cols));
        let a = entries(rows, inner, rng);
        let b = entries(inner, cols, rng);
        a.mul(&b).expect("inner dimensions agree")
    } else {
        entries(rows, cols, rng)
    }
}

pub fn random_vector(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| field.from_i64(rng.gen_range(-7..=7))).collect()
}

/// `A·K = 0`, rank-nullity, rref idempotence and membership of `A·c`.
pub fn check_matrix(a: &Matrix, c: &[Scalar]) -> Result<(), String> {
    let k = a.kernel_basis();
    if k.cols() > 0 && !a.mul(&k).map_err(|e| e.to_string())?.is_zero() {
        return Err(format!("A·K != 0 for\n{a:?}"));
    }
    let rank = a.rank();
    if rank + k.cols() != a.cols() {
        return Err(format!("rank {rank} + nullity {} != {} for\n{a:?}", k.cols(), a.cols()));
    }
    let r = a.rref();
    if r.reduced.rref().reduced != r.reduced {
        return Err(format!("rref not idempotent for\n{a:?}"));
    }
    let v = a.mul_vec(c).map_err(|e| e.to_string())?;
    match a.membership(&v).map_err(|e| e.to_string())? {
        Some(c2) if a.mul_vec(&c2).map_err(|e| e.to_string())? == v => Ok(()),
        Some(_) => Err(format!("membership returned a wrong preimage for\n{a:?}")),
        None => Err(format!("A·c not found in the column span of\n{a:?}")),
    }
}
