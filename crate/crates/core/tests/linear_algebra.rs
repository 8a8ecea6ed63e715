mod common;

use common::{check_matrix, random_matrix, random_vector};
use gradmod::exactla::{Field, Matrix, Subspace};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field_of(rational: bool) -> Field {
    if rational {
        Field::Rational
    } else {
        Field::DEFAULT
    }
}

proptest! {
    #[test]
    fn kernel_rank_rref_membership(seed in any::<u64>(), rational in any::<bool>()) {
        let field = field_of(rational);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(&mut rng, field);
        let c = random_vector(&mut rng, field, a.cols());
        prop_assert_eq!(check_matrix(&a, &c), Ok(()));
    }

    #[test]
    fn transpose_keeps_rank(seed in any::<u64>(), rational in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(&mut rng, field_of(rational));
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn subspace_sum_and_intersection_dimensions(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = Field::DEFAULT;
        let a = random_matrix(&mut rng, field);
        let n = a.rows();
        let b = {
            let mut b = random_matrix(&mut rng, field);
            while b.rows() != n {
                b = random_matrix(&mut rng, field);
            }
            b
        };
        let u = Subspace::span(field, n, a.columns());
        let w = Subspace::span(field, n, b.columns());
        prop_assert_eq!(u.sum(&w).rank() + u.intersection(&w).rank(), u.rank() + w.rank());
        prop_assert!(u.intersection(&w).is_subspace_of(&u));
    }
}

#[test]
fn small_cases_by_hand() {
    let f = Field::DEFAULT;
    let a = Matrix::from_i64(f, &[vec![1, 2, 3], vec![2, 4, 6]]);
    assert_eq!(a.rank(), 1);
    assert_eq!(a.kernel_vectors().len(), 2);
    let q = Matrix::from_i64(Field::Rational, &[vec![2, 1], vec![1, 1]]);
    let v = vec![Field::Rational.from_i64(3), Field::Rational.from_i64(2)];
    // 2a + b = 3, a + b = 2.
    assert_eq!(q.membership(&v).unwrap(), Some(vec![Field::Rational.from_i64(1), Field::Rational.from_i64(1)]));
    let p2 = Field::prime(2).unwrap();
    assert_eq!(Matrix::from_i64(p2, &[vec![1, 1], vec![1, 1]]).rank(), 1);
    assert_eq!(Matrix::from_i64(Field::Rational, &[vec![1, 1], vec![1, -1]]).rank(), 2);
    assert_eq!(Matrix::from_i64(p2, &[vec![1, 1], vec![1, -1]]).rank(), 1);
}
