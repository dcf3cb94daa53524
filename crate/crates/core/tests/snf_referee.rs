mod common;

use arcstab::zchain::{snf, SparseIntMatrix};
use common::{bareiss_det, determinantal_factors, random_matrix, textbook_snf};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check_transforms(a: &SparseIntMatrix) {
    let r = snf(a, true);
    let t = r.transforms.as_ref().unwrap();
    let d = t.u.mul(a).unwrap().mul(&t.v).unwrap();
    let mut diag = SparseIntMatrix::zeros(a.rows(), a.cols());
    for (i, f) in r.invariant_factors.iter().enumerate() {
        diag.set(i, i, f.clone()).unwrap();
    }
    assert_eq!(d, diag);
    assert!(bareiss_det(&t.u).abs().is_one());
    assert!(bareiss_det(&t.v).abs().is_one());
}

#[test]
fn matches_textbook_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240611);
    for case in 0..200 {
        let density = [0.2, 0.5, 0.9][case % 3];
        let dense = random_matrix(&mut rng, 12, density);
        let a = SparseIntMatrix::from_dense(&dense).unwrap();
        let expected = textbook_snf(&dense);
        let sparse = snf(&a, false);
        assert_eq!(sparse.invariant_factors, expected, "case {case}: {dense:?}");
        assert_eq!(snf(&a, true).invariant_factors, expected, "case {case}");
        check_transforms(&a);
    }
}

#[test]
fn matches_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let dense = random_matrix(&mut rng, 4, 0.6);
        let a = SparseIntMatrix::from_dense(&dense).unwrap();
        assert_eq!(snf(&a, false).invariant_factors, determinantal_factors(&dense), "{dense:?}");
    }
}

#[test]
fn factors_form_a_divisibility_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let dense = random_matrix(&mut rng, 10, 0.4);
        let f = snf(&SparseIntMatrix::from_dense(&dense).unwrap(), false).invariant_factors;
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]) == BigInt::from(0), "{f:?}");
        }
        assert!(f.iter().all(|d| d > &BigInt::from(0)));
    }
}

#[test]
fn fixed_examples() {
    let a = SparseIntMatrix::from_dense(&[vec![2, 4], vec![6, 8]]).unwrap();
    assert_eq!(textbook_snf(&[vec![2, 4], vec![6, 8]]), vec![BigInt::from(2), BigInt::from(4)]);
    assert_eq!(snf(&a, false).invariant_factors, vec![BigInt::from(2), BigInt::from(4)]);
    let z = SparseIntMatrix::zeros(4, 3);
    assert!(snf(&z, false).invariant_factors.is_empty());
    check_transforms(&z);
    check_transforms(&SparseIntMatrix::zeros(0, 3));
}
