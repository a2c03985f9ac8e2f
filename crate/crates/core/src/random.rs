//! Seeded generators for the property suites.
//!
//! All generators draw from a caller-supplied RNG; [`rng`] builds the
//! ChaCha8 generator used throughout so runs are reproducible from a seed.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::data::SeifertData;
use crate::laurent::LaurentPoly;
use crate::matrix::IntMatrix;
use crate::pairing::LambdaVector;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seifert matrix `A = S + N` of size `2g`: `S` symmetric with entries in
/// `[-coeff_bound, coeff_bound]`, `N = [[0, I], [0, 0]]`. Then `A - A^T` is
/// exactly the standard symplectic form.
pub fn random_seifert(genus: usize, coeff_bound: i64, seed: u64) -> SeifertData {
    random_seifert_with(&mut rng(seed), genus, coeff_bound)
}

pub fn random_seifert_with<R: Rng>(rng: &mut R, genus: usize, coeff_bound: i64) -> SeifertData {
    let n = 2 * genus;
    let mut a = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let c = BigInt::from(rng.random_range(-coeff_bound..=coeff_bound));
            a.set(i, j, c.clone());
            a.set(j, i, c);
        }
    }
    for i in 0..genus {
        let bumped = a.get(i, i + genus) + BigInt::one();
        a.set(i, i + genus, bumped);
    }
    SeifertData::new(a).expect("A - A^T is standard by construction")
}

/// Laurent polynomial with exponents in `[-exp_bound, exp_bound]` and
/// coefficients in `[-coeff_bound, coeff_bound]`.
pub fn random_laurent<R: Rng>(rng: &mut R, exp_bound: i64, coeff_bound: i64) -> LaurentPoly {
    let len = (2 * exp_bound + 1) as usize;
    let coeffs: Vec<BigInt> = (0..len)
        .map(|_| BigInt::from(rng.random_range(-coeff_bound..=coeff_bound)))
        .collect();
    LaurentPoly::new(-exp_bound, coeffs)
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize, exp_bound: i64, coeff_bound: i64) -> LambdaVector {
    (0..n).map(|_| random_laurent(rng, exp_bound, coeff_bound)).collect()
}

/// Product of random elementary integer matrices (row additions, swaps and
/// sign changes), hence unimodular.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut q = IntMatrix::identity(n);
    if n == 0 {
        return q;
    }
    for _ in 0..steps {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        match rng.random_range(0..4) {
            0 | 1 if i != j => {
                let c = BigInt::from(rng.random_range(-2i64..=2));
                for col in 0..n {
                    let x = q.get(i, col) + &c * q.get(j, col);
                    q.set(i, col, x);
                }
            }
            2 if i != j => {
                for col in 0..n {
                    let (a, b) = (q.get(i, col).clone(), q.get(j, col).clone());
                    q.set(i, col, b);
                    q.set(j, col, a);
                }
            }
            _ => {
                for col in 0..n {
                    let x = -q.get(i, col).clone();
                    q.set(i, col, x);
                }
            }
        }
    }
    q
}

/// `Q^T [[0, I], [-I, 0]] Q` for a random unimodular `Q`.
pub fn random_unimodular_skew<R: Rng>(rng: &mut R, genus: usize) -> IntMatrix {
    let q = random_unimodular(rng, 2 * genus, 6 * genus + 4);
    let standard = IntMatrix::standard_symplectic(genus);
    q.transpose()
        .checked_mul(&standard)
        .and_then(|m| m.checked_mul(&q))
        .expect("square")
}

/// Random integer column for stabilization moves.
pub fn random_int_vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<BigInt> {
    (0..n).map(|_| BigInt::from(rng.random_range(-bound..=bound))).collect()
}
