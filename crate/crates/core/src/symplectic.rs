//! Integer symplectic bases for unimodular skew-symmetric forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

type IntVec = Vec<BigInt>;

/// Returns a unimodular `P` with `P S P^T = [[0, I_k], [-I_k, 0]]`.
///
/// Rows of `P` are a symplectic basis `e_1..e_k, f_1..f_k` for the form
/// `(u, v) -> u^T S v`. Each step takes the first remaining basis vector `e`,
/// runs a Euclidean reduction on the other basis vectors until exactly one
/// of them pairs nontrivially with `e` (necessarily to `±1`), calls it `f`,
/// and projects the rest onto the complement of `span(e, f)`.
pub fn symplectic_normalize(s: &IntMatrix) -> Result<IntMatrix> {
    if !s.is_square() {
        return Err(Error::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    let n = s.rows();
    if !n.is_multiple_of(2) {
        return Err(Error::invariant("even size", format!("size {n}")));
    }
    if !s.is_skew_symmetric() {
        return Err(Error::invariant("skew-symmetric", ""));
    }
    let det = s.det()?;
    if !det.magnitude().is_one() {
        return Err(Error::invariant("unimodular", format!("det = {det}")));
    }

    let form = |u: &IntVec, v: &IntVec| -> BigInt {
        let sv = s.mul_vec(v).expect("matching size");
        u.iter().zip(&sv).map(|(a, b)| a * b).sum()
    };

    let mut basis: Vec<IntVec> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut es = Vec::with_capacity(n / 2);
    let mut fs = Vec::with_capacity(n / 2);

    while !basis.is_empty() {
        let e = basis.remove(0);
        let mut pairings: Vec<BigInt> = basis.iter().map(|b| form(&e, b)).collect();
        loop {
            let nonzero: Vec<usize> = (0..basis.len()).filter(|&i| !pairings[i].is_zero()).collect();
            let Some(&p) = nonzero.iter().min_by_key(|&&i| pairings[i].abs()) else {
                return Err(Error::invariant("unimodular", "degenerate vector"));
            };
            if nonzero.len() == 1 {
                break;
            }
            for &i in &nonzero {
                if i == p {
                    continue;
                }
                let q = pairings[i].div_floor(&pairings[p]);
                let (bp, pp) = (basis[p].clone(), pairings[p].clone());
                for (x, y) in basis[i].iter_mut().zip(&bp) {
                    *x -= &q * y;
                }
                pairings[i] -= &q * &pp;
            }
        }
        let p = (0..basis.len()).find(|&i| !pairings[i].is_zero()).unwrap();
        let mut f = basis.remove(p);
        let c = pairings.remove(p);
        if !c.magnitude().is_one() {
            return Err(Error::invariant("unimodular", format!("pairing {c}")));
        }
        if c.is_negative() {
            f.iter_mut().for_each(|x| *x = -x.clone());
        }
        // u -> u - w(u, f) e + w(u, e) f kills the pairings with e and f
        for u in basis.iter_mut() {
            let uf = form(u, &f);
            let ue = form(u, &e);
            for ((x, a), b) in u.iter_mut().zip(&e).zip(&f) {
                *x = x.clone() - &uf * a + &ue * b;
            }
        }
        es.push(e);
        fs.push(f);
    }

    let rows: Vec<IntVec> = es.into_iter().chain(fs).collect();
    IntMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn congruent(p: &IntMatrix, s: &IntMatrix) -> IntMatrix {
        p.checked_mul(s).unwrap().checked_mul(&p.transpose()).unwrap()
    }

    #[test]
    fn standard_form_is_fixed() {
        for k in 0..4 {
            let s = IntMatrix::standard_symplectic(k);
            assert_eq!(symplectic_normalize(&s).unwrap(), IntMatrix::identity(2 * k));
        }
    }

    #[test]
    fn sign_fix() {
        let s = IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]).unwrap();
        let p = symplectic_normalize(&s).unwrap();
        assert_eq!(congruent(&p, &s), IntMatrix::standard_symplectic(1));
        assert!(p.det().unwrap().magnitude().is_one());
    }

    #[test]
    fn rejects_bad_input() {
        let odd = IntMatrix::zeros(3, 3);
        assert!(matches!(symplectic_normalize(&odd), Err(Error::Invariant { invariant: "even size", .. })));
        let doubled = IntMatrix::standard_symplectic(1).scale(&BigInt::from(2));
        assert!(matches!(symplectic_normalize(&doubled), Err(Error::Invariant { invariant: "unimodular", .. })));
        let sym = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert!(matches!(symplectic_normalize(&sym), Err(Error::Invariant { invariant: "skew-symmetric", .. })));
    }

    #[test]
    fn random_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for k in 1..=3 {
            for _ in 0..10 {
                let s = random::random_unimodular_skew(&mut rng, k);
                let p = symplectic_normalize(&s).unwrap();
                assert_eq!(congruent(&p, &s), IntMatrix::standard_symplectic(k));
                assert!(p.det().unwrap().magnitude().is_one());
            }
        }
    }
}
