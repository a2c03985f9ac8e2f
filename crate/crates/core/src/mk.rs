//! The hermitian presentation matrix `M_K(t)`, whose inverse (at `t^-1`)
//! is also the pairing matrix.
//!
//! After a congruence `A -> P A P^T` making `A - A^T` the standard form
//! `[[0, I_k], [-I_k, 0]]`,
//!
//! ```text
//! M_K(t) = diag((1 - t^-1)^-1 I, I) A diag(I, (1 - t) I)
//!        + diag(I, (1 - t^-1) I) A^T diag((1 - t)^-1 I, I)
//! ```
//!
//! and the pairing on `Λ^2k / M_K(t)` is `(v, w) -> -v^T M_K(t^-1)^-1 conj(w)`.
//! The first `k` coordinates form the `(1 - t^-1)^-1` block.

use num_traits::{One, Zero};

use crate::data::SeifertData;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::{IntMatrix, Matrix};
use crate::pairing::{FormMatrix, PairingSource, PresentedPairing};
use crate::qmod::QModLambda;
use crate::ratfunc::RationalFunction;
use crate::symplectic::symplectic_normalize;

#[derive(Clone, Debug)]
pub struct MKForm {
    matrix: Matrix<LaurentPoly>,
    congruence: IntMatrix,
    normalized: IntMatrix,
    source: SeifertData,
    pairing: PresentedPairing,
}

fn diagonal_blocks(k: usize, first: &RationalFunction, second: &RationalFunction) -> Matrix<RationalFunction> {
    Matrix::from_fn(2 * k, 2 * k, |i, j| match (i == j, i < k) {
        (true, true) => first.clone(),
        (true, false) => second.clone(),
        _ => RationalFunction::zero(),
    })
}

impl MKForm {
    pub fn new(seifert: &SeifertData) -> Result<Self> {
        let a = seifert.matrix();
        let congruence = symplectic_normalize(&a.checked_sub(&a.transpose())?)?;
        let normalized = congruence.checked_mul(a)?.checked_mul(&congruence.transpose())?;
        let k = seifert.genus();

        let one = RationalFunction::one();
        let lp = |s: &str| RationalFunction::from_laurent(&s.parse::<LaurentPoly>().expect("literal"));
        let one_minus_tinv = lp("1 - t^-1");
        let one_minus_t = lp("1 - t");
        let d1 = diagonal_blocks(k, &one.checked_div(&one_minus_tinv)?, &one);
        let d2 = diagonal_blocks(k, &one, &one_minus_t);
        let d3 = diagonal_blocks(k, &one, &one_minus_tinv);
        let d4 = diagonal_blocks(k, &one.checked_div(&one_minus_t)?, &one);

        let ar = normalized.to_laurent().to_rational();
        let first = d1.checked_mul(&ar)?.checked_mul(&d2)?;
        let second = d3.checked_mul(&ar.transpose())?.checked_mul(&d4)?;
        let sum = first.checked_add(&second)?;

        let mut entries = Vec::with_capacity(sum.entries().len());
        for (idx, x) in sum.entries().iter().enumerate() {
            let Some(p) = x.to_laurent() else {
                return Err(Error::invariant(
                    "M_K entries in Λ",
                    format!("entry ({}, {}) = {x}", idx / (2 * k) + 1, idx % (2 * k) + 1),
                ));
            };
            entries.push(p);
        }
        let matrix = Matrix::new(2 * k, 2 * k, entries)?;
        if matrix.conjugate_transpose() != matrix {
            return Err(Error::invariant("M_K hermitian", format!("M_K = {matrix}")));
        }

        // pairing matrix -M_K(t^-1)^-1 = -adj(M_K(t^-1)) / det(M_K(t^-1))
        let at_inverse = matrix.conjugate();
        let det = at_inverse.det()?;
        if det.is_zero() {
            return Err(Error::invariant("det(M_K) != 0", ""));
        }
        let form = FormMatrix::new(at_inverse.adjugate()?.map(|a| -a), det);
        let pairing = PresentedPairing::from_parts(matrix.clone(), form, PairingSource::MK)?;

        Ok(MKForm {
            matrix,
            congruence,
            normalized,
            source: seifert.clone(),
            pairing,
        })
    }

    /// `M_K(t)`.
    pub fn matrix(&self) -> &Matrix<LaurentPoly> {
        &self.matrix
    }

    /// The unimodular `P` with `P (A - A^T) P^T` standard.
    pub fn congruence(&self) -> &IntMatrix {
        &self.congruence
    }

    /// `P A P^T`.
    pub fn normalized_seifert(&self) -> &IntMatrix {
        &self.normalized
    }

    pub fn source(&self) -> &SeifertData {
        &self.source
    }

    pub fn det(&self) -> &LaurentPoly {
        self.pairing.presentation_det()
    }

    /// The presented pairing on `Λ^2k / M_K(t)`.
    pub fn pairing(&self) -> &PresentedPairing {
        &self.pairing
    }

    /// `-v^T M_K(t^-1)^-1 conj(w)` in `Q(t)/Λ`.
    pub fn pairing_value(&self, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<QModLambda> {
        self.pairing.value(v, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::basis_vector;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn trefoil() -> SeifertData {
        SeifertData::from_i64_rows(&[&[-1, 1], &[0, -1]]).unwrap()
    }

    #[test]
    fn trefoil_matrix_by_hand() {
        // A - A^T is already standard, so P = I. With k = 1:
        //   D1 A D2 = [[-1/(1 - t^-1), (1 - t)/(1 - t^-1)], [0, -(1 - t)]]
        //           = [[-t/(t - 1), -t], [0, t - 1]]
        //   D3 A^T D4 = [[-1/(1 - t), 0], [(1 - t^-1)/(1 - t), -(1 - t^-1)]]
        //             = [[1/(t - 1), 0], [-t^-1, -1 + t^-1]]
        // so M_K = [[-1, -t], [-t^-1, t - 2 + t^-1]].
        let mk = MKForm::new(&trefoil()).unwrap();
        assert_eq!(mk.congruence(), &IntMatrix::identity(2));
        let expected = Matrix::from_rows(vec![vec![lp("-1"), lp("-t")], vec![lp("-t^-1"), lp("t - 2 + t^-1")]]).unwrap();
        assert_eq!(mk.matrix(), &expected);
        assert_eq!(mk.matrix().conjugate_transpose(), expected);
        // -(t - 2 + t^-1) - t * t^-1 = -t + 1 - t^-1
        assert_eq!(mk.det(), &lp("-t + 1 - t^-1"));
    }

    #[test]
    fn unknot_is_empty() {
        let mk = MKForm::new(&SeifertData::unknot()).unwrap();
        assert_eq!(mk.matrix().rows(), 0);
        assert_eq!(mk.det(), &LaurentPoly::one());
    }

    #[test]
    fn trefoil_pairing_values() {
        let mk = MKForm::new(&trefoil()).unwrap();
        let (e1, e2) = (basis_vector(2, 0), basis_vector(2, 1));
        let zero = vec![LaurentPoly::zero(); 2];
        assert!(mk.pairing_value(&zero, &e1).unwrap().is_zero());
        // M_K(t^-1) = [[-1, -t^-1], [-t, t - 2 + t^-1]], det = -t + 1 - t^-1;
        // the (1,1) entry of -M_K(t^-1)^-1 is -(t - 2 + t^-1) / (-t + 1 - t^-1)
        let d = lp("-t + 1 - t^-1");
        let expected = RationalFunction::from_laurent_fraction(&lp("-t + 2 - t^-1"), &d).unwrap();
        assert_eq!(mk.pairing_value(&e1, &e1).unwrap(), QModLambda::canonicalize(&expected));
        assert_eq!(mk.pairing_value(&e1, &e2).unwrap(), mk.pairing_value(&e2, &e1).unwrap().conjugate());
    }

    #[test]
    fn stabilized_input_is_normalized_first() {
        let s = trefoil()
            .stabilize(&[1.into(), (-2).into()], crate::data::Stabilization::Upper)
            .unwrap();
        let mk = MKForm::new(&s).unwrap();
        let skew = mk.normalized_seifert().checked_sub(&mk.normalized_seifert().transpose()).unwrap();
        assert_eq!(skew, IntMatrix::standard_symplectic(2));
        assert!(mk.det().is_associate(&lp("t^2 - t + 1")));
    }
}
