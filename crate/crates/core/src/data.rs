//! Input data for the three pairing constructions, validated on construction.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::{IntMatrix, Matrix};

/// A Seifert matrix `A` with `a_ij = lk(d_i, d_j^+)`.
///
/// Invariant: `A` is square of even size and `A - A^T` is unimodular.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeifertData {
    matrix: IntMatrix,
}

impl SeifertData {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() || !matrix.rows().is_multiple_of(2) {
            return Err(Error::invariant(
                "A square of even size",
                format!("{}x{}", matrix.rows(), matrix.cols()),
            ));
        }
        let skew = matrix.checked_sub(&matrix.transpose())?;
        let det = skew.det()?;
        if !is_integer_unit(&det) {
            return Err(Error::invariant("det(A - A^T) = ±1", format!("det = {det}")));
        }
        Ok(SeifertData { matrix })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64_rows(rows)?)
    }

    /// The unknot's empty Seifert matrix.
    pub fn unknot() -> Self {
        SeifertData {
            matrix: IntMatrix::zeros(0, 0),
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Size `2g` of the matrix.
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    /// `tA - A^T`, the presentation matrix of the Alexander module.
    pub fn alexander_matrix(&self) -> Matrix<LaurentPoly> {
        let t = LaurentPoly::t();
        let a = self.matrix.to_laurent();
        a.scale(&t).checked_sub(&a.transpose()).expect("square")
    }

    /// Elementary S-equivalence enlargement by one hyperbolic pair.
    ///
    /// With `x` the supplied integer column (length `2g`):
    ///
    /// ```text
    /// Upper:  [ A  x  0 ]      Lower:  [ A    0  0 ]
    ///         [ 0  0  1 ]              [ x^T  0  0 ]
    ///         [ 0  0  0 ]              [ 0    1  0 ]
    /// ```
    ///
    /// The two new diagonal entries are zero and the only entry joining the
    /// new pair is a single `1`.
    pub fn stabilize(&self, x: &[BigInt], kind: Stabilization) -> Result<Self> {
        let n = self.size();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: x.len(),
            });
        }
        let a = &self.matrix;
        let enlarged = Matrix::from_fn(n + 2, n + 2, |i, j| match kind {
            Stabilization::Upper => match (i, j) {
                (i, j) if i < n && j < n => a.get(i, j).clone(),
                (i, j) if i < n && j == n => x[i].clone(),
                (i, j) if i == n && j == n + 1 => BigInt::from(1),
                _ => BigInt::zero(),
            },
            Stabilization::Lower => match (i, j) {
                (i, j) if i < n && j < n => a.get(i, j).clone(),
                (i, j) if i == n && j < n => x[j].clone(),
                (i, j) if i == n + 1 && j == n => BigInt::from(1),
                _ => BigInt::zero(),
            },
        });
        SeifertData::new(enlarged)
    }
}

fn is_integer_unit(x: &BigInt) -> bool {
    x.magnitude().is_one()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stabilization {
    Upper,
    Lower,
}

/// Monodromy `P` and intersection form `J` of a surface bundle over the
/// circle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FibredData {
    monodromy: IntMatrix,
    intersection: IntMatrix,
}

impl FibredData {
    pub fn new(monodromy: IntMatrix, intersection: IntMatrix) -> Result<Self> {
        if !monodromy.is_square() {
            return Err(Error::NotSquare {
                rows: monodromy.rows(),
                cols: monodromy.cols(),
            });
        }
        if (intersection.rows(), intersection.cols()) != (monodromy.rows(), monodromy.cols()) {
            return Err(Error::invariant(
                "P and J of equal size",
                format!(
                    "P is {}x{}, J is {}x{}",
                    monodromy.rows(),
                    monodromy.cols(),
                    intersection.rows(),
                    intersection.cols()
                ),
            ));
        }
        let det = monodromy.det()?;
        if !is_integer_unit(&det) {
            return Err(Error::invariant("P invertible over the integers", format!("det P = {det}")));
        }
        if !intersection.is_skew_symmetric() {
            return Err(Error::invariant("J skew-symmetric", ""));
        }
        let pulled_back = monodromy
            .transpose()
            .checked_mul(&intersection)?
            .checked_mul(&monodromy)?;
        if pulled_back != intersection {
            return Err(Error::invariant("P^T J P = J", format!("P^T J P = {pulled_back}")));
        }
        Ok(FibredData {
            monodromy,
            intersection,
        })
    }

    pub fn monodromy(&self) -> &IntMatrix {
        &self.monodromy
    }

    pub fn intersection(&self) -> &IntMatrix {
        &self.intersection
    }

    pub fn size(&self) -> usize {
        self.monodromy.rows()
    }
}

/// The maps `iota_+`, `iota_-` from `H_1(F)` to `H_1(Y)` for a dual surface
/// `F` with complement `Y`, and the intersection form `J` on `H_1(F)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualSurfaceData {
    iota_plus: IntMatrix,
    iota_minus: IntMatrix,
    intersection: IntMatrix,
}

impl DualSurfaceData {
    pub fn new(iota_plus: IntMatrix, iota_minus: IntMatrix, intersection: IntMatrix) -> Result<Self> {
        if (iota_plus.rows(), iota_plus.cols()) != (iota_minus.rows(), iota_minus.cols()) {
            return Err(Error::invariant(
                "Iplus and Iminus of equal size",
                format!(
                    "{}x{} vs {}x{}",
                    iota_plus.rows(),
                    iota_plus.cols(),
                    iota_minus.rows(),
                    iota_minus.cols()
                ),
            ));
        }
        if !iota_plus.is_square() {
            return Err(Error::invariant(
                "det(Iplus - t^-1 Iminus) != 0",
                format!("{}x{} is not square", iota_plus.rows(), iota_plus.cols()),
            ));
        }
        if !intersection.is_square() || intersection.rows() != iota_plus.cols() {
            return Err(Error::invariant(
                "J of size matching Iplus",
                format!("J is {}x{}", intersection.rows(), intersection.cols()),
            ));
        }
        if !intersection.is_skew_symmetric() {
            return Err(Error::invariant("J skew-symmetric", ""));
        }
        let data = DualSurfaceData {
            iota_plus,
            iota_minus,
            intersection,
        };
        if data.mayer_vietoris_matrix().det()?.is_zero() {
            return Err(Error::invariant("det(Iplus - t^-1 Iminus) != 0", ""));
        }
        Ok(data)
    }

    pub fn iota_plus(&self) -> &IntMatrix {
        &self.iota_plus
    }

    pub fn iota_minus(&self) -> &IntMatrix {
        &self.iota_minus
    }

    pub fn intersection(&self) -> &IntMatrix {
        &self.intersection
    }

    /// `iota_+ - t^-1 iota_-`, invertible over `Q(t)`.
    pub fn mayer_vietoris_matrix(&self) -> Matrix<LaurentPoly> {
        let tinv = LaurentPoly::monomial(1, -1);
        self.iota_plus
            .to_laurent()
            .checked_sub(&self.iota_minus.to_laurent().scale(&tinv))
            .expect("equal sizes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn invariant_name(e: Error) -> &'static str {
        match e {
            Error::Invariant { invariant, .. } => invariant,
            other => panic!("expected invariant violation, got {other:?}"),
        }
    }

    #[test]
    fn seifert_validation() {
        assert!(SeifertData::from_i64_rows(&[&[-1, 1], &[0, -1]]).is_ok());
        assert!(SeifertData::new(IntMatrix::zeros(0, 0)).is_ok());
        let odd = SeifertData::from_i64_rows(&[&[1]]).unwrap_err();
        assert_eq!(invariant_name(odd), "A square of even size");
        let symmetric = SeifertData::from_i64_rows(&[&[1, 2], &[2, 1]]).unwrap_err();
        assert_eq!(invariant_name(symmetric), "det(A - A^T) = ±1");
        let wide = SeifertData::from_i64_rows(&[&[-1, 2], &[0, -1]]).unwrap_err();
        assert_eq!(invariant_name(wide), "det(A - A^T) = ±1");
    }

    #[test]
    fn alexander_matrix_of_trefoil() {
        let s = SeifertData::from_i64_rows(&[&[-1, 1], &[0, -1]]).unwrap();
        let expected: Vec<LaurentPoly> = ["-t + 1", "t", "-1", "-t + 1"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(s.alexander_matrix().entries(), &expected[..]);
    }

    #[test]
    fn stabilization_shapes() {
        let s = SeifertData::from_i64_rows(&[&[-1, 1], &[0, -1]]).unwrap();
        let x = [BigInt::from(2), BigInt::from(-1)];
        let up = s.stabilize(&x, Stabilization::Upper).unwrap();
        assert_eq!(
            up.matrix(),
            &int(&[&[-1, 1, 2, 0], &[0, -1, -1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]])
        );
        let low = s.stabilize(&x, Stabilization::Lower).unwrap();
        assert_eq!(
            low.matrix(),
            &int(&[&[-1, 1, 0, 0], &[0, -1, 0, 0], &[2, -1, 0, 0], &[0, 0, 1, 0]])
        );
        let u = SeifertData::unknot().stabilize(&[], Stabilization::Upper).unwrap();
        assert_eq!(u.matrix(), &int(&[&[0, 1], &[0, 0]]));
        assert!(s.stabilize(&x[..1], Stabilization::Upper).is_err());
    }

    #[test]
    fn fibred_validation() {
        let j = int(&[&[0, 1], &[-1, 0]]);
        assert!(FibredData::new(int(&[&[1, -1], &[1, 0]]), j.clone()).is_ok());
        let e = FibredData::new(int(&[&[2, 0], &[0, 2]]), j.clone()).unwrap_err();
        assert_eq!(invariant_name(e), "P invertible over the integers");
        let e = FibredData::new(int(&[&[1, 0], &[0, 1]]), int(&[&[0, 1], &[1, 0]])).unwrap_err();
        assert_eq!(invariant_name(e), "J skew-symmetric");
        // det -1 reverses the symplectic form
        let e = FibredData::new(int(&[&[0, 1], &[1, 0]]), j).unwrap_err();
        assert_eq!(invariant_name(e), "P^T J P = J");
        assert!(FibredData::new(IntMatrix::zeros(0, 0), IntMatrix::zeros(0, 0)).is_ok());
    }

    #[test]
    fn dual_surface_validation() {
        let a = int(&[&[-1, 1], &[0, -1]]);
        let j = a.checked_sub(&a.transpose()).unwrap();
        assert!(DualSurfaceData::new(a.clone(), a.transpose(), j.clone()).is_ok());
        let e = DualSurfaceData::new(IntMatrix::zeros(2, 2), IntMatrix::zeros(2, 2), j.clone()).unwrap_err();
        assert_eq!(invariant_name(e), "det(Iplus - t^-1 Iminus) != 0");
        let e = DualSurfaceData::new(a.clone(), a.transpose(), a.clone()).unwrap_err();
        assert_eq!(invariant_name(e), "J skew-symmetric");
    }
}
