//! Dense matrices over exact rings: Bareiss determinants, cofactor
//! adjugates, and Gauss-Jordan inversion over fields.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ratfunc::RationalFunction;
use crate::ring::{ExactDiv, Field, Ring};

/// Row-major dense matrix. `0 x 0` matrices are valid.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

pub type IntMatrix = Matrix<BigInt>;

impl<R> Matrix<R> {
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: bad.len(),
            });
        }
        Ok(Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[R]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn map<S>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl<R: Clone> Matrix<R> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// The matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let data = (0..self.rows)
            .filter(|&r| r != i)
            .flat_map(|r| {
                (0..self.cols)
                    .filter(move |&c| c != j)
                    .map(move |c| self.get(r, c).clone())
            })
            .collect();
        Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a.clone() + b.clone()))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a.clone() - b.clone()))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(R::zero(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        }))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| c.clone() * a.clone())
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(R::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Bilinear form `v^T * self * w`.
    pub fn bilinear(&self, v: &[R], w: &[R]) -> Result<R> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mw = self.mul_vec(w)?;
        Ok(v.iter()
            .zip(&mw)
            .fold(R::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose().map(|a| -a.clone())
    }

    /// Block diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Matrix::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => R::zero(),
            }
        })
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(())
    }

    fn zip_with(&self, rhs: &Self, mut f: impl FnMut(&R, &R) -> R) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl<R: ExactDiv> Matrix<R> {
    /// Determinant by fraction-free (Bareiss) elimination. Pivots are the
    /// first nonzero entry in the current column.
    pub fn det(&self) -> Result<R> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        let mut a = self.data.clone();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Ok(R::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                let factor = a[i * n + k].clone();
                for j in k + 1..n {
                    let num = pivot.clone() * a[i * n + j].clone() - factor.clone() * a[k * n + j].clone();
                    a[i * n + j] = num
                        .div_exact(&prev)
                        .expect("Bareiss quotient is exact in an integral domain");
                }
                a[i * n + k] = R::zero();
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Classical adjugate, `adj(M) * M = det(M) * I`, from cofactors.
    pub fn adjugate(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        if n == 1 {
            return Ok(Matrix::identity(1));
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).det()?;
                out.set(j, i, if (i + j) % 2 == 0 { c } else { -c });
            }
        }
        Ok(out)
    }
}

impl<R: Field> Matrix<R> {
    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for k in 0..n {
            let p = (k..n).find(|&i| !a.get(i, k).is_zero()).ok_or(Error::Singular)?;
            if p != k {
                a.swap_rows(p, k);
                inv.swap_rows(p, k);
            }
            let pinv = a.get(k, k).inv().ok_or(Error::Singular)?;
            a.scale_row(k, &pinv);
            inv.scale_row(k, &pinv);
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone();
                a.add_row_multiple(i, k, &f);
                inv.add_row_multiple(i, k, &f);
            }
        }
        Ok(inv)
    }

    /// The unique `x` with `self * x = v`.
    pub fn solve(&self, v: &[R]) -> Result<Vec<R>> {
        self.require_square()?;
        let n = self.rows;
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        let mut a = self.clone();
        let mut b = v.to_vec();
        for k in 0..n {
            let p = (k..n).find(|&i| !a.get(i, k).is_zero()).ok_or(Error::Singular)?;
            if p != k {
                a.swap_rows(p, k);
                b.swap(p, k);
            }
            let pinv = a.get(k, k).inv().ok_or(Error::Singular)?;
            a.scale_row(k, &pinv);
            b[k] = pinv * b[k].clone();
            for i in k + 1..n {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone();
                a.add_row_multiple(i, k, &f);
                b[i] = b[i].clone() - f * b[k].clone();
            }
        }
        for k in (0..n).rev() {
            for i in 0..k {
                let f = a.get(i, k).clone();
                if !f.is_zero() {
                    b[i] = b[i].clone() - f * b[k].clone();
                }
            }
        }
        Ok(b)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, f: &R) {
        for c in 0..self.cols {
            let x = f.clone() * self.get(i, c).clone();
            self.set(i, c, x);
        }
    }

    /// row_i -= f * row_k
    fn add_row_multiple(&mut self, i: usize, k: usize, f: &R) {
        for c in 0..self.cols {
            let x = self.get(i, c).clone() - f.clone() * self.get(k, c).clone();
            self.set(i, c, x);
        }
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_laurent(&self) -> Matrix<LaurentPoly> {
        self.map(|a| LaurentPoly::constant(a.clone()))
    }

    /// The standard symplectic form `[[0, I_k], [-I_k, 0]]`.
    pub fn standard_symplectic(k: usize) -> Self {
        Matrix::from_fn(2 * k, 2 * k, |i, j| {
            if j == i + k && i < k {
                BigInt::one()
            } else if i == j + k && j < k {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }
}

impl Matrix<LaurentPoly> {
    /// Entrywise `t -> t^-1` followed by transposition.
    pub fn conjugate_transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conjugate())
    }

    pub fn conjugate(&self) -> Self {
        self.map(LaurentPoly::conjugate)
    }

    pub fn to_rational(&self) -> Matrix<RationalFunction> {
        self.map(RationalFunction::from_laurent)
    }
}

/// Conjugates every entry of a Laurent vector.
pub fn conjugate_vec(v: &[LaurentPoly]) -> Vec<LaurentPoly> {
    v.iter().map(LaurentPoly::conjugate).collect()
}

impl<R: fmt::Display> fmt::Display for Matrix<R> {
    /// Renders as `[[a, b], [c, d]]`; the empty matrix is `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
