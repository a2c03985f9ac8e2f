//! Alexander polynomials and Levine-Tristram signatures.
//!
//! Signatures are computed numerically from the eigenvalues of a hermitian
//! complex matrix. They are locally constant in `z` away from roots of the
//! Alexander polynomial, where the form degenerates and the evaluation is
//! reported as indeterminate.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Signed};

use crate::data::SeifertData;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::mk::MKForm;

/// Relative eigenvalue threshold below which a signature is indeterminate.
pub const ZERO_THRESHOLD: f64 = 1e-9;

/// Tolerance on `|z| = 1` for evaluation points.
pub const UNIT_CIRCLE_TOLERANCE: f64 = 1e-9;

/// `det(tA - A^T)`, normalized by a unit `±t^k` so that `Δ(t) = Δ(t^-1)` and
/// `Δ(1) = 1`.
pub fn alexander_polynomial(seifert: &SeifertData) -> LaurentPoly {
    let det = seifert.alexander_matrix().det().expect("square");
    normalize_alexander(&det).expect("Seifert data has a symmetric Alexander polynomial with Δ(1) = ±1")
}

/// Normalizes `p` up to units to be symmetric with `p(1) = 1`, when possible.
pub fn normalize_alexander(p: &LaurentPoly) -> Option<LaurentPoly> {
    let high = p.high_exponent()?;
    let span = high + p.low_exponent();
    if span % 2 != 0 {
        return None;
    }
    let centred = p.shift(-span / 2);
    let at_one = centred.eval_at_one();
    let normalized = if at_one.is_one() {
        centred
    } else if (-at_one).is_one() {
        -centred
    } else {
        return None;
    };
    (normalized.conjugate() == normalized).then_some(normalized)
}

/// Rejects points off the unit circle and the point `1`.
pub fn check_circle_point(z: Complex64) -> Result<()> {
    if (z.norm() - 1.0).abs() > UNIT_CIRCLE_TOLERANCE || (z - 1.0).norm() < UNIT_CIRCLE_TOLERANCE {
        return Err(Error::InvalidPoint { re: z.re, im: z.im });
    }
    Ok(())
}

/// Signature of a hermitian matrix: positive minus negative eigenvalues.
pub fn hermitian_signature(h: &DMatrix<Complex64>) -> Result<i64> {
    if h.nrows() == 0 {
        return Ok(0);
    }
    let threshold = ZERO_THRESHOLD * h.norm();
    let eigenvalues = h.clone().symmetric_eigenvalues();
    let smallest = eigenvalues.iter().map(|x| x.abs()).fold(f64::INFINITY, f64::min);
    if smallest.is_nan() || smallest < threshold || threshold == 0.0 {
        return Err(Error::Indeterminate { smallest, threshold });
    }
    Ok(eigenvalues.iter().map(|&x| if x > 0.0 { 1 } else { -1 }).sum())
}

/// `σ_z(K)`: signature of `(1 - z) A + (1 - conj z) A^T`.
pub fn levine_tristram_signature(seifert: &SeifertData, z: Complex64) -> Result<i64> {
    check_circle_point(z)?;
    let a = seifert.matrix();
    let n = a.rows();
    let (s, sbar) = (1.0 - z, 1.0 - z.conj());
    let entry = |i: usize, j: usize| num_traits::ToPrimitive::to_f64(a.get(i, j)).unwrap_or(f64::NAN);
    let h = DMatrix::from_fn(n, n, |i, j| s * entry(i, j) + sbar * entry(j, i));
    hermitian_signature(&h)
}

/// Numerical evaluation of a Laurent matrix at `z`.
pub fn evaluate_matrix(m: &crate::Matrix<LaurentPoly>, z: Complex64) -> Result<DMatrix<Complex64>> {
    let mut out = DMatrix::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(i, j)] = m.get(i, j).eval(z)?;
        }
    }
    Ok(out)
}

/// `sign(M_K(z))`.
pub fn mk_signature(mk: &MKForm, z: Complex64) -> Result<i64> {
    check_circle_point(z)?;
    hermitian_signature(&evaluate_matrix(mk.matrix(), z)?)
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ProfilePoint {
    /// Angle `θ` of `z = e^{iθ}`.
    pub theta: f64,
    /// `None` where the evaluation is indeterminate.
    pub signature: Option<i64>,
}

/// `σ_z` at `z = e^{iπj/(samples+1)}` for `j = 1..=samples`.
pub fn signature_profile(seifert: &SeifertData, samples: usize) -> Vec<ProfilePoint> {
    (1..=samples)
        .map(|j| {
            let theta = std::f64::consts::PI * j as f64 / (samples + 1) as f64;
            let z = Complex64::from_polar(1.0, theta);
            ProfilePoint {
                theta,
                signature: levine_tristram_signature(seifert, z).ok(),
            }
        })
        .collect()
}
