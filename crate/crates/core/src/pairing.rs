//! Presented Blanchfield pairings.
//!
//! A pairing is stored as a square presentation matrix `R` over `Λ` together
//! with a form matrix `N / d` (Laurent numerators over a common Laurent
//! denominator). The module is `Λ^n / R Λ^n` and the pairing of coordinate
//! vectors is the class of `v^T (N / d) conj(w)` in `Q(t)/Λ`, linear in the
//! first slot and conjugate-linear in the second.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::data::{DualSurfaceData, FibredData, SeifertData};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::{conjugate_vec, Matrix};
use crate::qmod::QModLambda;
use crate::ratfunc::RationalFunction;

/// Anything that evaluates a sesquilinear form into `Q(t)/Λ`.
pub trait PairingValue {
    fn pairing_value(&self, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<QModLambda>;
}

impl PairingValue for PresentedPairing {
    fn pairing_value(&self, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<QModLambda> {
        self.value(v, w)
    }
}

impl PairingValue for DualSurfaceEvaluator {
    fn pairing_value(&self, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<QModLambda> {
        self.value(v, w)
    }
}

/// A vector over `Λ`.
pub type LambdaVector = Vec<LaurentPoly>;

/// Coordinate vector `e_i` of length `n`.
pub fn basis_vector(n: usize, i: usize) -> LambdaVector {
    (0..n)
        .map(|k| if k == i { LaurentPoly::one() } else { LaurentPoly::zero() })
        .collect()
}

/// The sesquilinear form `(v, w) -> v^T (N / d) conj(w)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormMatrix {
    numerators: Matrix<LaurentPoly>,
    denominator: LaurentPoly,
}

impl FormMatrix {
    pub(crate) fn new(numerators: Matrix<LaurentPoly>, denominator: LaurentPoly) -> Self {
        debug_assert!(!denominator.is_zero());
        FormMatrix {
            numerators,
            denominator,
        }
    }

    pub fn numerators(&self) -> &Matrix<LaurentPoly> {
        &self.numerators
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    pub fn size(&self) -> usize {
        self.numerators.rows()
    }

    /// The form matrix as rational functions.
    pub fn to_rational(&self) -> Matrix<RationalFunction> {
        self.numerators.map(|a| {
            RationalFunction::from_laurent_fraction(a, &self.denominator).expect("nonzero denominator")
        })
    }

    /// The unreduced value `v^T (N / d) conj(w)` in `Q(t)`.
    pub fn raw_value(&self, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<RationalFunction> {
        let n = self.size();
        for len in [v.len(), w.len()] {
            if len != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: len,
                });
            }
        }
        let num = self.numerators.bilinear(v, &conjugate_vec(w))?;
        RationalFunction::from_laurent_fraction(&num, &self.denominator)
    }

    /// The value reduced into `Q(t)/Λ`.
    pub fn value(&self, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<QModLambda> {
        Ok(QModLambda::canonicalize(&self.raw_value(v, w)?))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairingSource {
    Seifert,
    Fibred,
    DualSurface,
    MK,
}

impl fmt::Display for PairingSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairingSource::Seifert => "seifert",
            PairingSource::Fibred => "fibred",
            PairingSource::DualSurface => "dual-surface",
            PairingSource::MK => "mk",
        })
    }
}

/// A Blanchfield pairing on the module presented by a square Laurent matrix.
#[derive(Clone, Debug)]
pub struct PresentedPairing {
    presentation: Matrix<LaurentPoly>,
    presentation_det: LaurentPoly,
    presentation_adj: Matrix<LaurentPoly>,
    form: FormMatrix,
    source: PairingSource,
}

impl PresentedPairing {
    pub(crate) fn from_parts(
        presentation: Matrix<LaurentPoly>,
        form: FormMatrix,
        source: PairingSource,
    ) -> Result<Self> {
        let presentation_det = presentation.det()?;
        if presentation_det.is_zero() {
            return Err(Error::Singular);
        }
        if form.size() != presentation.rows() {
            return Err(Error::DimensionMismatch {
                expected: presentation.rows(),
                found: form.size(),
            });
        }
        let presentation_adj = presentation.adjugate()?;
        Ok(PresentedPairing {
            presentation,
            presentation_det,
            presentation_adj,
            form,
            source,
        })
    }

    /// Module `Λ^2g / (tA - A^T)` with pairing matrix `(t - 1)(A - tA^T)^-1`.
    pub fn from_seifert(seifert: &SeifertData) -> Result<Self> {
        let a = seifert.matrix().to_laurent();
        let t = LaurentPoly::t();
        let pairing_base = a.checked_sub(&a.transpose().scale(&t))?;
        let det = pairing_base.det()?;
        if det.is_zero() {
            return Err(Error::invariant("det(A - tA^T) != 0", ""));
        }
        let t_minus_one = &t - &LaurentPoly::one();
        let form = FormMatrix::new(pairing_base.adjugate()?.scale(&t_minus_one), det);
        Self::from_parts(seifert.alexander_matrix(), form, PairingSource::Seifert)
    }

    /// Module `Λ^k / (tP - id)` with pairing matrix `J (t^-1 P - id)^-1`.
    pub fn from_fibred(fibred: &FibredData) -> Result<Self> {
        let k = fibred.size();
        let p = fibred.monodromy().to_laurent();
        let id = Matrix::identity(k);
        let presentation = p.scale(&LaurentPoly::t()).checked_sub(&id)?;
        if presentation.det()?.is_zero() {
            return Err(Error::invariant("det(tP - id) != 0", ""));
        }
        let inner = p.scale(&LaurentPoly::monomial(1, -1)).checked_sub(&id)?;
        let det = inner.det()?;
        let numerators = fibred.intersection().to_laurent().checked_mul(&inner.adjugate()?)?;
        Self::from_parts(presentation, FormMatrix::new(numerators, det), PairingSource::Fibred)
    }

    pub fn presentation(&self) -> &Matrix<LaurentPoly> {
        &self.presentation
    }

    /// `det` of the presentation matrix, the order of the module.
    pub fn presentation_det(&self) -> &LaurentPoly {
        &self.presentation_det
    }

    pub fn form(&self) -> &FormMatrix {
        &self.form
    }

    /// The pairing matrix over `Q(t)`.
    pub fn pairing_matrix(&self) -> Matrix<RationalFunction> {
        self.form.to_rational()
    }

    pub fn source(&self) -> PairingSource {
        self.source
    }

    /// Number of generators.
    pub fn size(&self) -> usize {
        self.presentation.rows()
    }

    /// `Bl(v, w)` as a canonical class in `Q(t)/Λ`.
    pub fn value(&self, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<QModLambda> {
        self.form.value(v, w)
    }

    /// Values `Bl(e_i, e_j)` on all pairs of generators.
    pub fn generator_values(&self) -> Matrix<QModLambda> {
        let n = self.size();
        Matrix::from_fn(n, n, |i, j| {
            self.value(&basis_vector(n, i), &basis_vector(n, j))
                .expect("generator dimensions")
        })
    }

    /// The relation `R x`, which is zero in the module.
    pub fn relation(&self, x: &[LaurentPoly]) -> Result<LambdaVector> {
        self.presentation.mul_vec(x)
    }

    /// Decides whether `v` and `w` represent the same module element, by
    /// solving `R x = v - w` over `Q(t)` and testing each entry for
    /// membership in `Λ`.
    pub fn element_equal(&self, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<bool> {
        let n = self.size();
        for len in [v.len(), w.len()] {
            if len != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: len,
                });
            }
        }
        let diff: LambdaVector = v.iter().zip(w).map(|(a, b)| a - b).collect();
        // R^-1 = adj(R) / det(R)
        let scaled = self.presentation_adj.mul_vec(&diff)?;
        for entry in &scaled {
            let x = RationalFunction::from_laurent_fraction(entry, &self.presentation_det)?;
            if !x.is_laurent() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero_element(&self, v: &[LaurentPoly]) -> Result<bool> {
        self.element_equal(v, &vec![LaurentPoly::zero(); v.len()])
    }
}

/// Closed-form evaluator for the pairing on the image of a dual surface:
/// `Bl(iota v, iota w) = -((I+ - t^-1 I-)^-1 I+ v)^T J conj(w)`.
///
/// Values are only meaningful for arguments in the image of `iota`; the
/// evaluator accepts any coordinate vectors.
#[derive(Clone, Debug)]
pub struct DualSurfaceEvaluator {
    data: DualSurfaceData,
    form: FormMatrix,
}

impl DualSurfaceEvaluator {
    pub fn new(data: &DualSurfaceData) -> Result<Self> {
        let m = data.mayer_vietoris_matrix();
        let det = m.det()?;
        if det.is_zero() {
            return Err(Error::Singular);
        }
        // -(M^-1 I+ v)^T J conj(w) = v^T (-I+^T adj(M)^T J) conj(w) / det M
        let numerators = data
            .iota_plus()
            .to_laurent()
            .transpose()
            .checked_mul(&m.adjugate()?.transpose())?
            .checked_mul(&data.intersection().to_laurent())?
            .map(|a| -a);
        Ok(DualSurfaceEvaluator {
            data: data.clone(),
            form: FormMatrix::new(numerators, det),
        })
    }

    pub fn data(&self) -> &DualSurfaceData {
        &self.data
    }

    pub fn form(&self) -> &FormMatrix {
        &self.form
    }

    pub fn value(&self, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<QModLambda> {
        self.form.value(v, w)
    }
}

fn kearton_form(seifert: &SeifertData) -> Result<FormMatrix> {
    let presentation = seifert.alexander_matrix();
    let det = presentation.det()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let t_minus_one = &LaurentPoly::t() - &LaurentPoly::one();
    Ok(FormMatrix::new(presentation.adjugate()?.scale(&t_minus_one), det))
}

/// Kearton's expression `v^T (t - 1)(tA - A^T)^-1 conj(w)`, left unreduced.
///
/// It uses the presentation matrix where the pairing needs `A - tA^T`, and is
/// not well defined on the module; see [`kearton_witness`].
pub fn kearton_value(seifert: &SeifertData, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<RationalFunction> {
    kearton_form(seifert)?.raw_value(v, w)
}

/// Searches integer vectors `x` with entries in `[-bound, bound]` for one
/// where replacing `v` by `v + (tA - A^T) x` changes Kearton's expression by
/// something outside `Λ`. Returns the first such `x` in lexicographic order.
pub fn kearton_witness(
    seifert: &SeifertData,
    v: &[LaurentPoly],
    w: &[LaurentPoly],
    bound: i64,
) -> Result<Option<Vec<BigInt>>> {
    let form = kearton_form(seifert)?;
    let presentation = seifert.alexander_matrix();
    let base = form.raw_value(v, w)?;
    let n = seifert.size();
    let mut x = vec![-bound; n];
    if n == 0 {
        return Ok(None);
    }
    loop {
        if x.iter().any(|&c| c != 0) {
            let xl: LambdaVector = x.iter().map(|&c| LaurentPoly::constant(c)).collect();
            let shift = presentation.mul_vec(&xl)?;
            let moved: LambdaVector = v.iter().zip(&shift).map(|(a, b)| a + b).collect();
            if !(form.raw_value(&moved, w)? - base.clone()).is_laurent() {
                return Ok(Some(x.into_iter().map(BigInt::from).collect()));
            }
        }
        // odometer increment
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if x[i] < bound {
                x[i] += 1;
                break;
            }
            x[i] = -bound;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn vecl(items: &[&str]) -> LambdaVector {
        items.iter().map(|s| lp(s)).collect()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::from_laurent_fraction(&lp(n), &lp(d)).unwrap()
    }

    fn trefoil() -> SeifertData {
        SeifertData::from_i64_rows(&[&[-1, 1], &[0, -1]]).unwrap()
    }

    fn trefoil_fibred() -> FibredData {
        FibredData::new(
            IntMatrix::from_i64_rows(&[&[1, -1], &[1, 0]]).unwrap(),
            IntMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn unknot_is_trivial() {
        let b = PresentedPairing::from_seifert(&SeifertData::unknot()).unwrap();
        assert_eq!(b.size(), 0);
        assert_eq!(b.presentation_det(), &LaurentPoly::one());
        assert!(b.value(&[], &[]).unwrap().is_zero());
        assert!(b.element_equal(&[], &[]).unwrap());
    }

    #[test]
    fn trefoil_seifert_pairing() {
        let b = PresentedPairing::from_seifert(&trefoil()).unwrap();
        let expected_pres: Vec<LaurentPoly> = vecl(&["-t + 1", "t", "-1", "-t + 1"]);
        assert_eq!(b.presentation().entries(), &expected_pres[..]);
        // (t - 1)/(t^2 - t + 1) * [[t - 1, -1], [t, t - 1]] by the 2x2 adjugate
        let d = "t^2 - t + 1";
        let expected = Matrix::from_rows(vec![
            vec![rf("t^2 - 2t + 1", d), rf("-t + 1", d)],
            vec![rf("t^2 - t", d), rf("t^2 - 2t + 1", d)],
        ])
        .unwrap();
        assert_eq!(b.pairing_matrix(), expected);

        let e1 = basis_vector(2, 0);
        let value = b.value(&e1, &e1).unwrap();
        assert_eq!(value, QModLambda::canonicalize(&rf("-t", d)));
        assert!(b.value(&vecl(&["0", "0"]), &e1).unwrap().is_zero());
    }

    #[test]
    fn trefoil_value_is_well_defined() {
        let b = PresentedPairing::from_seifert(&trefoil()).unwrap();
        let e1 = basis_vector(2, 0);
        let x = vecl(&["t^2 - 3", "2t^-1 + 1"]);
        let moved: LambdaVector = b.relation(&x).unwrap().iter().zip(&e1).map(|(a, c)| a + c).collect();
        assert_eq!(b.value(&e1, &moved).unwrap(), b.value(&e1, &e1).unwrap());
        assert_eq!(b.value(&moved, &e1).unwrap(), b.value(&e1, &e1).unwrap());
    }

    #[test]
    fn figure_eight_presentation() {
        let s = SeifertData::from_i64_rows(&[&[1, 1], &[0, -1]]).unwrap();
        let b = PresentedPairing::from_seifert(&s).unwrap();
        assert_eq!(b.presentation_det(), &lp("-t^2 + 3t - 1"));
    }

    #[test]
    fn element_equality() {
        let b = PresentedPairing::from_seifert(&trefoil()).unwrap();
        let e1 = basis_vector(2, 0);
        let zero = vecl(&["0", "0"]);
        assert!(b.element_equal(&e1, &e1).unwrap());
        let image = b.relation(&e1).unwrap();
        assert!(b.element_equal(&image, &zero).unwrap());
        assert!(!b.element_equal(&e1, &zero).unwrap());
        assert!(b.element_equal(&e1, &zero[..1]).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let b = PresentedPairing::from_seifert(&trefoil()).unwrap();
        assert_eq!(
            b.value(&vecl(&["1"]), &vecl(&["1", "0"])),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn trefoil_fibration() {
        let b = PresentedPairing::from_fibred(&trefoil_fibred()).unwrap();
        assert_eq!(b.presentation_det(), &lp("t^2 - t + 1"));
        let trivial = FibredData::new(IntMatrix::zeros(0, 0), IntMatrix::zeros(0, 0)).unwrap();
        assert_eq!(PresentedPairing::from_fibred(&trivial).unwrap().size(), 0);
    }

    #[test]
    fn dual_surface_matches_fibred_formula() {
        let f = trefoil_fibred();
        let data = DualSurfaceData::new(
            f.monodromy().clone(),
            IntMatrix::identity(2),
            f.intersection().clone(),
        )
        .unwrap();
        let dual = DualSurfaceEvaluator::new(&data).unwrap();
        let fibred = PresentedPairing::from_fibred(&f).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let (ei, ej) = (basis_vector(2, i), basis_vector(2, j));
                assert_eq!(dual.value(&ei, &ej).unwrap(), fibred.value(&ei, &ej).unwrap(), "entry {i},{j}");
            }
        }
        assert!(dual.value(&vecl(&["0", "0"]), &basis_vector(2, 1)).unwrap().is_zero());
    }

    #[test]
    fn dual_surface_reproduces_seifert_identity() {
        // (I+, I-, J) = (A, A^T, A - A^T):
        // -(Av)^T (A^T - t^-1 A)^-1 (A - A^T) conj(w)
        let s = trefoil();
        let a = s.matrix().clone();
        let data = DualSurfaceData::new(a.clone(), a.transpose(), a.checked_sub(&a.transpose()).unwrap()).unwrap();
        let dual = DualSurfaceEvaluator::new(&data).unwrap();
        let (v, w) = (vecl(&["t", "1 - t^-1"]), vecl(&["2", "t^2"]));

        let ar = a.to_laurent().to_rational();
        let tinv = RationalFunction::from_laurent(&lp("t^-1"));
        let inner = ar.transpose().checked_sub(&ar.scale(&tinv)).unwrap().inverse().unwrap();
        let skew = ar.checked_sub(&ar.transpose()).unwrap();
        let av: Vec<RationalFunction> = a.to_laurent().mul_vec(&v).unwrap().into_iter().map(RationalFunction::from).collect();
        let wbar: Vec<RationalFunction> = conjugate_vec(&w).into_iter().map(RationalFunction::from).collect();
        let direct = -inner.checked_mul(&skew).unwrap().bilinear(&av, &wbar).unwrap();
        assert_eq!(dual.form().raw_value(&v, &w).unwrap(), direct);
    }

    #[test]
    fn kearton_examples() {
        let s = trefoil();
        let zero = vecl(&["0", "0"]);
        let e1 = basis_vector(2, 0);
        assert!(kearton_value(&s, &zero, &e1).unwrap().is_zero());
        // (t - 1) * (entry (1,1) of (tA - A^T)^-1) = (t - 1) * (-t + 1)/(t^2 - t + 1)
        assert_eq!(kearton_value(&s, &e1, &e1).unwrap(), rf("-t^2 + 2t - 1", "t^2 - t + 1"));
        let x = kearton_witness(&s, &e1, &e1, 2).unwrap();
        assert!(x.is_some());
    }
}
