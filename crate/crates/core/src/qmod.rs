//! Canonical representatives for the quotient `Q(t) / Λ`, the value group of
//! Blanchfield pairings.
//!
//! Every `x` in `Q(t)` splits uniquely as `L + r/q` where `L` is a Laurent
//! polynomial with rational coefficients, `q` has nonzero constant term and
//! `deg r < deg q`. The class of `x` modulo `Λ` is then determined by the
//! fractional parts of the coefficients of `L` together with `r/q`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;
use crate::poly::{self, IntPoly, RatPoly};
use crate::ratfunc::RationalFunction;

/// A class in `Q(t)/Λ` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QModLambda {
    /// Lowest exponent of the fractional Laurent part.
    frac_low: i64,
    /// Coefficients in `[0, 1)`, trimmed at both ends.
    frac_coeffs: RatPoly,
    /// Proper part numerator; `deg < deg proper_den`.
    proper_num: RatPoly,
    /// Primitive, positive leading coefficient, nonzero constant term.
    proper_den: IntPoly,
}

impl QModLambda {
    pub fn zero() -> Self {
        QModLambda {
            frac_low: 0,
            frac_coeffs: Vec::new(),
            proper_num: Vec::new(),
            proper_den: vec![BigInt::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.frac_coeffs.is_empty() && self.proper_num.is_empty()
    }

    /// Canonical form of the class `x + Λ`.
    pub fn canonicalize(x: &RationalFunction) -> Self {
        let num = poly::to_rational(x.numerator());
        let den = x.denominator();
        let m = den.iter().take_while(|c| c.is_zero()).count();
        let q0: IntPoly = den[m..].to_vec();
        let q0_rat = poly::to_rational(&q0);

        // x * t^m = N / q0 = quot + rem / q0
        let (quot, rem) = poly::div_rem_rational(&num, &q0_rat);

        // rem / q0 = c_0 + ... + c_{m-1} t^(m-1) + t^m * r / q0, from the
        // power series of rem / q0 at t = 0.
        let mut series: RatPoly = Vec::with_capacity(m);
        for i in 0..m {
            let mut acc = rem.get(i).cloned().unwrap_or_else(BigRational::zero);
            for j in 1..=i.min(q0.len() - 1) {
                acc -= &q0_rat[j] * &series[i - j];
            }
            series.push(acc / &q0_rat[0]);
        }
        let mut series_trimmed = series.clone();
        poly::trim(&mut series_trimmed);
        let shifted = poly::sub(&rem, &poly::mul(&q0_rat, &series_trimmed));
        debug_assert!(shifted.iter().take(m).all(Zero::is_zero));
        let proper: RatPoly = shifted.into_iter().skip(m).collect();

        // Laurent part t^-m * (quot + series), coefficients reduced mod 1.
        let mut frac = poly::add(&quot, &series_trimmed);
        for c in frac.iter_mut() {
            *c = &*c - c.floor();
        }
        poly::trim(&mut frac);
        let lead = frac.iter().take_while(|c| c.is_zero()).count();
        frac.drain(..lead);
        let frac_low = if frac.is_empty() { 0 } else { lead as i64 - m as i64 };

        let (proper_num, proper_den) = if proper.is_empty() {
            (Vec::new(), vec![BigInt::one()])
        } else {
            let mut c = poly::content(&q0);
            if q0.last().unwrap().is_negative() {
                c = -c;
            }
            let c_rat = BigRational::from_integer(c.clone());
            (
                proper.iter().map(|a| a / &c_rat).collect(),
                q0.iter().map(|a| a / &c).collect(),
            )
        };

        QModLambda {
            frac_low,
            frac_coeffs: frac,
            proper_num,
            proper_den,
        }
    }

    /// The fractional Laurent part as `(lowest exponent, coefficients)`.
    pub fn fractional_part(&self) -> (i64, &[BigRational]) {
        (self.frac_low, &self.frac_coeffs)
    }

    pub fn proper_numerator(&self) -> &[BigRational] {
        &self.proper_num
    }

    pub fn proper_denominator(&self) -> &[BigInt] {
        &self.proper_den
    }

    /// A rational function in this class: the canonical representative
    /// `L + r/q` itself.
    pub fn representative(&self) -> RationalFunction {
        let (ell, frac_int) = poly::clear_denominators(&self.frac_coeffs);
        let laurent = RationalFunction::from_laurent_fraction(
            &LaurentPoly::new(self.frac_low, frac_int),
            &LaurentPoly::constant(ell),
        )
        .expect("positive denominator");
        laurent + self.proper_part()
    }

    fn proper_part(&self) -> RationalFunction {
        let (ell, num) = poly::clear_denominators(&self.proper_num);
        let den = poly::scale(&self.proper_den, &ell);
        RationalFunction::from_polys(num, den).expect("nonzero proper denominator")
    }

    /// Class of the conjugate of any representative.
    pub fn conjugate(&self) -> Self {
        Self::canonicalize(&self.representative().conjugate())
    }

    /// `p * self` for `p` in `Λ`.
    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self::canonicalize(&(self.representative() * RationalFunction::from_laurent(p)))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::canonicalize(&(self.representative() + other.representative()))
    }

    pub fn neg(&self) -> Self {
        Self::canonicalize(&(-self.representative()))
    }
}

impl From<&RationalFunction> for QModLambda {
    fn from(x: &RationalFunction) -> Self {
        Self::canonicalize(x)
    }
}

impl fmt::Display for QModLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.frac_coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let e = self.frac_low + i as i64;
            write!(f, "({c})")?;
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        if !self.proper_num.is_empty() {
            if !first {
                f.write_str(" + ")?;
            }
            let proper = self.proper_part();
            let num = LaurentPoly::new(0, proper.numerator().to_vec());
            let den = LaurentPoly::new(0, proper.denominator().to_vec());
            write!(f, "({num})/({den})")?;
        }
        Ok(())
    }
}
