//! The fraction field `Q(t)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{forward_owned_ops, LaurentPoly};
use crate::poly::{self, IntPoly};
use crate::ring::{ExactDiv, Field};

/// A rational function `num(t) / den(t)` with integer polynomial numerator and
/// denominator.
///
/// Always stored in lowest terms: the two polynomials are coprime over `Q`,
/// their contents are coprime, and the denominator has positive leading
/// coefficient. Equal values therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    /// Builds `num / den` from ascending integer coefficient vectors.
    pub fn from_polys(mut num: IntPoly, mut den: IntPoly) -> Result<Self> {
        poly::trim(&mut num);
        poly::trim(&mut den);
        if den.is_empty() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_empty() {
            return Self::zero();
        }
        let g = poly::gcd(&num, &den);
        let (mut num, mut den) = if g.len() > 1 {
            (
                poly::div_exact(&num, &g).expect("gcd divides numerator"),
                poly::div_exact(&den, &g).expect("gcd divides denominator"),
            )
        } else {
            (num, den)
        };
        let mut c = poly::content(&num).gcd(&poly::content(&den));
        if den.last().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num.iter_mut().for_each(|x| *x /= &c);
            den.iter_mut().for_each(|x| *x /= &c);
        }
        RationalFunction { num, den }
    }

    /// `num / den` for Laurent polynomials; exponent shifts are moved to
    /// whichever side keeps both polynomial.
    pub fn from_laurent_fraction(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (a, mut n) = num.to_shifted_poly();
        let (b, mut d) = den.to_shifted_poly();
        let shift = a - b;
        let pad = |p: &mut IntPoly, k: i64| {
            p.splice(0..0, std::iter::repeat_n(BigInt::zero(), k as usize));
        };
        if shift >= 0 {
            pad(&mut n, shift);
        } else {
            pad(&mut d, -shift);
        }
        Self::from_polys(n, d)
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        Self::from_laurent_fraction(p, &LaurentPoly::one()).expect("nonzero denominator")
    }

    /// Numerator coefficients, ascending.
    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    /// Denominator coefficients, ascending.
    pub fn denominator(&self) -> &[BigInt] {
        &self.den
    }

    /// Returns the Laurent polynomial this value equals, if it lies in
    /// `Z[t, t^-1]`. In lowest terms that happens exactly when the
    /// denominator is a monomial `t^k` with coefficient 1.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let k = self.den.iter().take_while(|c| c.is_zero()).count();
        (k + 1 == self.den.len() && self.den[k].is_one())
            .then(|| LaurentPoly::from_poly(self.num.clone()).shift(-(k as i64)))
    }

    /// Membership in `Λ = Z[t, t^-1]`.
    pub fn is_laurent(&self) -> bool {
        self.to_laurent().is_some()
    }

    /// The involution `t -> t^-1`.
    pub fn conjugate(&self) -> Self {
        let n = LaurentPoly::from_poly(self.num.clone()).conjugate();
        let d = LaurentPoly::from_poly(self.den.clone()).conjugate();
        Self::from_laurent_fraction(&n, &d).expect("conjugate of nonzero is nonzero")
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(
            poly::mul(&self.num, &rhs.den),
            poly::mul(&self.den, &rhs.num),
        ))
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: Vec::new(),
            den: vec![BigInt::one()],
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction {
            num: vec![BigInt::one()],
            den: vec![BigInt::one()],
        }
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(&p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_laurent(&LaurentPoly::constant(c))
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::reduce(poly::add(&self.num, &rhs.num), self.den.clone());
        }
        let num = poly::add(&poly::mul(&self.num, &rhs.den), &poly::mul(&rhs.num, &self.den));
        RationalFunction::reduce(num, poly::mul(&self.den, &rhs.den))
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduce(poly::mul(&self.num, &rhs.num), poly::mul(&self.den, &rhs.den))
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: poly::neg(&self.num),
            den: self.den.clone(),
        }
    }
}

forward_owned_ops!(RationalFunction);

/// Panics on division by zero, like integer division; use
/// [`RationalFunction::checked_div`] to handle it.
impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: RationalFunction) -> RationalFunction {
        self.checked_div(&rhs).expect("division by zero rational function")
    }
}

impl ExactDiv for RationalFunction {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.checked_div(divisor).ok()
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Option<Self> {
        Self::one().checked_div(self).ok()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = LaurentPoly::from_poly(self.num.clone());
        if self.den.len() == 1 && self.den[0].is_one() {
            return write!(f, "{num}");
        }
        let den = LaurentPoly::from_poly(self.den.clone());
        write!(f, "({num})/({den})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::from_laurent_fraction(&lp(n), &lp(d)).unwrap()
    }

    #[test]
    fn field_examples() {
        assert!((&rf("1", "t - 1") + &rf("1", "1 - t")).is_zero());
        assert!((&rf("t", "t - 1") * &rf("t - 1", "t")).is_one());
        assert_eq!(
            &rf("1", "t^2 - t + 1") + &rf("t", "t^2 - t + 1"),
            rf("t + 1", "t^2 - t + 1")
        );
    }

    #[test]
    fn division_by_zero_is_rejected() {
        assert_eq!(rf("t", "1").checked_div(&RationalFunction::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            RationalFunction::from_laurent_fraction(&lp("t"), &LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(RationalFunction::zero().inv().is_none());
    }

    #[test]
    fn normal_form() {
        let x = rf("2t^2 - 2", "-4t + 4");
        assert_eq!(x.numerator(), &[BigInt::from(-1), BigInt::from(-1)]);
        assert_eq!(x.denominator(), &[BigInt::from(2)]);
        assert_eq!(rf("t^-1", "t"), rf("1", "t^2"));
        assert_eq!(rf("6t", "4").to_string(), "(3t)/(2)");
        assert_eq!(rf("t - 1", "t^2 - t + 1").to_string(), "(t - 1)/(t^2 - t + 1)");
        assert_eq!(rf("t^2 - 1", "t - 1").to_string(), "t + 1");
    }

    #[test]
    fn membership_examples() {
        assert!(!rf("t", "2").is_laurent());
        assert_eq!(rf("t^2 - 1", "t - 1").to_laurent(), Some(lp("t + 1")));
        assert!(!rf("t^2 - 2t + 1", "t^2 - t + 1").is_laurent());
        assert_eq!(rf("3", "t^2").to_laurent(), Some(lp("3t^-2")));
        assert_eq!(rf("3", "-t^2").to_laurent(), Some(lp("-3t^-2")));
        assert!(!rf("1", "2t").is_laurent());
    }

    #[test]
    fn conjugation() {
        assert_eq!(rf("t", "t - 1").conjugate(), rf("t^-1", "t^-1 - 1"));
        assert_eq!(rf("t", "t - 1").conjugate(), rf("1", "1 - t"));
    }

    fn arb_ratfunc() -> impl Strategy<Value = RationalFunction> {
        let poly = || prop::collection::vec(-4i64..=4, 0..4);
        (-2i64..2, poly(), -2i64..2, poly())
            .prop_filter_map("zero denominator", |(a, n, b, d)| {
                RationalFunction::from_laurent_fraction(
                    &LaurentPoly::from_i64s(a, &n),
                    &LaurentPoly::from_i64s(b, &d),
                )
                .ok()
            })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if let Some(inv) = a.inv() {
                prop_assert!((&a * &inv).is_one());
            }
        }

        #[test]
        fn conjugation_homomorphism(a in arb_ratfunc(), b in arb_ratfunc()) {
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        }
    }
}
