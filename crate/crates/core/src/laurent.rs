//! The Laurent polynomial ring `Z[t, t^-1]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{self, IntPoly};
use crate::ring::ExactDiv;

/// An integer Laurent polynomial `sum_i c_i t^(low + i)`.
///
/// The representation is normalized: the first and last stored coefficients
/// are nonzero, and zero is the empty coefficient vector with `low = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(0, vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, exponent: i64) -> Self {
        Self::new(exponent, vec![c.into()])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    fn normalize(&mut self) {
        poly::trim(&mut self.coeffs);
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        self.coeffs.drain(..lead_zeros);
        self.low += lead_zeros as i64;
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exponent(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn high_exponent(&self) -> Option<i64> {
        poly::degree(&self.coeffs).map(|d| self.low + d as i64)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        usize::try_from(exponent - self.low)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_default()
    }

    /// Iterates over `(exponent, coefficient)` pairs with nonzero coefficient,
    /// in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The involution `t -> t^-1`.
    pub fn conjugate(&self) -> Self {
        match self.high_exponent() {
            None => Self::zero(),
            Some(high) => LaurentPoly {
                low: -high,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// True for the units `±t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    /// True if `self = ±t^k * other` for some `k`.
    pub fn is_associate(&self, other: &Self) -> bool {
        if self.coeffs.len() != other.coeffs.len() {
            return false;
        }
        self.coeffs == other.coeffs || self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| *a == -b)
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Numerical evaluation at a nonzero complex number.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if self.low < 0 && z == Complex64::zero() {
            return Err(Error::EvaluationAtZero);
        }
        let mut acc = Complex64::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_f64().unwrap_or(f64::NAN);
        }
        Ok(acc * z.powi(self.low as i32))
    }

    /// Splits `self = t^low * p(t)` with `p(0) != 0`.
    pub(crate) fn to_shifted_poly(&self) -> (i64, IntPoly) {
        (self.low, self.coeffs.clone())
    }

    pub(crate) fn from_poly(p: IntPoly) -> Self {
        Self::new(0, p)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::constant(1)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let pad = |p: &LaurentPoly| -> Vec<BigInt> {
            let mut v = vec![BigInt::zero(); (p.low - low) as usize];
            v.extend(p.coeffs.iter().cloned());
            v
        };
        LaurentPoly::new(low, poly::add(&pad(self), &pad(rhs)))
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    // exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.low + rhs.low, poly::mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: poly::neg(&self.coeffs),
        }
    }
}

macro_rules! forward_owned_ops {
    ($ty:ty) => {
        impl std::ops::Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl std::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl std::ops::Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}
pub(crate) use forward_owned_ops;

forward_owned_ops!(LaurentPoly);

impl ExactDiv for LaurentPoly {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let q = poly::div_exact(&self.coeffs, &divisor.coeffs)?;
        Some(LaurentPoly::new(self.low - divisor.low, q))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Parser for the rendering grammar, e.g. `t^2 - t + 1`, `-3t^-2 + 2`, `2*t`.
struct TermParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TermParser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .unwrap()
        })
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat(b'(') || self.eat(b'{');
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mag = self
            .digits()
            .ok_or_else(|| self.err("expected exponent"))?
            .to_i64()
            .ok_or_else(|| self.err("exponent out of range"))?;
        if paren && !(self.eat(b')') || self.eat(b'}')) {
            return Err(self.err("unclosed exponent"));
        }
        Ok(if negative { -mag } else { mag })
    }

    fn parse(mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(_) if first => false,
                Some(c) => return Err(self.err(format!("expected `+` or `-`, found `{}`", c as char))),
            };
            first = false;
            let coeff = self.digits();
            self.eat(b'*');
            let exponent = if self.eat(b't') {
                if self.eat(b'^') {
                    self.exponent()?
                } else {
                    1
                }
            } else if coeff.is_some() {
                0
            } else {
                return Err(self.err("expected a coefficient or `t`"));
            };
            let mut c = coeff.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            acc = &acc + &LaurentPoly::monomial(c, exponent);
        }
        Ok(acc)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TermParser {
            src: s.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}
