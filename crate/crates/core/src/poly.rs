//! Dense univariate polynomials in ascending coefficient order, over `Z` and
//! `Q`. These are the building blocks behind [`crate::LaurentPoly`] and
//! [`crate::RationalFunction`]; every function here expects and returns
//! trimmed vectors (no trailing zeros, zero is the empty vector).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type IntPoly = Vec<BigInt>;
pub(crate) type RatPoly = Vec<BigRational>;

pub(crate) fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree<T>(p: &[T]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn add<T: Zero + Clone>(a: &[T], b: &[T]) -> Vec<T> {
    let n = a.len().max(b.len());
    let mut out: Vec<T> = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.clone() + y.clone(),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => T::zero(),
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn neg<T: Clone + std::ops::Neg<Output = T>>(a: &[T]) -> Vec<T> {
    a.iter().map(|c| -c.clone()).collect()
}

pub(crate) fn sub<T: Zero + Clone + std::ops::Neg<Output = T>>(a: &[T], b: &[T]) -> Vec<T> {
    add(a, &neg(b))
}

pub(crate) fn mul<T: Zero + Clone + std::ops::Mul<Output = T>>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale<T: Zero + Clone + std::ops::Mul<Output = T>>(a: &[T], c: &T) -> Vec<T> {
    let mut out: Vec<T> = a.iter().map(|x| x.clone() * c.clone()).collect();
    trim(&mut out);
    out
}

/// Non-negative gcd of the coefficients; zero for the zero polynomial.
pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides by the content and fixes the sign so the leading coefficient is
/// positive.
pub(crate) fn primitive_part(a: &[BigInt]) -> IntPoly {
    let mut c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    if a.last().is_some_and(|lc| lc.is_negative()) {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b`: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let lead = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= lc;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lead * bc;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd over `Q[t]` (equivalently over `Z[t]` up to content), with
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive_part(&pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    x
}

/// Exact quotient `a / b` over `Z[t]`, or `None` when `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let db = degree(b)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let (quot, rem) = r.last().unwrap().div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &quot * bc;
        }
        q[shift] = quot;
        trim(&mut r);
    }
    if r.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

pub(crate) fn to_rational(a: &[BigInt]) -> RatPoly {
    a.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

/// Euclidean division over `Q[t]`: returns `(q, r)` with `a = q*b + r` and
/// `deg r < deg b`.
pub(crate) fn div_rem_rational(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let quot = r.last().unwrap() / lc;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &quot * bc;
        }
        q[shift] = quot;
        // the leading term cancels exactly; drop it even if trim would not
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Least common multiple of the coefficient denominators.
pub(crate) fn denominator_lcm(a: &[BigRational]) -> BigInt {
    a.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()))
}

/// Clears denominators: returns `(ell, p)` with `a = p / ell` and `p` integral.
pub(crate) fn clear_denominators(a: &[BigRational]) -> (BigInt, IntPoly) {
    let ell = denominator_lcm(a);
    let p = a
        .iter()
        .map(|c| (c * BigRational::from_integer(ell.clone())).to_integer())
        .collect();
    (ell, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        let mut v: IntPoly = cs.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut v);
        v
    }

    #[test]
    fn gcd_of_products() {
        // (t - 1)(t + 2) and (t - 1)(2t + 3)
        let a = mul(&p(&[-1, 1]), &p(&[2, 1]));
        let b = mul(&p(&[-1, 1]), &p(&[3, 2]));
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[0, 0, 2]), &p(&[0, 4])), p(&[0, 1]));
        assert_eq!(gcd(&p(&[]), &p(&[-3, -6])), p(&[1, 2]));
        assert!(gcd(&p(&[]), &p(&[])).is_empty());
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(div_exact(&a, &p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(div_exact(&a, &p(&[1, 2])), None);
        assert_eq!(div_exact(&p(&[2, 2]), &p(&[2])), Some(p(&[1, 1])));
        assert_eq!(div_exact(&p(&[1, 2]), &p(&[2])), None);
    }

    #[test]
    fn rational_division() {
        // t^2 - 2t + 1 = 1 * (t^2 - t + 1) + (-t)
        let (q, r) = div_rem_rational(&to_rational(&p(&[1, -2, 1])), &to_rational(&p(&[1, -1, 1])));
        assert_eq!(q, to_rational(&p(&[1])));
        assert_eq!(r, to_rational(&p(&[0, -1])));
        let (q, r) = div_rem_rational(&to_rational(&p(&[1])), &to_rational(&p(&[0, 2])));
        assert!(q.is_empty());
        assert_eq!(r, to_rational(&p(&[1])));
    }
}
