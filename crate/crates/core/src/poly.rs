//! Dense univariate polynomials, generic over the coefficient scalar.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros; the zero polynomial is the empty vector.  Ring operations need
//! only a [`RingScalar`]; division, gcd and normalisation need a
//! [`FieldScalar`].  Division by a *monic* divisor is provided separately
//! because it stays inside the ring (used for reduction modulo cyclotomic
//! polynomials over Z).

use crate::scalar::{FieldScalar, RingScalar};
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial over `T`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: RingScalar> Poly<T> {
    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    /// `c * x^d`.
    pub fn monomial(c: T, d: usize) -> Self {
        let mut coeffs = vec![T::zero(); d + 1];
        coeffs[d] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Ascending coefficients, without trailing zeros.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<T> {
        self.coeffs.last().cloned()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Substitutes `s * x` for `x`: coefficient of `x^i` is scaled by `s^i`.
    pub fn scale_variable(&self, s: &T) -> Self {
        let mut pow = T::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c.clone() * pow.clone();
                pow = pow.clone() * s.clone();
                out
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// `x^d * p(1/x)` for `d = deg p`: the coefficient sequence reversed.
    ///
    /// # Panics
    /// Panics on the zero polynomial.
    pub fn reversed(&self) -> Self {
        assert!(!self.is_zero(), "reversal of the zero polynomial");
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(coeffs)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder by a monic divisor; stays inside the ring.
    ///
    /// # Panics
    /// Panics if the divisor is not monic.
    pub fn div_rem_monic(&self, div: &Self) -> (Self, Self) {
        assert!(div.is_monic(), "divisor must be monic");
        let d = div.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = rem[i].clone();
            if q.is_zero() {
                continue;
            }
            quot[i - d] = q.clone();
            for (j, c) in div.coeffs.iter().enumerate() {
                rem[i - d + j] = rem[i - d + j].clone() - q.clone() * c.clone();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }
}

impl<T: FieldScalar> Poly<T> {
    /// Quotient and remainder, `self = q * div + r` with `deg r < deg div`.
    ///
    /// # Panics
    /// Panics if the divisor is zero.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        let lead = div.leading_coeff().expect("division by zero polynomial");
        let inv = lead.inv();
        let monic = div.scale(&inv);
        let (q, r) = self.div_rem_monic(&monic);
        (q.scale(&inv), r)
    }

    /// Exact quotient.
    ///
    /// # Panics
    /// Panics if the division leaves a remainder.
    pub fn exact_div(&self, div: &Self) -> Self {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Divides by the leading coefficient.  Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    /// Monic greatest common divisor (Euclid); `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`,
    /// `g` the monic gcd.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading_coeff() {
            None => (Poly::zero(), Poly::zero(), Poly::zero()),
            Some(c) => {
                let inv = c.inv();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }
}

impl<T: RingScalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<T: RingScalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<T: RingScalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: RingScalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<T: RingScalar> $trait for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: RingScalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntPoly, QPoly, Rat};
    use num_bigint::BigInt;

    fn zp(coeffs: &[i64]) -> IntPoly {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn qp(coeffs: &[i64]) -> QPoly {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let p = zp(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(zp(&[0, 0]).is_zero());
        assert_eq!(zp(&[]).degree(), None);
    }

    #[test]
    fn arithmetic_basics() {
        let p = zp(&[1, 1]); // 1 + x
        let q = zp(&[-1, 1]); // -1 + x
        assert_eq!(&p * &q, zp(&[-1, 0, 1]));
        assert_eq!(&p + &q, zp(&[0, 2]));
        assert_eq!(&p - &p, IntPoly::zero());
        assert_eq!(p.pow(3), zp(&[1, 3, 3, 1]));
        assert_eq!(p.eval(&BigInt::from(4)), BigInt::from(5));
    }

    #[test]
    fn monic_division_over_z() {
        // x^4 - 1 = (x^2 + 1)(x^2 - 1)
        let (q, r) = zp(&[-1, 0, 0, 0, 1]).div_rem_monic(&zp(&[1, 0, 1]));
        assert_eq!(q, zp(&[-1, 0, 1]));
        assert!(r.is_zero());

        let (q, r) = zp(&[1, 2, 3]).div_rem_monic(&zp(&[0, 1]));
        assert_eq!(q, zp(&[2, 3]));
        assert_eq!(r, zp(&[1]));
    }

    #[test]
    fn field_division_and_gcd() {
        // (2x^2 + x - 1) / (2x - 1) = (x + 1), remainder 0
        let (q, r) = qp(&[-1, 1, 2]).div_rem(&qp(&[-1, 2]));
        assert_eq!(q, qp(&[1, 1]));
        assert!(r.is_zero());

        let a = &qp(&[1, 1]) * &qp(&[-1, 1]); // (x+1)(x-1)
        let b = &qp(&[1, 1]) * &qp(&[2, 1]); // (x+1)(x+2)
        assert_eq!(a.gcd(&b), qp(&[1, 1]));
        assert_eq!(QPoly::zero().gcd(&QPoly::zero()), QPoly::zero());
    }

    #[test]
    fn xgcd_bezout() {
        let a = qp(&[-1, 0, 1]); // x^2 - 1
        let b = qp(&[2, 1]); // x + 2
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(g, QPoly::one());
        assert_eq!(&(&s * &a) + &(&t * &b), QPoly::one());
    }

    #[test]
    fn variable_scaling_and_reversal() {
        // p(2t) for p = 1 + t + t^2
        assert_eq!(zp(&[1, 1, 1]).scale_variable(&BigInt::from(2)), zp(&[1, 2, 4]));
        // t^2 p(1/t) for p = 2 - 3t + t^2
        assert_eq!(zp(&[2, -3, 1]).reversed(), zp(&[1, -3, 2]));
    }
}
