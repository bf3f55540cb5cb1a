//! Reduced rational functions, their power-series coefficients, the
//! correspondence with linear recurrences, and the Chebyshev / minimal-cosine
//! polynomial identities used by the closed-form Hilbert series.
//!
//! A [`RatFunc`] is kept in canonical series-ready form: numerator and
//! denominator coprime and the denominator's constant term exactly 1.  Two
//! display forms that differ by a unit scalar therefore collapse to the same
//! canonical value on construction.

use crate::cyclotomic::{cyclotomic_poly, divisors, euler_phi};
use crate::poly::Poly;
use crate::scalar::FieldScalar;
use crate::{QPoly, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Rational function `num/den` with `gcd(num, den) = 1` and `den(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc<T> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: FieldScalar> RatFunc<T> {
    /// Reduces and normalises `num/den`.
    ///
    /// # Panics
    /// Panics if `den` is zero, or if the reduced denominator vanishes at 0
    /// (the function would not be a power series).
    pub fn new(num: Poly<T>, den: Poly<T>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num: Poly::zero(), den: Poly::one() };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);
        let c = den.coeff(0);
        assert!(!c.is_zero(), "pole at t = 0: not a power series");
        let inv = c.inv();
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &Poly<T> {
        &self.num
    }

    pub fn den(&self) -> &Poly<T> {
        &self.den
    }

    /// `1 / self`.
    ///
    /// # Panics
    /// Panics if the numerator vanishes at 0 (or is zero): the reciprocal
    /// would not be a power series.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        RatFunc::new(self.num.scale(c), self.den.clone())
    }

    /// Maps the coefficients into another scalar type, e.g. Q into Q(zeta).
    pub fn map<U: FieldScalar>(&self, f: impl Fn(&T) -> U) -> RatFunc<U> {
        RatFunc {
            num: Poly::from_coeffs(self.num.coeffs().iter().map(&f).collect()),
            den: Poly::from_coeffs(self.den.coeffs().iter().map(&f).collect()),
        }
    }

    /// First `n + 1` power-series coefficients `a_0, ..., a_n` by long
    /// division against the monic-at-0 denominator.
    pub fn series_coefficients(&self, n: usize) -> Vec<T> {
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut a = self.num.coeff(k);
            for j in 1..=k {
                let d = self.den.coeff(j);
                if d.is_zero() {
                    continue;
                }
                let prev: &T = &out[k - j];
                a = a - d * prev.clone();
            }
            out.push(a);
        }
        out
    }
}

impl<T: FieldScalar> Add for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn add(self, rhs: &RatFunc<T>) -> RatFunc<T> {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<T: FieldScalar> Sub for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn sub(self, rhs: &RatFunc<T>) -> RatFunc<T> {
        self + &(-rhs)
    }
}

impl<T: FieldScalar> Mul for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn mul(self, rhs: &RatFunc<T>) -> RatFunc<T> {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<T: FieldScalar> Neg for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn neg(self) -> RatFunc<T> {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecurrenceError {
    /// The reduced denominator is constant, so the coefficient sequence is
    /// finitely supported and satisfies no fixed-order recurrence of this form.
    #[error("denominator is constant after reduction; the series is a polynomial")]
    ConstantDenominator,
}

/// Linear recurrence `a_i = sum_j coeffs[j-1] * a_(i-j)` valid for
/// `i >= threshold`, together with the initial values `a_0..a_(threshold-1)`
/// needed to regenerate the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<Rat>,
    initial: Vec<Rat>,
    threshold: usize,
}

impl Recurrence {
    /// Builds a recurrence from explicit data.
    ///
    /// # Panics
    /// Panics if the top coefficient is zero, or `initial` is shorter than
    /// `threshold`, or `threshold < coeffs.len()`.
    pub fn new(coeffs: Vec<Rat>, initial: Vec<Rat>, threshold: usize) -> Self {
        assert!(
            coeffs.last().is_some_and(|c| !c.is_zero()),
            "top recurrence coefficient must be nonzero"
        );
        assert!(threshold >= coeffs.len(), "threshold below recurrence order");
        assert_eq!(initial.len(), threshold, "need a_0..a_(threshold-1)");
        Recurrence { coeffs, initial, threshold }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients `A_1..A_k` of `a_i = A_1 a_(i-1) + ... + A_k a_(i-k)`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[Rat] {
        &self.initial
    }

    /// First index from which the recurrence is valid.
    pub fn threshold(&self) -> usize {
        self.threshold
    }

    /// Regenerates `a_0..a_n`.
    pub fn sequence(&self, n: usize) -> Vec<Rat> {
        let mut out = self.initial.clone();
        out.truncate(n + 1);
        for i in out.len()..=n {
            let a = self
                .coeffs
                .iter()
                .enumerate()
                .fold(Rat::zero(), |acc, (j, c)| acc + c * &out[i - j - 1]);
            out.push(a);
        }
        out
    }

    /// The unique reduced rational function whose series satisfies this
    /// recurrence with these initial values.
    pub fn to_ratfunc(&self) -> RatFunc<Rat> {
        let k = self.coeffs.len();
        let mut den = vec![Rat::zero(); k + 1];
        den[0] = Rat::one();
        for (j, c) in self.coeffs.iter().enumerate() {
            den[j + 1] = -c.clone();
        }
        // b_i = a_i - sum_j A_j a_(i-j): the truncation of a(t) * den(t)
        // below the threshold.
        let num: Vec<Rat> = (0..self.threshold)
            .map(|i| {
                let mut b = self.initial[i].clone();
                for (j, c) in self.coeffs.iter().enumerate() {
                    if i > j {
                        b -= c * &self.initial[i - j - 1];
                    }
                }
                b
            })
            .collect();
        RatFunc::new(Poly::from_coeffs(num), Poly::from_coeffs(den))
    }
}

impl fmt::Display for Recurrence {
    /// Renders in the shape `a(m+k) = A_1 a(m+k-1) + ... + A_k a(m)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.coeffs.len();
        let arg = |down: usize| {
            if down == k {
                "a(m)".to_string()
            } else {
                format!("a(m+{})", k - down)
            }
        };
        write!(f, "{} =", arg(0))?;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                write!(f, " ")?;
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{}", arg(j + 1))?;
        }
        if first {
            write!(f, " 0")?;
        }
        Ok(())
    }
}

impl RatFunc<Rat> {
    /// Extracts the linear recurrence satisfied by the series coefficients:
    /// order `k = deg den`, coefficients `A_j = -d_j` (after `d_0 = 1`
    /// normalisation), valid from `N_0 = max(k, deg num + 1)`.
    pub fn recurrence(&self) -> Result<Recurrence, RecurrenceError> {
        let k = match self.den.degree() {
            Some(k) if k >= 1 => k,
            _ => return Err(RecurrenceError::ConstantDenominator),
        };
        let coeffs: Vec<Rat> = (1..=k).map(|j| -self.den.coeff(j)).collect();
        let s = self.num.degree().map_or(0, |d| d + 1);
        let threshold = k.max(s);
        let initial = self.series_coefficients(threshold - 1);
        Ok(Recurrence::new(coeffs, initial, threshold))
    }
}

/// Chebyshev polynomial of the first kind, `T_k(cos x) = cos(k x)`.
pub fn chebyshev_t(k: usize) -> QPoly {
    let two_t: QPoly = Poly::monomial(Rat::from_integer(2.into()), 1);
    let mut t0: QPoly = Poly::one();
    let mut t1: QPoly = Poly::x();
    if k == 0 {
        return t0;
    }
    for _ in 1..k {
        let next = &(&two_t * &t1) - &t0;
        t0 = std::mem::replace(&mut t1, next);
    }
    t1
}

/// Minimal polynomial of `2 cos(2 pi / n)` over Q, monic with integer
/// coefficients; degree `phi(n)/2` for `n >= 3`, and `t - 2`, `t + 2` for
/// `n = 1, 2`.
///
/// Computed by the exact change of basis `z^m psi_n(z + 1/z) = Phi_n(z)`
/// (`m = phi(n)/2`): the coefficients are read off a triangular solve against
/// `Phi_n`, and the full identity is re-checked, which certifies both the
/// polynomial and the identity itself.
///
/// # Panics
/// Panics if `n == 0`, or if the change of basis fails to reproduce `Phi_n`
/// exactly (impossible for a correct `Phi_n`).
pub fn psi_min_poly(n: usize) -> QPoly {
    assert!(n > 0, "psi of order 0");
    let int = |k: i64| Rat::from_integer(k.into());
    if n == 1 {
        return Poly::from_coeffs(vec![int(-2), int(1)]);
    }
    if n == 2 {
        return Poly::from_coeffs(vec![int(2), int(1)]);
    }
    let m = euler_phi(n) / 2;
    let phi: QPoly = Poly::from_coeffs(
        cyclotomic_poly(n).coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect(),
    );
    // Basis polynomial z^(m-j) (z^2+1)^j has degree m+j and leading
    // coefficient 1, so the coefficients of z^(2m)..z^m determine psi.
    let zsq1: QPoly = Poly::from_coeffs(vec![int(1), int(0), int(1)]);
    let basis: Vec<QPoly> = (0..=m)
        .map(|j| &Poly::monomial(Rat::one(), m - j) * &zsq1.pow(j))
        .collect();
    let mut residual = phi;
    let mut coeffs = vec![Rat::zero(); m + 1];
    for j in (0..=m).rev() {
        let c = residual.coeff(m + j);
        residual = &residual - &basis[j].scale(&c);
        coeffs[j] = c;
    }
    assert!(residual.is_zero(), "z^m psi(z + 1/z) must equal Phi_n exactly");
    Poly::from_coeffs(coeffs)
}

/// `prod_(d | n) psi_d(t)`: the monic polynomial whose roots are exactly
/// `2 cos(2 pi k / n)` for `k = 0..floor(n/2)`.
pub fn psi_product(n: usize) -> QPoly {
    divisors(n)
        .into_iter()
        .fold(Poly::one(), |acc, d| &acc * &psi_min_poly(d))
}

/// Exact polynomial form of the Lehmer identity.  For `n >= 3` checks
/// `z^(phi(n)/2) psi_n(z + 1/z) = Phi_n(z)`; for `n in {1, 2}` (where
/// `phi(n)/2` is not an integer and the literal identity fails) checks the
/// squared variant `z psi_n(z + 1/z) = Phi_n(z)^2`.
pub fn lehmer_check(n: usize) -> bool {
    let psi = psi_min_poly(n);
    let int = |k: i64| Rat::from_integer(k.into());
    let zsq1: QPoly = Poly::from_coeffs(vec![int(1), int(0), int(1)]);
    let phi: QPoly = Poly::from_coeffs(
        cyclotomic_poly(n).coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect(),
    );
    if n <= 2 {
        // z * psi(z + 1/z) with deg psi = 1: psi = t + c0 gives
        // c1 z^2 + c0 z + c1 cleared by one factor of z.
        let lhs = &zsq1.scale(&psi.coeff(1)) + &Poly::monomial(psi.coeff(0), 1);
        return lhs == &phi * &phi;
    }
    let m = euler_phi(n) / 2;
    let lhs = (0..=m).fold(QPoly::zero(), |acc, j| {
        let basis = &Poly::monomial(Rat::one(), m - j) * &zsq1.pow(j);
        &acc + &basis.scale(&psi.coeff(j))
    });
    lhs == phi
}

/// Which product identity a [`watkins_zeitlin_check`] verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WzCase {
    /// Odd `n = 2m+1`: `prod_(d|n) psi_d(2t) = 2(T_(m+1) - T_m)`.
    OddProduct,
    /// Even `n = 2m`: `prod_(d|n) psi_d(2t) = 2(T_(m+1) - T_(m-1))`.
    EvenProduct,
    /// `n = 2^k`: `psi_(2^(k+1))(2t) = 2 T_(2^(k-1))`.
    PowerOfTwo,
}

impl fmt::Display for WzCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WzCase::OddProduct => "odd product",
            WzCase::EvenProduct => "even product",
            WzCase::PowerOfTwo => "power of two",
        };
        f.write_str(s)
    }
}

/// Outcome of the Chebyshev product identities for one `n`.
#[derive(Debug, Clone)]
pub struct WatkinsZeitlinReport {
    pub n: usize,
    pub checks: Vec<(WzCase, bool)>,
}

impl WatkinsZeitlinReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Verifies every Chebyshev product identity applicable to `n` as exact
/// polynomial algebra and reports which were checked.
///
/// # Panics
/// Panics if `n == 0`.
pub fn watkins_zeitlin_check(n: usize) -> WatkinsZeitlinReport {
    assert!(n > 0);
    let two = Rat::from_integer(2.into());
    let at_2t = |p: &QPoly| p.scale_variable(&two);
    let mut checks = Vec::new();
    let product = divisors(n)
        .into_iter()
        .fold(QPoly::one(), |acc, d| &acc * &at_2t(&psi_min_poly(d)));
    if n % 2 == 1 {
        let m = n / 2;
        let rhs = (&chebyshev_t(m + 1) - &chebyshev_t(m)).scale(&two);
        checks.push((WzCase::OddProduct, product == rhs));
    } else {
        let m = n / 2;
        let rhs = (&chebyshev_t(m + 1) - &chebyshev_t(m - 1)).scale(&two);
        checks.push((WzCase::EvenProduct, product == rhs));
        if n.is_power_of_two() {
            let k = n.trailing_zeros() as usize;
            let lhs = at_2t(&psi_min_poly(1 << (k + 1)));
            let rhs = chebyshev_t(1 << (k - 1)).scale(&two);
            checks.push((WzCase::PowerOfTwo, lhs == rhs));
        }
    }
    WatkinsZeitlinReport { n, checks }
}
