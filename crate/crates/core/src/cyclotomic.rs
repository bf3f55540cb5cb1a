//! Cyclotomic polynomials and exact arithmetic in Q(zeta_n).
//!
//! A [`CycloNum`] is an element of the cyclotomic field Q(zeta_n) stored in
//! the power basis 1, zeta, ..., zeta^(phi(n)-1), i.e. as a rational
//! coefficient vector reduced modulo the n-th cyclotomic polynomial Phi_n.
//! There is no embedding between different fields: combining two genuinely
//! irrational numbers of different orders is a bug in the caller and panics.
//! Rational *values* (in particular the generic `zero()`/`one()`) carry no
//! basis ambiguity and are promoted to the other operand's order silently.

use crate::poly::Poly;
use crate::{Int, IntPoly, QPoly, Rat};
use num_traits::{One, Signed, Zero};
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::rc::Rc;

/// Divisors of `n` in ascending order.
///
/// # Panics
/// Panics if `n == 0`.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n > 0, "divisors of 0");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Euler's totient.
///
/// # Panics
/// Panics if `n == 0`.
pub fn euler_phi(n: usize) -> usize {
    assert!(n > 0, "euler_phi of 0");
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            phi -= phi / p;
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

/// The n-th cyclotomic polynomial over Z, computed by exact division:
/// `Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d`.
///
/// # Panics
/// Panics if `n == 0`.
pub fn cyclotomic_poly(n: usize) -> IntPoly {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    let mut memo: HashMap<usize, IntPoly> = HashMap::new();
    cyclotomic_rec(n, &mut memo)
}

fn cyclotomic_rec(n: usize, memo: &mut HashMap<usize, IntPoly>) -> IntPoly {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let phi = if n == 1 {
        Poly::from_coeffs(vec![Int::from(-1), Int::from(1)])
    } else {
        let mut xn1 = vec![Int::zero(); n + 1];
        xn1[0] = Int::from(-1);
        xn1[n] = Int::from(1);
        let mut quot = Poly::from_coeffs(xn1);
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let (q, r) = quot.div_rem_monic(&cyclotomic_rec(d, memo));
            assert!(r.is_zero(), "cyclotomic division must be exact");
            quot = q;
        }
        quot
    };
    memo.insert(n, phi.clone());
    phi
}

thread_local! {
    static PHI_Q: RefCell<HashMap<usize, Rc<QPoly>>> = RefCell::new(HashMap::new());
}

/// Phi_n with rational coefficients, memoised per thread.
fn phi_q(n: usize) -> Rc<QPoly> {
    PHI_Q.with(|cell| {
        let mut map = cell.borrow_mut();
        map.entry(n)
            .or_insert_with(|| {
                let p = cyclotomic_poly(n);
                Rc::new(Poly::from_coeffs(
                    p.coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect(),
                ))
            })
            .clone()
    })
}

/// Element of Q(zeta_n) in the power basis modulo Phi_n.
///
/// The coefficient vector always has length phi(n).  `order == 1` holds the
/// plain rationals.
#[derive(Debug, Clone)]
pub struct CycloNum {
    order: usize,
    coeffs: Vec<Rat>,
}

/// `zeta_n`, a fixed primitive n-th root of unity.
pub fn zeta(n: usize) -> CycloNum {
    cyclo(n, 1)
}

/// `zeta_n^k`, reduced into the power basis.
///
/// # Panics
/// Panics if `n == 0`.
pub fn cyclo(n: usize, k: usize) -> CycloNum {
    assert!(n > 0, "cyclotomic order must be positive");
    let k = k % n;
    let mono: QPoly = Poly::monomial(Rat::one(), k);
    CycloNum::reduce(n, mono)
}

impl CycloNum {
    fn reduce(order: usize, p: QPoly) -> Self {
        let (_, r) = p.div_rem_monic(&phi_q(order));
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(euler_phi(order), Rat::zero());
        CycloNum { order, coeffs }
    }

    pub fn from_rat(r: Rat) -> Self {
        CycloNum { order: 1, coeffs: vec![r] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rat(Rat::from_integer(k.into()))
    }

    /// `zeta_n^k + zeta_n^(-k) = 2 cos(2 pi k / n)`, exact.
    pub fn two_cos(n: usize, k: usize) -> Self {
        let k = k % n;
        &cyclo(n, k) + &cyclo(n, (n - k) % n)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Power-basis coefficients, length phi(order).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// True iff the value lies in Q, i.e. every basis coefficient above the
    /// constant vanishes.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, or `None` if it is genuinely irrational.
    pub fn as_rational(&self) -> Option<Rat> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    fn promoted(&self, order: usize) -> Option<Self> {
        if self.order == order {
            return Some(self.clone());
        }
        let r = self.as_rational()?;
        let mut coeffs = vec![Rat::zero(); euler_phi(order)];
        coeffs[0] = r;
        Some(CycloNum { order, coeffs })
    }

    /// Unifies the operands into one field, promoting rational values only.
    ///
    /// # Panics
    /// Panics when both operands are irrational with different orders.
    fn unify(&self, rhs: &Self) -> (Self, Self) {
        if self.order == rhs.order {
            return (self.clone(), rhs.clone());
        }
        if let Some(lifted) = self.promoted(rhs.order) {
            return (lifted, rhs.clone());
        }
        if let Some(lifted) = rhs.promoted(self.order) {
            return (self.clone(), lifted);
        }
        panic!(
            "cyclotomic order mismatch: cannot combine orders {} and {}",
            self.order, rhs.order
        );
    }

    /// Galois conjugation `zeta -> zeta^(n-1)`, i.e. complex conjugation on
    /// the chosen embedding.
    pub fn conjugate(&self) -> Self {
        let n = self.order;
        let mut acc = CycloNum::zero().promoted(n).unwrap();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = cyclo(n, (n - 1) * i % n);
            for x in &mut term.coeffs {
                *x *= c;
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo
    /// Phi_n.
    ///
    /// # Panics
    /// Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "division by zero");
        if let Some(r) = self.as_rational() {
            let mut out = self.clone();
            out.coeffs[0] = Rat::one() / r;
            return out;
        }
        let a: QPoly = Poly::from_coeffs(self.coeffs.clone());
        let (g, s, _) = a.xgcd(&phi_q(self.order));
        assert!(g == QPoly::one(), "Phi_n must be coprime to any nonzero residue");
        CycloNum::reduce(self.order, s)
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for CycloNum {}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        let (mut a, b) = self.unify(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        let (mut a, b) = self.unify(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        let mut out = self.clone();
        for x in &mut out.coeffs {
            *x = -x.clone();
        }
        out
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        // Rational operands scale the other coefficient vector directly; the
        // general case convolves and reduces modulo Phi_n.
        if self.is_rational() {
            let r = &self.coeffs[0];
            let mut out = rhs.clone();
            for x in &mut out.coeffs {
                *x *= r;
            }
            return out;
        }
        if rhs.is_rational() {
            return rhs * self;
        }
        let (a, b) = self.unify(rhs);
        let order = a.order;
        let prod = &Poly::from_coeffs(a.coeffs) * &Poly::from_coeffs(b.coeffs);
        CycloNum::reduce(order, prod)
    }
}

impl Div for &CycloNum {
    type Output = CycloNum;
    fn div(self, rhs: &CycloNum) -> CycloNum {
        self * &rhs.inv()
    }
}

macro_rules! forward_owned_cyclo {
    ($trait:ident, $method:ident) => {
        impl $trait for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_cyclo!(Add, add);
forward_owned_cyclo!(Sub, sub);
forward_owned_cyclo!(Mul, mul);
forward_owned_cyclo!(Div, div);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl Zero for CycloNum {
    fn zero() -> Self {
        CycloNum::from_rat(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for CycloNum {
    fn one() -> Self {
        CycloNum::from_rat(Rat::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.is_rational()
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(coeffs: &[i64]) -> IntPoly {
        Poly::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    #[test]
    fn divisor_and_totient_tables() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(7), vec![1, 7]);
        let phis: Vec<usize> = (1..=12).map(euler_phi).collect();
        assert_eq!(phis, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), zp(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), zp(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), zp(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), zp(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(5), zp(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_poly(6), zp(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), zp(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_recovers_power_minus_one() {
        for n in 1..=30 {
            let mut prod = IntPoly::one();
            for d in divisors(n) {
                prod = &prod * &cyclotomic_poly(d);
            }
            let mut expect = vec![Int::zero(); n + 1];
            expect[0] = Int::from(-1);
            expect[n] = Int::from(1);
            assert_eq!(prod, Poly::from_coeffs(expect), "n = {n}");
        }
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        for n in 1..=64 {
            let p = cyclotomic_poly(n);
            assert_eq!(p.degree(), Some(euler_phi(n)));
            assert!(p.is_monic());
        }
    }

    #[test]
    fn root_powers_reduce_into_the_basis() {
        assert_eq!(cyclo(5, 0), CycloNum::one());
        // zeta_3^2 = -1 - zeta_3 modulo z^2 + z + 1
        let expect = CycloNum {
            order: 3,
            coeffs: vec![Rat::from_integer((-1).into()), Rat::from_integer((-1).into())],
        };
        assert_eq!(cyclo(3, 2), expect);
        // zeta_4^3 = -zeta_4 modulo z^2 + 1
        assert_eq!(cyclo(4, 3), -zeta(4));
    }

    #[test]
    fn field_arithmetic_round_trips() {
        assert_eq!(&zeta(3) * &cyclo(3, 2), CycloNum::one());
        assert_eq!(zeta(4).inv(), -zeta(4));
        assert_eq!(&zeta(4) * &zeta(4).inv(), CycloNum::one());
        let sum = (1..5).fold(CycloNum::zero(), |acc, k| &acc + &cyclo(5, k));
        assert_eq!(sum, CycloNum::from_int(-1));
    }

    #[test]
    fn inverse_against_every_unit_power() {
        for n in 2..=30 {
            for k in 0..n {
                let prod = &cyclo(n, k) * &cyclo(n, n - k);
                assert!(prod.is_one(), "zeta_{n}^{k} * zeta_{n}^-{k}");
            }
        }
    }

    #[test]
    fn primitive_root_satisfies_its_polynomial() {
        for n in 1..=30 {
            let phi = cyclotomic_poly(n);
            let val = phi
                .coeffs()
                .iter()
                .enumerate()
                .fold(CycloNum::zero(), |acc, (i, c)| {
                    let term = &cyclo(n, i) * &CycloNum::from_rat(Rat::from_integer(c.clone()));
                    &acc + &term
                });
            assert!(Zero::is_zero(&val), "Phi_{n}(zeta_{n}) = 0");
        }
    }

    #[test]
    fn conjugation_is_an_involutive_homomorphism() {
        let a = &zeta(5) + &CycloNum::from_int(2);
        let b = &cyclo(5, 3) - &CycloNum::from_int(1);
        assert_eq!(a.conjugate().conjugate(), a);
        assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
        assert_eq!(zeta(3).conjugate(), cyclo(3, 2));
        assert_eq!(CycloNum::from_int(2).conjugate(), CycloNum::from_int(2));
    }

    #[test]
    fn rationality_detection() {
        assert_eq!(
            (&zeta(6) + &cyclo(6, 5)).as_rational(),
            Some(Rat::from_integer(1.into()))
        );
        assert_eq!(zeta(5).as_rational(), None);
        assert_eq!(cyclo(4, 2).as_rational(), Some(Rat::from_integer((-1).into())));
    }

    #[test]
    fn two_cos_is_rational_exactly_for_special_angles() {
        // Niven: 2cos(2 pi k / n) is rational iff the reduced denominator of
        // k/n lies in {1, 2, 3, 4, 6}.
        for n in 1..=24 {
            for k in 0..n {
                let denom = n / num_integer::gcd(n, k);
                let rational = CycloNum::two_cos(n, k).as_rational().is_some();
                assert_eq!(rational, matches!(denom, 1 | 2 | 3 | 4 | 6), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn rational_values_mix_across_orders() {
        let two_at_3 = &zeta(3) + &(&CycloNum::from_int(2) - &zeta(3));
        assert_eq!(two_at_3.order(), 3);
        assert_eq!(&two_at_3 + &CycloNum::from_int(1), CycloNum::from_int(3));
        assert_eq!(two_at_3, CycloNum::from_int(2));
    }

    #[test]
    #[should_panic(expected = "order mismatch")]
    fn mixing_irrational_orders_panics() {
        let _ = &zeta(3) + &zeta(4);
    }

    #[test]
    fn display_forms() {
        assert_eq!(cyclo(3, 2).to_string(), "-1 - z");
        assert_eq!(CycloNum::from_rat(Rat::new(1.into(), 2.into())).to_string(), "1/2");
        assert_eq!((-zeta(4)).to_string(), "-z");
    }
}
