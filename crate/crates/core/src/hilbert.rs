//! Hilbert series of the dihedral invariants of C<u, v>, computed three
//! independent ways.
//!
//! * [`hilbert_series`]: the Molien-type average `(1/2n) sum_g 1/(1 - tr(g) t)`
//!   evaluated term by term over the cyclotomic field, then certified to have
//!   rational coefficients.
//! * [`hilbert_closed_form`]: the same average after collapsing the group
//!   into conjugacy-class contributions, one parity-dependent formula.
//! * [`hilbert_via_bc`]: a route that never leaves Q.  The denominators
//!   `1 - 2cos(2 pi k / n) t` multiply out to the reversal of the minimal-
//!   polynomial product of [`crate::ratfunc::psi_product`], and the matching
//!   numerator has an explicit coefficient formula, so both are assembled
//!   directly from integer data.
//!
//! [`generator_series`] converts any of these into the generating function
//! counting free generators of the invariant algebra.

use crate::cyclotomic::CycloNum;
use crate::freealg::dihedral_group;
use crate::ratfunc::{psi_product, RatFunc};
use crate::{CycloPoly, QPoly, QRatFunc, Rat};
use num_traits::One;

/// Maps a numerator/denominator pair with cyclotomic coefficients down to a
/// canonical rational function over Q.
///
/// # Panics
/// Panics if any coefficient is irrational.
pub fn certify_rational(num: &CycloPoly, den: &CycloPoly) -> QRatFunc {
    let demote = |p: &CycloPoly| -> QPoly {
        QPoly::from_coeffs(
            p.coeffs()
                .iter()
                .map(|c| {
                    c.as_rational()
                        .expect("certification failed: irrational coefficient")
                })
                .collect(),
        )
    };
    RatFunc::new(demote(num), demote(den))
}

fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

/// Sums `w_i / (1 - c_i t)` as one raw numerator/denominator pair, with no
/// intermediate cancellation: the denominator is the literal product of the
/// linear factors.  Keeping the accumulation gcd-free makes group-sized sums
/// cheap; the single cancellation happens after the coefficients have been
/// certified rational.
fn weighted_pole_sum(terms: impl IntoIterator<Item = (Rat, CycloNum)>) -> (CycloPoly, CycloPoly) {
    let mut num = CycloPoly::zero();
    let mut den = CycloPoly::one();
    for (w, c) in terms {
        let factor = CycloPoly::from_coeffs(vec![CycloNum::one(), -&c]);
        num = &(&num * &factor) + &den.scale(&CycloNum::from_rat(w));
        den = &den * &factor;
    }
    (num, den)
}

/// Hilbert series of the invariant algebra by direct group averaging.
///
/// The sum over the full group is formed over the cyclotomic field and the
/// result certified rational; nothing about conjugacy classes is assumed.
///
/// # Panics
/// Panics for `n < 3`.
pub fn hilbert_series(n: usize) -> QRatFunc {
    assert!(n >= 3, "dihedral order parameter must be at least 3");
    let weight = rat(1, 2 * n as i64);
    let (num, den) = weighted_pole_sum(
        dihedral_group(n)
            .iter()
            .map(|g| (weight.clone(), g.trace())),
    );
    certify_rational(&num, &den)
}

/// Hilbert series by the conjugacy-class formula.
///
/// Both parities share the constant `1/2` (the n reflections, trace 0) and
/// the pole `1/(2n(1 - 2t))` from the identity; even n contributes a second
/// rational pole `1/(2n(1 + 2t))` from the half-turn, and the remaining
/// rotations pair off into `(1/n) sum_k 1/(1 - 2cos(2 pi k/n) t)`.
///
/// # Panics
/// Panics for `n < 3`.
pub fn hilbert_closed_form(n: usize) -> QRatFunc {
    assert!(n >= 3, "dihedral order parameter must be at least 3");
    let m = if n % 2 == 1 { (n - 1) / 2 } else { (n - 2) / 2 };
    let mut terms = vec![(rat(1, 2 * n as i64), CycloNum::from_int(2))];
    if n % 2 == 0 {
        terms.push((rat(1, 2 * n as i64), CycloNum::from_int(-2)));
    }
    terms.extend((1..=m).map(|k| (rat(1, n as i64), CycloNum::two_cos(n, k))));
    let (num, den) = weighted_pole_sum(terms);
    let poles = certify_rational(&num, &den);
    &QRatFunc::constant(rat(1, 2)) + &poles
}

/// Hilbert series assembled entirely over Q.
///
/// With `M = floor(n/2)` and `Psi = psi_product(n) = sum_i c_i t^i` (degree
/// `M + 1`, roots `2cos(2 pi k/n)`), the rotation part of the average is
/// `B/(nC)` where `C = rev(Psi)` and `B_j = (M + 1 - j) c_(M+1-j)`; the
/// constant and the rational poles are subtracted off in the parity-matching
/// combination.
///
/// # Panics
/// Panics for `n < 3`.
pub fn hilbert_via_bc(n: usize) -> QRatFunc {
    assert!(n >= 3, "dihedral order parameter must be at least 3");
    let m = n / 2;
    let psi = psi_product(n);
    assert_eq!(psi.degree(), Some(m + 1));
    let b = QPoly::from_coeffs(
        (0..=m)
            .map(|j| psi.coeff(m + 1 - j) * Rat::from_integer(((m + 1 - j) as i64).into()))
            .collect(),
    );
    let c = psi.reversed();
    let rotations = RatFunc::new(b, c).scale(&rat(1, n as i64));
    let half = QRatFunc::constant(rat(1, 2));
    let id_pole = RatFunc::new(
        QPoly::one(),
        QPoly::from_coeffs(vec![Rat::one(), rat(-2, 1)]),
    )
    .scale(&rat(1, 2 * n as i64));
    let mut h = &(&half - &id_pole) + &rotations;
    if n % 2 == 0 {
        let half_turn = RatFunc::new(
            QPoly::one(),
            QPoly::from_coeffs(vec![Rat::one(), rat(2, 1)]),
        )
        .scale(&rat(1, 2 * n as i64));
        h = &h - &half_turn;
    }
    h
}

/// Generating function `1 - 1/H` whose coefficients count free generators
/// of the invariant algebra in each degree.
///
/// # Panics
/// Panics for `n < 3`.
pub fn generator_series(n: usize) -> QRatFunc {
    let h = hilbert_series(n);
    &QRatFunc::one() - &h.recip()
}
