//! Exact arithmetic for the invariant theory of the dihedral group D_2n
//! acting on the free associative algebra C<u, v>.
//!
//! The action is the natural one in diagonalising coordinates: the rotation
//! sends u -> zeta u, v -> zeta^-1 v (zeta a primitive n-th root of unity)
//! and the reflection swaps u and v.  Everything downstream of that action
//! is computed here over exact fields only: arbitrary-precision rationals
//! and cyclotomic numbers in the power basis of Q(zeta_n).
//!
//! The main entry points are
//! - [`hilbert::hilbert_series`] / [`hilbert::generator_series`]: the Hilbert
//!   series of the invariant algebra and of its free generators, as reduced
//!   rational functions over Q, computed by three independent routes that are
//!   checked against each other in the test suite;
//! - [`ratfunc::Recurrence`]: the linear recurrence satisfied by the
//!   coefficients of such a series;
//! - [`freealg`]: words, noncommutative polynomials, the group action, the
//!   Reynolds operator and per-degree invariant bases;
//! - [`koryukin`]: the position-permuting action of the symmetric groups and
//!   the S-algebra closure that certifies finite generation of the invariants;
//! - [`gens`]: extraction of free generators degree by degree.

pub mod cyclotomic;
pub mod freealg;
pub mod gens;
pub mod hilbert;
pub mod koryukin;
pub mod poly;
pub mod ratfunc;
pub mod scalar;

pub use cyclotomic::CycloNum;
pub use freealg::{DegreeSpan, GroupElement, NcPoly, Word};
pub use koryukin::Permutation;
pub use poly::Poly;
pub use ratfunc::{RatFunc, Recurrence};

/// Arbitrary-precision integer scalar.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational scalar.
pub type Rat = num_rational::BigRational;

/// Dense univariate polynomial with integer coefficients.
pub type IntPoly = Poly<Int>;
/// Dense univariate polynomial with rational coefficients.
pub type QPoly = Poly<Rat>;
/// Dense univariate polynomial with cyclotomic coefficients.
pub type CycloPoly = Poly<CycloNum>;
/// Reduced rational function over Q.
pub type QRatFunc = RatFunc<Rat>;
/// Rational function with cyclotomic coefficients, used for group sums
/// before their coefficients are certified rational.
pub type CycloRatFunc = RatFunc<CycloNum>;
