//! Extraction of a homogeneous free generating set of the invariant algebra,
//! degree by degree.
//!
//! In each degree the *decomposable* subspace is spanned by products of two
//! lower-degree invariants (any longer product regroups into such a pair);
//! new free generators are a complement of the decomposables inside the
//! invariant component.  Complement representatives are the pair vectors
//! `w + swap(w)` themselves, admitted in a fixed order: candidates whose
//! leading word has the two-block shape `u^a v^b` first (descending), then
//! the remaining candidates ascending.  This order pins the reported
//! leading-term sets; counts are independent of it and are checked against
//! the generating function [`crate::hilbert::generator_series`] in every
//! degree.

use crate::freealg::{invariant_basis, DegreeSpan, NcPoly, Word};
use crate::hilbert::{generator_series, hilbert_series};
use crate::Rat;
use num_traits::ToPrimitive;

/// Span of all products of two positive-degree invariants with degrees
/// summing to `k`.
///
/// # Panics
/// Panics for `n < 3` or `k < 1`.
pub fn decomposable_span(n: usize, k: usize) -> DegreeSpan {
    assert!(n >= 3 && k >= 1);
    let mut span = DegreeSpan::new();
    for j in 1..k {
        let left = invariant_basis(n, j);
        let right = invariant_basis(n, k - j);
        for a in left.rows() {
            for b in right.rows() {
                span.insert(a.mul(b));
            }
        }
    }
    span
}

/// Leading words of the degree-k invariant component's echelon basis,
/// descending.
///
/// # Panics
/// Panics for `n < 3` or `k < 1`.
pub fn basis_leading_terms(n: usize, k: usize) -> Vec<Word> {
    invariant_basis(n, k).pivots()
}

/// New free generators found in one degree.
#[derive(Debug, Clone)]
pub struct GeneratorRow {
    pub degree: usize,
    pub count: usize,
    /// Leading words, descending; parallel to `generators`.
    pub leading_terms: Vec<Word>,
    /// Witnesses in the paper-style integer form `w + swap(w)`.
    pub generators: Vec<NcPoly>,
}

/// Free generators of the invariant algebra through a degree cap, one row
/// per degree starting at 1.
#[derive(Debug, Clone)]
pub struct GeneratorTable {
    n: usize,
    rows: Vec<GeneratorRow>,
}

impl GeneratorTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[GeneratorRow] {
        &self.rows
    }

    pub fn row(&self, degree: usize) -> &GeneratorRow {
        &self.rows[degree - 1]
    }
}

/// Extracts new free generators in every degree up to `max_degree`.
///
/// # Panics
/// Panics for `n < 3` or `max_degree < 2`, and if any degree's generator
/// count disagrees with the coefficient of the generating function — either
/// would mean the series code or the extraction code is wrong, so no table
/// is produced.
pub fn free_generators(n: usize, max_degree: usize) -> GeneratorTable {
    assert!(n >= 3, "dihedral order parameter must be at least 3");
    assert!(max_degree >= 2, "the first generator lives in degree 2");
    let expected = generator_series(n).series_coefficients(max_degree);
    let mut rows = Vec::new();
    for k in 1..=max_degree {
        let inv = invariant_basis(n, k);
        let mut span = decomposable_span(n, k);
        // pair vectors, two-block leading words first
        let (two_block, mut rest): (Vec<&NcPoly>, Vec<&NcPoly>) = inv
            .rows()
            .iter()
            .partition(|p| p.leading().unwrap().0.is_u_block_v_block());
        rest.reverse();
        let mut kept: Vec<NcPoly> = Vec::new();
        for candidate in two_block.into_iter().chain(rest) {
            if span.insert(candidate.clone()) {
                kept.push(candidate.clone());
            }
        }
        kept.sort_by(|a, b| b.leading().unwrap().0.cmp(&a.leading().unwrap().0));
        let count = kept.len();
        assert_eq!(
            Rat::from_integer((count as i64).into()),
            expected[k],
            "free-generator count in degree {k} disagrees with the generating function"
        );
        rows.push(GeneratorRow {
            degree: k,
            count,
            leading_terms: kept.iter().map(|p| p.leading().unwrap().0).collect(),
            generators: kept,
        });
    }
    GeneratorTable { n, rows }
}

/// Outcome of the Fibonacci checks for the order-6 group (n = 3).
#[derive(Debug, Clone)]
pub struct FibonacciReport {
    pub max_degree: usize,
    /// Generator counts at degrees 2..=max_degree.
    pub counts: Vec<usize>,
    /// Counts equal 1, 1, 2, 3, 5, 8, ... position by position.
    pub matches_fibonacci: bool,
    /// c(k+2) = 2 c(k) + c(k-1) on the computed counts.
    pub count_recurrence_holds: bool,
    /// a(k+2) = 3 a(k) + 2 a(k-1) on the invariant dimensions.
    pub dimension_recurrence_holds: bool,
}

impl FibonacciReport {
    pub fn holds(&self) -> bool {
        self.matches_fibonacci && self.count_recurrence_holds && self.dimension_recurrence_holds
    }
}

/// Checks that the n = 3 generator counts follow the Fibonacci numbers and
/// that the two degree-shift recurrences hold on computed data.
///
/// # Panics
/// Panics for `max_degree < 2`.
pub fn fibonacci_check(max_degree: usize) -> FibonacciReport {
    let table = free_generators(3, max_degree);
    let count = |degree: usize| -> usize { table.row(degree).count };
    let counts: Vec<usize> = (2..=max_degree).map(count).collect();
    let mut fib = (1usize, 1usize);
    let mut matches_fibonacci = true;
    for &c in &counts {
        matches_fibonacci &= c == fib.0;
        fib = (fib.1, fib.0 + fib.1);
    }
    let count_recurrence_holds = (2..=max_degree.saturating_sub(2))
        .all(|k| count(k + 2) == 2 * count(k) + count(k - 1));
    let dims: Vec<usize> = hilbert_series(3)
        .series_coefficients(max_degree)
        .iter()
        .map(|c| c.to_integer().to_usize().unwrap())
        .collect();
    let dimension_recurrence_holds = (2..=max_degree.saturating_sub(2))
        .all(|k| dims[k + 2] == 3 * dims[k] + 2 * dims[k - 1]);
    FibonacciReport {
        max_degree,
        counts,
        matches_fibonacci,
        count_recurrence_holds,
        dimension_recurrence_holds,
    }
}
