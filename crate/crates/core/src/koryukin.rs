//! The right Sym(k)-action permuting letter positions inside degree-k
//! homogeneous elements, closure of subspaces under that action together
//! with multiplication, and the machine check that {uv+vu, u^n+v^n}
//! generate the whole invariant algebra under these operations.
//!
//! The action is (x_(i_1)...x_(i_k)) o pi = x_(i_(pi^-1(1)))...; the letter
//! at position i moves to position pi(i).  Composition is fixed left to
//! right — (pi.then(sigma))(x) = sigma(pi(x)) — which is exactly what makes
//! the displayed rule a right action (see the `right_action_law` test).

use crate::freealg::{invariant_basis, is_invariant, DegreeSpan, Letter, NcPoly, Word};
use crate::cyclotomic::CycloNum;
use crate::Rat;
use std::fmt;

/// A permutation of {0, .., k-1} in one-line notation: `images[i]` is the
/// image of position i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation { images: (0..k).collect() }
    }

    /// One-line notation, 0-indexed.
    ///
    /// # Panics
    /// Panics unless `images` is a bijection on {0, .., k-1}.
    pub fn from_images(images: Vec<usize>) -> Self {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in &images {
            assert!(x < k && !seen[x], "not a bijection on 0..{k}");
            seen[x] = true;
        }
        Permutation { images }
    }

    /// The transposition of two 0-indexed positions.
    ///
    /// # Panics
    /// Panics out of range.
    pub fn transposition(k: usize, i: usize, j: usize) -> Self {
        assert!(i < k && j < k, "position out of range");
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(i, j);
        Permutation { images }
    }

    /// Product of disjoint cycles given in **1-indexed** positions, matching
    /// written notation: `(1 3)` is `&[&[1, 3]]`.
    ///
    /// # Panics
    /// Panics on out-of-range or repeated entries.
    pub fn from_cycles(k: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        let mut used = vec![false; k];
        for cycle in cycles {
            for window in cycle.windows(2) {
                let (a, b) = (window[0], window[1]);
                assert!((1..=k).contains(&a) && (1..=k).contains(&b), "position out of range");
                images[a - 1] = b - 1;
            }
            if cycle.len() > 1 {
                images[cycle[cycle.len() - 1] - 1] = cycle[0] - 1;
            }
            for &a in *cycle {
                assert!(!used[a - 1], "repeated position in cycle notation");
                used[a - 1] = true;
            }
        }
        Permutation::from_images(images)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self` first, then `rhs`: the composition making `o` a right action.
    pub fn then(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.size(), rhs.size(), "size mismatch");
        Permutation {
            images: self.images.iter().map(|&x| rhs.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle notation with 1-indexed positions; identity prints `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.size()];
        let mut wrote = false;
        for start in 0..self.size() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut sep = "";
            loop {
                seen[i] = true;
                write!(f, "{sep}{}", i + 1)?;
                sep = " ";
                i = self.images[i];
                if i == start {
                    break;
                }
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

fn permute_word(w: Word, pi: &Permutation) -> Word {
    let mut letters = vec![Letter::U; w.len()];
    for i in 0..w.len() {
        letters[pi.apply(i)] = w.letter(i);
    }
    Word::from_letters(letters)
}

/// The position action `p o pi`, extended linearly.
///
/// # Panics
/// Panics if `p` is not homogeneous of degree `pi.size()` (zero is allowed).
pub fn s_act(p: &NcPoly, pi: &Permutation) -> NcPoly {
    if p.is_zero() {
        return NcPoly::zero();
    }
    let k = p
        .homogeneous_degree()
        .expect("position action requires a homogeneous polynomial");
    assert_eq!(k, pi.size(), "permutation size does not match the degree");
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        out.add_term(permute_word(*w, pi), c.clone());
    }
    out
}

/// Smallest subspace containing `s` and stable under the whole position
/// action of Sym(k).
///
/// Adjacent transpositions generate Sym(k), so it suffices to saturate under
/// those.  Every vector that enters the spanning set is processed exactly
/// once: its images either already lie in the span or enlarge it and join
/// the worklist, and since the span only ever grows, once an image is inside
/// it stays inside.
///
/// # Panics
/// Panics if the rows mix degrees.
pub fn sym_span_closure(s: &DegreeSpan) -> DegreeSpan {
    let Some(first) = s.rows().first() else {
        return DegreeSpan::new();
    };
    let k = first.homogeneous_degree().expect("homogeneous rows");
    assert!(
        s.rows().iter().all(|r| r.homogeneous_degree() == Some(k)),
        "span mixes degrees"
    );
    let mut out = s.clone();
    let mut work: Vec<NcPoly> = s.rows().to_vec();
    while let Some(p) = work.pop() {
        for i in 0..k.saturating_sub(1) {
            let image = s_act(&p, &Permutation::transposition(k, i, i + 1));
            if out.insert(image.clone()) {
                work.push(image);
            }
        }
    }
    out
}

/// One degree of an [`SClosureReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: usize,
    pub closure_dim: usize,
    pub invariant_dim: usize,
    pub equal: bool,
}

/// One replay of the proof's key manipulation at parameters (b, c): from
/// `s1 * p_(b,c)` the combination `(q + q o (13) - q o (23)) / 2` collapses
/// to `uvu^b v^c + vuv^b u^c`, and the final `(2, b+2)` move turns that into
/// `p_(b+1,c+1)`; both elements must also lie in the computed closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step3Certificate {
    pub b: usize,
    pub c: usize,
    pub holds: bool,
}

/// Outcome of an S-algebra closure run: per-degree dimensions against the
/// invariant spaces, the closure bases themselves, and any proof-replay
/// certificates.
#[derive(Debug, Clone)]
pub struct SClosureReport {
    n: usize,
    max_degree: usize,
    rows: Vec<DegreeRow>,
    spans: Vec<DegreeSpan>,
    certificates: Vec<Step3Certificate>,
}

impl SClosureReport {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn rows(&self) -> &[DegreeRow] {
        &self.rows
    }

    /// Closure basis in degree `k` (k = 1..=max_degree).
    pub fn span_at(&self, k: usize) -> &DegreeSpan {
        &self.spans[k]
    }

    pub fn certificates(&self) -> &[Step3Certificate] {
        &self.certificates
    }

    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(|r| r.equal)
    }

    pub fn all_certified(&self) -> bool {
        self.certificates.iter().all(|c| c.holds)
    }
}

impl fmt::Display for SClosureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree | closure dim | invariant dim | status")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>6} | {:>11} | {:>13} | {}",
                r.degree,
                r.closure_dim,
                r.invariant_dim,
                if r.equal { "equal" } else { "NOT EQUAL" }
            )?;
        }
        for c in &self.certificates {
            writeln!(
                f,
                "step-3 replay (b, c) = ({}, {}): {}",
                c.b,
                c.c,
                if c.holds { "produced" } else { "FAILED" }
            )?;
        }
        Ok(())
    }
}

/// Closure of the span of `generators` under products and the position
/// action, degree by degree up to `max_degree`, compared against the
/// invariant spaces of the order-2n dihedral group.
///
/// Within one degree the seed is the degree-k generators plus all products
/// of lower-degree closure basis elements; lower degrees are already final
/// when degree k is processed, so one symmetrization of the seed span is the
/// per-degree fixpoint.
///
/// # Panics
/// Panics for `n < 3`, a zero or non-homogeneous generator, or (when every
/// generator is invariant) if the closure escapes the invariant spaces —
/// the latter indicates an implementation bug.
pub fn s_algebra_closure(n: usize, generators: &[NcPoly], max_degree: usize) -> SClosureReport {
    assert!(n >= 3, "dihedral order parameter must be at least 3");
    for g in generators {
        let d = g
            .homogeneous_degree()
            .expect("generators must be nonzero and homogeneous");
        assert!(d >= 1, "generators must have positive degree");
    }
    let gens_invariant = generators.iter().all(|g| is_invariant(g, n));
    let mut spans: Vec<DegreeSpan> = vec![DegreeSpan::new()];
    let mut rows = Vec::new();
    for k in 1..=max_degree {
        let mut seed: Vec<NcPoly> = generators
            .iter()
            .filter(|g| g.homogeneous_degree() == Some(k))
            .cloned()
            .collect();
        for j in 1..k {
            for a in spans[j].rows() {
                for b in spans[k - j].rows() {
                    seed.push(a.mul(b));
                }
            }
        }
        let closed = sym_span_closure(&DegreeSpan::from_vectors(seed));
        let inv = invariant_basis(n, k);
        let equal = closed == inv;
        if gens_invariant && !equal {
            assert!(
                inv.contains_span(&closed),
                "closure escaped the invariant space in degree {k}"
            );
        }
        rows.push(DegreeRow {
            degree: k,
            closure_dim: closed.dim(),
            invariant_dim: inv.dim(),
            equal,
        });
        spans.push(closed);
    }
    SClosureReport {
        n,
        max_degree,
        rows,
        spans,
        certificates: Vec::new(),
    }
}

/// `p_(b,c) = u^b v^c + v^b u^c`.
fn pair_power(b: usize, c: usize) -> NcPoly {
    let w = Word::u_pow_v_pow(b, c);
    NcPoly::from_words([w, w.swap_uv()])
}

fn step3_replay(b: usize, c: usize, spans: &[DegreeSpan]) -> bool {
    let k = b + c + 2;
    let s1 = pair_power(1, 1);
    let q = s1.mul(&pair_power(b, c));
    let combination = q
        .add(&s_act(&q, &Permutation::from_cycles(k, &[&[1, 3]])))
        .sub(&s_act(&q, &Permutation::from_cycles(k, &[&[2, 3]])))
        .scale(&CycloNum::from_rat(Rat::new(1.into(), 2.into())));
    // the collapsed middle element uvu^b v^c + vuv^b u^c
    let head = Word::u_pow_v_pow(1, 1).concat(Word::u_pow_v_pow(b, c));
    let middle = NcPoly::from_words([head, head.swap_uv()]);
    let moved = s_act(&middle, &Permutation::from_cycles(k, &[&[2, b + 2]]));
    combination == middle
        && moved == pair_power(b + 1, c + 1)
        && spans[k].contains(&middle)
        && spans[k].contains(&moved)
}

/// Verifies that `{uv + vu, u^n + v^n}` generate the invariant algebra
/// under products and the position action in every degree up to
/// `max_degree`, and replays the inductive step of the proof for every
/// admissible (b, c).
///
/// # Panics
/// Panics for `n < 3` or `max_degree < n`, and on any degree where the
/// closure does not equal the invariant space or any failed replay — either
/// would indicate an implementation bug at these scales.
pub fn verify_generation_theorem(n: usize, max_degree: usize) -> SClosureReport {
    assert!(max_degree >= n, "the degree cap must reach the second generator");
    let generators = [pair_power(1, 1), pair_power(n, 0)];
    let mut report = s_algebra_closure(n, &generators, max_degree);
    for row in &report.rows {
        assert!(
            row.equal,
            "closure differs from the invariant space in degree {}",
            row.degree
        );
    }
    let mut certificates = Vec::new();
    for b in 1..max_degree {
        for c in 0..max_degree {
            if b + c + 2 <= max_degree && (b as i64 - c as i64).rem_euclid(n as i64) == 0 {
                let holds = step3_replay(b, c, &report.spans);
                assert!(holds, "step-3 replay failed at (b, c) = ({b}, {c})");
                certificates.push(Step3Certificate { b, c, holds });
            }
        }
    }
    report.certificates = certificates;
    report
}
