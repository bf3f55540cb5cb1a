//! The free associative algebra C<u, v>, the dihedral group action on it,
//! and exact linear algebra on its homogeneous components.
//!
//! Words are stored as bit sequences (one bit per letter, so degrees are
//! capped at 63, far above anything the library computes).  The monomial
//! order is degree-lexicographic with u > v.  Homogeneous subspaces are kept
//! as [`DegreeSpan`]s: reduced row-echelon bases with strictly descending
//! pivot words, which makes span equality a plain structural comparison.
//!
//! The group D_2n acts in diagonalising coordinates: the rotation generator
//! sends u -> zeta u, v -> zeta^-1 v and the reflection swaps u and v.  A
//! word is *balanced* when deg_u - deg_v vanishes mod n; the invariant
//! component in degree k is spanned by w + swap(w) over balanced words, and
//! the Reynolds operator provides an independent construction of the same
//! space.

use crate::cyclotomic::{cyclo, CycloNum};
use crate::Rat;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// One of the two free generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    U,
    V,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::U => Letter::V,
            Letter::V => Letter::U,
        }
    }
}

/// A word in u, v: one bit per position, v = 1.  Maximum length 63.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub const MAX_LEN: usize = 63;

    pub fn empty() -> Self {
        Word { len: 0, bits: 0 }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Word::empty();
        for l in letters {
            w = w.push(l);
        }
        w
    }

    /// The word extended by one letter on the right.
    ///
    /// # Panics
    /// Panics beyond [`Word::MAX_LEN`].
    pub fn push(self, l: Letter) -> Self {
        assert!((self.len as usize) < Self::MAX_LEN, "word too long");
        let bit = match l {
            Letter::U => 0u64,
            Letter::V => 1u64,
        };
        Word { len: self.len + 1, bits: self.bits | bit << self.len }
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Letter at position `i`, counted from 0 on the left.
    ///
    /// # Panics
    /// Panics out of range.
    pub fn letter(self, i: usize) -> Letter {
        assert!(i < self.len as usize, "position out of range");
        if self.bits >> i & 1 == 0 {
            Letter::U
        } else {
            Letter::V
        }
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.len as usize).map(move |i| self.letter(i))
    }

    pub fn deg_v(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn deg_u(self) -> usize {
        self.len() - self.deg_v()
    }

    /// `deg_u - deg_v`.
    pub fn imbalance(self) -> i64 {
        self.deg_u() as i64 - self.deg_v() as i64
    }

    /// Concatenation.
    ///
    /// # Panics
    /// Panics beyond [`Word::MAX_LEN`].
    pub fn concat(self, rhs: Word) -> Self {
        let len = self.len() + rhs.len();
        assert!(len <= Self::MAX_LEN, "word too long");
        Word { len: len as u8, bits: self.bits | rhs.bits << self.len }
    }

    /// The letter-exchange u <-> v applied to every position.
    pub fn swap_uv(self) -> Self {
        let mask = if self.len == 0 { 0 } else { u64::MAX >> (64 - self.len as u32) };
        Word { len: self.len, bits: self.bits ^ mask }
    }

    /// `u^a v^b`.
    pub fn u_pow_v_pow(a: usize, b: usize) -> Self {
        let mut w = Word::empty();
        for _ in 0..a {
            w = w.push(Letter::U);
        }
        for _ in 0..b {
            w = w.push(Letter::V);
        }
        w
    }

    /// True when this word has the two-block shape `u^a v^b` (a, b >= 0).
    pub fn is_u_block_v_block(self) -> bool {
        let k = self.deg_u();
        self.bits >> k == (1u64 << self.deg_v()) - 1 && self.bits & ((1u64 << k) - 1) == 0
    }
}

impl Ord for Word {
    /// Degree-lexicographic with u > v: longer words are greater; at equal
    /// length the first differing position decides, u beating v.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| {
                let diff = self.bits ^ other.bits;
                if diff == 0 {
                    return std::cmp::Ordering::Equal;
                }
                let pos = diff.trailing_zeros();
                if self.bits >> pos & 1 == 0 {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Less
                }
            })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// Run-length form, e.g. `u^2v^2`; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut run: Option<(Letter, usize)> = None;
        let emit = |f: &mut fmt::Formatter<'_>, l: Letter, n: usize| -> fmt::Result {
            let c = if l == Letter::U { 'u' } else { 'v' };
            if n == 1 {
                write!(f, "{c}")
            } else {
                write!(f, "{c}^{n}")
            }
        };
        for l in self.letters() {
            match run {
                Some((cur, n)) if cur == l => run = Some((cur, n + 1)),
                Some((cur, n)) => {
                    emit(f, cur, n)?;
                    run = Some((l, 1));
                }
                None => run = Some((l, 1)),
            }
        }
        let (l, n) = run.unwrap();
        emit(f, l, n)
    }
}

/// Noncommutative polynomial: a finite map from words to nonzero cyclotomic
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, CycloNum>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn from_term(w: Word, c: CycloNum) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_word(w: Word) -> Self {
        NcPoly::from_term(w, CycloNum::one())
    }

    /// Sum of the given words with coefficient 1.
    pub fn from_words<I: IntoIterator<Item = Word>>(words: I) -> Self {
        let mut p = NcPoly::zero();
        for w in words {
            p.add_term(w, CycloNum::one());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CycloNum)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: Word) -> CycloNum {
        self.terms.get(&w).cloned().unwrap_or_else(CycloNum::zero)
    }

    /// Greatest word under deglex(u > v), with its coefficient.
    pub fn leading(&self) -> Option<(Word, &CycloNum)> {
        self.terms.last_key_value().map(|(w, c)| (*w, c))
    }

    /// Degree if every term has the same length; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let first = it.next()?.len();
        it.all(|w| w.len() == first).then_some(first)
    }

    pub fn add_term(&mut self, w: Word, c: CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(*w, -c);
        }
        out
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(&-&CycloNum::one())
    }

    pub fn scale(&self, c: &CycloNum) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, x) in self.terms() {
            out.add_term(*w, x * c);
        }
        out
    }

    /// Product in the free algebra (word concatenation, bilinear).
    pub fn mul(&self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in rhs.terms() {
                out.add_term(w1.concat(*w2), c1 * c2);
            }
        }
        out
    }

    /// Letter exchange u <-> v extended linearly.
    pub fn swap_uv(&self) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in self.terms() {
            out.add_term(w.swap_uv(), c.clone());
        }
        out
    }

    /// Divides by the leading coefficient.  Zero stays zero.
    pub fn monic(&self) -> NcPoly {
        match self.leading() {
            None => NcPoly::zero(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }
}

impl fmt::Display for NcPoly {
    /// Terms in descending word order; unit coefficients are elided, other
    /// coefficients attach with `*` (e.g. `1/2*uv + 1/2*vu`); irrational
    /// coefficients render parenthesised in the power basis.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let (sign_neg, mag) = match c.as_rational() {
                Some(r) => (r.is_negative(), CycloNum::from_rat(r.abs())),
                None => (false, c.clone()),
            };
            if i == 0 {
                if sign_neg {
                    write!(f, "-")?;
                }
            } else if sign_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            if !unit || w.is_empty() {
                if mag.as_rational().is_some() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            if !w.is_empty() {
                if !unit {
                    write!(f, "*")?;
                }
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NcParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    Unexpected(char, usize),
    #[error("empty input")]
    Empty,
    #[error("malformed exponent at byte {0}")]
    BadExponent(usize),
    #[error("malformed coefficient at byte {0}")]
    BadCoefficient(usize),
}

/// Parses the textual form produced by [`NcPoly`]'s `Display` (rational
/// coefficients only).
pub fn parse_ncpoly(input: &str) -> Result<NcPoly, NcParseError> {
    let s: Vec<char> = input.chars().collect();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < s.len() && s[*i].is_whitespace() {
            *i += 1;
        }
    };
    let mut out = NcPoly::zero();
    skip_ws(&mut i);
    if i == s.len() {
        return Err(NcParseError::Empty);
    }
    let mut first = true;
    while i < s.len() {
        skip_ws(&mut i);
        let mut negative = false;
        if !first || matches!(s.get(i), Some('+') | Some('-')) {
            match s.get(i) {
                Some('+') => i += 1,
                Some('-') => {
                    negative = true;
                    i += 1;
                }
                Some(&c) => return Err(NcParseError::Unexpected(c, i)),
                None => break,
            }
            skip_ws(&mut i);
        }
        first = false;
        // optional rational coefficient
        let mut coeff = Rat::one();
        let digits = |i: &mut usize| -> Option<num_bigint::BigInt> {
            let start = *i;
            while *i < s.len() && s[*i].is_ascii_digit() {
                *i += 1;
            }
            (*i > start).then(|| s[start..*i].iter().collect::<String>().parse().unwrap())
        };
        if s.get(i).is_some_and(|c| c.is_ascii_digit()) {
            let p = digits(&mut i).ok_or(NcParseError::BadCoefficient(i))?;
            let q = if s.get(i) == Some(&'/') {
                i += 1;
                digits(&mut i).ok_or(NcParseError::BadCoefficient(i))?
            } else {
                1.into()
            };
            if q == 0.into() {
                return Err(NcParseError::BadCoefficient(i));
            }
            coeff = Rat::new(p, q);
            if s.get(i) == Some(&'*') {
                i += 1;
            }
            skip_ws(&mut i);
        }
        if negative {
            coeff = -coeff;
        }
        // optional word (a bare constant already consumed its digits above)
        let mut word = Word::empty();
        while let Some(&c) = s.get(i) {
            let l = match c {
                'u' => Letter::U,
                'v' => Letter::V,
                _ => break,
            };
            i += 1;
            let mut exp = 1usize;
            if s.get(i) == Some(&'^') {
                i += 1;
                let e = digits(&mut i).ok_or(NcParseError::BadExponent(i))?;
                exp = e.try_into().map_err(|_| NcParseError::BadExponent(i))?;
                if exp == 0 {
                    return Err(NcParseError::BadExponent(i));
                }
            }
            for _ in 0..exp {
                word = word.push(l);
            }
        }
        out.add_term(word, CycloNum::from_rat(coeff));
        skip_ws(&mut i);
    }
    Ok(out)
}

/// An element of GL_2 acting by linear substitution on C<u, v>.
///
/// Columns are images: `g(u) = m[0][0] u + m[1][0] v` and
/// `g(v) = m[0][1] u + m[1][1] v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    m: [[CycloNum; 2]; 2],
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            m: [
                [CycloNum::one(), CycloNum::zero()],
                [CycloNum::zero(), CycloNum::one()],
            ],
        }
    }

    /// The rotation `u -> zeta_n^k u, v -> zeta_n^-k v`.
    pub fn rotation(n: usize, k: usize) -> Self {
        GroupElement {
            m: [
                [cyclo(n, k % n), CycloNum::zero()],
                [CycloNum::zero(), cyclo(n, (n - k % n) % n)],
            ],
        }
    }

    /// The reflection `u <-> v`.
    pub fn swap() -> Self {
        GroupElement {
            m: [
                [CycloNum::zero(), CycloNum::one()],
                [CycloNum::one(), CycloNum::zero()],
            ],
        }
    }

    /// `self o rhs`: apply `rhs`'s substitution first, then `self`'s.
    pub fn compose(&self, rhs: &GroupElement) -> Self {
        let mut m = [
            [CycloNum::zero(), CycloNum::zero()],
            [CycloNum::zero(), CycloNum::zero()],
        ];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = &(&self.m[r][0] * &rhs.m[0][c]) + &(&self.m[r][1] * &rhs.m[1][c]);
            }
        }
        GroupElement { m }
    }

    pub fn trace(&self) -> CycloNum {
        &self.m[0][0] + &self.m[1][1]
    }

    /// The image of one letter as a list of (letter, coefficient) pairs.
    pub fn image_of(&self, l: Letter) -> Vec<(Letter, CycloNum)> {
        let col = match l {
            Letter::U => 0,
            Letter::V => 1,
        };
        [(Letter::U, 0), (Letter::V, 1)]
            .into_iter()
            .filter_map(|(letter, row)| {
                let c = self.m[row][col].clone();
                (!c.is_zero()).then_some((letter, c))
            })
            .collect()
    }
}

/// All 2n elements of D_2n in diagonalising coordinates: the n rotations
/// followed by the n reflections.
///
/// # Panics
/// Panics for `n < 3`.
pub fn dihedral_group(n: usize) -> Vec<GroupElement> {
    assert!(n >= 3, "dihedral order parameter must be at least 3");
    let tau = GroupElement::swap();
    let mut out: Vec<GroupElement> = (0..n).map(|k| GroupElement::rotation(n, k)).collect();
    out.extend((0..n).map(|k| GroupElement::rotation(n, k).compose(&tau)));
    out
}

/// Substitutes `g` into `p`: each letter of each word is replaced by its
/// image and the products expanded.
pub fn act(g: &GroupElement, p: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        let mut acc: Vec<(Word, CycloNum)> = vec![(Word::empty(), c.clone())];
        for l in w.letters() {
            let image = g.image_of(l);
            let mut next = Vec::with_capacity(acc.len() * image.len());
            for (pw, pc) in &acc {
                for (il, ic) in &image {
                    next.push((pw.push(*il), pc * ic));
                }
            }
            acc = next;
        }
        for (w2, c2) in acc {
            out.add_term(w2, c2);
        }
    }
    out
}

/// The averaging projector `(1/2n) sum_(g in D_2n) g`.
///
/// # Panics
/// Panics for `n < 3`.
pub fn reynolds(p: &NcPoly, n: usize) -> NcPoly {
    let sum = dihedral_group(n)
        .iter()
        .fold(NcPoly::zero(), |acc, g| acc.add(&act(g, p)));
    sum.scale(&CycloNum::from_rat(Rat::new(1.into(), (2 * n as i64).into())))
}

/// True iff `p` is fixed by the whole group, checked on the two generators.
pub fn is_invariant(p: &NcPoly, n: usize) -> bool {
    act(&GroupElement::rotation(n, 1), p) == *p && act(&GroupElement::swap(), p) == *p
}

/// Words of length `k` whose u/v-degree difference vanishes mod n, in
/// ascending deglex order.
pub fn balanced_words(n: usize, k: usize) -> Vec<Word> {
    assert!(k <= Word::MAX_LEN, "degree too large");
    let mut out: Vec<Word> = (0u64..1 << k)
        .map(|bits| Word { len: k as u8, bits })
        .filter(|w| w.imbalance().rem_euclid(n as i64) == 0)
        .collect();
    out.sort();
    out
}

/// Dimension of the degree-k invariant component by direct enumeration:
/// half the number of balanced words.
///
/// # Panics
/// Panics for `n < 3` or `k < 1`.
pub fn invariant_dimension_by_counting(n: usize, k: usize) -> usize {
    assert!(n >= 3 && k >= 1);
    balanced_words(n, k).len() / 2
}

/// Echelon basis of the degree-k invariant component: `w + swap(w)` over
/// balanced words with `w > swap(w)`.
///
/// # Panics
/// Panics for `n < 3` or `k < 1`.
pub fn invariant_basis(n: usize, k: usize) -> DegreeSpan {
    assert!(n >= 3 && k >= 1);
    let mut span = DegreeSpan::new();
    for w in balanced_words(n, k) {
        if w > w.swap_uv() {
            span.insert(NcPoly::from_words([w, w.swap_uv()]));
        }
    }
    span
}

/// Span of the Reynolds images of all degree-k words: the invariant
/// component constructed through the projector.
///
/// # Panics
/// Panics for `n < 3` or `k < 1`.
pub fn reynolds_span(n: usize, k: usize) -> DegreeSpan {
    assert!(n >= 3 && k >= 1);
    let mut span = DegreeSpan::new();
    for bits in 0u64..1 << k {
        let w = Word { len: k as u8, bits };
        span.insert(reynolds(&NcPoly::from_word(w), n));
    }
    span
}

/// A subspace of a homogeneous component in reduced row-echelon form:
/// monic rows with strictly descending pivot (leading) words, each pivot
/// word absent from every other row.  The representation is canonical, so
/// two spans are equal iff the structs are equal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeSpan {
    rows: Vec<NcPoly>,
}

impl DegreeSpan {
    pub fn new() -> Self {
        DegreeSpan::default()
    }

    pub fn from_vectors<I: IntoIterator<Item = NcPoly>>(vecs: I) -> Self {
        let mut span = DegreeSpan::new();
        for v in vecs {
            span.insert(v);
        }
        span
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Rows in descending pivot order.
    pub fn rows(&self) -> &[NcPoly] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<Word> {
        self.rows.iter().map(|r| r.leading().unwrap().0).collect()
    }

    /// Fully reduces `p` against the basis (eliminates every pivot word).
    pub fn reduce(&self, p: &NcPoly) -> NcPoly {
        let mut out = p.clone();
        for row in &self.rows {
            let pivot = row.leading().unwrap().0;
            let c = out.coeff(pivot);
            if !c.is_zero() {
                out = out.sub(&row.scale(&c));
            }
        }
        out
    }

    pub fn contains(&self, p: &NcPoly) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn contains_span(&self, other: &DegreeSpan) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Inserts a vector, keeping reduced echelon form.  Returns whether the
    /// dimension grew.
    pub fn insert(&mut self, p: NcPoly) -> bool {
        let r = self.reduce(&p).monic();
        let Some((pivot, _)) = r.leading() else {
            return false;
        };
        // eliminate the new pivot from existing rows, then place the row
        for row in &mut self.rows {
            let c = row.coeff(pivot);
            if !c.is_zero() {
                *row = row.sub(&r.scale(&c));
            }
        }
        let at = self
            .rows
            .partition_point(|row| row.leading().unwrap().0 > pivot);
        self.rows.insert(at, r);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        let p = parse_ncpoly(s).unwrap();
        assert_eq!(p.num_terms(), 1);
        p.leading().unwrap().0
    }

    fn np(s: &str) -> NcPoly {
        parse_ncpoly(s).unwrap()
    }

    #[test]
    fn word_basics() {
        assert_eq!(w("u^2v").len(), 3);
        assert_eq!(w("u^2v").deg_u(), 2);
        assert_eq!(w("u^2v").deg_v(), 1);
        assert_eq!(w("uv").swap_uv(), w("vu"));
        assert_eq!(w("u^3v").swap_uv(), w("v^3u"));
        assert_eq!(w("uv").concat(w("vu")), w("uv^2u"));
        assert_eq!(w("uvu").imbalance(), 1);
        assert!(w("u^4v").is_u_block_v_block());
        assert!(w("v^3").is_u_block_v_block());
        assert!(!w("uvu").is_u_block_v_block());
    }

    #[test]
    fn deglex_order() {
        // longer beats shorter; at equal length u beats v at the first
        // difference
        assert!(w("uv") > w("u"));
        assert!(w("u") > w("v"));
        assert!(w("uu") > w("uv"));
        assert!(w("uv") > w("vu"));
        assert!(w("vu") > w("vv"));
        assert!(w("uvu^3") > w("uv^4"));
        assert!(w("u^4v") > w("u^3vu"));
        let mut all: Vec<Word> = (0u64..8).map(|bits| Word { len: 3, bits }).collect();
        all.sort();
        let rendered: Vec<String> = all.iter().map(|x| x.to_string()).collect();
        assert_eq!(
            rendered,
            vec!["v^3", "v^2u", "vuv", "vu^2", "uv^2", "uvu", "u^2v", "u^3"]
        );
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in [
            "u^2v^2 + v^2u^2",
            "uv - vu",
            "1/2*uv + 1/2*vu",
            "-3*u^2 + 2/5*v",
            "1",
            "-2",
            "u^4v + u^3vu + v^3uv + v^4u",
        ] {
            let p = np(s);
            assert_eq!(p.to_string(), s, "canonical form");
            assert_eq!(parse_ncpoly(&p.to_string()).unwrap(), p);
        }
        assert_eq!(np("uv + vu - uv - vu").to_string(), "0");
        assert!(parse_ncpoly("u^").is_err());
        assert!(parse_ncpoly("").is_err());
        assert!(parse_ncpoly("3w").is_err());
    }

    #[test]
    fn polynomial_arithmetic() {
        let s1 = np("uv + vu");
        let p3 = np("u^3 + v^3");
        assert_eq!(p3.mul(&s1), np("u^4v + u^3vu + v^4u + v^3uv"));
        assert_eq!(s1.mul(&p3), np("uvu^3 + uv^4 + vu^4 + vuv^3"));
        assert_eq!(s1.sub(&s1), NcPoly::zero());
        assert_eq!(s1.swap_uv(), s1);
        assert_eq!(np("u^2v").swap_uv(), np("v^2u"));
        assert_eq!(
            s1.scale(&CycloNum::from_rat(Rat::new(1.into(), 2.into()))),
            np("1/2*uv + 1/2*vu")
        );
        assert_eq!(p3.leading().unwrap().0, w("u^3"));
        assert_eq!(p3.homogeneous_degree(), Some(3));
        assert_eq!(p3.add(&s1).homogeneous_degree(), None);
    }

    #[test]
    fn dihedral_relations() {
        for n in [3usize, 4, 5, 8] {
            let g = dihedral_group(n);
            assert_eq!(g.len(), 2 * n);
            let rho = GroupElement::rotation(n, 1);
            let tau = GroupElement::swap();
            let mut pow = GroupElement::identity();
            for _ in 0..n {
                pow = pow.compose(&rho);
            }
            assert_eq!(pow, GroupElement::identity(), "rho^n = 1");
            assert_eq!(tau.compose(&tau), GroupElement::identity(), "tau^2 = 1");
            // tau rho tau = rho^-1
            assert_eq!(
                tau.compose(&rho).compose(&tau),
                GroupElement::rotation(n, n - 1)
            );
        }
    }

    #[test]
    fn traces_split_by_conjugacy() {
        for n in [3usize, 5, 6] {
            let g = dihedral_group(n);
            for (k, rot) in g[..n].iter().enumerate() {
                assert_eq!(rot.trace(), CycloNum::two_cos(n, k));
            }
            for refl in &g[n..] {
                assert!(refl.trace().is_zero());
            }
        }
    }

    #[test]
    fn action_on_words() {
        let rho5 = GroupElement::rotation(5, 1);
        // u^3v picks up zeta^(3-1)
        assert_eq!(
            act(&rho5, &np("u^3v")),
            NcPoly::from_term(w("u^3v"), cyclo(5, 2))
        );
        assert_eq!(act(&GroupElement::swap(), &np("u^2v")), np("v^2u"));
        // uv is fixed by every rotation
        let rho3 = GroupElement::rotation(3, 1);
        assert_eq!(act(&rho3, &np("uv")), np("uv"));
        // u^3 and v^3 are fixed by the order-3 rotation
        assert_eq!(act(&rho3, &np("u^3 + v^3")), np("u^3 + v^3"));
    }

    #[test]
    fn action_is_multiplicative_and_composes() {
        let g = GroupElement::rotation(5, 2);
        let h = GroupElement::swap().compose(&GroupElement::rotation(5, 1));
        let p = np("uv + 2*u^2");
        let q = np("vu - v");
        assert_eq!(act(&g, &p.mul(&q)), act(&g, &p).mul(&act(&g, &q)));
        assert_eq!(act(&g, &act(&h, &p)), act(&g.compose(&h), &p));
    }

    #[test]
    fn reynolds_projects_onto_invariants() {
        assert_eq!(reynolds(&np("uv"), 3), np("1/2*uv + 1/2*vu"));
        assert_eq!(reynolds(&np("u"), 3), NcPoly::zero());
        assert_eq!(reynolds(&np("u^3"), 3), np("1/2*u^3 + 1/2*v^3"));
        assert_eq!(reynolds(&np("u^2"), 3), NcPoly::zero());
        for p in [np("uv"), np("u^2v^2"), np("u^3v"), np("uvu")] {
            let r = reynolds(&p, 4);
            assert!(is_invariant(&r, 4));
            assert_eq!(reynolds(&r, 4), r, "idempotence");
        }
        // an invariant is a fixed point
        let inv = np("uv + vu");
        assert_eq!(reynolds(&inv, 3), inv);
    }

    #[test]
    fn counting_matches_enumeration() {
        assert_eq!(invariant_dimension_by_counting(3, 4), 3);
        assert_eq!(invariant_dimension_by_counting(3, 1), 0);
        assert_eq!(invariant_dimension_by_counting(4, 6), 16);
        assert_eq!(invariant_dimension_by_counting(5, 4), 3);
    }

    #[test]
    fn invariant_basis_structure() {
        let b32 = invariant_basis(3, 2);
        assert_eq!(b32.dim(), 1);
        assert_eq!(b32.rows()[0], np("uv + vu"));

        let b33 = invariant_basis(3, 3);
        assert_eq!(b33.dim(), 1);
        assert_eq!(b33.rows()[0], np("u^3 + v^3"));

        let b54 = invariant_basis(5, 4);
        assert_eq!(b54.dim(), 3);
        assert_eq!(
            b54.rows(),
            &[np("u^2v^2 + v^2u^2"), np("uvuv + vuvu"), np("uv^2u + vu^2v")]
        );

        // every basis vector is a genuine invariant
        for k in 1..=6 {
            for row in invariant_basis(4, k).rows() {
                assert!(is_invariant(row, 4));
            }
        }
    }

    #[test]
    fn three_constructions_agree_on_small_degrees() {
        for n in [3usize, 4, 5] {
            for k in 1..=6 {
                let count = invariant_dimension_by_counting(n, k);
                let basis = invariant_basis(n, k);
                let rey = reynolds_span(n, k);
                assert_eq!(count, basis.dim(), "n={n} k={k}");
                assert_eq!(basis, rey, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn degree_span_reduction() {
        let mut span = DegreeSpan::new();
        assert!(span.insert(np("uv + vu")));
        assert!(!span.insert(np("2*uv + 2*vu")));
        assert!(span.insert(np("uv - vu")));
        assert_eq!(span.dim(), 2);
        // RREF: pivots uv then vu, each eliminated from the other row
        assert_eq!(span.rows(), &[np("uv"), np("vu")]);
        assert!(span.contains(&np("3*uv + 5*vu")));
        assert!(!span.contains(&np("uu")));

        // span is input-order independent
        let a = DegreeSpan::from_vectors([np("uv + vu"), np("uv - vu"), np("uv")]);
        let b = DegreeSpan::from_vectors([np("vu"), np("uv")]);
        assert_eq!(a, b);
        assert!(a.contains_span(&b) && b.contains_span(&a));
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(terms in proptest::collection::vec(
            (0u64..64, 1u8..=6, -9i64..=9, 1i64..=9), 1..6)
        ) {
            let mut p = NcPoly::zero();
            for (bits, len, num, den) in terms {
                let word = Word { len, bits: bits & ((1 << len) - 1) };
                p.add_term(word, CycloNum::from_rat(Rat::new(num.into(), den.into())));
            }
            let back = parse_ncpoly(&p.to_string());
            prop_assert_eq!(back.unwrap(), p);
        }
    }
}
