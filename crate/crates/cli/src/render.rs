//! Deterministic text rendering: one fixed typography for polynomials
//! (descending powers), rationals ("p/q", "/1" elided), word lists, and
//! CSV fields. Every emitter in the binary goes through these helpers so
//! identical invocations produce byte-identical output.

use ncinv_core::{QPoly, QRatFunc, Rat, RatFunc};
use num_traits::{One, Signed, Zero};

/// Renders an exact rational as `p` or `p/q`.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a polynomial in `t` with descending powers, e.g. `2t^2 + t - 1`.
pub fn poly_string(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        if !mag.is_one() || i == 0 {
            out.push_str(&rat_string(&mag));
        }
        match i {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&format!("t^{i}")),
        }
    }
    out
}

/// Renders a rational function as `(num)/(den)`.
pub fn frac_string(num: &QPoly, den: &QPoly) -> String {
    format!("({})/({})", poly_string(num), poly_string(den))
}

/// Display sign for the published-table convention: emitted rows carry the
/// unit scalar that the printed tables use (numerator and denominator both
/// negated for these orders), so the displayed fractions equal the published
/// values verbatim; outside the tabulated range the canonical form is shown.
pub fn display_sign(n: usize) -> i64 {
    match n {
        3 | 9 | 10 => -1,
        _ => 1,
    }
}

/// Applies a unit scalar to a canonical fraction for display.
///
/// # Panics
/// Panics if the scaled pair no longer represents the same function — the
/// presentation layer must never change the mathematics.
pub fn displayed_fraction(f: &QRatFunc, sign: i64) -> (QPoly, QPoly) {
    let s = Rat::from_integer(sign.into());
    let num = f.num().scale(&s);
    let den = f.den().scale(&s);
    assert_eq!(
        RatFunc::new(num.clone(), den.clone()),
        *f,
        "display sign must be a unit"
    );
    (num, den)
}

/// Ascending coefficient strings `["a_0", "a_1", ...]` for JSON payloads.
pub fn coeff_strings(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(rat_string).collect()
}

/// Joins rendered words with `", "`; the empty set renders as `-`.
pub fn word_list(words: &[String]) -> String {
    if words.is_empty() {
        "-".to_string()
    } else {
        words.join(", ")
    }
}

/// Quotes a CSV field when it contains a delimiter, quote, or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncinv_core::hilbert::hilbert_series;

    fn q(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    #[test]
    fn polynomial_typography() {
        assert_eq!(poly_string(&q(&[-1, 1, 2])), "2t^2 + t - 1");
        assert_eq!(poly_string(&q(&[0, 0, -1])), "-t^2");
        assert_eq!(poly_string(&q(&[1, 0, -3])), "-3t^2 + 1");
        assert_eq!(poly_string(&q(&[0])), "0");
        assert_eq!(poly_string(&q(&[5])), "5");
        assert_eq!(poly_string(&q(&[0, 1])), "t");
        assert_eq!(
            poly_string(&QPoly::from_coeffs(vec![Rat::new(1.into(), 2.into())])),
            "1/2"
        );
    }

    #[test]
    fn display_sign_is_a_unit() {
        for n in 3..=12 {
            let h = hilbert_series(n);
            let (num, den) = displayed_fraction(&h, display_sign(n));
            assert_eq!(RatFunc::new(num, den), h);
        }
    }

    #[test]
    fn published_sign_convention() {
        let h = hilbert_series(3);
        let (num, den) = displayed_fraction(&h, display_sign(3));
        assert_eq!(frac_string(&num, &den), "(t^2 + t - 1)/(2t^2 + t - 1)");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("uv"), "uv");
        assert_eq!(csv_field("u^2v^2, uv^2u"), "\"u^2v^2, uv^2u\"");
        assert_eq!(csv_field("a\"b"), "\"a\"\"b\"");
    }
}
