//! Verification suites behind `ncinv verify`: each suite re-runs an
//! independent consistency check and reports per-check pass/fail rows.
//! Failures are reported, never swallowed; the caller turns any failed row
//! into a nonzero exit status.

use clap::ValueEnum;
use ncinv_core::cyclotomic::{euler_phi, CycloNum};
use ncinv_core::freealg::{invariant_basis, invariant_dimension_by_counting, reynolds_span};
use ncinv_core::gens::{fibonacci_check, free_generators};
use ncinv_core::hilbert::{generator_series, hilbert_closed_form, hilbert_series, hilbert_via_bc};
use ncinv_core::koryukin::verify_generation_theorem;
use ncinv_core::ratfunc::{lehmer_check, psi_min_poly, watkins_zeitlin_check};
use ncinv_core::Rat;
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    All,
    Hilbert,
    Dims,
    Psi,
    Salgebra,
    Gens,
}

#[derive(Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub pass: bool,
}

fn check(suite: &'static str, name: String, pass: bool) -> Check {
    Check { suite, name, pass }
}

fn hilbert_checks(ns: &[usize], out: &mut Vec<Check>) {
    for &n in ns {
        let h = hilbert_series(n);
        out.push(check(
            "hilbert",
            format!("three computations of the series agree (n = {n})"),
            h == hilbert_closed_form(n) && h == hilbert_via_bc(n),
        ));
        let rec = h.recurrence().expect("non-constant denominator for n >= 3");
        out.push(check(
            "hilbert",
            format!("recurrence regenerates the series (n = {n})"),
            rec.sequence(14) == h.series_coefficients(14),
        ));
    }
}

fn dims_checks(ns: &[usize], kmax: usize, out: &mut Vec<Check>) {
    for &n in ns {
        let series = hilbert_series(n).series_coefficients(kmax);
        let mut pass = true;
        for k in 1..=kmax {
            let count = invariant_dimension_by_counting(n, k);
            pass &= invariant_basis(n, k).dim() == count;
            pass &= series[k] == Rat::from_integer((count as i64).into());
            if k <= 8 {
                pass &= reynolds_span(n, k).dim() == count;
            }
        }
        out.push(check(
            "dims",
            format!("dimension oracles agree (n = {n}, degrees 1..={kmax})"),
            pass,
        ));
    }
}

fn psi_checks(cap: usize, out: &mut Vec<Check>) {
    let mut certified = true;
    for n in 1..=cap {
        let psi = psi_min_poly(n);
        certified &= psi.is_monic();
        certified &= psi.coeffs().iter().all(|c| c.is_integer());
        let expected_degree = if n >= 3 { euler_phi(n) / 2 } else { 1 };
        certified &= psi.degree() == Some(expected_degree);
        let root = CycloNum::two_cos(n, 1);
        let mut value = CycloNum::zero();
        for c in psi.coeffs().iter().rev() {
            value = &(&value * &root) + &CycloNum::from_rat(c.clone());
        }
        certified &= value.is_zero();
    }
    out.push(check(
        "psi",
        format!("minimal polynomials monic, integral, degree-correct, root-certified (n <= {cap})"),
        certified,
    ));
    out.push(check(
        "psi",
        format!("factor identity holds (n <= {cap})"),
        (1..=cap).all(lehmer_check),
    ));
    out.push(check(
        "psi",
        format!("product identities hold (n <= {cap})"),
        (1..=cap).all(|n| watkins_zeitlin_check(n).all_hold()),
    ));
}

fn salgebra_checks(pairs: &[(usize, usize)], out: &mut Vec<Check>) {
    for &(n, cap) in pairs {
        let report = verify_generation_theorem(n, cap);
        out.push(check(
            "salgebra",
            format!("closure equals the invariant space (n = {n}, degrees <= {cap})"),
            report.all_equal(),
        ));
        out.push(check(
            "salgebra",
            format!("inductive-step certificates replay (n = {n})"),
            report.all_certified(),
        ));
    }
}

fn gens_checks(ns: &[usize], dmax: usize, out: &mut Vec<Check>) {
    for &n in ns {
        let table = free_generators(n, dmax);
        let series = generator_series(n).series_coefficients(dmax);
        let pass = (1..=dmax).all(|k| {
            series[k] == Rat::from_integer((table.row(k).count as i64).into())
        });
        out.push(check(
            "gens",
            format!("free-generator counts match the generating function (n = {n}, degrees <= {dmax})"),
            pass,
        ));
        if n == 3 {
            out.push(check(
                "gens",
                "generator counts follow the Fibonacci pattern (degrees 2..=11)".to_string(),
                fibonacci_check(11).holds(),
            ));
        }
    }
}

/// Runs the selected suites. `n` narrows a suite to one order (or caps the
/// minimal-polynomial loops); `cap` overrides the default degree cap.
///
/// Returns an error for parameter combinations a suite cannot run with;
/// nothing is printed in that case.
pub fn run(which: Which, n: Option<usize>, cap: Option<usize>) -> Result<Vec<Check>, String> {
    let single = |default: std::ops::RangeInclusive<usize>| -> Result<Vec<usize>, String> {
        match n {
            Some(v) if v < 3 => Err("this suite requires --n >= 3".to_string()),
            Some(v) => Ok(vec![v]),
            None => Ok(default.collect()),
        }
    };
    let mut checks = Vec::new();
    if matches!(which, Which::All | Which::Hilbert) {
        hilbert_checks(&single(3..=12)?, &mut checks);
    }
    if matches!(which, Which::All | Which::Dims) {
        dims_checks(&single(3..=8)?, cap.unwrap_or(10), &mut checks);
    }
    if matches!(which, Which::All | Which::Psi) {
        psi_checks(n.unwrap_or(34), &mut checks);
    }
    if matches!(which, Which::All | Which::Salgebra) {
        let pairs: Vec<(usize, usize)> = match (n, cap) {
            (Some(v), _) if v < 3 => return Err("this suite requires --n >= 3".to_string()),
            (Some(v), Some(c)) => vec![(v, c)],
            (Some(v), None) => vec![(v, (v + 2).max(8))],
            (None, Some(c)) => vec![(3, c), (4, c), (5, c)],
            (None, None) => vec![(3, 8), (4, 8), (5, 10)],
        };
        for &(v, c) in &pairs {
            if c < v {
                return Err(format!(
                    "--max-degree must be at least n (closure suite needs degree {v} for n = {v})"
                ));
            }
        }
        salgebra_checks(&pairs, &mut checks);
    }
    if matches!(which, Which::All | Which::Gens) {
        let ns = match n {
            Some(v) if v < 3 => return Err("this suite requires --n >= 3".to_string()),
            Some(v) => vec![v],
            None => vec![3, 4, 5],
        };
        gens_checks(&ns, cap.unwrap_or(9), &mut checks);
    }
    Ok(checks)
}
